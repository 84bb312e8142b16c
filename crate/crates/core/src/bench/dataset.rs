//! Text dataset format.
//!
//! ```text
//! # comment lines start with '#'
//! [units]
//! <id> <p_min> <p_max> <a> <b> <c> [<ea> <eb> <ec>]
//! ...
//! [loss]
//! scale <factor>          # optional, multiplies every matrix entry
//! <row 1 of the n x n B matrix>
//! ...
//! b0 <n values>           # optional, defaults to zeros
//! b00 <value>             # optional, defaults to zero
//! [chunks]
//! <first id>-<last id>    # inclusive, 1-based; length must equal n
//! ```
//!
//! Unit ids run 1, 2, 3, ... in file order. A missing emission triple
//! defaults to the fuel triple. Every chunk is scored with the same loss
//! matrix.

use std::fmt::Write as _;
use std::ops::Range;
use std::path::Path;

use thiserror::Error;

use crate::eld::{GeneratorUnit, LossMatrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DatasetError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: unit {unit}: {reason}")]
    Validation {
        line: usize,
        unit: usize,
        reason: String,
    },
    #[error("{path}: {reason}")]
    Io { path: String, reason: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub units: Vec<GeneratorUnit>,
    pub loss: LossMatrix,
    /// Zero-based unit index ranges.
    pub chunks: Vec<Range<usize>>,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    Units,
    Loss,
    Chunks,
}

fn numbers(fields: &[&str], line: usize) -> Result<Vec<f64>, DatasetError> {
    fields
        .iter()
        .map(|f| {
            f.parse::<f64>().map_err(|_| DatasetError::Parse {
                line,
                reason: format!("`{f}` is not a number"),
            })
        })
        .collect()
}

pub fn load_dataset(path: impl AsRef<Path>) -> Result<Dataset, DatasetError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| DatasetError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    Dataset::parse(&text)
}

impl Dataset {
    pub fn parse(text: &str) -> Result<Self, DatasetError> {
        let mut section = Section::None;
        let mut units = Vec::new();
        let mut scale = 1.0;
        let mut rows: Vec<Vec<f64>> = Vec::new();
        let mut b0 = None;
        let mut b00 = 0.0;
        let mut loss_line = 0;
        let mut chunks = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let parse_err = |reason: String| DatasetError::Parse { line, reason };
            match content {
                "[units]" => section = Section::Units,
                "[loss]" => {
                    section = Section::Loss;
                    loss_line = line;
                }
                "[chunks]" => section = Section::Chunks,
                _ if content.starts_with('[') => {
                    return Err(parse_err(format!("unknown section {content}")))
                }
                _ => {
                    let fields: Vec<&str> = content.split_whitespace().collect();
                    match section {
                        Section::None => {
                            return Err(parse_err("data before the first section".into()))
                        }
                        Section::Units => {
                            if fields.len() != 6 && fields.len() != 9 {
                                return Err(parse_err(format!(
                                    "unit rows have 6 or 9 columns, found {}",
                                    fields.len()
                                )));
                            }
                            let id: usize = fields[0].parse().map_err(|_| {
                                parse_err(format!("unit id `{}` is not an integer", fields[0]))
                            })?;
                            if id != units.len() + 1 {
                                return Err(parse_err(format!(
                                    "unit id {id}, expected {}",
                                    units.len() + 1
                                )));
                            }
                            let v = numbers(&fields[1..], line)?;
                            let unit = if v.len() == 8 {
                                GeneratorUnit {
                                    p_min: v[0],
                                    p_max: v[1],
                                    a: v[2],
                                    b: v[3],
                                    c: v[4],
                                    ea: v[5],
                                    eb: v[6],
                                    ec: v[7],
                                }
                            } else {
                                GeneratorUnit::with_fuel_as_emission(v[0], v[1], v[2], v[3], v[4])
                            };
                            unit.validate(id).map_err(|e| DatasetError::Validation {
                                line,
                                unit: id,
                                reason: match e {
                                    crate::eld::EldError::InvalidUnit { reason, .. } => reason,
                                    other => other.to_string(),
                                },
                            })?;
                            units.push(unit);
                        }
                        Section::Loss => match fields[0] {
                            "scale" => {
                                let v = numbers(&fields[1..], line)?;
                                if v.len() != 1 || !rows.is_empty() {
                                    return Err(parse_err(
                                        "`scale <factor>` must precede the matrix rows".into(),
                                    ));
                                }
                                scale = v[0];
                            }
                            "b0" => b0 = Some(numbers(&fields[1..], line)?),
                            "b00" => {
                                let v = numbers(&fields[1..], line)?;
                                if v.len() != 1 {
                                    return Err(parse_err("`b00` takes one value".into()));
                                }
                                b00 = v[0];
                            }
                            _ => rows.push(
                                numbers(&fields, line)?
                                    .into_iter()
                                    .map(|x| x * scale)
                                    .collect(),
                            ),
                        },
                        Section::Chunks => {
                            let (first, last) = content
                                .split_once('-')
                                .and_then(|(a, b)| {
                                    Some((
                                        a.trim().parse::<usize>().ok()?,
                                        b.trim().parse::<usize>().ok()?,
                                    ))
                                })
                                .ok_or_else(|| {
                                    parse_err(format!("chunk `{content}` is not `first-last`"))
                                })?;
                            if first == 0 || first > last || last > units.len() {
                                return Err(parse_err(format!(
                                    "chunk {first}-{last} outside units 1-{}",
                                    units.len()
                                )));
                            }
                            chunks.push((first - 1..last, line));
                        }
                    }
                }
            }
        }

        if units.is_empty() {
            return Err(DatasetError::Parse {
                line: 0,
                reason: "no [units] rows".into(),
            });
        }
        let dim = rows.len();
        let b0 = b0.unwrap_or_else(|| vec![0.0; dim]);
        let loss = LossMatrix::new(rows, b0, b00).map_err(|e| DatasetError::Parse {
            line: loss_line,
            reason: e.to_string(),
        })?;

        let mut covered = vec![false; units.len()];
        for (range, line) in &chunks {
            if range.len() != loss.dim() {
                return Err(DatasetError::Parse {
                    line: *line,
                    reason: format!(
                        "chunk has {} units but the loss matrix is {}x{}",
                        range.len(),
                        loss.dim(),
                        loss.dim()
                    ),
                });
            }
            for i in range.clone() {
                if std::mem::replace(&mut covered[i], true) {
                    return Err(DatasetError::Parse {
                        line: *line,
                        reason: format!("unit {} is in two chunks", i + 1),
                    });
                }
            }
        }
        if chunks.is_empty() {
            return Err(DatasetError::Parse {
                line: 0,
                reason: "no [chunks] rows".into(),
            });
        }
        Ok(Self {
            units,
            loss,
            chunks: chunks.into_iter().map(|(r, _)| r).collect(),
        })
    }

    pub fn chunk_units(&self, chunk: usize) -> &[GeneratorUnit] {
        &self.units[self.chunks[chunk].clone()]
    }

    /// Serializes in the same text format; `parse(to_text())` reproduces `self`.
    pub fn to_text(&self) -> String {
        let mut out = String::from("# fdo-eld dataset\n[units]\n");
        for (i, u) in self.units.iter().enumerate() {
            let _ = writeln!(
                out,
                "{} {} {} {} {} {} {} {} {}",
                i + 1,
                u.p_min,
                u.p_max,
                u.a,
                u.b,
                u.c,
                u.ea,
                u.eb,
                u.ec
            );
        }
        out.push_str("[loss]\nscale 1\n");
        for row in self.loss.rows() {
            let row: Vec<String> = row.iter().map(f64::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        let b0: Vec<String> = self.loss.b0().iter().map(f64::to_string).collect();
        let _ = writeln!(out, "b0 {}", b0.join(" "));
        let _ = writeln!(out, "b00 {}", self.loss.b00());
        out.push_str("[chunks]\n");
        for c in &self.chunks {
            let _ = writeln!(out, "{}-{}", c.start + 1, c.end);
        }
        out
    }
}
