use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Direction;

/// The fitness ratio's denominator was exactly zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("fitness weight denominator is zero")]
pub struct DegenerateDivide;

/// Fitness weight `|best / current| - wf` (minimize) or `|current / best| - wf`
/// (maximize).
///
/// The result is not clamped; [`compute_pace`] does that before dispatching.
pub fn fitness_weight(
    best_fitness: f64,
    current_fitness: f64,
    wf_effective: f64,
    direction: Direction,
) -> Result<f64, DegenerateDivide> {
    let (num, den) = match direction {
        Direction::Minimize => (best_fitness, current_fitness),
        Direction::Maximize => (current_fitness, best_fitness),
    };
    if den == 0.0 {
        return Err(DegenerateDivide);
    }
    Ok((num / den).abs() - wf_effective)
}

/// Which movement rule produced a pace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PaceRule {
    /// `pace = x * r`, `r` a clamped Levy vector.
    RandomWalk,
    /// `pace = -(x - x*) * fw`, drawn sign negative.
    TowardBest,
    /// `pace = (x - x*) * fw`, drawn sign non-negative.
    AwayFromBest,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Pace {
    pub values: Vec<f64>,
    pub rule: PaceRule,
}

/// Random-walk pace, component-wise `x * r`.
pub fn pace_from_walk(position: &[f64], r: &[f64]) -> Vec<f64> {
    position.iter().zip(r).map(|(x, r)| x * r).collect()
}

/// Weighted pace relative to the global best; `r` only selects the sign.
pub fn pace_from_weight(position: &[f64], best: &[f64], fw: f64, r: f64) -> Pace {
    let (sign, rule) = if r < 0.0 {
        (-1.0, PaceRule::TowardBest)
    } else {
        (1.0, PaceRule::AwayFromBest)
    };
    let values = position
        .iter()
        .zip(best)
        .map(|(x, b)| (x - b) * fw * sign)
        .collect();
    Pace { values, rule }
}

/// Draws the pace for one agent.
///
/// `fw` is `None` when [`fitness_weight`] reported a zero denominator. Any
/// other weight is clamped into `[0, 1]`; the end points select the random
/// walk, interior values the signed weighted move.
pub fn compute_pace<R: Rng + ?Sized>(
    position: &[f64],
    best: &[f64],
    fw: Option<f64>,
    levy: &LevyFlight,
    rng: &mut R,
) -> Pace {
    match fw.filter(|w| !w.is_nan()).map(|w| w.clamp(0.0, 1.0)) {
        Some(w) if w > 0.0 && w < 1.0 => {
            let r = rng.random_range(-1.0..=1.0);
            pace_from_weight(position, best, w, r)
        }
        _ => {
            let r = levy.step(rng, position.len());
            Pace {
                values: pace_from_walk(position, &r),
                rule: PaceRule::RandomWalk,
            }
        }
    }
}

/// Mantegna's construction of a symmetric Levy-stable step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevyFlight {
    beta: f64,
    sigma_u: f64,
}

impl LevyFlight {
    /// Returns `None` unless `beta` lies in `(1, 2]`.
    pub fn new(beta: f64) -> Option<Self> {
        if !(beta > 1.0 && beta <= 2.0) {
            return None;
        }
        let num = libm::tgamma(1.0 + beta) * (PI * beta / 2.0).sin();
        let den = libm::tgamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
        Some(Self {
            beta,
            sigma_u: (num / den).powf(1.0 / beta),
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// One unclamped step `u / |v|^(1/beta)`, `u ~ N(0, sigma_u^2)`, `v ~ N(0, 1)`.
    pub fn sample_raw<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u: f64 = StandardNormal.sample(rng);
        let v: f64 = StandardNormal.sample(rng);
        let step = u * self.sigma_u / v.abs().powf(1.0 / self.beta);
        if step.is_nan() {
            0.0
        } else {
            step
        }
    }

    /// `dim` steps, each clamped into `[-1, 1]`.
    pub fn step<R: Rng + ?Sized>(&self, rng: &mut R, dim: usize) -> Vec<f64> {
        (0..dim)
            .map(|_| self.sample_raw(rng).clamp(-1.0, 1.0))
            .collect()
    }
}

/// Convenience wrapper around [`LevyFlight::step`].
///
/// # Panics
/// When `beta` is outside `(1, 2]`.
pub fn levy_step<R: Rng + ?Sized>(rng: &mut R, beta: f64, dim: usize) -> Vec<f64> {
    LevyFlight::new(beta)
        .expect("levy beta must lie in (1, 2]")
        .step(rng, dim)
}
