use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fdo_eld::bench::{self, CellKey, ExperimentSpec, Variant};

#[derive(Parser)]
#[command(
    name = "fdo-eld",
    version,
    about = "FDO / enhanced FDO economic load dispatch experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full variant x demand x epochs x chunk matrix and write reports.
    Run(RunArgs),
    /// Solve a single chunk for one demand and epoch count.
    Solve(SolveArgs),
    /// Parse and lint a dataset file.
    Validate {
        #[arg(long)]
        dataset: PathBuf,
        /// Demands to check chunk capacity against.
        #[arg(long = "demand", default_values_t = [400.0, 700.0])]
        demands: Vec<f64>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    dataset: PathBuf,
    #[arg(long, default_value_t = 50)]
    pop: usize,
    /// Seed list, e.g. `1-20` or `3,5,8-10`.
    #[arg(long, default_value = "1-20", value_parser = parse_seeds)]
    seeds: SeedList,
    /// Switch to emission-capped dispatch with this limit (lb).
    #[arg(long = "e-limit")]
    e_limit: Option<f64>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long = "demand", default_values_t = [400.0, 700.0])]
    demands: Vec<f64>,
    #[arg(long = "epochs", default_values_t = [100, 200])]
    epochs: Vec<usize>,
    #[arg(long = "variant", default_values = ["standard", "enhanced"])]
    variants: Vec<Variant>,
    #[arg(long, default_value = "results")]
    out: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    common: Common,
    /// 1-based chunk index.
    #[arg(long, default_value_t = 1)]
    chunk: usize,
    #[arg(long, default_value_t = 400.0)]
    demand: f64,
    #[arg(long, default_value_t = 100)]
    epochs: usize,
    #[arg(long, default_value = "enhanced")]
    variant: Variant,
    /// Also write report files for this cell.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone)]
struct SeedList(Vec<u64>);

fn parse_seeds(s: &str) -> Result<SeedList, String> {
    let mut seeds = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (u64, u64) = (
                    a.parse().map_err(|e| format!("{part}: {e}"))?,
                    b.parse().map_err(|e| format!("{part}: {e}"))?,
                );
                if a > b {
                    return Err(format!("empty seed range {part}"));
                }
                seeds.extend(a..=b);
            }
            None => seeds.push(part.parse().map_err(|e| format!("{part}: {e}"))?),
        }
    }
    if seeds.is_empty() {
        return Err("no seeds given".into());
    }
    Ok(SeedList(seeds))
}

fn run(args: RunArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let spec = ExperimentSpec {
        dataset_path: args.common.dataset,
        demands: args.demands,
        epochs_list: args.epochs,
        population: args.common.pop,
        variants: args.variants,
        seeds: args.common.seeds.0,
        output_dir: args.out,
        e_limit: args.common.e_limit,
    };
    let table = bench::run_experiments(&spec)?;
    let files = bench::emit_reports(&table, &spec.output_dir)?;
    println!(
        "wrote {} files to {}",
        files.len(),
        spec.output_dir.display()
    );
    let failures: Vec<_> = table.failures().collect();
    for (key, err) in &failures {
        eprintln!(
            "FAILED {} demand={} epochs={} chunk={}: {err}",
            key.variant.label(),
            key.demand,
            key.epochs,
            key.chunk
        );
    }
    Ok(if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn solve(args: SolveArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let dataset = bench::load_dataset(&args.common.dataset)?;
    let key = CellKey {
        variant: args.variant,
        demand: args.demand,
        epochs: args.epochs,
        chunk: args.chunk,
    };
    let outcome = bench::solve_cell(
        &dataset,
        key,
        args.common.pop,
        &args.common.seeds.0,
        args.common.e_limit,
    );
    let ok = outcome.is_ok();
    let table = bench::ResultTable {
        cells: vec![bench::CellResult { key, outcome }],
    };
    match &table.cells[0].outcome {
        Ok(summary) => {
            let rep = summary.representative();
            println!("{}", serde_json::to_string_pretty(&rep.solution)?);
            println!(
                "representative seed {} best fitness {} (median over {} seeds {})",
                rep.seed,
                rep.run.best_fitness,
                summary.runs.len(),
                summary.median_best_fitness
            );
        }
        Err(e) => eprintln!("FAILED: {e}"),
    }
    if let Some(out) = args.out {
        bench::emit_reports(&table, out)?;
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn validate(dataset: PathBuf, demands: Vec<f64>) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let ds = bench::load_dataset(&dataset)?;
    println!(
        "{}: {} units, {} chunks, {}x{} loss matrix",
        dataset.display(),
        ds.units.len(),
        ds.chunks.len(),
        ds.loss.dim(),
        ds.loss.dim()
    );
    let mut ok = true;
    for (i, range) in ds.chunks.iter().enumerate() {
        let capacity: f64 = ds.chunk_units(i).iter().map(|u| u.p_max).sum();
        println!(
            "chunk {} (units {}-{}): capacity {capacity} MW",
            i + 1,
            range.start + 1,
            range.end
        );
        for &d in &demands {
            if capacity < d {
                ok = false;
                println!("  demand {d} MW exceeds capacity");
            }
        }
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::Solve(args) => solve(args),
        Command::Validate { dataset, demands } => validate(dataset, demands),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
