//! Command-line driver for the stress suites.
//!
//! Exit codes: 0 — clean run (holds/vacuous only); 1 — at least one
//! `VIOLATED` record; 2 — usage or configuration error; 3 — at least one
//! `NUMERICAL_FAILURE` record (and no violations).

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Parser;
use sendovlab::harness::{
    emit_plot_data, run_suite, sweep_csv, ExplicitInstance, GeneratorKind, GeneratorSpec,
    HarnessError, LambdaPolicy, RunReport, SuiteConfig, SuiteName,
};

#[derive(Parser, Debug)]
#[command(
    name = "sendovlab",
    version,
    about = "Stress suites for a critical-point real-part bound on unit-disk polynomials",
    after_help = "Exit codes: 0 clean, 1 violation found, 2 usage/config error, \
                  3 numerical failure.\n\
                  Plot series: 'G-curve a= r=', 'F-curve a= r=', 'bound-vs-lambda a=', \
                  'rho1-hist', 'min-mod-vs-lambda'."
)]
struct Cli {
    /// Suite to run: identities, extremal-sweep, gh, chain, lemma-a,
    /// theorem-scan.
    suite: String,

    /// Instances to run (default 1000; the explicit generator defaults to
    /// its file length; extremal-sweep always runs its fixed 171-cell grid).
    #[arg(long)]
    count: Option<usize>,

    /// Master seed for the deterministic instance streams.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Smallest degree to draw (inclusive).
    #[arg(long, default_value_t = 3)]
    deg_min: usize,

    /// Largest degree to draw (inclusive).
    #[arg(long, default_value_t = 15)]
    deg_max: usize,

    /// Pin the distinguished zero instead of drawing it.
    #[arg(long, conflicts_with = "a_range")]
    a: Option<f64>,

    /// Range to draw the distinguished zero from (default 0.05 0.95).
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    a_range: Option<Vec<f64>>,

    /// Use one fixed lambda for every instance.
    #[arg(long, conflicts_with = "lambda_policy")]
    lambda: Option<f64>,

    /// Lambda policy; only `theorem-window` (the default) is defined.
    #[arg(long, value_parser = ["theorem-window"])]
    lambda_policy: Option<String>,

    /// Instance family to draw from.
    #[arg(long, default_value = "uniform-disk",
          value_parser = ["uniform-disk", "near-extremal", "explicit"])]
    generator: String,

    /// Radial/angular jitter for the near-extremal generator.
    #[arg(long, default_value_t = 0.02)]
    perturbation: f64,

    /// Instance file for --generator explicit: one JSON object
    /// {"a": …, "zeros": [[re, im], …]} or an array of them.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Also write the CSV view next to --out (extremal-sweep only).
    #[arg(long)]
    csv: bool,

    /// Also write a plot series next to --out, e.g. "G-curve a=0.8 r=0.3".
    #[arg(long, value_name = "SERIES")]
    plot: Option<String>,

    /// Numerical tolerance for root solves and margin checks.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,

    /// Worker threads (0 = the default rayon pool).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("sendovlab: {err}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32, HarnessError> {
    let suite = SuiteName::from_str(&cli.suite)?;

    let kind = match cli.generator.as_str() {
        "uniform-disk" => GeneratorKind::UniformDisk,
        "near-extremal" => GeneratorKind::NearExtremal,
        "explicit" => GeneratorKind::Explicit,
        other => {
            return Err(HarnessError::InvalidSpec(format!(
                "unknown generator `{other}`"
            )))
        }
    };
    let explicit = match (kind, &cli.input) {
        (GeneratorKind::Explicit, Some(path)) => read_instances(path)?,
        (GeneratorKind::Explicit, None) => {
            return Err(HarnessError::InvalidSpec(
                "--generator explicit needs --input FILE".into(),
            ))
        }
        (_, Some(_)) => {
            return Err(HarnessError::InvalidSpec(
                "--input only applies to --generator explicit".into(),
            ))
        }
        (_, None) => Vec::new(),
    };

    let (a_min, a_max) = match &cli.a_range {
        Some(range) => (range[0], range[1]),
        None => (0.05, 0.95),
    };
    let spec = GeneratorSpec {
        kind,
        deg_min: cli.deg_min,
        deg_max: cli.deg_max,
        a_min,
        a_max,
        a_fixed: cli.a,
        perturbation: cli.perturbation,
        seed: cli.seed,
        explicit,
    };

    let lambda_policy = match cli.lambda {
        Some(lam) => LambdaPolicy::Fixed(lam),
        None => LambdaPolicy::TheoremWindow,
    };
    let count = cli
        .count
        .unwrap_or_else(|| if kind == GeneratorKind::Explicit { spec.explicit.len() } else { 1000 });

    if cli.csv && suite != SuiteName::ExtremalSweep {
        return Err(HarnessError::InvalidSpec(
            "--csv only applies to the extremal-sweep suite".into(),
        ));
    }
    if (cli.csv || cli.plot.is_some()) && cli.out.is_none() {
        return Err(HarnessError::InvalidSpec(
            "--csv and --plot need --out to name their files".into(),
        ));
    }

    let cfg = SuiteConfig {
        suite,
        generator: spec,
        count,
        lambda_policy,
        tol: cli.tol,
        workers: cli.workers,
    };
    let report = run_suite(&cfg)?;

    emit(&cli, suite, &report)?;

    let c = &report.counters;
    eprintln!(
        "{suite}: {} records — holds {}, vacuous {}, violated {}, numerical-failure {} ({} ms)",
        c.total(),
        c.holds,
        c.vacuous,
        c.violated,
        c.numerical_failure,
        report.meta.timing_ms
    );
    Ok(if c.violated > 0 {
        1
    } else if c.numerical_failure > 0 {
        3
    } else {
        0
    })
}

fn emit(cli: &Cli, suite: SuiteName, report: &RunReport) -> Result<(), HarnessError> {
    match &cli.out {
        Some(path) => {
            write_file(path, &report.to_json())?;
            if cli.csv && suite == SuiteName::ExtremalSweep {
                write_file(&path.with_extension("csv"), &sweep_csv(report)?)?;
            }
            if let Some(series) = &cli.plot {
                write_file(&path.with_extension("plot"), &emit_plot_data(report, series)?)?;
            }
        }
        None => print!("{}", report.to_json()),
    }
    Ok(())
}

fn read_instances(path: &Path) -> Result<Vec<ExplicitInstance>, HarnessError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| HarnessError::InvalidSpec(format!("reading {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| HarnessError::InvalidSpec(format!("parsing {}: {e}", path.display())))?;
    let instances = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|one| vec![one])
    };
    instances
        .map_err(|e| HarnessError::InvalidSpec(format!("parsing {}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), HarnessError> {
    std::fs::write(path, content)
        .map_err(|e| HarnessError::InvalidSpec(format!("writing {}: {e}", path.display())))
}
