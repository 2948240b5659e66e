//! Batch experiment harness: seeded generators, stress suites, reports.
//!
//! The harness turns the per-instance checks from [`crate::theorem`],
//! [`crate::geometry`], and [`crate::extremal`] into Monte Carlo batches
//! with four-way counters and machine-readable reports. Three properties
//! hold by construction:
//!
//! * **Determinism** — every instance is a pure function of `(seed, index)`
//!   through a splitmix64-expanded ChaCha8 stream, so identical
//!   configurations reproduce byte-identical reports (wall-clock data lives
//!   in a `meta` field outside the comparison scope).
//! * **Order independence** — instances never share RNG state and merge by
//!   index, so the worker count changes nothing but elapsed time.
//! * **Honesty** — instances whose hypotheses fail are counted `VACUOUS`
//!   (with margins recorded), solver breakdowns are counted
//!   `NUMERICAL_FAILURE`, and neither is ever folded into a pass.
//!
//! ```
//! use sendovlab::harness::{
//!     run_suite, GeneratorSpec, SuiteConfig, SuiteName,
//! };
//!
//! let mut cfg = SuiteConfig::new(SuiteName::Gh, GeneratorSpec::default());
//! cfg.count = 25;
//! let report = run_suite(&cfg)?;
//! assert_eq!(report.counters.total(), 25);
//! assert_eq!(report.counters.violated, 0);
//! # Ok::<(), sendovlab::harness::HarnessError>(())
//! ```

mod generator;
mod report;
mod suites;

pub use generator::{generate, ExplicitInstance, Generator, GeneratorKind, GeneratorSpec};
pub use report::{
    emit_plot_data, sweep_csv, ChainRecord, Counters, GhRecord, Histogram, IdentityRecord,
    LemmaARecord, Meta, ReportConfig, RunReport, ScanRecord, SuiteRecord, SweepRecord,
};
pub use suites::{run_suite, LambdaPolicy, SuiteConfig, SuiteName};

use thiserror::Error;

/// Configuration and output-shaping failures. Math-level trouble inside a
/// batch never surfaces here — it is recorded per instance as
/// `NUMERICAL_FAILURE`.
#[derive(Debug, Error)]
pub enum HarnessError {
    /// A spec, count, tolerance, or λ that cannot describe a run.
    #[error("invalid configuration: {0}")]
    InvalidSpec(String),
    /// A plot series name this crate does not produce.
    #[error("unknown plot series `{0}`")]
    UnknownSeries(String),
    /// A known series with missing or malformed parameters.
    #[error("bad series parameters: {0}")]
    BadSeriesParams(String),
    /// A derived view was requested from a report with no usable records.
    #[error("report holds no records for the requested output")]
    EmptyReport,
    /// An explicit instance failed geometric validation.
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
}
