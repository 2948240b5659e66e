//! Report wire types and the derived views (CSV, plot series).
//!
//! The JSON report is the single source of truth; CSV and plot data are
//! recomputed from it. Wall-clock timing and worker count live in the
//! `meta` field, which [`RunReport::comparison_json`] strips — everything
//! else is a pure function of the configuration, so two runs with the same
//! flags match byte for byte.

use serde::Serialize;
use serde_json::Value;

use super::generator::GeneratorSpec;
use super::suites::LambdaPolicy;
use super::HarnessError;
use crate::extremal;
use crate::search;
use crate::theorem::{
    ChainReport, GraceHeawoodReport, LemmaAReport, TheoremVerdict, VerdictStatus,
};

/// Four-way outcome tally.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counters {
    /// Instances where the checked statement held.
    pub holds: u64,
    /// Instances where a hypothesis failed, so nothing was asserted.
    pub vacuous: u64,
    /// Instances where the statement was tested and failed.
    pub violated: u64,
    /// Instances the numerics could not decide (solver failures).
    pub numerical_failure: u64,
}

impl Counters {
    /// Sum of all four buckets; equals the record count for every suite.
    pub fn total(&self) -> u64 {
        self.holds + self.vacuous + self.violated + self.numerical_failure
    }

    pub(crate) fn add(&mut self, status: VerdictStatus) {
        match status {
            VerdictStatus::Holds => self.holds += 1,
            VerdictStatus::Vacuous => self.vacuous += 1,
            VerdictStatus::Violated => self.violated += 1,
            VerdictStatus::NumericalFailure => self.numerical_failure += 1,
        }
    }
}

/// Fixed-width histogram with explicit under/overflow buckets.
#[derive(Clone, Debug, Serialize)]
pub struct Histogram {
    /// Left edge of the first bin.
    pub lo: f64,
    /// Right edge of the last bin (exclusive; values at or above overflow).
    pub hi: f64,
    /// Bin contents, equal widths.
    pub bins: Vec<u64>,
    /// Samples below `lo`.
    pub underflow: u64,
    /// Samples at or above `hi`.
    pub overflow: u64,
    /// Total samples recorded (non-finite samples are dropped, except that
    /// signed infinities land in the flow buckets).
    pub count: u64,
}

impl Histogram {
    pub fn new(lo: f64, hi: f64, bins: usize) -> Histogram {
        assert!(bins >= 1 && lo < hi);
        Histogram { lo, hi, bins: vec![0; bins], underflow: 0, overflow: 0, count: 0 }
    }

    /// Record one sample. NaN is ignored; ±∞ count as under/overflow.
    pub fn record(&mut self, x: f64) {
        if x.is_nan() {
            return;
        }
        self.count += 1;
        if x < self.lo {
            self.underflow += 1;
        } else if x >= self.hi {
            self.overflow += 1;
        } else {
            let t = (x - self.lo) / (self.hi - self.lo) * self.bins.len() as f64;
            let idx = (t as usize).min(self.bins.len() - 1);
            self.bins[idx] += 1;
        }
    }

    /// Midpoint of bin `i`.
    pub fn center(&self, i: usize) -> f64 {
        let width = (self.hi - self.lo) / self.bins.len() as f64;
        self.lo + (i as f64 + 0.5) * width
    }
}

/// Echo of everything that determines a run's records.
#[derive(Clone, Debug, Serialize)]
pub struct ReportConfig {
    /// Suite name in CLI form (`gh`, `theorem-scan`, …).
    pub suite: String,
    /// The full generator spec, seed included.
    pub generator: GeneratorSpec,
    /// Number of records produced.
    pub count: u64,
    /// How λ was chosen per instance.
    pub lambda_policy: LambdaPolicy,
    /// Numerical tolerance handed to the per-instance checks.
    pub tol: f64,
}

/// Run facts deliberately **outside** the reproducibility comparison scope.
#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    /// Crate version that produced the report.
    pub version: String,
    /// Worker threads requested (0 = run in the calling thread's pool).
    pub workers: usize,
    /// Wall-clock duration of the suite body.
    pub timing_ms: u128,
}

/// One identities-suite evaluation at a random rational point. Rationals are
/// serialized as exact `numerator/denominator` strings.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityRecord {
    pub index: u64,
    /// Rational `a` for the residual check (unconstrained — the identity is
    /// polynomial, so it is tested on a superset of the geometric domain).
    pub a: String,
    pub r: String,
    pub phi: String,
    /// Both quartic residuals were exactly zero.
    pub residuals_zero: bool,
    /// Every tenth record also certifies the closed-form stationarity root:
    /// the second quartic factor vanishes at φ₀ and φ₀ is the only quartic
    /// root in the admissible band. `None` when not scheduled.
    pub phi0_ok: Option<bool>,
    pub status: VerdictStatus,
}

/// One cell of the extremal sweep grid.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SweepRecord {
    pub a: f64,
    pub r: f64,
    /// Closed-form stationarity value `(a² − r²)/(1 + r)`.
    pub phi0: f64,
    /// Closed-form maximizer of `G`.
    pub x0: f64,
    /// Closed-form maximum `(r + 2)/a`.
    pub g_max_closed: f64,
    /// Grid + golden-section maximum of `G`.
    pub g_max_oracle: f64,
    /// Where the oracle found it.
    pub x_hat: f64,
    /// Grid + golden-section minimum of `F` over `[−1, −r/a]`.
    pub f_min_oracle: f64,
    /// Where the `F` minimum was found.
    pub f_argmin: f64,
    /// `G₁` at the right endpoint (must be negative).
    pub g1_at_one: f64,
    /// `G₁` at the left endpoint (must be positive).
    pub g1_at_ra: f64,
    /// `(a − r(r + 2)/a)/2`, the bound this cell feeds.
    pub bound: f64,
    pub status: VerdictStatus,
}

/// One Grace–Heawood instance: every nonzero root of `p − p(0)` must have
/// critical points in both closed half-planes of its bisector, and every
/// zero distance must obey `2ρ₁ sin(π/n) ≤ r_k ≤ 1 + a`.
#[derive(Clone, Debug, Serialize)]
pub struct GhRecord {
    pub index: u64,
    pub a: f64,
    pub degree: usize,
    /// Distance from `a` to its nearest critical point.
    pub rho1: f64,
    /// Distance-bound outcome; `None` when the solver failed first.
    pub eq12_ok: Option<bool>,
    /// Worst `r_k − 2ρ₁ sin(π/n)` over the zeros.
    pub eq12_min_lower_margin: f64,
    /// Worst `(1 + a) − r_k` over the zeros.
    pub eq12_min_upper_margin: f64,
    /// Number of equal-value candidates examined.
    pub candidates: usize,
    pub reports: Vec<GraceHeawoodReport>,
    pub status: VerdictStatus,
}

/// One chain instance: for every equal-value candidate (conjugated into the
/// upper half-plane), the best `z₀`-side critical real part must reach
/// `(a − r(r + 2)/a)/2`.
#[derive(Clone, Debug, Serialize)]
pub struct ChainRecord {
    pub index: u64,
    pub a: f64,
    pub degree: usize,
    pub reports: Vec<ChainReport>,
    /// A candidate had no critical point on its `z₀` side at all — a
    /// Grace–Heawood failure, reported distinctly from a bound violation.
    pub side_failure: bool,
    pub status: VerdictStatus,
}

/// One minimum-modulus instance.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaARecord {
    pub index: u64,
    pub a: f64,
    pub degree: usize,
    pub lam: f64,
    /// `None` when the critical-point solve failed.
    pub report: Option<LemmaAReport>,
    pub status: VerdictStatus,
}

/// One full-pipeline verdict.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRecord {
    pub index: u64,
    pub verdict: TheoremVerdict,
}

/// A suite-shaped record; serializes as the inner record directly.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum SuiteRecord {
    Identity(IdentityRecord),
    Sweep(SweepRecord),
    Gh(GhRecord),
    Chain(ChainRecord),
    LemmaA(LemmaARecord),
    Scan(ScanRecord),
}

impl SuiteRecord {
    /// The status that feeds the counters.
    pub fn status(&self) -> VerdictStatus {
        match self {
            SuiteRecord::Identity(r) => r.status,
            SuiteRecord::Sweep(r) => r.status,
            SuiteRecord::Gh(r) => r.status,
            SuiteRecord::Chain(r) => r.status,
            SuiteRecord::LemmaA(r) => r.status,
            SuiteRecord::Scan(r) => r.verdict.status,
        }
    }
}

/// Everything one suite run produced.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub config: ReportConfig,
    pub counters: Counters,
    /// Largest `rho_1` seen (theorem-scan only): how close the batch came
    /// to the `rho_1 >= 1` hypothesis.
    pub rho1_max: Option<f64>,
    /// Histogram of `rho_1 - 1` margins (theorem-scan only).
    pub rho1_margin_histogram: Option<Histogram>,
    pub records: Vec<SuiteRecord>,
    pub meta: Meta,
}

impl RunReport {
    /// Compact JSON of the whole report, trailing newline included.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serialization cannot fail");
        s.push('\n');
        s
    }

    /// JSON restricted to the reproducibility comparison scope: the report
    /// with `meta` removed, keys sorted. Byte-identical across runs with
    /// the same flags, whatever the worker count.
    pub fn comparison_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serialization cannot fail");
        if let Value::Object(map) = &mut v {
            map.remove("meta");
        }
        v.to_string()
    }
}

/// CSV view of an extremal-sweep report: one row per grid cell.
pub fn sweep_csv(report: &RunReport) -> Result<String, HarnessError> {
    let mut out =
        String::from("a,r,phi0,x0,g_max_closed,g_max_oracle,x_hat,f_min_oracle,bound\n");
    let mut rows = 0usize;
    for rec in &report.records {
        if let SuiteRecord::Sweep(s) = rec {
            out.push_str(&format!(
                "{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e}\n",
                s.a,
                s.r,
                s.phi0,
                s.x0,
                s.g_max_closed,
                s.g_max_oracle,
                s.x_hat,
                s.f_min_oracle,
                s.bound
            ));
            rows += 1;
        }
    }
    if rows == 0 {
        return Err(HarnessError::EmptyReport);
    }
    Ok(out)
}

/// Render one plot series from a report as `x,y` text rows.
///
/// `what` is a series name followed by `key=value` parameters:
///
/// * `G-curve a=0.8 r=0.3` — 1024 samples of `G` on `[r/a, 1]`;
/// * `F-curve a=0.8 r=0.3` — 1024 samples of `F` on `[−1, −r/a]`;
/// * `bound-vs-lambda a=0.9` — the theorem bound at λ = 0, 0.001, …, 1;
/// * `rho1-hist` — bin centers and counts of the ρ₁ − 1 histogram
///   (theorem-scan reports);
/// * `min-mod-vs-lambda` — `(λ, min |p|)` pairs from lemma-a records,
///   sorted by λ.
///
/// The report must hold at least one record.
pub fn emit_plot_data(report: &RunReport, what: &str) -> Result<String, HarnessError> {
    if report.records.is_empty() {
        return Err(HarnessError::EmptyReport);
    }
    let mut tokens = what.split_whitespace();
    let name = tokens
        .next()
        .ok_or_else(|| HarnessError::UnknownSeries(String::new()))?;
    let mut params = std::collections::BTreeMap::new();
    for tok in tokens {
        let (k, v) = tok.split_once('=').ok_or_else(|| {
            HarnessError::BadSeriesParams(format!("expected key=value, got `{tok}`"))
        })?;
        let value: f64 = v.parse().map_err(|_| {
            HarnessError::BadSeriesParams(format!("`{tok}` is not numeric"))
        })?;
        params.insert(k.to_string(), value);
    }
    let need = |k: &str| {
        params.get(k).copied().ok_or_else(|| {
            HarnessError::BadSeriesParams(format!("series `{name}` needs `{k}=`"))
        })
    };
    let bad = |e: extremal::ExtremalError| HarnessError::BadSeriesParams(e.to_string());

    match name {
        "G-curve" => {
            let (a, r) = (need("a")?, need("r")?);
            let mut out = String::new();
            for x in search::uniform_mesh(r / a, 1.0, 1024) {
                let y = extremal::g(a, r, x).map_err(bad)?;
                out.push_str(&format!("{x:.14e},{y:.14e}\n"));
            }
            Ok(out)
        }
        "F-curve" => {
            let (a, r) = (need("a")?, need("r")?);
            let mut out = String::new();
            for x in search::uniform_mesh(-1.0, -r / a, 1024) {
                let y = extremal::f(a, r, x).map_err(bad)?;
                out.push_str(&format!("{x:.14e},{y:.14e}\n"));
            }
            Ok(out)
        }
        "bound-vs-lambda" => {
            let a = need("a")?;
            if !(a.is_finite() && 0.0 < a && a < 1.0) {
                return Err(HarnessError::BadSeriesParams(format!(
                    "a must lie in (0, 1), got {a}"
                )));
            }
            let mut out = String::new();
            for i in 0..=1000 {
                let lam = i as f64 / 1000.0;
                let y = extremal::theorem_bound(a, lam);
                out.push_str(&format!("{lam:.14e},{y:.14e}\n"));
            }
            Ok(out)
        }
        "rho1-hist" => {
            let hist = report.rho1_margin_histogram.as_ref().ok_or_else(|| {
                HarnessError::BadSeriesParams(
                    "report carries no rho1 histogram; run the theorem-scan suite".into(),
                )
            })?;
            let mut out = String::new();
            for (i, &count) in hist.bins.iter().enumerate() {
                out.push_str(&format!("{:.14e},{count}\n", hist.center(i)));
            }
            Ok(out)
        }
        "min-mod-vs-lambda" => {
            let mut pairs: Vec<(f64, f64)> = report
                .records
                .iter()
                .filter_map(|rec| match rec {
                    SuiteRecord::LemmaA(r) => {
                        r.report.as_ref().map(|rep| (rep.lam, rep.min_mod))
                    }
                    _ => None,
                })
                .collect();
            if pairs.is_empty() {
                return Err(HarnessError::BadSeriesParams(
                    "no lemma-a minima in this report; run the lemma-a suite".into(),
                ));
            }
            pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
            let mut out = String::new();
            for (lam, min_mod) in pairs {
                out.push_str(&format!("{lam:.14e},{min_mod:.14e}\n"));
            }
            Ok(out)
        }
        other => Err(HarnessError::UnknownSeries(other.to_string())),
    }
}
