//! The six stress suites and their batch driver.
//!
//! Each suite maps an instance index to one record through a pure function
//! of `(generator, index, tol)`, so batches parallelize with rayon and the
//! merged output is independent of the worker count. Math-level failures
//! (root solver gave up, profile ill-formed) never abort a batch: they
//! become `NUMERICAL_FAILURE` records and are tallied like any other
//! outcome.

use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::generator::{Generator, GeneratorKind, GeneratorSpec};
use super::report::{
    ChainRecord, Counters, GhRecord, Histogram, IdentityRecord, LemmaARecord, Meta,
    ReportConfig, RunReport, ScanRecord, SuiteRecord, SweepRecord,
};
use super::HarnessError;
use crate::extremal::{self, exact};
use crate::geometry::{check_distance_bounds, distance_profile, RootConfiguration};
use crate::theorem::{
    chain_check, equal_value_points, grace_heawood_check, lambda_lower_bound, lemma_a_check,
    theorem_verdict, TheoremError, VerdictStatus,
};

/// Grid size handed to the extremal oracles by the sweep suite.
const SWEEP_GRID: usize = 4096;
/// Golden-section iterations for the sweep oracles.
const SWEEP_REFINE: usize = 96;

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    /// Exact rational certification of the quartic factorization and the
    /// closed-form stationarity root.
    Identities,
    /// The 171-cell `(a, r)` grid comparing closed forms against grid
    /// oracles (ignores the generator and count).
    ExtremalSweep,
    /// Grace–Heawood half-plane checks plus the distance bounds
    /// `2ρ₁ sin(π/n) ≤ r_k ≤ 1 + a` on random instances.
    Gh,
    /// The concrete chain inequality `best Re ≥ (a − r(r+2)/a)/2` on the
    /// same instances.
    Chain,
    /// Minimum-modulus lower bound on the circle `|z − a| = λ`.
    LemmaA,
    /// The full hypothesis-to-verdict pipeline.
    TheoremScan,
}

impl SuiteName {
    /// All suites, in CLI listing order.
    pub const ALL: [SuiteName; 6] = [
        SuiteName::Identities,
        SuiteName::ExtremalSweep,
        SuiteName::Gh,
        SuiteName::Chain,
        SuiteName::LemmaA,
        SuiteName::TheoremScan,
    ];

    /// The CLI spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Identities => "identities",
            SuiteName::ExtremalSweep => "extremal-sweep",
            SuiteName::Gh => "gh",
            SuiteName::Chain => "chain",
            SuiteName::LemmaA => "lemma-a",
            SuiteName::TheoremScan => "theorem-scan",
        }
    }
}

impl std::fmt::Display for SuiteName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SuiteName {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<SuiteName, HarnessError> {
        SuiteName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| {
                HarnessError::InvalidSpec(format!(
                    "unknown suite `{s}`; expected one of identities, extremal-sweep, gh, \
                     chain, lemma-a, theorem-scan"
                ))
            })
    }
}

/// How λ is chosen for suites that need one.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum LambdaPolicy {
    /// The same λ for every instance.
    Fixed(f64),
    /// Sample λ uniformly from the hypothesis window
    /// `[1 − (1 − |p(0)|)^{1/n}, sin(π/n)] ∩ (0, a)`; when the window is
    /// empty, fall back to `min(0.9a, sin(π/n))/2`, which keeps the two
    /// closed-form conditions satisfiable so the chain still gets exercised.
    TheoremWindow,
}

impl LambdaPolicy {
    /// Draw λ for one configuration from its instance RNG continuation.
    pub fn draw(self, cfg: &RootConfiguration, rng: &mut ChaCha8Rng) -> f64 {
        match self {
            LambdaPolicy::Fixed(lam) => lam,
            LambdaPolicy::TheoremWindow => {
                let n = cfg.n();
                let sin_bound = (std::f64::consts::PI / n as f64).sin();
                let lo = lambda_lower_bound(cfg.p0_magnitude(), n);
                let hi = sin_bound.min(cfg.a());
                if lo < hi {
                    lo + rng.gen::<f64>() * (hi - lo)
                } else {
                    0.5 * (0.9 * cfg.a()).min(sin_bound)
                }
            }
        }
    }
}

/// Everything a suite run depends on.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub generator: GeneratorSpec,
    /// Instances to draw (ignored by `extremal-sweep`, which always runs
    /// its fixed 171-cell grid).
    pub count: usize,
    pub lambda_policy: LambdaPolicy,
    /// Tolerance handed to root solves and margin checks.
    pub tol: f64,
    /// Worker threads; 0 runs in the caller's rayon pool.
    pub workers: usize,
}

impl SuiteConfig {
    /// A config with the CLI defaults: count 1000, theorem-window λ,
    /// tolerance 1e−9, caller's pool.
    pub fn new(suite: SuiteName, generator: GeneratorSpec) -> SuiteConfig {
        SuiteConfig {
            suite,
            generator,
            count: 1000,
            lambda_policy: LambdaPolicy::TheoremWindow,
            tol: 1e-9,
            workers: 0,
        }
    }
}

/// Run one suite to a [`RunReport`].
///
/// Configuration problems (bad spec, bad λ, bad tolerance) error out before
/// any instance runs; per-instance numerical trouble is recorded, not
/// raised. The report's counters always sum to the record count.
pub fn run_suite(cfg: &SuiteConfig) -> Result<RunReport, HarnessError> {
    if !(cfg.tol.is_finite() && cfg.tol > 0.0) {
        return Err(HarnessError::InvalidSpec(format!(
            "tolerance must be finite and positive, got {}",
            cfg.tol
        )));
    }
    if let LambdaPolicy::Fixed(lam) = cfg.lambda_policy {
        if !(lam.is_finite() && lam > 0.0) {
            return Err(HarnessError::InvalidSpec(format!(
                "fixed lambda must be finite and positive, got {lam}"
            )));
        }
    }
    let generator = Generator::new(cfg.generator.clone())?;
    if cfg.suite != SuiteName::ExtremalSweep
        && generator.spec().kind == GeneratorKind::Explicit
        && cfg.count > generator.spec().explicit.len()
    {
        return Err(HarnessError::InvalidSpec(format!(
            "count {} exceeds the {} explicit instances",
            cfg.count,
            generator.spec().explicit.len()
        )));
    }

    let start = std::time::Instant::now();
    let records: Vec<SuiteRecord> = match cfg.suite {
        SuiteName::ExtremalSweep => with_pool(cfg.workers, || {
            sweep_cells()
                .into_par_iter()
                .map(|(a, r)| sweep_record(a, r))
                .collect()
        })?,
        suite => {
            let gen = &generator;
            let tol = cfg.tol;
            let policy = cfg.lambda_policy;
            with_pool(cfg.workers, || {
                (0..cfg.count as u64)
                    .into_par_iter()
                    .map(|i| match suite {
                        SuiteName::Identities => identity_record(gen, i),
                        SuiteName::Gh => gh_record(gen, i, tol),
                        SuiteName::Chain => chain_record(gen, i, tol),
                        SuiteName::LemmaA => lemma_record(gen, i, tol, policy),
                        SuiteName::TheoremScan => scan_record(gen, i, tol, policy),
                        SuiteName::ExtremalSweep => unreachable!("handled above"),
                    })
                    .collect()
            })?
        }
    };
    let timing_ms = start.elapsed().as_millis();

    let mut counters = Counters::default();
    for r in &records {
        counters.add(r.status());
    }

    let (rho1_max, rho1_margin_histogram) = if cfg.suite == SuiteName::TheoremScan {
        let mut hist = Histogram::new(-1.0, 1.0, 20);
        let mut max: Option<f64> = None;
        for rec in &records {
            if let SuiteRecord::Scan(s) = rec {
                let margin = s.verdict.preconds.rho1_at_least_one.margin;
                hist.record(margin);
                if margin.is_finite() {
                    let rho1 = margin + 1.0;
                    max = Some(max.map_or(rho1, |m: f64| m.max(rho1)));
                }
            }
        }
        (max, Some(hist))
    } else {
        (None, None)
    };

    Ok(RunReport {
        config: ReportConfig {
            suite: cfg.suite.as_str().to_string(),
            generator: generator.spec().clone(),
            count: records.len() as u64,
            lambda_policy: cfg.lambda_policy,
            tol: cfg.tol,
        },
        counters,
        rho1_max,
        rho1_margin_histogram,
        records,
        meta: Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            workers: cfg.workers,
            timing_ms,
        },
    })
}

/// Run `f` in a dedicated pool of `workers` threads, or the caller's pool
/// when `workers` is 0.
fn with_pool<T: Send>(
    workers: usize,
    f: impl FnOnce() -> T + Send,
) -> Result<T, HarnessError> {
    if workers == 0 {
        Ok(f())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| HarnessError::InvalidSpec(format!("thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

// ---------------------------------------------------------------------------
// identities

fn identity_record(generator: &Generator, index: u64) -> SuiteRecord {
    let mut rng = generator.rng(index);
    // Unconstrained rationals: the factorization L − R = 4Q is a polynomial
    // identity, so Schwartz–Zippel sampling needs no domain restriction.
    let draw = |rng: &mut ChaCha8Rng| {
        let den = rng.gen_range(1..=1000i64);
        let num = rng.gen_range(-10 * den..=10 * den);
        exact::ratio(num, den)
    };
    let a = draw(&mut rng);
    let r = draw(&mut rng);
    let phi = draw(&mut rng);
    let residuals_zero = exact::quartic_identity_check(&a, &r, &phi).both_zero();

    // Every tenth record certifies the stationarity root on a valid
    // geometric pair 0 < r < a < 1.
    let phi0_ok = if index % 10 == 0 {
        let da = rng.gen_range(2..=1000i64);
        let na = rng.gen_range(1..da);
        let aa = exact::ratio(na, da);
        let dr = rng.gen_range(2..=1000i64);
        let nr = rng.gen_range(1..dr);
        let rr = &aa * &exact::ratio(nr, dr);
        Some(
            exact::second_factor_at_phi0(&aa, &rr).is_zero()
                && exact::phi0_unique_in_band(&aa, &rr),
        )
    } else {
        None
    };

    let status = if residuals_zero && phi0_ok.unwrap_or(true) {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    SuiteRecord::Identity(IdentityRecord {
        index,
        a: a.to_string(),
        r: r.to_string(),
        phi: phi.to_string(),
        residuals_zero,
        phi0_ok,
        status,
    })
}

// ---------------------------------------------------------------------------
// extremal-sweep

/// The 171 sweep cells: a ∈ {0.05, …, 0.95}, r ∈ {0.1a, …, 0.9a}.
fn sweep_cells() -> Vec<(f64, f64)> {
    let mut cells = Vec::with_capacity(171);
    for i in 1..=19 {
        let a = i as f64 * 0.05;
        for j in 1..=9 {
            cells.push((a, a * (0.1 * j as f64)));
        }
    }
    cells
}

fn sweep_record(a: f64, r: f64) -> SuiteRecord {
    let numfail = || {
        SuiteRecord::Sweep(SweepRecord {
            a,
            r,
            phi0: f64::NAN,
            x0: f64::NAN,
            g_max_closed: f64::NAN,
            g_max_oracle: f64::NAN,
            x_hat: f64::NAN,
            f_min_oracle: f64::NAN,
            f_argmin: f64::NAN,
            g1_at_one: f64::NAN,
            g1_at_ra: f64::NAN,
            bound: extremal::theorem_bound(a, r),
            status: VerdictStatus::NumericalFailure,
        })
    };
    let Ok(profile) = extremal::closed_form_extremum(a, r) else {
        return numfail();
    };
    let Ok((x_hat, g_max_oracle)) = extremal::grid_maximize_g(a, r, SWEEP_GRID, SWEEP_REFINE)
    else {
        return numfail();
    };
    let Ok((f_argmin, f_min_oracle)) = extremal::grid_minimize_f(a, r, SWEEP_GRID, SWEEP_REFINE)
    else {
        return numfail();
    };
    let (Ok(g1_at_one), Ok(g1_at_ra)) =
        (extremal::g1(a, r, 1.0), extremal::g1(a, r, r / a))
    else {
        return numfail();
    };

    let ok = (g_max_oracle - profile.g_max_value).abs() <= 1e-8
        && (x_hat - profile.x0).abs() <= 1e-6
        && f_min_oracle >= profile.f_lower - 1e-10
        && (f_min_oracle - profile.f_lower).abs() <= 1e-8
        && g1_at_one < 0.0
        && g1_at_ra > 0.0;
    SuiteRecord::Sweep(SweepRecord {
        a,
        r,
        phi0: profile.phi0,
        x0: profile.x0,
        g_max_closed: profile.g_max_value,
        g_max_oracle,
        x_hat,
        f_min_oracle,
        f_argmin,
        g1_at_one,
        g1_at_ra,
        bound: extremal::theorem_bound(a, r),
        status: if ok { VerdictStatus::Holds } else { VerdictStatus::Violated },
    })
}

// ---------------------------------------------------------------------------
// gh

fn gh_record(generator: &Generator, index: u64, tol: f64) -> SuiteRecord {
    let numfail = |a: f64, degree: usize| {
        SuiteRecord::Gh(GhRecord {
            index,
            a,
            degree,
            rho1: f64::NAN,
            eq12_ok: None,
            eq12_min_lower_margin: f64::NAN,
            eq12_min_upper_margin: f64::NAN,
            candidates: 0,
            reports: Vec::new(),
            status: VerdictStatus::NumericalFailure,
        })
    };
    let Ok((cfg, _rng)) = generator.instance(index) else {
        return numfail(f64::NAN, 0);
    };
    let p = cfg.polynomial();
    let degree = p.degree();

    let crit = if cfg.n() == 1 {
        Vec::new()
    } else {
        match p.derivative().find_roots(tol) {
            Ok(c) => c,
            Err(_) => return numfail(cfg.a(), degree),
        }
    };
    let Ok(profile) = distance_profile(&cfg, &crit) else {
        return numfail(cfg.a(), degree);
    };
    let bounds = check_distance_bounds(&profile, cfg.n(), cfg.a());
    let eq12_min_lower_margin = bounds
        .per_k
        .iter()
        .map(|c| c.lower_margin)
        .fold(f64::INFINITY, f64::min);
    let eq12_min_upper_margin = bounds
        .per_k
        .iter()
        .map(|c| c.upper_margin)
        .fold(f64::INFINITY, f64::min);

    let cands = match equal_value_points(&p, tol) {
        Ok(c) => c,
        Err(_) => return numfail(cfg.a(), degree),
    };
    let mut reports = Vec::with_capacity(cands.len());
    for z0 in &cands {
        match grace_heawood_check(&p, *z0, tol) {
            Ok(rep) => reports.push(rep),
            Err(_) => return numfail(cfg.a(), degree),
        }
    }

    let status = if !bounds.all_ok {
        VerdictStatus::Violated
    } else if reports.is_empty() {
        VerdictStatus::Vacuous
    } else if reports.iter().all(|r| r.ok) {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    SuiteRecord::Gh(GhRecord {
        index,
        a: cfg.a(),
        degree,
        rho1: profile.rho1(),
        eq12_ok: Some(bounds.all_ok),
        eq12_min_lower_margin,
        eq12_min_upper_margin,
        candidates: reports.len(),
        reports,
        status,
    })
}

// ---------------------------------------------------------------------------
// chain

fn chain_record(generator: &Generator, index: u64, tol: f64) -> SuiteRecord {
    let numfail = |a: f64, degree: usize| {
        SuiteRecord::Chain(ChainRecord {
            index,
            a,
            degree,
            reports: Vec::new(),
            side_failure: false,
            status: VerdictStatus::NumericalFailure,
        })
    };
    let Ok((cfg, _rng)) = generator.instance(index) else {
        return numfail(f64::NAN, 0);
    };
    let p = cfg.polynomial();
    let degree = p.degree();
    let cands = match equal_value_points(&p, tol) {
        Ok(c) => c,
        Err(_) => return numfail(cfg.a(), degree),
    };

    // chain_check requires Im z0 >= 0; conjugating the whole instance is a
    // symmetry of everything measured, so lower-half candidates are folded up.
    let conj_cfg = cfg.conjugated();
    let conj_p = p.conjugate_flip();
    let mut reports = Vec::with_capacity(cands.len());
    let mut side_failure = false;
    for z0 in &cands {
        let res = if z0.im < 0.0 {
            chain_check(&conj_p, &conj_cfg, z0.conj(), tol)
        } else {
            chain_check(&p, &cfg, *z0, tol)
        };
        match res {
            Ok(rep) => reports.push(rep),
            Err(TheoremError::NoSideCriticalPoint { .. }) => side_failure = true,
            Err(_) => return numfail(cfg.a(), degree),
        }
    }

    let status = if side_failure {
        VerdictStatus::Violated
    } else if reports.is_empty() {
        VerdictStatus::Vacuous
    } else if reports.iter().all(|r| r.ok) {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    SuiteRecord::Chain(ChainRecord {
        index,
        a: cfg.a(),
        degree,
        reports,
        side_failure,
        status,
    })
}

// ---------------------------------------------------------------------------
// lemma-a

fn lemma_record(
    generator: &Generator,
    index: u64,
    tol: f64,
    policy: LambdaPolicy,
) -> SuiteRecord {
    let numfail = |a: f64, degree: usize, lam: f64| {
        SuiteRecord::LemmaA(LemmaARecord {
            index,
            a,
            degree,
            lam,
            report: None,
            status: VerdictStatus::NumericalFailure,
        })
    };
    let Ok((cfg, mut rng)) = generator.instance(index) else {
        return numfail(f64::NAN, 0, f64::NAN);
    };
    let lam = policy.draw(&cfg, &mut rng);
    let p = cfg.polynomial();
    let degree = p.degree();

    let crit = if cfg.n() == 1 {
        Vec::new()
    } else {
        match p.derivative().find_roots(tol) {
            Ok(c) => c,
            Err(_) => return numfail(cfg.a(), degree, lam),
        }
    };
    let Ok(profile) = distance_profile(&cfg, &crit) else {
        return numfail(cfg.a(), degree, lam);
    };
    match lemma_a_check(&p, cfg.a(), lam, &profile) {
        Ok(report) => {
            let status = report.status;
            SuiteRecord::LemmaA(LemmaARecord {
                index,
                a: cfg.a(),
                degree,
                lam,
                report: Some(report),
                status,
            })
        }
        Err(_) => numfail(cfg.a(), degree, lam),
    }
}

// ---------------------------------------------------------------------------
// theorem-scan

fn scan_record(
    generator: &Generator,
    index: u64,
    tol: f64,
    policy: LambdaPolicy,
) -> SuiteRecord {
    let Ok((cfg, mut rng)) = generator.instance(index) else {
        // Post-validation this cannot happen; record it honestly if it does.
        let fallback = RootConfiguration::new(0.5, vec![Complex64::new(-1.0, 0.0)])
            .expect("static fallback configuration");
        let mut verdict = theorem_verdict(&fallback, 0.25, tol);
        verdict.status = VerdictStatus::NumericalFailure;
        return SuiteRecord::Scan(ScanRecord { index, verdict });
    };
    let lam = policy.draw(&cfg, &mut rng);
    let verdict = theorem_verdict(&cfg, lam, tol);
    SuiteRecord::Scan(ScanRecord { index, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generator::ExplicitInstance;
    use crate::harness::report::sweep_csv;

    fn quadratic_spec() -> GeneratorSpec {
        GeneratorSpec {
            kind: GeneratorKind::Explicit,
            explicit: vec![ExplicitInstance { a: 0.5, zeros: vec![[-1.0, 0.0]] }],
            ..GeneratorSpec::default()
        }
    }

    #[test]
    fn identities_all_hold() {
        let mut cfg = SuiteConfig::new(SuiteName::Identities, GeneratorSpec::default());
        cfg.count = 30;
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.counters.holds, 30);
        assert_eq!(report.counters.total(), 30);
        // Indices 0, 10, 20 carried the phi0 certificate.
        let scheduled = report
            .records
            .iter()
            .filter(|r| matches!(r, SuiteRecord::Identity(i) if i.phi0_ok.is_some()))
            .count();
        assert_eq!(scheduled, 3);
    }

    #[test]
    fn gh_chain_hand_quadratic() {
        // p = (z - 1/2)(z + 1): candidates of p - p(0) are {-1/2}; the only
        // critical point -1/4 sits exactly on the bisector, and both
        // distance bounds are met with equality (2*rho1*sin(pi/2) = 3/2 = r_1).
        let mut cfg = SuiteConfig::new(SuiteName::Gh, quadratic_spec());
        cfg.count = 1;
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.counters.holds, 1);
        let SuiteRecord::Gh(rec) = &report.records[0] else {
            panic!("wrong record shape")
        };
        assert_eq!(rec.eq12_ok, Some(true));
        assert_eq!(rec.eq12_min_lower_margin, 0.0);
        assert_eq!(rec.eq12_min_upper_margin, 0.0);
        assert_eq!(rec.candidates, 1);
        assert_eq!(rec.rho1, 0.75);

        let mut cfg = SuiteConfig::new(SuiteName::Chain, quadratic_spec());
        cfg.count = 1;
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.counters.holds, 1);
        let SuiteRecord::Chain(rec) = &report.records[0] else {
            panic!("wrong record shape")
        };
        assert_eq!(rec.reports.len(), 1);
        let chain = &rec.reports[0];
        assert!((chain.r - 1.0).abs() < 1e-12);
        assert!((chain.best_re - (-0.25)).abs() < 1e-12);
        assert!((chain.bound_r - (-2.75)).abs() < 1e-12);
    }

    #[test]
    fn lemma_suite_small_batch() {
        let mut cfg = SuiteConfig::new(SuiteName::LemmaA, GeneratorSpec::default());
        cfg.count = 8;
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.counters.total(), 8);
        assert_eq!(report.counters.numerical_failure, 0);
        for rec in &report.records {
            let SuiteRecord::LemmaA(r) = rec else { panic!("wrong record shape") };
            let rep = r.report.as_ref().expect("lemma report present");
            assert!(r.lam > 0.0 && r.lam < r.a);
            assert!(rep.min_mod.is_finite());
        }
    }

    #[test]
    fn scan_zero_count_is_empty() {
        let mut cfg = SuiteConfig::new(SuiteName::TheoremScan, GeneratorSpec::default());
        cfg.count = 0;
        let report = run_suite(&cfg).unwrap();
        assert!(report.records.is_empty());
        assert_eq!(report.counters, Counters::default());
        assert_eq!(report.config.count, 0);
        assert!(report.rho1_max.is_none());
        let hist = report.rho1_margin_histogram.as_ref().unwrap();
        assert_eq!(hist.count, 0);
    }

    #[test]
    fn scan_histogram_populated() {
        let mut cfg = SuiteConfig::new(SuiteName::TheoremScan, GeneratorSpec::default());
        cfg.count = 12;
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.counters.total(), 12);
        let hist = report.rho1_margin_histogram.as_ref().unwrap();
        assert_eq!(hist.count, 12);
        assert!(report.rho1_max.unwrap().is_finite());
    }

    #[test]
    fn sweep_ignores_count_and_emits_csv() {
        let mut cfg = SuiteConfig::new(SuiteName::ExtremalSweep, GeneratorSpec::default());
        cfg.count = 3; // ignored
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.records.len(), 171);
        assert_eq!(report.config.count, 171);
        assert_eq!(report.counters.holds, 171);
        let csv = sweep_csv(&report).unwrap();
        assert_eq!(csv.lines().count(), 172); // header + rows
        assert!(csv.starts_with("a,r,phi0,"));
    }

    #[test]
    fn reports_reproduce_across_runs_and_workers() {
        for suite in [SuiteName::Gh, SuiteName::TheoremScan] {
            let mut cfg = SuiteConfig::new(suite, GeneratorSpec::default());
            cfg.count = 6;
            let serial = run_suite(&cfg).unwrap();
            let again = run_suite(&cfg).unwrap();
            assert_eq!(serial.comparison_json(), again.comparison_json());
            cfg.workers = 2;
            let parallel = run_suite(&cfg).unwrap();
            assert_eq!(serial.comparison_json(), parallel.comparison_json());
        }
    }

    #[test]
    fn theorem_window_draws_inside_window() {
        // Degree-2 instance with tiny |p(0)|: window clearly nonempty.
        let cfg = RootConfiguration::new(0.9, vec![Complex64::new(0.05, 0.0)]).unwrap();
        let n = cfg.n();
        let lo = lambda_lower_bound(cfg.p0_magnitude(), n);
        let hi = (std::f64::consts::PI / n as f64).sin().min(cfg.a());
        assert!(lo < hi);
        let generator = Generator::new(GeneratorSpec::default()).unwrap();
        let mut rng = generator.rng(7);
        for _ in 0..32 {
            let lam = LambdaPolicy::TheoremWindow.draw(&cfg, &mut rng);
            assert!(lam >= lo && lam < hi, "lam = {lam} outside [{lo}, {hi})");
        }
    }

    #[test]
    fn fixed_lambda_validated() {
        let mut cfg = SuiteConfig::new(SuiteName::TheoremScan, GeneratorSpec::default());
        cfg.lambda_policy = LambdaPolicy::Fixed(-0.5);
        assert!(run_suite(&cfg).is_err());
        cfg.lambda_policy = LambdaPolicy::Fixed(f64::NAN);
        assert!(run_suite(&cfg).is_err());
    }

    #[test]
    fn explicit_count_capped() {
        let mut cfg = SuiteConfig::new(SuiteName::Gh, quadratic_spec());
        cfg.count = 5;
        assert!(run_suite(&cfg).is_err());
    }
}
