//! End-to-end checks of the critical-point bound on concrete instances.
//!
//! The statement under test: if `p` has all its zeros in the closed unit
//! disk, one of them a real `a` in (0,1), and
//!
//! ```text
//! 1 - (1 - |p(0)|)^(1/n)  <=  lam  <=  sin(pi/n),    lam < a,    rho_1 >= 1,
//! ```
//!
//! then some critical point `zeta_0` of `p` satisfies
//! `Re zeta_0 >= (a - lam(lam + 2)/a) / 2`.
//!
//! The proof decomposes into steps that are individually checkable on a
//! concrete instance, and this module exposes each one:
//!
//! * [`check_preconditions`] — the four hypotheses with signed margins;
//! * [`lemma_a_check`] — the minimum-modulus lower bound
//!   `|p| > 1 - (1 - lam)^n` on the circle `|z - a| = lam`;
//! * [`solve_z0`] — the equal-value point: a nonzero root of `p - p(0)`
//!   inside that circle;
//! * [`grace_heawood_check`] — each closed half-plane of the perpendicular
//!   bisector of `[0, z0]` contains a critical point;
//! * [`chain_check`] — the concrete chain: some critical point on the `z0`
//!   side has `Re >= (a - r(r + 2)/a) / 2` with `r = |z0 - a| <= lam`;
//! * [`theorem_verdict`] — the whole pipeline with an honest four-way
//!   status (`HOLDS` / `VACUOUS` / `VIOLATED` / `NUMERICAL_FAILURE`).
//!
//! The hypothesis `rho_1 >= 1` is the binding one: random configurations
//! essentially never satisfy it (it forces the nearest critical point out to
//! unit distance from `a`). The verdict therefore reports `VACUOUS` honestly
//! rather than manufacturing passes, and the margins it records feed the
//! `rho_1` histograms upstream.

use num_complex::Complex64;
use serde::Serialize;

use crate::extremal::theorem_bound;
use crate::geometry::{
    distance_profile, half_plane_side, BisectorGeometry, CriticalProfile, GeometryError,
    RootConfiguration,
};
use crate::polynomial::{PolyError, Polynomial};

/// Angular samples for the minimum-modulus scan in [`lemma_a_check`].
const CIRCLE_SAMPLES: usize = 4096;
/// Golden-section refinement iterations after the angular scan.
const CIRCLE_REFINE_ITERS: usize = 60;

/// Errors from the verification pipeline.
#[derive(Debug, thiserror::Error)]
pub enum TheoremError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    /// A radius or tolerance parameter out of domain.
    #[error("lambda must be nonnegative and finite, got {0}")]
    InvalidLambda(f64),
    /// No nonzero root of `p - p(0)` lies in the disk `|z - a| <= lam`.
    #[error("no nonzero root of p - p(0) lies in |z - a| <= {lam} + {slack:e}")]
    Z0NotFound { lam: f64, slack: f64 },
    /// The supplied `z0` does not satisfy `p(z0) = p(0)` within tolerance.
    #[error("|p(z0) - p(0)| = {residual:e} exceeds allowed {allowed:e}: not an equal-value point")]
    EqualValueMismatch { residual: f64, allowed: f64 },
    /// Degree < 2 leaves no critical points to test.
    #[error("degree {0} < 2: no critical points to test")]
    DegreeTooSmall(usize),
    /// `chain_check` requires the upper-half-plane normalization.
    #[error("z0 must lie in the closed upper half-plane (Im z0 = {0}); conjugate the instance first")]
    NegativeImZ0(f64),
    /// No critical point lies in the closed `z0`-side half-plane: a failure
    /// of the half-plane (Grace–Heawood) step, kept distinct from a mere
    /// bound violation.
    #[error("no critical point in the closed z0-side half-plane, z0 = {z0:?}")]
    NoSideCriticalPoint { z0: [f64; 2] },
}

/// One hypothesis check: a flag plus the signed distance to the boundary of
/// the condition (positive = comfortably inside).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Margin {
    /// Whether the hypothesis holds.
    pub ok: bool,
    /// Signed slack.
    pub margin: f64,
}

/// The four theorem hypotheses with signed margins.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct PrecondReport {
    /// `lam >= 1 - (1 - |p(0)|)^(1/n)`; margin `lam - lower_edge`,
    /// ok iff margin >= 0.
    pub lam_lower: Margin,
    /// `lam <= sin(pi/n)`; margin `sin(pi/n) - lam`, ok iff margin >= 0.
    pub lam_upper: Margin,
    /// `lam < a`, strict; margin `a - lam`, ok iff margin > 0. The boundary
    /// `lam = a` fails: the hypothesis is an open condition.
    pub lam_below_a: Margin,
    /// `rho_1 >= 1`; margin `rho_1 - 1`, ok iff margin >= 0.
    pub rho1_at_least_one: Margin,
    /// All four hold.
    pub all_pass: bool,
}

/// The window's lower edge `1 - (1 - |p(0)|)^(1/n)`, computed in log space
/// as `-expm1(ln1p(-|p0|) / n)` so that tiny `|p(0)|` does not lose digits
/// to the subtraction from 1. Values `|p(0)| >= 1` (impossible for
/// admissible configurations, but reachable through raw polynomials) clamp
/// the edge to 1.
pub fn lambda_lower_bound(p0_abs: f64, n: usize) -> f64 {
    assert!(n >= 1, "degree must be at least 1");
    if p0_abs >= 1.0 {
        return 1.0;
    }
    -((-p0_abs).ln_1p() / n as f64).exp_m1()
}

/// The minimum-modulus lemma's right-hand side `1 - (1 - lam)^n`, in the
/// compensated form `-expm1(n ln1p(-lam))`. Exactly 1 for `lam >= 1` (the
/// lemma's radius range ends at `sin(pi/n) <= 1`).
pub fn lemma_a_rhs(lam: f64, n: usize) -> f64 {
    if lam >= 1.0 {
        return 1.0;
    }
    -((n as f64) * (-lam).ln_1p()).exp_m1()
}

fn precond_parts(a: f64, n: usize, p0_abs: f64, rho1: f64, lam: f64) -> PrecondReport {
    let lower_margin = lam - lambda_lower_bound(p0_abs, n);
    let upper_margin = (std::f64::consts::PI / n as f64).sin() - lam;
    let below_margin = a - lam;
    let rho_margin = rho1 - 1.0;
    let lam_lower = Margin { ok: lower_margin >= 0.0, margin: lower_margin };
    let lam_upper = Margin { ok: upper_margin >= 0.0, margin: upper_margin };
    let lam_below_a = Margin { ok: below_margin > 0.0, margin: below_margin };
    let rho1_at_least_one = Margin { ok: rho_margin >= 0.0, margin: rho_margin };
    PrecondReport {
        lam_lower,
        lam_upper,
        lam_below_a,
        rho1_at_least_one,
        all_pass: lam_lower.ok && lam_upper.ok && lam_below_a.ok && rho1_at_least_one.ok,
    }
}

/// Evaluate the four hypotheses for a configuration at radius `lam`.
///
/// `|p(0)|` is taken from the zeros directly (`a * prod |z_k|`); `rho_1`
/// comes from the supplied critical-point profile. All margins are reported
/// whether or not the flags pass.
pub fn check_preconditions(
    cfg: &RootConfiguration,
    profile: &CriticalProfile,
    lam: f64,
) -> PrecondReport {
    precond_parts(cfg.a(), cfg.n(), cfg.p0_magnitude(), profile.rho1(), lam)
}

/// Outcome of one minimum-modulus check ([`lemma_a_check`]) or of the whole
/// pipeline ([`theorem_verdict`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictStatus {
    /// Hypotheses hold and the asserted inequality was verified.
    Holds,
    /// Some hypothesis fails; the assertion is not in force.
    Vacuous,
    /// Hypotheses hold and the asserted inequality failed — a genuine
    /// counterexample candidate.
    Violated,
    /// The numerics (root solving, residual contracts) failed; no claim
    /// either way.
    NumericalFailure,
}

/// Report of the minimum-modulus check on `|z - a| = lam`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LemmaAReport {
    /// Circle radius.
    pub lam: f64,
    /// Distance from `a` to the nearest critical point.
    pub rho1: f64,
    /// `rho_1 >= 1`, the lemma's binding hypothesis.
    pub rho1_ok: bool,
    /// `lam <= sin(pi/n)`, the lemma's radius range.
    pub lam_ok: bool,
    /// Minimum of `|p|` over the circle (sampling plus golden refinement).
    pub min_mod: f64,
    /// Where the minimum was attained.
    pub argmin: [f64; 2],
    /// `1 - (1 - lam)^n`.
    pub rhs: f64,
    /// `min_mod - rhs`; the lemma asserts this is strictly positive.
    pub margin: f64,
    /// `HOLDS`/`VIOLATED` when both hypotheses hold, else `VACUOUS`.
    pub status: VerdictStatus,
}

/// Check the minimum-modulus lower bound `|p| > 1 - (1 - lam)^n` on the
/// circle `|z - a| = lam`.
///
/// The minimum is a dense angular scan (4096 samples) refined by golden
/// section, so `min_mod` is sampling-limited rather than certified; the
/// margins seen in practice are far larger than the scan error. The status
/// is `VACUOUS` unless `rho_1 >= 1` and `lam <= sin(pi/n)` — the margin is
/// still reported so vacuous instances contribute data.
pub fn lemma_a_check(
    p: &Polynomial,
    a: f64,
    lam: f64,
    profile: &CriticalProfile,
) -> Result<LemmaAReport, TheoremError> {
    if !lam.is_finite() || lam <= 0.0 {
        return Err(TheoremError::InvalidLambda(lam));
    }
    let n = p.degree();
    let (min_mod, argmin) = p.min_modulus_on_circle(
        Complex64::new(a, 0.0),
        lam,
        CIRCLE_SAMPLES,
        CIRCLE_REFINE_ITERS,
    )?;
    let rhs = lemma_a_rhs(lam, n);
    let margin = min_mod - rhs;
    let rho1 = profile.rho1();
    let rho1_ok = rho1 >= 1.0;
    let lam_ok = lam <= (std::f64::consts::PI / n as f64).sin();
    let status = if !(rho1_ok && lam_ok) {
        VerdictStatus::Vacuous
    } else if margin > 0.0 {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };
    Ok(LemmaAReport {
        lam,
        rho1,
        rho1_ok,
        lam_ok,
        min_mod,
        argmin: [argmin.re, argmin.im],
        rhs,
        margin,
        status,
    })
}

/// All nonzero roots of `p(z) - p(0)`, in the deterministic order of the
/// root finder.
///
/// `p - p(0)` has constant coefficient exactly zero (the subtraction is
/// `c_0 - c_0`), so it factors as `z * h(z)` and the candidates are the
/// roots of the deflated `h`. Roots with `|z| <= tol` are treated as the
/// deflated zero reappearing (a multiple root of `p - p(0)` at the origin)
/// and dropped: `z0 = 0` makes the bisector of `[0, z0]` undefined.
pub fn equal_value_points(p: &Polynomial, tol: f64) -> Result<Vec<Complex64>, TheoremError> {
    if !(tol > 0.0) {
        return Err(PolyError::NonPositiveTol(tol).into());
    }
    if p.degree() < 2 {
        // q = p - p(0) is linear (or constant) with only the root z = 0.
        return Ok(Vec::new());
    }
    let h = Polynomial::from_coeffs(p.coeffs()[1..].to_vec())?;
    // Tighter residual bar than the caller's: the roots found here are fed
    // back into |p(z0) - p(0)| checks against tol, and |z0| can approach 2.
    let roots = h.find_roots(tol / 16.0)?;
    Ok(roots.into_iter().filter(|z| z.norm() > tol).collect())
}

/// The equal-value point(s) inside the hypothesis disk.
#[derive(Clone, Debug)]
pub struct Z0Solution {
    /// All nonzero roots of `p - p(0)` with `|z - a| <= lam + tol`, in root
    /// finder order.
    pub roots_in_disk: Vec<Complex64>,
    /// Canonical representative: the disk root closest to `a` (ties broken
    /// by real part, then imaginary part).
    pub z0: Complex64,
    /// Whether the disk root is unique. The univalence argument predicts
    /// uniqueness; downstream consumers should treat `false` as worth
    /// processing worst-case.
    pub unique: bool,
}

/// Find the nonzero roots of `p - p(0)` in the disk `|z - a| <= lam` (with
/// absolute slack `tol` on membership). Errors with
/// [`TheoremError::Z0NotFound`] when the disk holds none.
pub fn solve_z0(
    p: &Polynomial,
    a: f64,
    lam: f64,
    tol: f64,
) -> Result<Z0Solution, TheoremError> {
    if !lam.is_finite() || lam < 0.0 {
        return Err(TheoremError::InvalidLambda(lam));
    }
    let center = Complex64::new(a, 0.0);
    let roots_in_disk: Vec<Complex64> = equal_value_points(p, tol)?
        .into_iter()
        .filter(|z| (z - center).norm() <= lam + tol)
        .collect();
    let z0 = roots_in_disk
        .iter()
        .copied()
        .min_by(|x, y| {
            let dx = (x - center).norm();
            let dy = (y - center).norm();
            dx.total_cmp(&dy)
                .then_with(|| x.re.total_cmp(&y.re))
                .then_with(|| x.im.total_cmp(&y.im))
        })
        .ok_or(TheoremError::Z0NotFound { lam, slack: tol })?;
    let unique = roots_in_disk.len() == 1;
    Ok(Z0Solution { roots_in_disk, z0, unique })
}

/// Report of the half-plane check for one `(p, z0)` pair.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GraceHeawoodReport {
    /// The equal-value point.
    pub z0: [f64; 2],
    /// `|p(z0) - p(0)|`, verified against `tol * max|coeff|` up front.
    pub equal_value_residual: f64,
    /// Largest signed side value over all critical points
    /// (side = `|zeta| - |zeta - z0|`).
    pub max_side: f64,
    /// Smallest signed side value.
    pub min_side: f64,
    /// Critical point attaining `max_side` — the `z0`-side witness.
    pub witness_z0_side: [f64; 2],
    /// Critical point attaining `min_side` — the origin-side witness.
    pub witness_origin_side: [f64; 2],
    /// `max_side >= -tol`: the closed `z0`-side half-plane is inhabited.
    pub side_pos: bool,
    /// `min_side <= tol`: the closed origin-side half-plane is inhabited.
    pub side_neg: bool,
    /// Both half-planes inhabited.
    pub ok: bool,
}

/// Check that each closed half-plane of the perpendicular bisector of
/// `[0, z0]` contains a critical point of `p`, given `p(z0) = p(0)`.
///
/// Half-plane membership uses the signed side `|zeta| - |zeta - z0|` with
/// absolute tolerance `tol`, so critical points exactly on the bisector
/// (the quadratic case puts one at `z0/2`) count for both sides.
pub fn grace_heawood_check(
    p: &Polynomial,
    z0: Complex64,
    tol: f64,
) -> Result<GraceHeawoodReport, TheoremError> {
    if p.degree() < 2 {
        return Err(TheoremError::DegreeTooSmall(p.degree()));
    }
    if z0.norm() == 0.0 {
        return Err(GeometryError::DegenerateZ0.into());
    }
    let p0 = p.coeffs()[0];
    let residual = (p.eval_compensated(z0) - p0).norm();
    let allowed = tol * p.coeff_scale();
    if !(residual <= allowed) {
        return Err(TheoremError::EqualValueMismatch { residual, allowed });
    }
    let crit = p.derivative().find_roots(tol)?;
    let mut max_side = f64::NEG_INFINITY;
    let mut min_side = f64::INFINITY;
    let mut wit_pos = crit[0];
    let mut wit_neg = crit[0];
    for &zeta in &crit {
        let side = half_plane_side(zeta, z0)?;
        if side > max_side {
            max_side = side;
            wit_pos = zeta;
        }
        if side < min_side {
            min_side = side;
            wit_neg = zeta;
        }
    }
    let side_pos = max_side >= -tol;
    let side_neg = min_side <= tol;
    Ok(GraceHeawoodReport {
        z0: [z0.re, z0.im],
        equal_value_residual: residual,
        max_side,
        min_side,
        witness_z0_side: [wit_pos.re, wit_pos.im],
        witness_origin_side: [wit_neg.re, wit_neg.im],
        side_pos,
        side_neg,
        ok: side_pos && side_neg,
    })
}

/// Report of the concrete chain for one `(p, z0)` pair.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ChainReport {
    /// The equal-value point (upper half-plane).
    pub z0: [f64; 2],
    /// `r = |z0 - a|`.
    pub r: f64,
    /// Chord floor `min(Re star_upper, Re star_lower)` from the bisector
    /// geometry — every disk point on the `z0` side has `Re` at least this.
    pub cos_b0: f64,
    /// `(a - r(r + 2)/a) / 2`.
    pub bound_r: f64,
    /// Largest `Re` among critical points in the closed `z0`-side
    /// half-plane.
    pub best_re: f64,
    /// The critical point attaining `best_re`.
    pub witness: [f64; 2],
    /// `best_re - bound_r`.
    pub margin: f64,
    /// `best_re >= bound_r - tol`.
    pub ok: bool,
}

/// Verify the concrete chain for one normalized `(p, z0)` pair: among the
/// critical points in the closed `z0`-side half-plane, the largest real
/// part must reach `(a - r(r + 2)/a) / 2` with `r = |z0 - a|`.
///
/// Requires `Im z0 >= 0`; conjugate the whole instance first when it is
/// not (side values and real parts are conjugation-invariant, so this is a
/// normalization, not a restriction). If no critical point lies on the
/// `z0` side at all, that is a failure of the half-plane step and comes
/// back as [`TheoremError::NoSideCriticalPoint`], distinct from a bound
/// violation (`ok = false`).
pub fn chain_check(
    p: &Polynomial,
    cfg: &RootConfiguration,
    z0: Complex64,
    tol: f64,
) -> Result<ChainReport, TheoremError> {
    if z0.im < 0.0 {
        return Err(TheoremError::NegativeImZ0(z0.im));
    }
    if p.degree() < 2 {
        return Err(TheoremError::DegreeTooSmall(p.degree()));
    }
    let geom = BisectorGeometry::new(cfg.a(), z0)?;
    let crit = p.derivative().find_roots(tol)?;
    let mut best: Option<Complex64> = None;
    for &zeta in &crit {
        if half_plane_side(zeta, z0)? >= -tol {
            let better = match best {
                None => true,
                Some(b) => zeta.re > b.re,
            };
            if better {
                best = Some(zeta);
            }
        }
    }
    let witness = best.ok_or(TheoremError::NoSideCriticalPoint { z0: [z0.re, z0.im] })?;
    let r = geom.r;
    let bound_r = theorem_bound(cfg.a(), r);
    let best_re = witness.re;
    let margin = best_re - bound_r;
    Ok(ChainReport {
        z0: [z0.re, z0.im],
        r,
        cos_b0: geom.cos_beta0,
        bound_r,
        best_re,
        witness: [witness.re, witness.im],
        margin,
        ok: margin >= -tol,
    })
}

/// Full-pipeline verdict for one configuration at radius `lam`.
///
/// Serializes to the wire shape
/// `{"a", "lambda", "preconds", "z0", "r", "bound", "witness", "status"}`.
/// `z0` is reported in the upper-half-plane normalization; when several
/// equal-value points lie in the disk, the recorded one is the worst case
/// (smallest best-side real part). Absent values (`z0` not found, witness
/// missing) serialize as `null`.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    /// The distinguished zero.
    pub a: f64,
    /// The hypothesis radius.
    pub lambda: f64,
    /// The four hypothesis margins.
    pub preconds: PrecondReport,
    /// Worst-case equal-value point in the disk, if any.
    pub z0: Option<[f64; 2]>,
    /// `|z0 - a|` for that point.
    pub r: Option<f64>,
    /// `(a - lambda(lambda + 2)/a) / 2` — the theorem's bound.
    pub bound: f64,
    /// The `z0`-side critical point with the largest real part.
    pub witness: Option<[f64; 2]>,
    /// The four-way outcome.
    pub status: VerdictStatus,
}

/// Run the whole pipeline on one configuration.
///
/// Status logic:
///
/// * any root-solver failure → `NUMERICAL_FAILURE` (margins recorded as far
///   as they were computable);
/// * some hypothesis fails → `VACUOUS` — the chain data is still recorded
///   when an equal-value point exists, because the chain inequality holding
///   without the hypotheses is exactly what the stress suites measure;
/// * hypotheses pass and no equal-value point was found → `NUMERICAL_FAILURE`
///   (the hypotheses force one to exist: `min |p| > |p(0)|` on the circle
///   makes the winding count positive, so not finding it is our failure,
///   not the theorem's);
/// * hypotheses pass, witnesses exist, and the worst case satisfies
///   `Re >= bound - tol` → `HOLDS`, otherwise `VIOLATED`.
pub fn theorem_verdict(cfg: &RootConfiguration, lam: f64, tol: f64) -> TheoremVerdict {
    let a = cfg.a();
    let n = cfg.n();
    let p0_abs = cfg.p0_magnitude();
    let bound = theorem_bound(a, lam);
    let p = cfg.polynomial();

    let fail = |preconds: PrecondReport| TheoremVerdict {
        a,
        lambda: lam,
        preconds,
        z0: None,
        r: None,
        bound,
        witness: None,
        status: VerdictStatus::NumericalFailure,
    };

    // Critical points, for rho_1. A degree-1 instance has none (the minimum
    // over the empty set is +inf, and the window conditions are then
    // mutually exclusive, so such instances are always vacuous).
    let crit = if p.degree() >= 2 {
        match p.derivative().find_roots(tol) {
            Ok(c) => c,
            Err(_) => return fail(precond_parts(a, n, p0_abs, f64::NAN, lam)),
        }
    } else {
        Vec::new()
    };
    let profile =
        distance_profile(cfg, &crit).expect("critical point count matches degree by construction");
    let preconds = precond_parts(a, n, p0_abs, profile.rho1(), lam);

    // Equal-value point(s). Not finding any is a legitimate outcome when the
    // hypotheses fail (the winding argument needs them), a numerical failure
    // when they hold.
    let sol = match solve_z0(&p, a, lam, tol) {
        Ok(sol) => Some(sol),
        Err(TheoremError::Z0NotFound { .. }) => None,
        Err(_) => return fail(preconds),
    };

    // Worst case across the disk roots: smallest best-side real part. Each
    // root is normalized to Im >= 0 by conjugating the whole instance; side
    // values and real parts are conjugation-invariant, so this only selects
    // which representative gets reported.
    let mut z0_rec: Option<[f64; 2]> = None;
    let mut r_rec: Option<f64> = None;
    let mut witness_rec: Option<[f64; 2]> = None;
    let mut worst_re = f64::INFINITY;
    let mut witness_missing = false;
    if let Some(sol) = &sol {
        for &root in &sol.roots_in_disk {
            let (cfg_n, p_n, z0_n) = if root.im < 0.0 {
                (cfg.conjugated(), p.conjugate_flip(), root.conj())
            } else {
                (cfg.clone(), p.clone(), root)
            };
            match chain_check(&p_n, &cfg_n, z0_n, tol) {
                Ok(rep) => {
                    if rep.best_re < worst_re {
                        worst_re = rep.best_re;
                        z0_rec = Some(rep.z0);
                        r_rec = Some(rep.r);
                        witness_rec = Some(rep.witness);
                    }
                }
                Err(TheoremError::NoSideCriticalPoint { .. }) => {
                    if worst_re > f64::NEG_INFINITY {
                        worst_re = f64::NEG_INFINITY;
                        z0_rec = Some([z0_n.re, z0_n.im]);
                        r_rec = Some((z0_n - Complex64::new(a, 0.0)).norm());
                        witness_rec = None;
                    }
                    witness_missing = true;
                }
                Err(_) => return fail(preconds),
            }
        }
    }

    let status = if !preconds.all_pass {
        VerdictStatus::Vacuous
    } else if sol.is_none() {
        VerdictStatus::NumericalFailure
    } else if witness_missing || witness_rec.is_none() {
        VerdictStatus::Violated
    } else if worst_re >= bound - tol {
        VerdictStatus::Holds
    } else {
        VerdictStatus::Violated
    };

    TheoremVerdict {
        a,
        lambda: lam,
        preconds,
        z0: z0_rec,
        r: r_rec,
        bound,
        witness: witness_rec,
        status,
    }
}
