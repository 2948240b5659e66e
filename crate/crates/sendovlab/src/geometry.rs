//! Distance profiles and perpendicular-bisector geometry.
//!
//! The setting: a polynomial with all zeros in the closed unit disk, one of
//! them a distinguished real zero `a` in (0,1). Given a point `z0`, the locus
//! `L = {z : |z| = |z - z0|}` — the perpendicular bisector of the segment
//! from 0 to `z0` — cuts the unit circle in two points (the "star" points)
//! whenever `0 < |z0| <= 2`. The real parts of those chord endpoints bound
//! the real part of everything on the `z0` side of `L` inside the disk, which
//! is the geometric heart of the critical-point lower bound.

use num_complex::Complex64;
use serde::Serialize;

/// Modulus slack allowed on input zeros: `|z_k| <= 1 + MODULUS_SLACK`.
/// Absorbs the rounding of upstream root finders that place zeros on the
/// unit circle.
pub const MODULUS_SLACK: f64 = 1e-12;

/// How far below zero the chord radicand `4 - |z0|^2` may round before we
/// call it a genuine miss. Computing `|z0|^2` costs at most a few ulps at
/// scale 4 (~7e-15), so 1e-13 cleanly separates rounding from violation.
const RADICAND_SLACK: f64 = 1e-13;

/// Errors from configuration validation and bisector construction.
#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    /// The distinguished zero must sit strictly inside (0,1).
    #[error("a must lie strictly inside (0,1), got {0}")]
    InvalidA(f64),
    /// Zeros must stay in the closed unit disk (modulo [`MODULUS_SLACK`]).
    #[error("zero #{index} has modulus {modulus} > 1")]
    ZeroOutsideDisk { index: usize, modulus: f64 },
    /// NaN or infinity in the input.
    #[error("non-finite value in input")]
    NonFinite,
    /// `distance_profile` received the wrong number of critical points.
    #[error("expected {expected} critical points (degree - 1), got {got}")]
    LengthMismatch { expected: usize, got: usize },
    /// `z0 = 0` makes the bisector of `[0, z0]` undefined.
    #[error("z0 = 0 is degenerate: the bisector of [0, z0] is undefined")]
    DegenerateZ0,
    /// The bisector misses the unit circle entirely.
    #[error("|z0| = {0} exceeds 2: the bisector misses the unit circle")]
    NoIntersection(f64),
}

/// A problem instance: the distinguished real zero `a` and the remaining
/// zeros `z_k`, all within the closed unit disk.
#[derive(Clone, Debug, PartialEq)]
pub struct RootConfiguration {
    a: f64,
    zeros: Vec<Complex64>,
}

impl RootConfiguration {
    /// Validate and build. Requires `0 < a < 1`, all values finite, and
    /// every `|z_k| <= 1 + MODULUS_SLACK`.
    pub fn new(a: f64, zeros: Vec<Complex64>) -> Result<Self, GeometryError> {
        if !a.is_finite() || !(0.0 < a && a < 1.0) {
            return Err(GeometryError::InvalidA(a));
        }
        for (index, z) in zeros.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(GeometryError::NonFinite);
            }
            let modulus = z.norm();
            if modulus > 1.0 + MODULUS_SLACK {
                return Err(GeometryError::ZeroOutsideDisk { index, modulus });
            }
        }
        Ok(RootConfiguration { a, zeros })
    }

    /// The distinguished real zero.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// The other zeros (`z_k`), in input order.
    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    /// Polynomial degree: one more than the number of other zeros.
    pub fn n(&self) -> usize {
        self.zeros.len() + 1
    }

    /// The monic polynomial `(z - a) * prod_k (z - z_k)`.
    pub fn polynomial(&self) -> crate::polynomial::Polynomial {
        let mut roots = Vec::with_capacity(self.n());
        roots.push(Complex64::new(self.a, 0.0));
        roots.extend_from_slice(&self.zeros);
        crate::polynomial::Polynomial::from_roots(&roots)
            .expect("configuration is nonempty and finite")
    }

    /// `|p(0)| = a * prod_k |z_k|`, computed directly from the zeros (one
    /// rounding per factor) rather than from expanded coefficients. Always
    /// `< 1` up to rounding, since `a < 1` and every `|z_k| <= 1` (modulo
    /// [`MODULUS_SLACK`]).
    pub fn p0_magnitude(&self) -> f64 {
        self.a * self.zeros.iter().map(|z| z.norm()).product::<f64>()
    }

    /// The configuration with every zero conjugated (`a` is real and fixed).
    pub fn conjugated(&self) -> RootConfiguration {
        RootConfiguration {
            a: self.a,
            zeros: self.zeros.iter().map(|z| z.conj()).collect(),
        }
    }
}

/// Sorted distance data: critical points `zeta_j`, their distances
/// `rho_j = |a - zeta_j|` in ascending order, and the zero distances
/// `r_k = |a - z_k|` in ascending order.
#[derive(Clone, Debug, Serialize)]
pub struct CriticalProfile {
    /// Critical points in input order.
    pub crit_points: Vec<[f64; 2]>,
    /// `|a - zeta_j|`, ascending; `rho[0]` is the distance to the nearest
    /// critical point.
    pub rho: Vec<f64>,
    /// `|a - z_k|`, ascending.
    pub r: Vec<f64>,
}

impl CriticalProfile {
    /// Distance from `a` to the nearest critical point (`rho_1`). A profile
    /// with no critical points at all (a degree-1 instance) yields `+inf`,
    /// the minimum over the empty set.
    pub fn rho1(&self) -> f64 {
        self.rho.first().copied().unwrap_or(f64::INFINITY)
    }
}

/// Build the sorted distance profile. `crit` must contain exactly `n - 1`
/// critical points. Ties sort stably by original index.
pub fn distance_profile(
    cfg: &RootConfiguration,
    crit: &[Complex64],
) -> Result<CriticalProfile, GeometryError> {
    if crit.len() != cfg.n() - 1 {
        return Err(GeometryError::LengthMismatch { expected: cfg.n() - 1, got: crit.len() });
    }
    if crit.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(GeometryError::NonFinite);
    }
    let a = Complex64::new(cfg.a, 0.0);
    let mut rho: Vec<f64> = crit.iter().map(|&z| (a - z).norm()).collect();
    let mut r: Vec<f64> = cfg.zeros.iter().map(|&z| (a - z).norm()).collect();
    // total_cmp keeps the sort total; stable sort preserves input order on ties.
    rho.sort_by(f64::total_cmp);
    r.sort_by(f64::total_cmp);
    Ok(CriticalProfile {
        crit_points: crit.iter().map(|z| [z.re, z.im]).collect(),
        rho,
        r,
    })
}

/// Per-zero outcome of the distance-bound check
/// `2 rho_1 sin(pi/n) <= r_k <= 1 + a`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundCheck {
    /// `r_k - 2 rho_1 sin(pi/n)`; nonnegative iff the lower bound holds.
    pub lower_margin: f64,
    /// `(1 + a) - r_k`; nonnegative iff the upper bound holds.
    pub upper_margin: f64,
    /// Both margins nonnegative.
    pub ok: bool,
}

/// Report for [`check_distance_bounds`].
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    /// One check per `r_k`, in ascending-`r` order.
    pub per_k: Vec<BoundCheck>,
    /// True iff every per-zero check passed.
    pub all_ok: bool,
}

/// Check `2 rho_1 sin(pi/n) <= r_k <= 1 + a` for every zero distance.
pub fn check_distance_bounds(profile: &CriticalProfile, n: usize, a: f64) -> BoundsReport {
    let lower = 2.0 * profile.rho1() * (std::f64::consts::PI / n as f64).sin();
    let upper = 1.0 + a;
    let per_k: Vec<BoundCheck> = profile
        .r
        .iter()
        .map(|&rk| {
            let lower_margin = rk - lower;
            let upper_margin = upper - rk;
            BoundCheck { lower_margin, upper_margin, ok: lower_margin >= 0.0 && upper_margin >= 0.0 }
        })
        .collect();
    let all_ok = per_k.iter().all(|c| c.ok);
    BoundsReport { per_k, all_ok }
}

/// Signed side of the bisector `L` of `[0, z0]`: returns `|z| - |z - z0|`.
/// Positive means `z` lies strictly on the `z0` side, zero on `L`, negative
/// on the origin side.
pub fn half_plane_side(z: Complex64, z0: Complex64) -> Result<f64, GeometryError> {
    if z0.norm() == 0.0 {
        return Err(GeometryError::DegenerateZ0);
    }
    Ok(z.norm() - (z - z0).norm())
}

/// The two intersection points of the bisector `L` with the unit circle,
/// from the closed form `(1/2 ± i sqrt(4 - |z0|^2) / (2 |z0|)) * z0`.
///
/// Returns `(star_upper, star_lower)` where `star_upper` is the branch with
/// `Im >= 0` (ties broken toward larger real part). Requires `0 < |z0| <= 2`;
/// at `|z0| = 2` the chord degenerates to the tangency point `z0 / 2`.
pub fn circle_intersections(z0: Complex64) -> Result<(Complex64, Complex64), GeometryError> {
    let t2 = z0.norm_sqr();
    if t2 == 0.0 {
        return Err(GeometryError::DegenerateZ0);
    }
    let rad = 4.0 - t2;
    // |z0| beyond 2 by more than a rounding-level slack is a real miss.
    if rad < -RADICAND_SLACK {
        return Err(GeometryError::NoIntersection(t2.sqrt()));
    }
    let s = rad.max(0.0).sqrt() / (2.0 * t2.sqrt());
    let w_plus = Complex64::new(0.5, s) * z0;
    let w_minus = Complex64::new(0.5, -s) * z0;
    // Branch selection by imaginary part, not by the ± sign: multiplying by
    // z0 can swap which algebraic branch ends up in the upper half-plane.
    let upper_first = match w_plus.im.partial_cmp(&w_minus.im) {
        Some(std::cmp::Ordering::Greater) => true,
        Some(std::cmp::Ordering::Less) => false,
        _ => w_plus.re >= w_minus.re,
    };
    if upper_first {
        Ok((w_plus, w_minus))
    } else {
        Ok((w_minus, w_plus))
    }
}

/// The bisector geometry of one `z0` relative to the distinguished zero `a`:
/// polar offset `z0 = a + r e^{i alpha}`, the two star points, and the chord
/// real-part lower bound `cos_beta0 = min(Re star_upper, Re star_lower)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BisectorGeometry {
    /// The equal-value point, as `[re, im]`.
    pub z0: [f64; 2],
    /// `|z0 - a|`.
    pub r: f64,
    /// Argument of `z0 - a`.
    pub alpha: f64,
    /// Star point with `Im >= 0`, as `[re, im]`.
    pub star_upper: [f64; 2],
    /// The other star point.
    pub star_lower: [f64; 2],
    /// Angle of the star point with the smaller real part.
    pub beta0: f64,
    /// `min(Re star_upper, Re star_lower)`: the chord's real-part floor.
    pub cos_beta0: f64,
}

impl BisectorGeometry {
    /// Build the geometry for `z0` relative to `a`. Fails on `z0 = 0` or
    /// `|z0| > 2`.
    pub fn new(a: f64, z0: Complex64) -> Result<Self, GeometryError> {
        let (up, lo) = circle_intersections(z0)?;
        let offset = z0 - Complex64::new(a, 0.0);
        let chosen = if up.re <= lo.re { up } else { lo };
        Ok(BisectorGeometry {
            z0: [z0.re, z0.im],
            r: offset.norm(),
            alpha: offset.arg(),
            star_upper: [up.re, up.im],
            star_lower: [lo.re, lo.im],
            beta0: chosen.arg(),
            cos_beta0: up.re.min(lo.re),
        })
    }
}

/// Closed form for `cos beta0` in the polar parametrization
/// `z0 = a + r e^{i alpha}`:
///
/// ```text
/// cos beta0 = (a + r cos alpha)/2
///           - sqrt(4 - a^2 - 2 a r cos alpha - r^2)
///             / sqrt(a^2 + 2 a r cos alpha + r^2) * (r sin alpha) / 2
/// ```
///
/// Agrees with `min(Re star_upper, Re star_lower)` from
/// [`circle_intersections`] whenever `sin alpha >= 0`. The radicand
/// `4 - |z0|^2` may round slightly negative at `|z0| = 2`; values within a
/// few ulps are clamped to zero, anything worse errors.
pub fn cos_beta0_closed_form(a: f64, r: f64, alpha: f64) -> Result<f64, GeometryError> {
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let t2 = a * a + 2.0 * a * r * ca + r * r; // |z0|^2
    if t2 <= 0.0 {
        return Err(GeometryError::DegenerateZ0);
    }
    let rad = 4.0 - t2;
    if rad < -RADICAND_SLACK {
        return Err(GeometryError::NoIntersection(t2.sqrt()));
    }
    Ok(0.5 * (a + r * ca) - 0.5 * (rad.max(0.0).sqrt() / t2.sqrt()) * r * sa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn config_validation() {
        assert!(RootConfiguration::new(0.5, vec![c(-1.0, 0.0)]).is_ok());
        assert!(matches!(
            RootConfiguration::new(0.0, vec![]),
            Err(GeometryError::InvalidA(_))
        ));
        assert!(matches!(
            RootConfiguration::new(1.0, vec![]),
            Err(GeometryError::InvalidA(_))
        ));
        assert!(matches!(
            RootConfiguration::new(0.5, vec![c(1.1, 0.0)]),
            Err(GeometryError::ZeroOutsideDisk { index: 0, .. })
        ));
        // The documented slack admits zeros a hair past the circle.
        assert!(RootConfiguration::new(0.5, vec![c(1.0 + 0.5e-12, 0.0)]).is_ok());
    }

    #[test]
    fn profile_hand_case() {
        // (z - 0.5)(z + 1): critical point -0.25, so rho = [0.75], r = [1.5].
        let cfg = RootConfiguration::new(0.5, vec![c(-1.0, 0.0)]).unwrap();
        let prof = distance_profile(&cfg, &[c(-0.25, 0.0)]).unwrap();
        assert_eq!(prof.rho, vec![0.75]);
        assert_eq!(prof.r, vec![1.5]);
    }

    #[test]
    fn profile_coincident_points() {
        let cfg = RootConfiguration::new(0.5, vec![c(0.5, 0.0)]).unwrap();
        let prof = distance_profile(&cfg, &[c(0.5, 0.0)]).unwrap();
        assert_eq!(prof.rho, vec![0.0]);
        assert_eq!(prof.r, vec![0.0]);
    }

    #[test]
    fn profile_sorted_ascending() {
        let cfg =
            RootConfiguration::new(0.3, vec![c(0.9, 0.0), c(-0.2, 0.1), c(0.0, -0.8)]).unwrap();
        let crit = [c(0.5, 0.2), c(-0.1, -0.1), c(0.25, 0.0)];
        let prof = distance_profile(&cfg, &crit).unwrap();
        assert!(prof.rho.windows(2).all(|w| w[0] <= w[1]));
        assert!(prof.r.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn profile_length_mismatch() {
        let cfg = RootConfiguration::new(0.5, vec![c(-1.0, 0.0)]).unwrap();
        assert!(matches!(
            distance_profile(&cfg, &[]),
            Err(GeometryError::LengthMismatch { expected: 1, got: 0 })
        ));
    }

    #[test]
    fn distance_bounds_exact_equality_case() {
        // n = 2, a = 0.5, zero at -1: rho1 = 0.75, sin(pi/2) = 1 exactly in
        // f64, so the lower bound is exactly 1.5 = r_1 = 1 + a. Both margins
        // are exactly zero — every quantity here is exactly representable.
        let cfg = RootConfiguration::new(0.5, vec![c(-1.0, 0.0)]).unwrap();
        let prof = distance_profile(&cfg, &[c(-0.25, 0.0)]).unwrap();
        let report = check_distance_bounds(&prof, 2, 0.5);
        assert!(report.all_ok);
        assert_eq!(report.per_k[0].lower_margin, 0.0);
        assert_eq!(report.per_k[0].upper_margin, 0.0);
    }

    #[test]
    fn distance_bounds_rho1_zero_is_trivial() {
        let cfg = RootConfiguration::new(0.5, vec![c(0.5, 0.0)]).unwrap();
        let prof = distance_profile(&cfg, &[c(0.5, 0.0)]).unwrap();
        let report = check_distance_bounds(&prof, 2, 0.5);
        assert!(report.per_k[0].lower_margin >= 0.0);
    }

    #[test]
    fn half_plane_side_cases() {
        let z0 = c(0.8, 0.3);
        assert!(half_plane_side(z0, z0).unwrap() > 0.0);
        assert_abs_diff_eq!(half_plane_side(z0, z0).unwrap(), z0.norm(), epsilon = 1e-15);
        assert_abs_diff_eq!(half_plane_side(c(0.0, 0.0), z0).unwrap(), -z0.norm(), epsilon = 1e-15);
        assert_abs_diff_eq!(half_plane_side(z0 / 2.0, z0).unwrap(), 0.0, epsilon = 1e-16);
        assert!(matches!(
            half_plane_side(c(1.0, 0.0), c(0.0, 0.0)),
            Err(GeometryError::DegenerateZ0)
        ));
    }

    #[test]
    fn intersections_reference_point() {
        // z0 = 0.8 + 0.3i; values frozen from a 40-digit evaluation of the
        // closed form.
        let (up, lo) = circle_intersections(c(0.8, 0.3)).unwrap();
        assert_abs_diff_eq!(up.re, 0.08252925924917630, epsilon = 1e-15);
        assert_abs_diff_eq!(up.im, 0.99658864200219654, epsilon = 1e-15);
        assert_abs_diff_eq!(lo.re, 0.71747074075082370, epsilon = 1e-15);
        assert_abs_diff_eq!(lo.im, -0.69658864200219654, epsilon = 1e-15);
    }

    #[test]
    fn intersections_real_z0() {
        // z0 = 1: symmetric chord at Re = 1/2.
        let (up, lo) = circle_intersections(c(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(up.re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(up.im, 3f64.sqrt() / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(lo.re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(lo.im, -(3f64.sqrt()) / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn intersections_tangency() {
        let (up, lo) = circle_intersections(c(2.0, 0.0)).unwrap();
        assert_eq!(up, c(1.0, 0.0));
        assert_eq!(lo, c(1.0, 0.0));
    }

    #[test]
    fn intersections_errors() {
        assert!(matches!(
            circle_intersections(c(0.0, 0.0)),
            Err(GeometryError::DegenerateZ0)
        ));
        assert!(matches!(
            circle_intersections(c(2.1, 0.0)),
            Err(GeometryError::NoIntersection(_))
        ));
    }

    #[test]
    fn star_points_unit_modulus_and_equidistant() {
        // Structural identity |star| = 1 = |star - z0| holds to a few ulps
        // for any admissible z0, including very small and near-2 moduli.
        for &z0 in &[c(0.8, 0.3), c(1e-6, 2e-7), c(-1.3, 1.4), c(0.1, -1.9), c(1.999, 0.0)] {
            let (up, lo) = circle_intersections(z0).unwrap();
            for &w in &[up, lo] {
                assert_abs_diff_eq!(w.norm(), 1.0, epsilon = 1e-13);
                assert_abs_diff_eq!(w.norm(), (w - z0).norm(), epsilon = 1e-12);
            }
            assert!(up.im >= lo.im);
        }
    }

    #[test]
    fn closed_form_reference_point() {
        // a = 0.8, r = 0.3, alpha = pi/2 puts z0 at 0.8 + 0.3i; frozen
        // 40-digit value, which also equals Re star_upper for that z0.
        let v = cos_beta0_closed_form(0.8, 0.3, std::f64::consts::FRAC_PI_2).unwrap();
        assert_abs_diff_eq!(v, 0.08252925924917630, epsilon = 1e-13);
    }

    #[test]
    fn closed_form_matches_branch_minimum() {
        let v = cos_beta0_closed_form(0.8, 0.3, std::f64::consts::FRAC_PI_2).unwrap();
        let geom = BisectorGeometry::new(0.8, c(0.8, 0.3)).unwrap();
        assert_abs_diff_eq!(v, geom.cos_beta0, epsilon = 1e-13);
        assert_eq!(geom.cos_beta0, geom.star_upper[0].min(geom.star_lower[0]));
    }

    #[test]
    fn closed_form_degenerate_sin() {
        // sin(alpha) = 0 kills the second term: cos_beta0 = (a + r)/2.
        let v = cos_beta0_closed_form(0.7, 0.2, 0.0).unwrap();
        assert_abs_diff_eq!(v, 0.45, epsilon = 1e-15);
    }

    #[test]
    fn bisector_geometry_fields() {
        let g = BisectorGeometry::new(0.8, c(0.8, 0.3)).unwrap();
        assert_abs_diff_eq!(g.r, 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(g.alpha, std::f64::consts::FRAC_PI_2, epsilon = 1e-15);
        assert!(g.star_upper[1] >= 0.0);
        assert_abs_diff_eq!(g.beta0.cos(), g.cos_beta0, epsilon = 1e-14);
    }

    #[test]
    fn conjugated_configuration() {
        let cfg = RootConfiguration::new(0.4, vec![c(0.2, 0.7), c(-0.5, -0.1)]).unwrap();
        let conj = cfg.conjugated();
        assert_eq!(conj.a(), 0.4);
        assert_eq!(conj.zeros()[0], c(0.2, -0.7));
        assert_eq!(conj.conjugated(), cfg);
    }
}
