//! The real-variable extremal analysis behind the critical-point bound.
//!
//! For parameters `0 < r <= a < 1` define, with `x = cos alpha`:
//!
//! ```text
//! F(x) = x - sqrt((4 - a^2 - 2 a r x - r^2) / (a^2 + 2 a r x + r^2)) * sqrt(1 - x^2)
//! G(x) = x + sqrt((4 - a^2 + 2 a r x - r^2) / (a^2 - 2 a r x + r^2)) * sqrt(1 - x^2)
//! ```
//!
//! so that `G(x) = -F(-x)`. The chord bound from module `geometry` satisfies
//! `cos beta0 = (a + r F(cos alpha)) / 2`, so lower-bounding `F` lower-bounds
//! the chord. With `phi = a^2 - 2 a r x + r^2`, the sign of `G'` on
//! `(r/a, 1)` is the sign of the radical-free combination `G1` (and of
//! `G2 = 2 a r G1` in the `phi` variable), whose stationarity point has the
//! closed form `phi_0 = (a^2 - r^2)/(1 + r)`, i.e.
//! `x_0 = (2r + a^2 + r^2) / (2a(1 + r))`, where `G` attains its maximum
//! `(r + 2)/a` over `[r/a, 1]`. Consequently `F >= -(r+2)/a` on
//! `[-1, -r/a]`, which feeds the final inequality
//! `cos beta0 >= (a - r(r+2)/a)/2`.
//!
//! Everything here is plain `f64`; the submodule [`exact`] re-certifies the
//! polynomial identities of the reduction in exact rational arithmetic.

pub mod exact;

use serde::Serialize;

use crate::search;

/// Negative radicands within this slack of zero are rounding artifacts of
/// the endpoint algebra (e.g. `1 - x^2` at `x = ±1`) and clamp to zero;
/// anything more negative is a genuine domain violation and errors.
pub const RADICAND_SLACK: f64 = 1e-14;

/// Errors from the extremal-function domain checks.
#[derive(Debug, thiserror::Error)]
pub enum ExtremalError {
    /// Parameters must satisfy `0 < r <= a < 1`.
    #[error("need 0 < r <= a < 1, got a = {a}, r = {r}")]
    InvalidParams { a: f64, r: f64 },
    /// `x` must lie in `[-1, 1]` (up to the radicand slack).
    #[error("x = {0} lies outside [-1, 1]")]
    XOutOfRange(f64),
    /// A radicand fell below `-RADICAND_SLACK`.
    #[error("negative radicand {value:e} in {context}")]
    NegativeRadicand { value: f64, context: &'static str },
    /// `phi` must lie in `(0, 4)` for the `G1`/`G2` sign analysis.
    #[error("phi = {0} lies outside (0, 4)")]
    PhiOutOfRange(f64),
    /// Grid oracles need a minimum resolution.
    #[error("grid must have at least 256 points, got {0}")]
    GridTooCoarse(usize),
}

fn clamped_sqrt(value: f64, context: &'static str) -> Result<f64, ExtremalError> {
    if value < -RADICAND_SLACK {
        return Err(ExtremalError::NegativeRadicand { value, context });
    }
    Ok(value.max(0.0).sqrt())
}

/// `F(x) = x - sqrt((4 - a^2 - 2arx - r^2)/(a^2 + 2arx + r^2)) sqrt(1 - x^2)`.
pub fn f(a: f64, r: f64, x: f64) -> Result<f64, ExtremalError> {
    let one_minus_x2 = clamped_sqrt(1.0 - x * x, "1 - x^2 (is x in [-1,1]?)")?;
    let num = clamped_sqrt(4.0 - a * a - 2.0 * a * r * x - r * r, "4 - |z0|^2 in F")?;
    let den = a * a + 2.0 * a * r * x + r * r;
    if den <= 0.0 {
        return Err(ExtremalError::NegativeRadicand { value: den, context: "|z0|^2 in F" });
    }
    Ok(x - num / den.sqrt() * one_minus_x2)
}

/// `G(x) = x + sqrt((4 - a^2 + 2arx - r^2)/(a^2 - 2arx + r^2)) sqrt(1 - x^2)`,
/// identically `-F(-x)`.
pub fn g(a: f64, r: f64, x: f64) -> Result<f64, ExtremalError> {
    let one_minus_x2 = clamped_sqrt(1.0 - x * x, "1 - x^2 (is x in [-1,1]?)")?;
    let num = clamped_sqrt(4.0 - a * a + 2.0 * a * r * x - r * r, "4 - |z0|^2 in G")?;
    let den = a * a - 2.0 * a * r * x + r * r;
    if den <= 0.0 {
        return Err(ExtremalError::NegativeRadicand { value: den, context: "|z0|^2 in G" });
    }
    Ok(x + num / den.sqrt() * one_minus_x2)
}

/// `phi = a^2 - 2 a r x + r^2`.
pub fn phi_of_x(a: f64, r: f64, x: f64) -> f64 {
    a * a - 2.0 * a * r * x + r * r
}

/// Inverse of [`phi_of_x`]: `x = (a^2 + r^2 - phi) / (2 a r)`.
pub fn x_of_phi(a: f64, r: f64, phi: f64) -> f64 {
    (a * a + r * r - phi) / (2.0 * a * r)
}

/// The radical-free derivative surrogate
/// `G1 = phi^{3/2} (4 - phi)^{1/2} (1 - x^2)^{1/2} + 4ar(1 - x^2) - x phi (4 - phi)`;
/// its sign on `(r/a, 1)` is the sign of `G'`.
pub fn g1(a: f64, r: f64, x: f64) -> Result<f64, ExtremalError> {
    let phi = phi_of_x(a, r, x);
    if !(0.0 < phi && phi < 4.0) {
        return Err(ExtremalError::PhiOutOfRange(phi));
    }
    let sx = clamped_sqrt(1.0 - x * x, "1 - x^2 in G1")?;
    Ok(phi.powf(1.5) * (4.0 - phi).sqrt() * sx + 4.0 * a * r * (1.0 - x * x)
        - x * phi * (4.0 - phi))
}

/// `G1` transported to the `phi` variable and scaled: `G2 = 2 a r G1`, i.e.
///
/// ```text
/// G2 = phi^{3/2} (4-phi)^{1/2} (4a^2r^2 - (a^2+r^2)^2 + 2(a^2+r^2) phi - phi^2)^{1/2}
///    + 8a^2r^2 - 2(a^2+r^2)^2 + (a^2+r^2+2) phi^2 - phi^3
/// ```
pub fn g2(a: f64, r: f64, phi: f64) -> Result<f64, ExtremalError> {
    if !(0.0 < phi && phi < 4.0) {
        return Err(ExtremalError::PhiOutOfRange(phi));
    }
    let s = a * a + r * r;
    let inner = 4.0 * a * a * r * r - s * s + 2.0 * s * phi - phi * phi;
    let inner_sqrt = clamped_sqrt(inner, "4a^2r^2 - (a^2+r^2)^2 + 2(a^2+r^2)phi - phi^2 in G2")?;
    Ok(phi.powf(1.5) * (4.0 - phi).sqrt() * inner_sqrt + 8.0 * a * a * r * r - 2.0 * s * s
        + (s + 2.0) * phi * phi
        - phi * phi * phi)
}

/// The closed-form extremal data for one `(a, r)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExtremalProfile {
    /// Distinguished zero, `0 < a < 1`.
    pub a: f64,
    /// Offset radius, `0 < r <= a`.
    pub r: f64,
    /// `d = 1 - r^2`.
    pub d: f64,
    /// `e = a^2 - 1`.
    pub e: f64,
    /// Stationarity root `phi_0 = (a^2 - r^2) / (1 + r)`.
    pub phi0: f64,
    /// Maximizer `x_0 = (a^2 + r^2 - phi_0) / (2 a r)`.
    pub x0: f64,
    /// `max G` over `[r/a, 1]`, in closed form `(r + 2)/a`.
    pub g_max_value: f64,
    /// `min F` over `[-1, -r/a]`, in closed form `-(r + 2)/a`.
    pub f_lower: f64,
    /// Domain of the `G` analysis.
    pub x_interval_g: (f64, f64),
    /// Domain of the `F` bound.
    pub x_interval_f: (f64, f64),
}

/// Closed-form extremum of `G` on `[r/a, 1]` and the matching `F` bound.
/// Requires `0 < r <= a < 1`.
pub fn closed_form_extremum(a: f64, r: f64) -> Result<ExtremalProfile, ExtremalError> {
    if !(a.is_finite() && r.is_finite() && 0.0 < r && r <= a && a < 1.0) {
        return Err(ExtremalError::InvalidParams { a, r });
    }
    let phi0 = (a * a - r * r) / (1.0 + r);
    let x0 = x_of_phi(a, r, phi0);
    let g_max_value = (r + 2.0) / a;
    Ok(ExtremalProfile {
        a,
        r,
        d: 1.0 - r * r,
        e: a * a - 1.0,
        phi0,
        x0,
        g_max_value,
        f_lower: -g_max_value,
        x_interval_g: (r / a, 1.0),
        x_interval_f: (-1.0, -r / a),
    })
}

/// Brute-force maximizer of `G` over `[r/a, 1]`: dense mesh plus
/// golden-section refinement. Deliberately independent of
/// [`closed_form_extremum`] — the two paths cross-check each other.
///
/// When the bracket degenerates (`1 - r/a < 0.05`) the mesh is augmented
/// with points geometrically clustered toward `x = 1`, where the maximizer
/// migrates as `r -> a`.
pub fn grid_maximize_g(
    a: f64,
    r: f64,
    grid: usize,
    refine_iters: usize,
) -> Result<(f64, f64), ExtremalError> {
    if grid < 256 {
        return Err(ExtremalError::GridTooCoarse(grid));
    }
    if !(0.0 < r && r <= a && a < 1.0) {
        return Err(ExtremalError::InvalidParams { a, r });
    }
    let lo = r / a;
    let mesh = oracle_mesh(lo, grid);
    let eval = |x: f64| g(a, r, x).unwrap_or(f64::NEG_INFINITY);
    let (x_hat, value) = search::refine_min_on_mesh(|x| -eval(x), &mesh, refine_iters);
    Ok((x_hat, -value))
}

/// Brute-force minimizer of `F` over `[-1, -r/a]`; mirror image of
/// [`grid_maximize_g`] but evaluates `F` directly.
pub fn grid_minimize_f(
    a: f64,
    r: f64,
    grid: usize,
    refine_iters: usize,
) -> Result<(f64, f64), ExtremalError> {
    if grid < 256 {
        return Err(ExtremalError::GridTooCoarse(grid));
    }
    if !(0.0 < r && r <= a && a < 1.0) {
        return Err(ExtremalError::InvalidParams { a, r });
    }
    let hi = -(r / a);
    // Mirror the G mesh: cluster toward -1 exactly when the G mesh clusters
    // toward +1.
    let mesh: Vec<f64> = {
        let mut m: Vec<f64> = oracle_mesh(r / a, grid).into_iter().map(|x| -x).collect();
        m.reverse();
        m
    };
    debug_assert!(mesh.first().copied() == Some(-1.0) && mesh.last().copied() == Some(hi));
    let eval = |x: f64| f(a, r, x).unwrap_or(f64::INFINITY);
    let (x_hat, value) = search::refine_min_on_mesh(eval, &mesh, refine_iters);
    Ok((x_hat, value))
}

/// Mesh for the `G` oracle on `[lo, 1]`: uniform everywhere, plus a
/// geometric tail into the corner at 1 when the bracket is narrow.
fn oracle_mesh(lo: f64, grid: usize) -> Vec<f64> {
    let mut mesh = search::uniform_mesh(lo, 1.0, grid);
    if 1.0 - lo < 0.05 {
        let extra = (grid / 4).max(64);
        let width = 1.0 - lo;
        // 1 - width * 10^{-6 j / extra}: decades of refinement toward 1.
        for j in 1..=extra {
            mesh.push(1.0 - width * 10f64.powf(-6.0 * j as f64 / extra as f64));
        }
        mesh.sort_by(f64::total_cmp);
        mesh.dedup();
    }
    mesh
}

/// The final lower bound `(a - lam (lam + 2) / a) / 2` for the real part of
/// the witness critical point.
pub fn theorem_bound(a: f64, lam: f64) -> f64 {
    0.5 * (a - lam * (lam + 2.0) / a)
}
