//! Numerical stress-testing and exact certification of a critical-point
//! lower bound for polynomials with zeros in the closed unit disk.
//!
//! The object of study: a monic polynomial `p` of degree `n >= 2` whose
//! zeros all lie in `|z| <= 1`, one of them a real `a` in (0,1). Under the
//! hypotheses
//!
//! ```text
//! 1 - (1 - |p(0)|)^(1/n)  <=  lam  <=  sin(pi/n),    lam < a,    rho_1 >= 1
//! ```
//!
//! (`rho_1` = distance from `a` to the nearest critical point), some
//! critical point `zeta_0` satisfies
//!
//! ```text
//! Re zeta_0  >=  (a - lam(lam + 2)/a) / 2.
//! ```
//!
//! This crate verifies that bound and every ingredient of its proof, two
//! ways at once:
//!
//! * **numerically** — configurable root finding
//!   ([`polynomial::Polynomial`]), bisector geometry
//!   ([`geometry::BisectorGeometry`]), the extremal one-dimensional
//!   optimization ([`extremal`]), and the full pipeline
//!   ([`theorem::theorem_verdict`]) under randomized stress suites
//!   ([`harness`]);
//! * **exactly** — the algebraic identities behind the extremal analysis
//!   are certified in rational arithmetic with zero rounding
//!   ([`extremal::exact`]), so the key factorization and the location of
//!   the relevant quartic root are facts, not observations.
//!
//! The `sendovlab` binary exposes the suites on the command line; the book
//! under `book/` walks through the mathematics chapter by chapter, and its
//! snippets are compiled as doc-tests via the [`guide`] module.
//!
//! # Quick start
//!
//! ```
//! use num_complex::Complex64;
//! use sendovlab::geometry::RootConfiguration;
//! use sendovlab::theorem::{theorem_verdict, VerdictStatus};
//!
//! let cfg = RootConfiguration::new(0.6, vec![Complex64::new(-0.2, 0.0)])?;
//! let verdict = theorem_verdict(&cfg, 0.25, 1e-9);
//! // rho_1 = 0.4 < 1: hypotheses fail, so the statement is vacuous here —
//! // but the chain data is still recorded and the bound still holds.
//! assert_eq!(verdict.status, VerdictStatus::Vacuous);
//! assert!(verdict.witness.unwrap()[0] >= verdict.bound);
//! # Ok::<(), sendovlab::geometry::GeometryError>(())
//! ```

mod dd;
mod search;

pub mod extremal;
pub mod harness;
pub mod geometry;
pub mod polynomial;
pub mod theorem;
