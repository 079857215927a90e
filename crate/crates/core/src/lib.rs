//! Division points of rational hypocycloids.
//!
//! The crate computes the `n`-division points of the scaled `c`-hypocycloid
//! (`c = a/b > 1`) exactly where the radius is rational and numerically
//! elsewhere, cross-checks every closed form against adaptive quadrature, and
//! classifies straightedge-and-compass constructibility for regular polygons
//! and for the division points of the tricuspoid.
//!
//! Module map:
//!
//! - [`exact`]: big rationals, p-adic valuations, trial-division number theory.
//! - [`geometry`]: parametrization, polar radius, arclength and its inverse,
//!   division points.
//! - [`algebra`]: rational polynomials, Newton polygons, the division cubic
//!   family `f_n`, and constructibility verdicts with checkable witnesses.
//! - [`oracle`]: Gauss–Kronrod quadrature of the curve speed and bisection
//!   inversion, used to validate the closed forms.
//! - [`cli`]: report serialization (JSON/CSV/SVG) and the command-line driver.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod oracle;

pub use error::{Error, Result};
pub use exact::{BigInt, BigRational, Valuation};
pub use geometry::{ArcPosition, DivisionPoint, DivisionReport, HypocycloidShape, PlanePoint};
