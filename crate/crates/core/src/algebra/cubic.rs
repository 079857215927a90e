//! The cubic whose real root is the x-coordinate of the tricuspoid's first
//! `n`-division point.
//!
//! ```text
//! f_n(x) = 4 n^4 x^3
//!        - (27 n^4 - 288 n^3 + 864 n^2) x
//!        - (27 n^4 - 432 n^3 + 2448 n^2 - 6912 n + 10368)
//! ```
//!
//! It comes from equating `r^2 = (9n^2 - 96n + 288)/n^2` with the squared
//! norm of the parametrization, which squares away a sign, so `f_n` can carry
//! roots that are not the division point.

use num::Zero;

use super::polynomial::RationalPolynomial;
use super::roots::{select_root, RootMatch};
use crate::error::{Error, Result};
use crate::exact::{integer, to_f64, BigRational};
use crate::geometry::{self, HypocycloidShape};

/// `f_n` for rational `n >= 3`.
pub fn build_division_cubic(n: &BigRational) -> Result<RationalPolynomial> {
    if *n < integer(3) {
        return Err(Error::Domain(format!(
            "the division cubic needs n >= 3 (the first division point must lie on the first cusp arc), got {n}"
        )));
    }
    let horner = |coeffs: &[i64]| {
        coeffs
            .iter()
            .fold(BigRational::zero(), |acc, &c| acc * n + integer(c))
    };
    let a3 = horner(&[4, 0, 0, 0, 0]);
    let a1 = -horner(&[27, -288, 864, 0, 0]);
    let a0 = -horner(&[27, -432, 2448, -6912, 10368]);
    Ok(RationalPolynomial::new(vec![a0, a1, BigRational::zero(), a3]))
}

pub fn build_division_cubic_int(n: u64) -> Result<RationalPolynomial> {
    build_division_cubic(&BigRational::from_integer(n.into()))
}

/// The root of `f_n` that is the first `n`-division point's x-coordinate,
/// chosen by proximity to the geometric coordinate.
pub fn first_division_root(n: u64) -> Result<(f64, RootMatch)> {
    let f = build_division_cubic_int(n)?;
    let report = geometry::division_points(&HypocycloidShape::tricuspoid(), n)?;
    let x = report.points[0].point.x;
    Ok((x, select_root(&f, x)?))
}

/// `|f(x)| / |a_3|`.
pub fn normalized_residual(f: &RationalPolynomial, x: f64) -> f64 {
    let lead = f.leading_coefficient().map(to_f64).unwrap_or(1.0);
    (f.eval_f64(x) / lead).abs()
}
