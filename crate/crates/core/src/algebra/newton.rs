//! Newton polygons at a prime and the Eisenstein–Dumas irreducibility test.

use num::{Integer, Zero};

use super::polynomial::RationalPolynomial;
use crate::error::{Error, Result};
use crate::exact::{int_valuation, is_prime, BigRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonSegment {
    pub slope: BigRational,
    /// Horizontal extent.
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub prime: u64,
    /// `(i, v_p(a_i))` for every nonzero coefficient of the primitive integer
    /// form, by increasing `i`.
    pub points: Vec<(usize, i64)>,
    /// Lower convex hull vertices, left to right.
    pub vertices: Vec<(usize, i64)>,
    /// Ordered by strictly increasing slope.
    pub segments: Vec<PolygonSegment>,
}

impl NewtonPolygon {
    pub fn single_segment(&self) -> Option<&PolygonSegment> {
        match self.segments.as_slice() {
            [s] => Some(s),
            _ => None,
        }
    }
}

/// Outcome of the Eisenstein–Dumas test. `Indeterminate` says nothing about
/// reducibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DumasOutcome {
    Irreducible(DumasCertificate),
    Indeterminate(NewtonPolygon),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DumasCertificate {
    pub polygon: NewtonPolygon,
    pub slope: BigRational,
}

// Cross product of (b - a) and (c - a); <= 0 means b is not strictly below ac.
fn turn(a: (usize, i64), b: (usize, i64), c: (usize, i64)) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    let (bx, by) = (b.0 as i128, b.1 as i128);
    let (cx, cy) = (c.0 as i128, c.1 as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

/// Lower convex hull of `(i, v_p(a_i))` over the nonzero coefficients of the
/// polynomial's primitive integer form.
pub fn newton_polygon(poly: &RationalPolynomial, p: u64) -> Result<NewtonPolygon> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if poly.is_zero() {
        return Err(Error::invalid("Newton polygon of the zero polynomial"));
    }
    let (_, ints) = poly.primitive_integer_form()?;
    let points: Vec<(usize, i64)> = ints
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, int_valuation(c, p).finite().expect("nonzero")))
        .collect();

    let mut hull: Vec<(usize, i64)> = Vec::new();
    for &pt in &points {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
            hull.pop();
        }
        hull.push(pt);
    }

    let segments = hull
        .windows(2)
        .map(|w| {
            let length = w[1].0 - w[0].0;
            PolygonSegment {
                slope: BigRational::new((w[1].1 - w[0].1).into(), (length as i64).into()),
                length,
            }
        })
        .collect();
    Ok(NewtonPolygon { prime: p, points, vertices: hull, segments })
}

/// Eisenstein–Dumas: a single segment whose slope, in lowest terms, has
/// denominator equal to the degree forces irreducibility over the rationals.
pub fn irreducible_by_dumas(poly: &RationalPolynomial, p: u64) -> Result<DumasOutcome> {
    if poly.degree() < 2 {
        return Err(Error::invalid(format!("degree {} is below 2", poly.degree())));
    }
    if poly.coefficient(0).is_zero() {
        return Err(Error::invalid("zero constant term: x divides the polynomial, deflate first"));
    }
    let polygon = newton_polygon(poly, p)?;
    let degree = poly.degree() as usize;
    match polygon.single_segment() {
        Some(seg) if seg.length == degree && *seg.slope.denom() == (degree as i64).into() => {
            let slope = seg.slope.clone();
            Ok(DumasOutcome::Irreducible(DumasCertificate { polygon, slope }))
        }
        _ => Ok(DumasOutcome::Indeterminate(polygon)),
    }
}

/// Re-derives a Dumas certificate straight from the coefficient valuations,
/// without the hull construction: every point must lie on or above the chord
/// from `(0, v_0)` to `(d, v_d)`, and `gcd(v_d - v_0, d) = 1`.
pub fn check_dumas_certificate(poly: &RationalPolynomial, cert: &DumasCertificate) -> bool {
    let p = cert.polygon.prime;
    let degree = poly.degree();
    if degree < 2 || poly.coefficient(0).is_zero() || !is_prime(p) {
        return false;
    }
    let degree = degree as usize;
    let Ok((_, ints)) = poly.primitive_integer_form() else {
        return false;
    };
    let val = |i: usize| int_valuation(&ints[i], p).finite();
    let (Some(v0), Some(vd)) = (val(0), val(degree)) else {
        return false;
    };
    let rise = vd - v0;
    if rise.gcd(&(degree as i64)) != 1 {
        return false;
    }
    if cert.slope != BigRational::new(rise.into(), (degree as i64).into()) {
        return false;
    }
    // v_i >= v0 + i * rise / d  <=>  d * v_i >= d * v0 + i * rise
    (1..degree).all(|i| match val(i) {
        None => true,
        Some(vi) => degree as i64 * vi >= degree as i64 * v0 + i as i64 * rise,
    })
}
