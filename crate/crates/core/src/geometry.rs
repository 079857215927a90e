//! The scaled `c`-hypocycloid, `c = a/b` in lowest terms.
//!
//! Parametrized by the tangential angle `phi`:
//!
//! ```text
//! x(phi) = (c-1) cos(phi) + cos((c-1) phi)
//! y(phi) = (c-1) sin(phi) - sin((c-1) phi)
//! ```
//!
//! The curve closes after `phi = 2*pi*b` and has `a` cusps, at
//! `phi = 2*pi*k/c`. Each cusp-to-cusp arc has length `8(c-1)/c`, so the
//! whole curve has length `8b(c-1)`.
//!
//! Arclength positions are handled as exact rationals; only the final angle
//! and coordinates are floating point.

use std::f64::consts::PI;

use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{to_f64, BigInt, BigRational};

/// Slack allowed when a float angle is checked against a closed range.
const ANGLE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HypocycloidShape {
    a: u64,
    b: u64,
}

impl HypocycloidShape {
    /// Builds the `a/b` hypocycloid. The ratio is reduced; it must exceed 1.
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if b == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = a.gcd(&b);
        let (a, b) = (a / g.max(1), b / g.max(1));
        if a <= b {
            return Err(Error::invalid(format!("c = {a}/{b} must be greater than 1")));
        }
        Ok(HypocycloidShape { a, b })
    }

    pub fn from_ratio(c: &BigRational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::invalid(format!("c = {c} must be greater than 1")));
        }
        let a = c.numer().to_u64().ok_or_else(|| Error::invalid("numerator of c out of range"))?;
        let b = c.denom().to_u64().ok_or_else(|| Error::invalid("denominator of c out of range"))?;
        Self::new(a, b)
    }

    /// Tricuspoid, `c = 3`.
    pub fn tricuspoid() -> Self {
        HypocycloidShape { a: 3, b: 1 }
    }

    /// Number of cusps.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Turns of the rolling circle before the curve closes.
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> BigRational {
        BigRational::new(BigInt::from(self.a), BigInt::from(self.b))
    }

    pub fn c_f64(&self) -> f64 {
        self.a as f64 / self.b as f64
    }

    /// `c = 2` traces the segment `[-2, 2]` twice.
    pub fn is_degenerate(&self) -> bool {
        self.a == 2 && self.b == 1
    }

    /// Length of one cusp-to-cusp arc, `8(c-1)/c`.
    pub fn arc_length(&self) -> BigRational {
        let c = self.c();
        BigRational::from_integer(8.into()) * (&c - BigRational::one()) / c
    }

    /// Total length `8b(c-1)`.
    pub fn total_arclength(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(8 * self.b)) * (self.c() - BigRational::one())
    }

    /// Angular width of one arc, `2*pi/c`.
    pub fn arc_angle(&self) -> f64 {
        2.0 * PI * self.b as f64 / self.a as f64
    }

    /// Parameter range `[0, 2*pi*b]` covering the closed curve once.
    pub fn period(&self) -> f64 {
        2.0 * PI * self.b as f64
    }

    /// Cusp angles `2*pi*k/c` for `k = 0..=a`.
    pub fn cusp_angles(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.a).map(move |k| 2.0 * PI * (k * self.b) as f64 / self.a as f64)
    }
}

impl std::fmt::Display for HypocycloidShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b == 1 {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}/{}", self.a, self.b)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(&self, other: &PlanePoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// A point on the curve located by arclength.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcPosition {
    /// Tangential angle in `[0, 2*pi*b]`.
    pub phi: f64,
    /// Which cusp-to-cusp arc, in `[0, a)`.
    pub cusp_index: u64,
    /// Angle within the arc, in `[0, 2*pi/c]`.
    pub local_phi: f64,
    /// Arclength within the arc, in `[0, 8(c-1)/c]`.
    pub local_arclength: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisionPoint {
    /// 1-based; point `n` is the base point `(c, 0)`.
    pub index: u64,
    pub arclength: BigRational,
    pub position: ArcPosition,
    pub point: PlanePoint,
    pub r_squared: BigRational,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisionReport {
    pub shape: HypocycloidShape,
    pub n: u64,
    pub points: Vec<DivisionPoint>,
}

impl DivisionReport {
    pub fn degenerate(&self) -> bool {
        self.shape.is_degenerate()
    }
}

pub fn position(shape: &HypocycloidShape, phi: f64) -> PlanePoint {
    let k = shape.c_f64() - 1.0;
    PlanePoint {
        x: k * phi.cos() + (k * phi).cos(),
        y: k * phi.sin() - (k * phi).sin(),
    }
}

/// `r(phi) = sqrt(c^2 - 2c + 2 + 2(c-1) cos(c phi))`.
pub fn polar_radius(shape: &HypocycloidShape, phi: f64) -> f64 {
    let c = shape.c_f64();
    let r2 = c * c - 2.0 * c + 2.0 + 2.0 * (c - 1.0) * (c * phi).cos();
    r2.max(0.0).sqrt()
}

/// `|d(x, y)/d phi| = 2(c-1)|sin(c phi / 2)|`.
pub fn speed(shape: &HypocycloidShape, phi: f64) -> f64 {
    let c = shape.c_f64();
    2.0 * (c - 1.0) * (c * phi / 2.0).sin().abs()
}

/// Arclength from the start of an arc, `(8(c-1)/c) sin^2(c phi / 4)`, for
/// `phi` in `[0, 2*pi/c]`.
pub fn arclength_local(shape: &HypocycloidShape, phi: f64) -> Result<f64> {
    let width = shape.arc_angle();
    if !(phi >= -ANGLE_SLACK && phi <= width + ANGLE_SLACK) {
        return Err(Error::invalid(format!("local angle {phi} outside [0, {width}]")));
    }
    Ok(local_arclength_unchecked(shape, phi.clamp(0.0, width)))
}

fn local_arclength_unchecked(shape: &HypocycloidShape, phi: f64) -> f64 {
    let c = shape.c_f64();
    let s = (c * phi / 4.0).sin();
    8.0 * (c - 1.0) / c * s * s
}

/// Arclength from the base point, for `phi` in `[0, 2*pi*b]`.
pub fn arclength_cumulative(shape: &HypocycloidShape, phi: f64) -> Result<f64> {
    let period = shape.period();
    if !(phi >= -ANGLE_SLACK && phi <= period + ANGLE_SLACK) {
        return Err(Error::invalid(format!("angle {phi} outside [0, {period}]")));
    }
    let phi = phi.clamp(0.0, period);
    let width = shape.arc_angle();
    let k = ((phi / width).floor() as u64).min(shape.a - 1);
    let local = (phi - k as f64 * width).clamp(0.0, width);
    let arc = to_f64(&shape.arc_length());
    Ok(k as f64 * arc + local_arclength_unchecked(shape, local))
}

/// Locates the point at arclength `s` from the base point.
///
/// Arc boundaries are closed on the right: `s = j * arc` with `j >= 1` lands
/// at the end of arc `j - 1`, so `cusp_index` stays below `a`.
pub fn invert_arclength(shape: &HypocycloidShape, s: &BigRational) -> Result<ArcPosition> {
    let total = shape.total_arclength();
    if s.is_negative() || *s > total {
        return Err(Error::invalid(format!("arclength {s} outside [0, {total}]")));
    }
    let arc = shape.arc_length();
    let ratio = s / &arc;
    let mut cusp_index = ratio.floor().to_integer();
    if ratio.is_integer() && !ratio.is_zero() {
        cusp_index -= 1;
    }
    let local_arclength = s - &arc * BigRational::from_integer(cusp_index.clone());
    let cusp_index = cusp_index.to_u64().expect("cusp index fits in u64");

    // s_local = arc * sin^2(c phi / 4)
    let fraction = to_f64(&(&local_arclength / &arc)).clamp(0.0, 1.0);
    let c = shape.c_f64();
    let local_phi = (4.0 / c) * fraction.sqrt().asin();
    let phi = cusp_index as f64 * shape.arc_angle() + local_phi;

    Ok(ArcPosition { phi, cusp_index, local_phi, local_arclength })
}

/// Exact `r^2` of the `d`-th `n`-division point.
///
/// With `u = 1 + c s / (4 - 4c)` (the cosine of `c phi / 2`), the squared
/// radius is `c^2 - 2c + 2 + 2(c-1)(2u^2 - 1)`.
pub fn division_radius_sq_exact(shape: &HypocycloidShape, n: u64, d: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    if d == 0 || d > n {
        return Err(Error::invalid(format!("division index {d} outside 1..={n}")));
    }
    let s = division_arclength(shape, n, d);
    let arc = shape.arc_length();
    let local = &s - &arc * (&s / &arc).floor();
    Ok(radius_sq_from_local_arclength(shape, &local))
}

fn radius_sq_from_local_arclength(shape: &HypocycloidShape, local: &BigRational) -> BigRational {
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let four = BigRational::from_integer(4.into());
    let c = shape.c();
    let u = &one + &c * local / (&four - &four * &c);
    debug_assert!(u.abs() <= one);
    &c * &c - &two * &c + &two + &two * (&c - &one) * (&two * &u * &u - &one)
}

/// `d * total / n`, exactly.
pub fn division_arclength(shape: &HypocycloidShape, n: u64, d: u64) -> BigRational {
    shape.total_arclength() * BigRational::new(BigInt::from(d), BigInt::from(n))
}

pub fn division_points(shape: &HypocycloidShape, n: u64) -> Result<DivisionReport> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let points = (1..=n)
        .map(|d| {
            let arclength = division_arclength(shape, n, d);
            let position = invert_arclength(shape, &arclength)?;
            let point = self::position(shape, position.phi);
            let r_squared = radius_sq_from_local_arclength(shape, &position.local_arclength);
            Ok(DivisionPoint { index: d, r: point.norm(), arclength, position, point, r_squared })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DivisionReport { shape: shape.clone(), n, points })
}
