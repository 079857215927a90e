//! Numerical cross-checks for the closed-form arclength.
//!
//! Arclength is recomputed by adaptive Gauss–Kronrod (7/15) quadrature of the
//! curve speed, splitting the range at every cusp first because the speed has
//! a kink there. Inversion is plain bisection on the monotone arclength map.

// `!(tol > 0.0)` also rejects NaN; the quadrature tables keep their
// published digits.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

use crate::error::{Error, Result};
use crate::exact::to_f64;
use crate::geometry::{self, HypocycloidShape};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    /// Accepted subintervals.
    pub subdivisions: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub shape: HypocycloidShape,
    pub n: u64,
    pub expected_segment: f64,
    /// Quadrature length of each segment; the last one wraps from point `n`
    /// back to point 1.
    pub segments: Vec<f64>,
    pub max_deviation: f64,
    pub tol: f64,
    pub pass: bool,
}

const MAX_DEPTH: u32 = 48;

// Kronrod abscissae on [-1, 1]; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One 15-point Kronrod estimate and its difference from the embedded
/// 7-point Gauss rule.
fn gauss_kronrod(f: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

fn adaptive(f: &impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64, depth: u32, acc: &mut QuadratureResult) {
    let (value, err) = gauss_kronrod(f, lo, hi);
    let noise = 64.0 * f64::EPSILON * value.abs();
    if err <= tol || err <= noise || depth >= MAX_DEPTH {
        acc.value += value;
        acc.error_estimate += err;
        acc.subdivisions += 1;
        return;
    }
    let mid = 0.5 * (lo + hi);
    adaptive(f, lo, mid, tol / 2.0, depth + 1, acc);
    adaptive(f, mid, hi, tol / 2.0, depth + 1, acc);
}

/// Length of the curve between `phi0` and `phi1` by adaptive quadrature of
/// the speed.
pub fn quad_arclength(shape: &HypocycloidShape, phi0: f64, phi1: f64, tol: f64) -> Result<QuadratureResult> {
    let period = shape.period();
    if !(tol > 0.0) {
        return Err(Error::invalid(format!("tolerance must be positive, got {tol}")));
    }
    if !(0.0 <= phi0 && phi0 <= phi1 && phi1 <= period + 1e-12) {
        return Err(Error::invalid(format!("need 0 <= {phi0} <= {phi1} <= {period}")));
    }
    let phi1 = phi1.min(period);
    let mut acc = QuadratureResult { value: 0.0, error_estimate: 0.0, subdivisions: 0 };
    let width = phi1 - phi0;
    if width == 0.0 {
        acc.subdivisions = 1;
        return Ok(acc);
    }

    let mut breaks = vec![phi0];
    breaks.extend(shape.cusp_angles().filter(|&t| t > phi0 && t < phi1));
    breaks.push(phi1);

    let f = |phi: f64| geometry::speed(shape, phi);
    for w in breaks.windows(2) {
        let share = tol * (w[1] - w[0]) / width;
        adaptive(&f, w[0], w[1], share, 0, &mut acc);
    }
    Ok(acc)
}

/// Angle at which the arclength from the base point reaches `s`, by
/// bisection until the bracket is narrower than `tol`.
pub fn invert_arclength_numeric(shape: &HypocycloidShape, s: f64, tol: f64) -> Result<f64> {
    let total = to_f64(&shape.total_arclength());
    if !(tol > 0.0) {
        return Err(Error::invalid(format!("tolerance must be positive, got {tol}")));
    }
    if !(0.0..=total).contains(&s) {
        return Err(Error::invalid(format!("arclength {s} outside [0, {total}]")));
    }
    let quad_tol = 1e-13;
    // The arclength map is flat at every cusp, so bisection alone cannot
    // resolve an angle there. Locate the arc first and snap to its ends.
    let snap = 1e-12 * total.max(1.0);
    let cusps: Vec<f64> = shape.cusp_angles().collect();
    let mut start = 0.0;
    let (mut lo, mut hi) = (0.0, shape.period());
    for pair in cusps.windows(2) {
        let end = start + quad_arclength(shape, pair[0], pair[1], quad_tol)?.value;
        if (s - start).abs() <= snap {
            return Ok(pair[0]);
        }
        if (s - end).abs() <= snap {
            return Ok(pair[1]);
        }
        if s < end {
            (lo, hi) = (pair[0], pair[1]);
            break;
        }
        start = end;
    }
    let arc_start = lo;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if start + quad_arclength(shape, arc_start, mid, quad_tol)?.value < s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Measures every segment between consecutive division points by quadrature
/// and compares it to `total / n`.
pub fn verify_division(shape: &HypocycloidShape, n: u64, tol: f64) -> Result<VerificationReport> {
    if !(tol > 0.0) {
        return Err(Error::invalid(format!("tolerance must be positive, got {tol}")));
    }
    let report = geometry::division_points(shape, n)?;
    let expected_segment = to_f64(&shape.total_arclength()) / n as f64;
    let quad_tol = 1e-12;

    // Point n sits at the end of the parameter range, which is also phi = 0.
    let mut prev = 0.0;
    let mut segments = Vec::with_capacity(n as usize);
    for p in &report.points {
        let phi = p.position.phi.min(shape.period());
        segments.push(quad_arclength(shape, prev, phi, quad_tol)?.value);
        prev = phi;
    }
    // The loop measured base -> P1 first; rotate so segment i runs P_i -> P_{i+1}
    // and the wraparound P_n -> P_1 comes last.
    segments.rotate_left(1);

    let max_deviation = segments
        .iter()
        .map(|s| (s - expected_segment).abs())
        .fold(0.0, f64::max);
    Ok(VerificationReport {
        shape: shape.clone(),
        n,
        expected_segment,
        segments,
        max_deviation,
        tol,
        pass: max_deviation <= tol,
    })
}
