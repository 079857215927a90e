//! Rational roots, linear factorization, and real-root selection.

use std::fmt;

use num::{Integer, One, Signed, Zero};

use super::polynomial::RationalPolynomial;
use crate::error::{Error, Result};
use crate::exact::{positive_divisors, to_f64, BigInt, BigRational};

/// All rational roots, with multiplicity, ascending.
///
/// Candidates `±p/q` come from the divisors of the constant and leading
/// coefficients of the primitive integer form; each one is confirmed by exact
/// evaluation and deflated before the search continues.
pub fn rational_roots(poly: &RationalPolynomial) -> Result<Vec<BigRational>> {
    let (mut roots, _) = split_roots(poly)?;
    roots.sort();
    Ok(roots)
}

// Rational roots in discovery order, and the primitive integer cofactor left
// after dividing out `q x - p` for each root `p/q`. Deflating a primitive
// integer polynomial by such a factor stays integral.
fn split_roots(poly: &RationalPolynomial) -> Result<(Vec<BigRational>, Vec<BigInt>)> {
    if poly.is_zero() {
        return Err(Error::invalid("rational roots of the zero polynomial"));
    }
    let (_, mut ints) = poly.primitive_integer_form()?;
    let mut roots = Vec::new();
    while ints.len() > 1 && ints[0].is_zero() {
        roots.push(BigRational::zero());
        ints.remove(0);
    }
    while ints.len() > 1 {
        let Some((p, q)) = find_root(&ints)? else { break };
        ints = deflate(&ints, &p, &q);
        roots.push(BigRational::new(p, q));
    }
    Ok((roots, ints))
}

// `a(x) = (q x - p) b(x)`, so `b_(i-1) = (a_i + p b_i) / q` from the top.
fn deflate(ints: &[BigInt], p: &BigInt, q: &BigInt) -> Vec<BigInt> {
    let d = ints.len() - 1;
    let mut out = vec![BigInt::zero(); d];
    let mut carry = BigInt::zero();
    for i in (1..=d).rev() {
        let b = (&ints[i] + p * &carry) / q;
        out[i - 1] = b.clone();
        carry = b;
    }
    out
}

// One rational root, as `(p, q)` in lowest terms with `q > 0`, of a
// primitive integer polynomial with nonzero constant term. Candidates are
// pruned by the Cauchy bound and tested with the integer form
// `sum a_i p^i q^(d-i) = 0`.
fn find_root(ints: &[BigInt]) -> Result<Option<(BigInt, BigInt)>> {
    let lead = ints.last().expect("nonzero polynomial").abs();
    let largest = ints.iter().map(|a| a.abs()).max().expect("nonzero polynomial");
    let bound = &lead + &largest;
    let nums = positive_divisors(&ints[0])?;
    let dens = positive_divisors(&lead)?;
    for q in dens.into_iter().map(BigInt::from) {
        for p in nums.iter().map(|p| BigInt::from(p.clone())) {
            if &p * &lead > &bound * &q || !p.gcd(&q).is_one() {
                continue;
            }
            for p in [-p.clone(), p] {
                if homogeneous_eval(ints, &p, &q).is_zero() {
                    return Ok(Some((p, q)));
                }
            }
        }
    }
    Ok(None)
}

fn homogeneous_eval(ints: &[BigInt], p: &BigInt, q: &BigInt) -> BigInt {
    let mut acc = ints.last().expect("nonzero polynomial").clone();
    let mut q_power = BigInt::one();
    for a in ints.iter().rev().skip(1) {
        q_power *= q;
        acc = acc * p + a * &q_power;
    }
    acc
}

/// Rational-root-theorem candidates for a polynomial with nonzero constant
/// term, deduplicated and ascending.
pub fn candidates(poly: &RationalPolynomial) -> Result<Vec<BigRational>> {
    let (_, ints) = poly.primitive_integer_form()?;
    let constant = ints.first().expect("nonzero polynomial");
    let lead = ints.last().expect("nonzero polynomial");
    let nums = positive_divisors(constant)?;
    let dens = positive_divisors(lead)?;
    let mut out = Vec::with_capacity(2 * nums.len() * dens.len());
    for p in &nums {
        for q in &dens {
            let r = BigRational::new(BigInt::from(p.clone()), BigInt::from(q.clone()));
            out.push(-r.clone());
            out.push(r);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `unit * prod(factor_i ^ e_i)`. Factors are primitive integer polynomials
/// with positive leading coefficient; linear ones come first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRational,
    pub factors: Vec<(RationalPolynomial, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> RationalPolynomial {
        self.factors
            .iter()
            .fold(RationalPolynomial::constant(self.unit.clone()), |acc, (f, e)| &acc * &f.pow(*e))
    }

    pub fn linear_factors(&self) -> impl Iterator<Item = &(RationalPolynomial, u32)> {
        self.factors.iter().filter(|(f, _)| f.degree() == 1)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.unit.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
        }
        for (factor, e) in &self.factors {
            write!(f, "({factor})")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Splits off every rational root as a linear factor; whatever is left (if
/// of positive degree) is the last factor and has no rational roots.
pub fn factor_over_rationals(poly: &RationalPolynomial) -> Result<Factorization> {
    let (mut roots, cofactor) = split_roots(poly)?;
    roots.sort();
    let mut factors: Vec<(RationalPolynomial, u32)> = Vec::new();
    for root in &roots {
        let linear = RationalPolynomial::new(vec![
            BigRational::from_integer(-root.numer().clone()),
            BigRational::from_integer(root.denom().clone()),
        ]);
        match factors.last_mut() {
            Some((f, e)) if *f == linear => *e += 1,
            _ => factors.push((linear, 1)),
        }
    }
    // Leading coefficients of the linear factors are the root denominators.
    let mut lead = BigRational::one();
    for root in &roots {
        lead *= BigRational::from_integer(root.denom().clone());
    }
    if cofactor.len() > 1 {
        lead *= BigRational::from_integer(cofactor.last().expect("nonempty cofactor").clone());
        factors.push((RationalPolynomial::new(cofactor.into_iter().map(BigRational::from_integer).collect()), 1));
    }
    let unit = poly.leading_coefficient().expect("nonzero polynomial") / lead;
    Ok(Factorization { unit, factors })
}

/// A real root picked to match a floating coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct RootMatch {
    pub value: f64,
    /// Present when the selected root is rational.
    pub exact: Option<BigRational>,
}

/// Real roots of a polynomial of degree at most 3 as floats, with the
/// rational ones also returned exactly.
pub fn real_roots(poly: &RationalPolynomial) -> Result<Vec<RootMatch>> {
    if poly.degree() > 3 {
        return Err(Error::invalid("real root isolation is limited to degree 3"));
    }
    let factorization = factor_over_rationals(poly)?;
    let mut out: Vec<RootMatch> = rational_roots(poly)?
        .into_iter()
        .map(|r| RootMatch { value: to_f64(&r), exact: Some(r) })
        .collect();
    out.dedup_by(|a, b| a.exact == b.exact);
    for (factor, _) in factorization.factors.iter().filter(|(f, _)| f.degree() >= 2) {
        out.extend(irrational_real_roots(factor).into_iter().map(|value| RootMatch { value, exact: None }));
    }
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(out)
}

fn irrational_real_roots(poly: &RationalPolynomial) -> Vec<f64> {
    let c: Vec<f64> = poly.coefficients().iter().map(to_f64).collect();
    match c.len() {
        3 => {
            let (a, b, c0) = (c[2], c[1], c[0]);
            let disc = b * b - 4.0 * a * c0;
            if disc < 0.0 {
                return vec![];
            }
            let sq = disc.sqrt();
            // numerically stable pair
            let q = -0.5 * (b + b.signum() * sq);
            if q == 0.0 {
                return vec![0.0];
            }
            vec![q / a, c0 / q]
        }
        4 => cubic_real_roots(c[3], c[2], c[1], c[0]),
        _ => vec![],
    }
}

/// Real roots of `a x^3 + b x^2 + c x + d` via the depressed cubic.
pub fn cubic_real_roots(a: f64, b: f64, c: f64, d: f64) -> Vec<f64> {
    let (b, c, d) = (b / a, c / a, d / a);
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let mut roots = if disc > 0.0 {
        let s = disc.sqrt();
        vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt()]
    } else if p == 0.0 {
        vec![0.0]
    } else {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
            .collect()
    };
    for r in &mut roots {
        *r -= shift;
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Chooses the real root nearest `target`.
///
/// Distinct roots that are equally near (distances within `1e-9`) are an
/// error. Roots that coincide within `1e-9` are treated as one, keeping the
/// smaller.
pub fn select_root(poly: &RationalPolynomial, target: f64) -> Result<RootMatch> {
    let roots = real_roots(poly)?;
    let mut ranked: Vec<(f64, RootMatch)> = roots.into_iter().map(|r| ((r.value - target).abs(), r)).collect();
    ranked.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.value.total_cmp(&b.1.value)));
    let mut iter = ranked.into_iter();
    let (best_dist, best) = iter.next().ok_or_else(|| Error::invalid(format!("{poly} has no real roots")))?;
    if let Some((dist, other)) = iter.next() {
        if (dist - best_dist).abs() <= 1e-9 && (other.value - best.value).abs() > 1e-9 {
            return Err(Error::AmbiguousRoot(format!(
                "roots {} and {} are equally close to {target}",
                best.value, other.value
            )));
        }
        if (other.value - best.value).abs() <= 1e-9 && other.value < best.value {
            return Ok(other);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};

    fn poly(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(c)
    }

    #[test]
    fn rational_root_examples() {
        let f3 = poly(&[-2187, -2187, 0, 324]);
        assert_eq!(rational_roots(&f3).unwrap(), vec![rational(-3, 2), rational(-3, 2), integer(3)]);
        let f6 = poly(&[1296, -3888, 0, 5184]);
        assert_eq!(rational_roots(&f6).unwrap(), vec![integer(-1), rational(1, 2), rational(1, 2)]);
        assert!(rational_roots(&poly(&[-2, 0, 0, 1])).unwrap().is_empty());
        assert!(rational_roots(&RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn zero_roots_are_deflated() {
        assert_eq!(rational_roots(&poly(&[0, 0, -1, 1])).unwrap(), vec![integer(0), integer(0), integer(1)]);
        assert!(rational_roots(&poly(&[5])).unwrap().is_empty());
    }

    #[test]
    fn rational_coefficients() {
        // (x - 2/3)(x + 1/2) = x^2 - x/6 - 1/3
        let p = RationalPolynomial::new(vec![rational(-1, 3), rational(-1, 6), integer(1)]);
        assert_eq!(rational_roots(&p).unwrap(), vec![rational(-1, 2), rational(2, 3)]);
    }

    #[test]
    fn factorization_examples() {
        let f3 = poly(&[-2187, -2187, 0, 324]);
        let f = factor_over_rationals(&f3).unwrap();
        assert_eq!(f.unit, integer(81));
        assert_eq!(f.factors, vec![(poly(&[3, 2]), 2), (poly(&[-3, 1]), 1)]);
        assert_eq!(f.expand(), f3);
        assert_eq!(f.to_string(), "81(2x + 3)^2(x - 3)");

        let f6 = poly(&[1296, -3888, 0, 5184]);
        let f = factor_over_rationals(&f6).unwrap();
        assert_eq!(f.unit, integer(1296));
        assert_eq!(f.factors, vec![(poly(&[1, 1]), 1), (poly(&[-1, 2]), 2)]);
        assert_eq!(f.expand(), f6);
    }

    #[test]
    fn factorization_keeps_irreducible_cofactor() {
        // 6(x - 1)(x^2 + 2)
        let p = poly(&[-12, 12, -6, 6]);
        let f = factor_over_rationals(&p).unwrap();
        assert_eq!(f.unit, integer(6));
        assert_eq!(f.factors, vec![(poly(&[-1, 1]), 1), (poly(&[2, 0, 1]), 1)]);
        assert_eq!(f.expand(), p);
        let irreducible = poly(&[-2, 0, 0, 1]);
        let f = factor_over_rationals(&irreducible).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.expand(), irreducible);
    }

    #[test]
    fn factorization_units() {
        let p = poly(&[2, 0, -2]);
        let f = factor_over_rationals(&p).unwrap();
        assert_eq!(f.unit, integer(-2));
        assert_eq!(f.expand(), p);
        let p = RationalPolynomial::new(vec![rational(1, 6), rational(-5, 6), integer(1)]);
        let f = factor_over_rationals(&p).unwrap();
        assert_eq!(f.unit, rational(1, 6));
        assert_eq!(f.factors, vec![(poly(&[-1, 3]), 1), (poly(&[-1, 2]), 1)]);
        assert_eq!(f.expand(), p);
        let p = RationalPolynomial::new(vec![rational(-7, 2)]);
        assert_eq!(factor_over_rationals(&p).unwrap().expand(), p);
    }

    proptest::proptest! {
        #[test]
        fn factorization_re_expands(roots in proptest::collection::vec((-6i64..=6, 1i64..=4), 0..4), k in 1i64..50, neg: bool) {
            let mut p = RationalPolynomial::constant(rational(if neg { -k } else { k }, 7));
            for &(num, den) in &roots {
                p = &p * &poly(&[-num, den]);
            }
            let f = factor_over_rationals(&p).unwrap();
            proptest::prop_assert_eq!(f.expand(), p.clone());
            let found = rational_roots(&p).unwrap();
            let mut expected: Vec<BigRational> = roots.iter().map(|&(a, b)| rational(a, b)).collect();
            expected.sort();
            proptest::prop_assert_eq!(found, expected);
        }
    }

    #[test]
    fn cubic_roots() {
        let r = cubic_real_roots(1.0, 0.0, -3.0, -1.0);
        assert_eq!(r.len(), 3);
        for x in r {
            assert!((x * x * x - 3.0 * x - 1.0).abs() < 1e-12);
        }
        let r = cubic_real_roots(1.0, 0.0, 0.0, -2.0);
        assert_eq!(r.len(), 1);
        assert!((r[0] - 2f64.cbrt()).abs() < 1e-14);
    }

    #[test]
    fn selection_prefers_nearest_and_reports_exactness() {
        let f3 = poly(&[-2187, -2187, 0, 324]);
        let m = select_root(&f3, -1.5 + 1e-12).unwrap();
        assert_eq!(m.exact, Some(rational(-3, 2)));
        let m = select_root(&f3, 2.9).unwrap();
        assert_eq!(m.exact, Some(integer(3)));
        let m = select_root(&poly(&[-2, 0, 0, 1]), 1.0).unwrap();
        assert!(m.exact.is_none());
    }

    #[test]
    fn equidistant_roots_are_an_error() {
        // roots -1 and 1, target 0
        assert!(matches!(select_root(&poly(&[-1, 0, 1]), 0.0), Err(Error::AmbiguousRoot(_))));
        assert!(select_root(&poly(&[1, 0, 1]), 0.0).is_err());
    }
}
