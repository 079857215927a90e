//! Constructibility verdicts, each carrying a witness that the `check_*`
//! functions re-verify through separate code paths.
//!
//! A real root of a rational cubic is constructible iff the cubic has a
//! rational root: otherwise the cubic is irreducible and the root has degree
//! 3 over the rationals, which no tower of quadratic extensions reaches.

use std::fmt;

use num::{Integer, One, Zero};

use super::cubic::build_division_cubic_int;
use super::newton::{check_dumas_certificate, irreducible_by_dumas, DumasCertificate, DumasOutcome};
use super::polynomial::RationalPolynomial;
use super::roots::{candidates, factor_over_rationals, rational_roots, Factorization};
use crate::error::{Error, Result};
use crate::exact::{factorize, integer, is_fermat_prime, is_prime, positive_divisors, BigInt, BigRational};
use crate::geometry::{self, HypocycloidShape, PlanePoint};

/// Prime used for Newton-polygon certificates of the division cubics.
pub const CERTIFICATE_PRIME: u64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Every division point has rational coordinates, listed by index.
    RationalPoints(Vec<(BigRational, BigRational)>),
    /// The cubic has a rational root; the factorization shows it.
    RationalRoot { poly: RationalPolynomial, factorization: Factorization },
    /// Eisenstein–Dumas certificate of irreducibility.
    NewtonPolygon { poly: RationalPolynomial, certificate: DumasCertificate },
    /// None of the rational-root-theorem candidates is a root.
    NoRationalRoot { poly: RationalPolynomial, candidates_checked: usize },
    /// `chain[i + 1]` divides `chain[i]`, so the division points for the last
    /// entry are among those for the first. `terminal` settles the last entry.
    Reduction { chain: Vec<u64>, terminal: Box<Witness> },
    /// Prime factorization, for the regular-polygon criterion.
    PrimeFactorization(Vec<(u64, u32)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructibilityVerdict {
    pub constructible: bool,
    pub witness: Witness,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::RationalPoints(points) => {
                f.write_str("rational coordinates")?;
                for (i, (x, y)) in points.iter().enumerate() {
                    write!(f, "{} ({x}, {y})", if i == 0 { "" } else { "," })?;
                }
                Ok(())
            }
            Witness::RationalRoot { factorization, .. } => {
                write!(f, "rational root factorization {factorization}")
            }
            Witness::NewtonPolygon { poly, certificate } => write!(
                f,
                "Newton polygon of {poly} at p={} is one segment of slope {} (Eisenstein-Dumas: irreducible)",
                certificate.polygon.prime, certificate.slope
            ),
            Witness::NoRationalRoot { poly, candidates_checked } => write!(
                f,
                "{poly} has no rational root among {candidates_checked} candidates (irreducible cubic)"
            ),
            Witness::Reduction { chain, terminal } => {
                let chain: Vec<String> = chain.iter().map(u64::to_string).collect();
                write!(f, "reduction {}; {terminal}", chain.join(" -> "))
            }
            Witness::PrimeFactorization(factors) => {
                if factors.is_empty() {
                    return f.write_str("prime factorization 1 (empty)");
                }
                let parts: Vec<String> = factors
                    .iter()
                    .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
                    .collect();
                write!(f, "prime factorization {}", parts.join(" * "))
            }
        }
    }
}

/// Decides whether the real roots of a rational cubic are constructible.
pub fn cubic_constructibility(poly: &RationalPolynomial) -> Result<ConstructibilityVerdict> {
    if poly.degree() != 3 {
        return Err(Error::invalid(format!("expected a cubic, got degree {}", poly.degree())));
    }
    // Dumas needs a nonzero constant term; zero is itself a rational root.
    if !poly.coefficient(0).is_zero() {
        if let DumasOutcome::Irreducible(certificate) = irreducible_by_dumas(poly, CERTIFICATE_PRIME)? {
            return Ok(ConstructibilityVerdict {
                constructible: false,
                witness: Witness::NewtonPolygon { poly: poly.clone(), certificate },
            });
        }
    }
    if !rational_roots(poly)?.is_empty() {
        let factorization = factor_over_rationals(poly)?;
        return Ok(ConstructibilityVerdict {
            constructible: true,
            witness: Witness::RationalRoot { poly: poly.clone(), factorization },
        });
    }
    Ok(ConstructibilityVerdict {
        constructible: false,
        witness: Witness::NoRationalRoot { poly: poly.clone(), candidates_checked: candidates(poly)?.len() },
    })
}

/// Whether all `n`-division points of the tricuspoid are constructible
/// without the curve drawn. True exactly for `n` dividing 6.
pub fn tricuspoid_division_constructible(n: u64) -> Result<ConstructibilityVerdict> {
    match n {
        0 => Err(Error::invalid("n must be positive")),
        1 => Ok(ConstructibilityVerdict {
            constructible: true,
            witness: Witness::RationalPoints(vec![(integer(3), integer(0))]),
        }),
        2 => Ok(ConstructibilityVerdict {
            constructible: true,
            witness: Witness::RationalPoints(vec![(integer(-1), integer(0)), (integer(3), integer(0))]),
        }),
        3 | 6 => cubic_constructibility(&build_division_cubic_int(n)?),
        _ if !n.is_multiple_of(3) => cubic_constructibility(&build_division_cubic_int(n)?),
        9 => cubic_constructibility(&build_division_cubic_int(9)?),
        _ => {
            let mut m = n;
            while m.is_multiple_of(3) {
                m /= 3;
            }
            // m > 2 is coprime to 3 and settled by its own cubic; otherwise
            // 9 divides n.
            let target = if m > 2 { m } else { 9 };
            let inner = tricuspoid_division_constructible(target)?;
            Ok(ConstructibilityVerdict {
                constructible: inner.constructible,
                witness: Witness::Reduction { chain: vec![n, target], terminal: Box::new(inner.witness) },
            })
        }
    }
}

/// Regular `n`-gon: `n` is a power of two times distinct Fermat primes.
pub fn gauss_wantzel(n: u64) -> Result<ConstructibilityVerdict> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let factors = factorize(n)?;
    let constructible = factors
        .iter()
        .all(|&(p, e)| p == 2 || (e == 1 && is_fermat_prime(p)));
    Ok(ConstructibilityVerdict { constructible, witness: Witness::PrimeFactorization(factors) })
}

// Checkers.

/// Re-verifies a cubic verdict for `poly`.
pub fn check_cubic_verdict(poly: &RationalPolynomial, verdict: &ConstructibilityVerdict) -> bool {
    match &verdict.witness {
        Witness::RationalRoot { poly: p, factorization } => {
            verdict.constructible
                && p == poly
                && factorization.expand() == *poly
                && factorization.factors.iter().any(|(f, _)| f.degree() == 1)
        }
        Witness::NewtonPolygon { poly: p, certificate } => {
            !verdict.constructible && p == poly && poly.degree() == 3 && check_dumas_certificate(poly, certificate)
        }
        Witness::NoRationalRoot { poly: p, .. } => {
            !verdict.constructible && p == poly && poly.degree() == 3 && has_no_rational_root(poly)
        }
        _ => false,
    }
}

/// Exhaustive rational-root-theorem search, written against the cleared
/// integer coefficients directly.
fn has_no_rational_root(poly: &RationalPolynomial) -> bool {
    let Ok((_, ints)) = poly.primitive_integer_form() else {
        return false;
    };
    let (Some(constant), Some(lead)) = (ints.first(), ints.last()) else {
        return false;
    };
    if constant.is_zero() {
        return false;
    }
    let (Ok(ps), Ok(qs)) = (positive_divisors(constant), positive_divisors(lead)) else {
        return false;
    };
    for p in &ps {
        for q in &qs {
            let (p, q) = (BigInt::from(p.clone()), BigInt::from(q.clone()));
            if !p.gcd(&q).is_one() {
                continue;
            }
            for p in [p.clone(), -p] {
                // q^d * f(p/q) = sum a_i p^i q^(d-i)
                let d = ints.len() - 1;
                let value: BigInt = ints
                    .iter()
                    .enumerate()
                    .map(|(i, a)| a * num::pow(p.clone(), i) * num::pow(q.clone(), d - i))
                    .sum();
                if value.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

// Implicit equation of the tricuspoid with cusps on the circle of radius 3:
// (x^2 + y^2)^2 + 18(x^2 + y^2) - 27 = 8(x^3 - 3xy^2).
fn on_tricuspoid(x: &BigRational, y: &BigRational) -> bool {
    let r2 = x * x + y * y;
    let lhs = &r2 * &r2 + integer(18) * &r2 - integer(27);
    let rhs = integer(8) * (x * x * x - integer(3) * x * y * y);
    lhs == rhs
}

/// Re-verifies a tricuspoid verdict for `n`.
pub fn check_tricuspoid_verdict(n: u64, verdict: &ConstructibilityVerdict) -> bool {
    if n == 0 {
        return false;
    }
    match &verdict.witness {
        Witness::RationalPoints(points) => {
            if !verdict.constructible || points.len() as u64 != n {
                return false;
            }
            let Ok(report) = geometry::division_points(&HypocycloidShape::tricuspoid(), n) else {
                return false;
            };
            points.iter().zip(&report.points).all(|((x, y), p)| {
                let exact = PlanePoint { x: crate::exact::to_f64(x), y: crate::exact::to_f64(y) };
                on_tricuspoid(x, y) && exact.distance(&p.point) < 1e-9
            })
        }
        Witness::RationalRoot { .. } | Witness::NewtonPolygon { .. } | Witness::NoRationalRoot { .. } => {
            match build_division_cubic_int(n) {
                Ok(f) => check_cubic_verdict(&f, verdict),
                Err(_) => false,
            }
        }
        Witness::Reduction { chain, terminal } => {
            if verdict.constructible || chain.len() < 2 || chain[0] != n {
                return false;
            }
            if !chain.windows(2).all(|w| w[1] < w[0] && w[0] % w[1] == 0) {
                return false;
            }
            let last = *chain.last().expect("nonempty");
            let inner = ConstructibilityVerdict { constructible: false, witness: (**terminal).clone() };
            check_tricuspoid_verdict(last, &inner)
        }
        Witness::PrimeFactorization(_) => false,
    }
}

/// Re-verifies a regular-polygon verdict for `n`.
pub fn check_gauss_wantzel_verdict(n: u64, verdict: &ConstructibilityVerdict) -> bool {
    let Witness::PrimeFactorization(factors) = &verdict.witness else {
        return false;
    };
    let mut product: u128 = 1;
    for &(p, e) in factors {
        if !is_prime(p) || e == 0 {
            return false;
        }
        product *= (p as u128).pow(e);
    }
    if product != n as u128 {
        return false;
    }
    let odd_part_ok = factors.iter().filter(|(p, _)| *p != 2).all(|&(p, e)| {
        // p = 2^(2^k) + 1
        let m = p - 1;
        e == 1 && m.is_power_of_two() && m.trailing_zeros().is_power_of_two()
    });
    verdict.constructible == odd_part_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    fn poly(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_integers(c)
    }

    #[test]
    fn cubic_verdicts() {
        let f3 = build_division_cubic_int(3).unwrap();
        let v = cubic_constructibility(&f3).unwrap();
        assert!(v.constructible);
        let Witness::RationalRoot { factorization, .. } = &v.witness else { panic!("{v:?}") };
        assert_eq!(factorization.to_string(), "81(2x + 3)^2(x - 3)");
        assert!(check_cubic_verdict(&f3, &v));

        let f4 = build_division_cubic_int(4).unwrap();
        let v = cubic_constructibility(&f4).unwrap();
        assert!(!v.constructible);
        let Witness::NewtonPolygon { certificate, .. } = &v.witness else { panic!("{v:?}") };
        assert_eq!(certificate.slope, rational(-2, 3));
        assert!(check_cubic_verdict(&f4, &v));

        assert!(cubic_constructibility(&poly(&[1, 1])).is_err());
    }

    #[test]
    fn f9_is_irreducible() {
        let f9 = build_division_cubic_int(9).unwrap();
        let v = cubic_constructibility(&f9).unwrap();
        assert!(!v.constructible);
        assert!(check_cubic_verdict(&f9, &v));
        assert!(rational_roots(&f9).unwrap().is_empty());
        // On the primitive form 324x^3 - 459x - 107 the 3-adic points are
        // (0,0), (1,3), (3,4): one segment of slope 4/3.
        let Witness::NewtonPolygon { certificate, .. } = &v.witness else { panic!("{v:?}") };
        assert_eq!(certificate.slope, rational(4, 3));
        assert_eq!(certificate.polygon.points, vec![(0, 0), (1, 3), (3, 4)]);
    }

    #[test]
    fn exhaustion_fallback_when_polygon_is_silent() {
        // x^3 - 3x - 1: flat polygon at 3, no rational roots
        let p = poly(&[-1, -3, 0, 1]);
        let v = cubic_constructibility(&p).unwrap();
        assert!(!v.constructible);
        assert!(matches!(v.witness, Witness::NoRationalRoot { candidates_checked: 2, .. }));
        assert!(check_cubic_verdict(&p, &v));
    }

    #[test]
    fn tricuspoid_examples() {
        let v = tricuspoid_division_constructible(6).unwrap();
        assert!(v.constructible);
        let v = tricuspoid_division_constructible(5).unwrap();
        assert!(!v.constructible);
        assert!(matches!(v.witness, Witness::NewtonPolygon { .. }));
        let v = tricuspoid_division_constructible(18).unwrap();
        assert!(!v.constructible);
        let Witness::Reduction { chain, .. } = &v.witness else { panic!("{v:?}") };
        assert_eq!(chain, &vec![18, 9]);
        let v = tricuspoid_division_constructible(12).unwrap();
        assert_eq!(v.witness.to_string().split(';').next().unwrap(), "reduction 12 -> 4");
        assert!(tricuspoid_division_constructible(0).is_err());
    }

    #[test]
    fn small_cases_have_rational_points() {
        for n in [1, 2] {
            let v = tricuspoid_division_constructible(n).unwrap();
            assert!(v.constructible);
            assert!(check_tricuspoid_verdict(n, &v));
        }
    }

    #[test]
    fn classifier_matches_divisibility() {
        for n in 1..=200u64 {
            let v = tricuspoid_division_constructible(n).unwrap();
            assert_eq!(v.constructible, 6 % n == 0, "n = {n}");
            assert!(check_tricuspoid_verdict(n, &v), "n = {n}: {}", v.witness);
        }
    }

    #[test]
    fn checker_rejects_mismatched_witnesses() {
        let v5 = tricuspoid_division_constructible(5).unwrap();
        assert!(!check_tricuspoid_verdict(7, &v5));
        let mut flipped = v5.clone();
        flipped.constructible = true;
        assert!(!check_tricuspoid_verdict(5, &flipped));
        let bogus = ConstructibilityVerdict {
            constructible: false,
            witness: Witness::Reduction { chain: vec![20, 3], terminal: Box::new(v5.witness.clone()) },
        };
        assert!(!check_tricuspoid_verdict(20, &bogus));
        let wrong_points = ConstructibilityVerdict {
            constructible: true,
            witness: Witness::RationalPoints(vec![(integer(1), integer(0)), (integer(3), integer(0))]),
        };
        assert!(!check_tricuspoid_verdict(2, &wrong_points));
    }

    #[test]
    fn gauss_wantzel_examples() {
        assert!(gauss_wantzel(17).unwrap().constructible);
        assert!(!gauss_wantzel(7).unwrap().constructible);
        let v = gauss_wantzel(9).unwrap();
        assert!(!v.constructible);
        assert_eq!(v.witness, Witness::PrimeFactorization(vec![(3, 2)]));
        assert!(gauss_wantzel(0).is_err());
        assert!(gauss_wantzel(1).unwrap().constructible);
        assert!(gauss_wantzel(4 * 3 * 5 * 17).unwrap().constructible);
        for n in 1..=500 {
            assert!(check_gauss_wantzel_verdict(n, &gauss_wantzel(n).unwrap()));
        }
        assert_eq!(gauss_wantzel(12).unwrap().witness.to_string(), "prime factorization 2^2 * 3");
    }
}
