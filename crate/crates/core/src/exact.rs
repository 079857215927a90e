//! Exact scalars and the small amount of number theory the rest of the crate
//! leans on.
//!
//! Rationals are `num`'s [`BigRational`], which is always kept reduced with a
//! positive denominator, so structural equality is value equality. Their
//! `Display` form (`"33/25"`, or `"9"` for integers) is the serialization used
//! throughout the CLI.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use num::{Integer, One, Signed, ToPrimitive, Zero};

pub use num::{BigInt, BigRational};

use crate::error::{Error, Result};

/// p-adic valuation. `Infinite` is the valuation of zero and compares greater
/// than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"num/den"` or `"num"`. A zero denominator is rejected.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| Error::invalid(format!("not a rational: {text:?}")))?;
    let den = BigInt::from_str(den).map_err(|_| Error::invalid(format!("not a rational: {text:?}")))?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

pub fn checked_div(lhs: &BigRational, rhs: &BigRational) -> Result<BigRational> {
    if rhs.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(lhs / rhs)
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Only reachable for magnitudes outside f64 range.
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exponent of `p` in a nonzero integer. Returns `Infinite` for zero.
pub fn int_valuation(n: &BigInt, p: u64) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        n = q;
        v += 1;
    }
    Valuation::Finite(v)
}

pub fn padic_valuation(q: &BigRational, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let num = int_valuation(q.numer(), p).finite().expect("nonzero numerator");
    let den = int_valuation(q.denom(), p).finite().expect("nonzero denominator");
    Ok(Valuation::Finite(num - den))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// True iff `p` is prime and `p = 2^(2^k) + 1` for some `k >= 0`.
pub fn is_fermat_prime(p: u64) -> bool {
    if p < 3 {
        return false;
    }
    let m = p - 1;
    if !m.is_power_of_two() {
        return false;
    }
    // m = 2^e with e itself a power of two
    let e = m.trailing_zeros();
    e.is_power_of_two() && is_prime(p)
}

/// Prime factorization by trial division, primes strictly increasing.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::invalid("cannot factorize 0"));
    }
    let mut n = n;
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        d += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// All positive divisors of a nonzero big integer, ascending.
///
/// Trial division; intended for coefficients of desk-scale polynomials.
pub fn positive_divisors(n: &BigInt) -> Result<Vec<BigUint>> {
    if n.is_zero() {
        return Err(Error::invalid("zero has no finite divisor set"));
    }
    let mut rest = n.magnitude().clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        factors.push((rest, 1));
    }

    let mut divisors = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut power = d.clone();
            next.push(power.clone());
            for _ in 0..e {
                power *= &p;
                next.push(power.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    Ok(divisors)
}

/// Least common multiple of the denominators, as a positive integer.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
