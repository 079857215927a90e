use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{denominator_lcm, to_f64, BigInt, BigRational};

/// Dense univariate polynomial over the rationals. `coefficients[i]` is the
/// coefficient of `x^i`; the leading coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coefficients: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`
    pub fn linear_from_root(root: &BigRational) -> Self {
        Self::new(vec![-root.clone(), BigRational::one()])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coefficient(&self, i: usize) -> BigRational {
        self.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coefficients.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coefficients.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(BigRational::one()), |acc, _| &acc * self)
    }

    /// Scale to integer coefficients with gcd 1 and positive leading
    /// coefficient. Returns the scale `k` (so `primitive = k * self`) and the
    /// integer coefficients.
    pub fn primitive_integer_form(&self) -> Result<(BigRational, Vec<BigInt>)> {
        let lead = self.leading_coefficient().ok_or_else(|| Error::invalid("zero polynomial"))?;
        let lcm = denominator_lcm(&self.coefficients);
        let cleared: Vec<BigInt> = self
            .coefficients
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = cleared.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
        let divisor = &content * &sign;
        let ints = cleared.iter().map(|c| c / &divisor).collect();
        Ok((BigRational::new(lcm, divisor), ints))
    }

    /// The primitive integer form as a polynomial.
    pub fn primitive(&self) -> Result<Self> {
        let (_, ints) = self.primitive_integer_form()?;
        Ok(Self::new(ints.into_iter().map(BigRational::from_integer).collect()))
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading_coefficient().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coefficients.len();
        let mut rem = self.coefficients.clone();
        if rem.len() < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd - 1] / lead;
            for (j, dc) in divisor.coefficients.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(dd - 1);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::invalid(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        RationalPolynomial::new((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

/// Renders as e.g. `26244x^3 - 37179x - 8667`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let mag_text = if mag.is_integer() { mag.to_string() } else { format!("({mag})") };
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => f.write_str(&mag_text)?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
