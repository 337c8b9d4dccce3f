//! Dense polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `Σ coeffs[i]·x^i`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

pub(crate) fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational(c, 1)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `1 - x²`.
    pub fn one_minus_x2() -> Self {
        Self::from_ints(&[1, 0, -1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact division by `1 - x²` if it divides evenly.
    pub fn div_one_minus_x2(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let one = BigRational::one();
        if !self.eval(&one).is_zero() || !self.eval(&-one).is_zero() {
            return None;
        }
        // p = (1 - x²)·q  ⇔  -p = (x² - 1)·q; long division from the top
        let mut rem: Vec<BigRational> = self.coeffs.iter().map(|c| -c).collect();
        let deg = rem.len() - 1;
        let mut q = vec![BigRational::zero(); deg - 1];
        for i in (2..=deg).rev() {
            let lead = rem[i].clone();
            q[i - 2] = lead.clone();
            rem[i] = BigRational::zero();
            rem[i - 2] += lead;
        }
        debug_assert!(rem.iter().all(Zero::is_zero));
        Some(Self::new(q))
    }
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_degrees() {
        assert_eq!(RationalPoly::from_ints(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(RationalPoly::from_ints(&[0, 0]).degree(), None);
        assert!(RationalPoly::from_ints(&[0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let p = RationalPoly::from_ints(&[1, 1]);
        let q = RationalPoly::from_ints(&[-1, 1]);
        assert_eq!(&p * &q, RationalPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(&p + &q, RationalPoly::from_ints(&[0, 2]));
        assert_eq!(&p - &p, RationalPoly::zero());
        assert_eq!(RationalPoly::from_ints(&[5, 3, 2]).derivative(), RationalPoly::from_ints(&[3, 4]));
    }

    #[test]
    fn exact_division_by_one_minus_x2() {
        let q = RationalPoly::from_ints(&[3, -1, 4]);
        let p = &RationalPoly::one_minus_x2() * &q;
        assert_eq!(p.div_one_minus_x2(), Some(q));
        assert_eq!(RationalPoly::from_ints(&[1, 1]).div_one_minus_x2(), None);
        assert_eq!(RationalPoly::zero().div_one_minus_x2(), Some(RationalPoly::zero()));
    }

    #[test]
    fn display() {
        assert_eq!(RationalPoly::from_ints(&[-9, 0, -72, 0, -24]).to_string(), "-24x^4 - 72x^2 - 9");
        assert_eq!(RationalPoly::from_ints(&[0, 1]).to_string(), "x");
        assert_eq!(RationalPoly::from_ints(&[-1]).to_string(), "-1");
        assert_eq!(RationalPoly::new(vec![rational(1, 3)]).to_string(), "1/3");
    }
}
