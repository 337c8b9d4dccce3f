//! Exact expressions `A(cos θ) + B(cos θ)·sin θ`.

use num_rational::BigRational;
use num_traits::One;

use super::poly::RationalPoly;

/// `A(c) + B(c)·s` with `c = cos θ`, `s = sin θ`. Powers of `s` above one are
/// folded away with `s² = 1 - c²`, so the representation is unique.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrigPoly {
    pub cos_part: RationalPoly,
    pub sin_part: RationalPoly,
}

impl TrigPoly {
    pub fn new(cos_part: RationalPoly, sin_part: RationalPoly) -> Self {
        Self { cos_part, sin_part }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.cos_part.is_zero() && self.sin_part.is_zero()
    }

    /// `p(cos θ)·sin^k θ`.
    pub fn poly_times_sin_pow(p: &RationalPoly, k: usize) -> Self {
        let mut factor = p.clone();
        for _ in 0..k / 2 {
            factor = &factor * &RationalPoly::one_minus_x2();
        }
        if k % 2 == 0 {
            Self::new(factor, RationalPoly::zero())
        } else {
            Self::new(RationalPoly::zero(), factor)
        }
    }

    /// `d/dθ (A + B·s) = (B·c - B'·(1 - c²)) + (-A')·s`.
    pub fn derivative(&self) -> Self {
        let c = RationalPoly::from_ints(&[0, 1]);
        let b_prime = self.sin_part.derivative();
        let cos_part = &(&self.sin_part * &c) - &(&b_prime * &RationalPoly::one_minus_x2());
        Self::new(cos_part, -&self.cos_part.derivative())
    }

    pub fn add(&self, other: &TrigPoly) -> Self {
        Self::new(&self.cos_part + &other.cos_part, &self.sin_part + &other.sin_part)
    }

    /// Divides by `sin θ` when the quotient is again a `TrigPoly`.
    pub fn div_sin(&self) -> Option<Self> {
        // (A + B s)/s = B + (A/(1 - c²))·s
        let a_over = self.cos_part.div_one_minus_x2()?;
        Some(Self::new(self.sin_part.clone(), a_over))
    }

    /// Largest `k` such that `sin^k θ` divides this expression (capped at
    /// `limit`, which also bounds the zero expression).
    pub fn sin_power(&self, limit: usize) -> usize {
        let mut cur = self.clone();
        let mut k = 0;
        while k < limit {
            match cur.div_sin() {
                Some(next) => {
                    cur = next;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }

    /// Exact value at `θ = 0` (`c = 1`, `s = 0`).
    pub fn at_zero(&self) -> BigRational {
        self.cos_part.eval(&BigRational::one())
    }

    /// Exact value at `θ = π` (`c = -1`, `s = 0`).
    pub fn at_pi(&self) -> BigRational {
        self.cos_part.eval(&-BigRational::one())
    }

    pub fn eval_f64(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        self.cos_part.eval_f64(c) + self.sin_part.eval_f64(c) * s
    }
}
