//! Chain-rule factors taking θ-derivatives to x-derivatives.
//!
//! With `x = cos θ`,
//!
//! ```text
//! d^ν y / dx^ν = Σ_{μ=1}^{ν} p_{ν,μ}(x) / (1 - x²)^{c_{ν,μ}} · y^{(μ)}(θ),   c_{ν,μ} = ν - μ/2
//! ```
//!
//! Each numerator comes from the entry above (`p`) and above-left (`q`) in
//! the previous row: `(1 - x²)·p' + 2(c - 1)·x·p - q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::{rational, RationalPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorEntry {
    pub numerator: RationalPoly,
    /// Exponent `c` of `(1 - x²)` in the denominator; a half-integer.
    pub denom_exponent: BigRational,
}

impl FactorEntry {
    /// `numerator(x) / (1 - x²)^c` in floating point.
    pub fn eval(&self, x: f64) -> f64 {
        let c = num_traits::ToPrimitive::to_f64(&self.denom_exponent).unwrap_or(f64::NAN);
        self.numerator.eval_f64(x) / (1.0 - x * x).powf(c)
    }
}

/// Rows `1..=ν` of the factor pyramid; `rows[r-1][μ-1]` is entry `(r, μ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorTable {
    rows: Vec<Vec<FactorEntry>>,
}

impl FactorTable {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Row `r` (1-based), entries for `μ = 1..=r`.
    pub fn row(&self, r: usize) -> &[FactorEntry] {
        &self.rows[r - 1]
    }

    /// Entry `(r, μ)`, both 1-based.
    pub fn entry(&self, r: usize, mu: usize) -> &FactorEntry {
        &self.rows[r - 1][mu - 1]
    }

    /// The last row, i.e. the factors for the table's own order.
    pub fn last_row(&self) -> &[FactorEntry] {
        self.rows.last().map(Vec::as_slice).unwrap_or(&[])
    }
}

fn exponent(row: usize, mu: usize) -> BigRational {
    // ν - μ/2 = (2ν - μ)/2
    rational(2 * row as i64 - mu as i64, 2)
}

/// Builds rows `1..=order` in exact arithmetic.
pub fn chain_rule_table(order: usize) -> FactorTable {
    let mut rows: Vec<Vec<FactorEntry>> = Vec::with_capacity(order);
    if order == 0 {
        return FactorTable { rows };
    }
    rows.push(vec![FactorEntry {
        numerator: RationalPoly::from_ints(&[-1]),
        denom_exponent: exponent(1, 1),
    }]);
    let x = RationalPoly::from_ints(&[0, 1]);
    let zero = RationalPoly::zero();
    for r in 2..=order {
        let prev = &rows[r - 2];
        let row = (1..=r)
            .map(|mu| {
                let p = prev.get(mu - 1).map_or(&zero, |e| &e.numerator);
                let q = if mu >= 2 { &prev[mu - 2].numerator } else { &zero };
                let c = exponent(r, mu);
                let two_c_minus_one = (c.clone() - BigRational::from_integer(BigInt::from(1)))
                    * BigRational::from_integer(BigInt::from(2));
                let numerator = &(&(&RationalPoly::one_minus_x2() * &p.derivative())
                    + &(&x * p).scale(&two_c_minus_one))
                    - q;
                FactorEntry {
                    numerator,
                    denom_exponent: c,
                }
            })
            .collect();
        rows.push(row);
    }
    FactorTable { rows }
}

impl fmt::Display for FactorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            write!(f, "nu={}:", r + 1)?;
            for (mu, e) in row.iter().enumerate() {
                write!(f, "  [mu={}] ({}) / (1-x^2)^({})", mu + 1, e.numerator, e.denom_exponent)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
