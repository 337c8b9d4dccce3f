//! Limits of the chain-rule expansion at `x = ±1`.
//!
//! At the endpoints every factor's denominator vanishes. Over the common
//! denominator `sin^{2ν-1} θ` the numerator vanishes too, so the limit is
//! found by repeated L'Hôpital steps in θ, cancelling shared powers of
//! `sin θ` after each step, until the denominator is nonzero at `θ = 0, π`.
//! What is left is a set of exact constants multiplying even θ-derivatives
//! of `y`, which are cosine sums over the DCT-I spectrum.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::poly::RationalPoly;
use super::pyramid::chain_rule_table;
use super::trig::TrigPoly;
use crate::error::{invalid, Result, SpecError};

pub const DEFAULT_MAX_ORDER: usize = 8;
/// Environment variable overriding [`DEFAULT_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "SPECDIFF_MAX_NU";
/// L'Hôpital iterations allowed before giving up.
pub const STEP_BUDGET: usize = 64;

/// Exact endpoint constants for one derivative order.
///
/// The limit at `θ = 0` is `Σ_μ C0[μ]·y^{(μ)}(0) / D0`, likewise at `θ = π`;
/// only even `μ` appear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointConstants {
    pub order: usize,
    pub d_zero: BigRational,
    pub d_pi: BigRational,
    pub c_zero: BTreeMap<usize, BigRational>,
    pub c_pi: BTreeMap<usize, BigRational>,
    /// L'Hôpital steps taken.
    pub steps: usize,
}

impl EndpointConstants {
    /// `P(k) = Σ_m (C[2m]/D)·(-1)^m·k^{2m}`: with `y^{(2m)}(0) = (1/M)Σ' (-1)^m k^{2m} Y_k`,
    /// the value at `x = +1` is `(1/M)(P(N)Y_N + 2Σ_{k=1}^{N-1} P(k)Y_k)`.
    pub fn weight_poly_at_plus_one(&self) -> RationalPoly {
        weight_poly(&self.c_zero, &self.d_zero)
    }

    /// Weights for `x = -1`, applied as `(1/M)(P(N)(-1)^N Y_N + 2Σ P(k)(-1)^k Y_k)`.
    pub fn weight_poly_at_minus_one(&self) -> RationalPoly {
        weight_poly(&self.c_pi, &self.d_pi)
    }
}

fn weight_poly(c: &BTreeMap<usize, BigRational>, d: &BigRational) -> RationalPoly {
    let len = c.keys().max().map_or(0, |m| m + 1);
    let mut coeffs = vec![BigRational::zero(); len];
    for (&mu, cm) in c {
        let sign = if (mu / 2) % 2 == 0 { 1 } else { -1 };
        coeffs[mu] = cm / d * BigRational::from_integer(BigInt::from(sign));
    }
    RationalPoly::new(coeffs)
}

/// Runs the symbolic limit computation for order `ν` (no caching).
pub fn derive_endpoint_constants(order: usize) -> Result<EndpointConstants> {
    if order == 0 {
        return invalid("endpoint limits need order >= 1");
    }
    let table = chain_rule_table(order);
    let mut numer: BTreeMap<usize, TrigPoly> = table
        .last_row()
        .iter()
        .enumerate()
        .map(|(i, e)| (i + 1, TrigPoly::poly_times_sin_pow(&e.numerator, i)))
        .collect();
    let mut denom = TrigPoly::poly_times_sin_pow(&RationalPoly::from_ints(&[1]), 2 * order - 1);
    cancel_sin(&mut numer, &mut denom);

    let mut steps = 0;
    while denom.at_zero().is_zero() {
        if steps == STEP_BUDGET {
            return Err(SpecError::InternalLogic(format!(
                "endpoint limit for order {order} did not resolve within {STEP_BUDGET} steps"
            )));
        }
        if !denom.at_pi().is_zero() {
            return Err(SpecError::InternalLogic(format!(
                "order {order}: denominator vanishes at θ=0 but not at θ=π"
            )));
        }
        // y^{(odd)} vanishes at both endpoints, so only even-order terms must
        for (&mu, g) in &numer {
            if mu % 2 == 0 && !(g.at_zero().is_zero() && g.at_pi().is_zero()) {
                return Err(SpecError::InternalLogic(format!(
                    "order {order}, step {steps}: numerator term for y^({mu}) is not 0/0"
                )));
            }
        }
        let mut next: BTreeMap<usize, TrigPoly> = BTreeMap::new();
        for (&mu, g) in &numer {
            // d/dθ [g·y^(μ)] = g'·y^(μ) + g·y^(μ+1)
            accumulate(&mut next, mu, g.derivative());
            accumulate(&mut next, mu + 1, g.clone());
        }
        next.retain(|_, g| !g.is_zero());
        numer = next;
        denom = denom.derivative();
        cancel_sin(&mut numer, &mut denom);
        steps += 1;
    }

    let d_zero = denom.at_zero();
    let d_pi = denom.at_pi();
    if d_pi.is_zero() {
        return Err(SpecError::InternalLogic(format!(
            "order {order}: denominator vanishes at θ=π but not at θ=0"
        )));
    }
    let mut c_zero = BTreeMap::new();
    let mut c_pi = BTreeMap::new();
    for (&mu, g) in numer.iter().filter(|(mu, _)| **mu % 2 == 0) {
        let (z, p) = (g.at_zero(), g.at_pi());
        if !z.is_zero() {
            c_zero.insert(mu, z);
        }
        if !p.is_zero() {
            c_pi.insert(mu, p);
        }
    }
    Ok(EndpointConstants {
        order,
        d_zero,
        d_pi,
        c_zero,
        c_pi,
        steps,
    })
}

fn accumulate(map: &mut BTreeMap<usize, TrigPoly>, mu: usize, term: TrigPoly) {
    let slot = map.entry(mu).or_default();
    *slot = slot.add(&term);
}

/// Divides numerator terms and denominator by the largest shared `sin^k θ`.
fn cancel_sin(numer: &mut BTreeMap<usize, TrigPoly>, denom: &mut TrigPoly) {
    const LIMIT: usize = 4 * STEP_BUDGET;
    let k = numer
        .values()
        .map(|g| g.sin_power(LIMIT))
        .chain(std::iter::once(denom.sin_power(LIMIT)))
        .min()
        .unwrap_or(0);
    for _ in 0..k {
        for g in numer.values_mut() {
            *g = g.div_sin().expect("sin power already checked");
        }
        *denom = denom.div_sin().expect("sin power already checked");
    }
}

/// Endpoint-limit evaluator with an order cap and a shared memo of
/// [`EndpointConstants`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndpointEngine {
    pub max_order: usize,
}

impl Default for EndpointEngine {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

type Memo = RwLock<HashMap<usize, Arc<EndpointConstants>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

impl EndpointEngine {
    pub fn new(max_order: usize) -> Self {
        Self { max_order }
    }

    /// Cap from `SPECDIFF_MAX_NU` if set and parseable, otherwise the default.
    pub fn from_env() -> Self {
        let max_order = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_ORDER);
        Self { max_order }
    }

    /// Memoized constants for `order`. Concurrent first calls may both derive
    /// the constants; the results are identical and one of them is kept.
    pub fn constants(&self, order: usize) -> Result<Arc<EndpointConstants>> {
        if order > self.max_order {
            return Err(SpecError::UnsupportedOrder {
                order,
                max: self.max_order,
            });
        }
        if let Some(hit) = memo().read().expect("memo poisoned").get(&order) {
            return Ok(Arc::clone(hit));
        }
        let fresh = Arc::new(derive_endpoint_constants(order)?);
        let mut guard = memo().write().expect("memo poisoned");
        Ok(Arc::clone(guard.entry(order).or_insert(fresh)))
    }

    /// `(d^ν y/dx^ν at x = +1, at x = -1)` for the function whose DCT-I
    /// spectrum is `spectrum` (length `N + 1`, `N >= 2`).
    pub fn limits(&self, spectrum: &[f64], order: usize) -> Result<(f64, f64)> {
        if spectrum.len() < 3 {
            return invalid(format!("endpoint limits need N >= 2, got {} modes", spectrum.len()));
        }
        let consts = self.constants(order)?;
        let plus = to_f64_poly(&consts.weight_poly_at_plus_one());
        let minus = to_f64_poly(&consts.weight_poly_at_minus_one());
        let n = spectrum.len() - 1;
        let m = (2 * n) as f64;
        let (mut at_plus, mut at_minus) = (0.0, 0.0);
        for (k, &yk) in spectrum.iter().enumerate().skip(1) {
            let kf = k as f64;
            let weight = if k == n { 1.0 } else { 2.0 };
            let alt = if k % 2 == 0 { 1.0 } else { -1.0 };
            at_plus += weight * horner(&plus, kf) * yk;
            at_minus += weight * horner(&minus, kf) * alt * yk;
        }
        Ok((at_plus / m, at_minus / m))
    }
}

fn to_f64_poly(p: &RationalPoly) -> Vec<f64> {
    p.coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect()
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Endpoint values using the environment-configured engine.
pub fn endpoint_limits(spectrum: &[f64], order: usize) -> Result<(f64, f64)> {
    EndpointEngine::from_env().limits(spectrum, order)
}

impl fmt::Display for EndpointConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nu={} (after {} L'Hopital steps)", self.order, self.steps)?;
        writeln!(f, "  theta=0:  D={}", self.d_zero)?;
        for (mu, c) in &self.c_zero {
            writeln!(f, "    C[y^({mu})] = {c}")?;
        }
        writeln!(f, "  theta=pi: D={}", self.d_pi)?;
        for (mu, c) in &self.c_pi {
            writeln!(f, "    C[y^({mu})] = {c}")?;
        }
        writeln!(f, "  weights at x=+1: P(k) = {}", self.weight_poly_at_plus_one().to_string().replace('x', "k"))?;
        write!(f, "  weights at x=-1: P(k) = {}", self.weight_poly_at_minus_one().to_string().replace('x', "k"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebfourier::poly::rational;

    #[test]
    fn first_order_constants() {
        let c = derive_endpoint_constants(1).unwrap();
        assert_eq!(c.steps, 1);
        assert_eq!(c.weight_poly_at_plus_one(), RationalPoly::from_ints(&[0, 0, 1]));
        assert_eq!(c.weight_poly_at_minus_one(), RationalPoly::from_ints(&[0, 0, -1]));
    }

    #[test]
    fn second_order_constants() {
        let c = derive_endpoint_constants(2).unwrap();
        let want = RationalPoly::new(vec![
            rational(0, 1),
            rational(0, 1),
            rational(-1, 3),
            rational(0, 1),
            rational(1, 3),
        ]);
        assert_eq!(c.weight_poly_at_plus_one(), want);
        assert_eq!(c.weight_poly_at_minus_one(), want);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(derive_endpoint_constants(0).is_err());
        let engine = EndpointEngine::new(3);
        assert_eq!(
            engine.constants(4).unwrap_err(),
            SpecError::UnsupportedOrder { order: 4, max: 3 }
        );
        assert!(engine.limits(&[1.0, 2.0], 1).is_err());
    }

    #[test]
    fn memo_returns_identical_constants() {
        let engine = EndpointEngine::default();
        let a = engine.constants(3).unwrap();
        let b = engine.constants(3).unwrap();
        assert_eq!(*a, *b);
    }

    #[test]
    fn concurrent_population() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| EndpointEngine::default().constants(5).unwrap()))
            .collect();
        let all: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(all.windows(2).all(|w| w[0] == w[1]));
    }
}
