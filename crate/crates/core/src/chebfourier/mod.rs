//! Chebyshev derivatives through the θ domain.
//!
//! With `x = cos θ` a function on the cosine grid becomes an even, periodic
//! function of θ whose DCT-I spectrum gives θ-derivatives directly: odd
//! orders are sine sums (DST-I), even orders cosine sums (DCT-I). The chain
//! rule maps them back to x-derivatives at interior nodes ([`pyramid`]), and
//! the endpoints `x = ±1` come from exact L'Hôpital limits ([`endpoints`]).
//!
//! This route works on the canonical interval `[-1, 1]` only, applies no
//! filtering, and is meant as a reference for [`crate::chebyshev`], which is
//! cheaper and simpler.

pub mod endpoints;
pub mod poly;
pub mod pyramid;
pub mod trig;

pub use endpoints::{derive_endpoint_constants, endpoint_limits, EndpointConstants, EndpointEngine};
pub use poly::RationalPoly;
pub use pyramid::{chain_rule_table, FactorEntry, FactorTable};
pub use trig::TrigPoly;

use std::f64::consts::PI;

use crate::error::{invalid, Result};
use crate::transforms::{dct1, dst1_eval, Direction};

/// `y^{(μ)}(θ_n)` for `μ = 1..=order` at `θ_n = πn/N`, from the DCT-I
/// spectrum `Y` of the samples. Element `μ - 1` holds order `μ`.
pub fn theta_spectral_derivatives(spectrum: &[f64], order: usize) -> Result<Vec<Vec<f64>>> {
    if order < 1 {
        return invalid("θ derivatives need order >= 1");
    }
    if spectrum.len() < 3 {
        return invalid(format!("θ derivatives need N >= 2, got {} modes", spectrum.len()));
    }
    let n = spectrum.len() - 1;
    let m = (2 * n) as f64;
    (1..=order)
        .map(|mu| {
            let power = |k: usize| (k as f64).powi(mu as i32);
            if mu % 2 == 1 {
                // (jk)^μ·j = (-1)^{(μ+1)/2} k^μ
                let sign = if ((mu + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                let w: Vec<f64> = (1..n).map(|k| sign * power(k) * spectrum[k]).collect();
                Ok(dst1_eval(&w)?.into_iter().map(|v| v / m).collect())
            } else {
                let sign = if (mu / 2) % 2 == 0 { 1.0 } else { -1.0 };
                let z: Vec<f64> = (0..=n).map(|k| sign * power(k) * spectrum[k]).collect();
                dct1(&z, Direction::Inverse)
            }
        })
        .collect()
}

/// Applies the last row of `table` at interior nodes `n = 1..N-1`:
/// `Σ_μ p_{ν,μ}(x_n)/(1 - x_n²)^{c_{ν,μ}} · y^{(μ)}(θ_n)` with `ν = theta_derivs.len()`.
pub fn interior_transform(
    theta_derivs: &[Vec<f64>],
    x: &[f64],
    table: &FactorTable,
) -> Result<Vec<f64>> {
    let order = theta_derivs.len();
    if order == 0 || order > table.order() {
        return invalid(format!(
            "have {order} θ-derivative vectors but the table holds {} rows",
            table.order()
        ));
    }
    if x.len() < 3 || theta_derivs.iter().any(|d| d.len() != x.len()) {
        return invalid("θ-derivative vectors must match the node vector, with N >= 2");
    }
    let row = table.row(order);
    let interior = 1..x.len() - 1;
    if let Some(n) = interior.clone().find(|&n| !(x[n].abs() < 1.0)) {
        return invalid(format!("interior node {n} has |x| = {} >= 1", x[n].abs()));
    }
    Ok(interior
        .map(|n| {
            row.iter()
                .zip(theta_derivs)
                .map(|(entry, d)| entry.eval(x[n]) * d[n])
                .sum()
        })
        .collect())
}

/// `ν`-th derivative of samples on the canonical cosine grid `cos(πn/N)`,
/// `N >= 2`, through the θ domain.
pub fn cheb_derivative_via_theta(y: &[f64], order: usize) -> Result<Vec<f64>> {
    cheb_derivative_via_theta_with(&EndpointEngine::from_env(), y, order)
}

/// As [`cheb_derivative_via_theta`] with an explicit endpoint engine.
pub fn cheb_derivative_via_theta_with(
    engine: &EndpointEngine,
    y: &[f64],
    order: usize,
) -> Result<Vec<f64>> {
    if y.len() < 3 {
        return invalid(format!("θ-domain route needs N >= 2, got {} samples", y.len()));
    }
    if order < 1 {
        return invalid("derivative order must be >= 1");
    }
    let n = y.len() - 1;
    let spectrum = dct1(y, Direction::Forward)?;
    let (at_plus, at_minus) = engine.limits(&spectrum, order)?;
    let thetas = theta_spectral_derivatives(&spectrum, order)?;
    let x: Vec<f64> = (0..=n).map(|i| (PI * i as f64 / n as f64).cos()).collect();
    let table = chain_rule_table(order);
    let interior = interior_transform(&thetas, &x, &table)?;

    let mut out = Vec::with_capacity(n + 1);
    out.push(at_plus);
    out.extend(interior);
    out.push(at_minus);
    Ok(out)
}

/// Human-readable dump of the factor pyramid and endpoint constants up to
/// `order`, with exact fractions.
pub fn describe(engine: &EndpointEngine, order: usize) -> Result<String> {
    let mut out = String::from("chain-rule factors p(x)/(1-x^2)^c multiplying y^(mu)(theta):\n");
    out.push_str(&chain_rule_table(order).to_string());
    out.push_str("\nendpoint constants:\n");
    for nu in 1..=order {
        out.push_str(&engine.constants(nu)?.to_string());
        out.push('\n');
    }
    Ok(out)
}
