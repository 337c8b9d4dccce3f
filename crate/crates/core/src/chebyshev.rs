//! Chebyshev-basis derivatives on cosine-spaced grids via the series rule.
//!
//! The DCT-I of the samples gives (scaled) Chebyshev coefficients, the
//! derivative's coefficients follow from an `O(N)` descending recurrence, and
//! the inverse DCT-I resamples the result on the same grid.

use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::fourier::FilterMask;
use crate::grid::{GridKind, GridSpec};
use crate::transforms::{dct1, Direction};

/// Coefficients of `Σ a_k T_k(x)`, `k = 0..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebSeries {
    pub coeffs: Vec<f64>,
}

impl ChebSeries {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Clenshaw evaluation at an arbitrary `x`.
    pub fn eval(&self, x: f64) -> f64 {
        let (mut b1, mut b2) = (0.0, 0.0);
        for &a in self.coeffs.iter().skip(1).rev() {
            let b0 = 2.0 * x * b1 - b2 + a;
            b2 = b1;
            b1 = b0;
        }
        self.coeffs.first().copied().unwrap_or(0.0) + x * b1 - b2
    }

    /// Coefficients of the derivative series, same length with a zero on top.
    pub fn derivative(&self) -> ChebSeries {
        cheb_series_derivative(self)
    }
}

/// Chebyshev coefficients of samples taken on the cosine grid `cos(πn/N)`.
///
/// `a_0 = Y_0/M`, `a_k = 2Y_k/M`, `a_N = Y_N/M` with `Y` the DCT-I and `M = 2N`.
pub fn cheb_coefficients(y: &[f64]) -> Result<ChebSeries> {
    if y.len() < 2 {
        return invalid(format!("need at least 2 samples, got {}", y.len()));
    }
    let n = y.len() - 1;
    let m = (2 * n) as f64;
    let spectrum = dct1(y, Direction::Forward)?;
    let coeffs = spectrum
        .iter()
        .enumerate()
        .map(|(k, &yk)| if k == 0 || k == n { yk / m } else { 2.0 * yk / m })
        .collect();
    Ok(ChebSeries { coeffs })
}

/// Series derivative: `b_{k-1} = b_{k+1} + 2k·a_k` from the top down, with
/// the constant term halved at the end.
pub fn cheb_series_derivative(series: &ChebSeries) -> ChebSeries {
    let a = &series.coeffs;
    let len = a.len();
    let mut b = vec![0.0; len];
    if len < 2 {
        return ChebSeries { coeffs: b };
    }
    for k in (1..len).rev() {
        let above = if k + 1 < len { b[k + 1] } else { 0.0 };
        b[k - 1] = above + 2.0 * k as f64 * a[k];
    }
    b[0] *= 0.5;
    ChebSeries { coeffs: b }
}

/// Evaluates a series at the `N + 1` cosine points `cos(πn/N)`. Shorter series
/// are zero-padded.
pub fn cheb_eval_cosine_grid(series: &ChebSeries, n: usize) -> Result<Vec<f64>> {
    if n < 1 {
        return invalid("cosine grid needs N >= 1");
    }
    if series.len() > n + 1 {
        return invalid(format!(
            "series of length {} cannot be resolved on {} points",
            series.len(),
            n + 1
        ));
    }
    let m = (2 * n) as f64;
    let mut spectrum = vec![0.0; n + 1];
    for (k, &a) in series.coeffs.iter().enumerate() {
        spectrum[k] = if k == 0 || k == n { a * m } else { a * m / 2.0 };
    }
    dct1(&spectrum, Direction::Inverse)
}

fn check_grid(len: usize, grid: &GridSpec) -> Result<()> {
    if grid.kind != GridKind::ChebyshevCosine {
        return invalid("Chebyshev derivative requires a cosine-spaced grid");
    }
    if grid.count != len {
        return invalid(format!("signal has {len} samples but the grid has {}", grid.count));
    }
    Ok(())
}

/// `ν`-th derivative of samples on a cosine grid over `[a, b]`.
///
/// The mask, if any, scales the series coefficients `a_k` once, before
/// differentiating. `order = 0` only applies the mask.
pub fn cheb_derivative(
    y: &[f64],
    grid: &GridSpec,
    order: usize,
    mask: Option<&FilterMask>,
) -> Result<Vec<f64>> {
    check_grid(y.len(), grid)?;
    let n = y.len() - 1;
    let mut series = cheb_coefficients(y)?;
    if let Some(mask) = mask {
        if mask.len() != n + 1 {
            return invalid(format!(
                "mask has {} gains but the series has {} modes",
                mask.len(),
                n + 1
            ));
        }
        for (a, g) in series.coeffs.iter_mut().zip(&mask.gains) {
            *a *= g;
        }
    }
    for _ in 0..order {
        series = cheb_series_derivative(&series);
    }
    let scale = grid.scale_correction(order);
    Ok(cheb_eval_cosine_grid(&series, n)?
        .into_iter()
        .map(|v| v / scale)
        .collect())
}

/// Complex samples, differentiated part by part.
pub fn cheb_derivative_complex(
    y: &[Complex64],
    grid: &GridSpec,
    order: usize,
    mask: Option<&FilterMask>,
) -> Result<Vec<Complex64>> {
    let re: Vec<f64> = y.iter().map(|z| z.re).collect();
    let im: Vec<f64> = y.iter().map(|z| z.im).collect();
    let dre = cheb_derivative(&re, grid, order, mask)?;
    let dim = cheb_derivative(&im, grid, order, mask)?;
    Ok(dre.into_iter().zip(dim).map(|(r, i)| Complex64::new(r, i)).collect())
}
