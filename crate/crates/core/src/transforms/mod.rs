//! DFT pair, even extension, DCT-I and DST-I evaluation.
//!
//! Normalization convention throughout: forward transforms carry no prefactor,
//! inverses carry `1/M`. For the DCT-I the implied `M` is `2N`, the length of
//! the even extension.

mod fft;

pub use fft::FftPlan;

use num_complex::Complex64;

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Which transform produced a [`Spectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumLayout {
    /// Full DFT vector of length `M`; index = wavenumber mod `M`.
    Dft,
    /// DCT-I half spectrum of length `N + 1`; index = cosine mode.
    DctI,
}

/// Transform-domain coefficients in the unnormalized-forward convention.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub coeffs: Vec<Complex64>,
    pub layout: SpectrumLayout,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of distinct nonnegative modes: `floor(M/2) + 1` for a DFT,
    /// `N + 1` for a DCT-I spectrum.
    pub fn mode_count(&self) -> usize {
        match self.layout {
            SpectrumLayout::Dft => self.coeffs.len() / 2 + 1,
            SpectrumLayout::DctI => self.coeffs.len(),
        }
    }
}

/// DFT in either direction. Runs in `O(M log M)` for every length.
pub fn dft(y: &[Complex64], direction: Direction) -> Result<Vec<Complex64>> {
    if y.is_empty() {
        return invalid("dft of an empty vector");
    }
    let plan = FftPlan::new(y.len());
    Ok(match direction {
        Direction::Forward => plan.forward(y),
        Direction::Inverse => plan.inverse(y),
    })
}

pub(crate) fn to_complex(y: &[f64]) -> Vec<Complex64> {
    y.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// `[y_0, …, y_N, y_{N-1}, …, y_1]`, length `2N`.
pub fn even_extend<T: Clone>(y: &[T]) -> Result<Vec<T>> {
    if y.len() < 2 {
        return invalid(format!("even extension needs at least 2 samples, got {}", y.len()));
    }
    let n = y.len() - 1;
    let mut out = Vec::with_capacity(2 * n);
    out.extend_from_slice(y);
    out.extend(y[1..n].iter().rev().cloned());
    Ok(out)
}

/// DCT-I computed as the first `N + 1` entries of the DFT of the even
/// extension. The inverse is the same sum scaled by `1/(2N)`.
pub fn dct1(y: &[f64], direction: Direction) -> Result<Vec<f64>> {
    if y.len() < 2 {
        return invalid(format!("DCT-I needs at least 2 samples, got {}", y.len()));
    }
    let ext = even_extend(&to_complex(y))?;
    let m = ext.len();
    let spectrum = FftPlan::new(m).forward(&ext);
    let scale = match direction {
        Direction::Forward => 1.0,
        Direction::Inverse => 1.0 / m as f64,
    };
    Ok(spectrum[..y.len()].iter().map(|z| z.re * scale).collect())
}

/// Evaluates `s_n = 2 Σ_{k=1}^{N-1} w_k sin(πnk/N)` for `n = 0..=N`, where
/// `w` holds the `N - 1` interior modes. `s_0` and `s_N` are exactly zero.
pub fn dst1_eval(w: &[f64]) -> Result<Vec<f64>> {
    if w.is_empty() {
        return invalid("DST-I needs at least one interior mode");
    }
    let n = w.len() + 1;
    let m = 2 * n;
    // odd extension: Σ_k z_k e^{+jπnk/N} = 2j Σ w_k sin(πnk/N)
    let mut z = vec![Complex64::new(0.0, 0.0); m];
    for (k, &wk) in w.iter().enumerate().map(|(i, v)| (i + 1, v)) {
        z[k] = Complex64::new(wk, 0.0);
        z[m - k] = Complex64::new(-wk, 0.0);
    }
    let plan = FftPlan::new(m);
    let mut s: Vec<f64> = plan
        .inverse(&z)
        .iter()
        .take(n + 1)
        .map(|v| v.im * m as f64)
        .collect();
    s[0] = 0.0;
    s[n] = 0.0;
    Ok(s)
}
