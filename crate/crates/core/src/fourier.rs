//! Fourier-basis derivatives of periodic samples.
//!
//! The derivative of the minimal-oscillation trigonometric interpolant is
//! taken by scaling DFT coefficient `k` by `(jk)^ν`, with negative
//! wavenumbers for `k > M/2`. For even `M` the Nyquist mode is split evenly
//! between `±M/2`, so its odd-order derivatives vanish.

use num_complex::Complex64;

use crate::error::{invalid, Result, SpecError};
use crate::grid::{GridKind, GridSpec};
use crate::transforms::{dft, to_complex, Direction, Spectrum, SpectrumLayout};

/// Relative bound on the imaginary residue tolerated on real-valued output.
pub const IMAG_RESIDUE_TOLERANCE: f64 = 1e-8;

/// Multiplicative per-mode gains for nonnegative modes `0..=K`.
///
/// For a DFT spectrum `K = floor(M/2)` and wavenumbers `k` and `M - k` share a
/// gain. For a Chebyshev series `K = N` and gain `k` scales `a_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterMask {
    pub gains: Vec<f64>,
}

impl FilterMask {
    pub fn new(gains: Vec<f64>) -> Result<Self> {
        if gains.is_empty() {
            return invalid("filter mask needs at least one gain");
        }
        if let Some(g) = gains.iter().find(|g| !(g.is_finite() && **g >= 0.0)) {
            return invalid(format!("filter gains must be finite and nonnegative, got {g}"));
        }
        Ok(Self { gains })
    }

    pub fn len(&self) -> usize {
        self.gains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gains.is_empty()
    }
}

/// Binary low-pass mask over modes `0..=k_max`: unit gain up to and
/// including `cutoff`, zero above.
pub fn lowpass_mask(k_max: usize, cutoff: usize) -> Result<FilterMask> {
    if cutoff > k_max {
        return invalid(format!("cutoff {cutoff} exceeds the highest mode {k_max}"));
    }
    Ok(FilterMask {
        gains: (0..=k_max).map(|k| if k <= cutoff { 1.0 } else { 0.0 }).collect(),
    })
}

/// `(jk)^ν` for every DFT index of a length-`M` spectrum.
pub fn wavenumber_multipliers(m: usize, order: usize) -> Vec<Complex64> {
    let j = Complex64::new(0.0, 1.0);
    (0..m)
        .map(|k| {
            if 2 * k == m {
                if order % 2 == 1 {
                    Complex64::new(0.0, 0.0)
                } else {
                    (j * (m / 2) as f64).powu(order as u32)
                }
            } else {
                let wavenumber = if 2 * k < m { k as f64 } else { k as f64 - m as f64 };
                (j * wavenumber).powu(order as u32)
            }
        })
        .collect()
}

fn gain_index(k: usize, spectrum: &Spectrum) -> usize {
    match spectrum.layout {
        SpectrumLayout::Dft => k.min(spectrum.len() - k),
        SpectrumLayout::DctI => k,
    }
}

/// Scales each mode by its gain; DFT modes `k` and `M - k` share `gains[k]`.
pub fn apply_mask(spectrum: &Spectrum, mask: &FilterMask) -> Result<Spectrum> {
    if mask.len() != spectrum.mode_count() {
        return invalid(format!(
            "mask has {} gains but the spectrum has {} distinct modes",
            mask.len(),
            spectrum.mode_count()
        ));
    }
    let coeffs = spectrum
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, z)| z * mask.gains[gain_index(k, spectrum)])
        .collect();
    Ok(Spectrum {
        coeffs,
        layout: spectrum.layout,
    })
}

fn check_grid(len: usize, grid: &GridSpec) -> Result<()> {
    if grid.kind != GridKind::PeriodicEquispaced {
        return invalid("Fourier derivative requires a periodic equispaced grid");
    }
    if grid.count != len {
        return invalid(format!(
            "signal has {len} samples but the grid has {}",
            grid.count
        ));
    }
    Ok(())
}

/// Complex-valued spectral derivative on a periodic grid. `order = 0` only
/// applies the mask.
pub fn fourier_derivative_complex(
    y: &[Complex64],
    grid: &GridSpec,
    order: usize,
    mask: Option<&FilterMask>,
) -> Result<Vec<Complex64>> {
    check_grid(y.len(), grid)?;
    let m = y.len();
    let stripped;
    let y = if order % 2 == 1 && m % 2 == 0 {
        // the Nyquist multiplier is zero for odd orders; removing that mode
        // before transforming keeps it from leaking rounding into the others
        let c = y
            .iter()
            .enumerate()
            .map(|(n, v)| if n % 2 == 0 { *v } else { -v })
            .sum::<Complex64>()
            / m as f64;
        stripped = y
            .iter()
            .enumerate()
            .map(|(n, v)| if n % 2 == 0 { v - c } else { v + c })
            .collect::<Vec<_>>();
        &stripped[..]
    } else {
        y
    };
    let mut spectrum = Spectrum {
        coeffs: dft(y, Direction::Forward)?,
        layout: SpectrumLayout::Dft,
    };
    if let Some(mask) = mask {
        spectrum = apply_mask(&spectrum, mask)?;
    }
    if order > 0 {
        let mult = wavenumber_multipliers(y.len(), order);
        for (z, w) in spectrum.coeffs.iter_mut().zip(&mult) {
            *z *= w;
        }
    }
    let scale = grid.scale_correction(order);
    Ok(dft(&spectrum.coeffs, Direction::Inverse)?
        .into_iter()
        .map(|z| z / scale)
        .collect())
}

/// Spectral derivative of real periodic samples.
///
/// Fails with [`SpecError::NumericContamination`] if the inverse transform
/// leaves an imaginary part larger than rounding can explain (for example
/// when the input holds NaN or infinity).
pub fn fourier_derivative(
    y: &[f64],
    grid: &GridSpec,
    order: usize,
    mask: Option<&FilterMask>,
) -> Result<Vec<f64>> {
    let out = fourier_derivative_complex(&to_complex(y), grid, order, mask)?;
    if out.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(SpecError::NumericContamination {
            residue: f64::NAN,
            bound: 0.0,
        });
    }
    let residue = out.iter().fold(0.0f64, |acc, z| acc.max(z.im.abs()));
    let peak_out = out.iter().fold(0.0f64, |acc, z| acc.max(z.re.abs()));
    let peak_in = y.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let bound = IMAG_RESIDUE_TOLERANCE * peak_out.max(peak_in).max(f64::MIN_POSITIVE);
    if residue > bound {
        return Err(SpecError::NumericContamination { residue, bound });
    }
    Ok(out.into_iter().map(|z| z.re).collect())
}
