//! Arbitrary-length complex FFT.
//!
//! Lengths whose prime factors are all small run through a recursive
//! mixed-radix decimation-in-time kernel. Lengths with a large prime factor are
//! handled with Bluestein's chirp-z algorithm on top of a power-of-two plan.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Prime factors above this go through Bluestein instead of a generic butterfly.
const MAX_DIRECT_RADIX: usize = 31;

/// Precomputed forward transform of a fixed length. Immutable once built.
#[derive(Debug, Clone)]
pub struct FftPlan {
    len: usize,
    kernel: Kernel,
}

#[derive(Debug, Clone)]
enum Kernel {
    MixedRadix {
        factors: Vec<usize>,
        twiddles: Vec<Complex64>,
    },
    Bluestein(Box<Bluestein>),
}

#[derive(Debug, Clone)]
struct Bluestein {
    inner: FftPlan,
    chirp: Vec<Complex64>,
    kernel_spectrum: Vec<Complex64>,
}

fn factorize(mut n: usize) -> Vec<usize> {
    let mut factors = Vec::new();
    while n % 4 == 0 {
        factors.push(4);
        n /= 4;
    }
    let mut p = 2;
    while n > 1 {
        while n % p == 0 {
            factors.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
        if p * p > n && n > 1 {
            factors.push(n);
            break;
        }
    }
    factors
}

/// `e^{-2πi k / n}`.
fn unit_root(k: usize, n: usize) -> Complex64 {
    let (s, c) = (-2.0 * PI * k as f64 / n as f64).sin_cos();
    Complex64::new(c, s)
}

impl FftPlan {
    pub fn new(len: usize) -> Self {
        assert!(len > 0, "FFT length must be positive");
        let factors = factorize(len);
        if factors.iter().any(|&p| p > MAX_DIRECT_RADIX) {
            return Self {
                len,
                kernel: Kernel::Bluestein(Box::new(Bluestein::new(len))),
            };
        }
        let twiddles = (0..len).map(|k| unit_root(k, len)).collect();
        Self {
            len,
            kernel: Kernel::MixedRadix { factors, twiddles },
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Unnormalized forward transform, `X_k = Σ x_n e^{-2πink/N}`.
    pub fn forward(&self, input: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(input.len(), self.len, "FFT input length mismatch");
        match &self.kernel {
            Kernel::MixedRadix { factors, twiddles } => {
                let mut out = vec![Complex64::new(0.0, 0.0); self.len];
                let mut scratch = Vec::new();
                mixed_radix(&mut out, input, 0, 1, factors, twiddles, 1, &mut scratch);
                out
            }
            Kernel::Bluestein(b) => b.forward(input),
        }
    }

    /// Inverse transform with the `1/N` factor applied.
    pub fn inverse(&self, input: &[Complex64]) -> Vec<Complex64> {
        let conj: Vec<Complex64> = input.iter().map(|z| z.conj()).collect();
        let scale = 1.0 / self.len as f64;
        self.forward(&conj)
            .into_iter()
            .map(|z| z.conj() * scale)
            .collect()
    }
}

/// Writes the DFT of `input[offset + stride·i]`, `i < out.len()`, into `out`.
/// `tw_stride` maps the sub-transform's roots onto the full-length table.
#[allow(clippy::too_many_arguments)]
fn mixed_radix(
    out: &mut [Complex64],
    input: &[Complex64],
    offset: usize,
    stride: usize,
    factors: &[usize],
    twiddles: &[Complex64],
    tw_stride: usize,
    scratch: &mut Vec<Complex64>,
) {
    let n = out.len();
    let Some(&p) = factors.first() else {
        // length 1
        out[0] = input[offset];
        return;
    };
    let m = n / p;
    if m == 1 {
        for (i, o) in out.iter_mut().enumerate() {
            *o = input[offset + i * stride];
        }
    } else {
        for (q, chunk) in out.chunks_mut(m).enumerate() {
            mixed_radix(
                chunk,
                input,
                offset + q * stride,
                stride * p,
                &factors[1..],
                twiddles,
                tw_stride * p,
                scratch,
            );
        }
    }

    let full = twiddles.len();
    match p {
        2 => {
            for u in 0..m {
                let t = out[u + m] * twiddles[u * tw_stride];
                let a = out[u];
                out[u] = a + t;
                out[u + m] = a - t;
            }
        }
        4 => {
            for u in 0..m {
                let a0 = out[u];
                let a1 = out[u + m] * twiddles[u * tw_stride];
                let a2 = out[u + 2 * m] * twiddles[2 * u * tw_stride];
                let a3 = out[u + 3 * m] * twiddles[3 * u * tw_stride];
                let s02 = a0 + a2;
                let d02 = a0 - a2;
                let s13 = a1 + a3;
                // -i·(a1 - a3)
                let d13 = a1 - a3;
                let rot = Complex64::new(d13.im, -d13.re);
                out[u] = s02 + s13;
                out[u + m] = d02 + rot;
                out[u + 2 * m] = s02 - s13;
                out[u + 3 * m] = d02 - rot;
            }
        }
        _ => {
            // generic radix-p butterfly: a length-p DFT per output column
            let root_step = m * tw_stride;
            scratch.resize(p, Complex64::new(0.0, 0.0));
            for u in 0..m {
                for q in 0..p {
                    scratch[q] = out[u + q * m] * twiddles[(q * u * tw_stride) % full];
                }
                for k in 0..p {
                    let mut acc = scratch[0];
                    for (q, s) in scratch.iter().enumerate().skip(1) {
                        acc += s * twiddles[(q * k * root_step) % full];
                    }
                    out[u + k * m] = acc;
                }
            }
        }
    }
}

impl Bluestein {
    fn new(len: usize) -> Self {
        let padded = (2 * len - 1).next_power_of_two();
        let inner = FftPlan::new(padded);
        // e^{-πi k²/n}, with k² reduced mod 2n to keep the angle small
        let modulus = 2 * len as u128;
        let chirp: Vec<Complex64> = (0..len)
            .map(|k| {
                let k2 = (k as u128 * k as u128) % modulus;
                let (s, c) = (-PI * k2 as f64 / len as f64).sin_cos();
                Complex64::new(c, s)
            })
            .collect();
        let mut kernel = vec![Complex64::new(0.0, 0.0); padded];
        kernel[0] = chirp[0].conj();
        for k in 1..len {
            kernel[k] = chirp[k].conj();
            kernel[padded - k] = chirp[k].conj();
        }
        let kernel_spectrum = inner.forward(&kernel);
        Self {
            inner,
            chirp,
            kernel_spectrum,
        }
    }

    fn forward(&self, input: &[Complex64]) -> Vec<Complex64> {
        let padded = self.inner.len();
        let mut a = vec![Complex64::new(0.0, 0.0); padded];
        for (slot, (x, w)) in a.iter_mut().zip(input.iter().zip(&self.chirp)) {
            *slot = x * w;
        }
        let mut spec = self.inner.forward(&a);
        for (s, k) in spec.iter_mut().zip(&self.kernel_spectrum) {
            *s *= k;
        }
        let conv = self.inner.inverse(&spec);
        conv.iter()
            .zip(&self.chirp)
            .map(|(c, w)| c * w)
            .collect()
    }
}
