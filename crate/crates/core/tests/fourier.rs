use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specdiff::fourier::{fourier_derivative, fourier_derivative_complex, lowpass_mask, wavenumber_multipliers};
use specdiff::transforms::{dft, Direction};
use specdiff::GridSpec;

fn max_abs(v: impl IntoIterator<Item = f64>) -> f64 {
    v.into_iter().fold(0.0, |a, b| a.max(b.abs()))
}

/// Σ (c_k cos kt + s_k sin kt) and its analytic derivatives.
struct TrigSeries {
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl TrigSeries {
    fn random(rng: &mut ChaCha8Rng, max_k: usize) -> Self {
        Self {
            cos: (0..=max_k).map(|_| rng.gen_range(-1.0..1.0)).collect(),
            sin: (0..=max_k).map(|_| rng.gen_range(-1.0..1.0)).collect(),
        }
    }

    fn derivative(&self, t: f64, order: usize) -> f64 {
        (0..self.cos.len())
            .map(|k| {
                let kf = k as f64;
                // d^ν cos(kt) = k^ν cos(kt + νπ/2)
                let shift = order as f64 * PI / 2.0;
                kf.powi(order as i32)
                    * (self.cos[k] * (kf * t + shift).cos() + self.sin[k] * (kf * t + shift).sin())
            })
            .sum()
    }
}

#[test]
fn exact_on_resolvable_trig_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in [5usize, 8, 17, 32, 64, 100, 128] {
        let max_k = (m - 1) / 2;
        let series = TrigSeries::random(&mut rng, max_k);
        let grid = GridSpec::periodic(0.0, 2.0 * PI, m).unwrap();
        let t = grid.points();
        let y: Vec<f64> = t.iter().map(|&v| series.derivative(v, 0)).collect();
        for order in 1..=4 {
            let got = fourier_derivative(&y, &grid, order, None).unwrap();
            let want: Vec<f64> = t.iter().map(|&v| series.derivative(v, order)).collect();
            let scale = max_abs(want.iter().copied());
            let err = max_abs(got.iter().zip(&want).map(|(a, b)| a - b));
            assert!(err <= 1e-10 * scale, "M={m} order={order}: {err:e} vs {scale:e}");
        }
    }
}

fn nyquist(m: usize) -> Vec<f64> {
    (0..m).map(|n| if n % 2 == 0 { 1.0 } else { -1.0 }).collect()
}

#[test]
fn nyquist_mode_odd_orders_vanish_exactly() {
    for m in [4usize, 8, 16, 30] {
        let grid = GridSpec::periodic(0.0, 2.0 * PI, m).unwrap();
        for order in [1usize, 3, 5] {
            let d = fourier_derivative(&nyquist(m), &grid, order, None).unwrap();
            assert!(d.iter().all(|v| *v == 0.0), "M={m} order={order}: {d:?}");
        }
        for order in [2usize, 4] {
            let d = fourier_derivative(&nyquist(m), &grid, order, None).unwrap();
            let half = (m / 2) as f64;
            let sign = if (order / 2) % 2 == 0 { 1.0 } else { -1.0 };
            for (n, v) in d.iter().enumerate() {
                let alt = if n % 2 == 0 { 1.0 } else { -1.0 };
                let want = half.powi(order as i32) * alt * sign;
                assert!((v - want).abs() <= 1e-10 * want.abs());
            }
        }
    }
}

#[test]
fn first_derivative_twice_drops_the_nyquist_term() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let m = 16;
    let grid = GridSpec::periodic(0.0, 2.0 * PI, m).unwrap();
    let y: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();

    let twice = fourier_derivative(&fourier_derivative(&y, &grid, 1, None).unwrap(), &grid, 1, None).unwrap();
    let second = fourier_derivative(&y, &grid, 2, None).unwrap();

    // Nyquist contribution to the second derivative: (1/M)(jM/2)² Y_{M/2} (-1)^n
    let spec = dft(&y.iter().map(|&v| v.into()).collect::<Vec<Complex64>>(), Direction::Forward).unwrap();
    let y_nyq = spec[m / 2].re;
    let half = (m / 2) as f64;
    for n in 0..m {
        let alt = if n % 2 == 0 { 1.0 } else { -1.0 };
        let contribution = -half * half * y_nyq * alt / m as f64;
        assert!((second[n] - twice[n] - contribution).abs() <= 1e-10);
    }
    assert!(y_nyq.abs() > 1e-3, "test signal needs a Nyquist component");

    // with the Nyquist mode removed, both routes agree
    let cleaned = fourier_derivative(&y, &grid, 0, Some(&lowpass_mask(m / 2, m / 2 - 1).unwrap())).unwrap();
    let twice = fourier_derivative(&fourier_derivative(&cleaned, &grid, 1, None).unwrap(), &grid, 1, None).unwrap();
    let second = fourier_derivative(&cleaned, &grid, 2, None).unwrap();
    for (a, b) in twice.iter().zip(&second) {
        assert!((a - b).abs() <= 1e-10);
    }
}

#[test]
fn zeroing_nyquist_equals_discarding_imaginary_part() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for m in [8usize, 20, 64] {
        let y: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let grid = GridSpec::periodic(0.0, 2.0 * PI, m).unwrap();
        for order in [1usize, 3] {
            let zeroed = fourier_derivative(&y, &grid, order, None).unwrap();
            // keep (jM/2)^ν at Nyquist, then take the real part
            let mut mult = wavenumber_multipliers(m, order);
            mult[m / 2] = Complex64::new(0.0, (m / 2) as f64).powu(order as u32);
            let spec = dft(&y.iter().map(|&v| v.into()).collect::<Vec<Complex64>>(), Direction::Forward).unwrap();
            let scaled: Vec<Complex64> = spec.iter().zip(&mult).map(|(a, b)| a * b).collect();
            let full = dft(&scaled, Direction::Inverse).unwrap();
            for (a, b) in zeroed.iter().zip(&full) {
                assert!((a - b.re).abs() <= 1e-11);
            }
        }
    }
}

#[test]
fn whole_operation_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let m = 30;
    let grid = GridSpec::periodic(-1.0, 2.0, m).unwrap();
    let u: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let v: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let (alpha, beta) = (1.7, -0.4);
    let mix: Vec<f64> = u.iter().zip(&v).map(|(a, b)| alpha * a + beta * b).collect();
    let mask = lowpass_mask(m / 2, 9).unwrap();
    for order in 0..4 {
        let du = fourier_derivative(&u, &grid, order, Some(&mask)).unwrap();
        let dv = fourier_derivative(&v, &grid, order, Some(&mask)).unwrap();
        let dm = fourier_derivative(&mix, &grid, order, Some(&mask)).unwrap();
        let scale = max_abs(dm.iter().copied()).max(1.0);
        for k in 0..m {
            assert!((dm[k] - (alpha * du[k] + beta * dv[k])).abs() <= 1e-10 * scale);
        }
    }
}

#[test]
fn domain_scaling_follows_chain_rule() {
    let f = |theta: f64| (theta.sin()).exp() + 0.3 * (3.0 * theta).cos();
    let m = 48;
    let canonical = GridSpec::periodic(0.0, 2.0 * PI, m).unwrap();
    let y: Vec<f64> = canonical.points().iter().map(|&v| f(v)).collect();
    for &(a, b) in &[(3.0, 11.0), (-0.5, 0.25), (0.0, 4.0 * PI)] {
        let grid = GridSpec::periodic(a, b, m).unwrap();
        // g(t) = f(2π(t - a)/(b - a)) sampled on [a, b) is the same vector
        let g: Vec<f64> = grid.points().iter().map(|&t| f(2.0 * PI * (t - a) / (b - a))).collect();
        for order in 1..=3 {
            let df = fourier_derivative(&y, &canonical, order, None).unwrap();
            let dg = fourier_derivative(&g, &grid, order, None).unwrap();
            let factor = (2.0 * PI / (b - a)).powi(order as i32);
            let scale = max_abs(df.iter().map(|v| v * factor));
            for (x, z) in df.iter().zip(&dg) {
                assert!((x * factor - z).abs() <= 1e-9 * scale, "[{a},{b}) order {order}");
            }
        }
    }
}

#[test]
fn odd_length_grids() {
    let grid = GridSpec::periodic(0.0, 2.0 * PI, 15).unwrap();
    let t = grid.points();
    let y: Vec<f64> = t.iter().map(|v| (7.0 * v).sin()).collect();
    let d = fourier_derivative(&y, &grid, 1, None).unwrap();
    for (dv, tv) in d.iter().zip(&t) {
        assert!((dv - 7.0 * (7.0 * tv).cos()).abs() <= 1e-11);
    }
}

#[test]
fn complex_matches_real_parts() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let m = 24;
    let grid = GridSpec::periodic(0.0, 1.0, m).unwrap();
    let re: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let im: Vec<f64> = (0..m).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let z: Vec<Complex64> = re.iter().zip(&im).map(|(&a, &b)| Complex64::new(a, b)).collect();
    let dz = fourier_derivative_complex(&z, &grid, 2, None).unwrap();
    let dre = fourier_derivative(&re, &grid, 2, None).unwrap();
    let dim = fourier_derivative(&im, &grid, 2, None).unwrap();
    for k in 0..m {
        assert!((dz[k].re - dre[k]).abs() <= 1e-9);
        assert!((dz[k].im - dim[k]).abs() <= 1e-9);
    }
}
