use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specdiff::chebfourier::{
    chain_rule_table, cheb_derivative_via_theta, derive_endpoint_constants, EndpointEngine, RationalPoly, TrigPoly,
};
use specdiff::chebyshev::{cheb_coefficients, cheb_derivative, cheb_eval_cosine_grid};
use specdiff::transforms::{dct1, Direction};
use specdiff::{ChebSeries, GridSpec};

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn poly(c: &[i64]) -> RationalPoly {
    RationalPoly::from_ints(c)
}

fn cos_nodes(n: usize) -> Vec<f64> {
    GridSpec::chebyshev(-1.0, 1.0, n).unwrap().points()
}

#[test]
fn pyramid_rows_one_to_five() {
    // numerators in ascending powers, and the (1-x²) exponent, per (row, μ)
    let want: [&[(&[i64], (i64, i64))]; 5] = [
        &[(&[-1], (1, 2))],
        &[(&[0, -1], (3, 2)), (&[1], (1, 1))],
        &[(&[-1, 0, -2], (5, 2)), (&[0, 3], (2, 1)), (&[-1], (3, 2))],
        &[
            (&[0, -9, 0, -6], (7, 2)),
            (&[4, 0, 11], (3, 1)),
            (&[0, -6], (5, 2)),
            (&[1], (2, 1)),
        ],
        &[
            (&[-9, 0, -72, 0, -24], (9, 2)),
            (&[0, 55, 0, 50], (4, 1)),
            (&[-10, 0, -35], (7, 2)),
            (&[0, 10], (3, 1)),
            (&[-1], (5, 2)),
        ],
    ];
    let table = chain_rule_table(5);
    for (r, row) in want.iter().enumerate() {
        assert_eq!(table.row(r + 1).len(), row.len());
        for (mu, (num, (cn, cd))) in row.iter().enumerate() {
            let entry = table.entry(r + 1, mu + 1);
            assert_eq!(entry.numerator, poly(num), "row {} mu {}", r + 1, mu + 1);
            assert_eq!(entry.denom_exponent, q(*cn, *cd));
        }
    }
}

#[test]
fn denominator_exponents_follow_row_minus_half_column() {
    let table = chain_rule_table(8);
    for r in 1..=8 {
        for mu in 1..=r {
            assert_eq!(table.entry(r, mu).denom_exponent, q(2 * r as i64 - mu as i64, 2));
        }
    }
}

#[test]
fn first_and_second_endpoint_forms() {
    let c1 = derive_endpoint_constants(1).unwrap();
    assert_eq!(c1.weight_poly_at_plus_one(), poly(&[0, 0, 1]));
    assert_eq!(c1.weight_poly_at_minus_one(), poly(&[0, 0, -1]));

    let c2 = derive_endpoint_constants(2).unwrap();
    let third = RationalPoly::new(vec![q(0, 1), q(0, 1), q(-1, 3), q(0, 1), q(1, 3)]);
    assert_eq!(c2.weight_poly_at_plus_one(), third);
    assert_eq!(c2.weight_poly_at_minus_one(), third);
}

#[test]
fn endpoint_weights_match_product_formula() {
    // T_k^{(ν)}(1) = Π_{i<ν} (k² - i²)/(2i + 1), and T_k^{(ν)}(-1) = (-1)^{k+ν} T_k^{(ν)}(1)
    for order in 1..=8usize {
        let c = derive_endpoint_constants(order).unwrap();
        let mut want = poly(&[1]);
        for i in 0..order as i64 {
            let factor = RationalPoly::new(vec![q(-i * i, 2 * i + 1), q(0, 1), q(1, 2 * i + 1)]);
            want = &want * &factor;
        }
        assert_eq!(c.weight_poly_at_plus_one(), want, "order {order}");
        let minus = if order % 2 == 0 { want.clone() } else { -&want };
        assert_eq!(c.weight_poly_at_minus_one(), minus, "order {order}");
    }
}

#[test]
fn derivative_of_t2_at_endpoints() {
    let x = cos_nodes(8);
    let y: Vec<f64> = x.iter().map(|v| 2.0 * v * v - 1.0).collect();
    let spec = dct1(&y, Direction::Forward).unwrap();
    let (plus, minus) = EndpointEngine::default().limits(&spec, 1).unwrap();
    assert!((plus - 4.0).abs() <= 1e-10);
    assert!((minus + 4.0).abs() <= 1e-10);
}

/// Fornberg weights for the `order`-th derivative at `x0` from `nodes`.
fn fd_weights(x0: f64, nodes: &[f64], order: usize) -> Vec<f64> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; order + 1]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - x0;
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - x0;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.iter().map(|row| row[order]).collect()
}

#[test]
fn higher_order_endpoints_match_one_sided_differences() {
    let functions: [(&str, fn(f64) -> f64); 3] = [
        ("exp", |x| x.exp()),
        ("exp*sin", |x| x.exp() * (2.0 * x).sin()),
        ("rational", |x| 1.0 / (3.0 + x)),
    ];
    let engine = EndpointEngine::default();
    for (name, f) in functions {
        let n = 24;
        let y: Vec<f64> = cos_nodes(n).iter().map(|&v| f(v)).collect();
        let series: ChebSeries = cheb_coefficients(&y).unwrap();
        let spec = dct1(&y, Direction::Forward).unwrap();
        for order in [3usize, 4] {
            let (plus, minus) = engine.limits(&spec, order).unwrap();
            // spacing balances stencil roundoff against truncation
            let h = 0.06;
            let stencil = order + 10;
            for (edge, got, dir) in [(1.0, plus, -1.0), (-1.0, minus, 1.0)] {
                let nodes: Vec<f64> = (0..stencil).map(|i| edge + dir * h * i as f64).collect();
                let w = fd_weights(edge, &nodes, order);
                let fd: f64 = nodes.iter().zip(&w).map(|(x, wi)| series.eval(*x) * wi).sum();
                let rel = (got - fd).abs() / fd.abs();
                assert!(rel <= 1e-5, "{name} order {order} at {edge}: {got} vs {fd} ({rel:e})");
            }
        }
    }
}

#[test]
fn cubic_everywhere() {
    let x = cos_nodes(8);
    let y: Vec<f64> = x.iter().map(|v| v.powi(3)).collect();
    let d = cheb_derivative_via_theta(&y, 1).unwrap();
    for (dv, xv) in d.iter().zip(&x) {
        assert!((dv - 3.0 * xv * xv).abs() <= 1e-10);
    }
}

#[test]
fn second_derivative_of_exp_sin() {
    let n = 64;
    let x = cos_nodes(n);
    let y: Vec<f64> = x.iter().map(|v| v.exp() * (5.0 * v).sin()).collect();
    let d = cheb_derivative_via_theta(&y, 2).unwrap();
    // (e^x sin 5x)'' = e^x (10 cos 5x - 24 sin 5x)
    let exact = |v: f64| v.exp() * (10.0 * (5.0 * v).cos() - 24.0 * (5.0 * v).sin());
    for (i, (dv, xv)) in d.iter().zip(&x).enumerate() {
        let tol = if i == 0 || i == n { 1e-4 } else { 1e-6 };
        assert!((dv - exact(*xv)).abs() <= tol, "node {i}: {dv} vs {}", exact(*xv));
    }
}

#[test]
fn agrees_with_series_rule() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in [16usize, 33] {
        let grid = GridSpec::chebyshev(-1.0, 1.0, n).unwrap();
        for order in 1..=4 {
            for _ in 0..20 {
                let series = ChebSeries::new(
                    (0..=n).map(|k| rng.gen_range(-1.0..1.0) * 0.5f64.powi(k as i32)).collect(),
                );
                let y = cheb_eval_cosine_grid(&series, n).unwrap();
                let a = cheb_derivative(&y, &grid, order, None).unwrap();
                let b = cheb_derivative_via_theta(&y, order).unwrap();
                let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                for i in 0..=n {
                    let tol = if i == 0 || i == n { 1e-6 } else { 1e-8 };
                    assert!((a[i] - b[i]).abs() <= tol * scale, "N={n} order={order} node {i}");
                }
            }
        }
    }
}

#[test]
fn orders_above_the_cap_are_rejected() {
    let y: Vec<f64> = cos_nodes(8).iter().map(|v| v.exp()).collect();
    let engine = EndpointEngine::new(3);
    assert!(engine.constants(4).is_err());
    assert!(specdiff::chebfourier::cheb_derivative_via_theta_with(&engine, &y, 4).is_err());
    assert!(specdiff::chebfourier::cheb_derivative_via_theta_with(&engine, &y, 3).is_ok());
}

fn small_poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec(-5i64..=5, 0..5).prop_map(|c| poly(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn trig_poly_derivative_matches_finite_differences(
        a in small_poly(),
        b in small_poly(),
        theta in 0.1f64..(PI - 0.1),
    ) {
        let t = TrigPoly::new(a, b);
        let d = t.derivative();
        let h = 1e-5;
        let fd = (t.eval_f64(theta + h) - t.eval_f64(theta - h)) / (2.0 * h);
        prop_assert!((d.eval_f64(theta) - fd).abs() <= 1e-7 * (1.0 + fd.abs()));
    }
}
