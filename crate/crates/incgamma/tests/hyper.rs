use incgamma::coefficients::a_coeffs_even;
use incgamma::expansions::eval_series_z;
use incgamma::gamma::{incomplete_gamma_large_a_normalized, incomplete_gamma_zz_normalized, SheetPoint};
use incgamma::hyper::{
    hyper_large_a, hyper_z, optimal_n_large_a, optimal_nm_z, stokes_scan_large_a, stokes_scan_z, HyperEvaluation,
};
use incgamma::{Complex, Error, PrecisionContext, Real};
use std::f64::consts::PI;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(128).unwrap()
}

fn residual_a(a: &SheetPoint, lambda: &Real, h: &HyperEvaluation, c: &PrecisionContext) -> Real {
    let o = incomplete_gamma_large_a_normalized(a, lambda, c).unwrap().value;
    (&o - &h.total()).abs()
}

fn residual_z(z: &SheetPoint, h: &HyperEvaluation, c: &PrecisionContext) -> Real {
    let o = incomplete_gamma_zz_normalized(z, c).unwrap().value;
    (&o - &h.total()).abs()
}

#[test]
fn large_a_layer_at_the_optimal_index() {
    let c = ctx();
    let lambda = c.int(2);
    let n = optimal_n_large_a(30.0, 2.0);
    assert_eq!(n, 9);
    let a = SheetPoint::polar_f64(30.0, 0.0, &c);
    let h = hyper_large_a(&a, &lambda, n, 3, &c).unwrap();
    assert!(h.certified);
    let res = residual_a(&a, &lambda, &h, &c);
    assert!(res <= h.residual_bound);
    // the improvement over the bare remainder is substantial
    let bare = hyper_large_a(&a, &lambda, n, 0, &c).unwrap();
    assert!(bare.terminant_layer.is_zero());
    assert!(!bare.certified);
    assert!(residual_a(&a, &lambda, &bare, &c).log2_abs() > res.log2_abs() + 15.0);
}

#[test]
fn large_a_bound_dominates_on_the_grid() {
    let c = ctx();
    for r in [20.0, 30.0] {
        for lam in [2.0, 3.0] {
            let lambda = c.f64(lam);
            let n = optimal_n_large_a(r, lam);
            for th in [0.0, 0.5, -0.5, 1.0, -1.0] {
                let a = SheetPoint::polar_f64(r, th * PI, &c);
                for k in [2, 3, 4] {
                    let h = hyper_large_a(&a, &lambda, n, k, &c).unwrap();
                    assert!(h.certified);
                    let res = residual_a(&a, &lambda, &h, &c);
                    assert!(res <= h.residual_bound, "|a| = {r}, λ = {lam}, θ = {th}π, K = {k}");
                }
            }
        }
    }
}

#[test]
fn large_a_layer_is_continuous_across_the_stokes_line() {
    let c = ctx();
    let lambda = c.int(2);
    let sides: Vec<(Real, Real, bool)> = [0.999, 1.001]
        .iter()
        .map(|th| {
            let a = SheetPoint::polar_f64(30.0, th * PI, &c);
            let h = hyper_large_a(&a, &lambda, 9, 3, &c).unwrap();
            (residual_a(&a, &lambda, &h, &c), h.residual_bound, h.certified)
        })
        .collect();
    assert!(sides[0].2 && !sides[1].2);
    let bound_sum = &sides[0].1 + &sides[1].1;
    assert!(&sides[0].0 + &sides[1].0 <= bound_sum);
    // beyond the line the raw series misses the emerging exponential
    let a = SheetPoint::polar_f64(30.0, 1.3 * PI, &c);
    let h = hyper_large_a(&a, &lambda, 9, 3, &c).unwrap();
    let bare = hyper_large_a(&a, &lambda, 9, 0, &c).unwrap();
    assert!(residual_a(&a, &lambda, &h, &c) < residual_a(&a, &lambda, &bare, &c).ldexp(-15));
}

#[test]
fn large_a_residual_decays_at_the_predicted_rate() {
    let c = ctx();
    let lambda = c.int(2);
    let kappa = 1.0 - 2f64.ln();
    let k = 2;
    let scaled: Vec<f64> = [5usize, 10, 20]
        .iter()
        .map(|&n| {
            let r = n as f64 / kappa;
            let a = SheetPoint::polar_f64(r, 0.0, &c);
            let h = hyper_large_a(&a, &lambda, n, k, &c).unwrap();
            let res = residual_a(&a, &lambda, &h, &c).to_f64();
            res * r.powf(k as f64 + 0.5) * (r * kappa).exp()
        })
        .collect();
    let hi = scaled.iter().cloned().fold(0.0, f64::max);
    let lo = scaled.iter().cloned().fold(f64::INFINITY, f64::min);
    assert!(hi / lo < 4.0, "{scaled:?}");
}

#[test]
fn large_a_argument_checks() {
    let c = ctx();
    let a = SheetPoint::polar_f64(30.0, 0.0, &c);
    assert!(matches!(hyper_large_a(&a, &c.int(2), 3, 4, &c), Err(Error::Domain(_))));
    assert!(matches!(hyper_large_a(&a, &c.one(), 3, 2, &c), Err(Error::Domain(_))));
    let far = SheetPoint::polar_f64(30.0, 2.0 * PI + 0.1, &c);
    assert!(matches!(hyper_large_a(&far, &c.int(2), 9, 2, &c), Err(Error::Sector(_))));
}

#[test]
fn z_layer_at_the_optimal_index() {
    let c = ctx();
    let n = optimal_nm_z(8.0);
    assert_eq!(n, 50);
    for th in [0.0, 0.5] {
        let z = SheetPoint::polar_f64(8.0, th * PI, &c);
        let h = hyper_z(&z, n, n, 4, 4, &c).unwrap();
        assert!(h.certified);
        assert!(residual_z(&z, &h, &c) <= h.residual_bound, "θ = {th}π");
    }
    let z = SheetPoint::polar_f64(8.0, 0.0, &c);
    let bare = hyper_z(&z, n, n, 0, 0, &c).unwrap();
    assert!(bare.terminant_layer.is_zero());
}

#[test]
fn z_bound_dominates_on_the_grid() {
    let c = ctx();
    for r in [6.0, 8.0] {
        let n = optimal_nm_z(r);
        for th in [0.0, 0.25, -0.25, 0.5, -0.5] {
            let z = SheetPoint::polar_f64(r, th * PI, &c);
            for (k, l) in [(2, 2), (3, 3), (2, 3), (4, 2)] {
                let h = hyper_z(&z, n, n, k, l, &c).unwrap();
                assert!(h.certified);
                assert!(residual_z(&z, &h, &c) <= h.residual_bound, "|z| = {r}, θ = {th}π, K = {k}, L = {l}");
            }
        }
    }
}

#[test]
fn z_layer_beyond_the_stokes_lines() {
    let c = PrecisionContext::new(160).unwrap();
    let n = optimal_nm_z(16.0);
    for th in [1.2, 1.5, -1.5, 1.8, -2.2] {
        let z = SheetPoint::polar_f64(16.0, th * PI, &c);
        let h = hyper_z(&z, n, n, 3, 3, &c).unwrap();
        assert!(!h.certified);
        // the order scale, with a generous constant
        assert!(residual_z(&z, &h, &c) <= h.residual_bound, "θ = {th}π");
    }
}

#[test]
fn z_argument_checks() {
    let c = ctx();
    let z = SheetPoint::polar_f64(8.0, 0.0, &c);
    assert!(matches!(hyper_z(&z, 5, 5, 6, 2, &c), Err(Error::Domain(_))));
    assert!(matches!(hyper_z(&z, 5, 5, 2, 6, &c), Err(Error::Domain(_))));
    let far = SheetPoint::polar_f64(8.0, 3.0 * PI + 0.1, &c);
    assert!(matches!(hyper_z(&far, 50, 50, 2, 2, &c), Err(Error::Sector(_))));
}

#[test]
fn large_a_scan() {
    let c = ctx();
    let lambda = c.int(2);
    let thetas: Vec<f64> = (-6..=6).map(|j| PI + 0.1 * j as f64).chain([0.6 * PI, -PI + 0.1]).collect();
    let rows = stokes_scan_large_a(&c.int(30), &lambda, &thetas, 9, 3, &c).unwrap();
    let on_line = rows.iter().find(|r| r.theta == PI).unwrap();
    assert_eq!(on_line.erf.to_f64(), (0.5, 0.0));
    let slack = 1.0 / 30f64.sqrt();
    for r in &rows {
        let d = (&r.exact - &r.terminant).abs();
        assert!(d <= r.thm_bound, "θ = {}", r.theta);
        assert!((&r.terminant - &r.erf).abs().to_f64() <= slack, "θ = {}", r.theta);
    }
    for w in rows[..13].windows(2) {
        assert!(w[1].terminant.re > w[0].terminant.re);
    }
    // well inside the sector the terminant layer is exponentially small
    assert!(rows[13].terminant.abs().to_f64() < 1e-3);
    // mirror image below the real axis
    let mirror = &rows[14];
    let above = rows.iter().find(|r| (r.theta - (PI - 0.1)).abs() < 1e-12).unwrap();
    assert!((&mirror.terminant - &above.terminant.conj()).abs().to_f64() < 1e-30);
}

#[test]
fn z_scan() {
    let c = ctx();
    let r = 8.0;
    let n = optimal_nm_z(r);
    let thetas: Vec<f64> = (-4..=4).map(|j| 1.5 * PI + 0.1 * j as f64).chain([1.8 * PI, -1.5 * PI - 0.2]).collect();
    let rows = stokes_scan_z(&c.f64(r), &thetas, n, n, 3, &c).unwrap();
    assert_eq!(rows[4].erf.to_f64(), (0.5, 0.0));
    let slack = 1.0 / r.sqrt();
    for row in &rows {
        assert!((&row.exact - &row.layer).abs() <= row.thm_bound, "θ = {}", row.theta);
        assert!((&row.terminant - &row.erf).abs().to_f64() <= slack, "θ = {}", row.theta);
    }
    for w in rows[..9].windows(2) {
        assert!(w[1].terminant.re > w[0].terminant.re);
    }
    // past the line the average tends to one: the emerging series is fully on
    let zv = SheetPoint::polar_f64(r, 1.8 * PI, &c).value;
    let emerging = a_coeffs_even(2)
        .iter()
        .enumerate()
        .fold(c.czero(), |s, (k, q)| &s + &zv.powi(-(k as i64)).scale(&Real::from_rational(q, c.wp())));
    assert!((&rows[9].terminant - &emerging).abs().to_f64() < 1e-4);
    // the mirrored line behaves the same
    let up = &rows[6];
    let down = &rows[10];
    assert!((&up.terminant - &down.terminant.conj()).abs().to_f64() < 1e-20);
}

#[test]
fn z_series_holds_in_the_wide_sector() {
    let c = ctx();
    for th in [1.9, -1.9] {
        let z = SheetPoint::polar_f64(12.0, th * PI, &c);
        let s = eval_series_z(&z, 24, &c).unwrap().partial_sum;
        let o = incomplete_gamma_zz_normalized(&z, &c).unwrap().value;
        assert!((&s - &o).abs().to_f64() < 1e-9, "θ = {th}π");
    }
    let _ = Complex::zero(64);
}
