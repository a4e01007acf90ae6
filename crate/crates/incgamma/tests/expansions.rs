use incgamma::expansions::{
    bound_factors_large_a, error_bound_large_a, error_bound_z, eval_series_large_a, eval_series_z, large_a_terms, meijer_factor,
    remainder_quadrature_large_a, remainder_quadratures_large_a, remainder_quadratures_z, solve_meijer_phi,
    z_series_terms, BoundRegime,
};
use incgamma::gamma::{incomplete_gamma_large_a_normalized, incomplete_gamma_zz_normalized, SheetPoint};
use incgamma::{Complex, Error, PrecisionContext};
use std::f64::consts::{E, PI};

fn ctx() -> PrecisionContext {
    PrecisionContext::new(128).unwrap()
}

fn rel(a: &Complex, b: &Complex) -> f64 {
    (a - b).log2_abs() - b.log2_abs()
}

#[test]
fn large_a_sum_plus_remainder_is_the_function() {
    let c = ctx();
    let a = SheetPoint::principal(c.complex(20.0, 0.0));
    let lam = c.int(2);
    let g = incomplete_gamma_large_a_normalized(&a, &lam, &c).unwrap().value;
    let ns = [0usize, 5, 15];
    let rs = remainder_quadratures_large_a(&a, &lam, &ns, &c).unwrap();
    for (n, r) in ns.iter().zip(&rs) {
        let s = eval_series_large_a(&a, &lam, *n, &c).unwrap().partial_sum;
        assert!(rel(&(&s + &r.value), &g) < -110.0, "N = {n}");
    }
}

#[test]
fn large_a_remainders_telescope() {
    let c = ctx();
    let a = SheetPoint::principal(c.complex(12.0, 7.0));
    let lam = c.int(3);
    let ns: Vec<usize> = (0..8).collect();
    let rs = remainder_quadratures_large_a(&a, &lam, &ns, &c).unwrap();
    let terms = large_a_terms(&a.value, &lam, 8, &c);
    for n in 0..7 {
        let d = &rs[n].value - &rs[n + 1].value;
        assert!(rel(&d, &terms[n]) < -110.0, "n = {n}");
    }
}

#[test]
fn positive_a_remainder_lies_between_zero_and_next_term() {
    let c = ctx();
    let a = SheetPoint::principal(c.complex(25.0, 0.0));
    let lam = c.frac(3, 2);
    let n = 8;
    let r = remainder_quadrature_large_a(&a, &lam, n, &c).unwrap().value;
    let term = large_a_terms(&a.value, &lam, n + 1, &c).pop().unwrap();
    let theta = (&r.re / &term.re).to_f64();
    assert!(theta > 0.0 && theta < 1.0, "ratio {theta}");
    assert!(r.im.abs().to_f64() < 1e-30);
    let b = error_bound_large_a(&a, &lam, n, &c).unwrap();
    let (lo, hi) = b.interval.unwrap();
    assert!(lo < r.re && r.re < hi);
    assert_eq!(b.regime, BoundRegime::Csc);
}

#[test]
fn large_a_series_matches_the_function_off_the_axis() {
    let c = ctx();
    let lam = c.int(2);
    for a in [c.complex(30.0, 0.0), c.complex(0.0, 30.0), c.complex(-21.0, 21.0)] {
        let a = SheetPoint::principal(a);
        let g = incomplete_gamma_large_a_normalized(&a, &lam, &c).unwrap().value;
        for n in [3usize, 6, 9] {
            let ev = eval_series_large_a(&a, &lam, n, &c).unwrap();
            let err = (&g - &ev.partial_sum).abs();
            let b = ev.bound.unwrap();
            assert!(err <= b.bound, "a = {:?}, N = {n}", a.value.to_f64());
            assert!(err.to_f64() > 1e-3 * b.bound.to_f64(), "bound far from sharp");
        }
    }
}

#[test]
fn large_a_bound_holds_near_and_past_the_negative_axis() {
    let c = ctx();
    let lam = c.int(2);
    for (theta, regime) in [(0.99 * PI, None), (PI, Some(BoundRegime::Meijer)), (1.3 * PI, Some(BoundRegime::Meijer))] {
        let a = SheetPoint::polar_f64(15.0, theta, &c);
        let g = incomplete_gamma_large_a_normalized(&a, &lam, &c).unwrap().value;
        for n in [2usize, 5, 10] {
            let ev = eval_series_large_a(&a, &lam, n, &c).unwrap();
            let b = ev.bound.unwrap();
            assert!((&g - &ev.partial_sum).abs() <= b.bound, "θ = {theta}, N = {n}");
            if let Some(r) = regime {
                if n == 5 {
                    assert_eq!(b.regime, r, "θ = {theta}");
                }
            }
        }
    }
}

#[test]
fn near_stokes_factor_on_the_negative_axis() {
    let c = ctx();
    let n = 5;
    let fs = bound_factors_large_a(PI, n).unwrap();
    let near = fs.iter().find(|f| f.1 == BoundRegime::NearStokes).unwrap().0;
    assert!((near - (E * 6.5).sqrt()).abs() < 1e-12);
    let a = SheetPoint::polar_f64(40.0, PI, &c);
    let lam = c.int(3);
    let b = error_bound_large_a(&a, &lam, n, &c).unwrap();
    let term = large_a_terms(&a.value, &lam, n + 1, &c).pop().unwrap().abs();
    let factor = (&b.bound / &term).to_f64();
    let least = fs.iter().map(|f| f.0).fold(f64::INFINITY, f64::min);
    assert!((factor - least).abs() < 1e-12 && factor <= near);
    let fs0 = bound_factors_large_a(0.0, n).unwrap();
    assert_eq!(fs0, vec![(1.0, BoundRegime::Csc)]);
}

#[test]
fn meijer_rotation_is_the_minimiser() {
    let c = ctx();
    let phi = solve_meijer_phi(&c.pi(), 3, &c).unwrap().to_f64();
    assert!((phi - 0.5f64.atan()).abs() < 1e-15);
    for &(theta, n) in &[(0.6 * PI, 4usize), (0.9 * PI, 10), (1.2 * PI, 7), (1.45 * PI, 20), (-1.1 * PI, 5)] {
        let phi = solve_meijer_phi(&c.f64(theta), n, &c).unwrap().to_f64();
        let f = |p: f64| 1.0 / ((theta - p).sin().abs() * p.cos().powi(n as i32 + 1));
        let (lo, hi) = if theta > 0.0 { ((theta - PI).max(-PI / 2.0), (theta - PI / 2.0).min(PI / 2.0)) } else {
            ((theta + PI / 2.0).max(-PI / 2.0), (PI + theta).min(PI / 2.0))
        };
        assert!(phi > lo && phi < hi, "θ = {theta}");
        let best = (1..2000)
            .map(|k| lo + (hi - lo) * k as f64 / 2000.0)
            .map(f)
            .fold(f64::INFINITY, f64::min);
        assert!(f(phi) <= best * (1.0 + 1e-9), "θ = {theta}");
        assert!((meijer_factor(theta, n) - f(phi)).abs() < 1e-9 * f(phi));
    }
    assert!(matches!(solve_meijer_phi(&c.f64(0.4), 3, &c), Err(Error::Domain(_))));
}

#[test]
fn large_a_rejects_bad_input() {
    let c = ctx();
    let a = SheetPoint::principal(c.complex(10.0, 0.0));
    assert!(matches!(eval_series_large_a(&a, &c.one(), 3, &c), Err(Error::Domain(_))));
    let far = SheetPoint::polar_f64(10.0, 1.6 * PI, &c);
    assert!(matches!(error_bound_large_a(&far, &c.int(2), 3, &c), Err(Error::Sector(_))));
    assert!(eval_series_large_a(&far, &c.int(2), 3, &c).unwrap().bound.is_none());
    let wrapped = SheetPoint::polar_f64(10.0, 1.2 * PI, &c);
    assert!(matches!(remainder_quadrature_large_a(&wrapped, &c.int(2), 3, &c), Err(Error::Sector(_))));
    let pole = SheetPoint::polar_f64(10.0, PI - 1e-4, &c);
    assert!(matches!(remainder_quadrature_large_a(&pole, &c.int(2), 3, &c), Err(Error::Singular(_))));
}

#[test]
fn z_sum_plus_remainder_is_the_function() {
    let c = ctx();
    for z in [SheetPoint::principal(c.complex(30.0, 0.0)), SheetPoint::polar_f64(20.0, 0.6 * PI, &c)] {
        let f = incomplete_gamma_zz_normalized(&z, &c).unwrap().value;
        let rs = remainder_quadratures_z(&z, &[2, 4, 7], &c).unwrap();
        for (n, r) in [2usize, 4, 7].iter().zip(&rs) {
            let s = eval_series_z(&z, *n, &c).unwrap().partial_sum;
            assert!(rel(&(&s + &r.value), &f) < -110.0, "N = {n}");
        }
    }
}

#[test]
fn z_remainders_telescope() {
    let c = ctx();
    let z = SheetPoint::principal(c.complex(20.0, 10.0));
    let ns: Vec<usize> = (2..=8).collect();
    let rs = remainder_quadratures_z(&z, &ns, &c).unwrap();
    let terms = z_series_terms(&z, 9, &c);
    for k in 0..ns.len() - 1 {
        let d = &rs[k].value - &rs[k + 1].value;
        assert!(rel(&d, &terms[ns[k]]) < -110.0, "n = {}", ns[k]);
    }
}

#[test]
fn positive_z_remainders_follow_the_sign_pattern() {
    let c = ctx();
    let z = SheetPoint::principal(c.complex(30.0, 0.0));
    let ns: Vec<usize> = (2..=13).collect();
    let rs = remainder_quadratures_z(&z, &ns, &c).unwrap();
    for (n, r) in ns.iter().zip(&rs) {
        assert!(r.value.im.abs().to_f64() < 1e-35, "N = {n}");
        let b = error_bound_z(&z, *n, &c).unwrap();
        let (lo, hi) = b.interval.clone().unwrap();
        assert!(lo <= r.value.re && r.value.re <= hi, "N = {n}: {} not in ({}, {})", r.value.re, lo, hi);
        assert!(r.value.re.abs() <= b.bound);
        if n % 4 == 2 {
            let m = n / 4;
            assert_eq!(r.value.re.is_negative(), m % 2 == 1, "N = {n}");
        }
    }
}

#[test]
fn z_bounds_hold_across_the_sector() {
    let c = ctx();
    for r in [10.0, 30.0] {
        for theta in [0.0, 0.5 * PI, PI, 1.1 * PI, 1.3 * PI, -1.4 * PI] {
            let z = SheetPoint::polar_f64(r, theta, &c);
            let f = incomplete_gamma_zz_normalized(&z, &c).unwrap().value;
            for n in [2usize, 4, 6, 7] {
                let ev = eval_series_z(&z, n, &c).unwrap();
                let b = ev.bound.unwrap();
                let err = (&f - &ev.partial_sum).abs();
                assert!(err <= b.bound, "r = {r}, θ = {theta}, N = {n}");
            }
        }
    }
}

#[test]
fn z_bound_regimes() {
    let c = ctx();
    let z = SheetPoint::polar_f64(30.0, 1.1 * PI, &c);
    assert_eq!(error_bound_z(&z, 6, &c).unwrap().regime, BoundRegime::Sector);
    let z = SheetPoint::polar_f64(30.0, PI, &c);
    let b = error_bound_z(&z, 5, &c).unwrap();
    assert_eq!(b.regime, BoundRegime::Mod4);
    let t = z_series_terms(&z, 7, &c);
    let expect = &t[5].abs() + &t[6].abs();
    assert!(((&b.bound - &expect) / &expect).abs().to_f64() < 1e-30);
    let z = SheetPoint::principal(c.complex(10.0, 0.0));
    let b = error_bound_z(&z, 6, &c).unwrap();
    let t = z_series_terms(&z, 8, &c);
    let (lo, hi) = b.interval.unwrap();
    // −R_6 ∈ (0, A_6 + A_7)
    assert!(hi.is_zero());
    assert!(((&lo + &(&t[6].abs() + &t[7].abs())) / &lo).abs().to_f64() < 1e-30);
    let far = SheetPoint::polar_f64(30.0, 1.5 * PI, &c);
    assert!(matches!(error_bound_z(&far, 4, &c), Err(Error::Sector(_))));
    assert!(matches!(eval_series_z(&z, 1, &c), Err(Error::Domain(_))));
}

#[test]
fn real_arguments_give_real_values() {
    let c = ctx();
    let a = SheetPoint::principal(c.complex(17.0, 0.0));
    let ev = eval_series_large_a(&a, &c.frac(5, 2), 7, &c).unwrap();
    assert!(ev.partial_sum.im.is_zero());
    let z = SheetPoint::principal(c.complex(17.0, 0.0));
    let ev = eval_series_z(&z, 7, &c).unwrap();
    assert!(ev.partial_sum.im.is_zero());
}
