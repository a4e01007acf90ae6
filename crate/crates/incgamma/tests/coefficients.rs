use incgamma::coefficients::{
    a_coeff_resurgence_integral, a_coeff_stirling, a_coeffs_bm_recurrence, a_coeffs_exact, a_coeffs_potential,
    a_coeffs_resurgence_integral, a_coeffs_series_root, b_coeff_bell, b_coeff_potential, b_coeff_resurgence_integral,
    b_coeff_stirling, b_coeff_stirling_real, b_coeffs_resurgence_integral, b_poly_recurrence, bm_sequence,
    potential_polynomials, series, ExactCoefficient, SeriesKind,
};
use incgamma::{Error, PrecisionContext, Real};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn fact(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |f, k| f * k)
}

#[test]
fn first_b_polynomials() {
    let b = b_poly_recurrence(40);
    let c = |n: usize| -> Vec<i64> { b[n].coefficients().iter().map(|x| i64::try_from(x).unwrap()).collect() };
    assert_eq!(c(0), [1]);
    assert_eq!(c(1), [0, 1]);
    assert_eq!(c(2), [0, 1, 2]);
    assert_eq!(c(3), [0, 1, 8, 6]);
    assert_eq!(b[2].eval_rational(&q(3, 1)), q(21, 1));
    assert_eq!(b[3].eval_rational(&q(2, 1)), q(82, 1));
    assert_eq!(b[40].leading(), Some(&fact(40)));
}

#[test]
fn b_polynomial_structure() {
    let b = b_poly_recurrence(60);
    for (n, p) in b.iter().enumerate() {
        assert_eq!(p.degree(), Some(n));
        assert_eq!(p.leading(), Some(&fact(n as u64)));
        if n >= 1 {
            assert!(p.coefficient(0).is_zero(), "b_{n} has a constant term");
            assert!(p.coefficients()[1..].iter().all(|c| c.is_positive()), "b_{n} has a non-positive coefficient");
        }
    }
}

#[test]
fn b_routes_agree_exactly() {
    let b = b_poly_recurrence(25);
    for lambda in [q(3, 2), q(2, 1), q(3, 1), q(10, 1)] {
        let t = potential_polynomials(SeriesKind::ForB(lambda.clone()), 20).unwrap();
        for n in 0..=20 {
            let want = b[n].eval_rational(&lambda);
            assert_eq!(b_coeff_stirling(&lambda, n), want, "stirling n={n} λ={lambda}");
            assert_eq!(b_coeff_potential(&t, n).unwrap(), want, "potential n={n} λ={lambda}");
            assert_eq!(b_coeff_bell(&t, n).unwrap(), want, "bell n={n} λ={lambda}");
        }
    }
    let l = q(7, 2);
    assert_eq!(b_coeff_stirling(&l, 25), b[25].eval_rational(&l));
    assert_eq!(b_coeff_stirling(&q(2, 1), 1), q(2, 1));
    assert_eq!(b_coeff_stirling(&q(2, 1), 3), q(82, 1));
}

#[test]
fn b_stirling_sum_in_floating_point() {
    let ctx = PrecisionContext::new(192).unwrap();
    let b = b_poly_recurrence(30);
    for (num, den) in [(3, 2), (10, 1), (101, 100)] {
        let l = Real::from_rational(&q(num, den), ctx.wp());
        for n in [0, 5, 30] {
            let got = b_coeff_stirling_real(&l, n, &ctx);
            let want = Real::from_rational(&b[n].eval_rational(&q(num, den)), ctx.wp());
            let rel = (&(&got - &want) / &want).abs();
            assert!(rel.log2_abs() < -185.0, "n={n} λ={num}/{den}: {}", rel.to_f64());
        }
    }
}

#[test]
fn bell_table_normalization() {
    let l = q(5, 2);
    let t = potential_polynomials(SeriesKind::ForB(l.clone()), 12).unwrap();
    for j in 1..=10 {
        assert_eq!(t.bell(j, 1), t.a[j]);
        assert_eq!(&t.a[0] * t.potential(1, j), t.a[j]);
        assert_eq!(t.a[j], &l / BigRational::from_integer(fact(j as u64 + 1)));
    }
    assert_eq!(t.potential(0, 0), q(1, 1));
    assert!((1..=12).all(|j| t.potential(0, j).is_zero()));
    assert_eq!(t.bell(0, 0), q(1, 1));
    assert!((1..=12).all(|j| t.bell(j, 0).is_zero()));
    let err = potential_polynomials(SeriesKind::ForB(q(1, 1)), 5).unwrap_err();
    assert!(matches!(err, Error::Domain(_)));
}

#[test]
fn comtet_matches_power_recurrence() {
    for kind in [SeriesKind::ForB(q(3, 1)), SeriesKind::ForB(q(7, 3)), SeriesKind::ForA] {
        let t = potential_polynomials(kind, 14).unwrap();
        let g: Vec<BigRational> = t.a.iter().map(|x| x / &t.a[0]).collect();
        for rho in [q(-15, 1), q(-7, 2), q(1, 3), q(-1, 2), q(5, 1)] {
            let h = series::power(&g, &rho, 14).unwrap();
            for j in 0..=14 {
                assert_eq!(t.comtet(&rho, j).unwrap(), h[j], "ρ={rho} j={j}");
                assert_eq!(t.potential_from_bell(&rho, j), h[j], "bell ρ={rho} j={j}");
            }
        }
        for n in 0..=14usize {
            let rho = -BigRational::from_integer((n as i64 + 1).into());
            let h = series::power(&g, &rho, n).unwrap();
            assert_eq!(t.comtet(&rho, n).unwrap(), h[n]);
        }
    }
}

fn ex(n: i64, d: i64, s: u8) -> ExactCoefficient {
    ExactCoefficient::new(q(n, d), s)
}

#[test]
fn first_a_coefficients() {
    let a = a_coeffs_exact(4);
    assert_eq!(a, [ex(1, 1, 0), ex(-1, 3, 1), ex(1, 12, 0), ex(-4, 135, 1), ex(1, 288, 0)]);
    assert_eq!(a_coeff_stirling(0), ex(1, 1, 0));
    assert_eq!(a_coeff_stirling(2), ex(1, 12, 0));
    let bm = bm_sequence(3);
    assert_eq!(bm[1], q(1, 1));
    assert_eq!(bm[2], q(-1, 6));
}

#[test]
fn a_routes_agree_exactly() {
    let exact = a_coeffs_exact(30);
    assert_eq!(a_coeffs_bm_recurrence(30).unwrap(), exact);
    assert_eq!(a_coeffs_potential(30).unwrap(), exact);
    assert_eq!(a_coeffs_series_root(30).unwrap(), exact);
    for n in 0..=30 {
        assert_eq!(a_coeff_stirling(n), exact[n], "n={n}");
    }
}

#[test]
fn a_parity() {
    for (n, a) in a_coeffs_exact(40).iter().enumerate() {
        assert_eq!(a.s as usize, n % 2);
        assert!(!a.is_zero());
    }
}

/// Coefficients of `Γ*(z) ~ Σ γ_k z^{−k}` from `exp(Σ B_{2j}/(2j(2j−1) z^{2j−1}))`.
fn stirling_gamma_star(kmax: usize) -> Vec<BigRational> {
    let m = 2 * kmax + 2;
    let mut a: Vec<BigRational> = (0..=m).map(|k| q(1, k as i64 + 1)).collect();
    let mut bern = vec![BigRational::zero(); m + 1];
    for n in 0..=m {
        for j in (1..=n).rev() {
            a[j - 1] = BigRational::from_integer((j as i64).into()) * (&a[j - 1] - &a[j]);
        }
        bern[n] = a[0].clone();
    }
    let mut c = vec![BigRational::zero(); kmax + 1];
    for j in 1.. {
        let k = 2 * j - 1;
        if k > kmax {
            break;
        }
        c[k] = &bern[2 * j] / BigRational::from_integer(((2 * j) * (2 * j - 1)).into());
    }
    let mut h = vec![BigRational::zero(); kmax + 1];
    h[0] = q(1, 1);
    for k in 1..=kmax {
        let mut s = BigRational::zero();
        for m in 1..=k {
            s += BigRational::from_integer((m as i64).into()) * &c[m] * &h[k - m];
        }
        h[k] = s / BigRational::from_integer((k as i64).into());
    }
    h
}

#[test]
fn even_a_are_stirling_coefficients() {
    let g = stirling_gamma_star(10);
    assert_eq!(g[3], q(-139, 51840));
    let a = a_coeffs_exact(20);
    for k in 0..=10 {
        assert_eq!(a[2 * k], ExactCoefficient::new(g[k].clone(), 0), "k={k}");
    }
}

#[test]
fn b_resurgence_integrals() {
    let ctx = PrecisionContext::default_256();
    let b = b_poly_recurrence(20);
    let two = ctx.int(2);
    for (n, want) in [(0usize, 1i64), (1, 2)] {
        let v = b_coeff_resurgence_integral(&two, n, &ctx).unwrap();
        let d = (&v.value.re - &ctx.int(want)).abs();
        assert!(d <= &v.abs_err + &ctx.f64(1e-70), "n={n}");
    }
    let v = b_coeff_resurgence_integral(&ctx.int(3), 8, &ctx).unwrap();
    let want = Real::from_rational(&b[8].eval_rational(&q(3, 1)), ctx.wp());
    assert!((&(&v.value.re - &want) / &want).abs().to_f64() < 1e-70);
    for (num, den) in [(3, 2), (2, 1), (3, 1), (10, 1)] {
        let l = Real::from_rational(&q(num, den), ctx.wp());
        let vals = b_coeffs_resurgence_integral(&l, 20, &ctx).unwrap();
        for (n, v) in vals.iter().enumerate() {
            let want = Real::from_rational(&b[n].eval_rational(&q(num, den)), ctx.wp());
            let d = (&v.value.re - &want).abs();
            assert!(d <= &v.abs_err + &(&want * &ctx.f64(1e-70)), "n={n} λ={num}/{den}: {}", d.to_f64());
            assert!((&d / &want).to_f64() < 1e-60, "n={n} λ={num}/{den}");
        }
    }
    assert!(b_coeff_resurgence_integral(&ctx.one(), 3, &ctx).is_err());
}

#[test]
fn a_resurgence_integrals() {
    let ctx = PrecisionContext::default_256();
    let exact = a_coeffs_exact(12);
    let vals = a_coeffs_resurgence_integral(2, 12, &ctx).unwrap();
    for (k, v) in vals.iter().enumerate() {
        let n = k + 2;
        let want = exact[n].to_real(&ctx);
        let d = (&v.value.re - &want).abs();
        assert!(d <= &v.abs_err + &(&want.abs() * &ctx.f64(1e-70)), "n={n}: {}", d.to_f64());
        assert!((&d / &want).abs().to_f64() < 1e-60, "n={n}");
    }
    let v = a_coeff_resurgence_integral(9, &ctx).unwrap();
    assert!((&(&v.value.re - &exact[9].to_real(&ctx)) / &exact[9].to_real(&ctx)).abs().to_f64() < 1e-60);
    assert!(a_coeff_resurgence_integral(1, &ctx).is_err());
}

#[test]
fn even_generator_matches_exact_route() {
    let exact = a_coeffs_exact(60);
    let even = incgamma::coefficients::a_coeffs_even(30);
    for k in 0..=30 {
        assert_eq!(exact[2 * k].s, 0);
        assert_eq!(exact[2 * k].rational, even[k], "a_{}", 2 * k);
    }
}
