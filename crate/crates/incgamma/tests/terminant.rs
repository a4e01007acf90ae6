use incgamma::gamma::{incomplete_gamma_oracle, SheetPoint};
use incgamma::terminant::{
    c_of_phi, stokes_residual, terminant, terminant_integral, terminant_smoothed, TerminantRoute,
};
use incgamma::{Complex, Error, PrecisionContext, Real};
use std::f64::consts::PI;

fn ctx() -> PrecisionContext {
    PrecisionContext::new(128).unwrap()
}

fn rel(a: &Complex, b: &Complex) -> f64 {
    (a - b).log2_abs() - b.log2_abs()
}

/// `E₁(x) = e^{−x}/(x+1−1/(x+3−4/(x+5−…)))`, evaluated bottom-up.
fn e1(x: &Real, c: &PrecisionContext) -> Real {
    let mut t = c.zero();
    for k in (1..600i64).rev() {
        t = &c.int(k * k) / &(&(x + (2 * k + 1)) - &t);
    }
    &(-x).exp(c) / &(&(x + 1) - &t)
}

#[test]
fn defining_identity_at_integer_order() {
    let c = ctx();
    let x = c.int(5);
    // Γ(a,x) = (Γ(a+1,x) − x^a e^{−x})/a stepped down from Γ(0,x) = E₁(x)
    let ex = (-&x).exp(&c);
    let g_m1 = -(&e1(&x, &c) - &(&ex / &x));
    let g_m2 = &(&g_m1 - &(&ex / &(&x * &x))) / -2;
    let t = terminant(&c.int(3), &SheetPoint::principal(Complex::from_real(x.clone())), &c).unwrap();
    assert_eq!(t.route, TerminantRoute::Integral);
    // e^{3πi} = −1, Γ(3) = 2: T = −Γ(−2,5)·2/(2πi)
    let back = t.value.mul_i().scale(&c.pi().ldexp(1)).scale(&c.frac(-1, 2));
    assert!(rel(&back, &Complex::from_real(g_m2.clone())) < -110.0);
    let oracle = incomplete_gamma_oracle(&c.complex(-2.0, 0.0), &c.complex(5.0, 0.0), &c).unwrap().value;
    assert!(rel(&oracle, &Complex::from_real(g_m2)) < -110.0);
}

#[test]
fn integral_and_continued_routes_agree() {
    let c = ctx();
    for (p, r, th) in [(3.0, 5.0, 0.6), (20.5, 20.0, 0.3), (40.0, 40.0, -0.7), (7.25, 3.0, 0.74)] {
        let w = SheetPoint::polar_f64(r, th * PI, &c);
        let a = terminant_integral(&c.f64(p), &w.value, &c).unwrap().value;
        let b = terminant(&c.f64(p), &SheetPoint::new(w.value.clone(), 0), &c).unwrap();
        let forced = SheetPoint::new(w.value.clone(), 1);
        let up = terminant(&c.f64(p), &forced, &c).unwrap();
        assert_eq!(up.route, TerminantRoute::GammaContinued);
        // T(w e^{2πi}) = e^{−2πip} T(w) + 1
        let turn = Complex::cis(&(&c.pi().ldexp(1) * &c.f64(-p)), &c);
        let expect = &(&a * &turn) + &c.cone();
        assert!(rel(&up.value, &expect) < -100.0, "p = {p}, θ = {th}");
        assert!(rel(&b.value, &a) < -100.0);
    }
}

#[test]
fn continuation_is_continuous_across_the_negative_axis() {
    let c = ctx();
    for p in [30.0, 30.5, 12.25] {
        let below = terminant(&c.f64(p), &SheetPoint::polar_f64(30.0, PI - 1e-12, &c), &c).unwrap().value;
        let above = terminant(&c.f64(p), &SheetPoint::polar_f64(30.0, PI + 1e-12, &c), &c).unwrap().value;
        // the step is 2e−12 in φ and |dT/dφ| ≲ |w|(|T| + 1)
        let slack = 1e-10 * (below.abs().to_f64() + 1.0) * 30.0;
        assert!((&below - &above).abs().to_f64() < slack, "p = {p}");
        let down = terminant(&c.f64(p), &SheetPoint::polar_f64(30.0, -PI - 1e-12, &c), &c).unwrap().value;
        let up = terminant(&c.f64(p), &SheetPoint::polar_f64(30.0, -PI + 1e-12, &c), &c).unwrap().value;
        assert!((&down - &up).abs().to_f64() < slack, "p = {p}");
    }
}

#[test]
fn exponentially_small_on_the_positive_axis() {
    let c = ctx();
    let r = 30.0;
    for p in [29.5, 30.0, 31.0] {
        let t = terminant(&c.f64(p), &SheetPoint::polar_f64(r, 0.0, &c), &c).unwrap();
        let scale = -2.0 * r * std::f64::consts::LOG2_E;
        let l = t.value.log2_abs();
        assert!(l < scale + 4.0 && l > scale - 12.0, "p = {p}: log2|T| = {l}, scale {scale}");
    }
}

#[test]
fn integral_route_refuses_the_pinch() {
    let c = ctx();
    let w = c.complex(-10.0, 1e-5);
    assert!(matches!(terminant_integral(&c.int(3), &w, &c), Err(Error::Singular(_))));
    assert!(matches!(terminant(&c.zero(), &SheetPoint::principal(w), &c), Err(Error::Domain(_))));
}

#[test]
fn stokes_variable() {
    let c = PrecisionContext::new(256).unwrap();
    assert!(c_of_phi(&c.pi(), &c).c.log2_abs() < -250.0);
    let e = 0.1;
    let s = c_of_phi(&(&c.pi() + &c.f64(e)), &c);
    let series = Complex::from_f64(e - e.powi(3) / 36.0, e * e / 6.0 - e.powi(4) / 270.0, c.wp());
    assert!((&s.c - &series).abs().to_f64() < 2.0 * e.powi(5));
    for phi in [0.5, 2.0, 4.0, -1.5, 8.5, 3.14159] {
        let s = c_of_phi(&c.f64(phi), &c);
        assert!(stokes_residual(&s, &c).log2_abs() < -(256.0 - 32.0), "φ = {phi}");
        // the branch is ψ-like: Re c has the sign of φ − π
        assert_eq!(s.c.re.is_negative(), phi < PI, "φ = {phi}");
    }
}

#[test]
fn smoothing_on_the_stokes_line() {
    let c = ctx();
    let w = SheetPoint::principal(c.complex(-30.0, 0.0));
    let s = terminant_smoothed(&c.int(30), &w, &c).unwrap();
    assert_eq!(s.route, TerminantRoute::ErfSmoothed);
    assert!((&s.value - &Complex::from_real(c.frac(1, 2))).log2_abs() < -120.0);
    let t = terminant(&c.int(30), &w, &c).unwrap().value;
    // the real part is exactly one half; the imaginary part is O(|w|^{−1/2})
    assert!((&t.re - &c.frac(1, 2)).abs().to_f64() < 1e-30);
    assert!(t.im.abs().to_f64() < 1.0 / 30f64.sqrt());
}

#[test]
fn smoothing_accuracy_near_the_stokes_line() {
    let c = ctx();
    let mut worst: f64 = 0.0;
    for r in [20.0, 40.0, 80.0] {
        for k in -4..=4 {
            let phi = PI + 0.1 * k as f64;
            let w = SheetPoint::polar_f64(r, phi, &c);
            let p = c.f64(r + 0.5);
            let t = terminant(&p, &w, &c).unwrap().value;
            let s = terminant_smoothed(&p, &w, &c).unwrap();
            worst = worst.max(((&t - &s.value).abs() / &s.abs_err).to_f64());
        }
    }
    assert!(worst <= 10.0, "C = {worst}");
}

#[test]
fn mirrored_smoothing_below_the_negative_axis() {
    let c = ctx();
    for (p, phi) in [(40.0, -0.9 * PI), (40.5, -1.1 * PI), (40.0, -1.05 * PI)] {
        let w = SheetPoint::polar_f64(40.0, phi, &c);
        let t = terminant(&c.f64(p), &w, &c).unwrap().value;
        let s = terminant_smoothed(&c.f64(p), &w, &c).unwrap();
        assert!((&t - &s.value).abs() <= s.abs_err, "p = {p}, φ = {phi}");
    }
    let far = SheetPoint::polar_f64(40.0, 3.05 * PI, &c);
    assert!(matches!(terminant_smoothed(&c.int(40), &far, &c), Err(Error::Sector(_))));
}

#[test]
fn transition_is_monotone() {
    let c = ctx();
    let r = 40.0;
    let mut last = -1.0;
    let mut crossing = None;
    for k in -20..=20 {
        let phi = PI + 0.02 * k as f64;
        let t = terminant(&c.f64(r), &SheetPoint::polar_f64(r, phi, &c), &c).unwrap().value.re.to_f64();
        assert!(t > last, "φ − π = {}", phi - PI);
        if last < 0.5 && t >= 0.5 && crossing.is_none() {
            crossing = Some(phi - PI);
        }
        last = t;
    }
    assert!(crossing.unwrap().abs() < 0.02 + 1e-12);
}
