mod common;

use std::f64::consts::PI;

use approx::assert_relative_eq;
use glvortex::elliptic::EllipticContext;
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn zeta_matches_theta_oracle() {
    let ctx = EllipticContext::new(0.5, 1.5, 1).unwrap();
    let w = 3f64.ln();
    for z in [c(0.3, 0.2), c(1.1, -0.4), c(-2.0, 0.7), c(0.05, 1.0)] {
        let want = common::zeta(PI, w, z);
        let got = ctx.zeta(z).unwrap();
        assert!((got - want).norm() < 1e-9 * want.norm().max(1.0), "z = {z}: {got} vs {want}");
    }
}

#[test]
fn log_sigma_real_part_matches_theta_oracle() {
    let ctx = EllipticContext::new(0.5, 1.5, 1).unwrap();
    let w = 3f64.ln();
    for z in [c(0.4, 0.1), c(2.0, -0.9), c(-0.7, 0.3)] {
        let want = common::log_sigma(PI, w, z).re;
        let got = ctx.log_sigma(z).unwrap().re;
        assert_relative_eq!(got, want, epsilon = 1e-12, max_relative = 1e-12);
    }
}

#[test]
fn eta_matches_theta_oracle() {
    for (r1, r2, n) in [(0.5, 1.5, 1), (0.1, 1.0, 2), (0.9, 1.0, 3), (0.2, 3.0, 5)] {
        let ctx = EllipticContext::new(r1, r2, n).unwrap();
        let want = common::eta(PI / n as f64, (r2 / r1).ln());
        assert_relative_eq!(ctx.eta().re, want, max_relative = 1e-12);
        assert!(ctx.eta().im.abs() < 1e-15);
    }
}

#[test]
fn quasi_periods_exact() {
    let ctx = EllipticContext::new(0.5, 1.5, 2).unwrap();
    let (w1, w2) = (ctx.omega1(), ctx.omega2());
    for z in [c(0.2, 0.1), c(-0.5, 0.6), c(1.3, -0.2)] {
        let base = ctx.zeta(z).unwrap();
        assert!((ctx.zeta(z + 2.0 * w1).unwrap() - base - 2.0 * ctx.eta()).norm() < 1e-12);
        assert!((ctx.zeta(z + 2.0 * w2).unwrap() - base - 2.0 * ctx.eta_prime()).norm() < 1e-12);
    }
}

#[test]
fn zeta_derivative_is_minus_p() {
    let ctx = EllipticContext::new(0.3, 1.0, 1).unwrap();
    let h = 1e-5;
    for z in [c(0.4, 0.3), c(1.7, -0.5), c(-0.9, 0.2)] {
        let fd = (ctx.zeta(z + h).unwrap() - ctx.zeta(z - h).unwrap()) / (2.0 * h);
        let p = ctx.weierstrass_p(z).unwrap();
        assert!((fd + p).norm() < 1e-6 * p.norm(), "z = {z}");
    }
}

#[test]
fn p_prime_is_derivative_of_p() {
    let ctx = EllipticContext::new(0.5, 1.5, 1).unwrap();
    let h = 1e-5;
    for z in [c(0.4, 0.3), c(2.2, 0.5)] {
        let fd = (ctx.weierstrass_p(z + h).unwrap() - ctx.weierstrass_p(z - h).unwrap()) / (2.0 * h);
        let pp = ctx.weierstrass_p_prime(z).unwrap();
        assert!((fd - pp).norm() < 1e-6 * pp.norm());
    }
}

#[test]
fn differential_equation_of_p() {
    // ℘′² = 4(℘ − e1)(℘ − e2)(℘ − e3)
    let ctx = EllipticContext::new(0.4, 1.2, 2).unwrap();
    let (e1, e2, e3) = ctx.roots();
    for z in [c(0.3, 0.2), c(-0.6, 0.5), c(1.0, -0.3)] {
        let p = ctx.weierstrass_p(z).unwrap();
        let lhs = ctx.weierstrass_p_prime(z).unwrap().powi(2);
        let rhs = 4.0 * (p - e1) * (p - e2) * (p - e3);
        assert!((lhs - rhs).norm() < 1e-10 * lhs.norm().max(1.0));
    }
}

fn cell_point() -> impl Strategy<Value = (f64, f64)> {
    (-0.95f64..0.95, -0.95f64..0.95)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parity((a, b) in cell_point(), ratio in 0.1f64..0.9, n in 1usize..4) {
        let ctx = EllipticContext::new(ratio, 1.0, n).unwrap();
        let z = c(a * ctx.omega1_re(), b * ctx.omega2_im());
        prop_assume!(z.norm() > 1e-3);
        let zeta = ctx.zeta(z).unwrap();
        let p = ctx.weierstrass_p(z).unwrap();
        let pp = ctx.weierstrass_p_prime(z).unwrap();
        prop_assert!((ctx.zeta(-z).unwrap() + zeta).norm() <= 1e-12 * zeta.norm().max(1.0));
        prop_assert!((ctx.weierstrass_p(-z).unwrap() - p).norm() <= 1e-12 * p.norm().max(1.0));
        prop_assert!((ctx.weierstrass_p_prime(-z).unwrap() + pp).norm() <= 1e-12 * pp.norm().max(1.0));
    }

    #[test]
    fn addition_formula((a, b) in cell_point(), (s, t) in cell_point(), ratio in 0.1f64..0.9) {
        let ctx = EllipticContext::new(ratio, 1.0, 1).unwrap();
        let u = c(a * ctx.omega1_re(), b * ctx.omega2_im());
        let v = c(s * ctx.omega1_re(), t * ctx.omega2_im());
        let pu = ctx.weierstrass_p(u).unwrap();
        let pv = ctx.weierstrass_p(v).unwrap();
        prop_assume!(u.norm() > 1e-2 && v.norm() > 1e-2 && (u + v).norm() > 1e-2);
        prop_assume!((pu - pv).norm() > 1e-2);
        let lhs = ctx.zeta(u + v).unwrap() - ctx.zeta(u).unwrap() - ctx.zeta(v).unwrap();
        let rhs = 0.5 * (ctx.weierstrass_p_prime(u).unwrap() - ctx.weierstrass_p_prime(v).unwrap()) / (pu - pv);
        prop_assert!((lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1.0), "{} vs {}", lhs, rhs);
    }
}
