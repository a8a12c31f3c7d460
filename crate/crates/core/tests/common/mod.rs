//! Reference values that do not go through the library's series.
//!
//! σ is rebuilt from the Jacobi theta function θ1, summed as a Fourier
//! series rather than the product the library uses, and η from the ratio
//! θ1'''(0)/θ1'(0):
//!
//! ```text
//! σ(z) = (2ω1/π) · exp(η z²/(2ω1)) · θ1(v)/θ1'(0),   v = πz/(2ω1)
//! η    = −(π²/(12ω1)) · θ1'''(0)/θ1'(0)
//! ```

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Nome for real half-period `omega1` and `ω2 = i·omega2_im`.
pub fn nome(omega1: f64, omega2_im: f64) -> f64 {
    (-PI * omega2_im / omega1).exp()
}

/// θ1(v) = 2 Σ_{n≥0} (−1)^n q^{(n+½)²} sin((2n+1)v).
pub fn theta1(v: Complex64, q: f64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..200 {
        let m = n as f64 + 0.5;
        let w = q.powf(m * m);
        let term = w * ((2 * n + 1) as f64 * v).sin();
        sum += if n % 2 == 0 { term } else { -term };
        if w * ((2 * n + 1) as f64 * v.im.abs()).cosh() < 1e-300 || (w < 1e-18 && term.norm() < 1e-18 * sum.norm()) {
            break;
        }
    }
    2.0 * sum
}

/// θ1'(0) and θ1'''(0).
pub fn theta1_derivatives(q: f64) -> (f64, f64) {
    let (mut d1, mut d3) = (0.0, 0.0);
    for n in 0..200 {
        let m = n as f64 + 0.5;
        let w = q.powf(m * m);
        let k = (2 * n + 1) as f64;
        let s = if n % 2 == 0 { 1.0 } else { -1.0 };
        d1 += s * w * k;
        d3 -= s * w * k * k * k;
        if w < 1e-30 {
            break;
        }
    }
    (2.0 * d1, 2.0 * d3)
}

pub fn eta(omega1: f64, omega2_im: f64) -> f64 {
    let (d1, d3) = theta1_derivatives(nome(omega1, omega2_im));
    -PI * PI / (12.0 * omega1) * d3 / d1
}

/// ln σ(z), principal branch of the logarithm of θ1.
pub fn log_sigma(omega1: f64, omega2_im: f64, z: Complex64) -> Complex64 {
    let q = nome(omega1, omega2_im);
    let (d1, _) = theta1_derivatives(q);
    let e = eta(omega1, omega2_im);
    let v = PI * z / (2.0 * omega1);
    (2.0 * omega1 / PI).ln() + e * z * z / (2.0 * omega1) + theta1(v, q).ln() - d1.ln()
}

/// ζ as the centred difference of the oracle ln σ.
pub fn zeta(omega1: f64, omega2_im: f64, z: Complex64) -> Complex64 {
    let h = 1e-5;
    let f = |dz: Complex64| log_sigma(omega1, omega2_im, z + dz);
    // Fourth-order stencil keeps the truncation error near 1e-18.
    let hc = Complex64::new(h, 0.0);
    (-f(2.0 * hc) + 8.0 * f(hc) - 8.0 * f(-hc) + f(-2.0 * hc)) / (12.0 * h)
}

/// e1, e2, e3 from the theta constants:
/// `e1 − e3 = cθ3⁴`, `e2 − e3 = cθ2⁴`, `c = (π/(2ω1))²`, and `e1 + e2 + e3 = 0`.
pub fn roots(omega1: f64, omega2_im: f64) -> (f64, f64, f64) {
    let q = nome(omega1, omega2_im);
    let (mut t2, mut t3) = (0.0, 1.0);
    for n in 0..200 {
        let m = n as f64 + 0.5;
        t2 += 2.0 * q.powf(m * m);
        if n > 0 {
            t3 += 2.0 * q.powi((n * n) as i32);
        }
        if q.powf(m * m) < 1e-30 {
            break;
        }
    }
    let c = (PI / (2.0 * omega1)).powi(2);
    let e3 = -c * (t3.powi(4) + t2.powi(4)) / 3.0;
    (e3 + c * t3.powi(4), e3 + c * t2.powi(4), e3)
}

/// Single disk vortex velocity by hand: `−n/(i(z − R²/z̄))`.
pub fn disk_single(z: Complex64, n: i32, r2: f64) -> Complex64 {
    let image = r2 * r2 / z.conj();
    -(n as f64) / (Complex64::i() * (z - image))
}

/// Seeded generator for reproducible random configurations.
pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
