//! Small motions of the vortex–antivortex pair about its stationary points
//! `(±√(R1R2), 0)` in the annulus.
//!
//! Displacements are ordered `[x̃1, x̃2, ỹ1, ỹ2]`, vortex 1 being the `+1`
//! vortex at `+√(R1R2)`. To first order
//!
//! ```text
//! W̃′(z1) = ½[−a1(ỹ1 + ỹ2) + i(−a3 x̃1 + a2 x̃2)]
//! W̃′(z2) = ½[ a1(ỹ1 + ỹ2) + i(−a2 x̃1 + a3 x̃2)]
//! ```
//!
//! and the closed forms below are solved in the sum/difference variables
//! `S = x̃1 + x̃2`, `D = x̃1 − x̃2`, `P = ỹ1 + ỹ2`, `Q = ỹ1 − ỹ2`.

use std::f64::consts::PI;

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::Serialize;

use crate::domain::{DomainGeometry, Vortex, VortexConfiguration};
use crate::elliptic::EllipticContext;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearCoeffs {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    /// `√(2 a1 (a2 + a3))`; NaN if the radicand is negative.
    pub k: f64,
    pub r1: f64,
    pub r2: f64,
}

/// Which of the expected sign conditions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignConditions {
    pub a1_positive: bool,
    pub a2_positive: bool,
    pub sum_positive: bool,
    pub difference_negative: bool,
}

impl SignConditions {
    pub fn all(&self) -> bool {
        self.a1_positive && self.a2_positive && self.sum_positive && self.difference_negative
    }
}

/// Coefficients from the lattice roots with `ω1 = π`, `ω2 = i ln(R2/R1)`.
pub fn coeffs(r1: f64, r2: f64) -> Result<LinearCoeffs> {
    DomainGeometry::annulus(r1, r2)?;
    let ctx = EllipticContext::new(r1, r2, 1)?;
    let (e1, e2, e3) = ctx.roots();
    let (e1, e2, e3) = (e1.re, e2.re, e3.re);
    let eta = ctx.eta().re;
    let s = 2.0 / (r1 * r2);
    let a1 = s * (e1 - e2);
    let a2 = s * (-e3 + 2.0 * eta / PI);
    let a3 = s * (e2 - e1 - 2.0 * e3 - 2.0 * eta / PI);
    Ok(LinearCoeffs {
        a1,
        a2,
        a3,
        k: (2.0 * a1 * (a2 + a3)).sqrt(),
        r1,
        r2,
    })
}

impl LinearCoeffs {
    pub fn signs(&self) -> SignConditions {
        SignConditions {
            a1_positive: self.a1 > 0.0,
            a2_positive: self.a2 > 0.0,
            sum_positive: self.a3 + self.a2 > 0.0,
            difference_negative: self.a3 - self.a2 < 0.0,
        }
    }

    /// Period `2π/k` of the Schrödinger oscillation.
    pub fn period(&self) -> f64 {
        2.0 * PI / self.k
    }

    /// `d/dt [x̃1, x̃2, ỹ1, ỹ2] = M ·` displacements under the Schrödinger law.
    pub fn schrodinger_matrix(&self) -> Matrix4<f64> {
        let (a1, a2, a3) = (self.a1, self.a2, self.a3);
        #[rustfmt::skip]
        let m = Matrix4::new(
            0.0, 0.0, -a1, -a1,
            0.0, 0.0,  a1,  a1,
             a3, -a2, 0.0, 0.0,
             a2, -a3, 0.0, 0.0,
        );
        m
    }

    /// Same for the heat-flow law.
    pub fn heat_flow_matrix(&self) -> Matrix4<f64> {
        let (a1, a2, a3) = (self.a1, self.a2, self.a3);
        #[rustfmt::skip]
        let m = Matrix4::new(
             a3, -a2, 0.0, 0.0,
            -a2,  a3, 0.0, 0.0,
            0.0, 0.0,  a1,  a1,
            0.0, 0.0,  a1,  a1,
        );
        m
    }
}

fn from_reduced(s: f64, d: f64, p: f64, q: f64) -> [f64; 4] {
    [(s + d) / 2.0, (s - d) / 2.0, (p + q) / 2.0, (p - q) / 2.0]
}

/// Closed-form heat-flow displacements at time `t` from `x̃(0) = (δ1, δ2)`,
/// `ỹ(0) = (ε1, ε2)`.
pub fn heat_flow_solution(c: &LinearCoeffs, d1: f64, d2: f64, e1: f64, e2: f64, t: f64) -> [f64; 4] {
    let s = (d1 + d2) * ((c.a3 - c.a2) * t).exp();
    let d = (d1 - d2) * ((c.a3 + c.a2) * t).exp();
    let p = (e1 + e2) * (2.0 * c.a1 * t).exp();
    let q = e1 - e2;
    from_reduced(s, d, p, q)
}

/// Closed-form Schrödinger displacements; `x̃1 + x̃2` is conserved, the
/// difference oscillates with frequency `k` and `ỹ1 − ỹ2` drifts linearly.
pub fn schrodinger_solution(c: &LinearCoeffs, d1: f64, d2: f64, e1: f64, e2: f64, t: f64) -> [f64; 4] {
    let k = c.k;
    let s = d1 + d2;
    let d0 = d1 - d2;
    let p0 = e1 + e2;
    let dd0 = -2.0 * c.a1 * p0;
    let (sin, cos) = (k * t).sin_cos();
    let d = d0 * cos + dd0 / k * sin;
    let p = p0 + (c.a3 + c.a2) * (d0 * sin / k + dd0 * (1.0 - cos) / (k * k));
    let q = (e1 - e2) + (c.a3 - c.a2) * s * t;
    from_reduced(s, d, p, q)
}

/// The stationary pair displaced by `[x̃1, x̃2, ỹ1, ỹ2]`.
pub fn perturbed_pair(r1: f64, r2: f64, disp: [f64; 4]) -> Result<VortexConfiguration> {
    let r0 = (r1 * r2).sqrt();
    VortexConfiguration::new(
        DomainGeometry::annulus(r1, r2)?,
        vec![
            Vortex::new(r0 + disp[0], disp[2], 1),
            Vortex::new(-r0 + disp[1], disp[3], -1),
        ],
    )
}

/// Inverse of [`perturbed_pair`] (annulus configurations).
pub fn displacements(config: &VortexConfiguration) -> [f64; 4] {
    let r0 = (config.domain().inner_radius().unwrap_or(0.0) * config.domain().outer_radius()).sqrt();
    let z: Vec<Complex64> = config.positions();
    [z[0].re - r0, z[1].re + r0, z[0].im, z[1].im]
}
