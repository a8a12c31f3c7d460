//! Complex potential and conjugate velocity of ideal flow with point vortices.
//!
//! Circulation follows the motion laws: a vortex of degree `n` contributes
//! `n/(i(z − z_k))` to `W′(z)` with no `2π` factor. `W′ = v_x − i·v_y`.
//!
//! Disk `|z| < R2`: each vortex `z_k` has an image of opposite degree at
//! `R2²/conj(z_k)`.
//!
//! Annulus `R1 < |z| < R2`: the potential is a sum of `ln σ` terms on the
//! lattice `ω1 = π`, `ω2 = i ln(R2/R1)`,
//!
//! ```text
//! W(z) = −i Σ n_k [ ln σ(a_k) − ln σ(b_k) − (2η/ω1) ln(r_k/R2) ln z ]
//! a_k  = i ln(z/z_k),   b_k = a_k + 2i ln(r_k/R2)  (= i ln(z z̄_k/R2²))
//! ```
//!
//! Writing `b_k` relative to `a_k` keeps `ζ(a_k) − ζ(b_k)` independent of the
//! logarithm branch, so velocities are single-valued.

use num_complex::Complex64;

use crate::domain::{DomainGeometry, SelfInteraction, Vortex, VortexConfiguration};
use crate::elliptic::EllipticContext;
use crate::error::{Error, Result};

const SINGULAR_EPS: f64 = 1e-12;

fn i() -> Complex64 {
    Complex64::i()
}

/// Conjugate velocity `W̃′(z_j)` of living vortex `j`, its own singular
/// term removed.
pub fn vortex_velocity_conj(config: &VortexConfiguration, j: usize) -> Result<Complex64> {
    let vj = config
        .vortices()
        .get(j)
        .ok_or_else(|| Error::InvalidConfiguration(format!("no vortex with index {j}")))?;
    if !vj.alive {
        return Err(Error::DeadVortex(j));
    }
    config.check_separation()?;
    vortex_velocity_unchecked(config, j)
}

/// `W̃′(z_j)` for every vortex; dead vortices get zero.
pub fn velocities_conj(config: &VortexConfiguration) -> Result<Vec<Complex64>> {
    config.check_separation()?;
    config
        .vortices()
        .iter()
        .enumerate()
        .map(|(j, v)| {
            if v.alive {
                vortex_velocity_unchecked(config, j)
            } else {
                Ok(Complex64::new(0.0, 0.0))
            }
        })
        .collect()
}

fn vortex_velocity_unchecked(config: &VortexConfiguration, j: usize) -> Result<Complex64> {
    let zj = config.vortices()[j].position;
    match *config.domain() {
        DomainGeometry::Disk { r2 } => Ok(disk_vortex_velocity(config.vortices(), j, r2)),
        DomainGeometry::Annulus { r2, .. } => {
            let ctx = config.context().expect("annulus configuration carries a context");
            let nj = config.vortices()[j].degree as f64;
            let mut w = annulus_sum(ctx, config.vortices(), zj, r2, Some(j))?;
            let rj = zj.norm();
            w -= nj / zj * ctx.zeta(2.0 * i() * (rj / r2).ln())?;
            if config.self_interaction() == SelfInteraction::Routh {
                w += i() * nj / (2.0 * zj);
            }
            Ok(w)
        }
    }
}

fn disk_vortex_velocity(vortices: &[Vortex], j: usize, r2: f64) -> Complex64 {
    let zj = vortices[j].position;
    let mut w = Complex64::new(0.0, 0.0);
    for (k, v) in vortices.iter().enumerate().filter(|(_, v)| v.alive) {
        let n = v.degree as f64;
        if k != j {
            w += n / (i() * (zj - v.position));
        }
        if let Some(image) = disk_image(v.position, r2) {
            w -= n / (i() * (zj - image));
        }
    }
    w
}

/// `ln(z/w)` without the cancellation of `ln` near 1 when `z ≈ w`.
pub(crate) fn log_ratio(z: Complex64, w: Complex64) -> Complex64 {
    let u = (z - w) / w;
    Complex64::new(0.5 * (2.0 * u.re + u.norm_sqr()).ln_1p(), u.im.atan2(1.0 + u.re))
}

/// Reflection of `z` in the circle `|z| = r2`; `None` for the centre.
pub fn disk_image(z: Complex64, r2: f64) -> Option<Complex64> {
    if z == Complex64::new(0.0, 0.0) {
        None
    } else {
        Some(r2 * r2 / z.conj())
    }
}

/// `(1/z)Σ_k n_k[ζ(a_k) − ζ(b_k)] + (2iη/(ω1 z))Σ_k n_k ln(r_k/R2)`, with
/// vortex `skip` left out of the first sum only.
fn annulus_sum(
    ctx: &EllipticContext,
    vortices: &[Vortex],
    z: Complex64,
    r2: f64,
    skip: Option<usize>,
) -> Result<Complex64> {
    let mut pair = Complex64::new(0.0, 0.0);
    let mut log_sum = 0.0;
    for (k, v) in vortices.iter().enumerate().filter(|(_, v)| v.alive) {
        let n = v.degree as f64;
        let lk = (v.position.norm() / r2).ln();
        log_sum += n * lk;
        if Some(k) == skip {
            continue;
        }
        let a = i() * log_ratio(z, v.position);
        let b = a + 2.0 * i() * lk;
        pair += n * (ctx.zeta(a)? - ctx.zeta(b)?);
    }
    Ok(pair / z + 2.0 * i() * ctx.eta() / (ctx.omega1_re() * z) * log_sum)
}

fn check_field_point(config: &VortexConfiguration, z: Complex64) -> Result<()> {
    for (index, v) in config.living() {
        if (z - v.position).norm() < SINGULAR_EPS {
            return Err(Error::Singularity { z, index });
        }
    }
    if z.norm() == 0.0 && config.domain().inner_radius().is_some() {
        return Err(Error::InvalidConfiguration("the annulus potential is undefined at z = 0".into()));
    }
    Ok(())
}

/// Conjugate velocity `W′(z)` at a field point.
pub fn field_velocity_conj(config: &VortexConfiguration, z: Complex64) -> Result<Complex64> {
    check_field_point(config, z)?;
    match *config.domain() {
        DomainGeometry::Disk { r2 } => {
            let mut w = Complex64::new(0.0, 0.0);
            for (_, v) in config.living() {
                let n = v.degree as f64;
                w += n / (i() * (z - v.position));
                if let Some(image) = disk_image(v.position, r2) {
                    w -= n / (i() * (z - image));
                }
            }
            Ok(w)
        }
        DomainGeometry::Annulus { r2, .. } => {
            let ctx = config.context().expect("annulus configuration carries a context");
            annulus_sum(ctx, config.vortices(), z, r2, None)
        }
    }
}

/// Complex potential `W(z)`; defined up to an additive constant, and the
/// imaginary parts of its logarithms only modulo 2π.
pub fn complex_potential(config: &VortexConfiguration, z: Complex64) -> Result<Complex64> {
    check_field_point(config, z)?;
    let mut w = Complex64::new(0.0, 0.0);
    match *config.domain() {
        DomainGeometry::Disk { r2 } => {
            for (_, v) in config.living() {
                let n = v.degree as f64;
                let mut term = (z - v.position).ln();
                if let Some(image) = disk_image(v.position, r2) {
                    term -= (z - image).ln();
                }
                w += -i() * n * term;
            }
        }
        DomainGeometry::Annulus { r2, .. } => {
            let ctx = config.context().expect("annulus configuration carries a context");
            let ln_z = z.ln();
            for (_, v) in config.living() {
                let n = v.degree as f64;
                let lk = (v.position.norm() / r2).ln();
                let a = i() * log_ratio(z, v.position);
                let b = a + 2.0 * i() * lk;
                let term = ctx.log_sigma(a)? - ctx.log_sigma(b)? - 2.0 * ctx.eta() / ctx.omega1_re() * lk * ln_z;
                w += -i() * n * term;
            }
        }
    }
    Ok(w)
}

/// Phase `Φ0 = Re W`, defined modulo 2π and up to an additive constant.
pub fn phase_field(config: &VortexConfiguration, z: Complex64) -> Result<f64> {
    Ok(complex_potential(config, z)?.re)
}

/// Largest relative gap between the disk velocities of `disk` and the
/// annulus velocities of the same vortices once an inner hole of radius
/// `r1_small` is cut out, using the default self-interaction.
pub fn circle_limit_check(disk: &VortexConfiguration, r1_small: f64) -> Result<f64> {
    circle_limit_check_with(disk, r1_small, SelfInteraction::default())
}

pub fn circle_limit_check_with(
    disk: &VortexConfiguration,
    r1_small: f64,
    law: SelfInteraction,
) -> Result<f64> {
    let DomainGeometry::Disk { r2 } = *disk.domain() else {
        return Err(Error::InvalidConfiguration("circle limit needs a disk configuration".into()));
    };
    let annulus = VortexConfiguration::new(DomainGeometry::annulus(r1_small, r2)?, disk.vortices().to_vec())?
        .with_self_interaction(law);
    let mut worst: f64 = 0.0;
    for (j, _) in disk.living() {
        let reference = vortex_velocity_conj(disk, j)?;
        let approx = vortex_velocity_conj(&annulus, j)?;
        worst = worst.max((approx - reference).norm() / reference.norm().max(1e-12));
    }
    Ok(worst)
}
