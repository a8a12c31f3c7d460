//! Stationary vortex configurations in the annulus.
//!
//! A configuration is stationary when `W̃′(z_j) = 0` for every vortex; both
//! motion laws are linear images of `W̃′`, so they stop together.
//!
//! Rings of `N` identical chains reduce to the lattice with `ω1 = π/N`:
//! only one representative per chain enters the sums. For `N` equal vortices
//! on `|z| = r0` the condition collapses to the scalar equation
//!
//! ```text
//! coth(N ln(r0/R2)) = 4 Σ_{t≥1} q^{2t}/(1 − q^{2t}) · sinh(2tN ln(r0/R2)),   q = (R1/R2)^N
//! ```
//!
//! which is solved here through its closed form in ζ, avoiding the slowly
//! converging sinh series near `r0 = R1`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::domain::{DomainGeometry, Vortex, VortexConfiguration};
use crate::elliptic::EllipticContext;
use crate::error::{Error, Result};
use crate::potentials::{log_ratio, velocities_conj};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StationaryKind {
    AnalyticPair,
    AnalyticChains,
    SameSignRing,
    Numerical,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StationaryConfig {
    pub config: VortexConfiguration,
    /// `max_j |W̃′(z_j)|`.
    pub residual: f64,
    pub kind: StationaryKind,
    /// Newton steps taken (zero for the analytic kinds).
    pub iterations: usize,
}

/// Largest conjugate velocity among the living vortices.
pub fn max_residual(config: &VortexConfiguration) -> Result<f64> {
    Ok(velocities_conj(config)?.iter().map(|w| w.norm()).fold(0.0, f64::max))
}

fn annulus(r1: f64, r2: f64) -> Result<DomainGeometry> {
    DomainGeometry::annulus(r1, r2)
}

/// Vortex at `(√(R1R2), 0)`, antivortex at `(−√(R1R2), 0)`.
pub fn analytic_pair(r1: f64, r2: f64) -> Result<StationaryConfig> {
    let domain = annulus(r1, r2)?;
    let r0 = (r1 * r2).sqrt();
    let config = VortexConfiguration::new(domain, vec![Vortex::new(r0, 0.0, 1), Vortex::new(-r0, 0.0, -1)])?;
    Ok(StationaryConfig {
        residual: max_residual(&config)?,
        config,
        kind: StationaryKind::AnalyticPair,
        iterations: 0,
    })
}

/// `2N` alternating vortices `z_k = √(R1R2)·e^{iπk/N}`, `n_k = (−1)^{k+1}`.
pub fn analytic_chains(r1: f64, r2: f64, n: usize) -> Result<StationaryConfig> {
    if n == 0 {
        return Err(Error::InvalidGeometry("chain count must be at least 1".into()));
    }
    let domain = annulus(r1, r2)?;
    let r0 = (r1 * r2).sqrt();
    let vortices = (1..=2 * n)
        .map(|k| {
            let degree = if k % 2 == 1 { 1 } else { -1 };
            Vortex::at(Complex64::from_polar(r0, PI * k as f64 / n as f64), degree)
        })
        .collect();
    let config = VortexConfiguration::new(domain, vortices)?;
    Ok(StationaryConfig {
        residual: max_residual(&config)?,
        config,
        kind: StationaryKind::AnalyticChains,
        iterations: 0,
    })
}

/// Conjugate velocity of representative `j` when each of `representatives`
/// stands for a chain of `N` copies rotated by `2π/N`; `ctx` must carry
/// `ω1 = π/N`.
pub fn chain_velocity_conj(
    ctx: &EllipticContext,
    representatives: &[Vortex],
    j: usize,
    r2: f64,
) -> Result<Complex64> {
    let i = Complex64::i();
    let zj = representatives[j].position;
    let nj = representatives[j].degree as f64;
    let mut pair = Complex64::new(0.0, 0.0);
    let mut log_sum = 0.0;
    for (k, v) in representatives.iter().enumerate() {
        let n = v.degree as f64;
        let lk = (v.position.norm() / r2).ln();
        log_sum += n * lk;
        if k != j {
            let a = i * log_ratio(zj, v.position);
            pair += n * (ctx.zeta(a)? - ctx.zeta(a + 2.0 * i * lk)?);
        }
    }
    let lj = (zj.norm() / r2).ln();
    Ok(pair / zj - nj / zj * ctx.zeta(2.0 * i * lj)? + 2.0 * i * ctx.eta() / (ctx.omega1_re() * zj) * log_sum)
}

/// `coth(N ln(r/R2)) − 4 Σ q^{2t}/(1 − q^{2t}) sinh(2tN ln(r/R2))` and its
/// derivative in `r`, both through ζ and ℘ on the `ω1 = π/N` lattice.
fn ring_balance(ctx: &EllipticContext, n: usize, r: f64, r2: f64) -> Result<(f64, f64)> {
    let i = Complex64::i();
    let nf = n as f64;
    let l = (r / r2).ln();
    let u = 2.0 * i * l;
    let eta = ctx.eta();
    let g = (2.0 * i / nf) * (ctx.zeta(u)? - 2.0 * i * nf * eta * l / PI);
    let dg = (4.0 / (nf * r)) * (ctx.weierstrass_p(u)? + nf * eta / PI);
    Ok((g.re, dg.re))
}

/// Radius of the stationary ring of `N` equal-degree vortices.
pub fn same_sign_radius(r1: f64, r2: f64, n: usize) -> Result<f64> {
    annulus(r1, r2)?;
    let ctx = EllipticContext::new(r1, r2, n)?;
    let mut lo = r1 * (1.0 + 1e-6);
    let mut hi = r2 * (1.0 - 1e-6);
    let (g_lo, _) = ring_balance(&ctx, n, lo, r2)?;
    let (g_hi, _) = ring_balance(&ctx, n, hi, r2)?;
    if !(g_lo.signum() * g_hi.signum() < 0.0) {
        return Err(Error::NoRoot(format!(
            "ring balance has equal signs at both ends of ({lo}, {hi}): {g_lo}, {g_hi}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (g, _) = ring_balance(&ctx, n, mid, r2)?;
        if g.signum() == g_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut r = 0.5 * (lo + hi);
    for _ in 0..20 {
        let (g, dg) = ring_balance(&ctx, n, r, r2)?;
        if dg == 0.0 {
            break;
        }
        let next = (r - g / dg).clamp(lo.min(r), hi.max(r));
        let done = (next - r).abs() < 1e-12 * r;
        r = next;
        if done {
            break;
        }
    }
    Ok(r)
}

/// Stationary ring of `N` degree-one vortices at `same_sign_radius`.
pub fn same_sign_ring(r1: f64, r2: f64, n: usize) -> Result<StationaryConfig> {
    let r0 = same_sign_radius(r1, r2, n)?;
    let config = uniform_ring(annulus(r1, r2)?, r0, n, 1)?;
    Ok(StationaryConfig {
        residual: max_residual(&config)?,
        config,
        kind: StationaryKind::SameSignRing,
        iterations: 0,
    })
}

/// `n` vortices of equal degree at `r·e^{2πij/n}`.
pub fn uniform_ring(domain: DomainGeometry, r: f64, n: usize, degree: i32) -> Result<VortexConfiguration> {
    let vortices = (0..n)
        .map(|j| Vortex::at(Complex64::from_polar(r, 2.0 * PI * j as f64 / n as f64), degree))
        .collect();
    VortexConfiguration::new(domain, vortices)
}

const NEWTON_TOL: f64 = 1e-10;
const NEWTON_MAX_ITER: usize = 100;
const FD_STEP: f64 = 1e-6;

/// Damped Gauss–Newton on `W̃′(z_j) = 0` for all `j`, with a finite-difference
/// Jacobian. Vortex 0 keeps its polar angle to remove the rotation orbit.
pub fn find_stationary(initial_guess: &VortexConfiguration) -> Result<StationaryConfig> {
    if initial_guess.living_count() != initial_guess.len() || initial_guess.is_empty() {
        return Err(Error::InvalidConfiguration(
            "stationary search needs a non-empty configuration of living vortices".into(),
        ));
    }
    initial_guess.check_separation()?;
    let theta0 = initial_guess.vortices()[0].position.arg();
    let axis = Complex64::from_polar(1.0, theta0);

    let unpack = |x: &DVector<f64>| -> Vec<Complex64> {
        let mut z = Vec::with_capacity(initial_guess.len());
        z.push(axis * x[0]);
        for j in 1..initial_guess.len() {
            z.push(Complex64::new(x[2 * j - 1], x[2 * j]));
        }
        z
    };
    let residual_vec = |x: &DVector<f64>| -> Result<(DVector<f64>, f64)> {
        let cfg = initial_guess.with_positions(&unpack(x));
        if cfg.vortices().iter().any(|v| !cfg.domain().contains(v.position)) {
            return Err(Error::InvalidConfiguration("Newton step left the domain".into()));
        }
        let w = velocities_conj(&cfg)?;
        let max = w.iter().map(|w| w.norm()).fold(0.0, f64::max);
        Ok((DVector::from_iterator(2 * w.len(), w.iter().flat_map(|w| [w.re, w.im])), max))
    };

    let mut x = DVector::zeros(2 * initial_guess.len() - 1);
    let z0 = initial_guess.positions();
    x[0] = z0[0].norm();
    for j in 1..z0.len() {
        x[2 * j - 1] = z0[j].re;
        x[2 * j] = z0[j].im;
    }

    let (mut f, mut res) = residual_vec(&x)?;
    let mut iterations = 0;
    while res >= NEWTON_TOL {
        if iterations == NEWTON_MAX_ITER {
            return Err(Error::NoConvergence { iterations, residual: res });
        }
        iterations += 1;
        let mut jac = DMatrix::zeros(f.len(), x.len());
        for c in 0..x.len() {
            let mut xp = x.clone();
            let mut xm = x.clone();
            xp[c] += FD_STEP;
            xm[c] -= FD_STEP;
            let (fp, _) = residual_vec(&xp)?;
            let (fm, _) = residual_vec(&xm)?;
            jac.set_column(c, &((fp - fm) / (2.0 * FD_STEP)));
        }
        let svd = jac.svd(true, true);
        let smax = svd.singular_values.max();
        let step = svd
            .solve(&(-&f), 1e-10 * smax)
            .map_err(|e| Error::NoRoot(format!("least-squares solve failed: {e}")))?;

        let norm = f.norm();
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let trial = &x + lambda * &step;
            if let Ok((ft, rt)) = residual_vec(&trial) {
                if ft.norm() < norm {
                    x = trial;
                    f = ft;
                    res = rt;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !accepted {
            return Err(Error::NoConvergence { iterations, residual: res });
        }
    }
    let config = initial_guess.with_positions(&unpack(&x));
    Ok(StationaryConfig {
        residual: res,
        config,
        kind: StationaryKind::Numerical,
        iterations,
    })
}
