use num_complex::Complex64;

use super::{integrate, IntegratorParams, MotionLaw};
use crate::domain::VortexConfiguration;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct PeriodEstimate {
    pub period: f64,
    /// `max_j |z_j(T) − z_j(0)|`.
    pub closure: f64,
    pub configuration: VortexConfiguration,
}

/// First return of vortex `probe` through the line normal to its initial
/// velocity, searched up to `params.t_end`.
///
/// The crossing is bracketed from the recorded steps and then refined by
/// bisection, re-integrating from the last step before the crossing.
/// Returns `None` if the probe never comes back or the run hits an event.
pub fn detect_period<L: MotionLaw + ?Sized>(
    law: &L,
    config: &VortexConfiguration,
    params: &IntegratorParams,
    probe: usize,
) -> Result<Option<PeriodEstimate>> {
    let mut search = params.clone();
    search.sample_interval = None;
    let v0 = law.velocities(config)?[probe];
    if v0.norm() == 0.0 {
        return Ok(None);
    }
    let z0 = config.vortices()[probe].position;
    let section = |z: Complex64| ((z - z0) * v0.conj()).re;

    let traj = integrate(law, config, &search)?;
    if !traj.events().is_empty() {
        return Ok(None);
    }
    let samples = traj.samples();
    let mut excursion: f64 = 0.0;
    let mut bracket = None;
    for (i, w) in samples.windows(2).enumerate() {
        let (za, zb) = (w[0].positions[probe], w[1].positions[probe]);
        excursion = excursion.max((zb - z0).norm());
        if section(za) < 0.0 && section(zb) >= 0.0 && (zb - z0).norm() < 0.25 * excursion {
            bracket = Some(i);
            break;
        }
    }
    let Some(i) = bracket else {
        return Ok(None);
    };

    let start = traj.configuration_at(i);
    let (t_a, t_b) = (samples[i].t, samples[i + 1].t);
    let advance = |dt: f64| -> Result<VortexConfiguration> {
        if dt <= 0.0 {
            return Ok(start.clone());
        }
        let mut p = search.clone();
        p.t_end = dt;
        p.dt = p.dt.min(dt);
        Ok(integrate(law, &start, &p)?.final_configuration().clone())
    };
    let (mut lo, mut hi) = (0.0, t_b - t_a);
    for _ in 0..60 {
        if hi - lo < 1e-13 * t_b.max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if section(advance(mid)?.vortices()[probe].position) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let at_return = advance(hi)?;
    let closure = config
        .vortices()
        .iter()
        .zip(at_return.vortices())
        .map(|(a, b)| (a.position - b.position).norm())
        .fold(0.0, f64::max);
    Ok(Some(PeriodEstimate {
        period: t_a + hi,
        closure,
        configuration: at_return,
    }))
}
