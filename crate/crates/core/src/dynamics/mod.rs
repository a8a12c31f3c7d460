//! Motion laws for the vortex positions and their time integration.
//!
//! With `K_j = (Re W̃′(z_j), Im W̃′(z_j))`:
//!
//! ```text
//! Schrödinger:  ẋ_j =  2 K_j1,       ẏ_j = −2 K_j2
//! heat flow:    ẋ_j = −2 n_j K_j2,   ẏ_j = −2 n_j K_j1
//! ```
//!
//! The heat-flow law runs on the slow time scale; its unscaled short-time
//! motion vanishes at leading order and is not modelled.

mod integrate;
mod period;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::domain::VortexConfiguration;
use crate::error::Result;
use crate::potentials::velocities_conj;

pub use integrate::{integrate, Event, EventKind, IntegratorParams, Method, Snapshot, Trajectory};
pub use period::{detect_period, PeriodEstimate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EquationKind {
    #[serde(alias = "schroedinger", alias = "nls")]
    Schrodinger,
    #[serde(alias = "heat", alias = "heatflow")]
    HeatFlow,
}

impl EquationKind {
    pub fn name(&self) -> &'static str {
        match self {
            EquationKind::Schrodinger => "schrodinger",
            EquationKind::HeatFlow => "heat_flow",
        }
    }
}

impl std::str::FromStr for EquationKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "schrodinger" | "schroedinger" | "nls" => Ok(EquationKind::Schrodinger),
            "heat_flow" | "heatflow" | "heat" => Ok(EquationKind::HeatFlow),
            other => Err(format!("unknown equation `{other}` (expected schrodinger or heat_flow)")),
        }
    }
}

/// Anything that assigns a velocity `ż_j = ẋ_j + i ẏ_j` to every vortex.
pub trait MotionLaw {
    fn velocities(&self, config: &VortexConfiguration) -> Result<Vec<Complex64>>;
}

impl MotionLaw for EquationKind {
    fn velocities(&self, config: &VortexConfiguration) -> Result<Vec<Complex64>> {
        let w = velocities_conj(config)?;
        Ok(config
            .vortices()
            .iter()
            .zip(w)
            .map(|(v, w)| {
                if !v.alive {
                    return Complex64::new(0.0, 0.0);
                }
                match self {
                    EquationKind::Schrodinger => 2.0 * w.conj(),
                    EquationKind::HeatFlow => -2.0 * v.degree as f64 * Complex64::i() * w.conj(),
                }
            })
            .collect())
    }
}

impl<L: MotionLaw + ?Sized> MotionLaw for &L {
    fn velocities(&self, config: &VortexConfiguration) -> Result<Vec<Complex64>> {
        (**self).velocities(config)
    }
}

/// The wrapped law run backwards in time.
#[derive(Debug, Clone, Copy)]
pub struct Reversed<L>(pub L);

impl<L: MotionLaw> MotionLaw for Reversed<L> {
    fn velocities(&self, config: &VortexConfiguration) -> Result<Vec<Complex64>> {
        Ok(self.0.velocities(config)?.into_iter().map(|v| -v).collect())
    }
}

/// Velocity vectors `(ẋ_j, ẏ_j)`; dead vortices get zero.
pub fn rhs(equation: EquationKind, config: &VortexConfiguration) -> Result<Vec<[f64; 2]>> {
    Ok(equation
        .velocities(config)?
        .into_iter()
        .map(|v| [v.re, v.im])
        .collect())
}

/// `Σ n_j |z_j|²` over the living vortices.
pub fn angular_moment(config: &VortexConfiguration) -> f64 {
    config
        .living()
        .map(|(_, v)| v.degree as f64 * v.position.norm_sqr())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{DomainGeometry, Vortex};

    #[test]
    fn disk_single_vortex_rates() {
        let cfg = VortexConfiguration::new(DomainGeometry::disk(1.0).unwrap(), vec![Vortex::new(0.5, 0.0, 1)]).unwrap();
        let s = rhs(EquationKind::Schrodinger, &cfg).unwrap()[0];
        let h = rhs(EquationKind::HeatFlow, &cfg).unwrap()[0];
        assert!((s[0]).abs() < 1e-15 && (s[1] - 4.0 / 3.0).abs() < 1e-14);
        assert!((h[0] - 4.0 / 3.0).abs() < 1e-14 && h[1].abs() < 1e-15);
    }

    #[test]
    fn centred_vortex_at_rest() {
        let cfg = VortexConfiguration::new(DomainGeometry::disk(1.0).unwrap(), vec![Vortex::new(0.0, 0.0, -1)]).unwrap();
        for eq in [EquationKind::Schrodinger, EquationKind::HeatFlow] {
            assert_eq!(rhs(eq, &cfg).unwrap()[0], [0.0, 0.0]);
        }
    }

    #[test]
    fn stationary_pair_has_zero_rates() {
        let r0 = 0.75f64.sqrt();
        let cfg = VortexConfiguration::new(
            DomainGeometry::annulus(0.5, 1.5).unwrap(),
            vec![Vortex::new(r0, 0.0, 1), Vortex::new(-r0, 0.0, -1)],
        )
        .unwrap();
        for eq in [EquationKind::Schrodinger, EquationKind::HeatFlow] {
            for v in rhs(eq, &cfg).unwrap() {
                assert!(v[0].abs() < 1e-12 && v[1].abs() < 1e-12);
            }
        }
    }

    #[test]
    fn angular_moment_ignores_rotation_and_dead() {
        let mut cfg = VortexConfiguration::new(
            DomainGeometry::disk(1.0).unwrap(),
            vec![Vortex::new(0.5, 0.1, 1), Vortex::new(-0.2, 0.3, -1)],
        )
        .unwrap();
        let m = angular_moment(&cfg);
        assert!((angular_moment(&cfg.rotated(1.234)) - m).abs() < 1e-15);
        cfg.kill(1);
        assert!((angular_moment(&cfg) - 0.26).abs() < 1e-15);
    }

    #[test]
    fn parse_equation_names() {
        assert_eq!("heat-flow".parse::<EquationKind>().unwrap(), EquationKind::HeatFlow);
        assert_eq!("Schrodinger".parse::<EquationKind>().unwrap(), EquationKind::Schrodinger);
        assert!("wave".parse::<EquationKind>().is_err());
    }
}
