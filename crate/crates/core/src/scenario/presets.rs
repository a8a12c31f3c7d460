//! Built-in scenarios echoing the trajectory figures.
//!
//! No figure gives numeric initial data, so the coordinates below are picked
//! to land in the regime each figure illustrates. Disk presets use `R2 = 1`,
//! annulus presets `R1 = 0.5`, `R2 = 1.5`.

use std::f64::consts::PI;

use serde::Serialize;

use super::{EventsSection, IntegratorSection, ScenarioSpec, VortexSpec};
use crate::domain::{DomainGeometry, SelfInteraction};
use crate::dynamics::EquationKind;

/// The qualitative outcome a preset is expected to show.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Every vortex returns to its start after one detected period.
    ClosedOrbits,
    /// Every `|z_j(t)|` stays put.
    ConstantRadii,
    /// One annihilation per opposite-sign pair.
    PairAnnihilation,
    /// Every vortex ends at a wall.
    WallAbsorption,
    /// Irregular motion; nothing is asserted.
    Exploratory,
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub spec: ScenarioSpec,
    pub regime: Regime,
}

fn polar(r: f64, theta: f64, n: i32) -> VortexSpec {
    VortexSpec {
        x: r * theta.cos(),
        y: r * theta.sin(),
        n,
    }
}

fn ring(r: f64, count: usize, phase: f64, degree: impl Fn(usize) -> i32) -> Vec<VortexSpec> {
    (0..count)
        .map(|j| polar(r, phase + 2.0 * PI * j as f64 / count as f64, degree(j)))
        .collect()
}

fn alternating(j: usize) -> i32 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

fn build(
    name: &str,
    description: &str,
    domain: DomainGeometry,
    equation: EquationKind,
    vortices: Vec<VortexSpec>,
    t_end: f64,
    regime: Regime,
) -> Preset {
    Preset {
        spec: ScenarioSpec {
            name: name.into(),
            description: Some(description.into()),
            equation,
            self_interaction: SelfInteraction::default(),
            outputs: super::default_outputs(),
            domain,
            vortices,
            integrator: IntegratorSection {
                rel_tol: Some(1e-10),
                abs_tol: Some(1e-12),
                t_end,
                ..Default::default()
            },
            events: EventsSection::default(),
        },
        regime,
    }
}

/// All presets, in figure order.
pub fn presets() -> Vec<Preset> {
    use EquationKind::{HeatFlow, Schrodinger};
    use Regime::*;
    let disk = DomainGeometry::Disk { r2: 1.0 };
    let annulus = DomainGeometry::Annulus { r1: 0.5, r2: 1.5 };
    let r0 = 0.75f64.sqrt();
    vec![
        build(
            "fig1a",
            "disk, Schrodinger: vortex and antivortex placed symmetrically about the centre",
            disk,
            Schrodinger,
            vec![polar(0.5, 0.0, 1), polar(0.5, PI, -1)],
            20.0,
            ClosedOrbits,
        ),
        build(
            "fig1b",
            "disk, Schrodinger: four alternating vortices on one circle",
            disk,
            Schrodinger,
            ring(0.5, 4, PI / 4.0, alternating),
            10.0,
            Exploratory,
        ),
        build(
            "fig2a",
            "disk, Schrodinger: one vortex near the centre, its antivortex near the wall",
            disk,
            Schrodinger,
            vec![polar(0.1, 0.0, 1), polar(0.85, 0.0, -1)],
            10.0,
            Exploratory,
        ),
        build(
            "fig2b",
            "disk, Schrodinger: five equal vortices on one circle",
            disk,
            Schrodinger,
            ring(0.6, 5, 0.0, |_| 1),
            5.0,
            ConstantRadii,
        ),
        build(
            "fig3a",
            "disk, Schrodinger: five alternating vortices on one circle",
            disk,
            Schrodinger,
            ring(0.5, 5, 0.0, alternating),
            5.0,
            Exploratory,
        ),
        build(
            "fig3b",
            "disk, Schrodinger: five vortices of mixed sign, scattered",
            disk,
            Schrodinger,
            vec![
                polar(0.3, 0.2, 1),
                polar(0.6, 1.5, -1),
                polar(0.45, 2.9, 1),
                polar(0.7, 4.0, -1),
                polar(0.2, 5.2, 1),
            ],
            5.0,
            Exploratory,
        ),
        build(
            "fig4a",
            "disk, heat flow: two close vortex-antivortex pairs placed symmetrically",
            disk,
            HeatFlow,
            vec![polar(0.5, -0.2, 1), polar(0.5, 0.2, -1), polar(0.5, PI - 0.2, 1), polar(0.5, PI + 0.2, -1)],
            5.0,
            PairAnnihilation,
        ),
        build(
            "fig4b",
            "disk, heat flow: three pairs, each vortex closest to its own antivortex",
            disk,
            HeatFlow,
            (0..3)
                .flat_map(|m| {
                    let c = 2.0 * PI * m as f64 / 3.0 + 0.3;
                    [polar(0.55, c - 0.15, 1), polar(0.55, c + 0.15, -1)]
                })
                .collect(),
            5.0,
            PairAnnihilation,
        ),
        build(
            "fig5a",
            "disk, heat flow: five alternating vortices on one circle",
            disk,
            HeatFlow,
            ring(0.5, 5, 0.0, alternating),
            5.0,
            Exploratory,
        ),
        build(
            "fig5b",
            "disk, heat flow: four equal vortices, pushed out to the wall",
            disk,
            HeatFlow,
            ring(0.4, 4, 0.1, |_| 1),
            5.0,
            WallAbsorption,
        ),
        build(
            "fig6a",
            "annulus, heat flow: four alternating vortices spread evenly just off the stationary radius",
            annulus,
            HeatFlow,
            ring(r0 + 0.05, 4, 0.0, alternating),
            5.0,
            Exploratory,
        ),
        build(
            "fig6b",
            "annulus, heat flow: two close vortex-antivortex pairs",
            annulus,
            HeatFlow,
            vec![polar(r0, -0.15, 1), polar(r0, 0.15, -1), polar(r0, PI - 0.15, 1), polar(r0, PI + 0.15, -1)],
            5.0,
            PairAnnihilation,
        ),
        build(
            "fig7a",
            "annulus, Schrodinger: pair displaced symmetrically from its stationary points",
            annulus,
            Schrodinger,
            vec![polar(r0 + 0.1, 0.0, 1), polar(r0 + 0.1, PI, -1)],
            40.0,
            ClosedOrbits,
        ),
        build(
            "fig7b",
            "annulus, Schrodinger: six alternating vortices on a ring off the stationary radius",
            annulus,
            Schrodinger,
            ring(r0 + 0.1, 6, 0.0, alternating),
            20.0,
            Exploratory,
        ),
        build(
            "fig8a",
            "annulus, Schrodinger: five vortices of mixed sign, scattered",
            annulus,
            Schrodinger,
            vec![
                polar(0.8, 0.3, 1),
                polar(1.1, 1.4, -1),
                polar(0.7, 2.6, 1),
                polar(1.2, 3.9, -1),
                polar(0.95, 5.1, -1),
            ],
            10.0,
            Exploratory,
        ),
        build(
            "fig8b",
            "annulus, Schrodinger: five alternating vortices on one circle",
            annulus,
            Schrodinger,
            ring(1.0, 5, 0.0, alternating),
            10.0,
            Exploratory,
        ),
        build(
            "fig9a",
            "annulus, Schrodinger: three equal vortices on one circle",
            annulus,
            Schrodinger,
            ring(1.0, 3, 0.0, |_| 1),
            10.0,
            ConstantRadii,
        ),
        build(
            "fig9b",
            "annulus, Schrodinger: three equal vortices placed unevenly",
            annulus,
            Schrodinger,
            vec![polar(0.8, 0.0, 1), polar(1.0, 2.0, 1), polar(1.2, 4.0, 1)],
            10.0,
            Exploratory,
        ),
    ]
}

pub fn preset_names() -> Vec<String> {
    presets().into_iter().map(|p| p.spec.name).collect()
}

pub fn preset(name: &str) -> Option<Preset> {
    presets().into_iter().find(|p| p.spec.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn names_unique_and_specs_valid() {
        let all = presets();
        let names: HashSet<_> = all.iter().map(|p| p.spec.name.clone()).collect();
        assert_eq!(names.len(), all.len());
        for p in &all {
            p.spec.validate().unwrap();
        }
        assert!(preset("fig1a").is_some() && preset("fig10").is_none());
    }
}
