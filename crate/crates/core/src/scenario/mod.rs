//! Scenario files, presets and artifact output.
//!
//! A scenario is a small TOML document:
//!
//! ```toml
//! name = "pair"
//! equation = "schrodinger"
//! outputs = ["csv", "svg"]
//!
//! [domain]
//! kind = "annulus"
//! R1 = 0.5
//! R2 = 1.5
//!
//! [[vortices]]
//! x = 0.9
//! y = 0.0
//! n = 1
//!
//! [integrator]
//! method = "rk45"
//! t_end = 10.0
//!
//! [events]
//! collision_eps = 0.01
//! ```

mod output;
mod presets;

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::domain::{DomainGeometry, SelfInteraction, Vortex, VortexConfiguration};
use crate::dynamics::{angular_moment, detect_period, integrate, EquationKind, EventKind, IntegratorParams, Method, Trajectory};
use crate::error::{Error, Result};

pub use output::{render_svg, write_outputs, OutputFiles};
pub use presets::{preset, preset_names, presets, Preset, Regime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(format!("unknown output `{other}` (expected csv, json or svg)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VortexSpec {
    pub x: f64,
    pub y: f64,
    pub n: i32,
}

/// Integrator settings; anything left out falls back to
/// [`IntegratorParams::for_domain`].
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegratorSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dt: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abs_tol: Option<f64>,
    pub t_end: f64,
    /// Output grid spacing. Defaults to `t_end / 1000`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_interval: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_steps: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventsSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub collision_eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_eps: Option<f64>,
}

fn default_outputs() -> Vec<OutputFormat> {
    vec![OutputFormat::Csv, OutputFormat::Json, OutputFormat::Svg]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub equation: EquationKind,
    #[serde(default)]
    pub self_interaction: SelfInteraction,
    #[serde(default = "default_outputs")]
    pub outputs: Vec<OutputFormat>,
    pub domain: DomainGeometry,
    pub vortices: Vec<VortexSpec>,
    pub integrator: IntegratorSection,
    #[serde(default)]
    pub events: EventsSection,
}

impl ScenarioSpec {
    pub fn from_toml(text: &str) -> Result<Self> {
        let spec: ScenarioSpec = toml::from_str(text).map_err(|e| Error::Config {
            context: "scenario".into(),
            message: e.to_string(),
        })?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config {
            context: format!("scenario `{}`", self.name),
            message: e.to_string(),
        })
    }

    /// Checks everything that can be checked without integrating.
    pub fn validate(&self) -> Result<()> {
        if self.name.is_empty() || !self.name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            return Err(Error::Config {
                context: "name".into(),
                message: format!("`{}` must be non-empty and use only [A-Za-z0-9_-]", self.name),
            });
        }
        self.configuration()?;
        self.params()?;
        Ok(())
    }

    pub fn configuration(&self) -> Result<VortexConfiguration> {
        let vortices = self.vortices.iter().map(|v| Vortex::new(v.x, v.y, v.n)).collect();
        Ok(VortexConfiguration::new(self.domain, vortices)?.with_self_interaction(self.self_interaction))
    }

    pub fn params(&self) -> Result<IntegratorParams> {
        let mut p = IntegratorParams::for_domain(&self.domain, self.integrator.t_end);
        let s = &self.integrator;
        if let Some(m) = s.method {
            p.method = m;
        }
        if let Some(dt) = s.dt {
            p.dt = dt;
        }
        if let Some(r) = s.rel_tol {
            p.rel_tol = r;
        }
        if let Some(a) = s.abs_tol {
            p.abs_tol = a;
        }
        if let Some(m) = s.max_steps {
            p.max_steps = m;
        }
        if let Some(c) = self.events.collision_eps {
            p.collision_eps = c;
        }
        if let Some(w) = self.events.wall_eps {
            p.wall_eps = w;
        }
        p.sample_interval = Some(s.sample_interval.unwrap_or(s.t_end / 1000.0));
        p.validate()?;
        Ok(p)
    }
}

pub fn load_spec(path: impl AsRef<Path>) -> Result<ScenarioSpec> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
        context: path.display().to_string(),
        message: e.to_string(),
    })?;
    ScenarioSpec::from_toml(&text).map_err(|e| match e {
        Error::Config { message, .. } => Error::Config {
            context: path.display().to_string(),
            message,
        },
        other => other,
    })
}

pub fn save_spec(spec: &ScenarioSpec, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, spec.to_toml()?)?;
    Ok(())
}

/// Headline numbers of a finished run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSummary {
    pub name: String,
    pub equation: EquationKind,
    pub domain: DomainGeometry,
    pub t_end: f64,
    pub final_time: f64,
    pub samples: usize,
    pub pair_annihilations: usize,
    pub wall_absorptions: usize,
    pub survivors: usize,
    /// `Σ n|z|²` at the end minus at the start, over vortices alive throughout.
    pub angular_moment_drift: f64,
}

#[derive(Debug, Clone)]
pub struct ScenarioRun {
    pub spec: ScenarioSpec,
    pub trajectory: Trajectory,
    pub summary: RunSummary,
}

fn in_scenario<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Scenario {
        scenario: name.to_string(),
        source: Box::new(e),
    })
}

pub fn run_scenario(spec: &ScenarioSpec) -> Result<ScenarioRun> {
    in_scenario(&spec.name, run_inner(spec))
}

fn run_inner(spec: &ScenarioSpec) -> Result<ScenarioRun> {
    let config = spec.configuration()?;
    let params = spec.params()?;
    let trajectory = integrate(&spec.equation, &config, &params)?;

    let count = |k: EventKind| trajectory.events().iter().filter(|e| e.kind == k).count();
    let last = trajectory.final_configuration();
    let survivors: Vec<bool> = last.vortices().iter().map(|v| v.alive).collect();
    let restrict = |c: &VortexConfiguration| -> f64 {
        c.vortices()
            .iter()
            .zip(&survivors)
            .filter(|(_, &s)| s)
            .map(|(v, _)| v.degree as f64 * v.position.norm_sqr())
            .sum()
    };
    let drift = if survivors.iter().all(|&s| s) {
        angular_moment(last) - angular_moment(&config)
    } else {
        restrict(last) - restrict(&config)
    };
    let summary = RunSummary {
        name: spec.name.clone(),
        equation: spec.equation,
        domain: spec.domain,
        t_end: params.t_end,
        final_time: trajectory.final_time(),
        samples: trajectory.samples().len(),
        pair_annihilations: count(EventKind::PairAnnihilation),
        wall_absorptions: count(EventKind::WallAbsorption),
        survivors: last.living_count(),
        angular_moment_drift: drift,
    };
    Ok(ScenarioRun {
        spec: spec.clone(),
        trajectory,
        summary,
    })
}

/// Outcome of checking a run against its expected regime.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeCheck {
    pub regime: Regime,
    pub passed: bool,
    pub detail: String,
}

/// Closed orbits are judged by this closure after one detected period.
pub const CLOSED_ORBIT_TOL: f64 = 1e-4;
/// Radii drift allowed for rings that should turn rigidly.
pub const CONSTANT_RADIUS_TOL: f64 = 1e-6;

/// Compares a run with `regime`. Closed orbits need a fresh period search, so
/// the spec is integrated again for that case.
pub fn check_regime(run: &ScenarioRun, regime: Regime) -> Result<RegimeCheck> {
    let traj = &run.trajectory;
    let initial = traj.initial();
    let (passed, detail) = match regime {
        Regime::ClosedOrbits => {
            let mut params = run.spec.params()?;
            params.sample_interval = None;
            let mut worst: f64 = 0.0;
            let mut found = true;
            let mut periods = Vec::new();
            for probe in 0..initial.len() {
                match detect_period(&run.spec.equation, initial, &params, probe)? {
                    Some(p) => {
                        worst = worst.max(p.closure);
                        periods.push(p.period);
                    }
                    None => found = false,
                }
            }
            (
                found && worst < CLOSED_ORBIT_TOL,
                format!("periods {periods:?}, worst closure {worst:.3e} (tolerance {CLOSED_ORBIT_TOL:e})"),
            )
        }
        Regime::ConstantRadii => {
            let r0: Vec<f64> = initial.positions().iter().map(|z| z.norm()).collect();
            let worst = traj
                .samples()
                .iter()
                .flat_map(|s| s.positions.iter().zip(&r0).map(|(z, r)| (z.norm() - r).abs()))
                .fold(0.0, f64::max);
            let clean = traj.events().is_empty();
            (
                clean && worst < CONSTANT_RADIUS_TOL,
                format!("max radius drift {worst:.3e}, {} events", traj.events().len()),
            )
        }
        Regime::PairAnnihilation => {
            let plus = initial.vortices().iter().filter(|v| v.degree > 0).count();
            let minus = initial.len() - plus;
            let expected = plus.min(minus);
            let pairs: Vec<_> = traj.events().iter().filter(|e| e.kind == EventKind::PairAnnihilation).collect();
            let opposite = pairs.iter().all(|e| {
                e.vortices.len() == 2 && initial.vortices()[e.vortices[0]].degree != initial.vortices()[e.vortices[1]].degree
            });
            (
                pairs.len() == expected && opposite,
                format!("{} pair annihilations, expected {expected}", pairs.len()),
            )
        }
        Regime::WallAbsorption => {
            let walls = traj.events().iter().filter(|e| e.kind == EventKind::WallAbsorption).count();
            let only_walls = traj.events().iter().all(|e| e.kind == EventKind::WallAbsorption);
            (
                walls == initial.len() && only_walls,
                format!("{walls} of {} vortices absorbed by the wall", initial.len()),
            )
        }
        Regime::Exploratory => (true, "no regime asserted".into()),
    };
    Ok(RegimeCheck { regime, passed, detail })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
name = "pair"
equation = "heat_flow"
outputs = ["csv"]

[domain]
kind = "annulus"
R1 = 0.5
R2 = 1.5

[[vortices]]
x = 0.9
y = 0.0
n = 1

[[vortices]]
x = -0.9
y = 0.0
n = -1

[integrator]
method = "rk4"
dt = 0.001
t_end = 1.0

[events]
collision_eps = 0.02
"#;

    #[test]
    fn parse_sample() {
        let spec = ScenarioSpec::from_toml(SAMPLE).unwrap();
        assert_eq!(spec.equation, EquationKind::HeatFlow);
        assert_eq!(spec.domain, DomainGeometry::annulus(0.5, 1.5).unwrap());
        let p = spec.params().unwrap();
        assert_eq!(p.method, Method::Rk4);
        assert_eq!(p.collision_eps, 0.02);
        assert_eq!(p.wall_eps, 0.015);
        assert_eq!(p.sample_interval, Some(0.001));
    }

    #[test]
    fn toml_round_trip() {
        let spec = ScenarioSpec::from_toml(SAMPLE).unwrap();
        let again = ScenarioSpec::from_toml(&spec.to_toml().unwrap()).unwrap();
        assert_eq!(spec, again);
    }

    #[test]
    fn bad_specs_are_config_errors() {
        let cases = [
            SAMPLE.replace("R1 = 0.5", "R1 = 2.0"),
            SAMPLE.replace("n = -1", "n = 2"),
            SAMPLE.replace("t_end = 1.0", "t_end = -1.0"),
            SAMPLE.replace("heat_flow", "wave"),
            SAMPLE.replace("collision_eps", "colision_eps"),
            SAMPLE.replace("name = \"pair\"", "name = \"a/b\""),
        ];
        for text in cases {
            let err = ScenarioSpec::from_toml(&text).unwrap_err();
            assert!(err.is_config_error(), "{err}");
        }
    }
}
