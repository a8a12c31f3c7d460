use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{OutputFormat, RunSummary, ScenarioRun};
use crate::domain::{DomainGeometry, SelfInteraction};
use crate::dynamics::{EquationKind, Event, Trajectory};
use crate::error::{Error, Result};

/// Paths written by [`write_outputs`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputFiles {
    pub csv: Option<PathBuf>,
    pub events: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl OutputFiles {
    pub fn all(&self) -> Vec<&PathBuf> {
        [&self.csv, &self.events, &self.json, &self.svg].into_iter().flatten().collect()
    }
}

/// Writes the formats requested by the run's spec into `out_dir`, as
/// `<name>.csv`, `<name>_events.csv`, `<name>.json` and `<name>.svg`.
/// Existing files are left alone unless `overwrite` is set.
pub fn write_outputs(run: &ScenarioRun, out_dir: impl AsRef<Path>, overwrite: bool) -> Result<OutputFiles> {
    let dir = out_dir.as_ref();
    let name = &run.spec.name;
    let wants = |f| run.spec.outputs.contains(&f);
    let mut files = OutputFiles::default();
    if wants(OutputFormat::Csv) {
        files.csv = Some(dir.join(format!("{name}.csv")));
        files.events = Some(dir.join(format!("{name}_events.csv")));
    }
    if wants(OutputFormat::Json) {
        files.json = Some(dir.join(format!("{name}.json")));
    }
    if wants(OutputFormat::Svg) {
        files.svg = Some(dir.join(format!("{name}.svg")));
    }
    if !overwrite {
        if let Some(p) = files.all().into_iter().find(|p| p.exists()) {
            return Err(Error::WouldOverwrite(p.clone()));
        }
    }
    std::fs::create_dir_all(dir)?;

    if let (Some(csv), Some(events)) = (&files.csv, &files.events) {
        std::fs::write(csv, trajectory_csv(&run.trajectory)?)?;
        std::fs::write(events, events_csv(run.trajectory.events())?)?;
    }
    if let Some(json) = &files.json {
        std::fs::write(json, serde_json::to_string_pretty(&JsonReport::new(run))?)?;
    }
    if let Some(svg) = &files.svg {
        std::fs::write(svg, render_svg(&run.spec.domain, &run.trajectory))?;
    }
    Ok(files)
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Io(std::io::Error::other(e.to_string()))
}

/// Header `t, x_0, y_0, alive_0, x_1, …`; one row per sample.
pub(crate) fn trajectory_csv(traj: &Trajectory) -> Result<String> {
    let n = traj.initial().len();
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["t".to_string()];
    for j in 0..n {
        header.extend([format!("x_{j}"), format!("y_{j}"), format!("alive_{j}")]);
    }
    w.write_record(&header).map_err(csv_error)?;
    for s in traj.samples() {
        let mut row = vec![s.t.to_string()];
        for (z, alive) in s.positions.iter().zip(&s.alive) {
            row.extend([z.re.to_string(), z.im.to_string(), u8::from(*alive).to_string()]);
        }
        w.write_record(&row).map_err(csv_error)?;
    }
    String::from_utf8(w.into_inner().map_err(csv_error)?).map_err(csv_error)
}

/// Header `t, kind, indices`; indices joined by `;`.
pub(crate) fn events_csv(events: &[Event]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["t", "kind", "indices"]).map_err(csv_error)?;
    for e in events {
        let idx = e.vortices.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(";");
        w.write_record([e.t.to_string(), e.kind.name().to_string(), idx]).map_err(csv_error)?;
    }
    String::from_utf8(w.into_inner().map_err(csv_error)?).map_err(csv_error)
}

#[derive(Serialize)]
struct Metadata<'a> {
    name: &'a str,
    description: Option<&'a str>,
    equation: EquationKind,
    domain: DomainGeometry,
    self_interaction: SelfInteraction,
    degrees: Vec<i32>,
    generator: &'static str,
}

#[derive(Serialize)]
struct JsonSample {
    t: f64,
    positions: Vec<[f64; 2]>,
    alive: Vec<bool>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    metadata: Metadata<'a>,
    summary: &'a RunSummary,
    events: &'a [Event],
    samples: Vec<JsonSample>,
}

impl<'a> JsonReport<'a> {
    fn new(run: &'a ScenarioRun) -> Self {
        JsonReport {
            metadata: Metadata {
                name: &run.spec.name,
                description: run.spec.description.as_deref(),
                equation: run.spec.equation,
                domain: run.spec.domain,
                self_interaction: run.spec.self_interaction,
                degrees: run.trajectory.initial().degrees(),
                generator: concat!("glvortex ", env!("CARGO_PKG_VERSION")),
            },
            summary: &run.summary,
            events: run.trajectory.events(),
            samples: run
                .trajectory
                .samples()
                .iter()
                .map(|s| JsonSample {
                    t: s.t,
                    positions: s.positions.iter().map(|z| [z.re, z.im]).collect(),
                    alive: s.alive.clone(),
                })
                .collect(),
        }
    }
}

const SIZE: f64 = 800.0;
const MARGIN: f64 = 20.0;

/// Self-contained 800×800 plot: boundary circles, one polyline per vortex
/// (red for `+1`, blue for `−1`), a dot at each start and a dashed ring where
/// a vortex died.
pub fn render_svg(domain: &DomainGeometry, traj: &Trajectory) -> String {
    let scale = (SIZE / 2.0 - MARGIN) / domain.outer_radius();
    let px = |x: f64| SIZE / 2.0 + scale * x;
    let py = |y: f64| SIZE / 2.0 - scale * y;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let mut radii = vec![domain.outer_radius()];
    radii.extend(domain.inner_radius());
    for r in radii {
        let _ = writeln!(
            out,
            r#"<circle cx="{c}" cy="{c}" r="{:.3}" fill="none" stroke="black" stroke-width="2"/>"#,
            scale * r,
            c = SIZE / 2.0
        );
    }
    let degrees = traj.initial().degrees();
    let samples = traj.samples();
    for (j, &n) in degrees.iter().enumerate() {
        let colour = if n > 0 { "#c0392b" } else { "#2c6fbb" };
        // Run the line on to the sample where the vortex died.
        let living = samples.iter().take_while(|s| s.alive[j]).count();
        let path = samples.iter().take(living + 1);
        let points: Vec<String> = path
            .map(|s| format!("{:.2},{:.2}", px(s.positions[j].re), py(s.positions[j].im)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#,
            points.join(" ")
        );
        if let Some(first) = samples.first() {
            let z = first.positions[j];
            let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{colour}"/>"#, px(z.re), py(z.im));
        }
        if let Some(dead) = samples.iter().find(|s| !s.alive[j]) {
            let z = dead.positions[j];
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="7" fill="none" stroke="{colour}" stroke-dasharray="3,2"/>"#,
                px(z.re),
                py(z.im)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
