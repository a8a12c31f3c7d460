use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use glvortex::dynamics::{EquationKind, Method};
use glvortex::equilibria::{analytic_chains, analytic_pair, same_sign_ring, StationaryConfig};
use glvortex::linearized::coeffs;
use glvortex::scenario::{check_regime, load_spec, preset, preset_names, presets, run_scenario, write_outputs, OutputFormat, ScenarioSpec};
use glvortex::{DomainGeometry, Error, Result};

#[derive(Parser)]
#[command(name = "glvortex", version, about = "Vortex motion in the disk and the annulus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a scenario and write its trajectory files.
    Simulate(SimulateArgs),
    /// Print a stationary configuration of the annulus.
    Stationary(StationaryArgs),
    /// Print the linearized pair coefficients.
    Linearized(LinearizedArgs),
    /// List the built-in presets.
    Presets,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, conflicts_with_all = ["config", "all_presets"])]
    preset: Option<String>,
    #[arg(long, conflicts_with = "all_presets")]
    config: Option<PathBuf>,
    /// Run every preset, concurrently.
    #[arg(long)]
    all_presets: bool,
    #[arg(long, default_value = "results")]
    out_dir: PathBuf,
    #[arg(long)]
    overwrite: bool,
    /// Also check presets against their expected regime.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    overrides: Overrides,
}

/// Command-line counterparts of the scenario keys.
#[derive(Args)]
struct Overrides {
    #[arg(long)]
    equation: Option<EquationKind>,
    #[arg(long = "R1")]
    r1: Option<f64>,
    #[arg(long = "R2")]
    r2: Option<f64>,
    #[arg(long)]
    method: Option<Method>,
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long)]
    rel_tol: Option<f64>,
    #[arg(long)]
    abs_tol: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    sample_interval: Option<f64>,
    #[arg(long)]
    collision_eps: Option<f64>,
    #[arg(long)]
    wall_eps: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    outputs: Option<Vec<OutputFormat>>,
}

impl Overrides {
    fn apply(&self, spec: &mut ScenarioSpec) -> Result<()> {
        if let Some(e) = self.equation {
            spec.equation = e;
        }
        if self.r1.is_some() || self.r2.is_some() {
            spec.domain = match spec.domain {
                DomainGeometry::Disk { r2 } => {
                    if self.r1.is_some() {
                        return Err(Error::Config {
                            context: "--R1".into(),
                            message: "a disk has no inner radius".into(),
                        });
                    }
                    DomainGeometry::disk(self.r2.unwrap_or(r2))?
                }
                DomainGeometry::Annulus { r1, r2 } => DomainGeometry::annulus(self.r1.unwrap_or(r1), self.r2.unwrap_or(r2))?,
            };
        }
        let i = &mut spec.integrator;
        i.method = self.method.or(i.method);
        i.dt = self.dt.or(i.dt);
        i.rel_tol = self.rel_tol.or(i.rel_tol);
        i.abs_tol = self.abs_tol.or(i.abs_tol);
        i.t_end = self.t_end.unwrap_or(i.t_end);
        i.sample_interval = self.sample_interval.or(i.sample_interval);
        spec.events.collision_eps = self.collision_eps.or(spec.events.collision_eps);
        spec.events.wall_eps = self.wall_eps.or(spec.events.wall_eps);
        if let Some(o) = &self.outputs {
            spec.outputs = o.clone();
        }
        spec.validate()
    }
}

#[derive(Args)]
struct StationaryArgs {
    #[arg(long = "R1")]
    r1: f64,
    #[arg(long = "R2")]
    r2: f64,
    /// Number of chains (or ring size with --same-sign).
    #[arg(long = "N", default_value_t = 1)]
    n: usize,
    /// Ring of N equal vortices instead of alternating chains.
    #[arg(long)]
    same_sign: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LinearizedArgs {
    #[arg(long = "R1")]
    r1: f64,
    #[arg(long = "R2")]
    r2: f64,
    /// Also print the sign conditions and derived quantities.
    #[arg(long)]
    report: bool,
    #[arg(long)]
    json: bool,
}

fn simulate_one(spec: ScenarioSpec, args: &SimulateArgs) -> Result<String> {
    let run = run_scenario(&spec)?;
    let files = write_outputs(&run, &args.out_dir, args.overwrite)?;
    let s = &run.summary;
    let mut line = format!(
        "{}: t = {:.6} of {}, {} samples, {} pair annihilations, {} wall absorptions, {} survivors",
        s.name, s.final_time, s.t_end, s.samples, s.pair_annihilations, s.wall_absorptions, s.survivors
    );
    if args.check {
        if let Some(p) = preset(&spec.name) {
            let c = check_regime(&run, p.regime)?;
            line += &format!("\n  regime {:?}: {} ({})", c.regime, if c.passed { "ok" } else { "MISMATCH" }, c.detail);
        }
    }
    for f in files.all() {
        line += &format!("\n  wrote {}", f.display());
    }
    Ok(line)
}

fn simulate(args: &SimulateArgs) -> Result<()> {
    let specs: Vec<ScenarioSpec> = if args.all_presets {
        presets().into_iter().map(|p| p.spec).collect()
    } else if let Some(name) = &args.preset {
        let p = preset(name).ok_or_else(|| Error::Config {
            context: "--preset".into(),
            message: format!("unknown preset `{name}` (known: {})", preset_names().join(", ")),
        })?;
        vec![p.spec]
    } else if let Some(path) = &args.config {
        vec![load_spec(path)?]
    } else {
        return Err(Error::Config {
            context: "simulate".into(),
            message: "pass --preset, --config or --all-presets".into(),
        });
    };
    let mut specs = specs;
    for spec in &mut specs {
        args.overrides.apply(spec)?;
    }

    let results: Vec<Result<String>> = std::thread::scope(|scope| {
        let handles: Vec<_> = specs
            .into_iter()
            .map(|spec| scope.spawn(move || simulate_one(spec, args)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("simulation thread panicked")).collect()
    });
    // The first failure is reported by main; later ones are printed here.
    let mut first_error = None;
    for r in results {
        match r {
            Ok(line) => println!("{line}"),
            Err(e) if first_error.is_none() => first_error = Some(e),
            Err(e) => eprintln!("error: {e}"),
        }
    }
    first_error.map_or(Ok(()), Err)
}

fn stationary(args: &StationaryArgs) -> Result<()> {
    let s: StationaryConfig = if args.same_sign {
        same_sign_ring(args.r1, args.r2, args.n)?
    } else if args.n == 1 {
        analytic_pair(args.r1, args.r2)?
    } else {
        analytic_chains(args.r1, args.r2, args.n)?
    };
    let positions: Vec<(f64, f64, i32)> = s.config.vortices().iter().map(|v| (v.position.re, v.position.im, v.degree)).collect();
    if args.json {
        let out = serde_json::json!({
            "kind": format!("{:?}", s.kind),
            "R1": args.r1,
            "R2": args.r2,
            "radius": s.config.positions()[0].norm(),
            "residual": s.residual,
            "vortices": positions.iter().map(|(x, y, n)| serde_json::json!({"x": x, "y": y, "n": n})).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        println!("{:?} configuration, radius {:.9}", s.kind, s.config.positions()[0].norm());
        for (x, y, n) in positions {
            println!("  {x:+.12} {y:+.12}  n = {n:+}");
        }
        println!("max |W'(z_j)| = {:.3e}", s.residual);
    }
    Ok(())
}

fn linearized(args: &LinearizedArgs) -> Result<()> {
    let c = coeffs(args.r1, args.r2)?;
    if args.json {
        let out = serde_json::json!({ "coeffs": c, "signs": c.signs(), "period": c.period() });
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(());
    }
    println!("a1 = {:.12}\na2 = {:.12}\na3 = {:.12}\nk  = {:.12}", c.a1, c.a2, c.a3, c.k);
    if args.report {
        let s = c.signs();
        let mark = |b: bool| if b { "holds" } else { "fails" };
        println!("period 2pi/k   = {:.12}", c.period());
        println!("a3 + a2        = {:.12}  (> 0 {})", c.a3 + c.a2, mark(s.sum_positive));
        println!("a3 - a2        = {:.12}  (< 0 {})", c.a3 - c.a2, mark(s.difference_negative));
        println!("a1 > 0 {}, a2 > 0 {}", mark(s.a1_positive), mark(s.a2_positive));
        println!("heat flow: x-antisymmetric rate {:.6}, x-symmetric rate {:.6}, y-symmetric rate {:.6}", c.a3 + c.a2, c.a3 - c.a2, 2.0 * c.a1);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Simulate(a) => simulate(a),
        Command::Stationary(a) => stationary(a),
        Command::Linearized(a) => linearized(a),
        Command::Presets => {
            for p in presets() {
                println!("{:6}  {:?}  {}", p.spec.name, p.regime, p.spec.description.unwrap_or_default());
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_config_error() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}
