//! Runs a scenario written inline as TOML and writes CSV, JSON and SVG into a
//! temporary directory.

use glvortex::scenario::{run_scenario, write_outputs, ScenarioSpec};

const SCENARIO: &str = r#"
name = "three_in_a_disk"
equation = "schrodinger"
vortices = [
    { x = 0.5, y = 0.0, n = 1 },
    { x = -0.25, y = 0.43, n = 1 },
    { x = -0.25, y = -0.43, n = -1 },
]

[domain]
kind = "disk"
R2 = 1.0

[integrator]
t_end = 5.0
rel_tol = 1e-10
abs_tol = 1e-12
"#;

fn main() -> glvortex::Result<()> {
    let spec = ScenarioSpec::from_toml(SCENARIO)?;
    let run = run_scenario(&spec)?;
    println!("{:#?}", run.summary);
    let dir = std::env::temp_dir().join("glvortex-example");
    let files = write_outputs(&run, &dir, true)?;
    for f in files.all() {
        println!("wrote {}", f.display());
    }
    println!("\nround trip:\n{}", spec.to_toml()?);
    Ok(())
}
