//! Runs every preset, checks its regime and writes outputs under
//! `results/presets` (overwriting).

use glvortex::scenario::{check_regime, presets, run_scenario, write_outputs};

fn main() -> glvortex::Result<()> {
    for p in presets() {
        let run = run_scenario(&p.spec)?;
        let check = check_regime(&run, p.regime)?;
        write_outputs(&run, "results/presets", true)?;
        println!(
            "{:6} {:>16}  {}  {}",
            p.spec.name,
            format!("{:?}", p.regime),
            if check.passed { "ok  " } else { "MISS" },
            check.detail
        );
    }
    Ok(())
}
