//! Heat flow pulls opposite vortices together and pushes equal ones to the wall.

use glvortex::dynamics::{integrate, EquationKind, IntegratorParams};
use glvortex::{DomainGeometry, Vortex, VortexConfiguration};

fn report(label: &str, config: VortexConfiguration) -> glvortex::Result<()> {
    let params = IntegratorParams::for_domain(config.domain(), 5.0);
    let traj = integrate(&EquationKind::HeatFlow, &config, &params)?;
    println!("{label}: stopped at t = {:.5}", traj.final_time());
    for e in traj.events() {
        println!("  t = {:.5}  {}  vortices {:?}", e.t, e.kind.name(), e.vortices);
    }
    Ok(())
}

fn main() -> glvortex::Result<()> {
    let disk = DomainGeometry::disk(1.0)?;
    report(
        "opposite pair",
        VortexConfiguration::new(disk, vec![Vortex::new(0.2, 0.1, 1), Vortex::new(-0.1, -0.1, -1)])?,
    )?;
    report(
        "two equal vortices",
        VortexConfiguration::new(disk, vec![Vortex::new(0.3, 0.0, 1), Vortex::new(-0.2, 0.25, 1)])?,
    )?;
    let annulus = DomainGeometry::annulus(0.5, 1.5)?;
    report(
        "annulus mix",
        VortexConfiguration::new(
            annulus,
            vec![Vortex::new(0.9, 0.0, 1), Vortex::new(0.9, 0.15, -1), Vortex::new(-1.0, 0.3, 1), Vortex::new(-0.6, -0.8, 1)],
        )?,
    )
}
