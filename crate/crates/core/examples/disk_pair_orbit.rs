//! A vortex-antivortex pair in the unit disk orbits and comes back.

use glvortex::dynamics::{angular_moment, detect_period, integrate, EquationKind, IntegratorParams};
use glvortex::{DomainGeometry, Vortex, VortexConfiguration};

fn main() -> glvortex::Result<()> {
    let disk = DomainGeometry::disk(1.0)?;
    let pair = VortexConfiguration::new(disk, vec![Vortex::new(0.5, 0.0, 1), Vortex::new(-0.5, 0.0, -1)])?;

    let params = IntegratorParams::for_domain(&disk, 10.0).with_tolerances(1e-11, 1e-13);
    let period = detect_period(&EquationKind::Schrodinger, &pair, &params, 0)?.expect("the pair should close its orbit");
    println!("period {:.6}, closure {:.2e}", period.period, period.closure);

    let mut params = IntegratorParams::for_domain(&disk, period.period);
    params.sample_interval = Some(period.period / 8.0);
    let traj = integrate(&EquationKind::Schrodinger, &pair, &params)?;
    let m0 = angular_moment(&pair);
    for (i, s) in traj.samples().iter().enumerate() {
        let c = traj.configuration_at(i);
        println!(
            "t = {:7.4}  z0 = {:+.5}{:+.5}i  z1 = {:+.5}{:+.5}i  moment drift {:.1e}",
            s.t,
            s.positions[0].re,
            s.positions[0].im,
            s.positions[1].re,
            s.positions[1].im,
            angular_moment(&c) - m0
        );
    }
    Ok(())
}
