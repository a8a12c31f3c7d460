//! Radius of the stationary ring of equal vortices, and how it moves with N.

use glvortex::dynamics::{integrate, EquationKind, IntegratorParams};
use glvortex::equilibria::{same_sign_radius, same_sign_ring};

fn main() -> glvortex::Result<()> {
    let (r1, r2) = (0.5, 1.5);
    for n in 1..=6 {
        let ring = same_sign_ring(r1, r2, n)?;
        println!("N = {n}: r0 = {:.9}, residual {:.1e}", same_sign_radius(r1, r2, n)?, ring.residual);
    }

    // The N = 2 ring just sits there.
    let ring = same_sign_ring(r1, r2, 2)?;
    let params = IntegratorParams::for_domain(ring.config.domain(), 10.0).with_tolerances(1e-12, 1e-14);
    let traj = integrate(&EquationKind::Schrodinger, &ring.config, &params)?;
    let moved = traj
        .final_configuration()
        .positions()
        .iter()
        .zip(ring.config.positions())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("N = 2 ring after t = 10: moved {moved:.1e}");
    Ok(())
}
