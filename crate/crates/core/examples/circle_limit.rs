//! Shrinking the hole of an annulus towards the disk.
//!
//! The printed annulus law keeps a finite self term `i n/(2z)` that the disk
//! law does not have, so its gap stalls; the Routh law closes it.

use glvortex::potentials::circle_limit_check_with;
use glvortex::{DomainGeometry, SelfInteraction, Vortex, VortexConfiguration};

fn main() -> glvortex::Result<()> {
    let cfg = VortexConfiguration::new(
        DomainGeometry::disk(1.0)?,
        vec![Vortex::new(0.5, 0.0, 1), Vortex::new(-0.2, 0.4, -1), Vortex::new(0.1, -0.6, 1)],
    )?;
    println!("{:>8}  {:>12}  {:>12}", "R1", "reduced", "routh");
    for r1 in [1e-1, 1e-2, 1e-3, 1e-4, 1e-5] {
        let reduced = circle_limit_check_with(&cfg, r1, SelfInteraction::Reduced)?;
        let routh = circle_limit_check_with(&cfg, r1, SelfInteraction::Routh)?;
        println!("{r1:>8.0e}  {reduced:>12.4e}  {routh:>12.4e}");
    }
    Ok(())
}
