//! Prints the phase of a vortex pair on a coarse grid, as characters.

use std::f64::consts::PI;

use glvortex::potentials::phase_field;
use glvortex::{DomainGeometry, Vortex, VortexConfiguration};
use num_complex::Complex64;

fn main() -> glvortex::Result<()> {
    let cfg = VortexConfiguration::new(
        DomainGeometry::annulus(0.5, 1.5)?,
        vec![Vortex::new(0.9, 0.3, 1), Vortex::new(-0.8, -0.4, -1)],
    )?;
    let shades = ['.', ':', '-', '=', '+', '*', '#', '%'];
    for row in 0..25 {
        let line: String = (0..60)
            .map(|col| {
                let z = Complex64::new(-1.5 + 3.0 * col as f64 / 59.0, 1.5 - 3.0 * row as f64 / 24.0);
                if !cfg.domain().contains(z) {
                    return ' ';
                }
                let phi = phase_field(&cfg, z).unwrap().rem_euclid(2.0 * PI);
                shades[((phi / (2.0 * PI)) * shades.len() as f64) as usize % shades.len()]
            })
            .collect();
        println!("{line}");
    }
    Ok(())
}
