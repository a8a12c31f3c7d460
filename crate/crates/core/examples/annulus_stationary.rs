//! Stationary configurations in the annulus 0.5 < |z| < 1.5: the analytic
//! pair and chains, plus a Newton search from a nudged guess.

use glvortex::equilibria::{analytic_chains, analytic_pair, find_stationary, max_residual};
use num_complex::Complex64;

fn main() -> glvortex::Result<()> {
    let (r1, r2) = (0.5, 1.5);
    let pair = analytic_pair(r1, r2)?;
    println!("pair at ±{:.6}: residual {:.2e}", (r1 * r2).sqrt(), pair.residual);
    for n in 1..=4 {
        let chains = analytic_chains(r1, r2, n)?;
        println!("{n} chain(s), {} vortices: residual {:.2e}", chains.config.len(), chains.residual);
    }

    let mut z = pair.config.positions();
    z[0] += 0.02;
    z[1] += Complex64::new(-0.01, 0.03);
    let guess = pair.config.with_positions(&z);
    println!("nudged guess: residual {:.2e}", max_residual(&guess)?);
    let found = find_stationary(&guess)?;
    println!("newton: {} iterations, residual {:.2e}", found.iterations, found.residual);
    for v in found.config.vortices() {
        println!("  {:+.10} {:+.10}  n = {:+}", v.position.re, v.position.im, v.degree);
    }
    Ok(())
}
