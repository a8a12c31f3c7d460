//! Small oscillations of the annulus pair: closed form against the full
//! nonlinear run.

use glvortex::dynamics::{integrate, EquationKind, IntegratorParams};
use glvortex::linearized::{coeffs, displacements, heat_flow_solution, perturbed_pair, schrodinger_solution};

fn main() -> glvortex::Result<()> {
    let (r1, r2) = (0.5, 1.5);
    let c = coeffs(r1, r2)?;
    println!("a1 = {:.9}, a2 = {:.9}, a3 = {:.9}", c.a1, c.a2, c.a3);
    println!("k = {:.9}, period {:.6}", c.k, c.period());
    println!("signs: {:?}", c.signs());

    let d = 1e-3;
    let start = perturbed_pair(r1, r2, [d, -d, 0.0, 0.0])?;
    let mut params = IntegratorParams::for_domain(start.domain(), c.period()).with_tolerances(1e-12, 1e-15);
    params.sample_interval = Some(c.period() / 8.0);
    let traj = integrate(&EquationKind::Schrodinger, &start, &params)?;
    println!("\nSchrodinger, delta = {d:e}:   x1 nonlinear / linear,   y1 nonlinear / linear");
    for (i, s) in traj.samples().iter().enumerate() {
        let got = displacements(&traj.configuration_at(i));
        let lin = schrodinger_solution(&c, d, -d, 0.0, 0.0, s.t);
        println!("t = {:6.3}  {:+.6e} {:+.6e}   {:+.6e} {:+.6e}", s.t, got[0], lin[0], got[2], lin[2]);
    }

    let t_end = 2.0 / (c.a3 + c.a2);
    let mut params = IntegratorParams::for_domain(start.domain(), t_end).with_tolerances(1e-12, 1e-15);
    params.sample_interval = Some(t_end / 8.0);
    let traj = integrate(&EquationKind::HeatFlow, &start, &params)?;
    println!("\nheat flow: x1 grows like exp((a3 + a2) t)");
    for (i, s) in traj.samples().iter().enumerate() {
        let got = displacements(&traj.configuration_at(i));
        let lin = heat_flow_solution(&c, d, -d, 0.0, 0.0, s.t);
        println!("t = {:6.4}  {:+.6e} {:+.6e}", s.t, got[0], lin[0]);
    }
    Ok(())
}
