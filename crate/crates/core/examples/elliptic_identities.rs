//! Lattice data for the annulus and a few identities it should satisfy.
//!
//! ```text
//! cargo run --example elliptic_identities
//! ```

use glvortex::elliptic::EllipticContext;
use num_complex::Complex64;

fn main() -> glvortex::Result<()> {
    for (r1, r2, n) in [(0.5, 1.5, 1), (0.5, 1.5, 2), (0.1, 1.0, 3)] {
        let ctx = EllipticContext::new(r1, r2, n)?;
        let (e1, e2, e3) = ctx.roots();
        println!("R1 = {r1}, R2 = {r2}, N = {n}");
        println!("  omega1 = {:.6}, omega2 = {:.6}i, q = {:.6}", ctx.omega1_re(), ctx.omega2_im(), ctx.nome());
        println!("  eta = {:.9}, eta' = {:.9}", ctx.eta().re, ctx.eta_prime());
        println!("  e1 = {:.6}, e2 = {:.6}, e3 = {:.6}", e1.re, e2.re, e3.re);
        println!("  Legendre defect   {:.2e}", ctx.legendre_defect().norm());
        println!("  e1 + e2 + e3      {:.2e}", (e1 + e2 + e3).norm());

        let z = Complex64::new(0.3, 0.2) * ctx.omega1_re().min(ctx.omega2_im());
        let zeta = ctx.zeta(z)?;
        println!("  zeta(z) + zeta(-z) {:.2e}", (zeta + ctx.zeta(-z)?).norm());
        let shifted = ctx.zeta(z + 2.0 * ctx.omega1())? - zeta - 2.0 * ctx.eta();
        println!("  quasi-period       {:.2e}", shifted.norm());
    }
    Ok(())
}
