//! Weierstrass ζ, σ and ℘ for a rectangular lattice.
//!
//! The lattice is generated by the half-periods `ω1` (real) and
//! `ω2 = i·omega2_im`. Every evaluation first reduces its argument into the
//! fundamental cell `|Re z| ≤ ω1, |Im z| ≤ omega2_im` and then sums the
//! trigonometric q-series, where the nome is `q = exp(-π·omega2_im/ω1)`.
//! Quasi-period corrections are added back exactly afterwards.
//!
//! For the annulus `R1 < |z| < R2` carrying `N` identical vortex chains the
//! lattice is `ω1 = π/N`, `ω2 = i·ln(R2/R1)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub const DEFAULT_SERIES_TOL: f64 = 1e-14;

const MAX_TERMS: usize = 1_000_000;

/// Lattice data for one annulus geometry and chain count.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticContext {
    omega1: f64,
    omega2_im: f64,
    q: f64,
    eta: Complex64,
    eta_prime: Complex64,
    e1: Complex64,
    e2: Complex64,
    e3: Complex64,
    series_tol: f64,
}

/// An argument split into its fundamental-cell representative and the
/// lattice translation `2m·ω1 + 2n·ω2` that was removed.
#[derive(Debug, Clone, Copy)]
struct Reduced {
    z: Complex64,
    m: i64,
    n: i64,
}

impl EllipticContext {
    /// Context for the annulus `R1 < |z| < R2` with `chains` vortex chains.
    pub fn new(r1: f64, r2: f64, chains: usize) -> Result<Self> {
        Self::with_tolerance(r1, r2, chains, DEFAULT_SERIES_TOL)
    }

    pub fn with_tolerance(r1: f64, r2: f64, chains: usize, series_tol: f64) -> Result<Self> {
        if !(r1.is_finite() && r2.is_finite()) || r1 <= 0.0 || r2 <= r1 {
            return Err(Error::InvalidGeometry(format!(
                "annulus needs 0 < R1 < R2, got R1 = {r1}, R2 = {r2}"
            )));
        }
        if chains == 0 {
            return Err(Error::InvalidGeometry("chain count must be at least 1".into()));
        }
        Self::from_half_periods(PI / chains as f64, (r2 / r1).ln(), series_tol)
    }

    /// Context from the half-periods directly: `ω1 = omega1`, `ω2 = i·omega2_im`.
    pub fn from_half_periods(omega1: f64, omega2_im: f64, series_tol: f64) -> Result<Self> {
        if !(omega1 > 0.0 && omega2_im > 0.0 && omega1.is_finite() && omega2_im.is_finite()) {
            return Err(Error::InvalidGeometry(format!(
                "half-periods must be positive, got ω1 = {omega1}, |ω2| = {omega2_im}"
            )));
        }
        if !(series_tol > 0.0 && series_tol < 1.0) {
            return Err(Error::InvalidGeometry(format!(
                "series tolerance must lie in (0, 1), got {series_tol}"
            )));
        }
        let q = (-PI * omega2_im / omega1).exp();

        // η = π²/(12ω1) · (1 − 24 Σ t q^{2t}/(1 − q^{2t}))
        let mut acc = 0.0;
        let mut q2t = 1.0;
        for t in 1..=MAX_TERMS {
            q2t *= q * q;
            let term = t as f64 * q2t / (1.0 - q2t);
            acc += term;
            if 24.0 * term < series_tol * (1.0 + 24.0 * acc) {
                break;
            }
        }
        let eta = Complex64::new(PI * PI / (12.0 * omega1) * (1.0 - 24.0 * acc), 0.0);

        let mut ctx = EllipticContext {
            omega1,
            omega2_im,
            q,
            eta,
            eta_prime: Complex64::new(0.0, 0.0),
            e1: Complex64::new(0.0, 0.0),
            e2: Complex64::new(0.0, 0.0),
            e3: Complex64::new(0.0, 0.0),
            series_tol,
        };
        let w1 = ctx.omega1();
        let w2 = ctx.omega2();
        // Half-periods sit on the cell boundary, so the series apply without reduction.
        ctx.eta_prime = ctx.zeta_cell(w2);
        ctx.e1 = ctx.p_cell(w1);
        ctx.e2 = ctx.p_cell(w1 + w2);
        ctx.e3 = ctx.p_cell(w2);
        Ok(ctx)
    }

    pub fn omega1(&self) -> Complex64 {
        Complex64::new(self.omega1, 0.0)
    }

    pub fn omega2(&self) -> Complex64 {
        Complex64::new(0.0, self.omega2_im)
    }

    pub fn omega1_re(&self) -> f64 {
        self.omega1
    }

    pub fn omega2_im(&self) -> f64 {
        self.omega2_im
    }

    /// Real nome `exp(-π·|ω2|/ω1)`.
    pub fn nome(&self) -> f64 {
        self.q
    }

    /// `η = ζ(ω1)`.
    pub fn eta(&self) -> Complex64 {
        self.eta
    }

    /// `η′ = ζ(ω2)`.
    pub fn eta_prime(&self) -> Complex64 {
        self.eta_prime
    }

    /// `(e1, e2, e3) = (℘(ω1), ℘(ω1 + ω2), ℘(ω2))`.
    pub fn roots(&self) -> (Complex64, Complex64, Complex64) {
        (self.e1, self.e2, self.e3)
    }

    pub fn series_tol(&self) -> f64 {
        self.series_tol
    }

    /// `η·ω2 − η′·ω1 − πi/2`; vanishes up to series truncation.
    pub fn legendre_defect(&self) -> Complex64 {
        self.eta * self.omega2() - self.eta_prime * self.omega1() - Complex64::new(0.0, PI / 2.0)
    }

    /// Weierstrass ζ.
    pub fn zeta(&self, z: Complex64) -> Result<Complex64> {
        let r = self.reduce(z)?;
        let shift = 2.0 * (r.m as f64 * self.eta + r.n as f64 * self.eta_prime);
        Ok(self.zeta_cell(r.z) + shift)
    }

    /// A branch of `ln σ(z)`.
    ///
    /// The real part is single-valued. The imaginary part is only defined
    /// modulo 2π and jumps across branch cuts of the logarithm.
    pub fn log_sigma(&self, z: Complex64) -> Result<Complex64> {
        let r = self.reduce(z)?;
        let mut value = self.log_sigma_cell(r.z);
        if r.m != 0 || r.n != 0 {
            // σ(z + 2Ω) = (−1)^{m+n+mn} exp(2(mη + nη′)(z + Ω)) σ(z)
            let half_shift = r.m as f64 * self.omega1() + r.n as f64 * self.omega2();
            let h = r.m as f64 * self.eta + r.n as f64 * self.eta_prime;
            value += 2.0 * h * (r.z + half_shift);
            if (r.m + r.n + r.m * r.n).rem_euclid(2) == 1 {
                value += Complex64::new(0.0, PI);
            }
        }
        Ok(value)
    }

    /// Weierstrass ℘ (even, doubly periodic).
    pub fn weierstrass_p(&self, z: Complex64) -> Result<Complex64> {
        let r = self.reduce(z)?;
        Ok(self.p_cell(r.z))
    }

    /// Derivative ℘′ (odd, doubly periodic).
    pub fn weierstrass_p_prime(&self, z: Complex64) -> Result<Complex64> {
        let r = self.reduce(z)?;
        Ok(self.p_prime_cell(r.z))
    }

    fn reduce(&self, z: Complex64) -> Result<Reduced> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Pole { z });
        }
        let m = (z.re / (2.0 * self.omega1)).round();
        let n = (z.im / (2.0 * self.omega2_im)).round();
        let zr = Complex64::new(
            z.re - 2.0 * m * self.omega1,
            z.im - 2.0 * n * self.omega2_im,
        );
        if zr.norm() <= 1e-15 * (self.omega1 + self.omega2_im) {
            return Err(Error::Pole { z });
        }
        Ok(Reduced {
            z: zr,
            m: m as i64,
            n: n as i64,
        })
    }

    /// Visits `(t, q^{2t}/(1 − q^{2t}), cosh(t·π·|Im z|/ω1))` until `done` says stop.
    fn for_each_term(&self, z: Complex64, mut visit: impl FnMut(usize, f64, f64) -> bool) {
        let b = PI / self.omega1;
        let growth = (b * z.im.abs()).exp();
        let mut q2t = 1.0;
        let mut up = 1.0;
        for t in 1..=MAX_TERMS {
            q2t *= self.q * self.q;
            up *= growth;
            let c = q2t / (1.0 - q2t);
            let cosh = 0.5 * (up + 1.0 / up);
            if visit(t, c, cosh) {
                break;
            }
        }
    }

    fn zeta_cell(&self, z: Complex64) -> Complex64 {
        let a = PI / (2.0 * self.omega1);
        let b = PI / self.omega1;
        let v = a * z;
        let cot = v.cos() / v.sin();
        let mut sum = Complex64::new(0.0, 0.0);
        self.for_each_term(z, |t, c, cosh| {
            sum += c * (t as f64 * b * z).sin();
            4.0 * c * cosh < self.series_tol * (1.0 + (cot + 4.0 * sum).norm())
        });
        self.eta * z / self.omega1 + a * (cot + 4.0 * sum)
    }

    fn p_cell(&self, z: Complex64) -> Complex64 {
        let a = PI / (2.0 * self.omega1);
        let b = PI / self.omega1;
        let s = (a * z).sin();
        let head = a * a / (s * s);
        let mut sum = Complex64::new(0.0, 0.0);
        self.for_each_term(z, |t, c, cosh| {
            let tf = t as f64;
            sum += tf * c * (tf * b * z).cos();
            2.0 * b * b * tf * c * cosh < self.series_tol * (1.0 + (head - 2.0 * b * b * sum).norm())
        });
        -self.eta / self.omega1 + head - 2.0 * b * b * sum
    }

    fn p_prime_cell(&self, z: Complex64) -> Complex64 {
        let a = PI / (2.0 * self.omega1);
        let b = PI / self.omega1;
        let v = a * z;
        let s = v.sin();
        let head = -2.0 * a * a * a * v.cos() / (s * s * s);
        let mut sum = Complex64::new(0.0, 0.0);
        self.for_each_term(z, |t, c, cosh| {
            let tf = t as f64;
            sum += tf * tf * c * (tf * b * z).sin();
            2.0 * b * b * b * tf * tf * c * cosh
                < self.series_tol * (1.0 + (head + 2.0 * b * b * b * sum).norm())
        });
        head + 2.0 * b * b * b * sum
    }

    fn log_sigma_cell(&self, z: Complex64) -> Complex64 {
        let a = PI / (2.0 * self.omega1);
        let v = a * z;
        let one = Complex64::new(1.0, 0.0);
        let up = (2.0 * Complex64::i() * v).exp();
        let down = one / up;
        let head = (2.0 * self.omega1 / PI).ln() + self.eta * z * z / (2.0 * self.omega1) + v.sin().ln();
        let mut sum = Complex64::new(0.0, 0.0);
        let mut q2t = 1.0;
        let spread = up.norm() + down.norm();
        for _ in 1..=MAX_TERMS {
            q2t *= self.q * self.q;
            sum += (one - q2t * up).ln() + (one - q2t * down).ln() - 2.0 * (1.0 - q2t).ln();
            if 2.0 * q2t * spread < self.series_tol * (1.0 + (head + sum).norm()) {
                break;
            }
        }
        head + sum
    }
}
