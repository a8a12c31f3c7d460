//! Domains, vortices and vortex configurations.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::elliptic::EllipticContext;
use crate::error::{Error, Result};

/// Minimum separation below which two living vortices count as coincident.
pub const COINCIDENCE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DomainGeometry {
    Disk {
        #[serde(rename = "R2")]
        r2: f64,
    },
    Annulus {
        #[serde(rename = "R1")]
        r1: f64,
        #[serde(rename = "R2")]
        r2: f64,
    },
}

impl DomainGeometry {
    pub fn disk(r2: f64) -> Result<Self> {
        let d = DomainGeometry::Disk { r2 };
        d.validate()?;
        Ok(d)
    }

    pub fn annulus(r1: f64, r2: f64) -> Result<Self> {
        let d = DomainGeometry::Annulus { r1, r2 };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            DomainGeometry::Disk { r2 } if r2 > 0.0 && r2.is_finite() => Ok(()),
            DomainGeometry::Annulus { r1, r2 } if r1 > 0.0 && r2 > r1 && r2.is_finite() => Ok(()),
            other => Err(Error::InvalidGeometry(format!("{other:?}"))),
        }
    }

    pub fn outer_radius(&self) -> f64 {
        match *self {
            DomainGeometry::Disk { r2 } | DomainGeometry::Annulus { r2, .. } => r2,
        }
    }

    pub fn inner_radius(&self) -> Option<f64> {
        match *self {
            DomainGeometry::Disk { .. } => None,
            DomainGeometry::Annulus { r1, .. } => Some(r1),
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        let r = z.norm();
        r < self.outer_radius() && self.inner_radius().map_or(true, |r1| r > r1)
    }

    /// Distance from `z` to the nearest boundary circle.
    pub fn wall_distance(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let outer = self.outer_radius() - r;
        match self.inner_radius() {
            Some(r1) => outer.min(r - r1),
            None => outer,
        }
    }
}

/// How the annulus velocity of a vortex treats its own singular term.
///
/// `Reduced` keeps only the image-lattice term `−(n_j/z_j)·ζ(2i ln(r_j/R2))`.
/// `Routh` adds `i·n_j/(2 z_j)`, the finite part the logarithmic map
/// `u = i ln z` leaves behind when `n_j/(i(z − z_j))` is removed in the
/// physical plane. Only `Routh` tends to the disk formula as `R1 → 0`;
/// the stationary pair at `±√(R1R2)` and the chain and ring equilibria are
/// equilibria of `Reduced`. Disk velocities ignore this setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelfInteraction {
    #[default]
    Reduced,
    Routh,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vortex {
    pub position: Complex64,
    pub degree: i32,
    pub alive: bool,
}

impl Vortex {
    pub fn new(x: f64, y: f64, degree: i32) -> Self {
        Vortex {
            position: Complex64::new(x, y),
            degree,
            alive: true,
        }
    }

    pub fn at(position: Complex64, degree: i32) -> Self {
        Vortex {
            position,
            degree,
            alive: true,
        }
    }
}

/// Vortices inside a domain, with the lattice context the annulus needs.
#[derive(Debug, Clone, PartialEq)]
pub struct VortexConfiguration {
    domain: DomainGeometry,
    vortices: Vec<Vortex>,
    context: Option<EllipticContext>,
    self_interaction: SelfInteraction,
}

impl VortexConfiguration {
    pub fn new(domain: DomainGeometry, vortices: Vec<Vortex>) -> Result<Self> {
        domain.validate()?;
        let context = match domain {
            DomainGeometry::Disk { .. } => None,
            DomainGeometry::Annulus { r1, r2 } => Some(EllipticContext::new(r1, r2, 1)?),
        };
        let cfg = VortexConfiguration {
            domain,
            vortices,
            context,
            self_interaction: SelfInteraction::default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_self_interaction(mut self, law: SelfInteraction) -> Self {
        self.self_interaction = law;
        self
    }

    fn validate(&self) -> Result<()> {
        for (i, v) in self.vortices.iter().enumerate() {
            if v.degree.abs() != 1 {
                return Err(Error::InvalidConfiguration(format!(
                    "vortex {i} has degree {}, only ±1 is supported",
                    v.degree
                )));
            }
            if v.alive && !self.domain.contains(v.position) {
                return Err(Error::InvalidConfiguration(format!(
                    "vortex {i} at {} lies outside the domain",
                    v.position
                )));
            }
        }
        self.check_separation()
    }

    pub(crate) fn check_separation(&self) -> Result<()> {
        let live: Vec<(usize, Complex64)> = self.living().map(|(i, v)| (i, v.position)).collect();
        for (a, &(i, zi)) in live.iter().enumerate() {
            for &(j, zj) in &live[a + 1..] {
                let distance = (zi - zj).norm();
                if distance < COINCIDENCE_EPS {
                    return Err(Error::CoincidentVortices { i, j, distance });
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &DomainGeometry {
        &self.domain
    }

    pub fn vortices(&self) -> &[Vortex] {
        &self.vortices
    }

    pub fn len(&self) -> usize {
        self.vortices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vortices.is_empty()
    }

    /// Lattice context of the annulus (`ω1 = π`); `None` for the disk.
    pub fn context(&self) -> Option<&EllipticContext> {
        self.context.as_ref()
    }

    pub fn self_interaction(&self) -> SelfInteraction {
        self.self_interaction
    }

    pub fn living(&self) -> impl Iterator<Item = (usize, &Vortex)> {
        self.vortices.iter().enumerate().filter(|(_, v)| v.alive)
    }

    pub fn living_count(&self) -> usize {
        self.vortices.iter().filter(|v| v.alive).count()
    }

    pub fn positions(&self) -> Vec<Complex64> {
        self.vortices.iter().map(|v| v.position).collect()
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.vortices.iter().map(|v| v.degree).collect()
    }

    /// Same domain and degrees, new positions. No containment check: used for
    /// intermediate integrator stages.
    pub fn with_positions(&self, positions: &[Complex64]) -> Self {
        assert_eq!(positions.len(), self.vortices.len());
        let mut next = self.clone();
        for (v, &p) in next.vortices.iter_mut().zip(positions) {
            v.position = p;
        }
        next
    }

    pub(crate) fn kill(&mut self, index: usize) {
        self.vortices[index].alive = false;
    }

    /// Every vortex rotated about the origin by `angle`.
    pub fn rotated(&self, angle: f64) -> Self {
        let rot = Complex64::from_polar(1.0, angle);
        let positions: Vec<_> = self.vortices.iter().map(|v| v.position * rot).collect();
        self.with_positions(&positions)
    }

    /// Every degree negated.
    pub fn flipped(&self) -> Self {
        let mut next = self.clone();
        for v in &mut next.vortices {
            v.degree = -v.degree;
        }
        next
    }

    /// Smallest distance between two living vortices (infinite if fewer than two).
    pub fn min_pair_distance(&self) -> f64 {
        let live: Vec<Complex64> = self.living().map(|(_, v)| v.position).collect();
        let mut best = f64::INFINITY;
        for (a, za) in live.iter().enumerate() {
            for zb in &live[a + 1..] {
                best = best.min((za - zb).norm());
            }
        }
        best
    }
}
