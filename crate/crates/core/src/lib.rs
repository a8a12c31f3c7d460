pub mod domain;
pub mod dynamics;
pub mod elliptic;
pub mod equilibria;
pub mod error;
pub mod linearized;
pub mod potentials;
pub mod scenario;

pub use domain::{DomainGeometry, SelfInteraction, Vortex, VortexConfiguration};
pub use error::{Error, Result};
