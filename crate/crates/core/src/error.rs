use std::path::PathBuf;

use num_complex::Complex64;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("lattice pole at z = {z}")]
    Pole { z: Complex64 },

    #[error("vortices {i} and {j} coincide (distance {distance:e})")]
    CoincidentVortices { i: usize, j: usize, distance: f64 },

    #[error("field point {z} sits on vortex {index}")]
    Singularity { z: Complex64, index: usize },

    #[error("invalid vortex configuration: {0}")]
    InvalidConfiguration(String),

    #[error("vortex {0} is not alive")]
    DeadVortex(usize),

    #[error("step size underflow at t = {t} (h = {h:e}, minimum pair distance {min_distance:e})")]
    StepUnderflow { t: f64, h: f64, min_distance: f64 },

    #[error("step limit of {steps} reached at t = {t}")]
    StepLimit { steps: usize, t: f64 },

    #[error("invalid integrator parameters: {0}")]
    InvalidParams(String),

    #[error("no root found: {0}")]
    NoRoot(String),

    #[error("Newton iteration did not converge after {iterations} iterations (best residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("config error in {context}: {message}")]
    Config { context: String, message: String },

    #[error("refusing to overwrite existing file {0} (pass the overwrite flag)")]
    WouldOverwrite(PathBuf),

    #[error("scenario `{scenario}`: {source}")]
    Scenario {
        scenario: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by bad user input rather than by the simulation.
    pub fn is_config_error(&self) -> bool {
        match self {
            Error::InvalidGeometry(_)
            | Error::InvalidConfiguration(_)
            | Error::InvalidParams(_)
            | Error::Config { .. }
            | Error::WouldOverwrite(_) => true,
            Error::Scenario { source, .. } => source.is_config_error(),
            _ => false,
        }
    }
}
