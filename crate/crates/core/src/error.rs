use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid kinematics: {0}")]
    InvalidKinematics(String),

    #[error("scattering angle {0} is outside the open interval (0, pi)")]
    AngleOutOfRange(f64),

    #[error("both scattering amplitudes vanish")]
    DegenerateAmplitudes,

    #[error("state is not normalized (norm^2 = {0})")]
    NotNormalized(f64),

    #[error("vector ({0}, {1}, {2}) is not a unit vector")]
    NotUnitVector(f64, f64, f64),

    #[error("closed-form correlator needs a real relative phase (got phase {0} rad)")]
    ComplexRelativePhase(f64),

    #[error("expectation value has imaginary part {0}")]
    NonRealExpectation(f64),

    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
