//! Entropy of entanglement.
//!
//! Two conventions are provided for a superposition of Slater determinants:
//! the symmetrized one, which counts the unit of uncertainty carried by
//! antisymmetrization itself (`S >= 1`), and the label-fixed one, which
//! drops it and measures only the genuine correlations (`S >= 0`).

use num_complex::Complex64;

use crate::amplitudes::{coulomb_f_pm, Angle};
use crate::error::{Error, Result};
use crate::spin_states::{reduced_density_matrix, SlaterDecomposition, Slot, TwoSpinState};
use crate::NORM_TOL;

/// Normalized coefficients over a Slater-determinant basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SlCoefficients(Vec<Complex64>);

impl SlCoefficients {
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self> {
        let norm_sq: f64 = coefficients.iter().map(|c| c.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sq));
        }
        Ok(Self(coefficients))
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }
}

impl From<&SlaterDecomposition> for SlCoefficients {
    fn from(dec: &SlaterDecomposition) -> Self {
        Self(dec.coefficients().to_vec())
    }
}

/// `-sum p log2 p` with `0 log 0 = 0`; each weight is clamped to `[0, 1]`.
pub fn shannon_entropy_bits<I: IntoIterator<Item = f64>>(weights: I) -> f64 {
    weights
        .into_iter()
        .map(|p| p.clamp(0.0, 1.0))
        .filter(|&p| p > 0.0)
        .fold(0.0, |acc, p| acc - p * p.log2())
}

pub fn eoe_label_fixed(coeffs: &SlCoefficients) -> f64 {
    shannon_entropy_bits(coeffs.0.iter().map(|c| c.norm_sqr()))
}

pub fn eoe_symmetrized(coeffs: &SlCoefficients) -> f64 {
    1.0 + eoe_label_fixed(coeffs)
}

/// Von Neumann entropy (bits) of the slot-1 reduced density matrix.
pub fn entropy_of_state(state: &TwoSpinState) -> f64 {
    shannon_entropy_bits(reduced_density_matrix(state, Slot::First).eigenvalues())
}

/// Closed-form entropy for lowest-order Coulomb scattering. Symmetric about
/// `pi / 2`.
pub fn coulomb_entropy(theta: Angle) -> f64 {
    let (f_plus, f_minus) = coulomb_f_pm(theta);
    shannon_entropy_bits([f_plus * f_plus, f_minus * f_minus])
}
