//! Outgoing two-spin states, Slater-determinant decompositions and reduced
//! density matrices.
//!
//! Basis order is `{up-up, up-down, down-up, down-down}`. Slot 1 is the
//! particle emerging along `theta`, slot 2 the one along `pi - theta`; the
//! quantization axis is `z`. The initial spins are opposite, `(s, -s)` with
//! `s = up`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::amplitudes::NormalizedAmplitudePair;
use crate::error::{Error, Result};
use crate::NORM_TOL;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Default `|c|^2` threshold below which a Slater coefficient counts as zero.
pub const DEFAULT_RANK_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExchangeStatistics {
    Fermion,
    Boson,
}

impl ExchangeStatistics {
    /// Exchange sign: -1 for fermions, +1 for bosons.
    pub fn sign(self) -> f64 {
        match self {
            Self::Fermion => -1.0,
            Self::Boson => 1.0,
        }
    }
}

impl std::str::FromStr for ExchangeStatistics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fermion" => Ok(Self::Fermion),
            "boson" => Ok(Self::Boson),
            other => Err(Error::InvalidConfig(format!(
                "unknown statistics '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Slot {
    First,
    Second,
}

/// Normalized pure state of two spin-1/2 particles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoSpinState {
    coefficients: [Complex64; 4],
}

impl TwoSpinState {
    pub fn new(coefficients: [Complex64; 4]) -> Result<Self> {
        let norm_sq: f64 = coefficients.iter().map(|c| c.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sq));
        }
        Ok(Self { coefficients })
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    pub fn normalized(coefficients: [Complex64; 4]) -> Result<Self> {
        let norm = coefficients
            .iter()
            .map(|c| c.norm_sqr())
            .sum::<f64>()
            .sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm * norm));
        }
        Ok(Self {
            coefficients: coefficients.map(|c| c / norm),
        })
    }

    /// `(|up down> - |down up>) / sqrt 2`.
    pub fn singlet() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            coefficients: [ZERO, Complex64::new(h, 0.0), Complex64::new(-h, 0.0), ZERO],
        }
    }

    pub fn up_down() -> Self {
        Self {
            coefficients: [ZERO, ONE, ZERO, ZERO],
        }
    }

    pub fn coefficients(&self) -> &[Complex64; 4] {
        &self.coefficients
    }

    pub fn c_up_up(&self) -> Complex64 {
        self.coefficients[0]
    }

    pub fn c_up_down(&self) -> Complex64 {
        self.coefficients[1]
    }

    pub fn c_down_up(&self) -> Complex64 {
        self.coefficients[2]
    }

    pub fn c_down_down(&self) -> Complex64 {
        self.coefficients[3]
    }

    /// Coefficient of `|s1 s2>`, with index 0 = up and 1 = down.
    fn at(&self, s1: usize, s2: usize) -> Complex64 {
        self.coefficients[2 * s1 + s2]
    }
}

/// Coefficients over the two momentum-labelled Slater determinants: `c_s`
/// multiplies the determinant where the particle along `theta` keeps spin
/// `s`, `c_minus_s` the one where it carries `-s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlaterDecomposition {
    pub c_s: Complex64,
    pub c_minus_s: Complex64,
}

impl SlaterDecomposition {
    pub fn new(c_s: Complex64, c_minus_s: Complex64) -> Result<Self> {
        let norm_sq = c_s.norm_sqr() + c_minus_s.norm_sqr();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sq));
        }
        Ok(Self { c_s, c_minus_s })
    }

    pub fn coefficients(&self) -> [Complex64; 2] {
        [self.c_s, self.c_minus_s]
    }

    /// Expands the determinants with slot labels fixed by direction:
    /// `SL_s -> |up down>`, `SL_{-s} -> |down up>`.
    pub fn to_state(&self) -> TwoSpinState {
        TwoSpinState {
            coefficients: [ZERO, self.c_s, self.c_minus_s, ZERO],
        }
    }
}

/// Hermitian 2x2 matrix `[[a, b], [conj(b), d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrix2 {
    pub entries: [[Complex64; 2]; 2],
}

impl DensityMatrix2 {
    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (0..2)
            .all(|i| (0..2).all(|j| (self.entries[i][j] - self.entries[j][i].conj()).norm() <= tol))
    }

    /// Eigenvalues in ascending order, from the closed form for a Hermitian
    /// 2x2 matrix.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let a = self.entries[0][0].re;
        let d = self.entries[1][1].re;
        let b = self.entries[0][1];
        let mean = 0.5 * (a + d);
        let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
        [mean - half_gap, mean + half_gap]
    }
}

/// Spin state after identical particles scatter from `|up>_0 |down>_pi`:
/// `f_plus |up down> + eta f_minus |down up>` with `eta` the exchange sign.
pub fn outgoing_state(amps: &NormalizedAmplitudePair, stats: ExchangeStatistics) -> TwoSpinState {
    TwoSpinState {
        coefficients: [ZERO, amps.f_plus(), amps.f_minus() * stats.sign(), ZERO],
    }
}

/// Unlike particles keep their spins; the amplitude only multiplies the
/// spatial factor, so the normalized spin part is always `|up down>`.
pub fn distinguishable_outgoing_state(_amps: &NormalizedAmplitudePair) -> TwoSpinState {
    TwoSpinState::up_down()
}

/// Fermionic outgoing state in the Slater basis: `c_s = f_plus`,
/// `c_minus_s = -f_minus`.
pub fn slater_decomposition(amps: &NormalizedAmplitudePair) -> SlaterDecomposition {
    SlaterDecomposition {
        c_s: amps.f_plus(),
        c_minus_s: -amps.f_minus(),
    }
}

/// Number of Slater coefficients with `|c|^2 > epsilon`.
pub fn slater_rank(dec: &SlaterDecomposition, epsilon: f64) -> usize {
    dec.coefficients()
        .iter()
        .filter(|c| c.norm_sqr() > epsilon)
        .count()
}

/// The incoming pair is a single determinant.
pub fn symmetrized_initial_state() -> SlaterDecomposition {
    SlaterDecomposition {
        c_s: ONE,
        c_minus_s: ZERO,
    }
}

/// Partial trace over the other slot.
pub fn reduced_density_matrix(state: &TwoSpinState, slot: Slot) -> DensityMatrix2 {
    let mut rho = [[ZERO; 2]; 2];
    for (i, row) in rho.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..2)
                .map(|k| match slot {
                    Slot::First => state.at(i, k) * state.at(j, k).conj(),
                    Slot::Second => state.at(k, i) * state.at(k, j).conj(),
                })
                .sum();
        }
    }
    DensityMatrix2 { entries: rho }
}

/// Number of reduced-density-matrix eigenvalues above `epsilon`: the
/// Schmidt rank of the state.
pub fn schmidt_rank(state: &TwoSpinState, epsilon: f64) -> usize {
    reduced_density_matrix(state, Slot::First)
        .eigenvalues()
        .iter()
        .filter(|&&l| l > epsilon)
        .count()
}
