//! Spin correlations of the outgoing pair and the angle-dependent Bell test.
//!
//! With unit vectors `a`, `b`, `c` the inequality reads
//! `|E(a,b) - E(a,c)| <= 1 + E(b,c)`. For the coplanar geometry returned by
//! [`BellGeometry::standard`] the left side is identically 1, so the test
//! reduces to `F = 1 + E(b,c) >= 1`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::amplitudes::{normalize, AmplitudeProvider, Angle, NormalizedAmplitudePair};
use crate::error::{Error, Result};
use crate::spin_states::TwoSpinState;
use crate::NORM_TOL;

/// Lower end of the critical-angle bracket.
pub const THETA_LO: f64 = 1e-6;
/// Points in the sign-change scan preceding bisection.
pub const SCAN_POINTS: usize = 1024;
pub const DEFAULT_TOL: f64 = 1e-10;
/// `F` must fall below `1 - VIOLATION_MARGIN` to count as a violation, so the
/// boundary point `F = 1` is not flagged on round-off alone.
pub const VIOLATION_MARGIN: f64 = 1e-12;
/// Largest imaginary part tolerated in a Hermitian expectation value.
pub const IMAG_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitVector3 {
    x: f64,
    y: f64,
    z: f64,
}

impl UnitVector3 {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if ((x * x + y * y + z * z) - 1.0).abs() > NORM_TOL {
            return Err(Error::NotUnitVector(x, y, z));
        }
        Ok(Self { x, y, z })
    }

    /// Rescales any nonzero vector to unit length.
    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (x * x + y * y + z * z).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotUnitVector(x, y, z));
        }
        Ok(Self {
            x: x / n,
            y: y / n,
            z: z / n,
        })
    }

    /// Direction with polar angle `polar` (from `z`) and azimuth `azimuth`.
    pub fn from_spherical(polar: f64, azimuth: f64) -> Self {
        Self {
            x: polar.sin() * azimuth.cos(),
            y: polar.sin() * azimuth.sin(),
            z: polar.cos(),
        }
    }

    pub fn x_hat() -> Self {
        Self {
            x: 1.0,
            y: 0.0,
            z: 0.0,
        }
    }

    pub fn y_hat() -> Self {
        Self {
            x: 0.0,
            y: 1.0,
            z: 0.0,
        }
    }

    pub fn z_hat() -> Self {
        Self {
            x: 0.0,
            y: 0.0,
            z: 1.0,
        }
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> [f64; 3] {
        [
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        ]
    }

    pub fn angle_to(&self, other: &Self) -> f64 {
        self.dot(other).clamp(-1.0, 1.0).acos()
    }
}

/// Three coplanar measurement directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellGeometry {
    pub a_hat: UnitVector3,
    pub b_hat: UnitVector3,
    pub c_hat: UnitVector3,
}

impl BellGeometry {
    /// `a = z`, `b` and `c` at `pi/3` and `2 pi/3` from `z` in the x-z plane.
    /// Placing `a` on the quantization axis makes `|E(a,b) - E(a,c)| = 1`
    /// for every scattering angle.
    pub fn standard() -> Self {
        Self {
            a_hat: UnitVector3::z_hat(),
            b_hat: UnitVector3::from_spherical(FRAC_PI_3, 0.0),
            c_hat: UnitVector3::from_spherical(2.0 * FRAC_PI_3, 0.0),
        }
    }

    /// Pairwise angles `(ab, ac, bc)`.
    pub fn angles(&self) -> (f64, f64, f64) {
        (
            self.a_hat.angle_to(&self.b_hat),
            self.a_hat.angle_to(&self.c_hat),
            self.b_hat.angle_to(&self.c_hat),
        )
    }

    pub fn triple_product(&self) -> f64 {
        let [x, y, z] = self.b_hat.cross(&self.c_hat);
        self.a_hat.x * x + self.a_hat.y * y + self.a_hat.z * z
    }

    /// Left side `|E(a,b) - E(a,c)|` of the inequality, via the closed form.
    pub fn lhs(&self, amps: &NormalizedAmplitudePair) -> Result<f64> {
        Ok((correlator_closed_form(&self.a_hat, &self.b_hat, amps)?
            - correlator_closed_form(&self.a_hat, &self.c_hat, amps)?)
        .abs())
    }

    /// Right side `1 + E(b,c)`.
    pub fn rhs(&self, amps: &NormalizedAmplitudePair) -> Result<f64> {
        Ok(1.0 + correlator_closed_form(&self.b_hat, &self.c_hat, amps)?)
    }
}

/// `E(a, b) = -[a_z b_z + 2 f_plus f_minus (a_x b_x + a_y b_y)]` for the
/// fermionic outgoing state. Needs a real relative phase between the
/// amplitudes; use [`correlator_oracle`] otherwise.
pub fn correlator_closed_form(
    a: &UnitVector3,
    b: &UnitVector3,
    amps: &NormalizedAmplitudePair,
) -> Result<f64> {
    let (f_plus, f_minus) = amps.as_real()?;
    Ok(-(a.z * b.z + 2.0 * f_plus * f_minus * (a.x * b.x + a.y * b.y)))
}

type Mat2 = [[Complex64; 2]; 2];

/// `sigma . n` for an arbitrary real vector `n`.
fn sigma_dot(n: [f64; 3]) -> Mat2 {
    let c = |re, im| Complex64::new(re, im);
    let [x, y, z] = n;
    // sigma_x = [[0,1],[1,0]], sigma_y = [[0,-i],[i,0]], sigma_z = [[1,0],[0,-1]]
    [[c(z, 0.0), c(x, -y)], [c(x, y), c(-z, 0.0)]]
}

fn kron(lhs: &Mat2, rhs: &Mat2) -> [[Complex64; 4]; 4] {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = lhs[i][j] * rhs[k][l];
                }
            }
        }
    }
    out
}

/// `<psi| (sigma . a) (x) (sigma . b) |psi>` for arbitrary real vectors,
/// built from the explicit 4x4 operator.
pub fn pauli_expectation(state: &TwoSpinState, a: [f64; 3], b: [f64; 3]) -> Complex64 {
    let op = kron(&sigma_dot(a), &sigma_dot(b));
    let psi = state.coefficients();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, row) in op.iter().enumerate() {
        let applied: Complex64 = row.iter().zip(psi).map(|(o, c)| o * c).sum();
        acc += psi[i].conj() * applied;
    }
    acc
}

/// Brute-force correlator, valid for any two-spin state.
pub fn correlator_oracle(state: &TwoSpinState, a: &UnitVector3, b: &UnitVector3) -> Result<f64> {
    let value = pauli_expectation(state, a.components(), b.components());
    if value.im.abs() > IMAG_TOL {
        return Err(Error::NonRealExpectation(value.im));
    }
    Ok(value.re)
}

/// `F = 5/4 - (3/2) f_plus f_minus`, equal to `1 + E(b, c)` in the standard
/// geometry.
pub fn bell_f(amps: &NormalizedAmplitudePair) -> Result<f64> {
    let (f_plus, f_minus) = amps.as_real()?;
    Ok(1.25 - 1.5 * f_plus * f_minus)
}

pub fn is_violated(amps: &NormalizedAmplitudePair) -> Result<bool> {
    Ok(bell_f(amps)? < 1.0 - VIOLATION_MARGIN)
}

fn f_minus_one<P: AmplitudeProvider + ?Sized>(provider: &P, theta: f64) -> Result<f64> {
    let amps = normalize(provider.amplitudes(Angle::new(theta)?))?;
    Ok(bell_f(&amps)? - 1.0)
}

/// Smallest angle in `[THETA_LO, pi/2]` where `F` crosses 1.
///
/// A uniform scan over [`SCAN_POINTS`] points locates the first sign change
/// of `F - 1`; bisection then narrows that bracket to `tol`. Returns `None`
/// when `F - 1` keeps one sign on every scan point.
pub fn critical_angle<P: AmplitudeProvider + ?Sized>(
    provider: &P,
    tol: f64,
) -> Result<Option<Angle>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "tolerance {tol} must be positive"
        )));
    }
    let step = (FRAC_PI_2 - THETA_LO) / (SCAN_POINTS - 1) as f64;
    let grid = |i: usize| {
        if i == SCAN_POINTS - 1 {
            FRAC_PI_2
        } else {
            THETA_LO + step * i as f64
        }
    };

    let mut prev_theta = grid(0);
    let mut prev_g = f_minus_one(provider, prev_theta)?;
    if prev_g == 0.0 {
        return Angle::new(prev_theta).map(Some);
    }
    for i in 1..SCAN_POINTS {
        let theta = grid(i);
        let g = f_minus_one(provider, theta)?;
        if g == 0.0 {
            return Angle::new(theta).map(Some);
        }
        if (g < 0.0) != (prev_g < 0.0) {
            return bisect(provider, prev_theta, prev_g, theta, tol).map(Some);
        }
        prev_theta = theta;
        prev_g = g;
    }
    Ok(None)
}

fn bisect<P: AmplitudeProvider + ?Sized>(
    provider: &P,
    mut lo: f64,
    g_lo: f64,
    mut hi: f64,
    tol: f64,
) -> Result<Angle> {
    let lo_negative = g_lo < 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g = f_minus_one(provider, mid)?;
        if g == 0.0 {
            return Angle::new(mid);
        }
        if (g < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Angle::new(0.5 * (lo + hi))
}
