//! Scattering kinematics and the amplitude pair feeding the spin state.
//!
//! A spin-independent interaction enters only through `f_p(theta)`: the
//! direct channel is `f_p(theta)` and the exchange channel is the same
//! function at the supplementary angle, `f_p(pi - theta)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::NORM_TOL;

/// Two-body kinematics in the centre-of-mass frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Kinematics {
    mass: f64,
    energy: f64,
    charge_factor: f64,
}

impl Kinematics {
    /// `mass` of each particle, `energy` per particle (so `2E` is available).
    /// Requires `0 <= mass < energy`; the coupling factor defaults to 1.
    pub fn new(mass: f64, energy: f64) -> Result<Self> {
        Self::with_charge_factor(mass, energy, 1.0)
    }

    pub fn with_charge_factor(mass: f64, energy: f64, charge_factor: f64) -> Result<Self> {
        if !(mass.is_finite() && energy.is_finite() && charge_factor.is_finite()) {
            return Err(Error::InvalidKinematics("non-finite input".into()));
        }
        if mass < 0.0 {
            return Err(Error::InvalidKinematics(format!("mass {mass} is negative")));
        }
        if energy <= mass {
            return Err(Error::InvalidKinematics(format!(
                "energy {energy} must exceed mass {mass}"
            )));
        }
        if charge_factor <= 0.0 {
            return Err(Error::InvalidKinematics(format!(
                "charge factor {charge_factor} must be positive"
            )));
        }
        Ok(Self {
            mass,
            energy,
            charge_factor,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn charge_factor(&self) -> f64 {
        self.charge_factor
    }
}

impl Default for Kinematics {
    fn default() -> Self {
        Self {
            mass: 1.0,
            energy: 2.0,
            charge_factor: 1.0,
        }
    }
}

/// Scattering angle restricted to the open interval `(0, pi)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Angle(f64);

impl Angle {
    pub fn new(theta: f64) -> Result<Self> {
        if theta.is_finite() && theta > 0.0 && theta < PI {
            Ok(Self(theta))
        } else {
            Err(Error::AngleOutOfRange(theta))
        }
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// `pi - theta`, the direction of the partner particle.
    pub fn supplement(self) -> Self {
        Self(PI - self.0)
    }
}

/// Raw (unnormalized) amplitudes for the direct and exchange channels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmplitudePair {
    pub direct: Complex64,
    pub exchange: Complex64,
}

impl AmplitudePair {
    pub fn new(direct: Complex64, exchange: Complex64) -> Self {
        Self { direct, exchange }
    }

    pub fn real(direct: f64, exchange: f64) -> Self {
        Self::new(Complex64::new(direct, 0.0), Complex64::new(exchange, 0.0))
    }

    pub fn swapped(self) -> Self {
        Self {
            direct: self.exchange,
            exchange: self.direct,
        }
    }
}

/// Amplitudes rescaled so that `|f_plus|^2 + |f_minus|^2 = 1`, with the
/// global phase fixed so `f_plus` is real and non-negative (or `f_minus`
/// when `f_plus` vanishes).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizedAmplitudePair {
    f_plus: Complex64,
    f_minus: Complex64,
}

impl NormalizedAmplitudePair {
    /// Builds a pair from real components, checking the normalization.
    pub fn from_real(f_plus: f64, f_minus: f64) -> Result<Self> {
        let norm_sq = f_plus * f_plus + f_minus * f_minus;
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sq));
        }
        normalize(AmplitudePair::real(f_plus, f_minus))
    }

    pub fn f_plus(&self) -> Complex64 {
        self.f_plus
    }

    pub fn f_minus(&self) -> Complex64 {
        self.f_minus
    }

    /// Phase of `f_minus` relative to `f_plus`, in `(-pi, pi]`. Zero when
    /// either component vanishes.
    pub fn relative_phase(&self) -> f64 {
        if self.f_plus.norm() == 0.0 || self.f_minus.norm() == 0.0 {
            0.0
        } else {
            (self.f_minus * self.f_plus.conj()).arg()
        }
    }

    /// Real parts `(f_plus, f_minus)` when the relative phase is zero or pi.
    pub fn as_real(&self) -> Result<(f64, f64)> {
        let phase = self.relative_phase();
        if phase.abs() > 1e-12 && (PI - phase.abs()) > 1e-12 {
            return Err(Error::ComplexRelativePhase(phase));
        }
        let sign = if phase.abs() > PI / 2.0 { -1.0 } else { 1.0 };
        Ok((self.f_plus.norm(), sign * self.f_minus.norm()))
    }
}

/// Maps a scattering angle to the channel amplitudes of a spin-independent
/// interaction.
///
/// Implementations should satisfy exchange consistency: the provider at
/// `pi - theta` returns the component-swapped pair of the provider at `theta`.
/// [`exchange_mismatch`] measures the violation.
pub trait AmplitudeProvider {
    fn amplitudes(&self, theta: Angle) -> AmplitudePair;
}

impl<F> AmplitudeProvider for F
where
    F: Fn(Angle) -> AmplitudePair,
{
    fn amplitudes(&self, theta: Angle) -> AmplitudePair {
        self(theta)
    }
}

/// Largest componentwise deviation from exchange consistency at `theta`.
pub fn exchange_mismatch<P: AmplitudeProvider + ?Sized>(provider: &P, theta: Angle) -> f64 {
    let here = provider.amplitudes(theta);
    let there = provider.amplitudes(theta.supplement());
    (there.direct - here.exchange)
        .norm()
        .max((there.exchange - here.direct).norm())
}

/// Lowest-order Coulomb scattering.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Coulomb {
    pub kinematics: Kinematics,
}

impl Coulomb {
    pub fn new(kinematics: Kinematics) -> Self {
        Self { kinematics }
    }
}

impl AmplitudeProvider for Coulomb {
    fn amplitudes(&self, theta: Angle) -> AmplitudePair {
        coulomb_amplitudes(theta, &self.kinematics)
    }
}

/// Angle-independent amplitudes. Only exchange consistent when both
/// components are equal; it exists to exercise the solver's no-crossing paths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantAmplitudes {
    pub f_plus: f64,
    pub f_minus: f64,
}

impl ConstantAmplitudes {
    /// `f_minus = sqrt(1 - f_plus^2)`.
    pub fn from_f_plus(f_plus: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&f_plus) {
            return Err(Error::InvalidConfig(format!(
                "constant f_plus {f_plus} must lie in [0, 1]"
            )));
        }
        Ok(Self {
            f_plus,
            f_minus: (1.0 - f_plus * f_plus).max(0.0).sqrt(),
        })
    }
}

impl AmplitudeProvider for ConstantAmplitudes {
    fn amplitudes(&self, _theta: Angle) -> AmplitudePair {
        AmplitudePair::real(self.f_plus, self.f_minus)
    }
}

fn mass_shell(kin: &Kinematics) -> f64 {
    (kin.mass - kin.energy) * (kin.mass + kin.energy)
}

/// `t = 2 (m^2 - E^2)(1 - cos theta)`.
pub fn mandelstam_t(theta: Angle, kin: &Kinematics) -> f64 {
    // 1 - cos = 2 sin^2(theta/2) keeps t nonzero near the forward direction
    let s = (0.5 * theta.radians()).sin();
    4.0 * mass_shell(kin) * s * s
}

/// `u = 2 (m^2 - E^2)(1 + cos theta)`.
pub fn mandelstam_u(theta: Angle, kin: &Kinematics) -> f64 {
    let c = (0.5 * theta.radians()).cos();
    4.0 * mass_shell(kin) * c * c
}

/// Direct amplitude `N/t`, exchange amplitude `N/u`.
pub fn coulomb_amplitudes(theta: Angle, kin: &Kinematics) -> AmplitudePair {
    let n = kin.charge_factor;
    AmplitudePair::real(n / mandelstam_t(theta, kin), n / mandelstam_u(theta, kin))
}

pub fn normalize(pair: AmplitudePair) -> Result<NormalizedAmplitudePair> {
    let norm = (pair.direct.norm_sqr() + pair.exchange.norm_sqr()).sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::DegenerateAmplitudes);
    }
    let (a, b) = (pair.direct / norm, pair.exchange / norm);

    if a.norm() > 0.0 {
        let phase = a.conj() / a.norm();
        Ok(NormalizedAmplitudePair {
            f_plus: Complex64::new(a.norm(), 0.0),
            f_minus: b * phase,
        })
    } else {
        Ok(NormalizedAmplitudePair {
            f_plus: Complex64::new(0.0, 0.0),
            f_minus: Complex64::new(b.norm(), 0.0),
        })
    }
}

/// Closed-form normalized Coulomb amplitudes,
/// `f_pm = (1 +- cos theta) / sqrt(2 (1 + cos^2 theta))`.
pub fn coulomb_f_pm(theta: Angle) -> (f64, f64) {
    let c = theta.radians().cos();
    let denom = (2.0 * (1.0 + c * c)).sqrt();
    ((1.0 + c) / denom, (1.0 - c) / denom)
}

/// [`coulomb_f_pm`] packaged as a normalized pair.
pub fn coulomb_normalized(theta: Angle) -> NormalizedAmplitudePair {
    let (f_plus, f_minus) = coulomb_f_pm(theta);
    NormalizedAmplitudePair {
        f_plus: Complex64::new(f_plus, 0.0),
        f_minus: Complex64::new(f_minus, 0.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3};

    fn angle(theta: f64) -> Angle {
        Angle::new(theta).unwrap()
    }

    #[test]
    fn angle_rejects_endpoints() {
        assert!(Angle::new(0.0).is_err());
        assert!(Angle::new(PI).is_err());
        assert!(Angle::new(-0.1).is_err());
        assert!(Angle::new(f64::NAN).is_err());
        assert!(Angle::new(1e-9).is_ok());
    }

    #[test]
    fn kinematics_validation() {
        assert!(Kinematics::new(1.0, 1.0).is_err());
        assert!(Kinematics::new(2.0, 1.0).is_err());
        assert!(Kinematics::new(-1.0, 1.0).is_err());
        assert!(Kinematics::with_charge_factor(1.0, 2.0, 0.0).is_err());
        assert!(Kinematics::with_charge_factor(1.0, 2.0, -3.0).is_err());
        assert!(Kinematics::new(0.0, 1.0).is_ok());
    }

    #[test]
    fn mandelstam_values() {
        let kin = Kinematics::new(1.0, 2.0).unwrap();
        assert_abs_diff_eq!(mandelstam_t(angle(FRAC_PI_2), &kin), -6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(mandelstam_u(angle(FRAC_PI_2), &kin), -6.0, epsilon = 1e-12);

        let massless = Kinematics::new(0.0, 1.0).unwrap();
        assert_abs_diff_eq!(
            mandelstam_t(angle(FRAC_PI_2), &massless),
            -2.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            mandelstam_u(angle(FRAC_PI_3), &massless),
            -3.0,
            epsilon = 1e-12
        );

        let small = mandelstam_t(angle(1e-8), &kin);
        assert!(small < 0.0 && small > -1e-14);
    }

    #[test]
    fn mandelstam_sum_and_supplement() {
        let kin = Kinematics::new(0.3, 1.7).unwrap();
        for i in 1..100 {
            let th = angle(PI * i as f64 / 100.0);
            let t = mandelstam_t(th, &kin);
            let u = mandelstam_u(th, &kin);
            assert!(t < 0.0 && u < 0.0);
            assert_abs_diff_eq!(t + u, 4.0 * (0.09 - 1.7 * 1.7), epsilon = 1e-12);
            assert_abs_diff_eq!(u, mandelstam_t(th.supplement(), &kin), epsilon = 1e-12);
        }
    }

    #[test]
    fn coulomb_examples() {
        let kin = Kinematics::new(0.0, 1.0).unwrap();
        let p = coulomb_amplitudes(angle(FRAC_PI_2), &kin);
        assert_abs_diff_eq!(p.direct.re, -0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(p.exchange.re, -0.5, epsilon = 1e-12);

        let p = coulomb_amplitudes(angle(FRAC_PI_3), &kin);
        assert_abs_diff_eq!(p.direct.re, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.exchange.re, -1.0 / 3.0, epsilon = 1e-12);
        assert_eq!(p.direct.im, 0.0);
    }

    #[test]
    fn coulomb_is_exchange_consistent() {
        let provider = Coulomb::new(Kinematics::with_charge_factor(0.5, 3.0, 7.0).unwrap());
        for i in 1..200 {
            let th = angle(PI * i as f64 / 200.0);
            // relative to the larger channel, which diverges at the endpoints
            let pair = provider.amplitudes(th);
            let scale = pair.direct.norm().max(pair.exchange.norm()).max(1.0);
            assert!(exchange_mismatch(&provider, th) <= 1e-12 * scale);
        }
    }

    #[test]
    fn normalize_examples() {
        let n = normalize(AmplitudePair::real(-0.5, -0.5)).unwrap();
        assert_abs_diff_eq!(n.f_plus().re, FRAC_1_SQRT_2, epsilon = 1e-12);
        assert_abs_diff_eq!(n.f_minus().re, FRAC_1_SQRT_2, epsilon = 1e-12);

        let n = normalize(AmplitudePair::real(-1.0, -1.0 / 3.0)).unwrap();
        assert_abs_diff_eq!(n.f_plus().re, 3.0 / 10f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(n.f_minus().re, 1.0 / 10f64.sqrt(), epsilon = 1e-12);

        let n = normalize(AmplitudePair::real(0.0, 5.0)).unwrap();
        assert_eq!(n.f_plus(), Complex64::new(0.0, 0.0));
        assert_abs_diff_eq!(n.f_minus().re, 1.0, epsilon = 1e-12);

        let n = normalize(AmplitudePair::real(0.0, -5.0)).unwrap();
        assert_abs_diff_eq!(n.f_minus().re, 1.0, epsilon = 1e-12);
        assert_eq!(n.f_minus().im, 0.0);

        assert_eq!(
            normalize(AmplitudePair::real(0.0, 0.0)),
            Err(Error::DegenerateAmplitudes)
        );
    }

    #[test]
    fn normalize_preserves_relative_phase() {
        let a = Complex64::from_polar(2.0, 0.7);
        let b = Complex64::from_polar(1.0, -0.4);
        let n = normalize(AmplitudePair::new(a, b)).unwrap();
        assert_eq!(n.f_plus().im, 0.0);
        assert_abs_diff_eq!(n.relative_phase(), -1.1, epsilon = 1e-12);
        assert!(n.as_real().is_err());
    }

    #[test]
    fn f_pm_examples() {
        let (p, m) = coulomb_f_pm(angle(FRAC_PI_2));
        assert_abs_diff_eq!(p, FRAC_1_SQRT_2, epsilon = 1e-12);
        assert_abs_diff_eq!(m, FRAC_1_SQRT_2, epsilon = 1e-12);

        let (p, m) = coulomb_f_pm(angle(FRAC_PI_3));
        assert_abs_diff_eq!(p, 0.9f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(m, 0.1f64.sqrt(), epsilon = 1e-12);

        let (p, m) = coulomb_f_pm(angle(1e-7));
        assert_abs_diff_eq!(p, 1.0, epsilon = 1e-12);
        assert!(m < 1e-13);
    }

    #[test]
    fn f_pm_monotone_on_first_quadrant() {
        let n = 2000;
        let mut prev = coulomb_f_pm(angle(FRAC_PI_2 / n as f64));
        for i in 2..=n {
            let cur = coulomb_f_pm(angle(FRAC_PI_2 * i as f64 / n as f64));
            assert!(cur.0 < prev.0, "f_plus not decreasing at step {i}");
            assert!(cur.1 > prev.1, "f_minus not increasing at step {i}");
            prev = cur;
        }
    }

    #[test]
    fn constant_provider() {
        let c = ConstantAmplitudes::from_f_plus(1.0).unwrap();
        assert_eq!(c.f_minus, 0.0);
        assert!(ConstantAmplitudes::from_f_plus(1.2).is_err());
        let c = ConstantAmplitudes::from_f_plus(FRAC_1_SQRT_2).unwrap();
        assert!(exchange_mismatch(&c, angle(0.3)) < 1e-15);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn normalized_has_unit_norm(
                ar in -1e3f64..1e3, ai in -1e3f64..1e3,
                br in -1e3f64..1e3, bi in -1e3f64..1e3,
            ) {
                prop_assume!(ar.abs() + ai.abs() + br.abs() + bi.abs() > 1e-9);
                let n = normalize(AmplitudePair::new(
                    Complex64::new(ar, ai),
                    Complex64::new(br, bi),
                )).unwrap();
                let norm_sq = n.f_plus().norm_sqr() + n.f_minus().norm_sqr();
                prop_assert!((norm_sq - 1.0).abs() < 1e-12);
                prop_assert!(n.f_plus().re >= 0.0);
                prop_assert_eq!(n.f_plus().im, 0.0);
            }

            #[test]
            fn kinematics_cancel(
                m in 0.0f64..10.0, gap in 1e-3f64..50.0, charge in 1e-3f64..1e3,
                theta in 1e-4f64..(PI - 1e-4),
            ) {
                let kin = Kinematics::with_charge_factor(m, m + gap, charge).unwrap();
                let th = Angle::new(theta).unwrap();
                let n = normalize(coulomb_amplitudes(th, &kin)).unwrap();
                let (p, q) = coulomb_f_pm(th);
                prop_assert!((n.f_plus().re - p).abs() < 1e-12);
                prop_assert!((n.f_minus().re - q).abs() < 1e-12);
                prop_assert!(n.f_minus().im.abs() < 1e-12);
            }
        }
    }
}
