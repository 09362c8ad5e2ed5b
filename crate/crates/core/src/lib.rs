//! Spin entanglement generated when two identical spin-1/2 particles scatter
//! through a spin-independent interaction.
//!
//! The crate covers the whole chain from kinematics to observables:
//!
//! * [`amplitudes`]: Mandelstam variables, the lowest-order Coulomb amplitude
//!   pair, per-angle normalization and the [`AmplitudeProvider`] trait.
//! * [`spin_states`]: outgoing two-spin states, Slater decompositions and
//!   reduced density matrices.
//! * [`entanglement`]: entropy of entanglement in the symmetrized and
//!   label-fixed conventions.
//! * [`bell`]: the spin correlator, the coplanar measurement geometry,
//!   `F(theta)` and the critical-angle solver.
//! * [`scan`]: angle scans producing CSV/JSON tables (used by the CLI).

pub mod amplitudes;
pub mod bell;
pub mod entanglement;
pub mod error;
pub mod scan;
pub mod spin_states;

pub use amplitudes::{
    coulomb_amplitudes, coulomb_f_pm, mandelstam_t, mandelstam_u, normalize, AmplitudePair,
    AmplitudeProvider, Angle, ConstantAmplitudes, Coulomb, Kinematics, NormalizedAmplitudePair,
};
pub use bell::{
    bell_f, correlator_closed_form, correlator_oracle, critical_angle, is_violated, BellGeometry,
    UnitVector3,
};
pub use entanglement::{
    coulomb_entropy, entropy_of_state, eoe_label_fixed, eoe_symmetrized, SlCoefficients,
};
pub use error::{Error, Result};
pub use spin_states::{
    distinguishable_outgoing_state, outgoing_state, reduced_density_matrix, slater_decomposition,
    slater_rank, symmetrized_initial_state, DensityMatrix2, ExchangeStatistics,
    SlaterDecomposition, Slot, TwoSpinState,
};

/// Tolerance used for every normalization and unit-length invariant.
pub const NORM_TOL: f64 = 1e-12;
