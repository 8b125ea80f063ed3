//! Pump–probe spectroscopy of degenerate two-level atoms.
//!
//! A ground level `F_g` and an excited level `F_e` are driven by a strong pump
//! and probed by a weak field in a static magnetic field. The pump-dressed
//! steady state and the first-order probe response are obtained by direct
//! solution of the master equation in Liouville space, and absorption,
//! dispersion, four-wave-mixing, fluorescence-modulation and magnetic-dipole
//! spectra are extracted from them.
//!
//! All rates are in units of the natural width Γ and `ħ = 1`.

// Negated float comparisons such as `!(x <= tol)` deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod cli;
pub mod error;
pub mod liouville;
pub mod matrix;
pub mod observables;
pub mod oracles;
pub mod probe_response;
pub mod scan;
pub mod steady_state;
pub mod system;
pub mod validation;

pub use angular::{clebsch_gordan, HalfInt, SphericalVector};
pub use error::{Error, Result};
pub use observables::{ObservableKind, Projection};
pub use probe_response::{ProbeResponse, ProbeSolver};
pub use scan::{run_scan, ScanConfig, ScanVariable, SpectrumTable};
pub use steady_state::{solve_steady_state, DensityState};
pub use system::{polarization, FieldSpec, OperatorSet, RabiNormalization, TransitionSpec};
