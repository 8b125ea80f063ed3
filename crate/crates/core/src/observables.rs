//! Reduction of the steady state and probe sideband to measurable spectra.
//!
//! Everything is in reduced units: the dipole operator `D` is replaced by the
//! dimensionless `Q`, and the prefactors `n k₂/E₂` (absorption, dispersion),
//! `n²` (four-wave mixing), `ħω₀Γ` (fluorescence) and `n` (magnetic dipole)
//! are dropped. Spectra are meaningful relative to [`linear_absorption`]
//! computed with the same probe.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::angular::{cartesian_to_spherical, SphericalVector};
use crate::error::{Error, Result};
use crate::matrix::{trace_product, CMatrix};
use crate::probe_response::{ProbeResponse, ProbeSolver, PumpCoupling};
use crate::steady_state::DensityState;
use crate::system::{FieldSpec, OperatorSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObservableKind {
    Absorption,
    Dispersion,
    FwmPower,
    FluorescenceMod,
    MagDipoleModulus,
    LinearAbsorption,
    /// Absorption with the pump removed from the probe equation.
    IncoherentAbsorption,
}

impl ObservableKind {
    pub const ALL: [ObservableKind; 7] = [
        ObservableKind::Absorption,
        ObservableKind::Dispersion,
        ObservableKind::FwmPower,
        ObservableKind::FluorescenceMod,
        ObservableKind::MagDipoleModulus,
        ObservableKind::LinearAbsorption,
        ObservableKind::IncoherentAbsorption,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObservableKind::Absorption => "absorption",
            ObservableKind::Dispersion => "dispersion",
            ObservableKind::FwmPower => "fwm_power",
            ObservableKind::FluorescenceMod => "fluorescence_mod",
            ObservableKind::MagDipoleModulus => "mag_dipole_modulus",
            ObservableKind::LinearAbsorption => "linear_absorption",
            ObservableKind::IncoherentAbsorption => "incoherent_absorption",
        }
    }
}

impl fmt::Display for ObservableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObservableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ObservableKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown observable '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableSample {
    pub kind: ObservableKind,
    pub value: f64,
    pub delta: f64,
    pub b_field: f64,
}

/// How the induced polarization is projected onto the probe polarization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Projection {
    /// `Tr(σ⁺ Σ_i e_i Q^i_eg)`: the projection whose pump-off value is
    /// positive for every probe polarization, elliptical ones included.
    #[default]
    Conjugate,
    /// `Σ_i e_i* Tr(σ⁺ Q^i_eg)`, the component-wise form written with the
    /// opposite field phase convention. Equal to `Conjugate` for real
    /// Cartesian polarizations.
    Literal,
}

fn conjugate_polarization(e: &SphericalVector) -> SphericalVector {
    let [x, y, z] = e.to_cartesian();
    cartesian_to_spherical(x.conj(), y.conj(), z.conj())
}

fn projector(ops: &OperatorSet, e: &SphericalVector, projection: Projection) -> CMatrix {
    match projection {
        Projection::Conjugate => ops.raising(e),
        Projection::Literal => ops.raising(&conjugate_polarization(e)),
    }
}

/// `Im Tr(σ⁺ A₂)` with `A₂` the probe raising contraction.
pub fn absorption(
    pr: &ProbeResponse,
    ops: &OperatorSet,
    probe: &FieldSpec,
    projection: Projection,
) -> f64 {
    trace_product(&pr.matrix, &projector(ops, &probe.polarization, projection)).im
}

/// `-Re Tr(σ⁺ (û·Q_eg))` for a caller-supplied unit vector `û`.
///
/// The sign is chosen so that dispersion is normal (positive slope) across a
/// transparency window and anomalous across an absorption peak.
pub fn dispersion(
    pr: &ProbeResponse,
    ops: &OperatorSet,
    unit: &SphericalVector,
    projection: Projection,
) -> f64 {
    -trace_product(&pr.matrix, &projector(ops, unit, projection)).re
}

/// `Σ_i |Tr(σ⁺ Q^i_ge)|²`: power radiated at `2ω₁ - ω₂` by the eg sideband.
pub fn fwm_power(pr: &ProbeResponse, ops: &OperatorSet) -> f64 {
    ops.q_cart
        .iter()
        .map(|q| trace_product(&pr.matrix, q).norm_sqr())
        .sum()
}

/// `2b|Tr σ⁺_ee|`: amplitude of the total fluorescence modulation at δ.
pub fn fluorescence_modulation(pr: &ProbeResponse, ops: &OperatorSet) -> f64 {
    let ng = ops.n_ground();
    let tr: num_complex::Complex64 = (ng..ops.dim).map(|k| pr.matrix[[k, k]]).sum();
    2.0 * ops.transition.branching * tr.norm()
}

/// `|β_g| ‖Tr(σ⁺_gg F⃗)‖` over all three Cartesian components.
pub fn magnetic_dipole(pr: &ProbeResponse, ops: &OperatorSet) -> f64 {
    let gg = pr.sigma_gg();
    let f = ops.ground_angular_momentum();
    let s: f64 = f.iter().map(|fi| trace_product(&gg, fi).norm_sqr()).sum();
    ops.transition.beta_g.abs() * s.sqrt()
}

/// Probe absorption of the unpumped, isotropic atom.
pub struct LinearReference {
    solver: ProbeSolver,
    projection: Projection,
}

impl LinearReference {
    pub fn new(ops: &OperatorSet, projection: Projection) -> Result<Self> {
        let pump_off = FieldSpec {
            rabi: 0.0,
            ..ops.pump
        };
        let off = OperatorSet::new(&ops.transition, &pump_off, &ops.probe, ops.b_field)?;
        let rho0 = DensityState::isotropic(&off);
        Ok(LinearReference {
            solver: ProbeSolver::with_steady_state(&off, rho0, PumpCoupling::Coherent)?,
            projection,
        })
    }

    pub fn absorption(&self, delta: f64) -> Result<f64> {
        Ok(self.absorption_with_residual(delta)?.0)
    }

    pub fn absorption_with_residual(&self, delta: f64) -> Result<(f64, f64)> {
        let pr = self.solver.solve(delta)?;
        let ops = self.solver.operators();
        Ok((
            absorption(&pr, ops, &ops.probe, self.projection),
            pr.residual,
        ))
    }
}

/// Absorption with the pump switched off and σ⁰ = ρ₀.
pub fn linear_absorption(ops: &OperatorSet, delta: f64) -> Result<f64> {
    LinearReference::new(ops, Projection::Conjugate)?.absorption(delta)
}

/// Closed-form linear absorption at zero field:
/// `(Ω₂ s/2) · (2F_e+1)/(3(2F_g+1)) · w/(w² + δ²)` with `w = ½ + γ`.
pub fn linear_absorption_closed_form(ops: &OperatorSet, delta: f64) -> f64 {
    let t = &ops.transition;
    let w = 0.5 + t.gamma;
    let strength = t.fe.multiplicity() as f64 / (3.0 * t.fg.multiplicity() as f64);
    0.5 * ops.probe.rabi * t.coupling_scale() * strength * w / (w * w + delta * delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{polarization, TransitionSpec};
    use num_complex::Complex64 as C64;

    fn ops_for(fg: f64, fe: f64, pump_rabi: f64, probe: SphericalVector) -> OperatorSet {
        let t = TransitionSpec::new(fg, fe).unwrap().with_gamma(0.001);
        OperatorSet::new(
            &t,
            &FieldSpec::new(pump_rabi, polarization::lin_x()),
            &FieldSpec::new(1.0, probe),
            0.0,
        )
        .unwrap()
    }

    fn ratio_at_center(fg: f64, fe: f64) -> f64 {
        let o = ops_for(fg, fe, 0.4, polarization::lin_y());
        let pr = ProbeSolver::new(&o).unwrap().solve(0.0).unwrap();
        absorption(&pr, &o, &o.probe, Projection::Conjugate) / linear_absorption(&o, 0.0).unwrap()
    }

    #[test]
    fn linear_absorption_is_lorentzian() {
        for (fg, fe) in [(0.0, 1.0), (1.0, 2.0), (2.0, 1.0), (1.5, 1.5)] {
            let o = ops_for(fg, fe, 0.4, polarization::lin_y());
            for delta in [-2.0, -0.3, 0.0, 0.1, 0.7] {
                let a = linear_absorption(&o, delta).unwrap();
                let b = linear_absorption_closed_form(&o, delta);
                assert!(
                    (a - b).abs() < 1e-12 * b,
                    "{fg}->{fe} at {delta}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn linear_absorption_independent_of_probe_polarization() {
        let ellip =
            SphericalVector::new(C64::new(0.6, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.8));
        let ref_value =
            linear_absorption(&ops_for(1.0, 2.0, 0.4, polarization::lin_x()), 0.05).unwrap();
        for pol in [
            polarization::pi(),
            polarization::sigma_plus(),
            polarization::lin_y(),
            ellip,
        ] {
            let v = linear_absorption(&ops_for(1.0, 2.0, 0.4, pol), 0.05).unwrap();
            assert!((v - ref_value).abs() < 1e-12 * ref_value);
        }
    }

    #[test]
    fn literal_projection_differs_only_for_complex_polarization() {
        let o = ops_for(1.0, 2.0, 0.0, polarization::lin_y());
        let pr = ProbeSolver::new(&o).unwrap().solve(0.1).unwrap();
        let a = absorption(&pr, &o, &o.probe, Projection::Conjugate);
        let b = absorption(&pr, &o, &o.probe, Projection::Literal);
        assert!((a - b).abs() < 1e-14);
        let o = ops_for(1.0, 2.0, 0.0, polarization::sigma_plus());
        let pr = ProbeSolver::new(&o).unwrap().solve(0.1).unwrap();
        assert!(absorption(&pr, &o, &o.probe, Projection::Conjugate) > 0.0);
        assert!(absorption(&pr, &o, &o.probe, Projection::Literal).abs() < 1e-14);
    }

    #[test]
    fn eia_on_one_to_two() {
        assert!(ratio_at_center(1.0, 2.0) > 1.0);
    }

    #[test]
    fn eit_on_two_to_one() {
        assert!(ratio_at_center(2.0, 1.0) < 1.0);
    }

    #[test]
    fn probe_off_zeroes_nonlinear_signals() {
        let t = TransitionSpec::new(1.0, 2.0).unwrap();
        let o = OperatorSet::new(
            &t,
            &FieldSpec::new(0.4, polarization::lin_x()),
            &FieldSpec::new(0.0, polarization::lin_y()),
            0.0,
        )
        .unwrap();
        let pr = ProbeSolver::new(&o).unwrap().solve(0.0).unwrap();
        assert_eq!(fwm_power(&pr, &o), 0.0);
        assert_eq!(fluorescence_modulation(&pr, &o), 0.0);
        assert_eq!(magnetic_dipole(&pr, &o), 0.0);
    }

    #[test]
    fn magnetic_dipole_vanishes_for_zero_ground_momentum() {
        let o = ops_for(0.0, 1.0, 0.4, polarization::lin_y());
        let pr = ProbeSolver::new(&o).unwrap().solve(0.01).unwrap();
        assert_eq!(magnetic_dipole(&pr, &o), 0.0);
    }

    #[test]
    fn dispersion_vanishes_far_off_resonance() {
        let o = ops_for(1.0, 2.0, 0.4, polarization::lin_y());
        let s = ProbeSolver::new(&o).unwrap();
        let near = dispersion(
            &s.solve(0.5).unwrap(),
            &o,
            &o.probe.polarization,
            Projection::Conjugate,
        );
        let far = dispersion(
            &s.solve(500.0).unwrap(),
            &o,
            &o.probe.polarization,
            Projection::Conjugate,
        );
        assert!(far.abs() < 1e-2 * near.abs());
    }

    #[test]
    fn names_round_trip() {
        for k in ObservableKind::ALL {
            assert_eq!(k.name().parse::<ObservableKind>().unwrap(), k);
        }
        assert!("nope".parse::<ObservableKind>().is_err());
    }
}
