//! Transition and field specifications and the operators built from them.
//!
//! Basis ordering: ground sublevels `m_g = -F_g..=F_g` occupy indices
//! `0..n_g`, excited sublevels `m_e = -F_e..=F_e` follow. All rates are in
//! units of the natural width Γ.

use log::warn;
use serde::{Deserialize, Serialize};

use crate::angular::{cartesian_to_spherical, clebsch_gordan, HalfInt, SphericalVector};
use crate::error::{Error, Result};
use crate::matrix::{dagger, zeros, CMatrix, ONE, ZERO};
use num_complex::Complex64 as C64;

/// How a Rabi frequency is converted into a coupling matrix element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RabiNormalization {
    /// `Ω = 2E⟨g‖D‖e⟩`: matrix elements of the coupling are
    /// `(Ω/2)·⟨g m|Q|e m'⟩/√(2F_e+1)`, i.e. the reduced matrix element of the dipole.
    #[default]
    ReducedMatrixElement,
    /// `Ω` is the two-level Rabi frequency of the stretched transition, so
    /// `F_g=0 → F_e=1` under circular driving has coupling exactly `Ω/2`.
    StretchedState,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionSpec {
    pub fg: HalfInt,
    pub fe: HalfInt,
    /// Fraction of excited-state decay that returns to the ground level.
    pub branching: f64,
    /// Transit (relaxation) rate γ.
    pub gamma: f64,
    pub beta_g: f64,
    pub beta_e: f64,
    pub rabi_normalization: RabiNormalization,
}

impl TransitionSpec {
    /// Closed transition with γ = 10⁻³ and unit gyromagnetic factors.
    pub fn new(fg: f64, fe: f64) -> Result<Self> {
        let spec = TransitionSpec {
            fg: HalfInt::from_f64(fg)?,
            fe: HalfInt::from_f64(fe)?,
            branching: 1.0,
            gamma: 1e-3,
            beta_g: 1.0,
            beta_e: 1.0,
            rabi_normalization: RabiNormalization::default(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_branching(mut self, b: f64) -> Self {
        self.branching = b;
        self
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self
    }

    /// Sets β_g and β_e together.
    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta_g = beta;
        self.beta_e = beta;
        self
    }

    pub fn with_betas(mut self, beta_g: f64, beta_e: f64) -> Self {
        self.beta_g = beta_g;
        self.beta_e = beta_e;
        self
    }

    pub fn with_rabi_normalization(mut self, n: RabiNormalization) -> Self {
        self.rabi_normalization = n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.fg.twice() < 0 || self.fe.twice() < 0 {
            return Err(Error::InvalidInput(
                "angular momenta must be non-negative".into(),
            ));
        }
        if (self.fg.twice() - self.fe.twice()).rem_euclid(2) != 0 {
            return Err(Error::InvalidInput(format!(
                "F_g = {} and F_e = {} differ by a half-integer",
                self.fg, self.fe
            )));
        }
        if (self.fg.twice() - self.fe.twice()).abs() > 2 {
            return Err(Error::InvalidInput(format!(
                "transition {} -> {} is not dipole allowed",
                self.fg, self.fe
            )));
        }
        if self.fg.twice() == 0 && self.fe.twice() == 0 {
            return Err(Error::InvalidInput(
                "0 -> 0 transition is dipole forbidden".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.branching) {
            return Err(Error::InvalidInput(format!(
                "branching ratio {} outside [0, 1]",
                self.branching
            )));
        }
        if !(self.gamma > 0.0) || !self.gamma.is_finite() {
            return Err(Error::InvalidInput(format!(
                "transit rate must be positive, got {}",
                self.gamma
            )));
        }
        if !self.beta_g.is_finite() || !self.beta_e.is_finite() {
            return Err(Error::InvalidInput(
                "gyromagnetic factors must be finite".into(),
            ));
        }
        if self.gamma > 0.1 {
            warn!(
                "transit rate {} is not small compared with the natural width",
                self.gamma
            );
        }
        Ok(())
    }

    pub fn n_ground(&self) -> usize {
        self.fg.multiplicity()
    }

    pub fn n_excited(&self) -> usize {
        self.fe.multiplicity()
    }

    pub fn dim(&self) -> usize {
        self.n_ground() + self.n_excited()
    }

    /// Factor converting `Ω/2 · (ê·Q)` into the coupling matrix.
    pub fn coupling_scale(&self) -> f64 {
        match self.rabi_normalization {
            RabiNormalization::ReducedMatrixElement => 1.0 / (self.fe.multiplicity() as f64).sqrt(),
            RabiNormalization::StretchedState => 1.0,
        }
    }

    /// Ground-state Zeeman shift per unit projection, `β_g B`.
    pub fn ground_splitting(&self, b_field: f64) -> f64 {
        self.beta_g * b_field
    }
}

/// A monochromatic field: Rabi frequency, polarization and (pump only) detuning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSpec {
    pub rabi: f64,
    pub polarization: SphericalVector,
    pub detuning: f64,
}

impl FieldSpec {
    pub fn new(rabi: f64, polarization: SphericalVector) -> Self {
        FieldSpec {
            rabi,
            polarization,
            detuning: 0.0,
        }
    }

    pub fn with_detuning(mut self, detuning: f64) -> Self {
        self.detuning = detuning;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rabi >= 0.0) || !self.rabi.is_finite() {
            return Err(Error::InvalidInput(format!(
                "Rabi frequency must be finite and non-negative, got {}",
                self.rabi
            )));
        }
        if !self.polarization.is_normalized() {
            return Err(Error::InvalidInput(format!(
                "polarization is not normalized (|e|^2 = {})",
                self.polarization.norm_sqr()
            )));
        }
        if !self.detuning.is_finite() {
            return Err(Error::InvalidInput("detuning must be finite".into()));
        }
        Ok(())
    }
}

/// Named polarization presets with ẑ along the magnetic field.
pub mod polarization {
    use super::*;

    pub fn lin_x() -> SphericalVector {
        cartesian_to_spherical(ONE, ZERO, ZERO)
    }

    pub fn lin_y() -> SphericalVector {
        cartesian_to_spherical(ZERO, ONE, ZERO)
    }

    /// Linear polarization along the field axis.
    pub fn pi() -> SphericalVector {
        SphericalVector::new(ZERO, ONE, ZERO)
    }

    /// Drives `m → m + 1` on absorption.
    pub fn sigma_plus() -> SphericalVector {
        SphericalVector::new(ZERO, ZERO, ONE)
    }

    /// Drives `m → m - 1` on absorption.
    pub fn sigma_minus() -> SphericalVector {
        SphericalVector::new(ONE, ZERO, ZERO)
    }

    /// Linear polarization in the xy plane at angle `theta` from x.
    pub fn linear(theta: f64) -> SphericalVector {
        cartesian_to_spherical(C64::new(theta.cos(), 0.0), C64::new(theta.sin(), 0.0), ZERO)
    }

    /// Looks up a preset by name: `lin_x`, `lin_y`, `pi`, `sigma+`, `sigma-`
    /// (also `x`, `y`, `z`, `sigma_plus`, `sigma_minus`).
    pub fn preset(name: &str) -> Option<SphericalVector> {
        match name.trim().to_ascii_lowercase().as_str() {
            "lin_x" | "x" => Some(lin_x()),
            "lin_y" | "y" => Some(lin_y()),
            "pi" | "z" | "lin_z" => Some(pi()),
            "sigma+" | "sigma_plus" | "s+" => Some(sigma_plus()),
            "sigma-" | "sigma_minus" | "s-" => Some(sigma_minus()),
            _ => None,
        }
    }
}

fn ground_index(spec: &TransitionSpec, m: HalfInt) -> usize {
    ((m.twice() + spec.fg.twice()) / 2) as usize
}

fn excited_index(spec: &TransitionSpec, m: HalfInt) -> usize {
    spec.n_ground() + ((m.twice() + spec.fe.twice()) / 2) as usize
}

/// Spherical components `Q_q`, `q = -1, 0, +1`, of the dimensionless lowering
/// dipole operator. Each is nonzero only on the `⟨g|·|e⟩` block with
/// `m_g = m_e + q`, and `Σ_q Q_q† Q_q = P_e`.
pub fn build_q_operators(spec: &TransitionSpec) -> Result<[CMatrix; 3]> {
    spec.validate()?;
    let n = spec.dim();
    let norm = ((spec.fe.multiplicity() as f64) / (spec.fg.multiplicity() as f64)).sqrt();
    let mut out = [zeros(n), zeros(n), zeros(n)];
    for (slot, q) in (-1..=1).enumerate() {
        let hq = HalfInt::from_int(q);
        for me in spec.fe.projections() {
            let mg = me + hq;
            if mg.twice().abs() > spec.fg.twice() {
                continue;
            }
            let cg = clebsch_gordan(spec.fe, me, HalfInt::ONE, hq, spec.fg, mg)?;
            if cg != 0.0 {
                out[slot][[ground_index(spec, mg), excited_index(spec, me)]] =
                    C64::new(norm * cg, 0.0);
            }
        }
    }
    Ok(out)
}

/// Cartesian components `(Q^x, Q^y, Q^z)` of the lowering operator.
pub fn cartesian_q(q: &[CMatrix; 3]) -> [CMatrix; 3] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let i = C64::i();
    [
        (&q[0] - &q[2]).mapv(|z| z * s),
        (&q[0] + &q[2]).mapv(|z| z * i * s),
        q[1].clone(),
    ]
}

/// Raising operator `Σ_i e_i (Q^i)†` for polarization `e`.
///
/// In spherical components this is `Σ_q (-1)^q e_q Q_{-q}†`, so `σ⁺`
/// (`e_{+1}`) couples `m_g` to `m_e = m_g + 1`.
pub fn raising_contraction(q: &[CMatrix; 3], pol: &SphericalVector) -> CMatrix {
    let mut lowering = zeros(q[0].nrows());
    for (slot, qq) in (-1..=1).enumerate() {
        let sign = if qq == 0 { 1.0 } else { -1.0 };
        // Σ_q (-1)^q e_q* Q_{-q}, then take the adjoint.
        let coeff = pol.component(-qq).conj() * sign;
        if coeff != ZERO {
            lowering.scaled_add(coeff, &q[slot]);
        }
    }
    dagger(&lowering)
}

/// Rotating-frame free Hamiltonian `-Δ P_e + B(β_g P_g + β_e P_e) F_z`.
pub fn build_free_hamiltonian(spec: &TransitionSpec, detuning: f64, b_field: f64) -> CMatrix {
    let n = spec.dim();
    let mut h = zeros(n);
    for m in spec.fg.projections() {
        let k = ground_index(spec, m);
        h[[k, k]] = C64::new(b_field * spec.beta_g * m.value(), 0.0);
    }
    for m in spec.fe.projections() {
        let k = excited_index(spec, m);
        h[[k, k]] = C64::new(-detuning + b_field * spec.beta_e * m.value(), 0.0);
    }
    h
}

/// Returns `(H_rot, V1)` for the given pump and field strength.
pub fn build_hamiltonian(
    spec: &TransitionSpec,
    pump: &FieldSpec,
    b_field: f64,
) -> Result<(CMatrix, CMatrix)> {
    pump.validate()?;
    let q = build_q_operators(spec)?;
    let h = build_free_hamiltonian(spec, pump.detuning, b_field);
    let a = raising_contraction(&q, &pump.polarization);
    let v1 = (&a + &dagger(&a)).mapv(|z| z * (0.5 * pump.rabi * spec.coupling_scale()));
    Ok((h, v1))
}

/// Probe coupling `W2 = Ω₂ s (ê₂·Q)†`, lowering block only.
pub fn build_probe_coupling(spec: &TransitionSpec, probe: &FieldSpec) -> Result<CMatrix> {
    probe.validate()?;
    let q = build_q_operators(spec)?;
    let a = raising_contraction(&q, &probe.polarization);
    Ok(dagger(&a).mapv(|z| z * (probe.rabi * spec.coupling_scale())))
}

/// Every operator needed by the solvers, built once per parameter point.
#[derive(Debug, Clone)]
pub struct OperatorSet {
    pub transition: TransitionSpec,
    pub pump: FieldSpec,
    pub probe: FieldSpec,
    pub b_field: f64,
    pub dim: usize,
    pub pg: CMatrix,
    pub pe: CMatrix,
    /// `F_z` on the full space (ground and excited projections).
    pub fz: CMatrix,
    /// Spherical lowering components, index `q + 1`.
    pub q: [CMatrix; 3],
    /// Cartesian lowering components `x, y, z`.
    pub q_cart: [CMatrix; 3],
    pub h_rot: CMatrix,
    pub v1: CMatrix,
    pub w2: CMatrix,
    /// Raising contraction of the probe polarization, `W2 = Ω₂ s A2†`.
    pub probe_raising: CMatrix,
}

impl OperatorSet {
    pub fn new(
        transition: &TransitionSpec,
        pump: &FieldSpec,
        probe: &FieldSpec,
        b_field: f64,
    ) -> Result<Self> {
        transition.validate()?;
        pump.validate()?;
        probe.validate()?;
        if !b_field.is_finite() {
            return Err(Error::InvalidInput("magnetic field must be finite".into()));
        }
        let n = transition.dim();
        let ng = transition.n_ground();
        let mut pg = zeros(n);
        let mut pe = zeros(n);
        for k in 0..n {
            if k < ng {
                pg[[k, k]] = ONE;
            } else {
                pe[[k, k]] = ONE;
            }
        }
        let mut fz = zeros(n);
        for m in transition.fg.projections() {
            let k = ground_index(transition, m);
            fz[[k, k]] = C64::new(m.value(), 0.0);
        }
        for m in transition.fe.projections() {
            let k = excited_index(transition, m);
            fz[[k, k]] = C64::new(m.value(), 0.0);
        }
        let q = build_q_operators(transition)?;
        let q_cart = cartesian_q(&q);
        let (h_rot, v1) = build_hamiltonian(transition, pump, b_field)?;
        let w2 = build_probe_coupling(transition, probe)?;
        let probe_raising = raising_contraction(&q, &probe.polarization);
        Ok(OperatorSet {
            transition: *transition,
            pump: *pump,
            probe: *probe,
            b_field,
            dim: n,
            pg,
            pe,
            fz,
            q,
            q_cart,
            h_rot,
            v1,
            w2,
            probe_raising,
        })
    }

    pub fn n_ground(&self) -> usize {
        self.transition.n_ground()
    }

    /// Ground-level equilibrium `P_g / (2F_g + 1)`.
    pub fn rho0(&self) -> CMatrix {
        self.pg.mapv(|z| z / self.n_ground() as f64)
    }

    /// Raising contraction `Σ_i e_i (Q^i)†` for an arbitrary polarization.
    pub fn raising(&self, pol: &SphericalVector) -> CMatrix {
        raising_contraction(&self.q, pol)
    }

    /// Ground-level `(F_x, F_y, F_z)` as `n_g × n_g` matrices.
    pub fn ground_angular_momentum(&self) -> [CMatrix; 3] {
        angular_momentum_matrices(self.transition.fg)
    }
}

/// `(F_x, F_y, F_z)` for angular momentum `f` in the basis `m = -f..=f`.
pub fn angular_momentum_matrices(f: HalfInt) -> [CMatrix; 3] {
    let n = f.multiplicity();
    let fv = f.value();
    let mut fp = zeros(n);
    let mut fzm = zeros(n);
    for (k, m) in f.projections().enumerate() {
        let mv = m.value();
        fzm[[k, k]] = C64::new(mv, 0.0);
        if k + 1 < n {
            fp[[k + 1, k]] = C64::new((fv * (fv + 1.0) - mv * (mv + 1.0)).sqrt(), 0.0);
        }
    }
    let fm = dagger(&fp);
    let fx = (&fp + &fm).mapv(|z| z * 0.5);
    let fy = (&fp - &fm).mapv(|z| z * C64::new(0.0, -0.5));
    [fx, fy, fzm]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{commutator, hermiticity_defect, identity, max_abs};

    fn ops(fg: f64, fe: f64, pump: SphericalVector, probe: SphericalVector, b: f64) -> OperatorSet {
        let t = TransitionSpec::new(fg, fe).unwrap();
        OperatorSet::new(
            &t,
            &FieldSpec::new(0.4, pump),
            &FieldSpec::new(1.0, probe),
            b,
        )
        .unwrap()
    }

    #[test]
    fn completeness_for_all_small_transitions() {
        for tfg in 0..=8 {
            for dfe in [-2, 0, 2] {
                let tfe = tfg + dfe;
                if !(0..=8).contains(&tfe) || (tfg == 0 && tfe == 0) {
                    continue;
                }
                let t = TransitionSpec::new(tfg as f64 / 2.0, tfe as f64 / 2.0).unwrap();
                let q = build_q_operators(&t).unwrap();
                let mut sum = zeros(t.dim());
                for qq in &q {
                    sum = sum + dagger(qq).dot(qq);
                }
                let mut pe = zeros(t.dim());
                for k in t.n_ground()..t.dim() {
                    pe[[k, k]] = ONE;
                }
                assert!(max_abs(&(sum - pe)) < 1e-12, "{tfg}/2 -> {tfe}/2");
            }
        }
    }

    #[test]
    fn selection_rule_pattern() {
        let t = TransitionSpec::new(2.0, 3.0).unwrap();
        let q = build_q_operators(&t).unwrap();
        let m: Vec<f64> =
            t.fg.projections()
                .chain(t.fe.projections())
                .map(|m| m.value())
                .collect();
        for (slot, qq) in q.iter().enumerate() {
            let qv = slot as f64 - 1.0;
            for ((i, j), z) in qq.indexed_iter() {
                if z.norm() > 0.0 {
                    assert!(i < t.n_ground() && j >= t.n_ground());
                    assert!((m[i] - m[j] - qv).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn zero_to_one_has_unit_elements() {
        let t = TransitionSpec::new(0.0, 1.0).unwrap();
        for qq in build_q_operators(&t).unwrap() {
            let nz: Vec<_> = qq.iter().filter(|z| z.norm() > 1e-14).collect();
            assert_eq!(nz.len(), 1);
            assert!((nz[0].norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn stretched_normalization_gives_half_rabi() {
        let t = TransitionSpec::new(0.0, 1.0)
            .unwrap()
            .with_rabi_normalization(RabiNormalization::StretchedState);
        let pump = FieldSpec::new(0.7, polarization::sigma_plus());
        let (_, v1) = build_hamiltonian(&t, &pump, 0.0).unwrap();
        let nz: Vec<_> = v1
            .indexed_iter()
            .filter(|(_, z)| z.norm() > 1e-14)
            .collect();
        assert_eq!(nz.len(), 2);
        for (_, z) in nz {
            assert!((z.norm() - 0.35).abs() < 1e-14);
        }
        // σ⁺ couples the single ground state to m_e = +1 (index 3).
        assert!(v1[[0, 3]].norm() > 0.0);
    }

    #[test]
    fn reduced_normalization_scales_by_multiplicity() {
        let t = TransitionSpec::new(0.0, 1.0).unwrap();
        let pump = FieldSpec::new(0.7, polarization::sigma_plus());
        let (_, v1) = build_hamiltonian(&t, &pump, 0.0).unwrap();
        assert!((v1[[0, 3]].norm() - 0.35 / 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn sigma_minus_lowers_projection() {
        let o = ops(
            1.0,
            2.0,
            polarization::sigma_minus(),
            polarization::sigma_minus(),
            0.0,
        );
        let a = o.raising(&polarization::sigma_minus());
        for ((i, j), z) in a.indexed_iter() {
            if z.norm() > 0.0 {
                let me = o.fz[[i, i]].re;
                let mg = o.fz[[j, j]].re;
                assert!((me - mg + 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn free_hamiltonian_zero_without_field_or_detuning() {
        let t = TransitionSpec::new(1.0, 2.0).unwrap();
        assert!(max_abs(&build_free_hamiltonian(&t, 0.0, 0.0)) == 0.0);
    }

    #[test]
    fn zeeman_diagonal_on_ground_block() {
        let t = TransitionSpec::new(1.0, 2.0).unwrap();
        let h = build_free_hamiltonian(&t, 0.0, 0.01);
        let d: Vec<f64> = (0..3).map(|k| h[[k, k]].re).collect();
        assert!((d[0] + 0.01).abs() < 1e-15 && d[1].abs() < 1e-15 && (d[2] - 0.01).abs() < 1e-15);
    }

    #[test]
    fn hermiticity_and_projector_invariants() {
        let o = ops(1.5, 2.5, polarization::lin_x(), polarization::lin_y(), 0.03);
        assert!(hermiticity_defect(&o.h_rot) < 1e-14);
        assert!(hermiticity_defect(&o.v1) < 1e-14);
        assert!(max_abs(&(&o.pg + &o.pe - identity(o.dim))) == 0.0);
        assert!(max_abs(&(o.w2.dot(&o.pe) - &o.w2)) < 1e-15);
        assert!(max_abs(&(o.pg.dot(&o.w2) - &o.w2)) < 1e-15);
    }

    #[test]
    fn probe_equal_to_pump_gives_twice_v1() {
        let t = TransitionSpec::new(1.0, 2.0).unwrap();
        let f = FieldSpec::new(0.4, polarization::linear(0.3));
        let (_, v1) = build_hamiltonian(&t, &f, 0.0).unwrap();
        let w2 = build_probe_coupling(&t, &f).unwrap();
        assert!(max_abs(&(&w2 + &dagger(&w2) - v1.mapv(|z| z * 2.0))) < 1e-14);
    }

    #[test]
    fn zero_probe_rabi_gives_zero_coupling() {
        let t = TransitionSpec::new(1.0, 2.0).unwrap();
        let w2 = build_probe_coupling(&t, &FieldSpec::new(0.0, polarization::lin_x())).unwrap();
        assert_eq!(max_abs(&w2), 0.0);
    }

    #[test]
    fn orthogonal_circular_polarizations_disjoint_on_zero_to_one() {
        let t = TransitionSpec::new(0.0, 1.0).unwrap();
        let (_, v1) =
            build_hamiltonian(&t, &FieldSpec::new(1.0, polarization::sigma_plus()), 0.0).unwrap();
        let w2 =
            build_probe_coupling(&t, &FieldSpec::new(1.0, polarization::sigma_minus())).unwrap();
        for ((i, j), z) in w2.indexed_iter() {
            if z.norm() > 0.0 {
                assert_eq!(v1[[i, j]].norm(), 0.0);
            }
        }
    }

    #[test]
    fn angular_momentum_commutation() {
        for tf in 1..=6 {
            let [fx, fy, fz] = angular_momentum_matrices(HalfInt::from_twice(tf));
            let lhs = commutator(&fx, &fy);
            let rhs = fz.mapv(|z| z * C64::i());
            assert!(max_abs(&(lhs - rhs)) < 1e-13);
        }
    }

    #[test]
    fn rejects_forbidden_and_bad_inputs() {
        assert!(TransitionSpec::new(0.0, 0.0).is_err());
        assert!(TransitionSpec::new(1.0, 3.0).is_err());
        assert!(TransitionSpec::new(1.0, 1.5).is_err());
        assert!(TransitionSpec::new(1.0, 2.0)
            .unwrap()
            .with_branching(1.5)
            .validate()
            .is_err());
        assert!(TransitionSpec::new(1.0, 2.0)
            .unwrap()
            .with_gamma(0.0)
            .validate()
            .is_err());
        assert!(FieldSpec::new(-1.0, polarization::pi()).validate().is_err());
    }

    #[test]
    fn presets_are_normalized() {
        for name in ["lin_x", "lin_y", "pi", "sigma+", "sigma-"] {
            assert!(polarization::preset(name).unwrap().is_normalized());
        }
        assert!(polarization::preset("bogus").is_none());
    }
}
