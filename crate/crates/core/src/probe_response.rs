//! First-order response to the weak probe.
//!
//! With the probe written in the pump frame as `(W2 e^{iδt} + W2† e^{-iδt})/2`
//! and `ρ = σ⁰ + σ⁺e^{iδt} + σ⁻e^{-iδt}`, collecting the `e^{iδt}` terms of the
//! master equation gives
//!
//! ```text
//! (L - iδ) σ⁺ = i[W2/2, σ⁰]
//! ```
//!
//! where `L` is the pump superoperator without the ρ₀ feed. Written out in
//! blocks the source is `i(W2σ⁰_eg)/2` (gg), `i(W2σ⁰_ee - σ⁰_gg W2)/2` (ge) and
//! `-i(σ⁰_eg W2)/2` (ee); its eg block vanishes.

use ndarray::s;
use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::liouville::{
    lindblad_superop, lindblad_superop_without_pump, unvectorize, vectorize, LiouvilleVector,
    ShiftedSolver,
};
use crate::matrix::{commutator, CMatrix, I};
use crate::steady_state::{steady_state_with_solver, DensityState};
use crate::system::OperatorSet;

/// The `e^{iδt}` sideband σ⁺ at one probe detuning.
#[derive(Debug, Clone)]
pub struct ProbeResponse {
    /// Full non-Hermitian sideband matrix.
    pub matrix: CMatrix,
    pub delta: f64,
    pub residual: f64,
    n_ground: usize,
}

impl ProbeResponse {
    pub fn n_ground(&self) -> usize {
        self.n_ground
    }

    pub fn sigma_gg(&self) -> CMatrix {
        let g = self.n_ground;
        self.matrix.slice(s![..g, ..g]).to_owned()
    }

    pub fn sigma_ge(&self) -> CMatrix {
        let g = self.n_ground;
        self.matrix.slice(s![..g, g..]).to_owned()
    }

    pub fn sigma_eg(&self) -> CMatrix {
        let g = self.n_ground;
        self.matrix.slice(s![g.., ..g]).to_owned()
    }

    pub fn sigma_ee(&self) -> CMatrix {
        let g = self.n_ground;
        self.matrix.slice(s![g.., g..]).to_owned()
    }
}

/// Right-hand side `i[W2/2, σ⁰]`.
pub fn probe_source(ops: &OperatorSet, s0: &DensityState) -> CMatrix {
    commutator(&ops.w2, &s0.matrix).mapv(|z| z * I * 0.5)
}

/// Whether the pump coupling enters the probe superoperator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PumpCoupling {
    /// Full response including pump-probe coherences.
    Coherent,
    /// Pump removed from the probe equation; σ⁰ stays pump-dressed.
    Incoherent,
}

/// Probe solver for one parameter point: the superoperator is reduced once
/// and every δ costs one shifted solve.
#[derive(Debug, Clone)]
pub struct ProbeSolver {
    ops: OperatorSet,
    steady: DensityState,
    source: LiouvilleVector,
    solver: ShiftedSolver,
    coupling: PumpCoupling,
}

impl ProbeSolver {
    /// Computes the steady state and prepares coherent probe solves, sharing
    /// one reduction of the pump superoperator.
    pub fn new(ops: &OperatorSet) -> Result<Self> {
        let solver = ShiftedSolver::new(&lindblad_superop(ops))?;
        let steady = steady_state_with_solver(ops, &solver)?;
        Self::assemble(ops, steady, solver, PumpCoupling::Coherent)
    }

    /// Probe solver around a given steady state.
    pub fn with_steady_state(
        ops: &OperatorSet,
        steady: DensityState,
        coupling: PumpCoupling,
    ) -> Result<Self> {
        let l = match coupling {
            PumpCoupling::Coherent => lindblad_superop(ops),
            PumpCoupling::Incoherent => lindblad_superop_without_pump(ops),
        };
        let solver = ShiftedSolver::new(&l)?;
        Self::assemble(ops, steady, solver, coupling)
    }

    fn assemble(
        ops: &OperatorSet,
        steady: DensityState,
        solver: ShiftedSolver,
        coupling: PumpCoupling,
    ) -> Result<Self> {
        let source = vectorize(&probe_source(ops, &steady))?;
        Ok(ProbeSolver {
            ops: ops.clone(),
            steady,
            source,
            solver,
            coupling,
        })
    }

    pub fn operators(&self) -> &OperatorSet {
        &self.ops
    }

    pub fn steady_state(&self) -> &DensityState {
        &self.steady
    }

    pub fn coupling(&self) -> PumpCoupling {
        self.coupling
    }

    pub fn solve(&self, delta: f64) -> Result<ProbeResponse> {
        let context = format!(
            "probe response at delta {delta}, pump rabi {}, B {}",
            self.ops.pump.rabi, self.ops.b_field
        );
        let sol = self
            .solver
            .solve(C64::new(0.0, -delta), &self.source, &context)?;
        Ok(ProbeResponse {
            matrix: unvectorize(&sol.x),
            delta,
            residual: sol.residual,
            n_ground: self.ops.n_ground(),
        })
    }
}

/// Coherent probe response at one δ.
pub fn solve_probe(ops: &OperatorSet, s0: &DensityState, delta: f64) -> Result<ProbeResponse> {
    ProbeSolver::with_steady_state(ops, s0.clone(), PumpCoupling::Coherent)?.solve(delta)
}

/// Probe response with the pump coupling removed from the probe equation.
pub fn incoherent_probe(ops: &OperatorSet, s0: &DensityState, delta: f64) -> Result<ProbeResponse> {
    ProbeSolver::with_steady_state(ops, s0.clone(), PumpCoupling::Incoherent)?.solve(delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liouville::solve_linear_checked;
    use crate::matrix::{max_abs, ZERO};
    use crate::steady_state::solve_steady_state;
    use crate::system::{polarization, FieldSpec, TransitionSpec};

    fn ops(probe_rabi: f64, pump_rabi: f64) -> OperatorSet {
        let t = TransitionSpec::new(1.0, 2.0).unwrap().with_gamma(0.01);
        OperatorSet::new(
            &t,
            &FieldSpec::new(pump_rabi, polarization::lin_x()),
            &FieldSpec::new(probe_rabi, polarization::lin_y()),
            0.005,
        )
        .unwrap()
    }

    #[test]
    fn zero_probe_gives_zero_response() {
        let o = ops(0.0, 0.4);
        let r = ProbeSolver::new(&o).unwrap().solve(0.1).unwrap();
        assert_eq!(max_abs(&r.matrix), 0.0);
    }

    #[test]
    fn response_is_linear_in_probe() {
        let a = ProbeSolver::new(&ops(1.0, 0.4))
            .unwrap()
            .solve(0.02)
            .unwrap();
        let b = ProbeSolver::new(&ops(2.0, 0.4))
            .unwrap()
            .solve(0.02)
            .unwrap();
        assert!(max_abs(&(&b.matrix - &a.matrix.mapv(|z| z * 2.0))) < 1e-12 * max_abs(&b.matrix));
    }

    #[test]
    fn reused_reduction_matches_dense_solve() {
        let o = ops(1.0, 0.4);
        let s0 = solve_steady_state(&o).unwrap();
        let solver = ProbeSolver::new(&o).unwrap();
        for delta in [-0.5, -0.01, 0.0, 0.003, 1.0] {
            let fast = solver.solve(delta).unwrap();
            let mut l = lindblad_superop(&o);
            l.add_identity(C64::new(0.0, -delta));
            let rhs = vectorize(&probe_source(&o, &s0)).unwrap();
            let dense = unvectorize(&solve_linear_checked(&l, &rhs, "test").unwrap().x);
            assert!(max_abs(&(&fast.matrix - &dense)) < 1e-12 * max_abs(&dense));
        }
    }

    #[test]
    fn source_has_no_eg_block() {
        let o = ops(1.0, 0.4);
        let s0 = solve_steady_state(&o).unwrap();
        let src = probe_source(&o, &s0);
        let g = o.n_ground();
        assert!(src.slice(s![g.., ..g]).iter().all(|z| *z == ZERO));
    }

    #[test]
    fn incoherent_equals_coherent_without_pump() {
        let o = ops(1.0, 0.0);
        let s0 = solve_steady_state(&o).unwrap();
        let a = solve_probe(&o, &s0, 0.2).unwrap();
        let b = incoherent_probe(&o, &s0, 0.2).unwrap();
        assert!(max_abs(&(&a.matrix - &b.matrix)) < 1e-14);
    }

    #[test]
    fn blocks_partition_the_matrix() {
        let o = ops(1.0, 0.4);
        let r = ProbeSolver::new(&o).unwrap().solve(0.0).unwrap();
        assert_eq!(r.sigma_gg().dim(), (3, 3));
        assert_eq!(r.sigma_ge().dim(), (3, 5));
        assert_eq!(r.sigma_eg().dim(), (5, 3));
        assert_eq!(r.sigma_ee().dim(), (5, 5));
    }
}
