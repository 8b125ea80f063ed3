//! Separates population redistribution from two-photon coherence: the
//! incoherent response drops the pump from the probe equation but keeps the
//! pump-dressed steady state.

use coherence_spectra::observables::{absorption, linear_absorption};
use coherence_spectra::probe_response::incoherent_probe;
use coherence_spectra::scan::rabi_from_saturation;
use coherence_spectra::{
    polarization, FieldSpec, OperatorSet, ProbeSolver, Projection, TransitionSpec,
};

fn main() -> coherence_spectra::Result<()> {
    let t = TransitionSpec::new(1.0, 2.0)?.with_gamma(1e-3);
    println!("S        total/linear  incoherent/linear");
    for s in [0.01, 0.1, 1.0, 10.0] {
        let ops = OperatorSet::new(
            &t,
            &FieldSpec::new(rabi_from_saturation(s), polarization::lin_x()),
            &FieldSpec::new(1.0, polarization::lin_y()),
            0.0,
        )?;
        let solver = ProbeSolver::new(&ops)?;
        let total = absorption(&solver.solve(0.0)?, &ops, &ops.probe, Projection::Conjugate);
        let inc = absorption(
            &incoherent_probe(&ops, solver.steady_state(), 0.0)?,
            &ops,
            &ops.probe,
            Projection::Conjugate,
        );
        let lin = linear_absorption(&ops, 0.0)?;
        println!("{s:<8} {:<13.4} {:.4}", total / lin, inc / lin);
    }
    Ok(())
}
