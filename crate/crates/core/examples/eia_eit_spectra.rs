//! Probe absorption around the two-photon resonance for a transition showing
//! enhanced absorption (1 → 2) and one showing transparency (2 → 1).

use coherence_spectra::observables::{absorption, LinearReference};
use coherence_spectra::{
    polarization, FieldSpec, OperatorSet, ProbeSolver, Projection, TransitionSpec,
};

fn main() -> coherence_spectra::Result<()> {
    for (fg, fe) in [(1.0, 2.0), (2.0, 1.0), (0.0, 1.0)] {
        let t = TransitionSpec::new(fg, fe)?.with_gamma(1e-3);
        let ops = OperatorSet::new(
            &t,
            &FieldSpec::new(0.4, polarization::lin_x()),
            &FieldSpec::new(1.0, polarization::lin_y()),
            0.0,
        )?;
        let solver = ProbeSolver::new(&ops)?;
        let linear = LinearReference::new(&ops, Projection::Conjugate)?;
        let peak = linear.absorption(0.0)?;
        println!("F_g = {fg} -> F_e = {fe}  (absorption / linear peak)");
        for k in -5..=5 {
            let delta = 0.002 * k as f64;
            let a = absorption(
                &solver.solve(delta)?,
                &ops,
                &ops.probe,
                Projection::Conjugate,
            );
            println!(
                "  delta {delta:+.3}  alpha {:.4}  linear {:.4}",
                a / peak,
                linear.absorption(delta)? / peak
            );
        }
    }
    Ok(())
}
