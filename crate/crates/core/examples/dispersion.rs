//! Probe dispersion near the two-photon resonance: steep anomalous slope for
//! enhanced absorption (1 → 2), steep normal slope for transparency (2 → 1).

use coherence_spectra::observables::dispersion;
use coherence_spectra::{
    polarization, FieldSpec, OperatorSet, ProbeSolver, Projection, TransitionSpec,
};

fn main() -> coherence_spectra::Result<()> {
    for (fg, fe) in [(1.0, 2.0), (2.0, 1.0)] {
        let t = TransitionSpec::new(fg, fe)?.with_gamma(1e-3);
        let ops = OperatorSet::new(
            &t,
            &FieldSpec::new(0.4, polarization::lin_x()),
            &FieldSpec::new(1.0, polarization::lin_y()),
            0.0,
        )?;
        let solver = ProbeSolver::new(&ops)?;
        let axis = ops.probe.polarization;
        let n = |d: f64| -> coherence_spectra::Result<f64> {
            Ok(dispersion(
                &solver.solve(d)?,
                &ops,
                &axis,
                Projection::Conjugate,
            ))
        };
        let h = 1e-5;
        println!(
            "F_g = {fg} -> F_e = {fe}: slope at delta = 0 is {:+.2}",
            (n(h)? - n(-h)?) / (2.0 * h)
        );
        for k in -4..=4 {
            let d = 0.0025 * k as f64;
            println!("  delta {d:+.4}  dispersion {:+.5}", n(d)?);
        }
    }
    Ok(())
}
