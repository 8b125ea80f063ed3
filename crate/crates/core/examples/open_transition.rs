//! Leaking population out of the cycling transition turns the enhanced
//! absorption peak of 1 → 2 into a narrow dip.

use coherence_spectra::observables::{absorption, LinearReference};
use coherence_spectra::scan::peak_and_width;
use coherence_spectra::{
    polarization, FieldSpec, OperatorSet, ProbeSolver, Projection, TransitionSpec,
};

fn main() -> coherence_spectra::Result<()> {
    for b in [1.0, 0.8, 0.5] {
        let t = TransitionSpec::new(1.0, 2.0)?
            .with_gamma(1e-3)
            .with_branching(b);
        let ops = OperatorSet::new(
            &t,
            &FieldSpec::new(0.4, polarization::lin_x()),
            &FieldSpec::new(1.0, polarization::lin_y()),
            0.0,
        )?;
        let solver = ProbeSolver::new(&ops)?;
        let deltas: Vec<f64> = (0..=400).map(|k| -0.1 + 0.0005 * k as f64).collect();
        let alpha = deltas
            .iter()
            .map(|&d| {
                Ok(absorption(
                    &solver.solve(d)?,
                    &ops,
                    &ops.probe,
                    Projection::Conjugate,
                ))
            })
            .collect::<coherence_spectra::Result<Vec<f64>>>()?;
        let lin = LinearReference::new(&ops, Projection::Conjugate)?.absorption(0.0)?;
        let p = peak_and_width(&deltas, &alpha)?;
        println!(
            "b = {b:.1}: alpha(0)/alpha_L = {:.3}, {} of FWHM {:.4} at delta = {:.1e}, population lost n_ext = {:.3}",
            alpha[200] / lin,
            if p.height > 0.0 { "peak" } else { "dip" },
            p.fwhm,
            p.center,
            solver.steady_state().n_ext
        );
    }
    Ok(())
}
