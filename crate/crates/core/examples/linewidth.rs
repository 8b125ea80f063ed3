//! Width of the enhanced-absorption resonance versus pump intensity: it
//! approaches 2γ at low intensity and grows linearly with S.

use coherence_spectra::observables::absorption;
use coherence_spectra::scan::{peak_and_width, rabi_from_saturation};
use coherence_spectra::{
    polarization, FieldSpec, OperatorSet, ProbeSolver, Projection, TransitionSpec,
};

fn main() -> coherence_spectra::Result<()> {
    let gamma = 1e-4;
    let t = TransitionSpec::new(1.0, 2.0)?.with_gamma(gamma);
    println!("gamma = {gamma:e}");
    for s in [1e-4, 1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0, 5.0] {
        let ops = OperatorSet::new(
            &t,
            &FieldSpec::new(rabi_from_saturation(s), polarization::lin_x()),
            &FieldSpec::new(1.0, polarization::lin_y()),
            0.0,
        )?;
        let solver = ProbeSolver::new(&ops)?;
        let half = (50.0 * gamma).max(0.02 * s);
        let deltas: Vec<f64> = (0..=800).map(|k| -half + half * k as f64 / 400.0).collect();
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
        let p = peak_and_width(&deltas, &alpha)?;
        println!(
            "  S {s:8.1e}  FWHM {:.4e}  FWHM/2gamma {:8.3}",
            p.fwhm,
            p.fwhm / (2.0 * gamma)
        );
    }
    Ok(())
}
