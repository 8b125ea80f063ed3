//! Relative absorption enhancement at line center versus pump saturation
//! parameter `S = 2Ω₁²` for 1 → 2, 2 → 3 and 3 → 4.

use coherence_spectra::{run_scan, ObservableKind, ScanConfig, ScanVariable};

fn main() -> coherence_spectra::Result<()> {
    for fg in [1.0, 2.0, 3.0] {
        let mut cfg = ScanConfig {
            scan: ScanVariable::Saturation,
            range: [1e-3, 30.0],
            points: 19,
            log_spacing: true,
            observables: vec![ObservableKind::Absorption, ObservableKind::LinearAbsorption],
            ..ScanConfig::default()
        };
        cfg.transition.fg = fg;
        cfg.transition.fe = fg + 1.0;
        let table = run_scan(&cfg)?;
        println!("F_g = {fg}: S, eta = (alpha - alpha_L)/alpha_L");
        for (s, row) in table.scan_values.iter().zip(&table.rows) {
            println!("  {s:9.3e}  {:.4e}", row[0] / row[1] - 1.0);
        }
    }
    Ok(())
}
