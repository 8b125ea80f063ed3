//! Runs a JSON scan description and writes the CSV spectrum with its metadata
//! header. Usage: `config_scan [config.json] [out.csv]`.

use coherence_spectra::scan::find_peak_and_width;
use coherence_spectra::{run_scan, ScanConfig};

fn main() -> coherence_spectra::Result<()> {
    let mut args = std::env::args().skip(1);
    let cfg = match args.next() {
        Some(path) => ScanConfig::from_file(path)?,
        None => ScanConfig::default(),
    };
    let table = run_scan(&cfg)?;
    match args.next() {
        Some(out) => {
            table.save(&out)?;
            println!("wrote {} rows to {out}", table.len());
        }
        None => print!("{}", table.to_csv_string()),
    }
    let column = &table.columns[0];
    match find_peak_and_width(&table, column, None) {
        Ok(p) => eprintln!(
            "{column}: center {:.4e}, height {:.4e}, FWHM {:.4e}",
            p.center, p.height, p.fwhm
        ),
        Err(e) => eprintln!("{column}: {e}"),
    }
    Ok(())
}
