//! Full ξ/β reports for the two built-in geometries.
//!
//! ```bash
//! cargo run --example xi_invariants
//! ```

use kstab::report::{render_report_text, RenderOptions};
use kstab::{config, BlowUpGeometry};

fn main() -> kstab::Result<()> {
    for name in config::PRESET_NAMES {
        let cfg = config::preset(name).expect("built-in preset").to_config()?;
        let geometry = BlowUpGeometry::new(cfg)?;
        let report = geometry.report()?;
        let opts = RenderOptions { color: false, table: true, factor: true };
        println!("{}", render_report_text(&report, &opts));

        // The identity behind the report: the pencil integral and the
        // volume route land on the same exact rational.
        assert_eq!(report.xi, report.beta);
    }
    Ok(())
}
