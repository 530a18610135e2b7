//! Drive the engine from a JSON config instead of a preset — the same
//! format `kstab xi --config <path>` reads.
//!
//! ```bash
//! cargo run --example custom_geometry
//! ```

use kstab::{BlowUpGeometry, ConfigFile};

// The pas-a1g2 geometry with doubled symmetrizer scales: every degree and
// ξ itself are invariant under per-component rescaling, so this run must
// land on the same numbers as the preset.
const CONFIG: &str = r#"{
  "name": "rescaled-a1g2",
  "diagram": "A1xG2",
  "omega_Y": ["0", "0", "1"],
  "omega_Z": ["1", "1", "0"],
  "dim_X": 8,
  "codim": 2,
  "epsilon": "3",
  "minus_KX_multiple": 6,
  "E_class": { "a_Y": -1, "a_X": 2 },
  "symmetrizer_scales": ["2", "2"]
}"#;

fn main() -> kstab::Result<()> {
    let file = ConfigFile::from_json(CONFIG)?;
    let geometry = BlowUpGeometry::new(file.to_config()?)?;
    let report = geometry.report()?;

    println!("config {:?} on diagram {}", report.name, report.diagram);
    println!("ξ = {}", report.xi);
    if let Some(f) = &report.xi_factored {
        println!("  = {f}");
    }
    println!("verdict: {}", report.verdict.as_str());

    let preset = BlowUpGeometry::new(
        kstab::config::preset("pas-a1g2").expect("built-in preset").to_config()?,
    )?;
    assert_eq!(report.xi, preset.xi()?);
    println!("matches the pas-a1g2 preset exactly, as scaling invariance demands");
    Ok(())
}
