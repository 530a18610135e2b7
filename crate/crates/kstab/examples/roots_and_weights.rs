//! Build root systems from Dynkin data and inspect their parts.
//!
//! ```bash
//! cargo run --example roots_and_weights
//! ```

use kstab::root_system::{DynkinDiagram, RootSystem};

fn main() -> kstab::Result<()> {
    for name in ["G2", "F4", "A1xG2"] {
        let rs = RootSystem::new(DynkinDiagram::parse(name)?)?;
        println!("=== {name} (rank {}) ===", rs.rank());

        println!("Cartan matrix:");
        for row in rs.cartan() {
            println!("  {row:?}");
        }

        let d: Vec<String> = rs.symmetrizers().iter().map(ToString::to_string).collect();
        println!("symmetrizers d = [{}]", d.join(", "));

        println!("{} positive roots, by height:", rs.positive_roots().len());
        for root in rs.positive_roots() {
            println!("  {root}   height {}", root.height());
        }

        println!("fundamental weights over the simple roots:");
        for (i, row) in rs.fundamental_weight_matrix().iter().enumerate() {
            let coords: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("  ω_{} = ({})", i + rs.diagram().node_label_base(), coords.join(","));
        }

        let rho = rs.weight_in_simple_basis(&rs.rho())?;
        let coords: Vec<String> = rho.iter().map(ToString::to_string).collect();
        println!("ρ = ({})", coords.join(","));
        println!("dim of the adjoint representation: {}", rs.dim_adjoint());
        println!();
    }
    Ok(())
}
