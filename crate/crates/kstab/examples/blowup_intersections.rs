//! Intersection numbers on the blow-up X̃ through restriction to the
//! exceptional divisor, and the volume polynomial they assemble into.
//!
//! ```bash
//! cargo run --example blowup_intersections
//! ```

use kstab::arith::rat;
use kstab::{config, BlowUpGeometry, DivisorClass};

fn main() -> kstab::Result<()> {
    let cfg = config::preset("pas-a1g2").expect("built-in preset").to_config()?;
    let g = BlowUpGeometry::new(cfg)?;
    let n = g.config().dim_x;

    println!("pas-a1g2: dim X = {n}, E = −π*H_Y + 2·φ*H_X on the blow-up");

    // Restriction dictionary.
    for (label, class) in [
        ("π*H_Y", DivisorClass::pullback_from_y()),
        ("E", DivisorClass::exceptional()),
        ("φ*H_X", g.pullback_h_x()),
    ] {
        let r = g.restrict_to_e(&class);
        println!("  {label}|_E = {}·ω_Y + {}·ω_Z", r.omega_y_coeff, r.omega_z_coeff);
    }

    // Monomials E^b·(π*H_Y)^{n−b}; b = 0 dies on the lower-dimensional Y.
    println!("\nE^b · (π*H_Y)^{{8−b}}:");
    for b in 0..=n as u32 {
        println!("  b = {b}: {}", g.intersection_number(b, n as u32 - b)?);
    }

    // The degree of X itself: H_X^8 = 12 for the Mukai eightfold.
    let h = g.pullback_h_x();
    println!("\nH_X^8 = {}", g.intersection_product(&vec![h; 8])?);

    let v = g.volume_polynomial()?;
    println!("\nvolume polynomial v(x) = (φ*(−K_X) − x·E)^8:");
    println!("  v(x) = {v}");
    println!("  v(0) = L^8 = {}", v.eval(&rat(0)));
    println!("  v(ε) = v(3) = {} (the class degenerates to 3·π*H_Y)", v.eval(&rat(3)));
    println!("  S(E) = {}", g.s_invariant()?);
    println!("  A(E) = {}", g.log_discrepancy());
    println!("  β(E) = (A − S)·L^8 = {}", g.beta()?);
    println!("  ξ(Z) = {}", g.xi()?);
    Ok(())
}
