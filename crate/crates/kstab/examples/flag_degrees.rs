//! Degrees of line bundles on flag varieties via the product formula
//! `|𝒞|!·∏(ω,γ)/(ρ,γ)` over the complementary roots.
//!
//! ```bash
//! cargo run --example flag_degrees
//! ```

use kstab::root_system::{DynkinDiagram, RootSystem, Weight};
use kstab::{complementary_roots, degree, Marking};

fn main() -> kstab::Result<()> {
    // Projective spaces: any A_n marked at an end node has degree 1.
    for n in 1..=5usize {
        let rs = RootSystem::new(DynkinDiagram::parse(&format!("A{n}"))?)?;
        let d = degree(&rs, &Marking::new([1])?, &Weight::fundamental(1, n))?;
        println!("P^{n}: degree {d}");
    }
    println!();

    // Plücker-embedded Grassmannians Gr(k, n+1): A_n marked at node k.
    for (n, k) in [(3usize, 2usize), (4, 2), (5, 2), (5, 3)] {
        let rs = RootSystem::new(DynkinDiagram::parse(&format!("A{n}"))?)?;
        let marking = Marking::new([k])?;
        let dim = complementary_roots(&rs, &marking)?.len();
        let d = degree(&rs, &marking, &Weight::fundamental(k, n))?;
        println!("Gr({k},{}): dimension {dim}, degree {d}", n + 1);
    }
    println!();

    // The 22-dimensional F4-flag variety that carries the pas-f4 geometry.
    let rs = RootSystem::new(DynkinDiagram::parse("F4")?)?;
    let marking = Marking::new([1, 3])?;
    let dim = complementary_roots(&rs, &marking)?.len();
    println!("F4/P_{{1,3}}: dimension {dim}");
    for (label, coeffs) in [("ω_1", [1, 0, 0, 0]), ("ω_3", [0, 0, 1, 0]), ("ω_1+ω_3", [1, 0, 1, 0])] {
        let w = Weight::new(coeffs.iter().map(|&c| kstab::arith::rat(c)).collect());
        let d = degree(&rs, &marking, &w)?;
        println!("  degree of {label}: {d}");
    }

    // Dominance and support are hard preconditions.
    let err = degree(&rs, &Marking::new([1])?, &Weight::fundamental(3, 4));
    println!("\nweight off the marking is rejected: {}", err.unwrap_err());
    Ok(())
}
