//! Line-bundle pencils on a flag variety: the per-root table, the exact
//! degree polynomial, and the bivariate form behind the intersection engine.
//!
//! ```bash
//! cargo run --example degree_pencils
//! ```

use kstab::arith::rat;
use kstab::polynomial::UniPoly;
use kstab::report::{format_linear, format_root};
use kstab::root_system::{DynkinDiagram, RootSystem, Weight};
use kstab::{degree_bivariate, degree_pencil, pencil_table, Marking, WeightPencil};

fn main() -> kstab::Result<()> {
    // The pas-f4 pencil x·ω_1 + (8−x)·ω_3 on F4/P_{1,3}, with the
    // symmetrizer scale that makes the long roots carry d = 1.
    let rs = RootSystem::with_scales(DynkinDiagram::parse("F4")?, &[kstab::arith::ratio(1, 2)])?;
    let marking = Marking::new([1, 3])?;
    let pencil = WeightPencil::mix(
        &Weight::fundamental(1, 4),
        &UniPoly::x(),
        &Weight::fundamental(3, 4),
        &UniPoly::linear(rat(8), rat(-1)),
    )?;

    println!("per-root table for x·ω_1 + (8−x)·ω_3 on F4/P_{{1,3}}:");
    println!("  root | numerator | denominator");
    for row in pencil_table(&rs, &marking, &pencil)? {
        println!(
            "  {} | {} | {}",
            format_root(&row.root, rs.diagram()),
            format_linear(&row.numerator),
            row.denominator
        );
    }

    let poly = degree_pencil(&rs, &marking, &pencil)?;
    println!("\ndegree polynomial (22!·∏ numerators / ∏ denominators):");
    println!("  {poly}");

    // The same polynomial drops out of the homogeneous two-weight form by
    // substituting s := x, t := 8 − x.
    let big = degree_bivariate(&rs, &marking, &Weight::fundamental(1, 4), &Weight::fundamental(3, 4))?;
    assert_eq!(big.specialize(&rat(8), &rat(1)), poly);
    println!("\nbivariate check: specializing P(s,t) at (x, 8−x) reproduces it exactly");
    println!(
        "P(s,t) has {} monomials, all of total degree {}",
        big.terms().count(),
        big.total_degree().unwrap()
    );
    println!(
        "pure-t coefficient P(0,22) = {} (the root (1,0,0,0) pairs to zero with ω_3)",
        big.coefficient(0, 22)
    );
    Ok(())
}
