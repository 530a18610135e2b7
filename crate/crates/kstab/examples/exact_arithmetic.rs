//! The exact scalar and polynomial layer everything else sits on.
//!
//! ```bash
//! cargo run --example exact_arithmetic
//! ```

use kstab::arith::{factorize, rat, ratio};
use kstab::polynomial::UniPoly;

fn main() {
    // Rationals never round.
    let sum = ratio(1, 2) + ratio(1, 3);
    println!("1/2 + 1/3 = {sum}");

    // Factored display of large integers.
    let xi = rat(2).pow(73) * rat(19) * rat(23) * rat(199) * rat(1049);
    println!("ξ(pas-f4) = {}", xi.numer());
    println!("          = {}", factorize(xi.numer()));

    // Exact polynomial construction and integration: the integrand family
    // behind the 8-dimensional geometry.
    let mut p = UniPoly::one();
    for (c, e) in [(0i64, 1u32), (-2, 1), (-3, 2), (-6, 1), (6, 1), (-12, 1)] {
        p = &p * &UniPoly::linear(rat(c), rat(1)).pow(e);
    }
    println!("\np(x) = x(x−2)(x−3)²(x−6)(x+6)(x−12)");
    println!("     = {p}");
    let integral = p.definite_integral(&rat(0), &rat(3));
    println!("∫₀³ p(x) dx = {integral}");
    println!("−8064·∫ = {}", rat(-8064) * &integral);
    println!("          = {}", factorize((rat(-8064) * integral).numer()));
}
