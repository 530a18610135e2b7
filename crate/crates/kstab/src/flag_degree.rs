//! Degrees of line bundles on flag varieties G/P.
//!
//! A parabolic is fixed by a [`Marking`], the set S of marked simple nodes.
//! The complementary roots 𝒞 are the positive roots with a nonzero
//! coefficient on some marked node; |𝒞| = dim G/P. For a dominant weight ω
//! supported on S the degree of the associated line bundle is
//!
//! ```text
//! deg H_ω = |𝒞|! · ∏_{γ∈𝒞} (ω, γ)/(ρ, γ)
//! ```
//!
//! and this module also evaluates the same product with the weight replaced
//! by a pencil `ω(x)` (one exact univariate polynomial) or by a two-weight
//! mix `s·ω_a + t·ω_b` (one exact homogeneous bivariate polynomial, whose
//! coefficients encode all mixed intersection numbers on G/P).

use std::collections::BTreeSet;

use crate::arith::{factorial, BigRational};
use crate::error::{Error, Result};
use crate::polynomial::{BiPoly, UniPoly};
use crate::root_system::{Root, RootSystem, Weight};

/// A nonempty set of marked simple nodes (global 1-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Marking {
    nodes: BTreeSet<usize>,
}

impl Marking {
    pub fn new<I: IntoIterator<Item = usize>>(nodes: I) -> Result<Self> {
        let nodes: BTreeSet<usize> = nodes.into_iter().collect();
        if nodes.is_empty() {
            return Err(Error::InvalidConfig("empty marking".into()));
        }
        Ok(Marking { nodes })
    }

    pub fn nodes(&self) -> &BTreeSet<usize> {
        &self.nodes
    }

    pub fn contains(&self, node: usize) -> bool {
        self.nodes.contains(&node)
    }

    fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        let rank = rs.rank();
        if let Some(&bad) = self.nodes.iter().find(|&&n| n == 0 || n > rank) {
            return Err(Error::InvalidConfig(format!(
                "marked node {bad} outside 1..={rank}"
            )));
        }
        Ok(())
    }
}

/// A weight whose fundamental coordinates are linear polynomials in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPencil {
    entries: Vec<UniPoly>,
}

impl WeightPencil {
    /// Entries must have degree at most one.
    pub fn new(entries: Vec<UniPoly>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|p| p.degree().is_some_and(|d| d > 1)) {
            return Err(Error::InvalidConfig(format!("pencil entry {bad} is not linear")));
        }
        Ok(WeightPencil { entries })
    }

    /// `f_a(x)·a + f_b(x)·b` for constant weights `a`, `b`.
    pub fn mix(a: &Weight, f_a: &UniPoly, b: &Weight, f_b: &UniPoly) -> Result<Self> {
        let entries = a
            .coeffs()
            .iter()
            .zip(b.coeffs())
            .map(|(ca, cb)| &f_a.scale(ca) + &f_b.scale(cb))
            .collect();
        Self::new(entries)
    }

    pub fn entries(&self) -> &[UniPoly] {
        &self.entries
    }

    /// Nodes (1-based) whose entry is not identically zero.
    pub fn support(&self) -> BTreeSet<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The constant weight at a given parameter value.
    pub fn eval(&self, x: &BigRational) -> Weight {
        Weight::new(self.entries.iter().map(|p| p.eval(x)).collect())
    }
}

/// Positive roots with a nonzero coefficient on a marked node, in the
/// root system's enumeration order. Their count is `dim G/P_S`.
pub fn complementary_roots(rs: &RootSystem, marking: &Marking) -> Result<Vec<Root>> {
    marking.check_rank(rs)?;
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|r| marking.nodes().iter().any(|&n| r.coeffs()[n - 1] != 0))
        .cloned()
        .collect())
}

fn check_support(support: &BTreeSet<usize>, marking: &Marking, what: &str) -> Result<()> {
    if let Some(&bad) = support.iter().find(|n| !marking.contains(**n)) {
        return Err(Error::UnsupportedWeight(format!(
            "{what} has nonzero coefficient on unmarked node {bad}"
        )));
    }
    Ok(())
}

/// Degree of the line bundle of a dominant weight `w` supported on the
/// marking: `|𝒞|! · ∏ (w,γ)/(ρ,γ)`.
pub fn degree(rs: &RootSystem, marking: &Marking, w: &Weight) -> Result<BigRational> {
    check_support(&w.support(), marking, "weight")?;
    if !w.is_dominant() {
        return Err(Error::NonDominantWeight(format!(
            "coefficients {:?} contain a negative entry",
            w.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    let comp = complementary_roots(rs, marking)?;
    let rho = rs.rho();
    let mut acc = BigRational::from_integer(factorial(comp.len() as u64));
    for gamma in &comp {
        acc *= rs.pairing(w, gamma)?;
        acc /= rs.pairing(&rho, gamma)?;
    }
    Ok(acc)
}

/// The degree product with a pencil in place of the weight, as an exact
/// polynomial in `x` of degree at most `|𝒞|`.
pub fn degree_pencil(rs: &RootSystem, marking: &Marking, pencil: &WeightPencil) -> Result<UniPoly> {
    check_support(&pencil.support(), marking, "pencil")?;
    if pencil.entries().len() != rs.rank() {
        return Err(Error::DimensionMismatch(format!(
            "pencil has {} entries in a rank-{} system",
            pencil.entries().len(),
            rs.rank()
        )));
    }
    let comp = complementary_roots(rs, marking)?;
    let rho = rs.rho();
    let mut num = UniPoly::one();
    let mut den = BigRational::from_integer(num_traits::One::one());
    for gamma in &comp {
        num = &num * &pencil_pairing(rs, pencil, gamma);
        den *= rs.pairing(&rho, gamma)?;
    }
    let factor = BigRational::from_integer(factorial(comp.len() as u64)) / den;
    Ok(num.scale(&factor))
}

/// `(pencil(x), γ)` as a linear polynomial.
fn pencil_pairing(rs: &RootSystem, pencil: &WeightPencil, gamma: &Root) -> UniPoly {
    let mut acc = UniPoly::zero();
    for ((p, &m), d) in pencil.entries().iter().zip(gamma.coeffs()).zip(rs.symmetrizers()) {
        acc = &acc + &p.scale(&(crate::arith::rat(m) * d));
    }
    acc
}

/// The homogeneous bivariate degree polynomial
/// `P(s,t) = |𝒞|! · ∏ (s·(w_a,γ) + t·(w_b,γ))/(ρ,γ)`.
///
/// Mixed intersection numbers fall out of its coefficients: with
/// `d = |𝒞| = dim G/P`, the number `A^k·B^{d−k}` for the divisors of `w_a`
/// and `w_b` equals `coefficient(P, k, d−k) / C(d, k)`.
pub fn degree_bivariate(
    rs: &RootSystem,
    marking: &Marking,
    w_a: &Weight,
    w_b: &Weight,
) -> Result<BiPoly> {
    check_support(&w_a.support(), marking, "first weight")?;
    check_support(&w_b.support(), marking, "second weight")?;
    let comp = complementary_roots(rs, marking)?;
    let rho = rs.rho();
    let mut acc = BiPoly::one();
    let mut den = BigRational::from_integer(num_traits::One::one());
    for gamma in &comp {
        let a = rs.pairing(w_a, gamma)?;
        let b = rs.pairing(w_b, gamma)?;
        acc = &acc * &BiPoly::linear_form(a, b);
        den *= rs.pairing(&rho, gamma)?;
    }
    let factor = BigRational::from_integer(factorial(comp.len() as u64)) / den;
    Ok(acc.scale(&factor))
}

/// One row of the paper-style table: the complementary root, the pencil
/// pairing as a linear form, and the `(ρ, γ)` denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilRow {
    pub root: Root,
    pub numerator: UniPoly,
    pub denominator: BigRational,
}

/// Per-root numerators and denominators of the degree-pencil product.
pub fn pencil_table(
    rs: &RootSystem,
    marking: &Marking,
    pencil: &WeightPencil,
) -> Result<Vec<PencilRow>> {
    check_support(&pencil.support(), marking, "pencil")?;
    let comp = complementary_roots(rs, marking)?;
    let rho = rs.rho();
    comp.into_iter()
        .map(|root| {
            let numerator = pencil_pairing(rs, pencil, &root);
            let denominator = rs.pairing(&rho, &root)?;
            Ok(PencilRow { root, numerator, denominator })
        })
        .collect()
}
