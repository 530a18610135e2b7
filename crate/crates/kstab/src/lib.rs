//! Exact K-polystability invariants for two-orbit Fano blow-up geometries.
//!
//! Everything is computed in arbitrary-precision rational arithmetic: root
//! systems built from Dynkin data, degrees of line-bundle pencils on flag
//! varieties G/P, and the ξ- and β-invariants of the exceptional divisor of
//! a two-orbit blow-up. The two built-in presets (`pas-f4`, `pas-a1g2`)
//! carry the geometries of the exceptional 23- and 8-dimensional two-orbit
//! Fano manifolds; both come out with ξ > 0.
//!
//! Layers, bottom to top:
//!
//! - [`arith`] — rationals, factorials, integer factorization with the
//!   `2^73 · 19 · 23 · 199 · 1049` display convention;
//! - [`polynomial`] — exact dense univariate / sparse bivariate polynomials
//!   with definite integration;
//! - [`root_system`] — Cartan matrices (Bourbaki numbering), positive-root
//!   enumeration, fundamental weights, the invariant pairing;
//! - [`flag_degree`] — complementary roots and the degree formula
//!   `|𝒞|!·∏(ω,γ)/(ρ,γ)` in scalar, pencil, and bivariate form;
//! - [`k_stability`] — intersection numbers on the blow-up via restriction
//!   to E, volume polynomial, S-invariant, log discrepancy, ξ and β;
//! - [`config`] / [`report`] — JSON configs, presets, and rendering.
//!
//! The `examples/` directory walks through each capability; the `kstab`
//! binary exposes the same operations as subcommands.

pub mod arith;
pub mod config;
pub mod error;
pub mod flag_degree;
pub mod k_stability;
pub mod polynomial;
pub mod report;
pub mod root_system;

pub use arith::{factorize, BigRational, Factorization};
pub use config::{preset, ConfigFile, PRESET_NAMES};
pub use error::{Error, Result};
pub use flag_degree::{
    complementary_roots, degree, degree_bivariate, degree_pencil, pencil_table, Marking,
    PencilRow, WeightPencil,
};
pub use k_stability::{
    BlowUpGeometry, DivisorClass, InvariantReport, RestrictedClass, TwoOrbitConfig, Verdict,
};
pub use polynomial::{BiPoly, UniPoly};
pub use root_system::{DynkinDiagram, DynkinType, Root, RootSystem, Weight};
