//! The ξ/β engine for two-orbit blow-up geometries.
//!
//! The setting: a Fano X of dimension n with −K_X = k·H_X, a closed orbit Z
//! of codimension r, and the blow-up φ: X̃ → X along Z whose exceptional
//! divisor E is a flag variety G/P carrying two projections. The divisor
//! lattice of X̃ is spanned by {E, π*H_Y}; the class of E decomposes as
//! `a_Y·π*H_Y + a_X·φ*H_X`. Restriction to E sends π*H_Y to the divisor of
//! ω_Y and φ*H_X to the divisor of ω_Z, so every intersection number on X̃
//! reduces to a degree on E, which [`crate::flag_degree::degree_bivariate`]
//! delivers in one exact polynomial.
//!
//! From there: the volume polynomial `v(x) = (φ*(−K_X) − x·E)^n` on the nef
//! window `[0, ε]`, the normalized S-invariant, the log discrepancy A = r of
//! the smooth blow-up, and the two routes to the same number —
//!
//! ```text
//! ξ = n·∫₀^ε (r − x)·(E · (φ*(−K_X) − x·E)^{n−1}) dx      (pencil route)
//! β = (A − S)·L^n                                          (volume route)
//! ```
//!
//! which agree exactly whenever the volume vanishes at ε. Positivity of ξ
//! certifies K-polystability given uniqueness of the G-invariant divisor
//! over X and reductivity of the connected automorphism group.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorize, rat, rational_pow, BigRational, Factorization};
use crate::error::{Error, Result};
use crate::flag_degree::{
    complementary_roots, degree_bivariate, degree_pencil, pencil_table, Marking, PencilRow,
    WeightPencil,
};
use crate::polynomial::{BiPoly, UniPoly};
use crate::root_system::{DynkinDiagram, RootSystem, Weight};

/// Full geometric input for one ξ/β computation.
#[derive(Clone, Debug)]
pub struct TwoOrbitConfig {
    pub name: String,
    pub diagram: DynkinDiagram,
    /// Weight of the fibration divisor π*H_Y restricted to E.
    pub omega_y: Weight,
    /// Weight of the contraction divisor φ*H_X restricted to E.
    pub omega_z: Weight,
    /// n = dim X.
    pub dim_x: usize,
    /// r = codim of the blown-up center.
    pub codim: usize,
    /// Seshadri constant ε(Z) of the center (a config input, not computed).
    pub epsilon: BigRational,
    /// k with −K_X = k·H_X.
    pub minus_kx_multiple: i64,
    /// (a_Y, a_X) with E = a_Y·π*H_Y + a_X·φ*H_X.
    pub e_class: (i64, i64),
    /// Optional per-component symmetrizer scales (presentation only; ξ and
    /// all degrees are invariant under them).
    pub symmetrizer_scales: Option<Vec<BigRational>>,
}

/// A divisor class on X̃ in the basis {E, π*H_Y}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub e: BigRational,
    pub pullback_h_y: BigRational,
}

impl DivisorClass {
    pub fn new(e: BigRational, pullback_h_y: BigRational) -> Self {
        DivisorClass { e, pullback_h_y }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn exceptional() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    pub fn pullback_from_y() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }
}

/// Restriction of a divisor class to E, as coefficients of ω_Y and ω_Z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedClass {
    pub omega_y_coeff: BigRational,
    pub omega_z_coeff: BigRational,
}

/// Verdict on the sign of ξ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Positive,
    Zero,
    Negative,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Positive => "positive",
            Verdict::Zero => "zero",
            Verdict::Negative => "negative",
        }
    }
}

/// Everything a run produces.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub name: String,
    pub diagram: DynkinDiagram,
    pub xi: BigRational,
    /// Present when ξ is an integer.
    pub xi_factored: Option<Factorization>,
    pub beta: BigRational,
    /// A(E), the log discrepancy.
    pub log_discrepancy: BigRational,
    pub s_invariant: BigRational,
    /// L^n = (−K_X)^n.
    pub anticanonical_volume: BigRational,
    pub volume_poly: UniPoly,
    /// (r − x) times the degree pencil; ξ = n·∫₀^ε of this.
    pub integrand_poly: UniPoly,
    pub table: Vec<PencilRow>,
    pub verdict: Verdict,
}

/// The engine: a validated config with its root system and the cached
/// bivariate degree polynomial of (ω_Y, ω_Z). Pure and immutable.
pub struct BlowUpGeometry {
    cfg: TwoOrbitConfig,
    rs: RootSystem,
    marking: Marking,
    bivariate: BiPoly,
}

impl BlowUpGeometry {
    pub fn new(cfg: TwoOrbitConfig) -> Result<Self> {
        let (_, a_x) = cfg.e_class;
        if a_x == 0 {
            return Err(Error::InvalidConfig(
                "a_X = 0: φ*H_X must appear in the class of E".into(),
            ));
        }
        if cfg.minus_kx_multiple <= 0 {
            return Err(Error::InvalidConfig(format!(
                "anticanonical multiple k = {} must be positive",
                cfg.minus_kx_multiple
            )));
        }
        if cfg.codim == 0 || cfg.codim >= cfg.dim_x {
            return Err(Error::InvalidConfig(format!(
                "codim {} outside 1..{}",
                cfg.codim, cfg.dim_x
            )));
        }
        if cfg.epsilon.is_negative() {
            return Err(Error::InvalidConfig(format!("epsilon {} negative", cfg.epsilon)));
        }
        let rank = cfg.diagram.rank();
        if cfg.omega_y.rank() != rank || cfg.omega_z.rank() != rank {
            return Err(Error::InvalidConfig(format!(
                "weights must have {rank} coordinates for {}",
                cfg.diagram
            )));
        }
        if !cfg.omega_y.is_dominant() || !cfg.omega_z.is_dominant() {
            return Err(Error::InvalidConfig("ω_Y and ω_Z must be dominant".into()));
        }
        let rs = match &cfg.symmetrizer_scales {
            Some(scales) => RootSystem::with_scales(cfg.diagram.clone(), scales)?,
            None => RootSystem::new(cfg.diagram.clone())?,
        };
        let support: Vec<usize> =
            cfg.omega_y.support().union(&cfg.omega_z.support()).copied().collect();
        if support.is_empty() {
            return Err(Error::InvalidConfig("ω_Y and ω_Z are both zero".into()));
        }
        let marking = Marking::new(support)?;
        let dim_e = complementary_roots(&rs, &marking)?.len();
        if dim_e != cfg.dim_x - 1 {
            return Err(Error::InvalidConfig(format!(
                "dim E = {dim_e} from the marking, but dim_X − 1 = {}",
                cfg.dim_x - 1
            )));
        }
        let bivariate = degree_bivariate(&rs, &marking, &cfg.omega_y, &cfg.omega_z)?;
        Ok(BlowUpGeometry { cfg, rs, marking, bivariate })
    }

    pub fn config(&self) -> &TwoOrbitConfig {
        &self.cfg
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn marking(&self) -> &Marking {
        &self.marking
    }

    /// Restriction to E: π*H_Y ↦ ω_Y, E ↦ a_Y·ω_Y + a_X·ω_Z.
    pub fn restrict_to_e(&self, class: &DivisorClass) -> RestrictedClass {
        let (a_y, a_x) = self.cfg.e_class;
        RestrictedClass {
            omega_y_coeff: &class.pullback_h_y + &class.e * rat(a_y),
            omega_z_coeff: &class.e * rat(a_x),
        }
    }

    /// The restricted class as an honest weight on E.
    pub fn restriction_weight(&self, restricted: &RestrictedClass) -> Weight {
        self.cfg
            .omega_y
            .scale(&restricted.omega_y_coeff)
            .add(&self.cfg.omega_z.scale(&restricted.omega_z_coeff))
    }

    /// φ*H_X in the {E, π*H_Y} basis: (E − a_Y·π*H_Y)/a_X.
    pub fn pullback_h_x(&self) -> DivisorClass {
        let (a_y, a_x) = self.cfg.e_class;
        DivisorClass::new(rat(1) / rat(a_x), rat(-a_y) / rat(a_x))
    }

    /// Mixed intersection number `D_Y^i · D_Z^j` on E (i + j = dim E),
    /// read off the bivariate degree polynomial.
    fn mixed_on_e(&self, i: u32, j: u32) -> BigRational {
        let d = (self.cfg.dim_x - 1) as u64;
        self.bivariate.coefficient(i, j) / BigRational::from_integer(binomial(d, i as u64))
    }

    /// `E^b · (π*H_Y)^{n−b}` on X̃. Powers of a class pulled back from the
    /// lower-dimensional Y die (b = 0); otherwise one E peels off to
    /// restrict the rest to E.
    pub fn intersection_number(&self, e_power: u32, h_y_power: u32) -> Result<BigRational> {
        let n = self.cfg.dim_x as u32;
        if e_power + h_y_power != n {
            return Err(Error::DimensionMismatch(format!(
                "monomial degree {} ≠ dim X = {n}",
                e_power + h_y_power
            )));
        }
        if e_power == 0 {
            return Ok(BigRational::zero());
        }
        let (a_y, a_x) = self.cfg.e_class;
        // (E|_E)^{b−1}·(ω_Y-divisor)^{n−b} with E|_E = a_Y·ω_Y + a_X·ω_Z,
        // expanded binomially into mixed numbers.
        let b = e_power;
        let mut acc = BigRational::zero();
        for j in 0..b {
            let coef = BigRational::from_integer(binomial((b - 1) as u64, j as u64))
                * rational_pow(&rat(a_y), j as i64)?
                * rational_pow(&rat(a_x), (b - 1 - j) as i64)?;
            acc += coef * self.mixed_on_e(n - b + j, b - 1 - j);
        }
        Ok(acc)
    }

    /// Top intersection of n arbitrary classes, by expanding the formal
    /// product `∏ (e_i·T + h_i)` and weighting `T^b` with `E^b·(π*H_Y)^{n−b}`.
    pub fn intersection_product(&self, classes: &[DivisorClass]) -> Result<BigRational> {
        let n = self.cfg.dim_x;
        if classes.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} classes for dim X = {n}",
                classes.len()
            )));
        }
        let mut formal = UniPoly::one();
        for c in classes {
            formal = &formal * &UniPoly::linear(c.pullback_h_y.clone(), c.e.clone());
        }
        let mut acc = BigRational::zero();
        for b in 0..=n {
            let coeff = formal.coeff(b);
            if !coeff.is_zero() {
                acc += coeff * self.intersection_number(b as u32, (n - b) as u32)?;
            }
        }
        Ok(acc)
    }

    /// φ*(−K_X) − x·E in the {E, π*H_Y} basis, coefficients linear in x.
    fn polarization_pencil(&self) -> (UniPoly, UniPoly) {
        let (a_y, a_x) = self.cfg.e_class;
        let k = rat(self.cfg.minus_kx_multiple);
        let e_coeff = UniPoly::linear(&k / rat(a_x), rat(-1));
        let h_coeff = UniPoly::constant(&k * rat(-a_y) / rat(a_x));
        (e_coeff, h_coeff)
    }

    /// `v(x) = (φ*(−K_X) − x·E)^n`, the volume of the polarization minus
    /// x·E while that class stays nef; valid on `[0, ε]` and treated as 0
    /// beyond.
    pub fn volume_polynomial(&self) -> Result<UniPoly> {
        let n = self.cfg.dim_x;
        let (e_coeff, h_coeff) = self.polarization_pencil();
        let mut acc = UniPoly::zero();
        for b in 0..=n {
            let number = self.intersection_number(b as u32, (n - b) as u32)?;
            if number.is_zero() {
                continue;
            }
            let scalar = BigRational::from_integer(binomial(n as u64, b as u64)) * number;
            let term = &e_coeff.pow(b as u32) * &h_coeff.pow((n - b) as u32);
            acc = &acc + &term.scale(&scalar);
        }
        Ok(acc)
    }

    /// `L^n = (−K_X)^n = v(0)`.
    pub fn anticanonical_volume(&self) -> Result<BigRational> {
        Ok(self.volume_polynomial()?.eval(&BigRational::zero()))
    }

    /// `S(E) = (1/L^n)·∫₀^ε v(x) dx`.
    pub fn s_invariant(&self) -> Result<BigRational> {
        let v = self.volume_polynomial()?;
        let v0 = v.eval(&BigRational::zero());
        if v0.is_zero() {
            return Err(Error::DegenerateGeometry("L^n = 0".into()));
        }
        Ok(v.definite_integral(&BigRational::zero(), &self.cfg.epsilon) / v0)
    }

    /// `A(E) = r` for the blow-up of a smooth center of codimension r.
    pub fn log_discrepancy(&self) -> BigRational {
        rat(self.cfg.codim as i64)
    }

    /// The restriction of φ*(−K_X) − x·E to E as a weight pencil:
    /// `−a_Y·x·ω_Y + (k − a_X·x)·ω_Z`.
    pub fn xi_pencil(&self) -> Result<WeightPencil> {
        let (a_y, a_x) = self.cfg.e_class;
        let f_y = UniPoly::linear(rat(0), rat(-a_y));
        let f_z = UniPoly::linear(rat(self.cfg.minus_kx_multiple), rat(-a_x));
        WeightPencil::mix(&self.cfg.omega_y, &f_y, &self.cfg.omega_z, &f_z)
    }

    fn check_dominant_on_window(&self, pencil: &WeightPencil) -> Result<()> {
        for x in [BigRational::zero(), self.cfg.epsilon.clone()] {
            let w = pencil.eval(&x);
            if !w.is_dominant() {
                return Err(Error::DominanceFailure(format!(
                    "restricted class leaves the dominant cone at x = {x}"
                )));
            }
        }
        Ok(()) // entries are linear, so the endpoints control the window
    }

    /// `(r − x)·degree_pencil(restriction of φ*(−K_X) − x·E)`, the exact
    /// integrand whose window integral times n gives ξ.
    pub fn integrand(&self) -> Result<UniPoly> {
        let pencil = self.xi_pencil()?;
        self.check_dominant_on_window(&pencil)?;
        let deg = degree_pencil(&self.rs, &self.marking, &pencil)?;
        let r_minus_x = UniPoly::linear(rat(self.cfg.codim as i64), rat(-1));
        Ok(&r_minus_x * &deg)
    }

    /// `ξ = n·∫₀^ε (r − x)·(E · (φ*(−K_X) − x·E)^{n−1}) dx`, evaluated
    /// through the degree pencil on E.
    pub fn xi(&self) -> Result<BigRational> {
        let integrand = self.integrand()?;
        Ok(rat(self.cfg.dim_x as i64)
            * integrand.definite_integral(&BigRational::zero(), &self.cfg.epsilon))
    }

    /// `β = (A − S)·L^n`, through the volume polynomial. Equals ξ exactly
    /// whenever the volume vanishes at ε.
    pub fn beta(&self) -> Result<BigRational> {
        let v = self.volume_polynomial()?;
        let v0 = v.eval(&BigRational::zero());
        if v0.is_zero() {
            return Err(Error::DegenerateGeometry("L^n = 0".into()));
        }
        let integral = v.definite_integral(&BigRational::zero(), &self.cfg.epsilon);
        Ok(&self.log_discrepancy() * v0 - integral)
    }

    pub fn report(&self) -> Result<InvariantReport> {
        let xi = self.xi()?;
        let beta = self.beta()?;
        let volume_poly = self.volume_polynomial()?;
        let anticanonical_volume = volume_poly.eval(&BigRational::zero());
        let s_invariant = self.s_invariant()?;
        let integrand_poly = self.integrand()?;
        let table = pencil_table(&self.rs, &self.marking, &self.xi_pencil()?)?;
        let xi_factored = as_integer(&xi).map(|n| factorize(&n));
        let verdict = if xi.is_zero() {
            Verdict::Zero
        } else if xi.is_positive() {
            Verdict::Positive
        } else {
            Verdict::Negative
        };
        Ok(InvariantReport {
            name: self.cfg.name.clone(),
            diagram: self.cfg.diagram.clone(),
            xi,
            xi_factored,
            beta,
            log_discrepancy: self.log_discrepancy(),
            s_invariant,
            anticanonical_volume,
            volume_poly,
            integrand_poly,
            table,
            verdict,
        })
    }
}

fn as_integer(r: &BigRational) -> Option<BigInt> {
    if r.denom().is_one() {
        Some(r.numer().clone())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::config;

    fn f4() -> BlowUpGeometry {
        BlowUpGeometry::new(config::preset("pas-f4").unwrap().to_config().unwrap()).unwrap()
    }

    fn a1g2() -> BlowUpGeometry {
        BlowUpGeometry::new(config::preset("pas-a1g2").unwrap().to_config().unwrap()).unwrap()
    }

    fn xi_f4() -> BigRational {
        rat(2).pow(73) * rat(19) * rat(23) * rat(199) * rat(1049)
    }

    fn xi_a1g2() -> BigRational {
        rat(2).pow(4) * rat(3).pow(9) * rat(5) * rat(11)
    }

    #[test]
    fn restriction_examples() {
        let g = f4();
        let r = g.restrict_to_e(&DivisorClass::pullback_from_y());
        assert_eq!(r, RestrictedClass { omega_y_coeff: rat(1), omega_z_coeff: rat(0) });
        // E with (a_Y, a_X) = (−1, 1) restricts to −ω_Y + ω_Z.
        let r = g.restrict_to_e(&DivisorClass::exceptional());
        assert_eq!(r, RestrictedClass { omega_y_coeff: rat(-1), omega_z_coeff: rat(1) });
        let r = g.restrict_to_e(&DivisorClass::zero());
        assert_eq!(r, RestrictedClass { omega_y_coeff: rat(0), omega_z_coeff: rat(0) });
        // φ*H_X restricts to ω_Z.
        let r = g.restrict_to_e(&g.pullback_h_x());
        assert_eq!(r, RestrictedClass { omega_y_coeff: rat(0), omega_z_coeff: rat(1) });
    }

    #[test]
    fn pullback_from_y_has_zero_top_power() {
        assert_eq!(f4().intersection_number(0, 23).unwrap(), rat(0));
        assert_eq!(a1g2().intersection_number(0, 8).unwrap(), rat(0));
    }

    #[test]
    fn intersection_degree_mismatch_rejected() {
        assert!(matches!(
            f4().intersection_number(3, 3),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn mukai_eightfold_h_top_power() {
        // H_X^8 = 12 via (φ*H_X)^8 = ((E + π*H_Y)/2)^8.
        let g = a1g2();
        let classes = vec![g.pullback_h_x(); 8];
        assert_eq!(g.intersection_product(&classes).unwrap(), rat(12));
    }

    #[test]
    fn f4_exceptional_times_polarization_power_vanishes() {
        // E·(φ*(−K_X))^22 = 0: the degree of (8ω_Z)^22 on E picks up the
        // root pairing to zero with ω_Z.
        let g = f4();
        let k_class = {
            let h = g.pullback_h_x();
            DivisorClass::new(h.e * rat(8), h.pullback_h_y * rat(8))
        };
        let mut classes = vec![DivisorClass::exceptional()];
        classes.extend(std::iter::repeat_n(k_class, 22));
        assert_eq!(g.intersection_product(&classes).unwrap(), rat(0));
    }

    #[test]
    fn volume_polynomial_values() {
        let g = a1g2();
        let v = g.volume_polynomial().unwrap();
        assert_eq!(v.eval(&rat(0)), rat(6).pow(8) * rat(12));
        assert_eq!(v.eval(&rat(3)), rat(0));

        let g = f4();
        let v = g.volume_polynomial().unwrap();
        assert_eq!(v.eval(&rat(8)), rat(0));
        assert_eq!(v.eval(&rat(0)), g.anticanonical_volume().unwrap());
    }

    #[test]
    fn volume_nonnegative_and_nonincreasing_on_window() {
        for g in [f4(), a1g2()] {
            let v = g.volume_polynomial().unwrap();
            let eps = g.config().epsilon.clone();
            let mut prev: Option<BigRational> = None;
            for i in 0..=20i64 {
                let x = &eps * ratio(i, 20);
                let val = v.eval(&x);
                assert!(!val.is_negative(), "v({x}) < 0");
                if let Some(p) = prev {
                    assert!(val <= p, "volume increased at {x}");
                }
                prev = Some(val);
            }
        }
    }

    #[test]
    fn intersection_is_multilinear() {
        // (E + π*H_Y)^8 computed by binomial sum and by formal product.
        let g = a1g2();
        let sum_class = DivisorClass::new(rat(1), rat(1));
        let direct = g.intersection_product(&vec![sum_class; 8]).unwrap();
        let mut by_binomial = rat(0);
        for b in 0..=8u32 {
            by_binomial += BigRational::from_integer(binomial(8, b as u64))
                * g.intersection_number(b, 8 - b).unwrap();
        }
        assert_eq!(direct, by_binomial);
    }

    #[test]
    fn s_invariant_values() {
        assert_eq!(a1g2().s_invariant().unwrap(), ratio(73, 64));
        // S = A − ξ/L^n, the volume-route rearrangement.
        let g = f4();
        let ln = g.anticanonical_volume().unwrap();
        assert_eq!(g.s_invariant().unwrap(), rat(3) - xi_f4() / ln);
    }

    #[test]
    fn log_discrepancy_is_codim() {
        assert_eq!(f4().log_discrepancy(), rat(3));
        assert_eq!(a1g2().log_discrepancy(), rat(2));
        let mut cfg = config::preset("pas-a1g2").unwrap().to_config().unwrap();
        cfg.codim = 1;
        assert_eq!(BlowUpGeometry::new(cfg).unwrap().log_discrepancy(), rat(1));
    }

    #[test]
    fn xi_reproduces_reported_values() {
        assert_eq!(f4().xi().unwrap(), xi_f4());
        assert_eq!(a1g2().xi().unwrap(), xi_a1g2());
    }

    #[test]
    fn xi_zero_window() {
        let mut cfg = config::preset("pas-f4").unwrap().to_config().unwrap();
        cfg.epsilon = rat(0);
        let g = BlowUpGeometry::new(cfg).unwrap();
        assert_eq!(g.xi().unwrap(), rat(0));
        // The volume route degenerates to r·L^n when the window is empty.
        assert_eq!(g.beta().unwrap(), rat(3) * g.anticanonical_volume().unwrap());
    }

    #[test]
    fn beta_equals_xi_on_presets() {
        for g in [f4(), a1g2()] {
            assert_eq!(g.beta().unwrap(), g.xi().unwrap());
        }
    }

    #[test]
    fn report_contents() {
        let g = a1g2();
        let rep = g.report().unwrap();
        assert_eq!(rep.xi, xi_a1g2());
        assert_eq!(rep.beta, rep.xi);
        assert_eq!(rep.verdict, Verdict::Positive);
        assert_eq!(rep.xi_factored.as_ref().unwrap().to_string(), "2^4 · 3^9 · 5 · 11");
        assert_eq!(rep.table.len(), 7);
        assert_eq!(rep.anticanonical_volume, rat(6).pow(8) * rat(12));
        assert_eq!(rep.log_discrepancy, rat(2));

        let rep = f4().report().unwrap();
        assert_eq!(rep.xi_factored.as_ref().unwrap().to_string(), "2^73 · 19 · 23 · 199 · 1049");
        assert_eq!(rep.table.len(), 22);
        assert_eq!(rep.verdict, Verdict::Positive);
    }

    #[test]
    fn config_validation_errors() {
        let base = config::preset("pas-f4").unwrap().to_config().unwrap();

        let mut cfg = base.clone();
        cfg.e_class = (-1, 0);
        assert!(matches!(BlowUpGeometry::new(cfg), Err(Error::InvalidConfig(_))));

        let mut cfg = base.clone();
        cfg.dim_x = 10; // marking gives dim E = 22
        assert!(matches!(BlowUpGeometry::new(cfg), Err(Error::InvalidConfig(_))));

        let mut cfg = base.clone();
        cfg.codim = 23;
        assert!(matches!(BlowUpGeometry::new(cfg), Err(Error::InvalidConfig(_))));

        let mut cfg = base.clone();
        cfg.epsilon = rat(-1);
        assert!(matches!(BlowUpGeometry::new(cfg), Err(Error::InvalidConfig(_))));

        let mut cfg = base.clone();
        cfg.omega_y = Weight::new(vec![rat(-1), rat(0), rat(0), rat(0)]);
        assert!(matches!(BlowUpGeometry::new(cfg), Err(Error::InvalidConfig(_))));

        let mut cfg = base;
        cfg.omega_y = Weight::zero(4);
        cfg.omega_z = Weight::zero(4);
        assert!(matches!(BlowUpGeometry::new(cfg), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn dominance_failure_detected() {
        // ε beyond k/a_X drives the ω_Z coefficient negative.
        let mut cfg = config::preset("pas-f4").unwrap().to_config().unwrap();
        cfg.epsilon = rat(9);
        let g = BlowUpGeometry::new(cfg).unwrap();
        assert!(matches!(g.xi(), Err(Error::DominanceFailure(_))));
    }

    #[test]
    fn xi_invariant_under_symmetrizer_rescaling() {
        let mut cfg = config::preset("pas-a1g2").unwrap().to_config().unwrap();
        cfg.symmetrizer_scales = Some(vec![rat(2), ratio(7, 3)]);
        let scaled = BlowUpGeometry::new(cfg).unwrap();
        assert_eq!(scaled.xi().unwrap(), xi_a1g2());

        let mut cfg = config::preset("pas-f4").unwrap().to_config().unwrap();
        cfg.symmetrizer_scales = Some(vec![rat(1)]);
        let unscaled = BlowUpGeometry::new(cfg).unwrap();
        assert_eq!(unscaled.xi().unwrap(), xi_f4());
    }
}
