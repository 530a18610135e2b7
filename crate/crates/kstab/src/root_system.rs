//! Root systems from Dynkin data: Cartan matrices in Bourbaki numbering,
//! symmetrizers, positive-root enumeration, fundamental weights, and the
//! invariant pairing.
//!
//! A [`DynkinDiagram`] is an ordered product of simple components (`"F4"`,
//! `"A1xG2"`, ...); nodes get global 1-based indices by concatenating the
//! components. [`RootSystem::new`] builds everything eagerly; the result is
//! immutable and all operations on it are pure.
//!
//! Roots live in the simple-root basis with integer coordinates; weights live
//! in the fundamental-weight basis with rational coordinates. The pairing
//! `(ω_i, α_j) = δ_ij·d_j` is diagonal, where `d_j` are the symmetrizers
//! (half squared root lengths). The default normalization gives the shortest
//! root of each component `d = 1`; per-component scale factors can override
//! this, which changes no degree computed downstream.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{rat, ratio, BigRational};
use crate::error::{Error, Result};

/// Simple Lie type letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinType {
    fn from_char(c: char) -> Option<Self> {
        Some(match c {
            'A' => DynkinType::A,
            'B' => DynkinType::B,
            'C' => DynkinType::C,
            'D' => DynkinType::D,
            'E' => DynkinType::E,
            'F' => DynkinType::F,
            'G' => DynkinType::G,
            _ => return None,
        })
    }

    fn letter(self) -> char {
        match self {
            DynkinType::A => 'A',
            DynkinType::B => 'B',
            DynkinType::C => 'C',
            DynkinType::D => 'D',
            DynkinType::E => 'E',
            DynkinType::F => 'F',
            DynkinType::G => 'G',
        }
    }

    fn rank_valid(self, rank: usize) -> bool {
        match self {
            DynkinType::A => rank >= 1,
            DynkinType::B | DynkinType::C => rank >= 2,
            DynkinType::D => rank >= 4,
            DynkinType::E => (6..=8).contains(&rank),
            DynkinType::F => rank == 4,
            DynkinType::G => rank == 2,
        }
    }

    /// Classical count of positive roots.
    fn positive_root_count(self, n: usize) -> usize {
        match self {
            DynkinType::A => n * (n + 1) / 2,
            DynkinType::B | DynkinType::C => n * n,
            DynkinType::D => n * (n - 1),
            DynkinType::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            DynkinType::F => 24,
            DynkinType::G => 6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DynkinComponent {
    pub ty: DynkinType,
    pub rank: usize,
}

/// An ordered product of simple Dynkin components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    components: Vec<DynkinComponent>,
}

impl DynkinDiagram {
    pub fn new(components: Vec<(DynkinType, usize)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidDiagram("empty component list".into()));
        }
        for &(ty, rank) in &components {
            if !ty.rank_valid(rank) {
                return Err(Error::InvalidDiagram(format!(
                    "unsupported rank {rank} for type {}",
                    ty.letter()
                )));
            }
        }
        Ok(DynkinDiagram {
            components: components
                .into_iter()
                .map(|(ty, rank)| DynkinComponent { ty, rank })
                .collect(),
        })
    }

    /// Parses `"F4"`, `"A1xG2"`, `"B3xA2"` — components joined by `x`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        for part in s.trim().split('x') {
            let mut chars = part.chars();
            let letter = chars
                .next()
                .and_then(DynkinType::from_char)
                .ok_or_else(|| Error::InvalidDiagram(format!("bad component {part:?} in {s:?}")))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidDiagram(format!("bad rank in {part:?}")))?;
            components.push((letter, rank));
        }
        Self::new(components)
    }

    pub fn components(&self) -> &[DynkinComponent] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// First node label: products led by an A1 factor use `α_0, α_1, …`
    /// (the rank-one factor is the auxiliary root); everything else starts
    /// at `α_1`.
    pub fn node_label_base(&self) -> usize {
        if self.components.len() > 1
            && self.components[0].ty == DynkinType::A
            && self.components[0].rank == 1
        {
            0
        } else {
            1
        }
    }

    /// Cartan matrix `c_ij = ⟨α_i, α_j^∨⟩`, block diagonal over components,
    /// Bourbaki node numbering inside each.
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        let mut off = 0;
        for comp in &self.components {
            let r = comp.rank;
            match comp.ty {
                DynkinType::A => {
                    for i in 0..r.saturating_sub(1) {
                        link(off + i, off + i + 1, -1, -1);
                    }
                }
                DynkinType::B => {
                    for i in 0..r - 2 {
                        link(off + i, off + i + 1, -1, -1);
                    }
                    link(off + r - 2, off + r - 1, -2, -1);
                }
                DynkinType::C => {
                    for i in 0..r - 2 {
                        link(off + i, off + i + 1, -1, -1);
                    }
                    link(off + r - 2, off + r - 1, -1, -2);
                }
                DynkinType::D => {
                    for i in 0..r - 3 {
                        link(off + i, off + i + 1, -1, -1);
                    }
                    link(off + r - 3, off + r - 2, -1, -1);
                    link(off + r - 3, off + r - 1, -1, -1);
                }
                DynkinType::E => {
                    // Chain 1-3-4-5-…, with node 2 hanging off node 4.
                    let chain: Vec<usize> =
                        std::iter::once(0).chain(2..r).collect();
                    for w in chain.windows(2) {
                        link(off + w[0], off + w[1], -1, -1);
                    }
                    link(off + 1, off + 3, -1, -1);
                }
                DynkinType::F => {
                    link(off, off + 1, -1, -1);
                    link(off + 1, off + 2, -2, -1);
                    link(off + 2, off + 3, -1, -1);
                }
                DynkinType::G => {
                    link(off, off + 1, -1, -3);
                }
            }
            off += r;
        }
        c
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.components.iter().map(|c| format!("{}{}", c.ty.letter(), c.rank)).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A root in integer simple-basis coordinates (global node order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A weight in rational fundamental-basis coordinates (global node order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    coeffs: Vec<BigRational>,
}

impl Weight {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Weight { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { coeffs: vec![BigRational::zero(); rank] }
    }

    /// The fundamental weight `ω_node` (1-based global node index).
    pub fn fundamental(node: usize, rank: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coeffs[node - 1] = BigRational::one();
        w
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// 1-based node indices with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Weight {
        Weight { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

/// A fully built root system.
pub struct RootSystem {
    diagram: DynkinDiagram,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<BigRational>,
    positive_roots: Vec<Root>,
    /// Row `i` holds the simple-basis coordinates of `ω_{i+1}`; equals the
    /// inverse of the Cartan matrix.
    fundamental_weights: Vec<Vec<BigRational>>,
}

impl RootSystem {
    /// Builds with the default symmetrizer normalization (shortest root of
    /// each component gets `d = 1`).
    pub fn new(diagram: DynkinDiagram) -> Result<Self> {
        Self::build(diagram, None)
    }

    /// Builds with one positive scale per component multiplying that
    /// component's symmetrizers. Degrees are invariant under such scaling.
    pub fn with_scales(diagram: DynkinDiagram, scales: &[BigRational]) -> Result<Self> {
        Self::build(diagram, Some(scales))
    }

    fn build(diagram: DynkinDiagram, scales: Option<&[BigRational]>) -> Result<Self> {
        let n = diagram.rank();
        let cartan = diagram.cartan_matrix();
        let symmetrizers = compute_symmetrizers(&diagram, &cartan, scales)?;
        let positive_roots = enumerate_positive_roots(&cartan);
        let expected: usize =
            diagram.components().iter().map(|c| c.ty.positive_root_count(c.rank)).sum();
        assert_eq!(positive_roots.len(), expected, "positive-root count for {diagram}");
        let fundamental_weights = invert_cartan(&cartan);
        debug_assert!((0..n).all(|i| {
            (0..n).all(|j| {
                let lhs: BigRational = (0..n)
                    .map(|k| &fundamental_weights[i][k] * rat(cartan[k][j]))
                    .sum();
                lhs == if i == j { BigRational::one() } else { BigRational::zero() }
            })
        }));
        Ok(RootSystem { diagram, cartan, symmetrizers, positive_roots, fundamental_weights })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrizers `d_i` making `d_j·c_ij` symmetric.
    pub fn symmetrizers(&self) -> &[BigRational] {
        &self.symmetrizers
    }

    /// Positive roots ordered by height, then reverse-lexicographically
    /// within a height layer. The last root of each component is its
    /// highest root.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Row `i` = simple-basis coordinates of `ω_{i+1}` (the inverse Cartan
    /// matrix).
    pub fn fundamental_weight_matrix(&self) -> &[Vec<BigRational>] {
        &self.fundamental_weights
    }

    /// Sum of all fundamental weights; equals half the sum of positive roots.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![BigRational::one(); self.rank()])
    }

    /// Simple-basis coordinates of a weight given in fundamental coordinates.
    pub fn weight_in_simple_basis(&self, w: &Weight) -> Result<Vec<BigRational>> {
        let n = self.rank();
        if w.rank() != n {
            return Err(Error::DimensionMismatch(format!(
                "weight has rank {}, diagram has rank {n}",
                w.rank()
            )));
        }
        Ok((0..n)
            .map(|j| w.coeffs().iter().zip(&self.fundamental_weights).map(|(c, row)| c * &row[j]).sum())
            .collect())
    }

    /// Invariant pairing `(w, g) = Σ_i w_i·g_i·d_i` of a weight in
    /// fundamental coordinates with a root in simple coordinates.
    pub fn pairing(&self, w: &Weight, g: &Root) -> Result<BigRational> {
        let n = self.rank();
        if w.rank() != n || g.coeffs().len() != n {
            return Err(Error::DimensionMismatch(format!(
                "pairing of rank-{} weight with rank-{} root in rank-{n} system",
                w.rank(),
                g.coeffs().len()
            )));
        }
        Ok(w.coeffs()
            .iter()
            .zip(g.coeffs())
            .zip(&self.symmetrizers)
            .map(|((c, &m), d)| c * rat(m) * d)
            .sum())
    }

    /// Dimension of the adjoint representation: `2·|Φ⁺| + rank`.
    pub fn dim_adjoint(&self) -> usize {
        2 * self.positive_roots.len() + self.rank()
    }
}

fn compute_symmetrizers(
    diagram: &DynkinDiagram,
    cartan: &[Vec<i64>],
    scales: Option<&[BigRational]>,
) -> Result<Vec<BigRational>> {
    if let Some(s) = scales {
        if s.len() != diagram.components().len() {
            return Err(Error::InvalidConfig(format!(
                "{} symmetrizer scales for {} components",
                s.len(),
                diagram.components().len()
            )));
        }
        if let Some(bad) = s.iter().find(|x| !x.is_positive()) {
            return Err(Error::InvalidConfig(format!("symmetrizer scale {bad} not positive")));
        }
    }
    let n = diagram.rank();
    let mut d = vec![BigRational::zero(); n];
    let mut off = 0;
    for (ci, comp) in diagram.components().iter().enumerate() {
        let idx: Vec<usize> = (off..off + comp.rank).collect();
        d[idx[0]] = BigRational::one();
        // Propagate d_j = d_i · c_ji / c_ij along diagram edges.
        let mut todo = vec![idx[0]];
        let mut seen: BTreeSet<usize> = [idx[0]].into();
        while let Some(i) = todo.pop() {
            for &j in &idx {
                if !seen.contains(&j) && cartan[i][j] != 0 {
                    d[j] = &d[i] * ratio(cartan[j][i], cartan[i][j]);
                    seen.insert(j);
                    todo.push(j);
                }
            }
        }
        let min = idx.iter().map(|&i| d[i].clone()).min().expect("nonempty component");
        for &i in &idx {
            d[i] = &d[i] / &min;
            if let Some(s) = scales {
                d[i] *= &s[ci];
            }
        }
        off += comp.rank;
    }
    debug_assert!((0..n)
        .all(|i| (0..n).all(|j| &d[i] * rat(cartan[j][i]) == &d[j] * rat(cartan[i][j]))));
    Ok(d)
}

/// Height-by-height closure: `β + α_i` joins layer `h+1` iff
/// `q − ⟨β, α_i^∨⟩ ≥ 1`, where `q` is the length of the already-enumerated
/// string `β, β−α_i, β−2α_i, …` below `β` and `⟨β, α_i^∨⟩ = Σ_j β_j c_ji`.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        found.insert(v.clone());
        layer.push(v);
    }
    let mut result: Vec<Vec<i64>> = layer.clone();
    let mut heights = 1usize;
    while !layer.is_empty() {
        heights += 1;
        assert!(heights <= n * 64, "positive-root enumeration exceeded safety bound");
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let mut q = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !found.contains(&down) {
                        break;
                    }
                    q += 1;
                }
                let pair: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if q - pair >= 1 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !found.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        layer = next.into_iter().collect();
        for v in &layer {
            found.insert(v.clone());
        }
        result.extend(layer.iter().cloned());
    }
    // Height, then reverse-lexicographic within each height layer.
    result.sort_by(|a, b| {
        let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    result.into_iter().map(Root::new).collect()
}

/// Exact Gaussian elimination; Cartan matrices are always invertible.
fn invert_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = cartan.len();
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| rat(cartan[i][j]))
                .chain((0..n).map(|j| if i == j { rat(1) } else { rat(0) }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).expect("invertible");
        aug.swap(col, pivot);
        let pv = aug[col][col].clone();
        for x in &mut aug[col] {
            *x /= &pv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let scaled: Vec<BigRational> = aug[col].iter().map(|x| &f * x).collect();
                for (dst, sub) in aug[r].iter_mut().zip(scaled) {
                    *dst -= sub;
                }
            }
        }
    }
    (0..n).map(|i| aug[i][n..].to_vec()).collect()
}
