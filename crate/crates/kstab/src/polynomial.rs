//! Dense univariate and sparse bivariate polynomials over exact rationals.
//!
//! [`UniPoly`] is a coefficient vector in ascending powers of `x` with
//! trailing zeros trimmed (the zero polynomial is the empty vector).
//! [`BiPoly`] maps `(s-power, t-power)` to nonzero coefficients; products of
//! linear forms stay homogeneous by construction. Degrees in this crate stay
//! in the low twenties, so nothing clever is needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    /// `c0 + c1·x`.
    pub fn linear(c0: BigRational, c1: BigRational) -> Self {
        Self::from_coeffs(vec![c0, c1])
    }

    /// Coefficients in ascending powers; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero when out of range).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact `∫_lo^hi p(x) dx` by the power rule.
    pub fn definite_integral(&self, lo: &BigRational, hi: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut hi_pow = hi.clone();
        let mut lo_pow = lo.clone();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * (&hi_pow - &lo_pow) / BigRational::from_integer((k as i64 + 1).into());
            }
            hi_pow *= hi;
            lo_pow *= lo;
        }
        acc
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for UniPoly {
    /// Descending powers, `-2048/3*x^5` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Sparse bivariate polynomial in `s` and `t`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((0, 0), c);
        }
        BiPoly { coeffs }
    }

    /// `a·s + b·t`.
    pub fn linear_form(a: BigRational, b: BigRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !a.is_zero() {
            coeffs.insert((1, 0), a);
        }
        if !b.is_zero() {
            coeffs.insert((0, 1), b);
        }
        BiPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored coefficient of `s^i t^j`, or zero.
    pub fn coefficient(&self, i: u32, j: u32) -> BigRational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly { coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Total degree of the highest term, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(i, j)| i + j).max()
    }

    /// True when every stored monomial has total degree exactly `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.coeffs.keys().all(|(i, j)| i + j == d)
    }

    /// Substitutes `s := x`, `t := c − m·x`.
    pub fn specialize(&self, c: &BigRational, m: &BigRational) -> UniPoly {
        let t_poly = UniPoly::linear(c.clone(), -m.clone());
        let mut by_j: BTreeMap<u32, UniPoly> = BTreeMap::new();
        for ((i, j), v) in &self.coeffs {
            let entry = by_j.entry(*j).or_insert_with(UniPoly::zero);
            let mut coeffs = vec![BigRational::zero(); *i as usize + 1];
            coeffs[*i as usize] = v.clone();
            *entry = &*entry + &UniPoly::from_coeffs(coeffs);
        }
        let mut acc = UniPoly::zero();
        for (j, s_part) in by_j {
            acc = &acc + &(&s_part * &t_poly.pow(j));
        }
        acc
    }

    pub fn eval(&self, s: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for ((i, j), v) in &self.coeffs {
            acc += v
                * num_traits::pow::pow(s.clone(), *i as usize)
                * num_traits::pow::pow(t.clone(), *j as usize);
        }
        acc
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &rhs.coeffs {
            let entry = coeffs.entry(*k).or_insert_with(BigRational::zero);
            *entry += v;
            if entry.is_zero() {
                coeffs.remove(k);
            }
        }
        BiPoly { coeffs }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut coeffs: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for ((i1, j1), a) in &self.coeffs {
            for ((i2, j2), b) in &rhs.coeffs {
                let key = (i1 + i2, j1 + j2);
                let entry = coeffs.entry(key).or_insert_with(BigRational::zero);
                *entry += a * b;
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        BiPoly { coeffs }
    }
}
