//! Exact scalar arithmetic: rationals, factorials, and integer factorization.
//!
//! Rationals are `num_rational::BigRational`, which already stores values in
//! lowest terms with a positive denominator. This module adds the checked
//! operations the rest of the crate needs, parsing/formatting helpers, and a
//! [`Factorization`] type that renders integers in the `2^4 · 3^9 · 5 · 11`
//! display convention.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational;

use crate::error::{Error, Result};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`; use [`checked_div`] for runtime data.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a/b"` or `"a"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    t.parse::<BigRational>()
        .map_err(|e| Error::InvalidNumber(format!("{t:?}: {e}")))
}

/// Renders a rational as `a/b`, or just `a` when integral.
pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

/// Division with an explicit zero-divisor error.
pub fn checked_div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Integer power, with negative exponents inverting. `0^-k` is an error.
pub fn rational_pow(base: &BigRational, exp: i64) -> Result<BigRational> {
    if base.is_zero() && exp < 0 {
        return Err(Error::DivisionByZero);
    }
    if base.is_zero() && exp == 0 {
        return Ok(BigRational::one());
    }
    let e32 = i32::try_from(exp).map_err(|_| Error::InvalidNumber(format!("exponent {exp}")))?;
    Ok(num_traits::Pow::pow(base, e32))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

/// A signed prime factorization: `sign · ∏ pᵢ^eᵢ` with strictly increasing
/// primes. Zero is sign 0 with no factors; ±1 keeps the sign with no factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    sign: i8,
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> BigInt {
        if self.sign == 0 {
            return BigInt::zero();
        }
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        let sign = if self.sign > 0 { Sign::Plus } else { Sign::Minus };
        BigInt::from_biguint(sign, acc)
    }
}

impl fmt::Display for Factorization {
    /// `[-]p1^e1 · p2^e2 · …`, exponent omitted when 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (p, e) in &self.factors {
            if !first {
                write!(f, " · ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Trial-division bound. Cofactors that survive it go to Pollard rho.
const TRIAL_LIMIT: u64 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut p = 2usize;
        while p * p <= n {
            if sieve[p] {
                let mut q = p * p;
                while q <= n {
                    sieve[q] = false;
                    q += p;
                }
            }
            p += 1;
        }
        (2..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

/// Factors an arbitrary-precision integer.
///
/// Trial division by all primes below 10^6, then Pollard rho (Brent cycle
/// finding, with a Montgomery-arithmetic fast path below 2^126) on whatever
/// composite survives. Work drops into native `u128` arithmetic as soon as
/// the cofactor fits. Designed for the value range this crate produces,
/// roughly |n| < 10^40.
pub fn factorize(n: &BigInt) -> Factorization {
    if n.is_zero() {
        return Factorization { sign: 0, factors: vec![] };
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.magnitude().clone();
    let mut raw: Vec<(BigUint, u32)> = Vec::new();

    // Wide phase: strip small primes until the cofactor fits u128. While
    // m > u128::MAX every trial prime is below √m, so there is no early exit.
    for &p in small_primes() {
        if m.to_u128().is_some() {
            break;
        }
        if (&m % p).is_zero() {
            let pb = BigUint::from(p);
            let mut e = 0u32;
            loop {
                let (q, r) = m.div_rem(&pb);
                if !r.is_zero() {
                    break;
                }
                m = q;
                e += 1;
            }
            raw.push((pb, e));
        }
    }
    match m.to_u128() {
        Some(v) => factorize_u128(v, &mut raw),
        None => {
            // Still wide with no factor below the trial bound.
            if !m.is_one() {
                let mut large = Vec::new();
                split_into_primes(m, &mut large);
                raw.extend(large.into_iter().map(|p| (p, 1)));
            }
        }
    }

    raw.sort_by(|a, b| a.0.cmp(&b.0));
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for (p, e) in raw {
        match factors.last_mut() {
            Some((q, acc)) if *q == p => *acc += e,
            _ => factors.push((p, e)),
        }
    }
    Factorization { sign, factors }
}

/// Machine-word phase of [`factorize`]: trial division with native
/// arithmetic, then rho on the survivors.
fn factorize_u128(mut m: u128, out: &mut Vec<(BigUint, u32)>) {
    if m <= 1 {
        return;
    }
    for &p in small_primes() {
        let p = p as u128;
        if p * p > m {
            break;
        }
        if m.is_multiple_of(p) {
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((BigUint::from(p), e));
        }
    }
    if m > 1 {
        let mut stack = vec![m];
        while let Some(v) = stack.pop() {
            let vb = BigUint::from(v);
            if is_prime(&vb) {
                out.push((vb, 1));
            } else {
                let d = pollard_rho(&vb).to_u128().expect("factor of a u128 value");
                stack.push(d);
                stack.push(v / d);
            }
        }
    }
}

/// Recursively splits `m` (free of primes < 10^6) into primes.
fn split_into_primes(m: BigUint, out: &mut Vec<BigUint>) {
    if m.is_one() {
        return;
    }
    if is_prime(&m) {
        out.push(m);
        return;
    }
    let d = pollard_rho(&m);
    let q = &m / &d;
    split_into_primes(d, out);
    split_into_primes(q, out);
}

/// Miller-Rabin primality test with fixed witnesses.
///
/// The first-twelve-primes base set is a proven deterministic test below
/// 3.317 · 10^24; the extra bases cover this crate's full value range with no
/// known pseudoprime.
pub fn is_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    const WITNESSES: [u32; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    for &w in &WITNESSES {
        let wb = BigUint::from(w);
        if *n == wb {
            return true;
        }
        if (n % &wb).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &w in &WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of an odd composite with Brent's cycle variant.
fn pollard_rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    if let Some(n128) = n.to_u128() {
        if n128 < (1u128 << 126) {
            return BigUint::from(pollard_rho_u128(n128));
        }
    }
    pollard_rho_big(n)
}

fn pollard_rho_big(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    for c in 1u32.. {
        let cb = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cb) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle collapsed, retry with the next polynomial
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && d != *n {
            return d;
        }
    }
    unreachable!("pollard rho exhausted polynomial choices")
}

// ---------------------------------------------------------------------------
// u128 fast path: Montgomery arithmetic with R = 2^128
// ---------------------------------------------------------------------------

fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let a_lo = a as u64 as u128;
    let a_hi = a >> 64;
    let b_lo = b as u64 as u128;
    let b_hi = b >> 64;
    let p0 = a_lo * b_lo;
    let p1 = a_lo * b_hi;
    let p2 = a_hi * b_lo;
    let p3 = a_hi * b_hi;
    let (mid, c1) = p1.overflowing_add(p2);
    let (lo, c2) = p0.overflowing_add(mid << 64);
    let hi = p3
        .wrapping_add(mid >> 64)
        .wrapping_add((c1 as u128) << 64)
        .wrapping_add(c2 as u128);
    (hi, lo)
}

/// Montgomery context for an odd modulus below 2^126.
struct Montgomery {
    n: u128,
    neg_inv: u128, // -n^{-1} mod 2^128
    r2: u128,      // 2^256 mod n
}

impl Montgomery {
    fn new(n: u128) -> Self {
        debug_assert!(n & 1 == 1 && n < (1 << 126));
        // Newton iteration doubles correct low bits each round.
        let mut inv: u128 = n;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        debug_assert_eq!(n.wrapping_mul(inv), 1);
        let r_modn = ((u128::MAX % n) + 1) % n; // 2^128 mod n
        let mut mont = Montgomery { n, neg_inv: inv.wrapping_neg(), r2: 0 };
        mont.r2 = mont.mulmod_schoolbook(r_modn, r_modn);
        mont
    }

    /// Bootstrap multiply used once to seed `r2`; shift-and-add, no division.
    fn mulmod_schoolbook(&self, mut a: u128, mut b: u128) -> u128 {
        let mut acc: u128 = 0;
        a %= self.n;
        while b > 0 {
            if b & 1 == 1 {
                acc = Self::addmod(acc, a, self.n);
            }
            a = Self::addmod(a, a, self.n);
            b >>= 1;
        }
        acc
    }

    fn addmod(a: u128, b: u128, n: u128) -> u128 {
        let s = a + b; // both < n < 2^126, no overflow
        if s >= n {
            s - n
        } else {
            s
        }
    }

    fn redc(&self, t_hi: u128, t_lo: u128) -> u128 {
        let m = t_lo.wrapping_mul(self.neg_inv);
        let (mn_hi, mn_lo) = mul_wide(m, self.n);
        let (_, carry) = t_lo.overflowing_add(mn_lo);
        let mut res = t_hi + mn_hi + carry as u128;
        if res >= self.n {
            res -= self.n;
        }
        res
    }

    fn to_mont(&self, a: u128) -> u128 {
        let (hi, lo) = mul_wide(a % self.n, self.r2);
        self.redc(hi, lo)
    }

    /// Product of Montgomery-form operands, in Montgomery form.
    fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        self.redc(hi, lo)
    }

    /// Leaves the Montgomery domain.
    fn retrieve(&self, a: u128) -> u128 {
        self.redc(0, a)
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

fn pollard_rho_u128(n: u128) -> u128 {
    debug_assert!(n & 1 == 1);
    let mont = Montgomery::new(n);
    for c in 1u128.. {
        let c_m = mont.to_mont(c);
        let step = |x: u128| Montgomery::addmod(mont.mul(x, x), c_m, n);
        let mut y = mont.to_mont(2);
        let mut d = 1u128;
        let (mut x, mut ys) = (y, y);
        let mut r: u64 = 1;
        let mut q = mont.to_mont(1);
        const BATCH: u64 = 128;
        'outer: while d == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k: u64 = 0;
            while k < r && d == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    let diff = x.abs_diff(y);
                    if diff == 0 {
                        break 'outer; // cycle collapsed within a batch
                    }
                    q = mont.mul(q, diff);
                }
                d = gcd_u128(mont.retrieve(q), n);
                k += BATCH;
            }
            r *= 2;
        }
        if d == n || d == 0 {
            // Batch overshot a factor collision; replay one step at a time.
            d = 1;
            while d == 1 {
                ys = step(ys);
                let diff = x.abs_diff(ys);
                if diff == 0 {
                    break;
                }
                d = gcd_u128(mont.retrieve(diff), n);
            }
        }
        if d != 1 && d != n && d != 0 {
            return d;
        }
    }
    unreachable!("pollard rho exhausted polynomial choices")
}
