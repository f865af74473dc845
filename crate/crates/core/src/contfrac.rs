//! Continued fractions of rationals and real quadratic irrationals.
//!
//! Quadratic irrationals are expanded exactly through the `(P, Q)` recurrence
//! for complete quotients `(P + √D) / Q`; periodicity is detected on those
//! integer states, so expansions always terminate with the minimal period.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{check_discriminant, is_square, isqrt};
use crate::{Error, Result};

/// The real number `(P + √D) / Q` with `D > 0` not a square and `Q | D - P²`.
#[derive(Debug, Clone)]
pub struct QuadraticIrrational {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

impl QuadraticIrrational {
    /// Builds `(p + √d) / q`, rescaling by `|q|` when `q ∤ d - p²`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut q, mut d) = (p.into(), q.into(), d.into());
        if q.is_zero() {
            return Err(Error::InvalidInput("denominator Q is zero".into()));
        }
        if !d.is_positive() || is_square(&d) {
            return Err(Error::InvalidInput(alloc::format!(
                "radicand {d} must be positive and not a perfect square"
            )));
        }
        if !(&d - &p * &p).is_multiple_of(&q) {
            let scale = q.abs();
            d *= &q * &q;
            p *= &scale;
            q *= &scale;
        }
        Ok(Self { p, q, d })
    }

    /// `√n` for a positive non-square `n`.
    pub fn sqrt(n: impl Into<BigInt>) -> Result<Self> {
        Self::new(0, 1, n)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn floor(&self) -> BigInt {
        floor_surd(&self.p, &self.q, &isqrt(&self.d))
    }

    /// The Galois conjugate `(P - √D) / Q`, rewritten as `(-P + √D) / (-Q)`.
    pub fn conjugate(&self) -> Self {
        Self {
            p: -&self.p,
            q: -&self.q,
            d: self.d.clone(),
        }
    }

    /// Value greater than 1 with conjugate in `(-1, 0)`.
    pub fn is_reduced(&self) -> bool {
        self.floor() >= BigInt::one() && self.conjugate().floor() == -BigInt::one()
    }

    /// `self - n` for an integer `n`.
    pub fn sub_integer(&self, n: &BigInt) -> Self {
        Self {
            p: &self.p - n * &self.q,
            q: self.q.clone(),
            d: self.d.clone(),
        }
    }

    /// Primitive `(A, B, C)` with `A > 0` and `A x² + B x + C = 0`.
    pub fn minimal_polynomial(&self) -> [BigInt; 3] {
        // Q x - P = √D  =>  Q² x² - 2PQ x + P² - D = 0
        let a = &self.q * &self.q;
        let b = -(&self.p * &self.q * BigInt::from(2));
        let c = &self.p * &self.p - &self.d;
        let g = a.gcd(&b).gcd(&c);
        [a / &g, b / &g, c / &g]
    }

    /// Evaluates the integer polynomial `A x² + B x + C` at `self`, returning `(r, s)` with value `r + s √D`.
    pub fn eval_quadratic(&self, coeffs: &[BigInt; 3]) -> (BigRational, BigRational) {
        let x_r = BigRational::new(self.p.clone(), self.q.clone());
        let x_s = BigRational::new(BigInt::one(), self.q.clone());
        let d = BigRational::from_integer(self.d.clone());
        let sq_r = &x_r * &x_r + &x_s * &x_s * &d;
        let sq_s = &x_r * &x_s * BigRational::from_integer(BigInt::from(2));
        let a = BigRational::from_integer(coeffs[0].clone());
        let b = BigRational::from_integer(coeffs[1].clone());
        let c = BigRational::from_integer(coeffs[2].clone());
        (&a * sq_r + &b * x_r + c, a * sq_s + b * x_s)
    }

    fn from_parts(r: &BigRational, s: &BigRational, radicand: &BigInt) -> Result<Self> {
        // r + s √Δ  with s ≠ 0
        let l = r.denom().lcm(s.denom());
        let rl = r.numer() * (&l / r.denom());
        let k = s.numer() * (&l / s.denom());
        let d = &k * &k * radicand;
        if k.is_positive() {
            Self::new(rl, l, d)
        } else {
            Self::new(-rl, -l, d)
        }
    }
}

impl PartialEq for QuadraticIrrational {
    fn eq(&self, other: &Self) -> bool {
        let (q1, q2) = (&self.q, &other.q);
        &self.p * q2 == &other.p * q1
            && &self.d * q2 * q2 == &other.d * q1 * q1
            && q1.is_positive() == q2.is_positive()
    }
}

impl Eq for QuadraticIrrational {}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            write!(f, "√{}", self.d)?;
        } else {
            write!(f, "({}+√{})", self.p, self.d)?;
        }
        if !self.q.is_one() {
            write!(f, "/{}", self.q)?;
        }
        Ok(())
    }
}

/// A real number that has an eventually periodic or finite expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadraticReal {
    Rational(BigRational),
    Irrational(QuadraticIrrational),
}

impl From<BigRational> for QuadraticReal {
    fn from(r: BigRational) -> Self {
        QuadraticReal::Rational(r)
    }
}

impl From<QuadraticIrrational> for QuadraticReal {
    fn from(x: QuadraticIrrational) -> Self {
        QuadraticReal::Irrational(x)
    }
}

impl fmt::Display for QuadraticReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadraticReal::Rational(r) => write!(f, "{r}"),
            QuadraticReal::Irrational(x) => write!(f, "{x}"),
        }
    }
}

fn floor_surd(p: &BigInt, q: &BigInt, s: &BigInt) -> BigInt {
    // √D irrational: ⌊(P + √D)/|Q|⌋ = ⌊(P + s)/|Q|⌋
    let n = p + s;
    if q.is_positive() {
        n.div_floor(q)
    } else {
        -n.div_floor(&-q) - 1
    }
}

/// Partial quotients of a quadratic irrational, together with the `(P, Q)` state.
#[derive(Debug, Clone)]
pub struct PartialQuotients {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    s: BigInt,
}

impl PartialQuotients {
    pub fn new(x: &QuadraticIrrational) -> Self {
        Self {
            p: x.p.clone(),
            q: x.q.clone(),
            d: x.d.clone(),
            s: isqrt(&x.d),
        }
    }

    /// `(P, Q)` of the complete quotient the next term is taken from.
    pub fn state(&self) -> (&BigInt, &BigInt) {
        (&self.p, &self.q)
    }
}

impl Iterator for PartialQuotients {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let a = floor_surd(&self.p, &self.q, &self.s);
        let p = &a * &self.q - &self.p;
        let q = (&self.d - &p * &p) / &self.q;
        self.p = p;
        self.q = q;
        Some(a)
    }
}

/// `[a_0; a_1, …, a_{m-1}, (c_1, …, c_L)]`: a preperiod followed by a repeating period.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
}

impl ContinuedFraction {
    /// Builds and normalises an expansion: the period is shrunk to its
    /// primitive word and absorbs matching preperiod terms; a finite expansion
    /// ending in 1 is folded into its canonical form (last entry ≥ 2).
    pub fn new(preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        for (i, a) in preperiod.iter().enumerate() {
            if i > 0 && !a.is_positive() {
                return Err(Error::InvalidInput(alloc::format!(
                    "partial quotient {a} at position {i} must be positive"
                )));
            }
        }
        if period.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidInput(
                "periodic partial quotients must be positive".into(),
            ));
        }
        if preperiod.is_empty() && period.is_empty() {
            return Err(Error::InvalidInput("empty continued fraction".into()));
        }
        let mut cf = Self { preperiod, period };
        cf.normalize();
        Ok(cf)
    }

    fn normalize(&mut self) {
        if self.period.is_empty() {
            let n = self.preperiod.len();
            if n > 1 && self.preperiod[n - 1].is_one() {
                self.preperiod.pop();
                *self.preperiod.last_mut().expect("n > 1") += 1;
            }
            return;
        }
        let l = self.period.len();
        if let Some(t) = (1..=l)
            .filter(|t| l % t == 0)
            .find(|&t| (0..l).all(|i| self.period[i] == self.period[i % t]))
        {
            self.period.truncate(t);
        }
        while let Some(last) = self.preperiod.last() {
            if last != self.period.last().expect("nonempty period") {
                break;
            }
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// Number of terms, or `None` for infinite expansions.
    pub fn finite_len(&self) -> Option<usize> {
        if self.is_periodic() {
            None
        } else {
            Some(self.preperiod.len())
        }
    }

    /// The `i`-th partial quotient with the period unrolled.
    pub fn term(&self, i: usize) -> Option<&BigInt> {
        if i < self.preperiod.len() {
            return Some(&self.preperiod[i]);
        }
        if self.period.is_empty() {
            return None;
        }
        let j = (i - self.preperiod.len()) % self.period.len();
        Some(&self.period[j])
    }

    /// Partial quotients in order, cycling through the period forever.
    pub fn terms(&self) -> impl Iterator<Item = &BigInt> + '_ {
        (0..).map_while(move |i| self.term(i))
    }

    /// The exact value the expansion represents.
    pub fn value(&self) -> Result<QuadraticReal> {
        if !self.is_periodic() {
            let mut acc = BigRational::from_integer(self.preperiod.last().expect("nonempty").clone());
            for a in self.preperiod.iter().rev().skip(1) {
                acc = BigRational::from_integer(a.clone()) + acc.recip();
            }
            return Ok(QuadraticReal::Rational(acc));
        }
        // y = [c_1; …, c_L, y]  =>  q y² + (q' - p) y - p' = 0
        let (p, p_prev, q, q_prev) = mobius(&self.period);
        let b = &p - &q_prev;
        let disc = &b * &b + &q * &p_prev * 4;
        let y = QuadraticIrrational::new(b, &q * 2, disc)?;
        if self.preperiod.is_empty() {
            return Ok(QuadraticReal::Irrational(y));
        }
        // x = (P y + P') / (Q y + Q') in Q(√Δ)
        let (pp, pp_prev, qq, qq_prev) = mobius(&self.preperiod);
        let yr = BigRational::new(y.p.clone(), y.q.clone());
        let ys = BigRational::new(BigInt::one(), y.q.clone());
        let delta = BigRational::from_integer(y.d.clone());
        let num_r = BigRational::from_integer(pp.clone()) * &yr + BigRational::from_integer(pp_prev);
        let num_s = BigRational::from_integer(pp) * &ys;
        let den_r = BigRational::from_integer(qq.clone()) * &yr + BigRational::from_integer(qq_prev);
        let den_s = BigRational::from_integer(qq) * &ys;
        // (a + b√Δ)/(c + e√Δ) = ((a c - b e Δ) + (b c - a e)√Δ) / (c² - e² Δ)
        let norm = &den_r * &den_r - &den_s * &den_s * &delta;
        let r = (&num_r * &den_r - &num_s * &den_s * &delta) / &norm;
        let s = (&num_s * &den_r - &num_r * &den_s) / &norm;
        Ok(QuadraticReal::Irrational(QuadraticIrrational::from_parts(
            &r, &s, &y.d,
        )?))
    }
}

/// `(p_n, p_{n-1}, q_n, q_{n-1})` for the word `a_0 … a_n`.
fn mobius(word: &[BigInt]) -> (BigInt, BigInt, BigInt, BigInt) {
    let (mut p, mut p_prev) = (BigInt::one(), BigInt::zero());
    let (mut q, mut q_prev) = (BigInt::zero(), BigInt::one());
    for a in word {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = core::mem::replace(&mut p, p_next);
        q_prev = core::mem::replace(&mut q, q_next);
    }
    (p, p_prev, q, q_prev)
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut rest = self.preperiod.iter();
        if let Some(a0) = rest.next() {
            write!(f, "{a0}")?;
        }
        f.write_str(";")?;
        let mut first = true;
        for a in rest {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
            first = false;
        }
        if self.is_periodic() {
            if !first {
                f.write_str(",")?;
            }
            f.write_str("(")?;
            for (i, a) in self.period.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        f.write_str("]")
    }
}

fn expand_rational(r: &BigRational) -> ContinuedFraction {
    let (mut n, mut d) = (r.numer().clone(), r.denom().clone());
    let mut terms = Vec::new();
    loop {
        let (a, rem) = n.div_mod_floor(&d);
        terms.push(a);
        if rem.is_zero() {
            break;
        }
        n = core::mem::replace(&mut d, rem);
    }
    ContinuedFraction {
        preperiod: terms,
        period: Vec::new(),
    }
}

fn expand_irrational(x: &QuadraticIrrational) -> ContinuedFraction {
    let mut seen: BTreeMap<(BigInt, BigInt), usize> = BTreeMap::new();
    let mut it = PartialQuotients::new(x);
    let mut terms = Vec::new();
    loop {
        let (p, q) = it.state();
        let key = (p.clone(), q.clone());
        if let Some(&start) = seen.get(&key) {
            let period = terms.split_off(start);
            return ContinuedFraction {
                preperiod: terms,
                period,
            };
        }
        seen.insert(key, terms.len());
        terms.push(it.next().expect("infinite iterator"));
    }
}

/// Continued fraction expansion: finite and canonical for rationals, preperiod
/// plus minimal period for quadratic irrationals.
pub fn cf_expand(x: &QuadraticReal) -> ContinuedFraction {
    match x {
        QuadraticReal::Rational(r) => expand_rational(r),
        QuadraticReal::Irrational(q) => expand_irrational(q),
    }
}

/// The first `count` convergents `p_k / q_k`.
pub fn convergents(cf: &ContinuedFraction, count: usize) -> Result<Vec<BigRational>> {
    if let Some(n) = cf.finite_len() {
        if count > n {
            return Err(Error::CountExceedsFiniteExpansion {
                requested: count,
                available: n,
            });
        }
    }
    let (mut p, mut p_prev) = (BigInt::one(), BigInt::zero());
    let (mut q, mut q_prev) = (BigInt::zero(), BigInt::one());
    Ok(cf
        .terms()
        .take(count)
        .map(|a| {
            let p_next = a * &p + &p_prev;
            let q_next = a * &q + &q_prev;
            p_prev = core::mem::replace(&mut p, p_next);
            q_prev = core::mem::replace(&mut q, q_next);
            BigRational::new_raw(p.clone(), q.clone())
        })
        .collect())
}

/// Whether `x` has an eventually periodic expansion, with the expansion as witness.
pub fn is_rm(x: &QuadraticReal) -> (bool, ContinuedFraction) {
    let cf = cf_expand(x);
    (cf.is_periodic(), cf)
}

pub type Block = [[BigInt; 2]; 2];

/// Blocks `[[a_i, 1], [1, 0]]` of the Bratteli diagram of an Effros–Shen algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliBlockSequence {
    pub blocks: Vec<Block>,
    pub periodic_tail_start: usize,
}

impl BratteliBlockSequence {
    pub fn determinants(&self) -> impl Iterator<Item = BigInt> + '_ {
        self.blocks
            .iter()
            .map(|m| &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0])
    }
}

pub fn bratteli_blocks(cf: &ContinuedFraction, count: usize) -> Result<BratteliBlockSequence> {
    if !cf.is_periodic() {
        return Err(Error::NotEventuallyPeriodic);
    }
    if let Some(a0) = cf.preperiod().first().filter(|a| a.is_negative()) {
        return Err(Error::OutOfDomain(alloc::format!(
            "leading partial quotient {a0} gives a block with a negative entry"
        )));
    }
    let blocks = cf
        .terms()
        .take(count)
        .map(|a| {
            [
                [a.clone(), BigInt::one()],
                [BigInt::one(), BigInt::zero()],
            ]
        })
        .collect();
    Ok(BratteliBlockSequence {
        blocks,
        periodic_tail_start: cf.preperiod().len(),
    })
}

/// True iff the two expansions share a tail, i.e. their periods are rotations of each other.
pub fn tail_equivalent(cf1: &ContinuedFraction, cf2: &ContinuedFraction) -> Result<bool> {
    if !cf1.is_periodic() || !cf2.is_periodic() {
        return Err(Error::NotEventuallyPeriodic);
    }
    let (u, v) = (cf1.period(), cf2.period());
    if u.len() != v.len() {
        return Ok(false);
    }
    Ok((0..u.len()).any(|r| (0..u.len()).all(|i| u[(i + r) % u.len()] == v[i])))
}

/// Smallest `x, y > 0` with `x² - D y² = ±4`; `(x + y√D) / 2` is the fundamental unit of the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalUnit {
    pub x: BigInt,
    pub y: BigInt,
    pub norm: i8,
}

pub fn fundamental_unit(d: &BigInt) -> Result<FundamentalUnit> {
    check_discriminant(d)?;
    if d.is_negative() {
        return Err(Error::InvalidDiscriminant(
            d.clone(),
            "fundamental units need a positive discriminant",
        ));
    }
    // Units u + v ω with ω = (σ + √D)/2 have u/v close to θ = (-σ + √D)/2.
    let sigma = if d.is_odd() {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    let theta = QuadraticIrrational::new(-&sigma, 2, d.clone())?;
    let cst = (&sigma * &sigma - d) / 4;
    let (mut p, mut p_prev) = (BigInt::one(), BigInt::zero());
    let (mut q, mut q_prev) = (BigInt::zero(), BigInt::one());
    for a in PartialQuotients::new(&theta) {
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = core::mem::replace(&mut p, p_next);
        q_prev = core::mem::replace(&mut q, q_next);
        let norm: BigInt = &p * &p + &sigma * &p * &q + &cst * &q * &q;
        if norm.is_one() || norm == -BigInt::one() {
            return Ok(FundamentalUnit {
                x: &p * 2 + &sigma * &q,
                y: q,
                norm: if norm.is_one() { 1 } else { -1 },
            });
        }
    }
    unreachable!("partial quotients never run out")
}

#[cfg(test)]
mod tests {
    use super::*;
    #[allow(unused_imports)]
    use alloc::{string::ToString, vec, vec::Vec};

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&n| b(n)).collect()
    }

    fn rat(n: i64, d: i64) -> QuadraticReal {
        QuadraticReal::Rational(BigRational::new(b(n), b(d)))
    }

    fn surd(p: i64, q: i64, d: i64) -> QuadraticReal {
        QuadraticReal::Irrational(QuadraticIrrational::new(p, q, d).unwrap())
    }

    fn cf(pre: &[i64], per: &[i64]) -> ContinuedFraction {
        ContinuedFraction::new(bs(pre), bs(per)).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(cf_expand(&rat(7, 3)), cf(&[2, 3], &[]));
        assert_eq!(cf_expand(&surd(0, 1, 2)), cf(&[1], &[2]));
        let golden = cf_expand(&surd(1, 2, 5));
        assert!(golden.preperiod().is_empty());
        assert_eq!(golden.period(), bs(&[1]));
        assert_eq!(cf_expand(&rat(-7, 3)), cf(&[-3, 1, 2], &[]));
        assert_eq!(cf_expand(&rat(5, 1)), cf(&[5], &[]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(cf(&[1], &[2]).to_string(), "[1;(2)]");
        assert_eq!(cf(&[], &[1]).to_string(), "[;(1)]");
        assert_eq!(cf(&[2, 3], &[]).to_string(), "[2;3]");
        assert_eq!(cf(&[1, 2], &[3, 4]).to_string(), "[1;2,(3,4)]");
    }

    #[test]
    fn normalisation() {
        // 1 + √2 = [2;(2)] = [(2)]
        let x = cf(&[2], &[2]);
        assert!(x.preperiod().is_empty());
        assert_eq!(x.period(), bs(&[2]));
        assert_eq!(cf(&[1], &[2, 2, 2]).period(), bs(&[2]));
        assert_eq!(cf(&[2, 2, 1], &[]), cf(&[2, 3], &[]));
        assert!(ContinuedFraction::new(bs(&[1, 0]), vec![]).is_err());
    }

    #[test]
    fn convergent_examples() {
        let r = |n: i64, d: i64| BigRational::new(b(n), b(d));
        assert_eq!(
            convergents(&cf(&[1], &[2]), 3).unwrap(),
            [r(1, 1), r(3, 2), r(7, 5)]
        );
        assert_eq!(
            convergents(&cf(&[0], &[1]), 4).unwrap(),
            [r(0, 1), r(1, 1), r(1, 2), r(2, 3)]
        );
        assert_eq!(convergents(&cf(&[2, 3], &[]), 2).unwrap(), [r(2, 1), r(7, 3)]);
        assert!(matches!(
            convergents(&cf(&[2, 3], &[]), 3),
            Err(Error::CountExceedsFiniteExpansion { requested: 3, available: 2 })
        ));
    }

    #[test]
    fn rm_examples() {
        assert!(is_rm(&surd(0, 1, 2)).0);
        assert!(!is_rm(&rat(7, 3)).0);
        let (periodic, w) = is_rm(&surd(3, 2, 7));
        assert!(periodic);
        let rotations: Vec<Vec<BigInt>> = (0..4)
            .map(|r| {
                let mut v = bs(&[1, 1, 1, 4]);
                v.rotate_left(r);
                v
            })
            .collect();
        assert!(rotations.iter().any(|v| v.as_slice() == w.period()));
    }

    #[test]
    fn block_examples() {
        let seq = bratteli_blocks(&cf(&[1], &[2]), 3).unwrap();
        let blk = |a: i64| [[b(a), b(1)], [b(1), b(0)]];
        assert_eq!(seq.blocks, [blk(1), blk(2), blk(2)]);
        assert_eq!(seq.periodic_tail_start, 1);
        let seq = bratteli_blocks(&cf(&[], &[1]), 2).unwrap();
        assert_eq!(seq.blocks, [blk(1), blk(1)]);
        assert_eq!(seq.periodic_tail_start, 0);
        assert!(seq.determinants().all(|d| d == b(-1)));
        assert_eq!(
            bratteli_blocks(&cf(&[2, 3], &[]), 1),
            Err(Error::NotEventuallyPeriodic)
        );
    }

    #[test]
    fn tail_examples() {
        let sqrt2 = cf_expand(&surd(0, 1, 2));
        let one_plus = cf_expand(&surd(1, 1, 2));
        let sqrt3 = cf_expand(&surd(0, 1, 3));
        assert!(tail_equivalent(&sqrt2, &one_plus).unwrap());
        assert!(!tail_equivalent(&sqrt2, &sqrt3).unwrap());
        assert!(tail_equivalent(&sqrt3, &sqrt3).unwrap());
        assert_eq!(
            tail_equivalent(&sqrt2, &cf(&[1], &[])),
            Err(Error::NotEventuallyPeriodic)
        );
    }

    #[test]
    fn unit_examples() {
        let u = |x: i64, y: i64, n: i8| FundamentalUnit {
            x: b(x),
            y: b(y),
            norm: n,
        };
        assert_eq!(fundamental_unit(&b(8)).unwrap(), u(2, 1, -1));
        assert_eq!(fundamental_unit(&b(12)).unwrap(), u(4, 1, 1));
        assert_eq!(fundamental_unit(&b(5)).unwrap(), u(1, 1, -1));
        assert_eq!(fundamental_unit(&b(40)).unwrap(), u(6, 1, -1));
        assert!(fundamental_unit(&b(-4)).is_err());
        assert!(fundamental_unit(&b(9)).is_err());
    }

    #[test]
    fn value_round_trip() {
        for x in [surd(0, 1, 2), surd(3, 2, 7), surd(1, 2, 5), surd(-5, 3, 11)] {
            let cf = cf_expand(&x);
            assert_eq!(cf.value().unwrap(), x);
        }
        assert_eq!(cf(&[2, 3], &[]).value().unwrap(), rat(7, 3));
    }

    #[test]
    fn canonicalisation_rescales() {
        // 3 ∤ 2 - 1, so (1 + √2)/3 is stored as (3 + √18)/9
        let x = QuadraticIrrational::new(1, 3, 2).unwrap();
        assert_eq!((x.p(), x.q(), x.d()), (&b(3), &b(9), &b(18)));
        assert_eq!(x, QuadraticIrrational::new(1, 3, 2).unwrap());
        assert!(QuadraticIrrational::new(1, 0, 2).is_err());
        assert!(QuadraticIrrational::new(1, 2, 9).is_err());
    }
}
