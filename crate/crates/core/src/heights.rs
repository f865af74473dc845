//! Question-mark function, heights, and point counting.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{cf_expand, QuadraticReal};
use crate::{Error, Result};

fn pow2(e: &BigInt) -> BigInt {
    let e = u32::try_from(e).expect("exponent fits in u32");
    BigInt::one() << e
}

/// `2^e` as a rational for any integer `e`.
fn pow2_rational(e: &BigInt) -> BigRational {
    if e.is_negative() {
        BigRational::new(BigInt::one(), pow2(&-e))
    } else {
        BigRational::from_integer(pow2(e))
    }
}

/// Minkowski's `?` on `[0, 1]`, evaluated exactly from the continued fraction
/// `[a_0; a_1, a_2, …]` as `a_0 + Σ_k (-1)^{k+1} 2^{1 - (a_1 + … + a_k)}`.
/// The periodic tail of a quadratic irrational sums as a geometric series.
pub fn minkowski_q(x: &QuadraticReal) -> Result<BigRational> {
    let in_domain = match x {
        QuadraticReal::Rational(r) => !r.is_negative() && *r <= BigRational::one(),
        QuadraticReal::Irrational(q) => q.floor().is_zero(),
    };
    if !in_domain {
        return Err(Error::OutOfDomain(alloc::format!("{x} is not in [0, 1]")));
    }
    let cf = cf_expand(x);
    let a0 = cf.term(0).expect("nonempty expansion").clone();
    let mut sum = BigRational::from_integer(a0);
    let mut exponent = BigInt::one(); // 1 - (a_1 + … + a_k)
    let mut sign = BigRational::one();
    for a in cf.preperiod().iter().skip(1) {
        exponent -= a;
        sum += &sign * pow2_rational(&exponent);
        sign = -sign;
    }
    if cf.is_periodic() {
        // one period contributes T, the next r T, … with r = (-1)^L 2^{-C}
        let mut block = BigRational::zero();
        let mut e = exponent.clone();
        let mut s = sign.clone();
        for c in cf.period() {
            e -= c;
            block += &s * pow2_rational(&e);
            s = -s;
        }
        let total: BigInt = cf.period().iter().sum();
        let mut ratio = pow2_rational(&-total);
        if cf.period().len() % 2 == 1 {
            ratio = -ratio;
        }
        sum += block / (BigRational::one() - ratio);
    }
    Ok(sum)
}

/// A point of `P^n(Q)`: coprime integer coordinates, first nonzero one positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<BigInt>,
}

impl ProjectivePoint {
    pub fn new<T: Into<BigInt>>(coords: impl IntoIterator<Item = T>) -> Result<Self> {
        let mut coords: Vec<BigInt> = coords.into_iter().map(Into::into).collect();
        let g = coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(Error::InvalidInput(
                "projective point needs a nonzero coordinate".into(),
            ));
        }
        let lead_negative = coords.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative);
        for c in &mut coords {
            *c /= &g;
            if lead_negative {
                *c = -&*c;
            }
        }
        Ok(Self { coords })
    }

    /// The point `(1 : r_1 : … : r_n)` with denominators cleared.
    pub fn from_affine(values: &[BigRational]) -> Self {
        let l = values
            .iter()
            .fold(BigInt::one(), |l, r| l.lcm(r.denom()));
        let coords = core::iter::once(l.clone())
            .chain(values.iter().map(|r| r.numer() * (&l / r.denom())))
            .collect::<Vec<_>>();
        Self::new(coords).expect("leading coordinate is nonzero")
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len() - 1
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `max |x_i|` of the canonical coordinates.
pub fn projective_height(p: &ProjectivePoint) -> BigInt {
    p.coords.iter().map(Signed::abs).max().expect("nonempty")
}

/// Reduces `x` into `[0, 1)`.
pub fn fractional_part(x: &QuadraticReal) -> QuadraticReal {
    match x {
        QuadraticReal::Rational(r) => QuadraticReal::Rational(r - r.floor()),
        QuadraticReal::Irrational(q) => QuadraticReal::Irrational(q.sub_integer(&q.floor())),
    }
}

/// `H(1, ?(θ_1), …, ?(θ_n))`, each `θ_i` first reduced mod 1.
pub fn quantum_height(theta: &[QuadraticReal]) -> Result<BigInt> {
    Ok(projective_height(&quantum_point(theta)?))
}

/// The point `(1 : ?(θ_1) : … : ?(θ_n))` whose height is the quantum height.
pub fn quantum_point(theta: &[QuadraticReal]) -> Result<ProjectivePoint> {
    let values = theta
        .iter()
        .map(|t| minkowski_q(&fractional_part(t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProjectivePoint::from_affine(&values))
}

/// Number of heights in `heights` that are at most `bound`.
pub fn counting_function<I>(heights: I, bound: &BigInt) -> usize
where
    I: IntoIterator<Item = BigInt>,
{
    heights.into_iter().filter(|h| h <= bound).count()
}

/// Canonical points of `P^n(Q)` with height at most `bound`, in lexicographic
/// order of their integer coordinates.
pub fn projective_points(n: usize, bound: u64) -> ProjectivePoints {
    ProjectivePoints::new(n, bound, None)
}

/// Like [`projective_points`], restricted to points whose first nonzero coordinate is `lead`
/// at position 0 (or, for `lead = 0`, points with `x_0 = 0`).
pub fn projective_points_with_x0(n: usize, bound: u64, x0: u64) -> ProjectivePoints {
    ProjectivePoints::new(n, bound, Some(x0))
}

/// Iterator over canonical integer tuples of bounded height.
#[derive(Debug, Clone)]
pub struct ProjectivePoints {
    bound: i64,
    x0: Option<i64>,
    cur: Option<Vec<i64>>,
}

impl ProjectivePoints {
    fn new(n: usize, bound: u64, x0: Option<u64>) -> Self {
        let bound = i64::try_from(bound).expect("bound fits in i64");
        let x0 = x0.map(|v| i64::try_from(v).expect("coordinate fits in i64"));
        let mut start = vec![-bound; n + 1];
        start[0] = x0.unwrap_or(0);
        let cur = (bound > 0 && x0.map_or(true, |v| v <= bound)).then_some(start);
        Self { bound, x0, cur }
    }

    fn advance(&mut self) {
        let Some(cur) = self.cur.as_mut() else { return };
        let mut i = cur.len() - 1;
        loop {
            let lower = if i == 0 { 0 } else { -self.bound };
            if cur[i] < self.bound && !(i == 0 && self.x0.is_some()) {
                cur[i] += 1;
                for v in cur.iter_mut().skip(i + 1) {
                    *v = -self.bound;
                }
                return;
            }
            cur[i] = lower;
            if i == 0 {
                self.cur = None;
                return;
            }
            i -= 1;
        }
    }
}

impl Iterator for ProjectivePoints {
    type Item = ProjectivePoint;

    fn next(&mut self) -> Option<ProjectivePoint> {
        loop {
            let cur = self.cur.clone()?;
            self.advance();
            let lead = cur.iter().find(|&&v| v != 0);
            if lead.is_some_and(|&v| v > 0) && cur.iter().fold(0i64, |g, &v| g.gcd(&v)) == 1 {
                return Some(ProjectivePoint::new(cur).expect("nonzero"));
            }
        }
    }
}

/// `N(P^n(Q), T)` by exhaustive enumeration.
pub fn count_projective_points(n: usize, bound: u64) -> usize {
    projective_points(n, bound).count()
}

/// Rationals in `[0, 1)` whose quantum height `H(1, ?(θ))` is at most `bound`,
/// found by walking the Stern–Brocot tree (`?` doubles the height at each level).
pub fn quantum_rationals(bound: &BigInt) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    let zero = BigRational::zero();
    if quantum_height(&[QuadraticReal::Rational(zero.clone())])? <= *bound {
        out.push(zero);
    }
    // (left, right) neighbours of the mediant still to visit
    let mut stack = vec![((BigInt::zero(), BigInt::one()), (BigInt::one(), BigInt::one()))];
    while let Some(((ln, ld), (rn, rd))) = stack.pop() {
        let (mn, md) = (&ln + &rn, &ld + &rd);
        let m = BigRational::new(mn.clone(), md.clone());
        if quantum_height(&[QuadraticReal::Rational(m.clone())])? > *bound {
            continue;
        }
        out.push(m);
        stack.push(((mn.clone(), md.clone()), (rn, rd)));
        stack.push(((ln, ld), (mn, md)));
    }
    out.sort();
    Ok(out)
}

/// `N(T)` for points `(1 : θ_1 : … : θ_n)` with rational `θ_i ∈ [0, 1)` counted by quantum height.
pub fn count_quantum_points(n: usize, bound: &BigInt) -> Result<usize> {
    let line = quantum_rationals(bound)?;
    let mut count = 0usize;
    let mut idx = vec![0usize; n];
    if line.is_empty() {
        return Ok(0);
    }
    loop {
        let theta: Vec<QuadraticReal> = idx
            .iter()
            .map(|&i| QuadraticReal::Rational(line[i].clone()))
            .collect();
        if quantum_height(&theta)? <= *bound {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(count);
            }
            idx[k] += 1;
            if idx[k] < line.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Asymptotic shape of `log_2 N(V(k), T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrowthRegime {
    /// `∼ T^n`, when `rk K_0 < n + 1`.
    ExponentialInTn,
    /// `∼ n log_2 T`, when `rk K_0 = n + 1`.
    PolynomialDegreeN,
    /// Bounded, when `rk K_0 > n + 1`.
    Bounded,
}

impl fmt::Display for GrowthRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrowthRegime::ExponentialInTn => "exponential-in-T^n",
            GrowthRegime::PolynomialDegreeN => "polynomial-degree-n",
            GrowthRegime::Bounded => "bounded",
        })
    }
}

/// Dimension, Betti numbers and `K_0` rank of a projective variety.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarietyProfile {
    n: u32,
    moduli_dim: Option<u32>,
    betti: Vec<u64>,
    rank_k0: u32,
}

impl VarietyProfile {
    /// Profile with `rk K_0 = 2 m`, `m` the moduli dimension.
    pub fn from_moduli(n: u32, m: u32, betti: Vec<u64>) -> Result<Self> {
        let rank_k0 = m
            .checked_mul(2)
            .ok_or_else(|| Error::InvalidInput("moduli dimension too large".into()))?;
        Self::build(n, Some(m), betti, rank_k0)
    }

    /// Profile with an explicitly given rank (which need not be even).
    pub fn with_rank(n: u32, rank_k0: u32, betti: Vec<u64>) -> Result<Self> {
        Self::build(n, None, betti, rank_k0)
    }

    fn build(n: u32, moduli_dim: Option<u32>, betti: Vec<u64>, rank_k0: u32) -> Result<Self> {
        if betti.len() != 2 * n as usize + 1 {
            return Err(Error::InvalidInput(alloc::format!(
                "a variety of dimension {n} has {} Betti numbers, got {}",
                2 * n + 1,
                betti.len()
            )));
        }
        Ok(Self {
            n,
            moduli_dim,
            betti,
            rank_k0,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn moduli_dim(&self) -> Option<u32> {
        self.moduli_dim
    }

    pub fn betti(&self) -> &[u64] {
        &self.betti
    }

    pub fn rank_k0(&self) -> u32 {
        self.rank_k0
    }
}

pub fn growth_regime(profile: &VarietyProfile) -> GrowthRegime {
    match u64::from(profile.rank_k0).cmp(&(u64::from(profile.n) + 1)) {
        core::cmp::Ordering::Less => GrowthRegime::ExponentialInTn,
        core::cmp::Ordering::Equal => GrowthRegime::PolynomialDegreeN,
        core::cmp::Ordering::Greater => GrowthRegime::Bounded,
    }
}

/// `β_1 + β_3 + … + β_{2n-1} > n + 1`.
pub fn finiteness_check(profile: &VarietyProfile) -> bool {
    let odd: u64 = (1..=profile.n as usize)
        .map(|i| profile.betti[2 * i - 1])
        .sum();
    odd > u64::from(profile.n) + 1
}
