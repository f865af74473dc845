//! Integer matrices, their similarity classes, and Shafarevich–Tate group
//! formulas expressed through class groups.
//!
//! For a matrix with irreducible characteristic polynomial `p`, the
//! `GL(n, Z)` similarity classes with that polynomial are in bijection with
//! ideal classes of `Z[root of p]`. The exact pipeline here covers `n = 2`;
//! the brute-force classifier accepts any dimension.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::is_square;
use crate::contfrac::QuadraticIrrational;
use crate::quadforms::{two_part_decomposition, ClassGroup, ClassGroupStructure};
use crate::{Error, Result};

/// Square matrix with arbitrary-precision entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(dim: usize, entries: Vec<BigInt>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::InvalidInput(alloc::format!(
                "{} entries do not form a nonempty square matrix of dimension {dim}",
                entries.len()
            )));
        }
        Ok(Self { dim, entries })
    }

    /// Square matrix from row-major entries; the dimension is inferred.
    pub fn from_row_major<T: Into<BigInt>>(entries: impl IntoIterator<Item = T>) -> Result<Self> {
        let entries: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        let n = entries.len();
        let dim = (1..=n).find(|k| k * k >= n).filter(|k| k * k == n).ok_or_else(|| {
            Error::InvalidInput(alloc::format!("{n} entries do not form a square matrix"))
        })?;
        Self::new(dim, entries)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Self { dim: n, entries }
    }

    fn add_scalar(&mut self, c: &BigInt) {
        for i in 0..self.dim {
            self.entries[i * self.dim + i] += c;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.dim;
        let mut m = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k * n + k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = v / &prev;
                }
            }
            prev = m[k * n + k].clone();
        }
        sign * &m[n * n - 1]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Nonnegative with some power strictly positive (checked up to Wielandt's bound `(n-1)² + 1`).
    pub fn is_primitive(&self) -> bool {
        if !self.is_nonnegative() {
            return false;
        }
        let bound = (self.dim - 1) * (self.dim - 1) + 1;
        let mut power = self.clone();
        for _ in 0..bound {
            if power.entries.iter().all(Signed::is_positive) {
                return true;
            }
            power = power.mul(self);
        }
        false
    }

    fn to_small(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.dim {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Integer polynomial with coefficients listed from the highest degree down.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Leading zeros are stripped; the zero polynomial is rejected.
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Result<Self> {
        let coeffs: Vec<BigInt> = coeffs
            .into_iter()
            .map(Into::into)
            .skip_while(Zero::is_zero)
            .collect();
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("zero polynomial".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0].is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `b² - 4ac` of a quadratic.
    pub fn discriminant(&self) -> Result<BigInt> {
        match self.coeffs.as_slice() {
            [a, b, c] => Ok(b * b - a * c * 4),
            _ => Err(Error::InvalidInput(alloc::format!(
                "discriminant implemented for quadratics only, degree is {}",
                self.degree()
            ))),
        }
    }

    /// Companion matrix of a monic polynomial: ones below the diagonal, `-c_i` in the last column.
    pub fn companion(&self) -> Result<IntegerMatrix> {
        if !self.is_monic() || self.degree() == 0 {
            return Err(Error::InvalidInput("companion matrix needs a monic polynomial of positive degree".into()));
        }
        let n = self.degree();
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 1..n {
            entries[i * n + i - 1] = BigInt::one();
        }
        for i in 0..n {
            // coefficient of x^i sits at coeffs[n - i]
            entries[i * n + n - 1] = -&self.coeffs[n - i];
        }
        IntegerMatrix::new(n, entries)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if !mag.is_one() || power == 0 {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(x I - B)` by the Faddeev–LeVerrier recurrence
/// (all divisions are exact over Z).
pub fn char_poly(b: &IntegerMatrix) -> Polynomial {
    let n = b.dim();
    let mut coeffs = vec![BigInt::one()];
    let mut m = IntegerMatrix {
        dim: n,
        entries: vec![BigInt::zero(); n * n],
    };
    for k in 1..=n {
        m = b.mul(&m);
        m.add_scalar(coeffs.last().expect("nonempty"));
        let c = -b.mul(&m).trace() / BigInt::from(k);
        coeffs.push(c);
    }
    Polynomial { coeffs }
}

fn require_dim2(b: &IntegerMatrix) -> Result<()> {
    if b.dim() != 2 {
        return Err(Error::InvalidInput(alloc::format!(
            "the class-group pipeline needs a 2x2 matrix, got {0}x{0}",
            b.dim()
        )));
    }
    Ok(())
}

/// The dominant root `(tr + √Δ) / 2` of a primitive nonnegative 2×2 matrix.
pub fn perron_eigenvalue(b: &IntegerMatrix) -> Result<QuadraticIrrational> {
    require_dim2(b)?;
    if !b.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let disc = char_poly(b).discriminant()?;
    if is_square(&disc) {
        return Err(Error::ReducibleCharPoly);
    }
    QuadraticIrrational::new(b.trace(), 2, disc)
}

/// Class group of the order `Z[λ_B]`, whose discriminant is that of `char_poly(B)`.
///
/// This is the ideal class group (wide), which is what similarity classes
/// of matrices count.
pub fn ideal_classes_for_matrix(b: &IntegerMatrix) -> Result<ClassGroupStructure> {
    perron_eigenvalue(b)?;
    let disc = char_poly(b).discriminant()?;
    Ok(ClassGroup::new(&disc)?.wide()?.structure())
}

/// Shafarevich–Tate group computed from `Cl ≅ Z/2^k ⊕ Cl_odd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShaReport {
    pub k: u32,
    pub cl: ClassGroupStructure,
    pub sha: ClassGroupStructure,
}

impl ShaReport {
    pub fn sha_divisors(&self) -> &[u64] {
        self.sha.elementary_divisors()
    }

    pub fn sha_order(&self) -> u64 {
        self.sha.order()
    }
}

/// `Cl ⊕ Cl` when `k` is even, `Z/2^k ⊕ Cl_odd ⊕ Cl_odd` when `k` is odd.
pub fn sha_group(cl: &ClassGroupStructure) -> Result<ShaReport> {
    let (k, odd) = two_part_decomposition(cl)?;
    let sha = if k % 2 == 0 {
        ClassGroupStructure::from_cyclic_factors(
            cl.elementary_divisors()
                .iter()
                .chain(cl.elementary_divisors())
                .copied(),
        )
    } else {
        ClassGroupStructure::from_cyclic_factors(
            core::iter::once(1u64 << k)
                .chain(odd.elementary_divisors().iter().copied())
                .chain(odd.elementary_divisors().iter().copied()),
        )
    };
    Ok(ShaReport {
        k,
        cl: cl.clone(),
        sha,
    })
}

pub fn sha_for_curve_matrix(b: &IntegerMatrix) -> Result<ShaReport> {
    sha_group(&ideal_classes_for_matrix(b)?)
}

/// Limits for the brute-force conjugacy search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Matrices with all `|entries| <= entry_bound` are classified.
    pub entry_bound: u64,
    /// Longest conjugating word (in elementary generators) tried from each start.
    pub word_cap: u32,
    /// Intermediate matrices may have entries up to this bound.
    pub explore_bound: u64,
}

impl SearchConfig {
    pub const DEFAULT_WORD_CAP: u32 = 12;

    pub fn new(entry_bound: u64) -> Self {
        Self {
            entry_bound,
            word_cap: Self::DEFAULT_WORD_CAP,
            explore_bound: entry_bound.saturating_mul(4),
        }
    }
}

/// Result of brute-force `GL(n, Z)` classification of matrices sharing a characteristic polynomial.
#[derive(Debug, Clone)]
pub struct SimilarityClasses {
    pub config: SearchConfig,
    pub dim: usize,
    /// One representative per class (lexicographically least entries), sorted.
    pub representatives: Vec<IntegerMatrix>,
    /// Number of bounded matrices in each class, aligned with `representatives`.
    pub class_sizes: Vec<usize>,
    /// Every matrix reached during the search, mapped to its class index.
    known: BTreeMap<Vec<i64>, usize>,
}

impl SimilarityClasses {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    /// Class index of `m`, found by a breadth-first conjugation search of depth
    /// at most `max_depth` until a matrix seen during classification is met.
    pub fn class_of(&self, m: &IntegerMatrix, max_depth: u32) -> Option<usize> {
        if m.dim() != self.dim {
            return None;
        }
        let start = m.to_small()?;
        let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        let mut queue = VecDeque::from([(start.clone(), 0u32)]);
        seen.insert(start, ());
        while let Some((x, depth)) = queue.pop_front() {
            if let Some(&c) = self.known.get(&x) {
                return Some(c);
            }
            if depth == max_depth {
                continue;
            }
            for y in conjugates(&x, self.dim, i64::MAX / 4) {
                if seen.insert(y.clone(), ()).is_none() {
                    queue.push_back((y, depth + 1));
                }
            }
        }
        None
    }
}

/// Conjugates of `m` by the generators `I ± e_ij` and `diag(-1, 1, …)`, dropping any with an entry above `limit`.
fn conjugates(m: &[i64], n: usize, limit: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(2 * n * (n - 1) + 1);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for s in [1i64, -1] {
                // E = I + s e_ij: E M E^{-1} is row_i += s row_j, then col_j -= s col_i
                let mut x = m.to_vec();
                let mut ok = true;
                for k in 0..n {
                    match x[j * n + k].checked_mul(s).and_then(|v| x[i * n + k].checked_add(v)) {
                        Some(v) => x[i * n + k] = v,
                        None => ok = false,
                    }
                }
                for k in 0..n {
                    match x[k * n + i].checked_mul(s).and_then(|v| x[k * n + j].checked_sub(v)) {
                        Some(v) => x[k * n + j] = v,
                        None => ok = false,
                    }
                }
                if ok && x.iter().all(|v| v.abs() <= limit) {
                    out.push(x);
                }
            }
        }
    }
    // D M D with D = diag(-1, 1, …): negate row 0 and column 0 off the corner
    let mut x = m.to_vec();
    for k in 1..n {
        x[k] = -x[k];
        x[k * n] = -x[k * n];
    }
    out.push(x);
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        Self { parent: Vec::new() }
    }

    fn push(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// All matrices with characteristic polynomial `p` and entries in `[-bound, bound]`.
pub fn bounded_matrices(p: &Polynomial, bound: u64) -> Result<Vec<Vec<i64>>> {
    let n = p.degree();
    if !p.is_monic() || n == 0 {
        return Err(Error::InvalidInput("expected a monic polynomial of positive degree".into()));
    }
    let b = i64::try_from(bound).map_err(|_| Error::InvalidInput("entry bound too large".into()))?;
    if n == 2 {
        let small = |c: &BigInt| {
            c.to_i64()
                .ok_or_else(|| Error::InvalidInput(alloc::format!("coefficient {c} too large")))
        };
        let trace = -small(&p.coeffs()[1])?;
        let det = small(&p.coeffs()[2])?;
        let mut out = Vec::new();
        for a in -b..=b {
            let d = trace - a;
            if d.abs() > b {
                continue;
            }
            let qr = a * d - det;
            for q in -b..=b {
                if q == 0 {
                    if qr == 0 {
                        for r in -b..=b {
                            out.push(vec![a, 0, r, d]);
                        }
                    }
                    continue;
                }
                if qr % q == 0 && (qr / q).abs() <= b {
                    out.push(vec![a, q, qr / q, d]);
                }
            }
        }
        return Ok(out);
    }
    let side = 2 * bound + 1;
    let total = (n * n) as u32;
    if side.checked_pow(total).map_or(true, |t| t > 50_000_000) {
        return Err(Error::InvalidInput(alloc::format!(
            "{side}^{total} candidate matrices is too many for exhaustive search"
        )));
    }
    let mut out = Vec::new();
    let mut cur = vec![-b; n * n];
    loop {
        let m = IntegerMatrix::new(n, cur.iter().map(|&v| BigInt::from(v)).collect())?;
        if char_poly(&m) == *p {
            out.push(cur.clone());
        }
        let mut idx = 0;
        loop {
            if idx == cur.len() {
                return Ok(out);
            }
            if cur[idx] < b {
                cur[idx] += 1;
                break;
            }
            cur[idx] = -b;
            idx += 1;
        }
    }
}

/// Brute-force similarity classification with the default search limits.
pub fn similarity_class_count_bruteforce(p: &Polynomial, entry_bound: u64) -> Result<SimilarityClasses> {
    similarity_classes_with(p, SearchConfig::new(entry_bound))
}

/// Enumerates every matrix with characteristic polynomial `p` inside the entry
/// bound and merges those joined by conjugating words of length at most
/// `word_cap` whose intermediate matrices stay within `explore_bound`.
pub fn similarity_classes_with(p: &Polynomial, config: SearchConfig) -> Result<SimilarityClasses> {
    let n = p.degree();
    if n == 2 && is_square(&p.discriminant()?) {
        return Err(Error::ReducibleCharPoly);
    }
    let grid = bounded_matrices(p, config.entry_bound)?;
    if grid.is_empty() {
        return Err(Error::BoundTooSmall(config.entry_bound));
    }
    let limit = i64::try_from(config.explore_bound.max(config.entry_bound))
        .map_err(|_| Error::InvalidInput("explore bound too large".into()))?;

    let mut ids: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut uf = UnionFind::new();
    fn id_of(m: &[i64], ids: &mut BTreeMap<Vec<i64>, usize>, uf: &mut UnionFind) -> usize {
        *ids.entry(m.to_vec()).or_insert_with(|| uf.push())
    }
    for start in &grid {
        if ids.contains_key(start) {
            continue;
        }
        let root = id_of(start, &mut ids, &mut uf);
        let mut depth_of: BTreeMap<Vec<i64>, u32> = BTreeMap::new();
        depth_of.insert(start.clone(), 0);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(x) = queue.pop_front() {
            let depth = depth_of[&x];
            if depth == config.word_cap {
                continue;
            }
            for y in conjugates(&x, n, limit) {
                if depth_of.contains_key(&y) {
                    continue;
                }
                let known = ids.contains_key(&y);
                let id = id_of(&y, &mut ids, &mut uf);
                uf.union(root, id);
                depth_of.insert(y.clone(), depth + 1);
                // an already classified matrix brings its whole class along
                if !known {
                    queue.push_back(y);
                }
            }
        }
    }

    let mut class_index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut representatives: Vec<Vec<i64>> = Vec::new();
    let mut class_sizes = Vec::new();
    let mut sorted = grid.clone();
    sorted.sort();
    for m in &sorted {
        let r = uf.find(ids[m]);
        let idx = *class_index.entry(r).or_insert_with(|| {
            representatives.push(m.clone());
            class_sizes.push(0);
            representatives.len() - 1
        });
        class_sizes[idx] += 1;
    }
    let known = ids
        .into_iter()
        .filter_map(|(m, id)| {
            let r = uf.find(id);
            class_index.get(&r).map(|&c| (m, c))
        })
        .collect();
    let representatives = representatives
        .into_iter()
        .map(|m| IntegerMatrix::new(n, m.into_iter().map(BigInt::from).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(SimilarityClasses {
        config,
        dim: n,
        representatives,
        class_sizes,
        known,
    })
}
