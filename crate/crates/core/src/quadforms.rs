//! Binary quadratic forms, reduction, Gauss composition and class groups.
//!
//! Primitive forms of discriminant `D = f² d_K` under proper equivalence
//! model the (narrow) invertible ideal classes of the order of conductor `f`
//! in `Q(√d_K)`. Definite discriminants use positive definite forms only.
//! Indefinite classes are reduction cycles; each cycle is represented by its
//! lexicographically smallest `(a, b)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{self, check_discriminant, gcd3, isqrt, xgcd};
use crate::{Error, Result};

/// The form `a x² + b x y + c y²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryQuadraticForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl BinaryQuadraticForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    /// The form `(a, b, (b² - D) / 4a)`; `None` unless `4a` divides `b² - D`.
    pub fn from_discriminant(a: BigInt, b: BigInt, d: &BigInt) -> Option<Self> {
        if a.is_zero() {
            return None;
        }
        let num = &b * &b - d;
        let den = &a * 4;
        if !num.is_multiple_of(&den) {
            return None;
        }
        let c = num / den;
        Some(Self { a, b, c })
    }

    /// Principal form of discriminant `D`: `(1, 0, -D/4)` or `(1, 1, (1 - D)/4)`.
    pub fn principal(d: &BigInt) -> Result<Self> {
        check_discriminant(d)?;
        let b = if d.is_even() {
            BigInt::zero()
        } else {
            BigInt::one()
        };
        Ok(Self::from_discriminant(BigInt::one(), b, d).expect("D ≡ b² mod 4"))
    }

    pub fn discriminant(&self) -> BigInt {
        &self.b * &self.b - &self.a * &self.c * 4
    }

    pub fn content(&self) -> BigInt {
        gcd3(&self.a, &self.b, &self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// The opposite form `(a, -b, c)`, representing the inverse class.
    pub fn inverse(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.c.clone())
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// Reducedness in the sense used by [`reduce_form`] for the sign of `D`.
    pub fn is_reduced(&self) -> bool {
        let d = self.discriminant();
        if d.is_negative() {
            let abs_b = self.b.abs();
            self.a.is_positive()
                && abs_b <= self.a
                && self.a <= self.c
                && (!(abs_b == self.a || self.a == self.c) || !self.b.is_negative())
        } else if d.is_positive() {
            is_reduced_indefinite(self, &isqrt(&d))
        } else {
            false
        }
    }

    fn validate(&self) -> Result<BigInt> {
        let d = self.discriminant();
        if d.is_zero() {
            return Err(Error::InvalidDiscriminant(d, "zero"));
        }
        if arith::is_square(&d) {
            return Err(Error::SquareDiscriminant(d));
        }
        let g = self.content();
        if !g.is_one() {
            return Err(Error::NonPrimitiveForm { gcd: g });
        }
        if d.is_negative() && !self.a.is_positive() {
            return Err(Error::InvalidInput(alloc::format!(
                "negative definite form {self}; use the positive definite representative"
            )));
        }
        Ok(d)
    }
}

impl fmt::Display for BinaryQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Narrow (proper form classes) or wide (ideal classes of the ring).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Narrow,
    Wide,
}

/// The order `Z + f O_K` of discriminant `f² d_K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticOrder {
    fundamental_discriminant: BigInt,
    conductor: BigInt,
    discriminant: BigInt,
}

impl QuadraticOrder {
    pub fn new(fundamental_discriminant: BigInt, conductor: BigInt) -> Result<Self> {
        if !conductor.is_positive() {
            return Err(Error::InvalidInput(alloc::format!(
                "conductor must be positive, got {conductor}"
            )));
        }
        if !arith::is_fundamental_discriminant(&fundamental_discriminant) {
            return Err(Error::InvalidDiscriminant(
                fundamental_discriminant,
                "not a fundamental discriminant",
            ));
        }
        let discriminant = &conductor * &conductor * &fundamental_discriminant;
        Ok(Self {
            fundamental_discriminant,
            conductor,
            discriminant,
        })
    }

    pub fn from_discriminant(d: &BigInt) -> Result<Self> {
        let (fundamental_discriminant, conductor) = arith::split_discriminant(d)?;
        Ok(Self {
            fundamental_discriminant,
            conductor,
            discriminant: d.clone(),
        })
    }

    pub fn fundamental_discriminant(&self) -> &BigInt {
        &self.fundamental_discriminant
    }

    pub fn conductor(&self) -> &BigInt {
        &self.conductor
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    pub fn is_maximal(&self) -> bool {
        self.conductor.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.discriminant.is_positive()
    }
}

/// A finite abelian group `Z/d_1 ⊕ … ⊕ Z/d_r` with `d_1 | d_2 | … | d_r`, all `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassGroupStructure {
    elementary_divisors: Vec<u64>,
    order: u64,
}

impl ClassGroupStructure {
    pub fn trivial() -> Self {
        Self {
            elementary_divisors: Vec::new(),
            order: 1,
        }
    }

    /// Normal form of a direct sum of cyclic groups of the given orders.
    pub fn from_cyclic_factors<I: IntoIterator<Item = u64>>(factors: I) -> Self {
        // prime -> exponents of the prime-power pieces
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for n in factors {
            assert!(n > 0, "cyclic factor of order zero");
            for (p, e) in factor_u64(n) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let rank = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut divisors = vec![1u64; rank];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|x, y| y.cmp(x));
            // largest exponent goes to the last (largest) invariant factor
            for (i, e) in exps.into_iter().enumerate() {
                divisors[rank - 1 - i] *= p.pow(e);
            }
        }
        let order = divisors.iter().product();
        Self {
            elementary_divisors: divisors,
            order,
        }
    }

    pub fn elementary_divisors(&self) -> &[u64] {
        &self.elementary_divisors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn is_reduced_indefinite(f: &BinaryQuadraticForm, s: &BigInt) -> bool {
    // |√D - 2|a|| < b < √D, with √D irrational and s = ⌊√D⌋
    let two_a = f.a.abs() * 2;
    f.b <= *s && &f.b + &two_a > *s && &two_a - &f.b <= *s
}

/// `b' ≡ b (mod 2|c|)` in the window that makes `rho` land on reduced forms.
fn normalize_indefinite(b: &BigInt, c: &BigInt, s: &BigInt) -> BigInt {
    let two_c = c.abs() * 2;
    if c.abs() > *s {
        let mut r = b.mod_floor(&two_c);
        if r > c.abs() {
            r -= &two_c;
        }
        r
    } else {
        // √D - 2|c| < b' < √D  <=>  s - 2|c| + 1 <= b' <= s
        let low: BigInt = s - &two_c + 1;
        let r = (b - &low).mod_floor(&two_c);
        low + r
    }
}

/// One step of the reduction operator for indefinite forms.
fn rho(f: &BinaryQuadraticForm, d: &BigInt, s: &BigInt) -> BinaryQuadraticForm {
    let b = normalize_indefinite(&-&f.b, &f.c, s);
    let c = (&b * &b - d) / (&f.c * 4);
    BinaryQuadraticForm::new(f.c.clone(), b, c)
}

fn reduce_definite(f: &BinaryQuadraticForm, d: &BigInt) -> BinaryQuadraticForm {
    let (mut a, mut b, mut c) = (f.a.clone(), f.b.clone(), f.c.clone());
    loop {
        let two_a = &a * 2;
        if !(-&a < b && b <= a) {
            let mut r = b.mod_floor(&two_a);
            if r > a {
                r -= &two_a;
            }
            b = r;
            c = (&b * &b - d) / (&a * 4);
        }
        if a > c {
            core::mem::swap(&mut a, &mut c);
            b = -b;
            continue;
        }
        break;
    }
    if a == c && b.is_negative() {
        b = -b;
    }
    BinaryQuadraticForm { a, b, c }
}

/// Reduces a primitive form to an equivalent reduced one.
///
/// Definite forms reach the unique reduced representative
/// (`|b| ≤ a ≤ c`, `b ≥ 0` when `|b| = a` or `a = c`). Indefinite forms reach
/// some form of their reduction cycle (`|√D - 2|a|| < b < √D`).
pub fn reduce_form(form: &BinaryQuadraticForm) -> Result<BinaryQuadraticForm> {
    let d = form.validate()?;
    if d.is_negative() {
        return Ok(reduce_definite(form, &d));
    }
    let s = isqrt(&d);
    let mut f = form.clone();
    while !is_reduced_indefinite(&f, &s) {
        f = rho(&f, &d, &s);
    }
    Ok(f)
}

/// The reduction cycle of a reduced indefinite form, starting at `form`.
pub fn reduction_cycle(form: &BinaryQuadraticForm) -> Result<Vec<BinaryQuadraticForm>> {
    let d = form.validate()?;
    if d.is_negative() {
        return Err(Error::InvalidInput(alloc::format!(
            "reduction cycles exist only for indefinite forms, D = {d}"
        )));
    }
    let s = isqrt(&d);
    let start = reduce_form(form)?;
    let mut cycle = vec![start.clone()];
    let mut f = rho(&start, &d, &s);
    while f != start {
        cycle.push(f.clone());
        f = rho(&f, &d, &s);
    }
    Ok(cycle)
}

/// Canonical representative of the proper equivalence class of `form`.
pub fn class_representative(form: &BinaryQuadraticForm) -> Result<BinaryQuadraticForm> {
    let d = form.validate()?;
    if d.is_negative() {
        return Ok(reduce_definite(form, &d));
    }
    Ok(cycle_minimum(reduction_cycle(form)?))
}

fn cycle_minimum(cycle: Vec<BinaryQuadraticForm>) -> BinaryQuadraticForm {
    cycle
        .into_iter()
        .min_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)))
        .expect("cycles are nonempty")
}

fn definite_order(f: &BinaryQuadraticForm) -> (BigInt, BigInt, bool) {
    (f.a.clone(), f.b.abs(), f.b.is_negative())
}

/// One representative per proper class of primitive forms of discriminant `D`.
///
/// Definite: every reduced positive definite form, sorted by `(a, |b|)` with
/// positive `b` first. Indefinite: the minimal form of every reduction cycle,
/// sorted by `(a, b)`.
pub fn enumerate_reduced_forms(d: &BigInt) -> Result<Vec<BinaryQuadraticForm>> {
    check_discriminant(d)?;
    if d.is_negative() {
        let mut out = Vec::new();
        let a_max = isqrt(&(-d / 3));
        let mut a = BigInt::one();
        while a <= a_max {
            let mut b: BigInt = -&a + 1;
            while b <= a {
                if let Some(f) = BinaryQuadraticForm::from_discriminant(a.clone(), b.clone(), d) {
                    if f.is_reduced() && f.is_primitive() {
                        out.push(f);
                    }
                }
                b += 1;
            }
            a += 1;
        }
        out.sort_by_key(definite_order);
        return Ok(out);
    }

    let s = isqrt(d);
    let mut reduced = Vec::new();
    let mut b = if d.is_odd() {
        BigInt::one()
    } else {
        BigInt::from(2)
    };
    while b <= s {
        let n: BigInt = (d - &b * &b) / 4;
        let a_max: BigInt = (&s + &b) / 2;
        let mut a_abs = BigInt::one();
        while a_abs <= a_max {
            if n.is_multiple_of(&a_abs) {
                for a in [a_abs.clone(), -&a_abs] {
                    let c = -&n / &a;
                    let f = BinaryQuadraticForm::new(a, b.clone(), c);
                    if is_reduced_indefinite(&f, &s) && f.is_primitive() {
                        reduced.push(f);
                    }
                }
            }
            a_abs += 1;
        }
        b += 2;
    }

    let mut seen: BTreeMap<BinaryQuadraticForm, ()> = BTreeMap::new();
    let mut reps = Vec::new();
    for f in reduced {
        if seen.contains_key(&f) {
            continue;
        }
        let cycle = reduction_cycle(&f)?;
        for g in &cycle {
            seen.insert(g.clone(), ());
        }
        reps.push(cycle_minimum(cycle));
    }
    reps.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
    Ok(reps)
}

/// Class number of the order of discriminant `D = f² d_K`.
///
/// `Narrow` counts proper form classes. `Wide` counts ideal classes: equal to
/// the narrow count for `D < 0` or when the order has a unit of norm `-1`,
/// half of it otherwise.
///
/// Maximal orders are counted directly with [`class_number_by_forms`]; for
/// `f > 1` the count is lifted from the maximal order through
/// `h(O_f) = h(O_K) · f · Π_{p | f} (1 - (d_K/p)/p) / [O_K^* : O_f^*]`.
pub fn class_number(d: &BigInt, flavor: Flavor) -> Result<u64> {
    let order = QuadraticOrder::from_discriminant(d)?;
    if order.is_maximal() {
        return class_number_by_forms(d, flavor);
    }
    let d_k = order.fundamental_discriminant();
    let f = order.conductor();
    let h_k = BigInt::from(class_number_by_forms(d_k, Flavor::Wide)?);
    let mut num = h_k * f;
    let mut den = BigInt::one();
    for (p, _) in arith::factor(f) {
        num *= &p - arith::kronecker_prime(d_k, &p);
        den *= p;
    }
    let (index, order_unit_norm) = unit_index(d_k, f)?;
    den *= index;
    debug_assert!(num.is_multiple_of(&den));
    let wide = num / den;
    let h = match flavor {
        Flavor::Narrow if d.is_positive() && order_unit_norm > 0 => wide * 2,
        _ => wide,
    };
    h.to_u64()
        .ok_or_else(|| Error::InvalidInput(alloc::format!("class number of {d} overflows u64")))
}

/// `[O_K^* : O_f^*]` and the norm of the fundamental unit of `O_f`.
fn unit_index(d_k: &BigInt, f: &BigInt) -> Result<(BigInt, i8)> {
    if d_k.is_negative() {
        let index = match i64::try_from(d_k).ok() {
            Some(-3) => 3,
            Some(-4) => 2,
            _ => 1,
        };
        return Ok((BigInt::from(index), 1));
    }
    // ε = u + v ω with ω = (σ + √d_K)/2, ω² = σ ω + c; ε^n ∈ Z + f O_K iff f | v_n
    let unit = crate::contfrac::fundamental_unit(d_k)?;
    let sigma = if d_k.is_odd() { BigInt::one() } else { BigInt::zero() };
    let c: BigInt = (d_k - &sigma * &sigma) / 4;
    let u1: BigInt = (&unit.x - &sigma * &unit.y) / 2;
    let u1 = u1.mod_floor(f);
    let v1 = unit.y.mod_floor(f);
    let (mut u, mut v) = (u1.clone(), v1.clone());
    let mut n = BigInt::one();
    while !v.is_zero() {
        let nu = (&u * &u1 + &v * &v1 * &c).mod_floor(f);
        let nv = (&u * &v1 + &u1 * &v + &sigma * &v * &v1).mod_floor(f);
        (u, v) = (nu, nv);
        n += 1;
    }
    let norm = if unit.norm < 0 && n.is_odd() { -1 } else { 1 };
    Ok((n, norm))
}

/// Class number read off from [`enumerate_reduced_forms`] (and, for `Wide`
/// with `D > 0`, the norm of the fundamental unit of the order).
pub fn class_number_by_forms(d: &BigInt, flavor: Flavor) -> Result<u64> {
    let narrow = enumerate_reduced_forms(d)?.len() as u64;
    Ok(wide_from_narrow(d, narrow, flavor))
}

pub(crate) fn wide_from_narrow(d: &BigInt, narrow: u64, flavor: Flavor) -> u64 {
    match flavor {
        Flavor::Narrow => narrow,
        Flavor::Wide if d.is_negative() => narrow,
        Flavor::Wide => {
            let unit = crate::contfrac::fundamental_unit(d).expect("validated discriminant");
            if unit.norm < 0 {
                narrow
            } else {
                narrow / 2
            }
        }
    }
}

/// Gauss composition, returned as the canonical class representative.
pub fn compose(
    f1: &BinaryQuadraticForm,
    f2: &BinaryQuadraticForm,
) -> Result<BinaryQuadraticForm> {
    let d1 = f1.validate()?;
    let d2 = f2.validate()?;
    if d1 != d2 {
        return Err(Error::DiscriminantMismatch(d1, d2));
    }
    class_representative(&compose_unreduced(f1, f2, &d1))
}

/// Dirichlet–Shanks composition without the final reduction.
fn compose_unreduced(
    f1: &BinaryQuadraticForm,
    f2: &BinaryQuadraticForm,
    d: &BigInt,
) -> BinaryQuadraticForm {
    let m = (&f1.b + &f2.b) / 2;
    let (g, x, y) = xgcd(&f1.a, &f2.a);
    let (e, s, w) = xgcd(&g, &m);
    let u = &s * &x;
    let v = &s * &y;
    let big_b: BigInt = (&u * &f1.a * &f2.b + &v * &f2.a * &f1.b + &w * (&f1.b * &f2.b + d) / 2) / &e;
    let a3 = &f1.a * &f2.a / (&e * &e);
    let two_a3 = a3.abs() * 2;
    let b3 = big_b.mod_floor(&two_a3);
    let c3 = (&b3 * &b3 - d) / (&a3 * 4);
    BinaryQuadraticForm::new(a3, b3, c3)
}

/// The form class group as an explicit composition table.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    discriminant: BigInt,
    forms: Vec<BinaryQuadraticForm>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl ClassGroup {
    pub fn new(d: &BigInt) -> Result<Self> {
        let forms = enumerate_reduced_forms(d)?;
        let index: BTreeMap<BinaryQuadraticForm, usize> = forms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        let lookup = |f: &BinaryQuadraticForm| -> Result<usize> {
            index.get(f).copied().ok_or_else(|| {
                Error::InvalidInput(alloc::format!("composition left the class set: {f}"))
            })
        };
        let identity = lookup(&class_representative(&BinaryQuadraticForm::principal(d)?)?)?;
        let mut table = Vec::with_capacity(forms.len());
        for f in &forms {
            let mut row = Vec::with_capacity(forms.len());
            for g in &forms {
                row.push(lookup(&compose(f, g)?)?);
            }
            table.push(row);
        }
        Ok(Self {
            discriminant: d.clone(),
            forms,
            table,
            identity,
        })
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    pub fn forms(&self) -> &[BinaryQuadraticForm] {
        &self.forms
    }

    /// `table()[i][j]` is the index of `forms[i] * forms[j]`.
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn order(&self) -> usize {
        self.forms.len()
    }

    /// The ideal (wide) class group: the quotient by the class of
    /// `(-1, b, -c)` when no unit of norm `-1` identifies it with the
    /// principal class. Coset representatives keep the enumeration order.
    pub fn wide(&self) -> Result<ClassGroup> {
        if self.discriminant.is_negative()
            || crate::contfrac::fundamental_unit(&self.discriminant)?.norm < 0
        {
            return Ok(self.clone());
        }
        let p = &self.forms[self.identity];
        let twin = class_representative(&BinaryQuadraticForm::new(-&p.a, p.b.clone(), -&p.c))?;
        let t = self
            .forms
            .iter()
            .position(|f| *f == twin)
            .ok_or_else(|| Error::InvalidInput(alloc::format!("class of {twin} not enumerated")))?;
        let mut coset = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for i in 0..self.order() {
            if coset[i] == usize::MAX {
                coset[i] = reps.len();
                coset[self.table[i][t]] = reps.len();
                reps.push(i);
            }
        }
        let table = reps
            .iter()
            .map(|&x| reps.iter().map(|&y| coset[self.table[x][y]]).collect())
            .collect();
        Ok(ClassGroup {
            discriminant: self.discriminant.clone(),
            forms: reps.iter().map(|&i| self.forms[i].clone()).collect(),
            table,
            identity: coset[self.identity],
        })
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut k = 1;
        let mut x = i;
        while x != self.identity {
            x = self.table[x][i];
            k += 1;
        }
        k
    }

    /// Elementary divisors read off from the number of elements killed by each prime power.
    pub fn structure(&self) -> ClassGroupStructure {
        let h = self.order() as u64;
        let orders: Vec<u64> = (0..self.order()).map(|i| self.element_order(i)).collect();
        let mut factors = Vec::new();
        for (p, e) in factor_u64(h) {
            // ranks[j] = #{cyclic p-factors with exponent > j}
            let mut prev = 1u64;
            let mut ranks = Vec::new();
            for j in 1..=e {
                let pj = p.pow(j);
                let killed = orders.iter().filter(|&&o| pj % o == 0).count() as u64;
                ranks.push(log_exact(killed / prev, p));
                prev = killed;
            }
            // exponent multiset from the rank profile
            for j in 0..ranks.len() {
                let next = ranks.get(j + 1).copied().unwrap_or(0);
                for _ in next..ranks[j] {
                    factors.push(p.pow(j as u32 + 1));
                }
            }
        }
        ClassGroupStructure::from_cyclic_factors(factors)
    }
}

fn log_exact(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert!(n % p == 0);
        n /= p;
        k += 1;
    }
    k
}

/// Elementary divisors of the form class group of discriminant `D`.
pub fn class_group_structure(d: &BigInt) -> Result<ClassGroupStructure> {
    Ok(ClassGroup::new(d)?.structure())
}

/// Splits `Cl ≅ Z/2^k ⊕ Cl_odd`; fails when the 2-Sylow subgroup is not cyclic.
pub fn two_part_decomposition(g: &ClassGroupStructure) -> Result<(u32, ClassGroupStructure)> {
    let even: Vec<u64> = g
        .elementary_divisors()
        .iter()
        .copied()
        .filter(|d| d % 2 == 0)
        .collect();
    if even.len() > 1 {
        return Err(Error::NonCyclicTwoPart(g.elementary_divisors().to_vec()));
    }
    let k = even.first().map_or(0, |d| d.trailing_zeros());
    let odd = ClassGroupStructure::from_cyclic_factors(
        g.elementary_divisors()
            .iter()
            .map(|d| d >> d.trailing_zeros()),
    );
    Ok((k, odd))
}
