//! Integer helpers shared by the other modules.

use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Trial-division factorisation of `|n|` into `(prime, exponent)` pairs.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2u32);
    while &p * &p <= n {
        let mut e = 0u32;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

/// Splits `n` (nonzero) as `sign * s² * core` with `core` squarefree and positive.
pub fn squarefree_decomposition(n: &BigInt) -> (BigInt, BigInt) {
    let mut core = BigInt::one();
    let mut square_root = BigInt::one();
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            core *= &p;
        }
        square_root *= num_traits::pow(p, (e / 2) as usize);
    }
    (square_root, core)
}

/// Signed squarefree core: `squarefree_core(-12) == -3`.
pub fn squarefree_core(n: &BigInt) -> BigInt {
    let (_, core) = squarefree_decomposition(n);
    if n.is_negative() {
        -core
    } else {
        core
    }
}

/// Checks `D ≠ 0`, `D ≡ 0, 1 (mod 4)` and that `D` is not a perfect square.
pub fn check_discriminant(d: &BigInt) -> Result<()> {
    if d.is_zero() {
        return Err(Error::InvalidDiscriminant(d.clone(), "zero"));
    }
    let r = d.mod_floor(&BigInt::from(4u32));
    if !(r.is_zero() || r.is_one()) {
        return Err(Error::InvalidDiscriminant(d.clone(), "not 0 or 1 mod 4"));
    }
    if is_square(d) {
        return Err(Error::SquareDiscriminant(d.clone()));
    }
    Ok(())
}

/// Fundamental discriminant of `Q(√n)` for a non-square integer `n`.
pub fn field_discriminant(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() || is_square(n) {
        return Err(Error::InvalidInput(alloc::format!(
            "{n} has no quadratic field (zero or a perfect square)"
        )));
    }
    let core = squarefree_core(n);
    if core.mod_floor(&BigInt::from(4u32)).is_one() {
        Ok(core)
    } else {
        Ok(core * 4)
    }
}

/// Splits a discriminant as `D = f² · d_K` with `d_K` fundamental.
pub fn split_discriminant(d: &BigInt) -> Result<(BigInt, BigInt)> {
    check_discriminant(d)?;
    let (s, core) = squarefree_decomposition(d);
    let core = if d.is_negative() { -core } else { core };
    if core.mod_floor(&BigInt::from(4u32)).is_one() {
        Ok((core, s))
    } else {
        // D ≡ 0, 1 (mod 4) with core ≡ 2, 3 forces s even.
        debug_assert!(s.is_even());
        Ok((core * 4, s / 2))
    }
}

pub fn is_fundamental_discriminant(d: &BigInt) -> bool {
    matches!(split_discriminant(d), Ok((_, f)) if f.is_one())
}

/// Kronecker symbol `(d / p)` for a prime `p`.
pub fn kronecker_prime(d: &BigInt, p: &BigInt) -> i32 {
    let two = BigInt::from(2u32);
    if *p == two {
        if d.is_even() {
            return 0;
        }
        return match d.mod_floor(&BigInt::from(8u32)).to_u32() {
            Some(1) | Some(7) => 1,
            _ => -1,
        };
    }
    let r = d.mod_floor(p);
    if r.is_zero() {
        return 0;
    }
    let e = (p - 1u32) / 2u32;
    if r.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// Extended gcd with a nonnegative gcd: returns `(g, x, y)` with `x a + y b = g`.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.sign() == Sign::Minus {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}
