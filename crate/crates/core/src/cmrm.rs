//! The conductor map from imaginary to real quadratic orders.
//!
//! An order of conductor `f` in `Q(√-d)` is matched with the order of least
//! conductor `f'` in `Q(√d)` having the same (wide) class number.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::arith::{field_discriminant, squarefree_core};
use crate::quadforms::{class_number, BinaryQuadraticForm, ClassGroup, Flavor, QuadraticOrder};
use crate::{Error, Result};

pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000;

/// Outcome of a successful conductor search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConductorMatch {
    /// Squarefree core of the input `d`.
    pub d: BigInt,
    pub cm_order: QuadraticOrder,
    pub cm_class_number: u64,
    pub rm_conductor: u64,
    pub rm_order: QuadraticOrder,
    pub rm_class_number: u64,
}

/// Inputs normalised for the search: `(d core, CM order, RM field discriminant)`.
pub fn conductor_problem(d: &BigInt, f: u64) -> Result<(BigInt, QuadraticOrder, BigInt)> {
    if !d.is_positive() {
        return Err(Error::InvalidInput(alloc::format!("d must be positive, got {d}")));
    }
    if f == 0 {
        return Err(Error::InvalidInput("conductor f must be at least 1".into()));
    }
    let core = squarefree_core(d);
    if core.is_one() {
        return Err(Error::InvalidInput(alloc::format!(
            "d = {d} is a perfect square; Q(√d) is not a quadratic field"
        )));
    }
    let cm_field = field_discriminant(&-&core)?;
    let cm_order = QuadraticOrder::new(cm_field, BigInt::from(f))?;
    let rm_field = field_discriminant(&core)?;
    Ok((core, cm_order, rm_field))
}

/// Conductor search with a caller-supplied wide class number oracle.
pub fn rm_conductor_with<F>(d: &BigInt, f: u64, search_limit: u64, mut wide: F) -> Result<ConductorMatch>
where
    F: FnMut(&BigInt) -> Result<u64>,
{
    let (core, cm_order, rm_field) = conductor_problem(d, f)?;
    let target = wide(cm_order.discriminant())?;
    for g in 1..=search_limit {
        let order = QuadraticOrder::new(rm_field.clone(), BigInt::from(g))?;
        let h = wide(order.discriminant())?;
        if h == target {
            return Ok(ConductorMatch {
                d: core,
                cm_order,
                cm_class_number: target,
                rm_conductor: g,
                rm_order: order,
                rm_class_number: h,
            });
        }
    }
    Err(Error::SearchLimitExceeded {
        target,
        limit: search_limit,
    })
}

/// Least `f' ≥ 1` with `h(Z + f' O_{Q(√d)}) = h(Z + f O_{Q(√-d)})`, scanning `f' = 1, …, search_limit`.
pub fn rm_conductor(d: &BigInt, f: u64, search_limit: u64) -> Result<ConductorMatch> {
    rm_conductor_with(d, f, search_limit, |disc| class_number(disc, Flavor::Wide))
}

/// `(Λ, [I], K)`: the real order, its ideal class representatives and the field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmTriple {
    pub order: QuadraticOrder,
    pub ideal_classes: Vec<BinaryQuadraticForm>,
    pub field_discriminant: BigInt,
}

/// Builds the triple on the order found by [`rm_conductor`].
///
/// Ideal classes are the wide classes: when the fundamental unit has norm
/// `+1` the form classes pair up under `(a, b, c) ~ (-a, b, -c)` and one
/// representative of each pair is kept.
pub fn rm_triple(d: &BigInt, f: u64, search_limit: u64) -> Result<RmTriple> {
    let found = rm_conductor(d, f, search_limit)?;
    let disc = found.rm_order.discriminant().clone();
    let ideal_classes = wide_representatives(&disc)?;
    debug_assert_eq!(ideal_classes.len() as u64, found.rm_class_number);
    Ok(RmTriple {
        field_discriminant: found.rm_order.fundamental_discriminant().clone(),
        order: found.rm_order,
        ideal_classes,
    })
}

/// One form per wide (ideal) class of discriminant `D`.
pub fn wide_representatives(d: &BigInt) -> Result<Vec<BinaryQuadraticForm>> {
    Ok(ClassGroup::new(d)?.wide()?.forms().to_vec())
}
