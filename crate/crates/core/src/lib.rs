//! Exact arithmetic for quadratic orders and the invariants attached to them.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised by subsystem:
//!
//! * [`quadforms`]: binary quadratic forms, reduction, Gauss composition and
//!   class groups of orders in quadratic fields.
//! * [`contfrac`]: continued fractions of rationals and quadratic
//!   irrationals, periodicity, Bratteli block data, tail equivalence and
//!   fundamental units.
//! * [`cmrm`]: the conductor map sending an imaginary quadratic order to the
//!   real quadratic order with the same class number, and the resulting
//!   `(order, ideal classes, field)` triples.
//! * [`latimer`]: characteristic polynomials, Perron eigenvalues, brute-force
//!   similarity classes of integer matrices and the Shafarevich–Tate group
//!   formulas built on class groups.
//! * [`heights`]: the Minkowski question-mark function, projective and
//!   quantum heights, point counting and growth-regime classification.
//!
//! Every operation is a pure function of its inputs.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod cmrm;
pub mod contfrac;
mod error;
pub mod heights;
pub mod latimer;
pub mod quadforms;

pub use error::{Error, Result};

pub use cmrm::{rm_conductor, rm_triple, ConductorMatch, RmTriple};
pub use contfrac::{
    bratteli_blocks, cf_expand, convergents, fundamental_unit, is_rm, tail_equivalent,
    BratteliBlockSequence, ContinuedFraction, FundamentalUnit, QuadraticIrrational, QuadraticReal,
};
pub use heights::{
    counting_function, finiteness_check, growth_regime, minkowski_q, projective_height,
    quantum_height, GrowthRegime, ProjectivePoint, VarietyProfile,
};
pub use latimer::{
    char_poly, ideal_classes_for_matrix, perron_eigenvalue, sha_for_curve_matrix, sha_group,
    similarity_class_count_bruteforce, IntegerMatrix, Polynomial, ShaReport, SimilarityClasses,
};
pub use quadforms::{
    class_group_structure, class_number, compose, enumerate_reduced_forms, reduce_form,
    two_part_decomposition, BinaryQuadraticForm, ClassGroupStructure, Flavor, QuadraticOrder,
};
