//! Finite gamma-semigroups and their Q-fuzzy ideal theory.
//!
//! The library represents finite gamma-semigroups by explicit operation
//! tables, builds Q-fuzzy subsets with exact rational grades over them,
//! and verifies the classical correspondences mechanically: the
//! characteristic-function and level-set criteria for fuzzy ideals, the
//! sup-min composition characterisation of regularity, and the
//! inclusion-preserving bijections between fuzzy ideals of a structure
//! and of its left and right operator semigroups.
//!
//! Everything is exact: carriers are finite, grades are rationals, sup
//! and inf are genuine max and min, and every theorem check is an
//! exhaustive enumeration at desk scale.

pub mod algebra;
pub mod composition;
pub mod error;
pub mod fixtures;
pub mod grade;
pub mod operators;
pub mod qfuzzy;
pub mod symbol;
pub mod verdict;

pub use algebra::{
    crisp_product, enumerate_subsets, is_ideal, is_regular, CrispSubset, GammaSemigroup,
    Regularity, Side,
};
pub use error::{Error, Result};
pub use grade::Grade;
pub use qfuzzy::{QFuzzySubset, QSet};
pub use symbol::SymbolTable;
