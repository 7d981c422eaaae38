//! Bundled example structures.
//!
//! These four structures exercise every corner of the library: LZ3 and
//! CONST2 are small one-sided structures (one regular, one not), MOD16
//! and MOD4MUL are both-sided with operator semigroups and unities.

use std::sync::Arc;

use crate::algebra::GammaSemigroup;
use crate::grade::Grade;
use crate::qfuzzy::{QFuzzySubset, QSet};
use crate::symbol::SymbolTable;

/// S = {a,b,c}, Γ = {y,d}, x g y = x (left-zero rows). Regular; every
/// non-empty subset is a right ideal and only S is a left ideal.
pub fn lz3() -> GammaSemigroup {
    let s = SymbolTable::new(["a", "b", "c"]).unwrap();
    let g = SymbolTable::new(["y", "d"]).unwrap();
    GammaSemigroup::from_fn(s, g, |x, _, _| x, None).unwrap()
}

/// S = {a,b}, Γ = {g}, x g y = a. Not regular (b has no witness).
pub fn const2() -> GammaSemigroup {
    let s = SymbolTable::new(["a", "b"]).unwrap();
    let g = SymbolTable::new(["g"]).unwrap();
    GammaSemigroup::from_fn(s, g, |_, _, _| 0, None).unwrap()
}

/// CONST2 with the trivial gamma product g x g = g. Both-sided but has
/// no unities, so operator-semigroup theorems report MissingUnity.
pub fn const2_both() -> GammaSemigroup {
    let s = SymbolTable::new(["a", "b"]).unwrap();
    let g = SymbolTable::new(["g"]).unwrap();
    GammaSemigroup::from_fn(s, g, |_, _, _| 0, Some(&|_, _, _| 0)).unwrap()
}

/// S = {1,5,9,13}, Γ = {3,7,11,15}, products are sums mod 16. Regular,
/// both-sided, with unities [1,15] (left) and [3,13] (right).
pub fn mod16() -> GammaSemigroup {
    let s_vals = [1i64, 5, 9, 13];
    let g_vals = [3i64, 7, 11, 15];
    let s = SymbolTable::new(s_vals.iter().map(|v| v.to_string())).unwrap();
    let g = SymbolTable::new(g_vals.iter().map(|v| v.to_string())).unwrap();
    let s_idx = |v: i64| s_vals.iter().position(|&w| w == v).unwrap();
    let g_idx = |v: i64| g_vals.iter().position(|&w| w == v).unwrap();
    GammaSemigroup::from_fn(
        s,
        g,
        move |x, a, y| s_idx((s_vals[x] + g_vals[a] + s_vals[y]).rem_euclid(16)),
        Some(&move |a, x, b| g_idx((g_vals[a] + s_vals[x] + g_vals[b]).rem_euclid(16))),
    )
    .unwrap()
}

/// S = Γ = Z4 under multiplication mod 4. Both-sided with unities but
/// not regular; its ideal chain {0} ⊂ {0,2} ⊂ S gives non-constant
/// fuzzy ideals.
pub fn mod4mul() -> GammaSemigroup {
    let s = SymbolTable::new(["0", "1", "2", "3"]).unwrap();
    let g = SymbolTable::new(["0", "1", "2", "3"]).unwrap();
    GammaSemigroup::from_fn(
        s,
        g,
        |x, a, y| (x * a * y) % 4,
        Some(&|a, x, b| (a * x * b) % 4),
    )
    .unwrap()
}

/// The worked example over LZ3: Q = {p}, μ(a,p)=4/5, μ(b,p)=7/10,
/// μ(c,p)=3/5.
pub fn lz3_example_mu(g: &GammaSemigroup) -> QFuzzySubset {
    let q = QSet::new(SymbolTable::new(["p"]).unwrap());
    QFuzzySubset::from_grades(
        g.carrier().clone(),
        Arc::new(q),
        vec![
            Grade::new(4, 5).unwrap(),
            Grade::new(7, 10).unwrap(),
            Grade::new(3, 5).unwrap(),
        ],
    )
    .unwrap()
}

/// All bundled structures with their canonical names.
pub fn all() -> Vec<(&'static str, GammaSemigroup)> {
    vec![
        ("LZ3", lz3()),
        ("CONST2", const2()),
        ("MOD16", mod16()),
        ("MOD4MUL", mod4mul()),
    ]
}
