//! Finite gamma-semigroups given by explicit operation tables.
//!
//! A structure is a carrier S, a set Γ, and a total ternary product
//! S×Γ×S → S; the both-sided variant adds Γ×S×Γ → Γ. All associativity
//! laws are verified exhaustively at construction time, so everything
//! downstream may assume a valid structure.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::symbol::SymbolTable;

/// Which one-sided predicate to use, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
            Side::TwoSided => write!(f, "two-sided"),
        }
    }
}

/// Largest universe for which subset enumeration is allowed.
pub const SUBSET_ENUMERATION_BOUND: usize = 16;

/// A validated finite gamma-semigroup.
#[derive(Debug, Clone)]
pub struct GammaSemigroup {
    carrier: Arc<SymbolTable>,
    gamma: Arc<SymbolTable>,
    /// s_op[(x * ng + g) * ns + y] = x g y
    s_op: Vec<usize>,
    /// g_op[(a * ns + s) * ng + b] = a s b, present iff both-sided
    g_op: Option<Vec<usize>>,
    /// factorizations[p] lists every (u, g, v) with u g v = p
    factorizations: Vec<Vec<(usize, usize, usize)>>,
}

impl PartialEq for GammaSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.gamma == other.gamma
            && self.s_op == other.s_op
            && self.g_op == other.g_op
    }
}

impl Eq for GammaSemigroup {}

impl GammaSemigroup {
    /// Builds and validates a structure from index-based tables.
    ///
    /// `s_table[x][g][y]` is the product x g y as a carrier index;
    /// `g_table[a][s][b]`, when given, is a s b as a gamma index.
    /// Closure is enforced by the index ranges; every associativity law
    /// is checked by exhaustive loops before the value is returned.
    pub fn from_tables(
        carrier: Arc<SymbolTable>,
        gamma: Arc<SymbolTable>,
        s_table: Vec<Vec<Vec<usize>>>,
        g_table: Option<Vec<Vec<Vec<usize>>>>,
    ) -> Result<GammaSemigroup> {
        let ns = carrier.len();
        let ng = gamma.len();

        let s_op = flatten_table(&s_table, [ns, ng, ns], ns, "S table")?;
        let g_op = match g_table {
            Some(t) => Some(flatten_table(&t, [ng, ns, ng], ng, "G table")?),
            None => None,
        };

        let g = GammaSemigroup {
            carrier,
            gamma,
            s_op,
            g_op,
            factorizations: Vec::new(),
        };
        g.validate()?;

        let mut factorizations = vec![Vec::new(); ns];
        for u in 0..ns {
            for gi in 0..ng {
                for v in 0..ns {
                    factorizations[g.s_prod(u, gi, v)].push((u, gi, v));
                }
            }
        }
        Ok(GammaSemigroup { factorizations, ..g })
    }

    /// Convenience constructor from closures over indices.
    pub fn from_fn(
        carrier: Arc<SymbolTable>,
        gamma: Arc<SymbolTable>,
        s_fn: impl Fn(usize, usize, usize) -> usize,
        g_fn: Option<&dyn Fn(usize, usize, usize) -> usize>,
    ) -> Result<GammaSemigroup> {
        let ns = carrier.len();
        let ng = gamma.len();
        let s_table = (0..ns)
            .map(|x| {
                (0..ng)
                    .map(|g| (0..ns).map(|y| s_fn(x, g, y)).collect())
                    .collect()
            })
            .collect();
        let g_table = g_fn.map(|f| {
            (0..ng)
                .map(|a| {
                    (0..ns)
                        .map(|s| (0..ng).map(|b| f(a, s, b)).collect())
                        .collect()
                })
                .collect()
        });
        GammaSemigroup::from_tables(carrier, gamma, s_table, g_table)
    }

    fn validate(&self) -> Result<()> {
        let ns = self.carrier.len();
        let ng = self.gamma.len();

        // (x b y) g z = x b (y g z)
        for x in 0..ns {
            for b in 0..ng {
                for y in 0..ns {
                    let xby = self.s_prod(x, b, y);
                    for g in 0..ng {
                        for z in 0..ns {
                            let lhs = self.s_prod(xby, g, z);
                            let rhs = self.s_prod(x, b, self.s_prod(y, g, z));
                            if lhs != rhs {
                                return Err(Error::AssociativityViolation(format!(
                                    "({x} {b} {y}) {g} {z} = {lhs} but {x} {b} ({y} {g} {z}) = {rhs}",
                                    x = self.carrier.name(x),
                                    b = self.gamma.name(b),
                                    y = self.carrier.name(y),
                                    g = self.gamma.name(g),
                                    z = self.carrier.name(z),
                                    lhs = self.carrier.name(lhs),
                                    rhs = self.carrier.name(rhs),
                                )));
                            }
                        }
                    }
                }
            }
        }

        if self.g_op.is_some() {
            // (a α b) β c = a (α b β) c, over all a,b,c in S and α,β in Γ.
            // The equality of the outer terms is the law already checked above.
            for a in 0..ns {
                for al in 0..ng {
                    for b in 0..ns {
                        for be in 0..ng {
                            for c in 0..ns {
                                let lhs = self.s_prod(self.s_prod(a, al, b), be, c);
                                let mid = self.s_prod(a, self.g_prod(al, b, be), c);
                                if lhs != mid {
                                    return Err(Error::AssociativityViolation(format!(
                                        "mixed law fails at a={} α={} b={} β={} c={}",
                                        self.carrier.name(a),
                                        self.gamma.name(al),
                                        self.carrier.name(b),
                                        self.gamma.name(be),
                                        self.carrier.name(c),
                                    )));
                                }
                            }
                        }
                    }
                }
            }
            // α (a β b) γ = (α a β) b γ = α a (β b γ)
            for al in 0..ng {
                for a in 0..ns {
                    for be in 0..ng {
                        for b in 0..ns {
                            for ga in 0..ng {
                                let lhs = self.g_prod(al, self.s_prod(a, be, b), ga);
                                let mid = self.g_prod(self.g_prod(al, a, be), b, ga);
                                let rhs = self.g_prod(al, a, self.g_prod(be, b, ga));
                                if lhs != mid || mid != rhs {
                                    return Err(Error::AssociativityViolation(format!(
                                        "gamma law fails at α={} a={} β={} b={} γ={}",
                                        self.gamma.name(al),
                                        self.carrier.name(a),
                                        self.gamma.name(be),
                                        self.carrier.name(b),
                                        self.gamma.name(ga),
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn carrier(&self) -> &Arc<SymbolTable> {
        &self.carrier
    }

    pub fn gamma(&self) -> &Arc<SymbolTable> {
        &self.gamma
    }

    pub fn both_sided(&self) -> bool {
        self.g_op.is_some()
    }

    /// The product x g y (indices).
    #[inline]
    pub fn s_prod(&self, x: usize, g: usize, y: usize) -> usize {
        self.s_op[(x * self.gamma.len() + g) * self.carrier.len() + y]
    }

    /// The gamma product a s b (indices); panics on one-sided structures.
    #[inline]
    pub fn g_prod(&self, a: usize, s: usize, b: usize) -> usize {
        let g_op = self.g_op.as_ref().expect("g_prod on a one-sided structure");
        g_op[(a * self.carrier.len() + s) * self.gamma.len() + b]
    }

    /// Every (u, g, v) with u g v = p. Precomputed at construction.
    #[inline]
    pub fn factorizations(&self, p: usize) -> &[(usize, usize, usize)] {
        &self.factorizations[p]
    }

    /// Index-based S table, for rendering.
    pub fn s_table(&self) -> &[usize] {
        &self.s_op
    }

    /// Index-based G table, for rendering.
    pub fn g_table(&self) -> Option<&[usize]> {
        self.g_op.as_deref()
    }
}

fn flatten_table(
    table: &[Vec<Vec<usize>>],
    dims: [usize; 3],
    range: usize,
    what: &str,
) -> Result<Vec<usize>> {
    if table.len() != dims[0] {
        return Err(Error::MissingEntry(format!(
            "{what}: expected {} rows, found {}",
            dims[0],
            table.len()
        )));
    }
    let mut flat = Vec::with_capacity(dims[0] * dims[1] * dims[2]);
    for (i, plane) in table.iter().enumerate() {
        if plane.len() != dims[1] {
            return Err(Error::MissingEntry(format!(
                "{what}: row {i} expected {} blocks, found {}",
                dims[1],
                plane.len()
            )));
        }
        for (j, row) in plane.iter().enumerate() {
            if row.len() != dims[2] {
                return Err(Error::MissingEntry(format!(
                    "{what}: cell ({i},{j}) expected {} entries, found {}",
                    dims[2],
                    row.len()
                )));
            }
            for (k, &e) in row.iter().enumerate() {
                if e >= range {
                    return Err(Error::MissingEntry(format!(
                        "{what}: entry ({i},{j},{k}) = {e} out of range 0..{range}"
                    )));
                }
                flat.push(e);
            }
        }
    }
    Ok(flat)
}

/// A subset of a finite indexed universe, stored as a bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrispSubset {
    universe: Arc<SymbolTable>,
    bits: u32,
}

impl CrispSubset {
    pub fn empty(universe: Arc<SymbolTable>) -> CrispSubset {
        CrispSubset { universe, bits: 0 }
    }

    pub fn full(universe: Arc<SymbolTable>) -> CrispSubset {
        let bits = mask(universe.len());
        CrispSubset { universe, bits }
    }

    /// Builds from member indices; panics on out-of-range indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(
        universe: Arc<SymbolTable>,
        members: I,
    ) -> CrispSubset {
        let n = universe.len();
        let mut bits = 0u32;
        for i in members {
            assert!(i < n, "member index {i} outside universe of size {n}");
            bits |= 1 << i;
        }
        CrispSubset { universe, bits }
    }

    pub fn from_bits(universe: Arc<SymbolTable>, bits: u32) -> CrispSubset {
        assert_eq!(bits & !mask(universe.len()), 0, "bits outside universe");
        CrispSubset { universe, bits }
    }

    pub fn universe(&self) -> &Arc<SymbolTable> {
        &self.universe
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits & (1 << i) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.len()).filter(|&i| self.contains(i))
    }

    pub fn is_subset_of(&self, other: &CrispSubset) -> bool {
        self.universe == other.universe && self.bits & !other.bits == 0
    }

    pub fn intersect(&self, other: &CrispSubset) -> CrispSubset {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        CrispSubset {
            universe: self.universe.clone(),
            bits: self.bits & other.bits,
        }
    }
}

impl fmt::Display for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", self.universe.name(i))?;
            first = false;
        }
        write!(f, "}}")
    }
}

fn mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Is A a left / right / two-sided ideal of G?
///
/// Left means s g a stays in A for every s in S, g in Γ, a in A; right is
/// the dual; two-sided is the conjunction. A must be non-empty.
pub fn is_ideal(g: &GammaSemigroup, a: &CrispSubset, side: Side) -> Result<bool> {
    assert_eq!(a.universe(), g.carrier(), "subset not over the carrier");
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let ns = g.carrier().len();
    let ng = g.gamma().len();
    let check_left = matches!(side, Side::Left | Side::TwoSided);
    let check_right = matches!(side, Side::Right | Side::TwoSided);
    for m in a.iter() {
        for gi in 0..ng {
            for s in 0..ns {
                if check_left && !a.contains(g.s_prod(s, gi, m)) {
                    return Ok(false);
                }
                if check_right && !a.contains(g.s_prod(m, gi, s)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Outcome of the regularity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    /// Every x has some β with x β x = x; `witnesses[x]` is the first such β.
    Regular { witnesses: Vec<usize> },
    /// `failing` has no β with x β x = x.
    NotRegular { failing: usize },
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular { .. })
    }
}

/// Tests x = x β x for every carrier element.
pub fn is_regular(g: &GammaSemigroup) -> Regularity {
    let mut witnesses = Vec::with_capacity(g.carrier().len());
    for x in g.carrier().indices() {
        match g.gamma().indices().find(|&b| g.s_prod(x, b, x) == x) {
            Some(b) => witnesses.push(b),
            None => return Regularity::NotRegular { failing: x },
        }
    }
    Regularity::Regular { witnesses }
}

/// The product set AΓB = { a g b : a in A, g in Γ, b in B }.
pub fn crisp_product(g: &GammaSemigroup, a: &CrispSubset, b: &CrispSubset) -> CrispSubset {
    assert_eq!(a.universe(), g.carrier(), "A not over the carrier");
    assert_eq!(b.universe(), g.carrier(), "B not over the carrier");
    let mut out = CrispSubset::empty(g.carrier().clone());
    for x in a.iter() {
        for gi in g.gamma().indices() {
            for y in b.iter() {
                out.bits |= 1 << g.s_prod(x, gi, y);
            }
        }
    }
    out
}

/// All subsets of `universe` in ascending bitset order.
pub fn enumerate_subsets(
    universe: &Arc<SymbolTable>,
    nonempty_only: bool,
) -> Result<impl Iterator<Item = CrispSubset>> {
    let n = universe.len();
    if n > SUBSET_ENUMERATION_BOUND {
        return Err(Error::BoundExceeded(format!(
            "universe has {n} elements, bound is {SUBSET_ENUMERATION_BOUND}"
        )));
    }
    let universe = universe.clone();
    let start = if nonempty_only { 1u32 } else { 0 };
    let end = 1u32 << n;
    Ok((start..end).map(move |bits| CrispSubset::from_bits(universe.clone(), bits)))
}
