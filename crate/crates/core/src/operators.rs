//! Left and right operator semigroups and the transfer maps.
//!
//! The left operator semigroup quotients S×Γ by the relation
//! (x,α) ρ (y,β) iff xαs = yβs for all s and γxα = γyβ for all γ; its
//! multiplication is [x,α][y,β] = [xαy,β]. The right operator semigroup
//! is the mirror image on Γ×S with [α,a][β,b] = [αaβ,b]. Both need the
//! both-sided structure. Well-definedness of the induced multiplication
//! is verified over every pair of representatives, never assumed.
//!
//! Four inf-based maps carry fuzzy subsets between S and the operator
//! semigroups, and four set comprehensions do the same for crisp
//! subsets; on characteristic functions the two families agree.

use std::sync::Arc;

use crate::algebra::{is_ideal, CrispSubset, GammaSemigroup, Side};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::qfuzzy::{
    characteristic, enumerate_q_fuzzy_subsets, includes, is_q_fuzzy_ideal, QFuzzySubset, QSet,
};
use crate::symbol::SymbolTable;
use crate::verdict::{PropertyVerdict, Tally};

/// Which quotient was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// Classes of S×Γ, written [x,α].
    Left,
    /// Classes of Γ×S, written [α,a].
    Right,
}

impl std::fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OperatorKind::Left => write!(f, "left"),
            OperatorKind::Right => write!(f, "right"),
        }
    }
}

/// One equivalence class of pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorClass {
    /// Lexicographically least member, by index pair.
    pub representative: (usize, usize),
    /// All members, sorted.
    pub members: Vec<(usize, usize)>,
}

/// A quotient semigroup of S×Γ or Γ×S with its induced multiplication.
#[derive(Debug, Clone)]
pub struct OperatorSemigroup {
    kind: OperatorKind,
    source: GammaSemigroup,
    classes: Vec<OperatorClass>,
    /// class index for each pair, indexed by first * n2 + second
    class_of: Vec<usize>,
    /// the quotient as a plain semigroup: singleton gamma, carrier =
    /// class labels, product = induced multiplication
    semigroup: GammaSemigroup,
    unity: Option<usize>,
}

impl OperatorSemigroup {
    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn source(&self) -> &GammaSemigroup {
        &self.source
    }

    pub fn classes(&self) -> &[OperatorClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class labels, e.g. "[1,15]".
    pub fn carrier(&self) -> &Arc<SymbolTable> {
        self.semigroup.carrier()
    }

    /// The quotient viewed as a gamma-semigroup with a singleton Γ, so
    /// every ideal predicate applies unchanged.
    pub fn semigroup(&self) -> &GammaSemigroup {
        &self.semigroup
    }

    /// Class of a pair: (x,α) for the left kind, (α,a) for the right.
    pub fn class_of_pair(&self, first: usize, second: usize) -> usize {
        let n2 = match self.kind {
            OperatorKind::Left => self.source.gamma().len(),
            OperatorKind::Right => self.source.carrier().len(),
        };
        self.class_of[first * n2 + second]
    }

    /// Induced multiplication on class indices.
    pub fn mult(&self, i: usize, j: usize) -> usize {
        self.semigroup.s_prod(i, 0, j)
    }

    /// Unity class, when one exists: [e,δ] with eδs = s for all s in
    /// the left kind, [γ,f] with sγf = s in the right kind.
    pub fn unity(&self) -> Option<usize> {
        self.unity
    }
}

/// Builds the left operator semigroup L of a both-sided structure.
pub fn build_left_operator(g: &GammaSemigroup) -> Result<OperatorSemigroup> {
    build_operator(g, OperatorKind::Left)
}

/// Builds the right operator semigroup R of a both-sided structure.
pub fn build_right_operator(g: &GammaSemigroup) -> Result<OperatorSemigroup> {
    build_operator(g, OperatorKind::Right)
}

/// Both operator semigroups of one structure.
#[derive(Debug, Clone)]
pub struct OperatorPair {
    pub left: OperatorSemigroup,
    pub right: OperatorSemigroup,
}

pub fn build_operators(g: &GammaSemigroup) -> Result<OperatorPair> {
    Ok(OperatorPair {
        left: build_left_operator(g)?,
        right: build_right_operator(g)?,
    })
}

impl OperatorPair {
    pub fn has_unities(&self) -> bool {
        self.left.unity().is_some() && self.right.unity().is_some()
    }

    fn require_unities(&self) -> Result<()> {
        if self.left.unity().is_none() {
            return Err(Error::MissingUnity("no left unity [e,δ] with eδs = s".into()));
        }
        if self.right.unity().is_none() {
            return Err(Error::MissingUnity("no right unity [γ,f] with sγf = s".into()));
        }
        Ok(())
    }
}

fn build_operator(g: &GammaSemigroup, kind: OperatorKind) -> Result<OperatorSemigroup> {
    if !g.both_sided() {
        return Err(Error::RequiresBothSided);
    }
    let ns = g.carrier().len();
    let ng = g.gamma().len();
    let (n1, n2) = match kind {
        OperatorKind::Left => (ns, ng),
        OperatorKind::Right => (ng, ns),
    };

    // Signature of a pair: the full action it induces. Grouping by
    // signature is exactly the quotient by ρ.
    let signature = |i: usize, j: usize| -> Vec<usize> {
        let mut sig = Vec::with_capacity(ns + ng);
        match kind {
            OperatorKind::Left => {
                // (x,α): s ↦ xαs and γ ↦ γxα
                for s in 0..ns {
                    sig.push(g.s_prod(i, j, s));
                }
                for ga in 0..ng {
                    sig.push(g.g_prod(ga, i, j));
                }
            }
            OperatorKind::Right => {
                // (α,a): s ↦ sαa and γ ↦ αaγ
                for s in 0..ns {
                    sig.push(g.s_prod(s, i, j));
                }
                for ga in 0..ng {
                    sig.push(g.g_prod(i, j, ga));
                }
            }
        }
        sig
    };

    // Group pairs by signature, preserving lexicographic pair order so
    // representatives are canonical.
    type SignatureGroup = (Vec<usize>, Vec<(usize, usize)>);
    let mut sig_to_class: Vec<SignatureGroup> = Vec::new();
    for i in 0..n1 {
        for j in 0..n2 {
            let sig = signature(i, j);
            match sig_to_class.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, members)) => members.push((i, j)),
                None => sig_to_class.push((sig, vec![(i, j)])),
            }
        }
    }
    let mut classes: Vec<OperatorClass> = sig_to_class
        .into_iter()
        .map(|(_, members)| OperatorClass {
            representative: members[0],
            members,
        })
        .collect();
    classes.sort_by_key(|c| c.representative);

    let mut class_of = vec![usize::MAX; n1 * n2];
    for (ci, class) in classes.iter().enumerate() {
        for &(i, j) in &class.members {
            class_of[i * n2 + j] = ci;
        }
    }

    // Induced multiplication, verified well-defined over every pair of
    // representatives of every pair of classes.
    let n = classes.len();
    let mut mult = vec![usize::MAX; n * n];
    for (ci, c1) in classes.iter().enumerate() {
        for (cj, c2) in classes.iter().enumerate() {
            let mut expected = usize::MAX;
            for &(a1, b1) in &c1.members {
                for &(a2, b2) in &c2.members {
                    let target = match kind {
                        // [x,α][y,β] = [xαy, β]
                        OperatorKind::Left => {
                            let p = g.s_prod(a1, b1, a2);
                            class_of[p * n2 + b2]
                        }
                        // [α,a][β,b] = [αaβ, b]
                        OperatorKind::Right => {
                            let p = g.g_prod(a1, b1, a2);
                            class_of[p * n2 + b2]
                        }
                    };
                    if expected == usize::MAX {
                        expected = target;
                    } else if expected != target {
                        return Err(Error::WellDefinednessViolation(format!(
                            "{kind} product of classes {ci} and {cj} depends on representatives"
                        )));
                    }
                }
            }
            mult[ci * n + cj] = expected;
        }
    }

    // Wrap the quotient as a plain semigroup; this also verifies that
    // the induced multiplication is associative.
    let labels: Vec<String> = classes
        .iter()
        .map(|c| {
            let (i, j) = c.representative;
            match kind {
                OperatorKind::Left => {
                    format!("[{},{}]", g.carrier().name(i), g.gamma().name(j))
                }
                OperatorKind::Right => {
                    format!("[{},{}]", g.gamma().name(i), g.carrier().name(j))
                }
            }
        })
        .collect();
    let carrier = SymbolTable::new(labels)?;
    let gamma = SymbolTable::new(["*"])?;
    let table: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|i| vec![(0..n).map(|j| mult[i * n + j]).collect()])
        .collect();
    let semigroup = GammaSemigroup::from_tables(carrier, gamma, table, None)?;

    // Unity detection: first class in canonical order whose action on S
    // is the identity. The defining property only depends on the class.
    let unity = classes.iter().position(|c| {
        let (i, j) = c.representative;
        match kind {
            OperatorKind::Left => (0..ns).all(|s| g.s_prod(i, j, s) == s),
            OperatorKind::Right => (0..ns).all(|s| g.s_prod(s, i, j) == s),
        }
    });

    Ok(OperatorSemigroup {
        kind,
        source: g.clone(),
        classes,
        class_of,
        semigroup,
        unity,
    })
}

fn require_kind(os: &OperatorSemigroup, kind: OperatorKind, map: &str) -> Result<()> {
    if os.kind() != kind {
        return Err(Error::KindMismatch(format!(
            "{map} needs the {kind} operator semigroup, got {}",
            os.kind()
        )));
    }
    Ok(())
}

fn check_over(os_carrier: &Arc<SymbolTable>, mu: &QFuzzySubset, what: &str) -> Result<()> {
    if mu.domain() != os_carrier {
        return Err(Error::DomainMismatch(format!("{what} has the wrong domain")));
    }
    Ok(())
}

/// μ*(a,q) = inf over γ of μ([γ,a],q), for μ over R.
pub fn star_fuzzy(r_os: &OperatorSemigroup, mu: &QFuzzySubset) -> Result<QFuzzySubset> {
    require_kind(r_os, OperatorKind::Right, "star")?;
    check_over(r_os.carrier(), mu, "star input")?;
    let g = r_os.source();
    Ok(QFuzzySubset::from_fn(
        g.carrier().clone(),
        mu.qset().clone(),
        |a, q| {
            g.gamma()
                .indices()
                .map(|ga| mu.grade(r_os.class_of_pair(ga, a), q))
                .fold(Grade::ONE, Grade::min)
        },
    ))
}

/// σ*'([α,a],q) = inf over s of σ(sαa,q), for σ over S.
pub fn star_prime_fuzzy(r_os: &OperatorSemigroup, sigma: &QFuzzySubset) -> Result<QFuzzySubset> {
    require_kind(r_os, OperatorKind::Right, "star-prime")?;
    check_over(r_os.source().carrier(), sigma, "star-prime input")?;
    let g = r_os.source();
    Ok(QFuzzySubset::from_fn(
        r_os.carrier().clone(),
        sigma.qset().clone(),
        |ci, q| {
            let (al, a) = r_os.classes()[ci].representative;
            g.carrier()
                .indices()
                .map(|s| sigma.grade(g.s_prod(s, al, a), q))
                .fold(Grade::ONE, Grade::min)
        },
    ))
}

/// δ⁺(a,q) = inf over γ of δ([a,γ],q), for δ over L.
pub fn plus_fuzzy(l_os: &OperatorSemigroup, delta: &QFuzzySubset) -> Result<QFuzzySubset> {
    require_kind(l_os, OperatorKind::Left, "plus")?;
    check_over(l_os.carrier(), delta, "plus input")?;
    let g = l_os.source();
    Ok(QFuzzySubset::from_fn(
        g.carrier().clone(),
        delta.qset().clone(),
        |a, q| {
            g.gamma()
                .indices()
                .map(|ga| delta.grade(l_os.class_of_pair(a, ga), q))
                .fold(Grade::ONE, Grade::min)
        },
    ))
}

/// η⁺'([x,α],q) = inf over s of η(xαs,q), for η over S.
pub fn plus_prime_fuzzy(l_os: &OperatorSemigroup, eta: &QFuzzySubset) -> Result<QFuzzySubset> {
    require_kind(l_os, OperatorKind::Left, "plus-prime")?;
    check_over(l_os.source().carrier(), eta, "plus-prime input")?;
    let g = l_os.source();
    Ok(QFuzzySubset::from_fn(
        l_os.carrier().clone(),
        eta.qset().clone(),
        |ci, q| {
            let (x, al) = l_os.classes()[ci].representative;
            g.carrier()
                .indices()
                .map(|s| eta.grade(g.s_prod(x, al, s), q))
                .fold(Grade::ONE, Grade::min)
        },
    ))
}

/// I* = { s : [γ,s] ∈ I for every γ }, for I ⊆ R.
pub fn star_crisp(r_os: &OperatorSemigroup, i: &CrispSubset) -> Result<CrispSubset> {
    require_kind(r_os, OperatorKind::Right, "star")?;
    if i.universe() != r_os.carrier() {
        return Err(Error::DomainMismatch("star input has the wrong universe".into()));
    }
    let g = r_os.source();
    Ok(CrispSubset::from_indices(
        g.carrier().clone(),
        g.carrier().indices().filter(|&s| {
            g.gamma()
                .indices()
                .all(|ga| i.contains(r_os.class_of_pair(ga, s)))
        }),
    ))
}

/// P*' = { [α,x] : sαx ∈ P for every s }, for P ⊆ S.
pub fn star_prime_crisp(r_os: &OperatorSemigroup, p: &CrispSubset) -> Result<CrispSubset> {
    require_kind(r_os, OperatorKind::Right, "star-prime")?;
    if p.universe() != r_os.source().carrier() {
        return Err(Error::DomainMismatch(
            "star-prime input has the wrong universe".into(),
        ));
    }
    let g = r_os.source();
    Ok(CrispSubset::from_indices(
        r_os.carrier().clone(),
        (0..r_os.len()).filter(|&ci| {
            let (al, x) = r_os.classes()[ci].representative;
            g.carrier()
                .indices()
                .all(|s| p.contains(g.s_prod(s, al, x)))
        }),
    ))
}

/// J⁺ = { s : [s,γ] ∈ J for every γ }, for J ⊆ L.
pub fn plus_crisp(l_os: &OperatorSemigroup, j: &CrispSubset) -> Result<CrispSubset> {
    require_kind(l_os, OperatorKind::Left, "plus")?;
    if j.universe() != l_os.carrier() {
        return Err(Error::DomainMismatch("plus input has the wrong universe".into()));
    }
    let g = l_os.source();
    Ok(CrispSubset::from_indices(
        g.carrier().clone(),
        g.carrier().indices().filter(|&s| {
            g.gamma()
                .indices()
                .all(|ga| j.contains(l_os.class_of_pair(s, ga)))
        }),
    ))
}

/// Q⁺' = { [x,α] : xαs ∈ Q for every s }, for Q ⊆ S.
pub fn plus_prime_crisp(l_os: &OperatorSemigroup, qs: &CrispSubset) -> Result<CrispSubset> {
    require_kind(l_os, OperatorKind::Left, "plus-prime")?;
    if qs.universe() != l_os.source().carrier() {
        return Err(Error::DomainMismatch(
            "plus-prime input has the wrong universe".into(),
        ));
    }
    let g = l_os.source();
    Ok(CrispSubset::from_indices(
        l_os.carrier().clone(),
        (0..l_os.len()).filter(|&ci| {
            let (x, al) = l_os.classes()[ci].representative;
            g.carrier()
                .indices()
                .all(|s| qs.contains(g.s_prod(x, al, s)))
        }),
    ))
}

/// Result of a level-set commutation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Commutation {
    /// One of the sets under comparison is empty; the statement only
    /// covers non-empty sets.
    Vacuous,
    Equal,
    Unequal { lhs: String, rhs: String },
}

impl Commutation {
    pub fn agrees(&self) -> bool {
        !matches!(self, Commutation::Unequal { .. })
    }
}

/// (μ_t)* = (μ*)_t for μ over R, whenever both sets are non-empty.
pub fn level_commutation_star(
    r_os: &OperatorSemigroup,
    mu: &QFuzzySubset,
    t: Grade,
) -> Result<Commutation> {
    require_kind(r_os, OperatorKind::Right, "star")?;
    check_over(r_os.carrier(), mu, "level commutation input")?;
    let lhs = star_crisp(r_os, &mu.level_set(t))?;
    let rhs = star_fuzzy(r_os, mu)?.level_set(t);
    Ok(compare_level_sets(lhs, rhs))
}

/// (σ_t)*' = (σ*')_t for σ over S, whenever both sets are non-empty.
pub fn level_commutation_star_prime(
    r_os: &OperatorSemigroup,
    sigma: &QFuzzySubset,
    t: Grade,
) -> Result<Commutation> {
    require_kind(r_os, OperatorKind::Right, "star-prime")?;
    check_over(r_os.source().carrier(), sigma, "level commutation input")?;
    let lhs = star_prime_crisp(r_os, &sigma.level_set(t))?;
    let rhs = star_prime_fuzzy(r_os, sigma)?.level_set(t);
    Ok(compare_level_sets(lhs, rhs))
}

/// Left-operator analogue of `level_commutation_star`: (δ_t)⁺ = (δ⁺)_t.
pub fn level_commutation_plus(
    l_os: &OperatorSemigroup,
    delta: &QFuzzySubset,
    t: Grade,
) -> Result<Commutation> {
    require_kind(l_os, OperatorKind::Left, "plus")?;
    check_over(l_os.carrier(), delta, "level commutation input")?;
    let lhs = plus_crisp(l_os, &delta.level_set(t))?;
    let rhs = plus_fuzzy(l_os, delta)?.level_set(t);
    Ok(compare_level_sets(lhs, rhs))
}

/// Left-operator analogue of `level_commutation_star_prime`.
pub fn level_commutation_plus_prime(
    l_os: &OperatorSemigroup,
    eta: &QFuzzySubset,
    t: Grade,
) -> Result<Commutation> {
    require_kind(l_os, OperatorKind::Left, "plus-prime")?;
    check_over(l_os.source().carrier(), eta, "level commutation input")?;
    let lhs = plus_prime_crisp(l_os, &eta.level_set(t))?;
    let rhs = plus_prime_fuzzy(l_os, eta)?.level_set(t);
    Ok(compare_level_sets(lhs, rhs))
}

fn compare_level_sets(lhs: CrispSubset, rhs: CrispSubset) -> Commutation {
    if lhs.is_empty() || rhs.is_empty() {
        if lhs == rhs {
            return Commutation::Vacuous;
        }
        // one side empty, the other not: still a real inequality
        return Commutation::Unequal {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        };
    }
    if lhs == rhs {
        Commutation::Equal
    } else {
        Commutation::Unequal {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// The four transfer directions; each comes in a crisp and fuzzy form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransferKind {
    /// R → S
    Star,
    /// S → R
    StarPrime,
    /// L → S
    Plus,
    /// S → L
    PlusPrime,
}

impl TransferKind {
    /// The one-sided variant each proposition covers, besides two-sided.
    pub fn one_sided(self) -> Side {
        match self {
            TransferKind::Star | TransferKind::StarPrime => Side::Left,
            TransferKind::Plus | TransferKind::PlusPrime => Side::Right,
        }
    }
}

/// Input to `check_transfer`.
pub enum TransferInput<'a> {
    Crisp(&'a CrispSubset),
    Fuzzy(&'a QFuzzySubset),
}

/// Applies a transfer map to an ideal and verifies the image is again
/// an ideal of the matching side.
///
/// Requires both unities (the standing hypothesis of the transfer
/// propositions) and an input that satisfies the ideal predicate for
/// `side` on its source; `side` must be two-sided or the one-sided
/// variant the direction covers.
pub fn check_transfer(
    pair: &OperatorPair,
    kind: TransferKind,
    side: Side,
    input: TransferInput<'_>,
) -> Result<PropertyVerdict> {
    pair.require_unities()?;
    if side != Side::TwoSided && side != kind.one_sided() {
        return Err(Error::PreconditionViolated(format!(
            "{side} ideals are not covered by this transfer direction"
        )));
    }
    let (source_sg, target_sg, os): (&GammaSemigroup, &GammaSemigroup, &OperatorSemigroup) =
        match kind {
            TransferKind::Star => (pair.right.semigroup(), pair.right.source(), &pair.right),
            TransferKind::StarPrime => (pair.right.source(), pair.right.semigroup(), &pair.right),
            TransferKind::Plus => (pair.left.semigroup(), pair.left.source(), &pair.left),
            TransferKind::PlusPrime => (pair.left.source(), pair.left.semigroup(), &pair.left),
        };
    match input {
        TransferInput::Crisp(a) => {
            if !is_ideal(source_sg, a, side)? {
                return Err(Error::PreconditionViolated(format!(
                    "input is not a {side} ideal of its source"
                )));
            }
            let image = match kind {
                TransferKind::Star => star_crisp(os, a)?,
                TransferKind::StarPrime => star_prime_crisp(os, a)?,
                TransferKind::Plus => plus_crisp(os, a)?,
                TransferKind::PlusPrime => plus_prime_crisp(os, a)?,
            };
            if image.is_empty() {
                return Ok(PropertyVerdict::fails(format!(
                    "image of {a} is empty, so it cannot be an ideal"
                )));
            }
            if is_ideal(target_sg, &image, side)? {
                Ok(PropertyVerdict::holds())
            } else {
                Ok(PropertyVerdict::fails(format!(
                    "image {image} of {a} is not a {side} ideal"
                )))
            }
        }
        TransferInput::Fuzzy(mu) => {
            if !is_q_fuzzy_ideal(source_sg, mu, side)?.holds() {
                return Err(Error::PreconditionViolated(format!(
                    "input is not a Q-fuzzy {side} ideal of its source"
                )));
            }
            let image = match kind {
                TransferKind::Star => star_fuzzy(os, mu)?,
                TransferKind::StarPrime => star_prime_fuzzy(os, mu)?,
                TransferKind::Plus => plus_fuzzy(os, mu)?,
                TransferKind::PlusPrime => plus_prime_fuzzy(os, mu)?,
            };
            if !image.has_support() {
                return Ok(PropertyVerdict::fails(
                    "image has empty support, so it cannot be a fuzzy ideal".into(),
                ));
            }
            match is_q_fuzzy_ideal(target_sg, &image, side)? {
                crate::qfuzzy::FuzzyIdealCheck::Holds => Ok(PropertyVerdict::holds()),
                crate::qfuzzy::FuzzyIdealCheck::Violated(v) => {
                    Ok(PropertyVerdict::fails(v.describe(target_sg, &image)))
                }
            }
        }
    }
}

/// Exhaustive check of the inclusion-preserving bijections.
///
/// For the left kind this is the σ ↦ σ⁺' correspondence between fuzzy
/// (two-sided and right) ideals of S and of L; for the right kind the
/// σ ↦ σ*' correspondence with L replaced by R and right by left. Over
/// every grid-valued fuzzy ideal it verifies membership of the image,
/// both round trips, and preservation of inclusion in both directions.
pub fn bijection_check(
    pair: &OperatorPair,
    kind: OperatorKind,
    qset: &Arc<QSet>,
    grid: &[Grade],
) -> Result<Tally> {
    pair.require_unities()?;
    let os = match kind {
        OperatorKind::Left => &pair.left,
        OperatorKind::Right => &pair.right,
    };
    let g = os.source();
    let one_sided = match kind {
        OperatorKind::Left => Side::Right,
        OperatorKind::Right => Side::Left,
    };
    let forward = |mu: &QFuzzySubset| -> Result<QFuzzySubset> {
        match kind {
            OperatorKind::Left => plus_prime_fuzzy(os, mu),
            OperatorKind::Right => star_prime_fuzzy(os, mu),
        }
    };
    let backward = |mu: &QFuzzySubset| -> Result<QFuzzySubset> {
        match kind {
            OperatorKind::Left => plus_fuzzy(os, mu),
            OperatorKind::Right => star_fuzzy(os, mu),
        }
    };

    let mut tally = Tally::new();
    for side in [Side::TwoSided, one_sided] {
        let mut s_ideals = Vec::new();
        for mu in enumerate_q_fuzzy_subsets(g.carrier(), qset, grid)? {
            if mu.has_support() && is_q_fuzzy_ideal(g, &mu, side)?.holds() {
                s_ideals.push(mu);
            }
        }
        let mut os_ideals = Vec::new();
        for mu in enumerate_q_fuzzy_subsets(os.carrier(), qset, grid)? {
            if mu.has_support() && is_q_fuzzy_ideal(os.semigroup(), &mu, side)?.holds() {
                os_ideals.push(mu);
            }
        }

        for sigma in &s_ideals {
            let image = forward(sigma)?;
            let in_class = image.has_support()
                && is_q_fuzzy_ideal(os.semigroup(), &image, side)?.holds();
            let round = backward(&image)?;
            tally.record(in_class && round == *sigma, || {
                format!(
                    "{side} ideal of S fails bijection: membership={in_class}, \
                     round trip differs={}",
                    round != *sigma
                )
            });
        }
        for mu in &os_ideals {
            let image = backward(mu)?;
            let in_class =
                image.has_support() && is_q_fuzzy_ideal(g, &image, side)?.holds();
            let round = forward(&image)?;
            tally.record(in_class && round == *mu, || {
                format!(
                    "{side} ideal of the operator semigroup fails bijection: \
                     membership={in_class}, round trip differs={}",
                    round != *mu
                )
            });
        }
        // inclusion preservation, both directions
        for s1 in &s_ideals {
            for s2 in &s_ideals {
                if includes(s1, s2)? {
                    let ok = includes(&forward(s1)?, &forward(s2)?)?;
                    tally.record(ok, || {
                        format!("forward map does not preserve inclusion for {side} ideals")
                    });
                }
            }
        }
        for m1 in &os_ideals {
            for m2 in &os_ideals {
                if includes(m1, m2)? {
                    let ok = includes(&backward(m1)?, &backward(m2)?)?;
                    tally.record(ok, || {
                        format!("backward map does not preserve inclusion for {side} ideals")
                    });
                }
            }
        }
    }
    Ok(tally)
}

/// Crisp/fuzzy coherence: mapping the characteristic function equals
/// taking the characteristic function of the crisp image.
pub fn characteristic_commutes(
    os: &OperatorSemigroup,
    kind: TransferKind,
    subset: &CrispSubset,
    qset: &Arc<QSet>,
) -> Result<bool> {
    let chi = characteristic(subset, qset);
    let (fuzzy_image, crisp_image) = match kind {
        TransferKind::Star => (star_fuzzy(os, &chi)?, star_crisp(os, subset)?),
        TransferKind::StarPrime => (star_prime_fuzzy(os, &chi)?, star_prime_crisp(os, subset)?),
        TransferKind::Plus => (plus_fuzzy(os, &chi)?, plus_crisp(os, subset)?),
        TransferKind::PlusPrime => (plus_prime_fuzzy(os, &chi)?, plus_prime_crisp(os, subset)?),
    };
    Ok(fuzzy_image == characteristic(&crisp_image, qset))
}
