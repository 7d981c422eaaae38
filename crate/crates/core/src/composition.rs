//! Sup-min composition and the regularity characterisation.
//!
//! (μ1 ∘ μ2)(x,q) is the maximum of min(μ1(u,q), μ2(v,q)) over all
//! factorisations x = u g v, and 0 when x has none. Carriers are finite,
//! so sup is an exact maximum; there is no tolerance anywhere.

use std::sync::Arc;

use crate::algebra::{crisp_product, enumerate_subsets, is_ideal, is_regular, GammaSemigroup, Side};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::qfuzzy::{
    enumerate_q_fuzzy_subsets, includes, intersection, is_q_fuzzy_ideal, QFuzzySubset, QSet,
};
use crate::verdict::{CriterionVerdict, EquivalenceVerdict, PropertyVerdict};

/// Sup-min composition of two fuzzy subsets over the carrier of `g`.
pub fn compose(
    g: &GammaSemigroup,
    m1: &QFuzzySubset,
    m2: &QFuzzySubset,
) -> Result<QFuzzySubset> {
    if !m1.same_frame(m2) {
        return Err(Error::DomainMismatch(
            "composition needs matching carrier and Q-set".into(),
        ));
    }
    if m1.domain() != g.carrier() {
        return Err(Error::DomainMismatch(
            "fuzzy subsets are not over the carrier".into(),
        ));
    }
    Ok(QFuzzySubset::from_fn(
        m1.domain().clone(),
        m1.qset().clone(),
        |x, q| {
            g.factorizations(x)
                .iter()
                .map(|&(u, _, v)| m1.grade(u, q).min(m2.grade(v, q)))
                .fold(Grade::ZERO, Grade::max)
        },
    ))
}

/// χ of S×Q: the constant-1 fuzzy subset.
pub fn full_characteristic(g: &GammaSemigroup, qset: &Arc<QSet>) -> QFuzzySubset {
    QFuzzySubset::constant(g.carrier().clone(), qset.clone(), Grade::ONE)
}

/// μ is a fuzzy ideal iff the χ-composition inclusion holds.
///
/// Left: χ∘μ ⊆ μ. Right: μ∘χ ⊆ μ. Two-sided: both. Computes both sides
/// of the biconditional; μ must have non-empty support.
pub fn chi_criterion(
    g: &GammaSemigroup,
    mu: &QFuzzySubset,
    side: Side,
) -> Result<CriterionVerdict> {
    let check = is_q_fuzzy_ideal(g, mu, side)?;
    let lhs = check.holds();
    let chi = full_characteristic(g, mu.qset());
    let rhs = match side {
        Side::Left => includes(&compose(g, &chi, mu)?, mu)?,
        Side::Right => includes(&compose(g, mu, &chi)?, mu)?,
        Side::TwoSided => {
            includes(&compose(g, &chi, mu)?, mu)? && includes(&compose(g, mu, &chi)?, mu)?
        }
    };
    let detail = if lhs != rhs {
        Some(format!("ideal predicate {lhs}, composition inclusion {rhs}"))
    } else {
        None
    };
    Ok(CriterionVerdict { lhs, rhs, detail })
}

fn first_inclusion_failure(
    small: &QFuzzySubset,
    big: &QFuzzySubset,
    label: &str,
) -> Option<String> {
    let nq = small.qset().len();
    for x in small.domain().indices() {
        for q in 0..nq {
            if small.grade(x, q) > big.grade(x, q) {
                return Some(format!(
                    "{label} fails at ({},{}): {} > {}",
                    small.domain().name(x),
                    small.qset().name(q),
                    small.grade(x, q),
                    big.grade(x, q)
                ));
            }
        }
    }
    None
}

/// μ1∘μ2 ⊆ μ1∩μ2 for a fuzzy right ideal μ1 and fuzzy left ideal μ2.
pub fn product_below_intersection(
    g: &GammaSemigroup,
    m1: &QFuzzySubset,
    m2: &QFuzzySubset,
) -> Result<PropertyVerdict> {
    if !is_q_fuzzy_ideal(g, m1, Side::Right)?.holds() {
        return Err(Error::PreconditionViolated(
            "mu1 is not a Q-fuzzy right ideal".into(),
        ));
    }
    if !is_q_fuzzy_ideal(g, m2, Side::Left)?.holds() {
        return Err(Error::PreconditionViolated(
            "mu2 is not a Q-fuzzy left ideal".into(),
        ));
    }
    let prod = compose(g, m1, m2)?;
    let inter = intersection(m1, m2)?;
    match first_inclusion_failure(&prod, &inter, "compose within intersection") {
        None => Ok(PropertyVerdict::holds()),
        Some(w) => Ok(PropertyVerdict::fails(w)),
    }
}

/// μ1∘μ2 ⊆ μ1∩μ2 ⊆ μ1, μ2 for two-sided fuzzy ideals.
pub fn ideal_chain(
    g: &GammaSemigroup,
    m1: &QFuzzySubset,
    m2: &QFuzzySubset,
) -> Result<PropertyVerdict> {
    for (m, which) in [(m1, "mu1"), (m2, "mu2")] {
        if !is_q_fuzzy_ideal(g, m, Side::TwoSided)?.holds() {
            return Err(Error::PreconditionViolated(format!(
                "{which} is not a Q-fuzzy two-sided ideal"
            )));
        }
    }
    let prod = compose(g, m1, m2)?;
    let inter = intersection(m1, m2)?;
    for (small, big, label) in [
        (&prod, &inter, "compose within intersection"),
        (&inter, m1, "intersection within mu1"),
        (&inter, m2, "intersection within mu2"),
    ] {
        if let Some(w) = first_inclusion_failure(small, big, label) {
            return Ok(PropertyVerdict::fails(w));
        }
    }
    Ok(PropertyVerdict::holds())
}

/// μ1∩μ2 ⊆ μ1∘μ2 on a regular structure, for arbitrary fuzzy subsets.
pub fn regular_product_superset(
    g: &GammaSemigroup,
    m1: &QFuzzySubset,
    m2: &QFuzzySubset,
) -> Result<PropertyVerdict> {
    if !is_regular(g).is_regular() {
        return Err(Error::PreconditionViolated(
            "structure is not regular".into(),
        ));
    }
    let prod = compose(g, m1, m2)?;
    let inter = intersection(m1, m2)?;
    match first_inclusion_failure(&inter, &prod, "intersection within compose") {
        None => Ok(PropertyVerdict::holds()),
        Some(w) => Ok(PropertyVerdict::fails(w)),
    }
}

/// Regularity is equivalent to μ1∘μ2 = μ1∩μ2 for every fuzzy right
/// ideal μ1 and fuzzy left ideal μ2.
///
/// The right side quantifies over grid-valued fuzzy ideals, which
/// include the characteristic functions of all crisp one-sided ideals
/// whenever the grid contains 0 and 1; the paper's converse only needs
/// those.
pub fn regularity_equivalence(
    g: &GammaSemigroup,
    qset: &Arc<QSet>,
    grid: &[Grade],
) -> Result<EquivalenceVerdict> {
    let lhs = is_regular(g).is_regular();
    let mut right_ideals = Vec::new();
    let mut left_ideals = Vec::new();
    for mu in enumerate_q_fuzzy_subsets(g.carrier(), qset, grid)? {
        if !mu.has_support() {
            continue;
        }
        if is_q_fuzzy_ideal(g, &mu, Side::Right)?.holds() {
            right_ideals.push(mu.clone());
        }
        if is_q_fuzzy_ideal(g, &mu, Side::Left)?.holds() {
            left_ideals.push(mu);
        }
    }
    let mut cases = 0u64;
    let mut counterexample = None;
    'outer: for m1 in &right_ideals {
        for m2 in &left_ideals {
            cases += 1;
            let prod = compose(g, m1, m2)?;
            let inter = intersection(m1, m2)?;
            if prod != inter {
                let nq = m1.qset().len();
                let (x, q) = g
                    .carrier()
                    .indices()
                    .flat_map(|x| (0..nq).map(move |q| (x, q)))
                    .find(|&(x, q)| prod.grade(x, q) != inter.grade(x, q))
                    .expect("subsets differ");
                counterexample = Some(format!(
                    "compose={} intersection={} at ({},{}) for mu1={} mu2={}",
                    prod.grade(x, q),
                    inter.grade(x, q),
                    g.carrier().name(x),
                    m1.qset().name(q),
                    render_grades(m1),
                    render_grades(m2),
                ));
                break 'outer;
            }
        }
    }
    Ok(EquivalenceVerdict {
        lhs,
        cases,
        counterexample,
    })
}

/// Regularity is equivalent to RΓL = R∩L for every crisp right ideal R
/// and left ideal L. The forward half is classical; both directions are
/// checked by enumeration.
pub fn crisp_regularity_equivalence(g: &GammaSemigroup) -> Result<EquivalenceVerdict> {
    let lhs = is_regular(g).is_regular();
    let mut rights = Vec::new();
    let mut lefts = Vec::new();
    for a in enumerate_subsets(g.carrier(), true)? {
        if is_ideal(g, &a, Side::Right)? {
            rights.push(a.clone());
        }
        if is_ideal(g, &a, Side::Left)? {
            lefts.push(a);
        }
    }
    let mut cases = 0u64;
    let mut counterexample = None;
    'outer: for r in &rights {
        for l in &lefts {
            cases += 1;
            let prod = crisp_product(g, r, l);
            let inter = r.intersect(l);
            if prod != inter {
                counterexample = Some(format!("R={r} L={l}: RGL={prod} but R∩L={inter}"));
                break 'outer;
            }
        }
    }
    Ok(EquivalenceVerdict {
        lhs,
        cases,
        counterexample,
    })
}

fn render_grades(mu: &QFuzzySubset) -> String {
    let parts: Vec<String> = mu.grades().iter().map(|g| g.to_string()).collect();
    format!("[{}]", parts.join(","))
}
