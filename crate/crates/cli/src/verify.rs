//! The theorem-verification driver.
//!
//! `run_verify` dispatches a theorem id to the corresponding check and
//! tallies an exhaustive enumeration into a report. Case semantics per
//! theorem:
//!
//! - 3.5: one case per (side, non-empty subset)
//! - 3.6: one case per (side, ideal, grade pair alpha <= beta != 0)
//! - 3.7 / 4.2 / 4.3: one case per enumerated fuzzy subset (all
//!   relevant sides checked inside; empty support is vacuous)
//! - 4.4 / 4.5: one case per qualifying ideal pair
//! - 4.6: one case per pair of fuzzy subsets (the structure must be
//!   regular)
//! - 4.7 / crisp-4.7: one case per enumerated pair plus a final case
//!   for the biconditional itself
//! - 5.3-5.6 / 5.9-5.12: one case per (side variant, qualifying ideal)
//! - 5.7 / 5.8: one case per (fuzzy subset, threshold in its image)
//! - 5.13 / 5.14: membership, round trips and inclusion pairs as
//!   counted by the bijection check

use std::sync::Arc;
use std::time::Instant;

use qgamma_core::algebra::{enumerate_subsets, is_ideal, is_regular, GammaSemigroup, Side};
use qgamma_core::composition::{
    chi_criterion, crisp_regularity_equivalence, ideal_chain, product_below_intersection,
    regular_product_superset, regularity_equivalence,
};
use qgamma_core::grade::Grade;
use qgamma_core::operators::{
    bijection_check, build_operators, build_right_operator, level_commutation_star,
    level_commutation_star_prime, check_transfer, Commutation, OperatorKind, OperatorPair,
    TransferInput, TransferKind,
};
use qgamma_core::qfuzzy::{
    characteristic_criterion, enumerate_q_fuzzy_subsets, is_q_fuzzy_ideal, level_criterion,
    two_valued, uniform_grid, LevelPolicy, QFuzzySubset, QSet,
};
use qgamma_core::verdict::{EquivalenceVerdict, Tally};
use qgamma_core::Error as CoreError;

use crate::error::{CliError, Result};
use crate::report::VerdictReport;

/// Every theorem id `verify` understands, in suite order.
pub const THEOREM_IDS: &[&str] = &[
    "3.5", "3.6", "3.7", "4.2", "4.3", "4.4", "4.5", "4.6", "4.7", "crisp-4.7", "5.3", "5.4",
    "5.5", "5.6", "5.7", "5.8", "5.9", "5.10", "5.11", "5.12", "5.13", "5.14",
];

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub grid_points: usize,
    pub q_size: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            grid_points: 5,
            q_size: 1,
        }
    }
}

const ALL_SIDES: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];

/// Runs one theorem check over one structure.
pub fn run_verify(
    g: &GammaSemigroup,
    structure: &str,
    theorem: &str,
    opts: &VerifyOptions,
) -> Result<VerdictReport> {
    let start = Instant::now();
    let qset = QSet::synthetic(opts.q_size);
    let grid = uniform_grid(opts.grid_points)?;
    let tally = match theorem {
        "3.5" => characteristic_sweep(g, &qset)?,
        "3.6" => two_valued_sweep(g, &qset, &grid)?,
        "3.7" => level_sweep(g, &qset, &grid)?,
        "4.2" => chi_sweep(g, &qset, &grid, &[Side::Left, Side::Right])?,
        "4.3" => chi_sweep(g, &qset, &grid, &[Side::TwoSided])?,
        "4.4" => pair_inclusion_sweep(g, &qset, &grid)?,
        "4.5" => ideal_chain_sweep(g, &qset, &grid)?,
        "4.6" => regular_superset_sweep(g, &qset, &grid)?,
        "4.7" => equivalence_tally(regularity_equivalence(g, &qset, &grid)?),
        "crisp-4.7" => equivalence_tally(crisp_regularity_equivalence(g)?),
        "5.3" => crisp_transfer_sweep(g, TransferKind::Plus)?,
        "5.4" => crisp_transfer_sweep(g, TransferKind::PlusPrime)?,
        "5.5" => crisp_transfer_sweep(g, TransferKind::Star)?,
        "5.6" => crisp_transfer_sweep(g, TransferKind::StarPrime)?,
        "5.7" => level_commutation_sweep(g, &qset, &grid, true)?,
        "5.8" => level_commutation_sweep(g, &qset, &grid, false)?,
        "5.9" => fuzzy_transfer_sweep(g, TransferKind::Star, &qset, &grid)?,
        "5.10" => fuzzy_transfer_sweep(g, TransferKind::StarPrime, &qset, &grid)?,
        "5.11" => fuzzy_transfer_sweep(g, TransferKind::Plus, &qset, &grid)?,
        "5.12" => fuzzy_transfer_sweep(g, TransferKind::PlusPrime, &qset, &grid)?,
        "5.13" => bijection_sweep(g, OperatorKind::Left, &qset, &grid)?,
        "5.14" => bijection_sweep(g, OperatorKind::Right, &qset, &grid)?,
        other => return Err(CliError::Core(CoreError::UnknownTheorem(other.into()))),
    };
    Ok(VerdictReport {
        theorem: theorem.to_string(),
        structure: structure.to_string(),
        tally,
        elapsed: start.elapsed(),
    })
}

/// Why a theorem does not apply to a structure, if it does not.
pub fn skip_reason(g: &GammaSemigroup, theorem: &str) -> Option<String> {
    let needs_both_sided = theorem.starts_with("5.");
    if needs_both_sided && !g.both_sided() {
        return Some("requires a both-sided structure".into());
    }
    if theorem == "4.6" && !is_regular(g).is_regular() {
        return Some("requires a regular structure".into());
    }
    let needs_unities = matches!(
        theorem,
        "5.3" | "5.4" | "5.5" | "5.6" | "5.9" | "5.10" | "5.11" | "5.12" | "5.13" | "5.14"
    );
    if needs_unities {
        match build_operators(g) {
            Ok(pair) if pair.has_unities() => {}
            Ok(_) => return Some("requires left and right unities".into()),
            Err(e) => return Some(e.to_string()),
        }
    }
    None
}

/// Runs the whole suite on one structure, skipping inapplicable
/// theorems. Returns the reports and one note per skipped theorem.
pub fn run_all(
    g: &GammaSemigroup,
    structure: &str,
    opts: &VerifyOptions,
) -> Result<(Vec<VerdictReport>, Vec<String>)> {
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for theorem in THEOREM_IDS {
        match skip_reason(g, theorem) {
            Some(reason) => skipped.push(format!("skip {theorem} on {structure}: {reason}")),
            None => reports.push(run_verify(g, structure, theorem, opts)?),
        }
    }
    Ok((reports, skipped))
}

fn characteristic_sweep(g: &GammaSemigroup, qset: &Arc<QSet>) -> Result<Tally> {
    let mut tally = Tally::new();
    for side in ALL_SIDES {
        for i in enumerate_subsets(g.carrier(), true)? {
            let v = characteristic_criterion(g, &i, qset, side)?;
            tally.record(v.agrees(), || {
                format!(
                    "characteristic criterion splits on {i} side={side}: crisp={} fuzzy={} {}",
                    v.lhs,
                    v.rhs,
                    v.detail.clone().unwrap_or_default()
                )
            });
        }
    }
    Ok(tally)
}

fn two_valued_sweep(g: &GammaSemigroup, qset: &Arc<QSet>, grid: &[Grade]) -> Result<Tally> {
    let mut tally = Tally::new();
    for side in ALL_SIDES {
        for i in enumerate_subsets(g.carrier(), true)? {
            if !is_ideal(g, &i, side)? {
                continue;
            }
            for &beta in grid.iter().filter(|b| !b.is_zero()) {
                for &alpha in grid.iter().filter(|&&a| a <= beta) {
                    let mu = two_valued(&i, alpha, beta, qset)?;
                    let ok = is_q_fuzzy_ideal(g, &mu, side)?.holds();
                    tally.record(ok, || {
                        format!(
                            "two-valued subset on {i} with alpha={alpha} beta={beta} \
                             is not a {side} fuzzy ideal"
                        )
                    });
                }
            }
        }
    }
    Ok(tally)
}

fn level_sweep(g: &GammaSemigroup, qset: &Arc<QSet>, grid: &[Grade]) -> Result<Tally> {
    let mut tally = Tally::new();
    for mu in enumerate_q_fuzzy_subsets(g.carrier(), qset, grid)? {
        if !mu.has_support() {
            tally.vacuous();
            continue;
        }
        let mut failure = None;
        for side in ALL_SIDES {
            let v = level_criterion(g, &mu, side, LevelPolicy::ImageValues)?;
            if !v.agrees() {
                failure = Some(format!(
                    "level criterion splits for side={side}: predicate={} levels={} {}",
                    v.lhs,
                    v.rhs,
                    v.detail.unwrap_or_default()
                ));
                break;
            }
        }
        match failure {
            None => tally.agree(),
            Some(w) => tally.discrepancy(w),
        }
    }
    Ok(tally)
}

fn chi_sweep(
    g: &GammaSemigroup,
    qset: &Arc<QSet>,
    grid: &[Grade],
    sides: &[Side],
) -> Result<Tally> {
    let mut tally = Tally::new();
    for mu in enumerate_q_fuzzy_subsets(g.carrier(), qset, grid)? {
        if !mu.has_support() {
            tally.vacuous();
            continue;
        }
        let mut failure = None;
        for &side in sides {
            let v = chi_criterion(g, &mu, side)?;
            if !v.agrees() {
                failure = Some(format!(
                    "chi criterion splits for side={side}: predicate={} inclusion={}",
                    v.lhs, v.rhs
                ));
                break;
            }
        }
        match failure {
            None => tally.agree(),
            Some(w) => tally.discrepancy(w),
        }
    }
    Ok(tally)
}

fn grid_ideals(
    sg: &GammaSemigroup,
    qset: &Arc<QSet>,
    grid: &[Grade],
    side: Side,
) -> Result<Vec<QFuzzySubset>> {
    let mut out = Vec::new();
    for mu in enumerate_q_fuzzy_subsets(sg.carrier(), qset, grid)? {
        if mu.has_support() && is_q_fuzzy_ideal(sg, &mu, side)?.holds() {
            out.push(mu);
        }
    }
    Ok(out)
}

fn pair_inclusion_sweep(g: &GammaSemigroup, qset: &Arc<QSet>, grid: &[Grade]) -> Result<Tally> {
    let rights = grid_ideals(g, qset, grid, Side::Right)?;
    let lefts = grid_ideals(g, qset, grid, Side::Left)?;
    let mut tally = Tally::new();
    for m1 in &rights {
        for m2 in &lefts {
            let v = product_below_intersection(g, m1, m2)?;
            tally.record(v.holds, || v.witness.clone().unwrap_or_default());
        }
    }
    Ok(tally)
}

fn ideal_chain_sweep(g: &GammaSemigroup, qset: &Arc<QSet>, grid: &[Grade]) -> Result<Tally> {
    let ideals = grid_ideals(g, qset, grid, Side::TwoSided)?;
    let mut tally = Tally::new();
    for m1 in &ideals {
        for m2 in &ideals {
            let v = ideal_chain(g, m1, m2)?;
            tally.record(v.holds, || v.witness.clone().unwrap_or_default());
        }
    }
    Ok(tally)
}

fn regular_superset_sweep(g: &GammaSemigroup, qset: &Arc<QSet>, grid: &[Grade]) -> Result<Tally> {
    if !is_regular(g).is_regular() {
        return Err(CliError::Core(CoreError::PreconditionViolated(
            "structure is not regular".into(),
        )));
    }
    let all: Vec<QFuzzySubset> =
        enumerate_q_fuzzy_subsets(g.carrier(), qset, grid)?.collect();
    let mut tally = Tally::new();
    for m1 in &all {
        for m2 in &all {
            let v = regular_product_superset(g, m1, m2)?;
            tally.record(v.holds, || v.witness.clone().unwrap_or_default());
        }
    }
    Ok(tally)
}

fn equivalence_tally(v: EquivalenceVerdict) -> Tally {
    let mut tally = Tally::new();
    for _ in 0..v.cases {
        tally.agree();
    }
    let agrees = v.agrees();
    let lhs = v.lhs;
    let rhs = v.rhs();
    let counterexample = v.counterexample.clone();
    tally.note(match &v.counterexample {
        Some(w) => format!("regular={lhs}; equality fails: {w}"),
        None => format!("regular={lhs}; equality holds on every enumerated pair"),
    });
    tally.record(agrees, || match counterexample {
        Some(w) => format!("regular={lhs} but equality fails: {w}"),
        None => format!("regular={lhs} yet no counterexample found (rhs={rhs})"),
    });
    tally
}

/// The semigroup whose ideals feed a given transfer direction.
fn transfer_source(pair: &OperatorPair, kind: TransferKind) -> GammaSemigroup {
    match kind {
        TransferKind::Star => pair.right.semigroup().clone(),
        TransferKind::Plus => pair.left.semigroup().clone(),
        TransferKind::StarPrime | TransferKind::PlusPrime => pair.right.source().clone(),
    }
}

fn crisp_transfer_sweep(g: &GammaSemigroup, kind: TransferKind) -> Result<Tally> {
    let pair = build_operators(g)?;
    let source_sg = transfer_source(&pair, kind);
    let mut tally = Tally::new();
    for side in [Side::TwoSided, kind.one_sided()] {
        for a in enumerate_subsets(source_sg.carrier(), true)? {
            if !is_ideal(&source_sg, &a, side)? {
                continue;
            }
            let v = check_transfer(&pair, kind, side, TransferInput::Crisp(&a))?;
            tally.record(v.holds, || {
                format!(
                    "{side} ideal {a} maps outside the ideals: {}",
                    v.witness.clone().unwrap_or_default()
                )
            });
        }
    }
    Ok(tally)
}

fn fuzzy_transfer_sweep(
    g: &GammaSemigroup,
    kind: TransferKind,
    qset: &Arc<QSet>,
    grid: &[Grade],
) -> Result<Tally> {
    let pair = build_operators(g)?;
    let source_sg = transfer_source(&pair, kind);
    let mut tally = Tally::new();
    for side in [Side::TwoSided, kind.one_sided()] {
        for mu in grid_ideals(&source_sg, qset, grid, side)? {
            let v = check_transfer(&pair, kind, side, TransferInput::Fuzzy(&mu))?;
            tally.record(v.holds, || {
                format!(
                    "fuzzy {side} ideal maps outside the ideals: {}",
                    v.witness.clone().unwrap_or_default()
                )
            });
        }
    }
    Ok(tally)
}

fn level_commutation_sweep(
    g: &GammaSemigroup,
    qset: &Arc<QSet>,
    grid: &[Grade],
    over_operator: bool,
) -> Result<Tally> {
    let r = build_right_operator(g)?;
    let domain = if over_operator {
        r.carrier().clone()
    } else {
        g.carrier().clone()
    };
    let mut tally = Tally::new();
    for mu in enumerate_q_fuzzy_subsets(&domain, qset, grid)? {
        for t in mu.image() {
            let c = if over_operator {
                level_commutation_star(&r, &mu, t)?
            } else {
                level_commutation_star_prime(&r, &mu, t)?
            };
            match c {
                Commutation::Vacuous => tally.vacuous(),
                Commutation::Equal => tally.agree(),
                Commutation::Unequal { lhs, rhs } => tally.discrepancy(format!(
                    "level sets split at t={t}: mapped-level={lhs} level-of-map={rhs}"
                )),
            }
        }
    }
    Ok(tally)
}

fn bijection_sweep(
    g: &GammaSemigroup,
    kind: OperatorKind,
    qset: &Arc<QSet>,
    grid: &[Grade],
) -> Result<Tally> {
    let pair = build_operators(g)?;
    Ok(bijection_check(&pair, kind, qset, grid)?)
}
