//! Counterexample search over all small gamma-semigroups.
//!
//! Enumerates every operation table up to the requested sizes, keeps
//! the associative ones, and runs a criterion check over every
//! grid-valued fuzzy subset of each structure. Discrepancies are
//! findings to report, not failures: the driver exists to probe the
//! level-set criterion for |Q| >= 2, where the biconditional as stated
//! is not obviously sound.

use std::sync::Arc;
use std::time::Instant;

use qgamma_core::algebra::{enumerate_subsets, GammaSemigroup, Side};
use qgamma_core::composition::chi_criterion;
use qgamma_core::qfuzzy::{
    characteristic_criterion, enumerate_q_fuzzy_subsets, level_criterion, uniform_grid,
    LevelPolicy, QSet,
};
use qgamma_core::symbol::SymbolTable;
use qgamma_core::verdict::Tally;
use qgamma_core::Error as CoreError;

use crate::error::{CliError, Result};
use crate::report::VerdictReport;

/// Hard ceilings on the searched sizes.
pub const MAX_CARRIER: usize = 3;
pub const MAX_GAMMA: usize = 2;

/// Properties the search knows how to check per structure.
pub const PROPERTY_IDS: &[&str] = &["level-criterion", "characteristic-criterion", "chi-criterion"];

const ALL_SIDES: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];

/// All associative binary operations on an n-element set, each as a
/// row-major table of length n*n.
pub fn associative_tables(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let mut out = Vec::new();
    let mut table = vec![0usize; cells];
    loop {
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| table[table[x * n + y] * n + z] == table[x * n + table[y * n + z]])
            })
        });
        if assoc {
            out.push(table.clone());
        }
        // odometer over the cells, last fastest
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            table[i] += 1;
            if table[i] < n {
                break;
            }
            table[i] = 0;
        }
    }
}

/// One-sided gamma-semigroups on ns elements with ng gamma symbols:
/// pick one associative table per gamma symbol, then keep selections
/// whose mixed associativity (x b y) g z = x b (y g z) also holds.
fn structures(ns: usize, ng: usize) -> Vec<GammaSemigroup> {
    let candidates = associative_tables(ns);
    let carrier_labels: Vec<String> = (0..ns)
        .map(|i| {
            char::from(b'a' + i as u8).to_string()
        })
        .collect();
    let gamma_labels: Vec<String> = (0..ng)
        .map(|i| format!("g{}", i + 1))
        .collect();

    let mixed_ok = |pick: &[usize]| -> bool {
        for (bi, &tb) in pick.iter().enumerate() {
            for (gi, &tg) in pick.iter().enumerate() {
                if bi == gi {
                    continue; // self-associativity already filtered
                }
                let b = &candidates[tb];
                let g = &candidates[tg];
                for x in 0..ns {
                    for y in 0..ns {
                        for z in 0..ns {
                            if g[b[x * ns + y] * ns + z] != b[x * ns + g[y * ns + z]] {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    };

    let mut out = Vec::new();
    let mut pick = vec![0usize; ng];
    'outer: loop {
        if mixed_ok(&pick) {
            let carrier = SymbolTable::new(carrier_labels.clone()).unwrap();
            let gamma = SymbolTable::new(gamma_labels.clone()).unwrap();
            let s_table: Vec<Vec<Vec<usize>>> = (0..ns)
                .map(|x| {
                    (0..ng)
                        .map(|gi| {
                            (0..ns)
                                .map(|y| candidates[pick[gi]][x * ns + y])
                                .collect()
                        })
                        .collect()
                })
                .collect();
            out.push(GammaSemigroup::from_tables(carrier, gamma, s_table, None).unwrap());
        }
        let mut i = ng;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < candidates.len() {
                break;
            }
            pick[i] = 0;
        }
    }
    out
}

/// Compact deterministic rendering of a structure for witness lines.
fn describe_structure(g: &GammaSemigroup) -> String {
    let s = g.carrier();
    let ga = g.gamma();
    let blocks: Vec<String> = ga
        .indices()
        .map(|gi| {
            let rows: Vec<String> = s
                .indices()
                .map(|x| {
                    s.indices()
                        .map(|y| s.name(g.s_prod(x, gi, y)))
                        .collect::<Vec<_>>()
                        .join("")
                })
                .collect();
            format!("{}:{}", ga.name(gi), rows.join("|"))
        })
        .collect();
    format!("S={} {}", s.len(), blocks.join(" "))
}

/// Enumerates structures up to the given sizes and runs the named
/// criterion over each; every disagreement becomes a reported finding.
pub fn run_search(
    property: &str,
    max_s: usize,
    max_g: usize,
    grid_points: usize,
    q_size: usize,
) -> Result<VerdictReport> {
    if !PROPERTY_IDS.contains(&property) {
        return Err(CliError::Core(CoreError::UnknownTheorem(format!(
            "unknown property {property:?} (expected one of {PROPERTY_IDS:?})"
        ))));
    }
    if max_s == 0 || max_s > MAX_CARRIER {
        return Err(CliError::Core(CoreError::BoundExceeded(format!(
            "carrier size {max_s} outside 1..={MAX_CARRIER}"
        ))));
    }
    if max_g == 0 || max_g > MAX_GAMMA {
        return Err(CliError::Core(CoreError::BoundExceeded(format!(
            "gamma size {max_g} outside 1..={MAX_GAMMA}"
        ))));
    }
    let start = Instant::now();
    let grid = uniform_grid(grid_points)?;
    let qset = QSet::synthetic(q_size);
    let mut tally = Tally::new();
    for ns in 1..=max_s {
        for ng in 1..=max_g {
            for g in structures(ns, ng) {
                check_structure(&g, property, &qset, &grid, &mut tally)?;
            }
        }
    }
    Ok(VerdictReport {
        theorem: property.to_string(),
        structure: format!("search(S<={max_s},G<={max_g})"),
        tally,
        elapsed: start.elapsed(),
    })
}

fn check_structure(
    g: &GammaSemigroup,
    property: &str,
    qset: &Arc<QSet>,
    grid: &[qgamma_core::Grade],
    tally: &mut Tally,
) -> Result<()> {
    match property {
        "characteristic-criterion" => {
            for side in ALL_SIDES {
                for i in enumerate_subsets(g.carrier(), true)? {
                    let v = characteristic_criterion(g, &i, qset, side)?;
                    tally.record(v.agrees(), || {
                        format!(
                            "{} I={i} side={side}: crisp={} fuzzy={}",
                            describe_structure(g),
                            v.lhs,
                            v.rhs
                        )
                    });
                }
            }
        }
        "level-criterion" | "chi-criterion" => {
            for mu in enumerate_q_fuzzy_subsets(g.carrier(), qset, grid)? {
                if !mu.has_support() {
                    tally.vacuous();
                    continue;
                }
                let mut failure = None;
                for side in ALL_SIDES {
                    let v = if property == "level-criterion" {
                        level_criterion(g, &mu, side, LevelPolicy::ImageValues)?
                    } else {
                        chi_criterion(g, &mu, side)?
                    };
                    if !v.agrees() {
                        let grades: Vec<String> =
                            mu.grades().iter().map(|x| x.to_string()).collect();
                        failure = Some(format!(
                            "{} mu=[{}] side={side}: predicate={} criterion={} {}",
                            describe_structure(g),
                            grades.join(","),
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
        }
        _ => unreachable!("validated above"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn associative_table_counts_match_known_values() {
        // numbers of associative binary operations on small sets
        assert_eq!(associative_tables(1).len(), 1);
        assert_eq!(associative_tables(2).len(), 8);
        assert_eq!(associative_tables(3).len(), 113);
    }

    #[test]
    fn search_is_clean_for_single_q() {
        let r = run_search("level-criterion", 2, 1, 3, 1).unwrap();
        assert!(r.all_agree());
        // |S|=1 gives 1 structure x 3 assignments, |S|=2 gives 8 x 9
        assert_eq!(r.tally.cases, 75);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            run_search("level-criterion", 5, 1, 3, 1),
            Err(CliError::Core(CoreError::BoundExceeded(_)))
        ));
        assert!(matches!(
            run_search("nonsense", 2, 1, 3, 1),
            Err(CliError::Core(CoreError::UnknownTheorem(_)))
        ));
    }
}
