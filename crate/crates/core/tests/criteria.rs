//! Exhaustive sweeps of the fuzzy-ideal criteria over the bundled
//! structures, at the default 5-point grid.

use qgamma_core::algebra::{enumerate_subsets, is_ideal, is_regular, Side};
use qgamma_core::composition::{
    chi_criterion, ideal_chain, product_below_intersection, regular_product_superset,
};
use qgamma_core::fixtures;
use qgamma_core::qfuzzy::{
    characteristic_criterion, default_grid, enumerate_q_fuzzy_subsets, is_q_fuzzy_ideal,
    level_criterion, two_valued, LevelPolicy, QSet,
};

const SIDES: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];

#[test]
fn characteristic_criterion_agrees_everywhere() {
    let q = QSet::synthetic(1);
    for (name, g) in fixtures::all() {
        for i in enumerate_subsets(g.carrier(), true).unwrap() {
            for side in SIDES {
                let v = characteristic_criterion(&g, &i, &q, side).unwrap();
                assert!(v.agrees(), "{name}: disagreement at {i} side {side}");
            }
        }
    }
}

#[test]
fn two_valued_subsets_are_fuzzy_ideals() {
    let q = QSet::synthetic(1);
    let grid = default_grid();
    for (name, g) in fixtures::all() {
        for side in SIDES {
            for i in enumerate_subsets(g.carrier(), true).unwrap() {
                if !is_ideal(&g, &i, side).unwrap() {
                    continue;
                }
                for &beta in &grid {
                    if beta.is_zero() {
                        continue;
                    }
                    for &alpha in grid.iter().filter(|&&a| a <= beta) {
                        let mu = two_valued(&i, alpha, beta, &q).unwrap();
                        assert!(
                            is_q_fuzzy_ideal(&g, &mu, side).unwrap().holds(),
                            "{name}: two-valued on {i} with {alpha},{beta} fails {side}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn level_criterion_agrees_for_single_q() {
    let q = QSet::synthetic(1);
    let grid = default_grid();
    for (name, g) in [("LZ3", fixtures::lz3()), ("CONST2", fixtures::const2())] {
        let mut cases = 0;
        for mu in enumerate_q_fuzzy_subsets(g.carrier(), &q, &grid).unwrap() {
            cases += 1;
            if !mu.has_support() {
                continue;
            }
            for side in SIDES {
                let v = level_criterion(&g, &mu, side, LevelPolicy::ImageValues).unwrap();
                assert!(v.agrees(), "{name}: level criterion splits on side {side}");
                let v = level_criterion(&g, &mu, side, LevelPolicy::NonemptyThresholds).unwrap();
                assert!(v.agrees(), "{name}: nonempty-threshold variant splits");
            }
        }
        let expected = if name == "LZ3" { 125 } else { 25 };
        assert_eq!(cases, expected);
    }
}

#[test]
fn chi_composition_criterion_agrees() {
    let q = QSet::synthetic(1);
    let grid = default_grid();
    for (name, g) in [("LZ3", fixtures::lz3()), ("CONST2", fixtures::const2())] {
        for mu in enumerate_q_fuzzy_subsets(g.carrier(), &q, &grid).unwrap() {
            if !mu.has_support() {
                continue;
            }
            for side in SIDES {
                let v = chi_criterion(&g, &mu, side).unwrap();
                assert!(v.agrees(), "{name}: chi criterion splits on side {side}");
            }
        }
    }
}

#[test]
fn product_inclusion_chain_holds_for_ideal_pairs() {
    let q = QSet::synthetic(1);
    let grid = default_grid();
    for (name, g) in [("LZ3", fixtures::lz3()), ("CONST2", fixtures::const2())] {
        let mut rights = Vec::new();
        let mut lefts = Vec::new();
        let mut two_sided = Vec::new();
        for mu in enumerate_q_fuzzy_subsets(g.carrier(), &q, &grid).unwrap() {
            if !mu.has_support() {
                continue;
            }
            if is_q_fuzzy_ideal(&g, &mu, Side::Right).unwrap().holds() {
                rights.push(mu.clone());
            }
            if is_q_fuzzy_ideal(&g, &mu, Side::Left).unwrap().holds() {
                lefts.push(mu.clone());
            }
            if is_q_fuzzy_ideal(&g, &mu, Side::TwoSided).unwrap().holds() {
                two_sided.push(mu);
            }
        }
        for m1 in &rights {
            for m2 in &lefts {
                let v = product_below_intersection(&g, m1, m2).unwrap();
                assert!(v.holds, "{name}: {:?}", v.witness);
            }
        }
        for m1 in &two_sided {
            for m2 in &two_sided {
                let v = ideal_chain(&g, m1, m2).unwrap();
                assert!(v.holds, "{name}: {:?}", v.witness);
            }
        }
    }
}

#[test]
fn regular_structures_satisfy_the_superset_inclusion() {
    let q = QSet::synthetic(1);
    let grid = default_grid();
    for (name, g) in fixtures::all() {
        if !is_regular(&g).is_regular() {
            continue;
        }
        // arbitrary fuzzy subsets, not just ideals
        let all: Vec<_> = enumerate_q_fuzzy_subsets(g.carrier(), &q, &grid)
            .unwrap()
            .collect();
        for m1 in all.iter().step_by(7) {
            for m2 in all.iter().step_by(11) {
                let v = regular_product_superset(&g, m1, m2).unwrap();
                assert!(v.holds, "{name}: {:?}", v.witness);
            }
        }
    }
}
