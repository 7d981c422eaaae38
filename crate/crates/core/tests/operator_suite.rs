//! Exhaustive operator-semigroup checks on the both-sided structures.

use qgamma_core::algebra::{enumerate_subsets, is_ideal, Side};
use qgamma_core::fixtures;
use qgamma_core::operators::{
    bijection_check, build_left_operator, build_operators, build_right_operator,
    level_commutation_plus, level_commutation_plus_prime, level_commutation_star,
    level_commutation_star_prime, check_transfer, Commutation, OperatorKind, TransferInput,
    TransferKind,
};
use qgamma_core::qfuzzy::{
    default_grid, enumerate_q_fuzzy_subsets, is_q_fuzzy_ideal, QSet,
};

#[test]
fn operator_multiplication_is_well_defined_and_associative() {
    for g in [fixtures::mod16(), fixtures::mod4mul(), fixtures::const2_both()] {
        for build in [build_left_operator, build_right_operator] {
            let os = build(&g).unwrap();
            // re-verify well-definedness over every representative pair
            let n2 = match os.kind() {
                OperatorKind::Left => g.gamma().len(),
                OperatorKind::Right => g.carrier().len(),
            };
            let _ = n2;
            for (ci, c1) in os.classes().iter().enumerate() {
                for (cj, c2) in os.classes().iter().enumerate() {
                    let expected = os.mult(ci, cj);
                    for &(a1, b1) in &c1.members {
                        for &(a2, b2) in &c2.members {
                            let prod_class = match os.kind() {
                                OperatorKind::Left => {
                                    os.class_of_pair(g.s_prod(a1, b1, a2), b2)
                                }
                                OperatorKind::Right => {
                                    os.class_of_pair(g.g_prod(a1, b1, a2), b2)
                                }
                            };
                            assert_eq!(prod_class, expected, "well-definedness violated");
                        }
                    }
                }
            }
            // associativity of the induced multiplication
            let n = os.len();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        assert_eq!(os.mult(os.mult(i, j), k), os.mult(i, os.mult(j, k)));
                    }
                }
            }
        }
    }
}

#[test]
fn unity_laws_hold_for_every_member() {
    for g in [fixtures::mod16(), fixtures::mod4mul()] {
        let l = build_left_operator(&g).unwrap();
        let u = l.unity().expect("left unity");
        for &(e, d) in &l.classes()[u].members {
            for s in g.carrier().indices() {
                assert_eq!(g.s_prod(e, d, s), s, "eδs = s fails");
            }
        }
        let r = build_right_operator(&g).unwrap();
        let u = r.unity().expect("right unity");
        for &(ga, f) in &r.classes()[u].members {
            for s in g.carrier().indices() {
                assert_eq!(g.s_prod(s, ga, f), s, "sγf = s fails");
            }
        }
    }
}

#[test]
fn level_commutation_exhaustive_on_mod4mul() {
    let g = fixtures::mod4mul();
    let r = build_right_operator(&g).unwrap();
    let l = build_left_operator(&g).unwrap();
    let q = QSet::synthetic(1);
    let grid = default_grid();

    let mut checked = 0u64;
    for mu in enumerate_q_fuzzy_subsets(r.carrier(), &q, &grid).unwrap() {
        for t in mu.image() {
            let c = level_commutation_star(&r, &mu, t).unwrap();
            assert!(c.agrees(), "star commutation fails");
            if c == Commutation::Equal {
                checked += 1;
            }
        }
    }
    assert!(checked > 0);

    for sigma in enumerate_q_fuzzy_subsets(g.carrier(), &q, &grid).unwrap() {
        for t in sigma.image() {
            assert!(
                level_commutation_star_prime(&r, &sigma, t).unwrap().agrees(),
                "star-prime commutation fails"
            );
        }
    }

    // the left-operator analogues
    for delta in enumerate_q_fuzzy_subsets(l.carrier(), &q, &grid).unwrap() {
        for t in delta.image() {
            assert!(level_commutation_plus(&l, &delta, t).unwrap().agrees());
        }
    }
    for eta in enumerate_q_fuzzy_subsets(g.carrier(), &q, &grid).unwrap() {
        for t in eta.image() {
            assert!(level_commutation_plus_prime(&l, &eta, t).unwrap().agrees());
        }
    }
}

#[test]
fn crisp_transfers_preserve_ideals() {
    let q = QSet::synthetic(1);
    let _ = &q;
    for g in [fixtures::mod16(), fixtures::mod4mul()] {
        let pair = build_operators(&g).unwrap();
        for kind in [
            TransferKind::Star,
            TransferKind::StarPrime,
            TransferKind::Plus,
            TransferKind::PlusPrime,
        ] {
            let source = match kind {
                TransferKind::Star => pair.right.semigroup().carrier().clone(),
                TransferKind::Plus => pair.left.semigroup().carrier().clone(),
                _ => g.carrier().clone(),
            };
            let source_sg = match kind {
                TransferKind::Star => pair.right.semigroup().clone(),
                TransferKind::Plus => pair.left.semigroup().clone(),
                _ => g.clone(),
            };
            for side in [Side::TwoSided, kind.one_sided()] {
                for a in enumerate_subsets(&source, true).unwrap() {
                    if !is_ideal(&source_sg, &a, side).unwrap() {
                        continue;
                    }
                    let v = check_transfer(&pair, kind, side, TransferInput::Crisp(&a)).unwrap();
                    assert!(v.holds, "{kind:?} {side}: {:?}", v.witness);
                }
            }
        }
    }
}

#[test]
fn fuzzy_transfers_preserve_ideals() {
    let q = QSet::synthetic(1);
    let grid = default_grid();
    for g in [fixtures::mod16(), fixtures::mod4mul()] {
        let pair = build_operators(&g).unwrap();
        for kind in [
            TransferKind::Star,
            TransferKind::StarPrime,
            TransferKind::Plus,
            TransferKind::PlusPrime,
        ] {
            let (source, source_sg) = match kind {
                TransferKind::Star => (
                    pair.right.carrier().clone(),
                    pair.right.semigroup().clone(),
                ),
                TransferKind::Plus => {
                    (pair.left.carrier().clone(), pair.left.semigroup().clone())
                }
                _ => (g.carrier().clone(), g.clone()),
            };
            for side in [Side::TwoSided, kind.one_sided()] {
                for mu in enumerate_q_fuzzy_subsets(&source, &q, &grid).unwrap() {
                    if !mu.has_support()
                        || !is_q_fuzzy_ideal(&source_sg, &mu, side).unwrap().holds()
                    {
                        continue;
                    }
                    let v = check_transfer(&pair, kind, side, TransferInput::Fuzzy(&mu)).unwrap();
                    assert!(v.holds, "{kind:?} {side}: {:?}", v.witness);
                }
            }
        }
    }
}

#[test]
fn bijections_round_trip_and_preserve_inclusion() {
    let q = QSet::synthetic(1);
    let grid = default_grid();
    for g in [fixtures::mod16(), fixtures::mod4mul()] {
        let pair = build_operators(&g).unwrap();
        for kind in [OperatorKind::Left, OperatorKind::Right] {
            let tally = bijection_check(&pair, kind, &q, &grid).unwrap();
            assert!(
                tally.all_agree(),
                "bijection {kind} fails: {:?}",
                tally.discrepancies.first()
            );
            assert!(tally.cases > 0);
        }
    }

    // the coarse three-point grid on MOD16: all fuzzy ideals are
    // constants, round trips are identities
    let g = fixtures::mod16();
    let pair = build_operators(&g).unwrap();
    let grid3 = qgamma_core::qfuzzy::uniform_grid(3).unwrap();
    let tally = bijection_check(&pair, OperatorKind::Left, &q, &grid3).unwrap();
    assert!(tally.all_agree());
}

#[test]
fn transfers_without_unities_are_refused() {
    let g = fixtures::const2_both();
    let pair = build_operators(&g).unwrap();
    let full = qgamma_core::algebra::CrispSubset::full(g.carrier().clone());
    let err = check_transfer(
        &pair,
        TransferKind::PlusPrime,
        Side::TwoSided,
        TransferInput::Crisp(&full),
    )
    .unwrap_err();
    assert!(matches!(err, qgamma_core::Error::MissingUnity(_)));

    let err = bijection_check(&pair, OperatorKind::Left, &QSet::synthetic(1), &default_grid())
        .unwrap_err();
    assert!(matches!(err, qgamma_core::Error::MissingUnity(_)));
}
