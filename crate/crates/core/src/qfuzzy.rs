//! Q-fuzzy subsets and the ideal criteria.
//!
//! A Q-fuzzy subset is a total map S×Q → [0,1] with exact rational
//! grades. This module provides the fuzzy ideal predicates, level sets,
//! characteristic and two-valued subsets, and the two criteria that tie
//! fuzzy ideals back to crisp ones: the characteristic-function
//! criterion and the level-set criterion.

use std::sync::Arc;

use crate::algebra::{is_ideal, CrispSubset, GammaSemigroup, Side};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::symbol::SymbolTable;
use crate::verdict::CriterionVerdict;

/// Largest number of assignments `enumerate_q_fuzzy_subsets` will produce.
pub const FUZZY_ENUMERATION_BOUND: u128 = 1_000_000;

/// The parameter set Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSet {
    names: Arc<SymbolTable>,
}

impl QSet {
    pub fn new(names: Arc<SymbolTable>) -> QSet {
        QSet { names }
    }

    /// Q = {q1, .., qn}, for drivers that only care about |Q|.
    pub fn synthetic(n: usize) -> Arc<QSet> {
        let names = SymbolTable::new((1..=n).map(|i| format!("q{i}"))).unwrap();
        Arc::new(QSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // symbol tables are never empty
    }

    pub fn name(&self, i: usize) -> &str {
        self.names.name(i)
    }

    pub fn lookup(&self, label: &str) -> Option<usize> {
        self.names.lookup(label)
    }

    pub fn names(&self) -> &Arc<SymbolTable> {
        &self.names
    }
}

/// A total map domain×Q → Grade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFuzzySubset {
    domain: Arc<SymbolTable>,
    qset: Arc<QSet>,
    /// grades[x * |Q| + q]
    grades: Vec<Grade>,
}

impl QFuzzySubset {
    pub fn from_grades(
        domain: Arc<SymbolTable>,
        qset: Arc<QSet>,
        grades: Vec<Grade>,
    ) -> Result<QFuzzySubset> {
        if grades.len() != domain.len() * qset.len() {
            return Err(Error::DomainMismatch(format!(
                "expected {} grades, got {}",
                domain.len() * qset.len(),
                grades.len()
            )));
        }
        Ok(QFuzzySubset {
            domain,
            qset,
            grades,
        })
    }

    pub fn from_fn(
        domain: Arc<SymbolTable>,
        qset: Arc<QSet>,
        f: impl Fn(usize, usize) -> Grade,
    ) -> QFuzzySubset {
        let nq = qset.len();
        let grades = (0..domain.len() * nq)
            .map(|i| f(i / nq, i % nq))
            .collect();
        QFuzzySubset {
            domain,
            qset,
            grades,
        }
    }

    pub fn constant(domain: Arc<SymbolTable>, qset: Arc<QSet>, c: Grade) -> QFuzzySubset {
        let grades = vec![c; domain.len() * qset.len()];
        QFuzzySubset {
            domain,
            qset,
            grades,
        }
    }

    pub fn domain(&self) -> &Arc<SymbolTable> {
        &self.domain
    }

    pub fn qset(&self) -> &Arc<QSet> {
        &self.qset
    }

    #[inline]
    pub fn grade(&self, x: usize, q: usize) -> Grade {
        self.grades[x * self.qset.len() + q]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    /// True when some grade is positive; Definitions of fuzzy ideals
    /// require this ("non-empty Q-fuzzy subset").
    pub fn has_support(&self) -> bool {
        self.grades.iter().any(|g| !g.is_zero())
    }

    /// Same carrier and same Q-set.
    pub fn same_frame(&self, other: &QFuzzySubset) -> bool {
        self.domain == other.domain && self.qset == other.qset
    }

    /// μ_t = { x : μ(x,q) ≥ t for every q }. May be empty.
    pub fn level_set(&self, t: Grade) -> CrispSubset {
        let nq = self.qset.len();
        CrispSubset::from_indices(
            self.domain.clone(),
            self.domain
                .indices()
                .filter(|&x| (0..nq).all(|q| self.grade(x, q) >= t)),
        )
    }

    /// Sorted distinct grades attained over domain×Q.
    pub fn image(&self) -> Vec<Grade> {
        let mut v = self.grades.clone();
        v.sort();
        v.dedup();
        v
    }

    pub fn max_grade(&self) -> Grade {
        self.grades.iter().copied().fold(Grade::ZERO, Grade::max)
    }
}

/// χ of I×Q: grade 1 on I, 0 elsewhere.
pub fn characteristic(i: &CrispSubset, qset: &Arc<QSet>) -> QFuzzySubset {
    QFuzzySubset::from_fn(i.universe().clone(), qset.clone(), |x, _| {
        if i.contains(x) {
            Grade::ONE
        } else {
            Grade::ZERO
        }
    })
}

/// β on I, α elsewhere, requiring α ≤ β and β ≠ 0.
pub fn two_valued(
    i: &CrispSubset,
    alpha: Grade,
    beta: Grade,
    qset: &Arc<QSet>,
) -> Result<QFuzzySubset> {
    if alpha > beta {
        return Err(Error::GradeOrderViolation(format!(
            "alpha={alpha} exceeds beta={beta}"
        )));
    }
    if beta.is_zero() {
        return Err(Error::GradeOrderViolation("beta must be non-zero".into()));
    }
    Ok(QFuzzySubset::from_fn(
        i.universe().clone(),
        qset.clone(),
        |x, _| if i.contains(x) { beta } else { alpha },
    ))
}

/// Pointwise minimum of two fuzzy subsets over the same frame.
pub fn intersection(m1: &QFuzzySubset, m2: &QFuzzySubset) -> Result<QFuzzySubset> {
    if !m1.same_frame(m2) {
        return Err(Error::DomainMismatch(
            "intersection needs matching carrier and Q-set".into(),
        ));
    }
    let grades = m1
        .grades
        .iter()
        .zip(&m2.grades)
        .map(|(&a, &b)| a.min(b))
        .collect();
    QFuzzySubset::from_grades(m1.domain.clone(), m1.qset.clone(), grades)
}

/// μ1 ⊆ μ2, i.e. μ1(x,q) ≤ μ2(x,q) everywhere.
pub fn includes(m1: &QFuzzySubset, m2: &QFuzzySubset) -> Result<bool> {
    if !m1.same_frame(m2) {
        return Err(Error::DomainMismatch(
            "inclusion needs matching carrier and Q-set".into(),
        ));
    }
    Ok(m1.grades.iter().zip(&m2.grades).all(|(a, b)| a <= b))
}

/// Where a fuzzy ideal inequality fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyIdealViolation {
    /// Which one-sided condition failed.
    pub side: Side,
    pub x: usize,
    pub g: usize,
    pub y: usize,
    pub q: usize,
    /// μ(x g y, q)
    pub product: Grade,
    /// μ(y, q) for the left condition, μ(x, q) for the right one.
    pub bound: Grade,
}

impl FuzzyIdealViolation {
    pub fn describe(&self, g: &GammaSemigroup, mu: &QFuzzySubset) -> String {
        let sx = g.carrier().name(self.x);
        let sg = g.gamma().name(self.g);
        let sy = g.carrier().name(self.y);
        let sq = mu.qset().name(self.q);
        let against = match self.side {
            Side::Right => sx,
            _ => sy,
        };
        format!(
            "{} condition fails: mu({sx} {sg} {sy},{sq})={} < mu({against},{sq})={}",
            self.side, self.product, self.bound
        )
    }
}

/// Outcome of the fuzzy ideal predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuzzyIdealCheck {
    Holds,
    Violated(FuzzyIdealViolation),
}

impl FuzzyIdealCheck {
    pub fn holds(&self) -> bool {
        matches!(self, FuzzyIdealCheck::Holds)
    }
}

/// Is μ a Q-fuzzy left / right / two-sided ideal of G?
///
/// Left requires μ(x g y, q) ≥ μ(y, q) for all x, y, g, q; right is the
/// dual; two-sided is both. Errors on empty support.
pub fn is_q_fuzzy_ideal(
    g: &GammaSemigroup,
    mu: &QFuzzySubset,
    side: Side,
) -> Result<FuzzyIdealCheck> {
    assert_eq!(mu.domain(), g.carrier(), "fuzzy subset not over the carrier");
    if !mu.has_support() {
        return Err(Error::EmptyFuzzySubset);
    }
    let ns = g.carrier().len();
    let ng = g.gamma().len();
    let nq = mu.qset().len();
    let check_left = matches!(side, Side::Left | Side::TwoSided);
    let check_right = matches!(side, Side::Right | Side::TwoSided);
    for x in 0..ns {
        for gi in 0..ng {
            for y in 0..ns {
                let p = g.s_prod(x, gi, y);
                for q in 0..nq {
                    let pg = mu.grade(p, q);
                    if check_left && pg < mu.grade(y, q) {
                        return Ok(FuzzyIdealCheck::Violated(FuzzyIdealViolation {
                            side: Side::Left,
                            x,
                            g: gi,
                            y,
                            q,
                            product: pg,
                            bound: mu.grade(y, q),
                        }));
                    }
                    if check_right && pg < mu.grade(x, q) {
                        return Ok(FuzzyIdealCheck::Violated(FuzzyIdealViolation {
                            side: Side::Right,
                            x,
                            g: gi,
                            y,
                            q,
                            product: pg,
                            bound: mu.grade(x, q),
                        }));
                    }
                }
            }
        }
    }
    Ok(FuzzyIdealCheck::Holds)
}

/// I is an ideal iff χ of I×Q is a fuzzy ideal, side by side.
///
/// Computes both sides of the biconditional and reports whether they
/// agree. I must be non-empty.
pub fn characteristic_criterion(
    g: &GammaSemigroup,
    i: &CrispSubset,
    qset: &Arc<QSet>,
    side: Side,
) -> Result<CriterionVerdict> {
    if i.is_empty() {
        return Err(Error::EmptySubset);
    }
    let lhs = is_ideal(g, i, side)?;
    let chi = characteristic(i, qset);
    let check = is_q_fuzzy_ideal(g, &chi, side)?;
    let rhs = check.holds();
    let detail = match &check {
        FuzzyIdealCheck::Violated(v) if lhs != rhs => Some(v.describe(g, &chi)),
        _ => None,
    };
    Ok(CriterionVerdict { lhs, rhs, detail })
}

/// How the level-set criterion quantifies over thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelPolicy {
    /// Every t in Im(μ) must give a non-empty level set that is an ideal.
    /// This is the default reading.
    ImageValues,
    /// Every non-empty level set must be an ideal; empty ones are
    /// skipped. Distinct level sets are realised at image values, so
    /// scanning Im(μ) still covers every threshold in (0, 1].
    NonemptyThresholds,
}

/// μ is a fuzzy ideal iff its level sets are ideals (per `policy`).
///
/// μ must have non-empty support.
pub fn level_criterion(
    g: &GammaSemigroup,
    mu: &QFuzzySubset,
    side: Side,
    policy: LevelPolicy,
) -> Result<CriterionVerdict> {
    let check = is_q_fuzzy_ideal(g, mu, side)?;
    let lhs = check.holds();
    let mut rhs = true;
    let mut detail = None;
    for t in mu.image() {
        let lv = mu.level_set(t);
        if lv.is_empty() {
            match policy {
                LevelPolicy::ImageValues => {
                    rhs = false;
                    detail = Some(format!("level set at t={t} is empty"));
                    break;
                }
                LevelPolicy::NonemptyThresholds => continue,
            }
        }
        if !is_ideal(g, &lv, side)? {
            rhs = false;
            detail = Some(format!("level set {lv} at t={t} is not a {side} ideal"));
            break;
        }
    }
    if lhs != rhs && detail.is_none() {
        if let FuzzyIdealCheck::Violated(v) = &check {
            detail = Some(v.describe(g, mu));
        }
    }
    Ok(CriterionVerdict { lhs, rhs, detail })
}

/// The default 5-point grid {0, 1/4, 1/2, 3/4, 1}.
pub fn default_grid() -> Vec<Grade> {
    uniform_grid(5).unwrap()
}

/// n evenly spaced grades from 0 to 1; n must be at least 2.
pub fn uniform_grid(n: usize) -> Result<Vec<Grade>> {
    if n < 2 {
        return Err(Error::PreconditionViolated(
            "grid needs at least 2 points".into(),
        ));
    }
    (0..n)
        .map(|i| Grade::new(i as i64, (n - 1) as i64))
        .collect()
}

/// Every assignment domain×Q → grid, in lexicographic order with the
/// last cell varying fastest.
pub fn enumerate_q_fuzzy_subsets(
    domain: &Arc<SymbolTable>,
    qset: &Arc<QSet>,
    grid: &[Grade],
) -> Result<impl Iterator<Item = QFuzzySubset>> {
    let cells = domain.len() * qset.len();
    let total = (grid.len() as u128)
        .checked_pow(cells as u32)
        .filter(|&n| n <= FUZZY_ENUMERATION_BOUND)
        .ok_or_else(|| {
            Error::BoundExceeded(format!(
                "{}^{} assignments exceed {}",
                grid.len(),
                cells,
                FUZZY_ENUMERATION_BOUND
            ))
        })?;
    let domain = domain.clone();
    let qset = qset.clone();
    let grid = grid.to_vec();
    let mut digits = vec![0usize; cells];
    let mut remaining = total;
    Ok(std::iter::from_fn(move || {
        if remaining == 0 {
            return None;
        }
        remaining -= 1;
        let grades: Vec<Grade> = digits.iter().map(|&d| grid[d]).collect();
        // advance the odometer, last cell fastest
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < grid.len() {
                break;
            }
            *d = 0;
        }
        Some(QFuzzySubset::from_grades(domain.clone(), qset.clone(), grades).unwrap())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q1() -> Arc<QSet> {
        QSet::synthetic(1)
    }

    #[test]
    fn level_set_of_worked_example() {
        let g = fixtures::lz3();
        let mu = fixtures::lz3_example_mu(&g);
        let t = Grade::new(7, 10).unwrap();
        let lv = mu.level_set(t);
        assert_eq!(lv.to_string(), "{a,b}");
        assert_eq!(mu.level_set(Grade::ZERO), CrispSubset::full(g.carrier().clone()));
    }

    #[test]
    fn level_set_with_two_q_elements() {
        let d = SymbolTable::new(["a", "b"]).unwrap();
        let q = Arc::new(QSet::new(SymbolTable::new(["q1", "q2"]).unwrap()));
        let half = Grade::new(1, 2).unwrap();
        let mu = QFuzzySubset::from_grades(
            d,
            q,
            vec![half, Grade::ONE, Grade::ONE, Grade::ONE],
        )
        .unwrap();
        let lv = mu.level_set(Grade::ONE);
        assert_eq!(lv.to_string(), "{b}");
    }

    #[test]
    fn image_is_sorted_and_distinct() {
        let g = fixtures::lz3();
        let mu = fixtures::lz3_example_mu(&g);
        assert_eq!(
            mu.image(),
            vec![
                Grade::new(3, 5).unwrap(),
                Grade::new(7, 10).unwrap(),
                Grade::new(4, 5).unwrap()
            ]
        );
        let c = QFuzzySubset::constant(g.carrier().clone(), q1(), Grade::new(1, 2).unwrap());
        assert_eq!(c.image(), vec![Grade::new(1, 2).unwrap()]);
    }

    #[test]
    fn fuzzy_ideal_predicate_on_worked_example() {
        let g = fixtures::lz3();
        let mu = fixtures::lz3_example_mu(&g);
        assert!(is_q_fuzzy_ideal(&g, &mu, Side::Right).unwrap().holds());
        match is_q_fuzzy_ideal(&g, &mu, Side::Left).unwrap() {
            FuzzyIdealCheck::Violated(v) => {
                assert_eq!(v.side, Side::Left);
                // the witness must actually violate the inequality
                let p = g.s_prod(v.x, v.g, v.y);
                assert!(mu.grade(p, v.q) < mu.grade(v.y, v.q));
                assert_eq!(v.product, Grade::new(7, 10).unwrap());
                assert_eq!(v.bound, Grade::new(4, 5).unwrap());
            }
            FuzzyIdealCheck::Holds => panic!("example mu is not a left ideal"),
        }
        let c = QFuzzySubset::constant(g.carrier().clone(), q1(), Grade::new(1, 2).unwrap());
        assert!(is_q_fuzzy_ideal(&g, &c, Side::TwoSided).unwrap().holds());
    }

    #[test]
    fn empty_support_is_an_error() {
        let g = fixtures::lz3();
        let zero = QFuzzySubset::constant(g.carrier().clone(), q1(), Grade::ZERO);
        assert_eq!(
            is_q_fuzzy_ideal(&g, &zero, Side::Left),
            Err(Error::EmptyFuzzySubset)
        );
    }

    #[test]
    fn characteristic_subsets() {
        let g = fixtures::lz3();
        let full = CrispSubset::full(g.carrier().clone());
        let chi = characteristic(&full, &q1());
        assert!(chi.grades().iter().all(|&x| x == Grade::ONE));

        let a = CrispSubset::from_indices(g.carrier().clone(), [0]);
        let chi_a = characteristic(&a, &q1());
        assert_eq!(chi_a.grade(0, 0), Grade::ONE);
        assert_eq!(chi_a.grade(1, 0), Grade::ZERO);
        assert_eq!(chi_a.grade(2, 0), Grade::ZERO);

        let empty = CrispSubset::empty(g.carrier().clone());
        let chi_e = characteristic(&empty, &q1());
        assert!(!chi_e.has_support());
        assert_eq!(
            is_q_fuzzy_ideal(&g, &chi_e, Side::Left),
            Err(Error::EmptyFuzzySubset)
        );
    }

    #[test]
    fn two_valued_subsets() {
        let g = fixtures::const2();
        let i = CrispSubset::from_indices(g.carrier().clone(), [0]);
        let mu = two_valued(
            &i,
            Grade::new(1, 10).unwrap(),
            Grade::new(9, 10).unwrap(),
            &q1(),
        )
        .unwrap();
        assert_eq!(mu.grade(0, 0), Grade::new(9, 10).unwrap());
        assert_eq!(mu.grade(1, 0), Grade::new(1, 10).unwrap());
        // Oracle for Definitions 3.1/3.2: exhaust the inequalities directly.
        for x in 0..2 {
            for y in 0..2 {
                let p = g.s_prod(x, 0, y);
                assert!(mu.grade(p, 0) >= mu.grade(y, 0));
                assert!(mu.grade(p, 0) >= mu.grade(x, 0));
            }
        }
        assert!(is_q_fuzzy_ideal(&g, &mu, Side::TwoSided).unwrap().holds());

        // alpha=0, beta=1 degenerates to the characteristic function
        let chi_like = two_valued(&i, Grade::ZERO, Grade::ONE, &q1()).unwrap();
        assert_eq!(chi_like, characteristic(&i, &q1()));
        // alpha=beta=1 is the constant-1 subset
        let both_one = two_valued(&i, Grade::ONE, Grade::ONE, &q1()).unwrap();
        assert_eq!(
            both_one,
            characteristic(&CrispSubset::full(g.carrier().clone()), &q1())
        );

        assert!(matches!(
            two_valued(&i, Grade::new(1, 2).unwrap(), Grade::new(1, 4).unwrap(), &q1()),
            Err(Error::GradeOrderViolation(_))
        ));
        assert!(matches!(
            two_valued(&i, Grade::ZERO, Grade::ZERO, &q1()),
            Err(Error::GradeOrderViolation(_))
        ));

        // with alpha < beta the image is exactly {alpha, beta}
        assert_eq!(
            mu.image(),
            vec![Grade::new(1, 10).unwrap(), Grade::new(9, 10).unwrap()]
        );
    }

    #[test]
    fn intersection_and_inclusion() {
        let g = fixtures::lz3();
        let mu = fixtures::lz3_example_mu(&g);
        assert_eq!(intersection(&mu, &mu).unwrap(), mu);

        let c = QFuzzySubset::constant(
            g.carrier().clone(),
            mu.qset().clone(),
            Grade::new(7, 10).unwrap(),
        );
        let m = intersection(&mu, &c).unwrap();
        assert_eq!(m.grade(0, 0), Grade::new(7, 10).unwrap());
        assert_eq!(m.grade(1, 0), Grade::new(7, 10).unwrap());
        assert_eq!(m.grade(2, 0), Grade::new(3, 5).unwrap());

        assert!(includes(&mu, &mu).unwrap());
        let zero = QFuzzySubset::constant(g.carrier().clone(), mu.qset().clone(), Grade::ZERO);
        assert!(includes(&zero, &mu).unwrap());
        assert!(!includes(&mu, &c).unwrap());

        let other_q = QFuzzySubset::constant(g.carrier().clone(), QSet::synthetic(2), Grade::ONE);
        assert!(matches!(
            includes(&mu, &other_q),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn characteristics_intersect_pointwise() {
        let g = fixtures::lz3();
        for r in crate::algebra::enumerate_subsets(g.carrier(), false).unwrap() {
            for l in crate::algebra::enumerate_subsets(g.carrier(), false).unwrap() {
                let lhs = intersection(&characteristic(&r, &q1()), &characteristic(&l, &q1()))
                    .unwrap();
                let rhs = characteristic(&r.intersect(&l), &q1());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn characteristic_criterion_on_lz3() {
        let g = fixtures::lz3();
        let a = CrispSubset::from_indices(g.carrier().clone(), [0]);
        let v = characteristic_criterion(&g, &a, &q1(), Side::Right).unwrap();
        assert!(v.lhs && v.rhs);
        let v = characteristic_criterion(&g, &a, &q1(), Side::Left).unwrap();
        assert!(!v.lhs && !v.rhs);
        // every non-empty subset, every side
        for i in crate::algebra::enumerate_subsets(g.carrier(), true).unwrap() {
            for side in [Side::Left, Side::Right, Side::TwoSided] {
                assert!(characteristic_criterion(&g, &i, &q1(), side).unwrap().agrees());
            }
        }
    }

    #[test]
    fn level_criterion_on_worked_example() {
        let g = fixtures::lz3();
        let mu = fixtures::lz3_example_mu(&g);
        let v = level_criterion(&g, &mu, Side::Right, LevelPolicy::ImageValues).unwrap();
        assert!(v.lhs && v.rhs);
        let v = level_criterion(&g, &mu, Side::Left, LevelPolicy::ImageValues).unwrap();
        assert!(!v.lhs && !v.rhs);

        let c = QFuzzySubset::constant(g.carrier().clone(), q1(), Grade::new(1, 2).unwrap());
        let v = level_criterion(&g, &c, Side::TwoSided, LevelPolicy::ImageValues).unwrap();
        assert!(v.lhs && v.rhs);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let g = fixtures::lz3();
        let grid = uniform_grid(3).unwrap();
        let all: Vec<_> = enumerate_q_fuzzy_subsets(g.carrier(), &q1(), &grid)
            .unwrap()
            .collect();
        assert_eq!(all.len(), 27);
        // first assignment is all zeros, second bumps the last cell
        assert!(all[0].grades().iter().all(|g| g.is_zero()));
        assert_eq!(all[1].grade(2, 0), Grade::new(1, 2).unwrap());
        assert_eq!(all[26].grades(), &[Grade::ONE, Grade::ONE, Grade::ONE]);

        let c2 = fixtures::const2();
        let grid5 = default_grid();
        assert_eq!(
            enumerate_q_fuzzy_subsets(c2.carrier(), &q1(), &grid5)
                .unwrap()
                .count(),
            25
        );

        // |Q| = 2 with the 5-point grid stays inside the default bound
        let q2 = QSet::synthetic(2);
        assert_eq!(
            enumerate_q_fuzzy_subsets(g.carrier(), &q2, &grid5)
                .unwrap()
                .count(),
            15625
        );

        let q7 = QSet::synthetic(7);
        let grid10 = uniform_grid(10).unwrap();
        assert!(matches!(
            enumerate_q_fuzzy_subsets(g.carrier(), &q7, &grid10),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn grids() {
        assert_eq!(
            default_grid(),
            vec![
                Grade::ZERO,
                Grade::new(1, 4).unwrap(),
                Grade::new(1, 2).unwrap(),
                Grade::new(3, 4).unwrap(),
                Grade::ONE
            ]
        );
        assert!(uniform_grid(1).is_err());
    }
}
