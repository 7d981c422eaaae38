//! Small result types shared by the theorem checks.

/// Both sides of a biconditional, plus context when they disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub lhs: bool,
    pub rhs: bool,
    /// Witness text for the failing side, when one is available.
    pub detail: Option<String>,
}

impl CriterionVerdict {
    pub fn agrees(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A single universally-quantified assertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl PropertyVerdict {
    pub fn holds() -> PropertyVerdict {
        PropertyVerdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fails(witness: String) -> PropertyVerdict {
        PropertyVerdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// A structure-level biconditional whose right side is an enumeration:
/// lhs is a property of the structure, rhs is "no counterexample found".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub lhs: bool,
    /// Pairs (or cases) the enumeration visited.
    pub cases: u64,
    /// First enumerated counterexample, if any; rhs is its absence.
    pub counterexample: Option<String>,
}

impl EquivalenceVerdict {
    pub fn rhs(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn agrees(&self) -> bool {
        self.lhs == self.rhs()
    }
}

/// Bookkeeping for an exhaustive sweep of independent cases.
///
/// A vacuous case is one whose hypothesis does not apply (for example an
/// empty fuzzy subset); it counts as an agreement so that
/// `agreements + discrepancies = cases` always holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub cases: u64,
    pub agreements: u64,
    pub vacuous: u64,
    pub discrepancies: Vec<String>,
    /// Informational lines that belong in the report even when every
    /// case agrees, such as the witness behind an expected rhs failure.
    pub notes: Vec<String>,
}

impl Tally {
    pub fn new() -> Tally {
        Tally::default()
    }

    pub fn agree(&mut self) {
        self.cases += 1;
        self.agreements += 1;
    }

    pub fn vacuous(&mut self) {
        self.cases += 1;
        self.agreements += 1;
        self.vacuous += 1;
    }

    pub fn discrepancy(&mut self, witness: String) {
        self.cases += 1;
        self.discrepancies.push(witness);
    }

    pub fn record(&mut self, agrees: bool, witness: impl FnOnce() -> String) {
        if agrees {
            self.agree();
        } else {
            self.discrepancy(witness());
        }
    }

    pub fn all_agree(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    pub fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.agreements += other.agreements;
        self.vacuous += other.vacuous;
        self.discrepancies.extend(other.discrepancies);
        self.notes.extend(other.notes);
    }
}
