//! Ordered tables of element labels.
//!
//! Every finite set in the library (the carrier S, the set Γ, a Q-set,
//! operator-semigroup classes) is a [`SymbolTable`]: a list of distinct
//! labels whose iteration order is the declaration order. Elements are
//! referenced by index everywhere; labels appear only at I/O boundaries.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered set of distinct, non-empty labels.
#[derive(Debug, Clone)]
pub struct SymbolTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl SymbolTable {
    /// Builds a table from labels in declaration order.
    ///
    /// Labels must be non-empty, unique, and free of whitespace and `#`
    /// so that every table round-trips through the line-oriented file
    /// formats unchanged.
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut index = HashMap::new();
        for label in labels {
            let label = label.into();
            if label.is_empty() {
                return Err(Error::InvalidLabel("empty label".into()));
            }
            if label.chars().any(|c| c.is_whitespace() || c == '#') {
                return Err(Error::InvalidLabel(format!(
                    "label {label:?} contains whitespace or '#'"
                )));
            }
            if index.insert(label.clone(), names.len()).is_some() {
                return Err(Error::InvalidLabel(format!("duplicate label {label:?}")));
            }
            names.push(label);
        }
        if names.is_empty() {
            return Err(Error::InvalidLabel("symbol table must be non-empty".into()));
        }
        Ok(Arc::new(SymbolTable { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Label at `i`; panics if out of range.
    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    /// Position of `label`, if declared.
    pub fn lookup(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }
}

/// Tables are equal when they declare the same labels in the same order.
impl PartialEq for SymbolTable {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for SymbolTable {}

impl fmt::Display for SymbolTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}
