use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{LgError, Result};

/// An interned, ordered table of (even) polynomial variables with positive
/// integer weights. Every [`Polynomial`](super::Polynomial) refers to exactly
/// one table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u32>,
    index: BTreeMap<String, usize>,
}

impl VarTable {
    /// All weights default to 1.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = vec![1; names.len()];
        Self::with_weights(names, weights)
    }

    pub fn with_weights(names: Vec<String>, weights: Vec<u32>) -> Result<Arc<Self>> {
        if names.len() != weights.len() {
            return Err(LgError::DimensionMismatch(format!(
                "{} names vs {} weights",
                names.len(),
                weights.len()
            )));
        }
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(LgError::Invalid(format!("`{n}` is not a valid identifier")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(LgError::Invalid(format!("duplicate variable `{n}`")));
            }
        }
        for (n, w) in names.iter().zip(&weights) {
            if *w == 0 {
                return Err(LgError::Grading(format!("variable `{n}` has weight 0")));
            }
        }
        Ok(Arc::new(VarTable { names, weights, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.position(name)
            .ok_or_else(|| LgError::UnknownVariable(name.to_string()))
    }

    /// New table with extra variables appended (weight 1 unless given).
    pub fn extend<S: Into<String>>(
        &self,
        extra: impl IntoIterator<Item = (S, u32)>,
    ) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        for (n, w) in extra {
            names.push(n.into());
            weights.push(w);
        }
        Self::with_weights(names, weights)
    }

    /// Merge two tables; shared names must agree on weight.
    pub fn union(&self, other: &VarTable) -> Result<Arc<Self>> {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        for (n, &w) in other.names.iter().zip(&other.weights) {
            match self.position(n) {
                Some(i) if self.weights[i] == w => {}
                Some(_) => {
                    return Err(LgError::TableMismatch(format!(
                        "variable `{n}` carries two different weights"
                    )))
                }
                None => {
                    names.push(n.clone());
                    weights.push(w);
                }
            }
        }
        Self::with_weights(names, weights)
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.names.join(", "))
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}
