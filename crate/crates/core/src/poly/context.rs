use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered set of variable names, each of degree 1.
#[derive(Debug)]
pub struct RingContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl RingContext {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(RingContext { names, index }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// New context with `name` appended after the existing variables.
    pub fn with_appended(&self, name: &str) -> Result<Arc<Self>> {
        if self.contains(name) {
            return Err(Error::NameCollision(name.to_string()));
        }
        RingContext::new(
            self.names
                .iter()
                .cloned()
                .chain(std::iter::once(name.to_string())),
        )
    }

    /// New context with `name` placed before the existing variables.
    pub fn with_prepended(&self, name: &str) -> Result<Arc<Self>> {
        if self.contains(name) {
            return Err(Error::NameCollision(name.to_string()));
        }
        RingContext::new(std::iter::once(name.to_string()).chain(self.names.iter().cloned()))
    }

    /// A variable name starting with `stem` that is not yet taken.
    pub fn fresh_name(&self, stem: &str) -> String {
        if !self.contains(stem) {
            return stem.to_string();
        }
        (1..)
            .map(|i| format!("{stem}_{i}"))
            .find(|n| !self.contains(n))
            .unwrap()
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.names == other.names
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for RingContext {}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(", "))
    }
}

/// Letters followed by letters, digits or underscores.
pub(crate) fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
