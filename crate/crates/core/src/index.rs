//! Named degree-based topological indices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::IndexSpec;

/// A set of indices with unique names, in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct IndexRegistry {
    entries: Vec<IndexSpec>,
}

fn builtin(name: &str, f: impl Fn(f64, f64) -> f64) -> IndexSpec {
    IndexSpec::from_fn(name, f).expect("built-in coefficients are finite")
}

impl IndexRegistry {
    /// An empty registry.
    pub fn new() -> Self {
        Self::default()
    }

    /// The built-in indices.
    pub fn standard() -> Self {
        let entries = vec![
            builtin("randic", |i, j| 1.0 / (i * j).sqrt()),
            builtin("albertson", |i, j| (i - j).abs()),
            builtin("zagreb1", |i, j| i + j),
            builtin("zagreb2", |i, j| i * j),
            builtin("harmonic", |i, j| 2.0 / (i + j)),
            builtin("geometric-arithmetic", |i, j| 2.0 * (i * j).sqrt() / (i + j)),
            builtin("abc", |i, j| ((i + j - 2.0) / (i * j)).sqrt()),
            builtin("sum-connectivity", |i, j| 1.0 / (i + j).sqrt()),
        ];
        IndexRegistry { entries }
    }

    pub fn insert(&mut self, spec: IndexSpec) -> Result<()> {
        if self.get(&spec.name).is_some() {
            return Err(Error::DuplicateIndex(spec.name));
        }
        self.entries.push(spec);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&IndexSpec> {
        self.entries.iter().find(|s| s.name == name)
    }

    pub fn lookup(&self, name: &str) -> Result<&IndexSpec> {
        self.get(name).ok_or_else(|| Error::UnknownIndex(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &IndexSpec> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Parses `c12,c13,c22,c23,c33` into an index called `name`.
pub fn parse_coeffs(name: &str, text: &str) -> Result<IndexSpec> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(Error::UnknownIndex(format!(
            "expected five comma-separated coefficients, got {text:?}"
        )));
    }
    let mut c = [0.0; 5];
    for (slot, p) in c.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| Error::UnknownIndex(format!("bad coefficient {p:?}")))?;
    }
    IndexSpec::new(name, c)
}
