//! Built-in algebras with their published classifications.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::{Algebra, AlgebraError};

struct Entry {
    name: &'static str,
    key: &'static str,
    algebra: &'static str,
    golden: &'static str,
}

macro_rules! entry {
    ($name:expr, $key:literal) => {
        Entry {
            name: $name,
            key: $key,
            algebra: include_str!(concat!("../data/algebras/", $key, ".json")),
            golden: include_str!(concat!("../data/golden/", $key, ".json")),
        }
    };
}

const ENTRIES: &[Entry] = &[
    entry!("R(2AB)", "r2ab"),
    entry!("W(2B)", "w2b"),
    entry!("R(3ABD)", "r3abd"),
    entry!("R(3C)", "r3c"),
    entry!("R(3H)", "r3h"),
    entry!("R(3K)", "r3k"),
    entry!("W(3ABCD)", "w3abcd"),
    entry!("W(Q(3A)_1)", "wq3a1"),
    entry!("W(3F)", "w3f"),
    entry!("W(3QLR)", "w3qlr"),
];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("UnknownCatalogName name={0}")]
    UnknownName(String),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("GoldenSyntax {0}")]
    Golden(String),
}

/// Published data for one rigid string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenRigid {
    pub name: String,
    /// A representative string, in the arrow-display format.
    pub display: String,
    /// Its hook closure, in the same format.
    pub hook: String,
    pub g: Vec<i64>,
    /// Rigid strings `D` that are `C`-rigid for this `C`.
    pub compatible: Vec<String>,
    /// Those among `compatible` for which this string is also `D`-rigid.
    pub mutual: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenHasse {
    /// Each node is the sorted list of member names; shifted projectives
    /// carry a `^∨` suffix, as in `P_0^∨`.
    pub nodes: Vec<Vec<String>>,
    /// Edges point from the larger pair to the smaller one.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct Golden {
    pub algebra: String,
    pub pair_count: usize,
    pub rigid: Vec<GoldenRigid>,
    pub pairs: Vec<Vec<String>>,
    pub hasse: GoldenHasse,
}

fn lookup(name: &str) -> Result<&'static Entry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name || e.key.eq_ignore_ascii_case(name))
        .or_else(|| ENTRIES.iter().find(|e| e.name.eq_ignore_ascii_case(name)))
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

/// Catalog names in their canonical order.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Looks up an algebra by name (`R(2AB)`) or file key (`r2ab`).
pub fn algebra(name: &str) -> Result<Algebra, CatalogError> {
    Ok(Algebra::parse(lookup(name)?.algebra)?)
}

pub fn golden(name: &str) -> Result<Golden, CatalogError> {
    serde_json::from_str(lookup(name)?.golden).map_err(|e| CatalogError::Golden(e.to_string()))
}

/// The canonical catalog name for `name`.
pub fn canonical_name(name: &str) -> Result<&'static str, CatalogError> {
    Ok(lookup(name)?.name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads() {
        for name in names() {
            let alg = algebra(name).unwrap();
            assert_eq!(alg.name(), name);
            let golden = golden(name).unwrap();
            assert_eq!(golden.algebra, name);
            assert_eq!(golden.pairs.len(), golden.pair_count);
        }
    }

    #[test]
    fn lookup_by_key_and_case() {
        assert_eq!(canonical_name("r3c").unwrap(), "R(3C)");
        assert_eq!(canonical_name("w(2b)").unwrap(), "W(2B)");
        assert!(matches!(
            algebra("R(9Z)"),
            Err(CatalogError::UnknownName(_))
        ));
    }
}
