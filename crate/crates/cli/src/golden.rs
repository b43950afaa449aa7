//! Expected values for the acceptance criteria that are fixed numbers rather
//! than cross-checks.

use std::collections::BTreeMap;
use std::path::Path;

use amodlab::trees::TreeFamily;
use serde::Deserialize;

use crate::CliError;

const EMBEDDED: &str = include_str!("../golden/acceptance.json");

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum GoldenOrders {
    Finite(Vec<u64>),
    /// Only the string `"unbounded"` is meaningful here.
    Unbounded(String),
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenSpectrum {
    pub family: TreeFamily,
    pub orders: GoldenOrders,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenLink {
    pub family: TreeFamily,
    pub k: u64,
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenDomain {
    pub q: usize,
    pub r: usize,
    pub betti: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenCensus {
    pub family: TreeFamily,
    pub counts: Vec<u128>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenHomology {
    pub complex: String,
    pub betti: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenPresentation {
    pub nmax: u32,
    pub degrees: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Golden {
    pub spectra: Vec<GoldenSpectrum>,
    pub descending_links: Vec<GoldenLink>,
    pub fundamental_domains: Vec<GoldenDomain>,
    pub census: GoldenCensus,
    pub homology: Vec<GoldenHomology>,
    pub presentation: GoldenPresentation,
}

impl Golden {
    pub fn embedded() -> Golden {
        Self::parse(EMBEDDED).expect("embedded golden file is valid")
    }

    pub fn parse(text: &str) -> Result<Golden, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn load(path: &Path) -> Result<Result<Golden, String>, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
        Ok(Self::parse(&text))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_parses() {
        let g = Golden::embedded();
        assert_eq!(g.spectra.len(), 3);
        assert_eq!(g.spectra[2].orders, GoldenOrders::Unbounded("unbounded".into()));
        assert_eq!(g.census.counts, vec![1, 3, 9]);
    }
}
