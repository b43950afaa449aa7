use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TreeError;

/// Path of child indices from the central polygon; the empty path is the
/// center itself.
///
/// The derived order is lexicographic on the path, so an address sorts
/// before all of its descendants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct PolygonAddress(Vec<u32>);

impl PolygonAddress {
    pub fn center() -> Self {
        PolygonAddress(Vec::new())
    }

    pub fn from_path(path: impl Into<Vec<u32>>) -> Self {
        PolygonAddress(path.into())
    }

    pub fn path(&self) -> &[u32] {
        &self.0
    }

    pub fn is_center(&self) -> bool {
        self.0.is_empty()
    }

    /// Distance to the central polygon.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn parent(&self) -> Option<PolygonAddress> {
        let (_, init) = self.0.split_last()?;
        Some(PolygonAddress(init.to_vec()))
    }

    /// Index of this polygon among its parent's children.
    pub fn last_index(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn child(&self, index: u32) -> PolygonAddress {
        let mut path = self.0.clone();
        path.push(index);
        PolygonAddress(path)
    }

    /// True when `self` lies on the path from the center to `other`
    /// (inclusive).
    pub fn is_ancestor_of(&self, other: &PolygonAddress) -> bool {
        other.0.starts_with(&self.0)
    }
}

impl fmt::Display for PolygonAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("/")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl FromStr for PolygonAddress {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::center());
        }
        s.split('/')
            .map(|part| part.parse::<u32>().map_err(|_| TreeError::MalformedAddress(s.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(PolygonAddress)
    }
}

impl From<PolygonAddress> for String {
    fn from(a: PolygonAddress) -> String {
        a.to_string()
    }
}

impl TryFrom<String> for PolygonAddress {
    type Error = TreeError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}
