use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::lamplighter;
use super::{PolygonAddress, TreeError};

/// A planar tree from one of the parametric families.
///
/// `Higman { n, m }` has a central vertex of valence `m` and every other
/// vertex of valence `n + 1`. The regular and star aliases normalize into it
/// on construction, so equal trees always compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum TreeFamily {
    Higman { n: u32, m: u32 },
    /// A bi-infinite line with a ray hanging below every line vertex.
    Lamplighter,
}

impl TreeFamily {
    pub fn higman(n: u32, m: u32) -> Result<Self, TreeError> {
        if n == 0 || m == 0 {
            return Err(TreeError::InvalidFamily(format!("higman {n} {m}: need n >= 1 and m >= 1")));
        }
        Ok(TreeFamily::Higman { n, m })
    }

    /// Every vertex has valence `n + 1`.
    pub fn regular(n: u32) -> Result<Self, TreeError> {
        if n < 2 {
            return Err(TreeError::InvalidFamily(format!("regular {n}: need n >= 2")));
        }
        Self::higman(n, n + 1)
    }

    /// `n` rays glued at the central vertex.
    pub fn star(n: u32) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::InvalidFamily("star 0: need n >= 1".into()));
        }
        Self::higman(1, n)
    }

    pub fn is_lamplighter(&self) -> bool {
        matches!(self, TreeFamily::Lamplighter)
    }

    /// `(n, m)` for Higman trees.
    pub fn higman_params(&self) -> Option<(u32, u32)> {
        match *self {
            TreeFamily::Higman { n, m } => Some((n, m)),
            TreeFamily::Lamplighter => None,
        }
    }

    /// Number of children of the polygon at `addr`, that is, its neighbours
    /// other than the one leading back to the center.
    ///
    /// Panics if `addr` is not a polygon of this tree; use [`Self::contains`]
    /// to validate foreign input.
    pub fn child_count(&self, addr: &PolygonAddress) -> usize {
        match *self {
            TreeFamily::Higman { n, m } => {
                if addr.is_center() {
                    m as usize
                } else {
                    n as usize
                }
            }
            TreeFamily::Lamplighter => {
                let (vertex, parent) = lamplighter::locate(addr).expect("address outside the lamplighter tree");
                lamplighter::children(vertex, parent).len()
            }
        }
    }

    pub fn valence(&self, addr: &PolygonAddress) -> usize {
        self.child_count(addr) + usize::from(!addr.is_center())
    }

    /// Whether every index along `addr` is within its parent's child budget.
    pub fn contains(&self, addr: &PolygonAddress) -> bool {
        match *self {
            TreeFamily::Higman { n, m } => addr
                .path()
                .iter()
                .enumerate()
                .all(|(depth, &i)| i < if depth == 0 { m } else { n }),
            TreeFamily::Lamplighter => lamplighter::locate(addr).is_some(),
        }
    }

    pub fn validate(&self, addr: &PolygonAddress) -> Result<(), TreeError> {
        if self.contains(addr) {
            Ok(())
        } else {
            Err(TreeError::NoSuchPolygon { address: addr.to_string(), family: *self })
        }
    }

    /// The tree obtained by contracting an edge at the center: the two
    /// endpoints of valence `m` and `n + 1` merge into one of valence
    /// `m + n - 1`.
    pub fn collapse_edge(&self) -> Result<Self, TreeError> {
        match *self {
            TreeFamily::Higman { n, m } => Self::higman(n, m + n - 1),
            TreeFamily::Lamplighter => Err(TreeError::Unsupported(*self)),
        }
    }

    /// Parses either the file form (`higman 2 3`) or the flag form
    /// (`higman:2:3`).
    pub fn parse(text: &str) -> Result<Self, TreeError> {
        let bad = || TreeError::InvalidFamily(text.to_string());
        let parts: Vec<&str> = text
            .split(|c: char| c == ':' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        let num = |s: &str| s.parse::<u32>().map_err(|_| bad());
        match parts.as_slice() {
            ["higman", n, m] => Self::higman(num(n)?, num(m)?),
            ["regular", n] => Self::regular(num(n)?),
            ["star", n] => Self::star(num(n)?),
            ["lamplighter"] => Ok(TreeFamily::Lamplighter),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeFamily::Higman { n, m } => write!(f, "higman {n} {m}"),
            TreeFamily::Lamplighter => f.write_str("lamplighter"),
        }
    }
}

impl FromStr for TreeFamily {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl From<TreeFamily> for String {
    fn from(f: TreeFamily) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for TreeFamily {
    type Error = TreeError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        Self::parse(&s)
    }
}
