//! Coordinates on the lamplighter tree.
//!
//! Line vertices are `(column, 0)`; the ray below column `c` consists of the
//! vertices `(c, depth)` with `depth >= 1`. The central polygon is `(0, 0)`.
//! Cyclic neighbour order is left, right, down on the line and up, down on a
//! ray.

use super::PolygonAddress;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampVertex {
    pub column: i64,
    pub depth: u64,
}

impl LampVertex {
    pub const CENTER: LampVertex = LampVertex { column: 0, depth: 0 };

    pub fn is_line(&self) -> bool {
        self.depth == 0
    }

    pub fn cyclic_neighbors(&self) -> Vec<LampVertex> {
        let at = |column, depth| LampVertex { column, depth };
        if self.is_line() {
            vec![at(self.column - 1, 0), at(self.column + 1, 0), at(self.column, 1)]
        } else {
            vec![at(self.column, self.depth - 1), at(self.column, self.depth + 1)]
        }
    }
}

/// Neighbours of `vertex` in cyclic order starting just after `entry`; all
/// neighbours in stored order when there is no entry.
pub(crate) fn children(vertex: LampVertex, entry: Option<LampVertex>) -> Vec<LampVertex> {
    let ring = vertex.cyclic_neighbors();
    match entry {
        None => ring,
        Some(p) => {
            let k = ring.iter().position(|&v| v == p).expect("entry must be a neighbour");
            (1..ring.len()).map(|j| ring[(k + j) % ring.len()]).collect()
        }
    }
}

/// The vertex at `addr` and its parent, or `None` if some index is out of
/// range.
pub(crate) fn locate(addr: &PolygonAddress) -> Option<(LampVertex, Option<LampVertex>)> {
    let mut vertex = LampVertex::CENTER;
    let mut parent = None;
    for &i in addr.path() {
        let next = *children(vertex, parent).get(i as usize)?;
        parent = Some(vertex);
        vertex = next;
    }
    Some((vertex, parent))
}
