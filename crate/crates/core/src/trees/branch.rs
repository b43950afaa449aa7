//! Complement components of a surface, viewed as rooted planar trees.
//!
//! Each frontier arc of a surface leads into one infinite component of the
//! complement. Rotating the frontier extends to a symmetry exactly when the
//! components it permutes are isomorphic as rooted planar trees, so the
//! rotation order only needs an equality test on these components.

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use super::lamplighter::LampVertex;
use super::PolygonAddress;

/// A rooted planar tree given lazily by a finite-state child rule.
pub trait BranchSystem {
    type State: Clone + Eq + Hash;
    /// Children of a node in planar order.
    fn children(&self, state: &Self::State) -> Vec<Self::State>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Isomorphic,
    Distinct,
    /// No difference was found above `max_depth`, but the search was cut off.
    Undecided,
}

/// Compares two rooted planar trees by breadth-first search over pairs of
/// states reached along identical child-index paths.
///
/// A pair with different child counts proves the trees distinct. If the
/// set of visited pairs closes up without such a pair it is a bisimulation,
/// which proves the trees isomorphic. Pairs first reached beyond `max_depth`
/// are not expanded; if any were cut the answer is `Undecided` unless a
/// distinction was found elsewhere.
pub fn compare_branches<S: BranchSystem>(system: &S, a: S::State, b: S::State, max_depth: usize) -> Comparison {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let mut truncated = false;
    seen.insert((a.clone(), b.clone()));
    queue.push_back((a, b, 0usize));
    while let Some((x, y, depth)) = queue.pop_front() {
        if x == y {
            continue;
        }
        let xs = system.children(&x);
        let ys = system.children(&y);
        if xs.len() != ys.len() {
            return Comparison::Distinct;
        }
        if depth >= max_depth {
            truncated = true;
            continue;
        }
        for pair in xs.into_iter().zip(ys) {
            if seen.insert(pair.clone()) {
                queue.push_back((pair.0, pair.1, depth + 1));
            }
        }
    }
    if truncated {
        Comparison::Undecided
    } else {
        Comparison::Isomorphic
    }
}

/// Component types in a Higman tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HigmanBranch {
    /// Entered from the parent: a full descending tree with `n` children at
    /// every node.
    Away,
    /// The vertex `vertex` entered from its child with index `entry`; this
    /// component contains the center.
    Toward { vertex: PolygonAddress, entry: u32 },
}

#[derive(Debug, Clone, Copy)]
pub struct HigmanBranches {
    pub n: u32,
    pub m: u32,
}

impl BranchSystem for HigmanBranches {
    type State = HigmanBranch;

    fn children(&self, state: &HigmanBranch) -> Vec<HigmanBranch> {
        match state {
            HigmanBranch::Away => vec![HigmanBranch::Away; self.n as usize],
            HigmanBranch::Toward { vertex, entry } => {
                if vertex.is_center() {
                    return vec![HigmanBranch::Away; self.m as usize - 1];
                }
                // Cyclic neighbours are [parent, c_0, .., c_{n-1}]; after c_entry
                // come the later children, then the parent, then the earlier ones.
                let mut out = vec![HigmanBranch::Away; self.n as usize];
                let toward_slot = (self.n - 1 - entry) as usize;
                out[toward_slot] = HigmanBranch::Toward {
                    vertex: vertex.parent().expect("non-center vertex has a parent"),
                    entry: vertex.last_index().expect("non-center vertex has an index"),
                };
                out
            }
        }
    }
}

impl HigmanBranches {
    /// Closed-form equality of component types.
    ///
    /// When `m == n + 1` every component is a full `n`-ary tree. Otherwise the
    /// component containing the center is never isomorphic to a descending
    /// one, and two such components agree iff they have the same sequence of
    /// positions of the center-ward child along the way to the center.
    pub fn closed_form_equal(&self, a: &HigmanBranch, b: &HigmanBranch) -> bool {
        if self.m == self.n + 1 {
            return true;
        }
        match (a, b) {
            (HigmanBranch::Away, HigmanBranch::Away) => true,
            (HigmanBranch::Toward { .. }, HigmanBranch::Toward { .. }) => {
                self.toward_signature(a) == self.toward_signature(b)
            }
            _ => false,
        }
    }

    fn toward_signature(&self, branch: &HigmanBranch) -> Vec<u32> {
        let mut out = Vec::new();
        let mut current = branch.clone();
        while let HigmanBranch::Toward { vertex, entry } = current {
            if vertex.is_center() {
                break;
            }
            out.push(self.n - 1 - entry);
            current = HigmanBranch::Toward {
                vertex: vertex.parent().expect("non-center"),
                entry: vertex.last_index().expect("non-center"),
            };
        }
        out
    }
}

/// Component types in the lamplighter tree; all are translation invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LampBranch {
    /// Line vertex entered from its left neighbour.
    LineFromLeft,
    LineFromRight,
    /// Line vertex entered from the ray below it.
    LineFromBelow,
    /// Ray vertex entered from above.
    RayDown,
    /// Ray vertex at the given depth entered from below.
    RayUp(u64),
}

impl LampBranch {
    /// Type of the component containing `outside`, entered from `from`.
    pub fn classify(outside: LampVertex, from: LampVertex) -> LampBranch {
        if outside.is_line() {
            if from.depth == 1 {
                LampBranch::LineFromBelow
            } else if from.column < outside.column {
                LampBranch::LineFromLeft
            } else {
                LampBranch::LineFromRight
            }
        } else if from.depth < outside.depth {
            LampBranch::RayDown
        } else {
            LampBranch::RayUp(outside.depth)
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LampBranches;

impl BranchSystem for LampBranches {
    type State = LampBranch;

    fn children(&self, state: &LampBranch) -> Vec<LampBranch> {
        use LampBranch::*;
        match *state {
            LineFromLeft => vec![LineFromLeft, RayDown],
            LineFromRight => vec![RayDown, LineFromRight],
            LineFromBelow => vec![LineFromRight, LineFromLeft],
            RayDown => vec![RayDown],
            RayUp(1) => vec![LineFromBelow],
            RayUp(k) => vec![RayUp(k - 1)],
        }
    }
}

/// Child rule for lamplighter components computed from coordinates; used to
/// check that [`LampBranches`] is the quotient of the geometric tree.
#[cfg(test)]
pub(crate) fn lamp_geometric_children(vertex: LampVertex, entry: LampVertex) -> Vec<(LampVertex, LampVertex)> {
    super::lamplighter::children(vertex, Some(entry)).into_iter().map(|c| (c, vertex)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lamp_states_match_geometry() {
        // Walk the geometric tree from several entries and check that the
        // state machine predicts every child's type.
        let starts = [
            (LampVertex { column: 3, depth: 0 }, LampVertex { column: 2, depth: 0 }),
            (LampVertex { column: -1, depth: 0 }, LampVertex { column: 0, depth: 0 }),
            (LampVertex { column: 0, depth: 0 }, LampVertex { column: 0, depth: 1 }),
            (LampVertex { column: 4, depth: 2 }, LampVertex { column: 4, depth: 1 }),
            (LampVertex { column: 4, depth: 3 }, LampVertex { column: 4, depth: 4 }),
        ];
        for (v, from) in starts {
            let mut frontier = vec![(v, from)];
            for _ in 0..6 {
                let mut next = Vec::new();
                for (v, from) in frontier {
                    let state = LampBranch::classify(v, from);
                    let kids = lamp_geometric_children(v, from);
                    let predicted = LampBranches.children(&state);
                    let actual: Vec<_> = kids.iter().map(|&(c, p)| LampBranch::classify(c, p)).collect();
                    assert_eq!(predicted, actual, "at {v:?} from {from:?}");
                    next.extend(kids);
                }
                frontier = next;
            }
        }
    }

    #[test]
    fn lamp_comparisons() {
        use LampBranch::*;
        assert_eq!(compare_branches(&LampBranches, RayDown, RayDown, 0), Comparison::Isomorphic);
        assert_eq!(compare_branches(&LampBranches, LineFromLeft, LineFromRight, 32), Comparison::Distinct);
        assert_eq!(compare_branches(&LampBranches, RayDown, RayUp(5), 32), Comparison::Distinct);
        assert_eq!(compare_branches(&LampBranches, RayDown, RayUp(5), 3), Comparison::Undecided);
    }

    #[test]
    fn higman_closed_form_agrees_with_search() {
        let sys = HigmanBranches { n: 2, m: 4 };
        let toward = |s: &str, entry| HigmanBranch::Toward { vertex: s.parse().unwrap(), entry };
        let cases = [
            (HigmanBranch::Away, toward("", 0)),
            (toward("0", 1), toward("1", 1)),
            (toward("0", 0), toward("0", 1)),
            (toward("0/1", 0), toward("2/1", 0)),
            (toward("0/1", 0), toward("", 2)),
        ];
        for (a, b) in cases {
            let searched = compare_branches(&sys, a.clone(), b.clone(), usize::MAX) == Comparison::Isomorphic;
            assert_eq!(sys.closed_form_equal(&a, &b), searched, "{a:?} vs {b:?}");
        }
        let regular = HigmanBranches { n: 2, m: 3 };
        assert_eq!(compare_branches(&regular, HigmanBranch::Away, toward("0/1", 0), usize::MAX), Comparison::Isomorphic);
    }
}
