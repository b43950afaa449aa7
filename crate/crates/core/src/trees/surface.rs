use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::branch::{compare_branches, Comparison, HigmanBranch, HigmanBranches, LampBranch, LampBranches};
use super::lamplighter;
use super::{PolygonAddress, TreeError, TreeFamily};

/// Default search depth for lamplighter branch comparisons.
pub const DEFAULT_COMPARISON_DEPTH: usize = 32;

/// A finite connected union of polygons.
///
/// The polygons form a subtree with a unique polygon closest to the center,
/// its root; the root is the first address in sorted order. The center need
/// not be included.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSurface {
    family: TreeFamily,
    polygons: BTreeSet<PolygonAddress>,
}

/// An edge of the tree leaving the surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrontierArc {
    /// Polygon of the surface the arc belongs to.
    pub owner: PolygonAddress,
    /// Child index of the arc at `owner`; the arc toward the center gets
    /// index `child_count(owner)`.
    pub slot: u32,
    pub cyclic_position: usize,
    /// Polygon on the far side of the arc.
    pub outside: PolygonAddress,
}

impl AdmissibleSurface {
    pub fn new(family: TreeFamily, polygons: impl IntoIterator<Item = PolygonAddress>) -> Result<Self, TreeError> {
        let polygons: BTreeSet<_> = polygons.into_iter().collect();
        if polygons.is_empty() {
            return Err(TreeError::EmptySurface);
        }
        for p in &polygons {
            family.validate(p)?;
        }
        let orphans = polygons
            .iter()
            .filter(|p| p.parent().is_none_or(|q| !polygons.contains(&q)))
            .count();
        if orphans != 1 {
            return Err(TreeError::Disconnected);
        }
        Ok(AdmissibleSurface { family, polygons })
    }

    pub fn center(family: TreeFamily) -> Self {
        AdmissibleSurface { family, polygons: BTreeSet::from([PolygonAddress::center()]) }
    }

    /// Parses slash-separated paths, one per line; an empty line is the center.
    pub fn parse(family: TreeFamily, text: &str) -> Result<Self, TreeError> {
        let addrs = text.lines().map(str::parse).collect::<Result<Vec<PolygonAddress>, _>>()?;
        Self::new(family, addrs)
    }

    /// Sorted paths, one per line.
    pub fn serialize(&self) -> String {
        self.polygons.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
    }

    pub fn family(&self) -> TreeFamily {
        self.family
    }

    pub fn polygons(&self) -> &BTreeSet<PolygonAddress> {
        &self.polygons
    }

    pub fn height(&self) -> usize {
        self.polygons.len()
    }

    pub fn contains(&self, addr: &PolygonAddress) -> bool {
        self.polygons.contains(addr)
    }

    pub fn contains_center(&self) -> bool {
        self.contains(&PolygonAddress::center())
    }

    pub fn root(&self) -> &PolygonAddress {
        self.polygons.first().expect("surfaces are nonempty")
    }

    pub fn is_subsurface_of(&self, other: &AdmissibleSurface) -> bool {
        self.family == other.family && self.polygons.is_subset(&other.polygons)
    }

    /// Polygons outside the surface sharing an arc with it, sorted.
    pub fn adjacent_polygons(&self) -> Vec<PolygonAddress> {
        let mut out: Vec<_> = self.frontier_arcs().into_iter().map(|a| a.outside).collect();
        out.sort();
        out
    }

    pub fn is_adjacent(&self, addr: &PolygonAddress) -> bool {
        if self.contains(addr) {
            return false;
        }
        match addr.parent() {
            Some(p) if self.contains(&p) => true,
            _ => self.root().parent().as_ref() == Some(addr),
        }
    }

    pub fn with_polygon(&self, addr: &PolygonAddress) -> Result<Self, TreeError> {
        if !self.family.contains(addr) || !self.is_adjacent(addr) {
            return Err(TreeError::NotAdjacent(addr.to_string()));
        }
        let mut polygons = self.polygons.clone();
        polygons.insert(addr.clone());
        Ok(AdmissibleSurface { family: self.family, polygons })
    }

    pub fn without_polygon(&self, addr: &PolygonAddress) -> Result<Self, TreeError> {
        if !self.contains(addr) || self.height() == 1 {
            return Err(TreeError::NotRemovable(addr.to_string()));
        }
        let mut polygons = self.polygons.clone();
        polygons.remove(addr);
        Self::new(self.family, polygons).map_err(|_| TreeError::NotRemovable(addr.to_string()))
    }

    /// Frontier arcs in boundary-walk order.
    ///
    /// The walk visits the children of each polygon in planar order, descending
    /// into those inside the surface; a non-central root contributes its arc
    /// toward the center last. The cyclic sequence is then rotated to begin at
    /// the least arc under `(owner, slot)`.
    pub fn frontier_arcs(&self) -> Vec<FrontierArc> {
        let mut raw = Vec::new();
        self.walk(self.root(), &mut raw);
        let root = self.root();
        if let Some(parent) = root.parent() {
            raw.push((root.clone(), self.family.child_count(root) as u32, parent));
        }
        let start = (0..raw.len())
            .min_by(|&i, &j| (&raw[i].0, raw[i].1).cmp(&(&raw[j].0, raw[j].1)))
            .expect("every surface has a frontier");
        raw.rotate_left(start);
        raw.into_iter()
            .enumerate()
            .map(|(cyclic_position, (owner, slot, outside))| FrontierArc { owner, slot, cyclic_position, outside })
            .collect()
    }

    fn walk(&self, v: &PolygonAddress, out: &mut Vec<(PolygonAddress, u32, PolygonAddress)>) {
        for i in 0..self.family.child_count(v) as u32 {
            let c = v.child(i);
            if self.contains(&c) {
                self.walk(&c, out);
            } else {
                out.push((v.clone(), i, c));
            }
        }
    }

    /// Order of the group of frontier rotations that preserve the cyclic word
    /// of complement types; 0 when only the identity does.
    ///
    /// Lamplighter comparisons search to [`DEFAULT_COMPARISON_DEPTH`].
    pub fn rotation_order(&self) -> Result<u64, TreeError> {
        self.rotation_order_within(DEFAULT_COMPARISON_DEPTH)
    }

    pub fn rotation_order_within(&self, max_depth: usize) -> Result<u64, TreeError> {
        let arcs = self.frontier_arcs();
        let c = arcs.len();
        let equal = self.type_equality(&arcs, max_depth);
        let mut memo: HashMap<(usize, usize), Result<bool, TreeError>> = HashMap::new();
        let mut eq = |i: usize, j: usize| {
            let key = (i.min(j), i.max(j));
            memo.entry(key).or_insert_with(|| equal(key.0, key.1)).clone()
        };
        for period in (1..=c).filter(|p| c.is_multiple_of(*p)) {
            let mut undecided = None;
            let mut invariant = true;
            for i in 0..c {
                match eq(i, (i + period) % c) {
                    Ok(true) => {}
                    Ok(false) => {
                        invariant = false;
                        break;
                    }
                    Err(e) => undecided = Some(e),
                }
            }
            if !invariant {
                continue;
            }
            if let Some(e) = undecided {
                return Err(e);
            }
            let order = (c / period) as u64;
            return Ok(if order == 1 { 0 } else { order });
        }
        unreachable!("the full period always preserves the word")
    }

    /// Equality test on the complement types of two frontier arcs.
    fn type_equality<'a>(
        &'a self,
        arcs: &'a [FrontierArc],
        max_depth: usize,
    ) -> Box<dyn Fn(usize, usize) -> Result<bool, TreeError> + 'a> {
        match self.family {
            TreeFamily::Higman { n, m } => {
                let system = HigmanBranches { n, m };
                let types: Vec<HigmanBranch> = arcs.iter().map(higman_branch).collect();
                Box::new(move |i, j| Ok(system.closed_form_equal(&types[i], &types[j])))
            }
            TreeFamily::Lamplighter => {
                let types: Vec<LampBranch> = arcs.iter().map(lamp_branch).collect();
                Box::new(move |i, j| match compare_branches(&LampBranches, types[i], types[j], max_depth) {
                    Comparison::Isomorphic => Ok(true),
                    Comparison::Distinct => Ok(false),
                    Comparison::Undecided => Err(TreeError::Undecided { depth: max_depth }),
                })
            }
        }
    }

    /// Complement types of the frontier arcs in a Higman tree, in walk order.
    pub fn higman_branches(&self) -> Vec<HigmanBranch> {
        self.frontier_arcs().iter().map(higman_branch).collect()
    }

    /// Distance from the root to the center: the number of polygons that must
    /// be added before the surface contains the center.
    pub fn central_height(&self) -> usize {
        self.root().depth()
    }

    /// Adds the adjacent polygon nearest the center; identity on surfaces
    /// already containing it.
    pub fn tau_step(&self) -> AdmissibleSurface {
        match self.root().parent() {
            None => self.clone(),
            Some(p) => {
                let mut polygons = self.polygons.clone();
                polygons.insert(p);
                AdmissibleSurface { family: self.family, polygons }
            }
        }
    }

    /// Smallest surface of central height zero containing this one.
    pub fn spine_projection(&self) -> AdmissibleSurface {
        let mut s = self.clone();
        while !s.contains_center() {
            s = s.tau_step();
        }
        s
    }
}

fn higman_branch(arc: &FrontierArc) -> HigmanBranch {
    if arc.owner.is_ancestor_of(&arc.outside) {
        HigmanBranch::Away
    } else {
        HigmanBranch::Toward { vertex: arc.outside.clone(), entry: arc.owner.last_index().expect("non-center root") }
    }
}

fn lamp_branch(arc: &FrontierArc) -> LampBranch {
    let (outside, _) = lamplighter::locate(&arc.outside).expect("valid address");
    let (owner, _) = lamplighter::locate(&arc.owner).expect("valid address");
    LampBranch::classify(outside, owner)
}

impl fmt::Display for AdmissibleSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paths: Vec<String> = self
            .polygons
            .iter()
            .map(|p| if p.is_center() { "()".to_string() } else { p.to_string() })
            .collect();
        write!(f, "{{{}}}", paths.join(", "))
    }
}
