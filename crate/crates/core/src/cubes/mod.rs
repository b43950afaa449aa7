//! Finite pieces of the cube complex whose vertices are admissible surfaces,
//! with identity markings.
//!
//! A cube is a surface `B` together with pairwise distinct polygons
//! `H_1..H_k` adjacent to `B`; its vertices are the `2^k` surfaces
//! `B ∪ I` for `I ⊆ {H_i}`. A [`CubeFragment`] is always the full
//! subcomplex spanned by its vertex set.

mod census;
mod flag;
mod interval;
pub mod random;
mod spine;

pub use census::spine_sublevel_census;
pub use flag::{three_square_configuration, SquareConfiguration};
pub use interval::{build_interval, morse_collapse, CollapseStep};
pub use spine::{
    descending_link_params, skeleton_descending_link, spine_retract, DescendingLinkParams, LayerStep, SkeletonLink,
    SpineRetraction,
};

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::simplicial::{ChainComplex, HomologyError, HomologyReport, SimplicialComplex, SparseMatrix};
use crate::trees::{AdmissibleSurface, PolygonAddress, TreeError, TreeFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("surface {0} is not contained in the top surface")]
    NotDominated(String),
    #[error("claim violated: {0}")]
    ClaimViolation(String),
    #[error("height {k} is too small: descending links need k > {m}")]
    HeightTooSmall { k: u64, m: u64 },
    #[error("unsupported for {0}")]
    Unsupported(TreeFamily),
    #[error("surface must contain the central polygon")]
    NotInSpine,
    #[error("surface must have at least {0} polygons")]
    TooShort(usize),
    #[error("fragment has no vertices")]
    EmptyFragment,
    #[error("count overflow at height {0}")]
    Overflow(usize),
    #[error("surfaces from different trees")]
    MixedFamilies,
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    pub base: AdmissibleSurface,
    pub additions: BTreeSet<PolygonAddress>,
}

impl Cube {
    pub fn dimension(&self) -> usize {
        self.additions.len()
    }

    fn with(&self, extra: impl IntoIterator<Item = PolygonAddress>) -> AdmissibleSurface {
        let polygons = self.base.polygons().iter().cloned().chain(extra);
        AdmissibleSurface::new(self.base.family(), polygons).expect("additions are adjacent to the base")
    }

    /// All `2^k` vertices.
    pub fn vertices(&self) -> Vec<AdmissibleSurface> {
        subsets(&self.additions.iter().cloned().collect::<Vec<_>>()).into_iter().map(|s| self.with(s)).collect()
    }

    /// The vertex of greatest height.
    pub fn apex(&self) -> AdmissibleSurface {
        self.with(self.additions.iter().cloned())
    }

    /// Every face, including the cube itself.
    pub fn faces(&self) -> Vec<Cube> {
        let adds: Vec<PolygonAddress> = self.additions.iter().cloned().collect();
        let mut out = Vec::new();
        // Each addition is kept free, absorbed into the base, or dropped.
        for code in 0..3usize.pow(adds.len() as u32) {
            let mut c = code;
            let mut base_extra = Vec::new();
            let mut free = BTreeSet::new();
            for h in &adds {
                match c % 3 {
                    0 => {
                        free.insert(h.clone());
                    }
                    1 => base_extra.push(h.clone()),
                    _ => {}
                }
                c /= 3;
            }
            out.push(Cube { base: self.with(base_extra), additions: free });
        }
        out
    }
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0..1usize << items.len())
        .map(|mask| (0..items.len()).filter(|&i| mask >> i & 1 == 1).map(|i| items[i].clone()).collect())
        .collect()
}

/// Vertices sorted by height, then by serialized form; position in this
/// order is a vertex's id in exports.
pub fn canonical_vertex_order<'a>(vertices: impl IntoIterator<Item = &'a AdmissibleSurface>) -> Vec<AdmissibleSurface> {
    let mut keyed: Vec<(usize, String, &AdmissibleSurface)> =
        vertices.into_iter().map(|v| (v.height(), v.serialize(), v)).collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.into_iter().map(|(_, _, v)| v.clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeFragment {
    family: TreeFamily,
    vertices: BTreeSet<AdmissibleSurface>,
    top_cubes: BTreeSet<Cube>,
}

/// A violation of the local dimension bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundViolation {
    pub vertex: AdmissibleSurface,
    pub cube: Cube,
    pub frontier: usize,
}

impl CubeFragment {
    /// The full subcomplex on `vertices`: every cube whose vertices all lie in
    /// the set.
    pub fn spanned(family: TreeFamily, vertices: BTreeSet<AdmissibleSurface>) -> Result<Self, CubeError> {
        if vertices.is_empty() {
            return Err(CubeError::EmptyFragment);
        }
        if vertices.iter().any(|v| v.family() != family) {
            return Err(CubeError::MixedFamilies);
        }
        let mut fragment = CubeFragment { family, vertices, top_cubes: BTreeSet::new() };
        let mut candidates = Vec::new();
        for base in &fragment.vertices {
            let ups: Vec<PolygonAddress> = base
                .adjacent_polygons()
                .into_iter()
                .filter(|h| base.with_polygon(h).is_ok_and(|s| fragment.vertices.contains(&s)))
                .collect();
            for additions in fragment.maximal_valid_sets(base, &ups) {
                candidates.push(Cube { base: base.clone(), additions });
            }
        }
        let tops: BTreeSet<Cube> = candidates.into_iter().filter(|c| !fragment.is_proper_face(c)).collect();
        fragment.top_cubes = tops;
        Ok(fragment)
    }

    /// Maximal subsets `A` of `ups` with `base ∪ I` a vertex for all `I ⊆ A`.
    fn maximal_valid_sets(&self, base: &AdmissibleSurface, ups: &[PolygonAddress]) -> Vec<BTreeSet<PolygonAddress>> {
        let mut valid: BTreeSet<BTreeSet<PolygonAddress>> = BTreeSet::from([BTreeSet::new()]);
        let mut layer: Vec<BTreeSet<PolygonAddress>> = vec![BTreeSet::new()];
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for set in &layer {
                let start = set.last();
                for h in ups.iter().filter(|h| start.is_none_or(|s| *h > s)) {
                    let mut bigger = set.clone();
                    bigger.insert(h.clone());
                    let faces_ok = bigger.iter().all(|x| {
                        let mut smaller = bigger.clone();
                        smaller.remove(x);
                        valid.contains(&smaller)
                    });
                    if faces_ok && self.vertices.contains(&union(base, &bigger)) {
                        next.insert(bigger);
                    }
                }
            }
            valid.extend(next.iter().cloned());
            layer = next.into_iter().collect();
        }
        valid
            .iter()
            .filter(|s| !ups.iter().any(|h| !s.contains(h) && valid.contains(&with_one(s, h))))
            .cloned()
            .collect()
    }

    /// Whether `cube` is a face of a larger cube with a smaller base.
    fn is_proper_face(&self, cube: &Cube) -> bool {
        cube.base.polygons().iter().any(|p| {
            let Ok(smaller) = cube.base.without_polygon(p) else { return false };
            if !self.vertices.contains(&smaller) {
                return false;
            }
            let mut additions = cube.additions.clone();
            additions.insert(p.clone());
            self.contains_cube(&Cube { base: smaller, additions })
        })
    }

    pub fn family(&self) -> TreeFamily {
        self.family
    }

    pub fn vertices(&self) -> &BTreeSet<AdmissibleSurface> {
        &self.vertices
    }

    pub fn top_cubes(&self) -> &BTreeSet<Cube> {
        &self.top_cubes
    }

    /// Whether every vertex of `cube` lies in the fragment.
    pub fn contains_cube(&self, cube: &Cube) -> bool {
        cube.base.family() == self.family
            && cube.additions.iter().all(|h| cube.base.is_adjacent(h))
            && subsets(&cube.additions.iter().cloned().collect::<Vec<_>>())
                .into_iter()
                .all(|s| self.vertices.contains(&union(&cube.base, &s.into_iter().collect())))
    }

    /// Every cube of the fragment, faces included.
    pub fn cells(&self) -> BTreeSet<Cube> {
        self.top_cubes.iter().flat_map(Cube::faces).collect()
    }

    pub fn dimension(&self) -> usize {
        self.top_cubes.iter().map(Cube::dimension).max().unwrap_or(0)
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dimension() + 1];
        for c in self.cells() {
            counts[c.dimension()] += 1;
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cell_counts().iter().enumerate().map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    /// Cellular chain complex with `d(B; H_1..H_k) = sum_i (-1)^i [(B ∪ H_i; rest) - (B; rest)]`,
    /// additions taken in address order.
    pub fn chain_complex(&self) -> ChainComplex {
        let mut by_dim: Vec<Vec<Cube>> = vec![Vec::new(); self.dimension() + 1];
        for c in self.cells() {
            by_dim[c.dimension()].push(c);
        }
        let index: Vec<BTreeMap<&Cube, usize>> =
            by_dim.iter().map(|cells| cells.iter().enumerate().map(|(i, c)| (c, i)).collect()).collect();
        let mut higher = Vec::new();
        for d in 1..by_dim.len() {
            let columns = by_dim[d]
                .iter()
                .map(|cube| {
                    let mut col = Vec::with_capacity(2 * d);
                    for (i, h) in cube.additions.iter().enumerate() {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        let mut rest = cube.additions.clone();
                        rest.remove(h);
                        let front = Cube { base: cube.base.with_polygon(h).expect("adjacent"), additions: rest.clone() };
                        let back = Cube { base: cube.base.clone(), additions: rest };
                        col.push((index[d - 1][&front], sign));
                        col.push((index[d - 1][&back], -sign));
                    }
                    col
                })
                .collect();
            higher.push(SparseMatrix::from_columns(by_dim[d - 1].len(), columns));
        }
        ChainComplex::augmented(by_dim.iter().map(Vec::len).collect(), higher)
    }

    pub fn reduced_homology(&self) -> Result<HomologyReport, CubeError> {
        Ok(self.chain_complex().reduced_homology()?)
    }

    /// Triangulation by the chains `B ⊂ B ∪ {H_σ1} ⊂ ... ⊂ B ∪ {H_σ1..H_σk}`
    /// of each cube, over all orderings `σ`. Vertex ids follow
    /// [`canonical_vertex_order`], which is returned alongside.
    pub fn triangulate(&self) -> (SimplicialComplex, Vec<AdmissibleSurface>) {
        let order = canonical_vertex_order(&self.vertices);
        let id: BTreeMap<&AdmissibleSurface, usize> = order.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut simplices = Vec::new();
        for cube in &self.top_cubes {
            let adds: Vec<PolygonAddress> = cube.additions.iter().cloned().collect();
            for perm in permutations(adds.len()) {
                let mut chain = vec![id[&cube.base]];
                let mut current = cube.base.clone();
                for &i in &perm {
                    current = current.with_polygon(&adds[i]).expect("adjacent");
                    chain.push(id[&current]);
                }
                simplices.push(chain);
            }
        }
        (SimplicialComplex::from_simplices(simplices), order)
    }

    /// Cubes exceeding the frontier size of one of their vertices; empty when
    /// the local dimension bound holds.
    pub fn dimension_bound_violations(&self) -> Vec<BoundViolation> {
        let mut frontier: BTreeMap<&AdmissibleSurface, usize> = BTreeMap::new();
        for v in &self.vertices {
            frontier.insert(v, v.frontier_arcs().len());
        }
        let mut out = Vec::new();
        for cube in self.cells() {
            for v in cube.vertices() {
                let f = frontier[&v];
                if cube.dimension() > f {
                    out.push(BoundViolation { vertex: v, cube: cube.clone(), frontier: f });
                }
            }
        }
        out
    }
}

fn union(base: &AdmissibleSurface, extra: &BTreeSet<PolygonAddress>) -> AdmissibleSurface {
    AdmissibleSurface::new(base.family(), base.polygons().iter().chain(extra).cloned()).unwrap_or_else(|_| base.clone())
}

fn with_one(set: &BTreeSet<PolygonAddress>, h: &PolygonAddress) -> BTreeSet<PolygonAddress> {
    let mut out = set.clone();
    out.insert(h.clone());
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(family: TreeFamily, paths: &[&str]) -> AdmissibleSurface {
        AdmissibleSurface::new(family, paths.iter().map(|p| p.parse().unwrap())).unwrap()
    }

    #[test]
    fn square_fragment() {
        let f = TreeFamily::higman(2, 3).unwrap();
        let s = surf(f, &[""]);
        let sigma = surf(f, &["", "0", "1"]);
        let x = build_interval(&[s], &sigma).unwrap();
        assert_eq!(x.vertices().len(), 4);
        assert_eq!(x.cell_counts(), vec![4, 4, 1]);
        assert_eq!(x.top_cubes().len(), 1);
        assert!(x.reduced_homology().unwrap().is_trivial());
        let (tri, order) = x.triangulate();
        assert_eq!(order.len(), 4);
        assert_eq!(tri.facets().len(), 2);
    }

    #[test]
    fn boundary_squares_to_zero_on_a_3_cube() {
        let f = TreeFamily::higman(2, 3).unwrap();
        let x = build_interval(&[surf(f, &[""])], &surf(f, &["", "0", "1", "2"])).unwrap();
        assert_eq!(x.cell_counts(), vec![8, 12, 6, 1]);
        assert!(x.chain_complex().is_chain_complex());
        assert!(x.reduced_homology().unwrap().is_trivial());
    }

    #[test]
    fn faces_of_a_square() {
        let f = TreeFamily::higman(2, 3).unwrap();
        let c = Cube { base: surf(f, &[""]), additions: ["0", "1"].iter().map(|p| p.parse().unwrap()).collect() };
        assert_eq!(c.faces().len(), 9);
        assert_eq!(c.vertices().len(), 4);
        assert_eq!(c.apex(), surf(f, &["", "0", "1"]));
    }

    #[test]
    fn spanned_detects_missing_fillings() {
        // Boundary of a square: four vertices but the apex is left out.
        let f = TreeFamily::higman(2, 3).unwrap();
        let vertices: BTreeSet<_> =
            [surf(f, &[""]), surf(f, &["", "0"]), surf(f, &["", "1"]), surf(f, &["", "0", "1", "1/0"])].into();
        let frag = CubeFragment::spanned(f, vertices).unwrap();
        assert_eq!(frag.cell_counts(), vec![4, 2]);
        assert_eq!(frag.reduced_homology().unwrap().betti, vec![1, 0]);
    }
}
