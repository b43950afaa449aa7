//! Finite abstract simplicial complexes and exact integer homology.

mod chain;
mod matrix;
pub mod snf;

pub use chain::{ChainComplex, HomologyReport};
pub use matrix::SparseMatrix;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("simplex {0:?} is not in the complex")]
    AbsentSimplex(Vec<usize>),
    #[error("complexes share vertices {0:?}")]
    OverlappingVertices(Vec<usize>),
    #[error("the complex is empty")]
    EmptyComplex,
    #[error("an invariant factor does not fit in 64 bits")]
    TorsionOverflow,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A finite simplicial complex stored by its facets.
///
/// Facets are sorted vertex lists, none contained in another, kept in sorted
/// order. The complex with no facets is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimplicialComplex {
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The complex generated by the given simplices; non-maximal ones are
    /// absorbed and empty ones ignored.
    pub fn from_simplices<I, S>(simplices: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        let mut all: Vec<Vec<usize>> = simplices
            .into_iter()
            .map(|s| {
                let set: BTreeSet<usize> = s.into_iter().collect();
                set.into_iter().collect::<Vec<_>>()
            })
            .filter(|s| !s.is_empty())
            .collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for s in all {
            if !facets.iter().any(|f| is_subset(&s, f)) {
                facets.push(s);
            }
        }
        facets.sort();
        SimplicialComplex { facets }
    }

    pub fn simplex(vertices: impl IntoIterator<Item = usize>) -> Self {
        Self::from_simplices([vertices])
    }

    /// One facet per line, vertices separated by whitespace; blank lines and
    /// lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, HomologyError> {
        let mut facets = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let facet = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| HomologyError::Parse { line: k + 1, message: format!("bad vertex `{t}`") })
                })
                .collect::<Result<Vec<_>, _>>()?;
            facets.push(facet);
        }
        Ok(Self::from_simplices(facets))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let line: Vec<String> = f.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", line.join(" ")).expect("writing to a string");
        }
        out
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.facets.iter().flatten().copied().collect()
    }

    /// Largest facet size minus one; -1 for the empty complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn contains_simplex(&self, simplex: &[usize]) -> bool {
        let s = sorted(simplex);
        if s.is_empty() {
            return !self.is_empty();
        }
        self.facets.iter().any(|f| is_subset(&s, f))
    }

    /// All simplices of each dimension, sorted.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.dimension();
        if top < 0 {
            return Vec::new();
        }
        let mut levels: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top as usize + 1];
        for f in &self.facets {
            for mask in 1u64..(1u64 << f.len()) {
                let face: Vec<usize> = (0..f.len()).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                levels[face.len() - 1].insert(face);
            }
        }
        levels.into_iter().map(|l| l.into_iter().collect()).collect()
    }

    /// Face counts `f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }

    /// Ordinary (unreduced) Euler characteristic from face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    /// Simplices disjoint from `simplex` whose union with it is a simplex.
    pub fn link(&self, simplex: &[usize]) -> Result<SimplicialComplex, HomologyError> {
        let s = sorted(simplex);
        if !self.contains_simplex(&s) {
            return Err(HomologyError::AbsentSimplex(s));
        }
        Ok(Self::from_simplices(
            self.facets.iter().filter(|f| is_subset(&s, f)).map(|f| f.iter().copied().filter(|v| !s.contains(v)).collect::<Vec<_>>()),
        ))
    }

    /// Union of the facets containing `simplex`.
    pub fn star(&self, simplex: &[usize]) -> Result<SimplicialComplex, HomologyError> {
        let s = sorted(simplex);
        if !self.contains_simplex(&s) {
            return Err(HomologyError::AbsentSimplex(s));
        }
        Ok(Self::from_simplices(self.facets.iter().filter(|f| is_subset(&s, f)).cloned()))
    }

    /// Facets are unions of one facet from each side; an empty side acts as
    /// the unit.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex, HomologyError> {
        let shared: Vec<usize> = self.vertices().intersection(&other.vertices()).copied().collect();
        if !shared.is_empty() {
            return Err(HomologyError::OverlappingVertices(shared));
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let mut facets = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.iter().chain(b).copied().collect::<Vec<_>>());
            }
        }
        Ok(Self::from_simplices(facets))
    }

    /// Renames vertices; `map` must be injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> SimplicialComplex {
        Self::from_simplices(self.facets.iter().map(|f| f.iter().map(|&v| map(v)).collect::<Vec<_>>()))
    }

    /// The subcomplex of simplices with all vertices in `keep`.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> SimplicialComplex {
        Self::from_simplices(self.facets.iter().map(|f| f.iter().copied().filter(|v| keep.contains(v)).collect::<Vec<_>>()))
    }

    /// Vertex adjacency of the 1-skeleton.
    pub fn adjacency(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        let mut adj: BTreeMap<usize, BTreeSet<usize>> = self.vertices().into_iter().map(|v| (v, BTreeSet::new())).collect();
        for f in &self.facets {
            for &a in f {
                for &b in f {
                    if a != b {
                        adj.get_mut(&a).expect("vertex listed").insert(b);
                    }
                }
            }
        }
        adj
    }

    /// Whether every set of pairwise adjacent vertices spans a simplex.
    pub fn is_flag(&self) -> bool {
        let adj = self.adjacency();
        maximal_cliques(&adj).iter().all(|c| self.contains_simplex(c))
    }

    pub fn chain_complex(&self) -> Result<ChainComplex, HomologyError> {
        if self.is_empty() {
            return Err(HomologyError::EmptyComplex);
        }
        let levels = self.faces_by_dimension();
        let index: Vec<BTreeMap<&[usize], usize>> =
            levels.iter().map(|l| l.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect()).collect();
        let mut higher = Vec::new();
        for d in 1..levels.len() {
            let columns = levels[d]
                .iter()
                .map(|face| {
                    (0..face.len())
                        .map(|j| {
                            let mut sub = face.clone();
                            sub.remove(j);
                            let sign = if j % 2 == 0 { 1 } else { -1 };
                            (index[d - 1][sub.as_slice()], sign)
                        })
                        .collect()
                })
                .collect();
            higher.push(SparseMatrix::from_columns(levels[d - 1].len(), columns));
        }
        Ok(ChainComplex::augmented(levels.iter().map(Vec::len).collect(), higher))
    }

    pub fn reduced_homology(&self) -> Result<HomologyReport, HomologyError> {
        self.chain_complex()?.reduced_homology()
    }

    /// Whether the complex is nonempty and its reduced homology vanishes in
    /// degrees `0..=d`. Necessary for `d`-connectivity; sufficient only for
    /// `d <= 0`.
    pub fn homological_connectivity(&self, d: isize) -> bool {
        assert!(d >= -1, "connectivity degree must be at least -1");
        if self.is_empty() {
            return false;
        }
        let report = self.reduced_homology().expect("nonempty complex");
        (0..=d).all(|i| {
            let i = i as usize;
            report.betti.get(i).copied().unwrap_or(0) == 0 && !report.torsion.iter().any(|(deg, _)| *deg == i)
        })
    }
}

fn sorted(s: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    set.into_iter().collect()
}

/// Both slices sorted ascending.
fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// Bron-Kerbosch with pivoting; each clique sorted, output sorted.
pub fn maximal_cliques(adj: &BTreeMap<usize, BTreeSet<usize>>) -> Vec<Vec<usize>> {
    fn expand(
        r: &mut Vec<usize>,
        mut p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        adj: &BTreeMap<usize, BTreeSet<usize>>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p.union(&x).max_by_key(|u| adj[u].intersection(&p).count()).copied().expect("nonempty");
        let candidates: Vec<usize> = p.difference(&adj[&pivot]).copied().collect();
        for v in candidates {
            r.push(v);
            expand(r, p.intersection(&adj[&v]).copied().collect(), x.intersection(&adj[&v]).copied().collect(), adj, out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    expand(&mut Vec::new(), adj.keys().copied().collect(), BTreeSet::new(), adj, &mut out);
    out.sort();
    out
}

/// Small named complexes used across tests and the CLI.
pub mod corpus {
    use super::SimplicialComplex;

    pub fn simplex_boundary(dim: usize) -> SimplicialComplex {
        let n = dim + 2;
        SimplicialComplex::from_simplices((0..n).map(|skip| (0..n).filter(move |&v| v != skip)))
    }

    /// Cycle graph on `n >= 3` vertices as a 1-complex.
    pub fn cycle(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_simplices((0..n).map(|i| [i, (i + 1) % n]))
    }

    /// Two isolated vertices with the given labels.
    pub fn zero_sphere(a: usize, b: usize) -> SimplicialComplex {
        SimplicialComplex::from_simplices([[a], [b]])
    }

    /// Boundary of the cross-polytope on `2k` vertices: `k`-fold join of 0-spheres.
    pub fn octahedral_sphere(k: usize) -> SimplicialComplex {
        (0..k).fold(SimplicialComplex::empty(), |acc, i| acc.join(&zero_sphere(2 * i, 2 * i + 1)).expect("disjoint labels"))
    }

    /// The seven-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
    pub fn seven_vertex_torus() -> SimplicialComplex {
        SimplicialComplex::from_simplices((0..7).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]))
    }

    /// Six-vertex real projective plane (the hemi-icosahedron).
    pub fn projective_plane() -> SimplicialComplex {
        SimplicialComplex::from_simplices([
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ])
    }

    /// Complexes with at most twelve vertices exercising every degree and
    /// torsion.
    pub fn standard() -> Vec<(&'static str, SimplicialComplex)> {
        vec![
            ("point", SimplicialComplex::simplex([0])),
            ("triangle-boundary", simplex_boundary(1)),
            ("tetrahedron-boundary", simplex_boundary(2)),
            ("four-simplex-boundary", simplex_boundary(3)),
            ("full-3-simplex", SimplicialComplex::simplex(0..4)),
            ("pentagon", cycle(5)),
            ("two-triangles", SimplicialComplex::from_simplices([[0, 1, 2], [3, 4, 5]])),
            ("octahedron", octahedral_sphere(3)),
            ("torus", seven_vertex_torus()),
            ("projective-plane", projective_plane()),
            ("wedge-of-circles", SimplicialComplex::from_simplices([[0, 1], [1, 2], [2, 0], [0, 3], [3, 4], [4, 0]])),
            ("cross-polytope-4", octahedral_sphere(4)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::corpus::*;
    use super::*;

    fn betti(k: &SimplicialComplex) -> Vec<usize> {
        k.reduced_homology().unwrap().betti
    }

    #[test]
    fn classical_homology() {
        assert_eq!(betti(&simplex_boundary(2)), vec![0, 0, 1]);
        let torus = seven_vertex_torus();
        assert_eq!(torus.f_vector(), vec![7, 21, 14]);
        assert_eq!(torus.euler_characteristic(), 0);
        let report = torus.reduced_homology().unwrap();
        assert_eq!(report.betti, vec![0, 2, 1]);
        assert!(report.torsion.is_empty());
        assert_eq!(betti(&cycle(5)), vec![0, 1]);
        let rp2 = projective_plane().reduced_homology().unwrap();
        assert_eq!(rp2.betti, vec![0, 0, 0]);
        assert_eq!(rp2.torsion, vec![(1, vec![2])]);
    }

    #[test]
    fn links() {
        let tri = simplex_boundary(1);
        assert_eq!(tri.link(&[0]).unwrap(), SimplicialComplex::from_simplices([[1], [2]]));
        let full = SimplicialComplex::simplex(0..3);
        assert_eq!(full.link(&[0, 1]).unwrap(), SimplicialComplex::simplex([2]));
        let oct = octahedral_sphere(3);
        assert_eq!(oct.link(&[0]).unwrap(), SimplicialComplex::from_simplices([[2, 4], [2, 5], [3, 4], [3, 5]]));
        assert_eq!(tri.link(&[0, 1, 2]), Err(HomologyError::AbsentSimplex(vec![0, 1, 2])));
    }

    #[test]
    fn joins() {
        let square = zero_sphere(0, 1).join(&zero_sphere(2, 3)).unwrap();
        assert_eq!(square.facets().len(), 4);
        assert_eq!(betti(&square), vec![0, 1]);
        assert_eq!(betti(&octahedral_sphere(3)), vec![0, 0, 1]);
        let cone = SimplicialComplex::simplex([9]).join(&cycle(5)).unwrap();
        assert!(cone.reduced_homology().unwrap().is_trivial());
        assert!(matches!(cycle(3).join(&cycle(3)), Err(HomologyError::OverlappingVertices(_))));
    }

    #[test]
    fn flagness() {
        assert!(!simplex_boundary(1).is_flag());
        assert!(SimplicialComplex::simplex(0..5).is_flag());
        assert!(octahedral_sphere(3).is_flag());
        assert!(cycle(4).is_flag());
    }

    #[test]
    fn connectivity() {
        assert!(octahedral_sphere(3).homological_connectivity(1));
        assert!(!cycle(5).homological_connectivity(1));
        assert!(cycle(5).homological_connectivity(0));
        assert!(SimplicialComplex::simplex([0]).homological_connectivity(-1));
        assert!(!SimplicialComplex::empty().homological_connectivity(-1));
    }

    #[test]
    fn empty_complex_has_no_homology() {
        assert_eq!(SimplicialComplex::empty().reduced_homology(), Err(HomologyError::EmptyComplex));
    }

    #[test]
    fn text_round_trip() {
        let k = SimplicialComplex::parse("# a comment\n0 1 2\n\n2 3\n1 0\n").unwrap();
        assert_eq!(k.facets(), &[vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(SimplicialComplex::parse(&k.to_text()).unwrap(), k);
        assert!(SimplicialComplex::parse("0 x").is_err());
    }

    #[test]
    fn homology_report_json_shape() {
        let report = projective_plane().reduced_homology().unwrap();
        assert_eq!(serde_json::to_string(&report).unwrap(), r#"{"betti":[0,0,0],"torsion":[[1,[2]]]}"#);
    }
}
