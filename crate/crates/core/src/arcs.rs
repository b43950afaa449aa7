//! Separation relations on marked points of a circle, connectivity bounds
//! for separated-arc complexes, their fundamental domains, and the explicit
//! sphere witnesses.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::simplicial::{maximal_cliques, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error("need at least one marked point")]
    NoPoints,
    #[error("relation matrix must be square and symmetric")]
    NotSymmetric,
}

/// Distance between `i` and `j` on the cycle `Z_q`.
pub fn cycle_distance(q: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j) % q;
    d.min(q - d)
}

/// A symmetric relation on the marked points `Z_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationRelation {
    q: usize,
    related: Vec<Vec<bool>>,
}

impl SeparationRelation {
    /// Points are related when their cycle distance exceeds `r`.
    pub fn separated(q: usize, r: usize) -> Result<Self, ArcError> {
        if q == 0 {
            return Err(ArcError::NoPoints);
        }
        let related = (0..q).map(|i| (0..q).map(|j| cycle_distance(q, i, j) > r).collect()).collect();
        Ok(SeparationRelation { q, related })
    }

    pub fn from_matrix(related: Vec<Vec<bool>>) -> Result<Self, ArcError> {
        let q = related.len();
        if q == 0 {
            return Err(ArcError::NoPoints);
        }
        let square = related.iter().all(|row| row.len() == q);
        if !square || (0..q).any(|i| (0..q).any(|j| related[i][j] != related[j][i])) {
            return Err(ArcError::NotSymmetric);
        }
        Ok(SeparationRelation { q, related })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.related[i][j]
    }

    /// Graph on `Z_q` joining distinct related points.
    pub fn graph(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        (0..self.q).map(|i| (i, (0..self.q).filter(|&j| j != i && self.related[i][j]).collect())).collect()
    }

    /// Least size of an inclusion-maximal set of pairwise related points.
    ///
    /// Computed from all maximal cliques of the relation graph; with nothing
    /// related every singleton is maximal and the answer is 1.
    pub fn min_related(&self) -> usize {
        maximal_cliques(&self.graph()).iter().map(Vec::len).min().expect("a nonempty graph has a maximal clique")
    }
}

/// `floor(q / (r + 1))`.
pub fn separation_min_formula(q: usize, r: usize) -> usize {
    q / (r + 1)
}

/// `floor((p + floor(q / (r + 1))) / 3) - 2`. Values below -1 carry no
/// information; -1 means nonempty.
pub fn connectivity_bound(p: usize, q: usize, r: usize) -> i64 {
    ((p + separation_min_formula(q, r)) / 3) as i64 - 2
}

/// `floor((punctures + min_related) / 3) - 2`.
pub fn general_bound(punctures: usize, relation: &SeparationRelation) -> i64 {
    ((punctures + relation.min_related()) / 3) as i64 - 2
}

/// `min(punctures, min_related) - 1`, the dimension of the spheres the
/// complex is expected to be a bouquet of. A guess, not a theorem.
pub fn conjectured_sphere_dimension(punctures: usize, relation: &SeparationRelation) -> i64 {
    punctures.min(relation.min_related()) as i64 - 1
}

/// Subsets of `Z_q` with pairwise cycle distance above `r`, of size at most
/// `cap` when given. This is the independence complex of the circulant graph
/// with connections `1..=r`.
pub fn fundamental_domain(q: usize, r: usize, cap: Option<usize>) -> Result<SimplicialComplex, ArcError> {
    let relation = SeparationRelation::separated(q, r)?;
    let cliques = maximal_cliques(&relation.graph());
    let facets: Vec<Vec<usize>> = match cap {
        None => cliques,
        Some(cap) => cliques.iter().flat_map(|c| subsets_of_size(c, cap.min(c.len()))).collect(),
    };
    Ok(SimplicialComplex::from_simplices(facets))
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = subsets_of_size(&items[1..], k);
    for mut rest in subsets_of_size(&items[1..], k - 1) {
        rest.insert(0, items[0]);
        out.push(rest);
    }
    out
}

/// The arc of generation `generation` from marked point `marked_point`.
///
/// Arcs at different marked points live in disjoint discs and are compatible;
/// arcs at the same marked point never are.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolicArc {
    pub marked_point: usize,
    pub generation: usize,
}

impl SymbolicArc {
    pub fn compatible(&self, other: &SymbolicArc) -> bool {
        self.marked_point != other.marked_point
    }

    /// Vertex id of this arc; generation `g` of marked point `i` (both from 1)
    /// among `k` marked points is `(g - 1) * k + (i - 1)`.
    pub fn vertex_id(&self, k: usize) -> usize {
        (self.generation - 1) * k + (self.marked_point - 1)
    }
}

/// Full subcomplex on the arcs of generations `j` and `j + 1` at marked
/// points `1..=k`; the `k`-fold join of 0-spheres.
pub fn sphere_witness(k: usize, j: usize) -> SimplicialComplex {
    assert!(k >= 1 && j >= 1, "witness indices start at 1");
    let arcs: Vec<SymbolicArc> = (1..=k)
        .flat_map(|i| [j, j + 1].map(|g| SymbolicArc { marked_point: i, generation: g }))
        .collect();
    // Pairwise compatible sets pick at most one arc per marked point; the
    // maximal ones pick exactly one.
    let mut facets: Vec<Vec<SymbolicArc>> = vec![Vec::new()];
    for i in 1..=k {
        let choices: Vec<SymbolicArc> = arcs.iter().copied().filter(|a| a.marked_point == i).collect();
        facets = facets
            .into_iter()
            .flat_map(|f| {
                choices.iter().map(move |&a| {
                    debug_assert!(f.iter().all(|b| b.compatible(&a)));
                    let mut g = f.clone();
                    g.push(a);
                    g
                })
            })
            .collect();
    }
    SimplicialComplex::from_simplices(facets.into_iter().map(|f| f.into_iter().map(|a| a.vertex_id(k)).collect::<Vec<_>>()))
}

/// Whether the witnesses at generations `j1` and `j2` use disjoint arcs.
pub fn witness_disjointness(k: usize, j1: usize, j2: usize) -> bool {
    assert!(k >= 1 && j1 >= 1 && j2 >= 1, "witness indices start at 1");
    let a: BTreeSet<usize> = [j1, j1 + 1].into();
    let b: BTreeSet<usize> = [j2, j2 + 1].into();
    a.is_disjoint(&b)
}

/// Punctures needed to build a witness on `k` marked points: two per point.
pub fn puncture_budget(k: usize) -> usize {
    2 * k
}
