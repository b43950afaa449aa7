use std::collections::BTreeSet;

use serde::Serialize;

use super::{Cube, CubeError, CubeFragment};
use crate::simplicial::SimplicialComplex;
use crate::trees::{AdmissibleSurface, PolygonAddress, TreeFamily};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerStep {
    pub central_height: usize,
    pub vertices: usize,
    /// Cells retracted along the direction towards the center.
    pub cells: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineRetraction {
    /// The input closed under adding the polygon nearest the center.
    pub closure: CubeFragment,
    /// Layers removed, highest central height first.
    pub layers: Vec<LayerStep>,
    pub output: CubeFragment,
}

/// Closes `fragment` under the step towards the center, then strips the
/// layers of greatest central height one at a time.
///
/// A cell `(B; A)` whose vertices all sit in the top layer is pushed across
/// the cube `(B; A ∪ {parent of root})`, which must be present in the
/// closure. The result lives in the spine.
pub fn spine_retract(fragment: &CubeFragment) -> Result<SpineRetraction, CubeError> {
    let mut closed: BTreeSet<AdmissibleSurface> = BTreeSet::new();
    for v in fragment.vertices() {
        let mut s = v.clone();
        loop {
            closed.insert(s.clone());
            if s.contains_center() {
                break;
            }
            s = s.tau_step();
        }
    }
    let closure = CubeFragment::spanned(fragment.family(), closed)?;
    let mut current = closure.clone();
    let mut layers = Vec::new();
    loop {
        let top = current.vertices().iter().map(AdmissibleSurface::central_height).max().unwrap_or(0);
        if top == 0 {
            break;
        }
        let layer: Vec<&AdmissibleSurface> = current.vertices().iter().filter(|v| v.central_height() == top).collect();
        let images: BTreeSet<AdmissibleSurface> = layer.iter().map(|v| v.tau_step()).collect();
        if images.len() != layer.len() {
            return Err(CubeError::ClaimViolation(format!("step towards the center is not injective at central height {top}")));
        }
        let mut cells = 0;
        for cell in current.cells() {
            if cell.vertices().iter().any(|v| v.central_height() != top) {
                continue;
            }
            let toward = cell.base.root().parent().expect("positive central height");
            let mut additions = cell.additions.clone();
            additions.insert(toward);
            let prism = Cube { base: cell.base.clone(), additions };
            if !current.contains_cube(&prism) {
                return Err(CubeError::ClaimViolation(format!(
                    "cell at {} does not span a cube towards the center",
                    cell.base.serialize()
                )));
            }
            cells += 1;
        }
        layers.push(LayerStep { central_height: top, vertices: layer.len(), cells });
        let rest: BTreeSet<AdmissibleSurface> =
            current.vertices().iter().filter(|v| v.central_height() < top).cloned().collect();
        current = CubeFragment::spanned(fragment.family(), rest)?;
    }
    Ok(SpineRetraction { closure, layers, output: current })
}

/// Shape of the descending link at spine height `k`: `k` punctures,
/// `m + (k - 1)(n - 1)` marked points and separation radius `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DescendingLinkParams {
    pub punctures: u64,
    pub marked_points: u64,
    pub radius: u64,
}

pub fn descending_link_params(family: TreeFamily, k: u64) -> Result<DescendingLinkParams, CubeError> {
    let (n, m) = family.higman_params().ok_or(CubeError::Unsupported(family))?;
    let (n, m) = (n as u64, m as u64);
    if k <= m {
        return Err(CubeError::HeightTooSmall { k, m });
    }
    Ok(DescendingLinkParams { punctures: k, marked_points: m + (k - 1) * (n - 1), radius: n - 1 })
}

/// Polygons removable from a spine surface, and the sets of them removable
/// together, as a simplicial complex on their indices in `polygons`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonLink {
    pub complex: SimplicialComplex,
    pub polygons: Vec<PolygonAddress>,
}

pub fn skeleton_descending_link(surface: &AdmissibleSurface) -> Result<SkeletonLink, CubeError> {
    if !surface.contains_center() {
        return Err(CubeError::NotInSpine);
    }
    if surface.height() < 2 {
        return Err(CubeError::TooShort(2));
    }
    let polygons: Vec<PolygonAddress> = surface
        .polygons()
        .iter()
        .filter(|p| !p.is_center() && surface.without_polygon(p).is_ok())
        .cloned()
        .collect();
    let removable = |set: &[usize]| -> bool {
        let remaining = surface.polygons().iter().filter(|p| !set.iter().any(|&i| polygons[i] == **p)).cloned();
        match AdmissibleSurface::new(surface.family(), remaining) {
            Ok(rest) => rest.contains_center() && set.iter().all(|&i| rest.is_adjacent(&polygons[i])),
            Err(_) => false,
        }
    };
    // Removable sets are closed under subsets, so grow them by increasing index.
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = (0..polygons.len()).map(|i| vec![i]).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for set in &layer {
            for j in set.last().unwrap() + 1..polygons.len() {
                let mut bigger = set.clone();
                bigger.push(j);
                if removable(&bigger) {
                    next.push(bigger);
                }
            }
        }
        simplices.append(&mut layer);
        layer = next;
    }
    Ok(SkeletonLink { complex: SimplicialComplex::from_simplices(simplices), polygons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::build_interval;

    fn surf(family: TreeFamily, paths: &[&str]) -> AdmissibleSurface {
        AdmissibleSurface::new(family, paths.iter().map(|p| p.parse().unwrap())).unwrap()
    }

    #[test]
    fn params() {
        let p = descending_link_params(TreeFamily::higman(1, 3).unwrap(), 5).unwrap();
        assert_eq!((p.punctures, p.marked_points, p.radius), (5, 3, 0));
        let p = descending_link_params(TreeFamily::higman(2, 3).unwrap(), 4).unwrap();
        assert_eq!((p.punctures, p.marked_points, p.radius), (4, 6, 1));
        let p = descending_link_params(TreeFamily::higman(3, 4).unwrap(), 5).unwrap();
        assert_eq!((p.punctures, p.marked_points, p.radius), (5, 12, 2));
        assert_eq!(
            descending_link_params(TreeFamily::higman(2, 3).unwrap(), 3),
            Err(CubeError::HeightTooSmall { k: 3, m: 3 })
        );
        assert!(descending_link_params(TreeFamily::Lamplighter, 5).is_err());
    }

    #[test]
    fn star_vertex_retracts_along_its_orbit() {
        let f = TreeFamily::star(3).unwrap();
        let v = surf(f, &["0/0", "0/0/0"]);
        let frag = build_interval(std::slice::from_ref(&v), &v).unwrap();
        let r = spine_retract(&frag).unwrap();
        assert_eq!(r.closure.vertices().len(), 3);
        assert_eq!(r.closure.cell_counts(), vec![3, 2]);
        assert_eq!(r.output.vertices().len(), 1);
        assert!(r.output.vertices().iter().all(AdmissibleSurface::contains_center));
    }

    #[test]
    fn star_edge_retracts_through_a_square() {
        let f = TreeFamily::star(3).unwrap();
        let frag = build_interval(&[surf(f, &["0"])], &surf(f, &["0", "0/0"])).unwrap();
        let r = spine_retract(&frag).unwrap();
        assert_eq!(r.closure.cell_counts(), vec![4, 4, 1]);
        assert_eq!(r.output.cell_counts(), vec![2, 1]);
        assert!(r.closure.reduced_homology().unwrap().same_groups(&r.output.reduced_homology().unwrap()));
    }

    #[test]
    fn spine_fragments_are_unchanged() {
        let f = TreeFamily::higman(2, 3).unwrap();
        let frag = build_interval(&[surf(f, &[""])], &surf(f, &["", "0", "1"])).unwrap();
        let r = spine_retract(&frag).unwrap();
        assert!(r.layers.is_empty());
        assert_eq!(r.output, frag);
    }

    #[test]
    fn skeleton_links() {
        let f = TreeFamily::higman(2, 3).unwrap();
        let one = skeleton_descending_link(&surf(f, &["", "0"])).unwrap();
        assert_eq!(one.complex.facets(), &[vec![0]]);
        let two = skeleton_descending_link(&surf(f, &["", "0", "1"])).unwrap();
        assert_eq!(two.complex.facets(), &[vec![0, 1]]);
        let chain = skeleton_descending_link(&surf(f, &["", "0", "0/0"])).unwrap();
        assert_eq!(chain.polygons, vec!["0/0".parse().unwrap()]);
        assert!(skeleton_descending_link(&surf(f, &[""])).is_err());
        assert!(skeleton_descending_link(&surf(f, &["0", "0/0"])).is_err());
    }
}
