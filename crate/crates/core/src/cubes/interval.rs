use std::collections::BTreeSet;

use serde::Serialize;

use super::{Cube, CubeError, CubeFragment};
use crate::trees::AdmissibleSurface;

/// All surfaces between some source and `top`, with every cube among them.
pub fn build_interval(sources: &[AdmissibleSurface], top: &AdmissibleSurface) -> Result<CubeFragment, CubeError> {
    let family = top.family();
    if sources.is_empty() {
        return Err(CubeError::EmptyFragment);
    }
    for s in sources {
        if s.family() != family {
            return Err(CubeError::MixedFamilies);
        }
        if !s.is_subsurface_of(top) {
            return Err(CubeError::NotDominated(s.serialize()));
        }
    }
    let mut seen: BTreeSet<AdmissibleSurface> = sources.iter().cloned().collect();
    let mut layer: Vec<AdmissibleSurface> = seen.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for t in &layer {
            for h in ascending(t, top) {
                let up = t.with_polygon(&h)?;
                if seen.insert(up.clone()) {
                    next.push(up);
                }
            }
        }
        layer = next;
    }
    CubeFragment::spanned(family, seen)
}

/// Polygons of `top` adjacent to `t`.
fn ascending(t: &AdmissibleSurface, top: &AdmissibleSurface) -> Vec<crate::trees::PolygonAddress> {
    t.adjacent_polygons().into_iter().filter(|h| top.contains(h)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseStep {
    /// Serialized surface removed at this step.
    pub removed: String,
    pub height: usize,
    /// Dimension of the cube pushed through `removed`.
    pub cube_dimension: usize,
    pub remaining_vertices: usize,
}

/// Collapses an interval fragment onto its top vertex.
///
/// The working source set starts as the minimal vertices of `fragment`. Each
/// step takes the source `x` of least height (ties to the least serialized
/// form), checks that the cube on `x` and all polygons of `top` adjacent to
/// `x` lies in the current fragment, and replaces `x` by its upper
/// neighbours. Every step must delete exactly `x` and keep the Euler
/// characteristic.
pub fn morse_collapse(fragment: &CubeFragment, top: &AdmissibleSurface) -> Result<Vec<CollapseStep>, CubeError> {
    if !fragment.vertices().contains(top) {
        return Err(CubeError::NotDominated(top.serialize()));
    }
    if let Some(v) = fragment.vertices().iter().find(|v| !v.is_subsurface_of(top)) {
        return Err(CubeError::NotDominated(v.serialize()));
    }
    let mut sources: BTreeSet<AdmissibleSurface> = fragment
        .vertices()
        .iter()
        .filter(|v| {
            !v.polygons().iter().any(|p| v.without_polygon(p).is_ok_and(|below| fragment.vertices().contains(&below)))
        })
        .cloned()
        .collect();
    let rebuilt = build_interval(&sources.iter().cloned().collect::<Vec<_>>(), top)?;
    if rebuilt.vertices() != fragment.vertices() {
        return Err(CubeError::ClaimViolation("fragment is not the interval of its minimal vertices".into()));
    }
    let mut current = rebuilt;
    let mut trace = Vec::new();
    while sources.len() > 1 || !sources.contains(top) {
        let x = sources
            .iter()
            .min_by(|a, b| (a.height(), a.serialize()).cmp(&(b.height(), b.serialize())))
            .cloned()
            .expect("source set is nonempty");
        let ups = ascending(&x, top);
        let cube = Cube { base: x.clone(), additions: ups.iter().cloned().collect() };
        if !current.contains_cube(&cube) {
            return Err(CubeError::ClaimViolation(format!(
                "cube on {} with {} ascending polygons is missing",
                x.serialize(),
                ups.len()
            )));
        }
        sources.remove(&x);
        for h in &ups {
            sources.insert(x.with_polygon(h)?);
        }
        let next = build_interval(&sources.iter().cloned().collect::<Vec<_>>(), top)?;
        let mut expected = current.vertices().clone();
        expected.remove(&x);
        if next.vertices() != &expected {
            return Err(CubeError::ClaimViolation(format!("removing {} changed other vertices", x.serialize())));
        }
        if next.euler_characteristic() != current.euler_characteristic() {
            return Err(CubeError::ClaimViolation(format!("removing {} changed the Euler characteristic", x.serialize())));
        }
        trace.push(CollapseStep {
            removed: x.serialize(),
            height: x.height(),
            cube_dimension: ups.len(),
            remaining_vertices: next.vertices().len(),
        });
        current = next;
    }
    Ok(trace)
}
