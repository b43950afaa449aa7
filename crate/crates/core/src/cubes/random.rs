//! Seeded random interval instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::trees::{AdmissibleSurface, PolygonAddress, TreeFamily};

/// Grows `start` by random adjacent polygons, restricted to `within` when
/// given, until it has `height` polygons or cannot grow.
fn grow<R: Rng>(
    rng: &mut R,
    mut surface: AdmissibleSurface,
    height: usize,
    within: Option<&AdmissibleSurface>,
) -> AdmissibleSurface {
    while surface.height() < height {
        let options: Vec<PolygonAddress> =
            surface.adjacent_polygons().into_iter().filter(|h| within.is_none_or(|w| w.contains(h))).collect();
        let Some(h) = options.choose(rng) else { break };
        surface = surface.with_polygon(h).expect("adjacent polygon");
    }
    surface
}

/// A random polygon at `depth` below the center.
fn random_polygon<R: Rng>(rng: &mut R, family: TreeFamily, depth: usize) -> PolygonAddress {
    let mut addr = PolygonAddress::center();
    for _ in 0..depth {
        let count = family.child_count(&addr) as u32;
        addr = addr.child(rng.gen_range(0..count));
    }
    addr
}

/// A random surface of height between 1 and `max_height`, rooted at the
/// center or one or two levels below it.
pub fn random_surface<R: Rng>(rng: &mut R, family: TreeFamily, max_height: usize) -> AdmissibleSurface {
    let depth = rng.gen_range(0..=2);
    let root = random_polygon(rng, family, depth);
    let start = AdmissibleSurface::new(family, [root]).expect("valid polygon");
    let height = rng.gen_range(1..=max_height.max(1));
    grow(rng, start, height, None)
}

/// A top surface and one to three sources inside it.
pub fn random_interval_instance<R: Rng>(
    rng: &mut R,
    family: TreeFamily,
    max_height: usize,
) -> (Vec<AdmissibleSurface>, AdmissibleSurface) {
    let top = random_surface(rng, family, max_height);
    let polygons: Vec<PolygonAddress> = top.polygons().iter().cloned().collect();
    let count = rng.gen_range(1..=3);
    let sources = (0..count)
        .map(|_| {
            let seed = polygons.choose(rng).expect("surfaces are nonempty").clone();
            let start = AdmissibleSurface::new(family, [seed]).expect("valid polygon");
            let height = rng.gen_range(1..=top.height());
            grow(rng, start, height, Some(&top))
        })
        .collect();
    (sources, top)
}
