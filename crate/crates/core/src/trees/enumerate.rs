//! Enumeration of finite subtrees.

use super::{AdmissibleSurface, PolygonAddress, TreeFamily};

/// Every surface with root `root` and height at most `max_height`.
///
/// Such surfaces lie in the descending subtree below `root`. Each one is
/// produced exactly once, ordered by height and then by polygon set.
pub fn rooted_surfaces(family: TreeFamily, root: &PolygonAddress, max_height: usize) -> Vec<AdmissibleSurface> {
    let mut out = Vec::new();
    if max_height == 0 {
        return out;
    }
    let children = |a: &PolygonAddress| (0..family.child_count(a) as u32).map(|i| a.child(i)).collect::<Vec<_>>();
    // Grow by extension lists: a candidate skipped at one level is never
    // reconsidered deeper, which makes every subtree appear once.
    fn grow(
        current: &mut Vec<PolygonAddress>,
        candidates: &[PolygonAddress],
        max_height: usize,
        children: &dyn Fn(&PolygonAddress) -> Vec<PolygonAddress>,
        out: &mut Vec<Vec<PolygonAddress>>,
    ) {
        out.push(current.clone());
        if current.len() == max_height {
            return;
        }
        for (i, c) in candidates.iter().enumerate() {
            let mut next: Vec<PolygonAddress> = candidates[i + 1..].to_vec();
            next.extend(children(c));
            current.push(c.clone());
            grow(current, &next, max_height, children, out);
            current.pop();
        }
    }
    let mut raw = Vec::new();
    grow(&mut vec![root.clone()], &children(root), max_height, &children, &mut raw);
    out.extend(raw.into_iter().map(|p| AdmissibleSurface::new(family, p).expect("grown subtrees are connected")));
    out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    out
}

/// Surfaces rooted at `root` in a Higman tree, one for each shape up to
/// permuting sibling subtrees.
///
/// Children are packed into the lowest slots in a canonical order. This is
/// far smaller than [`rooted_surfaces`] and suffices for invariants that do
/// not see the order of siblings, such as frontier counts and rotation
/// orders.
pub fn canonical_rooted_surfaces(n: u32, m: u32, root: &PolygonAddress, max_height: usize) -> Vec<AdmissibleSurface> {
    let family = TreeFamily::Higman { n, m };
    if max_height == 0 {
        return Vec::new();
    }
    let table = ShapeTable::new(n as usize, max_height - 1);
    let root_slots = if root.is_center() { m as usize } else { n as usize };
    let mut out = Vec::new();
    for size in 1..=max_height {
        for children in table.multisets(size - 1, root_slots, usize::MAX) {
            let mut polygons = vec![root.clone()];
            for (k, &id) in children.iter().enumerate() {
                table.realize(id, root.child(k as u32), &mut polygons);
            }
            out.push(AdmissibleSurface::new(family, polygons).expect("shapes are connected"));
        }
    }
    out
}

/// Unordered rooted trees in which every node has at most `slots` children.
struct ShapeTable {
    slots: usize,
    /// Children of each shape as a nonincreasing list of shape ids.
    shapes: Vec<Vec<usize>>,
    sizes: Vec<usize>,
    /// Ids of shapes of each size; ids increase with size.
    by_size: Vec<Vec<usize>>,
}

impl ShapeTable {
    fn new(slots: usize, max_size: usize) -> Self {
        let mut table = ShapeTable { slots, shapes: Vec::new(), sizes: Vec::new(), by_size: vec![Vec::new()] };
        for size in 1..=max_size {
            let kids = table.multisets(size - 1, slots, usize::MAX);
            let mut ids = Vec::new();
            for k in kids {
                ids.push(table.shapes.len());
                table.shapes.push(k);
                table.sizes.push(size);
            }
            table.by_size.push(ids);
        }
        table
    }

    /// Nonincreasing sequences of at most `slots` shape ids below `bound`
    /// whose sizes sum to `total`.
    fn multisets(&self, total: usize, slots: usize, bound: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![Vec::new()];
        }
        if slots == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for first_size in (1..=total.min(self.by_size.len() - 1)).rev() {
            for &id in self.by_size[first_size].iter().rev() {
                if id >= bound {
                    continue;
                }
                for mut rest in self.multisets(total - first_size, slots - 1, id + 1) {
                    rest.insert(0, id);
                    out.push(rest);
                }
            }
        }
        out
    }

    fn realize(&self, id: usize, at: PolygonAddress, out: &mut Vec<PolygonAddress>) {
        debug_assert!(self.shapes[id].len() <= self.slots);
        debug_assert_eq!(self.sizes[id], 1 + self.shapes[id].iter().map(|&c| self.sizes[c]).sum::<usize>());
        for (k, &child) in self.shapes[id].iter().enumerate() {
            self.realize(child, at.child(k as u32), out);
        }
        out.push(at);
    }
}
