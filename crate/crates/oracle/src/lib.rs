//! Slow, independent reference computations.
//!
//! Nothing here shares an algorithm with the main library: ranks come from
//! rational elimination instead of Smith normal form, counts from explicit
//! enumeration instead of generating functions, and orders from searching
//! a quotient of `Z^2` instead of closed formulas.

use std::collections::BTreeSet;

use amodlab::simplicial::SimplicialComplex;
use amodlab::trees::TreeFamily;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Rank over the rationals by Gauss–Jordan elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &pivot;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// All faces of a complex grouped by dimension, from its facets.
fn faces(complex: &SimplicialComplex) -> Vec<Vec<Vec<usize>>> {
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for facet in complex.facets() {
        for mask in 1..1u64 << facet.len() {
            all.insert((0..facet.len()).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect());
        }
    }
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![Vec::new(); top];
    for f in all {
        out[f.len() - 1].push(f);
    }
    out
}

/// Reduced Betti numbers from rational ranks of dense boundary matrices,
/// one per degree up to the dimension.
pub fn reduced_betti_rational(complex: &SimplicialComplex) -> Vec<usize> {
    let by_dim = faces(complex);
    // rank of the map C_d -> C_{d-1}; the augmentation C_0 -> Z has rank 1.
    let mut ranks = vec![usize::from(!by_dim.is_empty())];
    for d in 1..by_dim.len() {
        let rows: Vec<Vec<i64>> = by_dim[d - 1]
            .iter()
            .map(|face| {
                by_dim[d]
                    .iter()
                    .map(|simplex| match (0..simplex.len()).find(|&i| {
                        let mut without = simplex.clone();
                        without.remove(i);
                        without == *face
                    }) {
                        Some(i) if i % 2 == 0 => 1,
                        Some(_) => -1,
                        None => 0,
                    })
                    .collect()
            })
            .collect();
        ranks.push(rational_rank(&rows));
    }
    ranks.push(0);
    (0..by_dim.len()).map(|d| by_dim[d].len() - ranks[d] - ranks[d + 1]).collect()
}

/// Every subtree containing the center with at most `max_height` vertices,
/// found by breadth-first growth and deduplicated as sets of paths.
pub fn spine_surfaces(family: TreeFamily, max_height: usize) -> Vec<BTreeSet<Vec<u32>>> {
    let mut all = Vec::new();
    let mut layer: BTreeSet<BTreeSet<Vec<u32>>> = BTreeSet::from([BTreeSet::from([Vec::new()])]);
    for _ in 1..=max_height {
        let mut next = BTreeSet::new();
        for tree in &layer {
            for node in tree {
                let count = family.child_count(&amodlab::trees::PolygonAddress::from_path(node.clone()));
                for c in 0..count as u32 {
                    let mut child = node.clone();
                    child.push(c);
                    if !tree.contains(&child) {
                        let mut bigger = tree.clone();
                        bigger.insert(child);
                        next.insert(bigger);
                    }
                }
            }
        }
        all.extend(std::mem::replace(&mut layer, next));
    }
    all
}

/// Spine surface counts per height by enumeration.
pub fn spine_census(family: TreeFamily, max_height: usize) -> Vec<(usize, u128)> {
    let mut counts = vec![0u128; max_height + 1];
    for tree in spine_surfaces(family, max_height) {
        counts[tree.len()] += 1;
    }
    (1..=max_height).map(|h| (h, counts[h])).collect()
}

/// Least size of an inclusion-maximal set of points of `Z_q` with pairwise
/// cycle distance above `r`, by scanning all subsets.
pub fn min_maximal_separated_set(q: usize, r: usize) -> usize {
    assert!((1..=20).contains(&q), "subset scan needs 1 <= q <= 20");
    let dist = |i: usize, j: usize| {
        let d = i.abs_diff(j);
        d.min(q - d)
    };
    let separated = |mask: u32| {
        (0..q).all(|i| mask >> i & 1 == 0 || (i + 1..q).all(|j| mask >> j & 1 == 0 || dist(i, j) > r))
    };
    (1..1u32 << q)
        .filter(|&mask| separated(mask))
        .filter(|&mask| (0..q).all(|i| mask >> i & 1 == 1 || !separated(mask | 1 << i)))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("every singleton extends to a maximal set")
}

/// Positive divisors by trial of every candidate.
pub fn divisors_by_trial(n: u64) -> BTreeSet<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn gcd_by_trial(a: u64, b: u64) -> u64 {
    (1..=a.max(b)).rev().find(|d| a.is_multiple_of(*d) && b.is_multiple_of(*d)).unwrap_or(a.max(b))
}

/// Order of `(t, s)` in `Z^2 / <(r, -p)>`, the group generated by a rotation
/// of order dividing `r` in the full twist and a braid whose `p`-th power is
/// the full twist. `None` means infinite.
///
/// Searches `k = 1, 2, ...` for `k (t, s)` in the subgroup; a finite order is
/// at most `r`, so the search stops there. Requires `r >= 1`.
pub fn quotient_order(t: i64, s: i64, r: u64, p: u64) -> Option<u64> {
    assert!(r >= 1, "the rotation order must be positive");
    let (r, p) = (r as i64, p as i64);
    (1..=r).find(|&k| {
        let (kt, ks) = (k * t, k * s);
        kt % r == 0 && ks == -(kt / r) * p
    })
    .map(|k| k as u64)
}

/// Order of `t` in `Z_r`, by repeated addition.
pub fn cyclic_order(t: i64, r: u64) -> u64 {
    assert!(r >= 1, "the cyclic group must be nonempty");
    let r = r as i64;
    (1..=r).find(|&k| (k * t).rem_euclid(r) == 0).expect("k = r always works") as u64
}

/// Orders occurring as `lcm(a / gcd(t, a), b / gcd(s, b))` with `t b = s a`,
/// using only trial-division gcds and without the divisibility shortcut.
pub fn lcm_claim_by_search(a: u64, b: u64, bound: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for t in 1..=bound {
        for s in 1..=bound {
            if t * b == s * a {
                let x = a / gcd_by_trial(t, a);
                let y = b / gcd_by_trial(s, b);
                out.insert(x * y / gcd_by_trial(x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(rational_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rational_rank(&[vec![2, 0], vec![0, 3]]), 2);
        assert_eq!(rational_rank(&[]), 0);
    }

    #[test]
    fn betti_of_small_complexes() {
        let triangle = SimplicialComplex::from_simplices([vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(reduced_betti_rational(&triangle), vec![0, 1]);
        let two_points = SimplicialComplex::from_simplices([vec![0], vec![1]]);
        assert_eq!(reduced_betti_rational(&two_points), vec![1]);
    }

    #[test]
    fn census_by_enumeration() {
        let f = TreeFamily::higman(2, 3).unwrap();
        assert_eq!(spine_census(f, 3), vec![(1, 1), (2, 3), (3, 9)]);
    }

    #[test]
    fn separated_sets() {
        assert_eq!(min_maximal_separated_set(7, 2), 2);
        assert_eq!(min_maximal_separated_set(5, 0), 5);
        // {0, 3} is maximal in Z_6 at radius 1.
        assert_eq!(min_maximal_separated_set(6, 1), 2);
    }

    #[test]
    fn quotient_orders() {
        assert_eq!(quotient_order(2, -1, 4, 2), Some(2));
        assert_eq!(quotient_order(2, -1, 6, 3), Some(3));
        assert_eq!(quotient_order(1, 1, 5, 3), None);
        assert_eq!(quotient_order(0, 0, 5, 3), Some(1));
        assert_eq!(cyclic_order(4, 6), 3);
        assert_eq!(cyclic_order(-2, 6), 3);
    }

    #[test]
    fn lcm_search() {
        assert_eq!(lcm_claim_by_search(6, 4, 30), BTreeSet::from([1, 2]));
        assert_eq!(gcd_by_trial(12, 18), 6);
    }
}
