use std::collections::BTreeSet;

use amodlab::arcs::{fundamental_domain, sphere_witness, SeparationRelation};
use amodlab::cubes::spine_sublevel_census;
use amodlab::simplicial::{corpus, SimplicialComplex};
use amodlab::torsion::{
    divisors, element_order, gcd0, lcm_claim_set, spectrum_closed_form, spectrum_enumerated, ElementOrder,
    PeriodicElement, PeriodicKind, SpectrumOrders,
};
use amodlab::trees::enumerate::rooted_surfaces;
use amodlab::trees::{AdmissibleSurface, PolygonAddress, TreeFamily};
use amodlab_oracle as oracle;
use proptest::prelude::*;

fn snf_betti(k: &SimplicialComplex) -> Vec<usize> {
    k.reduced_homology().unwrap().betti
}

#[test]
fn smith_ranks_match_rational_ranks_on_the_corpus() {
    let mut complexes: Vec<(String, SimplicialComplex)> =
        corpus::standard().into_iter().map(|(name, k)| (name.to_string(), k)).collect();
    for q in 1..=10 {
        for r in 0..=3 {
            complexes.push((format!("fdomain {q} {r}"), fundamental_domain(q, r, None).unwrap()));
        }
    }
    for k in 1..=4 {
        complexes.push((format!("witness {k}"), sphere_witness(k, 1)));
    }
    for (name, k) in complexes {
        assert_eq!(snf_betti(&k), oracle::reduced_betti_rational(&k), "{name}");
    }
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0usize..9, 1..5), 1..10)
        .prop_map(|facets| SimplicialComplex::from_simplices(facets.into_iter().map(|f| f.into_iter().collect::<Vec<_>>())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_ranks_match_rational_ranks_on_random_complexes(k in arb_complex()) {
        prop_assert_eq!(snf_betti(&k), oracle::reduced_betti_rational(&k));
    }
}

#[test]
fn census_matches_enumeration() {
    let cases = [
        (TreeFamily::higman(2, 3).unwrap(), 6),
        (TreeFamily::higman(2, 4).unwrap(), 6),
        (TreeFamily::higman(3, 2).unwrap(), 5),
        (TreeFamily::star(3).unwrap(), 6),
        (TreeFamily::Lamplighter, 6),
    ];
    for (family, h) in cases {
        assert_eq!(spine_sublevel_census(family, h).unwrap(), oracle::spine_census(family, h), "{family}");
    }
}

#[test]
fn frontier_counts_on_all_spine_surfaces() {
    for (n, m) in [(2u32, 3u32), (2, 4), (3, 2), (1, 3)] {
        let family = TreeFamily::higman(n, m).unwrap();
        let max_height = if n == 3 { 6 } else { 8 };
        for tree in oracle::spine_surfaces(family, max_height) {
            let h = tree.len();
            let s = AdmissibleSurface::new(family, tree.into_iter().map(PolygonAddress::from_path)).unwrap();
            let expected = m as usize + (h - 1) * (n as usize - 1);
            assert_eq!(s.frontier_arcs().len(), expected, "{family} {}", s.serialize());
            let r = s.rotation_order().unwrap() as usize;
            assert!(r == 0 || expected.is_multiple_of(r));
        }
    }
}

#[test]
fn frontier_counts_in_regular_trees_off_the_spine() {
    for n in 2..=4 {
        let family = TreeFamily::regular(n).unwrap();
        for root in [vec![0], vec![1, 0], vec![0, 1, 1]] {
            for s in rooted_surfaces(family, &PolygonAddress::from_path(root), 5) {
                assert_eq!(s.frontier_arcs().len(), s.height() * (n as usize - 1) + 2);
            }
        }
    }
}

/// Spectrum from every ordered surface rooted at the representative roots,
/// without the sibling-shape reduction.
fn spectrum_from_ordered(family: TreeFamily, max_height: usize) -> BTreeSet<u64> {
    let mut orders = BTreeSet::from([1]);
    for root in [vec![], vec![0], vec![0, 0]] {
        for s in rooted_surfaces(family, &PolygonAddress::from_path(root), max_height) {
            let r = s.rotation_order().unwrap();
            if r == 0 {
                continue;
            }
            let h = s.height() as u64;
            orders.extend(oracle::divisors_by_trial(gcd0(r, h)));
            orders.extend(oracle::divisors_by_trial(gcd0(r, h - 1)));
        }
    }
    orders
}

#[test]
fn shape_reduction_does_not_change_spectra() {
    for (n, m, h) in [(2, 3, 6), (2, 4, 5), (3, 2, 5), (3, 4, 4), (1, 4, 5)] {
        let family = TreeFamily::higman(n, m).unwrap();
        let reduced = spectrum_enumerated(family, h).unwrap();
        assert_eq!(reduced.orders, SpectrumOrders::Finite(spectrum_from_ordered(family, h)), "{family}");
    }
}

#[test]
fn enumerated_spectra_sit_inside_closed_forms() {
    for n in 1..=4u32 {
        for m in 1..=6u32 {
            let family = TreeFamily::higman(n, m).unwrap();
            let closed = spectrum_closed_form(family).unwrap();
            let found = spectrum_enumerated(family, 6).unwrap();
            for order in found.finite_orders().unwrap() {
                assert!(closed.contains(*order), "{family}: {order}");
            }
        }
    }
}

#[test]
fn element_orders_match_the_quotient_model() {
    for h in 1..=8u64 {
        for r in 1..=12u64 {
            for t in -12i64..=12 {
                for s in -12i64..=12 {
                    for kind in [PeriodicKind::Epsilon, PeriodicKind::Delta] {
                        // Normalize to t >= 0 by passing to the inverse.
                        let (tn, sn) = if t < 0 { (-t, -s) } else { (t, s) };
                        let got = element_order(&PeriodicElement { t: tn as u64, s: sn, kind, h, r });
                        let expected = if h == 1 {
                            ElementOrder::Finite(oracle::cyclic_order(t, r))
                        } else {
                            let p = if kind == PeriodicKind::Epsilon { h } else { h - 1 };
                            oracle::quotient_order(t, s, r, p).map_or(ElementOrder::Infinite, ElementOrder::Finite)
                        };
                        assert_eq!(got, expected, "t={t} s={s} {kind:?} h={h} r={r}");
                    }
                }
            }
        }
    }
}

#[test]
fn lcm_claim_matches_search_and_divisors() {
    for a in 1..=30 {
        for b in 1..=30 {
            let claim = lcm_claim_set(a, b, 60);
            assert_eq!(claim, oracle::lcm_claim_by_search(a, b, 60));
            assert_eq!(claim, oracle::divisors_by_trial(oracle::gcd_by_trial(a, b)));
            assert_eq!(divisors(a), oracle::divisors_by_trial(a));
        }
    }
}

#[test]
fn min_related_matches_subset_scan() {
    for q in 1..=16 {
        for r in 0..=6 {
            let fast = SeparationRelation::separated(q, r).unwrap().min_related();
            assert_eq!(fast, oracle::min_maximal_separated_set(q, r), "q={q} r={r}");
        }
    }
}

#[test]
fn min_related_is_ceiling_of_q_over_twice_r_plus_one() {
    // A maximal separated set leaves gaps of at most 2r + 1 between
    // consecutive points, and evenly spread points at that spacing are
    // maximal.
    for q in 1..=16usize {
        for r in 0..=6usize {
            assert_eq!(oracle::min_maximal_separated_set(q, r), q.div_ceil(2 * r + 1), "q={q} r={r}");
        }
    }
}
