use amodlab::arcs::{connectivity_bound, fundamental_domain, sphere_witness, SymbolicArc};
use amodlab::cubes::descending_link_params;
use amodlab::simplicial::{corpus, SimplicialComplex};
use amodlab::torsion::{spectrum_closed_form, spectrum_enumerated};
use amodlab::trees::enumerate::rooted_surfaces;
use amodlab::trees::{PolygonAddress, TreeFamily};
use proptest::prelude::*;

#[test]
fn tau_step_descends_to_the_spine() {
    let family = TreeFamily::higman(2, 3).unwrap();
    for root in [vec![], vec![0], vec![1, 0], vec![2, 1, 0]] {
        for s in rooted_surfaces(family, &PolygonAddress::from_path(root), 4) {
            let next = s.tau_step();
            if s.central_height() > 0 {
                assert_eq!(next.central_height() + 1, s.central_height());
                assert_ne!(next, s);
            } else {
                assert_eq!(next, s);
                assert!(s.contains_center());
            }
            assert!(s.spine_projection().contains_center());
        }
    }
}

#[test]
fn collapsing_twice() {
    for n in 2..=6 {
        let twice = TreeFamily::regular(n).unwrap().collapse_edge().unwrap().collapse_edge().unwrap();
        let once = TreeFamily::higman(n, 2 * n).unwrap().collapse_edge().unwrap();
        assert_eq!(twice, once);
        assert_eq!(once, TreeFamily::higman(n, 3 * n - 1).unwrap());
    }
}

#[test]
fn suspension_shifts_homology() {
    for (name, k) in corpus::standard() {
        let offset = k.vertices().last().map_or(0, |v| v + 1);
        let sphere = corpus::zero_sphere(offset, offset + 1);
        let suspended = sphere.join(&k).unwrap();
        let before = k.reduced_homology().unwrap();
        let after = suspended.reduced_homology().unwrap();
        assert_eq!(after.betti[0], 0, "{name}");
        assert_eq!(&after.betti[1..], &before.betti[..], "{name}");
        let shifted: Vec<(usize, Vec<u64>)> = before.torsion.iter().map(|(d, t)| (d + 1, t.clone())).collect();
        assert_eq!(after.torsion, shifted, "{name}");
    }
}

#[test]
fn star_is_simplex_join_link() {
    for (name, k) in corpus::standard() {
        for faces in k.faces_by_dimension() {
            for sigma in faces {
                let link = k.link(&sigma).unwrap();
                let joined = SimplicialComplex::simplex(sigma.iter().copied()).join(&link).unwrap();
                assert_eq!(joined, k.star(&sigma).unwrap(), "{name} {sigma:?}");
            }
        }
    }
}

#[test]
fn sphere_witnesses_do_not_depend_on_generation() {
    for k in 1..=6 {
        let base = sphere_witness(k, 1);
        let h = base.reduced_homology().unwrap();
        let mut expected = vec![0; k];
        expected[k - 1] = 1;
        assert_eq!(h.betti, expected);
        for j in 2..=5 {
            // Shifting generations by j - 1 moves every vertex id by (j - 1) k.
            let relabeled = sphere_witness(k, j).relabel(|v| v - (j - 1) * k);
            assert_eq!(relabeled, base);
            let arc = SymbolicArc { marked_point: 1, generation: j };
            assert_eq!(arc.vertex_id(k), (j - 1) * k);
        }
    }
}

#[test]
fn independence_complex_dimension() {
    // The largest separated set has floor(q / (r + 1)) points once two
    // points fit, and one point otherwise.
    for q in 1..=16usize {
        for r in 0..=6usize {
            let k = fundamental_domain(q, r, None).unwrap();
            let largest = (q / (r + 1)).max(1);
            assert_eq!(k.dimension(), largest as isize - 1, "q={q} r={r}");
        }
    }
}

#[test]
fn houghton_degeneration() {
    for m in 1..=8 {
        let family = TreeFamily::higman(1, m).unwrap();
        for k in (m as u64 + 1)..=(m as u64 + 10) {
            let p = descending_link_params(family, k).unwrap();
            assert_eq!((p.radius, p.marked_points), (0, m as u64));
        }
    }
}

#[test]
fn spectra_are_divisor_closed() {
    for n in 1..=4u32 {
        for m in 1..=6u32 {
            let family = TreeFamily::higman(n, m).unwrap();
            for spectrum in [spectrum_closed_form(family).unwrap(), spectrum_enumerated(family, 5).unwrap()] {
                assert!(spectrum.contains(1));
                if let Some(orders) = spectrum.finite_orders() {
                    for &o in orders {
                        assert!((1..=o).filter(|d| o % d == 0).all(|d| orders.contains(&d)));
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn connectivity_bound_is_monotone(p in 2usize..40, q in 1usize..40, r in 0usize..10) {
        let here = connectivity_bound(p, q, r);
        prop_assert!(connectivity_bound(p + 1, q, r) >= here);
        prop_assert!(connectivity_bound(p, q + 1, r) >= here);
        prop_assert!(connectivity_bound(p, q, r + 1) <= here);
    }

    #[test]
    fn cone_is_acyclic(facets in prop::collection::vec(prop::collection::btree_set(0usize..8, 1..4), 1..8)) {
        let k = SimplicialComplex::from_simplices(facets.into_iter().map(|f| f.into_iter().collect::<Vec<_>>()));
        let cone = SimplicialComplex::simplex([100]).join(&k).unwrap();
        prop_assert!(cone.reduced_homology().unwrap().is_trivial());
    }
}
