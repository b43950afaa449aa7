use amodlab::cubes::random::random_interval_instance;
use amodlab::cubes::{build_interval, morse_collapse, spine_retract};
use amodlab::trees::TreeFamily;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn families() -> Vec<TreeFamily> {
    vec![TreeFamily::higman(2, 3).unwrap(), TreeFamily::higman(2, 4).unwrap(), TreeFamily::star(3).unwrap()]
}

#[test]
fn intervals_are_acyclic_and_collapse() {
    for family in families() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let (sources, top) = random_interval_instance(&mut rng, family, 6);
            let x = build_interval(&sources, &top).unwrap();
            assert!(x.reduced_homology().unwrap().is_trivial(), "{family}: {}", top.serialize());
            assert!(x.dimension_bound_violations().is_empty());
            let trace = morse_collapse(&x, &top).unwrap();
            assert_eq!(trace.len() + 1, x.vertices().len());
        }
    }
}

#[test]
fn spine_retraction_keeps_homology() {
    for family in families() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let (sources, top) = random_interval_instance(&mut rng, family, 6);
            let x = build_interval(&sources, &top).unwrap();
            let r = spine_retract(&x).unwrap();
            assert!(r.output.vertices().iter().all(|v| v.contains_center()));
            let before = r.closure.reduced_homology().unwrap();
            assert!(before.same_groups(&r.output.reduced_homology().unwrap()));
        }
    }
}
