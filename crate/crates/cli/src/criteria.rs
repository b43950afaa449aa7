//! The thirteen acceptance criteria as runnable checks.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use amodlab::arcs::{
    connectivity_bound, fundamental_domain, general_bound, puncture_budget, separation_min_formula, sphere_witness,
    witness_disjointness, SeparationRelation,
};
use amodlab::cubes::random::random_interval_instance;
use amodlab::cubes::{
    build_interval, descending_link_params, morse_collapse, spine_retract, spine_sublevel_census,
    three_square_configuration, CubeFragment,
};
use amodlab::presentations::{brh2_presentation, check_relators, evaluate_word, standard_assignment, Word};
use amodlab::simplicial::corpus;
use amodlab::torsion::{
    distinguish, element_order, lcm_claim_set, spectrum_closed_form, spectrum_enumerated, Distinction, ElementOrder,
    OrderSpectrum, PeriodicElement, PeriodicKind, SpectrumOrders,
};
use amodlab::trees::TreeFamily;
use amodlab_oracle as oracle;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::golden::{Golden, GoldenOrders};

/// Shared inputs: the seed for randomized suites and the expected values,
/// or the reason they could not be read.
#[derive(Debug, Clone)]
pub struct Context {
    pub seed: u64,
    pub golden: Result<Golden, String>,
}

impl Default for Context {
    fn default() -> Self {
        Context { seed: 0, golden: Ok(Golden::embedded()) }
    }
}

/// Failure messages of one check; only the first few are kept verbatim.
#[derive(Debug, Default)]
struct Failures {
    shown: Vec<String>,
    total: usize,
}

const SHOWN_FAILURES: usize = 8;

impl Failures {
    fn push(&mut self, message: String) {
        self.total += 1;
        if self.shown.len() < SHOWN_FAILURES {
            self.shown.push(message);
        }
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if !ok {
            self.push(message());
        }
    }

    fn outcome(self, detail: String) -> Outcome {
        Outcome { passed: self.total == 0, detail, failures: self.shown, failure_count: self.total }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub tags: &'static [&'static str],
    /// Wall-clock budget for the whole check.
    pub limit: Option<Duration>,
    check: fn(&Context) -> Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit_seconds: Option<f64>,
    pub detail: String,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl CriterionResult {
    /// One line: verdict, id, name and detail.
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let time = self.seconds.map(|s| format!(" [{s:.2}s]")).unwrap_or_default();
        format!("{verdict} criterion {:>2} {}{time}: {}", self.id, self.name, self.detail)
    }
}

impl Criterion {
    pub fn matches(&self, filter: &str) -> bool {
        let filter = filter.trim().to_ascii_lowercase();
        filter.parse::<u32>().is_ok_and(|id| id == self.id)
            || self.name.contains(filter.as_str())
            || self.tags.iter().any(|t| *t == filter)
    }

    /// Runs the check and enforces the time budget. `timings` controls
    /// whether elapsed time is reported.
    pub fn run(&self, ctx: &Context, timings: bool) -> CriterionResult {
        let start = Instant::now();
        let mut outcome = (self.check)(ctx);
        let elapsed = start.elapsed();
        if let Some(limit) = self.limit {
            if elapsed > limit {
                outcome.passed = false;
                outcome.failure_count += 1;
                outcome.failures.push(format!("took {:.2}s, budget {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64()));
            }
        }
        CriterionResult {
            id: self.id,
            name: self.name,
            passed: outcome.passed,
            seconds: timings.then_some(elapsed.as_secs_f64()),
            limit_seconds: self.limit.map(|l| l.as_secs_f64()),
            detail: outcome.detail,
            failures: outcome.failures,
            failure_count: outcome.failure_count,
        }
    }
}

pub fn all() -> Vec<Criterion> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Criterion { id: 1, name: "torsion-spectra", tags: &["torsion"], limit: None, check: torsion_spectra },
        Criterion { id: 2, name: "lcm-claim", tags: &["torsion"], limit: secs(10), check: lcm_claim },
        Criterion { id: 3, name: "element-order", tags: &["torsion"], limit: secs(10), check: element_orders },
        Criterion { id: 4, name: "min-related", tags: &["arcs"], limit: secs(5), check: min_related },
        Criterion { id: 5, name: "descending-link", tags: &["cubes", "arcs"], limit: None, check: descending_links },
        Criterion { id: 6, name: "sphere-witness", tags: &["arcs", "simplicial"], limit: secs(5), check: sphere_witnesses },
        Criterion { id: 7, name: "fundamental-domain", tags: &["arcs", "simplicial"], limit: secs(30), check: fundamental_domains },
        Criterion { id: 8, name: "morse", tags: &["cubes"], limit: secs(60), check: morse },
        Criterion { id: 9, name: "dimension-bound", tags: &["cubes", "trees"], limit: None, check: dimension_bound },
        Criterion { id: 10, name: "census", tags: &["cubes", "trees"], limit: None, check: census },
        Criterion { id: 11, name: "flagness", tags: &["cubes", "simplicial"], limit: None, check: flagness },
        Criterion { id: 12, name: "presentation", tags: &["presentations"], limit: secs(5), check: presentation },
        Criterion { id: 13, name: "homology", tags: &["simplicial"], limit: None, check: homology },
    ]
}

pub fn by_id(id: u32) -> Criterion {
    all().into_iter().find(|c| c.id == id).expect("criterion ids run from 1 to 13")
}

fn golden(ctx: &Context) -> Result<&Golden, Outcome> {
    ctx.golden.as_ref().map_err(|e| Outcome {
        passed: false,
        detail: "expected values unavailable".into(),
        failures: vec![format!("golden file: {e}")],
        failure_count: 1,
    })
}

/// Height up to which enumeration must have met every closed-form witness.
fn witness_height(n: u32, m: u32) -> usize {
    (m + 1).max(m.abs_diff(n - 1)).max(n + 2) as usize
}

fn describe(s: &OrderSpectrum) -> String {
    match &s.orders {
        SpectrumOrders::Finite(set) => format!("{set:?}"),
        SpectrumOrders::Unbounded => "unbounded".into(),
    }
}

const SPECTRUM_BUDGET: Duration = Duration::from_secs(1);

fn torsion_spectra(ctx: &Context) -> Outcome {
    let golden = match golden(ctx) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut f = Failures::default();
    let timed = |family: TreeFamily, height: usize, f: &mut Failures| {
        let start = Instant::now();
        let closed = spectrum_closed_form(family);
        let enumerated = spectrum_enumerated(family, height);
        let elapsed = start.elapsed();
        f.check(elapsed <= SPECTRUM_BUDGET, || format!("{family}: {:.2}s over the 1s budget", elapsed.as_secs_f64()));
        (closed, enumerated)
    };
    for g in &golden.spectra {
        let (n, m) = g.family.higman_params().unwrap_or((1, 1));
        let (closed, enumerated) = timed(g.family, witness_height(n, m), &mut f);
        let (Ok(closed), Ok(enumerated)) = (closed, enumerated) else {
            f.push(format!("{}: spectrum unavailable", g.family));
            continue;
        };
        match &g.orders {
            GoldenOrders::Finite(orders) => {
                let expected: BTreeSet<u64> = orders.iter().copied().collect();
                let want = SpectrumOrders::Finite(expected);
                f.check(closed.orders == want, || format!("{}: closed form {}", g.family, describe(&closed)));
                f.check(enumerated.orders == want, || format!("{}: enumerated {}", g.family, describe(&enumerated)));
            }
            GoldenOrders::Unbounded(word) => {
                f.check(word == "unbounded", || format!("{}: unknown spectrum tag {word:?}", g.family));
                f.check(closed.is_unbounded(), || format!("{}: closed form {}", g.family, describe(&closed)));
            }
        }
    }
    let sharp = TreeFamily::higman(2, 3).expect("valid");
    let star_tree = TreeFamily::higman(2, 4).expect("valid");
    f.check(matches!(distinguish(sharp, star_tree), Ok(Distinction::Distinguished { .. })), || {
        "higman 2 3 and higman 2 4 not distinguished".into()
    });
    for n in 1..=12u32 {
        let family = TreeFamily::star(n).expect("valid");
        let expected = SpectrumOrders::Finite(oracle::divisors_by_trial(n as u64));
        let (closed, enumerated) = timed(family, witness_height(1, n), &mut f);
        f.check(closed.as_ref().is_ok_and(|s| s.orders == expected), || format!("star {n}: closed form"));
        f.check(enumerated.as_ref().is_ok_and(|s| s.orders == expected), || format!("star {n}: enumerated"));
    }
    let mut grid = 0;
    for n in 2..=5u32 {
        for m in 1..=8u32 {
            grid += 1;
            let family = TreeFamily::higman(n, m).expect("valid");
            let height = witness_height(n, m);
            let (closed, enumerated) = timed(family, height, &mut f);
            let (Ok(closed), Ok(enumerated)) = (closed, enumerated) else {
                f.push(format!("{family}: spectrum unavailable"));
                continue;
            };
            let found = enumerated.finite_orders().expect("enumerated spectra are finite");
            match closed.finite_orders() {
                Some(expected) => f.check(found == expected, || {
                    format!("{family}: enumerated {found:?} vs closed form {expected:?} at height {height}")
                }),
                // Every order up to the enumeration height must already occur.
                None => f.check((1..=height as u64).all(|k| found.contains(&k)), || {
                    format!("{family}: enumerated {found:?} misses an order up to {height}")
                }),
            }
        }
    }
    f.outcome(format!("{} golden spectra, stars 1..=12, {grid} families enumerated to their witness heights", golden.spectra.len()))
}

fn lcm_claim(_: &Context) -> Outcome {
    let mut f = Failures::default();
    for a in 1..=30u64 {
        for b in 1..=30u64 {
            let got = lcm_claim_set(a, b, 200);
            let expected = oracle::divisors_by_trial(oracle::gcd_by_trial(a, b));
            f.check(got == expected, || format!("({a},{b}): {got:?} vs {expected:?}"));
        }
    }
    f.outcome("900 pairs with bound 200".into())
}

fn element_orders(_: &Context) -> Outcome {
    let mut f = Failures::default();
    let mut cases = 0;
    for h in 1..=8u64 {
        for r in 1..=12u64 {
            for t in -12i64..=12 {
                for s in -12i64..=12 {
                    for kind in [PeriodicKind::Epsilon, PeriodicKind::Delta] {
                        cases += 1;
                        let (tn, sn) = if t < 0 { (-t, -s) } else { (t, s) };
                        let got = element_order(&PeriodicElement { t: tn as u64, s: sn, kind, h, r });
                        let expected = if h == 1 {
                            ElementOrder::Finite(oracle::cyclic_order(t, r))
                        } else {
                            let permuted = if kind == PeriodicKind::Epsilon { h } else { h - 1 };
                            oracle::quotient_order(t, s, r, permuted).map_or(ElementOrder::Infinite, ElementOrder::Finite)
                        };
                        f.check(got == expected, || format!("t={t} s={s} {kind:?} h={h} r={r}: {got} vs {expected}"));
                    }
                }
            }
        }
    }
    f.outcome(format!("{cases} elements, rotation orders 1..=12"))
}

fn min_related(_: &Context) -> Outcome {
    let mut f = Failures::default();
    for q in 1..=16 {
        for r in 0..=6 {
            let relation = SeparationRelation::separated(q, r).expect("q >= 1");
            let brute = relation.min_related();
            let formula = separation_min_formula(q, r);
            f.check(brute == formula, || format!("min_related(q={q}, r={r}) = {brute}, floor formula gives {formula}"));
        }
    }
    for p in 2..=20 {
        for q in 1..=20 {
            for r in 0..=6 {
                let relation = SeparationRelation::separated(q, r).expect("q >= 1");
                let general = general_bound(p, &relation);
                let closed = connectivity_bound(p, q, r);
                f.check(general == closed, || format!("bounds differ at (p={p}, q={q}, r={r}): {general} vs {closed}"));
            }
        }
    }
    f.outcome("q <= 16, r <= 6 against the floor formula; p, q <= 20, r <= 6 for the bounds".into())
}

fn descending_links(ctx: &Context) -> Outcome {
    let golden = match golden(ctx) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut f = Failures::default();
    for g in &golden.descending_links {
        match descending_link_params(g.family, g.k) {
            Ok(p) => f.check((p.punctures, p.marked_points, p.radius) == (g.p, g.q, g.r), || {
                format!("{} k={}: ({}, {}, {})", g.family, g.k, p.punctures, p.marked_points, p.radius)
            }),
            Err(e) => f.push(format!("{} k={}: {e}", g.family, g.k)),
        }
    }
    f.outcome(format!("{} parameter triples", golden.descending_links.len()))
}

fn sphere_witnesses(_: &Context) -> Outcome {
    let mut f = Failures::default();
    for k in 1..=6 {
        for j in 1..=10 {
            let mut expected = vec![0; k];
            expected[k - 1] = 1;
            match sphere_witness(k, j).reduced_homology() {
                Ok(h) => f.check(h.betti == expected && h.torsion.is_empty(), || format!("k={k} j={j}: {h:?}")),
                Err(e) => f.push(format!("k={k} j={j}: {e}")),
            }
            f.check(witness_disjointness(k, j, j + 2), || format!("k={k}: generations {j} and {} overlap", j + 2));
        }
        f.check(puncture_budget(k) == 2 * k, || format!("puncture budget of {k}"));
    }
    f.outcome("k <= 6, generations 1..=10".into())
}

fn fundamental_domains(ctx: &Context) -> Outcome {
    let golden = match golden(ctx) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut f = Failures::default();
    for g in &golden.fundamental_domains {
        match fundamental_domain(g.q, g.r, None).map(|k| k.reduced_homology()) {
            Ok(Ok(h)) => f.check(h.betti == g.betti, || format!("q={} r={}: betti {:?}", g.q, g.r, h.betti)),
            _ => f.push(format!("q={} r={}: no homology", g.q, g.r)),
        }
    }
    for q in 1..=16usize {
        for r in 0..=6usize {
            let dim = fundamental_domain(q, r, None).expect("q >= 1").dimension();
            let formula = (q / (r + 1)) as isize - 1;
            f.check(dim == formula, || format!("q={q} r={r}: dimension {dim}, formula {formula}"));
        }
    }
    f.outcome("golden Betti numbers; dimensions for q <= 16, r <= 6".into())
}

const INSTANCES_PER_FAMILY: usize = 50;
const MAX_TOP_HEIGHT: usize = 6;

fn morse_families() -> [TreeFamily; 3] {
    [TreeFamily::higman(2, 3).expect("valid"), TreeFamily::higman(2, 4).expect("valid"), TreeFamily::star(3).expect("valid")]
}

/// The seeded interval instances shared by the cube criteria.
fn seeded_intervals(seed: u64) -> Vec<(TreeFamily, Vec<amodlab::trees::AdmissibleSurface>, amodlab::trees::AdmissibleSurface)> {
    let mut out = Vec::new();
    for (i, family) in morse_families().into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
        for _ in 0..INSTANCES_PER_FAMILY {
            let (sources, top) = random_interval_instance(&mut rng, family, MAX_TOP_HEIGHT);
            out.push((family, sources, top));
        }
    }
    out
}

fn morse(ctx: &Context) -> Outcome {
    let mut f = Failures::default();
    let mut steps = 0;
    for (family, sources, top) in seeded_intervals(ctx.seed) {
        let label = || format!("{family} top {:?}", top.serialize());
        let x = match build_interval(&sources, &top) {
            Ok(x) => x,
            Err(e) => {
                f.push(format!("{}: {e}", label()));
                continue;
            }
        };
        match x.reduced_homology() {
            Ok(h) => f.check(h.is_trivial(), || format!("{}: homology {h:?}", label())),
            Err(e) => f.push(format!("{}: {e}", label())),
        }
        match morse_collapse(&x, &top) {
            Ok(trace) => {
                steps += trace.len();
                f.check(trace.len() + 1 == x.vertices().len(), || format!("{}: collapse did not reach the top", label()));
            }
            Err(e) => f.push(format!("{}: {e}", label())),
        }
        match spine_retract(&x) {
            Ok(r) => {
                f.check(r.output.vertices().iter().all(|v| v.contains_center()), || format!("{}: left the spine", label()));
                let same = match (r.closure.reduced_homology(), r.output.reduced_homology()) {
                    (Ok(a), Ok(b)) => a.same_groups(&b),
                    _ => false,
                };
                f.check(same, || format!("{}: retraction changed homology", label()));
            }
            Err(e) => f.push(format!("{}: {e}", label())),
        }
    }
    f.outcome(format!(
        "{} seeded intervals per family over 3 families, {steps} collapse steps, seed {}",
        INSTANCES_PER_FAMILY, ctx.seed
    ))
}

fn dimension_bound(ctx: &Context) -> Outcome {
    let mut f = Failures::default();
    let mut fragments: Vec<CubeFragment> = Vec::new();
    for (_, sources, top) in seeded_intervals(ctx.seed) {
        if let Ok(x) = build_interval(&sources, &top) {
            if let Ok(r) = spine_retract(&x) {
                fragments.push(r.closure);
                fragments.push(r.output);
            }
            fragments.push(x);
        }
    }
    let mut cells = 0;
    for x in &fragments {
        cells += x.cells().len();
        for v in x.dimension_bound_violations() {
            f.push(format!("{}-cube at {:?} exceeds frontier {}", v.cube.dimension(), v.vertex.serialize(), v.frontier));
        }
    }
    f.outcome(format!("{} fragments, {cells} cells", fragments.len()))
}

const CENSUS_HEIGHT: usize = 6;

fn census(ctx: &Context) -> Outcome {
    let golden = match golden(ctx) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut f = Failures::default();
    let family = golden.census.family;
    match spine_sublevel_census(family, CENSUS_HEIGHT) {
        Ok(counts) => {
            let expected = oracle::spine_census(family, CENSUS_HEIGHT);
            f.check(counts == expected, || format!("{family}: {counts:?} vs enumeration {expected:?}"));
            let prefix: Vec<u128> = counts.iter().map(|(_, c)| *c).take(golden.census.counts.len()).collect();
            f.check(prefix == golden.census.counts, || format!("{family}: leading counts {prefix:?}"));
        }
        Err(e) => f.push(format!("{family}: {e}")),
    }
    f.outcome(format!("{family} up to height {CENSUS_HEIGHT}"))
}

fn flagness(_: &Context) -> Outcome {
    let mut f = Failures::default();
    let config = three_square_configuration();
    let link = config.link(config.apex);
    f.check(!link.is_flag(), || "link of the apex is flag".into());
    f.check(config.completion_height() < 1, || format!("completing cube fits at height {}", config.completion_height()));
    f.outcome(format!("apex link has {} edges on {} vertices", link.facets().len(), link.vertices().len()))
}

fn presentation(ctx: &Context) -> Outcome {
    let golden = match golden(ctx) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut f = Failures::default();
    let p = brh2_presentation(golden.presentation.nmax);
    let assignment = standard_assignment();
    match check_relators(&p, &assignment) {
        Ok(report) => {
            for c in report.checks.iter().filter(|c| !c.holds) {
                f.push(format!("relator fails: {}", c.relator));
            }
        }
        Err(e) => f.push(e.to_string()),
    }
    for (generator, degree) in &golden.presentation.degrees {
        match evaluate_word(&Word::generator(generator), &assignment) {
            Ok(image) => f.check(image.shift() == *degree, || format!("{generator} has degree {}", image.shift())),
            Err(e) => f.push(e.to_string()),
        }
    }
    f.outcome(format!("{} relators, shifts up to {}", p.relators().len(), golden.presentation.nmax))
}

fn homology(ctx: &Context) -> Outcome {
    let golden = match golden(ctx) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let mut f = Failures::default();
    let complexes = corpus::standard();
    for g in &golden.homology {
        match complexes.iter().find(|(name, _)| *name == g.complex) {
            Some((_, k)) => match k.reduced_homology() {
                Ok(h) => f.check(h.betti == g.betti, || format!("{}: betti {:?}", g.complex, h.betti)),
                Err(e) => f.push(format!("{}: {e}", g.complex)),
            },
            None => f.push(format!("no corpus complex named {}", g.complex)),
        }
    }
    for (name, k) in &complexes {
        let snf = k.reduced_homology().map(|h| h.betti).unwrap_or_default();
        let rational = oracle::reduced_betti_rational(k);
        f.check(snf == rational, || format!("{name}: Smith form {snf:?} vs rational {rational:?}"));
    }
    f.outcome(format!("{} golden complexes, {} corpus complexes", golden.homology.len(), complexes.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        let torsion: Vec<u32> = all().into_iter().filter(|c| c.matches("torsion")).map(|c| c.id).collect();
        assert_eq!(torsion, vec![1, 2, 3]);
        assert!(by_id(8).matches("8"));
        assert!(by_id(8).matches("morse"));
        assert!(!by_id(8).matches("torsion"));
    }

    #[test]
    fn ids_are_dense() {
        let ids: Vec<u32> = all().iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=13).collect::<Vec<_>>());
    }
}
