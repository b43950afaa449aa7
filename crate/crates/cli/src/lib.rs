//! Command-line front end for amodlab and the acceptance harness.
//!
//! Every command produces a JSON value; text output is rendered from it
//! unless the command has a dedicated text form (simplicial complexes are
//! printed in the facet file format).

pub mod criteria;
pub mod golden;

use std::collections::BTreeMap;
use std::io::IsTerminal;
use std::path::PathBuf;

use amodlab::arcs::{
    conjectured_sphere_dimension, connectivity_bound, fundamental_domain, general_bound, sphere_witness,
    SeparationRelation,
};
use amodlab::cubes::{
    build_interval, canonical_vertex_order, descending_link_params, morse_collapse, spine_retract,
    spine_sublevel_census, CubeError, CubeFragment,
};
use amodlab::presentations::{brh2_presentation, check_relators, evaluate_word, standard_assignment, Word};
use amodlab::simplicial::{HomologyError, SimplicialComplex};
use amodlab::torsion::{
    distinguish, lcm_claim_set, spectrum_closed_form, spectrum_enumerated, OrderSpectrum, SpectrumOrders, TorsionError,
};
use amodlab::trees::{AdmissibleSurface, PolygonAddress, TreeError, TreeFamily};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use criteria::Context;
use golden::Golden;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("claim violated: {0}")]
    Violation(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) | CliError::Io { .. } => 2,
        }
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<TorsionError> for CliError {
    fn from(e: TorsionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<CubeError> for CliError {
    fn from(e: CubeError) -> Self {
        match e {
            CubeError::ClaimViolation(msg) => CliError::Violation(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// JSON when standard output is not a terminal.
    Auto,
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresentationName {
    Brh2,
}

#[derive(Debug, Parser)]
#[command(name = "amodlab", version, about = "Exact combinatorics for mapping class groups of planar trees")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

fn family_arg(text: &str) -> Result<TreeFamily, String> {
    TreeFamily::parse(text).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orders of finite-order elements: closed form, or enumerated up to --hmax.
    Torsion {
        #[arg(long, value_parser = family_arg)]
        family: TreeFamily,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=40))]
        hmax: Option<u64>,
    },
    /// Separate two families by an order occurring in only one of them.
    Distinguish {
        #[arg(value_parser = family_arg)]
        first: TreeFamily,
        #[arg(value_parser = family_arg)]
        second: TreeFamily,
    },
    /// Compare the lcm set of the order formula with the divisors of gcd(a, b).
    LcmClaim {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        a: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        b: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..=100_000))]
        bound: u64,
    },
    /// Connectivity bounds for arc complexes.
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=10_000))]
        p: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        q: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=64))]
        r: u64,
    },
    /// Independence complex of the circulant graph on q points with radius r.
    Fdomain {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=40))]
        q: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(0..=40))]
        r: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
    },
    /// Sphere built from arcs of generations j and j + 1 at k marked points.
    Witness {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=12))]
        k: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..=1000))]
        j: u64,
        /// Report homology instead of facets.
        #[arg(long)]
        homology: bool,
    },
    /// Build the interval between sources and a top surface, collapse it and
    /// retract it onto the spine. Surfaces are comma-separated polygon paths;
    /// an empty item is the central polygon.
    Retract {
        #[arg(long, value_parser = family_arg)]
        family: TreeFamily,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long = "source", required = true, allow_hyphen_values = true)]
        sources: Vec<String>,
        /// Write the triangulated interval in the facet file format.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Number of spine surfaces of each height.
    Census {
        #[arg(long, value_parser = family_arg)]
        family: TreeFamily,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=200))]
        height: u64,
    },
    /// Shape of the descending link at spine height k.
    DlinkParams {
        #[arg(long, value_parser = family_arg)]
        family: TreeFamily,
        #[arg(long)]
        k: u64,
    },
    /// Evaluate a presentation's relators in the shift-permutation model.
    CheckPresentation {
        #[arg(value_enum)]
        name: PresentationName,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u32).range(2..=5000))]
        nmax: u32,
    },
    /// Reduced integral homology of a complex in the facet file format.
    Homology { file: PathBuf },
    /// Run the acceptance criteria.
    Reproduce {
        /// Criterion id, name fragment or tag.
        #[arg(long)]
        filter: Option<String>,
        /// Expected values to use instead of the built-in ones.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Leave elapsed times out of the report.
        #[arg(long)]
        no_timings: bool,
    },
}

/// Result of a command: the JSON value, an optional dedicated text form,
/// and whether every check it made held.
#[derive(Debug, Clone)]
pub struct Output {
    pub value: Value,
    pub text: Option<String>,
    pub ok: bool,
}

impl Output {
    fn json(value: Value) -> Self {
        Output { value, text: None, ok: true }
    }

    pub fn render(&self, format: Format) -> String {
        let json = match format {
            Format::Json => true,
            Format::Text => false,
            Format::Auto => !std::io::stdout().is_terminal(),
        };
        if json {
            format!("{}\n", serde_json::to_string_pretty(&self.value).expect("values serialize"))
        } else {
            self.text.clone().unwrap_or_else(|| render_text(&self.value))
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

/// `key: value` lines, with nested values in compact JSON.
fn render_text(value: &Value) -> String {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        other => format!("{other}\n"),
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Torsion { family, hmax } => torsion(*family, *hmax),
        Command::Distinguish { first, second } => {
            Ok(Output::json(json!({ "first": first, "second": second, "result": distinguish(*first, *second)? })))
        }
        Command::LcmClaim { a, b, bound } => lcm_claim(*a, *b, *bound),
        Command::Bounds { p, q, r } => bounds(*p as usize, *q as usize, *r as usize),
        Command::Fdomain { q, r, cap } => {
            let k = fundamental_domain(*q as usize, *r as usize, cap.map(|c| c as usize))
                .map_err(|e| CliError::Usage(e.to_string()))?;
            complex_output(json!({ "q": q, "r": r, "cap": cap }), &k)
        }
        Command::Witness { k, j, homology } => {
            let complex = sphere_witness(*k as usize, *j as usize);
            let mut out = complex_output(json!({ "k": k, "j": j }), &complex)?;
            if *homology {
                out.text = Some(render_text(&json!({ "betti": out.value["homology"]["betti"], "torsion": out.value["homology"]["torsion"] })));
            }
            Ok(out)
        }
        Command::Retract { family, sigma, sources, export } => retract(*family, sigma, sources, export.as_ref()),
        Command::Census { family, height } => {
            let counts = spine_sublevel_census(*family, *height as usize)?;
            let rows: Vec<Value> = counts.iter().map(|(h, c)| json!([h, c.to_string()])).collect();
            let text = counts.iter().map(|(h, c)| format!("{h} {c}\n")).collect();
            Ok(Output { value: json!({ "family": family, "counts": rows }), text: Some(text), ok: true })
        }
        Command::DlinkParams { family, k } => {
            let p = descending_link_params(*family, *k)?;
            Ok(Output::json(json!({
                "family": family, "k": k, "p": p.punctures, "q": p.marked_points, "r": p.radius
            })))
        }
        Command::CheckPresentation { name: PresentationName::Brh2, nmax } => check_presentation(*nmax),
        Command::Homology { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| CliError::Io { path: file.display().to_string(), source: e })?;
            let k = SimplicialComplex::parse(&text)?;
            let h = k.reduced_homology()?;
            let value = serde_json::to_value(&h).expect("reports serialize");
            Ok(Output { text: Some(format!("{}\n", serde_json::to_string(&h).expect("reports serialize"))), value, ok: true })
        }
        Command::Reproduce { filter, golden, no_timings } => {
            let golden = match golden {
                Some(path) => Golden::load(path)?,
                None => Ok(Golden::embedded()),
            };
            reproduce(&Context { seed: cli.seed, golden }, filter.as_deref(), !no_timings)
        }
    }
}

fn spectrum_json(s: &OrderSpectrum) -> Value {
    let orders = match &s.orders {
        SpectrumOrders::Finite(set) => json!(set),
        SpectrumOrders::Unbounded => json!("unbounded"),
    };
    json!({ "orders": orders, "witnesses": s.witnesses.values().collect::<Vec<_>>() })
}

fn torsion(family: TreeFamily, hmax: Option<u64>) -> Result<Output, CliError> {
    let closed = spectrum_closed_form(family).ok();
    let (source, primary) = match hmax {
        Some(h) => ("enumerated", spectrum_enumerated(family, h as usize)?),
        None => match &closed {
            Some(c) => ("closed_form", c.clone()),
            None => return Err(CliError::Usage(format!("no closed form for {family}; pass --hmax"))),
        },
    };
    let mut value = spectrum_json(&primary);
    value["family"] = json!(family);
    value["source"] = json!(source);
    if let Some(h) = hmax {
        value["hmax"] = json!(h);
    }
    if let Some(c) = &closed {
        value["closed_form"] = spectrum_json(c)["orders"].clone();
    }
    let orders = match &primary.orders {
        SpectrumOrders::Finite(set) => set.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
        SpectrumOrders::Unbounded => "every positive integer".into(),
    };
    let text = format!("family: {family}\nsource: {source}\norders: {orders}\n");
    Ok(Output { value, text: Some(text), ok: true })
}

fn lcm_claim(a: u64, b: u64, bound: u64) -> Result<Output, CliError> {
    if bound < a.max(b) {
        return Err(CliError::Usage(format!("bound {bound} must be at least max(a, b) = {}", a.max(b))));
    }
    let set = lcm_claim_set(a, b, bound);
    let divisors = amodlab::torsion::divisors(amodlab::torsion::gcd0(a, b));
    let holds = set == divisors;
    Ok(Output {
        value: json!({ "a": a, "b": b, "bound": bound, "orders": set, "divisors_of_gcd": divisors, "holds": holds }),
        text: None,
        ok: holds,
    })
}

fn bounds(p: usize, q: usize, r: usize) -> Result<Output, CliError> {
    let relation = SeparationRelation::separated(q, r).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Output::json(json!({
        "p": p,
        "q": q,
        "r": r,
        "connectivity_bound": connectivity_bound(p, q, r),
        "min_related": relation.min_related(),
        "general_bound": general_bound(p, &relation),
        "conjectured_sphere_dimension": conjectured_sphere_dimension(p, &relation),
    })))
}

/// Facets plus homology; the text form is the facet file with the homology
/// as a trailing comment.
fn complex_output(mut header: Value, k: &SimplicialComplex) -> Result<Output, CliError> {
    let h = k.reduced_homology()?;
    header["facets"] = json!(k.facets());
    header["homology"] = serde_json::to_value(&h).expect("reports serialize");
    let text = format!("{}# homology {}\n", k.to_text(), serde_json::to_string(&h).expect("reports serialize"));
    Ok(Output { value: header, text: Some(text), ok: true })
}

fn parse_surface(family: TreeFamily, text: &str) -> Result<AdmissibleSurface, CliError> {
    let polygons = text
        .split(',')
        .map(|item| item.trim().parse::<PolygonAddress>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AdmissibleSurface::new(family, polygons)?)
}

fn surface_json(s: &AdmissibleSurface) -> Value {
    json!(s.polygons().iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn fragment_json(x: &CubeFragment) -> Result<Value, CliError> {
    Ok(json!({
        "vertices": x.vertices().len(),
        "cell_counts": x.cell_counts(),
        "euler_characteristic": x.euler_characteristic(),
        "homology": x.reduced_homology()?,
    }))
}

fn retract(
    family: TreeFamily,
    sigma: &str,
    sources: &[String],
    export: Option<&PathBuf>,
) -> Result<Output, CliError> {
    let top = parse_surface(family, sigma)?;
    let sources = sources.iter().map(|s| parse_surface(family, s)).collect::<Result<Vec<_>, _>>()?;
    let x = build_interval(&sources, &top)?;
    let trace = morse_collapse(&x, &top)?;
    let spine = spine_retract(&x)?;
    let in_spine = spine.output.vertices().iter().all(AdmissibleSurface::contains_center);
    let preserved = spine.closure.reduced_homology()?.same_groups(&spine.output.reduced_homology()?);
    let violations = x.dimension_bound_violations().len()
        + spine.closure.dimension_bound_violations().len()
        + spine.output.dimension_bound_violations().len();
    if let Some(path) = export {
        let (complex, order) = x.triangulate();
        let mut text = String::new();
        for (id, v) in order.iter().enumerate() {
            text.push_str(&format!("# {id} {}\n", v.polygons().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")));
        }
        text.push_str(&complex.to_text());
        std::fs::write(path, text).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    }
    let value = json!({
        "family": family,
        "sigma": surface_json(&top),
        "sources": sources.iter().map(surface_json).collect::<Vec<_>>(),
        "interval": fragment_json(&x)?,
        "collapse": trace,
        "spine": {
            "layers": spine.layers,
            "closure": fragment_json(&spine.closure)?,
            "output": fragment_json(&spine.output)?,
            "in_spine": in_spine,
            "homology_preserved": preserved,
        },
        "spine_vertices": canonical_vertex_order(spine.output.vertices()).iter().map(surface_json).collect::<Vec<_>>(),
        "dimension_bound_violations": violations,
    });
    Ok(Output { value, text: None, ok: in_spine && preserved && violations == 0 })
}

fn check_presentation(nmax: u32) -> Result<Output, CliError> {
    let p = brh2_presentation(nmax);
    let assignment = standard_assignment();
    let report = check_relators(&p, &assignment).map_err(|e| CliError::Usage(e.to_string()))?;
    let degrees: BTreeMap<&String, i64> = p
        .generators()
        .iter()
        .map(|g| Ok((g, evaluate_word(&Word::generator(g), &assignment)?.shift())))
        .collect::<Result<_, amodlab::presentations::PresentationError>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let failing = report.checks.iter().filter(|c| !c.holds).count();
    let text = format!(
        "{}# {} relators, {} failing; degrees {}\n",
        p.to_text(),
        report.checks.len(),
        failing,
        degrees.iter().map(|(g, d)| format!("{g}={d}")).collect::<Vec<_>>().join(" ")
    );
    Ok(Output {
        value: json!({ "presentation": "brh2", "nmax": nmax, "degrees": degrees, "report": report }),
        text: Some(text),
        ok: report.all_hold,
    })
}

fn reproduce(ctx: &Context, filter: Option<&str>, timings: bool) -> Result<Output, CliError> {
    let selected: Vec<_> = criteria::all().into_iter().filter(|c| filter.is_none_or(|f| c.matches(f))).collect();
    if selected.is_empty() {
        return Err(CliError::Usage(format!("no criterion matches {:?}", filter.unwrap_or_default())));
    }
    // Collected in selection order whatever the scheduling.
    let results: Vec<_> = selected.par_iter().map(|c| c.run(ctx, timings)).collect();
    let passed = results.iter().filter(|r| r.passed).count();
    let mut text = String::new();
    for r in &results {
        text.push_str(&r.summary_line());
        text.push('\n');
        for failure in &r.failures {
            text.push_str(&format!("    {failure}\n"));
        }
        if r.failure_count > r.failures.len() {
            text.push_str(&format!("    ... {} more\n", r.failure_count - r.failures.len()));
        }
    }
    text.push_str(&format!("{passed}/{} criteria passed\n", results.len()));
    Ok(Output {
        value: json!({ "seed": ctx.seed, "criteria": results, "passed": passed, "failed": results.len() - passed }),
        text: Some(text),
        ok: passed == results.len(),
    })
}
