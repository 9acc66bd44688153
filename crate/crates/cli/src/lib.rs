//! Command surface of the `chromakit` binary.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use chromakit::chromatic::{ChromaticEngine, FactorialPolynomial, PolyCache, StandardPolynomial, CACHE_ENV};
use chromakit::garlands::{
    destruction_bound_holds, edge_pairs_identity, interesting_census, lemma_bound_suite, six_edge_check, xi_stats,
};
use chromakit::graph6::parse_graph6;
use chromakit::lattice::npl_lattice;
use chromakit::report::REPORT_SCHEMA;
use chromakit::sample::{random_edge_set, seeded};
use chromakit::verifier::{
    bruteforce_verify, case_study, schema_verify_with, CaseStudy, Verdict, VerificationReport, VerifyOptions,
    DEFAULT_ORBIT_GUARD,
};
use chromakit::{EdgeSet, LabeledGraph, Partition};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Parser, Serialize)]
#[command(
    name = "chromakit",
    version,
    about = "Chromatic uniqueness of complete multipartite graphs"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    /// Maximum orbit representatives per candidate and level.
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_GUARD, value_parser = clap::value_parser!(u64).range(1..))]
    pub guard: u64,

    /// Append-only polynomial cache file.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,

    /// Seed for random edge sets.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GraphInput {
    /// Complete multipartite graph K(u), e.g. 5,4,3.
    #[arg(long, conflicts_with = "graph6", required_unless_present = "graph6")]
    pub partition: Option<Partition>,
    /// Arbitrary graph in graph6.
    #[arg(long)]
    pub graph6: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DeletionInput {
    /// Host K(v).
    #[arg(long)]
    pub partition: Partition,
    /// `a-b,c-d` over vertices numbered part by part, or `random`.
    #[arg(long)]
    pub edges: String,
    /// Size of a random edge set.
    #[arg(long, default_value_t = 3)]
    pub edge_count: usize,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    /// Chromatic polynomial in the power and falling-factorial bases.
    Poly(GraphInput),
    /// The invariant pt(G) = pt(G, χ+1).
    Pt(GraphInput),
    /// The lattice NPL(n, t) up to a height.
    Lattice {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 4)]
        max_height: u32,
    },
    /// Interesting-garland census of (K(v), E).
    Garlands(DeletionInput),
    /// ξ-statistics of (K(v), E).
    Xi(DeletionInput),
    /// Garland-count bounds applicable to (K(v), E).
    Lemmas(DeletionInput),
    /// Schema search for graphs chromatically equivalent to K(u).
    Verify {
        #[arg(long)]
        partition: Partition,
        /// Also search candidates eliminated by arithmetic.
        #[arg(long)]
        search_pruned: bool,
        /// Enumerate every subset instead of orbit representatives.
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Compare K(u) against every graph of a graph6 file.
    Brute {
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        graphs: PathBuf,
    },
    /// Candidate table for K(q+3,q−1,q−2) (residue 0) or K(q+3,q,q−2) (residue 1).
    CaseStudy {
        #[arg(long)]
        residue: u32,
        #[arg(long)]
        q: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Poly(_) => "poly",
            Command::Pt(_) => "pt",
            Command::Lattice { .. } => "lattice",
            Command::Garlands(_) => "garlands",
            Command::Xi(_) => "xi",
            Command::Lemmas(_) => "lemmas",
            Command::Verify { .. } => "verify",
            Command::Brute { .. } => "brute",
            Command::CaseStudy { .. } => "case-study",
        }
    }
}

/// Rendered output of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Self {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

/// Parses arguments (including the program name) and runs.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    exit_code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::usage(text),
            }
        }
    }
}

/// Entry point of the binary: writes the outcome and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let out = run_args(args);
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    out.exit_code
}

struct Rendered {
    json: Value,
    text: String,
    dot: Option<String>,
    exit_code: i32,
}

impl Rendered {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            dot: None,
            exit_code: EXIT_OK,
        }
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = config.threads {
        builder = builder.num_threads(t as usize);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("error: thread pool: {e}\n")),
    };
    let engine = match &config.cache {
        Some(path) => match PolyCache::open(path) {
            Ok(cache) => ChromaticEngine::new(Arc::new(cache)),
            Err(e) => return Outcome::usage(format!("error: {e}\n")),
        },
        None => ChromaticEngine::default(),
    };
    let rendered = pool.install(|| execute(config, &engine));
    let _ = engine.cache().flush();
    let rendered = match rendered {
        Ok(r) => r,
        Err(msg) => return Outcome::usage(format!("error: {msg}\n")),
    };
    let stdout = match config.format {
        Format::Json => {
            let envelope = json!({
                "schema": REPORT_SCHEMA,
                "command": config.command.name(),
                "config": config,
                "result": rendered.json,
            });
            serde_json::to_string_pretty(&envelope).expect("reports serialise") + "\n"
        }
        Format::Text => rendered.text,
        Format::Dot => match rendered.dot {
            Some(d) => d,
            None => {
                return Outcome::usage(format!(
                    "error: --format dot is only available for `lattice`, not `{}`\n",
                    config.command.name()
                ))
            }
        },
    };
    Outcome {
        exit_code: rendered.exit_code,
        stdout,
        stderr: String::new(),
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialise")
}

fn graph_of(input: &GraphInput) -> Result<(LabeledGraph, String), String> {
    match (&input.partition, &input.graph6) {
        (Some(p), _) => Ok((LabeledGraph::complete_multipartite(p), format!("K({p})"))),
        (None, Some(g)) => parse_graph6(g).map(|h| (h, g.clone())).map_err(|e| e.to_string()),
        (None, None) => Err("one of --partition or --graph6 is required".into()),
    }
}

fn deletion_of(input: &DeletionInput, seed: u64) -> Result<EdgeSet, String> {
    if input.edges.trim() == "random" {
        let mut rng = seeded(seed);
        Ok(random_edge_set(&mut rng, &input.partition, input.edge_count))
    } else {
        EdgeSet::parse(&input.partition, &input.edges).map_err(|e| e.to_string())
    }
}

fn strings(c: &[BigInt]) -> Vec<String> {
    c.iter().map(BigInt::to_string).collect()
}

fn execute(config: &RunConfig, engine: &ChromaticEngine) -> Result<Rendered, String> {
    let err = |e: chromakit::Error| e.to_string();
    match &config.command {
        Command::Poly(input) => {
            let (g, label) = graph_of(input)?;
            let p: StandardPolynomial = engine.polynomial(&g).map_err(err)?;
            let f: FactorialPolynomial = p.to_factorial();
            let text = format!(
                "P({label}, x) = {p}\nfactorial: [{}]\nchi = {}\npt = {}\n",
                strings(f.coeffs()).join(", "),
                f.chi(),
                f.pt()
            );
            Ok(Rendered::ok(
                json!({
                    "graph": label,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "standard": strings(p.coeffs()),
                    "factorial": strings(f.coeffs()),
                    "chi": f.chi(),
                    "pt": f.pt().to_string(),
                    "display": p.to_string(),
                }),
                text,
            ))
        }
        Command::Pt(input) => {
            let (g, label) = graph_of(input)?;
            let f = engine.zykov_coefficients(&g).map_err(err)?;
            let closed = input.partition.as_ref().map(|p| p.pt_closed_form().to_string());
            let mut text = format!("pt({label}) = {}\n", f.pt());
            if let Some(c) = &closed {
                let _ = writeln!(text, "closed form = {c}");
            }
            Ok(Rendered::ok(
                json!({ "graph": label, "chi": f.chi(), "pt": f.pt().to_string(), "pt_closed_form": closed }),
                text,
            ))
        }
        Command::Lattice { n, t, max_height } => {
            let l = npl_lattice(*n, *t, *max_height).map_err(err)?;
            let mut text = String::new();
            for node in &l.nodes {
                let _ = writeln!(text, "({}) h={}", node.partition, node.height);
            }
            for c in &l.covers {
                let _ = writeln!(
                    text,
                    "({}) -> ({}) Δm={}, Δpt={}",
                    c.upper, c.lower, c.delta_edges, c.delta_pt
                );
            }
            Ok(Rendered {
                dot: Some(l.to_dot()),
                ..Rendered::ok(to_json(&l), text)
            })
        }
        Command::Garlands(input) => {
            let e = deletion_of(input, config.seed)?;
            let v = &input.partition;
            let census = interesting_census(v, &e).map_err(err)?;
            let bound = destruction_bound_holds(v, &e).map_err(err)?;
            let h = e.complement_graph();
            let (pt_h, pt_v) = if h.vertex_count() <= chromakit::chromatic::MAX_POLY_VERTICES {
                (
                    Some(engine.zykov_coefficients(&h).map_err(err)?.coeff(v.len() + 1)),
                    Some(v.pt_closed_form()),
                )
            } else {
                (None, None)
            };
            let delta = pt_h.as_ref().zip(pt_v.as_ref()).map(|(a, b)| (a - b).to_string());
            let mut text = format!(
                "K({v}) minus {}\ninteresting garlands: {}\nall garlands: {}\n",
                e.to_edge_list_string(),
                census.total_interesting,
                census.total_garlands
            );
            for (k, c) in &census.mu {
                let _ = writeln!(text, "mu_{k} = {c}");
            }
            for (ty, c) in &census.by_type {
                let _ = writeln!(text, "{ty}: {c}");
            }
            if let Some(d) = &delta {
                let _ = writeln!(text, "pt(H, t+1) - pt(K(v)) = {d}");
            }
            Ok(Rendered::ok(
                json!({
                    "partition": v,
                    "edges": e.to_edge_list_string(),
                    "census": census,
                    "destruction_bound_holds": bound,
                    "delta_pt_zykov": delta,
                }),
                text,
            ))
        }
        Command::Xi(input) => {
            let e = deletion_of(input, config.seed)?;
            let v = &input.partition;
            let s = xi_stats(v, &e);
            let direct = v.triangle_count() as i64 - e.complement_graph().triangle_count() as i64;
            let text = format!(
                "xi1 = {}\nxi2 = {}\nxi3 = {}\ndelta_I3 = {}\nI3(K(v)) - I3(H) = {direct}\n",
                s.xi1, s.xi2, s.xi3, s.delta_i3
            );
            Ok(Rendered::ok(
                json!({ "partition": v, "edges": e.to_edge_list_string(), "xi": s, "delta_i3_direct": direct }),
                text,
            ))
        }
        Command::Lemmas(input) => {
            let e = deletion_of(input, config.seed)?;
            let v = &input.partition;
            let suite = lemma_bound_suite(v, &e).map_err(err)?;
            let pairs = edge_pairs_identity(v, &e);
            let six = if e.len() == 6 {
                Some(six_edge_check(v, &e).map_err(err)?)
            } else {
                None
            };
            let mut text = format!("garlands: {}\n", suite.total_garlands);
            for c in &suite.checks {
                let status = match c.satisfied {
                    None => "n/a".to_string(),
                    Some(ok) => format!(
                        "bound {} {}",
                        c.bound.unwrap_or_default(),
                        if ok { "holds" } else { "VIOLATED" }
                    ),
                };
                let _ = writeln!(text, "{:?}: {status}", c.lemma);
            }
            let satisfied = suite.all_satisfied();
            Ok(Rendered::ok(
                json!({
                    "partition": v,
                    "edges": e.to_edge_list_string(),
                    "suite": suite,
                    "edge_pairs": pairs,
                    "six_edge": six,
                    "all_satisfied": satisfied,
                }),
                text,
            ))
        }
        Command::Verify {
            partition,
            search_pruned,
            no_symmetry,
        } => {
            let opts = VerifyOptions {
                orbit_guard: config.guard,
                symmetry_reduction: !no_symmetry,
                search_pruned: *search_pruned,
            };
            let r = schema_verify_with(engine, partition, &opts).map_err(err)?;
            Ok(verdict_rendered(to_json(&r), report_text(&r), r.verdict))
        }
        Command::Brute { partition, graphs } => {
            let data = std::fs::read_to_string(graphs).map_err(|e| format!("{}: {e}", graphs.display()))?;
            let r = bruteforce_verify(engine, partition, data.lines()).map_err(err)?;
            Ok(verdict_rendered(to_json(&r), report_text(&r), r.verdict))
        }
        Command::CaseStudy { residue, q } => {
            let opts = VerifyOptions {
                orbit_guard: config.guard,
                ..VerifyOptions::default()
            };
            let cs = case_study(engine, *residue, *q, &opts).map_err(err)?;
            Ok(verdict_rendered(to_json(&cs), case_text(&cs), cs.verdict))
        }
    }
}

fn verdict_rendered(json: Value, text: String, v: Verdict) -> Rendered {
    Rendered {
        exit_code: v.exit_code(),
        ..Rendered::ok(json, text)
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::UniqueAtScope => "UNIQUE_AT_SCOPE",
        Verdict::Counterexample => "COUNTEREXAMPLE",
        Verdict::Incomplete => "INCOMPLETE",
    }
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = format!("target K({})\n", r.target);
    for c in &r.candidates {
        let tag = c.pruned_by.map_or("search".to_string(), |p| format!("{p:?}"));
        let _ = writeln!(
            s,
            "  v=({}) |E|={} Δpt={} ΔI3={} {tag}",
            c.v, c.edge_deficit, c.delta_pt_required, c.delta_i3_required
        );
    }
    let _ = writeln!(
        s,
        "examined {} surviving_I3 {} surviving_pt {} polynomial_matches {}",
        r.subsets_examined, r.subsets_surviving_i3, r.subsets_surviving_pt, r.polynomial_matches
    );
    for c in &r.counterexamples {
        let _ = writeln!(s, "  counterexample {}", c.graph6);
    }
    if let Some(g) = &r.guard_tripped {
        let _ = writeln!(s, "  guard: {} {} > {}", g.what, g.value, g.limit);
    }
    let _ = writeln!(s, "{}", verdict_name(r.verdict));
    s
}

fn case_text(cs: &CaseStudy) -> String {
    let mut s = format!(
        "q={} residue {}: K({}) with m={}, pt={}, I3={}\n",
        cs.q, cs.residue, cs.target, cs.target_edges, cs.target_pt, cs.target_i3
    );
    for row in &cs.rows {
        let _ = writeln!(
            s,
            "v=({}) |E|={} Δpt={} ΔI3={}  {}",
            row.v, row.edge_deficit, row.delta_pt, row.delta_i3, row.xi1_formula
        );
        if let Some(p) = row.pruned_by {
            let _ = writeln!(s, "    eliminated: {p:?}");
        }
        for r in &row.remarks {
            let _ = writeln!(s, "    {r}");
        }
        if let Some(search) = &row.search {
            let _ = writeln!(
                s,
                "    searched {} orbits of {} subsets: I3 {}, pt {}, polynomial {}",
                search.subsets_examined,
                search.raw_subsets,
                search.surviving_i3,
                search.surviving_pt,
                search.surviving_polynomial
            );
        }
    }
    let _ = writeln!(s, "{}", verdict_name(cs.verdict));
    s
}
