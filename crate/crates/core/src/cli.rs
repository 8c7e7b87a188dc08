//! Command-line front end.
//!
//! Exit codes: 0 success or equal, 1 usage or parse error, 2 mismatch
//! (oracle or comparison), 3 oracle budget exhausted.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::algebra::{json_number, RationalSeries};
use crate::coxgraph::CoxeterGraph;
use crate::error::{Error, Result};
use crate::evencox::{self, EvenSystem};
use crate::{oracle, racg};

#[derive(Parser, Debug)]
#[command(name = "geogrowth", version, about = "Geodesic growth of Coxeter and Artin groups given by labelled graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cliques, f-polynomial, triangles and regularity of a graph.
    Analyze { path: PathBuf },
    /// Geodesic counts and the rational growth series.
    Growth {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Racg)]
        kind: Kind,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Compares two even systems (counts, series, rigid chains).
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 12)]
        terms: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
    },
    /// Table of rigid chains by rank and length.
    Chains {
        path: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
    },
    /// Checks automaton counts against the automaton-free oracle.
    Oracle {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Racg)]
        kind: Kind,
        #[arg(long, default_value_t = 6)]
        terms: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Closed growth series of an l-regular triangle-free graph on n vertices.
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 8)]
        terms: usize,
    },
    /// Groups all trees up to a size by the growth series of their groups.
    Trees {
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Racg,
    Raag,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Reflection representation when labels allow, else braid moves.
    Auto,
    Braid,
    Reflection,
}

/// Result of one command: what to print and the exit code.
struct Outcome {
    text: String,
    json: Value,
    csv: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String, json: Value, csv: String) -> Self {
        Outcome { text, json, csv, code: 0 }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out` and errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json output") + "\n",
                Format::Csv => o.csv,
            };
            let _ = out.write_all(body.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted { .. } => 3,
        _ => 1,
    }
}

fn read_graph(path: &Path) -> Result<CoxeterGraph> {
    let text = std::fs::read_to_string(path)?;
    CoxeterGraph::parse(&text).map_err(|e| match e {
        Error::Parse { line, issue } => Error::Usage(format!("{}: line {line}: {issue}", path.display())),
        other => other,
    })
}

fn numbers<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::Number(json_number(x))).collect())
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn counts_csv<T: ToString>(xs: &[T]) -> String {
    let mut s = String::from("n,count\n");
    for (i, x) in xs.iter().enumerate() {
        s.push_str(&format!("{i},{}\n", x.to_string()));
    }
    s
}

fn series_json(s: &RationalSeries) -> Value {
    serde_json::to_value(s).expect("series serializes")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Analyze { path } => analyze(&read_graph(path)?),
        Command::Growth { path, kind, terms } => growth(&read_graph(path)?, *kind, *terms),
        Command::Compare { a, b, terms, max_len, max_rank } => {
            compare(&read_graph(a)?, &read_graph(b)?, *terms, *max_len, *max_rank)
        }
        Command::Chains { path, max_len, max_rank } => chains(&read_graph(path)?, *max_len, *max_rank),
        Command::Oracle { path, kind, terms, budget, method } => {
            oracle_check(&read_graph(path)?, *kind, *terms, *budget, *method)
        }
        Command::Formula { n, l, terms } => formula(*n, *l, *terms),
        Command::Trees { max_vertices } => trees(*max_vertices),
    }
}

fn analyze(g: &CoxeterGraph) -> Result<Outcome> {
    let f = g.f_polynomial();
    let reg = g.link_regularity();
    let star = g.star_regularity();
    let klinks = g.klink_f_polynomials();
    let triangle = g.find_triangle().map(|(a, b, c)| g.names_of(&[a, b, c]));

    let mut text = format!("vertices: {}\nedges: {}\n", g.vertex_count(), g.edge_count());
    text += &format!("right-angled: {}\n", yes(g.is_right_angled()));
    text += &format!("f-polynomial: {}\n", f.display_with("t"));
    text += &format!("triangle-free: {}\n", yes(triangle.is_none()));
    if let Some(t) = &triangle {
        text += &format!("  triangle: {}\n", t.join(" "));
    }
    text += &format!("link-regular: {}\n", yes(reg.is_link_regular));
    for (size, len) in &reg.link_sizes {
        text += &format!("  |Link| for {size}-cliques: {len}\n");
    }
    if let Some((a, b)) = &reg.witness {
        text += &format!("  witness: {{{}}} and {{{}}}\n", a.join(" "), b.join(" "));
    }
    text += &format!("star-regular: {}\n", yes(star.is_star_regular));
    if let Some((a, b)) = &star.witness {
        text += &format!("  witness: stars of {a} and {b} differ\n");
    }
    text += "K-link f-polynomials:\n";
    for (size, set) in &klinks {
        let polys: Vec<String> = set.iter().map(|p| p.display_with("t")).collect();
        text += &format!("  size {size}: {}\n", polys.join("; "));
    }

    let klink_json: BTreeMap<String, Vec<Value>> = klinks
        .iter()
        .map(|(k, set)| (k.to_string(), set.iter().map(|p| numbers(p.coeffs())).collect()))
        .collect();
    let json = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "right_angled": g.is_right_angled(),
        "f_polynomial": numbers(f.coeffs()),
        "triangle_free": triangle.is_none(),
        "triangle": triangle,
        "link_regularity": reg,
        "star_regularity": star,
        "klink_f_polynomials": klink_json,
    });
    let mut csv = String::from("size,count\n");
    for (i, c) in f.coeffs().iter().enumerate().skip(1) {
        csv += &format!("{i},{c}\n");
    }
    Ok(Outcome::ok(text, json, csv))
}

fn counts_and_series(g: &CoxeterGraph, kind: Kind, terms: usize) -> Result<(Vec<BigUint>, RationalSeries)> {
    Ok(match kind {
        Kind::Racg => (racg::count_geodesics_racg(g, terms)?, racg::growth_series_racg(g)?),
        Kind::Raag => (racg::count_geodesics_raag(g, terms)?, racg::growth_series_raag(g)?),
        Kind::Even => {
            let sys = EvenSystem::new(g.clone())?;
            (evencox::count_geodesics_even(&sys, terms), evencox::growth_series_even(&sys)?)
        }
    })
}

fn growth(g: &CoxeterGraph, kind: Kind, terms: usize) -> Result<Outcome> {
    let (counts, series) = counts_and_series(g, kind, terms)?;
    let mut text = format!("counts: {}\nseries: {series}\n", joined(&counts));
    let mut json = json!({ "counts": numbers(&counts), "series": series_json(&series) });
    let mut code = 0;
    if kind == Kind::Racg && g.vertex_count() > 0 && g.is_triangle_free() {
        if let Some(l) = racg::regular_degree(g) {
            if let Ok(f) = racg::formula_regular_trianglefree(g.vertex_count(), l) {
                let matches = f == series;
                text += &format!("formula: {f}\nformula check: {}\n", if matches { "MATCH" } else { "MISMATCH" });
                json["formula"] = series_json(&f);
                json["formula_matches"] = json!(matches);
                if !matches {
                    code = 2;
                }
            }
        }
    }
    Ok(Outcome { text, json, csv: counts_csv(&counts), code })
}

fn compare(a: &CoxeterGraph, b: &CoxeterGraph, terms: usize, max_len: usize, max_rank: usize) -> Result<Outcome> {
    let r = evencox::compare_graphs(a, b, terms, max_len, max_rank)?;
    let verdict = match (r.series_equal, r.first_difference) {
        (true, _) => "EQUAL".to_string(),
        (false, Some(n)) => format!("DIFFER at n={n}"),
        (false, None) => format!("DIFFER (series only; counts agree to n={terms})"),
    };
    let mut text = String::new();
    for (name, s) in [("A", &r.a), ("B", &r.b)] {
        text += &format!(
            "{name}: generators {}, triangle-free {}, star-regular {}, automaton {}\n  counts: {}\n  series: {}\n",
            s.generators,
            yes(s.triangle_free),
            yes(s.star_regular),
            s.pipeline,
            joined(&s.counts),
            s.series
        );
    }
    text += &format!("hypotheses hold: {}\n", yes(r.hypotheses_hold));
    if let Some(eq) = r.chain_tables_equal {
        text += &format!("rigid chain tables (len {max_len}, rank {max_rank}) equal: {}\n", yes(eq));
    }
    text += &verdict;
    text.push('\n');
    let mut csv = String::from("n,count_a,count_b\n");
    for (i, (x, y)) in r.a.counts.iter().zip(&r.b.counts).enumerate() {
        csv += &format!("{i},{x},{y}\n");
    }
    let code = if r.series_equal { 0 } else { 2 };
    let mut json = serde_json::to_value(&r).expect("report serializes");
    json["verdict"] = json!(verdict);
    Ok(Outcome { text, json, csv, code })
}

fn chains(g: &CoxeterGraph, max_len: usize, max_rank: usize) -> Result<Outcome> {
    let sys = EvenSystem::new(g.clone())?;
    let table = evencox::enumerate_rigid_chains(&sys, max_len, max_rank);
    let mut text = String::new();
    let mut csv = String::from("rank,length,count\n");
    for (m, n, c) in table.nonzero() {
        text += &format!("Q[{m}][{n}]={c}\n");
        csv += &format!("{m},{n},{c}\n");
    }
    let json = serde_json::to_value(&table).expect("table serializes");
    Ok(Outcome::ok(text, json, csv))
}

fn oracle_check(g: &CoxeterGraph, kind: Kind, terms: usize, budget: usize, method: Method) -> Result<Outcome> {
    let (automaton, _) = match kind {
        Kind::Racg => (racg::count_geodesics_racg(g, terms)?, ()),
        Kind::Raag => (racg::count_geodesics_raag(g, terms)?, ()),
        Kind::Even => (evencox::count_geodesics_even(&EvenSystem::new(g.clone())?, terms), ()),
    };
    let (used, truth) = match (kind, method) {
        (Kind::Raag, Method::Braid) => ("commutation", oracle::oracle_counts_raag(g, terms, budget)?),
        (Kind::Raag, _) => ("commutation-fast", oracle::oracle_counts_raag_fast(g, terms)?),
        (_, Method::Braid) => ("braid", oracle::oracle_counts(g, terms, budget)?),
        (_, Method::Reflection) => ("reflection", oracle::reflection_counts(g, terms)?),
        (_, Method::Auto) => match oracle::reflection_counts(g, terms) {
            Ok(c) => ("reflection", c),
            Err(Error::UnsupportedLabel(_)) | Err(Error::Usage(_)) => ("braid", oracle::oracle_counts(g, terms, budget)?),
            Err(e) => return Err(e),
        },
    };
    let mismatch = automaton.iter().zip(&truth).position(|(a, b)| a != b);
    let verdict = match mismatch {
        None => "MATCH".to_string(),
        Some(n) => format!("MISMATCH at n={n}"),
    };
    let text = format!("automaton: {}\noracle ({used}): {}\n{verdict}\n", joined(&automaton), joined(&truth));
    let json = json!({
        "automaton": numbers(&automaton),
        "oracle": numbers(&truth),
        "method": used,
        "match": mismatch.is_none(),
        "first_mismatch": mismatch,
    });
    let mut csv = String::from("n,automaton,oracle\n");
    for (i, (a, b)) in automaton.iter().zip(&truth).enumerate() {
        csv += &format!("{i},{a},{b}\n");
    }
    Ok(Outcome { text, json, csv, code: if mismatch.is_none() { 0 } else { 2 } })
}

fn formula(n: usize, l: usize, terms: usize) -> Result<Outcome> {
    let f = racg::formula_regular_trianglefree(n, l)?;
    let counts = f.expand(terms);
    let text = format!("series: {f}\ncounts: {}\n", joined(&counts));
    let json = json!({ "n": n, "l": l, "series": series_json(&f), "counts": numbers(&counts) });
    Ok(Outcome::ok(text, json, counts_csv(&counts)))
}

/// Unlabelled trees on exactly `n` vertices, as edge lists, one per
/// isomorphism class.
pub fn trees_on(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::from([(String::from("()"), Vec::new())]);
    for k in 1..n {
        let mut next = BTreeMap::new();
        for edges in layer.values() {
            for v in 0..k {
                let mut e = edges.clone();
                e.push((v, k));
                next.entry(tree_canon(k + 1, &e)).or_insert(e);
            }
        }
        layer = next;
    }
    layer.into_values().collect()
}

/// Canonical string of a tree: the smaller rooted encoding over its centres.
fn tree_canon(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // peel leaves to find the centres
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut remaining = n;
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &v in &leaves {
            for &u in &adj[v] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        leaves = next;
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| encode(adj, u, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    leaves.iter().map(|&c| encode(&adj, c, usize::MAX)).min().expect("a tree has a centre")
}

fn trees(max_vertices: usize) -> Result<Outcome> {
    let mut classes: BTreeMap<(usize, String), Vec<String>> = BTreeMap::new();
    let mut total = 0;
    for n in 1..=max_vertices {
        for edges in trees_on(n) {
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let labelled: Vec<(usize, usize, u64)> = edges.iter().map(|&(a, b)| (a, b, 2)).collect();
            let g = CoxeterGraph::new(names, &labelled)?;
            let series = racg::growth_series_racg(&g)?;
            let shape: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            classes.entry((n, series.to_string())).or_default().push(shape.join(" "));
            total += 1;
        }
    }
    let collisions: Vec<_> = classes.iter().filter(|(_, v)| v.len() > 1).collect();
    let mut text = format!("trees: {total}\ndistinct series: {}\n", classes.len());
    let mut csv = String::from("vertices,series,trees\n");
    for ((n, s), members) in &classes {
        csv += &format!("{n},\"{s}\",{}\n", members.len());
    }
    for ((n, s), members) in &collisions {
        text += &format!("{n} vertices share {s}:\n");
        for m in members.iter() {
            text += &format!("  {m}\n");
        }
    }
    if collisions.is_empty() {
        text += "no two non-isomorphic trees share a growth series\n";
    }
    let json = json!({
        "trees": total,
        "distinct_series": classes.len(),
        "collisions": collisions.iter().map(|((n, s), m)| json!({"vertices": n, "series": s, "trees": m})).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, json, csv))
}
