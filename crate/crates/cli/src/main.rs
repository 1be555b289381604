//! `closedwalk` command-line tool.
//!
//! Exit codes: 0 success (or isomorphic), 1 not isomorphic, 2 inconclusive,
//! 3 for any usage, input or internal error.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use closedwalk::charpoly::{
    charpoly_direct, charpoly_from_traces, check_derivative_identity,
    invariants_from_deleted_charpolys, power_traces, vertex_deleted_charpolys,
};
use closedwalk::graph::{
    fixture, parse_edge_list, parse_graph6, random_graph, write_edge_list, write_graph6,
};
use closedwalk::invariants::{
    certificate, extended_profile, walk_diagonal_table, walk_diagonal_table_mod,
};
use closedwalk::isomatch::{find_isomorphism, IsoResult, SearchConfig, Verdict, Witness};
use closedwalk::reconstruct::{reconstruct_adjacency, ReconstructionResult, Tolerances};
use closedwalk::{Graph, IntPolynomial, WalkProfile, WalkTable};

const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "closedwalk",
    version,
    about = "Closed-walk invariants, isomorphism tests and reconstruction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonal walk table and sorted certificate of a graph.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        walk: WalkArgs,
        /// Also print the extended (off-diagonal) profile.
        #[arg(long)]
        profile: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decide whether two graphs are isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        walk: WalkArgs,
        /// Neighbor-sum refinement rounds.
        #[arg(long, default_value_t = 2)]
        rounds: usize,
        /// Backtracking node budget.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Characteristic polynomial from walk traces, checked against a direct
    /// determinant expansion.
    Charpoly {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Vertex-deleted characteristic polynomials and their inversion back to
    /// walk counts.
    Deleted {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Rebuild an adjacency matrix from a diagonal walk table.
    Reconstruct {
        /// Graph file, or a JSON table as printed by `invariants`.
        path: Option<PathBuf>,
        /// Use a named fixture instead of a file.
        #[arg(long, conflicts_with = "path")]
        fixture: Option<String>,
        /// Powers computed when the input is a graph (default n).
        #[arg(long)]
        kmax: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Write a random graph or a named fixture as graph6.
    Gen {
        /// Fixture name: shrikhande, rook44, petersen, kN, pathN, cycleN, emptyN.
        #[arg(long, conflicts_with_all = ["n", "p"])]
        fixture: Option<String>,
        #[arg(long, required_unless_present = "fixture")]
        n: Option<usize>,
        /// Edge probability.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `text` writes the graph6 line, `json` adds n and the edge count,
        /// `edgelist` writes the edge-list format.
        #[arg(long, value_enum, default_value_t = GenFormat::Text)]
        format: GenFormat,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph file in graph6 or edge-list form; `-` reads standard input.
    #[arg(required_unless_present = "fixture")]
    path: Option<PathBuf>,
    /// Use a named fixture instead of a file.
    #[arg(long, conflicts_with = "path")]
    fixture: Option<String>,
}

#[derive(Args)]
struct WalkArgs {
    /// Largest walk length (default n).
    #[arg(long)]
    kmax: Option<usize>,
    /// Work modulo a prime; without a value uses 2^61 - 1.
    #[arg(long = "mod", value_name = "M", num_args = 0..=1, default_missing_value = "2305843009213693951")]
    modulus: Option<u64>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Shorthand for `--format text`.
    #[arg(long, conflicts_with = "format")]
    text: bool,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.text {
            Format::Text
        } else {
            self.format
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Json,
    Text,
    Edgelist,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cmd: Command) -> Result<(String, u8)> {
    match cmd {
        Command::Invariants {
            input,
            walk,
            profile,
            out,
        } => invariants(&input.load()?, &walk, profile, out.format()).map(|s| (s, 0)),
        Command::Iso {
            first,
            second,
            walk,
            rounds,
            budget,
            out,
        } => {
            let g1 = read_graph(&first)?;
            let g2 = read_graph(&second)?;
            let cfg = SearchConfig {
                kmax: walk.kmax,
                rounds,
                budget,
                modulus: walk.modulus,
            };
            let r = find_isomorphism(&g1, &g2, &cfg)?;
            let code = match r.verdict {
                Verdict::Isomorphic(_) => 0,
                Verdict::NotIsomorphic(_) => 1,
                Verdict::Inconclusive => 2,
            };
            Ok((render_iso(&r, out.format())?, code))
        }
        Command::Charpoly { input, out } => charpoly(&input.load()?, out.format()).map(|s| (s, 0)),
        Command::Deleted { input, out } => deleted(&input.load()?, out.format()).map(|s| (s, 0)),
        Command::Reconstruct {
            path,
            fixture: name,
            kmax,
            out,
        } => {
            let table = match (&path, &name) {
                (_, Some(name)) => table_of(&fixture(name)?, kmax)?,
                (Some(path), None) => {
                    let text = read_input(path)?;
                    if text.trim_start().starts_with('{') {
                        parse_table_json(&text)?
                    } else {
                        table_of(&parse_graph_text(&text)?, kmax)?
                    }
                }
                (None, None) => bail!("give a graph or table file, or --fixture"),
            };
            let r = reconstruct_adjacency::<f64>(&table, &Tolerances::default())?;
            Ok((render_reconstruction(&r, out.format())?, 0))
        }
        Command::Gen {
            fixture: name,
            n,
            p,
            seed,
            format,
        } => {
            let g = match (name, n) {
                (Some(name), _) => fixture(&name)?,
                (None, Some(n)) => random_graph(n, p, seed)?,
                (None, None) => bail!("give --n or --fixture"),
            };
            let text = match format {
                GenFormat::Text => format!("{}\n", write_graph6(&g)),
                GenFormat::Edgelist => write_edge_list(&g),
                GenFormat::Json => to_json(&json!({
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "graph6": write_graph6(&g),
                }))?,
            };
            Ok((text, 0))
        }
    }
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.path, &self.fixture) {
            (_, Some(name)) => Ok(fixture(name)?),
            (Some(path), None) => read_graph(path),
            (None, None) => bail!("give a graph file or --fixture"),
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
    } else {
        text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph_text(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Edge lists start with a decimal header; graph6 never contains digits
/// below `?`, so the first meaningful character decides.
fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| anyhow!("empty input"))?;
    if first.starts_with(|c: char| c.is_ascii_digit()) {
        Ok(parse_edge_list(text)?)
    } else {
        Ok(parse_graph6(text.trim())?)
    }
}

/// Accepts a bare table or a whole `invariants` report.
fn parse_table_json(text: &str) -> Result<WalkTable> {
    let mut v: Value = serde_json::from_str(text).context("parsing JSON input")?;
    if let Some(t) = v.get_mut("table") {
        v = t.take();
    }
    serde_json::from_value(v).context("reading walk table")
}

fn table_of(g: &Graph, kmax: Option<usize>) -> Result<WalkTable> {
    Ok(walk_diagonal_table(g, kmax.unwrap_or(g.n()))?)
}

fn to_json(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn invariants(g: &Graph, walk: &WalkArgs, profile: bool, format: Format) -> Result<String> {
    let kmax = walk.kmax.unwrap_or(g.n());
    let (table_json, rows, cert_rows, order) = match walk.modulus {
        Some(m) => {
            let t = walk_diagonal_table_mod(g, kmax, m)?;
            let c = certificate(t.table());
            (
                serde_json::to_value(&t)?,
                strings(&t.table().vertex_vectors()),
                strings(c.rows()),
                c.order().as_slice().to_vec(),
            )
        }
        None => {
            let t = table_of(g, Some(kmax))?;
            let c = certificate(&t);
            (
                serde_json::to_value(&t)?,
                strings(&t.vertex_vectors()),
                strings(c.rows()),
                c.order().as_slice().to_vec(),
            )
        }
    };
    let profile = if profile {
        let p: WalkProfile = extended_profile(g, kmax)?;
        Some(
            p.vertices()
                .iter()
                .map(|v| {
                    json!({
                        "diagonal": v.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "tuples": strings(&v.tuples),
                    })
                })
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };

    if format == Format::Json {
        let mut v = json!({
            "n": g.n(),
            "kmax": kmax,
            "modulus": walk.modulus.map(|m| m.to_string()),
            "table": table_json,
            "rows": rows,
            "certificate": {"rows": cert_rows, "order": order},
        });
        if let Some(p) = profile {
            v["profile"] = Value::from(p);
        }
        return to_json(&v);
    }
    let mut s = format!("n = {}, kmax = {kmax}", g.n());
    if let Some(m) = walk.modulus {
        write!(s, ", modulus = {m}")?;
    }
    s.push_str("\n\nwalk counts (vertex, k = 1..kmax)\n");
    let labels: Vec<String> = (0..g.n()).map(|i| i.to_string()).collect();
    s += &aligned(&labels, &rows);
    s.push_str("\ncertificate (sorted rows, original vertex first)\n");
    let labels: Vec<String> = order.iter().map(ToString::to_string).collect();
    s += &aligned(&labels, &cert_rows);
    if let Some(p) = profile {
        s.push_str("\nextended profile\n");
        for (i, v) in p.iter().enumerate() {
            writeln!(s, "{i}: {}", v["tuples"])?;
        }
    }
    Ok(s)
}

fn strings<T: ToString>(rows: &[Vec<T>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn aligned(labels: &[String], rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let mut width = vec![0; cols];
    for r in rows {
        for (w, x) in width.iter_mut().zip(r) {
            *w = (*w).max(x.len());
        }
    }
    let lw = labels.iter().map(String::len).max().unwrap_or(0);
    let mut s = String::new();
    for (label, r) in labels.iter().zip(rows) {
        let _ = write!(s, "{label:>lw$} |");
        for (w, x) in width.iter().zip(r) {
            let _ = write!(s, " {x:>w$}");
        }
        s.push('\n');
    }
    s
}

fn render_iso(r: &IsoResult, format: Format) -> Result<String> {
    if format == Format::Json {
        return to_json(r);
    }
    let mut s = match &r.verdict {
        Verdict::Isomorphic(p) => {
            let pairs: Vec<String> = p
                .as_slice()
                .iter()
                .enumerate()
                .map(|(i, j)| format!("{i}->{j}"))
                .collect();
            format!("isomorphic\npermutation {}\n", pairs.join(" "))
        }
        Verdict::NotIsomorphic(w) => format!("not isomorphic: {}\n", describe(w)),
        Verdict::Inconclusive => "inconclusive: node budget spent\n".to_string(),
    };
    writeln!(s, "nodes {}, classes {}", r.stats.nodes, r.stats.classes)?;
    Ok(s)
}

fn describe(w: &Witness) -> String {
    use closedwalk::invariants::Difference;
    let diff = |d: &Difference| match d {
        Difference::Shape => "table shapes differ".to_string(),
        Difference::Row { row, power } => format!("sorted row {row} differs at power {power}"),
    };
    match w {
        Witness::ModularCertificate {
            modulus,
            difference,
        } => {
            format!("certificates mod {modulus}: {}", diff(difference))
        }
        Witness::Certificate { difference } => format!("certificates: {}", diff(difference)),
        Witness::ClassMismatch => "refined vertex classes differ in size".into(),
        Witness::ComponentMismatch => "connected components cannot be paired".into(),
        Witness::ExhaustedSearch => "search exhausted without a match".into(),
    }
}

fn poly_json(p: &IntPolynomial) -> Value {
    json!({
        "display": p.to_string(),
        "degree": p.degree(),
        "coeffs": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn newton_charpoly(g: &Graph) -> Result<(WalkTable, IntPolynomial)> {
    let t = table_of(g, Some(g.n().max(1)))?;
    let p = charpoly_from_traces(&power_traces(&t), g.n())?;
    Ok((t, p))
}

fn charpoly(g: &Graph, format: Format) -> Result<String> {
    let (_, p) = newton_charpoly(g)?;
    let direct: IntPolynomial = charpoly_direct(g);
    if p != direct {
        bail!("trace-based polynomial {p} disagrees with direct expansion {direct}");
    }
    if format == Format::Text {
        return Ok(format!("{p}\n"));
    }
    let mut v = poly_json(&p);
    v["direct_agrees"] = Value::Bool(true);
    to_json(&v)
}

fn deleted(g: &Graph, format: Format) -> Result<String> {
    let (t, p) = newton_charpoly(g)?;
    let d = vertex_deleted_charpolys(&t, &p)?;
    let identity = check_derivative_identity(&d, &p);
    let back = invariants_from_deleted_charpolys(&d)?;
    let expected: Vec<_> = (1..g.n()).map(|k| t.power(k).to_vec()).collect();
    let recovered: Vec<_> = (1..g.n())
        .map(|k| {
            back.table
                .power(k)
                .iter()
                .map(|x| x.to_biguint())
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| anyhow!("recovered a negative walk count"))?;
    let round_trip = recovered == expected;

    if format == Format::Text {
        let mut s = format!("p(x) = {p}\n");
        for (i, q) in d.as_slice().iter().enumerate() {
            writeln!(s, "p_{i}(x) = {q}")?;
        }
        writeln!(s, "sum of p_i equals p': {}", yes(identity))?;
        writeln!(s, "walk counts recovered for k < n: {}", yes(round_trip))?;
        return Ok(s);
    }
    to_json(&json!({
        "charpoly": poly_json(&p),
        "deleted": d.as_slice().iter().map(poly_json).collect::<Vec<_>>(),
        "derivative_identity": identity,
        "recovered": {
            "coefficients": back.coefficients.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "table": back.table,
            "round_trip": round_trip,
        },
    }))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_reconstruction(r: &ReconstructionResult<f64>, format: Format) -> Result<String> {
    if format == Format::Json {
        return to_json(r);
    }
    let status = serde_json::to_value(r.status)?;
    let mut s = format!("status {}\n", status.as_str().unwrap_or("?"));
    if !r.eigenvalues.is_empty() {
        let ev: Vec<String> = r.eigenvalues.iter().map(|x| format!("{x:.9}")).collect();
        writeln!(s, "eigenvalues {}", ev.join(" "))?;
    }
    if let Some(g) = &r.adj {
        writeln!(s, "graph6 {}", write_graph6(g))?;
    }
    for g in &r.alternatives {
        writeln!(s, "alternative {}", write_graph6(g))?;
    }
    if let Some(note) = &r.note {
        writeln!(s, "note {note}")?;
    }
    Ok(s)
}
