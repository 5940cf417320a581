//! Command-line front end.
//!
//! Graph arguments are resolved as:
//!
//! - `catalog:NAME`: a catalog entry (`catalog:E8`, `catalog:SE(-10)`),
//! - `inline:SPEC`: the terse `w:g,...;i-j,...` form, e.g.
//!   `inline:-3,-3,-3;0-1,1-2,2-0`,
//! - anything else: a path to a JSON graph document.
//!
//! Exit codes: 0 success, 1 input error, 2 intersection form not negative
//! definite, 3 empty result where one was required.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog;
use crate::classify::{classify, ClassificationReport};
use crate::cycles::{
    anticanonical_cycle, arithmetic_genus, fundamental_cycle, Cycle, RationalCycle,
};
use crate::error::Error;
use crate::graph::{
    parse_graph, parse_inline, DualGraph, GraphDocument, IntersectionMatrix, MinimalityWarning,
};
use crate::report::envelope;
use crate::smoothability::{link_first_betti, steenbrink_with_cap, SteenbrinkReport};
use crate::sweep::headline_report;

#[derive(Debug, Parser)]
#[command(
    name = "surfsing",
    version,
    about = "Resolution-graph invariants of surface singularities"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Intersection form, fundamental and anticanonical cycles, link b1.
    Analyze { input: String },
    /// Rational / minimally elliptic / simple elliptic / Gorenstein flags.
    Classify {
        input: String,
        /// Largest number of subcycles examined for the genus criterion.
        #[arg(long, default_value_t = crate::cycles::DEFAULT_ENUMERATION_CAP)]
        enum_cap: u64,
    },
    /// Steenbrink's smoothability obstruction.
    Steenbrink {
        input: String,
        /// Geometric genus, or `auto` to derive it for rational and minimally elliptic graphs.
        #[arg(long, default_value = "auto")]
        pg: PgArg,
        #[arg(long, default_value_t = crate::cycles::DEFAULT_ENUMERATION_CAP)]
        enum_cap: u64,
    },
    /// Plan non-normal smoothings whose Milnor fiber is the disc bundle of Euler number TARGET.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        target: i64,
    },
    /// Example graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgArg {
    Auto,
    Value(u64),
}

impl std::str::FromStr for PgArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(PgArg::Auto);
        }
        s.parse()
            .map(PgArg::Value)
            .map_err(|_| format!("expected a non-negative integer or `auto`, got {s:?}"))
    }
}

/// An error together with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotNegativeDefinite => 2,
            Error::NoPlan(_) => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub fn resolve_graph(input: &str) -> Result<DualGraph, Failure> {
    if let Some(name) = input.strip_prefix("catalog:") {
        return Ok(catalog::lookup(name)?.graph);
    }
    if let Some(spec) = input.strip_prefix("inline:") {
        return Ok(parse_inline(spec)?);
    }
    let text = std::fs::read_to_string(input).map_err(|e| Failure {
        code: 1,
        message: format!("cannot read {input}: {e}"),
    })?;
    Ok(parse_graph(&text)?)
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub graph: GraphDocument,
    pub intersection_matrix: IntersectionMatrix,
    pub negative_definite: bool,
    pub z_num: Cycle,
    pub z_k: RationalCycle,
    pub pa_znum: i64,
    pub graph_first_betti: u64,
    pub b1_link: u64,
    pub minimality_warnings: Vec<MinimalityWarning>,
}

pub fn analyze(g: &DualGraph) -> Result<AnalyzeReport, Error> {
    let z_num = fundamental_cycle(g)?;
    Ok(AnalyzeReport {
        graph: g.to_document(),
        intersection_matrix: g.intersection_matrix(),
        negative_definite: true,
        pa_znum: arithmetic_genus(&z_num, g)?,
        z_k: anticanonical_cycle(g)?,
        z_num,
        graph_first_betti: g.first_betti(),
        b1_link: link_first_betti(g),
        minimality_warnings: g.minimality_warnings(),
    })
}

fn opt(v: Option<bool>) -> String {
    v.map_or("undecided".into(), |b| b.to_string())
}

fn text_analyze(r: &AnalyzeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertices: {}", r.graph.vertices.len());
    let _ = writeln!(s, "intersection matrix:");
    for row in r.intersection_matrix.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
        let _ = writeln!(s, "  [{}]", cells.join(""));
    }
    let _ = writeln!(s, "negative definite: {}", r.negative_definite);
    let _ = writeln!(s, "Z_num = {}", r.z_num);
    let _ = writeln!(s, "Z_K = {}", r.z_k);
    let _ = writeln!(s, "p_a(Z_num) = {}", r.pa_znum);
    let _ = writeln!(s, "b1(graph) = {}", r.graph_first_betti);
    let _ = writeln!(s, "b1(link) = {}", r.b1_link);
    for w in &r.minimality_warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

fn text_classify(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Z_num = {}", r.z_num);
    let _ = writeln!(s, "Z_K = {}", r.z_k);
    let _ = writeln!(s, "p_a(Z_num) = {}", r.pa_znum);
    let _ = writeln!(s, "rational: {}", r.is_rational);
    let _ = writeln!(
        s,
        "minimally elliptic: {} (genus criterion: {}, Z_num = Z_K: {})",
        opt(r.is_minimally_elliptic),
        opt(r.minel_by_condition1),
        r.minel_by_condition2
    );
    let _ = writeln!(s, "simple elliptic: {}", r.is_simple_elliptic);
    let _ = writeln!(s, "numerically Gorenstein: {}", r.numerically_gorenstein);
    let _ = writeln!(s, "conditional: {}", r.conditional);
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn text_steenbrink(r: &SteenbrinkReport) -> String {
    let mut s = String::new();
    let source = serde_json::to_value(r.p_g_source).expect("serializes");
    let _ = writeln!(
        s,
        "p_g = {} ({})",
        r.p_g,
        source.as_str().unwrap_or_default()
    );
    let _ = writeln!(s, "b1(link) = {}", r.b1_link);
    let _ = writeln!(s, "Z_K^2 = {}", r.zk_squared);
    let _ = writeln!(s, "|I| = {}", r.vertex_count);
    let _ = writeln!(s, "predicted mu_minus = {}", r.mu_minus_predicted);
    let verdict = match r.obstructed {
        Some(true) => "obstructed: not smoothable",
        Some(false) => "not obstructed",
        None => "not-applicable",
    };
    let _ = writeln!(s, "{verdict}");
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn emit<T: Serialize>(
    format: Format,
    command: &str,
    payload: &T,
    text: impl FnOnce(&T) -> String,
) -> String {
    match format {
        Format::Json => {
            let mut out =
                serde_json::to_string_pretty(&envelope(command, payload)).expect("serializes");
            out.push('\n');
            out
        }
        Format::Text => text(payload),
    }
}

/// Runs a parsed command and returns what it prints on success.
pub fn execute(cli: &Cli) -> Result<String, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Analyze { input } => {
            let g = resolve_graph(input)?;
            let r = analyze(&g)?;
            Ok(emit(format, "analyze", &r, text_analyze))
        }
        Command::Classify { input, enum_cap } => {
            let g = resolve_graph(input)?;
            let r = classify(&g, *enum_cap)?;
            Ok(emit(format, "classify", &r, text_classify))
        }
        Command::Steenbrink {
            input,
            pg,
            enum_cap,
        } => {
            let g = resolve_graph(input)?;
            let pg = match pg {
                PgArg::Auto => None,
                PgArg::Value(v) => Some(*v),
            };
            let r = steenbrink_with_cap(&g, pg, *enum_cap)?;
            Ok(emit(format, "steenbrink", &r, text_steenbrink))
        }
        Command::Sweep { target } => {
            let r = headline_report(*target)?;
            Ok(emit(format, "sweep", &r, |r| format!("{r}\n")))
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => {
            #[derive(Serialize)]
            struct Listed {
                name: String,
                graph: String,
                notes: String,
            }
            let entries: Vec<Listed> = catalog::entries()
                .into_iter()
                .map(|e| Listed {
                    name: e.name,
                    graph: e.graph.to_string(),
                    notes: e.notes,
                })
                .collect();
            Ok(emit(
                format,
                "catalog",
                &serde_json::json!({ "entries": entries }),
                |_| {
                    let mut s = String::new();
                    for e in &entries {
                        let _ = writeln!(s, "{:<8} {:<40} {}", e.name, e.graph, e.notes);
                    }
                    let _ = writeln!(s, "SE(d) is accepted for every negative integer d");
                    s
                },
            ))
        }
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
