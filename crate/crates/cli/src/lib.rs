//! Command-line front end: argument parsing, graph input, rendering and
//! exit codes. `run` does everything except touching the process streams.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lyubeznik::bass::{
    cohomological_dimension, projective_dimension_summary, BassEngine, BassMethod, CdMethod,
};
use lyubeznik::census::census;
use lyubeznik::graphs::{mask_string, parse_edge_list, parse_graph6, LJoinMode};
use lyubeznik::ideals::{cover_ideal, edge_ideal};
use lyubeznik::lytable::{complement_cycle_table, cycle_table, two_cycles_table};
use lyubeznik::resolution::{minimal_resolution, oracle_table};
use lyubeznik::splitter::{forest_table, split_table, two_cycles_shape, SplitPolicy, StuckPolicy};
use lyubeznik::{with_field, Error, Field, FieldSpec, Graph, LyubeznikTable, VertexMask};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NO_RULE: i32 = 3;
pub const EXIT_BAD_ALPHA: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "lytab", version, about = "Lyubeznik tables and Bass numbers of cover ideals of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Field characteristic
    #[arg(long = "char", global = true, default_value_t = 32003)]
    pub characteristic: u32,
    #[arg(long, global = true, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// What the splitter does when no rule applies
    #[arg(long, global = true, value_enum, default_value_t = Policy::Fallback)]
    pub policy: Policy,
    /// Print the splitting trace
    #[arg(long, global = true)]
    pub trace: bool,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Edge-list file: "n m" header then one edge per line
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// graph6 string, or a file holding one
    #[arg(long)]
    pub g6: Option<String>,
    /// Builtin family, e.g. cycle:7 or ljoin:5,6,bridge2
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lyubeznik table of R/J(G)
    Table {
        #[command(flatten)]
        input: Input,
    },
    /// Bass numbers of the local cohomology modules H^r_{J(G)}(R)
    Bass {
        #[command(flatten)]
        input: Input,
        /// Face as a 0/1 string, vertex 1 first
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Cohomological dimension of J(G)
    Cd {
        #[command(flatten)]
        input: Input,
    },
    /// Projective dimension of R/I(G) next to c_max + 1
    Pd {
        #[command(flatten)]
        input: Input,
    },
    /// Graded Betti numbers of the edge ideal I(G)
    Betti {
        #[command(flatten)]
        input: Input,
    },
    /// Count connected graphs on n vertices by Lyubeznik type
    Census { n: usize },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Split,
    Auto,
    Closed,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    Fallback,
    Fail,
}

/// What a run produced.
#[derive(Debug, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Graph6(_)
        | Error::EdgeList(_)
        | Error::IdealLiteral(_)
        | Error::InvalidGraph(_)
        | Error::VertexCount(_)
        | Error::NotPrime(_)
        | Error::UnsupportedCharacteristic(_) => EXIT_PARSE,
        Error::NoRuleApplies(_) | Error::NotApplicable(_) => EXIT_NO_RULE,
        Error::EdgelessFace(_) | Error::MaskOutOfRange { .. } => EXIT_BAD_ALPHA,
        Error::TaylorBudget(..) | Error::Budget(_) => EXIT_BUDGET,
        _ => EXIT_FAILURE,
    }
}

/// Parses the builtin family grammar.
pub fn parse_family(spec: &str) -> Result<Graph, Error> {
    let bad = || Error::InvalidGraph(format!("unknown family spec {spec:?}"));
    let (name, args) = spec.split_once(':').ok_or_else(bad)?;
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match name {
        "path" => Graph::path(num(args)?),
        "cycle" => Graph::cycle(num(args)?),
        "wheel" => Graph::wheel(num(args)?),
        "star" => Graph::star(num(args)?),
        "complete" => Graph::complete(num(args)?),
        "complement-cycle" => Ok(Graph::cycle(num(args)?)?.complement()),
        "ljoin" => {
            let parts: Vec<&str> = args.split(',').collect();
            let [m, n, mode] = parts[..] else { return Err(bad()) };
            let mode = match mode.trim() {
                "share" | "share1" => LJoinMode::Share { edges: 1 },
                "share0" => LJoinMode::Share { edges: 0 },
                other => {
                    let k = other.strip_prefix("bridge").ok_or_else(bad)?;
                    LJoinMode::Bridge { length: num(k)? }
                }
            };
            Graph::l_join(num(m)?, num(n)?, mode)
        }
        _ => Err(bad()),
    }
}

fn read_graph(input: &Input) -> Result<Graph, Error> {
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::EdgeList(format!("{}: {e}", path.display())))?;
        return parse_edge_list(&text);
    }
    if let Some(s) = &input.g6 {
        let text = match std::fs::read_to_string(s) {
            Ok(t) => t.lines().find(|l| !l.trim().is_empty()).unwrap_or("").trim().to_string(),
            Err(_) => s.clone(),
        };
        return parse_graph6(&text);
    }
    match &input.family {
        Some(f) => parse_family(f),
        None => Err(Error::InvalidGraph("no graph given".into())),
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let spec = match FieldSpec::new(cli.opts.characteristic) {
        Ok(s) => s,
        Err(e) => return failure(&e),
    };
    let mut out = Output::default();
    let result = with_field!(spec, F => dispatch::<F>(&cli, &mut out));
    match result {
        Ok(()) => out,
        Err(e) => {
            let mut f = failure(&e);
            f.stderr = format!("{}{}", out.stderr, f.stderr);
            f
        }
    }
}

fn failure(e: &Error) -> Output {
    Output {
        code: exit_code(e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn dispatch<F: Field>(cli: &Cli, out: &mut Output) -> Result<(), Error> {
    let o = &cli.opts;
    match &cli.command {
        Command::Table { input } => cmd_table::<F>(&read_graph(input)?, o, out),
        Command::Bass { input, alpha } => cmd_bass::<F>(&read_graph(input)?, alpha.as_deref(), o, out),
        Command::Cd { input } => cmd_cd::<F>(&read_graph(input)?, o, out),
        Command::Pd { input } => cmd_pd::<F>(&read_graph(input)?, o, out),
        Command::Betti { input } => cmd_betti::<F>(&read_graph(input)?, o, out),
        Command::Census { n } => cmd_census::<F>(*n, o, out),
    }
}

fn policy(o: &GlobalOpts) -> SplitPolicy {
    let on_stuck = match o.policy {
        Policy::Fallback => StuckPolicy::OracleFallback,
        Policy::Fail => StuckPolicy::Fail,
    };
    match o.method {
        Method::Split => SplitPolicy { on_stuck, ..SplitPolicy::rules_only() },
        _ => SplitPolicy { on_stuck, ..SplitPolicy::default() },
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Oracle => "oracle",
        Method::Split => "split",
        Method::Auto => "auto",
        Method::Closed => "closed",
    }
}

/// Closed forms for the families they cover.
fn closed_table(g: &Graph) -> Result<LyubeznikTable, Error> {
    let n = g.n();
    if g.edge_components().isolated > 0 || !g.is_connected() {
        if g.is_acyclic() {
            return forest_table(g);
        }
        return Err(Error::NotApplicable("no closed form for this graph".into()));
    }
    if g.is_cycle() {
        return cycle_table(n);
    }
    if n >= 5 && g.complement().is_cycle() {
        return complement_cycle_table(n);
    }
    if let Some((a, b)) = two_cycles_shape(g) {
        return two_cycles_table(a, b, n);
    }
    if g.is_acyclic() {
        return forest_table(g);
    }
    if g.is_cm_cover_ideal() || (0..n).any(|v| g.degree(v) == n - 1) {
        return Ok(LyubeznikTable::trivial(n, n - 2));
    }
    Err(Error::NotApplicable("no closed form for this graph".into()))
}

fn cmd_table<F: Field>(g: &Graph, o: &GlobalOpts, out: &mut Output) -> Result<(), Error> {
    let (table, certified, trace) = match o.method {
        Method::Oracle => (oracle_table::<F>(&cover_ideal(g)?)?, true, None),
        Method::Closed => (closed_table(g)?, true, None),
        Method::Split | Method::Auto => {
            let r = split_table::<F>(g, policy(o))?;
            (r.table, r.certified, Some(r.trace))
        }
    };
    match o.format {
        Format::Json => {
            let mut v = serde_json::to_value(&table).expect("tables serialize");
            v["characteristic"] = json!(F::characteristic());
            v["method"] = json!(method_name(o.method));
            v["certified"] = json!(certified);
            if o.trace {
                if let Some(t) = &trace {
                    v["trace"] = json!(t.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>());
                }
            }
            out.stdout = format!("{}\n", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Text => {
            let mut s = format!(
                "n = {}, d = {}, char = {}, method = {}\n",
                table.n(),
                table.d(),
                F::characteristic(),
                method_name(o.method)
            );
            s.push_str(&table.render_text());
            s.push_str(&format!("certified: {}\n", if certified { "yes" } else { "no" }));
            if o.trace {
                if let Some(t) = &trace {
                    s.push_str(&t.render());
                }
            }
            out.stdout = s;
        }
    }
    Ok(())
}

fn bass_method(m: Method) -> BassMethod {
    match m {
        Method::Oracle => BassMethod::Oracle,
        Method::Split => BassMethod::Split,
        Method::Auto => BassMethod::Auto,
        Method::Closed => BassMethod::ClosedForm,
    }
}

fn cmd_bass<F: Field>(
    g: &Graph,
    alpha: Option<&str>,
    o: &GlobalOpts,
    out: &mut Output,
) -> Result<(), Error> {
    let mut engine = BassEngine::<F>::new(g, bass_method(o.method));
    let report = match alpha {
        Some(a) => {
            let mask = VertexMask::parse(a).map_err(|_| Error::MaskOutOfRange { mask: 0, n: g.n() })?;
            if mask.n() != g.n() {
                return Err(Error::MaskOutOfRange { mask: mask.bits(), n: g.n() });
            }
            let entries = engine.bass_numbers(mask.bits())?;
            lyubeznik::bass::BassReport {
                n: g.n(),
                characteristic: F::characteristic(),
                entries,
            }
        }
        None => engine.report()?,
    };
    let strands: Vec<(usize, usize)> = report
        .degrees()
        .into_iter()
        .map(|r| (r, report.strands(r).len()))
        .collect();
    match o.format {
        Format::Json => {
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| json!({"r": e.r, "p": e.p, "alpha": mask_string(e.alpha, g.n()), "mu": e.mu}))
                .collect();
            let strands: serde_json::Map<String, Value> =
                strands.iter().map(|&(r, k)| (r.to_string(), json!(k))).collect();
            let v = json!({
                "n": g.n(),
                "characteristic": F::characteristic(),
                "entries": entries,
                "strands": strands,
            });
            out.stdout = format!("{}\n", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Text => {
            let mut s = String::new();
            if let Some(a) = alpha {
                s.push_str(&format!("alpha = {a}\n"));
                for e in &report.entries {
                    s.push_str(&format!("mu_{}(p_alpha, H^{}) = {}\n", e.p, e.r, e.mu));
                }
            } else {
                s.push_str(&report.render_text(g));
                for (r, k) in strands {
                    s.push_str(&format!("H^{r}: {k} linear strand{}\n", if k == 1 { "" } else { "s" }));
                }
            }
            out.stdout = s;
        }
    }
    Ok(())
}

fn cmd_cd<F: Field>(g: &Graph, o: &GlobalOpts, out: &mut Output) -> Result<(), Error> {
    let method = if o.method == Method::Closed { CdMethod::ClosedForm } else { CdMethod::Exact };
    let cd = cohomological_dimension::<F>(g, method)?;
    out.stdout = match o.format {
        Format::Json => format!("{}\n", json!({"cd": cd, "method": method_name(o.method)})),
        Format::Text => format!("cd = {cd}\n"),
    };
    Ok(())
}

fn cmd_pd<F: Field>(g: &Graph, o: &GlobalOpts, out: &mut Output) -> Result<(), Error> {
    let s = projective_dimension_summary::<F>(g)?;
    for f in &s.flags {
        out.stderr.push_str(&format!("warning: {f}\n"));
    }
    out.stdout = match o.format {
        Format::Json => format!(
            "{}\n",
            json!({
                "pd": s.pd,
                "cd": s.cd,
                "c_max": s.c_max,
                "closed_form": s.closed_form(),
                "assumptions_hold": s.assumptions_hold,
                "flags": s.flags,
            })
        ),
        Format::Text => format!(
            "pd(R/I) = {}\ncd(J) = {}\nc_max + 1 = {}\ntrivial induced components: {}\n",
            s.pd,
            s.cd,
            s.closed_form(),
            if s.assumptions_hold { "yes" } else { "no" }
        ),
    };
    Ok(())
}

fn cmd_betti<F: Field>(g: &Graph, o: &GlobalOpts, out: &mut Output) -> Result<(), Error> {
    let i = edge_ideal(g)?;
    let res = minimal_resolution::<F>(g.n(), i.gens())?;
    out.stdout = match o.format {
        Format::Json => {
            let rows: Vec<Value> = res
                .graded_betti()
                .iter()
                .map(|(&(level, degree), &b)| json!({"i": level, "degree": degree, "beta": b}))
                .collect();
            format!("{}\n", json!({"n": g.n(), "betti": rows}))
        }
        Format::Text => format!("rows: level, columns: degree\n{}", res.betti_table_text()),
    };
    Ok(())
}

fn cmd_census<F: Field>(n: usize, o: &GlobalOpts, out: &mut Output) -> Result<(), Error> {
    let row = census::<F>(n)?;
    out.stdout = match o.format {
        Format::Json => format!("{}\n", serde_json::to_string(&row).expect("json")),
        Format::Text => format!(
            "n = {}: trivial {}, cycle {}, complement-cycle {}, other {}, total {}\n",
            row.n, row.trivial, row.cycle, row.complement_cycle, row.other, row.total
        ),
    };
    Ok(())
}
