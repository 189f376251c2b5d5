use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plabel_core::construct::{
    label_outerplanar_list, label_path_greedy, label_star_list, label_star_span, label_tree_dfs, tree_list_size,
    ConstructError, OuterplanarAudit,
};
use plabel_core::format::{emit_graph, parse_graph, GraphFormat};
use plabel_core::harness::{
    hunt_counterexamples, render_dot, run_oracle_suite, run_property_suite, AssignmentPolicy, Conjecture,
    ExperimentSpec, Family, HuntSpec, OracleSpec, Report, DEFAULT_BUDGET,
};
use plabel_core::json::ListsDoc;
use plabel_core::par::ExecMode;
use plabel_core::solver::{
    certify_choosable, find_bad_assignment, lambda, recheck_certificate, solve_list, solve_span, Certificate,
    CertificateKind, SearchMode,
};
use plabel_core::{incidence_graph, Color, Graph, ListAssignment, TotalLabelling};
use serde::Serialize;
use serde_json::json;

/// Exit statuses.
const PROPERTY_FAILURE: u8 = 1;
const USAGE: u8 = 2;
const THEOREM_VIOLATION: u8 = 3;

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: USAGE,
            message: message.to_string(),
        }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        let code = if e.is_theorem_violation() { THEOREM_VIOLATION } else { USAGE };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

/// Labelling output; keys stay in element order.
#[derive(Serialize)]
struct Labelled<'a> {
    p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<Color>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Color>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<Color>,
    #[serde(skip_serializing_if = "Option::is_none")]
    span: Option<Color>,
    #[serde(skip_serializing_if = "Option::is_none")]
    feasible: Option<bool>,
    labels: Option<&'a TotalLabelling>,
    #[serde(skip_serializing_if = "Option::is_none")]
    audit: Option<&'a OuterplanarAudit>,
}

impl<'a> Labelled<'a> {
    fn new(p: u32, labels: Option<&'a TotalLabelling>) -> Self {
        Labelled {
            p,
            k: None,
            lambda: None,
            chi: None,
            span: None,
            feasible: None,
            labels,
            audit: None,
        }
    }
}

#[derive(Parser)]
#[command(name = "plabel", version, about = "(p,1)-total labellings: exact solvers, list labellers and experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Run instance loops on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    EdgeList,
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::EdgeList => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Args)]
struct GraphInput {
    /// Graph file.
    #[arg(long)]
    graph: PathBuf,
    /// Defaults to graph6 for `.g6` files and edge-list otherwise.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

impl GraphInput {
    fn format(&self) -> GraphFormat {
        match self.format {
            Some(f) => f.into(),
            None if self.graph.extension().is_some_and(|e| e == "g6") => GraphFormat::Graph6,
            None => GraphFormat::EdgeList,
        }
    }

    fn load(&self) -> Result<Graph, Failure> {
        let text = read(&self.graph)?;
        parse_graph(&text, self.format()).map_err(|e| Failure::usage(format!("{}: {e}", self.graph.display())))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Tree,
    Star,
    StarSpan,
    Outerplanar,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct ReportOutput {
    /// `csv` writes the per-instance rows only.
    #[arg(long, value_enum, default_value = "json")]
    report: ReportFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum span, or feasibility of a given span with --k.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        p: u32,
        /// Decide whether colors {0..=k} suffice.
        #[arg(long)]
        k: Option<Color>,
        /// Also write the labelling as Graphviz.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Labelling from per-element lists.
    ListSolve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        p: Option<u32>,
        /// JSON lists file: {"p": 2, "lists": {"v:0": [0, 1], "e:0-1": [2, 3]}}.
        #[arg(long)]
        lists: PathBuf,
    },
    /// Certify choosability exhaustively, search for a bad assignment, or
    /// re-check a certificate.
    Choosability {
        #[command(flatten)]
        input: GraphInputOpt,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        /// Colors are drawn from {0..=U}; defaults to 2k.
        #[arg(long)]
        universe: Option<Color>,
        /// Search for a witness with this many assignments instead of
        /// certifying exhaustively.
        #[arg(long)]
        budget: Option<u64>,
        /// Random search order with this seed (implies a search).
        #[arg(long)]
        seed: Option<u64>,
        /// Re-derive the verdict of a certificate file.
        #[arg(long, conflicts_with_all = ["p", "k", "budget", "seed"])]
        recheck: Option<PathBuf>,
    },
    /// Run a constructive labeller.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        input: GraphInputOpt,
        #[arg(long)]
        p: u32,
        /// Lists file; without it every element gets {0..k-1}.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// List size for generated lists; defaults to the labeller's requirement.
        #[arg(long)]
        k: Option<usize>,
        /// Number of leaves, for star-span without --graph.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print the incidence graph (every edge subdivided once).
    Incidence {
        #[command(flatten)]
        input: GraphInput,
        /// Output format; defaults to the input format.
        #[arg(long, value_enum)]
        to: Option<FormatArg>,
    },
    /// Check exact spans against the closed forms for paths and stars.
    Oracle {
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        p: Vec<u32>,
        /// Largest path (vertex count) in the path tables.
        #[arg(long, default_value_t = 8)]
        max_path: usize,
        /// Largest star (leaf count).
        #[arg(long, default_value_t = 6)]
        max_star: usize,
        #[command(flatten)]
        output: ReportOutput,
    },
    /// Run a labeller on many seeded random list assignments.
    Props {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Inclusive size range, `a..b` or a single size.
        #[arg(long, value_parser = parse_range)]
        sizes: RangeInclusive<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u32>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "random-k")]
        policy: AssignmentPolicy,
        #[arg(long)]
        universe: Option<Color>,
        #[command(flatten)]
        output: ReportOutput,
    },
    /// Search for counterexamples to a conjectured choosability bound.
    Hunt {
        #[arg(long, default_value = "general")]
        conjecture: Conjecture,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_range)]
        sizes: RangeInclusive<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u32>,
        /// Graphs per (size, p).
        #[arg(long, default_value_t = 1)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        universe: Option<Color>,
        /// Added to the conjectured list size.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k_offset: i64,
        /// Walk assignments in lexicographic order instead of sampling.
        #[arg(long)]
        lexicographic: bool,
        #[command(flatten)]
        output: ReportOutput,
    },
}

/// `--graph` made optional for subcommands that can do without it.
#[derive(Args)]
struct GraphInputOpt {
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

impl GraphInputOpt {
    fn load(&self) -> Result<Option<Graph>, Failure> {
        match &self.graph {
            None => Ok(None),
            Some(path) => GraphInput {
                graph: path.clone(),
                format: self.format,
            }
            .load()
            .map(Some),
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {a}..{b}"));
            }
            Ok(a..=b)
        }
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_lists(path: &Path, p: Option<u32>) -> Result<(ListAssignment, Option<u32>), Failure> {
    let doc: ListsDoc =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    match (p, doc.p) {
        (Some(a), Some(b)) if a != b => Err(Failure::usage(format!("--p {a} disagrees with p = {b} in the lists file"))),
        (a, b) => Ok((doc.lists, a.or(b))),
    }
}

fn family(f: FamilyArg) -> Result<Family, Failure> {
    match f {
        FamilyArg::Path => Ok(Family::Path),
        FamilyArg::Tree => Ok(Family::Tree),
        FamilyArg::Star => Ok(Family::Star),
        FamilyArg::Outerplanar => Ok(Family::MaximalOuterplanar),
        FamilyArg::StarSpan => Err(Failure::usage("star-span is a construction, not a random family")),
    }
}

struct Output {
    path: Option<PathBuf>,
}

impl Output {
    fn write(&self, text: &str) -> Result<(), Failure> {
        match &self.path {
            Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn json(&self, value: &impl serde::Serialize) -> Result<(), Failure> {
        let mut text = serde_json::to_string_pretty(value).expect("serializable");
        text.push('\n');
        self.write(&text)
    }

    fn report(&self, report: &Report, format: &ReportOutput) -> Outcome {
        match format.report {
            ReportFormat::Json => self.json(report)?,
            ReportFormat::Csv => self.write(&report.rows_csv())?,
        }
        for v in report.verdicts.iter().filter(|v| !v.pass) {
            eprintln!("FAIL {}: expected {}, observed {}", v.check, v.expected, v.observed);
        }
        Ok(report.exit_code() as u8)
    }
}

fn write_dot(path: &Option<PathBuf>, g: &Graph, c: &TotalLabelling) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, render_dot(g, c)).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> Outcome {
    let exec = if cli.sequential { ExecMode::Sequential } else { ExecMode::Parallel };
    let out = Output { path: cli.out };
    match cli.command {
        Command::Solve { input, p, k, dot } => {
            let g = input.load()?;
            match k {
                None => {
                    let r = lambda(&g, p);
                    write_dot(&dot, &g, &r.labelling)?;
                    out.json(&Labelled {
                        lambda: Some(r.lambda),
                        chi: Some(r.chi()),
                        ..Labelled::new(p, Some(&r.labelling))
                    })?;
                    Ok(0)
                }
                Some(k) => {
                    let r = solve_span(&g, p, k);
                    if let Some(c) = r.labelling() {
                        write_dot(&dot, &g, c)?;
                    }
                    out.json(&Labelled {
                        k: Some(k),
                        feasible: Some(r.is_labelled()),
                        ..Labelled::new(p, r.labelling())
                    })?;
                    Ok(if r.is_labelled() { 0 } else { PROPERTY_FAILURE })
                }
            }
        }
        Command::ListSolve { input, p, lists } => {
            let g = input.load()?;
            let (lists, p) = load_lists(&lists, p)?;
            let p = p.ok_or_else(|| Failure::usage("p is required, via --p or the lists file"))?;
            let r = solve_list(&g, p, &lists).map_err(Failure::usage)?;
            out.json(&Labelled {
                feasible: Some(r.is_labelled()),
                ..Labelled::new(p, r.labelling())
            })?;
            Ok(if r.is_labelled() { 0 } else { PROPERTY_FAILURE })
        }
        Command::Choosability {
            input,
            p,
            k,
            universe,
            budget,
            seed,
            recheck,
        } => {
            if let Some(path) = recheck {
                let cert: Certificate = serde_json::from_str(&read(&path)?)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                let ok = recheck_certificate(&cert).map_err(Failure::usage)?;
                out.json(&json!({ "kind": cert.kind, "rechecked": ok }))?;
                return Ok(if ok { 0 } else { PROPERTY_FAILURE });
            }
            let g = input
                .load()?
                .ok_or_else(|| Failure::usage("--graph is required"))?;
            let p = p.ok_or_else(|| Failure::usage("--p is required"))?;
            let k = k.ok_or_else(|| Failure::usage("--k is required"))?;
            let universe = universe.unwrap_or(2 * k as Color);
            let cert = if budget.is_some() || seed.is_some() {
                let mode = seed.map_or(SearchMode::Lexicographic, |seed| SearchMode::Random { seed });
                find_bad_assignment(&g, p, k, universe, budget.unwrap_or(DEFAULT_BUDGET), mode)
            } else {
                certify_choosable(&g, p, k, universe, exec)
            }
            .map_err(Failure::usage)?;
            out.json(&cert)?;
            Ok(if cert.kind == CertificateKind::LowerWitness { PROPERTY_FAILURE } else { 0 })
        }
        Command::Construct {
            family,
            input,
            p,
            lists,
            k,
            size,
            dot,
        } => {
            let g = input.load()?;
            if let FamilyArg::StarSpan = family {
                let n = match (&g, size) {
                    (_, Some(n)) => n,
                    (Some(g), None) => g.max_degree(),
                    (None, None) => return Err(Failure::usage("star-span needs --graph or --size")),
                };
                let c = label_star_span(n, p)?;
                let star = plabel_core::generators::make_star(n).map_err(Failure::usage)?;
                write_dot(&dot, &star, &c)?;
                out.json(&Labelled {
                    span: Some(c.span()),
                    ..Labelled::new(p, Some(&c))
                })?;
                return Ok(0);
            }
            let g = g.ok_or_else(|| Failure::usage("--graph is required"))?;
            let lists = match lists {
                Some(path) => load_lists(&path, Some(p))?.0,
                None => {
                    let p = p as usize;
                    let need = match family {
                        FamilyArg::Path => 2 * p + 1,
                        FamilyArg::Tree => tree_list_size(g.max_degree(), p as u32),
                        _ => (g.max_degree() + 2 * p).saturating_sub(1),
                    };
                    let k = k.unwrap_or(need);
                    ListAssignment::uniform(&g, 0..k as Color)
                }
            };
            let (c, audit) = match family {
                FamilyArg::Path => (label_path_greedy(&g, p, &lists)?, None),
                FamilyArg::Tree => (label_tree_dfs(&g, p, &lists)?, None),
                FamilyArg::Star => (label_star_list(&g, p, &lists)?, None),
                FamilyArg::Outerplanar => match label_outerplanar_list(&g, p, &lists) {
                    Ok((c, audit)) => (c, Some(audit)),
                    Err(ConstructError::DegreeTooSmall { delta, .. }) => {
                        eprintln!("plabel: maximum degree {delta} is below p + 3, using the exact list solver");
                        let r = solve_list(&g, p, &lists).map_err(Failure::usage)?;
                        out.json(&Labelled {
                            feasible: Some(r.is_labelled()),
                            ..Labelled::new(p, r.labelling())
                        })?;
                        return Ok(if r.is_labelled() { 0 } else { PROPERTY_FAILURE });
                    }
                    Err(e) => return Err(e.into()),
                },
                FamilyArg::StarSpan => unreachable!("handled above"),
            };
            write_dot(&dot, &g, &c)?;
            out.json(&Labelled {
                audit: audit.as_ref(),
                ..Labelled::new(p, Some(&c))
            })?;
            Ok(if audit.is_some_and(|a| a.full_resolves > 0) { THEOREM_VIOLATION } else { 0 })
        }
        Command::Incidence { input, to } => {
            let g = input.load()?;
            let format = to.map_or_else(|| input.format(), GraphFormat::from);
            out.write(&emit_graph(&incidence_graph(&g).derived, format))?;
            Ok(0)
        }
        Command::Oracle {
            p,
            max_path,
            max_star,
            output,
        } => {
            let spec = OracleSpec {
                p_values: p,
                paths: 2..=max_path,
                stars: 1..=max_star,
                lp1_paths: 2..=max_path,
                exec,
            };
            out.report(&run_oracle_suite(&spec), &output)
        }
        Command::Props {
            family: f,
            sizes,
            p,
            trials,
            seed,
            policy,
            universe,
            output,
        } => {
            let mut spec = ExperimentSpec::new(family(f)?, sizes, p, trials, seed);
            spec.policy = policy;
            spec.universe = universe;
            spec.exec = exec;
            spec.validate().map_err(Failure::usage)?;
            out.report(&run_property_suite(&spec), &output)
        }
        Command::Hunt {
            conjecture,
            family: f,
            sizes,
            p,
            samples,
            seed,
            budget,
            universe,
            k_offset,
            lexicographic,
            output,
        } => {
            if budget == 0 {
                return Err(Failure::usage("--budget must be positive"));
            }
            let mut spec = HuntSpec::new(conjecture, family(f)?, sizes, p);
            spec.samples = samples;
            spec.seed = seed;
            spec.budget = budget;
            spec.universe = universe;
            spec.k_offset = k_offset;
            spec.lexicographic = lexicographic;
            spec.exec = exec;
            out.report(&hunt_counterexamples(&spec), &output)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("plabel: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
