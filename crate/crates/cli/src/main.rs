//! `kitefree` command-line tool.
//!
//! Exit codes: 0 on success, 1 when the requested result does not hold
//! (no configuration, coloring failure, verification violations), 2 on
//! usage or input errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kitefree::coloring::{
    choose_edges, choose_total, verify_coloring, ColorMode, Coloring, ColoringError, ListAssignment,
};
use kitefree::discharging::{audit, RuleSet};
use kitefree::embedding::{find_kites, EmbeddedGraph};
use kitefree::generator::{generate_kite_free, random_lists, GenSpec};
use kitefree::oracle::{brute_force_choose, OracleBudget};
use kitefree::structure::{
    find_delta6_config, find_light_edge, find_reducible, find_two_alternating_cycle, ReductionMode,
};
use kitefree::{EdgeGuarantee, TotalGuarantee};

#[derive(Parser)]
#[command(name = "kitefree", version, about = "Reducible configurations and list colorings of kite-free plane graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a reducible configuration.
    FindConfig(FindConfigArgs),
    /// List edge coloring.
    ColorEdges(ColorArgs),
    /// List total coloring.
    ColorTotal(ColorArgs),
    /// Check a coloring against a graph and its lists.
    Verify(VerifyArgs),
    /// Run a discharging argument and report the final charges.
    Audit(AuditArgs),
    /// Generate a random kite-free plane graph.
    Generate(GenerateArgs),
    /// Print basic graph statistics.
    Stats(StatsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    T4,
    L5,
    L6,
    T7,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Main,
    Oracle,
}

#[derive(Args)]
struct FindConfigArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Which structural statement to apply.
    #[arg(long, value_enum, conflicts_with = "mode")]
    theorem: Option<Theorem>,
    /// Reduction mode for the peeling dispatch (edge_d1, edge_d, total_d2, total_d1).
    #[arg(long, requires = "delta_g")]
    mode: Option<ReductionMode>,
    /// Maximum degree of the original graph, for `--mode`.
    #[arg(long)]
    delta_g: Option<usize>,
}

#[derive(Args)]
struct ListSource {
    /// List file with `edgelist` and `vertexlist` lines.
    #[arg(long, conflicts_with_all = ["uniform", "random"])]
    lists: Option<PathBuf>,
    /// Give every element the list 0..k.
    #[arg(long, conflicts_with = "random")]
    uniform: Option<u32>,
    /// Give every element a random k-subset of the palette.
    #[arg(long, requires = "palette")]
    random: Option<usize>,
    #[arg(long)]
    palette: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    lists: ListSource,
    /// delta_plus_1 or delta for edges; delta_plus_2 or delta_plus_1 for total.
    #[arg(long)]
    guarantee: Option<String>,
    #[arg(long, value_enum, default_value_t = Engine::Main)]
    engine: Engine,
    /// If the main engine fails, retry with the exact oracle and report it.
    #[arg(long)]
    rescue_oracle: bool,
    /// Write the coloring here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[command(flatten)]
    lists: ListSource,
    /// Defaults to the mode of the coloring file.
    #[arg(long)]
    mode: Option<ColorMode>,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long)]
    graph: PathBuf,
    /// t4, l5, l6 or t7.
    #[arg(long)]
    rules: RuleSet,
    /// Print only the one-line summary.
    #[arg(long)]
    brief: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    min_delta: usize,
    #[arg(long)]
    triangle_free: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    dot: Option<PathBuf>,
}

/// A failed command: exit code and one-line diagnostic.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn domain(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::FindConfig(a) => find_config(a),
        Command::ColorEdges(a) => color(a, ColorMode::Edge),
        Command::ColorTotal(a) => color(a, ColorMode::Total),
        Command::Verify(a) => verify(a),
        Command::Audit(a) => run_audit(a),
        Command::Generate(a) => generate(a),
        Command::Stats(a) => stats(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<EmbeddedGraph, Failure> {
    EmbeddedGraph::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_lists(src: &ListSource, g: &EmbeddedGraph, mode: ColorMode) -> Result<ListAssignment, Failure> {
    if let Some(path) = &src.lists {
        return ListAssignment::parse(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())));
    }
    if let Some(k) = src.uniform {
        return Ok(ListAssignment::uniform(g, k, mode));
    }
    if let Some(k) = src.random {
        let palette = src.palette.unwrap_or(k);
        return random_lists(g, k, palette, mode, src.seed).map_err(|e| usage(e.to_string()));
    }
    Err(usage("one of --lists, --uniform or --random is required"))
}

fn find_config(a: FindConfigArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let delta = g.max_degree();
    let found = match (a.theorem, a.mode) {
        (Some(Theorem::T4), _) => {
            if delta < 7 {
                return Err(domain(format!("t4 needs maximum degree at least 7, got {delta}")));
            }
            find_light_edge(&g, delta + 2, 4).ok_or(RuleSet::T4)
        }
        (Some(Theorem::L5), _) => {
            if delta != 6 {
                return Err(domain(format!("l5 needs maximum degree 6, got {delta}")));
            }
            return find_delta6_config(&g).map(|c| format!("{c}\n")).map_err(|e| domain(e.to_string()));
        }
        (Some(Theorem::L6), _) => match delta {
            0..=5 => find_light_edge(&g, 8, 5).ok_or(RuleSet::L6D5),
            6 => find_light_edge(&g, 9, 6).ok_or(RuleSet::L5),
            _ => return Err(domain(format!("l6 needs maximum degree at most 6, got {delta}"))),
        },
        (Some(Theorem::T7), _) => {
            if delta < 9 {
                return Err(domain(format!("t7 needs maximum degree at least 9, got {delta}")));
            }
            find_light_edge(&g, delta + 1, 4).or_else(|| find_two_alternating_cycle(&g)).ok_or(RuleSet::T7)
        }
        (None, Some(mode)) => {
            let delta_g = a.delta_g.expect("clap enforces --delta-g");
            return find_reducible(&g, mode, delta_g).map(|c| format!("{c}\n")).map_err(|e| domain(e.to_string()));
        }
        (None, None) => return Err(usage("one of --theorem or --mode is required")),
    };
    match found {
        Ok(c) => Ok(format!("{c}\n")),
        Err(rules) => Err(domain(format!("no configuration found; {}", audit(&g, rules).summary()))),
    }
}

fn color(a: ColorArgs, mode: ColorMode) -> Outcome {
    let g = load_graph(&a.graph)?;
    let lists = load_lists(&a.lists, &g, mode)?;
    let mut note = String::new();
    let c = match a.engine {
        Engine::Oracle => oracle(&g, &lists, mode)?,
        Engine::Main => match main_engine(&g, &lists, mode, a.guarantee.as_deref())? {
            Ok(c) => c,
            Err(e @ ColoringError::Precondition(_)) => return Err(domain(e.to_string())),
            Err(e) if a.rescue_oracle => {
                let c = oracle(&g, &lists, mode)?;
                let _ = writeln!(note, "# main engine failed ({e}); coloring from the oracle");
                c
            }
            Err(e) => return Err(domain(e.to_string())),
        },
    };
    let violations = verify_coloring(&g, &lists, &c);
    if !violations.is_empty() {
        return Err(domain(format!("produced coloring is invalid: {}", violations[0])));
    }
    let text = note + &c.to_text();
    match &a.out {
        Some(path) => write(path, &text).map(|()| String::new()),
        None => Ok(text),
    }
}

fn main_engine(
    g: &EmbeddedGraph,
    lists: &ListAssignment,
    mode: ColorMode,
    guarantee: Option<&str>,
) -> Result<Result<Coloring, ColoringError>, Failure> {
    Ok(match mode {
        ColorMode::Edge => {
            let guarantee: EdgeGuarantee = guarantee.unwrap_or("delta_plus_1").parse().map_err(usage)?;
            choose_edges(g, lists, guarantee)
        }
        ColorMode::Total => {
            let guarantee: TotalGuarantee = guarantee.unwrap_or("delta_plus_2").parse().map_err(usage)?;
            choose_total(g, lists, guarantee)
        }
    })
}

fn oracle(g: &EmbeddedGraph, lists: &ListAssignment, mode: ColorMode) -> Result<Coloring, Failure> {
    match brute_force_choose(g, lists, mode, OracleBudget::default()) {
        Ok(Some(c)) => Ok(c),
        Ok(None) => Err(domain("no coloring exists from these lists")),
        Err(e) => Err(domain(format!("oracle: {e}"))),
    }
}

fn verify(a: VerifyArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let mut c = Coloring::parse(&read(&a.coloring)?).map_err(|e| usage(format!("{}: {e}", a.coloring.display())))?;
    if let Some(mode) = a.mode {
        c.mode = mode;
    }
    let lists = load_lists(&a.lists, &g, c.mode)?;
    let violations = verify_coloring(&g, &lists, &c);
    if violations.is_empty() {
        return Ok("ok\n".into());
    }
    for v in &violations {
        println!("{v}");
    }
    Err(domain(format!("{} violation(s)", violations.len())))
}

fn run_audit(a: AuditArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let report = audit(&g, a.rules);
    Ok(if a.brief { format!("{}\n", report.summary()) } else { report.to_string() })
}

fn generate(a: GenerateArgs) -> Outcome {
    let spec = GenSpec { n: a.n, seed: a.seed, target_min_delta: a.min_delta, triangle_free: a.triangle_free };
    let g = generate_kite_free(spec).map_err(|e| usage(e.to_string()))?;
    if let Some(path) = &a.dot {
        write(path, &to_dot(&g))?;
    }
    match &a.out {
        Some(path) => write(path, &g.to_text()).map(|()| String::new()),
        None => Ok(g.to_text()),
    }
}

fn stats(a: StatsArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    if let Some(path) = &a.dot {
        write(path, &to_dot(&g))?;
    }
    let chi = g.euler_characteristic();
    let mut out = String::new();
    let _ = writeln!(out, "vertices = {}", g.vertex_count());
    let _ = writeln!(out, "edges = {}", g.edge_count());
    let _ = writeln!(out, "faces = {}", g.face_count());
    let _ = writeln!(out, "max_degree = {}", g.max_degree());
    let _ = writeln!(out, "min_degree = {}", g.min_degree());
    let _ = writeln!(out, "kites = {}", find_kites(&g).len());
    let _ = writeln!(out, "components = {}", g.component_count());
    let _ = writeln!(out, "euler_characteristic = {}", chi.value);
    Ok(out)
}

fn to_dot(g: &EmbeddedGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
    }
    out.push_str("}\n");
    out
}
