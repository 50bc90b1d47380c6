//! `pushgame` command-line front end.
//!
//! Exit codes: 0 success or affirmative answer, 1 negative answer
//! (infeasible, not colorable, conflict), 2 input or hypothesis error,
//! 3 oracle size guard.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use pushgame::{
    analysis, compute_invariant, count_solutions_brute, enumerate_orbit, partition_all_labelings,
    propagate_coloring, solve_linear, solve_region_paths, BoardSpec, Certificate, ColorConflict,
    ColorabilityVerdict, Coloring, ColoringFailure, Error, GraphFile, Labeling, PushVector,
    Verdict,
};

#[derive(Parser)]
#[command(name = "pushgame", version, about = "Push games on n-simplex graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file; standard input when omitted or `-`.
    file: Option<PathBuf>,
}

#[derive(Args)]
struct ModulusArg {
    /// Label modulus; defaults to the file's `modulus` line.
    #[arg(long = "m")]
    m: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Linear,
    Paths,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph file and summarize it.
    Validate(Input),
    /// Propagate an (n+1)-coloring or report the conflict.
    Color(Input),
    /// Evaluate the push invariant of a named labeling.
    Invariant {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        labeling: String,
    },
    /// Decide whether one labeling reaches another.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "both")]
        backend: Backend,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Predicted and measured class counts.
    Count {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        modulus: ModulusArg,
    },
    /// Colorability probe for a region-connected graph.
    Probe {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        modulus: ModulusArg,
    },
    /// Split into region-connected components; with `--m`, probe them.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        modulus: ModulusArg,
    },
    /// Write a generated board in the graph file format.
    Gen {
        #[command(subcommand)]
        board: Board,
    },
    /// Brute-force ground truth for small instances.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Move-count bounds for the colorability probe.
    Bounds {
        #[arg(long, requires_all = ["n", "m"], required_unless_present = "v")]
        r: Option<usize>,
        #[arg(long, requires = "r")]
        n: Option<usize>,
        #[arg(long, requires = "r")]
        m: Option<u64>,
        #[arg(long)]
        v: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Board {
    Triangular { rows: usize },
    Strip { dim: usize, length: usize },
    Kplus { dim: usize },
    Chain { count: usize },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Orbit of a named labeling.
    Orbit {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: String,
    },
    /// Number of push vectors taking one labeling to another.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Orbit partition of every labeling.
    Partition {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        modulus: ModulusArg,
    },
}

/// Failure rendered as `<Name>: <message>`.
struct Failure {
    name: &'static str,
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::TooLarge { .. }) {
            3
        } else {
            2
        };
        Failure {
            name: e.name(),
            message: e.to_string(),
            code,
        }
    }
}

fn usage(name: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        name,
        message: message.into(),
        code: 2,
    }
}

type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe downstream is not our failure
            let _ = stdout.write_all(out.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("{}: {}", f.name, f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(input: &Input) -> Result<GraphFile, Failure> {
    let mut text = String::new();
    match input.file.as_deref() {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path)
                .map_err(|e| usage("IoError", format!("{}: {e}", path.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| usage("IoError", format!("standard input: {e}")))?;
        }
    }
    Ok(GraphFile::parse(&text)?)
}

fn modulus(file: &GraphFile, arg: &ModulusArg) -> Result<u64, Failure> {
    arg.m
        .or(file.modulus)
        .ok_or_else(|| usage("MissingModulus", "pass --m or add a `modulus` line"))
}

fn named<'a>(file: &'a GraphFile, name: &str) -> Result<&'a Labeling, Failure> {
    file.labeling(name)
        .ok_or_else(|| usage("UnknownLabeling", format!("no labeling named `{name}`")))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate(input) => validate(&load(&input)?),
        Command::Color(input) => color(&load(&input)?),
        Command::Invariant { input, labeling } => invariant(&load(&input)?, &labeling),
        Command::Solve {
            input,
            backend,
            from,
            to,
        } => solve(&load(&input)?, backend, &from, &to),
        Command::Count { input, modulus: m } => {
            let file = load(&input)?;
            count(&file, modulus(&file, &m)?)
        }
        Command::Probe { input, modulus: m } => {
            let file = load(&input)?;
            probe(&file, modulus(&file, &m)?)
        }
        Command::Decompose { input, modulus: m } => {
            let file = load(&input)?;
            let m = m.m.or(file.modulus);
            decompose(&file, m)
        }
        Command::Gen { board } => generate(board),
        Command::Oracle { op } => oracle(op),
        Command::Bounds { r, n, m, v } => bounds(r, n, m, v),
    }
}

fn validate(file: &GraphFile) -> Outcome {
    let g = &file.graph;
    let mut out = String::new();
    writeln!(out, "valid").unwrap();
    writeln!(out, "n = {}", g.dim()).unwrap();
    writeln!(out, "vertices = {}", g.vertex_count()).unwrap();
    writeln!(out, "regions = {}", g.region_count()).unwrap();
    writeln!(
        out,
        "components = {}",
        g.region_components().components.len()
    )
    .unwrap();
    if let Some(m) = file.modulus {
        writeln!(out, "modulus = {m}").unwrap();
    }
    for (name, _) in &file.labelings {
        writeln!(out, "labeling {name}").unwrap();
    }
    Ok((out, 0))
}

fn render_conflict(out: &mut String, c: &ColorConflict) {
    writeln!(out, "vertex = {}", c.vertex).unwrap();
    writeln!(out, "forced_color_a = {}", c.forced_color_a).unwrap();
    writeln!(out, "witness_a = {}", join(&c.witness_a)).unwrap();
    writeln!(out, "forced_color_b = {}", c.forced_color_b).unwrap();
    writeln!(out, "witness_b = {}", join(&c.witness_b)).unwrap();
    writeln!(out, "seed_colors = {}", join(&c.seed_colors)).unwrap();
}

fn render_coloring(out: &mut String, c: &Coloring) {
    for (vertex, color) in c.colors().iter().enumerate() {
        writeln!(out, "{vertex} {color}").unwrap();
    }
}

fn render_failure(out: &mut String, f: &ColoringFailure) {
    match f {
        ColoringFailure::Conflict(c) => {
            writeln!(out, "conflict").unwrap();
            render_conflict(out, c);
        }
        ColoringFailure::Incompatible(s) => {
            writeln!(out, "incompatible").unwrap();
            writeln!(out, "components = {}", join(&s.components)).unwrap();
        }
    }
}

fn color(file: &GraphFile) -> Outcome {
    let mut out = String::new();
    match propagate_coloring(&file.graph) {
        Ok(c) => {
            writeln!(out, "colorable").unwrap();
            render_coloring(&mut out, &c);
            Ok((out, 0))
        }
        Err(f) => {
            render_failure(&mut out, &f);
            Ok((out, 1))
        }
    }
}

fn coloring_for(file: &GraphFile) -> Result<Coloring, Failure> {
    propagate_coloring(&file.graph).map_err(|f| {
        let detail = match &f {
            ColoringFailure::Conflict(c) => c.to_string(),
            ColoringFailure::Incompatible(s) => {
                format!("components {} cannot be aligned", join(&s.components))
            }
        };
        Error::HypothesisViolation(format!("graph is not (n+1)-colorable: {detail}")).into()
    })
}

fn invariant(file: &GraphFile, name: &str) -> Outcome {
    let l = named(file, name)?;
    let c = coloring_for(file)?;
    let p = compute_invariant(&file.graph, &c, l)?;
    Ok((format!("P = {p}\n"), 0))
}

fn render_vector(x: &PushVector) -> String {
    join(x.exponents())
}

fn solve(file: &GraphFile, backend: Backend, from: &str, to: &str) -> Outcome {
    let g = &file.graph;
    let (l1, l2) = (named(file, from)?, named(file, to)?);
    let mut out = String::new();
    let linear = match backend {
        Backend::Linear | Backend::Both => Some(solve_linear(g, l1, l2)?),
        Backend::Paths => None,
    };
    let word = match backend {
        Backend::Paths | Backend::Both => {
            let c = coloring_for(file)?;
            Some(solve_region_paths(g, &c, l1, l2)?)
        }
        Backend::Linear => None,
    };
    let feasible = match (&linear, &word) {
        (Some(set), Some(w)) if set.feasible != w.is_some() => {
            return Err(Error::InternalCheckFailed(format!(
                "linear backend says {}, region paths say {}",
                set.feasible,
                w.is_some()
            ))
            .into())
        }
        (Some(set), _) => set.feasible,
        (None, Some(w)) => w.is_some(),
        (None, None) => unreachable!("a backend always runs"),
    };
    writeln!(out, "{}", if feasible { "feasible" } else { "infeasible" }).unwrap();
    if let Some(set) = &linear {
        if let Some(p) = &set.particular {
            writeln!(out, "particular = {}", render_vector(p)).unwrap();
        }
        if set.feasible {
            writeln!(out, "kernel_basis = {}", set.kernel_basis.len()).unwrap();
            for k in &set.kernel_basis {
                writeln!(out, "  {}", render_vector(k)).unwrap();
            }
        }
        let count = if set.feasible {
            set.solution_count.clone()
        } else {
            BigUint::from(0u8)
        };
        writeln!(out, "solutions = {count}").unwrap();
    }
    if let Some(Some(seq)) = &word {
        let steps: Vec<String> = seq
            .steps()
            .iter()
            .map(|(r, e)| format!("{r}^{e}"))
            .collect();
        writeln!(out, "pushes = {}", steps.join(" ")).unwrap();
    }
    Ok((out, if feasible { 0 } else { 1 }))
}

fn count(file: &GraphFile, m: u64) -> Outcome {
    let report = analysis::class_report(&file.graph, m)?;
    let mut out = String::new();
    writeln!(
        out,
        "predicted_class_count = {}",
        report.predicted_class_count
    )
    .unwrap();
    writeln!(
        out,
        "predicted_class_size = {}",
        report.predicted_class_size
    )
    .unwrap();
    match &report.predicted_solution_count {
        Some(x) => writeln!(out, "predicted_solution_count = {x}").unwrap(),
        None => writeln!(out, "predicted_solution_count = undefined").unwrap(),
    }
    writeln!(out, "measured_orbit_size = {}", report.measured_orbit_size).unwrap();
    writeln!(
        out,
        "measured_class_count = {}",
        report.measured_class_count
    )
    .unwrap();
    writeln!(
        out,
        "measured_solution_count = {}",
        report.measured_solution_count
    )
    .unwrap();
    writeln!(out, "hypotheses_hold = {}", report.hypotheses_hold).unwrap();
    Ok((out, 0))
}

fn render_certificate(out: &mut String, certificate: &Certificate) {
    match certificate {
        Certificate::Coloring(c) => {
            writeln!(out, "coloring").unwrap();
            render_coloring(out, c);
        }
        Certificate::Failure(f) => render_failure(out, f),
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Colorable => 0,
        Verdict::NotColorable => 1,
    }
}

fn render_verdict(out: &mut String, v: &ColorabilityVerdict) {
    writeln!(out, "{}", v.verdict).unwrap();
    writeln!(out, "classes = {}", v.class_count).unwrap();
    writeln!(out, "bound = {}", v.bound_moves).unwrap();
    render_certificate(out, &v.certificate);
}

fn probe(file: &GraphFile, m: u64) -> Outcome {
    let v = analysis::probe_colorability(&file.graph, m)?;
    let mut out = String::new();
    render_verdict(&mut out, &v);
    Ok((out, verdict_code(v.verdict)))
}

fn decompose(file: &GraphFile, m: Option<u64>) -> Outcome {
    let d = analysis::decompose(&file.graph);
    let mut out = String::new();
    writeln!(out, "components = {}", d.components.len()).unwrap();
    for (i, regions) in d.components.iter().enumerate() {
        writeln!(out, "component {i}: regions {}", join(regions)).unwrap();
    }
    for (a, b) in &d.association_edges {
        writeln!(out, "association {a} {b}").unwrap();
    }
    for (a, b) in &d.unassociated_overlaps {
        writeln!(out, "unassociated_overlap {a} {b}").unwrap();
    }
    writeln!(out, "acyclic = {}", d.acyclic).unwrap();
    let Some(m) = m else {
        return Ok((out, 0));
    };
    let verdict = analysis::probe_colorability_decomposed(&file.graph, m)?;
    writeln!(out, "{}", verdict.verdict).unwrap();
    writeln!(out, "bound = {}", verdict.bound_moves).unwrap();
    for (i, part) in verdict.components.iter().enumerate() {
        writeln!(
            out,
            "component {i}: {}, classes = {}",
            part.verdict, part.class_count
        )
        .unwrap();
    }
    render_certificate(&mut out, &verdict.certificate);
    Ok((out, verdict_code(verdict.verdict)))
}

fn generate(board: Board) -> Outcome {
    let spec = match board {
        Board::Triangular { rows } => BoardSpec::Triangular { rows },
        Board::Strip { dim, length } => BoardSpec::Strip { dim, length },
        Board::Kplus { dim } => BoardSpec::CompletePlus { dim },
        Board::Chain { count } => BoardSpec::SharedVertexChain { count },
    };
    let g = spec.build()?;
    let text = format!("# {spec}\n{}", GraphFile::new(g).to_text());
    Ok((text, 0))
}

fn oracle(op: OracleOp) -> Outcome {
    let mut out = String::new();
    match op {
        OracleOp::Orbit { input, from } => {
            let file = load(&input)?;
            let orbit = enumerate_orbit(&file.graph, named(&file, &from)?)?;
            writeln!(out, "orbit_size = {}", orbit.report.orbit_size).unwrap();
            writeln!(
                out,
                "reachable_set_hash = {}",
                orbit.report.reachable_set_hash
            )
            .unwrap();
        }
        OracleOp::Count { input, from, to } => {
            let file = load(&input)?;
            let n = count_solutions_brute(&file.graph, named(&file, &from)?, named(&file, &to)?)?;
            writeln!(out, "solutions = {n}").unwrap();
            return Ok((out, if n > 0 { 0 } else { 1 }));
        }
        OracleOp::Partition { input, modulus: m } => {
            let file = load(&input)?;
            let m = modulus(&file, &m)?;
            let p = partition_all_labelings(&file.graph, m)?;
            writeln!(out, "classes = {}", p.class_count()).unwrap();
            writeln!(
                out,
                "class_sizes = {}",
                join(&p.report.class_partition_sizes)
            )
            .unwrap();
            writeln!(out, "orbit_size = {}", p.report.orbit_size).unwrap();
            writeln!(out, "reachable_set_hash = {}", p.report.reachable_set_hash).unwrap();
        }
    }
    Ok((out, 0))
}

fn bounds(r: Option<usize>, n: Option<usize>, m: Option<u64>, v: Option<usize>) -> Outcome {
    let mut out = String::new();
    if let (Some(r), Some(n), Some(m)) = (r, n, m) {
        writeln!(out, "moves_bound = {}", analysis::moves_bound(r, n, m)?).unwrap();
    }
    if let Some(v) = v {
        writeln!(
            out,
            "planar_moves_bound = {}",
            analysis::planar_moves_bound(v)?
        )
        .unwrap();
    }
    Ok((out, 0))
}
