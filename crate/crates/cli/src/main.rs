//! `lrchord`: batch front end for deciding linear resolutions over GF(2).
//!
//! Exit codes: 0 linear / success, 1 not linear / a claim or cross-check
//! failed, 2 inconclusive, 64 unusable input, 74 output not writable.

mod repro;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use lrchord::chordality::SearchMode;
use lrchord::harness::{crosscheck_graphs_exhaustive, crosscheck_graphs_sampled, crosscheck_ideals};
use lrchord::io::{parse_complex, parse_ideal, write_complex, write_ideal};
use lrchord::resolution::{betti_table_within, criterion_report};
use lrchord::{enumerate_face_minimal_cycles, reduced_betti_numbers, ChordConfig, Verdict};

const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(name = "lrchord", version, about = "Linear resolutions of square-free monomial ideals over GF(2)")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Chordedness search: `boundary` sweeps vertex sets, `exact` enumerates every face-minimal cycle.
    #[arg(long, global = true, default_value = "boundary")]
    mode: SearchMode,
    /// Largest cycle-space dimension whose circuits are enumerated.
    #[arg(long, global = true)]
    kernel_cap: Option<usize>,
    /// Largest number of candidate chord faces in the enumerative search.
    #[arg(long, global = true)]
    chord_cap: Option<usize>,
    /// Largest number of small cycles combined in the enumerative search.
    #[arg(long, global = true)]
    family_cap: Option<usize>,
    /// Largest vertex count for subset sweeps.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// Allow chord faces outside V(Ω).
    #[arg(long, global = true)]
    widen: bool,
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the report to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every criterion on an ideal and report whether it has a linear resolution.
    Check { ideal: PathBuf },
    /// Graded Betti numbers of an ideal.
    Betti { ideal: PathBuf },
    /// Recheck the claims made about a built-in instance.
    Repro {
        #[arg(value_parser = repro::NAMES)]
        name: String,
    },
    /// Compare chordality with linearity on many generated instances.
    Crosscheck {
        #[arg(value_enum)]
        kind: CrossKind,
        /// Vertex count for graphs (default 6), largest variable count for ideals (default 7).
        #[arg(long)]
        n_max: Option<usize>,
        /// Number of random instances; graphs are enumerated exhaustively without it.
        #[arg(long)]
        sample: Option<usize>,
        /// Ideal dimensions d; generators have degree d + 1.
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
        dims: Vec<usize>,
        /// Write each disagreement as an ideal file here.
        #[arg(long)]
        emit_dir: Option<PathBuf>,
    },
    /// Reduced homology over GF(2) of a complex.
    Homology { complex: PathBuf },
    /// Face-minimal cycles of a given dimension.
    Cycles {
        complex: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// d-closure, pure d-skeleton or d-complement of a complex.
    Closure {
        complex: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value = "closure")]
        op: ClosureOp,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum CrossKind {
    Graphs,
    Ideals,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum ClosureOp {
    Closure,
    Skeleton,
    Complement,
}

/// Everything that determines a run's output.
#[derive(Serialize, Debug)]
struct RunConfig {
    command: &'static str,
    inputs: Vec<String>,
    parameters: BTreeMap<&'static str, Value>,
    mode: SearchMode,
    kernel_cap: usize,
    chord_cap: usize,
    family_cap: usize,
    max_vertices: usize,
    widen: bool,
    seed: u64,
    format: &'static str,
    threads: Option<usize>,
}

impl RunConfig {
    fn header(&self) -> String {
        let mut s = format!("# lrchord {}", self.command);
        for i in &self.inputs {
            s.push(' ');
            s.push_str(i);
        }
        for (k, v) in &self.parameters {
            match v {
                Value::String(text) => s.push_str(&format!(" --{k} {text}")),
                Value::Array(items) => {
                    let items: Vec<String> = items.iter().map(Value::to_string).collect();
                    s.push_str(&format!(" --{k} {}", items.join(",")));
                }
                other => s.push_str(&format!(" --{k} {other}")),
            }
        }
        s.push_str(&format!(
            " (mode {}, kernel cap {}, chord cap {}, family cap {}, max vertices {}, seed {})\n",
            self.mode, self.kernel_cap, self.chord_cap, self.family_cap, self.max_vertices, self.seed
        ));
        s
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: lrchord::Error },
    #[error(transparent)]
    Core(#[from] lrchord::Error),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(lrchord::Error::EnumerationInfeasible { .. }) => EXIT_INCONCLUSIVE,
            CliError::Write { .. } => EXIT_IO,
            _ => EXIT_USAGE,
        }
    }
}

struct Outcome {
    report: Value,
    text: String,
    code: u8,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })
}

fn load<T>(path: &Path, parse: fn(&str) -> lrchord::Result<T>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Input { path: path.display().to_string(), source })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn chord_config(g: &Global) -> ChordConfig {
    let d = ChordConfig::default();
    ChordConfig {
        mode: g.mode,
        kernel_cap: g.kernel_cap.unwrap_or(d.kernel_cap),
        chord_cap: g.chord_cap.unwrap_or(d.chord_cap),
        family_cap: g.family_cap.unwrap_or(d.family_cap),
        widen: g.widen,
        max_vertices: g.max_vertices.unwrap_or(d.max_vertices),
    }
}

fn run_config(cli: &Cli, cfg: &ChordConfig) -> RunConfig {
    let mut parameters = BTreeMap::new();
    let path = |p: &Path| p.display().to_string();
    let (command, inputs): (&'static str, Vec<String>) = match &cli.command {
        Command::Check { ideal } => ("check", vec![path(ideal)]),
        Command::Betti { ideal } => ("betti", vec![path(ideal)]),
        Command::Repro { name } => ("repro", vec![name.clone()]),
        Command::Crosscheck { kind, n_max, sample, dims, emit_dir } => {
            parameters.insert("n-max", json!(n_max.unwrap_or(default_n_max(*kind))));
            if let Some(sample) = sample {
                parameters.insert("sample", json!(sample));
            }
            if matches!(kind, CrossKind::Ideals) {
                parameters.insert("dims", json!(dims));
            }
            if let Some(dir) = emit_dir {
                parameters.insert("emit-dir", json!(dir.display().to_string()));
            }
            let kind = match kind {
                CrossKind::Graphs => "graphs",
                CrossKind::Ideals => "ideals",
            };
            ("crosscheck", vec![kind.to_string()])
        }
        Command::Homology { complex } => ("homology", vec![path(complex)]),
        Command::Cycles { complex, dim } => {
            parameters.insert("dim", json!(dim));
            ("cycles", vec![path(complex)])
        }
        Command::Closure { complex, dim, op } => {
            parameters.insert("dim", json!(dim));
            parameters.insert("op", to_value(op));
            ("closure", vec![path(complex)])
        }
    };
    RunConfig {
        command,
        inputs,
        parameters,
        mode: cfg.mode,
        kernel_cap: cfg.kernel_cap,
        chord_cap: cfg.chord_cap,
        family_cap: cfg.family_cap,
        max_vertices: cfg.max_vertices,
        widen: cfg.widen,
        seed: cli.global.seed,
        format: if cli.global.json { "json" } else { "text" },
        threads: cli.global.threads,
    }
}

fn default_n_max(kind: CrossKind) -> usize {
    match kind {
        CrossKind::Graphs => 6,
        CrossKind::Ideals => 7,
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Yes => 0,
        Verdict::No => 1,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write { path: path.display().to_string(), source })
}

fn emit_cases(dir: &Path, files: &[(String, String)]) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Write { path: dir.display().to_string(), source })?;
    for (name, contents) in files {
        write_file(&dir.join(name), contents)?;
    }
    Ok(())
}

fn run(cli: &Cli, cfg: &ChordConfig) -> Result<Outcome, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Check { ideal } => {
            let ideal = load(ideal, parse_ideal)?;
            let report = criterion_report(&ideal, cfg)?;
            Ok(Outcome { report: to_value(&report), text: report.to_string(), code: verdict_code(report.outcome()) })
        }
        Command::Betti { ideal } => {
            let ideal = load(ideal, parse_ideal)?;
            let table = betti_table_within(&ideal, cfg.max_vertices)?;
            let report = json!({ "ideal": ideal, "betti": table });
            Ok(Outcome { report, text: table.to_text(), code: 0 })
        }
        Command::Repro { name } => {
            let report = repro::run(name, cfg)?;
            let code = if report.all_hold() { 0 } else { 1 };
            Ok(Outcome { report: to_value(&report), text: report.to_text(), code })
        }
        Command::Crosscheck { kind: CrossKind::Graphs, n_max, sample, emit_dir, .. } => {
            let n = n_max.unwrap_or(6);
            let summary = match sample {
                Some(count) => crosscheck_graphs_sampled(n, *count, g.seed)?,
                None => crosscheck_graphs_exhaustive(n)?,
            };
            if let Some(dir) = emit_dir {
                let files: Vec<(String, String)> = summary
                    .counterexamples
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let graph =
                            lrchord::Graph::from_edges(r.n_vertices, r.edges.iter().copied()).expect("recorded graph");
                        let ideal = lrchord::graph::graph_complement(&graph).edge_ideal();
                        (
                            format!("graph-{i}.ideal"),
                            format!("# edge ideal of the complement of {graph:?}\n{}", write_ideal(&ideal)),
                        )
                    })
                    .collect();
                emit_cases(dir, &files)?;
            }
            let mut text = format!(
                "graphs on {n} vertices ({}): {} checked, {} chordal, {} agree\n",
                if summary.exhaustive { "exhaustive".to_string() } else { format!("sampled, seed {}", g.seed) },
                summary.checked,
                summary.chordal,
                summary.agreements
            );
            for r in &summary.counterexamples {
                text.push_str(&format!("counterexample: edges {:?}, linear {}\n", r.edges, r.linear));
            }
            let code = if summary.all_agree() { 0 } else { 1 };
            Ok(Outcome { report: to_value(&summary), text, code })
        }
        Command::Crosscheck { kind: CrossKind::Ideals, n_max, sample, dims, emit_dir } => {
            let summary = crosscheck_ideals(n_max.unwrap_or(7), dims, sample.unwrap_or(500), g.seed, cfg)?;
            let files: Vec<(String, String)> =
                summary.disagreements.iter().map(|c| (format!("case-{}.ideal", c.index), c.to_file(g.seed))).collect();
            if let Some(dir) = emit_dir {
                emit_cases(dir, &files)?;
            }
            let mut text = format!(
                "ideals on at most {} variables, dims {:?}, seed {}: {} checked, {} linear, {}/{} conclusive agree, {} inconclusive, {} escalated\n",
                summary.n_max,
                summary.dims,
                summary.seed,
                summary.checked,
                summary.linear,
                summary.agreements,
                summary.conclusive,
                summary.inconclusive.len(),
                summary.escalations
            );
            for (_, contents) in &files {
                text.push_str(contents);
            }
            let code = if !summary.all_agree() {
                1
            } else if !summary.inconclusive.is_empty() {
                EXIT_INCONCLUSIVE
            } else {
                0
            };
            Ok(Outcome { report: to_value(&summary), text, code })
        }
        Command::Homology { complex } => {
            let complex = load(complex, parse_complex)?;
            let betti = reduced_betti_numbers(&complex);
            let rows: Vec<Value> =
                betti.iter().enumerate().map(|(k, b)| json!({ "index": k as isize - 1, "dim": b })).collect();
            let text: String =
                betti.iter().enumerate().map(|(k, b)| format!("H~_{} = {b}\n", k as isize - 1)).collect();
            let text = if text.is_empty() { "void complex: no homology\n".to_string() } else { text };
            Ok(Outcome { report: json!({ "complex": complex, "reduced_homology": rows }), text, code: 0 })
        }
        Command::Cycles { complex, dim } => {
            let complex = load(complex, parse_complex)?;
            let cycles = enumerate_face_minimal_cycles(&complex, *dim, cfg.kernel_cap)?;
            let mut text = format!("{} face-minimal {dim}-dimensional cycles\n", cycles.len());
            for c in &cycles {
                let faces: Vec<String> = c.faces().iter().map(|f| complex.format_face(*f)).collect();
                text.push_str(&format!(
                    "{} [{dim}-complete: {}, 1-complete: {}]\n",
                    faces.join(" "),
                    c.is_d_complete(),
                    c.is_one_complete()
                ));
            }
            Ok(Outcome { report: json!({ "dimension": dim, "cycles": cycles }), text, code: 0 })
        }
        Command::Closure { complex, dim, op } => {
            let complex = load(complex, parse_complex)?;
            let result = match op {
                ClosureOp::Closure => complex.d_closure(*dim)?,
                ClosureOp::Skeleton => complex.pure_skeleton(*dim)?,
                ClosureOp::Complement => complex.d_complement(*dim),
            };
            Ok(Outcome { report: json!({ "complex": result }), text: write_complex(&result), code: 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} worker threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let cfg = chord_config(&cli.global);
    let config = run_config(&cli, &cfg);
    let outcome = match run(&cli, &cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let rendered = if cli.global.json {
        let doc = json!({ "config": config, "report": outcome.report });
        serde_json::to_string_pretty(&doc).expect("json") + "\n"
    } else {
        config.header() + &outcome.text
    };
    match &cli.global.output {
        Some(path) => {
            if let Err(e) = write_file(path, &rendered) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_IO);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(outcome.code)
}
