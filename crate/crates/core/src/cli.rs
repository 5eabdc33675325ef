//! Command-line driver: reads a `.gr` graph, prints depth and parent list.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::graph::parse_gr;
use crate::oracle::validate_decomposition;
use crate::solver::{solve_treedepth, EliminationForest, SolveOptions, SolveStats};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_INVALID_OUTPUT: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Presolve {
    /// No heuristic presolve.
    None,
}

#[derive(Debug, Parser)]
#[command(
    name = "treedepth",
    version,
    about = "Exact treedepth decompositions of PACE .gr graphs"
)]
struct Args {
    /// Disable the domination filter.
    #[arg(long)]
    no_domination: bool,
    /// Replace trie queries with a linear scan.
    #[arg(long)]
    no_trie: bool,
    /// First depth to try.
    #[arg(long, value_name = "K", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    start_depth: u64,
    /// Check the decomposition before exiting; exit 2 if it is invalid.
    #[arg(long)]
    validate: bool,
    /// Print per-level counts to standard error.
    #[arg(long)]
    stats: bool,
    #[arg(long, value_enum, default_value_t = Presolve::None)]
    presolve: Presolve,
    /// Input graph; standard input when omitted.
    input: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub domination_enabled: bool,
    pub use_trie: bool,
    pub start_depth: usize,
    pub validate_output: bool,
    pub stats: bool,
    pub input_path: Option<PathBuf>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            domination_enabled: true,
            use_trie: true,
            start_depth: 1,
            validate_output: false,
            stats: false,
            input_path: None,
        }
    }
}

impl RunOptions {
    pub fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            domination: self.domination_enabled,
            use_trie: self.use_trie,
            start_depth: self.start_depth,
            ..SolveOptions::default()
        }
    }
}

impl From<Args> for RunOptions {
    fn from(a: Args) -> Self {
        Self {
            domination_enabled: !a.no_domination,
            use_trie: !a.no_trie,
            start_depth: a.start_depth as usize,
            validate_output: a.validate,
            stats: a.stats,
            input_path: a.input,
        }
    }
}

/// Writes the depth, then one line per vertex holding its 1-based parent
/// or `0` for a root.
pub fn write_tree_output<W: Write + ?Sized>(
    depth: usize,
    forest: &EliminationForest,
    sink: &mut W,
) -> io::Result<()> {
    let mut out = String::with_capacity(8 * (forest.len() + 1));
    out.push_str(&depth.to_string());
    out.push('\n');
    for p in forest.parents() {
        match p {
            Some(p) => out.push_str(&(p + 1).to_string()),
            None => out.push('0'),
        }
        out.push('\n');
    }
    sink.write_all(out.as_bytes())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeParseError {
    #[error("missing depth line")]
    MissingDepth,
    #[error("line {line}: `{token}` is not a non-negative integer")]
    NotAnInteger { line: usize, token: String },
    #[error("expected {expected} parent lines, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("line {line}: parent {parent} outside [0, {n}]")]
    ParentOutOfRange {
        line: usize,
        parent: usize,
        n: usize,
    },
}

/// Parses a depth-and-parent-list decomposition for an `n`-vertex graph.
/// The depth is taken as claimed; use [`validate_decomposition`] to check it.
pub fn parse_tree_output(text: &str, n: usize) -> Result<EliminationForest, TreeParseError> {
    let mut values = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let token = raw.trim();
        if token.is_empty() || token.starts_with('c') {
            continue;
        }
        let value = token
            .parse::<usize>()
            .map_err(|_| TreeParseError::NotAnInteger {
                line: idx + 1,
                token: token.to_string(),
            })?;
        values.push((idx + 1, value));
    }
    let (&(_, depth), parents) = values.split_first().ok_or(TreeParseError::MissingDepth)?;
    if parents.len() != n {
        return Err(TreeParseError::WrongLength {
            expected: n,
            found: parents.len(),
        });
    }
    let parent = parents
        .iter()
        .map(|&(line, p)| match p {
            0 => Ok(None),
            p if p <= n => Ok(Some(p - 1)),
            p => Err(TreeParseError::ParentOutOfRange { line, parent: p, n }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EliminationForest::with_claimed_depth(parent, depth))
}

fn write_stats<W: Write + ?Sized>(stats: &SolveStats, sink: &mut W) -> io::Result<()> {
    let mut total_candidates = 0usize;
    let mut total_queries = 0u64;
    for s in &stats.levels {
        writeln!(
            sink,
            "c component={} depth={} level={} candidates={} queries={}",
            s.component, s.budget, s.level, s.candidates, s.queries
        )?;
        total_candidates += s.candidates;
        total_queries += s.queries;
    }
    writeln!(
        sink,
        "c total candidates={total_candidates} queries={total_queries}"
    )
}

/// Runs the solver on the given arguments (including the program name).
/// Returns the process exit code.
pub fn run_cli<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let options = RunOptions::from(args);
    match run(&options, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn run(
    options: &RunOptions,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8, String> {
    let text = match &options.input_path {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| format!("reading standard input: {e}"))?;
            buf
        }
    };
    let graph = parse_gr(&text).map_err(|e| e.to_string())?;
    let solution = solve_treedepth(&graph, &options.solve_options());
    write_tree_output(solution.depth, &solution.forest, stdout).map_err(|e| e.to_string())?;
    stdout.flush().map_err(|e| e.to_string())?;
    if options.stats {
        let _ = write_stats(&solution.stats, stderr);
    }
    if options.validate_output && !validate_decomposition(&graph, &solution.forest) {
        let _ = writeln!(stderr, "error: decomposition failed validation");
        return Ok(EXIT_INVALID_OUTPUT);
    }
    Ok(EXIT_OK)
}
