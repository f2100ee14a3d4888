//! The `srg` command line: build, exists, scan, verify and list.
//!
//! Machine output goes to stdout, everything else to stderr. Exit codes:
//! `0` exists / strongly regular, `1` nonexistent / not strongly regular /
//! invalid parameters, `2` unknown, `64` usage, `65` malformed input,
//! `74` I/O failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::graph::{decode_graph6, encode_graph6, is_strongly_regular, parse_edge_list, write_edge_list, Graph};
use crate::registry::{complete_params, write_scan_csv, Existence, LookupStatus, Registry, ScanSummary, SCAN_LIMIT};
use crate::{Error, SrgParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NONEXISTENT: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(name = "srg", version, about = "Construct and verify strongly regular graphs")]
pub struct CliConfig {
    /// Directory with `nonexistence.txt` and `codes/*.txt`
    #[arg(long, global = true, env = "SRG_DATA_DIR")]
    pub data_dir: Option<PathBuf>,

    /// Print timings and skipped data files
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildFormat {
    Graph6,
    Edges,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph with the given parameters and write it out
    Build {
        n: u64,
        k: u64,
        lambda: u64,
        /// Derived from the counting identity when omitted
        mu: Option<u64>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: BuildFormat,
        /// Write the graph here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print True, False or Unknown without building anything
    Exists {
        n: u64,
        k: u64,
        lambda: u64,
        mu: Option<u64>,
    },
    /// Classify every feasible-looking tuple up to a vertex bound as CSV
    Scan {
        #[arg(long, default_value_t = SCAN_LIMIT)]
        max_n: u64,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check whether a graph file is strongly regular
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// List registered constructions in dispatch order
    List,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    params: SrgParams,
    provenance: &'a str,
    edges: Vec<(usize, usize)>,
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        code
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Io { .. } => EXIT_IO,
        Error::Parse { .. } | Error::Graph6(_) | Error::EdgeList { .. } => EXIT_DATA,
        _ => EXIT_NONEXISTENT,
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { out, err };
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(io.out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(io.err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    execute(&config, &mut io)
}

fn registry(config: &CliConfig, io: &mut Io) -> Result<Registry, i32> {
    let reg = Registry::with_data_dir(config.data_dir.as_deref())
        .map_err(|e| io.fail(exit_code_for(&e), e))?;
    if config.verbose > 0 {
        for r in reg.rejected_codes() {
            let _ = writeln!(io.err, "warning: skipped code file {}: {}", r.source, r.reason);
        }
    }
    Ok(reg)
}

fn execute(config: &CliConfig, io: &mut Io) -> i32 {
    let reg = match registry(config, io) {
        Ok(r) => r,
        Err(code) => return code,
    };
    match &config.command {
        Command::Build { n, k, lambda, mu, format, out } => {
            build(&reg, config, io, (*n, *k, *lambda, *mu), *format, out.as_deref())
        }
        Command::Exists { n, k, lambda, mu } => exists(&reg, io, (*n, *k, *lambda, *mu)),
        Command::Scan { max_n, csv } => scan(&reg, io, *max_n, csv.as_deref()),
        Command::Verify { input, format } => verify(io, input, *format),
        Command::List => {
            for e in reg.list_constructions() {
                let _ = writeln!(io.out, "{}\t{}\t{}", e.id(), e.tier(), e.description());
            }
            EXIT_OK
        }
    }
}

type Query = (u64, u64, u64, Option<u64>);

fn params(io: &mut Io, (n, k, lambda, mu): Query) -> Result<SrgParams, i32> {
    if n < 4 {
        return Err(io.fail(EXIT_USAGE, format!("n must be at least 4, got {n}")));
    }
    complete_params(n, k, lambda, mu).map_err(|e| io.fail(EXIT_NONEXISTENT, e))
}

fn write_output(io: &mut Io, path: Option<&Path>, bytes: &[u8]) -> i32 {
    let result = match path {
        Some(p) => std::fs::write(p, bytes).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => io.out.write_all(bytes).map_err(|source| Error::Io {
            path: "<stdout>".into(),
            source,
        }),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => io.fail(EXIT_IO, e),
    }
}

fn render(g: &Graph, p: SrgParams, provenance: &str, format: BuildFormat) -> Vec<u8> {
    match format {
        BuildFormat::Graph6 => {
            let mut b = encode_graph6(g);
            b.push(b'\n');
            b
        }
        BuildFormat::Edges => write_edge_list(g).into_bytes(),
        BuildFormat::Json => {
            let doc = JsonGraph {
                params: p,
                provenance,
                edges: g.edges().collect(),
            };
            let mut b = serde_json::to_vec(&doc).expect("graph serializes");
            b.push(b'\n');
            b
        }
    }
}

fn build(reg: &Registry, config: &CliConfig, io: &mut Io, q: Query, format: BuildFormat, out: Option<&Path>) -> i32 {
    let p = match params(io, q) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let result = match reg.lookup_params(&p) {
        Ok(r) => r,
        Err(e) => return io.fail(exit_code_for(&e), e),
    };
    if config.verbose > 0 {
        let _ = writeln!(io.err, "{p}: {:?}", result.elapsed);
    }
    match result.status {
        LookupStatus::Exists { graph, provenance, .. } => {
            let _ = writeln!(io.err, "{provenance}");
            write_output(io, out, &render(&graph, p, &provenance, format))
        }
        LookupStatus::Infeasible(reason) => {
            let _ = writeln!(io.err, "{p} does not exist: {reason}");
            EXIT_NONEXISTENT
        }
        LookupStatus::Unknown => {
            let _ = writeln!(io.err, "{p}: no registered construction applies");
            EXIT_UNKNOWN
        }
    }
}

fn exists(reg: &Registry, io: &mut Io, q: Query) -> i32 {
    let p = match params(io, q) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let e = reg.existence_of(&p);
    let _ = writeln!(io.out, "{}", e.answer());
    let detail = e.detail();
    if !detail.is_empty() {
        let _ = writeln!(io.err, "{detail}");
    }
    match e {
        Existence::Exists { .. } => EXIT_OK,
        Existence::Nonexistent(_) => EXIT_NONEXISTENT,
        Existence::Unknown => EXIT_UNKNOWN,
    }
}

fn scan(reg: &Registry, io: &mut Io, max_n: u64, csv: Option<&Path>) -> i32 {
    if max_n > SCAN_LIMIT {
        return io.fail(EXIT_USAGE, format!("--max-n is capped at {SCAN_LIMIT}"));
    }
    let rows = match reg.scan(max_n) {
        Ok(r) => r,
        Err(e) => return io.fail(exit_code_for(&e), e),
    };
    let mut buf = Vec::new();
    if let Err(e) = write_scan_csv(&rows, &mut buf) {
        return io.fail(EXIT_IO, e);
    }
    let code = write_output(io, csv, &buf);
    let s = ScanSummary::of(&rows);
    let _ = writeln!(
        io.err,
        "exists: {}, nonexistent: {}, unknown: {}, total: {}",
        s.exists,
        s.nonexistent,
        s.unknown,
        s.total()
    );
    code
}

fn verify(io: &mut Io, input: &Path, format: GraphFormat) -> i32 {
    let bytes = match std::fs::read(input) {
        Ok(b) => b,
        Err(source) => {
            return io.fail(EXIT_IO, Error::Io {
                path: input.to_path_buf(),
                source,
            })
        }
    };
    let parsed = match format {
        GraphFormat::Graph6 => {
            let text = String::from_utf8_lossy(&bytes);
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            decode_graph6(line.as_bytes())
        }
        GraphFormat::Edges => match std::str::from_utf8(&bytes) {
            Ok(text) => parse_edge_list(text),
            Err(_) => Err(Error::EdgeList {
                line: 0,
                reason: "file is not UTF-8".into(),
            }),
        },
    };
    let g = match parsed {
        Ok(g) => g,
        Err(e) => return io.fail(EXIT_DATA, e),
    };
    match is_strongly_regular(&g) {
        Some(p) => {
            let _ = writeln!(io.out, "SRG({},{},{},{})", p.n, p.k, p.lambda, p.mu);
            EXIT_OK
        }
        None => {
            let _ = writeln!(io.out, "not strongly regular");
            EXIT_NONEXISTENT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["srg"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        assert_eq!(run_str(&["build", "ten", "3", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["exists", "3", "1", "0", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["scan", "--max-n", "5000"]).0, EXIT_USAGE);
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify"));
    }

    #[test]
    fn non_integral_mu() {
        let (code, out, err) = run_str(&["exists", "10", "3", "1"]);
        assert_eq!(code, EXIT_NONEXISTENT);
        assert!(out.is_empty());
        assert!(err.contains("not a non-negative integer"));
    }

    #[test]
    fn exists_answers() {
        assert_eq!(run_str(&["exists", "10", "3", "0", "1"]).1, "True\n");
        let (code, out, _) = run_str(&["exists", "57", "14", "1"]);
        assert_eq!((code, out.as_str()), (EXIT_NONEXISTENT, "False\n"));
    }
}
