//! Command-line front end. Exit codes: 0 on success, 1 when a verification
//! is refuted, 2 on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::closed_forms::{eus_h1, knp_max_bound, unicyclic_min_bound};
use crate::constructions::{self, H1Params, PendantVector};
use crate::edgelist::{emit_edge_list, looks_like_edge_list, parse_edge_list};
use crate::enumeration::{extremal_scan, Direction, EnumFilter, ExtremalReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::index::{index_value, IndexKind};
use crate::report::{ReportDocument, Timing};
use crate::verify::{run_claim, Claim};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "eus-lab",
    version,
    about = "Euler Sombor index computations and extremal checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print an index of a graph read from an edge list or graph6 file.
    Compute {
        #[arg(long, default_value = "eus")]
        index: IndexKind,
        /// Input file, or `-` for stdin.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
    },
    /// Build a named graph family and print it.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated `key=value` parameters, e.g. `n=7,g=4`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Exhaustive extremal scan over a graph class.
    Scan {
        #[arg(long)]
        n: usize,
        /// e.g. `unicyclic,girth=4` or `connected,pendants=2,max-degree=4`.
        #[arg(long, default_value = "connected")]
        filter: EnumFilter,
        #[arg(long, default_value = "eus")]
        index: IndexKind,
        #[arg(long)]
        direction: Direction,
        #[arg(long, env = "EUS_LAB_WORKERS", default_value_t = 0)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave out wall-clock timings so output is byte-stable.
        #[arg(long)]
        no_timings: bool,
    },
    /// Check extremal claims by exhaustive scans and numeric sweeps.
    Verify {
        #[arg(long, default_value = "all")]
        claim: Claim,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u8).range(3..=9))]
        max_n: u8,
        #[arg(long, env = "EUS_LAB_WORKERS", default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_timings: bool,
    },
    /// Evaluate a closed-form value or bound.
    Formulas {
        #[arg(long, value_enum)]
        which: Formula,
        #[arg(long)]
        params: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Path,
    Star,
    Complete,
    Tadpole,
    H1,
    Pineapple,
    CliquePendants,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Formula {
    H1,
    UnicyclicBound,
    KnpBound,
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(cli.command, echo, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(
    command: Command,
    echo: Vec<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    match command {
        Command::Compute {
            index,
            input,
            format,
        } => {
            let text = read_input(&input)?;
            for g in read_graphs(&text, format)? {
                writeln!(out, "{:.9}", index_value(&g, index)).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Construct {
            family,
            params,
            format,
        } => {
            let g = construct(family, &parse_params(&params)?)?;
            match format {
                GraphFormat::Graph6 => writeln!(out, "{}", emit_graph6(&g)),
                GraphFormat::EdgeList => write!(out, "{}", emit_edge_list(&g)),
            }
            .map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Scan {
            n,
            filter,
            index,
            direction,
            workers,
            format,
            out: path,
            no_timings,
        } => {
            let start = Instant::now();
            let report = extremal_scan(n, &filter, index, direction, workers)?;
            let elapsed = start.elapsed();
            let text = match format {
                ReportFormat::Json => {
                    let mut doc = ReportDocument::new(echo);
                    if !no_timings {
                        doc.timings = Some(vec![Timing {
                            claim: "scan".into(),
                            millis: elapsed.as_secs_f64() * 1e3,
                        }]);
                    }
                    doc.scans.push(report);
                    doc.to_json()
                }
                ReportFormat::Csv => scan_csv(&report)?,
            };
            emit(&text, path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            claim,
            max_n,
            workers,
            out: path,
            no_timings,
        } => {
            let verdicts = run_claim(claim, max_n as usize, workers)?;
            for v in &verdicts {
                writeln!(err, "{v}").map_err(io_err)?;
            }
            let doc = ReportDocument::new(echo).with_verdicts(verdicts, !no_timings);
            emit(&doc.to_json(), path.as_deref(), out)?;
            Ok(if doc.has_refuted() {
                EXIT_REFUTED
            } else {
                EXIT_OK
            })
        }
        Command::Formulas { which, params } => {
            let p = parse_params(&params)?;
            let value = match which {
                Formula::H1 => eus_h1(p.get("n")?, p.get("g")?, p.get("k")?, p.get("l")?)?,
                Formula::UnicyclicBound => unicyclic_min_bound(p.get("n")?, p.get("g")?)?,
                Formula::KnpBound => knp_max_bound(p.get("n")?, p.get("p")?)?,
            };
            writeln!(out, "{value:.9}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::InvalidParams(format!("i/o: {e}"))
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))
}

/// One graph for an edge list; one per non-empty line for graph6.
fn read_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>> {
    let edge_list = match format {
        InputFormat::Auto => looks_like_edge_list(text),
        InputFormat::Graph6 => false,
        InputFormat::EdgeList => true,
    };
    if edge_list {
        return Ok(vec![parse_edge_list(text)?]);
    }
    let graphs: Vec<Graph> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect::<Result<_>>()?;
    if graphs.is_empty() {
        return Err(Error::Graph6("no graphs in input".into()));
    }
    Ok(graphs)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Error::InvalidParams(format!("{}: {e}", p.display())))
        }
        None => out.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn scan_csv(report: &ExtremalReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::InvalidParams(format!("csv: {e}"));
    w.write_record([
        "n",
        "filter",
        "index",
        "direction",
        "optimum",
        "witnesses",
        "scanned",
        "matched",
    ])
    .map_err(csv_err)?;
    let witnesses: Vec<String> = report.witnesses.iter().map(emit_graph6).collect();
    w.write_record([
        report.n.to_string(),
        report.filter.to_string(),
        report.index.to_string(),
        report.direction.to_string(),
        format!("{:.9}", report.optimum),
        witnesses.join(" "),
        report.scanned.to_string(),
        report.matched.to_string(),
    ])
    .map_err(csv_err)?;
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidParams(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn raw(&self, key: &str) -> Result<&str> {
        self.0
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::InvalidParams(format!("missing parameter {key}")))
    }

    fn get(&self, key: &str) -> Result<usize> {
        let raw = self.raw(key)?;
        raw.parse()
            .map_err(|_| Error::InvalidParams(format!("parameter {key}: bad integer {raw:?}")))
    }
}

fn parse_params(text: &str) -> Result<Params> {
    let mut map = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidParams(format!("parameter {item:?} is not key=value")))?;
        if map
            .insert(k.trim().to_string(), v.trim().to_string())
            .is_some()
        {
            return Err(Error::InvalidParams(format!("parameter {k} given twice")));
        }
    }
    Ok(Params(map))
}

fn construct(family: Family, p: &Params) -> Result<Graph> {
    match family {
        Family::Cycle => constructions::cycle(p.get("n")?),
        Family::Path => constructions::path(p.get("n")?),
        Family::Star => constructions::star(p.get("n")?),
        Family::Complete => constructions::complete(p.get("n")?),
        Family::Tadpole => constructions::tadpole(p.get("n")?, p.get("g")?),
        Family::H1 => constructions::h1(H1Params::new(
            p.get("n")?,
            p.get("g")?,
            p.get("k")?,
            p.get("l")?,
        )?),
        Family::Pineapple => constructions::pineapple(p.get("n")?, p.get("p")?),
        Family::CliquePendants => {
            // `a=2:1:0` lists the pendant count of each clique vertex.
            let counts = p
                .raw("a")?
                .split(':')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| Error::InvalidParams(format!("bad pendant count {x:?}")))
                })
                .collect::<Result<Vec<usize>>>()?;
            constructions::clique_with_pendants(&PendantVector::new(counts)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("eus-lab").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn formulas_command() {
        let (code, out, _) = call(&["formulas", "--which", "knp-bound", "--params", "n=5,p=2"]);
        assert_eq!((code, out.as_str()), (0, "23.212258249\n"));
        let (code, out, _) = call(&[
            "formulas",
            "--which",
            "unicyclic-bound",
            "--params",
            "n=7,g=4",
        ]);
        assert_eq!((code, out.as_str()), (0, "26.114752987\n"));
        let (code, out, _) = call(&["formulas", "--which", "h1", "--params", "n=8,g=4,k=1,l=1"]);
        assert_eq!((code, out.as_str()), (0, "33.495139718\n"));
    }

    #[test]
    fn construct_command() {
        let (code, out, _) = call(&["construct", "--family", "complete", "--params", "n=3"]);
        assert_eq!((code, out.as_str()), (0, "Bw\n"));
        let (code, out, _) = call(&[
            "construct",
            "--family",
            "clique-pendants",
            "--params",
            "a=1:1",
            "--format",
            "edge-list",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "n=4\n0 1\n0 2\n1 3\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["formulas", "--which", "knp-bound", "--params", "n=5"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["construct", "--family", "tadpole", "--params", "n=5,g=2"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["verify", "--max-n", "10"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
