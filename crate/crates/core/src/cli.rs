//! The `szeged` command line: graph6 in and out, family construction, class
//! enumeration, Wiener rankings and verification runs.
//!
//! Exit codes: 0 success, 1 a verified statement failed, 2 usage or guard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerate::{enumerate_cached, write_graph6_file, ClassSpec, Filter, GraphClass, Guards};
use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::invariants::Indices;
use crate::rational::Rational;
use crate::verify::{self, report::ranking_table, ReportDocument, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "szeged", version, about = "Exact Wiener and Szeged indices of small graphs")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Lift the enumeration size guards.
    #[arg(long, global = true, alias = "i-know-this-is-big")]
    override_guard: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Indices of every graph6 line in a file or on stdin.
    Compute {
        /// Input file; stdin when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Build a named family member, e.g. `lollipop:10:4` or `h:12:2`.
    Gen {
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate a class up to isomorphism as canonical graph6 lines.
    Enum {
        #[command(flatten)]
        class: ClassArgs,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Top tiers of a class by Wiener index.
    Rank {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 7)]
        top: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check a stated ranking or extreme against the enumerated class.
    Verify {
        /// Check id (see `--list`), or `all`.
        #[arg(required_unless_present = "list")]
        id: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Sweep unicyclic and bicyclic graphs only (thm2.4, the default).
        #[arg(long, conflicts_with = "full")]
        restricted: bool,
        /// Sweep every cyclic graph (thm2.4; a long stretch run at n=10).
        #[arg(long)]
        full: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = VerifyOptions::default().trials)]
        trials: usize,
        /// Record wall-clock time per result.
        #[arg(long)]
        timing: bool,
        /// Tiers kept in ranking reports.
        #[arg(long, default_value_t = VerifyOptions::default().top)]
        top: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Print the check ids and their default orders.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[arg(long)]
    class: GraphClass,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    min_girth: Option<usize>,
    #[arg(long)]
    max_girth: Option<usize>,
    #[arg(long)]
    bipartite: Option<bool>,
    #[arg(long)]
    non_complete_block: Option<bool>,
    /// Directory of `<class>_<n>.g6` corpora to read and fill.
    #[arg(long)]
    cache: Option<PathBuf>,
}

impl ClassArgs {
    fn spec(&self) -> ClassSpec {
        ClassSpec::new(self.class, self.n).with_filter(Filter {
            min_girth: self.min_girth,
            max_girth: self.max_girth,
            bipartite: self.bipartite,
            non_complete_block: self.non_complete_block,
            ..Filter::default()
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

impl clap::builder::ValueParserFactory for GraphClass {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<GraphClass>().map_err(|e| e.to_string()))
    }
}

/// One row of `compute` output.
#[derive(Serialize)]
struct Row {
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    values: Option<RowValues>,
}

#[derive(Serialize)]
struct RowValues {
    n: usize,
    m: usize,
    girth: Option<usize>,
    wiener: u64,
    szeged: u64,
    revised_szeged_x4: u64,
    sz_minus_w: i64,
    sz_over_w: Option<Rational>,
    szstar_over_w: Option<Rational>,
}

fn row(line: &str) -> Row {
    let text = line.trim().to_string();
    let values = parse_graph6(&text).and_then(|g| {
        let i = Indices::of(&g)?;
        Ok(RowValues {
            n: i.n,
            m: i.m,
            girth: g.girth(),
            wiener: i.wiener,
            szeged: i.szeged,
            revised_szeged_x4: i.revised_szeged_x4,
            sz_minus_w: i.sz_minus_w(),
            sz_over_w: i.sz_over_w().ok(),
            szstar_over_w: i.szstar_over_w().ok(),
        })
    });
    match values {
        Ok(v) => Row { graph6: text, error: None, values: Some(v) },
        Err(e) => Row { graph6: text, error: Some(e.to_string()), values: None },
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn rows_table(rows: &[Row]) -> String {
    let mut out = String::from("graph6\tn\tm\tgirth\tW\tSz\t4Sz*\tSz-W\tSz/W\tSz*/W\n");
    for r in rows {
        match (&r.values, &r.error) {
            (Some(v), _) => {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.graph6,
                    v.n,
                    v.m,
                    opt(v.girth),
                    v.wiener,
                    v.szeged,
                    v.revised_szeged_x4,
                    v.sz_minus_w,
                    opt(v.sz_over_w),
                    opt(v.szstar_over_w)
                );
            }
            (None, e) => {
                let _ = writeln!(out, "{}\terror: {}", r.graph6, e.as_deref().unwrap_or("unknown"));
            }
        }
    }
    out
}

fn write_or_print(path: Option<&PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string())),
    }
}

fn guard_json(g: &Guards) -> serde_json::Value {
    serde_json::to_value(g).expect("guards serialize")
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version come through here too, with exit code 0.
            let text = e.render().to_string();
            if e.exit_code() == 0 {
                let _ = stdout.write_all(text.as_bytes());
                return EXIT_OK;
            }
            let _ = stderr.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    if let Some(t) = cli.threads {
        // Fails harmlessly if a pool already exists (e.g. a second call in-process).
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let command_line = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match execute(cli, &command_line, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, command_line: &str, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32> {
    let guards = Guards::from_env().overridden(cli.override_guard);
    match cli.command {
        Command::Compute { input, format } => {
            let text = match &input {
                Some(p) => fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
                None => {
                    let mut s = String::new();
                    stdin.read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
                    s
                }
            };
            let rows: Vec<Row> = text.lines().filter(|l| !l.trim().is_empty()).map(row).collect();
            let out = match format {
                Format::Table => rows_table(&rows),
                Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
            };
            write_or_print(None, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Gen { family, out } => {
            let id: FamilyId = family.parse()?;
            let g = id.build()?;
            write_or_print(out.as_ref(), &(emit_graph6(&g) + "\n"), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Enum { class, out } => {
            let graphs = enumerate_cached(&class.spec(), &guards, class.cache.as_deref())?;
            match out {
                Some(p) => {
                    write_graph6_file(&p, &graphs)?;
                    let _ = writeln!(stdout, "{} graphs written to {}", graphs.len(), p.display());
                }
                None => {
                    let mut text = String::new();
                    for g in &graphs {
                        text.push_str(&emit_graph6(g));
                        text.push('\n');
                    }
                    write_or_print(None, &text, stdout)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Rank { class, top, format } => {
            let spec = class.spec();
            let graphs = enumerate_cached(&spec, &guards, class.cache.as_deref())?;
            let report = verify::rank_class(&spec.to_string(), &graphs, top)?;
            let out = match format {
                Format::Table => {
                    format!("{} ({} graphs)\n{}", report.class, report.class_size, ranking_table(&report, ""))
                }
                Format::Json => serde_json::to_string_pretty(&report).expect("ranking serializes") + "\n",
            };
            write_or_print(None, &out, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { id, n, restricted: _, full, report, seed, trials, timing, top, format, list } => {
            if list {
                let mut out = String::new();
                for (id, orders) in verify::CHECKS {
                    let o: Vec<String> = orders.iter().map(usize::to_string).collect();
                    let _ = writeln!(out, "{id:<14}{}", if o.is_empty() { "-".into() } else { o.join(",") });
                }
                write_or_print(None, &out, stdout)?;
                return Ok(EXIT_OK);
            }
            let id = id.expect("required unless --list");
            let opts = VerifyOptions { guards: guards.clone(), seed, trials, full, timing, top };
            let mut doc = ReportDocument::new(command_line, Some(seed), guard_json(&guards));
            if id == "all" {
                for (check, _) in verify::CHECKS {
                    doc.results.extend(verify::run(check, None, &opts)?);
                }
            } else {
                doc.results = verify::run(&id, n, &opts)?;
            }
            if let Some(p) = &report {
                fs::write(p, doc.to_json()).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            }
            let out = match format {
                Format::Table => doc.to_table(),
                Format::Json => doc.to_json(),
            };
            write_or_print(None, &out, stdout)?;
            Ok(if doc.passed() { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["szeged"];
        argv.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_rows() {
        let (code, out, _) = call(&["compute"], "DUW\nC~\n\nA?\n");
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "DUW\t5\t5\t5\t15\t20\t125\t5\t4/3\t25/12");
        assert!(lines[2].starts_with("C~\t4\t6\t3\t6\t6\t"));
        assert!(lines[3].starts_with("A?\terror:"));
    }

    #[test]
    fn gen_and_errors() {
        let (code, out, _) = call(&["gen", "h:10:2"], "");
        assert_eq!(code, 0);
        let (_, row, _) = call(&["compute", "--format", "json"], &out);
        assert!(row.contains("\"wiener\": 144"));
        let (code, _, err) = call(&["gen", "lollipop:4:9"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("r <= n"));
        assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn guard_is_a_usage_error() {
        let (code, _, err) = call(&["enum", "--class", "connected", "--n", "10"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("guard"));
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = call(&["verify", "thm2.3", "--n", "5"], "");
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("PASS  thm2.3 n=5  bound 8/7"));
        let (code, out, _) = call(&["verify", "trees", "--n", "9"], "");
        assert_eq!(code, EXIT_VIOLATION);
        assert!(out.contains("witness"));
        assert_eq!(call(&["verify", "thm2.3", "--n", "2"], "").0, EXIT_USAGE);
        assert_eq!(call(&["verify", "thm2.4", "--full", "--restricted"], "").0, EXIT_USAGE);
    }
}
