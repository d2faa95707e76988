//! `cellring`: compute, cache, verify and export.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical violation, 2 on usage
//! or window errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use cellring::bijection::{dictionary, pi_element};
use cellring::cells::{CellWindow, LeftCellLabel};
use cellring::jring::JRing;
use cellring::report::CheckReport;
use cellring::verify::{run_suite, Bounds, SUITES};
use cellring::{Error, KlTable, LaurentPoly, WeylElement};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cellring", version, about = "Based ring of the a=6 cell of the extended affine Weyl group of type B3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Length bound for windows and samples.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Bound on i + j for parametrized samples.
    #[arg(long, global = true)]
    max_ij: Option<u32>,
    /// KL cache file (JSON lines); CELLRING_CACHE takes precedence.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// P_{y,w} as a polynomial in q.
    Kl { y: String, w: String },
    /// The row z ↦ γ_{x,y,z} of t_x·t_y.
    Gamma { x: String, y: String },
    /// Run a named verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
    },
    /// The matrix entry π(x) of a cell element.
    Pi { word: String },
    /// Every window element with its cells, parameters and irreducible.
    Dictionary,
    /// The 24 left cell labels.
    Cells,
}

enum Outcome {
    Pass,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool");
    }
    if cli.max_len == Some(0) || cli.max_ij.is_some_and(|n| n > 1000) {
        eprintln!("error: bounds must be positive and moderate");
        return ExitCode::from(2);
    }
    let cache = std::env::var_os("CELLRING_CACHE").map(PathBuf::from).or(cli.cache.clone());
    match run(&cli, cache) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e @ Error::DegreeBound { .. }) => {
            eprintln!("violation: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse(word: &str) -> Result<WeylElement, Error> {
    WeylElement::from_word(word)
}

fn table(cache: &Option<PathBuf>) -> Result<KlTable, Error> {
    match cache {
        Some(p) => KlTable::with_cache(p),
        None => Ok(KlTable::new()),
    }
}

fn run(cli: &Cli, cache: Option<PathBuf>) -> Result<Outcome, Error> {
    let mut out = std::io::stdout().lock();
    let io = |e: std::io::Error| Error::Cache(format!("stdout: {e}"));
    match &cli.command {
        Command::Kl { y, w } => {
            let (y, w) = (parse(y)?, parse(w)?);
            let t = table(&cache)?;
            let p = t.kl_poly(&y, &w);
            let shown = LaurentPoly::<i64>::from_q_coeffs(&p).format_in("q");
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::json!({"y": y.to_string(), "w": w.to_string(), "P": p})),
                Format::Csv => writeln!(out, "y,w,P\n{y},{w},{shown}"),
                Format::Text => writeln!(out, "{shown}"),
            }
            .map_err(io)?;
            if let Some(path) = &cache {
                t.save_cache(path)?;
            }
        }
        Command::Gamma { x, y } => {
            let (x, y) = (parse(x)?, parse(y)?);
            let len = cli.max_len.unwrap_or(0).max(x.length() + y.length());
            let window = CellWindow::enumerate(len);
            let t = table(&cache)?;
            let jr = JRing::new(&t, &window);
            let row = jr.row(&x, &y)?;
            match cli.format {
                Format::Json => {
                    let rows: Vec<_> = row.iter().map(|(z, g)| serde_json::json!({"z": z.to_string(), "gamma": g})).collect();
                    writeln!(out, "{}", serde_json::json!({"x": x.to_string(), "y": y.to_string(), "window": len, "rows": rows}))
                        .map_err(io)?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["x", "y", "z", "gamma"]).map_err(|e| Error::Cache(e.to_string()))?;
                    for (z, g) in row.iter() {
                        w.write_record([x.to_string(), y.to_string(), z.to_string(), g.to_string()])
                            .map_err(|e| Error::Cache(e.to_string()))?;
                    }
                    w.flush().map_err(io)?;
                }
                Format::Text => {
                    if row.is_empty() {
                        writeln!(out, "(no terms)").map_err(io)?;
                    }
                    for (z, g) in row.iter() {
                        writeln!(out, "{z}\t{g}").map_err(io)?;
                    }
                }
            }
            if let Some(path) = &cache {
                t.save_cache(path)?;
            }
        }
        Command::Verify { suite } => {
            let reports = run_suite(suite, &Bounds { max_len: cli.max_len, max_ij: cli.max_ij })?;
            print_reports(&mut out, cli.format, &reports).map_err(io)?;
            if !reports.iter().all(CheckReport::passed) {
                return Ok(Outcome::Violation);
            }
        }
        Command::Pi { word } => {
            let x = parse(word)?;
            let window = CellWindow::enumerate(cli.max_len.unwrap_or(0).max(x.length()));
            let m = pi_element(&window, &x)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&m).expect("serializable")),
                Format::Csv => writeln!(out, "word,row,col,entry\n{x},{},{},{}", m.row, m.col, m.entry),
                Format::Text => writeln!(out, "{m}"),
            }
            .map_err(io)?;
        }
        Command::Dictionary => {
            let window = CellWindow::enumerate(cli.max_len.unwrap_or(20));
            let rows = dictionary(&window);
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&rows).expect("serializable")).map_err(io)?,
                Format::Csv | Format::Text => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    for r in &rows {
                        w.serialize(r).map_err(|e| Error::Cache(e.to_string()))?;
                    }
                    w.flush().map_err(io)?;
                }
            }
        }
        Command::Cells => {
            for c in LeftCellLabel::all() {
                let r: Vec<String> = c.r_set().iter().map(|i| format!("r{i}")).collect();
                writeln!(out, "{}\t{}\t{}\tY{}\t{{{}}}", c.name(), c.notation(), c.representative(), c.group(), r.join(",")).map_err(io)?;
            }
        }
    }
    Ok(Outcome::Pass)
}

fn print_reports(out: &mut impl Write, format: Format, reports: &[CheckReport]) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(reports).expect("serializable")),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check", "status", "window", "pairs_tested", "failures"])?;
            for r in reports {
                w.write_record([
                    r.check.clone(),
                    if r.passed() { "PASS".into() } else { "FAIL".into() },
                    r.window.to_string(),
                    r.pairs_tested.to_string(),
                    r.failures.len().to_string(),
                ])?;
            }
            w.flush()
        }
        Format::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            Ok(())
        }
    }
}
