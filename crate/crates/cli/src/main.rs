use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ecc_spectra::spectral::{char_poly, sym_eigenvalues_int};
use ecc_spectra::verify::{self, Params, SweepConfig, Verdict, VerificationReport, CSV_HEADER, DEFAULT_TOL};
use ecc_spectra::{ecc_matrix, parse_edge_list, parse_graph, Graph, Spectrum};

/// Eccentricity matrices of graphs and H-joins.
#[derive(Parser)]
#[command(name = "ecc-spectra", version)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print the eccentricity matrix.
    Ecc(GraphInput),
    /// Eigenvalues, energy, spectral radius, least eigenvalue and inertia of ε(G).
    Spectrum(GraphInput),
    /// Integer coefficients of the characteristic polynomial of ε(G), lowest degree first.
    Charpoly(GraphInput),
    /// Evaluate a closed form without comparing it to anything.
    Closed(TheoremArgs),
    /// Compare a closed form with the numeric spectrum of ε over a parameter sweep.
    Verify(VerifyArgs),
    /// List theorem ids and their parameters.
    List,
}

#[derive(Args)]
struct GraphInput {
    /// Graph expression, e.g. `hjoin(P4; K2, K1, K1, Kbar3)`.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    expr: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.expr, &self.file) {
            (Some(e), _) => Ok(parse_graph(e)?),
            (None, Some(path)) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                Ok(parse_edge_list(&text)?)
            }
            (None, None) => bail!("no graph given"),
        }
    }
}

#[derive(Args)]
struct TheoremArgs {
    /// Theorem id, see `list`.
    theorem: String,
    /// Parameter as NAME=VALUE; integers accept `a..b` and comma lists, graphs are `|`-separated.
    #[arg(long = "param", short = 'p', value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Seed for randomly drawn factors.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    theorem: TheoremArgs,
    /// Absolute tolerance per eigenvalue.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Exit with status 3 when a case falls outside the theorem's hypotheses.
    #[arg(long)]
    strict: bool,
    /// Include wall time per case (reports are then no longer byte-stable).
    #[arg(long)]
    timing: bool,
}

fn oracle_spectrum(g: &Graph) -> Result<Spectrum> {
    let eps = ecc_matrix(g)?;
    Ok(Spectrum::from_values(&sym_eigenvalues_int(eps.as_int_matrix())?))
}

fn write_csv_rows<W: Write>(out: W, rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_ecc(input: &GraphInput, format: Format, out: &mut dyn Write) -> Result<()> {
    let eps = ecc_matrix(&input.load()?)?;
    match format {
        Format::Json => writeln!(out, "{}", eps.to_json())?,
        Format::Text => write!(out, "{}", eps.to_text())?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = eps.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            write_csv_rows(out, &rows)?;
        }
    }
    Ok(())
}

fn cmd_spectrum(input: &GraphInput, format: Format, out: &mut dyn Write) -> Result<()> {
    let report = oracle_spectrum(&input.load()?)?.report();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Csv => {
            let mut rows = vec![vec!["eigenvalue".to_string(), "multiplicity".to_string()]];
            rows.extend(report.eigs.iter().map(|e| vec![e.value.to_string(), e.mult.to_string()]));
            write_csv_rows(out, &rows)?;
        }
        Format::Text => {
            for e in &report.eigs {
                writeln!(out, "{:>20.12} x{}", e.value, e.mult)?;
            }
            writeln!(out, "energy {:.12}", report.energy)?;
            writeln!(out, "rho {:.12}", report.rho)?;
            writeln!(out, "xi {:.12}", report.xi)?;
            writeln!(out, "inertia {}", report.inertia)?;
        }
    }
    Ok(())
}

fn cmd_charpoly(input: &GraphInput, format: Format, out: &mut dyn Write) -> Result<()> {
    let eps = ecc_matrix(&input.load()?)?;
    let p = char_poly(eps.as_int_matrix());
    match format {
        Format::Json => writeln!(out, "{}", p.to_json())?,
        Format::Text => writeln!(out, "{p}")?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.to_string()])
                .collect();
            write_csv_rows(out, &rows)?;
        }
    }
    Ok(())
}

fn cmd_closed(args: &TheoremArgs, format: Format, out: &mut dyn Write) -> Result<()> {
    let params = Params::from_assignments(&args.params)?;
    for (tuple, res) in verify::closed_forms(&args.theorem, &params, args.seed)? {
        match format {
            Format::Text => {
                let s = res.authoritative().spectrum()?;
                let eigs: Vec<String> = s.eigs().iter().map(|e| format!("{:.10}^{}", e.value, e.mult)).collect();
                let status = if res.preconditions_hold() { "" } else { " (outside hypotheses)" };
                writeln!(out, "{} [{tuple}]{status}: {}", res.theorem, eigs.join(", "))?;
            }
            _ => {
                let mut v = res.to_json();
                v["params"] = serde_json::to_value(&tuple)?;
                writeln!(out, "{v}")?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, format: Format, out: &mut dyn Write) -> Result<ExitCode> {
    let params = Params::from_assignments(&args.theorem.params)?;
    let cfg = SweepConfig {
        tol: args.tol,
        seed: args.theorem.seed,
        timing: args.timing,
        threads: None,
    };
    let reports = verify::run_sweep(&args.theorem.theorem, &params, &cfg)?;
    match format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", r.to_json_line())?;
            }
        }
        Format::Csv => {
            let mut rows = vec![CSV_HEADER.iter().map(ToString::to_string).collect()];
            rows.extend(reports.iter().map(|r| r.csv_record().to_vec()));
            write_csv_rows(&mut *out, &rows)?;
        }
        Format::Text => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
        }
    }
    Ok(exit_status(&reports, args.strict))
}

fn exit_status(reports: &[VerificationReport], strict: bool) -> ExitCode {
    if reports.iter().any(VerificationReport::is_failure) {
        ExitCode::from(1)
    } else if strict && reports.iter().any(|r| r.verdict == Verdict::PreconditionUnsupported) {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_list(format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            for t in verify::theorems() {
                let params: serde_json::Map<String, serde_json::Value> =
                    t.params.iter().map(|(k, v)| (k.to_string(), (*v).into())).collect();
                writeln!(out, "{}", serde_json::json!({ "id": t.id, "summary": t.summary, "params": params }))?;
            }
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = verify::theorems()
                .iter()
                .map(|t| vec![t.id.to_string(), t.summary.to_string()])
                .collect();
            write_csv_rows(out, &rows)?;
        }
        Format::Text => {
            for t in verify::theorems() {
                let params: Vec<String> = t.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "{:<40} {}", t.id, t.summary)?;
                writeln!(out, "{:<40} defaults: {}", "", params.join(" "))?;
            }
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let status = match &cli.command {
        Command::Ecc(g) => cmd_ecc(g, cli.format.unwrap_or(Format::Text), &mut out).map(|_| ExitCode::SUCCESS),
        Command::Spectrum(g) => cmd_spectrum(g, cli.format.unwrap_or(Format::Json), &mut out).map(|_| ExitCode::SUCCESS),
        Command::Charpoly(g) => cmd_charpoly(g, cli.format.unwrap_or(Format::Json), &mut out).map(|_| ExitCode::SUCCESS),
        Command::Closed(t) => cmd_closed(t, cli.format.unwrap_or(Format::Json), &mut out).map(|_| ExitCode::SUCCESS),
        Command::Verify(v) => cmd_verify(v, cli.format.unwrap_or(Format::Json), &mut out),
        Command::List => cmd_list(cli.format.unwrap_or(Format::Text), &mut out).map(|_| ExitCode::SUCCESS),
    }?;
    out.flush()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
