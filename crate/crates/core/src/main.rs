use clap::{Parser, Subcommand, ValueEnum};
use curvespec::rational::{approx_string, rat_string};
use curvespec::report::{build_report, report_json, spectrum_csv};
use curvespec::resolution::{decorate, export_dot, DotKind, Limits};
use curvespec::spectrum::spectrum_enumeration;
use curvespec::verify::{verify_pairs, verify_sweep, Fault, SweepSpec};
use curvespec::{characteristic_data, parse_pairs, Error};
use serde::Serialize;
use std::process::ExitCode;

/// Exact invariants of irreducible plane curve singularities: spectrum,
/// resolution combinatorics and Hertling variance statistics from the
/// Puiseux pairs.
#[derive(Parser)]
#[command(name = "curvespec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DotTarget {
    Enriques,
    Dual,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectrum of exponents, sorted ascending.
    Spectrum {
        /// Puiseux pairs as "k1,n1;k2,n2;...".
        #[arg(long)]
        pairs: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the decorated resolution (or a DOT graph of it).
    Resolution {
        #[arg(long)]
        pairs: String,
        /// Emit DOT for the Enriques diagram or the dual graph instead
        /// of the table.
        #[arg(long, value_enum)]
        dot: Option<DotTarget>,
    },
    /// Cross-check every spectrum route, closed form and invariant.
    Verify {
        #[arg(long, conflicts_with = "sweep")]
        pairs: Option<String>,
        /// Batch mode: "g<=2,k<=12,n<=5,count=50,seed=7".
        #[arg(long)]
        sweep: Option<String>,
        /// Test hook: perturb one multiplicity so the harness must
        /// report a mismatch.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Full JSON report: characteristic data, spectrum, resolution,
    /// variance and verification.
    Report {
        #[arg(long)]
        pairs: String,
    },
}

fn limits_from_env() -> Result<Limits, Error> {
    let mut limits = Limits::default();
    if let Ok(text) = std::env::var("CURVESPEC_MAX_VERTICES") {
        limits.max_vertices = text.trim().parse().map_err(|_| {
            Error::InvalidInput(format!("CURVESPEC_MAX_VERTICES must be an integer, got \"{text}\""))
        })?;
    }
    Ok(limits)
}

#[derive(Serialize)]
struct SpectrumRow {
    alpha: String,
    mult: u64,
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    let limits = limits_from_env()?;
    match cli.command {
        Command::Spectrum { pairs, format } => {
            let pairs = parse_pairs(&pairs)?;
            let cd = characteristic_data(&pairs);
            let spectrum = spectrum_enumeration(&cd);
            match format {
                Format::Text => {
                    let rows: Vec<(String, String, u64)> = spectrum
                        .entries()
                        .iter()
                        .map(|(a, m)| (rat_string(a), approx_string(a, 12), *m))
                        .collect();
                    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(8);
                    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(6);
                    println!("{:w0$}  {:w1$}  mult", "exponent", "approx");
                    for (exact, approx, m) in rows {
                        println!("{exact:w0$}  {approx:w1$}  {m}");
                    }
                }
                Format::Csv => print!("{}", spectrum_csv(&spectrum)),
                Format::Json => {
                    let rows: Vec<SpectrumRow> = spectrum
                        .entries()
                        .iter()
                        .map(|(a, m)| SpectrumRow {
                            alpha: rat_string(a),
                            mult: *m,
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&rows).expect("serializes"));
                }
            }
        }
        Command::Resolution { pairs, dot } => {
            let pairs = parse_pairs(&pairs)?;
            let dec = decorate(&pairs, &limits)?;
            match dot {
                Some(target) => {
                    let kind = match target {
                        DotTarget::Enriques => DotKind::Enriques,
                        DotTarget::Dual => DotKind::Dual,
                    };
                    print!("{}", export_dot(&dec, kind));
                }
                None => {
                    let rows: Vec<(String, String, String, String)> = (0..dec
                        .diagram
                        .white_count())
                        .map(|i| {
                            (
                                dec.diagram.vertex_name(i),
                                dec.m[i].to_string(),
                                (&dec.dtilde[i] - 1u32).to_string(),
                                rat_string(&dec.e[i]),
                            )
                        })
                        .collect();
                    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap().max(6);
                    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap().max(1);
                    let w2 = rows.iter().map(|r| r.2.len()).max().unwrap().max(1);
                    println!("{:w0$}  {:>w1$}  {:>w2$}  e", "vertex", "m", "d");
                    for (name, m, d, e) in rows {
                        println!("{name:w0$}  {m:>w1$}  {d:>w2$}  {e}");
                    }
                    println!();
                    println!(
                        "lct = {}",
                        rat_string(&curvespec::log_canonical_threshold(&dec))
                    );
                    for r in &dec.ruptures {
                        println!(
                            "rupture {} (stage {}): m = {}, neighbours {}",
                            dec.diagram.vertex_name(r.vertex),
                            r.stage,
                            r.m0,
                            r.neighbor_mults
                                .iter()
                                .map(|m| m.to_string())
                                .collect::<Vec<_>>()
                                .join(", ")
                        );
                    }
                }
            }
        }
        Command::Verify {
            pairs,
            sweep,
            inject_fault,
        } => {
            let fault = if inject_fault {
                Fault::PerturbMultiplicity
            } else {
                Fault::None
            };
            let reports = match (pairs, sweep) {
                (Some(text), None) => vec![verify_pairs(&parse_pairs(&text)?, &limits, fault)?],
                (None, Some(text)) => verify_sweep(&SweepSpec::parse(&text)?, &limits)?,
                _ => {
                    return Err(Error::InvalidInput(
                        "verify needs exactly one of --pairs or --sweep".into(),
                    ))
                }
            };
            let mut failed = 0usize;
            let mut checks = 0usize;
            for report in &reports {
                checks += report.checks.len();
                for check in &report.checks {
                    if !check.pass {
                        failed += 1;
                        println!("FAIL [{}] {}: {}", report.pairs, check.name, check.detail);
                    }
                }
            }
            println!(
                "{} case(s), {} check(s), {} failure(s)",
                reports.len(),
                checks,
                failed
            );
            if failed > 0 {
                return Err(Error::VerificationFailed(format!(
                    "{failed} check(s) failed"
                )));
            }
        }
        Command::Report { pairs } => {
            let pairs = parse_pairs(&pairs)?;
            let report = build_report(&pairs, &limits)?;
            print!("{}", report_json(&report));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
