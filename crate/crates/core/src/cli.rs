//! The command-line front end: thin argument handling over the library, with
//! three output encodings and strict exit-code discipline.
//!
//! Exit codes: 0 success, 1 at least one verification check failed, 2 for
//! configuration, parse, or I/O problems. Machine-readable output (JSON and
//! CSV) is byte-identical across reruns and thread counts; wall-clock time
//! appears only in the text encoding of `verify`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::chsh::{
    angle_grid, chsh_sweep, chsh_value, model_bound, ChshConfig, ChshSweep, Plane, SweepRow,
    SweepSummary,
};
use crate::epr::{correlation, event_level_correlation, EnsembleMeasure};
use crate::ga::Tolerance;
use crate::malus::{malus_expectation, Preparation};
use crate::quantum::{
    bell_operator, pauli_projection, qm_chsh_bound, singlet_correlation, singlet_expectation,
    ComplexMatrix,
};
use crate::report::{
    fmt_f64, multivector_fields, multivector_header, to_json, write_output, Csv, Format, SCHEMA,
};
use crate::sampling::DEFAULT_SEED;
use crate::verify::{registry, run_suite, SuiteResult};

type CliError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "cliffbell",
    version,
    about = "Bivector-valued spin correlations in Cl(3,0): verification suite, \
             setting sweeps, quantum comparison, and sequential-analyzer runs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every registered check and report pass/fail per check
    Verify(VerifyArgs),
    /// Sweep both second-station settings over a coplanar grid
    ChshSweep(SweepArgs),
    /// Same grid, with model and singlet predictions side by side
    QuantumCompare(SweepArgs),
    /// Run a cascade of analyzers after a polarizer
    Malus(MalusArgs),
    /// Juxtapose event-level readout products with the algebraic correlation
    EventDiag(EventDiagArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Output encoding
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for every check's random stream
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random samples per check (enumerated checks ignore this)
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u32).range(1..))]
    samples: u32,
    /// Override every check's tolerance with one value (must be >= 0)
    #[arg(long, value_parser = parse_tolerance)]
    tolerance: Option<f64>,
    /// List the registered checks and exit without running them
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Plane the analyzer settings live in
    #[arg(long, value_enum, default_value_t = Plane::Xy)]
    plane: Plane,
    /// Grid step: radians, or degrees with a `deg` suffix (0 < step <= pi)
    #[arg(long, default_value = "15deg", value_parser = parse_angle)]
    step: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MalusArgs {
    /// Plane the polarizer and analyzers live in
    #[arg(long, value_enum, default_value_t = Plane::Xy)]
    plane: Plane,
    /// Comma-separated analyzer rotations, each relative to the previous
    /// stage: radians, or degrees with a `deg` suffix
    #[arg(long, default_value = "45deg,45deg", value_delimiter = ',', value_parser = parse_angle)]
    chain: Vec<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EventDiagArgs {
    /// Grid step: radians, or degrees with a `deg` suffix (0 < step <= pi)
    #[arg(long, default_value = "15deg", value_parser = parse_angle)]
    step: f64,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let eps: f64 = s.parse().map_err(|e| format!("not a number: {e}"))?;
    Tolerance::new(eps).map_err(|e| e.to_string())?;
    Ok(eps)
}

fn parse_angle(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = if let Some(degrees) = s.strip_suffix("deg") {
        let d: f64 = degrees
            .trim()
            .parse()
            .map_err(|e| format!("not a number: {e}"))?;
        d.to_radians()
    } else {
        s.parse().map_err(|e| format!("not a number: {e}"))?
    };
    if !value.is_finite() {
        return Err(format!("angle must be finite, got {value}"));
    }
    Ok(value)
}

/// Parses arguments, runs the chosen command, maps errors to exit code 2.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Verify(args) => run_verify(&args),
        Command::ChshSweep(args) => run_chsh_sweep(&args),
        Command::QuantumCompare(args) => run_quantum_compare(&args),
        Command::Malus(args) => run_malus(&args),
        Command::EventDiag(args) => run_event_diag(&args),
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    schema: &'static str,
    command: &'static str,
    seed: u64,
    samples: u32,
    tolerance: Option<f64>,
    checks: &'a [crate::verify::CheckRow],
    all_passed: bool,
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    if args.list {
        let mut out = String::new();
        for spec in registry() {
            out.push_str(&format!(
                "{:<32} {:<9} tol={:<8} {}\n",
                spec.name,
                spec.requirement,
                fmt_f64(spec.default_tol),
                spec.summary
            ));
        }
        write_output(&out, args.output.out.as_deref())?;
        return Ok(ExitCode::SUCCESS);
    }

    let result = run_suite(args.seed, args.samples, args.tolerance);
    let content = match args.output.format {
        Format::Json => to_json(&VerifyOutput {
            schema: SCHEMA,
            command: "verify",
            seed: args.seed,
            samples: args.samples,
            tolerance: args.tolerance,
            checks: &result.checks,
            all_passed: result.all_passed,
        }),
        Format::Csv => verify_csv(&result),
        Format::Text => verify_text(args, &result),
    };
    write_output(&content, args.output.out.as_deref())?;
    Ok(if result.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn verify_csv(result: &SuiteResult) -> String {
    let mut csv = Csv::new(&[
        "name",
        "requirement",
        "passed",
        "max_residual",
        "tolerance",
        "samples",
    ]);
    for row in &result.checks {
        csv.row(&[
            row.name.to_string(),
            row.requirement.to_string(),
            row.passed.to_string(),
            fmt_f64(row.max_residual),
            fmt_f64(row.tolerance),
            row.samples.to_string(),
        ]);
    }
    csv.finish()
}

fn verify_text(args: &VerifyArgs, result: &SuiteResult) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "verification suite  seed={} samples={} tolerance={}\n",
        args.seed,
        args.samples,
        args.tolerance
            .map_or_else(|| "per-check".to_string(), fmt_f64),
    ));
    for row in &result.checks {
        out.push_str(&format!(
            "{} {:<32} {:<9} residual={:<24} tol={:<8} samples={}\n",
            if row.passed { "PASS" } else { "FAIL" },
            row.name,
            row.requirement,
            fmt_f64(row.max_residual),
            fmt_f64(row.tolerance),
            row.samples,
        ));
    }
    let passed = result.checks.iter().filter(|r| r.passed).count();
    out.push_str(&format!(
        "{passed}/{} passed in {:.3}s\n",
        result.checks.len(),
        result.elapsed.as_secs_f64()
    ));
    out
}

#[derive(Serialize)]
struct SweepOutput<'a> {
    schema: &'static str,
    command: &'static str,
    plane: Plane,
    step_rad: f64,
    rows: &'a [SweepRow],
    summary: &'a SweepSummary,
}

fn run_chsh_sweep(args: &SweepArgs) -> Result<ExitCode, CliError> {
    let rho = EnsembleMeasure::balanced();
    let sweep = chsh_sweep(args.plane, args.step, &rho)?;
    let content = match args.output.format {
        Format::Json => to_json(&SweepOutput {
            schema: SCHEMA,
            command: "chsh-sweep",
            plane: sweep.plane,
            step_rad: sweep.step_rad,
            rows: &sweep.rows,
            summary: &sweep.summary,
        }),
        Format::Csv => sweep_csv(&sweep),
        Format::Text => sweep_text(&sweep),
    };
    write_output(&content, args.output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn sweep_csv(sweep: &ChshSweep) -> String {
    let mut header: Vec<String> = vec![
        "b_rad".into(),
        "b_prime_rad".into(),
        "chsh_value".into(),
        "model_bound".into(),
    ];
    header.extend(multivector_header("f2_exact_avg"));
    header.push("f2_paper_avg".into());
    header.extend(multivector_header("residual"));
    for k in 0..4 {
        header.push(format!("cross_comm_norm_{k}"));
    }
    header.push("variance_check".into());
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();

    let mut csv = Csv::new(&header_refs);
    for row in &sweep.rows {
        let mut fields = vec![
            fmt_f64(row.b_rad),
            fmt_f64(row.b_prime_rad),
            fmt_f64(row.report.chsh_value),
            fmt_f64(row.report.model_bound),
        ];
        fields.extend(multivector_fields(row.report.f2_exact_avg.coeffs()));
        fields.push(fmt_f64(row.report.f2_paper_avg));
        fields.extend(multivector_fields(row.report.residual.coeffs()));
        fields.extend(row.report.cross_comm_norms.iter().map(|x| fmt_f64(*x)));
        fields.push(row.report.variance_check.to_string());
        csv.row(&fields);
    }
    csv.finish()
}

fn sweep_text(sweep: &ChshSweep) -> String {
    let s = &sweep.summary;
    format!(
        "chsh sweep  plane={} step_rad={} rows={}\n\
         max |chsh| = {} at b_rad={} b_prime_rad={} (a_rad={} a_prime_rad={})\n",
        sweep.plane.as_str(),
        fmt_f64(sweep.step_rad),
        sweep.rows.len(),
        fmt_f64(s.max_abs_chsh),
        fmt_f64(s.at_b_rad),
        fmt_f64(s.at_b_prime_rad),
        fmt_f64(s.a_rad),
        fmt_f64(s.a_prime_rad),
    )
}

#[derive(Serialize)]
struct CompareRow {
    b_rad: f64,
    b_prime_rad: f64,
    e_model: f64,
    e_quantum: f64,
    e_abs_diff: f64,
    chsh_model: f64,
    chsh_quantum: f64,
    chsh_abs_diff: f64,
    model_bound: f64,
    quantum_bound: f64,
    bound_abs_diff: f64,
    b2_expectation: f64,
    f2_exact_avg_scalar: f64,
    f2_paper_avg: f64,
    f2_scalar_diff: f64,
}

#[derive(Serialize)]
struct CompareSummary {
    max_e_abs_diff: f64,
    max_chsh_abs_diff: f64,
}

#[derive(Serialize)]
struct CompareOutput<'a> {
    schema: &'static str,
    command: &'static str,
    plane: Plane,
    step_rad: f64,
    rows: &'a [CompareRow],
    summary: &'a CompareSummary,
}

fn run_quantum_compare(args: &SweepArgs) -> Result<ExitCode, CliError> {
    let rho = EnsembleMeasure::balanced();
    let angles = angle_grid(args.step)?;
    let a = args.plane.direction(0.0);

    let mut rows = Vec::with_capacity(angles.len() * angles.len());
    for &b_rad in &angles {
        let b_dir = args.plane.direction(b_rad);
        let e_model = correlation(a, b_dir, &rho);
        let e_quantum = singlet_correlation(a, b_dir);
        for &b_prime_rad in &angles {
            let cfg = ChshConfig::coplanar(args.plane, b_rad, b_prime_rad);
            let chsh_model = chsh_value(&cfg, &rho);
            let chsh_quantum =
                singlet_expectation(&bell_operator(&cfg)).map_err(|e| e.to_string())?;
            let qm = qm_chsh_bound(&cfg);
            let bound_model = model_bound(&cfg);
            let f2_exact_avg_scalar = rho
                .average(|mu| crate::chsh::f_squared_exact(&cfg, mu))
                .scalar_part();
            let f2_paper_avg = crate::epr::scalar_only(
                rho.average(|mu| crate::chsh::f_squared_paper_decomposition(&cfg, mu)),
                crate::chsh::SCALAR_CUTOFF,
            );
            rows.push(CompareRow {
                b_rad,
                b_prime_rad,
                e_model,
                e_quantum,
                e_abs_diff: (e_model - e_quantum).abs(),
                chsh_model,
                chsh_quantum,
                chsh_abs_diff: (chsh_model - chsh_quantum).abs(),
                model_bound: bound_model,
                quantum_bound: qm.bound,
                bound_abs_diff: (bound_model - qm.bound).abs(),
                b2_expectation: qm.b_squared_expectation,
                f2_exact_avg_scalar,
                f2_paper_avg,
                f2_scalar_diff: f2_exact_avg_scalar - f2_paper_avg,
            });
        }
    }
    let summary = CompareSummary {
        max_e_abs_diff: rows.iter().map(|r| r.e_abs_diff).fold(0.0, f64::max),
        max_chsh_abs_diff: rows.iter().map(|r| r.chsh_abs_diff).fold(0.0, f64::max),
    };

    let content = match args.output.format {
        Format::Json => to_json(&CompareOutput {
            schema: SCHEMA,
            command: "quantum-compare",
            plane: args.plane,
            step_rad: args.step,
            rows: &rows,
            summary: &summary,
        }),
        Format::Csv => compare_csv(&rows),
        Format::Text => format!(
            "quantum compare  plane={} step_rad={} rows={}\n\
             max |E_model - E_quantum| = {}\n\
             max |chsh_model - chsh_quantum| = {}\n",
            args.plane.as_str(),
            fmt_f64(args.step),
            rows.len(),
            fmt_f64(summary.max_e_abs_diff),
            fmt_f64(summary.max_chsh_abs_diff),
        ),
    };
    write_output(&content, args.output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn compare_csv(rows: &[CompareRow]) -> String {
    let mut csv = Csv::new(&[
        "b_rad",
        "b_prime_rad",
        "e_model",
        "e_quantum",
        "e_abs_diff",
        "chsh_model",
        "chsh_quantum",
        "chsh_abs_diff",
        "model_bound",
        "quantum_bound",
        "bound_abs_diff",
        "b2_expectation",
        "f2_exact_avg_scalar",
        "f2_paper_avg",
        "f2_scalar_diff",
    ]);
    for r in rows {
        csv.row(&[
            fmt_f64(r.b_rad),
            fmt_f64(r.b_prime_rad),
            fmt_f64(r.e_model),
            fmt_f64(r.e_quantum),
            fmt_f64(r.e_abs_diff),
            fmt_f64(r.chsh_model),
            fmt_f64(r.chsh_quantum),
            fmt_f64(r.chsh_abs_diff),
            fmt_f64(r.model_bound),
            fmt_f64(r.quantum_bound),
            fmt_f64(r.bound_abs_diff),
            fmt_f64(r.b2_expectation),
            fmt_f64(r.f2_exact_avg_scalar),
            fmt_f64(r.f2_paper_avg),
            fmt_f64(r.f2_scalar_diff),
        ]);
    }
    csv.finish()
}

#[derive(Serialize)]
struct MalusStep {
    analyzer_rad: f64,
    polarizer_rad: f64,
    model_expectation: f64,
    quantum_expectation: f64,
    abs_diff: f64,
}

#[derive(Serialize)]
struct MalusOutput<'a> {
    schema: &'static str,
    command: &'static str,
    plane: Plane,
    chain_rad: &'a [f64],
    steps: &'a [MalusStep],
    cumulative_product: f64,
}

/// Quantum prediction for one cascade stage: the outcome-product expectation
/// of an analyzer following a polarizer, `tr(σ·a (𝟙 + σ·p)/2) = a·p`.
fn quantum_stage_expectation(
    analyzer: crate::ga::Direction,
    polarizer: crate::ga::Direction,
) -> f64 {
    let projector = ComplexMatrix::identity(2)
        .add(&pauli_projection(polarizer))
        .scale(num_complex::Complex64::new(0.5, 0.0));
    pauli_projection(analyzer).mul(&projector).trace().re
}

fn run_malus(args: &MalusArgs) -> Result<ExitCode, CliError> {
    let rho = EnsembleMeasure::balanced();
    let mut steps = Vec::with_capacity(args.chain.len());
    let mut polarizer_rad = 0.0_f64;
    let mut prep = Preparation::new(args.plane.direction(0.0), 1)?;
    let mut cumulative_product = 1.0_f64;
    for &increment in &args.chain {
        let analyzer_rad = polarizer_rad + increment;
        let analyzer = args.plane.direction(analyzer_rad);
        let model_expectation = malus_expectation(analyzer, &prep, &rho);
        let quantum_expectation = quantum_stage_expectation(analyzer, prep.p);
        steps.push(MalusStep {
            analyzer_rad,
            polarizer_rad,
            model_expectation,
            quantum_expectation,
            abs_diff: (model_expectation - quantum_expectation).abs(),
        });
        cumulative_product *= model_expectation;
        prep = Preparation {
            p: analyzer,
            s: prep.s,
        };
        polarizer_rad = analyzer_rad;
    }

    let content = match args.output.format {
        Format::Json => to_json(&MalusOutput {
            schema: SCHEMA,
            command: "malus",
            plane: args.plane,
            chain_rad: &args.chain,
            steps: &steps,
            cumulative_product,
        }),
        Format::Csv => {
            let mut csv = Csv::new(&[
                "analyzer_rad",
                "polarizer_rad",
                "model_expectation",
                "quantum_expectation",
                "abs_diff",
            ]);
            for s in &steps {
                csv.row(&[
                    fmt_f64(s.analyzer_rad),
                    fmt_f64(s.polarizer_rad),
                    fmt_f64(s.model_expectation),
                    fmt_f64(s.quantum_expectation),
                    fmt_f64(s.abs_diff),
                ]);
            }
            csv.finish()
        }
        Format::Text => {
            let mut out = format!(
                "sequential analyzers  plane={} stages={}\n",
                args.plane.as_str(),
                steps.len()
            );
            for s in &steps {
                out.push_str(&format!(
                    "analyzer_rad={} polarizer_rad={} model={} quantum={} diff={}\n",
                    fmt_f64(s.analyzer_rad),
                    fmt_f64(s.polarizer_rad),
                    fmt_f64(s.model_expectation),
                    fmt_f64(s.quantum_expectation),
                    fmt_f64(s.abs_diff),
                ));
            }
            out.push_str(&format!(
                "cumulative product = {}\n",
                fmt_f64(cumulative_product)
            ));
            out
        }
    };
    write_output(&content, args.output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct EventRow {
    theta_rad: f64,
    event_correlation: f64,
    algebraic_correlation: f64,
}

#[derive(Serialize)]
struct EventOutput<'a> {
    schema: &'static str,
    command: &'static str,
    step_rad: f64,
    rows: &'a [EventRow],
    note: &'static str,
}

const EVENT_NOTE: &str = "event_correlation enumerates the two-point readout product and is \
identically 1; algebraic_correlation is the scalar part of the averaged joint observable, \
-cos(theta). The two prescriptions answer different questions; this output juxtaposes them \
without asserting agreement.";

fn run_event_diag(args: &EventDiagArgs) -> Result<ExitCode, CliError> {
    let rho = EnsembleMeasure::balanced();
    let angles = angle_grid(args.step)?;
    let a = Plane::Xy.direction(0.0);
    let rows: Vec<EventRow> = angles
        .iter()
        .map(|&theta_rad| {
            let b = Plane::Xy.direction(theta_rad);
            EventRow {
                theta_rad,
                event_correlation: event_level_correlation(a, b, &rho),
                algebraic_correlation: correlation(a, b, &rho),
            }
        })
        .collect();

    let content = match args.output.format {
        Format::Json => to_json(&EventOutput {
            schema: SCHEMA,
            command: "event-diag",
            step_rad: args.step,
            rows: &rows,
            note: EVENT_NOTE,
        }),
        Format::Csv => {
            let mut csv = Csv::new(&["theta_rad", "event_correlation", "algebraic_correlation"]);
            for r in &rows {
                csv.row(&[
                    fmt_f64(r.theta_rad),
                    fmt_f64(r.event_correlation),
                    fmt_f64(r.algebraic_correlation),
                ]);
            }
            csv.finish()
        }
        Format::Text => {
            let mut out = format!(
                "event diagnostic  step_rad={} rows={}\n",
                fmt_f64(args.step),
                rows.len()
            );
            for r in &rows {
                out.push_str(&format!(
                    "theta_rad={} event={} algebraic={}\n",
                    fmt_f64(r.theta_rad),
                    fmt_f64(r.event_correlation),
                    fmt_f64(r.algebraic_correlation),
                ));
            }
            out.push_str(EVENT_NOTE);
            out.push('\n');
            out
        }
    };
    write_output(&content, args.output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}
