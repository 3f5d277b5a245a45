//! Command-line interface.
//!
//! Exit codes: 0 success, 1 coefficient mismatch, 2 internal integrity
//! failure, 64 usage error, 74 I/O error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rrcrystal_core::rootsystem::{affine_config, level_one, principal};
use rrcrystal_core::{
    difference_matrix, normalized_character_series, product_side_series, productside, AffineType,
    SumSideModel,
};

use crate::check::{run_check, CheckReport, Verdict};
use crate::format::{self, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INTEGRITY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "rrcrystal",
    version,
    about = "Perfect crystals, difference matrices and partition identities for the exceptional affine types"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Difference matrix F(b' (x) b) in canonical order.
    Matrix(Common),
    /// Colors grouped by their congruence class mod ht(delta).
    Ccon(Common),
    /// Forbidden initial parts.
    Icon(Common),
    /// d(0..=max), counted from the partition model.
    Sum(Series),
    /// c(0..=max), expanded from the Euler product.
    Product(Series),
    /// Specialisations of the dual denominator and the normalised character.
    Specialize(Series),
    /// Compare c(p), d(p) and the published coefficients.
    Check(CheckArgs),
}

fn parse_type(s: &str) -> Result<AffineType, String> {
    AffineType::from_tag(s).ok_or_else(|| {
        let known: Vec<_> = AffineType::ALL.iter().map(|t| t.tag()).collect();
        format!("unknown type `{s}` (expected one of {})", known.join(", "))
    })
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long = "type", value_parser = parse_type)]
    affine_type: AffineType,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct Series {
    #[arg(long = "type", value_parser = parse_type)]
    affine_type: AffineType,
    /// Highest degree to compute.
    #[arg(long, default_value_t = 60)]
    max: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long = "type", value_parser = parse_type, required_unless_present = "all", conflicts_with = "all")]
    affine_type: Option<AffineType>,
    /// Check all seven types, one thread per type.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    max: u64,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] rrcrystal_core::Error),
    #[error("cannot write {target}: {source}")]
    Io {
        target: String,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) => EXIT_INTEGRITY,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

fn emit(output: &Output, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            target: path.display().to_string(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                target: "standard output".into(),
                source,
            }),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Matrix(a) => {
            let m = difference_matrix(a.affine_type)?;
            emit(&a.output, &format::matrix(&m, a.output.format), stdout)?;
        }
        Command::Ccon(a) => {
            let model = SumSideModel::new(a.affine_type)?;
            let text = format::congruence_table(
                a.affine_type,
                model.ht_delta(),
                &model.congruence_table(),
                a.output.format,
            );
            emit(&a.output, &text, stdout)?;
        }
        Command::Icon(a) => {
            let model = SumSideModel::new(a.affine_type)?;
            let text = format::colored_parts(&model.positive_forbidden_parts(), a.output.format);
            emit(&a.output, &text, stdout)?;
        }
        Command::Sum(a) => {
            let d = SumSideModel::new(a.affine_type)?.count_d_series(a.max)?;
            emit(&a.output, &format::series(&d, a.output.format), stdout)?;
        }
        Command::Product(a) => {
            let c = product_side_series(a.affine_type, a.max)?;
            emit(
                &a.output,
                &format::series(c.coeffs(), a.output.format),
                stdout,
            )?;
        }
        Command::Specialize(a) => {
            let dual = affine_config(a.affine_type).dual;
            let dual_config = affine_config(dual);
            let f1 = productside::specialized_d(dual, &principal(&dual_config), a.max)?;
            let f2 = productside::specialized_d(dual, &level_one(&dual_config), a.max)?;
            let ch = normalized_character_series(a.affine_type, a.max)?;
            let text = format::series_table(
                &[
                    ("f1_dual", f1.coeffs()),
                    ("f2_dual", f2.coeffs()),
                    ("character", ch.coeffs()),
                ],
                a.output.format,
            );
            emit(&a.output, &text, stdout)?;
        }
        Command::Check(a) => return check(a, stdout, stderr),
    }
    Ok(EXIT_OK)
}

fn verdict_line(r: &CheckReport) -> String {
    match r.verdict {
        Verdict::Pass => format!(
            "PASS {} c(p) = d(p) for p <= {}{}",
            r.affine_type,
            r.p_max,
            if r.reference.is_some() {
                ", matches reference"
            } else {
                ""
            }
        ),
        Verdict::Fail { first_mismatch: p } => format!(
            "FAIL {} first mismatch at p = {p}: c = {}, d = {}{}",
            r.affine_type,
            r.c[p],
            r.d[p],
            r.reference
                .as_ref()
                .map(|v| format!(", reference = {}", v[p]))
                .unwrap_or_default()
        ),
    }
}

fn check(a: CheckArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let p_max = usize::try_from(a.max).map_err(|_| rrcrystal_core::Error::Overflow)?;
    let reports: Vec<CheckReport> = match a.affine_type {
        Some(t) if !a.all => vec![run_check(t, p_max)?],
        _ => std::thread::scope(|s| {
            let handles: Vec<_> = AffineType::ALL
                .iter()
                .map(|&t| s.spawn(move || run_check(t, p_max)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("check thread panicked"))
                .collect::<Result<Vec<_>, _>>()
        })?,
    };
    let text = if reports.len() == 1 {
        format::check_report(&reports[0], a.output.format)
    } else {
        summary(&reports, a.output.format)
    };
    emit(&a.output, &text, stdout)?;
    for r in &reports {
        let _ = writeln!(stderr, "{}", verdict_line(r));
    }
    Ok(if reports.iter().all(CheckReport::passed) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn summary(reports: &[CheckReport], fmt: Format) -> String {
    let row = |r: &CheckReport| {
        let (status, at) = match r.verdict {
            Verdict::Pass => ("pass", String::new()),
            Verdict::Fail { first_mismatch } => ("fail", first_mismatch.to_string()),
        };
        [
            r.affine_type.clone(),
            r.p_max.to_string(),
            r.d[r.p_max].to_string(),
            status.to_string(),
            at,
        ]
    };
    let mut out = String::new();
    match fmt {
        Format::Csv => {
            out.push_str("type,p_max,d_at_p_max,status,first_mismatch\n");
            for r in reports {
                let _ = writeln!(out, "{}", row(r).join(","));
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(reports).expect("plain data serialises");
            out.push('\n');
        }
        Format::Md => {
            out.push_str("| type | p_max | d(p_max) | status | first mismatch |\n");
            out.push_str("| --- | --- | --- | --- | --- |\n");
            for r in reports {
                let _ = writeln!(out, "| {} |", row(r).join(" | "));
            }
        }
    }
    out
}
