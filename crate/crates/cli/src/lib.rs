//! Command-line front end for `theta-lambda`.
//!
//! [`run`] takes the argument vector and two writers so that the whole
//! binary can be exercised in-process from tests.

pub mod args;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use rayon::prelude::*;
use theta_lambda::{
    census_loci, dim_omega, e_coefficient, eulerian_defining_check, eulerian_polynomial,
    genus5_hyperelliptic_report, jacobian_reference_classes, prym_chern_mather_t0,
    prym_chern_mather_t_pos, verify_scale_invariance, CensusRow, CriterionInput, CurveCase,
    PrymLocus,
};

use args::{Cli, Command, CriterionArgs, Format, PrymChiArgs};
use report::*;

/// Adams factors used for the scale-invariance check of the criterion.
pub const SCALE_FACTORS: [i64; 4] = [1, 2, 3, 5];

#[derive(Debug)]
enum Failure {
    Domain(theta_lambda::Error),
    Io(String),
}

impl From<theta_lambda::Error> for Failure {
    fn from(e: theta_lambda::Error) -> Self {
        Failure::Domain(e)
    }
}

/// Runs the CLI. Returns 0 on success, 2 on argument errors and 1 when a
/// computation rejects its input.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    if !text.contains("Usage:") {
                        let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    }
                    2
                }
            };
        }
    };
    match execute(&cli).and_then(|body| emit(&cli, &body, out)) {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn emit(cli: &Cli, body: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => {
            fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => out
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn render<R: Report>(report: &R, format: Format) -> Result<String, Failure> {
    match format {
        Format::Text => Ok(report.text()),
        Format::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| Failure::Io(e.to_string())),
        Format::Csv => {
            let table = report.table();
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Io(e.to_string());
            w.write_record(&table.header).map_err(io)?;
            for row in &table.rows {
                w.write_record(row).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Eulerian { n, check } => render(
            &EulerianReport {
                n: *n,
                polynomial: eulerian_polynomial(*n),
                check: check.map(|order| IdentityCheck {
                    order,
                    holds: eulerian_defining_check(*n, order),
                }),
            },
            f,
        ),
        Command::Ecoef { n, g, k, index } => render(
            &EcoefReport {
                n: *n,
                g: *g,
                k: *k,
                index: index.clone(),
                value: e_coefficient(*n, *g, *k, index)?,
            },
            f,
        ),
        Command::JacobianClasses { g, case } => {
            let case = CurveCase::from(*case);
            let classes = jacobian_reference_classes(*g, case)?
                .into_iter()
                .enumerate()
                .map(|(r, class)| ClassEntry {
                    r,
                    multiplier: class.coeff(r),
                    class,
                })
                .collect();
            render(
                &JacobianClassesReport {
                    g: *g,
                    case: case.short_name().to_string(),
                    dim_omega: dim_omega(*g, case)?,
                    classes,
                },
                f,
            )
        }
        Command::Criterion(a) => render(&criterion(a)?, f),
        Command::PrymChi(a) => render(&prym_chi(a)?, f),
        Command::PrymClasses { g, t } => render(&prym_classes(*g, *t)?, f),
        Command::Genus5 => render(&genus5_hyperelliptic_report()?, f),
    }
}

fn criterion(a: &CriterionArgs) -> Result<CriterionReport, Failure> {
    let input = CriterionInput {
        g: a.g,
        case: a.case.into(),
        c0: a.c0.clone(),
        c1: a.c1.clone(),
        c2: a.c2.clone(),
        problematic_codim: a.codim,
    };
    let result = input.check()?;
    let scale_invariant = verify_scale_invariance(&input, &SCALE_FACTORS)?;
    Ok(CriterionReport {
        input,
        result,
        scale_factors: SCALE_FACTORS.to_vec(),
        scale_invariant,
    })
}

fn prym_chi(a: &PrymChiArgs) -> Result<PrymChiReport, Failure> {
    let loci = if a.sweep {
        let mut all = Vec::new();
        for g in 4..=a.g {
            all.extend(census_loci(g, a.k)?);
        }
        all
    } else if let Some(t) = a.t {
        vec![PrymLocus::e_prime(a.g, t, a.k)?]
    } else {
        let partition = a.partition.clone().unwrap_or_default();
        let locus = PrymLocus::s_cycle(partition, a.k)?;
        if locus.g() != a.g {
            return Err(theta_lambda::Error::InvalidLocus(format!(
                "partition {} sums to {}, not g = {}",
                locus.stratum_label(),
                locus.g(),
                a.g
            ))
            .into());
        }
        vec![locus]
    };
    // collect() on an indexed parallel iterator keeps the input order
    let rows = loci
        .into_par_iter()
        .map(CensusRow::for_locus)
        .collect::<theta_lambda::Result<Vec<_>>>()?;
    Ok(PrymChiReport { rows })
}

fn prym_classes(g: usize, t: usize) -> Result<PrymClassesReport, Failure> {
    PrymLocus::e_prime(g, t, 0)?;
    let classes = (1..g)
        .map(|r| {
            let class = if t == 0 {
                PrymClass::Theta(prym_chern_mather_t0(g, r)?)
            } else {
                PrymClass::BiTheta(prym_chern_mather_t_pos(g, t, r)?)
            };
            Ok(PrymClassEntry { r, class })
        })
        .collect::<theta_lambda::Result<Vec<_>>>()?;
    Ok(PrymClassesReport {
        g,
        t,
        convention: (t > 0).then(|| "B_{-1} = 0 at both ends of each sum".to_string()),
        classes,
    })
}
