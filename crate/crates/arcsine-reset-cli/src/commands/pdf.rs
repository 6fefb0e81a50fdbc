//! `pdf`: tabulate a density over interior points of the time window.
//!
//! `--law T` and `--law L` need a rate; `--law Tk` conditions on a reset
//! count instead and rejects a rate. Points come either from explicit `--t`
//! values or from `--grid N`, which places N evenly spaced interior points.

use arcsine_reset::laws::{last_zero, occupation, ResetModel};
use serde::Serialize;

use crate::args::{Law, PdfArgs};
use crate::config::{pick, require, scalar_rate, FileConfig};
use crate::error::{CliError, Result};
use crate::output::{fmt_float, OutputOpts};

#[derive(Serialize)]
struct PdfReport {
    law: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    rate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    rows: Vec<PdfRow>,
}

#[derive(Serialize)]
struct PdfRow {
    t: f64,
    density: f64,
}

pub fn run(args: &PdfArgs, cfg: &FileConfig, io: &OutputOpts) -> Result<()> {
    let law = require(pick(args.law, cfg.law()?), "law")?;
    let points = resolve_points(args, cfg)?;

    // Contradiction checks look at explicit flags only: a config file is a
    // pool of defaults, and entries the resolved law has no use for are
    // simply left unused.
    let mut rate = None;
    let mut k = None;
    let density: Box<dyn Fn(f64) -> arcsine_reset::Result<f64>> = match law {
        Law::T | Law::L => {
            if args.k.is_some() {
                return Err(CliError::usage(format!(
                    "--k only applies to law Tk, not law {}",
                    law.name()
                )));
            }
            let r = require(scalar_rate(args.r, cfg.r.as_ref(), "pdf")?, "r")?;
            let model = ResetModel::new(r)?;
            rate = Some(r);
            if law == Law::T {
                Box::new(move |t| occupation::pdf(t, model))
            } else {
                Box::new(move |t| last_zero::pdf(t, model))
            }
        }
        Law::Tk => {
            if args.r.is_some() {
                return Err(CliError::usage(
                    "law Tk conditions on --k resets; --r does not apply",
                ));
            }
            let count = require(pick(args.k, cfg.k), "k")?;
            k = Some(count);
            Box::new(move |t| occupation::pdf_given_k(t, count))
        }
    };

    let mut rows = Vec::with_capacity(points.len());
    for &t in &points {
        rows.push(PdfRow {
            t,
            density: density(t)?,
        });
    }

    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|row| vec![fmt_float(row.t), fmt_float(row.density)])
        .collect();
    let payload = PdfReport {
        law: law.name(),
        rate,
        k,
        rows,
    };
    io.emit_table(&[], &["t", "density"], &csv_rows, &payload)
}

fn resolve_points(args: &PdfArgs, cfg: &FileConfig) -> Result<Vec<f64>> {
    let explicit = pick(args.t.clone(), cfg.t.clone());
    let grid = pick(args.grid, cfg.grid);
    match (explicit, grid) {
        (Some(ts), _) if !ts.is_empty() => Ok(ts),
        (Some(_), _) => Err(CliError::usage("--t needs at least one value")),
        (None, Some(n)) if n >= 1 => {
            let denom = n as f64 + 1.0;
            Ok((1..=n).map(|i| i as f64 / denom).collect())
        }
        (None, Some(_)) => Err(CliError::usage("--grid must be at least 1")),
        (None, None) => Err(CliError::usage(
            "supply evaluation points: --t v1,v2,... or --grid N",
        )),
    }
}
