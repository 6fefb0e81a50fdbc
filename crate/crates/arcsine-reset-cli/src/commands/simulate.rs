//! `simulate`: draw a seeded ensemble and emit it as one row per sample.
//!
//! The path method integrates trajectories and can report any functional
//! (`all` adds the realized reset count as a provenance column). The
//! composition method draws the occupation fraction or the last zero
//! exactly, without a grid, so it rejects the argmax time and `--dt`.

use arcsine_reset::sampling::{
    last_zero_composition_ensemble, occupation_composition_ensemble, run_ensemble_budgeted,
    PathGrid,
};
use arcsine_reset::ResetModel;
use serde::Serialize;

use crate::args::{Functional, Method, SimulateArgs};
use crate::commands::{step_budget, DEFAULT_ENSEMBLE_SIZE, DEFAULT_SEED, DEFAULT_TIME_STEP};
use crate::config::{pick, require, scalar_rate, FileConfig};
use crate::error::{CliError, Result};
use crate::output::{fmt_float, OutputOpts};

#[derive(Serialize)]
struct SimulateReport {
    functional: &'static str,
    method: &'static str,
    rate: f64,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    dt: Option<f64>,
    seed: u64,
    rows: Vec<SimRow>,
}

#[derive(Serialize)]
struct SimRow {
    index: usize,
    #[serde(rename = "T", skip_serializing_if = "Option::is_none")]
    t: Option<f64>,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    l: Option<f64>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    m: Option<f64>,
    #[serde(rename = "k", skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
}

pub fn run(args: &SimulateArgs, cfg: &FileConfig, io: &OutputOpts) -> Result<()> {
    let functional = require(pick(args.functional, cfg.functional()?), "functional")?;
    let method = pick(args.method, cfg.method()?).unwrap_or(Method::Path);
    let rate = require(scalar_rate(args.r, cfg.r.as_ref(), "simulate")?, "r")?;
    let n = pick(args.n, cfg.n).unwrap_or(DEFAULT_ENSEMBLE_SIZE);
    let dt_given = pick(args.dt, cfg.dt);
    let seed = pick(args.seed, cfg.seed).unwrap_or(DEFAULT_SEED);
    let model = ResetModel::new(rate)?;

    let (rows, dt_used) = match method {
        Method::Composition => {
            // Only an explicit flag is a contradiction; a config-file dt is
            // an unused default here.
            if args.dt.is_some() {
                return Err(CliError::usage(
                    "the composition method draws exact values; --dt does not apply",
                ));
            }
            let values = match functional {
                Functional::T => occupation_composition_ensemble(model, n, seed)?,
                Functional::L => last_zero_composition_ensemble(model, n, seed)?,
                Functional::M | Functional::All => {
                    return Err(CliError::usage(
                        "the composition method cannot produce the argmax time; \
                         use --method path",
                    ));
                }
            };
            let rows: Vec<SimRow> = values
                .iter()
                .enumerate()
                .map(|(index, &v)| SimRow {
                    index,
                    t: (functional == Functional::T).then_some(v),
                    l: (functional == Functional::L).then_some(v),
                    m: None,
                    k: None,
                })
                .collect();
            (rows, None)
        }
        Method::Path => {
            let dt = dt_given.unwrap_or(DEFAULT_TIME_STEP);
            let grid = PathGrid::new(dt)?;
            let ensemble = run_ensemble_budgeted(model, grid, n, seed, step_budget()?)?;
            let rows = ensemble
                .samples
                .iter()
                .enumerate()
                .map(|(index, s)| SimRow {
                    index,
                    t: matches!(functional, Functional::T | Functional::All)
                        .then_some(s.t_occupation),
                    l: matches!(functional, Functional::L | Functional::All)
                        .then_some(s.t_last_zero),
                    m: matches!(functional, Functional::M | Functional::All)
                        .then_some(s.t_argmax),
                    k: (functional == Functional::All).then_some(s.reset_count),
                })
                .collect();
            (rows, Some(dt))
        }
    };

    let mut header = vec!["index"];
    for (flag, name) in [
        (rows.first().is_some_and(|r| r.t.is_some()), "T"),
        (rows.first().is_some_and(|r| r.l.is_some()), "L"),
        (rows.first().is_some_and(|r| r.m.is_some()), "M"),
        (rows.first().is_some_and(|r| r.k.is_some()), "k"),
    ] {
        if flag {
            header.push(name);
        }
    }
    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let mut cells = vec![row.index.to_string()];
            for v in [row.t, row.l, row.m] {
                if let Some(v) = v {
                    cells.push(fmt_float(v));
                }
            }
            if let Some(k) = row.k {
                cells.push(k.to_string());
            }
            cells
        })
        .collect();

    let comment = vec![format!(
        "simulate functional={} method={} r={} n={} dt={} seed={}",
        functional.name(),
        method.name(),
        fmt_float(rate),
        n,
        dt_used.map_or_else(|| "exact".to_string(), fmt_float),
        seed
    )];
    let payload = SimulateReport {
        functional: functional.name(),
        method: method.name(),
        rate,
        n,
        dt: dt_used,
        seed,
        rows,
    };
    io.emit_table(&comment, &header, &csv_rows, &payload)
}
