//! `moments`: closed-form moments over a rate grid. Law T yields central
//! moments (exactly zero for odd orders); law L yields raw moments of the
//! last zero, which start at order 1.

use arcsine_reset::laws::{last_zero, occupation, ResetModel};
use serde::Serialize;

use crate::args::{MomentLaw, MomentsArgs};
use crate::config::{pick, require, FileConfig};
use crate::error::{CliError, Result};
use crate::output::{fmt_float, OutputOpts};

#[derive(Serialize)]
struct MomentsReport {
    law: &'static str,
    rows: Vec<MomentRow>,
}

#[derive(Serialize)]
struct MomentRow {
    r: f64,
    order: u32,
    value: f64,
}

pub fn run(args: &MomentsArgs, cfg: &FileConfig, io: &OutputOpts) -> Result<()> {
    let law = require(pick(args.law, cfg.moment_law()?), "law")?;
    let rates = require(
        pick(args.r.clone(), cfg.r.as_ref().map(|r| r.to_vec())),
        "r",
    )?;
    if rates.is_empty() {
        return Err(CliError::usage("the rate list must not be empty"));
    }
    let orders = require(pick(args.orders.clone(), cfg.orders.clone()), "orders")?;
    if orders.is_empty() {
        return Err(CliError::usage("the orders list must not be empty"));
    }

    let mut rows = Vec::with_capacity(rates.len() * orders.len());
    for &r in &rates {
        let model = ResetModel::new(r)?;
        for &order in &orders {
            let value = match law {
                MomentLaw::T => occupation::central_moment(order, model)?,
                MomentLaw::L => last_zero::raw_moment(order, model)?,
            };
            rows.push(MomentRow { r, order, value });
        }
    }

    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            vec![
                fmt_float(row.r),
                row.order.to_string(),
                fmt_float(row.value),
            ]
        })
        .collect();
    let payload = MomentsReport {
        law: law.name(),
        rows,
    };
    io.emit_table(&[], &["r", "order", "value"], &csv_rows, &payload)
}
