//! Plan-driven parameter sweeps with CSV and SVG output.
//!
//! A [`SweepPlan`] names one quantity and a list of linearly spaced axes.
//! [`run_plan`] evaluates the quantity over the Cartesian product of the
//! axes, first axis slowest, and returns a [`Table`] whose columns are the
//! swept parameter names followed by the quantity name.

mod plan;
mod svg;

use std::path::{Path, PathBuf};

use rayon::prelude::*;

pub use plan::{Axis, OutputSpec, Parameter, ParameterSet, Quantity, SweepPlan};
pub use svg::{emit_svg_lineplot, render_svg_lineplot, PlotOptions, MAX_SERIES};

use crate::error::{Error, Result};
use crate::interferometer::recombine_intensity;
use crate::model::{
    em_potential, em_potential_collapsed, kinetic_shift, phase_shift, ramped_fields, MediumMode,
};
use crate::table::{emit_csv, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

/// Evaluates `quantity` for one fully bound parameter set.
pub fn evaluate(quantity: Quantity, params: &ParameterSet, mode: MediumMode) -> Result<f64> {
    let (beam, ext) = params.build()?;
    let tau = ext.ramp_time();
    let x = beam.speed() * tau;
    Ok(match quantity {
        Quantity::EmPotential => em_potential(&ramped_fields(&beam, &ext, x, tau)?, beam.speed())?,
        Quantity::EmPotentialCollapsed => {
            em_potential_collapsed(&beam, &ext, beam.phase_argument(x, tau))
        }
        Quantity::KineticShift => kinetic_shift(&beam, &ext, mode),
        Quantity::Phase => phase_shift(&beam, &ext).phase_raw,
        Quantity::Alpha => phase_shift(&beam, &ext).alpha,
        Quantity::Intensity => recombine_intensity(phase_shift(&beam, &ext).alpha),
    })
}

/// Parameter values of grid point `index`, row-major over the axes.
fn grid_point(axes: &[(Parameter, Vec<f64>)], mut index: usize) -> Vec<(Parameter, f64)> {
    let mut point = vec![(Parameter::BExt, 0.0); axes.len()];
    for (slot, (p, values)) in point.iter_mut().zip(axes).rev() {
        *slot = (*p, values[index % values.len()]);
        index /= values.len();
    }
    point
}

pub fn run_plan(plan: &SweepPlan) -> Result<Table> {
    run_plan_with(plan, Execution::default())
}

pub fn run_plan_with(plan: &SweepPlan, execution: Execution) -> Result<Table> {
    let axes: Vec<(Parameter, Vec<f64>)> = plan
        .axes
        .iter()
        .map(|a| (a.parameter, a.values()))
        .collect();
    let eval_row = |index: usize| -> Result<Vec<f64>> {
        let point = grid_point(&axes, index);
        let mut params = plan.base;
        for &(p, v) in &point {
            params.set(p, v);
        }
        let value = evaluate(plan.quantity, &params, plan.mode)?;
        Ok(point
            .iter()
            .map(|&(_, v)| v)
            .chain(std::iter::once(value))
            .collect())
    };
    let n = plan.grid_size();
    let rows = match execution {
        Execution::Serial => (0..n).map(eval_row).collect::<Result<Vec<_>>>()?,
        Execution::Parallel => (0..n)
            .into_par_iter()
            .map(eval_row)
            .collect::<Result<Vec<_>>>()?,
    };
    let columns = plan
        .axes
        .iter()
        .map(|a| a.parameter.name().to_owned())
        .chain(std::iter::once(plan.quantity.name().to_owned()))
        .collect();
    Table::from_rows(columns, rows)
}

/// Runs `plan` and writes its outputs under `out_dir`. Returns the written
/// paths; relative output paths are resolved against `out_dir`. Nothing is
/// written unless evaluation and plot rendering both succeed.
pub fn execute_plan(plan: &SweepPlan, out_dir: &Path) -> Result<(Table, Vec<PathBuf>)> {
    let table = run_plan(plan)?;
    let resolve = |p: &Path| {
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            out_dir.join(p)
        }
    };
    let svg = match &plan.output.svg {
        Some(path) => {
            let x_axis = plan.output.x_axis.unwrap_or(plan.axes[0].parameter);
            let series = plan
                .output
                .series_axis
                .or_else(|| plan.axes.iter().map(|a| a.parameter).find(|&p| p != x_axis));
            let text = render_svg_lineplot(
                &table,
                x_axis.name(),
                series.map(Parameter::name),
                &PlotOptions::default(),
            )?;
            Some((resolve(path), text))
        }
        None => None,
    };
    let mut written = Vec::new();
    if let Some(csv) = &plan.output.csv {
        let path = resolve(csv);
        emit_csv(&table, &path)?;
        written.push(path);
    }
    if let Some((path, text)) = svg {
        write_text(&path, &text)?;
        written.push(path);
    }
    Ok((table, written))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    }
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}
