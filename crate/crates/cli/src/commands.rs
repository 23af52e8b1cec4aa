use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use spinterf_core::interferometer::{
    orientation_grid, orientation_sweep, sweep_interferogram, write_orientation_csv,
};
use spinterf_core::model::{
    em_potential, em_potential_collapsed, kinetic_shift, phase_period, phase_shift, ramped_fields,
};
use spinterf_core::residual::{refinement_study, GridSpec};
use spinterf_core::sweep::{emit_svg_lineplot, execute_plan, PlotOptions, SweepPlan};
use spinterf_core::table::{emit_csv, format_f64};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::Format;

pub struct Context {
    pub config: RunConfig,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Context {
    fn out_dir(&self) -> PathBuf {
        self.out
            .clone()
            .or_else(|| self.config.output_dir.clone())
            .unwrap_or_else(|| {
                PathBuf::from(format!(
                    "spinterf-run-{}",
                    chrono::Utc::now().format("%Y%m%dT%H%M%SZ")
                ))
            })
    }

    /// Text mode prints shortest round-trip decimals, csv mode 17 digits.
    fn num(&self, v: f64) -> String {
        match self.format {
            Format::Text => format!("{v:?}"),
            Format::Csv => format_f64(v),
        }
    }

    /// Prints `name = value` lines in text mode or a header plus one row in
    /// csv mode.
    fn record(&self, out: &mut dyn Write, fields: &[(&str, String)]) -> Result<(), CliError> {
        match self.format {
            Format::Text => {
                for (name, value) in fields {
                    writeln!(out, "{name} = {value}")?;
                }
            }
            Format::Csv => {
                let names: Vec<&str> = fields.iter().map(|(n, _)| *n).collect();
                let values: Vec<&str> = fields.iter().map(|(_, v)| v.as_str()).collect();
                writeln!(out, "{}", names.join(","))?;
                writeln!(out, "{}", values.join(","))?;
            }
        }
        Ok(())
    }
}

fn report_written(out: &mut dyn Write, paths: &[PathBuf]) -> Result<(), CliError> {
    for p in paths {
        writeln!(out, "wrote {}", p.display())?;
    }
    Ok(())
}

pub fn fields(ctx: &Context, x: f64, t: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let (beam, ext) = ctx.config.build()?;
    let s = ramped_fields(&beam, &ext, x, t)?;
    match ctx.format {
        Format::Text => {
            writeln!(out, "x = {}", ctx.num(s.x))?;
            writeln!(out, "t = {}", ctx.num(s.t))?;
            writeln!(
                out,
                "E = ({}, {}, {})",
                ctx.num(s.e.x),
                ctx.num(s.e.y),
                ctx.num(s.e.z)
            )?;
            writeln!(
                out,
                "B = ({}, {}, {})",
                ctx.num(s.b.x),
                ctx.num(s.b.y),
                ctx.num(s.b.z)
            )?;
        }
        Format::Csv => ctx.record(
            out,
            &[
                ("x", ctx.num(s.x)),
                ("t", ctx.num(s.t)),
                ("e_x", ctx.num(s.e.x)),
                ("e_y", ctx.num(s.e.y)),
                ("e_z", ctx.num(s.e.z)),
                ("b_x", ctx.num(s.b.x)),
                ("b_y", ctx.num(s.b.y)),
                ("b_z", ctx.num(s.b.z)),
            ],
        )?,
    }
    Ok(())
}

pub fn potential(
    ctx: &Context,
    x: Option<f64>,
    t: Option<f64>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (beam, ext) = ctx.config.build()?;
    let t = t.unwrap_or(ext.ramp_time());
    let x = x.unwrap_or(beam.speed() * ext.ramp_time());
    let state = ramped_fields(&beam, &ext, x, t)?;
    let full = em_potential(&state, beam.speed())?;
    let collapsed = em_potential_collapsed(&beam, &ext, beam.phase_argument(x, t));
    let shift = kinetic_shift(&beam, &ext, ctx.config.mode);
    ctx.record(
        out,
        &[
            ("x", ctx.num(x)),
            ("t", ctx.num(t)),
            ("em_potential", ctx.num(full)),
            ("em_potential_collapsed", ctx.num(collapsed)),
            ("kinetic_shift", ctx.num(shift)),
        ],
    )
}

pub fn phase(ctx: &Context, out: &mut dyn Write) -> Result<(), CliError> {
    let (beam, ext) = ctx.config.build()?;
    let p = phase_shift(&beam, &ext);
    let period = phase_period(&beam, &ext, 1.0)?;
    ctx.record(
        out,
        &[
            ("delta_u", ctx.num(p.delta_u)),
            ("phase_raw", ctx.num(p.phase_raw)),
            ("wrap_count", p.wrap_count.to_string()),
            ("alpha", ctx.num(p.alpha)),
            ("period", ctx.num(period)),
        ],
    )
}

pub fn interferogram(
    ctx: &Context,
    b_min: f64,
    b_max: Option<f64>,
    count: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (beam, ext) = ctx.config.build()?;
    let period = phase_period(&beam, &ext, 1.0)?;
    let b_max = b_max.unwrap_or(b_min + 2.0 * period);
    let ig = sweep_interferogram(&beam, &ext, b_min, b_max, count)?;
    let dir = ctx.out_dir();
    let csv = dir.join("interferogram.csv");
    let svg = dir.join("interferogram.svg");
    let table = ig.to_table();
    emit_csv(&table, &csv)?;
    let plot = spinterf_core::table::Table::from_rows(
        vec!["b_ext".into(), "intensity".into()],
        ig.samples
            .iter()
            .map(|s| vec![s.b_ext, s.intensity])
            .collect(),
    )?;
    emit_svg_lineplot(
        &plot,
        &svg,
        "b_ext",
        None,
        &PlotOptions {
            title: Some("Interferogram".into()),
            ..PlotOptions::default()
        },
    )?;
    ctx.record(
        out,
        &[("period", ctx.num(period)), ("samples", count.to_string())],
    )?;
    report_written(out, &[csv, svg])
}

pub fn orientation(
    ctx: &Context,
    count: usize,
    theta_max: Option<f64>,
    moment: f64,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (beam, ext) = ctx.config.build()?;
    let thetas = orientation_grid(theta_max.unwrap_or(PI), count)?;
    let rows = orientation_sweep(&beam, &ext, &thetas, moment)?;
    let path = ctx.out_dir().join("orientation.csv");
    write_orientation_csv(&rows, &path)?;
    report_written(out, &[path])
}

pub struct GridArgs {
    pub nx: usize,
    pub nt: usize,
    pub x_min: Option<f64>,
    pub x_max: Option<f64>,
    pub t_min: Option<f64>,
    pub t_max: Option<f64>,
    pub levels: usize,
}

pub fn residuals(ctx: &Context, args: GridArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (beam, ext) = ctx.config.build()?;
    if args.levels == 0 {
        return Err(CliError::Config("--levels must be at least 1".into()));
    }
    let tau = ext.ramp_time();
    let grid = GridSpec::new(
        args.x_min.unwrap_or(0.0),
        args.x_max.unwrap_or(beam.speed() * tau),
        args.t_min.unwrap_or(0.0),
        args.t_max.unwrap_or(tau),
        args.nx,
        args.nt,
    )?;
    let reports = refinement_study(&beam, &ext, &grid, args.levels)?;
    let dir = ctx.out_dir();
    let mut written = Vec::new();
    for r in &reports {
        let path = dir.join(format!("residuals_{}x{}.csv", r.grid.nx(), r.grid.nt()));
        r.write_csv(&path)?;
        written.push(path);
    }
    let order = reports.last().and_then(|r| r.convergence_order_estimate);
    match ctx.format {
        Format::Text => {
            for r in &reports {
                writeln!(
                    out,
                    "{}x{}: faraday_max = {}, ampere_max = {}",
                    r.grid.nx(),
                    r.grid.nt(),
                    ctx.num(r.faraday_residual_max),
                    ctx.num(r.ampere_residual_max)
                )?;
            }
            if let Some(order) = order {
                writeln!(out, "convergence_order = {}", ctx.num(order))?;
            }
        }
        Format::Csv => {
            writeln!(out, "nx,nt,faraday_max,ampere_max,convergence_order")?;
            for (k, r) in reports.iter().enumerate() {
                let o = match order {
                    Some(o) if k + 1 == reports.len() => ctx.num(o),
                    _ => String::new(),
                };
                writeln!(
                    out,
                    "{},{},{},{},{o}",
                    r.grid.nx(),
                    r.grid.nt(),
                    ctx.num(r.faraday_residual_max),
                    ctx.num(r.ampere_residual_max)
                )?;
            }
        }
    }
    report_written(out, &written)
}

pub fn sweep(ctx: &Context, plan_path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let plan =
        SweepPlan::from_toml_file(plan_path, ctx.config.params, ctx.config.mode).map_err(|e| {
            match e {
                // a missing or unreadable plan is a usage error, not an output failure
                spinterf_core::Error::Io { .. } => CliError::Config(e.to_string()),
                other => CliError::from(other),
            }
        })?;
    let mut plan = plan;
    if plan.output.csv.is_none() {
        plan.output.csv = Some(PathBuf::from(format!("sweep_{}.csv", plan.quantity.name())));
    }
    let (table, written) = execute_plan(&plan, &ctx.out_dir())?;
    ctx.record(out, &[("rows", table.len().to_string())])?;
    report_written(out, &written)
}
