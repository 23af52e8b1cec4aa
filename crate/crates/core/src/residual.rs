//! Field-equation residuals of the closed-form ramped fields.
//!
//! On a uniform (x, t) grid the fields are sampled from
//! [`ramped_fields`](crate::model::ramped_fields) and the two curl relations
//!
//! ```text
//! ∂B/∂t + ∇×E = 0
//! (1/u₀²)∂E/∂t − ∇×B = 0
//! ```
//!
//! are evaluated with centered second-order differences at interior points.
//! Fields depend on x and t only, so `∇×F = (0, −∂ₓF_z, ∂ₓF_y)`. The per-point
//! value is the Euclidean norm of the residual vector; boundary points are
//! excluded.

use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{ramped_fields, ExternalField, FieldState, NeutronBeam};
use crate::table::{emit_csv, Table};

/// Uniform space-time grid, at least 3 points per axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    x_min: f64,
    x_max: f64,
    t_min: f64,
    t_max: f64,
    nx: usize,
    nt: usize,
}

impl GridSpec {
    pub fn new(
        x_min: f64,
        x_max: f64,
        t_min: f64,
        t_max: f64,
        nx: usize,
        nt: usize,
    ) -> Result<Self> {
        if nx < 3 || nt < 3 {
            return Err(Error::InvalidGrid(format!(
                "need at least 3 points per axis, got nx = {nx}, nt = {nt}"
            )));
        }
        let finite = [x_min, x_max, t_min, t_max].iter().all(|v| v.is_finite());
        if !finite || x_max <= x_min || t_max <= t_min {
            return Err(Error::InvalidGrid(format!(
                "need x_min < x_max and t_min < t_max, got x ∈ [{x_min}, {x_max}], t ∈ [{t_min}, {t_max}]"
            )));
        }
        let grid = GridSpec {
            x_min,
            x_max,
            t_min,
            t_max,
            nx,
            nt,
        };
        if !(grid.h_x() > 0.0 && grid.h_t() > 0.0) {
            return Err(Error::InvalidGrid("grid spacing underflows".into()));
        }
        Ok(grid)
    }

    /// The whole interaction region `[0, u₀τ] × [0, τ]`.
    pub fn interaction_region(
        beam: &NeutronBeam,
        ext: &ExternalField,
        nx: usize,
        nt: usize,
    ) -> Result<Self> {
        let tau = ext.ramp_time();
        GridSpec::new(0.0, beam.speed() * tau, 0.0, tau, nx, nt)
    }

    pub fn x_range(&self) -> (f64, f64) {
        (self.x_min, self.x_max)
    }

    pub fn t_range(&self) -> (f64, f64) {
        (self.t_min, self.t_max)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn nt(&self) -> usize {
        self.nt
    }

    pub fn h_x(&self) -> f64 {
        (self.x_max - self.x_min) / (self.nx - 1) as f64
    }

    pub fn h_t(&self) -> f64 {
        (self.t_max - self.t_min) / (self.nt - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.nx {
            self.x_max
        } else {
            self.x_min + i as f64 * self.h_x()
        }
    }

    pub fn t(&self, j: usize) -> f64 {
        if j + 1 == self.nt {
            self.t_max
        } else {
            self.t_min + j as f64 * self.h_t()
        }
    }

    /// Same extents with both spacings halved.
    pub fn refined(&self) -> Self {
        GridSpec {
            nx: 2 * self.nx - 1,
            nt: 2 * self.nt - 1,
            ..*self
        }
    }

    /// Same spacing and size, shifted in time.
    pub fn shifted_in_time(&self, dt: f64) -> Result<Self> {
        GridSpec::new(
            self.x_min,
            self.x_max,
            self.t_min + dt,
            self.t_max + dt,
            self.nx,
            self.nt,
        )
    }

    fn is_refinement_of(&self, coarse: &GridSpec) -> bool {
        self.x_min == coarse.x_min
            && self.x_max == coarse.x_max
            && self.t_min == coarse.t_min
            && self.t_max == coarse.t_max
            && self.nx - 1 == 2 * (coarse.nx - 1)
            && self.nt - 1 == 2 * (coarse.nt - 1)
    }
}

/// Residual max-norms and the interior residual grids.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub grid: GridSpec,
    /// External field magnitude the report was computed for.
    pub b_ext: f64,
    pub faraday_residual_max: f64,
    pub ampere_residual_max: f64,
    /// Interior points, x-major: index `(i − 1)·(nt − 2) + (j − 1)`.
    pub faraday: Vec<f64>,
    pub ampere: Vec<f64>,
    pub convergence_order_estimate: Option<f64>,
}

impl ResidualReport {
    /// Larger of the two max-norms.
    pub fn headline(&self) -> f64 {
        self.faraday_residual_max.max(self.ampere_residual_max)
    }

    /// `(x, t, faraday, ampere)` for every interior point.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64, f64, f64)> + '_ {
        let inner_t = self.grid.nt - 2;
        (1..self.grid.nx - 1).flat_map(move |i| {
            (1..self.grid.nt - 1).map(move |j| {
                let k = (i - 1) * inner_t + (j - 1);
                (
                    self.grid.x(i),
                    self.grid.t(j),
                    self.faraday[k],
                    self.ampere[k],
                )
            })
        })
    }

    pub fn to_table(&self) -> Table {
        let columns = ["x", "t", "faraday_residual", "ampere_residual"]
            .map(String::from)
            .to_vec();
        let rows = self.points().map(|(x, t, f, a)| vec![x, t, f, a]).collect();
        Table::from_rows(columns, rows).expect("four columns per row")
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        emit_csv(&self.to_table(), path)
    }
}

/// Discrete residuals of the ramped fields on `grid`.
///
/// The grid must lie inside the interaction region `0 ≤ x ≤ u₀τ`,
/// `0 ≤ t ≤ τ`.
pub fn residuals_closed_form(
    beam: &NeutronBeam,
    ext: &ExternalField,
    grid: &GridSpec,
) -> Result<ResidualReport> {
    let tau = ext.ramp_time();
    let x_limit = beam.speed() * tau;
    if grid.x_min < 0.0 || grid.x_max > x_limit || grid.t_min < 0.0 || grid.t_max > tau {
        return Err(Error::Domain(format!(
            "grid x ∈ [{}, {}], t ∈ [{}, {}] exceeds the interaction region x ∈ [0, {x_limit}], t ∈ [0, {tau}]",
            grid.x_min, grid.x_max, grid.t_min, grid.t_max
        )));
    }

    let (nx, nt) = (grid.nx, grid.nt);
    let samples: Vec<FieldState> = (0..nx)
        .into_par_iter()
        .flat_map_iter(|i| {
            let x = grid.x(i);
            (0..nt).map(move |j| ramped_fields(beam, ext, x, grid.t(j)))
        })
        .collect::<Result<_>>()?;
    let at = |i: usize, j: usize| &samples[i * nt + j];

    let two_hx = 2.0 * grid.h_x();
    let two_ht = 2.0 * grid.h_t();
    let inv_u2 = 1.0 / (beam.speed() * beam.speed());

    let (faraday, ampere): (Vec<f64>, Vec<f64>) = (1..nx - 1)
        .into_par_iter()
        .flat_map_iter(|i| {
            (1..nt - 1).map(move |j| {
                let (xp, xm) = (at(i + 1, j), at(i - 1, j));
                let (tp, tm) = (at(i, j + 1), at(i, j - 1));
                let dx_e = (xp.e - xm.e) * (1.0 / two_hx);
                let dx_b = (xp.b - xm.b) * (1.0 / two_hx);
                let dt_e = (tp.e - tm.e) * (1.0 / two_ht);
                let dt_b = (tp.b - tm.b) * (1.0 / two_ht);

                let far_y = dt_b.y - dx_e.z;
                let far_z = dt_b.z + dx_e.y;
                let amp_y = inv_u2 * dt_e.y + dx_b.z;
                let amp_z = inv_u2 * dt_e.z - dx_b.y;
                (far_y.hypot(far_z), amp_y.hypot(amp_z))
            })
        })
        .unzip();

    let max = |v: &[f64]| v.iter().copied().fold(0.0_f64, f64::max);
    Ok(ResidualReport {
        grid: *grid,
        b_ext: ext.magnitude(),
        faraday_residual_max: max(&faraday),
        ampere_residual_max: max(&ampere),
        faraday,
        ampere,
        convergence_order_estimate: None,
    })
}

/// Mean of `log₂(rₖ/rₖ₊₁)` over consecutive norms.
pub fn order_from_norms(norms: &[f64]) -> Result<f64> {
    if norms.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "need at least 2 residual norms, got {}",
            norms.len()
        )));
    }
    if let Some(bad) = norms.iter().find(|r| !(r.is_finite() && **r > 0.0)) {
        return Err(Error::InsufficientData(format!(
            "residual norm {bad} is not positive; the order is undefined"
        )));
    }
    let sum: f64 = norms.windows(2).map(|w| (w[0] / w[1]).log2()).sum();
    Ok(sum / (norms.len() - 1) as f64)
}

/// Observed convergence order of the headline residual over nested grids.
///
/// Every report must come from a zero external field, and each grid must
/// halve both spacings of the one before it.
pub fn estimate_convergence_order(reports: &[ResidualReport]) -> Result<f64> {
    if reports.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "need at least 2 reports on nested grids, got {}",
            reports.len()
        )));
    }
    if let Some(r) = reports.iter().find(|r| r.b_ext != 0.0) {
        return Err(Error::InsufficientData(format!(
            "convergence order is only defined for b_ext = 0, got b_ext = {}",
            r.b_ext
        )));
    }
    for pair in reports.windows(2) {
        let (coarse, fine) = (&pair[0].grid, &pair[1].grid);
        if !fine.is_refinement_of(coarse) {
            return Err(Error::NotNested(format!(
                "{}x{} on x ∈ {:?}, t ∈ {:?} does not refine {}x{} on x ∈ {:?}, t ∈ {:?}",
                fine.nx,
                fine.nt,
                fine.x_range(),
                fine.t_range(),
                coarse.nx,
                coarse.nt,
                coarse.x_range(),
                coarse.t_range()
            )));
        }
    }
    let norms: Vec<f64> = reports.iter().map(ResidualReport::headline).collect();
    order_from_norms(&norms)
}

/// Residual reports on `levels` successively refined grids starting at
/// `base`. With a zero external field the finest report carries the
/// observed convergence order.
pub fn refinement_study(
    beam: &NeutronBeam,
    ext: &ExternalField,
    base: &GridSpec,
    levels: usize,
) -> Result<Vec<ResidualReport>> {
    let mut grid = *base;
    let mut reports = Vec::with_capacity(levels);
    for _ in 0..levels.max(1) {
        reports.push(residuals_closed_form(beam, ext, &grid)?);
        grid = grid.refined();
    }
    if reports.len() >= 2 && ext.magnitude() == 0.0 {
        let order = estimate_convergence_order(&reports)?;
        if let Some(finest) = reports.last_mut() {
            finest.convergence_order_estimate = Some(order);
        }
    }
    Ok(reports)
}
