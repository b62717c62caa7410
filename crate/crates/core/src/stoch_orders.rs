//! Grid certification of stochastic orders between two unit-Gompertz laws.
//!
//! Each check evaluates the defining inequality of `X ≤ Y` on the interior
//! lattice `t_i = i/(N+1)`, `i = 1..N` (the `u`-lattice for quantile-based
//! orders). A passing report means "certified on the grid", not a proof.
//! Ratio orders are tested as monotonicity of log-differences, which stays
//! finite where both densities underflow.
//!
//! The increasing-convex variance order and the star-shaped order quantify
//! over whole function classes and have no finite grid certificate; they
//! are not offered here.

use std::fmt;
use std::str::FromStr;

use crate::dist::UnitGompertz;
use crate::error::{Error, Result};
use crate::oracle;

/// Smallest accepted lattice size.
pub const MIN_GRID: usize = 64;
/// Lattice size used by [`common_scale_suite`].
pub const DEFAULT_GRID: usize = 256;
/// Absolute slack on monotonicity steps and pointwise comparisons.
pub const MONOTONE_SLACK: f64 = 1e-10;
/// Extra relative slack for comparisons of integral-based quantities.
pub const INTEGRAL_REL_SLACK: f64 = 1e-8;
/// Quadrature tolerance for the harmonic-mean MRL integrals.
const HMRL_QUAD_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Usual stochastic order: `F_X ≥ F_Y`.
    St,
    /// Hazard rate: `F̄_X/F̄_Y` decreasing.
    Hr,
    /// Reversed hazard rate: `F_X/F_Y` decreasing.
    Rh,
    /// Likelihood ratio: `f_X/f_Y` decreasing.
    Lr,
    /// Mean residual life: `m_X ≤ m_Y`.
    Mrl,
    /// Harmonic mean residual life.
    Hmrl,
    /// Expected inactivity time: `I_X ≥ I_Y`.
    Eit,
    /// Increasing convex: `∫ₜ¹ F̄_X ≤ ∫ₜ¹ F̄_Y`.
    Icx,
    /// Increasing concave: `∫₀ᵗ F_X ≥ ∫₀ᵗ F_Y`.
    Icv,
    /// Dispersive: quantile spreads of `X` never exceed those of `Y`.
    Disp,
    /// Total time on test.
    Ttt,
}

impl OrderKind {
    pub const ALL: [OrderKind; 11] = [
        OrderKind::St,
        OrderKind::Hr,
        OrderKind::Rh,
        OrderKind::Lr,
        OrderKind::Mrl,
        OrderKind::Hmrl,
        OrderKind::Eit,
        OrderKind::Icx,
        OrderKind::Icv,
        OrderKind::Disp,
        OrderKind::Ttt,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            OrderKind::St => "st",
            OrderKind::Hr => "hr",
            OrderKind::Rh => "rh",
            OrderKind::Lr => "lr",
            OrderKind::Mrl => "mrl",
            OrderKind::Hmrl => "hmrl",
            OrderKind::Eit => "eit",
            OrderKind::Icx => "icx",
            OrderKind::Icv => "icv",
            OrderKind::Disp => "disp",
            OrderKind::Ttt => "ttt",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrderKind::ALL
            .iter()
            .copied()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown order kind {s:?}")))
    }
}

/// Where the defining inequality first failed. `lhs` should not exceed
/// `rhs` (for monotone checks: the later and earlier lattice values).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub at: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderReport {
    pub kind: OrderKind,
    pub holds: bool,
    pub first_violation: Option<Violation>,
    pub grid_size: usize,
    /// Lattice points dropped because the compared quantity was undefined
    /// there (0/0 in a ratio).
    pub skipped: usize,
}

impl fmt::Display for OrderReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.holds, self.first_violation) {
            (true, _) => write!(
                f,
                "{}: holds (certified on grid of {})",
                self.kind, self.grid_size
            ),
            (false, Some(v)) => write!(
                f,
                "{}: fails at t = {} ({} > {})",
                self.kind, v.at, v.lhs, v.rhs
            ),
            (false, None) => write!(f, "{}: fails", self.kind),
        }
    }
}

fn lattice(n: usize) -> Vec<f64> {
    (1..=n).map(|i| i as f64 / (n + 1) as f64).collect()
}

fn noise(a: f64, b: f64) -> f64 {
    4.0 * f64::EPSILON * a.abs().max(b.abs())
}

/// Checks that `values` is non-increasing along `grid`.
fn decreasing(grid: &[f64], values: &[f64]) -> (Option<Violation>, usize) {
    let mut skipped = 0;
    let mut prev: Option<f64> = None;
    for (&t, &v) in grid.iter().zip(values) {
        if !v.is_finite() {
            skipped += 1;
            continue;
        }
        if let Some(p) = prev {
            if v - p > MONOTONE_SLACK + noise(v, p) {
                return (
                    Some(Violation {
                        at: t,
                        lhs: v,
                        rhs: p,
                    }),
                    skipped,
                );
            }
        }
        prev = Some(v);
    }
    (None, skipped)
}

/// Checks `lhs_i ≤ rhs_i` at each lattice point.
fn dominated(grid: &[f64], lhs: &[f64], rhs: &[f64], rel: f64) -> (Option<Violation>, usize) {
    let mut skipped = 0;
    for ((&t, &l), &r) in grid.iter().zip(lhs).zip(rhs) {
        if !(l.is_finite() && r.is_finite()) {
            skipped += 1;
            continue;
        }
        let slack = MONOTONE_SLACK + rel * l.abs().max(r.abs()) + noise(l, r);
        if l > r + slack {
            return (
                Some(Violation {
                    at: t,
                    lhs: l,
                    rhs: r,
                }),
                skipped,
            );
        }
    }
    (None, skipped)
}

fn eval_all<F>(grid: &[f64], f: F) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    grid.iter().map(|&t| f(t)).collect()
}

fn differences<F, G>(grid: &[f64], fx: F, fy: G) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
    G: Fn(f64) -> Result<f64>,
{
    grid.iter().map(|&t| Ok(fx(t)? - fy(t)?)).collect()
}

/// `[(1/x) ∫₀ˣ du / m(u)]^{-1}` at each lattice point, accumulated cell by
/// cell.
fn harmonic_mrl(d: &UnitGompertz, grid: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(grid.len());
    let mut acc = 0.0;
    let mut lo = 0.0;
    for &x in grid {
        let cell = oracle::integrate(
            |u: f64| 1.0 / d.mrl(u).unwrap_or(f64::NAN),
            lo,
            x,
            HMRL_QUAD_TOL,
        )?;
        acc += cell.value;
        lo = x;
        out.push(x / acc);
    }
    Ok(out)
}

/// Certifies `X ≤_kind Y` on a lattice of `grid_size` interior points.
pub fn check_order(
    kind: OrderKind,
    x: &UnitGompertz,
    y: &UnitGompertz,
    grid_size: usize,
) -> Result<OrderReport> {
    if grid_size < MIN_GRID {
        return Err(Error::Precondition(format!(
            "grid_size must be at least {MIN_GRID}, got {grid_size}"
        )));
    }
    let grid = lattice(grid_size);
    let (violation, skipped) = match kind {
        OrderKind::St => {
            // F_Y ≤ F_X
            let fx = eval_all(&grid, |t| x.cdf(t))?;
            let fy = eval_all(&grid, |t| y.cdf(t))?;
            dominated(&grid, &fy, &fx, 0.0)
        }
        OrderKind::Hr => {
            let g = differences(&grid, |t| x.log_sf(t), |t| y.log_sf(t))?;
            decreasing(&grid, &g)
        }
        OrderKind::Rh => {
            let g = differences(&grid, |t| x.log_cdf(t), |t| y.log_cdf(t))?;
            decreasing(&grid, &g)
        }
        OrderKind::Lr => {
            let g = differences(&grid, |t| x.log_pdf(t), |t| y.log_pdf(t))?;
            decreasing(&grid, &g)
        }
        OrderKind::Mrl => {
            let mx = eval_all(&grid, |t| x.mrl(t))?;
            let my = eval_all(&grid, |t| y.mrl(t))?;
            dominated(&grid, &mx, &my, INTEGRAL_REL_SLACK)
        }
        OrderKind::Hmrl => {
            let hx = harmonic_mrl(x, &grid)?;
            let hy = harmonic_mrl(y, &grid)?;
            dominated(&grid, &hx, &hy, INTEGRAL_REL_SLACK)
        }
        OrderKind::Eit => {
            let ix = eval_all(&grid, |t| x.eit(t))?;
            let iy = eval_all(&grid, |t| y.eit(t))?;
            dominated(&grid, &iy, &ix, INTEGRAL_REL_SLACK)
        }
        OrderKind::Icx => {
            // ∫ₜ¹ F̄ = F̄(t)·m(t)
            let sx = eval_all(&grid, |t| Ok(x.sf(t)? * x.mrl(t)?))?;
            let sy = eval_all(&grid, |t| Ok(y.sf(t)? * y.mrl(t)?))?;
            dominated(&grid, &sx, &sy, INTEGRAL_REL_SLACK)
        }
        OrderKind::Icv => {
            // ∫₀ᵗ F = F(t)·I(t)
            let cx = eval_all(&grid, |t| Ok(x.cdf(t)? * x.eit(t)?))?;
            let cy = eval_all(&grid, |t| Ok(y.cdf(t)? * y.eit(t)?))?;
            dominated(&grid, &cy, &cx, INTEGRAL_REL_SLACK)
        }
        OrderKind::Disp => {
            // Q_X(u) − Q_Y(u) non-increasing ⇔ every quantile spread of X is
            // at most that of Y
            let g = differences(&grid, |u| x.quantile(u), |u| y.quantile(u))?;
            decreasing(&grid, &g)
        }
        OrderKind::Ttt => {
            // ∫₀^{q} F̄ = q − p·I(q) with q = F⁻¹(p)
            let ttt = |d: &UnitGompertz, p: f64| -> Result<f64> {
                let q = d.quantile(p)?;
                Ok(q - p * d.eit(q)?)
            };
            let tx = eval_all(&grid, |p| ttt(x, p))?;
            let ty = eval_all(&grid, |p| ttt(y, p))?;
            dominated(&grid, &tx, &ty, INTEGRAL_REL_SLACK)
        }
    };
    Ok(OrderReport {
        kind,
        holds: violation.is_none(),
        first_violation: violation,
        grid_size,
        skipped,
    })
}

/// Orders implied between `UG(α₁, β)` and `UG(α₂, β)` when `α₁ < α₂`.
pub const COMMON_SCALE_KINDS: [OrderKind; 10] = [
    OrderKind::Lr,
    OrderKind::Hr,
    OrderKind::Rh,
    OrderKind::Mrl,
    OrderKind::Eit,
    OrderKind::St,
    OrderKind::Hmrl,
    OrderKind::Ttt,
    OrderKind::Icx,
    OrderKind::Icv,
];

/// Runs every order in [`COMMON_SCALE_KINDS`] for `X ~ UG(α₁, β)` against
/// `Y ~ UG(α₂, β)`. With `α₁ < α₂` all of them should hold.
pub fn common_scale_suite(alpha1: f64, alpha2: f64, beta: f64) -> Result<Vec<OrderReport>> {
    let x = UnitGompertz::new(alpha1, beta)?;
    let y = UnitGompertz::new(alpha2, beta)?;
    if !(alpha1 < alpha2) {
        return Err(Error::Precondition(format!(
            "the common-scale suite needs alpha1 < alpha2, got {alpha1} and {alpha2}"
        )));
    }
    COMMON_SCALE_KINDS
        .iter()
        .map(|&k| check_order(k, &x, &y, DEFAULT_GRID))
        .collect()
}

/// `f_X/f_Y = (α₁/α₂) e^{α₁−α₂} exp(−x^{-β}(α₁ − α₂))` for a common scale.
pub fn lr_ratio_closed_form(alpha1: f64, alpha2: f64, beta: f64, x: f64) -> f64 {
    alpha1 / alpha2 * (alpha1 - alpha2).exp() * (-x.powf(-beta) * (alpha1 - alpha2)).exp()
}
