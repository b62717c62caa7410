use std::io::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use unit_gompertz::UnitGompertz;

use crate::numfmt::round_trip;
use crate::{output, CliError, ParamArgs};

/// Distance from 0 or 1 at which grid points are clamped for functions that
/// are singular or undefined at that endpoint.
pub const ENDPOINT_CLAMP: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveFn {
    Pdf,
    Logpdf,
    Cdf,
    Sf,
    Quantile,
    Hazard,
    Rhr,
    Mrl,
    Eit,
    Lorenz,
    Bonferroni,
    Zenga,
}

impl CurveFn {
    fn name(self) -> String {
        self.to_possible_value()
            .map(|p| p.get_name().to_string())
            .unwrap_or_default()
    }

    /// (clamp away from 0, clamp away from 1)
    fn singular_ends(self) -> (bool, bool) {
        match self {
            CurveFn::Logpdf | CurveFn::Quantile | CurveFn::Rhr | CurveFn::Bonferroni => {
                (true, false)
            }
            CurveFn::Hazard => (false, true),
            CurveFn::Zenga => (true, true),
            _ => (false, false),
        }
    }

    fn eval(self, d: &UnitGompertz, x: f64) -> unit_gompertz::Result<f64> {
        match self {
            CurveFn::Pdf => d.pdf(x),
            CurveFn::Logpdf => d.log_pdf(x),
            CurveFn::Cdf => d.cdf(x),
            CurveFn::Sf => d.sf(x),
            CurveFn::Quantile => d.quantile(x),
            CurveFn::Hazard => d.hazard(x),
            CurveFn::Rhr => d.reversed_hazard(x),
            CurveFn::Mrl => d.mrl(x),
            CurveFn::Eit => d.eit(x),
            CurveFn::Lorenz => d.lorenz(x),
            CurveFn::Bonferroni => d.bonferroni(x),
            CurveFn::Zenga => d.zenga(x),
        }
    }
}

#[derive(Args)]
pub struct CurveArgs {
    #[arg(long = "fn", value_enum)]
    pub func: CurveFn,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Evenly spaced grid `lo:hi:count` inside [0, 1]
    #[arg(long)]
    pub grid: String,
    /// Output file (standard output when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Number of draws
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file (standard output when absent)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `lo:hi:count` into the grid points.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Domain(format!("grid must be lo:hi:count, got {spec:?}"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, count] = parts[..] else {
        return Err(bad());
    };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let count: usize = count.trim().parse().map_err(|_| bad())?;
    if count == 0 {
        return Err(CliError::Domain("grid count must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) {
        return Err(CliError::Domain(format!(
            "grid ends must lie in [0, 1], got {lo} and {hi}"
        )));
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    if !(lo < hi) {
        return Err(CliError::Domain(format!(
            "grid needs lo < hi when count > 1, got {lo} and {hi}"
        )));
    }
    let step = (hi - lo) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| {
            if i + 1 == count {
                hi
            } else {
                lo + i as f64 * step
            }
        })
        .collect())
}

pub fn run_curve(a: &CurveArgs) -> Result<(), CliError> {
    let d = UnitGompertz::new(a.params.alpha, a.params.beta)?;
    let grid = parse_grid(&a.grid)?;
    let (clamp_lo, clamp_hi) = a.func.singular_ends();
    let mut rows = Vec::with_capacity(grid.len());
    for x in grid {
        let mut x = x;
        if clamp_lo {
            x = x.max(ENDPOINT_CLAMP);
        }
        if clamp_hi {
            x = x.min(1.0 - ENDPOINT_CLAMP);
        }
        rows.push((x, a.func.eval(&d, x)?));
    }
    let mut w = output(a.out.as_ref())?;
    writeln!(w, "x,{}", a.func.name())?;
    for (x, y) in rows {
        writeln!(w, "{},{}", round_trip(x), round_trip(y))?;
    }
    w.flush()?;
    Ok(())
}

pub fn run_sample(a: &SampleArgs) -> Result<(), CliError> {
    let d = UnitGompertz::new(a.params.alpha, a.params.beta)?;
    let xs = d.sample(a.n, a.seed)?;
    let mut w = output(a.out.as_ref())?;
    w.write_all(b"x\n")?;
    for x in xs {
        writeln!(w, "{}", round_trip(x))?;
    }
    w.flush()?;
    Ok(())
}
