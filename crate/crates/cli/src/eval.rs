use clap::{Args, ValueEnum};
use unit_gompertz::reliability::stress_strength;
use unit_gompertz::{OrderStatSpec, RenyiOrder, StressStrengthPair, UnitGompertz};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalFn {
    /// Density f(x)
    Pdf,
    /// ln f(x)
    Logpdf,
    /// Distribution function F(x)
    Cdf,
    /// Survival function 1 − F(x)
    Sf,
    /// Inverse distribution function at --u
    Quantile,
    /// Hazard rate f/(1 − F)
    Hazard,
    /// Reversed hazard rate f/F
    Rhr,
    /// Mean residual life at --x
    Mrl,
    /// Expected inactivity time at --x
    Eit,
    /// Mode on [0, 1]
    Mode,
    /// Upper end (αβ)^{1/β} of the log-concavity region
    Lcbound,
    /// Raw moment E[X^n]
    Moment,
    /// Conditional moment E[X^n | X > x]
    Condmoment,
    /// Mean deviation E|X − x| (about the mean when --x is absent)
    Meandev,
    /// Lorenz curve at --p
    Lorenz,
    /// Bonferroni curve at --p
    Bonferroni,
    /// Zenga curve at --x
    Zenga,
    /// Rényi entropy of order --gamma
    Renyi,
    /// Shannon entropy
    Shannon,
    /// Song's measure Var[ln f(X)]
    Song,
    /// Order-statistic moment E[X_(j)^k] for sample size --n
    Osmoment,
    /// Stress-strength reliability P(stress < strength)
    Ssr,
}

#[derive(Args)]
pub struct EvalArgs {
    /// Quantity to evaluate
    #[arg(long = "fn", value_enum)]
    pub func: EvalFn,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Point in [0, 1]
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Probability level for quantile, Lorenz and Bonferroni
    #[arg(long, visible_alias = "p", allow_negative_numbers = true)]
    pub u: Option<f64>,
    /// Rényi order
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    /// Moment order, or sample size for osmoment
    #[arg(long)]
    pub n: Option<u32>,
    /// Rank of the order statistic
    #[arg(long)]
    pub j: Option<u32>,
    /// Moment order of the order statistic
    #[arg(long)]
    pub k: Option<u32>,
    /// Strength shape
    #[arg(long, allow_negative_numbers = true)]
    pub alpha1: Option<f64>,
    /// Strength scale
    #[arg(long, allow_negative_numbers = true)]
    pub beta1: Option<f64>,
    /// Stress shape
    #[arg(long, allow_negative_numbers = true)]
    pub alpha2: Option<f64>,
    /// Stress scale
    #[arg(long, allow_negative_numbers = true)]
    pub beta2: Option<f64>,
}

fn need<T>(v: Option<T>, flag: &str, func: EvalFn) -> Result<T, CliError> {
    v.ok_or_else(|| {
        let name = func.to_possible_value().map(|p| p.get_name().to_string());
        CliError::Domain(format!("--fn {} needs --{flag}", name.unwrap_or_default()))
    })
}

pub fn run(a: &EvalArgs) -> Result<f64, CliError> {
    let f = a.func;
    if f == EvalFn::Ssr {
        let strength = UnitGompertz::new(need(a.alpha1, "alpha1", f)?, need(a.beta1, "beta1", f)?)?;
        let stress = UnitGompertz::new(need(a.alpha2, "alpha2", f)?, need(a.beta2, "beta2", f)?)?;
        return Ok(stress_strength(&StressStrengthPair::new(strength, stress))?);
    }
    let d = UnitGompertz::new(need(a.alpha, "alpha", f)?, need(a.beta, "beta", f)?)?;
    let x = || need(a.x, "x", f);
    let u = || need(a.u, "u", f);
    let n = || need(a.n, "n", f);
    let v = match f {
        EvalFn::Pdf => d.pdf(x()?)?,
        EvalFn::Logpdf => d.log_pdf(x()?)?,
        EvalFn::Cdf => d.cdf(x()?)?,
        EvalFn::Sf => d.sf(x()?)?,
        EvalFn::Quantile => d.quantile(u()?)?,
        EvalFn::Hazard => d.hazard(x()?)?,
        EvalFn::Rhr => d.reversed_hazard(x()?)?,
        EvalFn::Mrl => d.mrl(x()?)?,
        EvalFn::Eit => d.eit(x()?)?,
        EvalFn::Mode => d.mode(),
        EvalFn::Lcbound => d.log_concavity_bound(),
        EvalFn::Moment => d.raw_moment(n()?)?,
        EvalFn::Condmoment => d.conditional_moment(n()?, x()?)?,
        EvalFn::Meandev => match a.x {
            Some(x0) => d.mean_deviation_about(x0)?,
            None => d.mean_deviation_mean()?,
        },
        EvalFn::Lorenz => d.lorenz(u()?)?,
        EvalFn::Bonferroni => d.bonferroni(u()?)?,
        EvalFn::Zenga => d.zenga(x()?)?,
        EvalFn::Renyi => d.renyi_entropy(RenyiOrder::new(need(a.gamma, "gamma", f)?)?)?,
        EvalFn::Shannon => d.shannon_entropy()?,
        EvalFn::Song => d.song_measure()?,
        EvalFn::Osmoment => {
            let spec = OrderStatSpec::new(n()?, need(a.j, "j", f)?, need(a.k, "k", f)?)?;
            d.order_stat_moment(spec)?.value
        }
        EvalFn::Ssr => unreachable!("handled above"),
    };
    Ok(v)
}
