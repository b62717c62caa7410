//! First incomplete moment, mean deviations, and the Lorenz, Bonferroni and
//! Zenga curves.
//!
//! The Lorenz form `α^{1/β} e^α Γ(1 − 1/β; α/q^β) / μ` is finite for every
//! `β > 0` (the incomplete-gamma argument is positive), so no `β > 1`
//! restriction is imposed.

use crate::dist::{UnitGompertz, UnitPoint};
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub abscissa: f64,
    pub ordinate: f64,
}

/// Evaluates `f` at each abscissa.
pub fn tabulate<F>(abscissae: &[f64], mut f: F) -> Result<Vec<CurvePoint>>
where
    F: FnMut(f64) -> Result<f64>,
{
    abscissae
        .iter()
        .map(|&x| {
            Ok(CurvePoint {
                abscissa: x,
                ordinate: f(x)?,
            })
        })
        .collect()
}

/// `ln(e^y − 1)` for `y > 0` without overflow.
fn ln_expm1(y: f64) -> f64 {
    if y > 30.0 {
        y + (-(-y).exp()).ln_1p()
    } else {
        y.exp_m1().ln()
    }
}

impl UnitGompertz {
    /// `m₁(z) = ∫₀^z x f(x) dx = α^{1/β} e^α Γ(1 − 1/β; α/z^β)`, equal to
    /// `μ − I*₁(z)`.
    pub fn first_incomplete_moment(&self, z: f64) -> Result<f64> {
        let z = UnitPoint::new(z)?.get();
        if z == 0.0 {
            return Ok(0.0);
        }
        let k = 1.0 / self.beta();
        self.gamma_tail(k, self.gamma_argument(z))
    }

    /// `E|X − x₀| = 2x₀F(x₀) − μ + 2I*₁(x₀) − x₀`.
    pub fn mean_deviation_about(&self, x0: f64) -> Result<f64> {
        let x0 = UnitPoint::new(x0)?.get();
        let mu = self.mean();
        Ok(2.0 * x0 * self.cdf(x0)? - mu + 2.0 * self.partial_expectation(1, x0)? - x0)
    }

    pub fn mean_deviation_mean(&self) -> Result<f64> {
        self.mean_deviation_about(self.mean())
    }

    pub fn mean_deviation_median(&self) -> Result<f64> {
        self.mean_deviation_about(self.median())
    }

    /// `L(p) = m₁(F⁻¹(p)) / μ`.
    pub fn lorenz(&self, p: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&p) {
            return Err(domain("p", p, "[0, 1]"));
        }
        if p == 0.0 {
            return Ok(0.0);
        }
        let q = self.quantile(p)?;
        Ok(self.first_incomplete_moment(q)? / self.mean())
    }

    /// `B(p) = L(p) / p`.
    pub fn bonferroni(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p <= 1.0) {
            return Err(domain("p", p, "(0, 1]"));
        }
        Ok(self.lorenz(p)? / p)
    }

    /// `Z(x) = 1 − μ⁻(x)/μ⁺(x)`, from
    /// `1 − [Γ(s; α/x^β) / (Γ(s; α) − Γ(s; α/x^β))]·F̄(x)/F(x)` with
    /// `s = 1 − 1/β`, evaluated through log-gamma differences.
    pub fn zenga(&self, x: f64) -> Result<f64> {
        let x = self.zenga_point(x)?;
        let s = 1.0 - 1.0 / self.beta();
        let ln_full = crate::specfun::ln_upper_inc_gamma(s, self.alpha())?;
        let ln_tail = crate::specfun::ln_upper_inc_gamma(s, self.gamma_argument(x))?;
        // F̄/F = expm1(−ln F); both expm1 terms overflow deep in the left tail
        let ln_odds = ln_expm1(-self.log_cdf(x)?);
        Ok(1.0 - (ln_odds - ln_expm1(ln_full - ln_tail)).exp())
    }

    /// The same Zenga value from the fully written-out expression, with raw
    /// incomplete-gamma values and `exp[−α(1/x^β − 1)]` in place of `F`.
    pub fn zenga_expanded(&self, x: f64) -> Result<f64> {
        let x = self.zenga_point(x)?;
        let (a, b) = (self.alpha(), self.beta());
        let s = 1.0 - 1.0 / b;
        let g_full = crate::specfun::upper_inc_gamma(s, a)?;
        let g_tail = crate::specfun::upper_inc_gamma(s, a / x.powf(b))?;
        let e = (-a * (1.0 / x.powf(b) - 1.0)).exp();
        Ok(1.0 - g_tail / (g_full - g_tail) * ((1.0 - e) / e))
    }

    fn zenga_point(&self, x: f64) -> Result<f64> {
        if !(x > 0.0 && x < 1.0) {
            return Err(domain("x", x, "(0, 1)"));
        }
        Ok(x)
    }
}
