//! Hazard and reversed hazard rates, partial and conditional moments, mean
//! residual life, expected inactivity time and stress–strength reliability.

use crate::dist::{UnitGompertz, UnitPoint};
use crate::error::{domain, Error, Result};
use crate::oracle;
use crate::specfun;

/// Relative tolerance for the mixed-scale stress–strength quadrature.
pub const STRESS_STRENGTH_TOL: f64 = 1e-11;

/// Independent strength `X` and stress `Y`; reliability is `P(Y < X)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressStrengthPair {
    pub strength: UnitGompertz,
    pub stress: UnitGompertz,
}

impl StressStrengthPair {
    pub fn new(strength: UnitGompertz, stress: UnitGompertz) -> Self {
        StressStrengthPair { strength, stress }
    }
}

impl UnitGompertz {
    /// `e^α α^k Γ(1 − k; lower)`, the building block of every moment-type
    /// closed form. `k` is the moment order divided by `β`.
    pub(crate) fn ln_gamma_tail(&self, k: f64, lower: f64) -> Result<f64> {
        let a = self.alpha();
        Ok(a + k * a.ln() + specfun::ln_upper_inc_gamma(1.0 - k, lower)?)
    }

    /// The same quantity as a plain product when every factor is a normal
    /// float, which keeps a few ulps that the log round trip loses.
    pub(crate) fn gamma_tail(&self, k: f64, lower: f64) -> Result<f64> {
        let a = self.alpha();
        let g = specfun::upper_inc_gamma(1.0 - k, lower)?;
        let scale = a.exp() * a.powf(k);
        let v = scale * g;
        if g.is_normal() && scale.is_normal() && v.is_normal() {
            return Ok(v);
        }
        Ok(self.ln_gamma_tail(k, lower)?.exp())
    }

    /// `α / x^β`, the incomplete-gamma argument belonging to `x`.
    pub(crate) fn gamma_argument(&self, x: f64) -> f64 {
        self.alpha() * x.powf(-self.beta())
    }

    /// `h(x) = f(x)/F̄(x)`; `+∞` at `x = 1`.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        let x = UnitPoint::new(x)?.get();
        if x == 1.0 {
            return Ok(f64::INFINITY);
        }
        if x == 0.0 {
            return Ok(0.0);
        }
        Ok((self.log_pdf(x)? - self.log_sf(x)?).exp())
    }

    /// `r(x) = f(x)/F(x) = αβ x^{-(1+β)}`.
    pub fn reversed_hazard(&self, x: f64) -> Result<f64> {
        let x = UnitPoint::new(x)?.get();
        if x == 0.0 {
            return Err(domain("x", x, "(0, 1]"));
        }
        let (a, b) = (self.alpha(), self.beta());
        Ok(a * b * x.powf(-(1.0 + b)))
    }

    /// `I*_n(t) = ∫ₜ¹ yⁿ f(y) dy = e^α α^{n/β}[Γ(1 − n/β; α) − Γ(1 − n/β; α/t^β)]`.
    pub fn partial_expectation(&self, n: u32, t: f64) -> Result<f64> {
        if n == 0 {
            return Err(Error::Precondition(
                "moment order must be at least 1".into(),
            ));
        }
        let t = UnitPoint::new(t)?.get();
        if t == 1.0 {
            return Ok(0.0);
        }
        let k = n as f64 / self.beta();
        let full = self.ln_gamma_tail(k, self.alpha())?;
        if t == 0.0 {
            return Ok(full.exp());
        }
        let tail = self.ln_gamma_tail(k, self.gamma_argument(t))?;
        Ok(-full.exp() * (tail - full).exp_m1())
    }

    /// `E[Xⁿ | X > x] = I*_n(x) / F̄(x)`.
    pub fn conditional_moment(&self, n: u32, x: f64) -> Result<f64> {
        let x = UnitPoint::new(x)?.get();
        if x == 1.0 {
            return Err(domain("x", x, "[0, 1)"));
        }
        Ok(self.partial_expectation(n, x)? / self.sf(x)?)
    }

    /// Mean residual life `E[X − t | X > t]`; 0 at `t = 1`.
    pub fn mrl(&self, t: f64) -> Result<f64> {
        let t = UnitPoint::new(t)?.get();
        if t == 1.0 {
            return Ok(0.0);
        }
        let m = self.partial_expectation(1, t)? / self.sf(t)? - t;
        Ok(m.max(0.0))
    }

    /// Expected inactivity time `E[x − X | X ≤ x]
    /// = e^{α/x^β} α^{1/β} Γ(−1/β; α/x^β) / β`.
    pub fn eit(&self, x: f64) -> Result<f64> {
        let x = UnitPoint::new(x)?.get();
        if x == 0.0 {
            return Ok(0.0);
        }
        let (a, b) = (self.alpha(), self.beta());
        let z = self.gamma_argument(x);
        let ln_g = specfun::ln_upper_inc_gamma(-1.0 / b, z)?;
        Ok((z + a.ln() / b - b.ln() + ln_g).exp())
    }
}

/// `R = P(Y < X)`. Equal scales give `α₁/(α₁ + α₂)` exactly; otherwise the
/// defining integral is evaluated by quadrature.
pub fn stress_strength(pair: &StressStrengthPair) -> Result<f64> {
    let (x, y) = (pair.strength, pair.stress);
    if x.beta() == y.beta() {
        return Ok(x.alpha() / (x.alpha() + y.alpha()));
    }
    stress_strength_quadrature(pair)
}

/// `∫₀¹ G_Y(x) f_X(x) dx` by adaptive quadrature, integrand formed in log
/// space.
pub fn stress_strength_quadrature(pair: &StressStrengthPair) -> Result<f64> {
    let (x, y) = (pair.strength, pair.stress);
    let integrand = |t: f64| {
        let l =
            x.log_pdf(t).unwrap_or(f64::NEG_INFINITY) + y.log_cdf(t).unwrap_or(f64::NEG_INFINITY);
        l.exp()
    };
    Ok(oracle::integrate(integrand, 0.0, 1.0, STRESS_STRENGTH_TOL)?.value)
}
