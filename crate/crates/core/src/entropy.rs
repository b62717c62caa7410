//! Rényi and Shannon entropies and Song's shape measure `−2 I'_R(1)`.

use crate::dist::UnitGompertz;
use crate::error::{domain, Result};
use crate::specfun;

/// Rényi order `γ > 0`, `γ ≠ 1`. Order one is the Shannon entropy; use
/// [`UnitGompertz::shannon_entropy`] for it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenyiOrder(f64);

impl RenyiOrder {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma.is_finite()) || (gamma - 1.0).abs() <= 1e-12 {
            return Err(domain("gamma", gamma, "(0, 1) ∪ (1, ∞)"));
        }
        Ok(RenyiOrder(gamma))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl UnitGompertz {
    /// `ln ∫₀¹ f^γ`, i.e. the log of
    /// `(αβe^α)^γ β^{-1} (αγ)^{[1−γ(1+β)]/β} Γ(γ + (γ−1)/β; αγ)`.
    pub fn ln_power_integral(&self, order: RenyiOrder) -> Result<f64> {
        let (a, b, g) = (self.alpha(), self.beta(), order.get());
        let shape = g + (g - 1.0) / b;
        let ln_gamma = specfun::ln_upper_inc_gamma(shape, a * g)?;
        Ok(g * ((a * b).ln() + a) - b.ln() + (1.0 - g * (1.0 + b)) / b * (a * g).ln() + ln_gamma)
    }

    /// Rényi entropy
    /// `(1−γ)^{-1}[αγ + (1−γ)β^{-1} ln α − (1−γ) ln β + β^{-1}(1 − γ(1+β)) ln γ
    /// + ln Γ(γ + (γ−1)/β; αγ)]`.
    pub fn renyi_entropy(&self, order: RenyiOrder) -> Result<f64> {
        let (a, b, g) = (self.alpha(), self.beta(), order.get());
        let shape = g + (g - 1.0) / b;
        let ln_gamma = specfun::ln_upper_inc_gamma(shape, a * g)?;
        let bracket = a * g + (1.0 - g) / b * a.ln() - (1.0 - g) * b.ln()
            + (1.0 - g * (1.0 + b)) / b * g.ln()
            + ln_gamma;
        Ok(bracket / (1.0 - g))
    }

    /// `E[−ln f(X)] = 1 − ln(αβ) − (1+β)β^{-1} e^α Γ(0; α)`.
    pub fn shannon_entropy(&self) -> Result<f64> {
        let (a, b) = (self.alpha(), self.beta());
        let scaled_e1 = (a + specfun::ln_upper_inc_gamma(0.0, a)?).exp();
        Ok(1.0 - (a * b).ln() - (1.0 + b) / b * scaled_e1)
    }

    /// `I'_R(1)`, the slope of the Rényi entropy at order one.
    pub fn renyi_slope_at_one(&self) -> Result<f64> {
        let (a, b) = (self.alpha(), self.beta());
        let c = 1.0 + 1.0 / b;
        let ln_a = a.ln();
        let scaled_e1 = (a + specfun::ln_upper_inc_gamma(0.0, a)?).exp();
        let scaled_tail = specfun::scaled_log_sq_tail_integral(a)?;
        let shifted = (ln_a + scaled_e1) * c - a;
        let bracket = a * (a - 2.0 * c * ln_a) - shifted * shifted + c * c * scaled_tail;
        Ok((b + 2.0) / (2.0 * b) - 0.5 * bracket)
    }

    /// Song's measure `−2 I'_R(1)`, which equals `Var[ln f(X)]`.
    pub fn song_measure(&self) -> Result<f64> {
        Ok(-2.0 * self.renyi_slope_at_one()?)
    }
}
