//! The unit-Gompertz law: density, distribution and survival functions,
//! quantiles, sampling, raw moments and the shape results (log-concavity
//! region and mode).
//!
//! Endpoint conventions: `cdf(0) = 0`, `cdf(1) = 1`, `pdf(0) = 0` and
//! `pdf(1) = αβ`, i.e. the continuous extensions on `[0, 1]`.

use crate::error::{domain, Error, Result};
use crate::oracle::{open_uniform, seeded_rng, SeedRng};

/// A point of the closed unit interval.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitPoint(f64);

impl UnitPoint {
    pub fn new(x: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&x) {
            Ok(UnitPoint(x))
        } else {
            Err(domain("x", x, "[0, 1]"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// True for the two endpoints, where most functions use a limit value.
    pub fn is_endpoint(self) -> bool {
        self.0 == 0.0 || self.0 == 1.0
    }
}

impl TryFrom<f64> for UnitPoint {
    type Error = Error;

    fn try_from(x: f64) -> Result<Self> {
        UnitPoint::new(x)
    }
}

/// Unit-Gompertz distribution with shape `alpha` and scale `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitGompertz {
    alpha: f64,
    beta: f64,
}

/// Builds the distribution if both parameters are finite and positive.
pub fn validate(alpha: f64, beta: f64) -> Result<UnitGompertz> {
    UnitGompertz::new(alpha, beta)
}

impl UnitGompertz {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if ok(alpha) && ok(beta) {
            Ok(UnitGompertz { alpha, beta })
        } else {
            Err(Error::Parameter { alpha, beta })
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `x^{-β} − 1`, exact near `x = 1`.
    pub(crate) fn excess(&self, x: f64) -> f64 {
        (-self.beta * x.ln()).exp_m1()
    }

    pub fn log_pdf(&self, x: f64) -> Result<f64> {
        let x = UnitPoint::new(x)?.get();
        if x == 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        let (a, b) = (self.alpha, self.beta);
        Ok((a * b).ln() - a * self.excess(x) - (1.0 + b) * x.ln())
    }

    /// Density; underflows smoothly to 0 as `x → 0`.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        self.log_pdf(x).map(f64::exp)
    }

    /// `ln F(x) = −α(x^{-β} − 1)`.
    pub fn log_cdf(&self, x: f64) -> Result<f64> {
        let x = UnitPoint::new(x)?.get();
        if x == 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        Ok(-self.alpha * self.excess(x))
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        self.log_cdf(x).map(f64::exp)
    }

    /// Survival function, formed as `−expm1(ln F)` so it keeps full precision
    /// as `x → 1`.
    pub fn sf(&self, x: f64) -> Result<f64> {
        self.log_cdf(x).map(|l| -l.exp_m1())
    }

    pub fn log_sf(&self, x: f64) -> Result<f64> {
        let l = self.log_cdf(x)?;
        Ok(if l < -std::f64::consts::LN_2 {
            (-l.exp()).ln_1p()
        } else {
            (-l.exp_m1()).ln()
        })
    }

    /// Inverse of the distribution function, `(α/(α − ln u))^{1/β}`.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u <= 1.0) {
            return Err(domain("u", u, "(0, 1]"));
        }
        Ok((-(-u.ln() / self.alpha).ln_1p() / self.beta).exp())
    }

    pub fn median(&self) -> f64 {
        self.quantile(0.5).expect("0.5 lies in (0, 1]")
    }

    /// One inverse-transform draw, kept strictly inside (0, 1).
    pub fn draw(&self, rng: &mut SeedRng) -> f64 {
        let x = self
            .quantile(open_uniform(rng))
            .expect("open uniform lies in (0, 1)");
        x.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0)
    }

    /// `n` draws from the xoshiro256++ stream seeded with `seed`, in
    /// generation order.
    pub fn sample(&self, n: usize, seed: u64) -> Result<Vec<f64>> {
        if n == 0 {
            return Err(Error::Precondition("sample size must be at least 1".into()));
        }
        let mut rng = seeded_rng(seed);
        Ok((0..n).map(|_| self.draw(&mut rng)).collect())
    }

    /// `E[X^n] = e^α α^{n/β} Γ(1 − n/β; α)`.
    pub fn raw_moment(&self, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(Error::Precondition(
                "moment order must be at least 1".into(),
            ));
        }
        self.gamma_tail(n as f64 / self.beta, self.alpha)
    }

    pub fn mean(&self) -> f64 {
        self.raw_moment(1)
            .expect("incomplete gamma at a positive argument is finite")
    }

    /// `d²/dx² ln f(x) = −((1+β)/x²)(αβ x^{-β} − 1)`.
    pub fn log_pdf_second_derivative(&self, x: f64) -> Result<f64> {
        let x = UnitPoint::new(x)?.get();
        if x == 0.0 {
            return Err(domain("x", x, "(0, 1]"));
        }
        let (a, b) = (self.alpha, self.beta);
        Ok(-((1.0 + b) / (x * x)) * (a * b * x.powf(-b) - 1.0))
    }

    /// Right end of the region `(0, min((αβ)^{1/β}, 1)]` on which the density
    /// is log-concave.
    pub fn log_concavity_bound(&self) -> f64 {
        (self.alpha * self.beta).powf(1.0 / self.beta).min(1.0)
    }

    /// Stationary point `x* = (αβ/(1+β))^{1/β}` of the density, which may lie
    /// outside the support.
    pub fn stationary_point(&self) -> f64 {
        (self.alpha * self.beta / (1.0 + self.beta)).powf(1.0 / self.beta)
    }

    /// The mode `min(x*, 1)`.
    pub fn mode(&self) -> f64 {
        self.stationary_point().min(1.0)
    }
}
