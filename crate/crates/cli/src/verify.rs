//! Self-check report: the log-concavity counterexample, the corrected mode,
//! hazard and reversed-hazard shapes, and the common-scale ordering results,
//! each re-derived from the library and compared against its closed form.

use clap::Args;
use unit_gompertz::oracle::{open_uniform, seeded_rng};
use unit_gompertz::reliability::stress_strength;
use unit_gompertz::stoch_orders::{check_order, common_scale_suite, DEFAULT_GRID};
use unit_gompertz::{oracle, OrderKind, RenyiOrder, StressStrengthPair, UnitGompertz};

use crate::numfmt::g15;
use crate::CliError;

/// Tolerance used when `UG_TOL` is unset.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Seeds for the random common-scale parameter draws.
pub const ORDER_SEEDS: [u64; 3] = [11, 22, 33];

#[derive(Args)]
pub struct VerifyArgs {}

struct Check {
    tag: &'static str,
    what: &'static str,
    pass: bool,
    detail: String,
}

type Outcome = unit_gompertz::Result<(bool, String)>;
type CheckFn = fn(f64) -> Outcome;

fn tolerance() -> Result<f64, CliError> {
    match std::env::var("UG_TOL") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Domain(format!("UG_TOL must be a number, got {s:?}"))),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn ug(a: f64, b: f64) -> UnitGompertz {
    UnitGompertz::new(a, b).expect("fixed parameters are valid")
}

fn interior(n: usize) -> impl Iterator<Item = f64> {
    (1..=n).map(move |i| i as f64 / (n + 1) as f64)
}

fn counterexample(tol: f64) -> Outcome {
    let v = ug(0.25, 1.0).log_pdf_second_derivative(0.5)?;
    Ok((
        (v - 4.0).abs() <= tol && v > 0.0,
        format!("d²/dx² ln f(0.5) = {}", g15(v)),
    ))
}

fn concavity_region(_tol: f64) -> Outcome {
    for d in [ug(0.25, 1.0), ug(0.5, 1.5), ug(2.0, 1.0)] {
        let bound = d.log_concavity_bound();
        for x in interior(999) {
            let v = d.log_pdf_second_derivative(x)?;
            if (x <= bound) != (v <= 0.0) {
                return Ok((
                    false,
                    format!(
                        "({}, {}) sign flips off the bound at x = {}",
                        d.alpha(),
                        d.beta(),
                        g15(x)
                    ),
                ));
            }
        }
    }
    Ok((
        true,
        "concave exactly up to (αβ)^(1/β) for three parameter pairs".into(),
    ))
}

fn mode(tol: f64) -> Outcome {
    let d = ug(3.0, 1.0);
    let xs = d.stationary_point();
    let m = d.mode();
    let m1 = ug(1.0, 1.0).mode();
    let pass = (xs - 1.5).abs() <= tol && xs > 1.0 && m == 1.0 && (m1 - 0.5).abs() <= tol;
    Ok((
        pass,
        format!(
            "stationary point {} lies outside (0,1); mode {}; mode(1,1) = {}",
            g15(xs),
            g15(m),
            g15(m1)
        ),
    ))
}

fn hazard_shape(tol: f64) -> Outcome {
    for d in [ug(2.0, 2.0), ug(1.0, 3.0), ug(0.5, 1.0)] {
        let f1 = d.pdf(1.0)?;
        if (f1 - d.alpha() * d.beta()).abs() > tol * f1 {
            return Ok((false, format!("f(1) = {} differs from αβ", g15(f1))));
        }
        if d.hazard(1.0)? != f64::INFINITY {
            return Ok((false, "hazard stays finite at 1".into()));
        }
        let mut prev = 0.0;
        for i in 1..=999 {
            let h = d.hazard(i as f64 / 1000.0)?;
            // exactly 0 where the density underflows; strict once positive
            if !(h > prev || (h == 0.0 && prev == 0.0)) {
                return Ok((
                    false,
                    format!("hazard not increasing at x = {}", i as f64 / 1000.0),
                ));
            }
            prev = h;
        }
    }
    Ok((
        true,
        "f(1) = αβ, hazard increasing to +∞; no upside-down bathtub".into(),
    ))
}

fn reversed_hazard(_tol: f64) -> Outcome {
    for a in [0.25, 0.5, 0.75, 1.0] {
        let d = ug(a, 1.0);
        let mut prev = f64::INFINITY;
        for x in interior(999) {
            let r = d.reversed_hazard(x)?;
            if !(r < prev) {
                return Ok((false, format!("α = {a}: not decreasing at x = {}", g15(x))));
            }
            prev = r;
        }
    }
    Ok((
        true,
        "strictly decreasing for α ∈ {0.25, 0.5, 0.75, 1}, β = 1".into(),
    ))
}

fn mrl_and_eit(tol: f64) -> Outcome {
    for d in [ug(2.0, 2.0), ug(1.0, 3.0), ug(0.5, 1.0)] {
        let mut prev_m = f64::INFINITY;
        let mut prev_e = 0.0;
        for x in interior(199) {
            let m = d.mrl(x)?;
            let e = d.eit(x)?;
            if !(m < prev_m && e > prev_e) {
                return Ok((false, format!("monotonicity broken at x = {}", g15(x))));
            }
            prev_m = m;
            prev_e = e;
        }
        let gap = (d.eit(1.0)? - (1.0 - d.mean())).abs();
        if gap > tol {
            return Ok((false, format!("eit(1) misses 1 − μ by {}", g15(gap))));
        }
    }
    Ok((
        true,
        "MRL decreasing, EIT increasing, eit(1) = 1 − μ".into(),
    ))
}

fn stress_strength_check(tol: f64) -> Outcome {
    let r = stress_strength(&StressStrengthPair::new(ug(1.0, 2.0), ug(3.0, 2.0)))?;
    let s = stress_strength(&StressStrengthPair::new(ug(1.7, 0.6), ug(1.7, 0.6)))?;
    Ok((
        (r - 0.25).abs() <= tol && s == 0.5,
        format!("R = {}; symmetric R = {}", g15(r), g15(s)),
    ))
}

fn entropy_check(tol: f64) -> Outcome {
    let d = ug(1.0, 1.0);
    let h = d.shannon_entropy()?;
    let lnf = |x: f64| d.log_pdf(x).unwrap_or(f64::NAN);
    let w = |g: fn(f64) -> f64| {
        oracle::integrate(
            |x| {
                if x == 0.0 {
                    0.0
                } else {
                    d.pdf(x).unwrap_or(f64::NAN) * g(lnf(x))
                }
            },
            0.0,
            1.0,
            1e-12,
        )
    };
    let m1 = w(|l| l)?.value;
    let m2 = w(|l| l * l)?.value;
    let var = m2 - m1 * m1;
    let song = d.song_measure()?;
    let r2 = d.renyi_entropy(RenyiOrder::new(2.0)?)?;
    let pass = (h + m1).abs() <= tol.max(1e-10)
        && (song - var).abs() <= 1e-7 * var
        && (r2 + 1.25f64.ln()).abs() <= tol;
    Ok((
        pass,
        format!(
            "Shannon {}, Song {} vs Var[ln f] {}",
            g15(h),
            g15(song),
            g15(var)
        ),
    ))
}

fn orders(_tol: f64) -> Outcome {
    for seed in ORDER_SEEDS {
        let mut rng = seeded_rng(seed);
        let a1 = 0.1 + 2.9 * open_uniform(&mut rng);
        let a2 = a1 + 0.05 + 2.0 * open_uniform(&mut rng);
        let b = 0.2 + 2.8 * open_uniform(&mut rng);
        for report in common_scale_suite(a1, a2, b)? {
            if !report.holds {
                return Ok((false, format!("seed {seed}: {report}")));
            }
        }
        let back = check_order(OrderKind::Lr, &ug(a2, b), &ug(a1, b), DEFAULT_GRID)?;
        if back.holds || back.first_violation.is_none() {
            return Ok((false, format!("seed {seed}: reversed lr not refuted")));
        }
    }
    Ok((
        true,
        format!("10 orders certified at seeds {ORDER_SEEDS:?}; reversed lr refuted"),
    ))
}

pub fn run(_args: &VerifyArgs) -> Result<(), CliError> {
    let tol = tolerance()?;
    let table: [(&str, &str, CheckFn); 9] = [
        (
            "shape/log-concavity",
            "counterexample to global log-concavity",
            counterexample,
        ),
        (
            "shape/log-concavity",
            "concavity region ends at (αβ)^(1/β)",
            concavity_region,
        ),
        ("shape/mode", "mode corrected to min(x*, 1)", mode),
        (
            "reliability/hazard",
            "hazard increasing, unbounded at 1",
            hazard_shape,
        ),
        (
            "reliability/reversed-hazard",
            "reversed hazard decreasing",
            reversed_hazard,
        ),
        ("reliability/mrl-eit", "MRL and EIT monotone", mrl_and_eit),
        (
            "reliability/stress-strength",
            "common-scale closed form",
            stress_strength_check,
        ),
        (
            "entropy",
            "Shannon, Rényi and Song against quadrature",
            entropy_check,
        ),
        (
            "orders/common-scale",
            "α₁ < α₂ orders hold, reverse fails",
            orders,
        ),
    ];
    let checks: Vec<Check> = table
        .iter()
        .map(|&(tag, what, f)| match f(tol) {
            Ok((pass, detail)) => Check {
                tag,
                what,
                pass,
                detail,
            },
            Err(e) => Check {
                tag,
                what,
                pass: false,
                detail: format!("error: {e}"),
            },
        })
        .collect();
    for c in &checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        println!("{status} [{}] {}: {}", c.tag, c.what, c.detail);
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    println!(
        "{} of {} checks passed (tolerance {})",
        checks.len() - failed,
        checks.len(),
        g15(tol)
    );
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}
