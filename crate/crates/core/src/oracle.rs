//! Independent numerical ground truth: adaptive Gauss–Kronrod quadrature and
//! seeded Monte-Carlo expectations.
//!
//! Nothing in here knows about the unit-Gompertz closed forms. Tests use these
//! routines to check every closed form along a separate numerical path.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};

/// Maximum number of interval bisections before [`integrate`] gives up.
pub const SUBDIVISION_CAP: usize = 20_000;

/// Absolute floor added to the relative tolerance.
pub const ABS_FLOOR: f64 = 1e-300;

/// Generator used for every seeded stream in the crate: xoshiro256++ seeded
/// through SplitMix64 (`seed_from_u64`).
pub type SeedRng = Xoshiro256PlusPlus;

pub fn seeded_rng(seed: u64) -> SeedRng {
    SeedRng::seed_from_u64(seed)
}

/// Uniform draw on the open interval (0, 1): the top 53 bits of the next word,
/// offset by half a unit in the last place.
pub fn open_uniform(rng: &mut SeedRng) -> f64 {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    ((rng.next_u64() >> 11) as f64 + 0.5) * SCALE
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McResult {
    pub mean: f64,
    pub std_error: f64,
    pub n: usize,
    pub seed: u64,
}

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss rule.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn eval<F: Fn(f64) -> f64>(f: &F, t: f64) -> Result<f64> {
    let v = f(t);
    if v.is_nan() || v.is_infinite() {
        Err(Error::Integrand { at: t, value: v })
    } else {
        Ok(v)
    }
}

/// One Gauss–Kronrod 7/15 panel on `[lo, hi]` with the QUADPACK error model.
fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<Segment> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = eval(f, center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = kronrod.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(f, center - dx)?;
        let f2 = eval(f, center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kronrod * half;
    let resabs = abs_sum * half.abs();
    let resasc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    Ok(Segment {
        lo,
        hi,
        value,
        error,
    })
}

/// Adaptive integration of `f` over `[a, b]`; pass `f64::INFINITY` as `b`
/// for a semi-infinite range.
///
/// Semi-infinite ranges are mapped to `[0, 1)` with `t = a + u/(1-u)`. The
/// 15-point rule never touches panel endpoints, so integrable endpoint
/// singularities are tolerated. Bisection always splits the panel with the
/// largest error estimate and stops once the summed estimate falls below
/// `rel_tol·|value| + 1e-300`.
pub fn integrate<F>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && rel_tol > 0.0) || b.is_nan() || !(a < b) || b == f64::NEG_INFINITY {
        return Err(Error::Precondition(format!(
            "integrate requires finite a < b and rel_tol > 0 (a = {a}, b = {b}, rel_tol = {rel_tol})"
        )));
    }
    if b.is_infinite() {
        let mapped = |u: f64| {
            let w = 1.0 - u;
            let v = f(a + u / w);
            if v == 0.0 {
                0.0
            } else {
                v / (w * w)
            }
        };
        adapt(&mapped, 0.0, 1.0, rel_tol)
    } else {
        adapt(&f, a, b, rel_tol)
    }
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64) -> Result<QuadratureResult> {
    let first = kronrod15(f, a, b)?;
    let mut total = first.value;
    let mut total_err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut subdivisions = 0;

    while total_err > rel_tol * total.abs() + ABS_FLOOR {
        if subdivisions >= SUBDIVISION_CAP {
            return Err(Error::NoConvergence {
                value: total,
                error_estimate: total_err,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(mid > worst.lo && mid < worst.hi) {
            // panel can no longer be split in floating point
            return Err(Error::NoConvergence {
                value: total,
                error_estimate: total_err,
                subdivisions,
            });
        }
        let left = kronrod15(f, worst.lo, mid)?;
        let right = kronrod15(f, mid, worst.hi)?;
        subdivisions += 1;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // re-sum to stop drift from the incremental updates
        if subdivisions % 64 == 0 || total_err <= rel_tol * total.abs() + ABS_FLOOR {
            total = heap.iter().map(|s| s.value).sum();
            total_err = heap.iter().map(|s| s.error).sum();
        }
    }
    let value = heap.iter().map(|s| s.value).sum();
    Ok(QuadratureResult {
        value,
        error_estimate: total_err,
        subdivisions,
    })
}

/// Seeded Monte-Carlo estimate of `E[g(X)]` with `X` drawn by `sampler`.
///
/// Mean and variance are accumulated with Welford's update, so a constant
/// `g` yields exactly that constant and a zero standard error.
pub fn mc_expect<S, G>(mut sampler: S, g: G, n: usize, seed: u64) -> Result<McResult>
where
    S: FnMut(&mut SeedRng) -> f64,
    G: Fn(f64) -> f64,
{
    if n < 100 {
        return Err(Error::Precondition(format!(
            "mc_expect needs at least 100 draws, got {n}"
        )));
    }
    let mut rng = seeded_rng(seed);
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for i in 1..=n {
        let y = g(sampler(&mut rng));
        let delta = y - mean;
        mean += delta / i as f64;
        m2 += delta * (y - mean);
    }
    let variance = m2 / (n - 1) as f64;
    Ok(McResult {
        mean,
        std_error: (variance / n as f64).sqrt(),
        n,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_on_unit_interval() {
        let r = integrate(|_| 1.0, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!(r.error_estimate >= 0.0);
    }

    #[test]
    fn exponential_tail() {
        let r = integrate(|t: f64| (-t).exp(), 1.0, f64::INFINITY, 1e-12).unwrap();
        let exact = (-1.0f64).exp();
        assert!((r.value - exact).abs() <= 1e-12 * exact);
    }

    #[test]
    fn polynomial_and_log_singular_battery() {
        type Case = (fn(f64) -> f64, f64, f64, f64);
        let cases: [Case; 4] = [
            (
                |x| x.powi(5) - 2.0 * x * x,
                -1.0,
                2.0,
                64.0 / 6.0 - 1.0 / 6.0 - 6.0,
            ),
            (|x| x.ln(), 0.0, 1.0, -1.0),
            (|x| 1.0 / x.sqrt(), 0.0, 4.0, 4.0),
            (
                |x| (-x * x).exp(),
                0.0,
                f64::INFINITY,
                0.5 * std::f64::consts::PI.sqrt(),
            ),
        ];
        for (f, a, b, exact) in cases {
            let r = integrate(f, a, b, 1e-10).unwrap();
            assert!(
                (r.value - exact).abs() <= 1e-10 * exact.abs(),
                "{} vs {}",
                r.value,
                exact
            );
        }
    }

    #[test]
    fn bad_interval_rejected() {
        assert!(integrate(|x| x, 1.0, 1.0, 1e-8).is_err());
        assert!(integrate(|x| x, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn nan_integrand_is_an_error() {
        let err = integrate(|x| if x > 0.5 { f64::NAN } else { 1.0 }, 0.0, 1.0, 1e-8);
        assert!(matches!(err, Err(Error::Integrand { .. })));
    }

    #[test]
    fn non_convergence_reports_cap() {
        // 1/x is not integrable at 0
        let err = integrate(|x: f64| 1.0 / x, 0.0, 1.0, 1e-12).unwrap_err();
        assert!(matches!(
            err,
            Error::NoConvergence { .. } | Error::Integrand { .. }
        ));
    }

    #[test]
    fn mc_constant_is_exact() {
        let r = mc_expect(open_uniform, |_| 1.0, 1000, 7).unwrap();
        assert_eq!(r.mean, 1.0);
        assert_eq!(r.std_error, 0.0);
    }

    #[test]
    fn mc_is_deterministic() {
        let a = mc_expect(open_uniform, |u| u * u, 5000, 99).unwrap();
        let b = mc_expect(open_uniform, |u| u * u, 5000, 99).unwrap();
        assert_eq!(a, b);
        assert!((a.mean - 1.0 / 3.0).abs() < 4.0 * a.std_error);
    }

    #[test]
    fn mc_rejects_small_n() {
        assert!(mc_expect(open_uniform, |u| u, 99, 1).is_err());
    }

    #[test]
    fn open_uniform_stays_open() {
        let mut rng = seeded_rng(3);
        for _ in 0..10_000 {
            let u = open_uniform(&mut rng);
            assert!(u > 0.0 && u < 1.0);
        }
    }
}
