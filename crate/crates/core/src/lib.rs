//! The unit-Gompertz distribution on (0, 1).
//!
//! `X = e^{-Y}` with `Y` Gompertz gives the density
//! `f(x) = αβ x^{-(1+β)} exp(−α(x^{-β} − 1))`. This crate evaluates the law
//! itself, its shape results (log-concavity region, mode), conditional and
//! partial moments, reliability functions, entropies, inequality curves,
//! order statistics, stress–strength reliability and grid checks of
//! stochastic orders. Closed forms lean on [`specfun`]; the [`oracle`]
//! module offers independent quadrature and Monte-Carlo routes for checking
//! them.
// NaN must fail validation, so `!(x > 0.0)` is intended throughout.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dist;
pub mod entropy;
pub mod error;
pub mod inequality;
pub mod oracle;
pub mod order_stats;
pub mod reliability;
pub mod specfun;
pub mod stoch_orders;

pub use dist::{validate, UnitGompertz, UnitPoint};
pub use entropy::RenyiOrder;
pub use error::{Error, Result};
pub use inequality::CurvePoint;
pub use oracle::{McResult, QuadratureResult};
pub use order_stats::{MomentRoute, OrderStatMoment, OrderStatSpec};
pub use reliability::StressStrengthPair;
pub use stoch_orders::{OrderKind, OrderReport, Violation};
