//! Exact arithmetic: Q(q,t), Q(kappa), polynomials and truncated series.

pub mod context;
pub mod cyclo;
pub mod field;
pub mod kappa;
pub mod linalg;
pub mod multipoly;
pub mod qtpoly;
pub mod scalar;
pub mod series;

pub use context::QtParams;
pub use cyclo::CycloFactored;
pub use field::{parse_rational, rat, Field, Rat};
pub use kappa::{KPoly, ScalarKappa};
pub use multipoly::{var_names, Exponent, MultiPoly};
pub use qtpoly::QtPoly;
pub use scalar::ScalarQT;
pub use series::{pochhammer_coeffs, series_from_product, BlockSpec, PochFactor, TruncSeries};

pub use num_rational::BigRational;
