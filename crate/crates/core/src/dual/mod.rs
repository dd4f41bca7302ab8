//! Dual interpolation functions and related rational functions.

pub mod oracle;
pub mod rational;
pub mod schur;
pub mod weight;

pub use oracle::{dual_by_duality_oracle, i_in_p_basis, skew_dual_series};
pub use rational::{DenFactor, RationalFn};
pub use schur::{dual_sigma, dual_sigma_vandermonde, multiparam_schur};
pub use weight::{
    dual_from_weights, dual_h, dual_h_jack, dual_h_jack_series, dual_h_series, dual_hl, dual_hl_series,
    dual_series_from_weights, dual_whittaker, dual_whittaker_series, strip_weight_hl, strip_weight_jack,
    strip_weight_qt, strip_weight_whittaker, Family, StripWeight,
};
