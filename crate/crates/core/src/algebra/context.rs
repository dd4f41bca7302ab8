//! Values assigned to the parameters q and t.
//!
//! The same builders run symbolically (`q`, `t` indeterminates), on the
//! diagonal `t = q`, at the degenerations `t = 0` / `q = 0`, or numerically at
//! rational points.

use super::field::Rat;

use super::field::Field;
use super::scalar::ScalarQT;
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct QtParams<F> {
    pub q: F,
    pub t: F,
}

impl QtParams<ScalarQT> {
    /// q and t as independent indeterminates.
    pub fn generic() -> Self {
        QtParams { q: ScalarQT::q(), t: ScalarQT::t() }
    }

    /// The diagonal `t = q`.
    pub fn diagonal() -> Self {
        QtParams { q: ScalarQT::q(), t: ScalarQT::q() }
    }

    /// `t = 0`, the q-Whittaker degeneration.
    pub fn whittaker() -> Self {
        QtParams { q: ScalarQT::q(), t: ScalarQT::zero() }
    }

    /// `q = 0`, the Hall-Littlewood degeneration.
    pub fn hall_littlewood() -> Self {
        QtParams { q: ScalarQT::zero(), t: ScalarQT::t() }
    }
}

impl QtParams<Rat> {
    pub fn numeric(q: Rat, t: Rat) -> Self {
        QtParams { q, t }
    }
}

impl<F: Field> QtParams<F> {
    pub fn new(q: F, t: F) -> Self {
        QtParams { q, t }
    }

    /// `q^a t^b`, with `0^0 = 1`.
    pub fn mono(&self, a: i32, b: i32) -> Result<F> {
        let qa = if a == 0 { F::one() } else { self.q.powi(a as i64)? };
        let tb = if b == 0 { F::one() } else { self.t.powi(b as i64)? };
        Ok(qa.mul(&tb))
    }

    /// Image of a scalar of Q(q,t) under this specialization.
    pub fn scalar(&self, s: &ScalarQT) -> Result<F> {
        s.eval(&self.q, &self.t)
    }
}
