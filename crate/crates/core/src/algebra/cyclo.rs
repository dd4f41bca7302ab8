//! Products of factors `(1 - q^a t^b)^e` kept in factored form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::context::QtParams;
use super::field::Field;
use super::kappa::ScalarKappa;
use super::scalar::ScalarQT;
use crate::error::{AlgebraError, Result};

/// `unit * q^m0 t^m1 * prod (1 - q^a t^b)^e`. Keys are lexicographically
/// positive and no exponent is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactored {
    pub unit: BigRational,
    pub monomial: (i32, i32),
    pub factors: BTreeMap<(i32, i32), i32>,
}

impl CycloFactored {
    pub fn one() -> Self {
        CycloFactored { unit: BigRational::one(), monomial: (0, 0), factors: BTreeMap::new() }
    }

    /// `(1 - q^a t^b)^e`; `(a,b) = (0,0)` is rejected since it is zero.
    pub fn factor(a: i32, b: i32, e: i32) -> Result<Self> {
        let mut out = Self::one();
        out.mul_factor(a, b, e)?;
        Ok(out)
    }

    fn mul_factor(&mut self, a: i32, b: i32, e: i32) -> Result<()> {
        if (a, b) == (0, 0) {
            return Err(AlgebraError::DivisionByZero);
        }
        if e == 0 {
            return Ok(());
        }
        let key = if a > 0 || (a == 0 && b > 0) {
            (a, b)
        } else {
            // 1 - m = -m (1 - m^-1)
            if e % 2 != 0 {
                self.unit = -self.unit.clone();
            }
            self.monomial.0 += a * e;
            self.monomial.1 += b * e;
            (-a, -b)
        };
        let slot = self.factors.entry(key).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&key);
        }
        Ok(())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.unit = &out.unit * &o.unit;
        out.monomial.0 += o.monomial.0;
        out.monomial.1 += o.monomial.1;
        for (k, e) in &o.factors {
            out.mul_factor(k.0, k.1, *e).expect("normalized key");
        }
        out
    }

    pub fn inv(&self) -> Result<Self> {
        if self.unit.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(CycloFactored {
            unit: self.unit.recip(),
            monomial: (-self.monomial.0, -self.monomial.1),
            factors: self.factors.iter().map(|(k, e)| (*k, -e)).collect(),
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn to_scalar(&self) -> ScalarQT {
        let mut acc = ScalarQT::from_rational(&self.unit)
            .mul(&ScalarQT::monomial(1, self.monomial.0, self.monomial.1));
        for (k, e) in &self.factors {
            acc = acc.mul(&ScalarQT::cyclo(k.0, k.1, *e).expect("nonzero key"));
        }
        acc
    }

    /// Value under a parameter specialization.
    pub fn eval<F: Field>(&self, ctx: &QtParams<F>) -> Result<F> {
        let mut acc = F::from_rational(&self.unit).mul(&ctx.mono(self.monomial.0, self.monomial.1)?);
        for (k, e) in &self.factors {
            let f = F::one().sub(&ctx.mono(k.0, k.1)?);
            acc = acc.mul(&f.powi(*e as i64)?);
        }
        Ok(acc)
    }

    /// Jack rewrite: each factor `1 - q^a t^b` becomes `a + b*kappa`; the
    /// monomial part becomes 1.
    pub fn to_kappa(&self) -> Result<ScalarKappa> {
        let mut acc = ScalarKappa::from_rational(&self.unit);
        for (k, e) in &self.factors {
            let lin = ScalarKappa::linear(BigInt::from(k.0), BigInt::from(k.1));
            acc = acc.mul(&lin.powi(*e as i64)?);
        }
        Ok(acc)
    }

    /// Factor-wise specialization at `t = 0`: factors with `b > 0` become 1.
    pub fn at_t_zero(&self) -> Result<ScalarQT> {
        self.specialize(|a, b| (b, a))
    }

    /// Factor-wise specialization at `q = 0`: factors with `a > 0` become 1.
    pub fn at_q_zero(&self) -> Result<ScalarQT> {
        self.specialize(|a, b| (a, b))
    }

    /// `sel` maps a key to (exponent of the vanishing variable, other one).
    fn specialize(&self, sel: impl Fn(i32, i32) -> (i32, i32)) -> Result<ScalarQT> {
        let (vz, _) = sel(self.monomial.0, self.monomial.1);
        if vz < 0 {
            return Err(AlgebraError::Pole("negative power of a vanishing parameter"));
        }
        if vz > 0 {
            return Ok(ScalarQT::zero());
        }
        let mut acc = ScalarQT::from_rational(&self.unit)
            .mul(&ScalarQT::monomial(1, self.monomial.0, self.monomial.1));
        for (k, e) in &self.factors {
            let (z, _) = sel(k.0, k.1);
            if z > 0 {
                continue;
            }
            if z < 0 {
                return Err(AlgebraError::Pole("factor with negative power of a vanishing parameter"));
            }
            acc = acc.mul(&ScalarQT::cyclo(k.0, k.1, *e)?);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_is_multiplicative() {
        let a = CycloFactored::factor(1, 2, 2).unwrap().mul(&CycloFactored::factor(-1, 0, -1).unwrap());
        let b = CycloFactored::factor(0, 1, -1).unwrap().mul(&CycloFactored::factor(3, -1, 1).unwrap());
        assert_eq!(a.mul(&b).to_scalar(), a.to_scalar().mul(&b.to_scalar()));
        assert!(a.mul(&a.inv().unwrap()).to_scalar().is_one());
    }

    #[test]
    fn specializations() {
        let f = CycloFactored::factor(0, 1, 1).unwrap().div(&CycloFactored::factor(1, 0, 1).unwrap()).unwrap();
        assert_eq!(f.at_t_zero().unwrap(), ScalarQT::cyclo(1, 0, -1).unwrap());
        assert_eq!(f.at_q_zero().unwrap(), ScalarQT::cyclo(0, 1, 1).unwrap());
        let k = f.to_kappa().unwrap();
        assert_eq!(k, ScalarKappa::kappa());
    }
}
