//! The field Q(kappa) of univariate rational functions, kept in lowest terms.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::field::{rational_json, Field};
use crate::error::{AlgebraError, Result};

/// Dense univariate polynomial over Q, index = degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KPoly(Vec<BigRational>);

impl KPoly {
    pub fn zero() -> Self {
        KPoly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        KPoly(vec![c]).trimmed()
    }

    pub fn from_coeffs(c: Vec<BigRational>) -> Self {
        KPoly(c).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero")
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        KPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trimmed()
    }

    pub fn neg(&self) -> Self {
        KPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        KPoly(out).trimmed()
    }

    fn scale(&self, c: &BigRational) -> Self {
        KPoly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        let lc = d.lead().clone();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    rem[k + i] -= &c * di;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (KPoly(quot).trimmed(), KPoly(rem).trimmed())
    }

    fn monic(&self) -> Self {
        self.scale(&self.lead().recip())
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// An element of Q(kappa) in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarKappa {
    num: KPoly,
    den: KPoly,
}

impl ScalarKappa {
    pub fn kappa() -> Self {
        Self::linear(BigInt::zero(), BigInt::one())
    }

    /// `a + b*kappa`
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        ScalarKappa {
            num: KPoly::from_coeffs(vec![BigRational::from_integer(a), BigRational::from_integer(b)]),
            den: KPoly::constant(BigRational::one()),
        }
    }

    pub fn from_poly(p: KPoly) -> Self {
        ScalarKappa { num: p, den: KPoly::constant(BigRational::one()) }
    }

    fn new(num: KPoly, den: KPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.div_rem(&g).0, den.div_rem(&g).0);
        let lc = d.lead().clone();
        if !lc.is_one() {
            n = n.scale(&lc.recip());
            d = d.scale(&lc.recip());
        }
        ScalarKappa { num: n, den: d }
    }

    pub fn numerator(&self) -> &KPoly {
        &self.num
    }

    pub fn denominator(&self) -> &KPoly {
        &self.den
    }

    pub fn eval(&self, k: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(k);
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.num.eval(k) / d)
    }
}

impl Field for ScalarKappa {
    fn zero() -> Self {
        ScalarKappa { num: KPoly::zero(), den: KPoly::constant(BigRational::one()) }
    }
    fn one() -> Self {
        Self::from_i64(1)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }
    fn from_rational(r: &BigRational) -> Self {
        Self::from_poly(KPoly::constant(r.clone()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        ScalarKappa { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::new(self.den.clone(), self.num.clone()))
    }
    fn equals(&self, o: &Self) -> bool {
        self == o
    }
    fn to_json(&self) -> Value {
        let enc = |p: &KPoly| Value::Array(p.0.iter().map(rational_json).collect());
        json!({"num": enc(&self.num), "den": enc(&self.den)})
    }
}

impl fmt::Debug for ScalarKappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &KPoly| {
            let parts: Vec<String> = p
                .0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| match i {
                    0 => format!("{c}"),
                    1 => format!("{c}*k"),
                    _ => format!("{c}*k^{i}"),
                })
                .collect();
            if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            }
        };
        write!(f, "({})/({})", show(&self.num), show(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_make_equality_structural() {
        let k = ScalarKappa::kappa();
        let one = ScalarKappa::one();
        let a = k.mul(&k).sub(&one).div(&k.add(&one)).unwrap();
        assert_eq!(a, k.sub(&one));
    }
}
