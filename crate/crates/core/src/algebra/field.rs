//! The field abstraction shared by the symbolic and numeric code paths.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};

/// Exact field arithmetic. Method names avoid `std::ops` so generic code reads
/// the same for every scalar type.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn to_json(&self) -> Value;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn equals(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    fn is_one(&self) -> bool {
        self.equals(&Self::one())
    }

    fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.powi(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    fn scale_i64(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(n))
    }
}

/// Exact rationals for the numeric evaluation path.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(n: i64, d: i64) -> Self {
        Rat(rat(n, d))
    }
}

impl std::fmt::Debug for Rat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(Zero::zero())
    }
    fn one() -> Self {
        Rat(One::one())
    }
    fn from_i64(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_rational(r: &BigRational) -> Self {
        Rat(r.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.0)
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(&self.0) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(Rat(self.0.recip()))
        }
    }
    fn equals(&self, other: &Self) -> bool {
        self == other
    }
    fn to_json(&self) -> Value {
        rational_json(&self.0)
    }
}

pub(crate) fn rational_json(r: &BigRational) -> Value {
    if r.is_integer() {
        json!(r.numer().to_string())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || AlgebraError::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}
