//! Elements of Q(q,t) with a factored denominator.
//!
//! The denominator is an integer times a product of factors `(1 - q^a t^b)`
//! and a short list of other primitive polynomials. Sums use the lcm of the
//! factor lists; afterwards every denominator factor that divides the
//! numerator is cancelled. No multivariate gcd is ever computed, so the
//! representation is not canonical; equality goes through subtraction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::field::Field;
use super::qtpoly::{Exp2, QtPoly};
use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Den {
    int: BigInt,
    /// `(1 - q^a t^b)^e` with `(a,b)` lexicographically positive, sorted.
    cyclo: Vec<(Exp2, u32)>,
    /// Primitive polynomials with zero minimal exponents.
    other: Vec<(QtPoly, u32)>,
}

impl Den {
    fn one() -> Self {
        Den { int: BigInt::one(), cyclo: Vec::new(), other: Vec::new() }
    }

    fn is_one(&self) -> bool {
        self.int.is_one() && self.cyclo.is_empty() && self.other.is_empty()
    }

    fn expand(&self) -> QtPoly {
        let mut p = QtPoly::constant(self.int.clone());
        for ((a, b), e) in &self.cyclo {
            p = p.mul(&QtPoly::one_minus(*a, *b).pow(*e));
        }
        for (f, e) in &self.other {
            p = p.mul(&f.pow(*e));
        }
        p
    }

    fn mul(&self, o: &Den) -> Den {
        let mut cyclo = self.cyclo.clone();
        for (k, e) in &o.cyclo {
            match cyclo.binary_search_by(|x| x.0.cmp(k)) {
                Ok(i) => cyclo[i].1 += e,
                Err(i) => cyclo.insert(i, (*k, *e)),
            }
        }
        let mut other = self.other.clone();
        for (f, e) in &o.other {
            match other.iter_mut().find(|x| &x.0 == f) {
                Some(x) => x.1 += e,
                None => other.push((f.clone(), *e)),
            }
        }
        Den { int: &self.int * &o.int, cyclo, other }
    }

    /// Returns `(lcm, lcm / self, lcm / other)` with the cofactors expanded.
    fn lcm(&self, o: &Den) -> (Den, QtPoly, QtPoly) {
        let int = self.int.lcm(&o.int);
        let mut ca = QtPoly::constant(&int / &self.int);
        let mut cb = QtPoly::constant(&int / &o.int);
        let mut cyclo = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.cyclo, &o.cyclo);
        while i < x.len() || j < y.len() {
            if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
                cb = cb.mul(&QtPoly::one_minus(x[i].0 .0, x[i].0 .1).pow(x[i].1));
                cyclo.push(x[i]);
                i += 1;
            } else if i == x.len() || y[j].0 < x[i].0 {
                ca = ca.mul(&QtPoly::one_minus(y[j].0 .0, y[j].0 .1).pow(y[j].1));
                cyclo.push(y[j]);
                j += 1;
            } else {
                let (k, ea, eb) = (x[i].0, x[i].1, y[j].1);
                let f = QtPoly::one_minus(k.0, k.1);
                if ea < eb {
                    ca = ca.mul(&f.pow(eb - ea));
                } else if eb < ea {
                    cb = cb.mul(&f.pow(ea - eb));
                }
                cyclo.push((k, ea.max(eb)));
                i += 1;
                j += 1;
            }
        }
        let mut other = self.other.clone();
        for (f, eb) in &o.other {
            match other.iter_mut().find(|x| &x.0 == f) {
                Some(x) => {
                    if x.1 < *eb {
                        ca = ca.mul(&f.pow(eb - x.1));
                        x.1 = *eb;
                    } else if *eb < x.1 {
                        cb = cb.mul(&f.pow(x.1 - eb));
                    }
                }
                None => {
                    ca = ca.mul(&f.pow(*eb));
                    other.push((f.clone(), *eb));
                }
            }
        }
        for (f, ea) in &self.other {
            if !o.other.iter().any(|x| &x.0 == f) {
                cb = cb.mul(&f.pow(*ea));
            }
        }
        (Den { int, cyclo, other }, ca, cb)
    }

    fn eval<F: Field>(&self, q: &F, t: &F) -> Result<F> {
        let mut acc = F::from_rational(&BigRational::from_integer(self.int.clone()));
        for ((a, b), e) in &self.cyclo {
            let f = F::one().sub(&q.powi(*a as i64)?.mul(&t.powi(*b as i64)?));
            acc = acc.mul(&f.powi(*e as i64)?);
        }
        for (p, e) in &self.other {
            acc = acc.mul(&p.eval(q, t)?.powi(*e as i64)?);
        }
        Ok(acc)
    }
}

/// An element of Q(q,t).
#[derive(Clone)]
pub struct ScalarQT {
    num: QtPoly,
    den: Den,
}

impl ScalarQT {
    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c q^a t^b`
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        Self::from_poly(QtPoly::monomial(BigInt::from(c), a, b))
    }

    pub fn from_poly(num: QtPoly) -> Self {
        ScalarQT { num, den: Den::one() }
    }

    /// `(1 - q^a t^b)^e`, any sign of `e`.
    pub fn cyclo(a: i32, b: i32, e: i32) -> Result<Self> {
        if (a, b) == (0, 0) {
            return if e >= 0 { Ok(Self::zero_if(e > 0)) } else { Err(AlgebraError::DivisionByZero) };
        }
        let (key, unit) = if a > 0 || (a == 0 && b > 0) {
            ((a, b), Self::one())
        } else {
            // 1 - m = -m (1 - m^-1)
            ((-a, -b), Self::monomial(-1, a, b))
        };
        let unit = unit.powi(e as i64)?;
        let n = e.unsigned_abs();
        let f = if e >= 0 {
            ScalarQT { num: QtPoly::one_minus(key.0, key.1).pow(n), den: Den::one() }
        } else {
            ScalarQT {
                num: QtPoly::one(),
                den: Den { int: BigInt::one(), cyclo: vec![(key, n)], other: Vec::new() },
            }
        };
        Ok(f.mul(&unit))
    }

    fn zero_if(z: bool) -> Self {
        if z {
            Self::zero()
        } else {
            Self::one()
        }
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn denominator(&self) -> QtPoly {
        self.den.expand()
    }

    /// Builds `num / den` for arbitrary polynomials.
    pub fn from_num_den(num: QtPoly, den: QtPoly) -> Result<Self> {
        Ok(Self::from_poly(num).mul(&Self::from_poly(den).inv()?))
    }

    /// Exact value at the given field elements for q and t.
    pub fn eval<F: Field>(&self, q: &F, t: &F) -> Result<F> {
        let d = self.den.eval(q, t)?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        self.num.eval(q, t)?.div(&d)
    }

    /// Rational value if the element is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if !self.den.cyclo.is_empty() || !self.den.other.is_empty() {
            return None;
        }
        if self.num.is_zero() {
            return Some(BigRational::zero());
        }
        match self.num.as_monomial() {
            Some((c, (0, 0))) => Some(BigRational::new(c.clone(), self.den.int.clone())),
            _ => None,
        }
    }

    fn reduce(mut num: QtPoly, mut den: Den) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        for (k, e) in den.cyclo.iter_mut() {
            while *e > 0 {
                match num.div_one_minus(k.0, k.1) {
                    Some(qn) => {
                        num = qn;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        den.cyclo.retain(|x| x.1 > 0);
        for (f, e) in den.other.iter_mut() {
            while *e > 0 {
                match num.div_exact(f) {
                    Some(qn) => {
                        num = qn;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        den.other.retain(|x| x.1 > 0);
        if !den.int.is_one() {
            let g = num.content().gcd(&den.int);
            if !g.is_one() {
                num = num.div_int(&g);
                den.int = &den.int / &g;
            }
        }
        ScalarQT { num, den }
    }

    /// Factors a nonzero polynomial into `unit * cyclo factors * rest`, with
    /// the unit a signed monomial times an integer.
    fn factor_poly(p: &QtPoly) -> (QtPoly, Den) {
        let (c, m, mut prim) = p.split_content();
        let mut unit = QtPoly::monomial(c.signum(), m.0, m.1);
        let mut den = Den { int: c.abs(), cyclo: Vec::new(), other: Vec::new() };
        let span = prim.max_exps();
        let (sq, st) = (span.0, span.1);
        if prim.len() > 1 && (sq as i64 + 1) * (2 * st as i64 + 1) <= 4000 {
            let mut cands: Vec<Exp2> = Vec::new();
            for a in 0..=sq {
                for b in -st..=st {
                    if a > 0 || b > 0 {
                        cands.push((a, b));
                    }
                }
            }
            cands.sort_by_key(|&(a, b)| std::cmp::Reverse(a.abs() + b.abs()));
            for (a, b) in cands {
                if prim.len() == 1 {
                    break;
                }
                let mut e = 0;
                while let Some(qp) = prim.div_one_minus(a, b) {
                    prim = qp;
                    e += 1;
                }
                if e > 0 {
                    den.cyclo.push(((a, b), e));
                }
            }
            den.cyclo.sort();
            let (c2, m2, p2) = prim.split_content();
            unit = unit.mul(&QtPoly::monomial(c2.clone(), m2.0, m2.1));
            debug_assert!(c2.abs().is_one());
            prim = p2;
        }
        if !prim.is_one() {
            den.other.push((prim, 1));
        }
        (unit, den)
    }

    /// Substitution q -> q^-1, t -> t^-1.
    pub fn invert_params(&self) -> Result<Self> {
        self.eval(&Self::q().inv()?, &Self::t().inv()?)
    }

    /// Substitution t -> q.
    pub fn at_t_equals_q(&self) -> Result<Self> {
        self.eval(&Self::q(), &Self::q())
    }
}

impl Field for ScalarQT {
    fn zero() -> Self {
        ScalarQT { num: QtPoly::zero(), den: Den::one() }
    }
    fn one() -> Self {
        ScalarQT { num: QtPoly::one(), den: Den::one() }
    }
    fn from_i64(n: i64) -> Self {
        Self::monomial(n, 0, 0)
    }
    fn from_rational(r: &BigRational) -> Self {
        let mut d = Den::one();
        d.int = r.denom().clone();
        ScalarQT { num: QtPoly::constant(r.numer().clone()), den: d }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::reduce(self.num.add(&o.num), self.den.clone());
        }
        let (l, ca, cb) = self.den.lcm(&o.den);
        Self::reduce(self.num.mul(&ca).add(&o.num.mul(&cb)), l)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.den.is_one() && o.num.len() == 1 {
            return Self::reduce(self.num.mul(&o.num), self.den.clone());
        }
        if self.den.is_one() && self.num.len() == 1 {
            return Self::reduce(o.num.mul(&self.num), o.den.clone());
        }
        Self::reduce(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        ScalarQT { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (unit, den) = Self::factor_poly(&self.num);
        // 1/unit for a signed monomial unit
        let (c, (a, b)) = unit.as_monomial().map(|(c, e)| (c.clone(), e)).unwrap();
        let num = self.den.expand().mul_monomial(&c, -a, -b);
        Ok(Self::reduce(num, den))
    }
    fn equals(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.sub(o).is_zero()
    }
    fn to_json(&self) -> Value {
        json!({"num": poly_json(&self.num), "den": poly_json(&self.den.expand())})
    }
}

impl PartialEq for ScalarQT {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

fn poly_json(p: &QtPoly) -> Value {
    Value::Array(
        p.terms().iter().map(|((a, b), c)| json!([a, b, c.to_string()])).collect(),
    )
}

pub(crate) fn poly_from_json(v: &Value) -> Result<QtPoly> {
    let bad = || AlgebraError::Parse(format!("bad polynomial {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    let mut terms = Vec::new();
    for t in arr {
        let t = t.as_array().ok_or_else(bad)?;
        if t.len() != 3 {
            return Err(bad());
        }
        let a = t[0].as_i64().ok_or_else(bad)? as i32;
        let b = t[1].as_i64().ok_or_else(bad)? as i32;
        let c: BigInt = t[2].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        terms.push(((a, b), c));
    }
    Ok(QtPoly::from_terms(terms))
}

impl ScalarQT {
    pub fn from_json(v: &Value) -> Result<Self> {
        let num = poly_from_json(&v["num"])?;
        let den = poly_from_json(&v["den"])?;
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::from_num_den(num, den)
    }
}

fn fmt_poly(p: &QtPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (i, ((a, b), c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i > 0 {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        } else if neg {
            write!(f, "-")?;
        }
        let mut parts = Vec::new();
        if !mag.is_one() || (*a == 0 && *b == 0) {
            parts.push(mag.to_string());
        }
        for (v, e) in [("q", a), ("t", b)] {
            match e {
                0 => {}
                1 => parts.push(v.to_string()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        write!(f, "{}", parts.join("*"))?;
    }
    Ok(())
}

impl fmt::Debug for ScalarQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ScalarQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_poly(&self.num, f)?;
        write!(f, ")")?;
        if !self.den.is_one() {
            write!(f, "/(")?;
            fmt_poly(&self.den.expand(), f)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: i32, b: i32, e: i32) -> ScalarQT {
        ScalarQT::cyclo(a, b, e).unwrap()
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let x = c(0, 1, 1).mul(&c(1, 0, -1));
        let y = c(1, 0, 1).mul(&c(0, 1, -1));
        assert!(x.mul(&y).is_one());
    }

    #[test]
    fn laurent_sum_matches_common_denominator() {
        let lhs = ScalarQT::q().inv().unwrap().add(&ScalarQT::t());
        let rhs = ScalarQT::from_num_den(
            QtPoly::one().add(&QtPoly::monomial(BigInt::one(), 1, 1)),
            QtPoly::monomial(BigInt::one(), 1, 0),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn factored_equals_expanded() {
        let lhs = c(0, 2, 1).div(&c(2, 0, 1)).unwrap();
        let one_plus = |a, b| QtPoly::one().add(&QtPoly::monomial(BigInt::one(), a, b));
        let num = one_plus(0, 1).mul(&QtPoly::one_minus(0, 1));
        let den = one_plus(1, 0).mul(&QtPoly::one_minus(1, 0));
        assert_eq!(lhs, ScalarQT::from_num_den(num, den).unwrap());
    }

    #[test]
    fn inversion_extracts_cyclotomic_factors() {
        let p = QtPoly::one_minus(1, 0).mul(&QtPoly::one_minus(2, -1)).mul(&QtPoly::one_minus(0, 3));
        let x = ScalarQT::from_poly(p).inv().unwrap();
        assert_eq!(x.den.cyclo.len(), 3);
        assert!(x.den.other.is_empty());
    }

    #[test]
    fn negative_cyclo_is_normalized() {
        let x = c(-1, 0, 1);
        let expected = ScalarQT::one().sub(&ScalarQT::q().inv().unwrap());
        assert_eq!(x, expected);
        assert!(c(-2, 1, -2).mul(&c(-2, 1, 2)).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(ScalarQT::zero().inv().unwrap_err(), AlgebraError::DivisionByZero);
    }

    #[test]
    fn json_round_trip() {
        let x = c(1, 1, 2).div(&c(3, 0, 1)).unwrap().mul(&ScalarQT::monomial(-7, -2, 1));
        assert_eq!(ScalarQT::from_json(&x.to_json()).unwrap(), x);
    }
}
