//! Sparse Laurent polynomials in (q, t) with big-integer coefficients.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(e_q, e_t)`.
pub type Exp2 = (i32, i32);

/// Terms kept sorted by exponent pair, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QtPoly {
    terms: Vec<(Exp2, BigInt)>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, eq: i32, et: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QtPoly { terms: vec![((eq, et), c)] }
        }
    }

    /// `1 - q^a t^b`
    pub fn one_minus(a: i32, b: i32) -> Self {
        Self::one().sub(&Self::monomial(BigInt::one(), a, b))
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp2, BigInt)>>(it: I) -> Self {
        let mut acc: HashMap<Exp2, BigInt> = HashMap::new();
        for (e, c) in it {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Exp2, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        QtPoly { terms }
    }

    pub fn terms(&self) -> &[(Exp2, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// The single term if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&BigInt, Exp2)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, *e)),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        QtPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        QtPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((c, (a, b))) = other.as_monomial() {
            return self.mul_monomial(c, a, b);
        }
        if let Some((c, (a, b))) = self.as_monomial() {
            return other.mul_monomial(c, a, b);
        }
        let mut acc: HashMap<Exp2, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = (ea.0 + eb.0, ea.1 + eb.1);
                let p = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert(e, p);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn mul_monomial(&self, c: &BigInt, a: i32, b: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QtPoly {
            terms: self.terms.iter().map(|(e, x)| ((e.0 + a, e.1 + b), x * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_monomial(c, 0, 0)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides every coefficient by `d`; caller guarantees exactness.
    pub fn div_int(&self, d: &BigInt) -> Self {
        QtPoly { terms: self.terms.iter().map(|(e, c)| (*e, c / d)).collect() }
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn min_exps(&self) -> Exp2 {
        let mut m = (i32::MAX, i32::MAX);
        for (e, _) in &self.terms {
            m.0 = m.0.min(e.0);
            m.1 = m.1.min(e.1);
        }
        m
    }

    pub fn max_exps(&self) -> Exp2 {
        let mut m = (i32::MIN, i32::MIN);
        for (e, _) in &self.terms {
            m.0 = m.0.max(e.0);
            m.1 = m.1.max(e.1);
        }
        m
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(Exp2, BigInt)> {
        self.terms.last()
    }

    /// Writes `self = c * q^a t^b * p` with `p` primitive, min exponents zero
    /// and positive leading coefficient. Panics on zero.
    pub fn split_content(&self) -> (BigInt, Exp2, QtPoly) {
        assert!(!self.is_zero());
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        let m = self.min_exps();
        let p = QtPoly {
            terms: self.terms.iter().map(|(e, x)| ((e.0 - m.0, e.1 - m.1), x / &c)).collect(),
        };
        (c, m, p)
    }

    /// Substitution `q -> q^-1, t -> t^-1`.
    pub fn invert_vars(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| ((-e.0, -e.1), c.clone())))
    }

    /// Substitution `q -> q^a t^b, t -> q^c t^d`.
    pub fn substitute_monomials(&self, qa: Exp2, ta: Exp2) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| ((e.0 * qa.0 + e.1 * ta.0, e.0 * qa.1 + e.1 * ta.1), c.clone())),
        )
    }

    /// Exact quotient by `1 - q^a t^b` in the Laurent ring, if it exists.
    ///
    /// The Laurent ring modulo `1 - q^a t^b` is the group ring of
    /// `Z^2 / (a,b)`, so divisibility is decided by class sums and the quotient
    /// is a running sum along each class.
    pub fn div_one_minus(&self, a: i32, b: i32) -> Option<Self> {
        debug_assert!((a, b) != (0, 0));
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut classes: HashMap<Exp2, Vec<(i64, &BigInt)>> = HashMap::new();
        for (e, c) in &self.terms {
            let k = if a != 0 { e.0.div_euclid(a) } else { e.1.div_euclid(b) };
            let rep = (e.0 - k * a, e.1 - k * b);
            classes.entry(rep).or_default().push((k as i64, c));
        }
        let mut out = Vec::new();
        for (rep, mut members) in classes {
            members.sort_unstable_by_key(|m| m.0);
            let total: BigInt = members.iter().map(|m| m.1).sum();
            if !total.is_zero() {
                return None;
            }
            let mut run = BigInt::zero();
            for w in 0..members.len() {
                run += members[w].1;
                let k_next = if w + 1 < members.len() { members[w + 1].0 } else { members[w].0 };
                for k in members[w].0..k_next {
                    let k = k as i32;
                    out.push(((rep.0 + k * a, rep.1 + k * b), run.clone()));
                }
            }
        }
        Some(Self::from_terms(out))
    }

    /// Exact quotient in the Laurent ring, if it exists.
    pub fn div_exact(&self, d: &QtPoly) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, (a, b))) = d.as_monomial() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, x) in &self.terms {
                let (qq, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                terms.push(((e.0 - a, e.1 - b), qq));
            }
            return Some(QtPoly { terms });
        }
        let (ld, lc) = d.leading().cloned().unwrap();
        let dmin = d.min_exps();
        let mut rem = self.clone();
        let mut quot: Vec<(Exp2, BigInt)> = Vec::new();
        let rmin = self.min_exps();
        while let Some((lr, cr)) = rem.leading().cloned() {
            let (qc, r) = cr.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let e = (lr.0 - ld.0, lr.1 - ld.1);
            // the quotient's support is confined by the Newton box of self / d
            if e.0 < rmin.0 - dmin.0 || e.1 < rmin.1 - dmin.1 {
                return None;
            }
            rem = rem.sub(&d.mul_monomial(&qc, e.0, e.1));
            quot.push((e, qc));
        }
        Some(Self::from_terms(quot))
    }

    /// Exact evaluation at field values (negative exponents use inverses).
    pub fn eval<F: super::Field>(&self, q: &F, t: &F) -> crate::error::Result<F> {
        let mut acc = F::zero();
        let mut qcache: HashMap<i32, F> = HashMap::new();
        let mut tcache: HashMap<i32, F> = HashMap::new();
        for ((a, b), c) in &self.terms {
            let qa = match qcache.get(a) {
                Some(v) => v.clone(),
                None => {
                    let v = q.powi(*a as i64)?;
                    qcache.insert(*a, v.clone());
                    v
                }
            };
            let tb = match tcache.get(b) {
                Some(v) => v.clone(),
                None => {
                    let v = t.powi(*b as i64)?;
                    tcache.insert(*b, v.clone());
                    v
                }
            };
            let cf = F::from_rational(&num_rational::BigRational::from_integer(c.clone()));
            acc = acc.add(&cf.mul(&qa).mul(&tb));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i32, i32), i64)]) -> QtPoly {
        QtPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn cyclo_division_matches_generic_division() {
        let f = QtPoly::one_minus(2, 1).mul(&p(&[((0, 0), 3), ((1, -1), -2), ((4, 2), 5)]));
        let a = f.div_one_minus(2, 1).unwrap();
        let b = f.div_exact(&QtPoly::one_minus(2, 1)).unwrap();
        assert_eq!(a, b);
        assert!(f.div_one_minus(1, 0).is_none());
    }

    #[test]
    fn one_minus_q_squared_is_divisible_by_one_minus_q() {
        let f = QtPoly::one_minus(2, 0);
        assert_eq!(f.div_one_minus(1, 0).unwrap(), p(&[((0, 0), 1), ((1, 0), 1)]));
        assert!(QtPoly::one_minus(1, 1).div_one_minus(0, 1).is_none());
    }

    #[test]
    fn generic_division_rejects_non_multiples() {
        let f = p(&[((0, 0), 1), ((1, 1), 1)]);
        assert!(f.div_exact(&p(&[((0, 0), 1), ((1, 0), 1)])).is_none());
        assert!(p(&[((0, 0), 2)]).div_exact(&p(&[((0, 0), 4)])).is_none());
    }

    #[test]
    fn split_content_normalizes() {
        let f = p(&[((1, 2), -6), ((3, 2), 4)]);
        let (c, m, g) = f.split_content();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(m, (1, 2));
        assert_eq!(g, p(&[((0, 0), -3), ((2, 0), 2)]));
    }
}
