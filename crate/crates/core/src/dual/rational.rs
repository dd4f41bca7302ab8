//! Rational functions with a factored denominator.

use serde_json::{json, Value};

use crate::algebra::{Exponent, Field, MultiPoly};
use crate::error::{AlgebraError, Result};

/// `(u_var - root)^mult`
#[derive(Clone, Debug)]
pub struct DenFactor<F> {
    pub var: usize,
    pub root: F,
    pub mult: u32,
    /// `Some(k)` when `root = q^k`, kept for reporting.
    pub q_exp: Option<i32>,
}

impl<F: Field> DenFactor<F> {
    pub fn new(var: usize, root: F, mult: u32) -> Self {
        DenFactor { var, root, mult, q_exp: None }
    }

    pub fn q_power(var: usize, root: F, k: i32, mult: u32) -> Self {
        DenFactor { var, root, mult, q_exp: Some(k) }
    }

    fn same_as(&self, o: &Self) -> bool {
        self.var == o.var && self.root.equals(&o.root)
    }

    fn poly(&self, nvars: usize) -> MultiPoly<F> {
        MultiPoly::linear(nvars, self.var, &self.root).pow(self.mult)
    }
}

/// `num / (prod_f (u_var - root)^mult * extra)`.
#[derive(Clone, Debug)]
pub struct RationalFn<F> {
    num: MultiPoly<F>,
    den: Vec<DenFactor<F>>,
    extra: Option<MultiPoly<F>>,
}

impl<F: Field> PartialEq for RationalFn<F> {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den_poly()) == o.num.mul(&self.den_poly())
    }
}

impl<F: Field> RationalFn<F> {
    pub fn new(num: MultiPoly<F>, den: Vec<DenFactor<F>>, extra: Option<MultiPoly<F>>) -> Result<Self> {
        if extra.as_ref().is_some_and(|e| e.is_zero()) {
            return Err(AlgebraError::DivisionByZero);
        }
        if den.iter().any(|f| f.var >= num.nvars()) {
            return Err(AlgebraError::DimensionMismatch { expected: num.nvars(), got: den.len() });
        }
        let mut r = RationalFn { num, den: Vec::new(), extra };
        for f in den {
            r.push_factor(f);
        }
        Ok(r)
    }

    pub fn from_poly(p: MultiPoly<F>) -> Self {
        RationalFn { num: p, den: Vec::new(), extra: None }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(nvars))
    }

    fn push_factor(&mut self, f: DenFactor<F>) {
        if f.mult == 0 {
            return;
        }
        match self.den.iter_mut().find(|g| g.same_as(&f)) {
            Some(g) => g.mult += f.mult,
            None => self.den.push(f),
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &MultiPoly<F> {
        &self.num
    }

    pub fn den_factors(&self) -> &[DenFactor<F>] {
        &self.den
    }

    pub fn den_extra(&self) -> Option<&MultiPoly<F>> {
        self.extra.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The expanded denominator.
    pub fn den_poly(&self) -> MultiPoly<F> {
        let n = self.nvars();
        let mut d = self.extra.clone().unwrap_or_else(|| MultiPoly::one(n));
        for f in &self.den {
            d = d.mul(&f.poly(n));
        }
        d
    }

    /// Brings both operands over the least common factored denominator.
    fn align(&self, o: &Self) -> (MultiPoly<F>, MultiPoly<F>, Vec<DenFactor<F>>, Option<MultiPoly<F>>) {
        let n = self.nvars();
        let mut den: Vec<DenFactor<F>> = self.den.clone();
        let mut a = self.num.clone();
        let mut b = o.num.clone();
        for f in &o.den {
            match den.iter_mut().find(|g| g.same_as(f)) {
                Some(g) if g.mult >= f.mult => {
                    let mut miss = f.clone();
                    miss.mult = g.mult - f.mult;
                    b = b.mul(&miss.poly(n));
                }
                Some(g) => {
                    let mut miss = f.clone();
                    miss.mult = f.mult - g.mult;
                    a = a.mul(&miss.poly(n));
                    g.mult = f.mult;
                }
                None => {
                    a = a.mul(&f.poly(n));
                    den.push(f.clone());
                }
            }
        }
        for g in &self.den {
            if !o.den.iter().any(|f| f.same_as(g)) {
                b = b.mul(&g.poly(n));
            }
        }
        let extra = match (&self.extra, &o.extra) {
            (None, None) => None,
            (Some(e), None) => {
                b = b.mul(e);
                Some(e.clone())
            }
            (None, Some(e)) => {
                a = a.mul(e);
                Some(e.clone())
            }
            (Some(e1), Some(e2)) if e1 == e2 => Some(e1.clone()),
            (Some(e1), Some(e2)) => {
                a = a.mul(e2);
                b = b.mul(e1);
                Some(e1.mul(e2))
            }
        };
        (a, b, den, extra)
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b, den, extra) = self.align(o);
        RationalFn { num: a.add(&b), den, extra }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: self.num.neg(), ..self.clone() }
    }

    pub fn scale(&self, c: &F) -> Self {
        RationalFn { num: self.num.scale(c), ..self.clone() }
    }

    pub fn mul_poly(&self, p: &MultiPoly<F>) -> Self {
        RationalFn { num: self.num.mul(p), ..self.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = RationalFn {
            num: self.num.mul(&o.num),
            den: self.den.clone(),
            extra: match (&self.extra, &o.extra) {
                (None, None) => None,
                (Some(e), None) | (None, Some(e)) => Some(e.clone()),
                (Some(a), Some(b)) => Some(a.mul(b)),
            },
        };
        for f in &o.den {
            r.push_factor(f.clone());
        }
        r
    }

    /// Appends `k` trailing variables.
    pub fn extend_vars(&self, k: usize) -> Self {
        RationalFn { num: self.num.extend_vars(k), den: self.den.clone(), extra: self.extra.as_ref().map(|e| e.extend_vars(k)) }
    }

    /// Divides by a general polynomial, kept in the extra factor.
    pub fn divide_by_poly(&self, d: &MultiPoly<F>) -> Result<Self> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let extra = match &self.extra {
            Some(e) => e.mul(d),
            None => d.clone(),
        };
        Ok(RationalFn { num: self.num.clone(), den: self.den.clone(), extra: Some(extra) })
    }

    /// Refuses points on the polar set.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars() {
            return Err(AlgebraError::DimensionMismatch { expected: self.nvars(), got: point.len() });
        }
        let mut d = match &self.extra {
            Some(e) => e.eval(point)?,
            None => F::one(),
        };
        for f in &self.den {
            d = d.mul(&point[f.var].sub(&f.root).powi(f.mult as i64)?);
        }
        if d.is_zero() {
            return Err(AlgebraError::Pole("rational function evaluated on its polar set"));
        }
        self.num.eval(point)?.div(&d)
    }

    /// Variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.nvars();
        RationalFn {
            num: self.num.rename_vars(perm, n),
            den: self.den.iter().map(|f| DenFactor { var: perm[f.var], ..f.clone() }).collect(),
            extra: self.extra.as_ref().map(|e| e.rename_vars(perm, n)),
        }
    }

    /// `u_i -> s u_i`
    pub fn scale_var(&self, i: usize, s: &F) -> Result<Self> {
        let s_inv = s.inv()?;
        let mut num = self.num.scale_var(i, s);
        let mut den = Vec::with_capacity(self.den.len());
        for f in &self.den {
            if f.var == i {
                // s u - r = s (u - r/s)
                num = num.scale(&s_inv.powi(f.mult as i64)?);
                den.push(DenFactor::new(i, f.root.mul(&s_inv), f.mult));
            } else {
                den.push(f.clone());
            }
        }
        Ok(RationalFn { num, den, extra: self.extra.as_ref().map(|e| e.scale_var(i, s)) })
    }

    /// `u_i -> u_i + s`
    pub fn shift_var(&self, i: usize, s: &F) -> Self {
        let den = self
            .den
            .iter()
            .map(|f| if f.var == i { DenFactor::new(i, f.root.sub(s), f.mult) } else { f.clone() })
            .collect();
        RationalFn { num: self.num.shift_var(i, s), den, extra: self.extra.as_ref().map(|e| e.shift_var(i, s)) }
    }

    /// Limit `u_var -> infinity`, as a function of the remaining variables.
    pub fn at_infinity(&self, var: usize) -> Result<Self> {
        let n = self.nvars();
        if var >= n {
            return Err(AlgebraError::DimensionMismatch { expected: n, got: var + 1 });
        }
        let drop = |j: usize| if j > var { j - 1 } else { j };
        if self.num.is_zero() {
            return Ok(Self::zero(n - 1));
        }
        let dn = self.num.degree_in(var).unwrap_or(0);
        let mut dd: u32 = self.den.iter().filter(|f| f.var == var).map(|f| f.mult).sum();
        let mut extra = None;
        if let Some(e) = &self.extra {
            let de = e.degree_in(var).unwrap_or(0);
            dd += de;
            extra = Some(coefficient_in(e, var, de));
        }
        if dn > dd {
            return Err(AlgebraError::Pole("rational function grows at infinity"));
        }
        if dn < dd {
            return Ok(Self::zero(n - 1));
        }
        let den = self
            .den
            .iter()
            .filter(|f| f.var != var)
            .map(|f| DenFactor { var: drop(f.var), ..f.clone() })
            .collect();
        Ok(RationalFn { num: coefficient_in(&self.num, var, dn), den, extra })
    }

    pub fn to_json(&self, names: &[String]) -> Value {
        let den: Vec<Value> = self
            .den
            .iter()
            .map(|f| {
                let mut v = json!({"var": f.var + 1, "root": f.root.to_json(), "mult": f.mult});
                if let Some(k) = f.q_exp {
                    v["q_exp"] = json!(k);
                }
                v
            })
            .collect();
        let mut v = json!({"num": self.num.to_json(names), "den_factors": den});
        if let Some(e) = &self.extra {
            v["den_extra"] = e.to_json(names);
        }
        v
    }
}

/// Coefficient of `x_var^k`, with `x_var` removed from the ring.
pub fn coefficient_in<F: Field>(p: &MultiPoly<F>, var: usize, k: u32) -> MultiPoly<F> {
    let n = p.nvars();
    let mut out = MultiPoly::zero(n - 1);
    for (e, c) in p.terms() {
        if e[var] == k {
            let e2: Exponent = e.iter().enumerate().filter(|(i, _)| *i != var).map(|(_, x)| *x).collect();
            out.add_term(e2, c.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    fn r(n: i64) -> Rat {
        Rat::new(n, 1)
    }

    fn inv_var(n: usize, i: usize) -> RationalFn<Rat> {
        RationalFn::new(MultiPoly::one(n), vec![DenFactor::new(i, r(0), 1)], None).unwrap()
    }

    #[test]
    fn sum_of_reciprocals() {
        let lhs = inv_var(2, 0).add(&inv_var(2, 1));
        let rhs = RationalFn::new(
            MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1)),
            vec![DenFactor::new(0, r(0), 1), DenFactor::new(1, r(0), 1)],
            None,
        )
        .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.den_factors().len(), 2);
        assert!(lhs.eval(&[r(0), r(1)]).is_err());
        assert_eq!(lhs.eval(&[r(2), r(3)]).unwrap(), Rat::new(5, 6));
    }

    #[test]
    fn limits_and_shifts() {
        // (u1 + u2) / ((u2 - 1) u1)
        let f = RationalFn::new(
            MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1)),
            vec![DenFactor::new(1, r(1), 1), DenFactor::new(0, r(0), 1)],
            None,
        )
        .unwrap();
        let lim = f.at_infinity(1).unwrap();
        assert_eq!(lim, inv_var(1, 0));
        assert!(!f.at_infinity(0).unwrap().is_zero());
        let g = f.shift_var(1, &r(1)).scale_var(0, &r(2)).unwrap();
        let p = [r(3), r(5)];
        assert_eq!(g.eval(&p).unwrap(), f.eval(&[r(6), r(6)]).unwrap());
        let h = f.permute(&[1, 0]);
        assert_eq!(h.eval(&[r(5), r(3)]).unwrap(), f.eval(&p).unwrap());
    }
}
