//! Sparse multivariate polynomials over a field.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::field::Field;
use crate::error::{AlgebraError, Result};

pub type Exponent = Vec<u32>;

/// Map from exponent vectors to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct MultiPoly<F> {
    nvars: usize,
    terms: BTreeMap<Exponent, F>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, o: &Self) -> bool {
        self.nvars == o.nvars
            && self.terms.len() == o.terms.len()
            && self.terms.iter().zip(o.terms.iter()).all(|((ea, ca), (eb, cb))| ea == eb && ca.equals(cb))
    }
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exp: Exponent, c: F) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// `x_i - c`
    pub fn linear(nvars: usize, i: usize, c: &F) -> Self {
        Self::var(nvars, i).sub(&Self::constant(nvars, c.clone()))
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, F)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exponent, c: F) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul(s))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    pub fn try_map_coeffs<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<MultiPoly<G>> {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Top-degree homogeneous component.
    pub fn top_component(&self) -> Self {
        match self.total_degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars {
            return Err(AlgebraError::DimensionMismatch { expected: self.nvars, got: point.len() });
        }
        let mut powers: Vec<Vec<F>> = point.iter().map(|x| vec![F::one(), x.clone()]).collect();
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&point[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Sets `x_i = v` and removes the variable.
    pub fn substitute_remove(&self, i: usize, v: &F) -> Self {
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2.remove(i);
            out.add_term(e2, c.mul(&v.powi(k as i64).expect("nonnegative power")));
        }
        out
    }

    /// `x_i -> s * x_i`
    pub fn scale_var(&self, i: usize, s: &F) -> Self {
        let mut pw = vec![F::one()];
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            while pw.len() <= e[i] as usize {
                let next = pw.last().unwrap().mul(s);
                pw.push(next);
            }
            out.add_term(e.clone(), c.mul(&pw[e[i] as usize]));
        }
        out
    }

    /// `x_i -> x_i + s`
    pub fn shift_var(&self, i: usize, s: &F) -> Self {
        let lin = Self::var(self.nvars, i).add(&Self::constant(self.nvars, s.clone()));
        let mut lin_pows = vec![Self::one(self.nvars)];
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            while lin_pows.len() <= e[i] as usize {
                let next = lin_pows.last().unwrap().mul(&lin);
                lin_pows.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let m = Self::monomial(rest, c.clone());
            out = out.add(&m.mul(&lin_pows[e[i] as usize]));
        }
        out
    }

    /// Renames variables: old variable `i` becomes `perm[i]` in a polynomial
    /// with `new_nvars` variables.
    pub fn rename_vars(&self, perm: &[usize], new_nvars: usize) -> Self {
        let mut out = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; new_nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[perm[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Embeds into a ring with `extra` more trailing variables.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let perm: Vec<usize> = (0..self.nvars).collect();
        self.rename_vars(&perm, self.nvars + extra)
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (ld, lc) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((lr, cr)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if lr.iter().zip(&ld).any(|(a, b)| a < b) {
                return None;
            }
            let e: Exponent = lr.iter().zip(&ld).map(|(a, b)| a - b).collect();
            let m = Self::monomial(e, cr.mul(&lc_inv));
            rem = rem.sub(&m.mul(d));
            quot = quot.add(&m);
        }
        Some(quot)
    }

    /// Whether the polynomial is invariant under every transposition of
    /// adjacent variables among the first `k`.
    pub fn is_symmetric_in(&self, k: usize) -> bool {
        (0..k.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            &self.rename_vars(&perm, self.nvars) == self
        })
    }

    pub fn to_json(&self, names: &[String]) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(e, c)| json!({"exp": e, "coef": c.to_json()})).collect();
        json!({"vars": names, "terms": terms})
    }
}

/// Default variable names `prefix1..prefixN`.
pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    type P = MultiPoly<Rat>;

    #[test]
    fn exact_division_recovers_factor() {
        let x = P::var(2, 0);
        let y = P::var(2, 1);
        let a = x.sub(&y);
        let b = x.mul(&x).add(&y).add(&P::one(2));
        assert_eq!(a.mul(&b).div_exact(&a).unwrap(), b);
        assert!(b.div_exact(&a).is_none());
    }

    #[test]
    fn shift_and_scale() {
        let x = P::var(1, 0);
        let f = x.mul(&x);
        let one = Rat::from_i64(1);
        let g = f.shift_var(0, &one);
        assert_eq!(g, x.add(&P::one(1)).pow(2));
        let two = Rat::from_i64(2);
        assert_eq!(f.scale_var(0, &two), f.scale(&Rat::from_i64(4)));
    }
}
