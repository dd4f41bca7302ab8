//! Symmetric functions up to a degree bound, in the monomial, power-sum and
//! Macdonald bases, with the (q,t) scalar product.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::branching::b_partition;
use super::poly::{macdonald_p, monomial_symmetric};
use crate::algebra::{linalg, Field, MultiPoly, QtParams, Rat, ScalarQT};
use crate::error::{AlgebraError, Result};
use crate::partitions::{partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    PowerSum,
    MacdonaldP,
    MacdonaldQ,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::MacdonaldP => "P",
            Basis::MacdonaldQ => "Q",
        }
    }
}

/// Per-degree transition data between the monomial and power-sum bases.
struct CombTables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `p_rho = sum_lambda p_to_m[rho][lambda] m_lambda`
    p_to_m: Vec<Vec<Rat>>,
    m_to_p: Vec<Vec<Rat>>,
}

/// `P_lambda = sum_kappa p_in_m[lambda][kappa] m_kappa`, generic (q,t).
struct MacTables {
    p_in_m: Vec<Vec<ScalarQT>>,
}

fn comb_tables(n: u32) -> Arc<CombTables> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CombTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let parts = partitions_of(n, n as usize);
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let p_to_m: Vec<Vec<Rat>> = parts
        .iter()
        .map(|rho| parts.iter().map(|lam| Rat::from_i64(power_sum_monomial_coeff(rho, lam) as i64)).collect())
        .collect();
    let m_to_p = linalg::inverse(&p_to_m).expect("power sums form a basis");
    let t = Arc::new(CombTables { parts, index, p_to_m, m_to_p });
    cache.lock().unwrap().insert(n, t.clone());
    t
}

fn mac_tables(n: u32) -> Result<Arc<MacTables>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<MacTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let comb = comb_tables(n);
    let ctx = QtParams::generic();
    let nv = n as usize;
    let mut p_in_m = Vec::new();
    for lam in &comb.parts {
        let poly = macdonald_p(&ctx, lam, nv)?;
        p_in_m.push(comb.parts.iter().map(|k| poly.coeff(&padded(k, nv))).collect());
    }
    let t = Arc::new(MacTables { p_in_m });
    cache.lock().unwrap().insert(n, t.clone());
    Ok(t)
}

fn padded(p: &Partition, n: usize) -> Vec<u32> {
    (0..n).map(|i| p.part(i)).collect()
}

/// Coefficient of `x^lambda` in `p_rho`: ways to distribute the parts of
/// `rho` among the rows of `lambda`.
fn power_sum_monomial_coeff(rho: &Partition, lambda: &Partition) -> u64 {
    fn rec(parts: &[u32], rem: &mut Vec<u32>) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return rem.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for i in 0..rem.len() {
            if rem[i] >= first {
                rem[i] -= first;
                total += rec(rest, rem);
                rem[i] += first;
            }
        }
        total
    }
    rec(rho.parts(), &mut lambda.parts().to_vec())
}

fn to_scalar(r: &Rat) -> ScalarQT {
    ScalarQT::from_rational(&r.0)
}

/// `z_rho prod (1 - q^rho_i) / (1 - t^rho_i)`
pub fn power_sum_norm(rho: &Partition) -> ScalarQT {
    let mut z = BigInt::from(1);
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (&i, &m) in &counts {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    let mut acc = ScalarQT::from_rational(&BigRational::from_integer(z));
    for &p in rho.parts() {
        let p = p as i32;
        acc = acc.mul(&ScalarQT::cyclo(p, 0, 1).unwrap()).mul(&ScalarQT::cyclo(0, p, -1).unwrap());
    }
    acc
}

#[derive(Clone, Debug)]
pub struct SymFunc {
    basis: Basis,
    degree_bound: u32,
    terms: BTreeMap<Partition, ScalarQT>,
}

impl PartialEq for SymFunc {
    fn eq(&self, o: &Self) -> bool {
        if self.basis != o.basis {
            return match o.to_basis(self.basis) {
                Ok(x) => *self == x,
                Err(_) => false,
            };
        }
        let keys: std::collections::BTreeSet<&Partition> = self.terms.keys().chain(o.terms.keys()).collect();
        keys.into_iter().all(|k| self.coeff(k).equals(&o.coeff(k)))
    }
}

impl SymFunc {
    pub fn zero(basis: Basis, degree_bound: u32) -> Self {
        SymFunc { basis, degree_bound, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, lambda: &Partition, degree_bound: u32) -> Self {
        let mut f = Self::zero(basis, degree_bound);
        f.add_term(lambda.clone(), ScalarQT::one());
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &ScalarQT)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> ScalarQT {
        self.terms.get(lambda).cloned().unwrap_or_else(ScalarQT::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: ScalarQT) {
        if lambda.size() > self.degree_bound || c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&lambda) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(lambda, v);
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let o = o.to_basis(self.basis)?;
        let mut out = self.clone();
        out.degree_bound = self.degree_bound.min(o.degree_bound);
        out.terms.retain(|k, _| k.size() <= out.degree_bound);
        for (k, c) in o.terms {
            out.add_term(k, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ScalarQT) -> Self {
        let mut out = Self::zero(self.basis, self.degree_bound);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Converts to the monomial basis.
    pub fn to_monomial(&self) -> Result<Self> {
        let mut out = Self::zero(Basis::Monomial, self.degree_bound);
        match self.basis {
            Basis::Monomial => return Ok(self.clone()),
            Basis::PowerSum => {
                for (rho, c) in &self.terms {
                    let t = comb_tables(rho.size());
                    let row = &t.p_to_m[t.index[rho]];
                    for (lam, r) in t.parts.iter().zip(row) {
                        if !r.is_zero() {
                            out.add_term(lam.clone(), c.mul(&to_scalar(r)));
                        }
                    }
                }
            }
            Basis::MacdonaldP | Basis::MacdonaldQ => {
                for (lam, c) in &self.terms {
                    let n = lam.size();
                    let (t, m) = (comb_tables(n), mac_tables(n)?);
                    let c = if self.basis == Basis::MacdonaldQ { c.mul(&b_partition(lam).to_scalar()) } else { c.clone() };
                    for (k, v) in t.parts.iter().zip(&m.p_in_m[t.index[lam]]) {
                        out.add_term(k.clone(), c.mul(v));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn to_basis(&self, target: Basis) -> Result<Self> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let m = self.to_monomial()?;
        let mut out = Self::zero(target, self.degree_bound);
        match target {
            Basis::Monomial => return Ok(m),
            Basis::PowerSum => {
                for (lam, c) in &m.terms {
                    let t = comb_tables(lam.size());
                    let row = &t.m_to_p[t.index[lam]];
                    for (rho, r) in t.parts.iter().zip(row) {
                        if !r.is_zero() {
                            out.add_term(rho.clone(), c.mul(&to_scalar(r)));
                        }
                    }
                }
            }
            Basis::MacdonaldP | Basis::MacdonaldQ => {
                // P is unitriangular in dominance order, which lexicographic
                // order refines: peel off the lexicographically largest term.
                let mut rem = m;
                while let Some((lam, c)) = rem.terms.iter().max_by(|a, b| lex_key(a.0).cmp(&lex_key(b.0))).map(|(k, v)| (k.clone(), v.clone())) {
                    let p = Self::basis_element(Basis::MacdonaldP, &lam, self.degree_bound).scale(&c).to_monomial()?;
                    rem = rem.add(&p.scale(&ScalarQT::from_i64(-1)))?;
                    let coef = if target == Basis::MacdonaldQ {
                        c.div(&b_partition(&lam).to_scalar())?
                    } else {
                        c
                    };
                    out.add_term(lam, coef);
                }
            }
        }
        Ok(out)
    }

    /// Image in `n` variables.
    pub fn restrict(&self, n: usize) -> Result<MultiPoly<ScalarQT>> {
        let m = self.to_monomial()?;
        let mut out = MultiPoly::zero(n);
        for (lam, c) in &m.terms {
            out = out.add(&monomial_symmetric::<ScalarQT>(lam, n).scale(c));
        }
        Ok(out)
    }

    /// Reads a symmetric polynomial in the monomial basis. Faithful when the
    /// number of variables is at least the degree.
    pub fn from_symmetric_poly(f: &MultiPoly<ScalarQT>, degree_bound: u32) -> Self {
        let mut out = Self::zero(Basis::Monomial, degree_bound);
        for (e, c) in f.terms() {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::new(e.clone()).expect("sorted"), c.clone());
            }
        }
        out
    }

    /// Same function viewed with a different degree bound; terms above the
    /// new bound are dropped.
    pub fn with_degree_bound(&self, d: u32) -> Self {
        let mut out = Self::zero(self.basis, d);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        let mut out = Self::zero(self.basis, self.degree_bound);
        for (k, c) in &self.terms {
            if k.size() == d {
                out.add_term(k.clone(), c.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(k, c)| json!({"partition": k.to_json(), "coef": c.to_json()})).collect();
        json!({"basis": self.basis.tag(), "degree_bound": self.degree_bound, "terms": terms})
    }
}

fn lex_key(p: &Partition) -> (u32, Vec<u32>) {
    (p.size(), p.parts().to_vec())
}

/// `<f, g>_{q,t}` via the power-sum basis.
pub fn scalar_product(f: &SymFunc, g: &SymFunc) -> Result<ScalarQT> {
    if f.degree_bound != g.degree_bound {
        return Err(AlgebraError::Incompatible("degree bounds differ"));
    }
    let (fp, gp) = (f.to_basis(Basis::PowerSum)?, g.to_basis(Basis::PowerSum)?);
    let mut acc = ScalarQT::zero();
    for (rho, c) in &fp.terms {
        let d = gp.coeff(rho);
        if !d.is_zero() {
            acc = acc.add(&c.mul(&d).mul(&power_sum_norm(rho)));
        }
    }
    Ok(acc)
}

/// `P_mu` from orthogonality alone: `m_mu + sum_{lambda < mu} c_lambda m_lambda`
/// with `<P_mu, m_lambda> = 0` for every `lambda` strictly dominated by `mu`.
pub fn gram_schmidt_oracle(mu: &Partition, degree_bound: u32) -> Result<SymFunc> {
    let n = mu.size();
    let t = comb_tables(n);
    let below: Vec<&Partition> = t.parts.iter().filter(|l| *l != mu && mu.dominates(l)).collect();
    let norms: Vec<ScalarQT> = t.parts.iter().map(power_sum_norm).collect();
    let gram = |a: &Partition, b: &Partition| -> ScalarQT {
        let (ra, rb) = (&t.m_to_p[t.index[a]], &t.m_to_p[t.index[b]]);
        let mut acc = ScalarQT::zero();
        for i in 0..t.parts.len() {
            if !ra[i].is_zero() && !rb[i].is_zero() {
                acc = acc.add(&norms[i].mul(&to_scalar(&ra[i].mul(&rb[i]))));
            }
        }
        acc
    };
    let a: Vec<Vec<ScalarQT>> = below.iter().map(|k| below.iter().map(|l| gram(l, k)).collect()).collect();
    let b: Vec<ScalarQT> = below.iter().map(|k| gram(mu, k).neg()).collect();
    let c = linalg::solve(&a, &b)?;
    let mut out = SymFunc::basis_element(Basis::Monomial, mu, degree_bound);
    for (l, v) in below.into_iter().zip(c) {
        out.add_term(l.clone(), v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn scalar_product_examples() {
        let p1 = SymFunc::basis_element(Basis::PowerSum, &p(&[1]), 2);
        let expected = ScalarQT::cyclo(1, 0, 1).unwrap().mul(&ScalarQT::cyclo(0, 1, -1).unwrap());
        assert_eq!(scalar_product(&p1, &p1).unwrap(), expected);
        let one = SymFunc::basis_element(Basis::PowerSum, &p(&[]), 2);
        assert!(scalar_product(&one, &one).unwrap().is_one());
        let a = SymFunc::basis_element(Basis::MacdonaldP, &p(&[2]), 2);
        let b = SymFunc::basis_element(Basis::MacdonaldQ, &p(&[1, 1]), 2);
        assert!(scalar_product(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn gram_schmidt_small() {
        assert_eq!(gram_schmidt_oracle(&p(&[1]), 1).unwrap(), SymFunc::basis_element(Basis::Monomial, &p(&[1]), 1));
        assert_eq!(gram_schmidt_oracle(&p(&[1, 1]), 2).unwrap(), SymFunc::basis_element(Basis::Monomial, &p(&[1, 1]), 2));
        let gs = gram_schmidt_oracle(&p(&[2]), 2).unwrap();
        assert_eq!(gs, SymFunc::basis_element(Basis::MacdonaldP, &p(&[2]), 2));
    }

    #[test]
    fn basis_round_trips() {
        let mut f = SymFunc::zero(Basis::MacdonaldQ, 3);
        f.add_term(p(&[2, 1]), ScalarQT::q());
        f.add_term(p(&[1]), ScalarQT::t());
        for b in [Basis::Monomial, Basis::PowerSum, Basis::MacdonaldP] {
            let g = f.to_basis(b).unwrap().to_basis(Basis::MacdonaldQ).unwrap();
            assert_eq!(g.terms().count(), 2);
            assert_eq!(g.coeff(&p(&[2, 1])), ScalarQT::q());
        }
    }
}
