//! Macdonald polynomials in finitely many variables via the tableau formula.

use std::collections::HashMap;

use super::branching::{b_partition, psi};
use crate::algebra::{CycloFactored, Field, MultiPoly, QtParams};
use crate::error::Result;
use crate::partitions::{enumerate_rtab, Partition, StripChain};

/// Memoized `psi_{mu/nu}` values under a fixed specialization.
pub(crate) struct PsiCache<'a, F> {
    ctx: &'a QtParams<F>,
    map: HashMap<(Partition, Partition), F>,
}

impl<'a, F: Field> PsiCache<'a, F> {
    pub(crate) fn new(ctx: &'a QtParams<F>) -> Self {
        PsiCache { ctx, map: HashMap::new() }
    }

    pub(crate) fn strip(&mut self, mu: &Partition, nu: &Partition) -> Result<F> {
        let key = (mu.clone(), nu.clone());
        if let Some(v) = self.map.get(&key) {
            return Ok(v.clone());
        }
        let v = psi(mu, nu)?.eval(self.ctx)?;
        self.map.insert(key, v.clone());
        Ok(v)
    }

    pub(crate) fn chain(&mut self, c: &StripChain) -> Result<F> {
        let mut acc = F::one();
        for (a, b) in c.strips() {
            acc = acc.mul(&self.strip(a, b)?);
        }
        Ok(acc)
    }
}

/// `P_{mu|N} = sum_T psi_T x^T`; zero when `l(mu) > N`.
pub fn macdonald_p<F: Field>(ctx: &QtParams<F>, mu: &Partition, n: usize) -> Result<MultiPoly<F>> {
    let mut cache = PsiCache::new(ctx);
    let mut out = MultiPoly::zero(n);
    for chain in enumerate_rtab(mu, n) {
        let w = cache.chain(&chain)?;
        let exp: Vec<u32> = chain.strips().map(|(a, b)| a.size() - b.size()).collect();
        out.add_term(exp, w);
    }
    Ok(out)
}

/// `Q_{mu|N} = b_mu P_{mu|N}`.
pub fn macdonald_q<F: Field>(ctx: &QtParams<F>, mu: &Partition, n: usize) -> Result<MultiPoly<F>> {
    Ok(macdonald_p(ctx, mu, n)?.scale(&b_partition(mu).eval(ctx)?))
}

/// `psi_T` for every chain, in factored form.
pub fn chain_weights(mu: &Partition, n: usize) -> Result<Vec<(StripChain, CycloFactored)>> {
    enumerate_rtab(mu, n)
        .into_iter()
        .map(|c| {
            let w = super::branching::psi_chain(&c)?;
            Ok((c, w))
        })
        .collect()
}

/// The monomial symmetric polynomial `m_lambda(x_1..x_N)`.
pub fn monomial_symmetric<F: Field>(lambda: &Partition, n: usize) -> MultiPoly<F> {
    let mut out = MultiPoly::zero(n);
    if lambda.len() > n {
        return out;
    }
    let mut base: Vec<u32> = (0..n).map(|i| lambda.part(i)).collect();
    base.sort_unstable();
    // iterate distinct permutations in lexicographic order
    loop {
        out.add_term(base.clone(), F::one());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| base[i] < base[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| base[j] > base[i]).unwrap();
        base.swap(i, j);
        base[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ScalarQT;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_cases() {
        let ctx = QtParams::generic();
        let e1: MultiPoly<ScalarQT> = monomial_symmetric(&p(&[1]), 3);
        assert_eq!(macdonald_p(&ctx, &p(&[1]), 3).unwrap(), e1);
        assert_eq!(macdonald_p(&ctx, &p(&[1, 1]), 2).unwrap(), monomial_symmetric(&p(&[1, 1]), 2));
        let c = ScalarQT::cyclo(0, 1, 1)
            .unwrap()
            .mul(&ScalarQT::from_poly(crate::algebra::QtPoly::one_minus(2, 0)))
            .div(&ScalarQT::cyclo(1, 0, 1).unwrap().mul(&ScalarQT::cyclo(1, 1, 1).unwrap()))
            .unwrap();
        let expected = monomial_symmetric(&p(&[2]), 2).add(&monomial_symmetric(&p(&[1, 1]), 2).scale(&c));
        assert_eq!(macdonald_p(&ctx, &p(&[2]), 2).unwrap(), expected);
        assert!(macdonald_p(&ctx, &p(&[1, 1, 1]), 2).unwrap().is_zero());
    }

    #[test]
    fn monomial_symmetric_counts() {
        let m: MultiPoly<ScalarQT> = monomial_symmetric(&p(&[2, 1]), 3);
        assert_eq!(m.num_terms(), 6);
        let m: MultiPoly<ScalarQT> = monomial_symmetric(&p(&[1, 1]), 3);
        assert_eq!(m.num_terms(), 3);
    }
}
