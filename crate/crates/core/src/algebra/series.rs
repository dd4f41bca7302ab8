//! Truncated multivariate power series with per-block degree cutoffs.
//!
//! Variables are grouped into blocks (for example x's, y's = u^-1, and z);
//! a term is kept iff its degree within every block is at most that block's
//! cutoff.

use serde_json::{json, Value};

use super::context::QtParams;
use super::field::Field;
use super::multipoly::{Exponent, MultiPoly};
use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub block_of: Vec<usize>,
    pub cutoffs: Vec<u32>,
}

impl BlockSpec {
    /// A single block of `nvars` variables.
    pub fn single(nvars: usize, cutoff: u32) -> Self {
        BlockSpec { block_of: vec![0; nvars], cutoffs: vec![cutoff] }
    }

    /// Consecutive blocks of the given sizes.
    pub fn blocks(sizes: &[(usize, u32)]) -> Self {
        let mut block_of = Vec::new();
        for (b, (n, _)) in sizes.iter().enumerate() {
            block_of.extend(std::iter::repeat(b).take(*n));
        }
        BlockSpec { block_of, cutoffs: sizes.iter().map(|s| s.1).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.block_of.len()
    }

    fn degrees(&self, e: &[u32]) -> Vec<u32> {
        let mut d = vec![0; self.cutoffs.len()];
        for (i, k) in e.iter().enumerate() {
            d[self.block_of[i]] += k;
        }
        d
    }

    pub fn admits(&self, e: &[u32]) -> bool {
        self.degrees(e).iter().zip(&self.cutoffs).all(|(d, c)| d <= c)
    }

    fn meet(&self, o: &Self) -> Result<Self> {
        if self.block_of != o.block_of {
            return Err(AlgebraError::Incompatible("series block structures differ"));
        }
        Ok(BlockSpec {
            block_of: self.block_of.clone(),
            cutoffs: self.cutoffs.iter().zip(&o.cutoffs).map(|(a, b)| *a.min(b)).collect(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct TruncSeries<F> {
    spec: BlockSpec,
    poly: MultiPoly<F>,
}

impl<F: Field> PartialEq for TruncSeries<F> {
    fn eq(&self, o: &Self) -> bool {
        self.spec == o.spec && self.poly == o.poly
    }
}

impl<F: Field> TruncSeries<F> {
    pub fn zero(spec: BlockSpec) -> Self {
        let n = spec.nvars();
        TruncSeries { spec, poly: MultiPoly::zero(n) }
    }

    pub fn one(spec: BlockSpec) -> Self {
        Self::from_poly(MultiPoly::one(spec.nvars()), spec)
    }

    pub fn from_poly(p: MultiPoly<F>, spec: BlockSpec) -> Self {
        assert_eq!(p.nvars(), spec.nvars(), "variable count mismatch");
        let poly = MultiPoly::from_terms(
            p.nvars(),
            p.terms().filter(|(e, _)| spec.admits(e)).map(|(e, c)| (e.clone(), c.clone())),
        );
        TruncSeries { spec, poly }
    }

    pub fn spec(&self) -> &BlockSpec {
        &self.spec
    }

    pub fn poly(&self) -> &MultiPoly<F> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, e: &[u32]) -> F {
        self.poly.coeff(e)
    }

    pub fn truncate(&self, spec: &BlockSpec) -> Result<Self> {
        let s = self.spec.meet(spec)?;
        Ok(Self::from_poly(self.poly.clone(), s))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let s = self.spec.meet(&o.spec)?;
        Ok(Self::from_poly(self.poly.add(&o.poly), s))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        let s = self.spec.meet(&o.spec)?;
        Ok(Self::from_poly(self.poly.sub(&o.poly), s))
    }

    pub fn neg(&self) -> Self {
        TruncSeries { spec: self.spec.clone(), poly: self.poly.neg() }
    }

    pub fn scale(&self, c: &F) -> Self {
        TruncSeries { spec: self.spec.clone(), poly: self.poly.scale(c) }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let spec = self.spec.meet(&o.spec)?;
        let a: Vec<(&Exponent, &F, Vec<u32>)> =
            self.poly.terms().map(|(e, c)| (e, c, spec.degrees(e))).collect();
        let b: Vec<(&Exponent, &F, Vec<u32>)> =
            o.poly.terms().map(|(e, c)| (e, c, spec.degrees(e))).collect();
        let mut out = MultiPoly::zero(spec.nvars());
        for (ea, ca, da) in &a {
            if da.iter().zip(&spec.cutoffs).any(|(d, c)| d > c) {
                continue;
            }
            for (eb, cb, db) in &b {
                if da.iter().zip(db).zip(&spec.cutoffs).any(|((x, y), c)| x + y > *c) {
                    continue;
                }
                let e = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        Ok(TruncSeries { spec, poly: out })
    }

    /// Product with a polynomial, truncated to this series' cutoffs.
    pub fn mul_poly(&self, p: &MultiPoly<F>) -> Result<Self> {
        self.mul(&Self::from_poly(p.clone(), self.spec.clone()))
    }

    /// Multiplicative inverse; the constant term must be invertible.
    pub fn reciprocal(&self) -> Result<Self> {
        let zero = vec![0; self.spec.nvars()];
        let c0 = self.poly.coeff(&zero);
        let c0_inv = c0.inv()?;
        // 1/f = c0^-1 * sum_k (-g)^k with g = f/c0 - 1
        let one = Self::one(self.spec.clone());
        let g = self.scale(&c0_inv).sub(&one)?;
        let neg_g = g.neg();
        let mut acc = one.clone();
        let mut power = one;
        loop {
            power = power.mul(&neg_g)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc.scale(&c0_inv))
    }

    /// `x_i -> s x_i`
    pub fn scale_var(&self, i: usize, s: &F) -> Self {
        TruncSeries { spec: self.spec.clone(), poly: self.poly.scale_var(i, s) }
    }

    /// Substitutes a series without constant term for variable `i`.
    pub fn compose_var(&self, i: usize, s: &Self) -> Result<Self> {
        let zero = vec![0; self.spec.nvars()];
        if !s.poly.coeff(&zero).is_zero() {
            return Err(AlgebraError::Incompatible("substituted series has a constant term"));
        }
        let mut pows = vec![Self::one(self.spec.clone())];
        let mut out = Self::zero(self.spec.clone());
        for (e, c) in self.poly.terms() {
            while pows.len() <= e[i] as usize {
                let next = pows.last().unwrap().mul(s)?;
                pows.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let m = Self::from_poly(MultiPoly::monomial(rest, c.clone()), self.spec.clone());
            out = out.add(&m.mul(&pows[e[i] as usize])?)?;
        }
        Ok(out)
    }

    /// Substitutes `z = c * x^exp` into a univariate series in `z`.
    pub fn from_univariate(coeffs: &[F], c: &F, exp: &[u32], spec: BlockSpec) -> Self {
        let mut out = MultiPoly::zero(spec.nvars());
        let mut cp = F::one();
        for (k, a) in coeffs.iter().enumerate() {
            let e: Exponent = exp.iter().map(|x| x * k as u32).collect();
            if !spec.admits(&e) {
                break;
            }
            out.add_term(e, a.mul(&cp));
            cp = cp.mul(c);
        }
        TruncSeries { spec, poly: out }
    }

    /// First exponent (in lexicographic order) where the two series differ,
    /// with both coefficients.
    pub fn first_difference(&self, o: &Self) -> Option<(Exponent, F, F)> {
        let d = self.poly.sub(&o.poly);
        let e = d.terms().next().map(|(e, _)| e.clone())?;
        Some((e.clone(), self.coeff(&e), o.coeff(&e)))
    }

    pub fn to_json(&self, names: &[String]) -> Value {
        let mut v = self.poly.to_json(names);
        v["cutoff"] = if self.spec.cutoffs.len() == 1 {
            json!(self.spec.cutoffs[0])
        } else {
            json!(self.spec.cutoffs)
        };
        if self.spec.cutoffs.len() > 1 {
            v["blocks"] = json!(self.spec.block_of);
        }
        v
    }
}

/// Coefficients of `(z;q)_inf` through degree `d`, from
/// `exp(-sum_m z^m / (m (1 - q^m)))`.
pub fn pochhammer_coeffs<F: Field>(ctx: &QtParams<F>, d: usize) -> Result<Vec<F>> {
    // n E_n = sum_{k=1}^n k L_k E_{n-k} with k L_k = -1/(1-q^k)
    let kl: Vec<F> = (1..=d)
        .map(|k| F::one().sub(&ctx.q.powi(k as i64)?).inv().map(|x| x.neg()))
        .collect::<Result<_>>()?;
    let mut e = vec![F::one()];
    for n in 1..=d {
        let mut s = F::zero();
        for k in 1..=n {
            s = s.add(&kl[k - 1].mul(&e[n - k]));
        }
        e.push(s.div(&F::from_i64(n as i64))?);
    }
    Ok(e)
}

/// Inverse of a univariate series with invertible constant term.
pub fn univariate_reciprocal<F: Field>(a: &[F]) -> Result<Vec<F>> {
    let a0_inv = a[0].inv()?;
    let mut b = vec![a0_inv.clone()];
    for n in 1..a.len() {
        let mut s = F::zero();
        for k in 1..=n {
            s = s.add(&a[k].mul(&b[n - k]));
        }
        b.push(s.mul(&a0_inv).neg());
    }
    Ok(b)
}

/// One factor `(c * x^exp; q)_inf ^ sign` of a product.
#[derive(Clone, Debug)]
pub struct PochFactor<F> {
    pub coeff: F,
    pub exp: Exponent,
    pub sign: i32,
}

impl<F: Field> PochFactor<F> {
    pub fn new(coeff: F, exp: Exponent, sign: i32) -> Self {
        PochFactor { coeff, exp, sign }
    }
}

/// Truncated expansion of a product of Pochhammer factors.
pub fn series_from_product<F: Field>(
    ctx: &QtParams<F>,
    factors: &[PochFactor<F>],
    spec: &BlockSpec,
) -> Result<TruncSeries<F>> {
    let mut acc = TruncSeries::one(spec.clone());
    let mut cache: Vec<(usize, Vec<F>, Vec<F>)> = Vec::new();
    for f in factors {
        let degs = spec.degrees(&f.exp);
        let order = degs
            .iter()
            .zip(&spec.cutoffs)
            .filter(|(d, _)| **d > 0)
            .map(|(d, c)| (c / d) as usize)
            .min()
            .ok_or(AlgebraError::Incompatible("Pochhammer factor with constant argument"))?;
        let idx = match cache.iter().position(|c| c.0 >= order) {
            Some(i) => i,
            None => {
                let p = pochhammer_coeffs(ctx, order)?;
                let r = univariate_reciprocal(&p)?;
                cache.push((order, p, r));
                cache.len() - 1
            }
        };
        let coeffs = if f.sign >= 0 { &cache[idx].1 } else { &cache[idx].2 };
        let s = TruncSeries::from_univariate(&coeffs[..=order], &f.coeff, &f.exp, spec.clone());
        acc = acc.mul(&s)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ScalarQT;

    #[test]
    fn pochhammer_low_orders() {
        let ctx = QtParams::generic();
        let c = pochhammer_coeffs(&ctx, 1).unwrap();
        assert!(c[0].is_one());
        assert_eq!(c[1], ScalarQT::cyclo(1, 0, -1).unwrap().neg());
    }

    #[test]
    fn single_ratio_factor() {
        let ctx = QtParams::generic();
        let spec = BlockSpec::blocks(&[(1, 1), (1, 1)]);
        let fs = [
            PochFactor::new(ScalarQT::t(), vec![1, 1], 1),
            PochFactor::new(ScalarQT::one(), vec![1, 1], -1),
        ];
        let s = series_from_product(&ctx, &fs, &spec).unwrap();
        let expected = ScalarQT::cyclo(0, 1, 1).unwrap().mul(&ScalarQT::cyclo(1, 0, -1).unwrap());
        assert_eq!(s.coeff(&[1, 1]), expected);
        assert!(s.coeff(&[0, 0]).is_one());
        assert_eq!(s.poly().num_terms(), 2);
    }
}
