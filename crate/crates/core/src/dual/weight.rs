//! Strip weights `W_{mu/nu}(u)` and the chain sums built from them.

use std::collections::HashMap;
use std::str::FromStr;

use crate::algebra::{BlockSpec, Field, MultiPoly, QtParams, ScalarKappa, ScalarQT, TruncSeries};
use crate::error::{AlgebraError, Result};
use crate::macdonald::phi;
use crate::partitions::{enumerate_rtab, is_horizontal_strip, Partition};

use super::rational::{DenFactor, RationalFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Qt,
    Jack,
    Whittaker,
    Hl,
}

impl FromStr for Family {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "qt" | "macdonald" => Ok(Family::Qt),
            "jack" => Ok(Family::Jack),
            "whittaker" | "w" => Ok(Family::Whittaker),
            "hl" | "hall-littlewood" => Ok(Family::Hl),
            _ => Err(AlgebraError::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// `prefactor * u^u_power * prod (u - r) / prod (u - s)`.
#[derive(Clone, Debug)]
pub struct StripWeight<F> {
    pub prefactor: F,
    pub u_power: i32,
    pub num_roots: Vec<F>,
    /// Roots with their `q`-exponent when they are pure powers of `q`.
    pub den_roots: Vec<(F, Option<i32>)>,
}

impl<F: Field> StripWeight<F> {
    /// Total degree in `u`.
    pub fn degree(&self) -> i32 {
        self.u_power + self.num_roots.len() as i32 - self.den_roots.len() as i32
    }

    pub fn eval(&self, u: &F) -> Result<F> {
        let mut v = self.prefactor.mul(&u.powi(self.u_power as i64)?);
        for r in &self.num_roots {
            v = v.mul(&u.sub(r));
        }
        for (s, _) in &self.den_roots {
            v = v.div(&u.sub(s))?;
        }
        Ok(v)
    }

    /// As a rational function of variable `var` out of `nvars`.
    pub fn to_rational(&self, var: usize, nvars: usize) -> RationalFn<F> {
        let mut num = MultiPoly::constant(nvars, self.prefactor.clone());
        if self.u_power > 0 {
            num = num.mul(&MultiPoly::var(nvars, var).pow(self.u_power as u32));
        }
        for r in &self.num_roots {
            num = num.mul(&MultiPoly::linear(nvars, var, r));
        }
        let mut den: Vec<DenFactor<F>> = self
            .den_roots
            .iter()
            .map(|(s, k)| match k {
                Some(k) => DenFactor::q_power(var, s.clone(), *k, 1),
                None => DenFactor::new(var, s.clone(), 1),
            })
            .collect();
        if self.u_power < 0 {
            den.push(DenFactor::new(var, F::zero(), (-self.u_power) as u32));
        }
        RationalFn::new(num, den, None).expect("factor variables are in range")
    }

    /// Coefficients of the expansion in `y = 1/u` through `y^order`.
    pub fn y_coeffs(&self, order: usize) -> Result<Vec<F>> {
        let shift = -self.degree();
        if shift < 0 {
            return Err(AlgebraError::Incompatible("strip weight of positive degree"));
        }
        let shift = shift as usize;
        let mut c = vec![F::zero(); order + 1];
        if shift > order {
            return Ok(c);
        }
        let len = order - shift + 1;
        let mut a = vec![F::zero(); len];
        a[0] = self.prefactor.clone();
        for r in &self.num_roots {
            for k in (1..len).rev() {
                a[k] = a[k].sub(&a[k - 1].mul(r));
            }
        }
        for (s, _) in &self.den_roots {
            for k in 1..len {
                a[k] = a[k].add(&a[k - 1].mul(s));
            }
        }
        for (k, v) in a.into_iter().enumerate() {
            c[k + shift] = v;
        }
        Ok(c)
    }

    /// Expansion in `y_var` inside a series ring.
    pub fn to_y_series(&self, var: usize, spec: &BlockSpec) -> Result<TruncSeries<F>> {
        let order = spec.cutoffs[spec.block_of[var]] as usize;
        let mut e = vec![0; spec.nvars()];
        e[var] = 1;
        Ok(TruncSeries::from_univariate(&self.y_coeffs(order)?, &F::one(), &e, spec.clone()))
    }
}

fn check_strip(mu: &Partition, nu: &Partition) -> Result<()> {
    if is_horizontal_strip(mu, nu) {
        Ok(())
    } else {
        Err(AlgebraError::NotAStrip(format!("{mu:?}/{nu:?}")))
    }
}

/// `(i, m)` with `mu_{i+1} < m <= nu_i`, `i >= 1`.
fn numerator_cells(mu: &Partition, nu: &Partition) -> Vec<(i32, i32)> {
    let mut out = Vec::new();
    for i in 1..=mu.len() {
        for m in mu.part(i) + 1..=nu.part(i - 1) {
            out.push((i as i32, m as i32));
        }
    }
    out
}

/// `phi_{mu/nu} prod_{i,m} (u - q^-m t^i) / prod_{k=1}^{mu_1} (u - q^-k)`.
pub fn strip_weight_qt<F: Field>(ctx: &QtParams<F>, mu: &Partition, nu: &Partition) -> Result<StripWeight<F>> {
    check_strip(mu, nu)?;
    Ok(StripWeight {
        prefactor: phi(mu, nu)?.eval(ctx)?,
        u_power: 0,
        num_roots: numerator_cells(mu, nu).into_iter().map(|(i, m)| ctx.mono(-m, i)).collect::<Result<_>>()?,
        den_roots: (1..=mu.part(0) as i32).map(|k| Ok((ctx.mono(-k, 0)?, Some(-k)))).collect::<Result<_>>()?,
    })
}

/// `phi_{mu/nu}(kappa) prod_{i,m} (u - m + i kappa) / ((u-1)...(u-mu_1))`.
pub fn strip_weight_jack(mu: &Partition, nu: &Partition) -> Result<StripWeight<ScalarKappa>> {
    check_strip(mu, nu)?;
    let kappa = ScalarKappa::kappa();
    Ok(StripWeight {
        prefactor: phi(mu, nu)?.to_kappa()?,
        u_power: 0,
        num_roots: numerator_cells(mu, nu)
            .into_iter()
            .map(|(i, m)| ScalarKappa::from_i64(m as i64).sub(&kappa.scale_i64(i as i64)))
            .collect(),
        den_roots: (1..=mu.part(0) as i64).map(|k| (ScalarKappa::from_i64(k), None)).collect(),
    })
}

/// `phi_{mu/nu}(q,0) u^(|nu|-|mu|+mu_1) / prod_{k=1}^{mu_1} (u - q^-k)`.
pub fn strip_weight_whittaker(mu: &Partition, nu: &Partition) -> Result<StripWeight<ScalarQT>> {
    check_strip(mu, nu)?;
    Ok(StripWeight {
        prefactor: phi(mu, nu)?.at_t_zero()?,
        u_power: nu.size() as i32 - mu.size() as i32 + mu.part(0) as i32,
        num_roots: Vec::new(),
        den_roots: (1..=mu.part(0) as i32).map(|k| (ScalarQT::monomial(1, -k, 0), Some(-k))).collect(),
    })
}

/// Hall-Littlewood weight, `l = l(mu)`:
/// `phi(0,t) u^(|nu|-|mu|+1)/(u-t)` if `l(nu) < l`, else
/// `phi(0,t) u^(|nu|-|mu|) (u - t^(1-l))/(u-t)`.
pub fn strip_weight_hl(mu: &Partition, nu: &Partition) -> Result<StripWeight<ScalarQT>> {
    check_strip(mu, nu)?;
    let prefactor = phi(mu, nu)?.at_q_zero()?;
    let d = nu.size() as i32 - mu.size() as i32;
    let den_roots = vec![(ScalarQT::t(), None)];
    let l = mu.len() as i32;
    Ok(if nu.len() < mu.len() {
        StripWeight { prefactor, u_power: d + 1, num_roots: Vec::new(), den_roots }
    } else {
        StripWeight { prefactor, u_power: d, num_roots: vec![ScalarQT::monomial(1, 0, 1 - l)], den_roots }
    })
}

/// Memoized strip weights over a chain enumeration.
fn chain_terms<F: Field>(
    mu: &Partition,
    k: usize,
    weight: &mut impl FnMut(&Partition, &Partition) -> Result<StripWeight<F>>,
) -> Result<(Vec<Vec<usize>>, Vec<StripWeight<F>>)> {
    let mut index: HashMap<(Partition, Partition), usize> = HashMap::new();
    let mut weights = Vec::new();
    let mut chains = Vec::new();
    for chain in enumerate_rtab(mu, k) {
        let mut ids = Vec::with_capacity(k);
        for (a, b) in chain.strips() {
            let key = (a.clone(), b.clone());
            let id = match index.get(&key) {
                Some(i) => *i,
                None => {
                    weights.push(weight(a, b)?);
                    index.insert(key, weights.len() - 1);
                    weights.len() - 1
                }
            };
            ids.push(id);
        }
        chains.push(ids);
    }
    Ok((chains, weights))
}

/// `sum_T prod_k W_{mu(k-1)/mu(k)}(u_k)` as a rational function.
pub fn dual_from_weights<F: Field>(
    mu: &Partition,
    k: usize,
    mut weight: impl FnMut(&Partition, &Partition) -> Result<StripWeight<F>>,
) -> Result<RationalFn<F>> {
    let (chains, weights) = chain_terms(mu, k, &mut weight)?;
    let mut out = RationalFn::zero(k);
    let mut cache: HashMap<(usize, usize), RationalFn<F>> = HashMap::new();
    for ids in chains {
        let mut term = RationalFn::one(k);
        for (var, id) in ids.into_iter().enumerate() {
            let w = cache.entry((var, id)).or_insert_with(|| weights[id].to_rational(var, k));
            term = term.mul(w);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// The same chain sum expanded in `y_j = 1/u_j`. The first `k` variables of
/// `spec` carry `y_1..y_k`.
pub fn dual_series_from_weights<F: Field>(
    mu: &Partition,
    k: usize,
    spec: &BlockSpec,
    mut weight: impl FnMut(&Partition, &Partition) -> Result<StripWeight<F>>,
) -> Result<TruncSeries<F>> {
    let (chains, weights) = chain_terms(mu, k, &mut weight)?;
    let mut out = TruncSeries::zero(spec.clone());
    let mut cache: HashMap<(usize, usize), TruncSeries<F>> = HashMap::new();
    for ids in chains {
        let mut term = TruncSeries::one(spec.clone());
        for (var, id) in ids.into_iter().enumerate() {
            if !cache.contains_key(&(var, id)) {
                cache.insert((var, id), weights[id].to_y_series(var, spec)?);
            }
            term = term.mul(&cache[&(var, id)])?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Modified dual interpolation function `H~_{mu|K}(u; q, t)`.
pub fn dual_h<F: Field>(ctx: &QtParams<F>, mu: &Partition, k: usize) -> Result<RationalFn<F>> {
    dual_from_weights(mu, k, |a, b| strip_weight_qt(ctx, a, b))
}

/// `H~_{mu|K}` expanded in `y = 1/u`.
pub fn dual_h_series<F: Field>(ctx: &QtParams<F>, mu: &Partition, k: usize, spec: &BlockSpec) -> Result<TruncSeries<F>> {
    dual_series_from_weights(mu, k, spec, |a, b| strip_weight_qt(ctx, a, b))
}

pub fn dual_h_jack(mu: &Partition, k: usize) -> Result<RationalFn<ScalarKappa>> {
    dual_from_weights(mu, k, strip_weight_jack)
}

pub fn dual_h_jack_series(mu: &Partition, k: usize, spec: &BlockSpec) -> Result<TruncSeries<ScalarKappa>> {
    dual_series_from_weights(mu, k, spec, strip_weight_jack)
}

/// `B^W_{mu|K}`
pub fn dual_whittaker(mu: &Partition, k: usize) -> Result<RationalFn<ScalarQT>> {
    dual_from_weights(mu, k, strip_weight_whittaker)
}

pub fn dual_whittaker_series(mu: &Partition, k: usize, spec: &BlockSpec) -> Result<TruncSeries<ScalarQT>> {
    dual_series_from_weights(mu, k, spec, strip_weight_whittaker)
}

/// `B^HL_{mu|K}`
pub fn dual_hl(mu: &Partition, k: usize) -> Result<RationalFn<ScalarQT>> {
    dual_from_weights(mu, k, strip_weight_hl)
}

pub fn dual_hl_series(mu: &Partition, k: usize, spec: &BlockSpec) -> Result<TruncSeries<ScalarQT>> {
    dual_series_from_weights(mu, k, spec, strip_weight_hl)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn qinv(k: i32) -> ScalarQT {
        ScalarQT::monomial(1, -k, 0)
    }

    fn one_box_prefactor() -> ScalarQT {
        ScalarQT::one().sub(&ScalarQT::t()).div(&ScalarQT::one().sub(&ScalarQT::q())).unwrap()
    }

    #[test]
    fn qt_weight_examples() {
        let ctx = QtParams::generic();
        let w = strip_weight_qt(&ctx, &p(&[1]), &p(&[1])).unwrap();
        assert!(w.prefactor.is_one());
        assert_eq!(w.num_roots, vec![ScalarQT::monomial(1, -1, 1)]);
        assert_eq!(w.den_roots[0].0, qinv(1));
        let w = strip_weight_qt(&ctx, &p(&[1]), &p(&[])).unwrap();
        assert_eq!(w.prefactor, one_box_prefactor());
        assert!(w.num_roots.is_empty());
        assert_eq!(w.degree(), -1);
        assert!(strip_weight_qt(&ctx, &p(&[2]), &p(&[1, 1])).is_err());
        for (mu, nu) in [(p(&[3, 1]), p(&[2])), (p(&[2, 2]), p(&[2, 1])), (p(&[3]), p(&[]))] {
            let w = strip_weight_qt(&ctx, &mu, &nu).unwrap();
            let num_deg = nu.size() as i32 - mu.size() as i32 + mu.part(0) as i32;
            assert_eq!(w.num_roots.len() as i32, num_deg);
            assert_eq!(w.degree(), nu.size() as i32 - mu.size() as i32);
        }
    }

    #[test]
    fn hl_weight_example() {
        let w = strip_weight_hl(&p(&[1]), &p(&[])).unwrap();
        assert_eq!(w.prefactor, ScalarQT::one().sub(&ScalarQT::t()));
        assert_eq!(w.u_power, 0);
        assert_eq!(w.degree(), -1);
        let w = strip_weight_hl(&p(&[]), &p(&[])).unwrap();
        assert!(w.eval(&ScalarQT::q()).unwrap().is_one());
    }

    #[test]
    fn whittaker_weight_is_t_zero() {
        let ctx = QtParams::whittaker();
        for (mu, nu) in [(p(&[2, 1]), p(&[1])), (p(&[2]), p(&[])), (p(&[1, 1]), p(&[1]))] {
            let a = strip_weight_whittaker(&mu, &nu).unwrap().to_rational(0, 1);
            let b = strip_weight_qt(&ctx, &mu, &nu).unwrap().to_rational(0, 1);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn dual_examples() {
        let ctx = QtParams::generic();
        let h = dual_h(&ctx, &p(&[1]), 1).unwrap();
        let expected = RationalFn::new(
            MultiPoly::constant(1, one_box_prefactor()),
            vec![DenFactor::new(0, qinv(1), 1)],
            None,
        )
        .unwrap();
        assert_eq!(h, expected);
        let h = dual_h(&ctx, &p(&[1]), 2).unwrap();
        let num = MultiPoly::var(2, 0)
            .add(&MultiPoly::var(2, 1))
            .sub(&MultiPoly::constant(2, qinv(1).add(&ScalarQT::monomial(1, -1, 1))))
            .scale(&one_box_prefactor());
        let expected =
            RationalFn::new(num, vec![DenFactor::new(0, qinv(1), 1), DenFactor::new(1, qinv(1), 1)], None).unwrap();
        assert_eq!(h, expected);
        assert_eq!(h.den_factors().len(), 2);
        assert_eq!(dual_h(&ctx, &p(&[]), 3).unwrap(), RationalFn::one(3));
        assert!(dual_h(&ctx, &p(&[1, 1, 1]), 2).unwrap().is_zero());
    }

    #[test]
    fn y_expansion_matches_rational() {
        let ctx = QtParams::generic();
        let w = strip_weight_qt(&ctx, &p(&[2, 1]), &p(&[1])).unwrap();
        let c = w.y_coeffs(4).unwrap();
        // W(u) (u)^2 -> leading coefficient is the prefactor
        assert!(c[0].is_zero() && c[1].is_zero());
        assert_eq!(c[2], w.prefactor);
    }
}
