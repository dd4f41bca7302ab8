//! Pieri-type expansions in the interpolation basis.

use std::collections::{BTreeMap, HashMap};

use serde_json::json;

use crate::algebra::{series_from_product, BlockSpec, Field, MultiPoly, PochFactor, QtParams, ScalarQT, TruncSeries};
use crate::dual::rational::coefficient_in;
use crate::dual::skew_dual_series;
use crate::error::Result;
use crate::interp::{expand_in_i_basis, interp_i};
use crate::macdonald::phi;
use crate::partitions::{is_horizontal_strip, partitions_up_to, Partition};

use super::{Run, SuiteReport};

/// `phi_{mu/nu} y^(|mu|-|nu|) prod_{i=1}^N (y q^-nu_i t^i; q)_inf / (y q^-mu_i t^(i-1); q)_inf`,
/// zero unless `mu/nu` is a horizontal strip.
fn pieri_coefficient(
    ctx: &QtParams<ScalarQT>,
    n: usize,
    mu: &Partition,
    nu: &Partition,
    order: u32,
) -> Result<TruncSeries<ScalarQT>> {
    let spec = BlockSpec::single(1, order);
    if !is_horizontal_strip(mu, nu) || mu.size() - nu.size() > order {
        return Ok(TruncSeries::zero(spec));
    }
    let d = mu.size() - nu.size();
    let mut factors = Vec::with_capacity(2 * n);
    for i in 1..=n {
        factors.push(PochFactor::new(ctx.mono(-(nu.part(i - 1) as i32), i as i32)?, vec![1], 1));
        factors.push(PochFactor::new(ctx.mono(-(mu.part(i - 1) as i32), i as i32 - 1)?, vec![1], -1));
    }
    let prod = series_from_product(ctx, &factors, &BlockSpec::single(1, order - d))?;
    let c = phi(mu, nu)?.to_scalar();
    let mut out = MultiPoly::zero(1);
    for (e, v) in prod.poly().terms() {
        out.add_term(vec![e[0] + d], v.mul(&c));
    }
    Ok(TruncSeries::from_poly(out, spec))
}

/// Expands `I_nu(x) prod_i (x_i y t; q)_inf/(x_i y; q)_inf` through `y^order`
/// in the `I`-basis and compares each coefficient with the closed form, then
/// checks `c_N(nu, mu; y)/(y t^N; q)_inf` against the skew dual series.
pub fn verify_skew_pieri(n: usize, nu_size_max: u32, order: u32) -> Result<SuiteReport> {
    let mut run = Run::new("skew-pieri", json!({"n": n, "max_nu_size": nu_size_max, "y_order": order}));
    let ctx = QtParams::generic();
    let nv = n + 1;
    let spec = BlockSpec::blocks(&[(n, order), (1, order)]);
    let mut factors = Vec::new();
    for i in 0..n {
        let mut e = vec![0; nv];
        e[i] = 1;
        e[n] = 1;
        factors.push(PochFactor::new(ScalarQT::t(), e.clone(), 1));
        factors.push(PochFactor::new(ScalarQT::one(), e, -1));
    }
    let kernel = series_from_product(&ctx, &factors, &spec)?;
    let mut cache = HashMap::new();
    let tail = series_from_product(
        &ctx,
        &[PochFactor::new(ctx.mono(0, n as i32)?, vec![1], -1)],
        &BlockSpec::single(1, order),
    )?;
    for nu in partitions_up_to(nu_size_max, n) {
        let f = interp_i(&ctx, &nu, n)?.extend_vars(1).mul(kernel.poly());
        let mut coeffs: BTreeMap<Partition, MultiPoly<ScalarQT>> = BTreeMap::new();
        for d in 0..=order {
            let part = coefficient_in(&f, n, d);
            for (mu, c) in expand_in_i_basis(&ctx, &part, n, &mut cache)? {
                coeffs.entry(mu).or_insert_with(|| MultiPoly::zero(1)).add_term(vec![d], c);
            }
        }
        for mu in partitions_up_to(nu.size() + order, n) {
            if !mu.contains(&nu) {
                continue;
            }
            let found = TruncSeries::from_poly(coeffs.remove(&mu).unwrap_or_else(|| MultiPoly::zero(1)), BlockSpec::single(1, order));
            let closed = pieri_coefficient(&ctx, n, &mu, &nu, order)?;
            let names = ["y".to_string()];
            run.check_series(&format!("c_N({nu:?}, {mu:?})"), &found, &closed, &names);
            let ratio = closed.mul(&tail)?;
            run.check_series(&format!("skew dual ({mu:?}/{nu:?})"), &ratio, &skew_dual_series(&ctx, &mu, &nu, order)?, &names);
        }
        run.check(&format!("no coefficient outside mu >= nu for {nu:?}"), coeffs.is_empty());
    }
    Ok(run.finish())
}

/// `a^(|mu|-|nu|) prod_{(i,j) in (m^N + nu)/mu} (1 - q^(m-j) t^(i-1) a)`
fn finite_factor(n: usize, m: u32, mu: &Partition, nu: &Partition) -> MultiPoly<ScalarQT> {
    let a = MultiPoly::var(1, 0);
    let mut out = a.pow(mu.size() - nu.size());
    for i in 1..=n {
        for j in mu.part(i - 1) + 1..=m + nu.part(i - 1) {
            let c = ScalarQT::monomial(1, m as i32 - j as i32, i as i32 - 1);
            out = out.mul(&MultiPoly::one(1).sub(&a.scale(&c)));
        }
    }
    out
}

/// Expands `I_nu(x) prod_i (x_i a; q)_m` in the `I`-basis with `a` an extra
/// indeterminate; checks the support `nu <= mu <= m^N + nu`, that every
/// coefficient is an `a`-free multiple of its factored form, and the diagonal
/// coefficient `prod_i (q^-nu_i t^(i-1) a; q)_m`.
pub fn verify_finite_pieri(n: usize, m: u32, nu_size_max: u32) -> Result<SuiteReport> {
    let mut run = Run::new("finite-pieri", json!({"n": n, "m": m, "max_nu_size": nu_size_max}));
    let ctx = QtParams::generic();
    let nv = n + 1;
    let mut prod = MultiPoly::one(nv);
    for i in 0..n {
        let xa = MultiPoly::var(nv, i).mul(&MultiPoly::var(nv, n));
        for k in 0..m {
            prod = prod.mul(&MultiPoly::one(nv).sub(&xa.scale(&ScalarQT::monomial(1, k as i32, 0))));
        }
    }
    let mut cache = HashMap::new();
    let a = MultiPoly::<ScalarQT>::var(1, 0);
    for nu in partitions_up_to(nu_size_max, n) {
        let f = interp_i(&ctx, &nu, n)?.extend_vars(1).mul(&prod);
        let mut coeffs: BTreeMap<Partition, MultiPoly<ScalarQT>> = BTreeMap::new();
        for d in 0..=(n as u32 * m) {
            let part = coefficient_in(&f, n, d);
            for (mu, c) in expand_in_i_basis(&ctx, &part, n, &mut cache)? {
                coeffs.entry(mu).or_insert_with(|| MultiPoly::zero(1)).add_term(vec![d], c);
            }
        }
        let top = nu.plus_rectangle(m, n);
        for (mu, c) in &coeffs {
            if c.is_zero() {
                continue;
            }
            run.check(&format!("support {mu:?} for nu={nu:?}"), mu.contains(&nu) && top.contains(mu));
            if !(mu.contains(&nu) && top.contains(mu)) {
                continue;
            }
            let g = finite_factor(n, m, mu, &nu);
            let ok = c.div_exact(&g).map(|s| s.total_degree().unwrap_or(0) == 0).unwrap_or(false);
            run.check(&format!("factorization c({nu:?}, {mu:?})"), ok);
        }
        let mut d_nu = MultiPoly::one(1);
        for i in 0..n {
            for k in 0..m {
                let c = ScalarQT::monomial(1, k as i32 - nu.part(i) as i32, i as i32);
                d_nu = d_nu.mul(&MultiPoly::one(1).sub(&a.scale(&c)));
            }
        }
        let diag = coeffs.get(&nu).cloned().unwrap_or_else(|| MultiPoly::zero(1));
        run.check_poly(&format!("diagonal c({nu:?}, {nu:?})"), &diag, &d_nu, &["a".to_string()]);
    }
    Ok(run.finish())
}
