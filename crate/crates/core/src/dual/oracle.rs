//! Skew duals and the linear-algebra construction of `H_nu`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::algebra::linalg::inverse;
use crate::algebra::{series_from_product, BlockSpec, Field, MultiPoly, PochFactor, QtParams, ScalarQT, TruncSeries};
use crate::error::Result;
use crate::interp::{interp_i, lift_from_n_variables};
use crate::macdonald::{macdonald_q, phi, Basis, SymFunc};
use crate::partitions::{is_horizontal_strip, partitions_up_to, Partition};

/// Univariate skew dual function in `y`:
/// `phi_{mu/nu} y^(|mu|-|nu|) prod_{i=1}^{L} (y q^-nu_i t^i; q)_inf / (y q^-mu_i t^(i-1); q)_inf
///   / (y t^L; q)_inf` with `L = l(mu)`; zero unless `mu/nu` is a horizontal strip.
pub fn skew_dual_series<F: Field>(
    ctx: &QtParams<F>,
    mu: &Partition,
    nu: &Partition,
    order: u32,
) -> Result<TruncSeries<F>> {
    let spec = BlockSpec::single(1, order);
    if !is_horizontal_strip(mu, nu) {
        return Ok(TruncSeries::zero(spec));
    }
    let d = mu.size() - nu.size();
    if d > order {
        return Ok(TruncSeries::zero(spec));
    }
    let l = mu.len();
    let mut factors = Vec::with_capacity(2 * l + 1);
    for i in 1..=l {
        factors.push(PochFactor::new(ctx.mono(-(nu.part(i - 1) as i32), i as i32)?, vec![1], 1));
        factors.push(PochFactor::new(ctx.mono(-(mu.part(i - 1) as i32), i as i32 - 1)?, vec![1], -1));
    }
    factors.push(PochFactor::new(ctx.mono(0, l as i32)?, vec![1], -1));
    let prod = series_from_product(ctx, &factors, &BlockSpec::single(1, order - d))?;
    let mut out = MultiPoly::zero(1);
    let c = phi(mu, nu)?.eval(ctx)?;
    for (e, v) in prod.poly().terms() {
        out.add_term(vec![e[0] + d], v.mul(&c));
    }
    Ok(TruncSeries::from_poly(out, spec))
}

fn i_cache() -> &'static Mutex<HashMap<Partition, SymFunc>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, SymFunc>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `I_mu` as a symmetric function, expanded in the Macdonald `P` basis.
pub fn i_in_p_basis(mu: &Partition) -> Result<SymFunc> {
    if let Some(f) = i_cache().lock().unwrap().get(mu) {
        return Ok(f.clone());
    }
    let n = (mu.size() as usize).max(1);
    let f = interp_i(&QtParams::generic(), mu, n)?;
    let out = lift_from_n_variables(&f, n)?.to_basis(Basis::MacdonaldP)?;
    i_cache().lock().unwrap().insert(mu.clone(), out.clone());
    Ok(out)
}

/// `H_nu` restricted to `y_1..y_K` through total degree `D`, obtained by
/// inverting the unitriangular matrix of `I_mu` in the `P` basis and pairing
/// against the dual basis `Q_lambda`.
pub fn dual_by_duality_oracle(nu: &Partition, k: usize, d: u32) -> Result<TruncSeries<ScalarQT>> {
    let spec = BlockSpec::single(k, d);
    if nu.size() > d {
        return Ok(TruncSeries::zero(spec));
    }
    let parts = partitions_up_to(d, d as usize);
    let mut a = Vec::with_capacity(parts.len());
    for mu in &parts {
        let f = i_in_p_basis(mu)?;
        a.push(parts.iter().map(|l| f.coeff(l)).collect::<Vec<_>>());
    }
    let b = inverse(&a)?;
    let col = parts.iter().position(|p| p == nu).expect("nu is among the partitions up to D");
    let ctx = QtParams::generic();
    let mut out = MultiPoly::zero(k);
    for (row, lambda) in parts.iter().enumerate() {
        let c = &b[row][col];
        if c.is_zero() || lambda.len() > k {
            continue;
        }
        out = out.add(&macdonald_q(&ctx, lambda, k)?.scale(c));
    }
    Ok(TruncSeries::from_poly(out, spec))
}

/// `prod_j (y_j; q)_inf^sign` over the first `k` variables of `spec`.
pub fn y_pochhammer(ctx: &QtParams<ScalarQT>, k: usize, sign: i32, spec: &BlockSpec) -> Result<TruncSeries<ScalarQT>> {
    let factors: Vec<_> = (0..k)
        .map(|j| {
            let mut e = vec![0; spec.nvars()];
            e[j] = 1;
            PochFactor::new(ScalarQT::one(), e, sign)
        })
        .collect();
    series_from_product(ctx, &factors, spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn skew_dual_examples() {
        let ctx = QtParams::generic();
        let s = skew_dual_series(&ctx, &p(&[1]), &p(&[]), 1).unwrap();
        let c = ScalarQT::one().sub(&ScalarQT::t()).div(&ScalarQT::one().sub(&ScalarQT::q())).unwrap();
        assert_eq!(s.coeff(&[1]), c);
        assert!(s.coeff(&[0]).is_zero());
        assert!(skew_dual_series(&ctx, &p(&[2]), &p(&[1, 1]), 3).unwrap().is_zero());
        // empty skew shape: 1/(y;q)_inf
        let s = skew_dual_series(&ctx, &p(&[]), &p(&[]), 2).unwrap();
        let expected = y_pochhammer(&ctx, 1, -1, &BlockSpec::single(1, 2)).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn oracle_leading_terms() {
        let h = dual_by_duality_oracle(&p(&[1]), 2, 1).unwrap();
        let c = ScalarQT::one().sub(&ScalarQT::t()).div(&ScalarQT::one().sub(&ScalarQT::q())).unwrap();
        assert_eq!(h.coeff(&[1, 0]), c);
        assert_eq!(h.coeff(&[0, 1]), c);
        assert!(h.coeff(&[0, 0]).is_zero());
        let h = dual_by_duality_oracle(&p(&[]), 1, 2).unwrap();
        assert!(h.coeff(&[0]).is_one());
    }
}
