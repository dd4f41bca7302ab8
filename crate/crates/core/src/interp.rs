//! Interpolation Macdonald polynomials and their degenerations.
//!
//! `I_{mu|N}` is the symmetric polynomial of degree `|mu|` with top term
//! `P_{mu|N}` that vanishes at the nodes `X_N(lambda)` for `|lambda| <= |mu|`,
//! `lambda != mu`.

use std::collections::HashMap;

use crate::algebra::{Field, MultiPoly, QtParams, ScalarKappa, ScalarQT};
use crate::error::{AlgebraError, Result};
use crate::macdonald::poly::PsiCache;
use crate::macdonald::{macdonald_p, psi, Basis, SymFunc};
use crate::partitions::{enumerate_rtab, horizontal_substrips, partitions_up_to, Cell, Partition, StripChain};

/// `X_N(lambda)_i = q^(-lambda_i) t^(i-1)`.
pub fn node<F: Field>(ctx: &QtParams<F>, lambda: &Partition, n: usize) -> Result<Vec<F>> {
    if lambda.len() > n {
        return Err(AlgebraError::TooLong(n));
    }
    (0..n).map(|i| ctx.mono(-(lambda.part(i) as i32), i as i32)).collect()
}

/// `(1, t, ..., t^(N-1))`
pub fn principal_point<F: Field>(ctx: &QtParams<F>, n: usize) -> Result<Vec<F>> {
    node(ctx, &Partition::empty(), n)
}

/// `sum_T weight(T) prod_{(i,j)} (x_{T(i,j)} - shift(i, j, T(i,j)))`.
fn tableau_sum<F: Field>(
    mu: &Partition,
    n: usize,
    mut weight: impl FnMut(&StripChain) -> Result<F>,
    shift: impl Fn(Cell, usize) -> Result<F>,
) -> Result<MultiPoly<F>> {
    let mut out = MultiPoly::zero(n);
    let mut factor_cache: HashMap<(Cell, usize), MultiPoly<F>> = HashMap::new();
    for chain in enumerate_rtab(mu, n) {
        let w = weight(&chain)?;
        if w.is_zero() {
            continue;
        }
        let mut term = MultiPoly::constant(n, w);
        for (k, (a, b)) in chain.strips().enumerate() {
            for c in a.cells().filter(|c| !b.has_cell(*c)) {
                let key = (c, k + 1);
                if !factor_cache.contains_key(&key) {
                    factor_cache.insert(key, MultiPoly::linear(n, k, &shift(c, k + 1)?));
                }
                term = term.mul(&factor_cache[&key]);
            }
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// Tableau formula
/// `I_{mu|N} = sum_T psi_T prod (x_{T(i,j)} - q^(1-j) t^(T(i,j)+i-2))`.
pub fn interp_i<F: Field>(ctx: &QtParams<F>, mu: &Partition, n: usize) -> Result<MultiPoly<F>> {
    let mut cache = PsiCache::new(ctx);
    tableau_sum(mu, n, |c| cache.chain(c), |c, v| ctx.mono(1 - c.col as i32, (v + c.row) as i32 - 2))
}

/// Branching rule
/// `I_{mu|N}(x) = sum_{nu < mu} psi_{mu/nu} t^|nu| prod_{mu/nu} (x_1 - q^(1-j) t^(i-1))
///   * I_{nu|N-1}(x_2/t, ..., x_N/t)`.
pub fn interp_i_branching<F: Field>(ctx: &QtParams<F>, mu: &Partition, n: usize) -> Result<MultiPoly<F>> {
    let mut memo: HashMap<(Partition, usize), MultiPoly<F>> = HashMap::new();
    branch_rec(ctx, mu, n, &mut memo)
}

fn branch_rec<F: Field>(
    ctx: &QtParams<F>,
    mu: &Partition,
    n: usize,
    memo: &mut HashMap<(Partition, usize), MultiPoly<F>>,
) -> Result<MultiPoly<F>> {
    if let Some(v) = memo.get(&(mu.clone(), n)) {
        return Ok(v.clone());
    }
    let out = if n == 0 {
        if mu.is_empty() {
            MultiPoly::one(0)
        } else {
            MultiPoly::zero(0)
        }
    } else if mu.len() > n {
        MultiPoly::zero(n)
    } else {
        let t_inv = ctx.t.inv()?;
        let mut acc = MultiPoly::zero(n);
        for nu in horizontal_substrips(mu) {
            if nu.len() > n - 1 {
                continue;
            }
            let inner = branch_rec(ctx, &nu, n - 1, memo)?;
            if inner.is_zero() {
                continue;
            }
            // I_{nu|N-1}(x_2/t, ...) placed on variables 2..N
            let perm: Vec<usize> = (1..n).collect();
            let mut lifted = inner.rename_vars(&perm, n);
            for i in 1..n {
                lifted = lifted.scale_var(i, &t_inv);
            }
            let coef = psi(mu, &nu)?.eval(ctx)?.mul(&ctx.mono(0, nu.size() as i32)?);
            let mut term = lifted.scale(&coef);
            for c in mu.cells().filter(|c| !nu.has_cell(*c)) {
                term = term.mul(&MultiPoly::linear(n, 0, &ctx.mono(1 - c.col as i32, c.row as i32 - 1)?));
            }
            acc = acc.add(&term);
        }
        acc
    };
    memo.insert((mu.clone(), n), out.clone());
    Ok(out)
}

/// Exact substitution of a point.
pub fn evaluate<F: Field>(p: &MultiPoly<F>, point: &[F]) -> Result<F> {
    p.eval(point)
}

/// `phi_N(p_n) = x_1^n + ... + x_N^n + t^(N n) / (1 - t^n)`, extended
/// multiplicatively.
pub fn phi_n_specialize(f: &SymFunc, n: usize) -> Result<MultiPoly<ScalarQT>> {
    let fp = f.to_basis(Basis::PowerSum)?;
    let mut images: HashMap<u32, MultiPoly<ScalarQT>> = HashMap::new();
    let mut out = MultiPoly::zero(n);
    for (rho, c) in fp.terms() {
        let mut term = MultiPoly::constant(n, c.clone());
        for &k in rho.parts() {
            if !images.contains_key(&k) {
                images.insert(k, phi_n_power_sum(k, n));
            }
            term = term.mul(&images[&k]);
        }
        out = out.add(&term);
    }
    Ok(out)
}

fn phi_n_power_sum(k: u32, n: usize) -> MultiPoly<ScalarQT> {
    let mut p = MultiPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k;
        p.add_term(e, ScalarQT::one());
    }
    let shift = ScalarQT::monomial(1, 0, (n as u32 * k) as i32).mul(&ScalarQT::cyclo(0, k as i32, -1).unwrap());
    p.add(&MultiPoly::constant(n, shift))
}

/// Inverse of `phi_N` on a symmetric polynomial of degree at most `N`,
/// returned in the power-sum basis.
pub fn lift_from_n_variables(f: &MultiPoly<ScalarQT>, n: usize) -> Result<SymFunc> {
    let d = f.total_degree().unwrap_or(0);
    if d as usize > n {
        return Err(AlgebraError::Incompatible("degree exceeds the number of variables"));
    }
    let fp = SymFunc::from_symmetric_poly(f, d).to_basis(Basis::PowerSum)?;
    // substitute p_k -> p_k - t^(N k)/(1 - t^k)
    let mut out = SymFunc::zero(Basis::PowerSum, d);
    for (rho, c) in fp.terms() {
        let mut poly: Vec<(Vec<u32>, ScalarQT)> = vec![(Vec::new(), c.clone())];
        for &k in rho.parts() {
            let shift = ScalarQT::monomial(1, 0, (n as u32 * k) as i32).mul(&ScalarQT::cyclo(0, k as i32, -1)?);
            let mut next = Vec::with_capacity(poly.len() * 2);
            for (parts, v) in poly {
                let mut with = parts.clone();
                with.push(k);
                next.push((with, v.clone()));
                next.push((parts, v.mul(&shift).neg()));
            }
            poly = next;
        }
        for (mut parts, v) in poly {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            out.add_term(Partition::new(parts)?, v);
        }
    }
    Ok(out)
}

/// Checks Okounkov's binomial formula
/// `P_mu(x)/P_mu(1,t,..) = sum_{nu ⊆ mu} I_nu(X(mu))/I_nu(X(nu)) * I_nu(x)/P_nu(1,t,..)`.
pub fn verify_binomial<F: Field>(ctx: &QtParams<F>, mu: &Partition, n: usize) -> Result<bool> {
    if mu.len() > n {
        return Err(AlgebraError::TooLong(n));
    }
    let principal = principal_point(ctx, n)?;
    let xmu = node(ctx, mu, n)?;
    let pmu = macdonald_p(ctx, mu, n)?;
    let lhs = pmu.scale(&pmu.eval(&principal)?.inv()?);
    let mut rhs = MultiPoly::zero(n);
    for nu in partitions_up_to(mu.size(), n) {
        if !mu.contains(&nu) {
            continue;
        }
        let inu = interp_i(ctx, &nu, n)?;
        let ratio = inu.eval(&xmu)?.div(&inu.eval(&node(ctx, &nu, n)?)?)?;
        let pnu = macdonald_p(ctx, &nu, n)?.eval(&principal)?;
        rhs = rhs.add(&inu.scale(&ratio.div(&pnu)?));
    }
    Ok(lhs == rhs)
}

/// Expansion of a symmetric polynomial in `N` variables in the basis
/// `I_{lambda|N}`: repeatedly removes the lexicographically largest monomial
/// of the top-degree part, which is the leading monomial of exactly one
/// `I_lambda`.
pub fn expand_in_i_basis<F: Field>(
    ctx: &QtParams<F>,
    f: &MultiPoly<F>,
    n: usize,
    cache: &mut HashMap<Partition, MultiPoly<F>>,
) -> Result<Vec<(Partition, F)>> {
    let mut rest = f.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let top = rest.top_component();
        let (e, c) = top.terms().last().map(|(e, c)| (e.clone(), c.clone())).expect("nonzero");
        if e.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::Incompatible("polynomial is not symmetric"));
        }
        let lambda = Partition::new(e)?;
        if !cache.contains_key(&lambda) {
            cache.insert(lambda.clone(), interp_i(ctx, &lambda, n)?);
        }
        rest = rest.sub(&cache[&lambda].scale(&c));
        out.push((lambda, c));
    }
    Ok(out)
}

/// Jack interpolation polynomial
/// `sum_T psi_T(kappa) prod (x_T - (j-1) + (T+i-2) kappa)`.
pub fn jack_interp_i(mu: &Partition, n: usize) -> Result<MultiPoly<ScalarKappa>> {
    let kappa = ScalarKappa::kappa();
    tableau_sum(
        mu,
        n,
        |c| crate::macdonald::psi_chain(c)?.to_kappa(),
        |c, v| {
            // x - (j-1) + (T+i-2) kappa = x - shift
            let s = ScalarKappa::from_i64(c.col as i64 - 1).sub(&kappa.scale_i64((v + c.row) as i64 - 2));
            Ok(s)
        },
    )
}

/// q-Whittaker interpolation polynomial: `psi_T(q,0)` and shift
/// `q^(1-j)` only on cells of row 1 holding the value 1.
pub fn whittaker_a(mu: &Partition, n: usize) -> Result<MultiPoly<ScalarQT>> {
    tableau_sum(
        mu,
        n,
        |c| crate::macdonald::psi_chain(c)?.at_t_zero(),
        |c, v| Ok(if c.row == 1 && v == 1 { ScalarQT::monomial(1, 1 - c.col as i32, 0) } else { ScalarQT::zero() }),
    )
}

/// Hall-Littlewood interpolation polynomial: `psi_T(0,t)` and shift
/// `t^(2-T-i)` only on cells of column 1.
pub fn hl_a(mu: &Partition, n: usize) -> Result<MultiPoly<ScalarQT>> {
    tableau_sum(
        mu,
        n,
        |c| crate::macdonald::psi_chain(c)?.at_q_zero(),
        |c, v| Ok(if c.col == 1 { ScalarQT::monomial(1, 0, 2 - v as i32 - c.row as i32) } else { ScalarQT::zero() }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn x(n: usize, i: usize) -> MultiPoly<ScalarQT> {
        MultiPoly::var(n, i)
    }

    fn c(s: ScalarQT, n: usize) -> MultiPoly<ScalarQT> {
        MultiPoly::constant(n, s)
    }

    #[test]
    fn node_examples() {
        let ctx = QtParams::generic();
        assert_eq!(node(&ctx, &p(&[]), 3).unwrap(), vec![ScalarQT::one(), ScalarQT::t(), ScalarQT::monomial(1, 0, 2)]);
        assert_eq!(node(&ctx, &p(&[2, 1]), 2).unwrap(), vec![ScalarQT::monomial(1, -2, 0), ScalarQT::monomial(1, -1, 1)]);
        assert!(node(&ctx, &p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn one_variable_and_one_box() {
        let ctx = QtParams::generic();
        let mut expected = c(ScalarQT::one(), 1);
        for j in 0..3 {
            expected = expected.mul(&x(1, 0).sub(&c(ScalarQT::monomial(1, -j, 0), 1)));
        }
        assert_eq!(interp_i(&ctx, &p(&[3]), 1).unwrap(), expected);
        let i1 = interp_i(&ctx, &p(&[1]), 2).unwrap();
        let expected = x(2, 0).add(&x(2, 1)).sub(&c(ScalarQT::one().add(&ScalarQT::t()), 2));
        assert_eq!(i1, expected);
        assert!(interp_i(&ctx, &p(&[]), 3).unwrap() == MultiPoly::one(3));
    }

    #[test]
    fn evaluation_examples() {
        let ctx = QtParams::generic();
        let i1 = interp_i(&ctx, &p(&[1]), 2).unwrap();
        assert!(evaluate(&i1, &node(&ctx, &p(&[]), 2).unwrap()).unwrap().is_zero());
        let i1 = interp_i(&ctx, &p(&[1]), 1).unwrap();
        let v = evaluate(&i1, &node(&ctx, &p(&[1]), 1).unwrap()).unwrap();
        assert_eq!(v, ScalarQT::monomial(1, -1, 0).sub(&ScalarQT::one()));
    }

    #[test]
    fn phi_n_examples() {
        let p1 = SymFunc::basis_element(Basis::PowerSum, &p(&[1]), 1);
        let expected = x(1, 0).add(&c(ScalarQT::t().mul(&ScalarQT::cyclo(0, 1, -1).unwrap()), 1));
        assert_eq!(phi_n_specialize(&p1, 1).unwrap(), expected);
        let mut f = p1.clone();
        f.add_term(p(&[]), ScalarQT::cyclo(0, 1, -1).unwrap().neg());
        let ctx = QtParams::generic();
        assert_eq!(phi_n_specialize(&f, 2).unwrap(), interp_i(&ctx, &p(&[1]), 2).unwrap());
        let back = lift_from_n_variables(&phi_n_specialize(&f, 2).unwrap(), 2).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn degenerate_examples() {
        let w = whittaker_a(&p(&[1]), 2).unwrap();
        assert_eq!(w, x(2, 0).add(&x(2, 1)).sub(&c(ScalarQT::one(), 2)));
        let h = hl_a(&p(&[1]), 2).unwrap();
        let s = ScalarQT::one().add(&ScalarQT::t().inv().unwrap());
        assert_eq!(h, x(2, 0).add(&x(2, 1)).sub(&c(s, 2)));
        assert!(hl_a(&p(&[]), 2).unwrap() == MultiPoly::one(2));
        let j = jack_interp_i(&p(&[1]), 1).unwrap();
        assert_eq!(j, MultiPoly::var(1, 0));
    }
}
