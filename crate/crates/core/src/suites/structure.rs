//! Structural suites: Macdonald oracle, interpolation characterization,
//! t = q determinantal forms, the two dual constructions, biorthogonality and
//! the binomial formula.

use serde_json::json;

use crate::algebra::linalg::permutations;
use crate::algebra::{BlockSpec, Field, MultiPoly, QtParams, Rat, ScalarQT, TruncSeries};
use crate::dual::oracle::y_pochhammer;
use crate::dual::{
    dual_by_duality_oracle, dual_h, dual_h_series, dual_sigma, dual_sigma_vandermonde, i_in_p_basis, multiparam_schur,
};
use crate::error::Result;
use crate::interp::{evaluate, hl_a, interp_i, interp_i_branching, node, verify_binomial, whittaker_a};
use crate::macdonald::{gram_schmidt_oracle, macdonald_p, scalar_product, SymFunc};
use crate::partitions::partitions_up_to;

use super::cauchy::{cauchy_lhs, cauchy_rhs};
use super::{embed, xy_names, Run, SuiteReport};

fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Tableau-formula `P_mu` against Gram-Schmidt for `|mu| <= size_max`, `N <= n_max`.
pub fn verify_macdonald_oracle(n_max: usize, size_max: u32) -> Result<SuiteReport> {
    let mut run = Run::new("macdonald-oracle", json!({"n_max": n_max, "max_size": size_max}));
    let ctx = QtParams::generic();
    for mu in partitions_up_to(size_max, size_max as usize) {
        let gs = gram_schmidt_oracle(&mu, mu.size())?;
        for n in 1..=n_max {
            run.check_poly(&format!("P{mu:?} N={n}"), &macdonald_p(&ctx, &mu, n)?, &gs.restrict(n)?, &var_names("x", n));
        }
    }
    Ok(run.finish())
}

/// Vanishing at `X_N(lambda)` for `lambda != mu`, `|lambda| <= |mu|`; extra
/// vanishing for `mu` not contained in `lambda`, `|lambda| <= |mu| + extra`;
/// non-vanishing at `X_N(mu)`; both builders and the top component;
/// quasi-stability of `I` and `A^HL`; `A^W = I` at `t = 0`.
pub fn verify_interpolation(n_max: usize, size_max: u32, extra: u32) -> Result<SuiteReport> {
    let mut run = Run::new("interpolation", json!({"n_max": n_max, "max_size": size_max, "extra": extra}));
    let ctx = QtParams::generic();
    let hl = QtParams::hall_littlewood();
    let w = QtParams::whittaker();
    for n in 1..=n_max {
        let names = var_names("x", n);
        let mut nodes = Vec::new();
        for lambda in partitions_up_to(size_max + extra, n) {
            let x = node(&ctx, &lambda, n)?;
            nodes.push((lambda, x));
        }
        for mu in partitions_up_to(size_max, n) {
            let f = interp_i(&ctx, &mu, n)?;
            for (lambda, x) in &nodes {
                let in_range = lambda.size() <= mu.size();
                let beyond = !lambda.contains(&mu) && lambda.size() <= mu.size() + extra;
                if !(in_range || beyond) {
                    continue;
                }
                let v = evaluate(&f, x)?;
                if *lambda == mu {
                    run.check(&format!("I{mu:?} nonzero at own node, N={n}"), !v.is_zero());
                } else {
                    run.check(&format!("I{mu:?} vanishes at {lambda:?}, N={n}"), v.is_zero());
                }
            }
            run.check_poly(&format!("branching builder {mu:?} N={n}"), &interp_i_branching(&ctx, &mu, n)?, &f, &names);
            run.check_poly(&format!("top component {mu:?} N={n}"), &f.top_component(), &macdonald_p(&ctx, &mu, n)?, &names);
            if n >= 2 {
                let reduced = f.substitute_remove(n - 1, &ScalarQT::monomial(1, 0, n as i32 - 1));
                let expected =
                    if mu.len() < n { interp_i(&ctx, &mu, n - 1)? } else { MultiPoly::zero(n - 1) };
                run.check_poly(&format!("quasi-stability {mu:?} N={n}"), &reduced, &expected, &names[..n - 1]);
            }
            if mu.size() <= size_max.min(4) {
                let a = hl_a(&mu, n)?;
                run.check_poly(&format!("A^HL top {mu:?} N={n}"), &a.top_component(), &macdonald_p(&hl, &mu, n)?, &names);
                if n >= 2 {
                    let reduced = a.substitute_remove(n - 1, &ScalarQT::monomial(1, 0, 1 - n as i32));
                    let expected = if mu.len() < n { hl_a(&mu, n - 1)? } else { MultiPoly::zero(n - 1) };
                    run.check_poly(&format!("A^HL quasi-stability {mu:?} N={n}"), &reduced, &expected, &names[..n - 1]);
                }
                run.check_poly(&format!("A^W {mu:?} N={n}"), &whittaker_a(&mu, n)?, &interp_i(&w, &mu, n)?, &names);
            }
        }
    }
    Ok(run.finish())
}

/// `c_k = q^(N-1-k)`
fn diagonal_sequence(n: usize, len: usize) -> Vec<ScalarQT> {
    (0..len).map(|k| ScalarQT::monomial(1, n as i32 - 1 - k as i32, 0)).collect()
}

/// Pinned parameter sequences for the multiparameter checks.
fn pinned_sequences(n: usize, len: usize) -> Vec<(&'static str, Vec<Rat>)> {
    let q = Rat::new(2, 3);
    vec![
        ("zero", vec![Rat::new(0, 1); len]),
        ("c_k = k", (0..len).map(|k| Rat::new(k as i64, 1)).collect()),
        ("c_k = (2/3)^(N-1-k)", (0..len).map(|k| q.powi(n as i64 - 1 - k as i64).expect("nonzero base")).collect()),
    ]
}

/// `sum_m (x|c)^m y^m / prod_{k=1}^m (1 - c_k y) = (1 - c_0 y)/(1 - x y)`.
fn one_variable_cauchy(run: &mut Run, label: &str, c: &[Rat], order: u32) -> Result<()> {
    let spec = BlockSpec::blocks(&[(1, order), (1, order)]);
    let x = MultiPoly::<Rat>::var(2, 0);
    let y = MultiPoly::<Rat>::var(2, 1);
    let one = MultiPoly::<Rat>::one(2);
    let mut lhs = TruncSeries::one(spec.clone());
    let mut term = TruncSeries::one(spec.clone());
    for m in 1..=order as usize {
        let lin = x.sub(&MultiPoly::constant(2, c[m - 1].clone())).mul(&y);
        let geo = TruncSeries::from_poly(one.sub(&y.scale(&c[m])), spec.clone()).reciprocal()?;
        term = term.mul_poly(&lin)?.mul(&geo)?;
        lhs = lhs.add(&term)?;
    }
    let rhs = TruncSeries::from_poly(one.sub(&y.scale(&c[0])), spec.clone())
        .mul(&TruncSeries::from_poly(one.sub(&x.mul(&y)), spec).reciprocal()?)?;
    run.check_series(label, &lhs, &rhs, &xy_names(1, 1, &[]));
    Ok(())
}

/// Multiplied-out multiparameter Cauchy identity in `N` x's and `N` y's:
/// `sum_mu s_mu(x|c) det[y_j^m / prod_{k=1}^m (1 - c_k y_j)]_{m = mu_i + N - i}
///  = (-1)^(N(N-1)/2) prod_{i<j} (y_j - y_i) prod_j (1 - c_0 y_j) / prod_{i,j} (1 - x_i y_j)`.
fn multiparam_cauchy(run: &mut Run, label: &str, n: usize, c: &[Rat], order: u32) -> Result<()> {
    let nv = 2 * n;
    let spec = BlockSpec::blocks(&[(n, order), (n, order)]);
    let one = MultiPoly::<Rat>::one(nv);
    let y = |j: usize| MultiPoly::<Rat>::var(nv, n + j);
    let x = |i: usize| MultiPoly::<Rat>::var(nv, i);
    let shift = (n * (n - 1) / 2) as u32;
    let max_m = order as usize + 1;
    // entry(j, m) = y_j^m / prod_{k=1}^m (1 - c_k y_j)
    let mut entries: Vec<Vec<TruncSeries<Rat>>> = Vec::new();
    for j in 0..n {
        let mut row = vec![TruncSeries::one(spec.clone())];
        for m in 1..max_m {
            let geo = TruncSeries::from_poly(one.sub(&y(j).scale(&c[m])), spec.clone()).reciprocal()?;
            let next = row[m - 1].mul_poly(&y(j))?.mul(&geo)?;
            row.push(next);
        }
        entries.push(row);
    }
    let mut lhs = TruncSeries::zero(spec.clone());
    if order >= shift {
        for mu in partitions_up_to(order - shift, n) {
            let s = embed(&multiparam_schur(&mu, n, c)?, 0, nv);
            let mut det = TruncSeries::zero(spec.clone());
            for (perm, sign) in permutations(n) {
                let mut term = TruncSeries::from_poly(MultiPoly::constant(nv, Rat::new(sign, 1)), spec.clone());
                for (i, &j) in perm.iter().enumerate() {
                    let m = mu.part(i) as usize + n - 1 - i;
                    term = term.mul(&entries[j][m])?;
                }
                det = det.add(&term)?;
            }
            lhs = lhs.add(&det.mul_poly(&s)?)?;
        }
    }
    let mut num = if shift % 2 == 0 { one.clone() } else { one.neg() };
    for i in 0..n {
        for j in i + 1..n {
            num = num.mul(&y(j).sub(&y(i)));
        }
    }
    for j in 0..n {
        num = num.mul(&one.sub(&y(j).scale(&c[0])));
    }
    let mut den = one.clone();
    for i in 0..n {
        for j in 0..n {
            den = den.mul(&one.sub(&x(i).mul(&y(j))));
        }
    }
    let rhs = TruncSeries::from_poly(num, spec.clone()).mul(&TruncSeries::from_poly(den, spec).reciprocal()?)?;
    run.check_series(label, &lhs, &rhs, &xy_names(n, n, &[]));
    Ok(())
}

/// At `t = q`: `I_mu = s_mu(x | q^(N-1), q^(N-2), ...)`, the two forms of
/// `H~_mu` as `sigma` functions, `sigma`-stability, and the multiparameter
/// Cauchy identities for pinned sequences; also the `t = q` Cauchy
/// identity at `N = K = 2`.
pub fn verify_tq_determinant(n_max: usize, size_max: u32) -> Result<SuiteReport> {
    let mut run = Run::new(
        "tq-determinant",
        json!({"n_max": n_max, "max_size": size_max, "one_variable_order": 6, "cauchy_order": 4}),
    );
    let ctx = QtParams::diagonal();
    for n in 1..=n_max {
        let xn = var_names("x", n);
        let un = var_names("u", n);
        let len = size_max as usize + n + 1;
        let c = diagonal_sequence(n, len);
        for mu in partitions_up_to(size_max, n) {
            run.check_poly(&format!("I = s(x|c) {mu:?} N={n}"), &interp_i(&ctx, &mu, n)?, &multiparam_schur(&mu, n, &c)?, &xn);
            let h = dual_h(&ctx, &mu, n)?;
            run.check_rational(&format!("H~ = sigma {mu:?} N={n}"), &h, &dual_sigma(&mu, n, &c)?, &un);
            run.check_rational(
                &format!("H~ = sigma (Vandermonde form) {mu:?} N={n}"),
                &h,
                &dual_sigma_vandermonde(&mu, n, &c)?,
                &un,
            );
        }
        let mut seqs: Vec<(String, Vec<ScalarQT>)> = vec![("c_k = q^(N-1-k)".into(), c.clone())];
        for (name, s) in pinned_sequences(n, len) {
            seqs.push((name.into(), s.iter().map(|r| ScalarQT::from_rational(&r.0)).collect()));
        }
        for (name, s) in &seqs {
            for mu in partitions_up_to(size_max, n) {
                let lim = dual_sigma(&mu, n, s)?.at_infinity(n - 1)?;
                let label = format!("sigma-stability {mu:?} N={n} {name}");
                if mu.len() == n {
                    run.check(&label, lim.is_zero());
                } else {
                    run.check_rational(&label, &lim, &dual_sigma(&mu, n - 1, &s[1..])?, &un[..n - 1]);
                }
            }
        }
    }
    for (name, s) in pinned_sequences(1, 8) {
        one_variable_cauchy(&mut run, &format!("one-variable Cauchy {name}"), &s, 6)?;
    }
    for n in 1..=n_max.min(2) {
        for (name, s) in pinned_sequences(n, 8) {
            multiparam_cauchy(&mut run, &format!("multiparameter Cauchy N={n} {name}"), n, &s, 4)?;
        }
    }
    // t = q Cauchy identity at N = K = 2
    let (n, k, cut) = (2, 2, 3);
    let nv = n + k;
    let spec = BlockSpec::blocks(&[(n, cut), (k, cut)]);
    let one = MultiPoly::<ScalarQT>::one(nv);
    let mut num = one.clone();
    for j in 0..k {
        for l in 0..n {
            num = num.mul(&one.sub(&MultiPoly::var(nv, n + j).scale(&ScalarQT::monomial(1, l as i32, 0))));
        }
    }
    let mut den = one.clone();
    for i in 0..n {
        for j in 0..k {
            den = den.mul(&one.sub(&MultiPoly::var(nv, i).mul(&MultiPoly::var(nv, n + j))));
        }
    }
    let explicit =
        TruncSeries::from_poly(num, spec.clone()).mul(&TruncSeries::from_poly(den, spec.clone()).reciprocal()?)?;
    let names = xy_names(n, k, &[]);
    run.check_series("t=q Cauchy rhs", &cauchy_rhs(&ctx, n, k, &spec)?, &explicit, &names);
    run.check_series("t=q Cauchy", &cauchy_lhs(&ctx, n, k, &spec)?, &explicit, &names);
    Ok(run.finish())
}

/// `H_nu` from inverting the `I`-to-`P` transition matrix against the
/// strip-weight formula times `prod_j (y_j; q)_inf^-1`.
pub fn verify_dual_oracle(k_max: usize, size_max: u32, order: u32) -> Result<SuiteReport> {
    let mut run = Run::new("dual-oracle", json!({"k_max": k_max, "max_size": size_max, "order": order}));
    let ctx = QtParams::generic();
    for k in 1..=k_max {
        let spec = BlockSpec::single(k, order);
        let inv = y_pochhammer(&ctx, k, -1, &spec)?;
        let names = var_names("y", k);
        for nu in partitions_up_to(size_max, size_max as usize) {
            let oracle = dual_by_duality_oracle(&nu, k, order)?;
            let combinatorial = dual_h_series(&ctx, &nu, k, &spec)?.mul(&inv)?;
            run.check_series(&format!("H{nu:?} K={k}"), &oracle, &combinatorial, &names);
        }
    }
    Ok(run.finish())
}

/// `<I_mu, H_nu> = delta` for `|mu|, |nu| <= d`, with `H_nu` read off its
/// restriction to `d` variables.
pub fn verify_biorthogonality(d: u32) -> Result<SuiteReport> {
    let mut run = Run::new("biorthogonality", json!({"degree_bound": d}));
    let ctx = QtParams::generic();
    let k = (d as usize).max(1);
    let spec = BlockSpec::single(k, d);
    let inv = y_pochhammer(&ctx, k, -1, &spec)?;
    let parts = partitions_up_to(d, d as usize);
    let mut h = Vec::with_capacity(parts.len());
    for nu in &parts {
        let s = dual_h_series(&ctx, nu, k, &spec)?.mul(&inv)?;
        h.push(SymFunc::from_symmetric_poly(s.poly(), d));
    }
    for mu in &parts {
        let i = i_in_p_basis(mu)?.with_degree_bound(d);
        for (nu, hn) in parts.iter().zip(&h) {
            let v = scalar_product(&i, hn)?;
            let expected = if mu == nu { ScalarQT::one() } else { ScalarQT::zero() };
            run.check_scalar(&format!("<I{mu:?}, H{nu:?}>"), &v, &expected);
        }
    }
    Ok(run.finish())
}

/// The binomial expansion of `I_mu` at shifted nodes, `N <= n_max`, `|mu| <= size_max`.
pub fn verify_binomial_suite(n_max: usize, size_max: u32) -> Result<SuiteReport> {
    let mut run = Run::new("binomial", json!({"n_max": n_max, "max_size": size_max}));
    let ctx = QtParams::generic();
    for n in 1..=n_max {
        for mu in partitions_up_to(size_max, n) {
            run.check(&format!("binomial {mu:?} N={n}"), verify_binomial(&ctx, &mu, n)?);
        }
    }
    Ok(run.finish())
}
