//! Cauchy-type identities as truncated series.

use serde_json::json;

use crate::algebra::{
    series_from_product, BlockSpec, Field, MultiPoly, PochFactor, QtParams, Rat, ScalarKappa, ScalarQT, TruncSeries,
};
use crate::dual::{dual_h_jack, dual_h_jack_series, dual_h_series, dual_hl_series, dual_whittaker_series};
use crate::error::Result;
use crate::interp::{hl_a, interp_i, jack_interp_i, whittaker_a};
use crate::operators::{build_d_jack, build_dhat_jack, eigenvalue_jack, rational_identity_check};
use crate::partitions::{partitions_up_to, Partition};

use super::{embed, xy_names, Run, SuiteReport};

fn unit(nv: usize, idx: &[usize]) -> Vec<u32> {
    let mut e = vec![0; nv];
    for &i in idx {
        e[i] += 1;
    }
    e
}

/// `sum_mu A_mu(x) B_mu(y)` over `l(mu) <= min(N, K)`, `|mu| <= cutoff`.
fn pair_sum<F: Field>(
    n: usize,
    k: usize,
    spec: &BlockSpec,
    cutoff: u32,
    mut a: impl FnMut(&Partition) -> Result<MultiPoly<F>>,
    mut b: impl FnMut(&Partition, &BlockSpec) -> Result<TruncSeries<F>>,
) -> Result<TruncSeries<F>> {
    let nv = n + k;
    let yspec = BlockSpec::single(k, spec.cutoffs[1]);
    let mut out = TruncSeries::zero(spec.clone());
    for mu in partitions_up_to(cutoff, n.min(k)) {
        let x = TruncSeries::from_poly(embed(&a(&mu)?, 0, nv), spec.clone());
        let y = TruncSeries::from_poly(embed(b(&mu, &yspec)?.poly(), n, nv), spec.clone());
        out = out.add(&x.mul(&y)?)?;
    }
    Ok(out)
}

/// `prod_{i,j} (x_i y_j t; q)/(x_i y_j; q) * prod_j (y_j; q)/(y_j t^N; q)`.
/// Extra variables of `spec` after `x`, `y` are left untouched.
pub(crate) fn cauchy_rhs<F: Field>(ctx: &QtParams<F>, n: usize, k: usize, spec: &BlockSpec) -> Result<TruncSeries<F>> {
    let nv = spec.nvars();
    let mut factors = Vec::new();
    for i in 0..n {
        for j in 0..k {
            factors.push(PochFactor::new(ctx.t.clone(), unit(nv, &[i, n + j]), 1));
            factors.push(PochFactor::new(F::one(), unit(nv, &[i, n + j]), -1));
        }
    }
    for j in 0..k {
        factors.push(PochFactor::new(F::one(), unit(nv, &[n + j]), 1));
        factors.push(PochFactor::new(ctx.mono(0, n as i32)?, unit(nv, &[n + j]), -1));
    }
    series_from_product(ctx, &factors, spec)
}

pub(crate) fn cauchy_lhs<F: Field>(ctx: &QtParams<F>, n: usize, k: usize, spec: &BlockSpec) -> Result<TruncSeries<F>> {
    pair_sum(n, k, spec, spec.cutoffs[1], |mu| interp_i(ctx, mu, n), |mu, ys| dual_h_series(ctx, mu, k, ys))
}

/// Truncated Cauchy identity for `I_{mu|N}(x)` and `H~_{mu|K}(u)` in
/// `x` and `y = 1/u`.
pub fn verify_cauchy_qt(n: usize, k: usize, x_cutoff: u32, u_cutoff: u32) -> Result<SuiteReport> {
    let mut run = Run::new("cauchy", json!({"n": n, "k": k, "x_cutoff": x_cutoff, "u_cutoff": u_cutoff}));
    let ctx = QtParams::generic();
    let spec = BlockSpec::blocks(&[(n, x_cutoff), (k, u_cutoff)]);
    let lhs = cauchy_lhs(&ctx, n, k, &spec)?;
    let rhs = cauchy_rhs(&ctx, n, k, &spec)?;
    run.check_series("cauchy", &lhs, &rhs, &xy_names(n, k, &[]));
    Ok(run.finish())
}

/// `1 + sum_m (t;q)_m/(q;q)_m I_{(m)|N}(x) / ((u - q^-1)...(u - q^-m))`
/// against `prod_i (x_i y t; q)/(x_i y; q) * (y t^(i-1); q)/(y t^i; q)`.
pub fn verify_one_row_gf(n: usize, u_cutoff: u32) -> Result<SuiteReport> {
    let mut run = Run::new("one-row", json!({"n": n, "u_cutoff": u_cutoff}));
    let ctx = QtParams::generic();
    let nv = n + 1;
    let spec = BlockSpec::blocks(&[(n, u_cutoff), (1, u_cutoff)]);
    let y = MultiPoly::var(nv, n);
    let mut lhs = TruncSeries::one(spec.clone());
    let mut coef = ScalarQT::one();
    let mut den = MultiPoly::one(nv);
    for m in 1..=u_cutoff as i32 {
        coef = coef
            .mul(&ScalarQT::one().sub(&ScalarQT::monomial(1, m - 1, 1)))
            .div(&ScalarQT::one().sub(&ScalarQT::monomial(1, m, 0)))?;
        den = den.mul(&MultiPoly::one(nv).sub(&y.scale(&ScalarQT::monomial(1, -m, 0))));
        let i = embed(&interp_i(&ctx, &Partition::new(vec![m as u32])?, n)?, 0, nv);
        let num = TruncSeries::from_poly(i.mul(&y.pow(m as u32)).scale(&coef), spec.clone());
        lhs = lhs.add(&num.mul(&TruncSeries::from_poly(den.clone(), spec.clone()).reciprocal()?)?)?;
    }
    let mut factors = Vec::new();
    for i in 0..n {
        factors.push(PochFactor::new(ScalarQT::t(), unit(nv, &[i, n]), 1));
        factors.push(PochFactor::new(ScalarQT::one(), unit(nv, &[i, n]), -1));
        factors.push(PochFactor::new(ScalarQT::monomial(1, 0, i as i32), unit(nv, &[n]), 1));
        factors.push(PochFactor::new(ScalarQT::monomial(1, 0, i as i32 + 1), unit(nv, &[n]), -1));
    }
    let rhs = series_from_product(&ctx, &factors, &spec)?;
    run.check_series("one-row", &lhs, &rhs, &xy_names(n, 1, &[]));
    Ok(run.finish())
}

/// `sum A^W_{mu|N}(x) B^W_{mu|K}(u) = prod 1/(x_i y_j; q) * prod (y_j; q)` over `Q(q)`.
pub fn verify_whittaker(n: usize, k: usize, cutoff: u32) -> Result<SuiteReport> {
    let mut run = Run::new("whittaker", json!({"n": n, "k": k, "cutoff": cutoff}));
    let ctx = QtParams::whittaker();
    let spec = BlockSpec::blocks(&[(n, cutoff), (k, cutoff)]);
    let lhs = pair_sum(n, k, &spec, cutoff, |mu| whittaker_a(mu, n), |mu, ys| dual_whittaker_series(mu, k, ys))?;
    let rhs = cauchy_rhs(&ctx, n, k, &spec)?;
    let nv = n + k;
    let mut factors = Vec::new();
    for i in 0..n {
        for j in 0..k {
            factors.push(PochFactor::new(ScalarQT::one(), unit(nv, &[i, n + j]), -1));
        }
    }
    for j in 0..k {
        factors.push(PochFactor::new(ScalarQT::one(), unit(nv, &[n + j]), 1));
    }
    let explicit = series_from_product(&ctx, &factors, &spec)?;
    let names = xy_names(n, k, &[]);
    run.check_series("whittaker rhs at t=0", &rhs, &explicit, &names);
    run.check_series("whittaker", &lhs, &explicit, &names);
    Ok(run.finish())
}

/// `prod_{i,j} (1 - x_i t y_j)/(1 - x_i y_j) * prod_j (1 - t^(1-N) y_j)/(1 - t y_j)`.
fn hl_rhs<F: Field>(ctx: &QtParams<F>, n: usize, k: usize, spec: &BlockSpec) -> Result<TruncSeries<F>> {
    let nv = n + k;
    let mut factors = Vec::new();
    for i in 0..n {
        for j in 0..k {
            factors.push(PochFactor::new(ctx.t.clone(), unit(nv, &[i, n + j]), 1));
            factors.push(PochFactor::new(F::one(), unit(nv, &[i, n + j]), -1));
        }
    }
    for j in 0..k {
        factors.push(PochFactor::new(ctx.mono(0, 1 - n as i32)?, unit(nv, &[n + j]), 1));
        factors.push(PochFactor::new(ctx.t.clone(), unit(nv, &[n + j]), -1));
    }
    series_from_product(ctx, &factors, spec)
}

/// Hall-Littlewood identity
/// `sum A^HL(x) B^HL(u) = prod (u_j - x_i t)/(u_j - x_i) * prod (u_j - t^(1-N))/(u_j - t)`:
/// symbolically in `y = 1/u` through `order`, then at seeded rational
/// `(t, x)` through order `N K + K` with the `mu`-sum complete to that order.
pub fn verify_hl(n: usize, k: usize, order: u32, seed: u64, points: usize) -> Result<SuiteReport> {
    let full = (n * k + k) as u32;
    let mut run =
        Run::new("hl", json!({"n": n, "k": k, "order": order, "eval_order": full, "seed": seed, "points": points}));
    let ctx = QtParams::hall_littlewood();
    let names = xy_names(n, k, &[]);
    let spec = BlockSpec::blocks(&[(n, order), (k, order)]);
    let lhs = pair_sum(n, k, &spec, order, |mu| hl_a(mu, n), |mu, ys| dual_hl_series(mu, k, ys))?;
    run.check_series("hl series", &lhs, &hl_rhs(&ctx, n, k, &spec)?, &names);

    let yspec = BlockSpec::single(k, full);
    let mut terms = Vec::new();
    for mu in partitions_up_to(full, n.min(k)) {
        terms.push((hl_a(&mu, n)?, dual_hl_series(&mu, k, &yspec)?));
    }
    let check = rational_identity_check(
        1 + n,
        points,
        seed,
        |v| hl_difference(&terms, v, n, k, full).map(|d| d.0),
        |v| hl_difference(&terms, v, n, k, full).map(|d| d.1),
    )?;
    run.check_eval("hl full identity", &check);
    Ok(run.finish())
}

/// First differing `y`-coefficient of the two sides at `(t, x) = v`, or a
/// pair of zeros.
fn hl_difference(
    terms: &[(MultiPoly<ScalarQT>, TruncSeries<ScalarQT>)],
    v: &[Rat],
    n: usize,
    k: usize,
    order: u32,
) -> Result<(Rat, Rat)> {
    let zero = Rat::new(0, 1);
    let t = &v[0];
    let mut lhs = MultiPoly::<Rat>::zero(k);
    for (a, b) in terms {
        let av = a.try_map_coeffs(|c| c.eval(&zero, t))?.eval(&v[1..])?;
        lhs = lhs.add(&b.poly().try_map_coeffs(|c| c.eval(&zero, t))?.scale(&av));
    }
    let ctx = QtParams::numeric(zero.clone(), t.clone());
    let yspec = BlockSpec::single(k, order);
    let mut factors = Vec::new();
    let unit_y = |j: usize| unit(k, &[j]);
    for xi in &v[1..=n] {
        for j in 0..k {
            factors.push(PochFactor::new(xi.mul(t), unit_y(j), 1));
            factors.push(PochFactor::new(xi.clone(), unit_y(j), -1));
        }
    }
    for j in 0..k {
        factors.push(PochFactor::new(ctx.mono(0, 1 - n as i32)?, unit_y(j), 1));
        factors.push(PochFactor::new(t.clone(), unit_y(j), -1));
    }
    let rhs = series_from_product(&ctx, &factors, &yspec)?;
    let lhs = TruncSeries::from_poly(lhs, yspec);
    Ok(match lhs.first_difference(&rhs) {
        Some((_, a, b)) => (a, b),
        None => (zero.clone(), zero),
    })
}

/// `F(X + a, u + b)` in `y = 1/u` where `X` is variable `x` or zero:
/// `1 + sum_m (kappa)_m/m! prod_{l<m} (X + a - l) y^m / prod_{k=1}^m (1 - (k - b) y)`.
pub(crate) fn jack_f_series(
    spec: &BlockSpec,
    x: Option<usize>,
    a: &ScalarKappa,
    b: &ScalarKappa,
    y: usize,
) -> Result<TruncSeries<ScalarKappa>> {
    let nv = spec.nvars();
    let order = spec.cutoffs[spec.block_of[y]];
    let kappa = ScalarKappa::kappa();
    let xpoly = match x {
        Some(i) => MultiPoly::var(nv, i),
        None => MultiPoly::zero(nv),
    };
    let ypoly = MultiPoly::var(nv, y);
    let mut term = TruncSeries::one(spec.clone());
    let mut out = TruncSeries::one(spec.clone());
    for m in 1..=order as i64 {
        let c = kappa.add(&ScalarKappa::from_i64(m - 1)).div(&ScalarKappa::from_i64(m))?;
        let lin = xpoly.add(&MultiPoly::constant(nv, a.sub(&ScalarKappa::from_i64(m - 1)))).mul(&ypoly).scale(&c);
        let root = ScalarKappa::from_i64(m).sub(b);
        let geo = TruncSeries::from_poly(MultiPoly::one(nv).sub(&ypoly.scale(&root)), spec.clone()).reciprocal()?;
        term = term.mul_poly(&lin)?.mul(&geo)?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Jack Cauchy identity with both right-hand sides, the shift relations of
/// `F`, and the Jack eigen-relations for `N <= 2`, `|mu| <= 3`.
pub fn verify_jack_cauchy(n: usize, cutoff: u32) -> Result<SuiteReport> {
    let mut run = Run::new("jack", json!({"n": n, "cutoff": cutoff, "shift_order": 6, "eigen_max_size": 3}));
    let names = xy_names(n, n, &[]);
    let spec = BlockSpec::blocks(&[(n, cutoff), (n, cutoff)]);
    let lhs = pair_sum(n, n, &spec, cutoff, |mu| jack_interp_i(mu, n), |mu, ys| dual_h_jack_series(mu, n, ys))?;
    let kappa = ScalarKappa::kappa();
    let zero = ScalarKappa::zero();
    let mut rhs1 = TruncSeries::one(spec.clone());
    let mut rhs2 = TruncSeries::one(spec.clone());
    for i in 0..n {
        let shift = kappa.scale_i64(i as i64);
        for j in 0..n {
            let f = jack_f_series(&spec, Some(i), &zero, &zero, n + j)?;
            let g = jack_f_series(&spec, None, &shift.neg(), &zero, n + j)?;
            rhs1 = rhs1.mul(&f)?.mul(&g.reciprocal()?)?;
            rhs2 = rhs2.mul(&jack_f_series(&spec, Some(i), &shift, &shift, n + j)?)?;
        }
    }
    run.check_series("jack cauchy", &lhs, &rhs1, &names);
    run.check_series("jack alternative rhs", &rhs1, &rhs2, &names);

    // shift relations in one x and one y, order 6
    let s = BlockSpec::blocks(&[(1, 6), (1, 6)]);
    let one = ScalarKappa::one();
    let f = jack_f_series(&s, Some(0), &zero, &zero, 1)?;
    let x = MultiPoly::<ScalarKappa>::var(2, 0);
    let y = MultiPoly::<ScalarKappa>::var(2, 1);
    let xy = x.mul(&y);
    let l1 = MultiPoly::one(2).sub(&xy).add(&y.scale(&kappa));
    let r1 = MultiPoly::one(2).sub(&xy);
    let fx = jack_f_series(&s, Some(0), &one.neg(), &zero, 1)?;
    run.check_series("x-shift", &fx.mul_poly(&l1)?, &f.mul_poly(&r1)?, &xy_names(1, 1, &[]));
    let fu = jack_f_series(&s, Some(0), &zero, &one, 1)?;
    let r2 = r1.mul(&MultiPoly::one(2).add(&y.scale(&kappa)));
    run.check_series("u-shift", &fu.mul_poly(&l1)?, &f.mul_poly(&r2)?, &xy_names(1, 1, &[]));
    // u -> u + 1 is y -> y/(1+y)
    let sub = TruncSeries::from_poly(y.clone(), s.clone())
        .mul(&TruncSeries::from_poly(MultiPoly::one(2).add(&y), s.clone()).reciprocal()?)?;
    run.check_series("u-shift by substitution", &f.compose_var(1, &sub)?, &fu, &xy_names(1, 1, &[]));

    for m in 1..=n.min(2) {
        let d = build_d_jack(m)?;
        let dh = build_dhat_jack(m)?;
        let vn: Vec<String> = (1..=m).map(|i| format!("x{i}")).chain(["z".to_string()]).collect();
        let un: Vec<String> = (1..=m).map(|i| format!("u{i}")).chain(["z".to_string()]).collect();
        for mu in partitions_up_to(3, m) {
            let label = format!("jack eigen {mu:?} N={m}");
            let e = eigenvalue_jack(&mu, m);
            let i = jack_interp_i(&mu, m)?;
            run.check_poly(&label, &d.apply_poly(&i)?, &e.mul(&i.extend_vars(1)), &vn);
            let h = dual_h_jack(&mu, m)?;
            run.check_rational(&format!("jack dual eigen {mu:?} N={m}"), &dh.apply_rational(&h)?, &h.extend_vars(1).mul_poly(&e), &un);
        }
    }
    Ok(run.finish())
}
