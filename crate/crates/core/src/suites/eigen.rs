//! Eigen-relations of the difference operators, their t = q forms,
//! commutativity of the z-coefficients and the kernel relation.

use std::str::FromStr;

use serde_json::json;

use crate::algebra::{BlockSpec, Field, MultiPoly, QtParams, Rat, ScalarQT};
use crate::dual::{dual_h, RationalFn};
use crate::error::{AlgebraError, Result};
use crate::interp::interp_i;
use crate::macdonald::monomial_symmetric;
use crate::operators::{
    build_d_qt, build_dhat_qt, build_dhat_qt_inverted, eigenvalue_qt, rational_identity_check, DiffOperator,
};
use crate::partitions::{partitions_up_to, Partition};

use super::cauchy::cauchy_rhs;
use super::{xy_names, Run, SuiteReport};

/// Verification backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMode {
    /// Symbolic up to `N = 2`, seeded evaluation beyond.
    Auto,
    Symbolic,
    Eval,
}

impl FromStr for EvalMode {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(EvalMode::Auto),
            "symbolic" => Ok(EvalMode::Symbolic),
            "eval" => Ok(EvalMode::Eval),
            _ => Err(AlgebraError::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl EvalMode {
    fn symbolic(self, n: usize) -> bool {
        match self {
            EvalMode::Auto => n <= 2,
            EvalMode::Symbolic => true,
            EvalMode::Eval => false,
        }
    }

    fn name(self) -> &'static str {
        match self {
            EvalMode::Auto => "auto",
            EvalMode::Symbolic => "symbolic",
            EvalMode::Eval => "eval",
        }
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).chain(["z".to_string()]).collect()
}

fn specialize(p: &MultiPoly<ScalarQT>, q: &Rat, t: &Rat) -> Result<MultiPoly<Rat>> {
    p.try_map_coeffs(|c| c.eval(q, t))
}

fn eval_rational(h: &RationalFn<ScalarQT>, q: &Rat, t: &Rat, point: &[Rat]) -> Result<Rat> {
    let den = specialize(&h.den_poly(), q, t)?.eval(point)?;
    if den.is_zero() {
        return Err(AlgebraError::Pole("denominator vanishes"));
    }
    specialize(h.numerator(), q, t)?.eval(point)?.div(&den)
}

/// `prod_i (1 + q^(mu_i + 1 - i) z)`
fn eigenvalue_diagonal(mu: &Partition, n: usize) -> MultiPoly<ScalarQT> {
    let mut e = MultiPoly::one(n + 1);
    for i in 0..n {
        let c = ScalarQT::monomial(1, mu.part(i) as i32 - i as i32, 0);
        e = e.mul(&MultiPoly::one(n + 1).add(&MultiPoly::var(n + 1, n).scale(&c)));
    }
    e
}

/// Seeded check of `op f = E f` at points `(q, t, v, z)`; with `diag` the
/// `t` coordinate is ignored and `t = q`.
#[allow(clippy::too_many_arguments)]
fn seeded_eigen(
    run: &mut Run,
    label: &str,
    n: usize,
    seed: u64,
    points: usize,
    diag: bool,
    op: impl Fn(&QtParams<Rat>) -> Result<DiffOperator<Rat>> + Sync,
    eigenvalue: &MultiPoly<ScalarQT>,
    f: impl Fn(&Rat, &Rat, &[Rat]) -> Result<Rat> + Sync,
) -> Result<()> {
    let params = |v: &[Rat]| {
        let t = if diag { v[0].clone() } else { v[1].clone() };
        (v[0].clone(), t)
    };
    let check = rational_identity_check(
        2 + n + 1,
        points,
        seed,
        |v| {
            let (q, t) = params(v);
            let d = op(&QtParams::numeric(q.clone(), t.clone()))?;
            d.apply_at_point(|w| f(&q, &t, w), &v[2..2 + n], &v[2 + n])
        },
        |v| {
            let (q, t) = params(v);
            let e = specialize(eigenvalue, &q, &t)?.eval(&v[2..])?;
            Ok(e.mul(&f(&q, &t, &v[2..2 + n])?))
        },
    )?;
    run.check_eval(label, &check);
    Ok(())
}

/// `D_N(z) I_mu = E_mu(z) I_mu` and `D^_N(z) H~_mu = E_mu(z) H~_mu` for
/// `|mu| <= size_max`, the same at `t = q` with eigenvalue
/// `prod (1 + q^(mu_i+1-i) z)`, and for `N = 2` the commutativity of the
/// `z`-coefficients and the kernel relation `D Pi~ = D^ Pi~`.
pub fn verify_eigen(n: usize, size_max: u32, seed: u64, points: usize, mode: EvalMode) -> Result<SuiteReport> {
    let symbolic = mode.symbolic(n);
    let mut run = Run::new(
        "eigen",
        json!({"n": n, "max_size": size_max, "seed": seed, "points": points, "mode": mode.name(),
               "backend": if symbolic { "symbolic" } else { "eval" }}),
    );
    let generic = QtParams::generic();
    let diagonal = QtParams::diagonal();
    let xn = names("x", n);
    let un = names("u", n);
    let (d, dh) = if symbolic { (Some(build_d_qt(&generic, n)?), Some(build_dhat_qt(&generic, n)?)) } else { (None, None) };
    let (dd, ddh) =
        if symbolic { (Some(build_d_qt(&diagonal, n)?), Some(build_dhat_qt(&diagonal, n)?)) } else { (None, None) };
    for mu in partitions_up_to(size_max, n) {
        let e = eigenvalue_qt(&generic, &mu, n)?;
        let ed = eigenvalue_diagonal(&mu, n);
        let at_diag = e.try_map_coeffs(|c| c.at_t_equals_q())?;
        run.check_poly(&format!("eigenvalue at t=q {mu:?}"), &at_diag, &ed, &xn);
        let i = interp_i(&generic, &mu, n)?;
        let h = dual_h(&generic, &mu, n)?;
        let id = interp_i(&diagonal, &mu, n)?;
        let hd = dual_h(&diagonal, &mu, n)?;
        if let (Some(d), Some(dh), Some(dd), Some(ddh)) = (&d, &dh, &dd, &ddh) {
            run.check_poly(&format!("D I {mu:?}"), &d.apply_poly(&i)?, &e.mul(&i.extend_vars(1)), &xn);
            run.check_rational(&format!("D^ H {mu:?}"), &dh.apply_rational(&h)?, &h.extend_vars(1).mul_poly(&e), &un);
            run.check_poly(&format!("t=q D I {mu:?}"), &dd.apply_poly(&id)?, &ed.mul(&id.extend_vars(1)), &xn);
            run.check_rational(
                &format!("t=q D^ H {mu:?}"),
                &ddh.apply_rational(&hd)?,
                &hd.extend_vars(1).mul_poly(&ed),
                &un,
            );
        } else {
            seeded_eigen(&mut run, &format!("D I {mu:?}"), n, seed, points, false, |c| build_d_qt(c, n), &e, |q, t, w| {
                specialize(&i, q, t)?.eval(w)
            })?;
            seeded_eigen(&mut run, &format!("D^ H {mu:?}"), n, seed, points, false, |c| build_dhat_qt(c, n), &e, |q, t, w| {
                eval_rational(&h, q, t, w)
            })?;
            seeded_eigen(&mut run, &format!("t=q D I {mu:?}"), n, seed, points, true, |c| build_d_qt(c, n), &ed, |q, t, w| {
                specialize(&id, q, t)?.eval(w)
            })?;
            seeded_eigen(
                &mut run,
                &format!("t=q D^ H {mu:?}"),
                n,
                seed,
                points,
                true,
                |c| build_dhat_qt(c, n),
                &ed,
                |q, t, w| eval_rational(&hd, q, t, w),
            )?;
        }
    }
    if n == 2 {
        commutativity(&mut run, &generic)?;
        kernel(&mut run, &generic, 4)?;
    }
    Ok(run.finish())
}

/// `D^1 D^2 f = D^2 D^1 f` on `m_lambda`, `|lambda| <= 3`, `N = 2`.
fn commutativity(run: &mut Run, ctx: &QtParams<ScalarQT>) -> Result<()> {
    let d = build_d_qt(ctx, 2)?;
    let d1 = d.z_coefficient(1);
    let d2 = d.z_coefficient(2);
    let xn = names("x", 2);
    for lambda in partitions_up_to(3, 2) {
        let m = monomial_symmetric::<ScalarQT>(&lambda, 2);
        let a = d1.apply_poly_zfree(&d2.apply_poly_zfree(&m)?)?;
        let b = d2.apply_poly_zfree(&d1.apply_poly_zfree(&m)?)?;
        run.check_poly(&format!("commute on m{lambda:?}"), &a, &b, &xn[..2]);
    }
    Ok(())
}

/// `D_N(z) Pi~ = D^_N(z) Pi~` in `(x, y = 1/u, z)`, cleared of both
/// operator denominators, with `y` cut at `order`.
fn kernel(run: &mut Run, ctx: &QtParams<ScalarQT>, order: u32) -> Result<()> {
    let n = 2;
    let nv = 2 * n + 1;
    // x-degree of Pi~ is bounded by its y-degree, so the x cutoff only has to
    // absorb the operator numerators.
    let spec = BlockSpec::blocks(&[(n, 14), (n, order), (1, n as u32)]);
    let pi = cauchy_rhs(ctx, n, n, &spec)?;
    let d = build_d_qt(ctx, n)?;
    let dh = build_dhat_qt_inverted(ctx, n)?;
    let lhs = d.apply_series_numerator(&pi, 0, 2 * n)?.mul_poly(&dh.denom_in(n, nv))?;
    let rhs = dh.apply_series_numerator(&pi, n, 2 * n)?.mul_poly(&d.denom_in(0, nv))?;
    run.check_series("kernel", &lhs, &rhs, &xy_names(n, n, &["z"]));
    Ok(())
}
