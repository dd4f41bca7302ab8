//! Difference operators `D_N(z)`, `D^_N(z)` and their Jack versions, plus a
//! seeded evaluation checker for rational identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use crate::algebra::{Field, MultiPoly, QtParams, Rat, ScalarKappa, TruncSeries};
use crate::dual::rational::RationalFn;
use crate::dual::schur::vandermonde;
use crate::error::{AlgebraError, Result};
use crate::partitions::Partition;

pub const DEFAULT_SEED: u64 = 20240501;

/// How `T_a` acts on the variable `v_a`.
#[derive(Clone, Debug, PartialEq)]
pub enum Shift<F> {
    /// `v -> s v`
    Scale(F),
    /// `v -> v + s`
    Add(F),
}

/// One subset term: `numer_A(v, z) T_A`, all over a shared denominator.
#[derive(Clone, Debug)]
pub struct OpTerm<F> {
    pub subset: Vec<usize>,
    /// Polynomial in `v_1..v_N, z`.
    pub numer: MultiPoly<F>,
}

/// `(1/denom(v)) sum_A numer_A(v, z) T_A`.
#[derive(Clone, Debug)]
pub struct DiffOperator<F> {
    pub n: usize,
    pub shift: Shift<F>,
    pub denom: MultiPoly<F>,
    pub terms: Vec<OpTerm<F>>,
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
}

fn var<F: Field>(n: usize, i: usize) -> MultiPoly<F> {
    MultiPoly::var(n + 1, i)
}

fn cst<F: Field>(n: usize, c: F) -> MultiPoly<F> {
    MultiPoly::constant(n + 1, c)
}

/// `V(v) / prod_{a in A, b notin A} (v_a - v_b)`, a polynomial.
fn vandermonde_quotient<F: Field>(n: usize, a: &[usize]) -> MultiPoly<F> {
    let mut out = cst(n, F::one());
    for i in 0..n {
        for j in i + 1..n {
            let (ia, ja) = (a.contains(&i), a.contains(&j));
            let d = var::<F>(n, i).sub(&var(n, j));
            if ia == ja {
                out = out.mul(&d);
            } else if ja {
                // (v_i - v_j) = -(v_j - v_i) with j in A
                out = out.neg();
            }
        }
    }
    out
}

/// Assembles `sum_A coeff(A) * prod_{a,b} cross(a,b) * V/prod(v_a - v_b)`.
fn build<F: Field>(
    n: usize,
    shift: Shift<F>,
    denom: MultiPoly<F>,
    inside: impl Fn(usize) -> MultiPoly<F>,
    outside: impl Fn(usize) -> MultiPoly<F>,
    cross: impl Fn(usize, usize) -> MultiPoly<F>,
    scalar: impl Fn(usize) -> Result<F>,
) -> Result<DiffOperator<F>> {
    let mut terms = Vec::with_capacity(1 << n);
    for a in subsets(n) {
        let z = var::<F>(n, n).pow(a.len() as u32);
        let mut p = z.scale(&scalar(a.len())?).mul(&vandermonde_quotient(n, &a));
        for i in 0..n {
            p = p.mul(&if a.contains(&i) { inside(i) } else { outside(i) });
        }
        for &i in &a {
            for j in (0..n).filter(|j| !a.contains(j)) {
                p = p.mul(&cross(i, j));
            }
        }
        terms.push(OpTerm { subset: a, numer: p });
    }
    Ok(DiffOperator { n, shift, denom, terms })
}

fn denominator_with_product<F: Field>(n: usize) -> MultiPoly<F> {
    let mut d = vandermonde::<F>(n).extend_vars(1);
    for i in 0..n {
        d = d.mul(&var(n, i));
    }
    d
}

/// `D_N(z;q,t) = sum_A C_A T_{q,A}` with
/// `C_A = z^|A| t^(|A|(|A|-1)/2) prod_A (x_a t^(1-N) - 1)/x_a prod_{A^c} (x_b + z)/x_b
///        prod (x_a t - x_b)/(x_a - x_b)`.
pub fn build_d_qt<F: Field>(ctx: &QtParams<F>, n: usize) -> Result<DiffOperator<F>> {
    let t1n = ctx.mono(0, 1 - n as i32)?;
    build(
        n,
        Shift::Scale(ctx.q.clone()),
        denominator_with_product(n),
        |a| var::<F>(n, a).scale(&t1n).sub(&cst(n, F::one())),
        |b| var::<F>(n, b).add(&var(n, n)),
        |a, b| var::<F>(n, a).scale(&ctx.t).sub(&var(n, b)),
        |k| ctx.mono(0, (k * k.saturating_sub(1) / 2) as i32),
    )
}

/// `D^_N(z;q,t) = sum_A C^_A T^-1_{q,A}` with
/// `C^_A = z^|A| t^(-|A|(|A|-1)/2) prod_A (u_a - 1)/u_a prod_{A^c} (u_b + z)/u_b
///         prod (u_a t^-1 - u_b)/(u_a - u_b)`.
pub fn build_dhat_qt<F: Field>(ctx: &QtParams<F>, n: usize) -> Result<DiffOperator<F>> {
    let tinv = ctx.t.inv()?;
    build(
        n,
        Shift::Scale(ctx.q.inv()?),
        denominator_with_product(n),
        |a| var::<F>(n, a).sub(&cst(n, F::one())),
        |b| var::<F>(n, b).add(&var(n, n)),
        |a, b| var::<F>(n, a).scale(&tinv).sub(&var(n, b)),
        |k| ctx.mono(0, -((k * k.saturating_sub(1) / 2) as i32)),
    )
}

/// `D^_N` rewritten in `y_j = 1/u_j`: over `V(y)`, with
/// `z^|A| t^(-|A|(|A|-1)/2) prod_A (1 - y_a) prod_{A^c} (1 + z y_b) prod (t^-1 y_b - y_a)/(y_b - y_a)`
/// and `y_a -> q y_a`.
pub fn build_dhat_qt_inverted<F: Field>(ctx: &QtParams<F>, n: usize) -> Result<DiffOperator<F>> {
    let tinv = ctx.t.inv()?;
    let mut op = build(
        n,
        Shift::Scale(ctx.q.clone()),
        vandermonde::<F>(n).extend_vars(1),
        |a| cst::<F>(n, F::one()).sub(&var(n, a)),
        |b| cst::<F>(n, F::one()).add(&var::<F>(n, b).mul(&var(n, n))),
        |a, b| var::<F>(n, b).scale(&tinv).sub(&var(n, a)),
        |k| ctx.mono(0, -((k * k.saturating_sub(1) / 2) as i32)),
    )?;
    // V(y)/prod_{a,b}(y_b - y_a) = (-1)^(|A||A^c|) V(y)/prod_{a,b}(y_a - y_b)
    for term in &mut op.terms {
        if (term.subset.len() * (n - term.subset.len())) % 2 == 1 {
            term.numer = term.numer.neg();
        }
    }
    Ok(op)
}

/// `D^Jack_N(z) = sum_A (-1)^|A| prod_A (x_a + (N-1) kappa) prod_{A^c} (x_b + z)
///   prod (x_a - x_b - kappa)/(x_a - x_b) T^-1_A`, with `T_x f(x) = f(x+1)`.
pub fn build_d_jack(n: usize) -> Result<DiffOperator<ScalarKappa>> {
    let kappa = ScalarKappa::kappa();
    let shift = kappa.scale_i64(n as i64 - 1);
    build(
        n,
        Shift::Add(ScalarKappa::from_i64(-1)),
        vandermonde::<ScalarKappa>(n).extend_vars(1),
        |a| var::<ScalarKappa>(n, a).add(&cst(n, shift.clone())),
        |b| var::<ScalarKappa>(n, b).add(&var(n, n)),
        |a, b| var::<ScalarKappa>(n, a).sub(&var(n, b)).sub(&cst(n, kappa.clone())),
        |k| Ok(ScalarKappa::from_i64(if k % 2 == 0 { 1 } else { -1 })),
    )
    .map(strip_z_power)
}

/// `D^^Jack_N(z) = sum_A (-1)^|A| prod_A u_a prod_{A^c} (u_b + z)
///   prod (u_a - u_b + kappa)/(u_a - u_b) T_A`.
pub fn build_dhat_jack(n: usize) -> Result<DiffOperator<ScalarKappa>> {
    let kappa = ScalarKappa::kappa();
    build(
        n,
        Shift::Add(ScalarKappa::one()),
        vandermonde::<ScalarKappa>(n).extend_vars(1),
        |a| var::<ScalarKappa>(n, a),
        |b| var::<ScalarKappa>(n, b).add(&var(n, n)),
        |a, b| var::<ScalarKappa>(n, a).sub(&var(n, b)).add(&cst(n, kappa.clone())),
        |k| Ok(ScalarKappa::from_i64(if k % 2 == 0 { 1 } else { -1 })),
    )
    .map(strip_z_power)
}

/// The Jack coefficients carry no `z^|A|`.
fn strip_z_power<F: Field>(mut op: DiffOperator<F>) -> DiffOperator<F> {
    let n = op.n;
    for term in &mut op.terms {
        let k = term.subset.len() as u32;
        let mut p = MultiPoly::zero(n + 1);
        for (e, c) in term.numer.terms() {
            let mut e = e.clone();
            e[n] -= k;
            p.add_term(e, c.clone());
        }
        term.numer = p;
    }
    op
}

impl<F: Field> DiffOperator<F> {
    fn shift_poly(&self, f: &MultiPoly<F>, subset: &[usize]) -> MultiPoly<F> {
        subset.iter().fold(f.clone(), |g, &a| match &self.shift {
            Shift::Scale(s) => g.scale_var(a, s),
            Shift::Add(s) => g.shift_var(a, s),
        })
    }

    fn shift_point(&self, v: &[F], subset: &[usize]) -> Vec<F> {
        let mut w = v.to_vec();
        for &a in subset {
            w[a] = match &self.shift {
                Shift::Scale(s) => w[a].mul(s),
                Shift::Add(s) => w[a].add(s),
            };
        }
        w
    }

    /// Coefficient of `z^r`, as a `z`-free operator.
    pub fn z_coefficient(&self, r: u32) -> DiffOperator<F> {
        let n = self.n;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut p = MultiPoly::zero(n + 1);
                for (e, c) in t.numer.terms() {
                    if e[n] == r {
                        let mut e = e.clone();
                        e[n] = 0;
                        p.add_term(e, c.clone());
                    }
                }
                OpTerm { subset: t.subset.clone(), numer: p }
            })
            .collect();
        DiffOperator { n, shift: self.shift.clone(), denom: self.denom.clone(), terms }
    }

    /// The `A = {}` coefficient times the denominator, for the normalization check.
    pub fn empty_term(&self) -> &MultiPoly<F> {
        &self.terms[0].numer
    }

    /// Applies the operator to a polynomial in `v_1..v_N`; the result is a
    /// polynomial in `v_1..v_N, z`. Fails if the denominator does not clear.
    pub fn apply_poly(&self, f: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        if f.nvars() != self.n {
            return Err(AlgebraError::DimensionMismatch { expected: self.n, got: f.nvars() });
        }
        let parts: Vec<MultiPoly<F>> = self
            .terms
            .iter()
            .map(|t| t.numer.mul(&self.shift_poly(f, &t.subset).extend_vars(1)))
            .collect();
        let total = parts.iter().fold(MultiPoly::zero(self.n + 1), |a, b| a.add(b));
        total.div_exact(&self.denom).ok_or(AlgebraError::NotExact("operator denominator does not clear"))
    }

    /// Applies a `z`-free operator and drops the `z` slot.
    pub fn apply_poly_zfree(&self, f: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        Ok(self.apply_poly(f)?.substitute_remove(self.n, &F::zero()))
    }

    /// Applies the operator to a rational function of `v_1..v_N`; the result
    /// is a rational function of `v_1..v_N, z`.
    pub fn apply_rational(&self, f: &RationalFn<F>) -> Result<RationalFn<F>> {
        let g = f.extend_vars(1);
        let mut out = RationalFn::zero(self.n + 1);
        for t in &self.terms {
            let mut h = g.clone();
            for &a in &t.subset {
                h = match &self.shift {
                    Shift::Scale(s) => h.scale_var(a, s)?,
                    Shift::Add(s) => h.shift_var(a, s),
                };
            }
            out = out.add(&h.mul_poly(&t.numer));
        }
        out.divide_by_poly(&self.denom)
    }

    /// Value of `(op f)(v, z)` from values of `f`.
    pub fn apply_at_point(&self, f: impl Fn(&[F]) -> Result<F>, v: &[F], z: &F) -> Result<F> {
        let mut full = v.to_vec();
        full.push(z.clone());
        let d = self.denom.eval(&full)?;
        if d.is_zero() {
            return Err(AlgebraError::Pole("operator denominator vanishes"));
        }
        let mut acc = F::zero();
        for t in &self.terms {
            let c = t.numer.eval(&full)?;
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&c.mul(&f(&self.shift_point(v, &t.subset))?));
        }
        acc.div(&d)
    }

    /// `sum_A numer_A T_A s` for a series whose variables `offset..offset+N`
    /// carry `v` and whose variable `z_index` carries `z`. The shared
    /// denominator is not divided out.
    pub fn apply_series_numerator(&self, s: &TruncSeries<F>, offset: usize, z_index: usize) -> Result<TruncSeries<F>> {
        let nv = s.spec().nvars();
        let mut perm: Vec<usize> = (0..self.n).map(|i| offset + i).collect();
        perm.push(z_index);
        let mut out = TruncSeries::zero(s.spec().clone());
        for t in &self.terms {
            let mut shifted = s.clone();
            for &a in &t.subset {
                shifted = match &self.shift {
                    Shift::Scale(c) => shifted.scale_var(offset + a, c),
                    Shift::Add(_) => return Err(AlgebraError::Incompatible("additive shift on a series")),
                };
            }
            out = out.add(&shifted.mul_poly(&t.numer.rename_vars(&perm, nv))?)?;
        }
        Ok(out)
    }

    /// The shared denominator placed at `offset..offset+N` of an `nv`-variable ring.
    pub fn denom_in(&self, offset: usize, nv: usize) -> MultiPoly<F> {
        let mut perm: Vec<usize> = (0..self.n).map(|i| offset + i).collect();
        perm.push(nv.saturating_sub(1));
        self.denom.rename_vars(&perm, nv)
    }
}

/// `prod_i (1 + q^mu_i t^(1-i) z)` as a polynomial in `z` placed at variable
/// `n` of an `(n+1)`-variable ring.
pub fn eigenvalue_qt<F: Field>(ctx: &QtParams<F>, mu: &Partition, n: usize) -> Result<MultiPoly<F>> {
    let mut e = MultiPoly::one(n + 1);
    for i in 0..n {
        let c = ctx.mono(mu.part(i) as i32, -(i as i32))?;
        e = e.mul(&MultiPoly::one(n + 1).add(&MultiPoly::var(n + 1, n).scale(&c)));
    }
    Ok(e)
}

/// `prod_i (mu_i + (1-i) kappa + z)`
pub fn eigenvalue_jack(mu: &Partition, n: usize) -> MultiPoly<ScalarKappa> {
    let kappa = ScalarKappa::kappa();
    let mut e = MultiPoly::one(n + 1);
    for i in 0..n {
        let c = ScalarKappa::from_i64(mu.part(i) as i64).sub(&kappa.scale_i64(i as i64));
        e = e.mul(&MultiPoly::var(n + 1, n).add(&MultiPoly::constant(n + 1, c)));
    }
    e
}

/// Outcome of a seeded evaluation check.
#[derive(Clone, Debug)]
pub struct EvalCheck {
    pub points: usize,
    pub failure: Option<EvalFailure>,
}

#[derive(Clone, Debug)]
pub struct EvalFailure {
    pub point: Vec<Rat>,
    pub lhs: Rat,
    pub rhs: Rat,
}

impl EvalCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// A rational with numerator and denominator bounded by `10^6`.
pub fn random_rational(rng: &mut impl Rng) -> Rat {
    let n: i64 = rng.gen_range(-1_000_000..=1_000_000);
    let d: i64 = rng.gen_range(1..=1_000_000);
    Rat::new(n, d)
}

const MAX_RESAMPLES: usize = 100;

fn is_pole(e: &AlgebraError) -> bool {
    matches!(e, AlgebraError::DivisionByZero | AlgebraError::Pole(_))
}

/// Compares `lhs` and `rhs` at `points` seeded random points of dimension
/// `dim`. Point `i` uses stream `i` of a ChaCha generator keyed by `seed`;
/// points where either side has a pole are redrawn from the same stream.
pub fn rational_identity_check<L, R>(dim: usize, points: usize, seed: u64, lhs: L, rhs: R) -> Result<EvalCheck>
where
    L: Fn(&[Rat]) -> Result<Rat> + Sync,
    R: Fn(&[Rat]) -> Result<Rat> + Sync,
{
    let results: Vec<Result<Option<EvalFailure>>> = (0..points)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            for _ in 0..MAX_RESAMPLES {
                let point: Vec<Rat> = (0..dim).map(|_| random_rational(&mut rng)).collect();
                let (a, b) = match (lhs(&point), rhs(&point)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) if is_pole(&e) => continue,
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                };
                return Ok(if a == b { None } else { Some(EvalFailure { point, lhs: a, rhs: b }) });
            }
            Err(AlgebraError::TooManyResamples(MAX_RESAMPLES))
        })
        .collect();
    let mut failure = None;
    for r in results {
        if let Some(f) = r? {
            failure.get_or_insert(f);
        }
    }
    Ok(EvalCheck { points, failure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ScalarQT;
    use crate::dual::rational::DenFactor;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn qt_one_variable_shapes() {
        let ctx = QtParams::generic();
        let d = build_d_qt(&ctx, 1).unwrap();
        // denominators: x; A={} numerator x+z; A={1} numerator z(x-1)
        let x = MultiPoly::<ScalarQT>::var(2, 0);
        let z = MultiPoly::<ScalarQT>::var(2, 1);
        assert_eq!(d.terms[0].numer, x.add(&z));
        assert_eq!(d.terms[1].numer, z.mul(&x.sub(&MultiPoly::one(2))));
        let dh = build_dhat_qt(&ctx, 1).unwrap();
        assert_eq!(dh.terms[1].numer, z.mul(&x.sub(&MultiPoly::one(2))));
        assert_eq!(dh.shift, Shift::Scale(ScalarQT::q().inv().unwrap()));
    }

    #[test]
    fn empty_subset_normalization() {
        let ctx = QtParams::generic();
        for n in 1..=3 {
            let d = build_d_qt(&ctx, n).unwrap();
            let mut expected = vandermonde::<ScalarQT>(n).extend_vars(1);
            for i in 0..n {
                expected = expected.mul(&MultiPoly::var(n + 1, i).add(&MultiPoly::var(n + 1, n)));
            }
            assert_eq!(d.empty_term(), &expected);
            assert_eq!(build_dhat_qt(&ctx, n).unwrap().empty_term(), &expected);
        }
    }

    #[test]
    fn full_subset_n2() {
        let ctx = QtParams::generic();
        let d = build_dhat_qt(&ctx, 2).unwrap();
        let full = d.terms.iter().find(|t| t.subset.len() == 2).unwrap();
        let u = |i| MultiPoly::<ScalarQT>::var(3, i);
        let expected = u(0)
            .sub(&MultiPoly::one(3))
            .mul(&u(1).sub(&MultiPoly::one(3)))
            .mul(&u(2).pow(2))
            .mul(&u(0).sub(&u(1)))
            .scale(&ScalarQT::t().inv().unwrap());
        assert_eq!(full.numer, expected);
    }

    #[test]
    fn trivial_eigenvalues() {
        let ctx = QtParams::generic();
        let d = build_d_qt(&ctx, 2).unwrap();
        let r = d.apply_poly(&MultiPoly::one(2)).unwrap();
        assert_eq!(r, eigenvalue_qt(&ctx, &p(&[]), 2).unwrap());
        let dh = build_dhat_qt(&ctx, 2).unwrap();
        let r = dh.apply_rational(&RationalFn::one(2)).unwrap();
        assert_eq!(r, RationalFn::from_poly(eigenvalue_qt(&ctx, &p(&[]), 2).unwrap()));
    }

    #[test]
    fn jack_one_variable() {
        let x = MultiPoly::<ScalarKappa>::var(1, 0);
        let r = build_d_jack(1).unwrap().apply_poly(&x).unwrap();
        assert_eq!(r, eigenvalue_jack(&p(&[1]), 1).mul(&x.extend_vars(1)));
        let dh = build_dhat_jack(1).unwrap();
        // u z T_u + (u + z) up to the sign of the shifted term
        let z = MultiPoly::<ScalarKappa>::var(2, 1);
        let u = MultiPoly::<ScalarKappa>::var(2, 0);
        assert_eq!(dh.terms[0].numer, u.add(&z));
        assert_eq!(dh.terms[1].numer, u.neg());
        let h = RationalFn::new(MultiPoly::one(1), vec![DenFactor::new(0, ScalarKappa::one(), 1)], None).unwrap();
        let r = dh.apply_rational(&h).unwrap();
        let expected = h.extend_vars(1).mul_poly(&eigenvalue_jack(&p(&[1]), 1));
        assert_eq!(r, expected);
    }

    #[test]
    fn identity_checker() {
        let ok = rational_identity_check(
            2,
            5,
            DEFAULT_SEED,
            |v| v[0].add(&v[1]).div(&v[0].mul(&v[1])),
            |v| Ok(v[0].inv()?.add(&v[1].inv()?)),
        )
        .unwrap();
        assert!(ok.passed());
        let bad = rational_identity_check(1, 3, DEFAULT_SEED, |v| Ok(v[0].clone()), |v| Ok(v[0].add(&Rat::new(1, 1))))
            .unwrap();
        assert!(!bad.passed());
        let again = rational_identity_check(1, 3, DEFAULT_SEED, |v| Ok(v[0].clone()), |v| Ok(v[0].add(&Rat::new(1, 1))))
            .unwrap();
        assert_eq!(bad.failure.unwrap().point, again.failure.unwrap().point);
        let pole = rational_identity_check(1, 1, 7, |_| Err(AlgebraError::DivisionByZero), |v| Ok(v[0].clone()));
        assert!(matches!(pole, Err(AlgebraError::TooManyResamples(_))));
    }
}
