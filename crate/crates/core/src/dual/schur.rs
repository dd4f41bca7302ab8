//! Multiparameter Schur polynomials and their dual `sigma` functions.

use crate::algebra::linalg::permutations;
use crate::algebra::{Field, MultiPoly};
use crate::error::{AlgebraError, Result};
use crate::partitions::Partition;

use super::rational::{DenFactor, RationalFn};

fn det<F: Field>(m: &[Vec<MultiPoly<F>>], nvars: usize) -> MultiPoly<F> {
    let n = m.len();
    let mut out = MultiPoly::zero(nvars);
    for (perm, sign) in permutations(n) {
        let mut term = MultiPoly::constant(nvars, F::from_i64(sign));
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&m[i][j]);
        }
        out = out.add(&term);
    }
    out
}

/// `prod_{i<j} (x_i - x_j)`
pub fn vandermonde<F: Field>(n: usize) -> MultiPoly<F> {
    let mut v = MultiPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            v = v.mul(&MultiPoly::var(n, i).sub(&MultiPoly::var(n, j)));
        }
    }
    v
}

/// `prod_{k in range} (x_var - c_k)`
fn falling<F: Field>(n: usize, var: usize, c: &[F], range: std::ops::Range<usize>) -> MultiPoly<F> {
    let mut p = MultiPoly::one(n);
    for k in range {
        p = p.mul(&MultiPoly::linear(n, var, &c[k]));
    }
    p
}

fn need(c_len: usize, n: usize) -> Result<()> {
    if c_len < n {
        Err(AlgebraError::DimensionMismatch { expected: n, got: c_len })
    } else {
        Ok(())
    }
}

/// `det[(x_j | c)^(mu_i + N - i)] / V(x)` with `(x|c)^m = (x - c_0)...(x - c_(m-1))`.
pub fn multiparam_schur<F: Field>(mu: &Partition, n: usize, c: &[F]) -> Result<MultiPoly<F>> {
    if mu.len() > n {
        return Ok(MultiPoly::zero(n));
    }
    need(c.len(), mu.part(0) as usize + n.saturating_sub(1))?;
    let m: Vec<Vec<MultiPoly<F>>> = (0..n)
        .map(|i| {
            let e = (mu.part(i) as usize) + n - 1 - i;
            (0..n).map(|j| falling(n, j, c, 0..e)).collect()
        })
        .collect();
    det(&m, n).div_exact(&vandermonde(n)).ok_or(AlgebraError::NotExact("alternant not divisible by V"))
}

/// Numerator determinant `det[prod_{k=m_i+1}^{M} (u_j - c_k)]`, i.e. the
/// matrix `1/(u_j | c_1, c_2, ...)^(m_i)` with column `j` multiplied by
/// `(u_j | c_1, ...)^M`.
fn cleared_det<F: Field>(exps: &[usize], n: usize, c: &[F], big_m: usize) -> MultiPoly<F> {
    let m: Vec<Vec<MultiPoly<F>>> =
        exps.iter().map(|&e| (0..n).map(|j| falling(n, j, c, e + 1..big_m + 1)).collect()).collect();
    det(&m, n)
}

fn exps(mu: &Partition, n: usize) -> Vec<usize> {
    (0..n).map(|i| mu.part(i) as usize + n - 1 - i).collect()
}

/// `sigma_mu(u | c) = det[1/(u_j|c_1..)^(mu_i+N-i)] / det[1/(u_j|c_1..)^(N-i)]`.
pub fn dual_sigma<F: Field>(mu: &Partition, n: usize, c: &[F]) -> Result<RationalFn<F>> {
    if mu.len() > n {
        return Ok(RationalFn::zero(n));
    }
    let big_m = mu.part(0) as usize + n.saturating_sub(1);
    need(c.len(), big_m + 1)?;
    let num = cleared_det(&exps(mu, n), n, c, big_m);
    let den = cleared_det(&exps(&Partition::empty(), n), n, c, big_m);
    RationalFn::new(num, Vec::new(), Some(den))
}

/// Vandermonde form:
/// `(-1)^(N(N-1)/2) prod_j (u_j - c_1)...(u_j - c_(N-1)) / V(u) * det[1/(u_j|c)^(mu_i+N-i)]`.
pub fn dual_sigma_vandermonde<F: Field>(mu: &Partition, n: usize, c: &[F]) -> Result<RationalFn<F>> {
    if mu.len() > n {
        return Ok(RationalFn::zero(n));
    }
    let big_m = mu.part(0) as usize + n.saturating_sub(1);
    need(c.len(), big_m + 1)?;
    let sign = if (n * n.saturating_sub(1) / 2) % 2 == 0 { 1 } else { -1 };
    let mut num = cleared_det(&exps(mu, n), n, c, big_m).scale(&F::from_i64(sign));
    let mut den = Vec::new();
    for j in 0..n {
        num = num.mul(&falling(n, j, c, 1..n));
        for ck in &c[1..=big_m] {
            den.push(DenFactor::new(j, ck.clone(), 1));
        }
    }
    RationalFn::new(num, den, Some(vandermonde(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn x(i: usize) -> MultiPoly<Rat> {
        MultiPoly::var(2, i)
    }

    #[test]
    fn zero_parameters_give_schur() {
        let c = vec![Rat::new(0, 1); 6];
        assert_eq!(multiparam_schur(&p(&[1]), 2, &c).unwrap(), x(0).add(&x(1)));
        assert_eq!(multiparam_schur(&p(&[1, 1]), 2, &c).unwrap(), x(0).mul(&x(1)));
        let s2 = x(0).pow(2).add(&x(0).mul(&x(1))).add(&x(1).pow(2));
        assert_eq!(multiparam_schur(&p(&[2]), 2, &c).unwrap(), s2);
        assert!(multiparam_schur(&p(&[1, 1, 1]), 2, &c).unwrap().is_zero());
    }

    #[test]
    fn factorial_one_variable() {
        let c: Vec<Rat> = (0..5).map(|i| Rat::new(i, 1)).collect();
        let s = multiparam_schur(&p(&[3]), 1, &c).unwrap();
        let xv = MultiPoly::var(1, 0);
        let mut expected = MultiPoly::one(1);
        for k in 0..3 {
            expected = expected.mul(&xv.sub(&MultiPoly::constant(1, Rat::new(k, 1))));
        }
        assert_eq!(s, expected);
    }

    #[test]
    fn sigma_routes_agree() {
        let c: Vec<Rat> = (0..8).map(|i| Rat::new(2 * i + 1, 3)).collect();
        for n in 1..=3 {
            for mu in crate::partitions::partitions_up_to(3, n) {
                let a = dual_sigma(&mu, n, &c).unwrap();
                let b = dual_sigma_vandermonde(&mu, n, &c).unwrap();
                assert_eq!(a, b, "{mu:?}, N={n}");
            }
        }
        assert_eq!(dual_sigma(&p(&[]), 2, &c).unwrap(), RationalFn::one(2));
    }
}
