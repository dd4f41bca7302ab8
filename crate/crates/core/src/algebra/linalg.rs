//! Dense exact linear algebra for the small systems that occur here.

use super::field::Field;
use crate::error::{AlgebraError, Result};

/// Solves `a x = b` by Gaussian elimination; `a` must be square and nonsingular.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Result<Vec<F>> {
    let n = a.len();
    let mut m: Vec<Vec<F>> = a.iter().zip(b).map(|(row, bi)| {
        let mut r = row.clone();
        r.push(bi.clone());
        r
    }).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(AlgebraError::DivisionByZero)?;
        m.swap(col, piv);
        let inv = m[col][col].inv()?;
        let pivot_row: Vec<F> = m[col].iter().map(|x| x.mul(&inv)).collect();
        m[col] = pivot_row.clone();
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    m[r][c] = m[r][c].sub(&f.mul(&pivot_row[c]));
                }
            }
        }
    }
    Ok(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Inverse of a square nonsingular matrix.
pub fn inverse<F: Field>(a: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<F> = (0..n).map(|i| if i == j { F::one() } else { F::zero() }).collect();
        cols.push(solve(a, &e)?);
    }
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let s = if inv % 2 == 0 { 1 } else { -1 };
            (p, s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    #[test]
    fn solve_small_system() {
        let a = vec![vec![Rat::new(2, 1), Rat::new(1, 1)], vec![Rat::new(1, 1), Rat::new(3, 1)]];
        let x = solve(&a, &[Rat::new(3, 1), Rat::new(5, 1)]).unwrap();
        assert_eq!(x, vec![Rat::new(4, 5), Rat::new(7, 5)]);
        let inv: Vec<Vec<Rat>> = inverse(&a).unwrap();
        assert_eq!(inv[0][0], Rat::new(3, 5));
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
    }
}
