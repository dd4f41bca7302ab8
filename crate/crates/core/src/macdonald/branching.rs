//! b-factors and the branching coefficients psi, phi.

use crate::algebra::CycloFactored;
use crate::error::{AlgebraError, Result};
use crate::partitions::{is_horizontal_strip, Cell, Partition, StripChain};

/// `b_lambda(s) = (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l)` for `s` in `lambda`.
pub fn b_factor(lambda: &Partition, s: Cell) -> Result<CycloFactored> {
    if !lambda.has_cell(s) {
        return Err(AlgebraError::BoxOutside { row: s.row, col: s.col });
    }
    Ok(b_or_one(lambda, s))
}

/// As `b_factor`, but 1 outside the diagram.
fn b_or_one(lambda: &Partition, s: Cell) -> CycloFactored {
    if !lambda.has_cell(s) {
        return CycloFactored::one();
    }
    let a = lambda.arm(s);
    let l = lambda.leg(s);
    let num = CycloFactored::factor(a, l + 1, 1).expect("leg+1 > 0");
    let den = CycloFactored::factor(a + 1, l, -1).expect("arm+1 > 0");
    num.mul(&den)
}

/// `b_lambda = prod_{s in lambda} b_lambda(s)`, so that `Q = b P`.
pub fn b_partition(lambda: &Partition) -> CycloFactored {
    lambda.cells().fold(CycloFactored::one(), |acc, s| acc.mul(&b_or_one(lambda, s)))
}

fn strip_rows_cols(mu: &Partition, nu: &Partition) -> Result<(Vec<usize>, Vec<usize>)> {
    if !is_horizontal_strip(mu, nu) {
        return Err(AlgebraError::NotAStrip(format!("{mu}/{nu}")));
    }
    let rows = (1..=mu.len()).filter(|&i| mu.part(i - 1) > nu.part(i - 1)).collect();
    let (mc, nc) = (mu.conjugate(), nu.conjugate());
    let cols = (1..=mu.part(0) as usize).filter(|&j| mc.part(j - 1) > nc.part(j - 1)).collect();
    Ok((rows, cols))
}

/// `psi_{mu/nu} = prod_{s in R - C} b_nu(s) / b_mu(s)`.
pub fn psi(mu: &Partition, nu: &Partition) -> Result<CycloFactored> {
    let (rows, cols) = strip_rows_cols(mu, nu)?;
    let mut acc = CycloFactored::one();
    for s in nu.cells() {
        if rows.contains(&s.row) && !cols.contains(&s.col) {
            acc = acc.mul(&b_or_one(nu, s)).div(&b_or_one(mu, s))?;
        }
    }
    Ok(acc)
}

/// `phi_{mu/nu} = prod_{s in C} b_mu(s) / b_nu(s)`.
pub fn phi(mu: &Partition, nu: &Partition) -> Result<CycloFactored> {
    let (_, cols) = strip_rows_cols(mu, nu)?;
    let mut acc = CycloFactored::one();
    for s in mu.cells() {
        if cols.contains(&s.col) {
            acc = acc.mul(&b_or_one(mu, s)).div(&b_or_one(nu, s))?;
        }
    }
    Ok(acc)
}

/// `psi_T` as the product over the chain's strips.
pub fn psi_chain(chain: &StripChain) -> Result<CycloFactored> {
    chain.strips().try_fold(CycloFactored::one(), |acc, (a, b)| Ok(acc.mul(&psi(a, b)?)))
}
