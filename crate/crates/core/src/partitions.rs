//! Partitions, horizontal strips and reverse semistandard tableaux.
//!
//! A reverse tableau of shape `mu` with entries in `1..=N` is stored as the
//! interlacing chain `mu = mu(0) > mu(1) > ... > mu(N) = ()`, where the boxes
//! of `mu(k-1)/mu(k)` carry the value `k`.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// Parses `"3,1"`, `"3 1"`, `"[3,1]"`; the empty string or `"0"` is the
    /// empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<u32> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u32>().map_err(|_| AlgebraError::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<_>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `mu_i` with 0-based index; 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let m = self.part(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Containment of diagrams `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    pub fn has_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col as u32 <= self.part(c.row - 1)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p as usize).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn arm(&self, c: Cell) -> i32 {
        self.part(c.row - 1) as i32 - c.col as i32
    }

    pub fn leg(&self, c: Cell) -> i32 {
        self.conjugate().part(c.col - 1) as i32 - c.row as i32
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        self.size() == other.size()
    }

    /// `(m^n) + self` padded to `n` rows.
    pub fn plus_rectangle(&self, m: u32, n: usize) -> Self {
        Partition((0..n.max(self.len())).map(|i| self.part(i) + if i < n { m } else { 0 }).collect())
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }
}

/// Graded reverse-lexicographic: by size, then larger parts first.
impl Ord for Partition {
    fn cmp(&self, o: &Self) -> Ordering {
        self.size().cmp(&o.size()).then_with(|| o.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A box `(row, col)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// `mu_i >= nu_i >= mu_{i+1}` for all i.
pub fn is_horizontal_strip(mu: &Partition, nu: &Partition) -> bool {
    nu.len() <= mu.len() && (0..mu.len()).all(|i| mu.part(i) >= nu.part(i) && nu.part(i) >= mu.part(i + 1))
}

/// All `nu` with `mu/nu` a horizontal strip, lexicographically decreasing.
pub fn horizontal_substrips(mu: &Partition) -> Vec<Partition> {
    fn rec(mu: &Partition, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == mu.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for v in (mu.part(i + 1)..=mu.part(i)).rev() {
            cur.push(v);
            rec(mu, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, 0, &mut Vec::new(), &mut out);
    out
}

/// Boxes of the skew diagram `mu/nu` (requires `nu ⊆ mu`).
pub fn skew_cells(mu: &Partition, nu: &Partition) -> Vec<Cell> {
    mu.cells().filter(|c| !nu.has_cell(*c)).collect()
}

/// An interlacing chain `mu(0) > mu(1) > ... > mu(L) = ()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripChain(pub Vec<Partition>);

impl StripChain {
    /// Consecutive pairs `(mu(k-1), mu(k))` for `k = 1..=L`.
    pub fn strips(&self) -> impl Iterator<Item = (&Partition, &Partition)> {
        self.0.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// Value of a cell of `mu(0)` in the reverse tableau.
    pub fn value(&self, c: Cell) -> Option<usize> {
        (1..self.0.len()).find(|&k| self.0[k - 1].has_cell(c) && !self.0[k].has_cell(c))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(Partition::to_json).collect())
    }
}

/// Reverse semistandard tableaux of shape `mu` with entries `1..=n`, as
/// chains of length `n`. Intermediate partitions are chosen in
/// lexicographically decreasing order at each step.
pub fn enumerate_rtab(mu: &Partition, n: usize) -> Vec<StripChain> {
    fn rec(mu: &Partition, n: usize, prefix: &mut Vec<Partition>, out: &mut Vec<StripChain>) {
        if n == 0 {
            if mu.is_empty() {
                let mut c = prefix.clone();
                c.push(mu.clone());
                out.push(StripChain(c));
            }
            return;
        }
        prefix.push(mu.clone());
        for nu in horizontal_substrips(mu) {
            if nu.len() < n {
                rec(&nu, n - 1, prefix, out);
            }
        }
        prefix.pop();
    }
    let mut out = Vec::new();
    if mu.len() <= n {
        rec(mu, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions of `n` with at most `max_len` parts, larger parts first.
pub fn partitions_of(n: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rem: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions with `|mu| <= n` and `l(mu) <= max_len`, graded
/// reverse-lexicographic.
pub fn partitions_up_to(n: u32, max_len: usize) -> Vec<Partition> {
    (0..=n).flat_map(|k| partitions_of(k, max_len)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn strip_predicate_examples() {
        assert!(is_horizontal_strip(&p(&[2, 1]), &p(&[1])));
        assert!(!is_horizontal_strip(&p(&[2, 2]), &p(&[1])));
        assert!(is_horizontal_strip(&p(&[3, 1]), &p(&[3, 1])));
    }

    #[test]
    fn rtab_examples() {
        let c = enumerate_rtab(&p(&[1]), 2);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].0, vec![p(&[1]), p(&[1]), p(&[])]);
        let c = enumerate_rtab(&p(&[2, 1]), 2);
        let mids: Vec<_> = c.iter().map(|x| x.0[1].clone()).collect();
        assert_eq!(mids, vec![p(&[2]), p(&[1])]);
        assert!(enumerate_rtab(&p(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn partitions_up_to_examples() {
        assert_eq!(partitions_up_to(0, 3), vec![p(&[])]);
        assert_eq!(partitions_up_to(2, 2), vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_up_to(4, 1), vec![p(&[]), p(&[1]), p(&[2]), p(&[3]), p(&[4])]);
    }

    #[test]
    fn arm_leg_and_conjugate() {
        let l = p(&[3, 1]);
        assert_eq!(l.conjugate(), p(&[2, 1, 1]));
        assert_eq!(l.arm(Cell::new(1, 1)), 2);
        assert_eq!(l.leg(Cell::new(1, 1)), 1);
    }

    #[test]
    fn chain_values_decrease_along_rows() {
        for c in enumerate_rtab(&p(&[3, 2]), 3) {
            let v = |i, j| c.value(Cell::new(i, j)).unwrap();
            assert!(v(1, 1) >= v(1, 2) && v(1, 2) >= v(1, 3));
            assert!(v(1, 1) > v(2, 1) && v(1, 2) > v(2, 2));
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Partition::parse("3,1").unwrap(), p(&[3, 1]));
        assert_eq!(Partition::parse("[2 2]").unwrap(), p(&[2, 2]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("a").is_err());
    }
}
