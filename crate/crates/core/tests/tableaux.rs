//! Reverse-tableau enumeration against a direct filling enumerator.

use qtsym::partitions::{enumerate_rtab, partitions_up_to, Partition};

/// Counts semistandard fillings (rows weakly increasing, columns strictly
/// increasing) cell by cell in row-major order.
fn count_ssyt(mu: &Partition, n: u32) -> usize {
    let cells: Vec<(usize, usize)> = mu.cells().map(|c| (c.row - 1, c.col - 1)).collect();
    let mut grid = vec![vec![0u32; mu.part(0) as usize]; mu.len()];
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, n: u32) -> usize {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[i][j] = v;
            total += rec(k + 1, cells, grid, n);
        }
        grid[i][j] = 0;
        total
    }
    rec(0, &cells, &mut grid, n)
}

#[test]
fn rtab_counts_match_filling_enumerator() {
    for n in 1..=4usize {
        for mu in partitions_up_to(6, 6) {
            let expected = if mu.len() > n { 0 } else { count_ssyt(&mu, n as u32) };
            assert_eq!(enumerate_rtab(&mu, n).len(), expected, "mu={mu:?} N={n}");
        }
    }
}

#[test]
fn chains_interlace_and_end_empty() {
    for mu in partitions_up_to(5, 3) {
        for c in enumerate_rtab(&mu, 3) {
            assert_eq!(c.0.len(), 4);
            assert!(c.0.last().unwrap().is_empty());
            for (a, b) in c.strips() {
                assert!(qtsym::partitions::is_horizontal_strip(a, b));
                assert!(a.contains(b));
            }
        }
    }
}
