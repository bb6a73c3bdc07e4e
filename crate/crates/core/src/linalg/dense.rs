//! Dense big-integer kernels used on the residue of sparse elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Compacts sparse rows to a dense matrix over the columns they touch.
fn densify(rows: &[Vec<(u32, BigInt)>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut used = vec![usize::MAX; cols];
    let mut width = 0;
    for row in rows {
        for (c, _) in row {
            if used[*c as usize] == usize::MAX {
                used[*c as usize] = width;
                width += 1;
            }
        }
    }
    rows.iter()
        .map(|row| {
            let mut d = vec![BigInt::zero(); width];
            for (c, v) in row {
                d[used[*c as usize]] = v.clone();
            }
            d
        })
        .collect()
}

pub(crate) fn smith_rows(rows: &[Vec<(u32, BigInt)>], cols: usize) -> Vec<BigInt> {
    if rows.is_empty() {
        return Vec::new();
    }
    dense_smith(densify(rows, cols))
}

pub(crate) fn bareiss_rank_rows(rows: &[Vec<(u32, BigInt)>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    bareiss_rank(densify(rows, cols))
}

/// Position of the nonzero entry of least absolute value in the
/// submatrix `[t.., t..]`; ties go to the lowest row, then column.
fn least_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Nonzero invariant factors of a dense matrix, in divisibility order.
pub fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = least_entry(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            // Reduce column t and row t modulo the pivot; any nonzero
            // remainder is smaller than the pivot and becomes the new one.
            let mut smaller: Option<(usize, usize)> = None;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                    *x -= &q * y;
                }
                if !a[i][t].is_zero() && smaller.is_none() {
                    smaller = Some((i, t));
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                if !a[t][j].is_zero() && smaller.is_none() {
                    smaller = Some((t, j));
                }
            }
            if let Some((i, j)) = smaller {
                if i != t {
                    a.swap(t, i);
                }
                if j != t {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, y) in top[t][t..].iter_mut().zip(&rest[0][t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

/// Rank over ℚ by fraction-free Gaussian elimination.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        for i in rank + 1..m {
            let (top, rest) = a.split_at_mut(i);
            let piv = &top[rank];
            let row = &mut rest[0];
            for j in col + 1..n {
                let v = (&piv[col] * &row[j] - &row[col] * &piv[j]) / &prev;
                row[j] = v;
            }
            row[col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}
