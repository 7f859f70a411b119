//! Exact matrix ranks for boundary matrices.
//!
//! Both fields start with sparse elimination on unit pivots, which is exact
//! over ℤ and therefore over ℚ. Whatever is left once no unit pivot
//! remains is finished densely: over ℚ by fraction-free (Bareiss)
//! elimination in `i128` that restarts with arbitrary precision integers
//! on overflow, over GF(2) by XOR on rows packed into words.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// A sparse integer matrix given by its columns' nonzero entries.
#[derive(Clone, Debug, Default)]
pub struct SparseColumns {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i8)>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Field {
    Rationals,
    Gf2,
}

type SparseRow = Vec<(u32, i64)>;

/// `a - f * b` on sorted sparse rows; `None` on overflow.
fn axpy(a: &SparseRow, f: i64, b: &SparseRow, field: Field) -> Option<SparseRow> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (col, val) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            i += 1;
            (a[i - 1].0, a[i - 1].1)
        } else if i == a.len() || b[j].0 < a[i].0 {
            j += 1;
            (b[j - 1].0, f.checked_mul(b[j - 1].1)?.checked_neg()?)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, a[i - 1].1.checked_sub(f.checked_mul(b[j - 1].1)?)?)
        };
        let val = if field == Field::Gf2 { val & 1 } else { val };
        if val != 0 {
            out.push((col, val));
        }
    }
    Some(out)
}

fn entry(row: &SparseRow, c: u32) -> Option<i64> {
    row.binary_search_by_key(&c, |e| e.0).ok().map(|k| row[k].1)
}

/// Unit-pivot elimination, column by column. Returns the number of pivots
/// and the surviving rows, which vanish outside the deferred columns.
fn sparse_reduce(m: &SparseColumns, field: Field) -> Option<(usize, Vec<SparseRow>, Vec<u32>)> {
    let mut rows: Vec<SparseRow> = vec![Vec::new(); m.rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(i, v) in col {
            let v = if field == Field::Gf2 { (v & 1) as i64 } else { v as i64 };
            if v != 0 {
                rows[i].push((j as u32, v));
            }
        }
    }
    let mut col_rows: Vec<Vec<u32>> = m.cols.iter().map(|c| c.iter().map(|&(i, _)| i as u32).collect()).collect();
    let mut alive = vec![true; m.rows];
    let mut rank = 0;
    let mut deferred = Vec::new();
    for c in 0..m.cols.len() as u32 {
        let mut cands = std::mem::take(&mut col_rows[c as usize]);
        cands.sort_unstable();
        cands.dedup();
        cands.retain(|&r| alive[r as usize] && entry(&rows[r as usize], c).is_some());
        if cands.is_empty() {
            continue;
        }
        let pivot = cands
            .iter()
            .copied()
            .filter(|&r| entry(&rows[r as usize], c).is_some_and(|v| v.abs() == 1))
            .min_by_key(|&r| rows[r as usize].len());
        let Some(p) = pivot else {
            deferred.push(c);
            continue;
        };
        let prow = std::mem::take(&mut rows[p as usize]);
        let pval = entry(&prow, c).expect("pivot entry");
        alive[p as usize] = false;
        for &r in &cands {
            if r == p {
                continue;
            }
            // pval is ±1, its own inverse
            let f = entry(&rows[r as usize], c).expect("candidate entry") * pval;
            let new = axpy(&rows[r as usize], f, &prow, field)?;
            for &(col, _) in &new {
                if col > c {
                    col_rows[col as usize].push(r);
                }
            }
            rows[r as usize] = new;
        }
        rank += 1;
    }
    let rest = rows.into_iter().zip(alive).filter(|(r, a)| *a && !r.is_empty()).map(|(r, _)| r).collect();
    Some((rank, rest, deferred))
}

fn sparse_then_dense(m: &SparseColumns, field: Field) -> Option<usize> {
    let (rank, rest, deferred) = sparse_reduce(m, field)?;
    if rest.is_empty() || deferred.is_empty() {
        return Some(rank);
    }
    let index: HashMap<u32, usize> = deferred.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let dense: Vec<Vec<i128>> = rest
        .iter()
        .map(|r| {
            let mut d = vec![0i128; deferred.len()];
            for &(c, v) in r {
                d[index[&c]] = v as i128;
            }
            d
        })
        .collect();
    Some(
        rank + match field {
            Field::Rationals => dense_rank_rational(dense),
            Field::Gf2 => dense_rank_gf2(&dense),
        },
    )
}

/// Rank over ℚ.
pub fn rank_rational(m: &SparseColumns) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    sparse_then_dense(m, Field::Rationals).unwrap_or_else(|| dense_rank_rational(to_dense_rows(m)))
}

/// Rank over ℚ by dense elimination alone.
pub fn rank_rational_dense(m: &SparseColumns) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    dense_rank_rational(to_dense_rows(m))
}

fn dense_rank_rational(dense: Vec<Vec<i128>>) -> usize {
    match bareiss_i128(dense.clone()) {
        Some(r) => r,
        None => bareiss_big(dense.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()),
    }
}

fn to_dense_rows(m: &SparseColumns) -> Vec<Vec<i128>> {
    let mut rows = vec![vec![0i128; m.cols.len()]; m.rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(i, v) in col {
            rows[i][j] = v as i128;
        }
    }
    rows
}

/// Bareiss elimination; `None` on overflow.
fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = a.len();
    let ncols = a[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let p = a[rank][col];
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let f = row[col];
            for (x, &y) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                *x = p.checked_mul(*x)?.checked_sub(f.checked_mul(y)?)? / prev;
            }
            row[col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let p = a[rank][col].clone();
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let f = row[col].clone();
            for (x, y) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                *x = (&p * &*x - &f * y) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Rank over GF(2); entries are taken modulo 2.
pub fn rank_gf2(m: &SparseColumns) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    sparse_then_dense(m, Field::Gf2).expect("entries stay in {0, 1}")
}

/// Rank over GF(2) by packed dense elimination alone.
pub fn rank_gf2_dense(m: &SparseColumns) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    dense_rank_gf2(&to_dense_rows(m))
}

fn dense_rank_gf2(dense: &[Vec<i128>]) -> usize {
    let ncols = dense.first().map_or(0, Vec::len);
    let words = ncols.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; dense.len()];
    for (i, r) in dense.iter().enumerate() {
        for (j, &v) in r.iter().enumerate() {
            if v & 1 != 0 {
                rows[i][j / 64] ^= 1 << (j % 64);
            }
        }
    }
    let mut rank = 0;
    for col in 0..ncols {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
