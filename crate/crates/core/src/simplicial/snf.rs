//! Smith normal form over arbitrary-precision integers.
//!
//! Both the sparse and dense routines pivot greedily on an entry of least
//! absolute value and reduce the pivot row and column with Euclidean
//! remainders, so entries never grow past what the input forces. The
//! collected pivots are normalized into a divisibility chain at the end.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::SparseMatrix;

/// Below this many columns the dense routine is used.
pub const DENSE_COLUMN_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_rank`.
    pub diagonal: Vec<BigUint>,
}

impl SmithForm {
    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &SparseMatrix) -> SmithForm {
    if m.cols() < DENSE_COLUMN_LIMIT {
        smith_dense(m)
    } else {
        smith_sparse(m)
    }
}

/// Turns arbitrary nonzero pivots into the invariant-factor chain.
fn normalize(pivots: Vec<BigUint>) -> SmithForm {
    let rank = pivots.len();
    let mut units = 0;
    let mut rest = Vec::new();
    for p in pivots {
        if p.is_one() {
            units += 1;
        } else {
            rest.push(p);
        }
    }
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            let l = rest[i].lcm(&rest[j]);
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut diagonal = vec![BigUint::one(); units];
    diagonal.extend(rest);
    diagonal.sort();
    SmithForm { rank, diagonal }
}

struct SparseWork {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl SparseWork {
    fn get(&self, r: usize, c: usize) -> Option<&BigInt> {
        self.rows[r].get(&c)
    }

    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    /// `row[target] -= q * row[source]`.
    fn row_axpy(&mut self, target: usize, q: &BigInt, source: usize) {
        let entries: Vec<(usize, BigInt)> = self.rows[source].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in entries {
            let current = self.get(target, c).cloned().unwrap_or_default();
            self.set(target, c, current - q * v);
        }
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        let touched: BTreeSet<usize> = self.cols[a].union(&self.cols[b]).copied().collect();
        for r in touched {
            let va = self.rows[r].remove(&a);
            let vb = self.rows[r].remove(&b);
            if let Some(v) = vb {
                self.rows[r].insert(a, v);
            }
            if let Some(v) = va {
                self.rows[r].insert(b, v);
            }
        }
        self.cols.swap(a, b);
    }

    fn drop_row(&mut self, r: usize) {
        for (c, _) in std::mem::take(&mut self.rows[r]) {
            self.cols[c].remove(&r);
        }
    }

    /// Row of least absolute value in column `c`, preferring short rows.
    fn pivot_row(&self, c: usize) -> Option<usize> {
        self.cols[c].iter().copied().min_by(|&a, &b| {
            let va = self.rows[a][&c].abs();
            let vb = self.rows[b][&c].abs();
            va.cmp(&vb).then(self.rows[a].len().cmp(&self.rows[b].len())).then(a.cmp(&b))
        })
    }
}

/// Column-by-column elimination on sparse rows with a column index.
pub fn smith_sparse(m: &SparseMatrix) -> SmithForm {
    let mut w = SparseWork { rows: vec![BTreeMap::new(); m.rows()], cols: vec![BTreeSet::new(); m.cols()] };
    for c in 0..m.cols() {
        for &(r, v) in m.column(c) {
            w.set(r, c, BigInt::from(v));
        }
    }
    let mut pivots = Vec::new();
    for c in 0..m.cols() {
        while let Some(pr) = w.pivot_row(c) {
            let d = w.rows[pr][&c].clone();
            let others: Vec<usize> = w.cols[c].iter().copied().filter(|&r| r != pr).collect();
            let mut dirty = false;
            for r in others {
                let q = w.rows[r][&c].clone() / &d;
                if !q.is_zero() {
                    w.row_axpy(r, &q, pr);
                }
                dirty |= w.get(r, c).is_some();
            }
            if dirty {
                continue;
            }
            // Column c is now zero off the pivot, so column operations on
            // row pr touch nothing else.
            let blocking = w.rows[pr].iter().find(|&(&j, v)| j != c && !(v % &d).is_zero()).map(|(&j, v)| (j, v % &d));
            match blocking {
                Some((j, rem)) => {
                    w.set(pr, j, rem);
                    w.swap_columns(c, j);
                }
                None => {
                    pivots.push(d.magnitude().clone());
                    w.drop_row(pr);
                    break;
                }
            }
        }
    }
    normalize(pivots)
}

/// Textbook elimination on a dense copy.
pub fn smith_dense(m: &SparseMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = m.to_dense().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let mut pivots = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_entry(&a, t, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut reduced = true;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = &a[r][t] / &a[t][t];
                let (upper, lower) = a.split_at_mut(r);
                for (x, p) in lower[0][t..cols].iter_mut().zip(&upper[t][t..cols]) {
                    *x -= &q * p;
                }
                reduced &= a[r][t].is_zero();
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = &a[t][c] / &a[t][t];
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[c] -= delta;
                }
                reduced &= a[t][c].is_zero();
            }
            if reduced {
                break;
            }
            // Bring the smallest remaining entry of row t or column t to the corner.
            let best_col = (t..cols).filter(|&c| !a[t][c].is_zero()).min_by_key(|&c| a[t][c].abs());
            let best_row = (t..rows).filter(|&r| !a[r][t].is_zero()).min_by_key(|&r| a[r][t].abs());
            match (best_row, best_col) {
                (Some(r), Some(c)) if a[r][t].abs() <= a[t][c].abs() => a.swap(t, r),
                (_, Some(c)) => {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                }
                (Some(r), None) => a.swap(t, r),
                (None, None) => unreachable!("corner entry is nonzero"),
            }
        }
        pivots.push(a[t][t].magnitude().clone());
        t += 1;
    }
    normalize(pivots)
}

fn min_entry(a: &[Vec<BigInt>], r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (r, row) in a.iter().enumerate().skip(r0) {
        for (c, v) in row.iter().enumerate().skip(c0) {
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                let unit = abs.is_one();
                best = Some(((r, c), abs));
                if unit {
                    return best.map(|(p, _)| p);
                }
            }
        }
    }
    best.map(|(p, _)| p)
}
