/// Integer matrix stored as sorted column lists of nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, columns: vec![Vec::new(); cols] }
    }

    /// Builds from per-column entries; duplicates are summed and zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut col| {
                col.sort_unstable_by_key(|&(r, _)| r);
                let mut merged: Vec<(usize, i64)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    assert!(r < rows, "row index {r} out of range {rows}");
                    match merged.last_mut() {
                        Some((lr, lv)) if *lr == r => *lv += v,
                        _ => merged.push((r, v)),
                    }
                }
                merged.retain(|&(_, v)| v != 0);
                merged
            })
            .collect();
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(dense: &[Vec<i64>], cols: usize) -> Self {
        let mut columns = vec![Vec::new(); cols];
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    columns[c].push((r, v));
                }
            }
        }
        SparseMatrix { rows: dense.len(), columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), rhs.rows, "dimension mismatch");
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
                for &(k, v) in col {
                    for &(r, w) in &self.columns[k] {
                        *acc.entry(r).or_insert(0) += v * w;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}
