use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::snf::{smith_normal_form, SmithForm};
use super::{HomologyError, SparseMatrix};

/// An augmented chain complex `0 <- Z <- C_0 <- C_1 <- ... <- C_top <- 0`.
///
/// `boundaries[0]` is the augmentation `C_0 -> Z`; `boundaries[i]` maps
/// `C_i -> C_{i-1}` for `i >= 1`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

/// Reduced integral homology, one entry of `betti` per degree from 0 to the
/// top dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub betti: Vec<usize>,
    /// `(degree, invariant factors > 1)` for degrees with torsion.
    pub torsion: Vec<(usize, Vec<u64>)>,
}

impl HomologyReport {
    pub fn is_trivial(&self) -> bool {
        self.betti.iter().all(|&b| b == 0) && self.torsion.is_empty()
    }

    /// Equal groups in every degree; degrees past either top dimension count
    /// as zero.
    pub fn same_groups(&self, other: &HomologyReport) -> bool {
        let trim = |b: &[usize]| b.len() - b.iter().rev().take_while(|&&x| x == 0).count();
        let (a, b) = (&self.betti[..trim(&self.betti)], &other.betti[..trim(&other.betti)]);
        a == b && self.torsion == other.torsion
    }

    /// Reduced Euler characteristic `sum (-1)^i betti_i`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.betti.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }
}

impl ChainComplex {
    /// Builds the augmented complex from chain ranks and the boundary maps
    /// `C_i -> C_{i-1}` for `i >= 1`; the augmentation sends every 0-cell to 1.
    pub fn augmented(ranks: Vec<usize>, higher: Vec<SparseMatrix>) -> Self {
        assert!(!ranks.is_empty(), "a chain complex needs a degree-zero group");
        assert_eq!(higher.len() + 1, ranks.len(), "one boundary map per positive degree");
        let n0 = ranks[0];
        let augmentation = SparseMatrix::from_columns(1, (0..n0).map(|_| vec![(0, 1)]).collect());
        let mut boundaries = vec![augmentation];
        boundaries.extend(higher);
        for (i, b) in boundaries.iter().enumerate() {
            assert_eq!(b.cols(), ranks[i], "boundary {i} has wrong source rank");
            assert_eq!(b.rows(), if i == 0 { 1 } else { ranks[i - 1] }, "boundary {i} has wrong target rank");
        }
        ChainComplex { ranks, boundaries }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `boundaries()[0]` is the augmentation.
    pub fn boundaries(&self) -> &[SparseMatrix] {
        &self.boundaries
    }

    pub fn is_chain_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    pub fn reduced_homology(&self) -> Result<HomologyReport, HomologyError> {
        debug_assert!(self.is_chain_complex(), "boundary of boundary is nonzero");
        let forms: Vec<SmithForm> = self.boundaries.iter().map(smith_normal_form).collect();
        let mut betti = Vec::with_capacity(self.ranks.len());
        let mut torsion = Vec::new();
        for (i, &dim) in self.ranks.iter().enumerate() {
            let out_rank = forms[i].rank;
            let in_form = forms.get(i + 1);
            let in_rank = in_form.map_or(0, |f| f.rank);
            betti.push(dim - out_rank - in_rank);
            if let Some(f) = in_form {
                let factors = f
                    .torsion()
                    .iter()
                    .map(|d| d.to_u64().ok_or(HomologyError::TorsionOverflow))
                    .collect::<Result<Vec<_>, _>>()?;
                if !factors.is_empty() {
                    torsion.push((i, factors));
                }
            }
        }
        Ok(HomologyReport { betti, torsion })
    }
}
