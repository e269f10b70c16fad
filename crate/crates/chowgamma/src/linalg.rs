//! Exact linear algebra for boundary matrices: fraction-free (Bareiss)
//! rank over the integers and reduced-echelon kernel bases over the
//! rationals. Pivoting is deterministic (first nonzero in row-major
//! order), so results are reproducible bit for bit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse integer matrix in row-major order; each row holds sorted
/// `(column, value)` pairs.
#[derive(Debug, Clone)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    /// Add `value` to the entry at `(row, col)`.
    pub fn add(&mut self, row: usize, col: usize, value: i64) {
        debug_assert!(row < self.rows && col < self.cols);
        let r = &mut self.data[row];
        match r.binary_search_by_key(&col, |&(c, _)| c) {
            Ok(i) => {
                r[i].1 += value;
                if r[i].1.is_zero() {
                    r.remove(i);
                }
            }
            Err(i) => {
                if value != 0 {
                    r.insert(i, (col, BigInt::from(value)));
                }
            }
        }
    }

    pub fn row(&self, r: usize) -> &[(usize, BigInt)] {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, ref v) in row {
                dense[r][c] = v.clone();
            }
        }
        dense
    }

    /// Rank over the rationals, by fraction-free Gaussian elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut a = self.to_dense();
        let mut prev_pivot = BigInt::one();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            // first nonzero entry in row-major order
            let Some(found) = (pivot_row..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pivot_row, found);
            let pivot = a[pivot_row][col].clone();
            // Bareiss one-step update: every row below the pivot row is
            // rewritten, zero pivot-column entries included, so later
            // divisions by the previous pivot stay exact.
            for r in pivot_row + 1..self.rows {
                for c in col + 1..self.cols {
                    let num = &pivot * &a[r][c] - &a[r][col] * &a[pivot_row][c];
                    a[r][c] = num / &prev_pivot;
                }
                a[r][col] = BigInt::zero();
            }
            prev_pivot = pivot;
            pivot_row += 1;
        }
        pivot_row
    }

    /// Kernel of the matrix as a map from column space to row space,
    /// via rational reduced row echelon form. Basis vectors are in the
    /// standard free-column form: vector `j` has entry 1 at the
    /// `j`-th free column and 0 at every other free column.
    pub fn kernel_basis(&self) -> KernelBasis {
        let mut a: Vec<Vec<BigRational>> = self
            .to_dense()
            .into_iter()
            .map(|row| row.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pivot_row, found);
            let inv = a[pivot_row][col].recip();
            for c in col..self.cols {
                let v = &a[pivot_row][c] * &inv;
                a[pivot_row][c] = v;
            }
            for r in 0..self.rows {
                if r != pivot_row && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in col..self.cols {
                        let v = &a[r][c] - &factor * &a[pivot_row][c];
                        a[r][c] = v;
                    }
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivot_cols {
                v[c] = true;
            }
            v
        };
        let free_cols: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut vectors = Vec::with_capacity(free_cols.len());
        for &fc in &free_cols {
            let mut v = vec![BigRational::zero(); self.cols];
            v[fc] = BigRational::one();
            for (pr, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[pr][fc].clone();
            }
            vectors.push(v);
        }
        KernelBasis { free_cols, vectors }
    }
}

/// A kernel basis in free-column form.
#[derive(Debug, Clone)]
pub struct KernelBasis {
    /// Column indices where the basis restricts to the identity.
    pub free_cols: Vec<usize>,
    /// One vector per free column, each of length `cols`.
    pub vectors: Vec<Vec<BigRational>>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Trace of the linear map sending basis vector `j` to the vector
    /// with coordinates permuted by `perm` (coordinate `i` of the image
    /// is coordinate `perm_inv(i)` of the source). Returns the exact
    /// rational trace.
    pub fn permuted_trace(&self, perm_inv: &[usize]) -> BigRational {
        let mut trace = BigRational::zero();
        for (j, &fc) in self.free_cols.iter().enumerate() {
            // row fc of (P * K) is row perm_inv(fc) of K
            trace += &self.vectors[j][perm_inv[fc]];
        }
        trace
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseIntMatrix {
        let mut m = SparseIntMatrix::zero(rows, cols);
        for &(r, c, v) in entries {
            m.add(r, c, v);
        }
        m
    }

    #[test]
    fn rank_simple() {
        let m = from_rows(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]);
        assert_eq!(m.rank(), 1);
        let m = from_rows(2, 2, &[(0, 0, 1), (1, 1, 1)]);
        assert_eq!(m.rank(), 2);
        let m = SparseIntMatrix::zero(3, 4);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn rank_rectangular_with_cancellation() {
        // rows: [1 2 3], [4 5 6], [7 8 9] -> rank 2
        let m = from_rows(
            3,
            3,
            &[
                (0, 0, 1),
                (0, 1, 2),
                (0, 2, 3),
                (1, 0, 4),
                (1, 1, 5),
                (1, 2, 6),
                (2, 0, 7),
                (2, 1, 8),
                (2, 2, 9),
            ],
        );
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_of_augmentation() {
        // 1 x 3 all-ones: kernel dim 2
        let m = from_rows(1, 3, &[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 2);
        // identity action: trace = dimension
        let id: Vec<usize> = (0..3).collect();
        assert_eq!(k.permuted_trace(&id), BigRational::from_integer(2.into()));
        // transposition of coordinates 0,1: trace 0
        assert_eq!(
            k.permuted_trace(&[1, 0, 2]),
            BigRational::from_integer(0.into())
        );
        // 3-cycle 0->1->2->0: perm_inv = [2,0,1]: trace -1
        assert_eq!(
            k.permuted_trace(&[2, 0, 1]),
            BigRational::from_integer((-1).into())
        );
    }

    #[test]
    fn rank_plus_kernel_is_cols() {
        let m = from_rows(
            3,
            5,
            &[
                (0, 0, 2),
                (0, 3, -1),
                (1, 1, 1),
                (1, 3, 5),
                (2, 0, 4),
                (2, 3, -2),
            ],
        );
        assert_eq!(m.rank() + m.kernel_basis().dim(), 5);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rank_matches_rational_kernel(entries in proptest::collection::vec((0usize..4, 0usize..5, -3i64..=3), 0..12)) {
                let m = from_rows(4, 5, &entries);
                prop_assert_eq!(m.rank() + m.kernel_basis().dim(), 5);
            }
        }
    }
}
