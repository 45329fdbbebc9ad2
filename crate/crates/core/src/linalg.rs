//! Exact Gaussian elimination over the rationals.
//!
//! Pivoting is deterministic: the leftmost column that still has a nonzero
//! entry among the unprocessed rows, using the first such row.

use crate::rational::Rational;

/// Reduced row echelon form of a dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelon {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One kernel vector per free column: 1 at the free column, 0 at the
    /// other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let free = (0..self.ncols).filter(|c| !self.pivots.contains(c));
        free.map(|f| {
            let mut v = vec![Rational::zero(); self.ncols];
            v[f] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
    }
}

pub fn rref(matrix: &[Vec<Rational>], ncols: usize) -> RowEchelon {
    let mut rows: Vec<Vec<Rational>> = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        let Some(found) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * p);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(pivots.len());
    RowEchelon { rows, pivots, ncols }
}

pub fn rank(matrix: &[Vec<Rational>], ncols: usize) -> usize {
    rref(matrix, ncols).rank()
}

/// Solves `A x = b`. Returns `None` when the system is inconsistent; free
/// variables are set to zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let augmented: Vec<Vec<Rational>> =
        a.iter().zip(b).map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect()).collect();
    let reduced = rref(&augmented, ncols + 1);
    if reduced.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}
