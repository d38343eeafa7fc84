//! Dense matrices over an exact scalar, with fraction-free determinants.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;

/// Row-major dense matrix. Entry access is 0-based; the index *lists* taken
/// by [`Mat::minor`] and [`Mat::submatrix`] are 1-based, matching the way
/// minors Δ_{I,J} are written everywhere else in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Mat {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Mat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Mat {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Mat::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        }))
    }

    /// Extract the submatrix on the given 1-based row and column lists,
    /// preserving the order of the lists.
    pub fn submatrix(&self, row_list: &[usize], col_list: &[usize]) -> Result<Self> {
        for &r in row_list {
            if r == 0 || r > self.rows {
                return Err(Error::Dimension(format!("row index {r} out of range")));
            }
        }
        for &c in col_list {
            if c == 0 || c > self.cols {
                return Err(Error::Dimension(format!("column index {c} out of range")));
            }
        }
        let entries = row_list
            .iter()
            .flat_map(|&r| col_list.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r - 1, c - 1).clone())
            .collect();
        Mat::new(row_list.len(), col_list.len(), entries)
    }

    /// Minor Δ_{row_list, col_list}: determinant of the selected square
    /// submatrix. Both lists are 1-based and must be strictly increasing.
    pub fn minor(&self, row_list: &[usize], col_list: &[usize]) -> Result<T> {
        if row_list.len() != col_list.len() {
            return Err(Error::Dimension(format!(
                "minor needs equally many rows and columns, got {} and {}",
                row_list.len(),
                col_list.len()
            )));
        }
        if !strictly_increasing(row_list) || !strictly_increasing(col_list) {
            return Err(Error::Dimension(
                "minor index lists must be strictly increasing".into(),
            ));
        }
        self.submatrix(row_list, col_list)?.det()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination: each step
    /// cross-multiplies against the pivot and divides by the previous pivot,
    /// so intermediate values stay integral when the entries are integral.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut m: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                    m[i][j] = num / prev.clone();
                }
                m[i][k] = T::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }

    /// The matrix with its column order reversed (right multiplication by
    /// the antidiagonal permutation matrix).
    pub fn col_reversed(&self) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, self.cols - 1 - j).clone()
        })
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }
}

fn strictly_increasing(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

impl<T: Scalar> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod test_oracle {
    use super::*;

    /// Cofactor-expansion determinant, the independent oracle for sizes <= 6.
    pub fn det_cofactor<T: Scalar>(m: &Mat<T>) -> T {
        assert_eq!(m.rows(), m.cols());
        fn go<T: Scalar>(m: &Mat<T>, rows: &[usize], cols: &[usize]) -> T {
            if rows.is_empty() {
                return T::one();
            }
            let r = rows[0];
            let mut acc = T::zero();
            for (k, &c) in cols.iter().enumerate() {
                let e = m.get(r, c).clone();
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let sub = go(m, &rows[1..], &rest);
                let term = e * sub;
                acc = if k % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
        let idx: Vec<usize> = (0..m.rows()).collect();
        go(m, &idx, &idx)
    }
}
