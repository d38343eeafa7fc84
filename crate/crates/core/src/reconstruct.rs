//! Inversion of the Wronskian map on the unipotent upper-triangular group.
//!
//! The lexicographic coordinates of an image take the first `n-1`
//! factorial-basis coefficients of `y_1` (indices 1..n-1), then the first
//! `n-2` of `y_2`, and so on. In these coordinates the map from matrix
//! entries (read row by row) is unitriangular, so a forward sweep recovers
//! the matrix one entry at a time.

use crate::cells::path_count_table;
use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::scalar::Scalar;
use crate::wronsky::{wronsky_map, WronskyImage};
use num_bigint::BigInt;

/// The `n(n-1)/2` lexicographic coordinates of a Wronskian image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexCoordinates<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> LexCoordinates<T> {
    pub fn new(n: usize, values: Vec<T>) -> Result<Self> {
        if values.len() != n * (n - 1) / 2 {
            return Err(Error::Dimension(format!(
                "lexicographic coordinates for n={n} need {} values, got {}",
                n * (n - 1) / 2,
                values.len()
            )));
        }
        Ok(LexCoordinates { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

/// Extract the lexicographic coordinates of the image of an `n x n`
/// unitriangular matrix. Each component must have constant factorial
/// coefficient 1 (the leading principal minors of a unitriangular matrix),
/// otherwise the input is not such an image.
pub fn lex_coordinates<T: Scalar>(img: &WronskyImage<T>, n: usize) -> Result<LexCoordinates<T>> {
    if img.len() + 1 != n {
        return Err(Error::Dimension(format!(
            "image with {} components does not come from an {n} x {n} matrix",
            img.len()
        )));
    }
    let mut values = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        let y = img.component(i);
        if !y.coeff(0).is_one() {
            return Err(Error::Normalization(format!(
                "component y_{i} has constant term {}, expected 1",
                y.coeff(0)
            )));
        }
        for q in 1..=n - i {
            values.push(y.factorial_coeff(q));
        }
    }
    LexCoordinates::new(n, values)
}

/// Recover the unique unitriangular matrix with the given lexicographic
/// coordinates. The sweep fills entries in lexicographic order (row 1 left
/// to right, then row 2, ..): with the current entry and all later entries
/// zero, the matching coordinate differs from the target exactly by the
/// entry's value. Each step evaluates a single minor-sum — the factorial
/// coefficient `a_q(y_r) = sum_{l(I)=q} m(I) Δ_{[r],I}` — and the final
/// matrix is verified against its coordinates through the Wronskian
/// determinants themselves.
pub fn reconstruct_unitriangular<T: Scalar>(
    target: &LexCoordinates<T>,
    n: usize,
) -> Result<Mat<T>> {
    if target.n() != n {
        return Err(Error::Dimension(format!(
            "coordinates are for n={}, requested n={n}",
            target.n()
        )));
    }
    let mut g = Mat::<T>::identity(n);
    let mut k = 0usize;
    for row in 1..n {
        let counts = path_count_table(n, row);
        let top: Vec<usize> = (1..=row).collect();
        for col in row + 1..=n {
            // coordinate k is the factorial coefficient of x^{col-row} in y_row
            let q = col - row;
            let mut partial = T::zero();
            for (index, m_count) in &counts {
                if index.length() != q {
                    continue;
                }
                let delta = g.minor(&top, index.elements())?;
                partial = partial + T::from(BigInt::from(m_count.clone())) * delta;
            }
            let entry = target.values()[k].clone() - partial;
            g.set(row - 1, col - 1, entry);
            k += 1;
        }
    }
    let recovered = lex_coordinates(&wronsky_map(&g)?, n)?;
    if &recovered != target {
        return Err(Error::Internal(
            "reconstructed matrix does not reproduce its coordinates".into(),
        ));
    }
    Ok(g)
}
