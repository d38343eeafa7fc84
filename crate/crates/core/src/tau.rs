//! Schur functions, the Toeplitz-minor identity, tau-functions of
//! coefficient matrices and their initial values, and the stationary-KdV
//! residual.
//!
//! The tau-function of an `n x m` matrix at row depth `i` pairs each top
//! `i x i` minor `Δ_{[i],I}` with the Schur function of the partition
//! `nu(I)` read off the cell. Its value at `t = (x, 0, 0, ..)` is the
//! column-reversed Wronskian component up to the sign
//! `eps_i = (-1)^{i(i-1)/2}`.

use crate::cells::{CellIndex, Partition};
use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::multipoly::{h_from_t, mpoly_mat_det, MPoly};
use crate::poly::Poly;
use crate::ratfn::RationalFn;
use crate::scalar::{int, Scalar};

/// A tau-function: a polynomial in the times `t_1 .. t_K` together with the
/// shape of the matrix it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauFunction<T> {
    value: MPoly<T>,
    rows: usize,
    dims: (usize, usize),
    truncation: usize,
}

impl<T: Scalar> TauFunction<T> {
    pub fn value(&self) -> &MPoly<T> {
        &self.value
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// The value at `t = (x, 0, 0, ..)`.
    pub fn initial_value(&self) -> Poly<T> {
        self.value.initial_value()
    }
}

/// Largest `h`-index appearing in the Jacobi-Trudi determinant of `nu`.
fn h_index_bound(nu: &Partition) -> usize {
    if nu.is_empty() {
        0
    } else {
        nu.part(0) + nu.len() - 1
    }
}

/// The Schur function as a polynomial in the symbols `h_1, h_2, ..` via
/// Jacobi-Trudi: `det(h_{nu_i - i + j})` with `h_0 = 1` and `h_{<0} = 0`.
/// Variable `k` (0-based) of the result is `h_{k+1}`.
pub fn schur_h<T: Scalar>(nu: &Partition) -> MPoly<T> {
    let r = nu.len();
    let nvars = h_index_bound(nu);
    if r == 0 {
        return MPoly::one(nvars);
    }
    let entry = |idx: i64| -> MPoly<T> {
        if idx < 0 {
            MPoly::zero(nvars)
        } else if idx == 0 {
            MPoly::one(nvars)
        } else {
            MPoly::variable(nvars, idx as usize - 1)
        }
    };
    let m: Vec<Vec<MPoly<T>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| entry(nu.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    mpoly_mat_det(&m, nvars)
}

/// The Schur function in the times `t_1 .. t_K`: the Jacobi-Trudi
/// determinant with `h_j` replaced by its expression in the times.
pub fn schur_t<T: Scalar>(nu: &Partition, k: usize) -> Result<MPoly<T>> {
    let need = h_index_bound(nu);
    if k < need {
        return Err(Error::Truncation(format!(
            "schur function of {nu} needs h_1..h_{need}, truncation order {k} is too small"
        )));
    }
    let r = nu.len();
    if r == 0 {
        return Ok(MPoly::one(k));
    }
    let hs = h_from_t::<T>(k);
    let entry = |idx: i64| -> MPoly<T> {
        if idx < 0 {
            MPoly::zero(k)
        } else if idx == 0 {
            MPoly::one(k)
        } else {
            hs[idx as usize - 1].clone()
        }
    };
    let m: Vec<Vec<MPoly<T>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| entry(nu.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    Ok(mpoly_mat_det(&m, k))
}

/// The initial Schur value `s_nu(x, 0, ..) = h(nu) x^{|nu|}`, computed
/// directly from the hook factor.
pub fn schur_initial<T: Scalar>(nu: &Partition) -> Poly<T> {
    Poly::monomial(nu.hook_factor(), nu.size())
}

/// Claim that `s_{nu(I)}(h)` is the minor of the unitriangular Toeplitz
/// matrix `T[p][q] = h_{q-p}` on the top `|I|` rows and the transposed
/// columns `I^t`, as polynomials in the `h` symbols.
pub fn toeplitz_schur_check(index: &CellIndex) -> bool {
    let n = index.boxes();
    let i = index.size();
    let nvars = n - 1;
    let entry = |p: usize, q: usize| -> MPoly<crate::Rat> {
        match q as i64 - p as i64 {
            d if d < 0 => MPoly::zero(nvars),
            0 => MPoly::one(nvars),
            d => MPoly::variable(nvars, d as usize - 1),
        }
    };
    let cols = index.transpose();
    let m: Vec<Vec<MPoly<crate::Rat>>> = (1..=i)
        .map(|p| {
            cols.elements()
                .iter()
                .map(|&q| entry(p, q))
                .collect()
        })
        .collect();
    let minor = mpoly_mat_det(&m, nvars);
    minor == schur_h::<crate::Rat>(&index.partition()).with_nvars(nvars)
}

/// The tau-function of an `n x m` matrix at row depth `i`, truncated at
/// `K >= m - 1` times (the default `m - 1` is always exact):
/// `tau = sum_{I} Δ_{[i],I}(M) s_{nu(I)}(t_1 .. t_K)`.
pub fn tau<T: Scalar>(m: &Mat<T>, i: usize, k: usize) -> Result<TauFunction<T>> {
    if i == 0 || i > m.rows() {
        return Err(Error::Dimension(format!(
            "tau row depth {i} for a {}-row matrix",
            m.rows()
        )));
    }
    if k + 1 < m.cols() {
        return Err(Error::Truncation(format!(
            "tau of a {}-column matrix needs truncation order >= {}, got {k}",
            m.cols(),
            m.cols() - 1
        )));
    }
    let top: Vec<usize> = (1..=i).collect();
    let mut value = MPoly::zero(k);
    for index in CellIndex::all(m.cols(), i) {
        let delta = m.minor(&top, index.elements())?;
        if delta.is_zero() {
            continue;
        }
        let s = schur_t::<T>(&index.partition(), k)?;
        value = &value + &s.scale(&delta);
    }
    Ok(TauFunction {
        value,
        rows: i,
        dims: (m.rows(), m.cols()),
        truncation: k,
    })
}

/// The sign `eps_i = (-1)^{i(i-1)/2}` relating tau initial values to
/// column-reversed Wronskian components.
pub fn reversal_sign<T: Scalar>(i: usize) -> T {
    if (i * (i - 1) / 2).is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// The initial value `tau(M, i)(x, 0, ..) = sum_I Δ_{[i],I}(M) h(nu(I))
/// x^{|nu(I)|}`, computed without multivariate machinery. Satisfies
/// `tau_initial(M, i) = eps_i * y_i(M J)` with `J` the column reversal.
pub fn tau_initial<T: Scalar>(m: &Mat<T>, i: usize) -> Result<Poly<T>> {
    if i == 0 || i > m.rows() {
        return Err(Error::Dimension(format!(
            "tau row depth {i} for a {}-row matrix",
            m.rows()
        )));
    }
    let top: Vec<usize> = (1..=i).collect();
    let mut acc = Poly::zero();
    for index in CellIndex::all(m.cols(), i) {
        let delta = m.minor(&top, index.elements())?;
        if delta.is_zero() {
            continue;
        }
        let nu = index.partition();
        let hook: T = nu.hook_factor();
        acc = &acc + &Poly::monomial(delta * hook, nu.size());
    }
    Ok(acc)
}

/// Whether the tau-function built from the coefficient matrix of `fs`
/// reproduces the Wronskian `W(fs)` under the column-reversal/sign
/// normalization: `tau_initial(M J, m) = eps_m W(fs)` for the `m x (d+1)`
/// factorial-coefficient matrix `M` of the tuple.
pub fn wronskian_tau_check<T: Scalar>(fs: &[Poly<T>]) -> Result<bool> {
    if fs.is_empty() {
        return Err(Error::Arity("empty function tuple".into()));
    }
    let m = fs.len();
    let d = fs
        .iter()
        .filter_map(|f| f.degree())
        .max()
        .unwrap_or(0)
        .max(m - 1);
    let rows: Vec<Vec<T>> = fs
        .iter()
        .map(|f| (0..=d).map(|q| f.factorial_coeff(q)).collect())
        .collect();
    let coeff = Mat::from_rows(rows)?;
    let lhs = tau_initial(&coeff.col_reversed(), m)?;
    let rhs = crate::wronsky::wronskian(fs)?.scale(&reversal_sign::<T>(m));
    Ok(lhs == rhs)
}

/// The stationary-KdV residual of an initial tau polynomial: with
/// `u = 2 (tau'' tau - tau'^2) / tau^2`, returns `6 u u_x + u_xxx` as a
/// reduced rational function. Zero for every tau of degree at most one.
pub fn kdv_residual<T: Scalar>(tau0: &Poly<T>) -> Result<RationalFn<T>> {
    if tau0.is_zero() {
        return Err(Error::DivisionByZero("kdv residual of the zero tau".into()));
    }
    let d1 = tau0.derivative();
    let d2 = d1.derivative();
    let num = (&(&d2 * tau0) - &(&d1 * &d1)).scale(&int::<T>(2));
    let u = RationalFn::new(num, tau0 * tau0)?;
    let ux = u.derivative();
    let uxxx = ux.derivative().derivative();
    Ok(&(&u * &ux).scale(&int::<T>(6)) + &uxxx)
}
