//! Verifiers for the classical determinant identities: W5, Desnanot-Jacobi,
//! the Plücker relation, and the Wronskian mutation equation with its
//! normalized first-order solver.

use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::wronsky::{row_polys, wronskian};
use std::fmt;

/// Outcome of one identity check: both sides rendered, and whether their
/// difference is exactly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    pub context: String,
}

impl IdentityReport {
    fn compare<V: PartialEq + fmt::Display>(
        name: &str,
        lhs: V,
        rhs: V,
        context: String,
    ) -> IdentityReport {
        IdentityReport {
            name: name.to_string(),
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            context,
        }
    }

    /// JSON rendering with the `holds` flag and both sides.
    pub fn render_json(&self) -> String {
        format!(
            r#"{{"name":{},"holds":{},"lhs":{},"rhs":{},"context":{}}}"#,
            json_string(&self.name),
            self.holds,
            json_string(&self.lhs),
            json_string(&self.rhs),
            json_string(&self.context),
        )
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} [{}]",
            self.name,
            if self.holds { "holds" } else { "FAILS" },
            self.context
        )
    }
}

/// Wronskian with the empty tuple counting as 1 (0x0 determinant).
fn wronskian_or_one<T: Scalar>(fs: &[Poly<T>]) -> Poly<T> {
    if fs.is_empty() {
        Poly::one()
    } else {
        wronskian(fs).expect("nonempty")
    }
}

/// The W5 identity `W(W(A), W(B)) = W(A∩B) W(A∪B)` with `A = [a+1]` and
/// `B = [a] ∪ {a+2}`, so `A∩B = [a]` and `A∪B = [a+2]`.
pub fn w5_check<T: Scalar>(fs: &[Poly<T>], a: usize) -> Result<IdentityReport> {
    if fs.len() < a + 2 {
        return Err(Error::Arity(format!(
            "w5 with a={a} needs {} functions, got {}",
            a + 2,
            fs.len()
        )));
    }
    let w_a = wronskian_or_one(&fs[..a + 1]);
    let mut b_tuple = fs[..a].to_vec();
    b_tuple.push(fs[a + 1].clone());
    let w_b = wronskian_or_one(&b_tuple);
    let lhs = wronskian_or_one(&[w_a, w_b]);
    let rhs = &wronskian_or_one(&fs[..a]) * &wronskian_or_one(&fs[..a + 2]);
    Ok(IdentityReport::compare(
        "w5",
        lhs,
        rhs,
        format!("a={a}, {} functions", fs.len()),
    ))
}

/// Desnanot-Jacobi: `det A det A_{1n,1n} = det A_{1,1} det A_{n,n}
/// - det A_{1,n} det A_{n,1}` for square `A` of size at least 3.
pub fn desnanot_jacobi_check<T: Scalar>(a: &Mat<T>) -> Result<IdentityReport> {
    let n = a.rows();
    if n != a.cols() || n < 3 {
        return Err(Error::Dimension(format!(
            "desnanot-jacobi needs a square matrix of size >= 3, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let all: Vec<usize> = (1..=n).collect();
    let without = |k: usize| -> Vec<usize> { (1..=n).filter(|&x| x != k).collect() };
    let inner: Vec<usize> = (2..n).collect();
    let det = |rows: &[usize], cols: &[usize]| -> Result<T> {
        a.submatrix(rows, cols)?.det()
    };
    let lhs = det(&all, &all)? * det(&inner, &inner)?;
    let rhs = det(&without(1), &without(1))? * det(&without(n), &without(n))?
        - det(&without(1), &without(n))? * det(&without(n), &without(1))?;
    Ok(IdentityReport::compare(
        "desnanot-jacobi",
        lhs,
        rhs,
        format!("size {n}"),
    ))
}

/// The Plücker relation `Δ12 Δ34 - Δ13 Δ24 + Δ14 Δ23 = 0` on the top two
/// rows of a matrix with four columns.
pub fn pluecker_relation_check<T: Scalar>(m: &Mat<T>) -> Result<IdentityReport> {
    if m.rows() < 2 || m.cols() != 4 {
        return Err(Error::Shape(format!(
            "pluecker relation needs >= 2 rows and exactly 4 columns, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let dd = |a: usize, b: usize| m.minor(&[1, 2], &[a, b]);
    let lhs = dd(1, 2)? * dd(3, 4)? - dd(1, 3)? * dd(2, 4)? + dd(1, 4)? * dd(2, 3)?;
    Ok(IdentityReport::compare(
        "pluecker-relation",
        lhs,
        T::zero(),
        "2x4 block".to_string(),
    ))
}

/// Left multiplication by `e_23(c) = I + c E_23`: row 2 gains `c` times
/// row 3.
pub fn e23_act<T: Scalar>(m: &Mat<T>, c: &T) -> Mat<T> {
    let mut out = m.clone();
    for j in 0..m.cols() {
        let v = m.get(1, j).clone() + c.clone() * m.get(2, j).clone();
        out.set(1, j, v);
    }
    out
}

/// The Wronskian mutation equation
/// `W(y_2(M), y_2(e_23(c) M)) = c y_1(M) y_3(M)`.
pub fn mutation_check<T: Scalar>(m: &Mat<T>, c: &T) -> Result<IdentityReport> {
    if m.rows() < 3 || m.cols() < 3 {
        return Err(Error::Shape(format!(
            "mutation needs at least 3 rows and 3 columns, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let bs = row_polys(m);
    let y1 = wronskian(&bs[..1])?;
    let y2 = wronskian(&bs[..2])?;
    let y3 = wronskian(&bs[..3])?;
    let mutated = e23_act(m, c);
    let y2_mut = wronskian(&row_polys(&mutated)[..2])?;
    let lhs = wronskian(&[y2, y2_mut])?;
    let rhs = (&y1 * &y3).scale(c);
    Ok(IdentityReport::compare(
        "mutation",
        lhs,
        rhs,
        format!("{}x{}, c={c}", m.rows(), m.cols()),
    ))
}

/// Solve the mutation equation as a first-order linear ODE: find
/// `z` with `y_2 z' - y_2' z = y_1 y_3` in degree at most
/// `deg y_1 + deg y_3 - deg y_2 + 1`, normalized so that the coefficient
/// of `x^{deg y_2}` in `z` vanishes (killing the kernel span of `y_2`),
/// and return `y_2 + c z`.
#[allow(clippy::needless_range_loop)] // the indices are the z-coefficients
pub fn mutation_solve<T: Scalar>(
    y1: &Poly<T>,
    y2: &Poly<T>,
    y3: &Poly<T>,
    c: &T,
) -> Result<Poly<T>> {
    if y2.is_zero() {
        return Err(Error::DivisionByZero("mutation solve needs y2 != 0".into()));
    }
    let rhs = y1 * y3;
    if rhs.is_zero() {
        // homogeneous equation: the normalized kernel element is z = 0
        return Ok(y2.clone());
    }
    let d2 = y2.degree().unwrap();
    let bound = rhs.degree().unwrap() as i64 - d2 as i64 + 1;
    if bound < 0 {
        return Err(Error::NoSolution(
            "mutation data admits no polynomial solution".into(),
        ));
    }
    let dz = bound as usize;
    let unknowns = dz + 1;
    let y2d = y2.derivative();
    // coefficient of x^e in  y2 z' - y2' z  as a linear form in z_0..z_dz
    let max_e = (d2 + dz).saturating_sub(1).max(rhs.degree().unwrap());
    let mut rows: Vec<Vec<T>> = Vec::new();
    let mut rhs_col: Vec<T> = Vec::new();
    for e in 0..=max_e {
        let mut row = vec![T::zero(); unknowns];
        for k in 1..=dz {
            // y2_j * k z_k at j + (k-1) = e
            if e + 1 >= k {
                let j = e + 1 - k;
                if j <= d2 {
                    row[k] = row[k].clone()
                        + y2.coeff(j) * crate::scalar::int::<T>(k as i64);
                }
            }
        }
        for k in 0..=dz {
            if e >= k {
                let j = e - k;
                row[k] = row[k].clone() - y2d.coeff(j);
            }
        }
        rows.push(row);
        rhs_col.push(rhs.coeff(e));
    }
    if d2 <= dz {
        let mut norm = vec![T::zero(); unknowns];
        norm[d2] = T::one();
        rows.push(norm);
        rhs_col.push(T::zero());
    }
    let z_coeffs = solve_linear(rows, rhs_col).ok_or_else(|| {
        Error::NoSolution("mutation data is inconsistent (not from a matrix)".into())
    })?;
    let z = Poly::from_monomial_coeffs(z_coeffs);
    Ok(y2 + &z.scale(c))
}

/// Gaussian elimination over the scalar field; `None` when inconsistent,
/// free unknowns pinned to zero.
fn solve_linear<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        b.swap(rank, p);
        let inv = T::one() / a[rank][col].clone();
        for x in a[rank].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        b[rank] = b[rank].clone() * inv;
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[rank].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
                b[r] = b[r].clone() - f * b[rank].clone();
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    if b[rank..rows].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![T::zero(); cols];
    for col in 0..cols {
        if let Some(r) = pivot_of_col[col] {
            x[col] = b[r].clone();
        }
    }
    Some(x)
}
