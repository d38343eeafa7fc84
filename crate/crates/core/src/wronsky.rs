//! The Wronskian map on matrices, its factorization through Plücker
//! coordinates, generalized Wronskians, degree vectors and Bruhat-cell
//! classification.

use crate::cells::{path_count_table, CellIndex};
use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::perm::Permutation;
use crate::poly::{poly_mat_det, Poly};
use crate::scalar::{factorial, Scalar};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// The image `(y_1, .., y_{n-1})` of an `n x m` matrix under the Wronskian
/// map: `y_i` is the Wronskian of the first `i` row polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WronskyImage<T> {
    polys: Vec<Poly<T>>,
}

impl<T: Scalar> WronskyImage<T> {
    pub fn components(&self) -> &[Poly<T>] {
        &self.polys
    }

    /// `y_i`, 1-based.
    pub fn component(&self, i: usize) -> &Poly<T> {
        &self.polys[i - 1]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// The vector `(deg y_1, .., deg y_{n-1})` of an invertible matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector {
    degrees: Vec<usize>,
}

impl DegreeVector {
    pub fn new(degrees: Vec<usize>) -> Self {
        DegreeVector { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.degrees.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Row `i` of `M` as the polynomial `b_i(t) = sum_j M[i][j+1] t^j / j!`.
pub fn row_polys<T: Scalar>(m: &Mat<T>) -> Vec<Poly<T>> {
    (0..m.rows())
        .map(|i| Poly::from_factorial_coeffs(m.row(i)))
        .collect()
}

/// The Wronskian `W(f_1, .., f_k) = det(f_i^{(j)})`, `j = 0 .. k-1`.
pub fn wronskian<T: Scalar>(fs: &[Poly<T>]) -> Result<Poly<T>> {
    if fs.is_empty() {
        return Err(Error::Arity("wronskian of an empty sequence".into()));
    }
    let k = fs.len();
    let rows: Vec<Vec<Poly<T>>> = fs
        .iter()
        .map(|f| {
            let mut derivs = Vec::with_capacity(k);
            let mut d = f.clone();
            for _ in 0..k {
                derivs.push(d.clone());
                d = d.derivative();
            }
            derivs
        })
        .collect();
    Ok(crate::poly::poly_mat_det_bounded(rows, Some(wronskian_degree_cap(fs))))
}

/// Degree cap for `W(f_1, .., f_k)` with all degrees at most `D`: expanding
/// the determinant by Cauchy-Binet over the factorial coefficient matrix,
/// every surviving minor of the derivative matrix has degree at most
/// `k (D + 1 - k)`.
fn wronskian_degree_cap<T: Scalar>(fs: &[Poly<T>]) -> usize {
    let k = fs.len();
    let d = fs.iter().filter_map(Poly::degree).max().unwrap_or(0);
    k * (d + 1).saturating_sub(k)
}

/// The generalized Wronskian `W_I`: the minor of the infinite Wronskian
/// matrix of `(f_1, f_2, ..)` on derivative orders `i - 1`, `i` in `I`,
/// against the first `|I|` functions. `W_{[k]} = W(f_1, .., f_k)`.
pub fn generalized_wronskian<T: Scalar>(fs: &[Poly<T>], index: &CellIndex) -> Result<Poly<T>> {
    let k = index.size();
    let max = *index.elements().last().unwrap();
    if k > fs.len() || max > fs.len() {
        return Err(Error::Dimension(format!(
            "generalized wronskian of {index} needs at least {} functions, got {}",
            k.max(max),
            fs.len()
        )));
    }
    let rows: Vec<Vec<Poly<T>>> = index
        .elements()
        .iter()
        .map(|&order1| {
            fs.iter()
                .take(k)
                .map(|f| f.derivative_n(order1 - 1))
                .collect()
        })
        .collect();
    Ok(poly_mat_det(rows))
}

/// `y_i(M) = W(b_1, .., b_i)` for arbitrary `1 <= i <= rows`, computed as
/// its own polynomial determinant.
pub fn wronskian_component<T: Scalar>(m: &Mat<T>, i: usize) -> Result<Poly<T>> {
    if i == 0 || i > m.rows() {
        return Err(Error::Dimension(format!(
            "component {i} of a {}-row matrix",
            m.rows()
        )));
    }
    wronskian(&row_polys(m)[..i])
}

/// All components `y_1, .., y_n` in one sweep: the leading principal
/// minors of the Wronskian matrix are read off a single swap-free
/// fraction-free elimination per evaluation point, then interpolated.
/// Points where a pivot vanishes contribute only their valid prefix; a
/// component that never accumulates enough points (an identically
/// vanishing pivot below it) falls back to its own determinant.
pub fn wronskian_tower<T: Scalar>(m: &Mat<T>) -> Vec<Poly<T>> {
    let n = m.rows();
    let bs = row_polys(m);
    let degs: Vec<usize> = bs.iter().map(|b| b.degree().unwrap_or(0)).collect();
    // degree bound for y_k: column j of the k x k derivative matrix has
    // entry degree at most (max deg of the first k rows) - j
    let mut bounds = vec![0usize; n + 1];
    let mut prefix_max = 0usize;
    for k in 1..=n {
        prefix_max = prefix_max.max(degs[k - 1]);
        let column_sum: usize = (0..k).map(|j| prefix_max.saturating_sub(j)).sum();
        let cauchy_binet = k * (prefix_max + 1).saturating_sub(k);
        bounds[k] = column_sum.min(cauchy_binet);
    }
    let needed: Vec<usize> = (0..=n).map(|k| bounds[k] + 1).collect();
    // scaling every row by prefix_max! clears the factorial denominators of
    // integral matrices, keeping the evaluated eliminations in the integers;
    // each sample of y_k is divided back by scale^k before interpolation
    let scale = factorial::<T>(prefix_max);
    let derivs: Vec<Vec<Poly<T>>> = bs
        .iter()
        .map(|b| {
            let mut v = Vec::with_capacity(n);
            v.push(b.scale(&scale));
            for _ in 1..n {
                v.push(v.last().unwrap().derivative());
            }
            v
        })
        .collect();
    let mut samples: Vec<Vec<(T, T)>> = vec![Vec::new(); n + 1];
    let cap = 3 * bounds[n] + 2 * n + 8;
    for c in 0..cap {
        if (1..=n).all(|k| samples[k].len() >= needed[k]) {
            break;
        }
        let c = c as i64;
        let x: T = crate::scalar::int(if c % 2 == 0 { c / 2 } else { -(c / 2) - 1 });
        let mut a: Vec<Vec<T>> = (0..n)
            .map(|i| (0..n).map(|j| derivs[i][j].eval(&x)).collect())
            .collect();
        let mut minors: Vec<T> = vec![a[0][0].clone()];
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k].clone() * a[i][j].clone()
                        - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = num / prev.clone();
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
            minors.push(a[k + 1][k + 1].clone());
        }
        let inv_scale = T::one() / scale.clone();
        let mut unscale = T::one();
        for (k, v) in minors.into_iter().enumerate() {
            let k = k + 1;
            unscale = unscale * inv_scale.clone();
            if samples[k].len() < needed[k] {
                samples[k].push((x.clone(), v * unscale.clone()));
            }
        }
    }
    (1..=n)
        .map(|k| {
            let s = &samples[k];
            if s.len() >= needed[k] {
                let pts: Vec<T> = s.iter().map(|(x, _)| x.clone()).collect();
                let vals: Vec<T> = s.iter().map(|(_, v)| v.clone()).collect();
                crate::poly::newton_interpolate(&pts, vals)
            } else {
                wronskian(&bs[..k]).expect("nonempty prefix")
            }
        })
        .collect()
}

/// The Wronskian map `W(M) = (y_1(M), .., y_{n-1}(M))` of an `n x m`
/// matrix with `n <= m`.
pub fn wronsky_map<T: Scalar>(m: &Mat<T>) -> Result<WronskyImage<T>> {
    if m.rows() > m.cols() {
        return Err(Error::Shape(format!(
            "wronsky map needs n <= m, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let mut polys = wronskian_tower(m);
    polys.pop();
    Ok(WronskyImage { polys })
}

/// The `i`-th Plücker coordinates: `I -> Δ_{[i],I}(M)` over all `i`-element
/// column sets `I` of `[m]`.
pub fn pluecker<T: Scalar>(m: &Mat<T>, i: usize) -> Result<BTreeMap<CellIndex, T>> {
    if i == 0 || i > m.rows() {
        return Err(Error::Dimension(format!(
            "pluecker index {i} for a {}-row matrix",
            m.rows()
        )));
    }
    let top: Vec<usize> = (1..=i).collect();
    let mut out = BTreeMap::new();
    for index in CellIndex::all(m.cols(), i) {
        let v = m.minor(&top, index.elements())?;
        out.insert(index, v);
    }
    Ok(out)
}

/// The contraction `c_i`: collapse Plücker coordinates over `C_n^i` to the
/// polynomial `sum_I m(I) a_I t^{l(I)} / l(I)!`.
pub fn contraction<T: Scalar>(
    i: usize,
    n: usize,
    values: &BTreeMap<CellIndex, T>,
) -> Result<Poly<T>> {
    let counts = path_count_table(n, i);
    let mut coeffs = vec![T::zero(); i * (n - i) + 1];
    for (index, m_count) in counts {
        let len = index.length();
        let a = values.get(&index).ok_or_else(|| {
            Error::Completeness(format!("missing pluecker value for {index}"))
        })?;
        let m_scalar = T::from(BigInt::from(m_count));
        let term = m_scalar * a.clone() / factorial::<T>(len);
        coeffs[len] = coeffs[len].clone() + term;
    }
    Ok(Poly::from_monomial_coeffs(coeffs))
}

/// The symbolic minor `Δ_{[i],I}` of the unit Wronskian matrix
/// `W(1, x, x^2/2, ..)`, with `i = |I|`: rows are derivative orders
/// `0 .. i-1`, columns the functions picked by `I`. Always the monomial
/// `m(I) x^{l(I)} / l(I)!`.
pub fn unit_wronskian_minor<T: Scalar>(index: &CellIndex) -> Poly<T> {
    let i = index.size();
    let rows: Vec<Vec<Poly<T>>> = (1..=i)
        .map(|r| {
            index
                .elements()
                .iter()
                .map(|&c| {
                    if c >= r {
                        Poly::monomial(T::one() / factorial::<T>(c - r), c - r)
                    } else {
                        Poly::zero()
                    }
                })
                .collect()
        })
        .collect();
    poly_mat_det(rows)
}

/// Degree vector of an invertible square matrix.
pub fn degree_vector<T: Scalar>(g: &Mat<T>) -> Result<DegreeVector> {
    if g.rows() != g.cols() {
        return Err(Error::Shape(format!(
            "degree vector of a {}x{} matrix",
            g.rows(),
            g.cols()
        )));
    }
    if g.det()?.is_zero() {
        return Err(Error::Singular(
            "degree vector undefined on singular matrices".into(),
        ));
    }
    let img = wronsky_map(g)?;
    let degrees = img
        .components()
        .iter()
        .map(|y| {
            y.degree().ok_or_else(|| {
                Error::Internal("vanishing wronskian component of an invertible matrix".into())
            })
        })
        .collect::<Result<_>>()?;
    Ok(DegreeVector { degrees })
}

/// Degrees of the permutation matrix of `w` in closed form:
/// `d_i(w) = sum_{j<=i} w(j) - i(i+1)/2`.
pub fn permutation_degrees(w: &Permutation) -> DegreeVector {
    let n = w.n();
    let mut sum = 0usize;
    let degrees = (1..n)
        .map(|i| {
            sum += w.image(i);
            sum - i * (i + 1) / 2
        })
        .collect();
    DegreeVector { degrees }
}

/// Classify the Bruhat cell of an invertible matrix: the unique `w` whose
/// shifted partial sums reproduce the degree vector.
pub fn bruhat_cell<T: Scalar>(g: &Mat<T>) -> Result<Permutation> {
    let n = g.rows();
    let d = degree_vector(g)?;
    let mut images = Vec::with_capacity(n);
    let mut prev_sum = 0usize;
    for i in 1..=n {
        let sum = if i < n {
            d.degrees()[i - 1] + i * (i + 1) / 2
        } else {
            n * (n + 1) / 2
        };
        let w_i = sum
            .checked_sub(prev_sum)
            .ok_or_else(|| Error::Internal("degree differences not a permutation".into()))?;
        images.push(w_i);
        prev_sum = sum;
    }
    Permutation::new(images)
        .map_err(|_| Error::Internal("degree differences not a permutation".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prng::SplitMix64;
    use crate::scalar::{int, ratio};
    use crate::Rat;
    use num_traits::{One, Zero};

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| int(c)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn random_mat(rng: &mut SplitMix64, rows: usize, cols: usize) -> Mat<Rat> {
        Mat::from_fn(rows, cols, |_, _| int(rng.int_in(-9, 9)))
    }

    fn cell(n: usize, elems: &[usize]) -> CellIndex {
        CellIndex::new(n, elems.to_vec()).unwrap()
    }

    #[test]
    fn row_polys_of_unit_rows() {
        let id = Mat::<Rat>::identity(3);
        let bs = row_polys(&id);
        assert_eq!(bs[0], Poly::one());
        assert_eq!(bs[1], Poly::x());
        assert_eq!(bs[2], Poly::monomial(ratio(1, 2), 2));
        // a last unit row of length n is t^{n-1}/(n-1)!
        let e = Mat::from_rows(vec![vec![
            int::<Rat>(0),
            int(0),
            int(0),
            int(1),
        ]])
        .unwrap();
        assert_eq!(row_polys(&e)[0], Poly::monomial(ratio(1, 6), 3));
    }

    #[test]
    fn wronskian_basics() {
        let f = Poly::<Rat>::from_monomial_coeffs(vec![int(2), int(0), int(5)]);
        assert_eq!(wronskian(std::slice::from_ref(&f)).unwrap(), f);
        assert_eq!(
            wronskian(&[Poly::<Rat>::one(), Poly::x()]).unwrap(),
            Poly::one()
        );
        assert!(matches!(
            wronskian::<Rat>(&[]),
            Err(Error::Arity(_))
        ));
    }

    #[test]
    fn wronskian_scales_by_determinant_under_constant_mixing() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..10 {
            let fs: Vec<Poly<Rat>> = (0..3)
                .map(|_| {
                    Poly::from_monomial_coeffs((0..4).map(|_| rng.rat::<Rat>(5, 2)).collect())
                })
                .collect();
            let a = Mat::from_fn(3, 3, |_, _| rng.rat::<Rat>(4, 1));
            // (fA)_j = sum_i f_i a_ij
            let mixed: Vec<Poly<Rat>> = (0..3)
                .map(|j| {
                    fs.iter().enumerate().fold(Poly::zero(), |acc, (i, f)| {
                        &acc + &f.scale(a.get(i, j))
                    })
                })
                .collect();
            assert_eq!(
                wronskian(&mixed).unwrap(),
                wronskian(&fs).unwrap().scale(&a.det().unwrap())
            );
        }
    }

    #[test]
    fn wronskian_derivative_sum_rule() {
        let mut rng = SplitMix64::new(11);
        let fs: Vec<Poly<Rat>> = (0..3)
            .map(|_| Poly::from_monomial_coeffs((0..5).map(|_| rng.rat::<Rat>(5, 2)).collect()))
            .collect();
        let lhs = wronskian(&fs).unwrap().derivative();
        let mut rhs = Poly::zero();
        for i in 0..fs.len() {
            let mut gs = fs.clone();
            gs[i] = gs[i].derivative();
            rhs = &rhs + &wronskian(&gs).unwrap();
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn generic_two_by_four_coefficient_grouping() {
        // W(b1, b2) = Δ12 + Δ13 t + (Δ14 + Δ23) t^2/2 + 2 Δ24 t^3/6 + 2 Δ34 t^4/24
        let mut rng = SplitMix64::new(341);
        for _ in 0..25 {
            let g = random_mat(&mut rng, 2, 4);
            let dd = |a: usize, b: usize| g.minor(&[1, 2], &[a, b]).unwrap();
            let y2 = wronskian_component(&g, 2).unwrap();
            let expect = Poly::from_factorial_coeffs(&[
                dd(1, 2),
                dd(1, 3),
                dd(1, 4) + dd(2, 3),
                int::<Rat>(2) * dd(2, 4),
                int::<Rat>(2) * dd(3, 4),
            ]);
            assert_eq!(y2, expect);
        }
    }

    #[test]
    fn y3_of_gl4_is_the_top_three_row_minor_expansion() {
        let mut rng = SplitMix64::new(343);
        let g = random_mat(&mut rng, 4, 4);
        let d3 = |a: usize, b: usize, c: usize| g.minor(&[1, 2, 3], &[a, b, c]).unwrap();
        let y3 = wronskian_component(&g, 3).unwrap();
        let expect = Poly::from_factorial_coeffs(&[
            d3(1, 2, 3),
            d3(1, 2, 4),
            d3(1, 3, 4),
            d3(2, 3, 4),
        ]);
        assert_eq!(y3, expect);
    }

    #[test]
    fn tower_agrees_with_per_component_determinants() {
        let mut rng = SplitMix64::new(77);
        for n in 1..=6usize {
            for _ in 0..8 {
                let extra = rng.int_in(0, 2) as usize;
                let g = random_mat(&mut rng, n, n + extra);
                let tower = wronskian_tower(&g);
                assert_eq!(tower.len(), n);
                for i in 1..=n {
                    assert_eq!(tower[i - 1], wronskian_component(&g, i).unwrap());
                }
            }
        }
        // rank-deficient top block: y_2 vanishes identically, forcing the
        // fallback path for the components above it
        let g = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1], &[1, 0, 0, 0]]);
        let tower = wronskian_tower(&g);
        for i in 1..=4 {
            assert_eq!(tower[i - 1], wronskian_component(&g, i).unwrap());
        }
        assert!(tower[1].is_zero());
    }

    #[test]
    fn wronsky_map_of_identity_is_all_ones() {
        let img = wronsky_map(&Mat::<Rat>::identity(5)).unwrap();
        assert_eq!(img.len(), 4);
        for y in img.components() {
            assert_eq!(y, &Poly::one());
        }
    }

    #[test]
    fn wronsky_map_rejects_tall_matrices() {
        let g = m(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert!(matches!(wronsky_map(&g), Err(Error::Shape(_))));
    }

    #[test]
    fn invariance_under_left_borel_action() {
        // unipotent: equality; lower triangular: y_i scales by the leading
        // principal i-minor of A (the projective det-twist, made exact)
        let mut rng = SplitMix64::new(222);
        for _ in 0..10 {
            let g = random_mat(&mut rng, 3, 5);
            let mut a = Mat::<Rat>::identity(3);
            for i in 0..3 {
                for j in 0..i {
                    a.set(i, j, int(rng.int_in(-5, 5)));
                }
            }
            let img = wronsky_map(&g).unwrap();
            let unipotent = wronsky_map(&a.mul(&g).unwrap()).unwrap();
            assert_eq!(unipotent, img);

            for i in 0..3 {
                a.set(i, i, rng.nonzero_int::<Rat>(5));
            }
            let borel = wronsky_map(&a.mul(&g).unwrap()).unwrap();
            for i in 1..3 {
                let lead: Vec<usize> = (1..=i).collect();
                let scale = a.minor(&lead, &lead).unwrap();
                assert_eq!(borel.component(i), &img.component(i).scale(&scale));
            }
        }
    }

    #[test]
    fn generalized_wronskian_of_the_leading_cell_is_the_wronskian() {
        let mut rng = SplitMix64::new(360);
        let fs: Vec<Poly<Rat>> = (0..4)
            .map(|_| Poly::from_monomial_coeffs((0..4).map(|_| rng.rat::<Rat>(5, 2)).collect()))
            .collect();
        for k in 1..=3 {
            assert_eq!(
                generalized_wronskian(&fs, &CellIndex::minimal(4, k)).unwrap(),
                wronskian(&fs[..k]).unwrap()
            );
        }
        assert!(generalized_wronskian(&fs[..2], &cell(8, &[1, 5])).is_err());
    }

    #[test]
    fn evaluated_unit_wronskian_minor() {
        // the 4x4 matrix W(1, x, x^2/2, x^3/6) at x = 2: the minor on rows
        // [1,2] and columns [1,4] is x^2/2 there, i.e. 2
        let w4 = Mat::from_fn(4, 4, |r, c| {
            if c >= r {
                Poly::<Rat>::monomial(Rat::one() / factorial::<Rat>(c - r), c - r)
                    .eval(&int(2))
            } else {
                Rat::zero()
            }
        });
        assert_eq!(w4.minor(&[1, 2], &[1, 4]).unwrap(), int(2));
    }

    #[test]
    fn generalized_wronskian_derivative_sums_over_moves() {
        let mut rng = SplitMix64::new(361);
        let fs: Vec<Poly<Rat>> = (0..8)
            .map(|_| Poly::from_monomial_coeffs((0..4).map(|_| rng.rat::<Rat>(5, 2)).collect()))
            .collect();
        for index in [cell(8, &[1, 3]), cell(8, &[2, 5]), cell(8, &[1, 3, 4])] {
            let lhs = generalized_wronskian(&fs, &index).unwrap().derivative();
            let mut rhs = Poly::zero();
            for (_, next) in index.admissible_moves() {
                rhs = &rhs + &generalized_wronskian(&fs, &next).unwrap();
            }
            assert_eq!(lhs, rhs, "index {index}");
        }
    }

    #[test]
    fn higher_derivatives_sum_over_composable_move_sequences() {
        let mut rng = SplitMix64::new(362);
        let fs: Vec<Poly<Rat>> = (0..9)
            .map(|_| Poly::from_monomial_coeffs((0..4).map(|_| rng.rat::<Rat>(4, 2)).collect()))
            .collect();
        // enumerate composable sequences by walking admissible moves
        fn reachable(index: &CellIndex, p: usize) -> Vec<CellIndex> {
            if p == 0 {
                return vec![index.clone()];
            }
            index
                .admissible_moves()
                .into_iter()
                .flat_map(|(_, next)| reachable(&next, p - 1))
                .collect()
        }
        let index = cell(9, &[1, 3]);
        for p in 0..=3 {
            let lhs = generalized_wronskian(&fs, &index).unwrap().derivative_n(p);
            let mut rhs = Poly::zero();
            for target in reachable(&index, p) {
                rhs = &rhs + &generalized_wronskian(&fs, &target).unwrap();
            }
            assert_eq!(lhs, rhs, "p = {p}");
        }
    }

    #[test]
    fn wronskian_factors_through_pluecker_contraction() {
        let mut rng = SplitMix64::new(33);
        for n in 2..=5usize {
            for _ in 0..10 {
                let g = random_mat(&mut rng, n, n);
                for i in 1..=n {
                    let via_wronskian = wronskian_component(&g, i).unwrap();
                    let via_contraction =
                        contraction(i, n, &pluecker(&g, i).unwrap()).unwrap();
                    assert_eq!(via_wronskian, via_contraction);
                }
            }
        }
    }

    #[test]
    fn contraction_of_identity_plueckers_is_one() {
        let id = Mat::<Rat>::identity(4);
        for i in 1..=4 {
            let c = contraction(i, 4, &pluecker(&id, i).unwrap()).unwrap();
            assert_eq!(c, Poly::one());
        }
    }

    #[test]
    fn contraction_requires_all_indices() {
        let mut values = pluecker(&Mat::<Rat>::identity(4), 2).unwrap();
        values.remove(&cell(4, &[2, 4]));
        assert!(matches!(
            contraction(2, 4, &values),
            Err(Error::Completeness(_))
        ));
    }

    #[test]
    fn pluecker_of_identity_is_a_delta() {
        let values = pluecker(&Mat::<Rat>::identity(4), 2).unwrap();
        for (index, v) in values {
            let expect = if index == cell(4, &[1, 2]) { 1 } else { 0 };
            assert_eq!(v, int(expect));
        }
    }

    #[test]
    fn pluecker_relation_on_random_two_by_four() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..50 {
            let g = random_mat(&mut rng, 2, 4);
            let dd = |a: usize, b: usize| g.minor(&[1, 2], &[a, b]).unwrap();
            let rel = dd(1, 2) * dd(3, 4) - dd(1, 3) * dd(2, 4) + dd(1, 4) * dd(2, 3);
            assert!(rel.is_zero());
        }
    }

    #[test]
    fn unit_wronskian_reference_minors() {
        // Δ_{14}(W_4(x)) = x^2/2
        assert_eq!(
            unit_wronskian_minor::<Rat>(&cell(4, &[1, 4])),
            Poly::monomial(ratio(1, 2), 2)
        );
        // Δ_{[2],{3,4}}(W_4(x)) = x^4/12
        assert_eq!(
            unit_wronskian_minor::<Rat>(&cell(4, &[3, 4])),
            Poly::monomial(ratio(1, 12), 4)
        );
        // leading principal minors are 1
        for i in 1..=5 {
            assert_eq!(
                unit_wronskian_minor::<Rat>(&CellIndex::minimal(6, i)),
                Poly::one()
            );
        }
    }

    #[test]
    fn unit_wronskian_minor_is_m_over_length_factorial() {
        for n in 1..=7 {
            for i in 1..=n {
                let counts = path_count_table(n, i);
                for (index, m_count) in counts {
                    let len = index.length();
                    let c = Rat::from(BigInt::from(m_count)) / factorial::<Rat>(len);
                    assert_eq!(
                        unit_wronskian_minor::<Rat>(&index),
                        Poly::monomial(c, len),
                        "index {index}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_vector_reference_values() {
        // lower triangular -> all zeros
        let g = m(&[&[2, 0, 0], &[1, -3, 0], &[4, 5, 1]]);
        assert_eq!(degree_vector(&g).unwrap().degrees(), &[0, 0]);
        // permutation matrix of [3,1,2] -> (2,1)
        let w = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(degree_vector(&w.matrix::<Rat>()).unwrap().degrees(), &[2, 1]);
        // antidiagonal w0 -> (i(n-i))
        for n in 2..=5 {
            let w0 = Permutation::longest(n);
            let d = degree_vector(&w0.matrix::<Rat>()).unwrap();
            let expect: Vec<usize> = (1..n).map(|i| i * (n - i)).collect();
            assert_eq!(d.degrees(), &expect[..]);
        }
        // singular matrix is a domain error
        let s = m(&[&[1, 2], &[2, 4]]);
        assert!(matches!(degree_vector(&s), Err(Error::Singular(_))));
    }

    #[test]
    fn permutation_degrees_closed_form_matches_matrix_oracle() {
        for n in 2..=5 {
            for w in Permutation::all(n) {
                let closed = permutation_degrees(&w);
                let oracle = degree_vector(&w.matrix::<Rat>()).unwrap();
                assert_eq!(closed, oracle, "w = {w}");
            }
        }
    }

    #[test]
    fn hexagon_of_gl3_degree_vectors() {
        // the six realized vectors for n = 3; note [2,3,1] -> (1,2) and
        // [3,1,2] -> (2,1) by the permutation-matrix computation
        let mut seen: Vec<Vec<usize>> = Permutation::all(3)
            .iter()
            .map(|w| permutation_degrees(w).degrees().to_vec())
            .collect();
        seen.sort();
        let mut expect = vec![
            vec![0, 0],
            vec![1, 0],
            vec![0, 1],
            vec![1, 2],
            vec![2, 1],
            vec![2, 2],
        ];
        expect.sort();
        assert_eq!(seen, expect);
        assert_eq!(
            permutation_degrees(&Permutation::new(vec![2, 3, 1]).unwrap()).degrees(),
            &[1, 2]
        );
        assert_eq!(
            permutation_degrees(&Permutation::new(vec![3, 1, 2]).unwrap()).degrees(),
            &[2, 1]
        );
    }

    #[test]
    fn bruhat_cell_recovers_the_permutation() {
        let mut rng = SplitMix64::new(23);
        for n in 2..=5 {
            for w in Permutation::all(n) {
                let trials = if n < 5 { 5 } else { 2 };
                for _ in 0..trials {
                    let mut b1 = Mat::<Rat>::identity(n);
                    let mut b2 = Mat::<Rat>::identity(n);
                    for i in 0..n {
                        for j in 0..i {
                            b1.set(i, j, int(rng.int_in(-9, 9)));
                            b2.set(i, j, int(rng.int_in(-9, 9)));
                        }
                        b1.set(i, i, rng.nonzero_int::<Rat>(9));
                        b2.set(i, i, rng.nonzero_int::<Rat>(9));
                    }
                    let g = b1.mul(&w.matrix()).unwrap().mul(&b2).unwrap();
                    assert_eq!(bruhat_cell(&g).unwrap(), w, "w = {w}");
                }
            }
        }
        assert_eq!(
            bruhat_cell(&Mat::<Rat>::identity(4)).unwrap(),
            Permutation::identity(4)
        );
    }

    #[test]
    fn degree_bound_holds_with_equality_on_the_big_cell() {
        let mut rng = SplitMix64::new(99);
        for n in 2..=5usize {
            for _ in 0..10 {
                let g = random_mat(&mut rng, n, n);
                if g.det().unwrap().is_zero() {
                    continue;
                }
                let d = degree_vector(&g).unwrap();
                for (k, &deg) in d.degrees().iter().enumerate() {
                    let i = k + 1;
                    assert!(deg <= i * (n - i));
                }
            }
        }
    }

    #[test]
    fn reciprocal_of_generic_y2_moves_the_constant_up() {
        // the coefficient-reversal reciprocal at d = 4 sends the constant
        // term Δ12 of y2 to the x^4 coefficient
        let mut rng = SplitMix64::new(4);
        let g = random_mat(&mut rng, 2, 4);
        let y2 = wronskian_component(&g, 2).unwrap();
        let rec = y2.reciprocal(4).unwrap();
        assert_eq!(rec.coeff(4), y2.coeff(0));
        assert_eq!(rec.coeff(0), y2.coeff(4));
    }
}
