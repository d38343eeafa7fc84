//! Balls-in-boxes combinatorics of i-element subsets of [n]: lengths,
//! creation moves, path counts, transposition, partitions and hook factors,
//! and the embedding into semi-infinite cells.

use crate::error::{Error, Result};
use crate::scalar::{factorial, int, Scalar};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An i-element subset `b_1 < .. < b_i` of `[n]`, equivalently a bitstring
/// of length `n` with `i` ones ("balls in boxes").
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellIndex {
    n: usize,
    elems: Vec<usize>,
}

impl CellIndex {
    pub fn new(n: usize, elems: Vec<usize>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::Dimension("cell index must be nonempty".into()));
        }
        for w in elems.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Dimension(format!(
                    "elements {elems:?} are not strictly increasing"
                )));
            }
        }
        if elems[0] == 0 || *elems.last().unwrap() > n {
            return Err(Error::Dimension(format!(
                "elements {elems:?} out of range 1..={n}"
            )));
        }
        Ok(CellIndex { n, elems })
    }

    /// Parse the bitstring form, e.g. `"1100"` for `{1,2}` in `[4]`.
    pub fn from_bitstring(s: &str) -> Result<Self> {
        let mut elems = Vec::new();
        for (k, ch) in s.chars().enumerate() {
            match ch {
                '1' => elems.push(k + 1),
                '0' => {}
                _ => return Err(Error::Parse(format!("bad bitstring character {ch:?}"))),
            }
        }
        CellIndex::new(s.len(), elems)
    }

    pub fn bitstring(&self) -> String {
        let mut s = vec!['0'; self.n];
        for &b in &self.elems {
            s[b - 1] = '1';
        }
        s.into_iter().collect()
    }

    /// The minimal cell `{1, .., i}`.
    pub fn minimal(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        CellIndex {
            n,
            elems: (1..=i).collect(),
        }
    }

    /// The maximal cell `{n-i+1, .., n}`.
    pub fn maximal(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        CellIndex {
            n,
            elems: (n - i + 1..=n).collect(),
        }
    }

    /// All cells of size `i` in `[n]`, in lexicographic order of element lists.
    pub fn all(n: usize, i: usize) -> Vec<CellIndex> {
        assert!(i >= 1 && i <= n);
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=i).collect();
        loop {
            out.push(CellIndex {
                n,
                elems: cur.clone(),
            });
            // next combination in lexicographic order
            let Some(p) = (0..i).rev().find(|&p| cur[p] < n - (i - 1 - p)) else {
                break;
            };
            cur[p] += 1;
            for q in p + 1..i {
                cur[q] = cur[q - 1] + 1;
            }
        }
        out
    }

    pub fn boxes(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn contains(&self, b: usize) -> bool {
        self.elems.binary_search(&b).is_ok()
    }

    /// Length `l(I) = sum_j (b_j - j)`: the number of one-step moves from
    /// the minimal cell.
    pub fn length(&self) -> usize {
        self.elems
            .iter()
            .enumerate()
            .map(|(k, &b)| b - (k + 1))
            .sum()
    }

    /// The admissible creation moves: each ball that can hop one box to the
    /// right, paired with the resulting cell. A ball at `b_p` is admissible
    /// iff it is the last ball and `b_p < n`, or the next ball is not
    /// adjacent.
    pub fn admissible_moves(&self) -> Vec<(usize, CellIndex)> {
        let k = self.elems.len();
        let mut out = Vec::new();
        for p in 0..k {
            let b = self.elems[p];
            let free = if p + 1 == k {
                b < self.n
            } else {
                self.elems[p + 1] > b + 1
            };
            if free {
                let mut elems = self.elems.clone();
                elems[p] += 1;
                out.push((b, CellIndex { n: self.n, elems }));
            }
        }
        out
    }

    /// Cells one move below this one (the ball that just hopped, moved back).
    fn predecessors(&self) -> Vec<CellIndex> {
        let mut out = Vec::new();
        for p in 0..self.elems.len() {
            let b = self.elems[p];
            let room = if p == 0 { b > 1 } else { self.elems[p - 1] < b - 1 };
            if room {
                let mut elems = self.elems.clone();
                elems[p] -= 1;
                out.push(CellIndex { n: self.n, elems });
            }
        }
        out
    }

    /// Number of move sequences from the minimal cell to this one. All such
    /// sequences have length exactly `l(I)`.
    pub fn path_count(&self) -> BigUint {
        path_count_table(self.n, self.size())
            .remove(self)
            .expect("cell is in its own lattice")
    }

    /// The transposed cell: bitstring reversed, i.e. `{n+1-b : b in I}`.
    pub fn transpose(&self) -> CellIndex {
        let mut elems: Vec<usize> = self.elems.iter().map(|&b| self.n + 1 - b).collect();
        elems.reverse();
        CellIndex { n: self.n, elems }
    }

    /// The partition `nu(I)`: part `j` counts the empty boxes strictly to
    /// the right of the `j`-th ball, `nu_j = (n - b_j) - (i - j)`.
    pub fn partition(&self) -> Partition {
        let i = self.elems.len();
        let parts = self
            .elems
            .iter()
            .enumerate()
            .map(|(k, &b)| (self.n - b) - (i - (k + 1)))
            .take_while(|&p| p > 0)
            .collect();
        Partition::new(parts)
    }

    /// Embed into the semi-infinite picture at the requested virtual
    /// dimension: balls land at `b + s` with shift `s = i - n - 1 - d`, and
    /// every box from `n + 1 + s` up is filled.
    pub fn semi_infinite(&self, d_target: i64) -> SemiInfiniteCell {
        let i = self.size() as i64;
        let s = i - self.n as i64 - 1 - d_target;
        let prefix = self.elems.iter().map(|&b| b as i64 + s).collect();
        SemiInfiniteCell::new(prefix, d_target).expect("shifted cell is a valid prefix")
    }
}

impl fmt::Display for CellIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bitstring())
    }
}

/// Path counts `m(I)` for every cell of `C_n^i`, by dynamic programming in
/// balls-in-boxes order (moves increase length by exactly one, so cells can
/// be processed level by level).
pub fn path_count_table(n: usize, i: usize) -> BTreeMap<CellIndex, BigUint> {
    let mut cells = CellIndex::all(n, i);
    cells.sort_by_key(|c| (c.length(), c.clone()));
    let mut table: BTreeMap<CellIndex, BigUint> = BTreeMap::new();
    table.insert(CellIndex::minimal(n, i), BigUint::one());
    for cell in cells {
        let m: BigUint = cell
            .predecessors()
            .iter()
            .map(|p| table.get(p).cloned().unwrap_or_else(BigUint::zero))
            .sum();
        if !m.is_zero() {
            table.insert(cell, m);
        }
    }
    table
}

/// The level counts `|C_n^i(j)|` for `j = 0 .. i(n-i)`.
pub fn level_sets(n: usize, i: usize) -> Vec<u64> {
    assert!(i >= 1 && i <= n);
    let mut counts = vec![0u64; i * (n - i) + 1];
    for cell in CellIndex::all(n, i) {
        counts[cell.length()] += 1;
    }
    counts
}

/// The hook lemma: `h(nu(I)) = m(I') / l(I')!` with `I'` the transposed cell.
pub fn hook_lemma_check(cell: &CellIndex) -> bool {
    let t = cell.transpose();
    let lhs: crate::Rat = cell.partition().hook_factor();
    let m = crate::Rat::from(BigInt::from(t.path_count()));
    let rhs = m / factorial::<crate::Rat>(t.length());
    lhs == rhs
}

/// A partition: weakly decreasing positive parts; empty is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from parts, which must be weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight `|nu|`, the number of boxes of the Young diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, k: usize) -> usize {
        self.parts.get(k).copied().unwrap_or(0)
    }

    /// Conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Hook lengths of all boxes, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p {
                out.push((p - c) + (conj.part(c) - r) - 1);
            }
        }
        out
    }

    /// The hook factor, via the a-sequence of the virtual-dimension-0 cell
    /// `a_j = j - nu_j`:
    /// `h = prod_{i<j} (a_j - a_i) / prod_j (r - a_j)!`.
    /// Cross-checked (debug builds) against `1 / prod(hook lengths)`.
    pub fn hook_factor<T: Scalar>(&self) -> T {
        let h = self.hook_factor_by_a_products();
        debug_assert_eq!(h, self.hook_factor_by_hooks::<T>());
        h
    }

    fn hook_factor_by_a_products<T: Scalar>(&self) -> T {
        let r = self.parts.len();
        if r == 0 {
            return T::one();
        }
        let a: Vec<i64> = (0..r).map(|j| j as i64 - self.parts[j] as i64).collect();
        let mut num = T::one();
        for j in 0..r {
            for i in 0..j {
                num = num * int::<T>(a[j] - a[i]);
            }
        }
        let mut den = T::one();
        for &aj in &a {
            let arg = (r as i64 - 1) - aj;
            den = den * factorial::<T>(arg as usize);
        }
        num / den
    }

    /// `1 / prod(hook lengths)`, the second route to the hook factor.
    pub fn hook_factor_by_hooks<T: Scalar>(&self) -> T {
        let mut den = T::one();
        for h in self.hook_lengths() {
            den = den * int::<T>(h as i64);
        }
        T::one() / den
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A cell of the semi-infinite Grassmannian: an increasing set
/// `S = {a_0, a_1, ..}` of integers with `a_j = j - d` for large `j`. Only
/// the finite prefix before the canonical tail is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiInfiniteCell {
    prefix: Vec<i64>,
    virtual_dim: i64,
}

impl SemiInfiniteCell {
    /// Build from a prefix `a_0 < a_1 < ..` and virtual dimension `d`; the
    /// implied tail is `a_j = j - d` from index `prefix.len()` on. Trailing
    /// prefix entries that already match the tail are trimmed.
    pub fn new(mut prefix: Vec<i64>, virtual_dim: i64) -> Result<Self> {
        for w in prefix.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Dimension(format!(
                    "prefix {prefix:?} is not strictly increasing"
                )));
            }
        }
        for (j, &a) in prefix.iter().enumerate() {
            if a > j as i64 - virtual_dim {
                return Err(Error::Dimension(format!(
                    "prefix entry a_{j} = {a} exceeds the tail value {}",
                    j as i64 - virtual_dim
                )));
            }
        }
        while let Some(&last) = prefix.last() {
            if last == (prefix.len() as i64 - 1) - virtual_dim {
                prefix.pop();
            } else {
                break;
            }
        }
        Ok(SemiInfiniteCell {
            prefix,
            virtual_dim,
        })
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    pub fn virtual_dim(&self) -> i64 {
        self.virtual_dim
    }

    pub fn contains(&self, v: i64) -> bool {
        self.prefix.contains(&v) || v + self.virtual_dim >= self.prefix.len() as i64
    }

    /// Recompute the virtual dimension from its definition
    /// `d = |S \ N| - |N \ S|` and compare with the stored value.
    pub fn virtual_dim_consistent(&self) -> bool {
        let len = self.prefix.len() as i64;
        let d = self.virtual_dim;
        let neg_prefix = self.prefix.iter().filter(|&&a| a < 0).count() as i64;
        let neg_tail = (d - len).max(0);
        let missing_naturals = (0..(len - d).max(0))
            .filter(|&v| !self.prefix.contains(&v))
            .count() as i64;
        (neg_prefix + neg_tail) - missing_naturals == d
    }

    /// The partition `lambda_j = (j - d) - a_j` over the prefix.
    pub fn partition(&self) -> Partition {
        let d = self.virtual_dim;
        let parts = self
            .prefix
            .iter()
            .enumerate()
            .map(|(j, &a)| ((j as i64 - d) - a) as usize)
            .collect();
        Partition::new(parts)
    }
}

impl fmt::Display for SemiInfiniteCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for a in &self.prefix {
            write!(f, "{a}, ")?;
        }
        let t0 = self.prefix.len() as i64 - self.virtual_dim;
        write!(f, "{t0}, {}, ..}}", t0 + 1)
    }
}
