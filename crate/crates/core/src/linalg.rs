//! Exact dense linear algebra over the rationals.
//!
//! Elimination runs fraction-free (Bareiss) on an integer copy of the
//! matrix, with rows scaled by the lcm of their denominators, and only the
//! final back-substitution to reduced echelon form works in rationals.
//! The pivot is always the first nonzero entry found scanning down the
//! current column, which keeps every result deterministic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r);
        }
        RationalMatrix {
            rows: nrows,
            cols,
            entries,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Zero-row matrix with a fixed number of columns.
    pub fn empty(cols: usize) -> Self {
        RationalMatrix {
            rows: 0,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<Rational>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.entries.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Row echelon data: the integer echelon rows and their pivot columns.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_rows(m: &RationalMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free forward elimination. Every division is exact.
fn bareiss(m: &RationalMatrix) -> Echelon {
    let mut a = integer_rows(m);
    let (nrows, ncols) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            let factor = a[i][c].clone();
            for j in c..ncols {
                let v = &a[r][c] * &a[i][j] - &factor * &a[r][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

pub fn rank(m: &RationalMatrix) -> usize {
    bareiss(m).pivots.len()
}

/// Reduced row-echelon form, same shape as `m`, zero rows at the bottom.
pub fn rref(m: &RationalMatrix) -> RationalMatrix {
    let (rows, _) = rref_rows(m);
    let mut out = RationalMatrix::zeros(m.rows, m.cols);
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    out
}

fn rref_rows(m: &RationalMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let ech = bareiss(m);
    let mut rows: Vec<Vec<Rational>> = ech
        .rows
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect();
    let pivots = ech.pivots;
    for (i, &c) in pivots.iter().enumerate().rev() {
        let inv = rows[i][c].recip();
        for v in rows[i].iter_mut() {
            *v *= &inv;
        }
        let (above, rest) = rows.split_at_mut(i);
        let pivot_row = &rest[0];
        for row in above {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &factor * p;
            }
        }
    }
    (rows, pivots)
}

/// Basis of the right kernel `{v : M v = 0}`.
///
/// The basis vectors, stacked as rows, are themselves in reduced echelon
/// form, which fixes both the basis and its scaling.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let (rows, pivots) = rref_rows(m);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut raw = RationalMatrix::empty(m.cols);
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); m.cols];
        v[free] = Rational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[i][free].clone();
        }
        raw.push_row(v);
    }
    let normal = rref(&raw);
    let basis: Vec<Vec<Rational>> = (0..normal.rows).map(|r| normal.row(r).to_vec()).collect();

    assert_eq!(pivots.len() + basis.len(), m.cols, "rank-nullity violated");
    for v in &basis {
        assert!(
            m.mul_vec(v).iter().all(Zero::is_zero),
            "kernel vector not annihilated"
        );
    }
    basis
}

/// Row space grown one vector at a time, kept in echelon form with unit
/// pivots.
#[derive(Debug, Clone)]
pub struct EchelonSpan {
    cols: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonSpan {
    pub fn new(cols: usize) -> Self {
        EchelonSpan {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn residue(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.residue(v).iter().all(Zero::is_zero)
    }

    /// Add `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.residue(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((p, r));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;
    use proptest::prelude::*;

    /// Textbook Gauss-Jordan over the rationals, no fraction-free tricks.
    fn naive_rref(m: &RationalMatrix) -> (RationalMatrix, usize) {
        let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        let mut r = 0;
        for c in 0..m.cols() {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for v in a[r].iter_mut() {
                *v *= &inv;
            }
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    let pivot_row = a[r].clone();
                    for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= &f * p;
                    }
                }
            }
            r += 1;
            if r == a.len() {
                break;
            }
        }
        let mut out = RationalMatrix::zeros(m.rows(), m.cols());
        for (i, row) in a.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        (out, r)
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(rank(&RationalMatrix::identity(5)), 5);
        assert_eq!(rank(&RationalMatrix::zeros(4, 6)), 0);
        assert!(kernel_basis(&RationalMatrix::identity(5)).is_empty());
        assert_eq!(
            rref(&RationalMatrix::identity(3)),
            RationalMatrix::identity(3)
        );
    }

    #[test]
    fn one_by_two_kernel() {
        let k = kernel_basis(&RationalMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k, vec![vec![rational(1), rational(-1)]]);
    }

    #[test]
    fn rank_one_rref() {
        let m = RationalMatrix::from_i64(&[&[2, 4], &[1, 2]]);
        assert_eq!(rref(&m), RationalMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(rref(&rref(&m)), rref(&m));
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(rank(&RationalMatrix::empty(3)), 0);
        assert_eq!(kernel_basis(&RationalMatrix::empty(3)).len(), 3);
        assert_eq!(rank(&RationalMatrix::zeros(3, 0)), 0);
        assert!(kernel_basis(&RationalMatrix::zeros(3, 0)).is_empty());
    }

    fn matrix_strategy() -> impl Strategy<Value = RationalMatrix> {
        (1usize..=12, 1usize..=20).prop_flat_map(|(r, c)| {
            // many zeros so rank-deficient cases are common
            prop::collection::vec(
                prop_oneof![3 => Just((0i64, 1i64)), 2 => (-9i64..=9, 1i64..=4)],
                r * c,
            )
            .prop_map(move |vals| {
                let rows = vals
                    .chunks(c)
                    .map(|ch| {
                        ch.iter()
                            .map(|&(n, d)| Rational::new(n.into(), d.into()))
                            .collect()
                    })
                    .collect();
                RationalMatrix::from_rows(rows)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn fraction_free_matches_naive(m in matrix_strategy()) {
            let (naive, naive_rank) = naive_rref(&m);
            prop_assert_eq!(rref(&m), naive);
            prop_assert_eq!(rank(&m), naive_rank);
            let k = kernel_basis(&m);
            prop_assert_eq!(k.len() + naive_rank, m.cols());
        }

        #[test]
        fn incremental_span_tracks_rank(m in matrix_strategy()) {
            let mut span = EchelonSpan::new(m.cols());
            for r in 0..m.rows() {
                span.insert(m.row(r));
            }
            prop_assert_eq!(span.dim(), rank(&m));
            for r in 0..m.rows() {
                prop_assert!(span.contains(m.row(r)));
            }
        }

        #[test]
        fn rref_is_idempotent(m in matrix_strategy()) {
            let r = rref(&m);
            prop_assert_eq!(rref(&r), r.clone());
            prop_assert_eq!(rank(&m.transpose()), rank(&m));
        }
    }
}
