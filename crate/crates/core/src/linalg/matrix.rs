use std::collections::BTreeMap;

use super::field::Field;

/// Dense row-major matrix over a field's element type.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self {
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                assert_eq!(c.len(), rows, "ragged column");
                data.push(c[i].clone());
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_i64_rows<F: Field<Elem = E>>(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(cols, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_columns(self.cols, &self.row_vecs())
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = field.mul(a, &other[(k, j)]);
                    out[(i, j)] = field.add(&out[(i, j)], &prod);
                }
            }
        }
        out
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| dot(field, self.row(i), v))
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(other.row(i));
                r
            })
            .collect();
        Self::from_rows(self.cols + other.cols, rows)
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| field.mul(c, x)).collect(),
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }
}

impl<E> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;

    fn index(&self, (i, j): (usize, usize)) -> &E {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if field.is_zero(x) || field.is_zero(y) {
            continue;
        }
        acc = field.add(&acc, &field.mul(x, y));
    }
    acc
}

/// Row space of a growing set of vectors, kept in echelon form keyed by pivot
/// column. Each stored row has a unit pivot and zeros left of it.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    width: usize,
    rows: BTreeMap<usize, Vec<F::Elem>>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: &F, width: usize) -> Self {
        EchelonBasis {
            field: field.clone(),
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.width).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Reduces `v` in place to the unique representative of its coset that
    /// vanishes on every pivot column.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        assert_eq!(v.len(), self.width);
        let f = &self.field;
        for (&p, row) in &self.rows {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for j in p..self.width {
                if !f.is_zero(&row[j]) {
                    v[j] = f.sub_mul(&v[j], &c, &row[j]);
                }
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        self.reduce(&mut v);
        let f = &self.field;
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]);
        for x in v.iter_mut().skip(p) {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        self.rows.insert(p, v);
        true
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &Vec<F::Elem>> {
        self.rows.values()
    }
}

/// Reduced row echelon form of `m` with its pivot columns.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&a[(i, c)])) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(&a[(r, c)]);
        for j in c..cols {
            a[(r, j)] = field.mul(&a[(r, j)], &inv);
        }
        for i in 0..rows {
            if i == r || field.is_zero(&a[(i, c)]) {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                if !field.is_zero(&a[(r, j)]) {
                    a[(i, j)] = field.sub_mul(&a[(i, j)], &factor, &a[(r, j)]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    // insert along the shorter side
    if m.rows >= m.cols {
        let mut basis = EchelonBasis::new(field, m.cols);
        for i in 0..m.rows {
            basis.insert(m.row(i).to_vec());
            if basis.rank() == m.cols {
                break;
            }
        }
        basis.rank()
    } else {
        let mut basis = EchelonBasis::new(field, m.rows);
        for j in 0..m.cols {
            basis.insert(m.column(j));
            if basis.rank() == m.rows {
                break;
            }
        }
        basis.rank()
    }
}

/// Columns spanning the null space `{x : m x = 0}`.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let (r, pivots) = rref(field, m);
    let cols = m.cols;
    let mut is_pivot = vec![None; cols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| is_pivot[c].is_none()) {
        let mut x = vec![field.zero(); cols];
        x[free] = field.one();
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = field.neg(&r[(row, free)]);
        }
        basis.push(x);
    }
    Matrix::from_columns(cols, &basis)
}

/// A maximal independent subset of the columns of `m`.
pub fn image_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let (_, pivots) = rref(field, m);
    let cols: Vec<_> = pivots.iter().map(|&c| m.column(c)).collect();
    Matrix::from_columns(m.rows, &cols)
}

/// Dimension of `ambient / span(columns of m)`.
pub fn quotient_dim<F: Field>(field: &F, ambient_dim: usize, m: &Matrix<F::Elem>) -> usize {
    assert_eq!(m.rows, ambient_dim, "generators must live in the ambient space");
    ambient_dim - rank(field, m)
}

/// Some solution of `a x = b`, or `None` when `b` is outside the column space.
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.rows, b.len());
    let aug = a.hstack(&Matrix::from_columns(b.len(), &[b.to_vec()]));
    let (r, pivots) = rref(field, &aug);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![field.zero(); a.cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = r[(row, a.cols)].clone();
    }
    Some(x)
}

/// Coordinates with respect to a fixed list of independent columns, computed
/// from one precomputed elimination.
#[derive(Clone, Debug)]
pub struct ColumnCoordinates<F: Field> {
    field: F,
    ncols: usize,
    /// Row operations `E` with `E a = rref(a)`.
    transform: Matrix<F::Elem>,
}

impl<F: Field> ColumnCoordinates<F> {
    /// `a` must have linearly independent columns.
    pub fn new(field: &F, a: &Matrix<F::Elem>) -> Self {
        let aug = a.hstack(&Matrix::identity(field, a.rows));
        let (r, pivots) = rref(field, &aug);
        let ncols = a.cols;
        assert!(
            pivots.len() >= ncols && pivots[..ncols].iter().copied().eq(0..ncols),
            "columns are not independent"
        );
        let rows = (0..a.rows)
            .map(|i| r.row(i)[ncols..].to_vec())
            .collect();
        ColumnCoordinates {
            field: field.clone(),
            ncols,
            transform: Matrix::from_rows(a.rows, rows),
        }
    }

    /// Coefficients `x` with `a x = b`, or `None` if `b` is not in the span.
    pub fn coordinates(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let y = self.transform.apply(&self.field, b);
        if y[self.ncols..].iter().any(|x| !self.field.is_zero(x)) {
            return None;
        }
        Some(y[..self.ncols].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    #[test]
    fn rank_of_trivial_matrices() {
        let f = Rationals;
        assert_eq!(rank(&f, &Matrix::zeros(&f, 3, 5)), 0);
        assert_eq!(rank(&f, &Matrix::identity(&f, 4)), 4);
        assert_eq!(rank(&f, &Matrix::zeros(&f, 0, 3)), 0);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(kernel_basis(&f, &Matrix::identity(&f, 3)).cols(), 0);
        let k = kernel_basis(&f, &Matrix::zeros(&f, 2, 3));
        assert_eq!((k.rows(), k.cols()), (3, 3));
    }

    #[test]
    fn characteristic_dependent_rank() {
        let m = [[1i64, 1, 0], [0, 1, 1], [1, 0, 1]];
        let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
        let q = Rationals;
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(rank(&q, &Matrix::from_i64_rows(&q, &rows)), 3);
        assert_eq!(rank(&f2, &Matrix::from_i64_rows(&f2, &rows)), 2);
    }

    #[test]
    fn solve_and_coordinates_agree() {
        let f = Rationals;
        let a = Matrix::from_i64_rows(&f, &[&[1, 0], &[1, 1], &[0, 2]]);
        let b: Vec<_> = [3i64, 5, 4].iter().map(|&x| f.from_i64(x)).collect();
        let x = solve(&f, &a, &b).unwrap();
        assert_eq!(x, vec![f.from_i64(3), f.from_i64(2)]);
        let coords = ColumnCoordinates::new(&f, &a);
        assert_eq!(coords.coordinates(&b).unwrap(), x);
        let off: Vec<_> = [1i64, 0, 0].iter().map(|&x| f.from_i64(x)).collect();
        assert!(coords.coordinates(&off).is_none());
        assert!(solve(&f, &a, &off).is_none());
    }

    #[test]
    fn echelon_reduction_is_canonical() {
        let f = PrimeField::new(101).unwrap();
        let mut basis = EchelonBasis::new(&f, 3);
        assert!(basis.insert(vec![0, 2, 4]));
        assert!(!basis.insert(vec![0, 1, 2]));
        assert!(basis.insert(vec![1, 1, 1]));
        assert_eq!(basis.free_columns(), vec![2]);
        let mut v = vec![5, 7, 9];
        basis.reduce(&mut v);
        assert_eq!(&v[..2], &[0, 0]);
    }
}
