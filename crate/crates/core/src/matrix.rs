//! Dense exact matrices, row reduction, kernels and canonical subspaces.
//!
//! A matrix of shape `b × a` is a linear map `k^a → k^b`: column `j` is
//! the image of the basis vector `e_j`. Entries are stored row-major.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{shape, Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape {
                what: "matrix entries".into(),
                expected: (rows * cols, 1),
                found: (data.len(), 1),
            });
        }
        if let Some(bad) = data.iter().find(|s| !field.contains(s)) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Self { field, rows, cols, data })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from small integers, reduced into the field.
    pub fn from_i64(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "from_i64: wrong entry count");
        Self {
            field,
            rows,
            cols,
            data: entries.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    /// Builds a matrix from a function of `(row, col)`.
    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { field, rows, cols, data }
    }

    /// Column vector.
    pub fn column_vector(field: FieldSpec, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Self {
            field,
            rows: n,
            cols: 1,
            data: entries,
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        Self::from_fn(field, rows, cols, |r, c| columns[c][r].clone())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(self.field.contains(&v), "set: element outside {}", self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Self {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Product `self · other`, failing on incompatible shapes or fields.
    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(Error::Shape {
                what: "matrix product".into(),
                expected: (self.cols, other.cols),
                found: other.shape(),
            });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let base = i * other.cols;
                for (j, b) in brow.iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[base + j];
                    *slot = &*slot + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Rows `r0..r0+rows`, columns `c0..c0+cols`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "submatrix out of range");
        Self::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Self::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Self::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        Self::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let z = self.field.zero();
        Self::from_fn(
            self.field,
            self.rows + other.rows,
            self.cols + other.cols,
            |r, c| match (r < self.rows, c < self.cols) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => other.get(r - self.rows, c - self.cols).clone(),
                _ => z.clone(),
            },
        )
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(found) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(found, prow);
            let inv = m.get(prow, col).inverse().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(prow, c) * &inv;
                m.data[prow * m.cols + c] = v;
            }
            for r in 0..m.rows {
                if r == prow || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let p = m.get(prow, c);
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &(&factor * p);
                    m.data[r * m.cols + c] = v;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref_with_pivots();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    /// Kronecker product: `(f ⊗ g)(e_i ⊗ e_j) = f(e_i) ⊗ g(e_j)`, with
    /// `e_i ⊗ e_j ↦ i·b + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        kron(self, other)
    }

    /// First column where `self` and `other` differ.
    pub fn first_differing_column(&self, other: &Matrix) -> Option<usize> {
        assert_eq!(self.shape(), other.shape(), "compare: shape mismatch");
        (0..self.cols).find(|&c| (0..self.rows).any(|r| self.get(r, c) != other.get(r, c)))
    }
}

/// Kronecker product of two matrices over the same field.
pub fn kron(f: &Matrix, g: &Matrix) -> Matrix {
    assert_eq!(f.field, g.field, "kron: field mismatch");
    let (fr, fc) = f.shape();
    let (gr, gc) = g.shape();
    let mut out = Matrix::zeros(f.field, fr * gr, fc * gc);
    let cols = fc * gc;
    for r1 in 0..fr {
        for c1 in 0..fc {
            let a = f.get(r1, c1);
            if a.is_zero() {
                continue;
            }
            for r2 in 0..gr {
                for c2 in 0..gc {
                    let b = g.get(r2, c2);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[(r1 * gr + r2) * cols + c1 * gc + c2] = a * b;
                }
            }
        }
    }
    out
}

/// Reduced row echelon form.
pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

/// Canonical basis of `{v : m·v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref_with_pivots();
    let n = m.cols;
    let field = m.field;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free);
        }
        vectors.push(v);
    }
    Subspace::span(field, n, &vectors)
}

/// A subspace of `k^n`, stored as the nonzero rows of its RREF basis.
///
/// Equality of subspaces is equality of these canonical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the given vectors.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let m = Matrix::from_fn(field, vectors.len(), ambient_dim, |r, c| vectors[r][c].clone());
        Self::row_space(&m)
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref_with_pivots();
        let basis = r.submatrix(0, 0, pivots.len(), m.cols);
        Subspace {
            ambient_dim: m.cols,
            basis,
            pivots,
        }
    }

    /// Column space (image) of `m`.
    pub fn column_space(m: &Matrix) -> Subspace {
        Self::row_space(&m.transpose())
    }

    pub fn zero(field: FieldSpec, n: usize) -> Subspace {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Subspace {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Basis vectors as rows, in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.row(r).to_vec()).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Inclusion `k^dim → k^ambient`: columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Coordinates with respect to the basis: reads off pivot entries.
    /// A left inverse of [`Subspace::inclusion`].
    pub fn coordinate_map(&self) -> Matrix {
        let f = self.field();
        Matrix::from_fn(f, self.dim(), self.ambient_dim, |r, c| {
            if self.pivots[r] == c {
                f.one()
            } else {
                f.zero()
            }
        })
    }

    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "contains: dimension mismatch");
        let coords = self.coordinates(v);
        let back = self.inclusion().apply(&coords);
        back.as_slice() == v
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// Image of this subspace under `map`.
    pub fn image(&self, map: &Matrix) -> Subspace {
        Self::column_space(&(map * &self.inclusion()))
    }
}

/// Surjection `k^n → k^(n - dim s)` with kernel exactly `s`.
///
/// The complement of `s` is spanned by the non-pivot standard vectors;
/// the map returns the non-pivot coordinates of `v - Σ v[p_k]·b_k`.
pub fn quotient_map(ambient_dim: usize, s: &Subspace) -> Result<Matrix> {
    shape("quotient_map ambient", (ambient_dim, 1), (s.ambient_dim, 1))?;
    let f = s.field();
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &s.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let mut q = Matrix::zeros(f, free.len(), ambient_dim);
    for (t, &j) in free.iter().enumerate() {
        q.set(t, j, f.one());
        for (k, &p) in s.pivots.iter().enumerate() {
            q.set(t, p, -s.basis.get(k, j));
        }
    }
    Ok(q)
}

impl Mul for &Matrix {
    type Output = Matrix;
    /// Panics on incompatible shapes; see [`Matrix::checked_mul`].
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs)
            .unwrap_or_else(|e| panic!("{e} ({:?} · {:?})", self.shape(), rhs.shape()))
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "add: shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "sub: shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
