//! Coordinate conventions for tensors, Hom-spaces and duals, and the
//! canonical reshuffle isomorphisms built on them.
//!
//! Every module of the crate uses exactly these identifications:
//!
//! * **tensor**: `e_i ⊗ e_j ∈ k^a ⊗ k^b` has coordinate `i·b + j`;
//! * **hom**: `Hom(k^a, k^b) ≅ k^(b·a)` by column stacking, the entry
//!   `M[r, c]` sitting at coordinate `c·b + r`;
//! * **dual**: `(k^n)* ≅ k^n` through the dual basis, and `f* = fᵀ`.
//!
//! With these choices the canonical map `(A ⊗ B)* → A* ⊗ B*`, the double
//! dual `X → X**`, and `Hom(A, Z)* ≅ Hom(A*, Z*)` are all the identity on
//! coordinates.

use crate::field::{FieldSpec, Scalar};
use crate::matrix::{kron, Matrix};

/// Column-stacking `vec`: entry `(r, c)` goes to `c·rows + r`.
pub fn vec(m: &Matrix) -> Vec<Scalar> {
    let (rows, cols) = m.shape();
    let mut out = Vec::with_capacity(rows * cols);
    for c in 0..cols {
        for r in 0..rows {
            out.push(m.get(r, c).clone());
        }
    }
    out
}

/// Inverse of [`vec`] for a `rows × cols` matrix.
pub fn unvec(field: FieldSpec, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
    assert_eq!(v.len(), rows * cols, "unvec: length mismatch");
    Matrix::from_fn(field, rows, cols, |r, c| v[c * rows + r].clone())
}

/// Matrix of a linear operator `Hom(k^cols, k^rows) → Hom(k^c', k^r')` on
/// vec-coordinates, obtained by evaluating `op` on every matrix unit.
pub fn hom_operator(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    op: impl Fn(&Matrix) -> Matrix,
) -> Matrix {
    let n = rows * cols;
    let mut images = Vec::with_capacity(n);
    for t in 0..n {
        let mut unit = Matrix::zeros(field, rows, cols);
        unit.set(t % rows, t / rows, field.one());
        images.push(vec(&op(&unit)));
    }
    let out_len = images.first().map_or_else(|| vec(&op(&Matrix::zeros(field, rows, cols))).len(), Vec::len);
    Matrix::from_columns(field, out_len, &images)
}

/// `ψ_{A,Z}^B : Hom(A, Hom(B, Z)) → Hom(A ⊗ B, Z)`, `ψ(γ)(a⊗b) = γ(a)(b)`,
/// as a matrix on vec-coordinates.
///
/// Built by evaluating the defining identity on each basis map γ; under
/// the conventions above it is a permutation matrix.
pub fn psi(field: FieldSpec, a_dim: usize, b_dim: usize, z_dim: usize) -> Matrix {
    hom_operator(field, b_dim * z_dim, a_dim, |gamma| {
        // γ(e_i) ∈ Hom(B, Z) is column i of γ, read back as a z × b matrix.
        let values: Vec<Matrix> = (0..a_dim)
            .map(|i| unvec(field, z_dim, b_dim, &gamma.column(i)))
            .collect();
        Matrix::from_fn(field, z_dim, a_dim * b_dim, |r, col| {
            let (i, j) = (col / b_dim, col % b_dim);
            values[i].get(r, j).clone()
        })
    })
}

/// `ψ̄ : Hom(Hom(C, N), M) → Hom(N, M ⊗ C)`, the dual of
/// `ψ_{M*,N*}^{C*}`: transpose into `Hom(M*, Hom(C*, N*))`, apply ψ, and
/// transpose back out of `Hom(M* ⊗ C*, N*)`.
pub fn psi_bar(field: FieldSpec, m_dim: usize, c_dim: usize, n_dim: usize) -> Matrix {
    let into_dual = commutation(field, m_dim, c_dim * n_dim);
    let reshuffle = psi(field, m_dim, c_dim, n_dim);
    let out_of_dual = commutation(field, n_dim, m_dim * c_dim);
    &(&out_of_dual * &reshuffle) * &into_dual
}

/// The permutation `vec(X) ↦ vec(Xᵀ)` for `rows × cols` matrices `X`.
pub fn commutation(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let n = rows * cols;
    let mut k = Matrix::zeros(field, n, n);
    for r in 0..rows {
        for c in 0..cols {
            // X[r, c] sits at c·rows + r in vec(X) and at r·cols + c in vec(Xᵀ).
            k.set(r * cols + c, c * rows + r, field.one());
        }
    }
    k
}

/// `− ∘ g : Hom(A', Z) → Hom(A, Z)` for `g : A → A'`.
pub fn precompose(g: &Matrix, z_dim: usize) -> Matrix {
    kron(&g.transpose(), &Matrix::identity(g.field(), z_dim))
}

/// `h ∘ − : Hom(A, Z) → Hom(A, Z')` for `h : Z → Z'`.
pub fn postcompose(h: &Matrix, a_dim: usize) -> Matrix {
    kron(&Matrix::identity(h.field(), a_dim), h)
}

/// `f* = fᵀ`.
pub fn dual_map(f: &Matrix) -> Matrix {
    f.transpose()
}

/// The flip `k^a ⊗ k^b → k^b ⊗ k^a`.
pub fn swap(field: FieldSpec, a: usize, b: usize) -> Matrix {
    let n = a * b;
    let mut s = Matrix::zeros(field, n, n);
    for i in 0..a {
        for j in 0..b {
            s.set(j * a + i, i * b + j, field.one());
        }
    }
    s
}

/// Identity on `k^n`.
pub(crate) fn id(field: FieldSpec, n: usize) -> Matrix {
    Matrix::identity(field, n)
}
