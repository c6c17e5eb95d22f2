//! Coalgebras, algebras, the standard examples, and the convolution
//! algebra `C*`.

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::error::{shape, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hom::{id, swap};
use crate::matrix::{kron, Matrix};

/// A coalgebra `(C, Δ, ε)` with `Δ` an `n² × n` and `ε` a `1 × n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coalgebra {
    dim: usize,
    delta: Matrix,
    eps: Matrix,
}

impl Coalgebra {
    pub fn new(dim: usize, delta: Matrix, eps: Matrix) -> Result<Self> {
        shape("comultiplication", (dim * dim, dim), delta.shape())?;
        shape("counit", (1, dim), eps.shape())?;
        if delta.field() != eps.field() {
            return Err(Error::FieldMismatch(delta.field(), eps.field()));
        }
        Ok(Self { dim, delta, eps })
    }

    pub fn field(&self) -> FieldSpec {
        self.delta.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn eps(&self) -> &Matrix {
        &self.eps
    }

    pub fn check(&self) -> CertReport {
        check_coalgebra(self)
    }

    /// The co-opposite coalgebra, `Δ^cop = τ ∘ Δ`.
    pub fn opposite(&self) -> Coalgebra {
        let n = self.dim;
        Coalgebra {
            dim: n,
            delta: &swap(self.field(), n, n) * &self.delta,
            eps: self.eps.clone(),
        }
    }

    /// `C ⊕ D` with the block comultiplication.
    pub fn direct_sum(&self, other: &Coalgebra) -> Result<Coalgebra> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        let (n, m) = (self.dim, other.dim);
        let t = n + m;
        let f = self.field();
        let mut delta = Matrix::zeros(f, t * t, t);
        for col in 0..n {
            for i in 0..n {
                for j in 0..n {
                    delta.set(i * t + j, col, self.delta.get(i * n + j, col).clone());
                }
            }
        }
        for col in 0..m {
            for i in 0..m {
                for j in 0..m {
                    delta.set((n + i) * t + n + j, n + col, other.delta.get(i * m + j, col).clone());
                }
            }
        }
        Coalgebra::new(t, delta, self.eps.hstack(&other.eps))
    }

    /// `C ⊗ D` with `Δ(c⊗d) = Σ (c₁⊗d₁) ⊗ (c₂⊗d₂)`; basis `c_i ⊗ d_j ↦ i·m + j`.
    pub fn tensor(&self, other: &Coalgebra) -> Result<Coalgebra> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        let f = self.field();
        let (n, m) = (self.dim, other.dim);
        let middle = kron(&kron(&id(f, n), &swap(f, n, m)), &id(f, m));
        let delta = &middle * &kron(&self.delta, &other.delta);
        Coalgebra::new(n * m, delta, kron(&self.eps, &other.eps))
    }

    /// `Δ(v)` in `C ⊗ C` coordinates.
    pub fn comultiply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.delta.apply(v)
    }

    fn require_certified(&self, what: &str) -> Result<()> {
        match self.check().first_failure() {
            None => Ok(()),
            Some(c) => Err(Error::NotCertified {
                what: what.to_string(),
                failed: c.label(),
            }),
        }
    }
}

/// Coassociativity and both counit laws.
pub fn check_coalgebra(c: &Coalgebra) -> CertReport {
    let f = c.field();
    let n = c.dim;
    let i = id(f, n);
    let d = &c.delta;
    let left_assoc = &kron(d, &i) * d;
    let right_assoc = &kron(&i, d) * d;
    let left_counit = &kron(&c.eps, &i) * d;
    let right_counit = &kron(&i, &c.eps) * d;
    CertReport::new(vec![
        AxiomCheck::compare(Axiom::Coassociativity, &left_assoc, &right_assoc),
        AxiomCheck::compare(Axiom::LeftCounit, &left_counit, &i),
        AxiomCheck::compare(Axiom::RightCounit, &right_counit, &i),
    ])
}

/// `Δ(e_i) = e_i ⊗ e_i`, `ε(e_i) = 1`: the coalgebra of functions on `n` points.
pub fn grouplike(field: FieldSpec, n: usize) -> Coalgebra {
    let mut delta = Matrix::zeros(field, n * n, n);
    for i in 0..n {
        delta.set(i * n + i, i, field.one());
    }
    let eps = Matrix::from_fn(field, 1, n, |_, _| field.one());
    Coalgebra { dim: n, delta, eps }
}

/// The matrix coalgebra on `e_{ij}` (index `i·n + j`):
/// `Δ(e_{ij}) = Σ_k e_{ik} ⊗ e_{kj}`, `ε(e_{ij}) = δ_{ij}`.
pub fn matrix_coalgebra(field: FieldSpec, n: usize) -> Coalgebra {
    let d = n * n;
    let mut delta = Matrix::zeros(field, d * d, d);
    let mut eps = Matrix::zeros(field, 1, d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                delta.set((i * n + k) * d + (k * n + j), i * n + j, field.one());
            }
        }
        eps.set(0, i * n + i, field.one());
    }
    Coalgebra { dim: d, delta, eps }
}

/// Divided powers `c_0..c_N`: `Δ(c_m) = Σ_{i+j=m} c_i ⊗ c_j`, `ε(c_m) = δ_{m,0}`.
pub fn divided_power(field: FieldSpec, top: usize) -> Coalgebra {
    let d = top + 1;
    let mut delta = Matrix::zeros(field, d * d, d);
    for m in 0..d {
        for i in 0..=m {
            delta.set(i * d + (m - i), m, field.one());
        }
    }
    let mut eps = Matrix::zeros(field, 1, d);
    eps.set(0, 0, field.one());
    Coalgebra { dim: d, delta, eps }
}

/// The trigonometric coalgebra on `(c, s)`:
/// `Δ(c) = c⊗c − s⊗s`, `Δ(s) = s⊗c + c⊗s`, `ε(c) = 1`, `ε(s) = 0`.
pub fn trig(field: FieldSpec) -> Result<Coalgebra> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedField {
            what: "trigonometric coalgebra".into(),
            field,
        });
    }
    #[rustfmt::skip]
    let delta = Matrix::from_i64(field, 4, 2, &[
        1, 0,
        0, 1,
        0, 1,
        -1, 0,
    ]);
    let eps = Matrix::from_i64(field, 1, 2, &[1, 0]);
    Ok(Coalgebra { dim: 2, delta, eps })
}

/// Builds a standard coalgebra from `grouplike:n`, `matrix:n`,
/// `divided_power:n` or `trig`.
pub fn by_name(field: FieldSpec, name: &str) -> Result<Coalgebra> {
    let unknown = || Error::UnknownName {
        what: "coalgebra".into(),
        name: name.into(),
    };
    if name == "trig" {
        return trig(field);
    }
    let (family, arg) = name.split_once(':').ok_or_else(unknown)?;
    let n: usize = arg.parse().map_err(|_| unknown())?;
    match family {
        "grouplike" => Ok(grouplike(field, n)),
        "matrix" => Ok(matrix_coalgebra(field, n)),
        "divided_power" => Ok(divided_power(field, n)),
        _ => Err(unknown()),
    }
}

/// An associative unital algebra `(A, m, u)`: `m` is `n × n²`, `u` is `n × 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    dim: usize,
    mult: Matrix,
    unit: Matrix,
}

impl Algebra {
    pub fn new(dim: usize, mult: Matrix, unit: Matrix) -> Result<Self> {
        shape("multiplication", (dim, dim * dim), mult.shape())?;
        shape("unit", (dim, 1), unit.shape())?;
        if mult.field() != unit.field() {
            return Err(Error::FieldMismatch(mult.field(), unit.field()));
        }
        Ok(Self { dim, mult, unit })
    }

    pub fn field(&self) -> FieldSpec {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn check(&self) -> CertReport {
        check_algebra(self)
    }

    /// `a · b`.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let t = kron(
            &Matrix::column_vector(self.field(), a.to_vec()),
            &Matrix::column_vector(self.field(), b.to_vec()),
        );
        (&self.mult * &t).column(0)
    }

    /// A pair of basis indices `(i, j)` with `e_i e_j ≠ e_j e_i`, if any.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.dim;
        let flipped = &self.mult * &swap(self.field(), n, n);
        self.mult
            .first_differing_column(&flipped)
            .map(|c| (c / n, c % n))
    }

    /// The coalgebra whose dual this algebra is: `Δ = mᵀ`, `ε = uᵀ`.
    pub fn predual(&self) -> Coalgebra {
        Coalgebra {
            dim: self.dim,
            delta: self.mult.transpose(),
            eps: self.unit.transpose(),
        }
    }
}

/// Associativity and both unit laws.
pub fn check_algebra(a: &Algebra) -> CertReport {
    let f = a.field();
    let i = id(f, a.dim);
    let m = &a.mult;
    let left_assoc = m * &kron(m, &i);
    let right_assoc = m * &kron(&i, m);
    let left_unit = m * &kron(&a.unit, &i);
    let right_unit = m * &kron(&i, &a.unit);
    CertReport::new(vec![
        AxiomCheck::compare(Axiom::Associativity, &left_assoc, &right_assoc),
        AxiomCheck::compare(Axiom::LeftUnit, &left_unit, &i),
        AxiomCheck::compare(Axiom::RightUnit, &right_unit, &i),
    ])
}

/// The convolution algebra `C*`: `m = Δ*` read through `(C⊗C)* = C*⊗C*`,
/// `u = ε*`. Requires a certified coalgebra.
pub fn dual_algebra(c: &Coalgebra) -> Result<Algebra> {
    c.require_certified("coalgebra")?;
    Algebra::new(c.dim, c.delta.transpose(), c.eps.transpose())
}
