//! Left comodules and pseudocompact right contramodules at finite
//! dimension, their certifiers and Hom-space solvers.

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::coalgebra::Coalgebra;
use crate::error::{shape, Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hom::{hom_operator, id, precompose, psi};
use crate::matrix::{kernel_basis, kron, Matrix, Subspace};

/// A left comodule `(X, ρ : X → C ⊗ X)`; `ρ` is `(n·x) × x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    over: Coalgebra,
    dim: usize,
    rho: Matrix,
}

impl Comodule {
    /// Accepts any structure map of the right shape; use
    /// [`Comodule::check`] to certify the axioms.
    pub fn new(over: Coalgebra, dim: usize, rho: Matrix) -> Result<Self> {
        shape("coaction", (over.dim() * dim, dim), rho.shape())?;
        if rho.field() != over.field() {
            return Err(Error::FieldMismatch(over.field(), rho.field()));
        }
        Ok(Self { over, dim, rho })
    }

    /// `C` as a comodule over itself through `Δ`.
    pub fn regular(c: &Coalgebra) -> Comodule {
        Comodule {
            over: c.clone(),
            dim: c.dim(),
            rho: c.delta().clone(),
        }
    }

    /// The zero comodule.
    pub fn zero(c: &Coalgebra) -> Comodule {
        Comodule {
            over: c.clone(),
            dim: 0,
            rho: Matrix::zeros(c.field(), 0, 0),
        }
    }

    pub fn over(&self) -> &Coalgebra {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    pub fn field(&self) -> FieldSpec {
        self.over.field()
    }

    pub fn check(&self) -> CertReport {
        check_comodule(self)
    }

    /// Transport of structure along an invertible `p : X → X'`:
    /// `ρ' = (id ⊗ p) ρ p⁻¹`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Comodule> {
        shape("change of basis", (self.dim, self.dim), p.shape())?;
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Internal("change of basis is singular".into()))?;
        let n = self.over.dim();
        let rho = &(&kron(&id(self.field(), n), p) * &self.rho) * &inv;
        Comodule::new(self.over.clone(), self.dim, rho)
    }

    /// `X ⊕ Y`.
    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        same_coalgebra(&self.over, &other.over)?;
        let n = self.over.dim();
        let (x, y) = (self.dim, other.dim);
        let t = x + y;
        let mut rho = Matrix::zeros(self.field(), n * t, t);
        for c in 0..n {
            for r in 0..x {
                for j in 0..x {
                    rho.set(c * t + r, j, self.rho.get(c * x + r, j).clone());
                }
            }
            for r in 0..y {
                for j in 0..y {
                    rho.set(c * t + x + r, x + j, other.rho.get(c * y + r, j).clone());
                }
            }
        }
        Comodule::new(self.over.clone(), t, rho)
    }

    /// The subcomodule generated by `v`: the span of the `X`-coefficients
    /// of `ρ(v)`.
    pub fn generated_by(&self, v: &[Scalar]) -> Subspace {
        let n = self.over.dim();
        let image = self.rho.apply(v);
        let coefficients: Vec<Vec<Scalar>> = (0..n)
            .map(|c| image[c * self.dim..(c + 1) * self.dim].to_vec())
            .collect();
        Subspace::span(self.field(), self.dim, &coefficients)
    }

    /// Restriction of the coaction to a subcomodule, in the subspace's
    /// RREF basis.
    pub fn restrict(&self, w: &Subspace) -> Result<Comodule> {
        let n = self.over.dim();
        let f = self.field();
        let incl = w.inclusion();
        let image = &self.rho * &incl;
        let proj = kron(&id(f, n), &w.coordinate_map());
        let rho_w = &proj * &image;
        if &kron(&id(f, n), &incl) * &rho_w != image {
            return Err(Error::Internal("subspace is not a subcomodule".into()));
        }
        Comodule::new(self.over.clone(), w.dim(), rho_w)
    }
}

/// Comodule square `(Δ⊗id)ρ = (id⊗ρ)ρ` and triangle `(ε⊗id)ρ = id`.
pub fn check_comodule(x: &Comodule) -> CertReport {
    let f = x.field();
    let c = &x.over;
    let ix = id(f, x.dim);
    let square_lhs = &kron(c.delta(), &ix) * &x.rho;
    let square_rhs = &kron(&id(f, c.dim()), &x.rho) * &x.rho;
    let triangle = &kron(c.eps(), &ix) * &x.rho;
    CertReport::new(vec![
        AxiomCheck::compare(Axiom::ComoduleSquare, &square_lhs, &square_rhs),
        AxiomCheck::compare(Axiom::ComoduleTriangle, &triangle, &ix),
    ])
}

/// A pseudocompact right contramodule `(Z, θ : Hom(C, Z) → Z)`; `θ` is
/// `z × (n·z)` acting on vec-coordinates of `Hom(C, Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contramodule {
    over: Coalgebra,
    dim: usize,
    theta: Matrix,
}

impl Contramodule {
    pub fn new(over: Coalgebra, dim: usize, theta: Matrix) -> Result<Self> {
        shape("contraaction", (dim, over.dim() * dim), theta.shape())?;
        if theta.field() != over.field() {
            return Err(Error::FieldMismatch(over.field(), theta.field()));
        }
        Ok(Self { over, dim, theta })
    }

    pub fn over(&self) -> &Coalgebra {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn field(&self) -> FieldSpec {
        self.over.field()
    }

    pub fn check(&self) -> CertReport {
        check_contramodule(self)
    }

    /// Restriction to a subcontramodule `W ⊆ Z` (one with
    /// `θ(Hom(C, W)) ⊆ W`), in the subspace's RREF basis.
    pub fn restrict(&self, w: &Subspace) -> Result<Contramodule> {
        let n = self.over.dim();
        let f = self.field();
        let incl = w.inclusion();
        let image = &self.theta * &kron(&id(f, n), &incl);
        let theta_w = &w.coordinate_map() * &image;
        if &incl * &theta_w != image {
            return Err(Error::Internal("subspace is not a subcontramodule".into()));
        }
        Contramodule::new(self.over.clone(), w.dim(), theta_w)
    }
}

/// Contramodule square `θ ∘ Hom(C,θ) = θ ∘ Hom(Δ,Z) ∘ ψ` on
/// `Hom(C, Hom(C, Z))`, and triangle `θ ∘ Hom(ε, Z) = id` through
/// `Hom(k, Z) ≅ Z`.
pub fn check_contramodule(z: &Contramodule) -> CertReport {
    let f = z.field();
    let c = &z.over;
    let n = c.dim();
    let square_lhs = &z.theta * &kron(&id(f, n), &z.theta);
    let square_rhs = &(&z.theta * &precompose(c.delta(), z.dim)) * &psi(f, n, n, z.dim);
    let triangle = &z.theta * &precompose(c.eps(), z.dim);
    CertReport::new(vec![
        AxiomCheck::compare(Axiom::ContramoduleSquare, &square_lhs, &square_rhs),
        AxiomCheck::compare(Axiom::ContramoduleTriangle, &triangle, &id(f, z.dim)),
    ])
}

pub(crate) fn same_coalgebra(a: &Coalgebra, b: &Coalgebra) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::BaseMismatch("structures live over different coalgebras".into()))
    }
}

/// Comodule homomorphism square `γ α = (id ⊗ α) ρ` for `α : X → Y`.
pub fn comodule_hom_square(x: &Comodule, y: &Comodule, alpha: &Matrix) -> Result<AxiomCheck> {
    same_coalgebra(&x.over, &y.over)?;
    shape("comodule map", (y.dim, x.dim), alpha.shape())?;
    let n = x.over.dim();
    let lhs = &y.rho * alpha;
    let rhs = &kron(&id(x.field(), n), alpha) * &x.rho;
    Ok(AxiomCheck::compare(Axiom::HomomorphismSquare, &lhs, &rhs))
}

/// Contramodule homomorphism square `η ∘ Hom(C, α) = α ∘ θ` for `α : Z → T`.
pub fn contramodule_hom_square(z: &Contramodule, t: &Contramodule, alpha: &Matrix) -> Result<AxiomCheck> {
    same_coalgebra(&z.over, &t.over)?;
    shape("contramodule map", (t.dim, z.dim), alpha.shape())?;
    let n = z.over.dim();
    let lhs = &t.theta * &kron(&id(z.field(), n), alpha);
    let rhs = alpha * &z.theta;
    Ok(AxiomCheck::compare(Axiom::HomomorphismSquare, &lhs, &rhs))
}

/// `Hom_C(X, Y)` inside the vec-coordinates of `Hom(X, Y)`.
pub fn hom_comodules(x: &Comodule, y: &Comodule) -> Result<Subspace> {
    same_coalgebra(&x.over, &y.over)?;
    let f = x.field();
    let n = x.over.dim();
    let system = hom_operator(f, y.dim, x.dim, |alpha| {
        &(&y.rho * alpha) - &(&kron(&id(f, n), alpha) * &x.rho)
    });
    Ok(kernel_basis(&system))
}

/// Contramodule homomorphisms `Z → T` inside the vec-coordinates of `Hom(Z, T)`.
pub fn hom_contramodules(z: &Contramodule, t: &Contramodule) -> Result<Subspace> {
    same_coalgebra(&z.over, &t.over)?;
    let f = z.field();
    let n = z.over.dim();
    let system = hom_operator(f, t.dim, z.dim, |alpha| {
        &(&t.theta * &kron(&id(f, n), alpha)) - &(alpha * &z.theta)
    });
    Ok(kernel_basis(&system))
}
