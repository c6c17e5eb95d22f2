//! Modules over a finite-dimensional algebra: left and right actions, and
//! the θ-formulation of a discrete right module.
//!
//! A [`ThetaModule`] describes a right `A`-module by the map
//! `θ : X → Hom(A, X)`, `θ(x)(a) = x·a`. It stores `θᵀ`, which is a
//! `dim × (dim A · dim)` matrix, the same layout as
//! [`crate::Contramodule::theta`]. Dualizing a θ-module over `C*` is
//! therefore literally reading the stored matrix as a contraaction.

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::coalgebra::Algebra;
use crate::error::{shape, Error, Result};
use crate::field::FieldSpec;
use crate::hom::{hom_operator, id, postcompose, precompose, psi};
use crate::matrix::{kernel_basis, kron, Matrix, Subspace};

/// `A ⊗ X → X`, a `dim × (dim A · dim)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    over: Algebra,
    dim: usize,
    action: Matrix,
}

/// `X ⊗ A → X`, a `dim × (dim · dim A)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    over: Algebra,
    dim: usize,
    action: Matrix,
}

/// `θ : X → Hom(A, X)` stored transposed; see the module docs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaModule {
    over: Algebra,
    dim: usize,
    theta: Matrix,
}

macro_rules! module_accessors {
    ($ty:ident, $field:ident) => {
        impl $ty {
            pub fn over(&self) -> &Algebra {
                &self.over
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            pub fn $field(&self) -> &Matrix {
                &self.$field
            }

            pub fn field(&self) -> FieldSpec {
                self.over.field()
            }
        }
    };
}

module_accessors!(LeftModule, action);
module_accessors!(RightModule, action);
module_accessors!(ThetaModule, theta);

fn check_field(over: &Algebra, m: &Matrix) -> Result<()> {
    if over.field() == m.field() {
        Ok(())
    } else {
        Err(Error::FieldMismatch(over.field(), m.field()))
    }
}

fn same_algebra(a: &Algebra, b: &Algebra) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::BaseMismatch("modules over different algebras".into()))
    }
}

fn require(report: CertReport, what: &str) -> Result<()> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::NotCertified {
            what: what.into(),
            failed: c.label(),
        }),
    }
}

impl LeftModule {
    pub fn new(over: Algebra, dim: usize, action: Matrix) -> Result<Self> {
        shape("left action", (dim, over.dim() * dim), action.shape())?;
        check_field(&over, &action)?;
        Ok(Self { over, dim, action })
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(a: &Algebra) -> Self {
        Self {
            over: a.clone(),
            dim: a.dim(),
            action: a.mult().clone(),
        }
    }

    pub fn check(&self) -> CertReport {
        check_left_module(self)
    }
}

impl RightModule {
    pub fn new(over: Algebra, dim: usize, action: Matrix) -> Result<Self> {
        shape("right action", (dim, dim * over.dim()), action.shape())?;
        check_field(&over, &action)?;
        Ok(Self { over, dim, action })
    }

    pub fn regular(a: &Algebra) -> Self {
        Self {
            over: a.clone(),
            dim: a.dim(),
            action: a.mult().clone(),
        }
    }

    pub fn check(&self) -> CertReport {
        check_right_module(self)
    }

    /// The operator `x ↦ x·e_i`.
    pub fn operator(&self, i: usize) -> Matrix {
        let a = self.over.dim();
        Matrix::from_fn(self.field(), self.dim, self.dim, |r, c| self.action.get(r, c * a + i).clone())
    }
}

impl ThetaModule {
    pub fn new(over: Algebra, dim: usize, theta: Matrix) -> Result<Self> {
        shape("theta", (dim, over.dim() * dim), theta.shape())?;
        check_field(&over, &theta)?;
        Ok(Self { over, dim, theta })
    }

    pub fn check(&self) -> CertReport {
        check_theta_module(self)
    }

    /// The structure map `θ : X → Hom(A, X)` itself, `(dim A · dim) × dim`.
    pub fn structure_map(&self) -> Matrix {
        self.theta.transpose()
    }
}

/// `act(id ⊗ act) = act(m ⊗ id)` and `act(u ⊗ id) = id`.
pub fn check_left_module(x: &LeftModule) -> CertReport {
    let f = x.field();
    let a = &x.over;
    let ix = id(f, x.dim);
    let lhs = &x.action * &kron(&id(f, a.dim()), &x.action);
    let rhs = &x.action * &kron(a.mult(), &ix);
    let unit = &x.action * &kron(a.unit(), &ix);
    CertReport::new(vec![
        AxiomCheck::compare(Axiom::ActionAssociativity, &lhs, &rhs),
        AxiomCheck::compare(Axiom::ActionUnit, &unit, &ix),
    ])
}

/// `act(act ⊗ id) = act(id ⊗ m)` and `act(id ⊗ u) = id`.
pub fn check_right_module(x: &RightModule) -> CertReport {
    let f = x.field();
    let a = &x.over;
    let ix = id(f, x.dim);
    let lhs = &x.action * &kron(&x.action, &id(f, a.dim()));
    let rhs = &x.action * &kron(&ix, a.mult());
    let unit = &x.action * &kron(&ix, a.unit());
    CertReport::new(vec![
        AxiomCheck::compare(Axiom::ActionAssociativity, &lhs, &rhs),
        AxiomCheck::compare(Axiom::ActionUnit, &unit, &ix),
    ])
}

/// The two diagrams of the θ-formulation:
/// `(θ ∘ −) ∘ θ = ψ⁻¹ ∘ (− ∘ m) ∘ θ` and `(− ∘ u) ∘ θ = id`.
pub fn check_theta_module(x: &ThetaModule) -> CertReport {
    let f = x.field();
    let a = x.over.dim();
    let t = x.structure_map();
    let lhs = &postcompose(&t, a) * &t;
    let uncurry = psi(f, a, a, x.dim);
    let curry = uncurry.transpose();
    let rhs = &(&curry * &precompose(x.over.mult(), x.dim)) * &t;
    let triangle = &precompose(x.over.unit(), x.dim) * &t;
    CertReport::new(vec![
        AxiomCheck::compare(Axiom::ThetaSquare, &lhs, &rhs),
        AxiomCheck::compare(Axiom::ThetaTriangle, &triangle, &id(f, x.dim)),
    ])
}

/// Right action to θ-formulation: `θ(x_c)(e_i) = x_c · e_i`.
pub fn module_to_theta(m: &RightModule) -> Result<ThetaModule> {
    require(m.check(), "right module")?;
    Ok(module_to_theta_unchecked(m))
}

pub(crate) fn module_to_theta_unchecked(m: &RightModule) -> ThetaModule {
    let a = m.over.dim();
    let x = m.dim;
    let theta = Matrix::from_fn(m.field(), x, a * x, |c, col| {
        let (i, r) = (col / x, col % x);
        m.action.get(r, c * a + i).clone()
    });
    ThetaModule {
        over: m.over.clone(),
        dim: x,
        theta,
    }
}

/// Inverse of [`module_to_theta`].
pub fn theta_to_module(t: &ThetaModule) -> Result<RightModule> {
    require(t.check(), "theta module")?;
    Ok(theta_to_module_unchecked(t))
}

pub(crate) fn theta_to_module_unchecked(t: &ThetaModule) -> RightModule {
    let a = t.over.dim();
    let x = t.dim;
    let action = Matrix::from_fn(t.field(), x, x * a, |r, col| {
        let (c, i) = (col / a, col % a);
        t.theta.get(c, i * x + r).clone()
    });
    RightModule {
        over: t.over.clone(),
        dim: x,
        action,
    }
}

/// `α act_X = act_Y (id ⊗ α)`.
pub fn hom_left_modules(x: &LeftModule, y: &LeftModule) -> Result<Subspace> {
    same_algebra(&x.over, &y.over)?;
    let f = x.field();
    let a = x.over.dim();
    let system = hom_operator(f, y.dim, x.dim, |alpha| {
        &(alpha * &x.action) - &(&y.action * &kron(&id(f, a), alpha))
    });
    Ok(kernel_basis(&system))
}

/// `α act_X = act_Y (α ⊗ id)`.
pub fn hom_right_modules(x: &RightModule, y: &RightModule) -> Result<Subspace> {
    same_algebra(&x.over, &y.over)?;
    let f = x.field();
    let a = x.over.dim();
    let system = hom_operator(f, y.dim, x.dim, |alpha| {
        &(alpha * &x.action) - &(&y.action * &kron(alpha, &id(f, a)))
    });
    Ok(kernel_basis(&system))
}

/// `θ_Y α = (α ∘ −) θ_X`.
pub fn hom_theta_modules(x: &ThetaModule, y: &ThetaModule) -> Result<Subspace> {
    same_algebra(&x.over, &y.over)?;
    let f = x.field();
    let a = x.over.dim();
    let (tx, ty) = (x.structure_map(), y.structure_map());
    let system = hom_operator(f, y.dim, x.dim, |alpha| {
        &(&ty * alpha) - &(&postcompose(alpha, a) * &tx)
    });
    Ok(kernel_basis(&system))
}
