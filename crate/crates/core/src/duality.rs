//! The four dualities of the square
//!
//! ```text
//!   C*-PMod ──Pontryagin──▶ DMod-C*
//!      │                       │
//!   Simson                  (right)
//!      ▼                       ▼
//!   C-Comod ────lower────▶ PContramod-C
//! ```
//!
//! Each sends an object `X` to `X*` with the transported structure. All
//! identifications involved (double dual, `(A⊗B)* = A*⊗B*`,
//! `Hom(A,Z)* = Hom(A*,Z*)`) are coordinate identities, so every roundtrip
//! is the identity on matrices.

use crate::coalgebra::{dual_algebra, Algebra, Coalgebra};
use crate::comodule::{Comodule, Contramodule};
use crate::error::{Error, Result};
use crate::hom::{dual_map, psi};
use crate::matrix::Matrix;
use crate::module::{module_to_theta_unchecked, theta_to_module_unchecked, LeftModule, RightModule, ThetaModule};

/// `(X, ρ) ↦ (X*, ρ̄)` with `ρ̄ = ρ* ∘ ψ_{C,k}^X`.
///
/// Accepts raw structure maps: the output is a contramodule exactly when
/// the input is a comodule, axiom for axiom.
pub fn comodule_to_contramodule(x: &Comodule) -> Contramodule {
    let f = x.field();
    let n = x.over().dim();
    let theta = &dual_map(x.rho()) * &psi(f, n, x.dim(), 1);
    Contramodule::new(x.over().clone(), x.dim(), theta).expect("shapes agree by construction")
}

/// Inverse of [`comodule_to_contramodule`]: `ρ = (θ ∘ ψ⁻¹)*`.
pub fn contramodule_to_comodule(z: &Contramodule) -> Comodule {
    let f = z.field();
    let n = z.over().dim();
    let uncurry_inverse = psi(f, n, z.dim(), 1).transpose();
    let rho = dual_map(&(z.theta() * &uncurry_inverse));
    Comodule::new(z.over().clone(), z.dim(), rho).expect("shapes agree by construction")
}

/// On morphisms every arrow is `α ↦ α*`.
pub fn dualize_morphism(alpha: &Matrix) -> Matrix {
    dual_map(alpha)
}

fn require_dual_of(a: &Algebra, c: &Coalgebra) -> Result<()> {
    if &dual_algebra(c)? == a {
        Ok(())
    } else {
        Err(Error::BaseMismatch("module algebra is not the dual of the coalgebra".into()))
    }
}

/// Simson's arrow: a left `C*`-module `X` gives the comodule `X*` with
/// `ρ = act*` read through `(C*⊗X)* = C⊗X*`.
pub fn pcmodule_to_comodule(m: &LeftModule, c: &Coalgebra) -> Result<Comodule> {
    require_dual_of(m.over(), c)?;
    Comodule::new(c.clone(), m.dim(), dual_map(m.action()))
}

/// Inverse of [`pcmodule_to_comodule`].
pub fn comodule_to_pcmodule(x: &Comodule) -> Result<LeftModule> {
    LeftModule::new(dual_algebra(x.over())?, x.dim(), dual_map(x.rho()))
}

/// Pontryagin duality: a left module `X` gives the right module `X*`
/// with `(f·a)(x) = f(a·x)`.
pub fn pcmodule_to_dmodule(m: &LeftModule) -> RightModule {
    let a = m.over().dim();
    let x = m.dim();
    let action = Matrix::from_fn(m.field(), x, x * a, |c, col| {
        let (r, i) = (col / a, col % a);
        m.action().get(r, i * x + c).clone()
    });
    RightModule::new(m.over().clone(), x, action).expect("shapes agree by construction")
}

/// Inverse of [`pcmodule_to_dmodule`]: `(a·f)(y) = f(y·a)`.
pub fn dmodule_to_pcmodule(m: &RightModule) -> LeftModule {
    let a = m.over().dim();
    let y = m.dim();
    let action = Matrix::from_fn(m.field(), y, a * y, |r, col| {
        let (i, c) = (col / y, col % y);
        m.action().get(c, r * a + i).clone()
    });
    LeftModule::new(m.over().clone(), y, action).expect("shapes agree by construction")
}

/// The right vertical arrow, built directly: pass to the θ-formulation
/// `θ : X → Hom(C*, X)` and dualize it to `Hom(C, X*) → X*`.
pub fn dmodule_to_contramodule(m: &RightModule, c: &Coalgebra) -> Result<Contramodule> {
    require_dual_of(m.over(), c)?;
    let theta = module_to_theta_unchecked(m);
    Contramodule::new(c.clone(), m.dim(), theta.theta().clone())
}

/// Inverse of [`dmodule_to_contramodule`].
pub fn contramodule_to_dmodule(z: &Contramodule) -> Result<RightModule> {
    let algebra = dual_algebra(z.over())?;
    let theta = ThetaModule::new(algebra, z.dim(), z.theta().clone())?;
    Ok(theta_to_module_unchecked(&theta))
}
