//! The commuting diagrams behind the comodule/contramodule biconditional,
//! evaluated as matrix identities for a raw coaction `ρ : X → C⊗X`.
//!
//! The square diagram has top-left corner `Hom(C, Hom(C, X*))` and four
//! cells: (1) a pure reshuffle, (2) naturality of `ψ_{−,k}^X` at `Δ`,
//! (3) naturality of `ψ_{C,k}^−` at `ρ`, and (4) the dual of the comodule
//! square. The outer square is the contramodule square of `ρ̄`. Cells
//! (1)–(3) commute for every `ρ`, so (4) holds iff the outer square does.
//!
//! The triangle prism does the same for the two triangles.

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::coalgebra::Coalgebra;
use crate::comodule::{Comodule, Contramodule};
use crate::duality::comodule_to_contramodule;
use crate::error::{shape, Result};
use crate::hom::{dual_map, id, postcompose, precompose, psi};
use crate::matrix::{kron, Matrix};

fn scoped(mut check: AxiomCheck, scope: &str) -> AxiomCheck {
    check.scope = scope.to_string();
    check
}

/// All cells of the square diagram for `ρ`, in the order (1), (2), (3),
/// (4), outer.
pub fn square_diagram(c: &Coalgebra, x_dim: usize, rho: &Matrix) -> Result<CertReport> {
    let f = c.field();
    let n = c.dim();
    let x = x_dim;
    shape("coaction", (n * x, x), rho.shape())?;
    let rho_t = dual_map(rho);

    // (1): Hom(C,Hom(C,X*)) → (C⊗C⊗X)*
    let one_lhs = &psi(f, n * n, x, 1) * &psi(f, n, n, x);
    let one_rhs = &psi(f, n, n * x, 1) * &postcompose(&psi(f, n, x, 1), n);

    // (2): (C⊗C, X*) → (C⊗X)*
    let two_lhs = &psi(f, n, x, 1) * &precompose(c.delta(), x);
    let two_rhs = &dual_map(&kron(c.delta(), &id(f, x))) * &psi(f, n * n, x, 1);

    // (3): (C, (C⊗X)*) → (C⊗X)*
    let three_lhs = &psi(f, n, x, 1) * &postcompose(&rho_t, n);
    let three_rhs = &dual_map(&kron(&id(f, n), rho)) * &psi(f, n, n * x, 1);

    // (4): (C⊗C⊗X)* → X*
    let four_lhs = &rho_t * &dual_map(&kron(c.delta(), &id(f, x)));
    let four_rhs = &rho_t * &dual_map(&kron(&id(f, n), rho));

    let z = comodule_to_contramodule(&Comodule::new(c.clone(), x, rho.clone())?);
    let outer = Contramodule::check(&z)
        .checks
        .into_iter()
        .find(|k| k.axiom == Axiom::ContramoduleSquare)
        .expect("contramodule report has a square");

    Ok(CertReport::new(vec![
        scoped(AxiomCheck::compare(Axiom::ReshuffleSquare, &one_lhs, &one_rhs), "(1)"),
        scoped(AxiomCheck::compare(Axiom::CoproductNaturality, &two_lhs, &two_rhs), "(2)"),
        scoped(AxiomCheck::compare(Axiom::CoactionNaturality, &three_lhs, &three_rhs), "(3)"),
        scoped(AxiomCheck::compare(Axiom::ComoduleSquare, &four_lhs, &four_rhs), "(4)"),
        scoped(outer, "outer"),
    ]))
}

/// Faces of the triangle prism for `ρ`: back square, left front square,
/// right front square, upper (dual comodule) triangle, lower
/// (contramodule) triangle.
pub fn triangle_prism(c: &Coalgebra, x_dim: usize, rho: &Matrix) -> Result<CertReport> {
    let f = c.field();
    let n = c.dim();
    let x = x_dim;
    shape("coaction", (n * x, x), rho.shape())?;
    let rho_t = dual_map(rho);
    let z = comodule_to_contramodule(&Comodule::new(c.clone(), x, rho.clone())?);

    // back: (k, X*) → (k⊗X)* is ψ_{k,k}^X, and both routes to X* are the
    // canonical identifications.
    let back = psi(f, 1, x, 1);
    let left_front = &rho_t * &psi(f, n, x, 1);
    let right_lhs = &psi(f, n, x, 1) * &precompose(c.eps(), x);
    let right_rhs = &dual_map(&kron(c.eps(), &id(f, x))) * &psi(f, 1, x, 1);
    let upper = &rho_t * &dual_map(&kron(c.eps(), &id(f, x)));
    let lower = z.theta() * &precompose(c.eps(), x);

    Ok(CertReport::new(vec![
        scoped(AxiomCheck::compare(Axiom::ReshuffleSquare, &back, &id(f, x)), "back"),
        scoped(AxiomCheck::compare(Axiom::DualCoaction, &left_front, z.theta()), "left front"),
        scoped(AxiomCheck::compare(Axiom::CounitNaturality, &right_lhs, &right_rhs), "right front"),
        scoped(AxiomCheck::compare(Axiom::ComoduleTriangle, &upper, &id(f, x)), "upper"),
        scoped(AxiomCheck::compare(Axiom::ContramoduleTriangle, &lower, &id(f, x)), "lower"),
    ]))
}

/// The joining squares for a map `α : X → Y`: both sides of the comodule
/// homomorphism square dualized and pushed through `ψ_{C,k}^X`, compared
/// with the contramodule homomorphism square of `α*`.
pub fn homomorphism_diagram(
    c: &Coalgebra,
    x: (usize, &Matrix),
    y: (usize, &Matrix),
    alpha: &Matrix,
) -> Result<CertReport> {
    let f = c.field();
    let n = c.dim();
    let (xd, rho) = x;
    let (yd, gamma) = y;
    shape("coaction", (n * xd, xd), rho.shape())?;
    shape("coaction", (n * yd, yd), gamma.shape())?;
    shape("map", (yd, xd), alpha.shape())?;
    let a_t = dual_map(alpha);

    // Joining squares: ψ_{C,k}^X ∘ (α* ∘ −) = (id ⊗ α)* ∘ ψ_{C,k}^Y.
    let join_lhs = &psi(f, n, xd, 1) * &postcompose(&a_t, n);
    let join_rhs = &dual_map(&kron(&id(f, n), alpha)) * &psi(f, n, yd, 1);

    let dual_lhs = &a_t * &dual_map(gamma);
    let dual_rhs = &dual_map(rho) * &dual_map(&kron(&id(f, n), alpha));

    let zx = comodule_to_contramodule(&Comodule::new(c.clone(), xd, rho.clone())?);
    let zy = comodule_to_contramodule(&Comodule::new(c.clone(), yd, gamma.clone())?);
    let contra = crate::comodule::contramodule_hom_square(&zy, &zx, &a_t)?;

    Ok(CertReport::new(vec![
        scoped(AxiomCheck::compare(Axiom::CoactionNaturality, &join_lhs, &join_rhs), "join"),
        scoped(AxiomCheck::compare(Axiom::HomomorphismSquare, &dual_lhs, &dual_rhs), "dualized comodule"),
        scoped(contra, "contramodule"),
    ]))
}
