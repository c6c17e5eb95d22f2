//! Right comodules, bicomodules, cotensor products and tensor products
//! over an algebra.
//!
//! Right `C`-comodules mirror left ones: `μ : M → M ⊗ C` is `(x·n) × x`, with
//! `(μ ⊗ id) μ = (id ⊗ Δ) μ` and `(id ⊗ ε) μ = id`. The flip `M ⊗ C → C ⊗ M`
//! turns a right `C`-comodule into a left `C^cop`-comodule and back.

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::coalgebra::{dual_algebra, grouplike, Coalgebra};
use crate::comodule::{same_coalgebra, Comodule};
use crate::error::{shape, Error, Result};
use crate::field::FieldSpec;
use crate::hom::{hom_operator, id, swap};
use crate::matrix::{kernel_basis, kron, quotient_map, Matrix, Subspace};
use crate::module::{LeftModule, RightModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    over: Coalgebra,
    dim: usize,
    mu: Matrix,
}

impl RightComodule {
    pub fn new(over: Coalgebra, dim: usize, mu: Matrix) -> Result<Self> {
        shape("right coaction", (dim * over.dim(), dim), mu.shape())?;
        if mu.field() != over.field() {
            return Err(Error::FieldMismatch(over.field(), mu.field()));
        }
        Ok(Self { over, dim, mu })
    }

    /// `C` over itself through `Δ`.
    pub fn regular(c: &Coalgebra) -> Self {
        Self {
            over: c.clone(),
            dim: c.dim(),
            mu: c.delta().clone(),
        }
    }

    pub fn over(&self) -> &Coalgebra {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    pub fn field(&self) -> FieldSpec {
        self.over.field()
    }

    pub fn check(&self) -> CertReport {
        check_right_comodule(self)
    }

    /// The same coaction read as a left comodule over `C^cop`.
    pub fn to_opposite(&self) -> Comodule {
        let rho = &swap(self.field(), self.dim, self.over.dim()) * &self.mu;
        Comodule::new(self.over.opposite(), self.dim, rho).expect("shapes agree by construction")
    }

    /// Inverse of [`RightComodule::to_opposite`]; `x` lives over `c.opposite()`.
    pub fn from_opposite(x: &Comodule, c: &Coalgebra) -> Result<Self> {
        same_coalgebra(x.over(), &c.opposite())?;
        let mu = &swap(c.field(), c.dim(), x.dim()) * x.rho();
        Self::new(c.clone(), x.dim(), mu)
    }

    /// `μ' = (p ⊗ id) μ p⁻¹`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Self> {
        shape("change of basis", (self.dim, self.dim), p.shape())?;
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Internal("change of basis is singular".into()))?;
        let mu = &(&kron(p, &id(self.field(), self.over.dim())) * &self.mu) * &inv;
        Self::new(self.over.clone(), self.dim, mu)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let c = self.over.clone();
        let sum = self.to_opposite().direct_sum(&other.to_opposite())?;
        Self::from_opposite(&sum, &c)
    }

    /// `M*` as a right `C*`-module, `(f·a) = (f ⊗ a) ∘ μ`.
    pub fn dual_module(&self) -> Result<RightModule> {
        RightModule::new(dual_algebra(&self.over)?, self.dim, self.mu.transpose())
    }
}

/// The mirrored square and triangle.
pub fn check_right_comodule(m: &RightComodule) -> CertReport {
    let f = m.field();
    let c = &m.over;
    let ix = id(f, m.dim);
    let lhs = &kron(&m.mu, &id(f, c.dim())) * &m.mu;
    let rhs = &kron(&ix, c.delta()) * &m.mu;
    let triangle = &kron(&ix, c.eps()) * &m.mu;
    CertReport::new(vec![
        AxiomCheck::compare(Axiom::ComoduleSquare, &lhs, &rhs),
        AxiomCheck::compare(Axiom::ComoduleTriangle, &triangle, &ix),
    ])
}

/// A `C`-`D`-bicomodule: `λ : M → C ⊗ M` and `μ : M → M ⊗ D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    left: Comodule,
    right: RightComodule,
}

impl Bicomodule {
    pub fn new(over_left: Coalgebra, over_right: Coalgebra, dim: usize, lambda: Matrix, mu: Matrix) -> Result<Self> {
        if over_left.field() != over_right.field() {
            return Err(Error::FieldMismatch(over_left.field(), over_right.field()));
        }
        Ok(Self {
            left: Comodule::new(over_left, dim, lambda)?,
            right: RightComodule::new(over_right, dim, mu)?,
        })
    }

    /// `C` as a `C`-`C`-bicomodule.
    pub fn regular(c: &Coalgebra) -> Self {
        Self {
            left: Comodule::regular(c),
            right: RightComodule::regular(c),
        }
    }

    /// A left comodule as a `C`-`k`-bicomodule.
    pub fn trivial_right(x: &Comodule) -> Self {
        let k = grouplike(x.field(), 1);
        Self {
            left: x.clone(),
            right: RightComodule::new(k, x.dim(), id(x.field(), x.dim())).expect("shapes agree"),
        }
    }

    /// Splits a left `C ⊗ D^cop`-comodule into its two costructures:
    /// `λ = (id ⊗ ε_D ⊗ id) ρ` and `μ = flip ∘ (ε_C ⊗ id ⊗ id) ρ`.
    pub fn from_tensor_comodule(x: &Comodule, c: &Coalgebra, d: &Coalgebra) -> Result<Self> {
        same_coalgebra(x.over(), &c.tensor(&d.opposite())?)?;
        let f = c.field();
        let m = x.dim();
        let lambda = &kron(&kron(&id(f, c.dim()), d.eps()), &id(f, m)) * x.rho();
        let d_side = &kron(&kron(c.eps(), &id(f, d.dim())), &id(f, m)) * x.rho();
        let mu = &swap(f, d.dim(), m) * &d_side;
        Self::new(c.clone(), d.clone(), m, lambda, mu)
    }

    pub fn over_left(&self) -> &Coalgebra {
        self.left.over()
    }

    pub fn over_right(&self) -> &Coalgebra {
        self.right.over()
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }

    pub fn lambda(&self) -> &Matrix {
        self.left.rho()
    }

    pub fn mu(&self) -> &Matrix {
        self.right.mu()
    }

    pub fn field(&self) -> FieldSpec {
        self.left.field()
    }

    pub fn left(&self) -> &Comodule {
        &self.left
    }

    pub fn right(&self) -> &RightComodule {
        &self.right
    }

    pub fn check(&self) -> CertReport {
        check_bicomodule(self)
    }

    /// Transports both costructures along an invertible `p`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Self> {
        Ok(Self {
            left: self.left.conjugate(p)?,
            right: self.right.conjugate(p)?,
        })
    }
}

/// Both costructures and `(id_C ⊗ μ) λ = (λ ⊗ id_D) μ`.
pub fn check_bicomodule(m: &Bicomodule) -> CertReport {
    let f = m.field();
    let mut report = CertReport::default();
    report.absorb("left coaction", m.left.check());
    report.absorb("right coaction", m.right.check());
    let lhs = &kron(&id(f, m.over_left().dim()), m.mu()) * m.lambda();
    let rhs = &kron(m.lambda(), &id(f, m.over_right().dim())) * m.mu();
    report
        .checks
        .push(AxiomCheck::compare(Axiom::BicomoduleCompatibility, &lhs, &rhs));
    report
}

/// `L □_C M` inside `L ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotensorSpace {
    pub left: RightComodule,
    pub right: Comodule,
    pub space: Subspace,
    /// The right `D`-comodule structure when `M` is a bicomodule.
    pub induced: Option<RightComodule>,
}

impl CotensorSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
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

/// The equalizer map `μ_L ⊗ id − id ⊗ λ_M : L ⊗ M → L ⊗ C ⊗ M`.
pub fn cotensor_relation(l: &RightComodule, m: &Comodule) -> Result<Matrix> {
    same_coalgebra(&l.over, m.over())?;
    let f = l.field();
    Ok(&kron(&l.mu, &id(f, m.dim())) - &kron(&id(f, l.dim), m.rho()))
}

pub fn cotensor(l: &RightComodule, m: &Comodule) -> Result<CotensorSpace> {
    require(l.check(), "right comodule")?;
    require(m.check(), "comodule")?;
    let space = kernel_basis(&cotensor_relation(l, m)?);
    Ok(CotensorSpace {
        left: l.clone(),
        right: m.clone(),
        space,
        induced: None,
    })
}

/// Cotensor with a bicomodule; `id ⊗ μ` restricts to a right
/// `D`-comodule structure on the result.
pub fn cotensor_bicomodule(l: &RightComodule, m: &Bicomodule) -> Result<CotensorSpace> {
    require(m.check(), "bicomodule")?;
    let mut out = cotensor(l, m.left())?;
    let f = l.field();
    let d = m.over_right().dim();
    let incl = out.space.inclusion();
    let image = &kron(&id(f, l.dim), m.mu()) * &incl;
    let mu = &kron(&out.space.coordinate_map(), &id(f, d)) * &image;
    if &kron(&incl, &id(f, d)) * &mu != image {
        return Err(Error::Internal("right coaction does not restrict to the cotensor product".into()));
    }
    let induced = RightComodule::new(m.over_right().clone(), out.space.dim(), mu)?;
    if let Some(c) = induced.check().first_failure() {
        return Err(Error::Internal(format!("induced right coaction fails {}", c.label())));
    }
    out.induced = Some(induced);
    Ok(out)
}

/// `L □ g` for a comodule map `g : L → L'`: the restriction of `g ⊗ id`.
pub fn cotensor_map(source: &CotensorSpace, target: &CotensorSpace, g: &Matrix) -> Result<Matrix> {
    shape("comodule map", (target.left.dim, source.left.dim), g.shape())?;
    let f = g.field();
    let full = &kron(g, &id(f, source.right.dim())) * &source.space.inclusion();
    let restricted = &target.space.coordinate_map() * &full;
    if &target.space.inclusion() * &restricted != full {
        return Err(Error::Internal("map does not preserve cotensor products".into()));
    }
    Ok(restricted)
}

/// `P ⊗_A Q`, presented as a quotient of `P ⊗ Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorQuotient {
    pub relations: Subspace,
    pub projection: Matrix,
}

impl TensorQuotient {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

pub fn tensor_over_algebra(p: &RightModule, q: &LeftModule) -> Result<TensorQuotient> {
    if p.over() != q.over() {
        return Err(Error::BaseMismatch("modules over different algebras".into()));
    }
    require(p.check(), "right module")?;
    require(q.check(), "left module")?;
    let f = p.field();
    let rel = &kron(p.action(), &id(f, q.dim())) - &kron(&id(f, p.dim()), q.action());
    let relations = Subspace::column_space(&rel);
    let projection = quotient_map(p.dim() * q.dim(), &relations)?;
    Ok(TensorQuotient { relations, projection })
}

/// `μ_N α = (α ⊗ id) μ_M` for `α : M → N`.
pub fn right_comodule_hom_square(m: &RightComodule, n: &RightComodule, alpha: &Matrix) -> Result<AxiomCheck> {
    same_coalgebra(&m.over, &n.over)?;
    shape("comodule map", (n.dim, m.dim), alpha.shape())?;
    let lhs = &n.mu * alpha;
    let rhs = &kron(alpha, &id(m.field(), m.over.dim())) * &m.mu;
    Ok(AxiomCheck::compare(Axiom::HomomorphismSquare, &lhs, &rhs))
}

/// Right comodule homomorphisms `M → N`: `μ_N α = (α ⊗ id) μ_M`.
pub fn hom_right_comodules(m: &RightComodule, n: &RightComodule) -> Result<Subspace> {
    same_coalgebra(&m.over, &n.over)?;
    let f = m.field();
    let c = m.over.dim();
    let system = hom_operator(f, n.dim, m.dim, |alpha| {
        &(&n.mu * alpha) - &(&kron(alpha, &id(f, c)) * &m.mu)
    });
    Ok(kernel_basis(&system))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{divided_power, matrix_coalgebra};
    use crate::duality::comodule_to_pcmodule;

    const Q: FieldSpec = FieldSpec::Rationals;

    /// Graded comodule over grouplike(n) with the given degree dimensions.
    fn graded_left(n: usize, dims: &[usize]) -> Comodule {
        let c = grouplike(Q, n);
        let x: usize = dims.iter().sum();
        let mut rho = Matrix::zeros(Q, n * x, x);
        let mut j = 0;
        for (s, &d) in dims.iter().enumerate() {
            for _ in 0..d {
                rho.set(s * x + j, j, Q.one());
                j += 1;
            }
        }
        Comodule::new(c, x, rho).unwrap()
    }

    fn graded_right(n: usize, dims: &[usize]) -> RightComodule {
        let c = grouplike(Q, n);
        RightComodule::from_opposite(&graded_left(n, dims), &c).unwrap()
    }

    #[test]
    fn over_the_base_field_everything_cotensors() {
        let l = graded_right(1, &[2]);
        let m = graded_left(1, &[3]);
        assert_eq!(cotensor(&l, &m).unwrap().dim(), 6);
    }

    #[test]
    fn graded_cotensor_dimension() {
        let l = graded_right(2, &[1, 1]);
        let m = graded_left(2, &[2, 3]);
        assert!(l.check().passed() && m.check().passed());
        assert_eq!(cotensor(&l, &m).unwrap().dim(), 5);
    }

    #[test]
    fn coalgebra_is_a_cotensor_unit() {
        for c in [matrix_coalgebra(Q, 2), divided_power(Q, 3)] {
            let m = Comodule::regular(&c);
            assert_eq!(cotensor(&RightComodule::regular(&c), &m).unwrap().dim(), c.dim());
        }
    }

    #[test]
    fn regular_bicomodule_induces_structure() {
        let c = divided_power(Q, 2);
        let m = Bicomodule::regular(&c);
        assert!(m.check().passed());
        let s = cotensor_bicomodule(&RightComodule::regular(&c), &m).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.induced.unwrap().check().passed());
    }

    #[test]
    fn tensor_comodule_split_is_a_bicomodule() {
        let c = matrix_coalgebra(Q, 2);
        let d = divided_power(Q, 1);
        let cd = c.tensor(&d.opposite()).unwrap();
        let m = Bicomodule::from_tensor_comodule(&Comodule::regular(&cd), &c, &d).unwrap();
        assert!(m.check().passed());
    }

    #[test]
    fn graded_tensor_over_dual_algebra() {
        let l = graded_right(2, &[1, 2]);
        let m = graded_left(2, &[2, 1]);
        let p = l.dual_module().unwrap();
        let q = comodule_to_pcmodule(&m).unwrap();
        let t = tensor_over_algebra(&p, &q).unwrap();
        assert_eq!(t.dim(), 1 * 2 + 2 * 1);
        assert_eq!(t.dim(), cotensor(&l, &m).unwrap().dim());
        let rel = t.relations.inclusion();
        assert!((&t.projection * &rel).is_zero());
    }

    #[test]
    fn right_comodule_opposite_roundtrip() {
        let c = matrix_coalgebra(Q, 2);
        let r = RightComodule::regular(&c);
        assert!(r.check().passed());
        assert!(r.to_opposite().check().passed());
        assert_eq!(RightComodule::from_opposite(&r.to_opposite(), &c).unwrap(), r);
        assert!(r.dual_module().unwrap().check().passed());
    }
}
