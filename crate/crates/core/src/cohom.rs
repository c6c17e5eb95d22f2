//! Mixed homomorphisms from contramodules to right comodules, the cohom
//! functor `h(M, −) = Hom_D(−, M)*`, and the adjunction
//! `Hom_D(N, L □_C M) ≅ Hom_C(h(M, N), L)`.

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::coalgebra::dual_algebra;
use crate::comodule::{contramodule_hom_square, same_coalgebra, Comodule, Contramodule};
use crate::cotensor::{
    cotensor_bicomodule, cotensor_map, right_comodule_hom_square, Bicomodule, CotensorSpace, RightComodule,
};
use crate::duality::comodule_to_contramodule;
use crate::error::{Error, Result};
use crate::hom::{hom_operator, id, psi_bar, unvec, vec};
use crate::matrix::{kernel_basis, kron, Matrix, Subspace};
use crate::module::{module_to_theta, RightModule};

fn require(report: CertReport, what: &str) -> Result<()> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::NotCertified {
            what: what.into(),
            failed: c.label(),
        }),
    }
}

/// The linear system `γ ↦ ψ̄(γθ) − μγ` on vec-coordinates of `Hom(N, M)`.
pub fn mixed_hom_system(n: &Contramodule, m: &RightComodule) -> Result<Matrix> {
    same_coalgebra(n.over(), m.over())?;
    let f = n.field();
    let d = n.over().dim();
    let reshuffle = psi_bar(f, m.dim(), d, n.dim());
    let after_theta = kron(&n.theta().transpose(), &id(f, m.dim()));
    let after_mu = kron(&id(f, n.dim()), m.mu());
    Ok(&(&reshuffle * &after_theta) - &after_mu)
}

/// `Hom_D(N, M)`: maps with `ψ̄(γθ) = μγ`, in vec-coordinates of `Hom(N, M)`.
pub fn mixed_hom(n: &Contramodule, m: &RightComodule) -> Result<Subspace> {
    require(n.check(), "contramodule")?;
    require(m.check(), "right comodule")?;
    Ok(kernel_basis(&mixed_hom_system(n, m)?))
}

/// `h(M, N)` together with the solved space it is the dual of.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cohom {
    /// `H = Hom_D(N, M)` in vec-coordinates of `Hom(N, M)`.
    pub hom_space: Subspace,
    /// The left `C`-comodule structure on `H`, in the basis of `hom_space`.
    pub comodule: Comodule,
    /// `h(M, N) = H*`.
    pub contramodule: Contramodule,
    pub m_dim: usize,
    pub n_dim: usize,
}

/// The right `C*`-module `Hom_{D*}(M*, N*)` carried on the coordinates of
/// `H`: `(w·a)(v) = w(a·v)`, with `w = γᵀ`.
pub fn cohom_module(m: &Bicomodule, hom_space: &Subspace, n_dim: usize) -> Result<RightModule> {
    let f = m.field();
    let c = m.over_left().dim();
    let md = m.dim();
    let lambda_t = m.lambda().transpose();
    let basis = hom_space.basis_vectors();
    let h = basis.len();
    // e_c acting on M* from the left is the block c of λᵀ.
    let actions: Vec<Matrix> = (0..c).map(|i| lambda_t.submatrix(0, i * md, md, md)).collect();
    let mut action = Matrix::zeros(f, h, h * c);
    for (k, v) in basis.iter().enumerate() {
        let w = unvec(f, md, n_dim, v).transpose();
        for (i, a) in actions.iter().enumerate() {
            let moved = vec(&(&w * a).transpose());
            if !hom_space.contains(&moved) {
                return Err(Error::Internal("coalgebra action leaves the mixed hom space".into()));
            }
            for (r, x) in hom_space.coordinates(&moved).into_iter().enumerate() {
                action.set(r, k * c + i, x);
            }
        }
    }
    RightModule::new(dual_algebra(m.over_left())?, h, action)
}

/// `h(M, N)` by dualizing the right `C*`-module `Hom_{D*}(M*, N*)` twice
/// and passing to contramodules.
pub fn cohom(m: &Bicomodule, n: &Contramodule) -> Result<Cohom> {
    require(m.check(), "bicomodule")?;
    let hom_space = mixed_hom(n, m.right())?;
    let module = cohom_module(m, &hom_space, n.dim())?;
    let theta = module_to_theta(&module)
        .map_err(|e| Error::Internal(format!("cohom module is not a module: {e}")))?;
    let comodule = Comodule::new(m.over_left().clone(), hom_space.dim(), theta.theta().transpose())?;
    let contramodule = comodule_to_contramodule(&comodule);
    if let Some(c) = contramodule.check().first_failure() {
        return Err(Error::Internal(format!("cohom fails {}", c.label())));
    }
    Ok(Cohom {
        hom_space,
        comodule,
        contramodule,
        m_dim: m.dim(),
        n_dim: n.dim(),
    })
}

/// `h(M, t) : h(M, N') → h(M, N)` for a contramodule map `t : N' → N`:
/// the dual of `δ ↦ δ t` on the solved spaces.
pub fn cohom_map(for_n: &Cohom, for_n_prime: &Cohom, t: &Matrix) -> Result<Matrix> {
    crate::error::shape("contramodule map", (for_n.n_dim, for_n_prime.n_dim), t.shape())?;
    let precompose = hom_operator(t.field(), for_n.m_dim, for_n.n_dim, |delta| delta * t);
    let full = &precompose * &for_n.hom_space.inclusion();
    let restricted = &for_n_prime.hom_space.coordinate_map() * &full;
    if &for_n_prime.hom_space.inclusion() * &restricted != full {
        return Err(Error::Internal("precomposition leaves the mixed hom space".into()));
    }
    Ok(restricted.transpose())
}

/// A map `L → L'` of right `C`-comodules, used for naturality in `L`.
#[derive(Clone, Debug)]
pub struct LMorphism {
    pub target: RightComodule,
    pub map: Matrix,
}

/// A map `N' → N` of contramodules, used for naturality in `N`.
#[derive(Clone, Debug)]
pub struct NMorphism {
    pub source: Contramodule,
    pub map: Matrix,
}

/// Outcome of [`adjunction_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    /// The isomorphism in the solved bases, `rhs_dim × lhs_dim`.
    pub iso: Matrix,
    pub checks: CertReport,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}

/// The two sides and the comparison map for one `(L, M, N)`.
struct Sides {
    cotensor: CotensorSpace,
    cohom: Cohom,
    lhs: Subspace,
    rhs: Subspace,
}

fn sides(l: &RightComodule, m: &Bicomodule, n: &Contramodule) -> Result<Sides> {
    let cotensor = cotensor_bicomodule(l, m)?;
    let induced = cotensor.induced.clone().expect("bicomodule cotensor has an induced structure");
    let lhs = mixed_hom(n, &induced)?;
    let cohom = cohom(m, n)?;
    let rhs = mixed_hom(&cohom.contramodule, l)?;
    Ok(Sides {
        cotensor,
        cohom,
        lhs,
        rhs,
    })
}

/// `Φ(γ)`: read `ι γ : N → L ⊗ M` one `L`-coordinate at a time; each
/// slice `(e_a* ⊗ id) ι γ` is a mixed hom `N → M`, giving `L* → H`, and
/// `Φ(γ)` is its dual `H* → L`.
fn phi(s: &Sides, l_dim: usize, m_dim: usize, n_dim: usize, gamma: &Matrix) -> Result<Matrix> {
    let f = gamma.field();
    let full = &s.cotensor.space.inclusion() * gamma;
    let h = s.cohom.hom_space.dim();
    let mut out = Matrix::zeros(f, l_dim, h);
    for a in 0..l_dim {
        let slice = full.submatrix(a * m_dim, 0, m_dim, n_dim);
        let v = vec(&slice);
        if !s.cohom.hom_space.contains(&v) {
            return Err(Error::Internal("slice of a cotensor-valued map is not a mixed hom".into()));
        }
        for (k, x) in s.cohom.hom_space.coordinates(&v).into_iter().enumerate() {
            out.set(a, k, x);
        }
    }
    Ok(out)
}

/// Verifies `Hom_D(N, L □_C M) ≅ Hom_C(h(M, N), L)`: both sides solved
/// independently, the comparison map built from the currying chain, and
/// naturality squares for the supplied morphisms.
pub fn adjunction_check(
    l: &RightComodule,
    m: &Bicomodule,
    n: &Contramodule,
    l_maps: &[LMorphism],
    n_maps: &[NMorphism],
) -> Result<AdjunctionReport> {
    require(l.check(), "right comodule")?;
    let f = l.field();
    let s = sides(l, m, n)?;
    let (ld, md, nd) = (l.dim(), m.dim(), n.dim());
    let sd = s.cotensor.dim();
    let mut checks = Vec::new();
    checks.push(AxiomCheck::holds(Axiom::DimensionEquality, f, s.lhs.dim() == s.rhs.dim()));

    let mut lands = true;
    let mut iso = Matrix::zeros(f, s.rhs.dim(), s.lhs.dim());
    let mut images = Vec::new();
    for (k, v) in s.lhs.basis_vectors().iter().enumerate() {
        let gamma = unvec(f, sd, nd, v);
        let image = phi(&s, ld, md, nd, &gamma)?;
        let w = vec(&image);
        if s.rhs.contains(&w) {
            for (r, x) in s.rhs.coordinates(&w).into_iter().enumerate() {
                iso.set(r, k, x);
            }
        } else {
            lands = false;
        }
        images.push((gamma, image));
    }
    let mut lands_check = AxiomCheck::holds(Axiom::HomomorphismSquare, f, lands);
    lands_check.scope = "image of the comparison map".into();
    checks.push(lands_check);
    let bijective = lands && iso.is_square() && iso.inverse().is_some();
    checks.push(AxiomCheck::holds(Axiom::Bijectivity, f, bijective));

    for (i, g) in l_maps.iter().enumerate() {
        precondition(right_comodule_hom_square(l, &g.target, &g.map)?, &format!("L morphism {i}"))?;
        let target = sides(&g.target, m, n)?;
        let induced = cotensor_map(&s.cotensor, &target.cotensor, &g.map)?;
        let mut pairs = Vec::new();
        for (gamma, image) in &images {
            let lhs = phi(&target, g.target.dim(), md, nd, &(&induced * gamma))?;
            pairs.push((lhs, &g.map * image));
        }
        checks.push(naturality(&format!("in L, morphism {i}"), f, pairs));
    }

    for (i, t) in n_maps.iter().enumerate() {
        precondition(contramodule_hom_square(&t.source, n, &t.map)?, &format!("N morphism {i}"))?;
        let source = sides(l, m, &t.source)?;
        let dual = cohom_map(&s.cohom, &source.cohom, &t.map)?;
        let mut pairs = Vec::new();
        for (gamma, image) in &images {
            let lhs = phi(&source, ld, md, t.source.dim(), &(gamma * &t.map))?;
            pairs.push((lhs, image * &dual));
        }
        checks.push(naturality(&format!("in N, morphism {i}"), f, pairs));
    }

    Ok(AdjunctionReport {
        lhs_dim: s.lhs.dim(),
        rhs_dim: s.rhs.dim(),
        iso,
        checks: CertReport::new(checks),
    })
}

fn precondition(check: AxiomCheck, what: &str) -> Result<()> {
    if check.verdict.passed() {
        Ok(())
    } else {
        Err(Error::NotCertified {
            what: what.into(),
            failed: check.label(),
        })
    }
}

/// First failing pair, or PASS; vacuous when the space is zero.
fn naturality(scope: &str, field: crate::field::FieldSpec, pairs: Vec<(Matrix, Matrix)>) -> AxiomCheck {
    let mut check = pairs
        .iter()
        .map(|(a, b)| AxiomCheck::compare(Axiom::Naturality, a, b))
        .find(|c| !c.verdict.passed())
        .unwrap_or_else(|| AxiomCheck::holds(Axiom::Naturality, field, true));
    check.scope = scope.into();
    check
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{divided_power, grouplike, matrix_coalgebra};
    use crate::duality::{contramodule_to_dmodule, contramodule_to_comodule};
    use crate::field::FieldSpec;
    use crate::hom::commutation;
    use crate::module::hom_right_modules;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn graded(n: usize, dims: &[usize]) -> Comodule {
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
        RightComodule::from_opposite(&graded(n, dims), &grouplike(Q, n)).unwrap()
    }

    #[test]
    fn mixed_hom_over_base_field_is_everything() {
        let n = comodule_to_contramodule(&graded(1, &[2]));
        let m = graded_right(1, &[3]);
        assert_eq!(mixed_hom(&n, &m).unwrap().dim(), 6);
    }

    #[test]
    fn graded_mixed_hom_and_module_oracle() {
        let nx = graded(2, &[1, 2]);
        let n = comodule_to_contramodule(&nx);
        let m = graded_right(2, &[2, 1]);
        let h = mixed_hom(&n, &m).unwrap();
        assert_eq!(h.dim(), 1 * 2 + 2 * 1);
        let m_star = m.dual_module().unwrap();
        let n_star = contramodule_to_dmodule(&n).unwrap();
        let oracle = hom_right_modules(&m_star, &n_star).unwrap();
        assert_eq!(oracle.dim(), h.dim());
        let transposed = h.image(&commutation(Q, m.dim(), n.dim()));
        assert_eq!(transposed, oracle);
        let _ = contramodule_to_comodule(&n);
    }

    #[test]
    fn cohom_over_base_field() {
        let k = grouplike(Q, 1);
        let m = Bicomodule::trivial_right(&graded(1, &[2]));
        let n = comodule_to_contramodule(&Comodule::regular(&k).direct_sum(&Comodule::regular(&k)).unwrap());
        let h = cohom(&m, &n).unwrap();
        assert_eq!(h.contramodule.dim(), 4);
        assert!(h.contramodule.check().passed());
    }

    #[test]
    fn cohom_of_regular_bicomodule() {
        let c = divided_power(Q, 2);
        let m = Bicomodule::regular(&c);
        let n = comodule_to_contramodule(&Comodule::regular(&c));
        let h = cohom(&m, &n).unwrap();
        assert!(h.contramodule.check().passed());
        assert_eq!(h.contramodule.dim(), 3);
    }

    #[test]
    fn adjunction_over_base_field() {
        let l = graded_right(1, &[2]);
        let m = Bicomodule::trivial_right(&graded(1, &[2]));
        let n = comodule_to_contramodule(&graded(1, &[1]));
        let r = adjunction_check(&l, &m, &n, &[], &[]).unwrap();
        assert!(r.passed(), "{}", r.checks);
        assert_eq!(r.lhs_dim, 4);
    }

    #[test]
    fn adjunction_matrix_coalgebra_with_naturality() {
        let c = matrix_coalgebra(Q, 2);
        let m = Bicomodule::trivial_right(&Comodule::regular(&c));
        let l = RightComodule::regular(&c);
        let n = comodule_to_contramodule(&graded(1, &[2]));
        let l2 = l.direct_sum(&l).unwrap();
        let incl = Matrix::identity(Q, 4).vstack(&Matrix::zeros(Q, 4, 4));
        let t_source = comodule_to_contramodule(&graded(1, &[1]));
        let t = Matrix::from_i64(Q, 2, 1, &[1, 3]);
        let r = adjunction_check(
            &l,
            &m,
            &n,
            &[LMorphism { target: l2, map: incl }],
            &[NMorphism { source: t_source, map: t }],
        )
        .unwrap();
        assert!(r.passed(), "{}", r.checks);
        assert_eq!(r.lhs_dim, r.rhs_dim);
    }

    #[test]
    fn adjunction_regular_bicomodule() {
        let c = divided_power(Q, 1);
        let m = Bicomodule::regular(&c);
        let l = RightComodule::regular(&c);
        let n = comodule_to_contramodule(&Comodule::regular(&c));
        let r = adjunction_check(&l, &m, &n, &[], &[]).unwrap();
        assert!(r.passed(), "{}", r.checks);
    }
}
