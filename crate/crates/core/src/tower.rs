//! Finite inverse systems of contramodules and their limits.

use crate::cert::{Axiom, AxiomCheck, CertReport};
use crate::comodule::{contramodule_hom_square, same_coalgebra, Contramodule};
use crate::error::{shape, Error, Result};
use crate::hom::{id, postcompose};
use crate::matrix::{kernel_basis, Matrix};

/// `Z_0 ← Z_1 ← … ← Z_T` with `transitions[i] : Z_{i+1} → Z_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTower {
    levels: Vec<Contramodule>,
    transitions: Vec<Matrix>,
}

/// The limit together with its projections to every level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitCone {
    pub limit: Contramodule,
    pub legs: Vec<Matrix>,
}

impl FiniteTower {
    pub fn new(levels: Vec<Contramodule>, transitions: Vec<Matrix>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Shape {
                what: "tower levels".into(),
                expected: (1, 0),
                found: (0, 0),
            });
        }
        shape("tower transitions", (levels.len() - 1, 1), (transitions.len(), 1))?;
        for z in &levels[1..] {
            same_coalgebra(levels[0].over(), z.over())?;
        }
        for (i, f) in transitions.iter().enumerate() {
            shape(
                format!("transition {i}"),
                (levels[i].dim(), levels[i + 1].dim()),
                f.shape(),
            )?;
        }
        Ok(Self { levels, transitions })
    }

    /// The constant tower on `z` of the given length.
    pub fn constant(z: &Contramodule, length: usize) -> Self {
        let f = z.field();
        Self {
            levels: vec![z.clone(); length + 1],
            transitions: vec![id(f, z.dim()); length],
        }
    }

    pub fn levels(&self) -> &[Contramodule] {
        &self.levels
    }

    pub fn transitions(&self) -> &[Matrix] {
        &self.transitions
    }

    pub fn top(&self) -> &Contramodule {
        self.levels.last().expect("towers are nonempty")
    }

    pub fn check(&self) -> CertReport {
        let mut report = CertReport::default();
        for (i, z) in self.levels.iter().enumerate() {
            report.absorb(&format!("level {i}"), z.check());
        }
        for (i, f) in self.transitions.iter().enumerate() {
            let square = contramodule_hom_square(&self.levels[i + 1], &self.levels[i], f)
                .expect("validated in the constructor");
            report.absorb(&format!("transition {i}"), CertReport::new(vec![square]));
        }
        report
    }
}

/// Compatible tuples in `⊕ Z_i` with the induced contraaction.
pub fn tower_limit(t: &FiniteTower) -> Result<Contramodule> {
    Ok(limit_cone(t)?.limit)
}

pub fn limit_cone(t: &FiniteTower) -> Result<LimitCone> {
    if let Some(c) = t.check().first_failure() {
        return Err(Error::NotCertified {
            what: "tower".into(),
            failed: c.label(),
        });
    }
    let c = t.levels[0].over().clone();
    let f = c.field();
    let n = c.dim();
    let dims: Vec<usize> = t.levels.iter().map(Contramodule::dim).collect();
    let total: usize = dims.iter().sum();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let projection = |i: usize| {
        Matrix::from_fn(f, dims[i], total, |r, col| {
            if col == offsets[i] + r {
                f.one()
            } else {
                f.zero()
            }
        })
    };

    // θ_P(F) = (θ_i(π_i ∘ F))_i on the product.
    let mut theta_product = Matrix::zeros(f, 0, n * total);
    for (i, z) in t.levels.iter().enumerate() {
        theta_product = theta_product.vstack(&(z.theta() * &postcompose(&projection(i), n)));
    }
    let product = Contramodule::new(c.clone(), total, theta_product)?;

    // z_i = f_i(z_{i+1}) for every i.
    let mut constraints = Matrix::zeros(f, 0, total);
    for (i, map) in t.transitions.iter().enumerate() {
        constraints = constraints.vstack(&(&(map * &projection(i + 1)) - &projection(i)));
    }
    let space = kernel_basis(&constraints);
    let limit = product
        .restrict(&space)
        .map_err(|_| Error::Internal("compatible tuples are not closed under the contraaction".into()))?;
    let incl = space.inclusion();
    let legs = (0..t.levels.len()).map(|i| &projection(i) * &incl).collect();
    Ok(LimitCone { limit, legs })
}

/// Checks that the leg to the top level is a bijective contramodule map.
pub fn check_top_isomorphism(t: &FiniteTower, cone: &LimitCone) -> Result<CertReport> {
    let leg = cone.legs.last().expect("towers are nonempty");
    let square = contramodule_hom_square(&cone.limit, t.top(), leg)?;
    let bijective = leg.is_square() && leg.inverse().is_some();
    let invertible = AxiomCheck::holds(Axiom::Bijectivity, leg.field(), bijective);
    let mut report = CertReport::default();
    report.absorb("top leg", CertReport::new(vec![square, invertible]));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::divided_power;
    use crate::comodule::Comodule;
    use crate::duality::comodule_to_contramodule;
    use crate::field::FieldSpec;
    use crate::matrix::Subspace;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn constant_tower_limit() {
        let c = divided_power(Q, 2);
        let z = comodule_to_contramodule(&Comodule::regular(&c));
        let t = FiniteTower::constant(&z, 3);
        let cone = limit_cone(&t).unwrap();
        assert_eq!(cone.limit.dim(), 3);
        assert!(cone.limit.check().passed());
        assert!(check_top_isomorphism(&t, &cone).unwrap().passed());
    }

    #[test]
    fn single_level() {
        let c = divided_power(Q, 1);
        let z = comodule_to_contramodule(&Comodule::regular(&c));
        let t = FiniteTower::new(vec![z.clone()], vec![]).unwrap();
        assert_eq!(tower_limit(&t).unwrap(), z);
    }

    /// Duals of `span(c0) ⊆ span(c0, c1) ⊆ DP(2)` over `DP(2)`.
    #[test]
    fn divided_power_filtration() {
        let c = divided_power(Q, 2);
        let x = Comodule::regular(&c);
        let subs: Vec<Subspace> = (1..=3)
            .map(|k| {
                let vs: Vec<_> = (0..k).map(|i| (0..3).map(|j| if i == j { Q.one() } else { Q.zero() }).collect()).collect();
                Subspace::span(Q, 3, &vs)
            })
            .collect();
        let levels: Vec<Contramodule> =
            subs.iter().map(|w| comodule_to_contramodule(&x.restrict(w).unwrap())).collect();
        let transitions: Vec<Matrix> =
            (0..2).map(|i| (&subs[i + 1].coordinate_map() * &subs[i].inclusion()).transpose()).collect();
        let t = FiniteTower::new(levels, transitions).unwrap();
        assert!(t.check().passed());
        let cone = limit_cone(&t).unwrap();
        assert!(cone.limit.check().passed());
        assert_eq!(cone.limit.dim(), 3);
        assert!(check_top_isomorphism(&t, &cone).unwrap().passed());
    }

    #[test]
    fn broken_transition_rejected() {
        let c = divided_power(Q, 1);
        let z = comodule_to_contramodule(&Comodule::regular(&c));
        let bad = Matrix::from_i64(Q, 2, 2, &[0, 0, 0, 1]);
        let t = FiniteTower::new(vec![z.clone(), z], vec![bad]).unwrap();
        assert!(matches!(tower_limit(&t), Err(Error::NotCertified { .. })));
    }
}
