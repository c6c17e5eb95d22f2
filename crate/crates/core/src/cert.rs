//! Axiom certificates: one verdict per commuting diagram, with a witness
//! basis vector on failure.

use std::fmt;

use crate::field::Scalar;
use crate::matrix::Matrix;

/// The commuting diagrams the certifiers know about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Coassociativity,
    LeftCounit,
    RightCounit,
    Associativity,
    LeftUnit,
    RightUnit,
    ComoduleSquare,
    ComoduleTriangle,
    ContramoduleSquare,
    ContramoduleTriangle,
    ActionAssociativity,
    ActionUnit,
    ThetaSquare,
    ThetaTriangle,
    BicomoduleCompatibility,
    HomomorphismSquare,
    ReshuffleSquare,
    CoproductNaturality,
    CoactionNaturality,
    CounitNaturality,
    DualCoaction,
    Bijectivity,
    DimensionEquality,
    Naturality,
}

impl Axiom {
    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "counit (left)",
            Axiom::RightCounit => "counit (right)",
            Axiom::Associativity => "associativity",
            Axiom::LeftUnit => "unit (left)",
            Axiom::RightUnit => "unit (right)",
            Axiom::ComoduleSquare => "comodule square",
            Axiom::ComoduleTriangle => "comodule triangle",
            Axiom::ContramoduleSquare => "contramodule square",
            Axiom::ContramoduleTriangle => "contramodule triangle",
            Axiom::ActionAssociativity => "action associativity",
            Axiom::ActionUnit => "action unit",
            Axiom::ThetaSquare => "theta square",
            Axiom::ThetaTriangle => "theta triangle",
            Axiom::BicomoduleCompatibility => "bicomodule compatibility",
            Axiom::HomomorphismSquare => "homomorphism square",
            Axiom::ReshuffleSquare => "reshuffle square",
            Axiom::CoproductNaturality => "psi naturality at comultiplication",
            Axiom::CoactionNaturality => "psi naturality at coaction",
            Axiom::CounitNaturality => "psi naturality at counit",
            Axiom::DualCoaction => "dual coaction",
            Axiom::Bijectivity => "bijectivity",
            Axiom::DimensionEquality => "dimension equality",
            Axiom::Naturality => "naturality",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A domain basis vector on which the two composites of a diagram differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub basis_index: usize,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// Which part of a compound structure was checked ("level 2",
    /// "right coaction", ...). Empty for simple structures.
    pub scope: String,
    pub verdict: Verdict,
}

impl AxiomCheck {
    /// Compares two composites column by column.
    pub fn compare(axiom: Axiom, lhs: &Matrix, rhs: &Matrix) -> Self {
        let verdict = match lhs.first_differing_column(rhs) {
            None => Verdict::Pass,
            Some(c) => Verdict::Fail(Witness {
                basis_index: c,
                lhs: lhs.column(c),
                rhs: rhs.column(c),
            }),
        };
        AxiomCheck {
            axiom,
            scope: String::new(),
            verdict,
        }
    }

    /// A yes/no property; the witness on failure is the 1×1 pair (0, 1).
    pub fn holds(axiom: Axiom, field: crate::field::FieldSpec, ok: bool) -> Self {
        let one = Matrix::identity(field, 1);
        let got = if ok { one.clone() } else { Matrix::zeros(field, 1, 1) };
        Self::compare(axiom, &got, &one)
    }

    pub fn label(&self) -> String {
        if self.scope.is_empty() {
            self.axiom.name().to_string()
        } else {
            format!("{} [{}]", self.axiom.name(), self.scope)
        }
    }
}

/// Per-diagram verdicts for one structure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertReport {
    pub checks: Vec<AxiomCheck>,
}

impl CertReport {
    pub fn new(checks: Vec<AxiomCheck>) -> Self {
        Self { checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.passed())
    }

    /// Verdict of the first check of `axiom`, if present.
    pub fn verdict(&self, axiom: Axiom) -> Option<bool> {
        self.checks
            .iter()
            .find(|c| c.axiom == axiom)
            .map(|c| c.verdict.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.verdict.passed())
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.failures().next()
    }

    /// Appends `other`'s checks under a scope label.
    pub fn absorb(&mut self, scope: &str, other: CertReport) {
        for mut c in other.checks {
            c.scope = if c.scope.is_empty() {
                scope.to_string()
            } else if scope.is_empty() {
                c.scope
            } else {
                format!("{scope}/{}", c.scope)
            };
            self.checks.push(c);
        }
    }
}

impl fmt::Display for CertReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.verdict {
                Verdict::Pass => writeln!(f, "PASS {}", c.label())?,
                Verdict::Fail(w) => writeln!(f, "FAIL {} (witness basis index {})", c.label(), w.basis_index)?,
            }
        }
        Ok(())
    }
}
