//! Exact finite-dimensional coalgebra workbench: comodules, contramodules,
//! modules over the dual algebra, the dualities between them, cotensor and
//! cohom functors.

pub mod cert;
pub mod coalgebra;
pub mod cohom;
pub mod comodule;
pub mod cotensor;
pub mod diagrams;
pub mod duality;
pub mod error;
pub mod field;
pub mod format;
pub mod hom;
pub mod matrix;
pub mod module;
pub mod random;
pub mod tower;
pub mod workbench;

pub use cert::{Axiom, AxiomCheck, CertReport, Verdict, Witness};
pub use coalgebra::{dual_algebra, Algebra, Coalgebra};
pub use comodule::{Comodule, Contramodule};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::{kernel_basis, kron, quotient_map, rref, Matrix, Subspace};
pub use module::{LeftModule, RightModule, ThetaModule};
pub use cotensor::{Bicomodule, RightComodule};
pub use format::Structure;
pub use tower::FiniteTower;
