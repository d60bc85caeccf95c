//! Exact computation of confluence relations among multiple zeta values.
//!
//! The crate works in the word algebra `A_z = Q<e0, e1, ez>` whose words
//! encode iterated integrals on `P^1 \ {0, 1, ∞, z}`. It provides
//!
//! - [`algebra`]: words, sparse rational polynomials, shuffle and stuffle
//!   products, the dualities and the derivations `∂_{α,β}`;
//! - [`regularization`]: `reg_⧢` and the tensor decompositions `reg_{z,1}`,
//!   `reg_{z}`;
//! - [`confluence`]: `φ_⊗`, `φ_⧢`, `φ_*`, `N`, `λ` and the relation
//!   generators (confluence, regularized double shuffle, duality);
//! - [`golden`]: reference relation bodies at weights 3 and 4;
//! - [`linalg`]: exact echelon bases, ranks and span membership;
//! - [`numeric`]: extended-precision evaluation of multiple zeta values and
//!   hyperlogarithms for numerical validation;
//! - [`checks`]: seeded verification suites over the identities above;
//! - [`io`]: text forms, zeta rendering and the JSON-lines relation format.

pub mod algebra;
pub mod checks;
pub mod confluence;
pub mod error;
pub mod golden;
pub mod io;
pub mod linalg;
pub mod numeric;
pub mod regularization;

pub use algebra::{Letter, NCPoly, Rational, SubspaceTag, Word};
pub use confluence::{Family, Mode, RelationRecord, Source};
pub use error::{Error, Result};
pub use regularization::TensorSum;
