//! Vanishing of graded local cohomology `H^i_J(k[Δ])` of Stanley–Reisner rings,
//! with `J` the image of the Stanley–Reisner ideal of a subcomplex `Σ ⊆ Δ`.
//!
//! Two routes are provided and compared:
//!
//! * face counting ([`local::vanishing_criterion`]): every `(d − i)`-face of
//!   `Δ` must contain enough vertices of `Σ`;
//! * direct computation ([`local::local_cohomology_vanishes`]): every graded
//!   piece is the relative cohomology of a pair of barycentric subcomplexes,
//!   evaluated exactly over ℚ or `F_p`.
//!
//! [`audit`] runs both over generated corpora.

pub mod audit;
pub mod cohomology;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod io;
pub mod local;
pub mod sr;
pub mod subdivision;

pub use cohomology::{CohomologyDims, FieldSpec};
pub use complex::{DeletionRule, Face, SimplicialComplex};
pub use error::{Error, Result};
pub use sr::SupportPair;
