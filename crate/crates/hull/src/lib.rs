//! Exact rational polyhedral engine.
//!
//! Everything in this crate works over arbitrary-precision rationals; there
//! is no floating point anywhere. The three pillars are
//!
//! * [`nullspace`] / [`rank`] — exact linear algebra over `BigRational`,
//! * [`Cone`] with [`Cone::rays`] — extreme-ray enumeration for polyhedral
//!   cones via the double description method, with explicit lineality
//!   reporting,
//! * [`LpProblem`] with [`lp_feasible`] — LP feasibility returning either an
//!   exact feasible point or a Farkas certificate of infeasibility.
//!
//! Cones are given in H-form (equality rows `E·x = 0` and inequality rows
//! `I·x ≥ 0` through the origin); rays come back as primitive integer
//! vectors sorted lexicographically, so identical cones always enumerate to
//! identical output.

mod cone;
mod linalg;
mod lp;

pub use cone::{Cone, RayReport};
pub use linalg::{
    dot, is_zero_vec, nullspace, primitive_integer, primitive_signed, qvec_from_int, rank, rat,
    rat_int, zeros, QVec, Rat,
};
pub use lp::{lp_feasible, lp_minimize, FarkasCertificate, LpOutcome, LpProblem, MinimizeOutcome};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HullError {
    /// The cone has a nontrivial lineality space but strict extreme rays
    /// were requested. Use [`Cone::rays_with_lineality`] instead.
    #[error("cone is not pointed: lineality space has dimension {0}")]
    NotPointed(usize),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}
