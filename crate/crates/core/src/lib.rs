//! Exact computations with ideal triangulations of cusped orientable
//! 3-manifolds: hyperbolic gluing equations, Q-matching equations and the
//! projectivised admissible solution space of spun-normal surface theory,
//! boundary-slope functionals, semi-angle structures with duality
//! certificates, and the tropical pre-variety with its correspondence to
//! admissible solutions.
//!
//! The shape-symbol convention is fixed once in [`tri`]: in every
//! tetrahedron the edge pair 01/23 carries the label z, 03/12 carries z',
//! and 02/13 carries z''; the quadrilateral type q (resp. q', q'')
//! separates the z-pair (resp. z'-, z''-pair). All other modules import
//! this convention.

pub mod angles;
pub mod equations;
pub mod surfaces;
pub mod tri;
pub mod tropical;

pub use spuntrop_hull as hull;
