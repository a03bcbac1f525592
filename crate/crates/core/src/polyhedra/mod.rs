//! Rational polyhedral cones, lattice polytopes and point configurations.
//!
//! Cones are kept in generator form; facets come from a placing
//! triangulation computed in integer coordinates on the span of the cone.
//! Hilbert bases and saturation tests enumerate the lattice points of the
//! half-open parallelepipeds of the triangulation's cells.

mod chart;
mod cone;
mod polytope;
pub(crate) mod triangulate;

pub use chart::Chart;
pub use cone::{monoid_is_saturated, monoid_is_saturated_budgeted, Cone, Face, SaturationReport, DEFAULT_POINT_BUDGET};
pub use polytope::{EhrhartPolynomial, PointConfig, Polytope};
