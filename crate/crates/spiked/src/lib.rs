//! Arc complexes and admissible deformation cones of the four families of
//! spiked hyperbolic surfaces whose arc complex is finite: ideal polygons,
//! once-punctured polygons, crowns and spiked Möbius strips.

pub mod complex;
pub mod cone;
pub mod correspond;
pub mod geometry;
pub mod rational;
pub mod surface;

pub use complex::Complex;
pub use surface::{Arc, Beta, Family, SurfaceSpec};
