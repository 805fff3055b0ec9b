//! Exact arithmetic for crystallographic complex reflection groups
//! `G(r,p,n) ⋉ Λ`: reflecting hyperplanes, fixed spaces, and checks of the
//! Steinberg property (nonregular points are exactly the points on
//! reflecting hyperplanes).

pub mod affine;
pub mod catalog;
pub mod hyperplanes;
pub mod lattices;
pub mod linalg;
pub mod plot;
pub mod scalars;
pub mod steinberg;
