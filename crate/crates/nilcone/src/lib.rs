//! Orbit labels in the enhanced and cyclic enhanced nilpotent cones, computed
//! through explicit representations of the framed cyclic quiver.

pub mod circle_diagrams;
pub mod decomposer;
pub mod exec;
pub mod linalg;
pub mod orbit_maps;
pub mod partitions;
pub mod rep_builder;
pub mod rep_type;
pub mod residues;

pub use exec::Exec;
