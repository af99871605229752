//! Exact-arithmetic workbench for the braid group's Specht subgroups,
//! small symmetric-group modules, and low-degree group cohomology.

pub mod linalg;
pub mod braid;
pub mod cohomology;
pub mod modules;
pub mod perm;
pub mod reference;
pub mod resolution;
pub mod ring;
