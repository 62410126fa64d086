//! Link diagrams modulo 3-moves: PD codes, Reidemeister and 3-move search,
//! braid conversion, the finite braid quotients `C_n = B_n / (σ1³)`, third
//! Burnside groups of links, and the Jones polynomial.

pub mod braid;
pub mod burnside;
pub mod diagram;
pub mod groups;
pub mod invariants;
pub mod parallel;
pub mod pipeline;
pub mod polyhedra;
pub mod rewrite;

pub use diagram::{format_pd, parse_pd, signature, Crossing, LinkDiagram, LinkSignature};
