//! Combinatorial diagrams of knots, spatial theta-curves and handcuff graphs,
//! together with the exact GF(2) linear algebra of region crossing changes.
//!
//! A diagram is stored as a combinatorial map: crossings (degree 4) and
//! trivalent vertices (degree 3) with a counterclockwise rotation of arc ends
//! at every site. Faces are traced from the rotation system, which gives the
//! regions of the diagram, the region choice matrix, and everything built on
//! top of it: solving crossing-change targets, ineffective region sets,
//! checkerboard pullbacks and the brute-force oracle.
//!
//! The crate is `no_std` (with `alloc`); parsing, serialization and the CLI
//! live in the companion `rcc-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod coloring;
pub mod diagram;
pub mod edges;
pub mod fixtures;
pub mod gf2;
pub mod label;
pub mod moves;
pub mod oracle;
pub mod rcc;
pub mod region;
pub mod subknot;
mod surgery;
pub mod validate;

pub use diagram::{Corner, CrossingSite, Dart, Diagram, DiagramError, OverPair, SiteId, VertexSite};
pub use label::{ArcLabel, CrossingLabel, EdgeLabel, RegionLabel, VertexLabel};
pub use region::{Region, RegionTable};
