//! Bundled diagrams with their expected invariants.
//!
//! Every entry is shipped as extended-PD text and checked against the values
//! recorded here by the acceptance suite: kind, crossing count, face count,
//! matrix rank and the size of the ineffective family.

use rcc_core::diagram::Diagram;

use crate::pd::{parse_diagram, PdError};

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub source: &'static str,
    pub kind: &'static str,
    pub crossings: usize,
    pub faces: usize,
    pub rank: usize,
    /// Number of ineffective region sets, `2^(faces - rank)`.
    pub ineffective_size: u64,
    pub reduced: bool,
    pub cutting_edges: &'static [&'static str],
}

impl CatalogEntry {
    pub fn diagram(&self) -> Result<Diagram, PdError> {
        parse_diagram(self.source)
    }
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        id: "kink",
        source: include_str!("../catalog/kink.pd"),
        kind: "knot",
        crossings: 1,
        faces: 3,
        rank: 1,
        ineffective_size: 4,
        reduced: false,
        cutting_edges: &[],
    },
    CatalogEntry {
        id: "trefoil",
        source: include_str!("../catalog/trefoil.pd"),
        kind: "knot",
        crossings: 3,
        faces: 5,
        rank: 3,
        ineffective_size: 4,
        reduced: true,
        cutting_edges: &[],
    },
    CatalogEntry {
        id: "fig8",
        source: include_str!("../catalog/fig8.pd"),
        kind: "knot",
        crossings: 4,
        faces: 6,
        rank: 4,
        ineffective_size: 4,
        reduced: true,
        cutting_edges: &[],
    },
    CatalogEntry {
        id: "theta_0",
        source: include_str!("../catalog/theta_0.pd"),
        kind: "theta",
        crossings: 0,
        faces: 3,
        rank: 0,
        ineffective_size: 8,
        reduced: true,
        cutting_edges: &[],
    },
    CatalogEntry {
        id: "theta_t31",
        source: include_str!("../catalog/theta_t31.pd"),
        kind: "theta",
        crossings: 3,
        faces: 6,
        rank: 3,
        ineffective_size: 8,
        reduced: true,
        cutting_edges: &[],
    },
    CatalogEntry {
        id: "theta_t31_r2",
        source: include_str!("../catalog/theta_t31_r2.pd"),
        kind: "theta",
        crossings: 5,
        faces: 8,
        rank: 5,
        ineffective_size: 8,
        reduced: true,
        cutting_edges: &[],
    },
    CatalogEntry {
        id: "handcuff_0",
        source: include_str!("../catalog/handcuff_0.pd"),
        kind: "handcuff",
        crossings: 0,
        faces: 3,
        rank: 0,
        ineffective_size: 8,
        reduced: true,
        cutting_edges: &["e3"],
    },
    CatalogEntry {
        id: "handcuff_cut",
        source: include_str!("../catalog/handcuff_cut.pd"),
        kind: "handcuff",
        crossings: 3,
        faces: 6,
        rank: 2,
        ineffective_size: 16,
        reduced: false,
        cutting_edges: &["e3"],
    },
];

pub fn lookup(id: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.id == id)
}

/// The reduced theta-curve entries, the hypotheses of the main lemmas.
pub fn reduced_thetas() -> impl Iterator<Item = &'static CatalogEntry> {
    ENTRIES.iter().filter(|e| e.kind == "theta" && e.reduced)
}
