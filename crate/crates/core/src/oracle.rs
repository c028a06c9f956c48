//! Brute-force ground truth for the solver.
//!
//! Every subset of regions is applied as a region crossing change and the
//! resulting diagram compared against the target pattern. No linear algebra
//! is involved, so agreement with `solve_target` validates the matrix model
//! end to end.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::Diagram;
use crate::label::CrossingLabel;
use crate::rcc::{solve_target, RccError, RegionSet};
use crate::region::{RegionError, RegionTable};

/// Hard bound on the face count; beyond this the subset space is too large.
pub const FACE_GUARD: usize = 20;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleError {
    GuardExceeded { faces: usize },
    Region(RegionError),
    Rcc(RccError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::GuardExceeded { faces } => {
                write!(f, "{faces} regions exceed the brute-force guard of {FACE_GUARD}")
            }
            OracleError::Region(e) => e.fmt(f),
            OracleError::Rcc(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<RegionError> for OracleError {
    fn from(e: RegionError) -> Self {
        OracleError::Region(e)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleReport {
    pub diagram_id: Option<String>,
    pub target: Vec<CrossingLabel>,
    pub subsets_examined: u64,
    /// Region sets whose crossing changes realize the target, canonically
    /// ordered.
    pub matching: Vec<RegionSet>,
    /// What the solver returned (empty when it reports the target
    /// unrealizable).
    pub solver: Vec<RegionSet>,
    pub agreement: bool,
}

/// Exhaustively find every region set realizing `target`.
pub fn brute_force_solutions(
    d: &Diagram,
    target: &[CrossingLabel],
) -> Result<Vec<RegionSet>, OracleError> {
    let table = RegionTable::build(d)?;
    let f = table.len();
    if f > FACE_GUARD {
        return Err(OracleError::GuardExceeded { faces: f });
    }
    for c in target {
        if d.crossing_by_label(c).is_none() {
            return Err(OracleError::Rcc(RccError::UnknownCrossing(c.clone())));
        }
    }
    let mut want: Vec<CrossingLabel> = target.to_vec();
    want.sort();
    want.dedup();

    // Work in canonical column order so the families compare entrywise.
    let order = table.label_order();
    let mut matching: Vec<Vec<usize>> = Vec::new();
    for mask in 0u64..(1u64 << f) {
        let chosen: Vec<usize> = (0..f).filter(|i| (mask >> i) & 1 == 1).collect();
        // Apply the region crossing changes of this subset literally.
        let mut parity = alloc::vec![false; d.crossing_count()];
        for &col in &chosen {
            for &c in &table.regions()[order[col]].crossings {
                parity[c] = !parity[c];
            }
        }
        let toggled: Vec<usize> =
            parity.iter().enumerate().filter(|(_, t)| **t).map(|(i, _)| i).collect();
        let candidate = d.with_toggled(&toggled);
        let mut diff = candidate
            .over_difference(d)
            .expect("rcc never changes the underlying map");
        diff.sort();
        if diff == want {
            matching.push(chosen);
        }
    }
    matching.sort_by_key(|s| (s.len(), s.clone()));
    Ok(matching
        .into_iter()
        .map(|s| s.into_iter().map(|col| table.regions()[order[col]].label.clone()).collect())
        .collect())
}

/// Compare the brute force against the solver on one target.
pub fn cross_check(
    d: &Diagram,
    target: &[CrossingLabel],
    diagram_id: Option<&str>,
) -> Result<OracleReport, OracleError> {
    let table = RegionTable::build(d)?;
    let f = table.len();
    if f > FACE_GUARD {
        return Err(OracleError::GuardExceeded { faces: f });
    }
    let matching = brute_force_solutions(d, target)?;
    let solver = match solve_target(d, target, 1u64 << f) {
        Ok(family) => family,
        Err(RccError::Unrealizable) => Vec::new(),
        Err(e) => return Err(OracleError::Rcc(e)),
    };
    let agreement = matching == solver;
    Ok(OracleReport {
        diagram_id: diagram_id.map(String::from),
        target: target.to_vec(),
        subsets_examined: 1u64 << f,
        matching,
        solver,
        agreement,
    })
}
