//! Region crossing changes and the region choice matrix.
//!
//! The matrix has one row per crossing and one column per region, with a 1
//! wherever the region is adjacent to the crossing. Adjacency is boolean: a
//! region meeting a crossing at two corners still contributes a single 1 and
//! a single toggle, which is what makes reducible diagrams and cutting edges
//! interesting.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::Diagram;
use crate::gf2::{BitMatrix, BitVec, Gf2Error};
use crate::label::{CrossingLabel, RegionLabel};
use crate::region::{RegionError, RegionTable};

/// A set of regions, kept as sorted column indices of the matrix it belongs
/// to. Families of these are ordered by cardinality, then entrywise.
pub type RegionSet = Vec<RegionLabel>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RccError {
    Region(RegionError),
    UnknownRegion(RegionLabel),
    UnknownCrossing(CrossingLabel),
    /// The target is not in the image of the matrix: no set of region
    /// crossing changes realizes it.
    Unrealizable,
    CapExceeded { needed: u64, cap: u64 },
}

impl fmt::Display for RccError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RccError::Region(e) => e.fmt(f),
            RccError::UnknownRegion(r) => write!(f, "unknown region `{r}`"),
            RccError::UnknownCrossing(c) => write!(f, "unknown crossing `{c}`"),
            RccError::Unrealizable => {
                f.write_str("unrealizable: no region set produces this crossing change")
            }
            RccError::CapExceeded { needed, cap } => {
                write!(f, "solution family of size {needed} exceeds cap {cap}")
            }
        }
    }
}

impl core::error::Error for RccError {}

impl From<RegionError> for RccError {
    fn from(e: RegionError) -> Self {
        RccError::Region(e)
    }
}

/// The region choice matrix with its row and column labelings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionChoiceMatrix {
    matrix: BitMatrix,
    crossings: Vec<CrossingLabel>,
    regions: Vec<RegionLabel>,
}

impl RegionChoiceMatrix {
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn crossing_labels(&self) -> &[CrossingLabel] {
        &self.crossings
    }

    pub fn region_labels(&self) -> &[RegionLabel] {
        &self.regions
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn nullity(&self) -> usize {
        self.matrix.nullity()
    }

    pub fn region_index(&self, label: &RegionLabel) -> Result<usize, RccError> {
        self.regions
            .iter()
            .position(|r| r == label)
            .ok_or_else(|| RccError::UnknownRegion(label.clone()))
    }

    pub fn crossing_index(&self, label: &CrossingLabel) -> Result<usize, RccError> {
        self.crossings
            .iter()
            .position(|c| c == label)
            .ok_or_else(|| RccError::UnknownCrossing(label.clone()))
    }

    /// Indicator vector of a set of region labels.
    pub fn region_vector(&self, set: &[RegionLabel]) -> Result<BitVec, RccError> {
        let mut v = BitVec::zeros(self.regions.len());
        for label in set {
            v.set(self.region_index(label)?, true);
        }
        Ok(v)
    }

    /// Indicator vector of a set of crossing labels.
    pub fn target_vector(&self, set: &[CrossingLabel]) -> Result<BitVec, RccError> {
        let mut v = BitVec::zeros(self.crossings.len());
        for label in set {
            v.set(self.crossing_index(label)?, true);
        }
        Ok(v)
    }

    /// Crossings toggled by changing every region in `set` once: `M x`.
    pub fn toggles_for(&self, set: &[RegionLabel]) -> Result<Vec<CrossingLabel>, RccError> {
        let x = self.region_vector(set)?;
        let b = self.matrix.mul_vec(&x).expect("dimensions fixed by construction");
        Ok(b.ones().map(|i| self.crossings[i].clone()).collect())
    }

    fn to_labels(&self, v: &BitVec) -> RegionSet {
        v.ones().map(|i| self.regions[i].clone()).collect()
    }

    fn sorted_family(&self, mut vs: Vec<BitVec>) -> Vec<RegionSet> {
        vs.sort_by_key(|v| (v.count_ones(), v.ones().collect::<Vec<_>>()));
        vs.iter().map(|v| self.to_labels(v)).collect()
    }
}

/// Build the region choice matrix of a connected diagram.
///
/// Rows follow the crossing declaration order; columns follow natural region
/// label order, so the pinned catalog labelings come out as `R1..Rf`.
pub fn region_choice_matrix(d: &Diagram) -> Result<RegionChoiceMatrix, RccError> {
    let table = RegionTable::build(d)?;
    let crossings: Vec<CrossingLabel> =
        d.crossings().iter().map(|c| c.label.clone()).collect();
    let order = table.label_order();
    let regions: Vec<RegionLabel> =
        order.iter().map(|&r| table.label(r).clone()).collect();
    let mut matrix = BitMatrix::zeros(crossings.len(), regions.len());
    for (j, &r) in order.iter().enumerate() {
        for &i in &table.regions()[r].crossings {
            matrix.set(i, j, true);
        }
    }
    Ok(RegionChoiceMatrix { matrix, crossings, regions })
}

/// Perform the region crossing changes at every region in `set`.
///
/// Each region toggles every crossing adjacent to it exactly once, so a
/// crossing flips when an odd number of chosen regions touch it. The
/// underlying map is untouched.
pub fn apply_rcc(d: &Diagram, set: &[RegionLabel]) -> Result<Diagram, RccError> {
    let table = RegionTable::build(d)?;
    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    for label in set {
        let id = table
            .index_of(label)
            .ok_or_else(|| RccError::UnknownRegion(label.clone()))?;
        chosen.insert(id);
    }
    let mut toggle_parity = alloc::vec![false; d.crossing_count()];
    for id in chosen {
        for &crossing in &table.regions()[id].crossings {
            toggle_parity[crossing] = !toggle_parity[crossing];
        }
    }
    let toggled: Vec<usize> =
        toggle_parity.iter().enumerate().filter(|(_, t)| **t).map(|(i, _)| i).collect();
    Ok(d.with_toggled(&toggled))
}

/// All region sets whose crossing changes flip exactly the target crossings.
pub fn solve_target(
    d: &Diagram,
    target: &[CrossingLabel],
    cap: u64,
) -> Result<Vec<RegionSet>, RccError> {
    let m = region_choice_matrix(d)?;
    let b = m.target_vector(target)?;
    match m.matrix.enumerate_solutions(&b, cap) {
        Ok(vs) => Ok(m.sorted_family(vs)),
        Err(Gf2Error::Inconsistent) => Err(RccError::Unrealizable),
        Err(Gf2Error::CapExceeded { needed, cap }) => Err(RccError::CapExceeded { needed, cap }),
        Err(_) => unreachable!("dimensions fixed by construction"),
    }
}

/// All region sets whose crossing changes leave the diagram unchanged: the
/// nullspace of the region choice matrix as a family of sets.
pub fn ineffective_family(d: &Diagram, cap: u64) -> Result<Vec<RegionSet>, RccError> {
    solve_target(d, &[], cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::gf2::DEFAULT_CAP;

    fn labels(names: &[&str]) -> Vec<RegionLabel> {
        names.iter().map(|n| RegionLabel::new(*n)).collect()
    }

    fn crossing_labels(names: &[&str]) -> Vec<CrossingLabel> {
        names.iter().map(|n| CrossingLabel::new(*n)).collect()
    }

    #[test]
    fn theta_t31_matrix_matches_the_catalog_labeling() {
        let m = region_choice_matrix(&fixtures::theta_t31()).unwrap();
        assert_eq!(m.matrix().to_text(), "101101\n011011\n001111\n");
        let names: Vec<&str> = m.region_labels().iter().map(|r| r.as_str()).collect();
        assert_eq!(names, ["R1", "R2", "R3", "R4", "R5", "R6"]);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn kink_matrix_is_one_by_three() {
        let m = region_choice_matrix(&fixtures::kink()).unwrap();
        assert_eq!((m.matrix().rows(), m.matrix().cols()), (1, 3));
        assert_eq!(m.matrix().row(0).count_ones(), 3);
    }

    #[test]
    fn theta_zero_matrix_is_empty() {
        let m = region_choice_matrix(&fixtures::theta_zero()).unwrap();
        assert_eq!((m.matrix().rows(), m.matrix().cols()), (0, 3));
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn empty_set_changes_nothing() {
        let d = fixtures::theta_t31();
        assert_eq!(apply_rcc(&d, &[]).unwrap(), d);
    }

    #[test]
    fn single_regions_toggle_their_rows() {
        let d = fixtures::theta_t31();
        // Changing R1 flips only c1; changing {R3, R5} flips only c1 as well.
        for set in [labels(&["R1"]), labels(&["R3", "R5"])] {
            let out = apply_rcc(&d, &set).unwrap();
            assert_eq!(out.over_difference(&d).unwrap(), crossing_labels(&["c1"]));
        }
    }

    #[test]
    fn example_solution_family_for_c1() {
        let d = fixtures::theta_t31();
        let family = solve_target(&d, &crossing_labels(&["c1"]), DEFAULT_CAP).unwrap();
        let expected: Vec<Vec<RegionLabel>> = [
            alloc::vec!["R1"],
            alloc::vec!["R3", "R5"],
            alloc::vec!["R5", "R6"],
            alloc::vec!["R1", "R3", "R6"],
            alloc::vec!["R2", "R4", "R5"],
            alloc::vec!["R1", "R2", "R3", "R4"],
            alloc::vec!["R1", "R2", "R4", "R6"],
            alloc::vec!["R2", "R3", "R4", "R5", "R6"],
        ]
        .into_iter()
        .map(|v| labels(&v))
        .collect();
        assert_eq!(family, expected);
    }

    #[test]
    fn ineffective_family_of_theta_t31() {
        let d = fixtures::theta_t31();
        let family = ineffective_family(&d, DEFAULT_CAP).unwrap();
        let expected: Vec<Vec<RegionLabel>> = [
            alloc::vec![],
            alloc::vec!["R3", "R6"],
            alloc::vec!["R1", "R3", "R5"],
            alloc::vec!["R1", "R5", "R6"],
            alloc::vec!["R2", "R3", "R4"],
            alloc::vec!["R2", "R4", "R6"],
            alloc::vec!["R1", "R2", "R4", "R5"],
            alloc::vec!["R1", "R2", "R3", "R4", "R5", "R6"],
        ]
        .into_iter()
        .map(|v| labels(&v))
        .collect();
        assert_eq!(family, expected);
    }

    #[test]
    fn involution_and_composition() {
        let d = fixtures::figure_eight();
        let s1 = labels(&["R1", "R4"]);
        let s2 = labels(&["R2", "R4", "R5"]);
        let twice = apply_rcc(&apply_rcc(&d, &s1).unwrap(), &s1).unwrap();
        assert_eq!(twice, d);
        let seq = apply_rcc(&apply_rcc(&d, &s1).unwrap(), &s2).unwrap();
        // Symmetric difference of the two sets.
        let sym = labels(&["R1", "R2", "R5"]);
        let direct = apply_rcc(&d, &sym).unwrap();
        assert_eq!(seq, direct);
    }

    #[test]
    fn trefoil_targets_have_four_solutions() {
        let d = fixtures::trefoil();
        for c in ["c1", "c2", "c3"] {
            let family = solve_target(&d, &crossing_labels(&[c]), DEFAULT_CAP).unwrap();
            assert_eq!(family.len(), 4);
        }
    }

    #[test]
    fn unknown_labels_are_rejected() {
        let d = fixtures::trefoil();
        assert_eq!(
            apply_rcc(&d, &labels(&["R9"])),
            Err(RccError::UnknownRegion("R9".into()))
        );
        assert_eq!(
            solve_target(&d, &crossing_labels(&["c9"]), DEFAULT_CAP),
            Err(RccError::UnknownCrossing("c9".into()))
        );
    }
}
