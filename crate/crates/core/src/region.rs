//! Region enumeration by face tracing.
//!
//! Faces are the orbits of the corner permutation "cross the arc at the next
//! slot": from corner `(s, j)` follow the arc occupying slot `j + 1` to its
//! other end `(s', k')` and continue at corner `(s', k')`. With slots stored
//! counterclockwise this walks every face of the map exactly once, and the
//! orbit count feeds the Euler gate `v - e + f = 2`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Corner, Dart, Diagram, SiteId};
use crate::label::{fresh_labels, RegionLabel};

/// A face of the map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Region {
    pub label: RegionLabel,
    /// Corners in boundary-walk order (cyclic).
    pub corners: Vec<Corner>,
    /// Arc ids crossed by the boundary walk.
    pub arcs: BTreeSet<usize>,
    /// Crossing sites on the boundary, deduplicated.
    pub crossings: BTreeSet<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RegionError {
    /// Regions of a diagram with several map components are not determined
    /// by the rotation system alone.
    Disconnected,
    /// Two region pins disagree about a label.
    ConflictingPin(RegionLabel),
}

impl fmt::Display for RegionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionError::Disconnected => {
                f.write_str("regions are only defined for a connected diagram")
            }
            RegionError::ConflictingPin(l) => write!(f, "conflicting region pin for `{l}`"),
        }
    }
}

impl core::error::Error for RegionError {}

/// Face orbits of the corner permutation, in first-encounter order, together
/// with the corner-to-orbit lookup. Works on any slot-valid diagram, even a
/// disconnected or non-spherical one; orbits never mix map components.
pub(crate) fn trace_orbits(d: &Diagram) -> (Vec<Vec<Corner>>, Vec<Vec<usize>>) {
    let mut corner_orbit: Vec<Vec<usize>> =
        (0..d.site_count()).map(|s| vec![usize::MAX; d.degree(SiteId(s))]).collect();
    let mut orbits: Vec<Vec<Corner>> = Vec::new();
    for start in d.corners() {
        if corner_orbit[start.site.0][start.index as usize] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut walk = Vec::new();
        let mut cur = start;
        loop {
            corner_orbit[cur.site.0][cur.index as usize] = id;
            walk.push(cur);
            let step = d.next_slot(Dart { site: cur.site, slot: cur.index });
            let other = d.partner(step);
            cur = Corner { site: other.site, index: other.slot };
            if cur == start {
                break;
            }
        }
        orbits.push(walk);
    }
    (orbits, corner_orbit)
}

/// All regions of a connected diagram, with corner-to-region lookup.
#[derive(Clone, Debug)]
pub struct RegionTable {
    regions: Vec<Region>,
    /// Per site and corner index, the region containing that corner.
    corner_region: Vec<Vec<usize>>,
}

impl RegionTable {
    /// Trace every face. Labels come from the diagram's region pins where
    /// given and are filled in as `R1..Rf` in first-encounter order otherwise.
    pub fn build(d: &Diagram) -> Result<Self, RegionError> {
        if d.site_count() == 0 {
            // A lone closed curve: two faces, no corners.
            if d.free_loops().len() != 1 {
                return Err(RegionError::Disconnected);
            }
            let labels = fresh_labels("R", 2, &[]);
            let regions = labels
                .into_iter()
                .map(|l| Region {
                    label: RegionLabel::new(l),
                    corners: Vec::new(),
                    arcs: BTreeSet::new(),
                    crossings: BTreeSet::new(),
                })
                .collect();
            return Ok(RegionTable { regions, corner_region: Vec::new() });
        }
        if d.components().len() > 1 || !d.free_loops().is_empty() {
            return Err(RegionError::Disconnected);
        }

        let (walks, corner_region) = trace_orbits(d);
        let orbits: Vec<(Vec<Corner>, BTreeSet<usize>, BTreeSet<usize>)> = walks
            .into_iter()
            .map(|walk| {
                let mut arcs = BTreeSet::new();
                let mut crossings = BTreeSet::new();
                for corner in &walk {
                    if d.is_crossing(corner.site) {
                        crossings.insert(corner.site.0);
                    }
                    arcs.insert(d.arc_at(d.next_slot(Dart { site: corner.site, slot: corner.index })));
                }
                (walk, arcs, crossings)
            })
            .collect();

        // Resolve labels: pins first, then first-encounter numbering.
        let mut labels: Vec<Option<RegionLabel>> = vec![None; orbits.len()];
        for (corner, label) in d.region_pins() {
            let id = corner_region[corner.site.0][corner.index as usize];
            match &labels[id] {
                Some(existing) if existing != label => {
                    return Err(RegionError::ConflictingPin(label.clone()))
                }
                _ => labels[id] = Some(label.clone()),
            }
        }
        {
            let mut seen: BTreeSet<&str> = BTreeSet::new();
            for l in labels.iter().flatten() {
                if !seen.insert(l.as_str()) {
                    return Err(RegionError::ConflictingPin(l.clone()));
                }
            }
        }
        let taken: Vec<&str> = labels.iter().flatten().map(|l| l.as_str()).collect();
        let auto = fresh_labels("R", orbits.len() - taken.len(), &taken);
        let mut auto_iter = auto.into_iter();
        for slot in labels.iter_mut() {
            if slot.is_none() {
                *slot = Some(RegionLabel::new(auto_iter.next().expect("enough labels")));
            }
        }

        let regions = orbits
            .into_iter()
            .zip(labels)
            .map(|((corners, arcs, crossings), label)| Region {
                label: label.expect("assigned"),
                corners,
                arcs,
                crossings,
            })
            .collect();
        Ok(RegionTable { regions, corner_region })
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn region_of(&self, c: Corner) -> usize {
        self.corner_region[c.site.0][c.index as usize]
    }

    pub fn label(&self, id: usize) -> &RegionLabel {
        &self.regions[id].label
    }

    pub fn index_of(&self, label: &RegionLabel) -> Option<usize> {
        self.regions.iter().position(|r| &r.label == label)
    }

    /// Region on the left of a dart, walking from `dart.site` along the arc.
    pub fn left_of(&self, d: Dart) -> usize {
        self.region_of(Corner { site: d.site, index: d.slot })
    }

    /// Region on the right of a dart.
    pub fn right_of(&self, d: Dart, diagram: &Diagram) -> usize {
        let deg = diagram.degree(d.site) as u8;
        self.region_of(Corner { site: d.site, index: (d.slot + deg - 1) % deg })
    }

    /// The two faces flanking an arc. Equal entries mean the arc has the same
    /// region on both sides.
    pub fn arc_sides(&self, diagram: &Diagram, arc: usize) -> [usize; 2] {
        let [d0, _] = diagram.arc_ends(arc);
        [self.left_of(d0), self.right_of(d0, diagram)]
    }

    /// Sorted region labels for a set of region indices.
    pub fn labels_for(&self, ids: &BTreeSet<usize>) -> Vec<RegionLabel> {
        ids.iter().map(|&i| self.regions[i].label.clone()).collect()
    }

    /// Region indices sorted by natural label order (`R1, R2, ..., R10`).
    /// This is the canonical column order for matrices and set families.
    pub fn label_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.regions.len()).collect();
        order.sort_by(|&a, &b| {
            crate::label::natural_cmp(self.regions[a].label.as_str(), self.regions[b].label.as_str())
        });
        order
    }
}

/// Convenience wrapper matching the operation vocabulary: the face list.
pub fn enumerate_regions(d: &Diagram) -> Result<Vec<Region>, RegionError> {
    RegionTable::build(d).map(|t| t.regions.to_vec())
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{} corners]", self.label, self.corners.len())
    }
}
