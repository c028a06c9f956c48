//! Deleting one edge of a theta-curve diagram.
//!
//! Removing edge `e` erases every crossing it is involved in (the transversal
//! strand's arcs are merged back together), smooths the two trivalent
//! vertices away, and leaves the knot diagram formed by the other two edges.
//! Faces of the source diagram merge exactly across removed arcs, so the
//! region correspondence is the union-find quotient over those arcs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Corner, Dart, Diagram, SiteId};
use crate::edges::{trace_edges, TraceKind};
use crate::label::{EdgeLabel, RegionLabel};
use crate::region::{RegionError, RegionTable};
use crate::surgery::excise;
use crate::validate::{validate, ComponentKind, ValidateError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SubknotError {
    /// The input is not a single theta-curve component.
    NotTheta,
    UnknownEdge(EdgeLabel),
    Region(RegionError),
    Validate(ValidateError),
}

impl fmt::Display for SubknotError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubknotError::NotTheta => f.write_str("edge deletion requires a theta-curve diagram"),
            SubknotError::UnknownEdge(e) => write!(f, "unknown edge `{e}`"),
            SubknotError::Region(e) => e.fmt(f),
            SubknotError::Validate(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for SubknotError {}

impl From<RegionError> for SubknotError {
    fn from(e: RegionError) -> Self {
        SubknotError::Region(e)
    }
}

/// Surjection from the regions of the theta diagram onto the regions of the
/// knot diagram left after deleting one edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegionMap {
    pairs: Vec<(RegionLabel, RegionLabel)>,
}

impl RegionMap {
    pub fn get(&self, source: &RegionLabel) -> Option<&RegionLabel> {
        self.pairs.iter().find(|(s, _)| s == source).map(|(_, t)| t)
    }

    pub fn pairs(&self) -> &[(RegionLabel, RegionLabel)] {
        &self.pairs
    }

    /// Source regions mapping onto `target`.
    pub fn preimage(&self, target: &RegionLabel) -> Vec<&RegionLabel> {
        self.pairs.iter().filter(|(_, t)| t == target).map(|(s, _)| s).collect()
    }
}

/// Delete edge `e` of a theta-curve diagram.
pub fn delete_edge(d: &Diagram, e: &EdgeLabel) -> Result<(Diagram, RegionMap), SubknotError> {
    let report = validate(d).map_err(SubknotError::Validate)?;
    if report.kind() != Some(ComponentKind::Theta) {
        return Err(SubknotError::NotTheta);
    }
    let traces = trace_edges(d);
    let trace = traces
        .iter()
        .find(|t| &t.label == e)
        .ok_or_else(|| SubknotError::UnknownEdge(e.clone()))?;
    debug_assert_eq!(trace.kind(), TraceKind::Path);

    let regions = RegionTable::build(d)?;
    let removed_arcs: BTreeSet<usize> = trace.arcs.iter().copied().collect();

    // Sites to remove: both vertices and every crossing the edge passes.
    let mut removed_sites: BTreeSet<usize> =
        (d.crossing_count()..d.site_count()).collect();
    for &arc in &removed_arcs {
        for end in d.arc_ends(arc) {
            if d.is_crossing(end.site) {
                removed_sites.insert(end.site.0);
            }
        }
    }

    // Splices: through every erased crossing whose transversal strand
    // survives, and through each smoothed vertex.
    let mut splices: Vec<(Dart, Dart)> = Vec::new();
    for &s in &removed_sites {
        let site = SiteId(s);
        if d.is_crossing(site) {
            for pair in [[0u8, 2u8], [1, 3]] {
                let a = Dart { site, slot: pair[0] };
                let b = Dart { site, slot: pair[1] };
                if !removed_arcs.contains(&d.arc_at(a)) && !removed_arcs.contains(&d.arc_at(b)) {
                    splices.push((a, b));
                }
            }
        } else {
            let keep: Vec<Dart> = (0..3u8)
                .map(|slot| Dart { site, slot })
                .filter(|dart| !removed_arcs.contains(&d.arc_at(*dart)))
                .collect();
            debug_assert_eq!(keep.len(), 2, "vertex must lose exactly one edge end");
            splices.push((keep[0], keep[1]));
        }
    }

    let ex = excise(d, &removed_sites, &splices, &removed_arcs);
    let knot = Diagram::assemble(ex.crossings, ex.vertices, ex.free_loops, None, Vec::new())
        .expect("surgery preserves slot validity");

    // Union-find over source regions across every removed arc.
    let mut parent: Vec<usize> = (0..regions.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &arc in &removed_arcs {
        let [a, b] = regions.arc_sides(d, arc);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }

    // Name each class after a region of the knot diagram.
    let knot_regions = RegionTable::build(&knot)?;
    let mut class_target: BTreeMap<usize, RegionLabel> = BTreeMap::new();
    if knot.site_count() == 0 {
        // No corners survive; order the two classes by smallest member.
        let mut reps: Vec<usize> =
            (0..regions.len()).map(|r| find(&mut parent, r)).collect();
        reps.sort();
        reps.dedup();
        debug_assert_eq!(reps.len(), knot_regions.len());
        for (rep, kr) in reps.into_iter().zip(knot_regions.regions()) {
            class_target.insert(rep, kr.label.clone());
        }
    } else {
        for (i, c) in d.crossings().iter().enumerate() {
            if removed_sites.contains(&i) {
                continue;
            }
            let k_site = knot
                .site_by_name(c.label.as_str())
                .expect("surviving crossing keeps its label");
            for index in 0..4u8 {
                let src = regions.region_of(Corner { site: SiteId(i), index });
                let dst = knot_regions.region_of(Corner { site: k_site, index });
                let rep = find(&mut parent, src);
                let label = knot_regions.label(dst).clone();
                let prev = class_target.insert(rep, label.clone());
                debug_assert!(
                    prev.is_none() || prev == Some(label),
                    "face class maps to two knot regions"
                );
            }
        }
    }

    let mut pairs = Vec::with_capacity(regions.len());
    for r in 0..regions.len() {
        let rep = find(&mut parent, r);
        let target = class_target
            .get(&rep)
            .expect("every face class contains a surviving corner")
            .clone();
        pairs.push((regions.label(r).clone(), target));
    }
    Ok((knot, RegionMap { pairs }))
}
