//! Shared plumbing for operations that delete sites: walking the surviving
//! strands through removed sites and stitching their arcs back together.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::diagram::{CrossingSite, Dart, Diagram, VertexSite};
use crate::label::ArcLabel;

/// Result of cutting sites out of a diagram.
pub(crate) struct Excision {
    pub crossings: Vec<CrossingSite>,
    pub vertices: Vec<VertexSite>,
    pub free_loops: Vec<ArcLabel>,
}

/// Remove `removed` sites. `splices` pairs up darts at removed sites whose
/// arcs become one strand; `dropped` arcs vanish entirely. Every dart of a
/// removed site must either belong to a dropped arc or appear in exactly one
/// splice pair.
///
/// Chains of spliced arcs collapse into single arcs named after their
/// smallest member; a chain with no surviving endpoint closes into a free
/// loop.
pub(crate) fn excise(
    d: &Diagram,
    removed: &BTreeSet<usize>,
    splices: &[(Dart, Dart)],
    dropped: &BTreeSet<usize>,
) -> Excision {
    let mut splice_of: BTreeMap<Dart, Dart> = BTreeMap::new();
    for (a, b) in splices {
        debug_assert!(removed.contains(&a.site.0) && removed.contains(&b.site.0));
        splice_of.insert(*a, *b);
        splice_of.insert(*b, *a);
    }

    let other_end = |arc: usize, from: Dart| -> Dart {
        let [e0, e1] = d.arc_ends(arc);
        if e0 == from {
            e1
        } else {
            debug_assert_eq!(e1, from);
            e0
        }
    };

    // Walk each chain once; `new_name[arc]` is the merged arc's label.
    let mut new_name: BTreeMap<usize, ArcLabel> = BTreeMap::new();
    let mut free_loops: Vec<ArcLabel> = Vec::new();
    for start in 0..d.arc_count() {
        if dropped.contains(&start) || new_name.contains_key(&start) {
            continue;
        }
        let mut members = alloc::vec![start];
        let mut closed = false;
        // Extend from one end, then (if open so far) from the other.
        for dir in 0..2 {
            if closed {
                break;
            }
            let mut cursor = d.arc_ends(start)[dir];
            while removed.contains(&cursor.site.0) {
                let Some(&over) = splice_of.get(&cursor) else {
                    // Dangling spliceless end: the arc was meant to be dropped.
                    unreachable!("dart at removed site without splice");
                };
                let next = d.arc_at(over);
                if next == start {
                    closed = true;
                    break;
                }
                members.push(next);
                cursor = other_end(next, over);
            }
        }
        let label = members
            .iter()
            .min()
            .map(|&a| d.arcs()[a].clone())
            .expect("chain has a member");
        for m in &members {
            new_name.insert(*m, label.clone());
        }
        if closed {
            free_loops.push(label);
        }
    }

    let rename = |arc: &ArcLabel, site: usize, slot: usize| -> ArcLabel {
        let id = d.arc_at(Dart { site: crate::diagram::SiteId(site), slot: slot as u8 });
        debug_assert_eq!(&d.arcs()[id], arc);
        new_name.get(&id).cloned().unwrap_or_else(|| arc.clone())
    };

    let mut crossings = Vec::new();
    for (i, c) in d.crossings().iter().enumerate() {
        if removed.contains(&i) {
            continue;
        }
        let arcs = [
            rename(&c.arcs[0], i, 0),
            rename(&c.arcs[1], i, 1),
            rename(&c.arcs[2], i, 2),
            rename(&c.arcs[3], i, 3),
        ];
        crossings.push(CrossingSite { label: c.label.clone(), arcs, over: c.over });
    }
    let mut vertices = Vec::new();
    for (k, v) in d.vertices().iter().enumerate() {
        let site = d.crossing_count() + k;
        if removed.contains(&site) {
            continue;
        }
        let arcs = [
            rename(&v.arcs[0], site, 0),
            rename(&v.arcs[1], site, 1),
            rename(&v.arcs[2], site, 2),
        ];
        vertices.push(VertexSite { label: v.label.clone(), arcs });
    }

    let mut all_loops: Vec<ArcLabel> = d.free_loops().to_vec();
    all_loops.extend(free_loops);
    Excision { crossings, vertices, free_loops: all_loops }
}
