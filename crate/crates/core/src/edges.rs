//! Recovering the underlying graph edges of a diagram.
//!
//! A strand continues straight through a crossing (slot `k` to slot `k + 2`)
//! and terminates at trivalent vertices. Tracing from every vertex slot and
//! then sweeping up the leftover closed strands partitions the arcs into the
//! edges of the underlying spatial graph.

use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Dart, Diagram, SiteId};
use crate::label::{ArcLabel, EdgeLabel};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TraceKind {
    /// Both ends at the same vertex.
    Loop,
    /// Ends at two distinct vertices.
    Path,
    /// A closed strand meeting no vertex.
    Closed,
}

/// One underlying graph edge: an ordered run of arcs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeTrace {
    pub label: EdgeLabel,
    /// Arc ids in traversal order.
    pub arcs: Vec<usize>,
    /// Vertex darts at the two ends, absent for closed strands.
    pub endpoints: Option<(Dart, Dart)>,
    /// Set when the trace is a free loop (an arc list is then empty).
    pub free_loop: Option<ArcLabel>,
}

impl EdgeTrace {
    pub fn kind(&self) -> TraceKind {
        match self.endpoints {
            None => TraceKind::Closed,
            Some((a, b)) if a.site == b.site => TraceKind::Loop,
            Some(_) => TraceKind::Path,
        }
    }

    pub fn arc_labels<'a>(&self, d: &'a Diagram) -> Vec<&'a ArcLabel> {
        self.arcs.iter().map(|&a| &d.arcs()[a]).collect()
    }

    /// Crossings traversed by this edge, with multiplicity.
    pub fn crossing_visits(&self, d: &Diagram) -> Vec<usize> {
        let mut out = Vec::new();
        for window in self.arcs.windows(2) {
            let [a, b] = [window[0], window[1]];
            // Consecutive arcs share a crossing at opposite slots.
            for end in d.arc_ends(a) {
                if d.is_crossing(end.site) && d.arc_at(d.opposite_slot(end)) == b {
                    out.push(end.site.0);
                    break;
                }
            }
        }
        // A closed trace also passes the crossing joining last to first arc.
        if self.endpoints.is_none() && self.arcs.len() > 1 {
            let (first, last) = (self.arcs[0], *self.arcs.last().expect("nonempty"));
            for end in d.arc_ends(last) {
                if d.is_crossing(end.site) && d.arc_at(d.opposite_slot(end)) == first {
                    out.push(end.site.0);
                    break;
                }
            }
        }
        // A one-arc closed trace through a kink is impossible: the arc would
        // occupy opposite slots and fail the Euler gate earlier.
        out
    }
}

impl fmt::Display for EdgeTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} arcs)", self.label, self.arcs.len())
    }
}

/// Partition the arcs of `d` into underlying graph edges.
///
/// Labels are `e1, e2, ...` assigned per map component: loop edges first (by
/// their base vertex), then vertex-to-vertex edges in discovery order, then
/// closed strands. On a handcuff component this names the two loops `e1`,
/// `e2` and the bridge `e3`.
pub fn trace_edges(d: &Diagram) -> Vec<EdgeTrace> {
    let mut taken = alloc::vec![false; d.arc_count()];
    struct Raw {
        arcs: Vec<usize>,
        endpoints: Option<(Dart, Dart)>,
        free_loop: Option<ArcLabel>,
    }
    let mut raw: Vec<Raw> = Vec::new();

    // Open edges start at vertex darts.
    for v in d.crossing_count()..d.site_count() {
        for slot in 0..3u8 {
            let start = Dart { site: SiteId(v), slot };
            if taken[d.arc_at(start)] {
                continue;
            }
            let mut arcs = Vec::new();
            let mut cur = start;
            let end = loop {
                let arc = d.arc_at(cur);
                taken[arc] = true;
                arcs.push(arc);
                let other = d.partner(cur);
                if d.is_crossing(other.site) {
                    cur = d.opposite_slot(other);
                } else {
                    break other;
                }
            };
            raw.push(Raw { arcs, endpoints: Some((start, end)), free_loop: None });
        }
    }

    // Closed strands sweep up the rest.
    for first in 0..d.arc_count() {
        if taken[first] {
            continue;
        }
        let start = d.arc_ends(first)[0];
        let mut arcs = Vec::new();
        let mut cur = start;
        loop {
            let arc = d.arc_at(cur);
            taken[arc] = true;
            arcs.push(arc);
            let other = d.partner(cur);
            debug_assert!(d.is_crossing(other.site), "open strand not reached from a vertex");
            cur = d.opposite_slot(other);
            if cur == start {
                break;
            }
        }
        raw.push(Raw { arcs, endpoints: None, free_loop: None });
    }

    for label in d.free_loops() {
        raw.push(Raw { arcs: Vec::new(), endpoints: None, free_loop: Some(label.clone()) });
    }

    // Stable labeling: component, then loops / paths / closed strands.
    let comps = d.components();
    let comp_of_site = |s: SiteId| comps.iter().position(|c| c.contains(&s));
    let mut order: Vec<usize> = (0..raw.len()).collect();
    let sort_key = |r: &Raw| {
        let comp = match r.endpoints {
            Some((a, _)) => comp_of_site(a.site).unwrap_or(usize::MAX),
            None => match (r.arcs.first(), &r.free_loop) {
                (Some(&a), _) => comp_of_site(d.arc_ends(a)[0].site).unwrap_or(usize::MAX),
                (None, _) => usize::MAX,
            },
        };
        let kind = match r.endpoints {
            Some((a, b)) if a.site == b.site => 0u8,
            Some(_) => 1,
            None => 2,
        };
        (comp, kind)
    };
    order.sort_by_key(|&i| (sort_key(&raw[i]), i));

    order
        .into_iter()
        .enumerate()
        .map(|(n, i)| {
            let r = &raw[i];
            EdgeTrace {
                label: EdgeLabel::new(alloc::format!("e{}", n + 1)),
                arcs: r.arcs.clone(),
                endpoints: r.endpoints,
                free_loop: r.free_loop.clone(),
            }
        })
        .collect()
}

/// The edge whose trace contains the given arc.
pub fn edge_of_arc(traces: &[EdgeTrace], arc: usize) -> Option<&EdgeTrace> {
    traces.iter().find(|t| t.arcs.contains(&arc))
}
