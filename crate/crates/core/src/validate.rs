//! Structural validation: Euler gate, component classification, reducible
//! crossings and cutting edges.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Corner, Diagram, SiteId};
use crate::edges::{trace_edges, TraceKind};
use crate::label::{CrossingLabel, EdgeLabel};
use crate::region::trace_orbits;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentKind {
    Knot,
    Theta,
    Handcuff,
    Other,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Knot => f.write_str("knot"),
            ComponentKind::Theta => f.write_str("theta"),
            ComponentKind::Handcuff => f.write_str("handcuff"),
            ComponentKind::Other => f.write_str("other"),
        }
    }
}

/// Counts for one connected piece of the map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentReport {
    pub kind: ComponentKind,
    /// Map vertices: crossings plus trivalent vertices.
    pub v: usize,
    /// Map edges: arcs.
    pub e: usize,
    /// Faces traced from the rotation system.
    pub f: usize,
    pub euler_residual: i64,
    /// Crossings only.
    pub crossing_count: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub components: Vec<ComponentReport>,
    pub reducible: Vec<CrossingLabel>,
    pub cutting_edges: Vec<EdgeLabel>,
}

impl ValidationReport {
    pub fn is_reduced(&self) -> bool {
        self.reducible.is_empty()
    }

    /// Kind of the single component, if there is exactly one.
    pub fn kind(&self) -> Option<ComponentKind> {
        match self.components.as_slice() {
            [c] => Some(c.kind),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValidateError {
    /// Some component fails `v - e + f = 2`; the map is not spherical.
    NonSpherical { component: String, residual: i64 },
}

impl fmt::Display for ValidateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidateError::NonSpherical { component, residual } => write!(
                f,
                "non-spherical map: component at `{component}` has Euler residual {residual}"
            ),
        }
    }
}

impl core::error::Error for ValidateError {}

fn classify(d: &Diagram, sites: &[SiteId], traces: &[(TraceKind, Option<(SiteId, SiteId)>)]) -> ComponentKind {
    let vertex_count = sites.iter().filter(|s| !d.is_crossing(**s)).count();
    match vertex_count {
        0 => {
            if traces.len() == 1 {
                ComponentKind::Knot
            } else {
                ComponentKind::Other
            }
        }
        2 => {
            if traces.len() != 3 {
                return ComponentKind::Other;
            }
            let loops: Vec<_> = traces.iter().filter(|(k, _)| *k == TraceKind::Loop).collect();
            let paths: Vec<_> = traces.iter().filter(|(k, _)| *k == TraceKind::Path).collect();
            if paths.len() == 3 {
                ComponentKind::Theta
            } else if loops.len() == 2 && paths.len() == 1 {
                // The two loops must sit at the two distinct vertices.
                let mut bases: Vec<SiteId> =
                    loops.iter().filter_map(|(_, ends)| ends.map(|(a, _)| a)).collect();
                bases.sort();
                bases.dedup();
                if bases.len() == 2 {
                    ComponentKind::Handcuff
                } else {
                    ComponentKind::Other
                }
            } else {
                ComponentKind::Other
            }
        }
        _ => ComponentKind::Other,
    }
}

/// Check the Euler gate and classify every component.
///
/// Returns the report only when every component is spherical; a nonzero
/// residual is an error because nothing downstream is meaningful on a
/// non-planar rotation system.
pub fn validate(d: &Diagram) -> Result<ValidationReport, ValidateError> {
    let comps = d.components();
    let (orbits, corner_orbit) = trace_orbits(d);
    let traces = trace_edges(d);

    let mut components = Vec::new();
    for sites in &comps {
        let site_set: BTreeSet<usize> = sites.iter().map(|s| s.0).collect();
        let v = sites.len();
        let e = (0..d.arc_count())
            .filter(|&a| site_set.contains(&d.arc_ends(a)[0].site.0))
            .count();
        let f = orbits
            .iter()
            .filter(|walk| site_set.contains(&walk[0].site.0))
            .count();
        let crossing_count = sites.iter().filter(|s| d.is_crossing(**s)).count();
        let comp_traces: Vec<(TraceKind, Option<(SiteId, SiteId)>)> = traces
            .iter()
            .filter(|t| match (t.endpoints, t.arcs.first()) {
                (Some((a, _)), _) => site_set.contains(&a.site.0),
                (None, Some(&arc)) => site_set.contains(&d.arc_ends(arc)[0].site.0),
                (None, None) => false,
            })
            .map(|t| (t.kind(), t.endpoints.map(|(a, b)| (a.site, b.site))))
            .collect();
        let residual = v as i64 - e as i64 + f as i64 - 2;
        if residual != 0 {
            return Err(ValidateError::NonSpherical {
                component: String::from(d.site_name(sites[0])),
                residual,
            });
        }
        components.push(ComponentReport {
            kind: classify(d, sites, &comp_traces),
            v,
            e,
            f,
            euler_residual: residual,
            crossing_count,
        });
    }
    for _ in d.free_loops() {
        components.push(ComponentReport {
            kind: ComponentKind::Knot,
            v: 0,
            e: 0,
            f: 2,
            euler_residual: 0,
            crossing_count: 0,
        });
    }

    let reducible = reducible_from_orbits(d, &corner_orbit);
    let cutting_edges = cutting_from_orbits(d, &corner_orbit, &traces);
    Ok(ValidationReport { components, reducible, cutting_edges })
}

fn reducible_from_orbits(d: &Diagram, corner_orbit: &[Vec<usize>]) -> Vec<CrossingLabel> {
    let mut out = Vec::new();
    for (i, c) in d.crossings().iter().enumerate() {
        let orbit = |k: usize| corner_orbit[i][k];
        if orbit(0) == orbit(2) || orbit(1) == orbit(3) {
            out.push(c.label.clone());
        }
    }
    out
}

fn cutting_from_orbits(
    d: &Diagram,
    corner_orbit: &[Vec<usize>],
    traces: &[crate::edges::EdgeTrace],
) -> Vec<EdgeLabel> {
    let region_of = |c: Corner| corner_orbit[c.site.0][c.index as usize];
    let mut cut_edges: BTreeSet<&EdgeLabel> = BTreeSet::new();
    for arc in 0..d.arc_count() {
        let [d0, _] = d.arc_ends(arc);
        let deg = d.degree(d0.site) as u8;
        let left = region_of(Corner { site: d0.site, index: d0.slot });
        let right = region_of(Corner { site: d0.site, index: (d0.slot + deg - 1) % deg });
        if left == right {
            if let Some(t) = crate::edges::edge_of_arc(traces, arc) {
                cut_edges.insert(&t.label);
            }
        }
    }
    cut_edges.into_iter().cloned().collect()
}

/// Crossings where two diagonally opposite corners lie in the same region.
///
/// This is the combinatorial form of the nugatory-crossing criterion: a
/// simple circle on the sphere meeting the diagram only at that crossing.
pub fn find_reducible_crossings(d: &Diagram) -> Vec<CrossingLabel> {
    let (_, corner_orbit) = trace_orbits(d);
    reducible_from_orbits(d, &corner_orbit)
}

/// Edges containing an arc with the same region on both sides.
///
/// Such an arc admits a circle crossing the diagram exactly once, so the edge
/// it belongs to is a cutting edge.
pub fn find_cutting_edges(d: &Diagram) -> Vec<EdgeLabel> {
    let (_, corner_orbit) = trace_orbits(d);
    let traces = trace_edges(d);
    cutting_from_orbits(d, &corner_orbit, &traces)
}
