//! Diagrams as combinatorial maps.
//!
//! A site is either a crossing (four arc ends) or a trivalent vertex (three
//! arc ends), with slots listed in counterclockwise order. An arc occupies
//! exactly two slots. The rotation system determines the faces of the map, so
//! no geometry is ever stored.
//!
//! Slots are numbered from 0 internally. A *dart* is an oriented arc end
//! `(site, slot)`; a *corner* `(site, i)` is the face wedge between slot `i`
//! and slot `i + 1` of a site.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::label::{fresh_label, ArcLabel, CrossingLabel, RegionLabel, VertexLabel};

/// Which pair of opposite slots carries the over-strand at a crossing.
///
/// Slot pairs are named 1-based, matching the `over=(1,3)` / `over=(2,4)`
/// notation of the text format. A crossing change toggles this flag and
/// nothing else.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OverPair {
    /// Slots 1 and 3 (0-based 0 and 2) are the over-strand.
    Slots13,
    /// Slots 2 and 4 (0-based 1 and 3) are the over-strand.
    Slots24,
}

impl OverPair {
    pub fn toggled(self) -> Self {
        match self {
            OverPair::Slots13 => OverPair::Slots24,
            OverPair::Slots24 => OverPair::Slots13,
        }
    }
}

impl fmt::Display for OverPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OverPair::Slots13 => f.write_str("(1,3)"),
            OverPair::Slots24 => f.write_str("(2,4)"),
        }
    }
}

/// A crossing: four arc ends in counterclockwise slot order plus the over flag.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingSite {
    pub label: CrossingLabel,
    pub arcs: [ArcLabel; 4],
    pub over: OverPair,
}

/// A trivalent vertex: three arc ends in counterclockwise slot order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSite {
    pub label: VertexLabel,
    pub arcs: [ArcLabel; 3],
}

/// Index of a site. Crossings come first, vertices after them.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SiteId(pub usize);

/// An oriented arc end: `slot` of `site`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dart {
    pub site: SiteId,
    pub slot: u8,
}

/// The face wedge between slot `index` and slot `index + 1` of `site`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Corner {
    pub site: SiteId,
    pub index: u8,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagramError {
    /// An arc label occurs at a number of slots different from two.
    ArcMultiplicity { arc: ArcLabel, count: usize },
    /// Two sites share a label.
    DuplicateSite { label: String },
    /// A corner reference (outer designation or region pin) points nowhere.
    DanglingCorner { reference: String },
    /// Two region pins disagree.
    ConflictingRegionPin { label: RegionLabel },
    /// The named site/arc/edge/region does not exist.
    UnknownName { name: String },
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::ArcMultiplicity { arc, count } => {
                write!(f, "arc multiplicity: `{arc}` occurs at {count} slots, expected 2")
            }
            DiagramError::DuplicateSite { label } => write!(f, "duplicate site label `{label}`"),
            DiagramError::DanglingCorner { reference } => {
                write!(f, "dangling corner reference `{reference}`")
            }
            DiagramError::ConflictingRegionPin { label } => {
                write!(f, "conflicting region pin for `{label}`")
            }
            DiagramError::UnknownName { name } => write!(f, "unknown name `{name}`"),
        }
    }
}

impl core::error::Error for DiagramError {}

/// An immutable spatial-graph diagram.
///
/// Construction validates the slot structure (every arc at exactly two slots,
/// unique site labels, corner references in range). Sphericity is *not*
/// checked here; that is [`crate::validate::validate`]'s job.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    crossings: Vec<CrossingSite>,
    vertices: Vec<VertexSite>,
    /// Arc labels in first-mention order; index is the arc id.
    arcs: Vec<ArcLabel>,
    /// The two slots occupied by each arc, in site scan order.
    arc_ends: Vec<[Dart; 2]>,
    /// Per site and slot, the arc id there.
    slot_arc: Vec<Vec<usize>>,
    /// Per site and slot, the opposite end of the arc at that slot.
    partner: Vec<Vec<Dart>>,
    /// Closed curves that meet no site at all. Only produced by edge
    /// deletion; the text format cannot express them.
    free_loops: Vec<ArcLabel>,
    outer: Option<Corner>,
    region_pins: Vec<(Corner, RegionLabel)>,
}

impl Diagram {
    pub fn new(
        crossings: Vec<CrossingSite>,
        vertices: Vec<VertexSite>,
    ) -> Result<Self, DiagramError> {
        Self::with_annotations(crossings, vertices, None, Vec::new())
    }

    pub fn with_annotations(
        crossings: Vec<CrossingSite>,
        vertices: Vec<VertexSite>,
        outer: Option<Corner>,
        region_pins: Vec<(Corner, RegionLabel)>,
    ) -> Result<Self, DiagramError> {
        let mut seen = Vec::new();
        for c in &crossings {
            if seen.contains(&c.label.as_str()) {
                return Err(DiagramError::DuplicateSite { label: c.label.0.clone() });
            }
            seen.push(c.label.as_str());
        }
        for v in &vertices {
            if seen.contains(&v.label.as_str()) {
                return Err(DiagramError::DuplicateSite { label: v.label.0.clone() });
            }
            seen.push(v.label.as_str());
        }

        let mut arcs: Vec<ArcLabel> = Vec::new();
        let mut ends: Vec<Vec<Dart>> = Vec::new();
        let mut slot_arc: Vec<Vec<usize>> = Vec::new();
        let site_arcs = |i: usize| -> &[ArcLabel] {
            if i < crossings.len() {
                &crossings[i].arcs
            } else {
                &vertices[i - crossings.len()].arcs
            }
        };
        let site_count = crossings.len() + vertices.len();
        for s in 0..site_count {
            let mut per_slot = Vec::new();
            for (slot, arc) in site_arcs(s).iter().enumerate() {
                let id = match arcs.iter().position(|a| a == arc) {
                    Some(id) => id,
                    None => {
                        arcs.push(arc.clone());
                        ends.push(Vec::new());
                        arcs.len() - 1
                    }
                };
                ends[id].push(Dart { site: SiteId(s), slot: slot as u8 });
                per_slot.push(id);
            }
            slot_arc.push(per_slot);
        }

        let mut arc_ends = Vec::with_capacity(arcs.len());
        for (id, e) in ends.iter().enumerate() {
            if e.len() != 2 {
                return Err(DiagramError::ArcMultiplicity {
                    arc: arcs[id].clone(),
                    count: e.len(),
                });
            }
            arc_ends.push([e[0], e[1]]);
        }

        let mut partner: Vec<Vec<Dart>> = slot_arc
            .iter()
            .map(|slots| vec![Dart { site: SiteId(0), slot: 0 }; slots.len()])
            .collect();
        for [a, b] in &arc_ends {
            partner[a.site.0][a.slot as usize] = *b;
            partner[b.site.0][b.slot as usize] = *a;
        }

        let d = Diagram {
            crossings,
            vertices,
            arcs,
            arc_ends,
            slot_arc,
            partner,
            free_loops: Vec::new(),
            outer: None,
            region_pins: Vec::new(),
        };
        d.with_outer_and_pins(outer, region_pins)
    }

    fn with_outer_and_pins(
        mut self,
        outer: Option<Corner>,
        pins: Vec<(Corner, RegionLabel)>,
    ) -> Result<Self, DiagramError> {
        if let Some(c) = outer {
            self.check_corner(c)?;
        }
        for (c, _) in &pins {
            self.check_corner(*c)?;
        }
        self.outer = outer;
        self.region_pins = pins;
        Ok(self)
    }

    fn check_corner(&self, c: Corner) -> Result<(), DiagramError> {
        if c.site.0 >= self.site_count() || c.index as usize >= self.degree(c.site) {
            return Err(DiagramError::DanglingCorner {
                reference: alloc::format!("{}.{}", self.site_name(c.site), c.index + 1),
            });
        }
        Ok(())
    }

    /// Construction including free loops, for surgery results.
    pub(crate) fn assemble(
        crossings: Vec<CrossingSite>,
        vertices: Vec<VertexSite>,
        free_loops: Vec<ArcLabel>,
        outer: Option<Corner>,
        region_pins: Vec<(Corner, RegionLabel)>,
    ) -> Result<Self, DiagramError> {
        let mut d = Self::with_annotations(crossings, vertices, outer, region_pins)?;
        d.free_loops = free_loops;
        Ok(d)
    }

    /// A bare closed curve with no crossings: zero sites, one free loop.
    pub fn free_loop(label: ArcLabel) -> Self {
        Diagram {
            crossings: Vec::new(),
            vertices: Vec::new(),
            arcs: Vec::new(),
            arc_ends: Vec::new(),
            slot_arc: Vec::new(),
            partner: Vec::new(),
            free_loops: vec![label],
            outer: None,
            region_pins: Vec::new(),
        }
    }

    pub fn crossings(&self) -> &[CrossingSite] {
        &self.crossings
    }

    pub fn vertices(&self) -> &[VertexSite] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[ArcLabel] {
        &self.arcs
    }

    pub fn free_loops(&self) -> &[ArcLabel] {
        &self.free_loops
    }

    pub fn outer_corner(&self) -> Option<Corner> {
        self.outer
    }

    pub fn region_pins(&self) -> &[(Corner, RegionLabel)] {
        &self.region_pins
    }

    pub fn set_outer(&mut self, outer: Option<Corner>) -> Result<(), DiagramError> {
        if let Some(c) = outer {
            self.check_corner(c)?;
        }
        self.outer = outer;
        Ok(())
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn site_count(&self) -> usize {
        self.crossings.len() + self.vertices.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_crossing(&self, s: SiteId) -> bool {
        s.0 < self.crossings.len()
    }

    pub fn degree(&self, s: SiteId) -> usize {
        if self.is_crossing(s) {
            4
        } else {
            3
        }
    }

    pub fn site_name(&self, s: SiteId) -> &str {
        if self.is_crossing(s) {
            self.crossings[s.0].label.as_str()
        } else {
            self.vertices[s.0 - self.crossings.len()].label.as_str()
        }
    }

    pub fn site_by_name(&self, name: &str) -> Option<SiteId> {
        (0..self.site_count()).map(SiteId).find(|&s| self.site_name(s) == name)
    }

    pub fn crossing_by_label(&self, label: &CrossingLabel) -> Option<usize> {
        self.crossings.iter().position(|c| &c.label == label)
    }

    pub fn arc_id(&self, label: &ArcLabel) -> Option<usize> {
        self.arcs.iter().position(|a| a == label)
    }

    pub fn arc_at(&self, d: Dart) -> usize {
        self.slot_arc[d.site.0][d.slot as usize]
    }

    pub fn arc_ends(&self, arc: usize) -> [Dart; 2] {
        self.arc_ends[arc]
    }

    /// The other end of the arc occupying this slot.
    pub fn partner(&self, d: Dart) -> Dart {
        self.partner[d.site.0][d.slot as usize]
    }

    pub fn next_slot(&self, d: Dart) -> Dart {
        Dart { site: d.site, slot: (d.slot + 1) % self.degree(d.site) as u8 }
    }

    /// The slot reached by passing straight through a crossing.
    pub fn opposite_slot(&self, d: Dart) -> Dart {
        debug_assert!(self.is_crossing(d.site));
        Dart { site: d.site, slot: (d.slot + 2) % 4 }
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.site_count()).flat_map(move |s| {
            (0..self.degree(SiteId(s)) as u8).map(move |slot| Dart { site: SiteId(s), slot })
        })
    }

    pub fn corners(&self) -> impl Iterator<Item = Corner> + '_ {
        (0..self.site_count()).flat_map(move |s| {
            (0..self.degree(SiteId(s)) as u8).map(move |index| Corner { site: SiteId(s), index })
        })
    }

    pub fn corner_count(&self) -> usize {
        4 * self.crossings.len() + 3 * self.vertices.len()
    }

    /// Flip the over flag of every listed crossing (by row index) once.
    pub fn with_toggled(&self, crossing_indices: &[usize]) -> Diagram {
        let mut out = self.clone();
        for &i in crossing_indices {
            out.crossings[i].over = out.crossings[i].over.toggled();
        }
        out
    }

    /// Crossings whose over flag differs, provided both diagrams are the same
    /// underlying map (same sites, arcs and rotations). `None` if the maps
    /// differ structurally.
    pub fn over_difference(&self, other: &Diagram) -> Option<Vec<CrossingLabel>> {
        if self.crossings.len() != other.crossings.len()
            || self.vertices != other.vertices
            || self.arcs != other.arcs
            || self.free_loops != other.free_loops
        {
            return None;
        }
        let mut diff = Vec::new();
        for (a, b) in self.crossings.iter().zip(&other.crossings) {
            if a.label != b.label || a.arcs != b.arcs {
                return None;
            }
            if a.over != b.over {
                diff.push(a.label.clone());
            }
        }
        Some(diff)
    }

    /// Connected components of the site graph; each entry is a sorted list of
    /// site ids. Free loops are not included.
    pub fn components(&self) -> Vec<Vec<SiteId>> {
        let n = self.site_count();
        let mut comp = vec![usize::MAX; n];
        let mut out: Vec<Vec<SiteId>> = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = vec![SiteId(start)];
            while let Some(s) = stack.pop() {
                for slot in 0..self.degree(SiteId(s)) as u8 {
                    let p = self.partner(Dart { site: SiteId(s), slot });
                    if comp[p.site.0] == usize::MAX {
                        comp[p.site.0] = id;
                        stack.push(p.site.0);
                        members.push(p.site);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    pub fn fresh_crossing_label(&self) -> CrossingLabel {
        let taken: Vec<&str> = self
            .crossings
            .iter()
            .map(|c| c.label.as_str())
            .chain(self.vertices.iter().map(|v| v.label.as_str()))
            .collect();
        CrossingLabel::new(fresh_label("c", &taken))
    }

    pub fn fresh_arc_label(&self) -> ArcLabel {
        let taken: Vec<&str> = self
            .arcs
            .iter()
            .chain(self.free_loops.iter())
            .map(|a| a.as_str())
            .collect();
        ArcLabel::new(fresh_label("a", &taken))
    }

    pub fn fresh_arc_labels(&self, count: usize) -> Vec<ArcLabel> {
        let taken: Vec<&str> = self
            .arcs
            .iter()
            .chain(self.free_loops.iter())
            .map(|a| a.as_str())
            .collect();
        crate::label::fresh_labels("a", count, &taken)
            .into_iter()
            .map(ArcLabel::new)
            .collect()
    }

    /// Canonical certificate of the map with over flags, up to relabeling.
    ///
    /// Two diagrams are isomorphic (as oriented maps with over/under data)
    /// exactly when their certificates agree. Site, arc and region labels are
    /// ignored; free loops are compared by count.
    pub fn canonical_form(&self) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for root in self.darts() {
            let cand = self.encode_from(root);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        let mut cert = best.unwrap_or_default();
        cert.push(self.free_loops.len() as u32);
        cert
    }

    /// Breadth-first relabeling anchored at `root`: sites are numbered in
    /// visit order and every site's slots are read relative to its entry
    /// slot, which removes the rotational ambiguity.
    fn encode_from(&self, root: Dart) -> Vec<u32> {
        let n = self.site_count();
        let mut order = vec![usize::MAX; n]; // site -> visit number
        let mut entry = vec![0u8; n]; // slot through which a site was first reached
        let mut queue = alloc::collections::VecDeque::new();
        order[root.site.0] = 0;
        entry[root.site.0] = root.slot;
        queue.push_back(root.site);
        let mut visited = 1usize;
        let mut code = Vec::with_capacity(n * 10);
        while let Some(s) = queue.pop_front() {
            let deg = self.degree(s);
            code.push(deg as u32);
            if self.is_crossing(s) {
                // Over flag relative to the entry slot parity.
                let over_even = self.crossings[s.0].over == OverPair::Slots13;
                let rel = over_even == entry[s.0].is_multiple_of(2);
                code.push(rel as u32);
            }
            for k in 0..deg as u8 {
                let slot = (entry[s.0] + k) % deg as u8;
                let p = self.partner(Dart { site: s, slot });
                if order[p.site.0] == usize::MAX {
                    order[p.site.0] = visited;
                    entry[p.site.0] = p.slot;
                    visited += 1;
                    queue.push_back(p.site);
                }
                let pdeg = self.degree(p.site) as u8;
                let rel_slot = (p.slot + pdeg - entry[p.site.0]) % pdeg;
                code.push(order[p.site.0] as u32);
                code.push(rel_slot as u32);
            }
        }
        // Disconnected remainder keeps certificates of different maps apart.
        code.push(u32::MAX);
        code.push((n - visited) as u32);
        code
    }

    pub fn is_isomorphic(&self, other: &Diagram) -> bool {
        self.site_count() == other.site_count()
            && self.crossing_count() == other.crossing_count()
            && self.arc_count() == other.arc_count()
            && self.canonical_form() == other.canonical_form()
    }
}
