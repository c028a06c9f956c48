//! Reidemeister moves R1 and R2 as combinatorial surgery.
//!
//! These are used to generate test families with controlled crossing counts:
//! both moves preserve sphericity and component classification, R1 changes
//! the crossing count by one and the face count by one, R2 by two and two.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Corner, CrossingSite, Dart, Diagram, OverPair, SiteId};
use crate::label::{ArcLabel, CrossingLabel, RegionLabel};
use crate::region::{RegionError, RegionTable};
use crate::surgery::excise;

/// Side of an arc, relative to walking it from its first stored end.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArcSide {
    Left,
    Right,
}

/// Handedness of an R1 curl.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Twist {
    Positive,
    Negative,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReidemeisterMove {
    /// Put a curl on an arc.
    R1Add { arc: ArcLabel, side: ArcSide, twist: Twist },
    /// Undo a curl at a crossing whose lobe arc occupies two adjacent slots.
    R1Remove { crossing: CrossingLabel },
    /// Poke `over` across `region` so it passes over `under`. Both arcs must
    /// bound the region.
    R2Add { over: ArcLabel, under: ArcLabel, region: RegionLabel },
    /// Undo a poke: the two crossings must cospan a bigon with consistent
    /// over data.
    R2Remove { first: CrossingLabel, second: CrossingLabel },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MoveError {
    UnknownArc(ArcLabel),
    UnknownCrossing(CrossingLabel),
    UnknownRegion(RegionLabel),
    NotApplicable(String),
    Region(RegionError),
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::UnknownArc(a) => write!(f, "unknown arc `{a}`"),
            MoveError::UnknownCrossing(c) => write!(f, "unknown crossing `{c}`"),
            MoveError::UnknownRegion(r) => write!(f, "unknown region `{r}`"),
            MoveError::NotApplicable(why) => write!(f, "move not applicable: {why}"),
            MoveError::Region(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for MoveError {}

impl From<RegionError> for MoveError {
    fn from(e: RegionError) -> Self {
        MoveError::Region(e)
    }
}

pub fn apply_reidemeister(d: &Diagram, mv: &ReidemeisterMove) -> Result<Diagram, MoveError> {
    match mv {
        ReidemeisterMove::R1Add { arc, side, twist } => r1_add(d, arc, *side, *twist),
        ReidemeisterMove::R1Remove { crossing } => r1_remove(d, crossing),
        ReidemeisterMove::R2Add { over, under, region } => r2_add(d, over, under, region),
        ReidemeisterMove::R2Remove { first, second } => r2_remove(d, first, second),
    }
}

/// Re-resolve outer corner and region pins against a rebuilt diagram. Sites
/// are matched by label; annotations at removed sites are dropped.
fn carry_annotations(old: &Diagram, new: Diagram) -> Diagram {
    let resolve = |c: Corner| -> Option<Corner> {
        let site = new.site_by_name(old.site_name(c.site))?;
        Some(Corner { site, index: c.index })
    };
    let outer = old.outer_corner().and_then(resolve);
    let pins: Vec<(Corner, RegionLabel)> = old
        .region_pins()
        .iter()
        .filter_map(|(c, l)| resolve(*c).map(|c| (c, l.clone())))
        .collect();
    Diagram::assemble(
        new.crossings().to_vec(),
        new.vertices().to_vec(),
        new.free_loops().to_vec(),
        outer,
        pins,
    )
    .expect("annotations resolved against the new diagram")
}

fn replace_at(d: &Diagram, patches: &[(Dart, ArcLabel)]) -> (Vec<CrossingSite>, Vec<crate::diagram::VertexSite>) {
    let mut crossings = d.crossings().to_vec();
    let mut vertices = d.vertices().to_vec();
    for (dart, label) in patches {
        let s = dart.site.0;
        if d.is_crossing(dart.site) {
            crossings[s].arcs[dart.slot as usize] = label.clone();
        } else {
            vertices[s - d.crossing_count()].arcs[dart.slot as usize] = label.clone();
        }
    }
    (crossings, vertices)
}

fn r1_add(d: &Diagram, arc: &ArcLabel, side: ArcSide, twist: Twist) -> Result<Diagram, MoveError> {
    let over = match twist {
        Twist::Positive => OverPair::Slots13,
        Twist::Negative => OverPair::Slots24,
    };
    let label = d.fresh_crossing_label();

    if d.free_loops().contains(arc) {
        // Curling a bare loop produces the standalone kink.
        let lobe = d.fresh_arc_label();
        let mut crossings = d.crossings().to_vec();
        crossings.push(CrossingSite {
            label,
            arcs: [arc.clone(), arc.clone(), lobe.clone(), lobe.clone()],
            over,
        });
        let loops: Vec<ArcLabel> =
            d.free_loops().iter().filter(|l| *l != arc).cloned().collect();
        let new = Diagram::assemble(crossings, d.vertices().to_vec(), loops, None, Vec::new())
            .expect("kink insertion is slot-valid");
        return Ok(carry_annotations(d, new));
    }

    let id = d.arc_id(arc).ok_or_else(|| MoveError::UnknownArc(arc.clone()))?;
    let [_, db] = d.arc_ends(id);
    let fresh = d.fresh_arc_labels(2);
    let (tail, lobe) = (fresh[0].clone(), fresh[1].clone());
    // Walking the arc from `da`, the curl sits just before the far end; the
    // lobe hangs to the chosen side.
    let arcs = match side {
        ArcSide::Left => [arc.clone(), tail.clone(), lobe.clone(), lobe.clone()],
        ArcSide::Right => [arc.clone(), lobe.clone(), lobe.clone(), tail.clone()],
    };
    let (mut crossings, vertices) = replace_at(d, &[(db, tail)]);
    crossings.push(CrossingSite { label, arcs, over });
    let new = Diagram::assemble(crossings, vertices, d.free_loops().to_vec(), None, Vec::new())
        .expect("curl insertion is slot-valid");
    Ok(carry_annotations(d, new))
}

fn r1_remove(d: &Diagram, crossing: &CrossingLabel) -> Result<Diagram, MoveError> {
    let i = d
        .crossing_by_label(crossing)
        .ok_or_else(|| MoveError::UnknownCrossing(crossing.clone()))?;
    let site = SiteId(i);
    let lobe_slot = (0..4u8)
        .find(|&j| {
            let a = d.arc_at(Dart { site, slot: j });
            let b = d.arc_at(Dart { site, slot: (j + 1) % 4 });
            a == b
        })
        .ok_or_else(|| MoveError::NotApplicable(String::from("no curl at this crossing")))?;
    let lobe = d.arc_at(Dart { site, slot: lobe_slot });
    let removed: BTreeSet<usize> = [i].into_iter().collect();
    let dropped: BTreeSet<usize> = [lobe].into_iter().collect();
    let splice = (
        Dart { site, slot: (lobe_slot + 2) % 4 },
        Dart { site, slot: (lobe_slot + 3) % 4 },
    );
    let ex = excise(d, &removed, &[splice], &dropped);
    let new = Diagram::assemble(ex.crossings, ex.vertices, ex.free_loops, None, Vec::new())
        .expect("curl removal is slot-valid");
    Ok(carry_annotations(d, new))
}

/// First boundary dart of `region` lying on `arc`, oriented so the region is
/// on the dart's left.
fn region_dart_on(
    d: &Diagram,
    regions: &RegionTable,
    region: usize,
    arc: usize,
) -> Option<Dart> {
    for corner in &regions.regions()[region].corners {
        let step = d.next_slot(Dart { site: corner.site, slot: corner.index });
        if d.arc_at(step) == arc {
            return Some(d.partner(step));
        }
    }
    None
}

fn r2_add(
    d: &Diagram,
    over: &ArcLabel,
    under: &ArcLabel,
    region: &RegionLabel,
) -> Result<Diagram, MoveError> {
    if over == under {
        return Err(MoveError::NotApplicable(String::from("the two arcs must be distinct")));
    }
    let regions = RegionTable::build(d)?;
    let rid = regions
        .index_of(region)
        .ok_or_else(|| MoveError::UnknownRegion(region.clone()))?;
    let x = d.arc_id(over).ok_or_else(|| MoveError::UnknownArc(over.clone()))?;
    let y = d.arc_id(under).ok_or_else(|| MoveError::UnknownArc(under.clone()))?;
    let dx = region_dart_on(d, &regions, rid, x).ok_or_else(|| {
        MoveError::NotApplicable(String::from("first arc does not bound the region"))
    })?;
    let dy = region_dart_on(d, &regions, rid, y).ok_or_else(|| {
        MoveError::NotApplicable(String::from("second arc does not bound the region"))
    })?;
    let dxb = d.partner(dx);
    let dyb = d.partner(dy);

    let fresh = d.fresh_arc_labels(4);
    let (xm, xb, ym, yb) = (fresh[0].clone(), fresh[1].clone(), fresh[2].clone(), fresh[3].clone());
    let xa = over.clone();
    let ya = under.clone();

    let u_label = d.fresh_crossing_label();
    let (mut crossings, vertices) = replace_at(d, &[(dxb, xb.clone()), (dyb, yb.clone())]);
    // Walking x from `dx` with the region on the left and y from `dy`
    // likewise, the strands meet anti-parallel. `u` is the crossing on x's
    // way out, `w` the one on its way back.
    crossings.push(CrossingSite {
        label: u_label.clone(),
        arcs: [ym.clone(), xm.clone(), yb.clone(), xa.clone()],
        over: OverPair::Slots24,
    });
    let w_label = {
        let mut taken: Vec<&str> = crossings.iter().map(|c| c.label.as_str()).collect();
        taken.extend(d.vertices().iter().map(|v| v.label.as_str()));
        CrossingLabel::new(crate::label::fresh_label("c", &taken))
    };
    crossings.push(CrossingSite {
        label: w_label,
        arcs: [ya.clone(), xm.clone(), ym.clone(), xb.clone()],
        over: OverPair::Slots24,
    });
    let new = Diagram::assemble(crossings, vertices, d.free_loops().to_vec(), None, Vec::new())
        .expect("poke insertion is slot-valid");
    Ok(carry_annotations(d, new))
}

fn r2_remove(
    d: &Diagram,
    first: &CrossingLabel,
    second: &CrossingLabel,
) -> Result<Diagram, MoveError> {
    let ci = d
        .crossing_by_label(first)
        .ok_or_else(|| MoveError::UnknownCrossing(first.clone()))?;
    let di = d
        .crossing_by_label(second)
        .ok_or_else(|| MoveError::UnknownCrossing(second.clone()))?;
    if ci == di {
        return Err(MoveError::NotApplicable(String::from("need two distinct crossings")));
    }
    let regions = RegionTable::build(d)?;
    let bigon = regions
        .regions()
        .iter()
        .find(|r| {
            r.corners.len() == 2
                && r.crossings.contains(&ci)
                && r.crossings.contains(&di)
        })
        .ok_or_else(|| {
            MoveError::NotApplicable(String::from("no bigon between these crossings"))
        })?;
    let (cc, cd) = {
        let a = bigon.corners[0];
        let b = bigon.corners[1];
        if a.site.0 == ci {
            (a, b)
        } else {
            (b, a)
        }
    };
    let (j, k) = (cc.index, cd.index);
    let c_site = SiteId(ci);
    let d_site = SiteId(di);
    let m1 = d.arc_at(Dart { site: c_site, slot: (j + 1) % 4 });
    let m2 = d.arc_at(Dart { site: d_site, slot: (k + 1) % 4 });
    debug_assert_eq!(d.arc_at(Dart { site: d_site, slot: k }), m1);
    debug_assert_eq!(d.arc_at(Dart { site: c_site, slot: j }), m2);

    // The same strand must be over at both crossings, otherwise the bigon is
    // a clasp and not an R2 site.
    let over_m1_at_c = match d.crossings()[ci].over {
        OverPair::Slots13 => (j + 1) % 2 == 0,
        OverPair::Slots24 => (j + 1) % 2 == 1,
    };
    let over_m1_at_d = match d.crossings()[di].over {
        OverPair::Slots13 => k % 2 == 0,
        OverPair::Slots24 => k % 2 == 1,
    };
    if over_m1_at_c != over_m1_at_d {
        return Err(MoveError::NotApplicable(String::from(
            "bigon is a clasp: over data is inconsistent",
        )));
    }

    let removed: BTreeSet<usize> = [ci, di].into_iter().collect();
    let splices = [
        (Dart { site: c_site, slot: (j + 1) % 4 }, Dart { site: c_site, slot: (j + 3) % 4 }),
        (Dart { site: d_site, slot: k }, Dart { site: d_site, slot: (k + 2) % 4 }),
        (Dart { site: c_site, slot: j }, Dart { site: c_site, slot: (j + 2) % 4 }),
        (Dart { site: d_site, slot: (k + 1) % 4 }, Dart { site: d_site, slot: (k + 3) % 4 }),
    ];
    let ex = excise(d, &removed, &splices, &BTreeSet::new());
    let new = Diagram::assemble(ex.crossings, ex.vertices, ex.free_loops, None, Vec::new())
        .expect("poke removal is slot-valid");
    Ok(carry_annotations(d, new))
}
