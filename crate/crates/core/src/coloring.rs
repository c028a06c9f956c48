//! Checkerboard pullbacks for reduced theta-curve diagrams.
//!
//! Deleting edge `e_i` leaves a knot diagram `k^i`. Checkerboard-color the
//! regions of `k^i` with the region containing the designated outer region of
//! the source diagram white, then pull the colors back through the region
//! correspondence. The black sets `B^i` are ineffective, satisfy
//! `B^l = B^m symdiff B^n`, and together with `W^1` span the nullspace of the
//! region choice matrix.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::Diagram;
use crate::edges::{trace_edges, TraceKind};
use crate::gf2::BitMatrix;
use crate::label::{CrossingLabel, EdgeLabel, RegionLabel};
use crate::rcc::{region_choice_matrix, RccError};
use crate::region::{RegionError, RegionTable};
use crate::subknot::{delete_edge, SubknotError};
use crate::validate::{validate, ComponentKind};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ColoringError {
    NotTheta,
    /// Reducible input: the pullback construction needs a reduced diagram.
    Reducible(Vec<CrossingLabel>),
    MissingOuter,
    /// Two regions sharing an arc were forced to one color. Only a corrupt
    /// map can do this.
    NotBipartite,
    UnknownEdge(EdgeLabel),
    Subknot(SubknotError),
    Region(RegionError),
    Rcc(RccError),
    Validate(String),
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::NotTheta => f.write_str("checkerboard pullback requires a theta-curve diagram"),
            ColoringError::Reducible(cs) => {
                write!(f, "diagram is reducible at ")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            ColoringError::MissingOuter => f.write_str("no outer region designated"),
            ColoringError::NotBipartite => f.write_str("coloring graph not bipartite"),
            ColoringError::UnknownEdge(e) => write!(f, "unknown edge `{e}`"),
            ColoringError::Subknot(e) => e.fmt(f),
            ColoringError::Region(e) => e.fmt(f),
            ColoringError::Rcc(e) => e.fmt(f),
            ColoringError::Validate(e) => f.write_str(e),
        }
    }
}

impl core::error::Error for ColoringError {}

impl From<SubknotError> for ColoringError {
    fn from(e: SubknotError) -> Self {
        ColoringError::Subknot(e)
    }
}

impl From<RegionError> for ColoringError {
    fn from(e: RegionError) -> Self {
        ColoringError::Region(e)
    }
}

impl From<RccError> for ColoringError {
    fn from(e: RccError) -> Self {
        ColoringError::Rcc(e)
    }
}

/// Black/white split of the source diagram's regions induced by the
/// checkerboard coloring of one knot sub-diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoringPartition {
    pub edge: EdgeLabel,
    /// Regions pulled back to black, in region-table order.
    pub black: Vec<RegionLabel>,
    /// Regions pulled back to white; contains the outer region.
    pub white: Vec<RegionLabel>,
}

impl ColoringPartition {
    pub fn is_black(&self, r: &RegionLabel) -> bool {
        self.black.contains(r)
    }
}

/// Per-region sum of black indicators over the three sub-knot colorings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FLabeling {
    pub values: Vec<(RegionLabel, u8)>,
}

impl FLabeling {
    pub fn value(&self, r: &RegionLabel) -> Option<u8> {
        self.values.iter().find(|(label, _)| label == r).map(|(_, v)| *v)
    }
}

/// One check of `B^l = B^m symdiff B^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymdiffCheck {
    pub target: EdgeLabel,
    pub left: EdgeLabel,
    pub right: EdgeLabel,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymdiffReport {
    pub checks: Vec<SymdiffCheck>,
}

impl SymdiffReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn require_reduced_theta(d: &Diagram) -> Result<(), ColoringError> {
    let report = validate(d).map_err(|e| ColoringError::Validate(alloc::format!("{e}")))?;
    if report.kind() != Some(ComponentKind::Theta) {
        return Err(ColoringError::NotTheta);
    }
    if !report.reducible.is_empty() {
        return Err(ColoringError::Reducible(report.reducible));
    }
    if d.outer_corner().is_none() {
        return Err(ColoringError::MissingOuter);
    }
    Ok(())
}

/// The three edges of a theta component, in trace order.
pub fn theta_edges(d: &Diagram) -> Vec<EdgeLabel> {
    trace_edges(d)
        .into_iter()
        .filter(|t| t.kind() == TraceKind::Path)
        .map(|t| t.label)
        .collect()
}

/// Checkerboard-color the sub-knot left by deleting `edge` and pull the
/// colors back to the regions of `d`.
pub fn checkerboard_pullback(
    d: &Diagram,
    edge: &EdgeLabel,
) -> Result<ColoringPartition, ColoringError> {
    require_reduced_theta(d)?;
    let (knot, map) = match delete_edge(d, edge) {
        Ok(ok) => ok,
        Err(SubknotError::UnknownEdge(e)) => return Err(ColoringError::UnknownEdge(e)),
        Err(e) => return Err(e.into()),
    };

    let table = RegionTable::build(d)?;
    let outer_corner = d.outer_corner().expect("checked above");
    let outer_label = table.label(table.region_of(outer_corner)).clone();
    let white_seed = map.get(&outer_label).expect("outer region is mapped").clone();

    let knot_regions = RegionTable::build(&knot)?;
    // Two-color the knot regions: regions sharing an arc differ, the region
    // containing the source's outer region is white.
    let mut color: BTreeMap<RegionLabel, bool> = BTreeMap::new(); // true = black
    if knot.site_count() == 0 {
        for r in knot_regions.regions() {
            color.insert(r.label.clone(), r.label != white_seed);
        }
    } else {
        let seed = knot_regions
            .index_of(&white_seed)
            .expect("region map targets knot regions");
        let mut assigned = alloc::vec![None::<bool>; knot_regions.len()];
        assigned[seed] = Some(false);
        let mut stack = alloc::vec![seed];
        while let Some(r) = stack.pop() {
            let mine = assigned[r].expect("pushed after assignment");
            for &arc in &knot_regions.regions()[r].arcs {
                let [a, b] = knot_regions.arc_sides(&knot, arc);
                let other = if a == r { b } else { a };
                match assigned[other] {
                    None => {
                        assigned[other] = Some(!mine);
                        stack.push(other);
                    }
                    Some(c) if c == mine => return Err(ColoringError::NotBipartite),
                    Some(_) => {}
                }
            }
        }
        for (i, r) in knot_regions.regions().iter().enumerate() {
            // A knot diagram's region graph is connected, so every region is
            // assigned once the seed's component is swept.
            let c = assigned[i].ok_or(ColoringError::NotBipartite)?;
            color.insert(r.label.clone(), c);
        }
    }

    let mut black = Vec::new();
    let mut white = Vec::new();
    for r in table.regions() {
        let target = map.get(&r.label).expect("region map is total");
        if *color.get(target).expect("colored above") {
            black.push(r.label.clone());
        } else {
            white.push(r.label.clone());
        }
    }
    Ok(ColoringPartition { edge: edge.clone(), black, white })
}

/// All three pullbacks of a reduced theta diagram, keyed by edge label.
pub fn all_pullbacks(d: &Diagram) -> Result<Vec<ColoringPartition>, ColoringError> {
    require_reduced_theta(d)?;
    theta_edges(d).iter().map(|e| checkerboard_pullback(d, e)).collect()
}

/// `f(r)`: in how many of the three black sets the region lies. On a reduced
/// theta diagram every value is 0 or 2, with the outer region at 0.
pub fn f_labeling(d: &Diagram) -> Result<FLabeling, ColoringError> {
    let pullbacks = all_pullbacks(d)?;
    let table = RegionTable::build(d)?;
    let values = table
        .regions()
        .iter()
        .map(|r| {
            let count = pullbacks.iter().filter(|p| p.is_black(&r.label)).count() as u8;
            (r.label.clone(), count)
        })
        .collect();
    Ok(FLabeling { values })
}

/// Check `B^l = B^m symdiff B^n` for the three choices of `l`.
pub fn verify_symdiff_lemma(d: &Diagram) -> Result<SymdiffReport, ColoringError> {
    let pullbacks = all_pullbacks(d)?;
    let set = |p: &ColoringPartition| -> BTreeSet<RegionLabel> {
        p.black.iter().cloned().collect()
    };
    let mut checks = Vec::new();
    for l in 0..3 {
        let m = (l + 1) % 3;
        let n = (l + 2) % 3;
        let sym: BTreeSet<RegionLabel> =
            set(&pullbacks[m]).symmetric_difference(&set(&pullbacks[n])).cloned().collect();
        checks.push(SymdiffCheck {
            target: pullbacks[l].edge.clone(),
            left: pullbacks[m].edge.clone(),
            right: pullbacks[n].edge.clone(),
            pass: sym == set(&pullbacks[l]),
        });
    }
    Ok(SymdiffReport { checks })
}

/// True when `B^1`, `W^1`, `B^2` are independent over GF(2) and span the
/// nullspace of the region choice matrix.
pub fn independence_check(d: &Diagram) -> Result<bool, ColoringError> {
    let pullbacks = all_pullbacks(d)?;
    let m = region_choice_matrix(d)?;
    let rows = [
        m.region_vector(&pullbacks[0].black)?,
        m.region_vector(&pullbacks[0].white)?,
        m.region_vector(&pullbacks[1].black)?,
    ];
    for v in &rows {
        if !m.matrix().mul_vec(v).expect("dimensions").is_zero() {
            return Ok(false);
        }
    }
    let stacked = BitMatrix::from_rows(rows.to_vec());
    Ok(stacked.rank() == 3 && m.nullity() == 3)
}
