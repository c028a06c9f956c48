//! Stable JSON shapes (`"schema": 1`) mirroring the text outputs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use rcc_core::diagram::{Diagram, OverPair};
use rcc_core::oracle::OracleReport;
use rcc_core::rcc::RegionChoiceMatrix;
use rcc_core::region::RegionTable;
use rcc_core::validate::ValidationReport;

pub const SCHEMA: u32 = 1;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CrossingJson {
    pub label: String,
    pub arcs: [String; 4],
    /// `[1,3]` or `[2,4]`.
    pub over: [u8; 2],
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VertexJson {
    pub label: String,
    pub arcs: [String; 3],
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DiagramJson {
    pub schema: u32,
    pub crossings: Vec<CrossingJson>,
    pub vertices: Vec<VertexJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outer: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub regions: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub free_loops: Vec<String>,
}

fn over_json(o: OverPair) -> [u8; 2] {
    match o {
        OverPair::Slots13 => [1, 3],
        OverPair::Slots24 => [2, 4],
    }
}

pub fn diagram_json(d: &Diagram) -> DiagramJson {
    let corner_name =
        |c: rcc_core::diagram::Corner| format!("{}.{}", d.site_name(c.site), c.index + 1);
    let mut regions = BTreeMap::new();
    if let Ok(table) = RegionTable::build(d) {
        for region in table.regions() {
            if let Some(first) = region.corners.first() {
                regions.insert(region.label.to_string(), corner_name(*first));
            }
        }
    }
    DiagramJson {
        schema: SCHEMA,
        crossings: d
            .crossings()
            .iter()
            .map(|c| CrossingJson {
                label: c.label.to_string(),
                arcs: c.arcs.clone().map(|a| a.to_string()),
                over: over_json(c.over),
            })
            .collect(),
        vertices: d
            .vertices()
            .iter()
            .map(|v| VertexJson {
                label: v.label.to_string(),
                arcs: v.arcs.clone().map(|a| a.to_string()),
            })
            .collect(),
        outer: d.outer_corner().map(corner_name),
        regions,
        free_loops: d.free_loops().iter().map(|l| l.to_string()).collect(),
    }
}

/// Rebuild a diagram from its JSON form.
pub fn diagram_from_json(j: &DiagramJson) -> Result<Diagram, String> {
    use rcc_core::diagram::{Corner, CrossingSite, VertexSite};
    let crossings: Vec<CrossingSite> = j
        .crossings
        .iter()
        .map(|c| {
            let over = match c.over {
                [1, 3] => OverPair::Slots13,
                [2, 4] => OverPair::Slots24,
                other => return Err(format!("bad over pair {other:?}")),
            };
            Ok(CrossingSite {
                label: c.label.as_str().into(),
                arcs: [
                    c.arcs[0].as_str().into(),
                    c.arcs[1].as_str().into(),
                    c.arcs[2].as_str().into(),
                    c.arcs[3].as_str().into(),
                ],
                over,
            })
        })
        .collect::<Result<_, String>>()?;
    let vertices: Vec<VertexSite> = j
        .vertices
        .iter()
        .map(|v| VertexSite {
            label: v.label.as_str().into(),
            arcs: [
                v.arcs[0].as_str().into(),
                v.arcs[1].as_str().into(),
                v.arcs[2].as_str().into(),
            ],
        })
        .collect();
    let skeleton =
        Diagram::new(crossings.clone(), vertices.clone()).map_err(|e| e.to_string())?;
    let parse_corner = |s: &str| -> Result<Corner, String> {
        let (site, idx) = s.rsplit_once('.').ok_or_else(|| format!("bad corner `{s}`"))?;
        let site = skeleton.site_by_name(site).ok_or_else(|| format!("unknown site `{site}`"))?;
        let idx: usize = idx.parse().map_err(|_| format!("bad corner `{s}`"))?;
        Ok(Corner { site, index: (idx - 1) as u8 })
    };
    let outer = j.outer.as_deref().map(parse_corner).transpose()?;
    let pins = j
        .regions
        .iter()
        .map(|(label, corner)| Ok((parse_corner(corner)?, label.as_str().into())))
        .collect::<Result<Vec<_>, String>>()?;
    Diagram::with_annotations(crossings, vertices, outer, pins).map_err(|e| e.to_string())
}

#[derive(Serialize, Debug)]
pub struct ComponentJson {
    pub kind: String,
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub euler_residual: i64,
    pub crossings: usize,
}

#[derive(Serialize, Debug)]
pub struct ValidateJson {
    pub schema: u32,
    pub components: Vec<ComponentJson>,
    pub reducible: Vec<String>,
    pub cutting_edges: Vec<String>,
}

pub fn validate_json(r: &ValidationReport) -> ValidateJson {
    ValidateJson {
        schema: SCHEMA,
        components: r
            .components
            .iter()
            .map(|c| ComponentJson {
                kind: c.kind.to_string(),
                v: c.v,
                e: c.e,
                f: c.f,
                euler_residual: c.euler_residual,
                crossings: c.crossing_count,
            })
            .collect(),
        reducible: r.reducible.iter().map(|c| c.to_string()).collect(),
        cutting_edges: r.cutting_edges.iter().map(|e| e.to_string()).collect(),
    }
}

#[derive(Serialize, Debug)]
pub struct RegionJson {
    pub label: String,
    pub corners: Vec<String>,
    pub arcs: Vec<String>,
    pub crossings: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct RegionsJson {
    pub schema: u32,
    pub regions: Vec<RegionJson>,
}

#[derive(Serialize, Debug)]
pub struct MatrixJson {
    pub schema: u32,
    pub crossings: Vec<String>,
    pub regions: Vec<String>,
    pub rows: Vec<Vec<u8>>,
    pub rank: usize,
    pub nullity: usize,
}

pub fn matrix_json(m: &RegionChoiceMatrix) -> MatrixJson {
    MatrixJson {
        schema: SCHEMA,
        crossings: m.crossing_labels().iter().map(|c| c.to_string()).collect(),
        regions: m.region_labels().iter().map(|r| r.to_string()).collect(),
        rows: (0..m.matrix().rows())
            .map(|r| m.matrix().row(r).iter().map(u8::from).collect())
            .collect(),
        rank: m.rank(),
        nullity: m.nullity(),
    }
}

#[derive(Serialize, Debug)]
pub struct SolutionFamilyJson {
    pub schema: u32,
    pub diagram: String,
    pub target: Vec<String>,
    pub solutions: Vec<Vec<String>>,
    pub rank: usize,
    pub nullity: usize,
}

#[derive(Serialize, Debug)]
pub struct OracleJson {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<String>,
    pub target: Vec<String>,
    pub subsets_examined: u64,
    pub matching: Vec<Vec<String>>,
    pub solver: Vec<Vec<String>>,
    pub agreement: bool,
}

pub fn oracle_json(r: &OracleReport) -> OracleJson {
    let family = |f: &[rcc_core::rcc::RegionSet]| -> Vec<Vec<String>> {
        f.iter().map(|s| s.iter().map(|r| r.to_string()).collect()).collect()
    };
    OracleJson {
        schema: SCHEMA,
        diagram: r.diagram_id.clone(),
        target: r.target.iter().map(|c| c.to_string()).collect(),
        subsets_examined: r.subsets_examined,
        matching: family(&r.matching),
        solver: family(&r.solver),
        agreement: r.agreement,
    }
}

#[derive(Serialize, Debug)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct VerifyJson {
    pub schema: u32,
    pub diagram: String,
    pub checks: Vec<CheckJson>,
    pub pass: bool,
}

#[derive(Serialize, Debug)]
pub struct SubknotJson {
    pub schema: u32,
    pub deleted: String,
    pub knot: DiagramJson,
    pub region_map: BTreeMap<String, String>,
}

#[derive(Serialize, Debug)]
pub struct CheckerboardJson {
    pub schema: u32,
    pub edge: String,
    pub black: Vec<String>,
    pub white: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct FLabelJson {
    pub schema: u32,
    pub values: BTreeMap<String, u8>,
}

#[derive(Serialize, Debug)]
pub struct CatalogEntryJson {
    pub id: String,
    pub kind: String,
    pub crossings: usize,
    pub faces: usize,
    pub rank: usize,
    pub ineffective_size: u64,
    pub reduced: bool,
    pub cutting_edges: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct CatalogJson {
    pub schema: u32,
    pub entries: Vec<CatalogEntryJson>,
}
