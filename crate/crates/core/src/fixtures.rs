//! Built-in diagrams used across the test suites and mirrored by the catalog
//! files shipped with the CLI.
//!
//! Every constructor returns a structurally valid, spherical diagram with a
//! designated outer region. `theta_t31` pins its region labels so that its
//! region choice matrix comes out in the canonical column order `R1..R6`.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{Corner, CrossingSite, Diagram, OverPair, SiteId, VertexSite};
use crate::label::RegionLabel;

fn x(label: &str, arcs: [&str; 4], over: OverPair) -> CrossingSite {
    CrossingSite {
        label: label.into(),
        arcs: [arcs[0].into(), arcs[1].into(), arcs[2].into(), arcs[3].into()],
        over,
    }
}

fn v(label: &str, arcs: [&str; 3]) -> VertexSite {
    VertexSite { label: label.into(), arcs: [arcs[0].into(), arcs[1].into(), arcs[2].into()] }
}

fn corner(site: usize, index: u8) -> Corner {
    Corner { site: SiteId(site), index }
}

/// One-crossing unknot with a curl. Reducible; three regions.
pub fn kink() -> Diagram {
    Diagram::with_annotations(
        vec![x("c1", ["a", "a", "b", "b"], OverPair::Slots24)],
        vec![],
        Some(corner(0, 1)),
        vec![],
    )
    .expect("valid fixture")
}

/// Reduced trefoil as the closure of a three-crossing two-strand braid.
/// Five regions; the outer one touches the top of `c1`.
pub fn trefoil() -> Diagram {
    Diagram::with_annotations(
        vec![
            x("c1", ["s2", "s1", "s4", "s3"], OverPair::Slots24),
            x("c2", ["s3", "s4", "s5", "s6"], OverPair::Slots24),
            x("c3", ["s6", "s5", "s1", "s2"], OverPair::Slots24),
        ],
        vec![],
        Some(corner(0, 0)),
        vec![],
    )
    .expect("valid fixture")
}

/// Reduced figure-eight diagram: closure of the braid word
/// (sigma_1 sigma_2^-1)^2 on three strands. Six regions.
pub fn figure_eight() -> Diagram {
    Diagram::with_annotations(
        vec![
            x("c1", ["s2", "s1", "s4", "s5"], OverPair::Slots24),
            x("c2", ["s3", "s5", "s6", "s7"], OverPair::Slots13),
            x("c3", ["s6", "s4", "s1", "s8"], OverPair::Slots24),
            x("c4", ["s7", "s8", "s2", "s3"], OverPair::Slots13),
        ],
        vec![],
        Some(corner(0, 0)),
        vec![],
    )
    .expect("valid fixture")
}

/// Crossing-free theta-curve: two vertices joined by three parallel edges.
pub fn theta_zero() -> Diagram {
    Diagram::with_annotations(
        vec![],
        vec![v("v1", ["b", "a", "c"]), v("v2", ["a", "b", "c"])],
        Some(corner(0, 2)),
        vec![],
    )
    .expect("valid fixture")
}

/// Three-crossing reduced theta-curve: edges `s*` and `t*` braid past each
/// other three times between the vertices while `u1` runs clear. Region
/// labels are pinned so the region choice matrix reads, row by row,
/// `101101 / 011011 / 001111`.
pub fn theta_t31() -> Diagram {
    let pins: Vec<(Corner, RegionLabel)> = vec![
        (corner(0, 0), "R1".into()),
        (corner(0, 1), "R3".into()),
        (corner(0, 2), "R4".into()),
        (corner(0, 3), "R6".into()),
        (corner(2, 2), "R5".into()),
        (corner(1, 2), "R2".into()),
    ];
    Diagram::with_annotations(
        vec![
            x("c1", ["t1", "s1", "t2", "s2"], OverPair::Slots24),
            x("c2", ["t3", "s3", "t4", "s4"], OverPair::Slots24),
            x("c3", ["s2", "t2", "s3", "t3"], OverPair::Slots24),
        ],
        vec![v("v1", ["u1", "s1", "t1"]), v("v2", ["s4", "t4", "u1"])],
        Some(corner(0, 3)),
        pins,
    )
    .expect("valid fixture")
}

/// Crossing-free handcuff: a loop at each vertex and a clear bridge. The
/// bridge (`e3` after edge tracing) is a cutting edge.
pub fn handcuff_flat() -> Diagram {
    Diagram::with_annotations(
        vec![],
        vec![v("v1", ["g", "a", "a"]), v("v2", ["b", "g", "b"])],
        Some(corner(0, 0)),
        vec![],
    )
    .expect("valid fixture")
}

/// Handcuff whose bridge carries a curl (`c1`) and then pokes over itself
/// (`c2`, `c3`). The bridge is a cutting edge, the matrix rows of `c2` and
/// `c3` coincide, so rank drops to 2 and changing `c2` alone is not
/// realizable by region crossing changes.
pub fn handcuff_cut() -> Diagram {
    Diagram::with_annotations(
        vec![
            x("c1", ["g3", "g5", "g4", "g4"], OverPair::Slots13),
            x("c2", ["g6", "g2", "g5", "g1"], OverPair::Slots24),
            x("c3", ["g7", "g2", "g6", "g3"], OverPair::Slots24),
        ],
        vec![v("v1", ["g1", "a", "a"]), v("v2", ["b", "g7", "b"])],
        Some(corner(3, 0)),
        vec![],
    )
    .expect("valid fixture")
}

/// `theta_t31` with one extra poke: edge `s*` pushed over edge `t*` across
/// the region `R1`. Still reduced, five crossings, eight regions.
pub fn theta_t31_r2() -> Diagram {
    let pins: Vec<(Corner, RegionLabel)> = vec![
        (corner(0, 0), "R1".into()),
        (corner(0, 1), "R3".into()),
        (corner(0, 2), "R4".into()),
        (corner(0, 3), "R6".into()),
        (corner(2, 2), "R5".into()),
        (corner(1, 2), "R2".into()),
    ];
    Diagram::with_annotations(
        vec![
            x("c1", ["t1", "a2", "t2", "s2"], OverPair::Slots24),
            x("c2", ["t3", "s3", "t4", "s4"], OverPair::Slots24),
            x("c3", ["s2", "t2", "s3", "t3"], OverPair::Slots24),
            x("c4", ["a3", "a1", "a4", "s1"], OverPair::Slots24),
            x("c5", ["t1", "a1", "a3", "a2"], OverPair::Slots24),
        ],
        vec![v("v1", ["u1", "s1", "a4"]), v("v2", ["s4", "t4", "u1"])],
        Some(corner(0, 3)),
        pins,
    )
    .expect("valid fixture")
}

/// Every fixture paired with a short id, for table-driven tests.
pub fn all() -> Vec<(&'static str, Diagram)> {
    vec![
        ("kink", kink()),
        ("trefoil", trefoil()),
        ("fig8", figure_eight()),
        ("theta_0", theta_zero()),
        ("theta_t31", theta_t31()),
        ("theta_t31_r2", theta_t31_r2()),
        ("handcuff_0", handcuff_flat()),
        ("handcuff_cut", handcuff_cut()),
    ]
}

/// The reduced theta-curve fixtures, the inputs every lemma applies to.
pub fn reduced_thetas() -> Vec<(&'static str, Diagram)> {
    vec![
        ("theta_0", theta_zero()),
        ("theta_t31", theta_t31()),
        ("theta_t31_r2", theta_t31_r2()),
    ]
}
