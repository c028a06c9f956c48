//! Property tests: GF(2) algebra laws, diagram invariants under random
//! Reidemeister mutation, and algebra/diagram coherence for region crossing
//! changes.

use proptest::prelude::*;

use rcc_core::diagram::Diagram;
use rcc_core::edges::trace_edges;
use rcc_core::fixtures;
use rcc_core::gf2::{BitMatrix, BitVec};
use rcc_core::label::RegionLabel;
use rcc_core::moves::{apply_reidemeister, ArcSide, ReidemeisterMove, Twist};
use rcc_core::rcc::{apply_rcc, region_choice_matrix};
use rcc_core::region::RegionTable;
use rcc_core::validate::{validate, ComponentKind};

fn bit_matrix(rows: usize, cols: usize) -> impl Strategy<Value = BitMatrix> {
    proptest::collection::vec(proptest::collection::vec(any::<bool>(), cols), rows).prop_map(
        |rows| {
            BitMatrix::from_rows(rows.into_iter().map(|r| BitVec::from_bools(&r)).collect())
        },
    )
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(m in (1usize..7, 1usize..9).prop_flat_map(|(r, c)| bit_matrix(r, c))) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn nullspace_is_independent_and_annihilated(
        m in (1usize..7, 1usize..9).prop_flat_map(|(r, c)| bit_matrix(r, c))
    ) {
        let basis = m.nullspace();
        prop_assert_eq!(basis.len(), m.cols() - m.rank());
        for v in &basis {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
        let stacked = BitMatrix::from_rows(basis.clone());
        prop_assert_eq!(stacked.rank(), basis.len());
    }

    #[test]
    fn enumerated_solutions_are_exact_and_counted(
        m in (1usize..6, 1usize..8).prop_flat_map(|(r, c)| bit_matrix(r, c)),
        b_bits in proptest::collection::vec(any::<bool>(), 0..6),
    ) {
        let mut b = BitVec::zeros(m.rows());
        for (i, bit) in b_bits.iter().enumerate().take(m.rows()) {
            b.set(i, *bit);
        }
        match m.enumerate_solutions(&b, 1 << 12) {
            Ok(sols) => {
                prop_assert_eq!(sols.len() as u64, 1u64 << (m.cols() - m.rank()));
                for x in &sols {
                    prop_assert_eq!(m.mul_vec(x).unwrap(), b.clone());
                }
                // Canonical: strictly increasing entrywise order.
                for w in sols.windows(2) {
                    prop_assert!(w[0] < w[1]);
                }
            }
            Err(_) => {
                // Inconsistent: no x may satisfy the system.
                prop_assert!(m.solve(&b).unwrap().is_none());
            }
        }
    }
}

/// Deterministic diagram mutation driven by a byte script. Each step applies
/// one R1 or R2 addition picked from the legal moves at that point.
fn mutate(seed: usize, script: &[(u8, u8, u8)], max_crossings: usize) -> Diagram {
    let seeds = fixtures::all();
    let mut d = seeds[seed % seeds.len()].1.clone();
    for &(kind, a, b) in script {
        if d.crossing_count() >= max_crossings {
            break;
        }
        let next = if kind % 2 == 0 {
            let arcs = d.arcs();
            if arcs.is_empty() {
                break;
            }
            let arc = arcs[a as usize % arcs.len()].clone();
            let side = if b % 2 == 0 { ArcSide::Left } else { ArcSide::Right };
            let twist = if (b / 2) % 2 == 0 { Twist::Positive } else { Twist::Negative };
            apply_reidemeister(&d, &ReidemeisterMove::R1Add { arc, side, twist })
        } else {
            let Ok(table) = RegionTable::build(&d) else { break };
            let region = &table.regions()[a as usize % table.len()];
            let arcs: Vec<usize> = region.arcs.iter().copied().collect();
            if arcs.len() < 2 {
                continue;
            }
            let x = arcs[b as usize % arcs.len()];
            let y = arcs[(b as usize + 1) % arcs.len()];
            if x == y {
                continue;
            }
            apply_reidemeister(
                &d,
                &ReidemeisterMove::R2Add {
                    over: d.arcs()[x].clone(),
                    under: d.arcs()[y].clone(),
                    region: region.label.clone(),
                },
            )
        };
        match next {
            Ok(n) => d = n,
            Err(_) => continue,
        }
    }
    d
}

fn script() -> impl Strategy<Value = Vec<(u8, u8, u8)>> {
    proptest::collection::vec((any::<u8>(), any::<u8>(), any::<u8>()), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mutated_diagrams_stay_spherical_with_the_right_face_count(
        seed in 0usize..8,
        steps in script(),
    ) {
        let d = mutate(seed, &steps, 9);
        let report = validate(&d).unwrap();
        for comp in &report.components {
            prop_assert_eq!(comp.euler_residual, 0);
            let expected = match comp.kind {
                ComponentKind::Knot => comp.crossing_count + 2,
                ComponentKind::Theta | ComponentKind::Handcuff => comp.crossing_count + 3,
                ComponentKind::Other => continue,
            };
            prop_assert_eq!(comp.f, expected);
        }
        // Region corners partition the corner set.
        if let Ok(table) = RegionTable::build(&d) {
            let total: usize = table.regions().iter().map(|r| r.corners.len()).sum();
            prop_assert_eq!(total, d.corner_count());
        }
        // Edge traces partition the arcs.
        let traces = trace_edges(&d);
        let mut arcs: Vec<usize> = traces.iter().flat_map(|t| t.arcs.clone()).collect();
        arcs.sort();
        arcs.dedup();
        prop_assert_eq!(arcs.len(), d.arc_count());
    }

    #[test]
    fn rcc_involution_composition_and_matrix_coherence(
        seed in 0usize..8,
        steps in script(),
        picks in proptest::collection::vec(any::<u8>(), 0..12),
    ) {
        let d = mutate(seed, &steps, 8);
        let Ok(table) = RegionTable::build(&d) else { return Ok(()) };
        let f = table.len();
        let all: Vec<RegionLabel> =
            table.regions().iter().map(|r| r.label.clone()).collect();
        let half = picks.len() / 2;
        let s1: Vec<RegionLabel> = picks[..half].iter().map(|&p| all[p as usize % f].clone()).collect();
        let s2: Vec<RegionLabel> = picks[half..].iter().map(|&p| all[p as usize % f].clone()).collect();
        let dedup = |s: &[RegionLabel]| -> Vec<RegionLabel> {
            let mut v = s.to_vec();
            v.sort();
            v.dedup();
            v
        };
        let (s1, s2) = (dedup(&s1), dedup(&s2));

        // Involution.
        let once = apply_rcc(&d, &s1).unwrap();
        prop_assert_eq!(apply_rcc(&once, &s1).unwrap(), d.clone());

        // Composition: applying s1 then s2 equals their symmetric difference.
        let twice = apply_rcc(&once, &s2).unwrap();
        let sym: Vec<RegionLabel> = s1
            .iter()
            .filter(|r| !s2.contains(r))
            .chain(s2.iter().filter(|r| !s1.contains(r)))
            .cloned()
            .collect();
        prop_assert_eq!(twice.clone(), apply_rcc(&d, &sym).unwrap());

        // The toggled crossings are exactly the matrix prediction.
        let m = region_choice_matrix(&d).unwrap();
        let mut predicted = m.toggles_for(&s1).unwrap();
        predicted.sort();
        let mut diff = once.over_difference(&d).unwrap();
        diff.sort();
        prop_assert_eq!(diff, predicted);
    }

    #[test]
    fn solver_matches_oracle_on_small_mutants(
        seed in 0usize..8,
        steps in script(),
        target_bits in any::<u8>(),
    ) {
        let d = mutate(seed, &steps, 5);
        let Ok(table) = RegionTable::build(&d) else { return Ok(()) };
        if table.len() > 10 {
            return Ok(());
        }
        let target: Vec<_> = d
            .crossings()
            .iter()
            .enumerate()
            .filter(|(i, _)| (target_bits >> (i % 8)) & 1 == 1)
            .map(|(_, c)| c.label.clone())
            .collect();
        let report = rcc_core::oracle::cross_check(&d, &target, None).unwrap();
        prop_assert!(report.agreement);
    }
}
