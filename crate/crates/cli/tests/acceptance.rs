//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured time. Run with `cargo test -p rcc-cli --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rcc_cli::catalog::{self, CatalogEntry};
use rcc_core::coloring::{all_pullbacks, f_labeling, independence_check, verify_symdiff_lemma};
use rcc_core::diagram::Diagram;
use rcc_core::gf2::DEFAULT_CAP;
use rcc_core::label::{CrossingLabel, RegionLabel};
use rcc_core::moves::{apply_reidemeister, ArcSide, ReidemeisterMove, Twist};
use rcc_core::oracle::cross_check;
use rcc_core::rcc::{apply_rcc, ineffective_family, region_choice_matrix, solve_target, RccError};
use rcc_core::region::RegionTable;
use rcc_core::validate::{find_reducible_crossings, validate, ComponentKind};

fn diagram(id: &str) -> Diagram {
    catalog::lookup(id).expect("catalog id").diagram().expect("catalog entry parses")
}

fn crossings(names: &[&str]) -> Vec<CrossingLabel> {
    names.iter().map(|n| CrossingLabel::new(*n)).collect()
}

fn family_as_sets(family: &[Vec<RegionLabel>]) -> BTreeSet<BTreeSet<String>> {
    family
        .iter()
        .map(|s| s.iter().map(|r| r.to_string()).collect())
        .collect()
}

fn finish(criterion: &str, started: Instant, budget: Duration, detail: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "{criterion}: took {elapsed:?}, budget {budget:?}"
    );
    println!("{criterion}: PASS ({detail}; {elapsed:?})");
}

#[test]
fn criterion_1_matrix_reproduction() {
    let started = Instant::now();
    let m = region_choice_matrix(&diagram("theta_t31")).unwrap();
    assert_eq!(m.matrix().to_text(), "101101\n011011\n001111\n");
    let rows: Vec<&str> = m.crossing_labels().iter().map(|c| c.as_str()).collect();
    assert_eq!(rows, ["c1", "c2", "c3"]);
    let cols: Vec<&str> = m.region_labels().iter().map(|r| r.as_str()).collect();
    assert_eq!(cols, ["R1", "R2", "R3", "R4", "R5", "R6"]);
    finish(
        "criterion 1 (matrix reproduction)",
        started,
        Duration::from_secs(1),
        "rows 101101 / 011011 / 001111",
    );
}

#[test]
fn criterion_2_eight_solution_reproduction() {
    let started = Instant::now();
    let family = solve_target(&diagram("theta_t31"), &crossings(&["c1"]), DEFAULT_CAP).unwrap();
    let got = family_as_sets(&family);
    let expected: BTreeSet<BTreeSet<String>> = [
        vec!["R1"],
        vec!["R5", "R6"],
        vec!["R1", "R2", "R4", "R6"],
        vec!["R2", "R4", "R5"],
        vec!["R1", "R3", "R6"],
        vec!["R3", "R5"],
        vec!["R1", "R2", "R3", "R4"],
        vec!["R2", "R3", "R4", "R5", "R6"],
    ]
    .into_iter()
    .map(|s| s.into_iter().map(String::from).collect())
    .collect();
    assert_eq!(got, expected);
    finish(
        "criterion 2 (eight solutions for c1)",
        started,
        Duration::from_secs(1),
        "family matches as unordered sets",
    );
}

#[test]
fn criterion_3_eight_sets_for_every_target_with_oracle() {
    let started = Instant::now();
    let mut targets_checked = 0usize;
    for entry in catalog::reduced_thetas() {
        let d = entry.diagram().unwrap();
        let n = d.crossing_count();
        assert!(n <= 8, "{}: catalog theta too large for the criterion", entry.id);
        for mask in 0u32..(1 << n) {
            let target: Vec<CrossingLabel> = d
                .crossings()
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, c)| c.label.clone())
                .collect();
            let family = solve_target(&d, &target, DEFAULT_CAP).unwrap();
            assert_eq!(family.len(), 8, "{}: target {target:?}", entry.id);
            let report = cross_check(&d, &target, Some(entry.id)).unwrap();
            assert!(report.agreement, "{}: oracle disagrees at {target:?}", entry.id);
            targets_checked += 1;
        }
    }
    finish(
        "criterion 3 (eight sets for every target, oracle-confirmed)",
        started,
        Duration::from_secs(30),
        &format!("{targets_checked} targets across the reduced theta entries"),
    );
}

#[test]
fn criterion_4_counting_lemmas() {
    let started = Instant::now();
    for entry in catalog::ENTRIES {
        let d = entry.diagram().unwrap();
        let report = validate(&d).unwrap_or_else(|e| panic!("{}: {e}", entry.id));
        assert_eq!(report.components.len(), 1, "{}", entry.id);
        let c = &report.components[0];
        assert_eq!(c.euler_residual, 0, "{}", entry.id);
        let expected_f = match c.kind {
            ComponentKind::Knot => c.crossing_count + 2,
            ComponentKind::Theta | ComponentKind::Handcuff => c.crossing_count + 3,
            ComponentKind::Other => panic!("{}: unexpected kind", entry.id),
        };
        assert_eq!(c.f, expected_f, "{}", entry.id);
        assert_eq!(c.f, entry.faces, "{}: catalog faces out of date", entry.id);
        assert_eq!(c.kind.to_string(), entry.kind, "{}", entry.id);
    }
    finish(
        "criterion 4 (counting lemmas)",
        started,
        Duration::from_secs(5),
        "f = n + 3 on thetas/handcuffs, f = n + 2 on knots, residual 0",
    );
}

#[test]
fn criterion_5_full_rank_on_thetas_and_mutants() {
    let started = Instant::now();
    let mut instances = 0usize;
    for entry in catalog::ENTRIES.iter().filter(|e| e.kind == "theta") {
        let base = entry.diagram().unwrap();
        let mut variants = vec![base.clone()];
        for arc in base.arcs() {
            for (side, twist) in
                [(ArcSide::Left, Twist::Positive), (ArcSide::Right, Twist::Negative)]
            {
                variants.push(
                    apply_reidemeister(
                        &base,
                        &ReidemeisterMove::R1Add { arc: arc.clone(), side, twist },
                    )
                    .unwrap(),
                );
            }
        }
        // A second generation on top of the first curl.
        let curled = variants[1].clone();
        for arc in curled.arcs().iter().take(3) {
            variants.push(
                apply_reidemeister(
                    &curled,
                    &ReidemeisterMove::R1Add {
                        arc: arc.clone(),
                        side: ArcSide::Left,
                        twist: Twist::Positive,
                    },
                )
                .unwrap(),
            );
        }
        // R2 pokes across every region bounded by two or more arcs.
        let table = RegionTable::build(&base).unwrap();
        for region in table.regions() {
            let arcs: Vec<usize> = region.arcs.iter().copied().collect();
            if arcs.len() < 2 {
                continue;
            }
            variants.push(
                apply_reidemeister(
                    &base,
                    &ReidemeisterMove::R2Add {
                        over: base.arcs()[arcs[0]].clone(),
                        under: base.arcs()[arcs[1]].clone(),
                        region: region.label.clone(),
                    },
                )
                .unwrap(),
            );
        }
        for d in variants {
            let report = validate(&d).unwrap();
            assert_eq!(report.kind(), Some(ComponentKind::Theta), "{}", entry.id);
            let m = region_choice_matrix(&d).unwrap();
            assert_eq!(m.rank(), d.crossing_count(), "{}: rank dropped", entry.id);
            instances += 1;
        }
    }
    assert!(instances >= 20, "only {instances} generated instances");
    finish(
        "criterion 5 (full rank on theta diagrams)",
        started,
        Duration::from_secs(10),
        &format!("{instances} instances including mutants"),
    );
}

#[test]
fn criterion_6_knot_four_set_fact() {
    let started = Instant::now();
    let d = diagram("trefoil");
    for c in d.crossings().iter().map(|c| c.label.clone()) {
        let target = std::slice::from_ref(&c);
        let family = solve_target(&d, target, DEFAULT_CAP).unwrap();
        assert_eq!(family.len(), 4, "target {c}");
        let report = cross_check(&d, target, Some("trefoil")).unwrap();
        assert!(report.agreement, "target {c}");
        assert_eq!(report.matching.len(), 4, "target {c}");
    }
    finish(
        "criterion 6 (four sets per trefoil crossing)",
        started,
        Duration::from_secs(5),
        "3 single-crossing targets, oracle-confirmed",
    );
}

#[test]
fn criterion_7_section_six_suite() {
    let started = Instant::now();
    for entry in catalog::reduced_thetas() {
        let d = entry.diagram().unwrap();
        let m = region_choice_matrix(&d).unwrap();
        let pullbacks = all_pullbacks(&d).unwrap();
        assert_eq!(pullbacks.len(), 3, "{}", entry.id);

        for p in &pullbacks {
            let x = m.region_vector(&p.black).unwrap();
            assert!(
                m.matrix().mul_vec(&x).unwrap().is_zero(),
                "{}: B({}) not ineffective",
                entry.id,
                p.edge
            );
        }

        assert!(verify_symdiff_lemma(&d).unwrap().all_pass(), "{}", entry.id);

        let f = f_labeling(&d).unwrap();
        for (r, v) in &f.values {
            assert!(*v == 0 || *v == 2, "{}: f({r}) = {v}", entry.id);
        }
        let table = RegionTable::build(&d).unwrap();
        let outer = d.outer_corner().expect("catalog thetas designate the outer region");
        assert_eq!(
            f.value(table.label(table.region_of(outer))),
            Some(0),
            "{}",
            entry.id
        );

        assert!(independence_check(&d).unwrap(), "{}", entry.id);

        let family = ineffective_family(&d, DEFAULT_CAP).unwrap();
        let mut expected: BTreeSet<BTreeSet<String>> = BTreeSet::new();
        expected.insert(BTreeSet::new());
        expected.insert(table.regions().iter().map(|r| r.label.to_string()).collect());
        for p in &pullbacks {
            expected.insert(p.black.iter().map(|r| r.to_string()).collect());
            expected.insert(p.white.iter().map(|r| r.to_string()).collect());
        }
        assert_eq!(expected.len(), 8, "{}", entry.id);
        let as_sets = family_as_sets(&family);
        assert_eq!(as_sets, expected, "{}", entry.id);

        // Closed under symmetric difference and complementation.
        let everything: BTreeSet<String> =
            table.regions().iter().map(|r| r.label.to_string()).collect();
        for a in &as_sets {
            let complement: BTreeSet<String> = everything.difference(a).cloned().collect();
            assert!(as_sets.contains(&complement), "{}", entry.id);
            for b in &as_sets {
                let sym: BTreeSet<String> = a.symmetric_difference(b).cloned().collect();
                assert!(as_sets.contains(&sym), "{}", entry.id);
            }
        }
    }
    finish(
        "criterion 7 (checkerboard pullback suite)",
        started,
        Duration::from_secs(10),
        "black sets, symdiff, f-labels, independence, family equality",
    );
}

#[test]
fn criterion_8_negative_controls() {
    let started = Instant::now();
    let kink = diagram("kink");
    assert_eq!(find_reducible_crossings(&kink), crossings(&["c1"]));

    let hc = diagram("handcuff_cut");
    let report = validate(&hc).unwrap();
    assert_eq!(report.kind(), Some(ComponentKind::Handcuff));
    assert_eq!(
        report.cutting_edges.iter().map(|e| e.as_str()).collect::<Vec<_>>(),
        ["e3"]
    );
    let m = region_choice_matrix(&hc).unwrap();
    assert!(m.rank() < hc.crossing_count(), "rank {} vs n {}", m.rank(), hc.crossing_count());

    let target = crossings(&["c2"]);
    assert_eq!(solve_target(&hc, &target, DEFAULT_CAP), Err(RccError::Unrealizable));
    let oracle = cross_check(&hc, &target, Some("handcuff_cut")).unwrap();
    assert!(oracle.agreement);
    assert!(oracle.matching.is_empty());
    finish(
        "criterion 8 (negative controls)",
        started,
        Duration::from_secs(5),
        "kink reducible; handcuff_cut rank-deficient with unrealizable c2",
    );
}

/// Small deterministic generator for criterion 9.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

#[test]
fn criterion_9_algebra_diagram_coherence() {
    let started = Instant::now();
    let diagrams: Vec<(&str, Diagram)> = catalog::ENTRIES
        .iter()
        .map(|e: &CatalogEntry| (e.id, e.diagram().unwrap()))
        .collect();
    let mut rng = SplitMix(0x5eed);
    for trial in 0..100 {
        let (id, d) = &diagrams[(rng.next() % diagrams.len() as u64) as usize];
        let table = RegionTable::build(d).unwrap();
        let labels: Vec<RegionLabel> =
            table.regions().iter().map(|r| r.label.clone()).collect();
        let pick = |rng: &mut SplitMix| -> Vec<RegionLabel> {
            let bits = rng.next();
            labels
                .iter()
                .enumerate()
                .filter(|(i, _)| (bits >> i) & 1 == 1)
                .map(|(_, l)| l.clone())
                .collect()
        };
        let s1 = pick(&mut rng);
        let s2 = pick(&mut rng);

        // Matrix prediction matches the diagram operation.
        let m = region_choice_matrix(d).unwrap();
        let once = apply_rcc(d, &s1).unwrap();
        let mut diff = once.over_difference(d).unwrap();
        diff.sort();
        let mut predicted = m.toggles_for(&s1).unwrap();
        predicted.sort();
        assert_eq!(diff, predicted, "trial {trial} on {id}");

        // Involution and composition.
        assert_eq!(apply_rcc(&once, &s1).unwrap(), *d, "trial {trial} on {id}");
        let seq = apply_rcc(&once, &s2).unwrap();
        let sym: Vec<RegionLabel> = s1
            .iter()
            .filter(|r| !s2.contains(r))
            .chain(s2.iter().filter(|r| !s1.contains(r)))
            .cloned()
            .collect();
        assert_eq!(seq, apply_rcc(d, &sym).unwrap(), "trial {trial} on {id}");
    }
    finish(
        "criterion 9 (algebra/diagram coherence)",
        started,
        Duration::from_secs(10),
        "100 random diagram/region-set pairs",
    );
}
