//! Command-line front end: parse, validate, compute, solve, verify.
//!
//! Exit codes: 0 success, 1 domain error (bad input, unrealizable target),
//! 2 verification failure (a lemma check or oracle comparison failed),
//! 64 usage error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rcc_cli::json::{self, CheckJson};
use rcc_cli::{catalog, pd};
use rcc_core::coloring::{
    all_pullbacks, checkerboard_pullback, f_labeling, independence_check, verify_symdiff_lemma,
};
use rcc_core::diagram::Diagram;
use rcc_core::label::{CrossingLabel, EdgeLabel, RegionLabel};
use rcc_core::oracle::cross_check;
use rcc_core::rcc::{apply_rcc, ineffective_family, region_choice_matrix, solve_target};
use rcc_core::region::RegionTable;
use rcc_core::subknot::delete_edge;
use rcc_core::validate::{validate, ComponentKind};

#[derive(Parser)]
#[command(name = "rcc", version, about = "Region crossing changes on spatial-graph diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InArgs {
    /// Extended-PD input file.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Euler gate, component kinds, reducible crossings, cutting edges.
    Validate(InArgs),
    /// List the regions with their corners, arcs and crossings.
    Regions(InArgs),
    /// Print the region choice matrix, one 0/1 row per crossing.
    Matrix(InArgs),
    /// Rank and nullity of the region choice matrix.
    Rank(InArgs),
    /// All region sets realizing a crossing-change target.
    Solve {
        #[command(flatten)]
        input: InArgs,
        /// Comma-separated crossing labels, e.g. `c1,c3`. Empty for the
        /// ineffective family.
        #[arg(long, value_name = "CROSSINGS", default_value = "")]
        target: String,
        /// Bound on the size of the printed family.
        #[arg(long, default_value_t = rcc_core::gf2::DEFAULT_CAP)]
        cap: u64,
    },
    /// Apply region crossing changes at the given regions.
    Apply {
        #[command(flatten)]
        input: InArgs,
        /// Comma-separated region labels, e.g. `R1,R5`.
        #[arg(long, value_name = "REGIONS")]
        regions: String,
    },
    /// Delete one edge of a theta-curve and print the knot diagram plus the
    /// region correspondence.
    Subknot {
        #[command(flatten)]
        input: InArgs,
        /// Edge to delete, e.g. `e2`.
        #[arg(long, value_name = "EDGE")]
        delete: String,
    },
    /// Checkerboard pullback through one deleted edge: the sets B and W.
    Checkerboard {
        #[command(flatten)]
        input: InArgs,
        #[arg(long, value_name = "EDGE")]
        delete: String,
    },
    /// The region sets whose crossing changes do nothing.
    Ineffective {
        #[command(flatten)]
        input: InArgs,
        #[arg(long, default_value_t = rcc_core::gf2::DEFAULT_CAP)]
        cap: u64,
    },
    /// Per-region sum of black indicators over the three pullbacks.
    Flabel(InArgs),
    /// Run every structural check that applies to the input's kind.
    #[command(name = "verify-lemmas")]
    VerifyLemmas(InArgs),
    /// Brute-force all region subsets and compare with the solver.
    Oracle {
        #[command(flatten)]
        input: InArgs,
        #[arg(long, value_name = "CROSSINGS", default_value = "")]
        target: String,
    },
    /// List the bundled diagrams, or print one with `--id`.
    Catalog {
        #[arg(long)]
        id: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe, like the rest of the shell toolbox.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(args: &InArgs) -> Result<Diagram, String> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| format!("{}: {e}", args.input.display()))?;
    pd::parse_diagram(&text).map_err(|e| format!("{}: {e}", args.input.display()))
}

fn stem(args: &InArgs) -> String {
    args.input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| args.input.display().to_string())
}

fn crossing_list(s: &str) -> Vec<CrossingLabel> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(CrossingLabel::from).collect()
}

fn region_list(s: &str) -> Vec<RegionLabel> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(RegionLabel::from).collect()
}

fn set_text(set: &[RegionLabel]) -> String {
    let names: Vec<&str> = set.iter().map(|r| r.as_str()).collect();
    format!("{{{}}}", names.join(","))
}

fn emit<T: serde::Serialize>(value: &T) -> Result<(), String> {
    println!("{}", serde_json::to_string_pretty(value).map_err(|e| e.to_string())?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate(args) => {
            let d = load(&args)?;
            let report = validate(&d).map_err(|e| e.to_string())?;
            match args.format {
                Format::Json => emit(&json::validate_json(&report))?,
                Format::Text => {
                    for (i, c) in report.components.iter().enumerate() {
                        println!(
                            "component {}: kind={} v={} e={} f={} euler_residual={} crossings={}",
                            i + 1,
                            c.kind,
                            c.v,
                            c.e,
                            c.f,
                            c.euler_residual,
                            c.crossing_count
                        );
                    }
                    let list = |items: Vec<String>| {
                        if items.is_empty() {
                            "(none)".to_string()
                        } else {
                            items.join(", ")
                        }
                    };
                    println!(
                        "reducible: {}",
                        list(report.reducible.iter().map(|c| c.to_string()).collect())
                    );
                    println!(
                        "cutting edges: {}",
                        list(report.cutting_edges.iter().map(|e| e.to_string()).collect())
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Regions(args) => {
            let d = load(&args)?;
            let table = RegionTable::build(&d).map_err(|e| e.to_string())?;
            match args.format {
                Format::Json => {
                    let regions = table
                        .label_order()
                        .into_iter()
                        .map(|r| {
                            let region = &table.regions()[r];
                            json::RegionJson {
                                label: region.label.to_string(),
                                corners: region
                                    .corners
                                    .iter()
                                    .map(|c| format!("{}.{}", d.site_name(c.site), c.index + 1))
                                    .collect(),
                                arcs: region.arcs.iter().map(|&a| d.arcs()[a].to_string()).collect(),
                                crossings: region
                                    .crossings
                                    .iter()
                                    .map(|&c| d.crossings()[c].label.to_string())
                                    .collect(),
                            }
                        })
                        .collect();
                    emit(&json::RegionsJson { schema: json::SCHEMA, regions })?;
                }
                Format::Text => {
                    for r in table.label_order() {
                        let region = &table.regions()[r];
                        let corners: Vec<String> = region
                            .corners
                            .iter()
                            .map(|c| format!("{}.{}", d.site_name(c.site), c.index + 1))
                            .collect();
                        let crossings: Vec<&str> = region
                            .crossings
                            .iter()
                            .map(|&c| d.crossings()[c].label.as_str())
                            .collect();
                        println!(
                            "{}: corners {}; crossings {}",
                            region.label,
                            corners.join(" "),
                            if crossings.is_empty() { "(none)".to_string() } else { crossings.join(" ") }
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix(args) => {
            let d = load(&args)?;
            let m = region_choice_matrix(&d).map_err(|e| e.to_string())?;
            match args.format {
                Format::Json => emit(&json::matrix_json(&m))?,
                Format::Text => print!("{}", m.matrix().to_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rank(args) => {
            let d = load(&args)?;
            let m = region_choice_matrix(&d).map_err(|e| e.to_string())?;
            match args.format {
                Format::Json => emit(&json::matrix_json(&m))?,
                Format::Text => {
                    println!("rank = {}", m.rank());
                    println!("nullity = {}", m.nullity());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { input, target, cap } => {
            let d = load(&input)?;
            let target = crossing_list(&target);
            let family = solve_target(&d, &target, cap).map_err(|e| e.to_string())?;
            print_family(&input, &d, &target, family)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ineffective { input, cap } => {
            let d = load(&input)?;
            let family = ineffective_family(&d, cap).map_err(|e| e.to_string())?;
            print_family(&input, &d, &[], family)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Apply { input, regions } => {
            let d = load(&input)?;
            let out = apply_rcc(&d, &region_list(&regions)).map_err(|e| e.to_string())?;
            match input.format {
                Format::Json => emit(&json::diagram_json(&out))?,
                Format::Text => {
                    print!("{}", pd::write_diagram(&out).map_err(|e| e.to_string())?)
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Subknot { input, delete } => {
            let d = load(&input)?;
            let (knot, map) =
                delete_edge(&d, &EdgeLabel::from(delete.as_str())).map_err(|e| e.to_string())?;
            match input.format {
                Format::Json => {
                    let region_map: BTreeMap<String, String> = map
                        .pairs()
                        .iter()
                        .map(|(a, b)| (a.to_string(), b.to_string()))
                        .collect();
                    emit(&json::SubknotJson {
                        schema: json::SCHEMA,
                        deleted: delete,
                        knot: json::diagram_json(&knot),
                        region_map,
                    })?;
                }
                Format::Text => {
                    if knot.free_loops().is_empty() {
                        print!("{}", pd::write_diagram(&knot).map_err(|e| e.to_string())?);
                    } else {
                        for l in knot.free_loops() {
                            println!("# crossing-free unknot; free loop {l}");
                        }
                    }
                    for (a, b) in map.pairs() {
                        println!("map {a} -> {b}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Checkerboard { input, delete } => {
            let d = load(&input)?;
            let p = checkerboard_pullback(&d, &EdgeLabel::from(delete.as_str()))
                .map_err(|e| e.to_string())?;
            match input.format {
                Format::Json => emit(&json::CheckerboardJson {
                    schema: json::SCHEMA,
                    edge: p.edge.to_string(),
                    black: p.black.iter().map(|r| r.to_string()).collect(),
                    white: p.white.iter().map(|r| r.to_string()).collect(),
                })?,
                Format::Text => {
                    println!("B({}) = {}", p.edge, set_text(&p.black));
                    println!("W({}) = {}", p.edge, set_text(&p.white));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Flabel(args) => {
            let d = load(&args)?;
            let f = f_labeling(&d).map_err(|e| e.to_string())?;
            match args.format {
                Format::Json => {
                    let values: BTreeMap<String, u8> =
                        f.values.iter().map(|(r, v)| (r.to_string(), *v)).collect();
                    emit(&json::FLabelJson { schema: json::SCHEMA, values })?;
                }
                Format::Text => {
                    for (r, v) in &f.values {
                        println!("f({r}) = {v}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyLemmas(args) => {
            let d = load(&args)?;
            let checks = lemma_checks(&d)?;
            let pass = checks.iter().all(|c| c.pass);
            match args.format {
                Format::Json => emit(&json::VerifyJson {
                    schema: json::SCHEMA,
                    diagram: stem(&args),
                    checks,
                    pass,
                })?,
                Format::Text => {
                    for c in &checks {
                        println!("{} {} ({})", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
                    }
                }
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Oracle { input, target } => {
            let d = load(&input)?;
            let target = crossing_list(&target);
            let report =
                cross_check(&d, &target, Some(&stem(&input))).map_err(|e| e.to_string())?;
            match input.format {
                Format::Json => emit(&json::oracle_json(&report))?,
                Format::Text => {
                    println!(
                        "examined {} subsets; matching {}; solver {}; agreement: {}",
                        report.subsets_examined,
                        report.matching.len(),
                        report.solver.len(),
                        if report.agreement { "yes" } else { "NO" }
                    );
                }
            }
            Ok(if report.agreement { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Catalog { id, format } => {
            match id {
                Some(id) => {
                    let entry =
                        catalog::lookup(&id).ok_or_else(|| format!("no catalog entry `{id}`"))?;
                    print!("{}", entry.source);
                }
                None => match format {
                    Format::Json => {
                        let entries = catalog::ENTRIES
                            .iter()
                            .map(|e| json::CatalogEntryJson {
                                id: e.id.to_string(),
                                kind: e.kind.to_string(),
                                crossings: e.crossings,
                                faces: e.faces,
                                rank: e.rank,
                                ineffective_size: e.ineffective_size,
                                reduced: e.reduced,
                                cutting_edges: e
                                    .cutting_edges
                                    .iter()
                                    .map(|s| s.to_string())
                                    .collect(),
                            })
                            .collect();
                        emit(&json::CatalogJson { schema: json::SCHEMA, entries })?;
                    }
                    Format::Text => {
                        for e in catalog::ENTRIES {
                            println!(
                                "{:<14} {:<9} n={} f={} rank={} ineffective={}{}{}",
                                e.id,
                                e.kind,
                                e.crossings,
                                e.faces,
                                e.rank,
                                e.ineffective_size,
                                if e.reduced { "" } else { " reducible" },
                                if e.cutting_edges.is_empty() { "" } else { " cutting-edge" },
                            );
                        }
                    }
                },
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_family(
    input: &InArgs,
    d: &Diagram,
    target: &[CrossingLabel],
    family: Vec<Vec<RegionLabel>>,
) -> Result<(), String> {
    match input.format {
        Format::Json => {
            let m = region_choice_matrix(d).map_err(|e| e.to_string())?;
            emit(&json::SolutionFamilyJson {
                schema: json::SCHEMA,
                diagram: stem(input),
                target: target.iter().map(|c| c.to_string()).collect(),
                solutions: family
                    .iter()
                    .map(|s| s.iter().map(|r| r.to_string()).collect())
                    .collect(),
                rank: m.rank(),
                nullity: m.nullity(),
            })
        }
        Format::Text => {
            for set in &family {
                println!("{}", set_text(set));
            }
            Ok(())
        }
    }
}

/// Assemble the checks appropriate for the input's component kind.
fn lemma_checks(d: &Diagram) -> Result<Vec<CheckJson>, String> {
    let report = validate(d).map_err(|e| e.to_string())?;
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        checks.push(CheckJson { name: name.to_string(), pass, detail });
    };

    let euler_ok = report.components.iter().all(|c| c.euler_residual == 0);
    push("euler", euler_ok, "v - e + f = 2 on every component".to_string());

    let kind = report.kind().ok_or("verify-lemmas expects a single component")?;
    let comp = &report.components[0];
    let n = comp.crossing_count;
    match kind {
        ComponentKind::Knot => {
            push("face-count", comp.f == n + 2, format!("f = {} with n = {n}", comp.f));
        }
        ComponentKind::Theta | ComponentKind::Handcuff => {
            push("face-count", comp.f == n + 3, format!("f = {} with n = {n}", comp.f));
        }
        ComponentKind::Other => return Err("unsupported component kind".to_string()),
    }

    let m = region_choice_matrix(d).map_err(|e| e.to_string())?;
    match kind {
        ComponentKind::Knot => {
            push("full-rank", m.rank() == n, format!("rank = {}", m.rank()));
            push("nullity-two", m.nullity() == 2, format!("nullity = {}", m.nullity()));
            let fam = ineffective_family(d, 1 << 12).map_err(|e| e.to_string())?;
            push("ineffective-count", fam.len() == 4, format!("{} sets", fam.len()));
        }
        ComponentKind::Theta => {
            push("full-rank", m.rank() == n, format!("rank = {}", m.rank()));
            let fam = ineffective_family(d, 1 << 12).map_err(|e| e.to_string())?;
            push("eight-ineffective", fam.len() == 8, format!("{} sets", fam.len()));
            if report.is_reduced() && d.outer_corner().is_some() {
                let pullbacks = all_pullbacks(d).map_err(|e| e.to_string())?;
                let mut all_zero = true;
                for p in &pullbacks {
                    let x = m.region_vector(&p.black).map_err(|e| e.to_string())?;
                    all_zero &= m.matrix().mul_vec(&x).map_err(|e| e.to_string())?.is_zero();
                }
                push("black-sets-ineffective", all_zero, "M x(B) = 0 for each edge".to_string());

                let sym = verify_symdiff_lemma(d).map_err(|e| e.to_string())?;
                push(
                    "symdiff",
                    sym.all_pass(),
                    "B(l) = B(m) symdiff B(n) for all permutations".to_string(),
                );

                let f = f_labeling(d).map_err(|e| e.to_string())?;
                let f_ok = f.values.iter().all(|(_, v)| *v == 0 || *v == 2);
                let table = RegionTable::build(d).map_err(|e| e.to_string())?;
                let outer = d.outer_corner().expect("checked");
                let outer_zero =
                    f.value(table.label(table.region_of(outer))) == Some(0);
                push("f-labels", f_ok && outer_zero, "values in {0,2}, outer at 0".to_string());

                let indep = independence_check(d).map_err(|e| e.to_string())?;
                push("independence", indep, "B1, W1, B2 span the nullspace".to_string());
            }
        }
        ComponentKind::Handcuff => {
            // Nothing beyond the counting facts is asserted for handcuffs;
            // rank may legitimately drop below n.
            push(
                "rank-reported",
                true,
                format!("rank = {} of n = {n}; cutting edges: {:?}", m.rank(), report.cutting_edges),
            );
        }
        ComponentKind::Other => {}
    }

    // Oracle spot check at desk scale.
    if m.region_labels().len() <= 14 {
        let target: Vec<CrossingLabel> =
            d.crossings().first().map(|c| c.label.clone()).into_iter().collect();
        let oracle = cross_check(d, &target, None).map_err(|e| e.to_string())?;
        push(
            "oracle",
            oracle.agreement,
            format!("{} subsets examined", oracle.subsets_examined),
        );
    }
    Ok(checks)
}
