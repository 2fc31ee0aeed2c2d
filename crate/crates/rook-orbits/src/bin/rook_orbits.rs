//! Thin command-line front end over the library verifiers.
//!
//! Every subcommand produces one or more structured reports (schema 1 in
//! JSON mode). The process exits 0 when no item FAILED (FLAG is allowed),
//! 1 when some item failed, and 2 on bad arguments.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rook_orbits::andre::{self, MatrixForm};
use rook_orbits::chevalley::StructureTable;
use rook_orbits::coadjoint::{self, f_form, LinearForm, XiMap};
use rook_orbits::f4;
use rook_orbits::g2;
use rook_orbits::refdata::RefData;
use rook_orbits::report::Report;
use rook_orbits::rootsys::{
    enumerate_rook_placements, maximal_rook_placements, PlacementFilter, RootSystem, SystemKind,
};

#[derive(Parser)]
#[command(name = "rook-orbits", version, about = "Exact verifiers for rook placements and coadjoint orbits")]
struct Cli {
    /// Root system: a<n> (e.g. a5), g2, or f4.
    #[arg(long, global = true, default_value = "f4")]
    system: String,
    /// RNG seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sample count for randomized checks.
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Path to a reference-data JSON file (overrides ROOK_ORBITS_DATA and
    /// the embedded copy).
    #[arg(long, global = true)]
    data: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    All,
    NonSingular,
    Orthogonal,
    OrthogonalNonSingular,
}

impl From<Filter> for PlacementFilter {
    fn from(f: Filter) -> PlacementFilter {
        match f {
            Filter::All => PlacementFilter::All,
            Filter::NonSingular => PlacementFilter::NonSingular,
            Filter::Orthogonal => PlacementFilter::Orthogonal,
            Filter::OrthogonalNonSingular => PlacementFilter::OrthogonalNonSingular,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots of the chosen system.
    Roots,
    /// Enumerate rook placements of the chosen system.
    Rooks {
        /// Restrict the enumeration.
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Keep only the placements that are maximal under inclusion.
        #[arg(long)]
        maximal: bool,
    },
    /// Type-A decomposition and membership checks.
    Andre {
        #[command(subcommand)]
        command: AndreCommand,
    },
    /// G2 orbit classification and verification.
    G2 {
        #[command(subcommand)]
        command: G2Command,
    },
    /// F4 maximal placements and orbit-distinctness certificates.
    F4 {
        #[command(subcommand)]
        command: F4Command,
    },
    /// Run every verifier once with small sample counts.
    Selftest,
}

#[derive(Subcommand)]
enum AndreCommand {
    /// Decompose random upper-triangular forms and verify the round trip.
    Decompose,
    /// Check the minor-based membership oracle on random orbit points.
    Membership,
}

#[derive(Subcommand)]
enum G2Command {
    /// Verify orbit-in-variety for all twelve cases with random parameters.
    Verify,
    /// Classify random linear forms and check the partition exactly.
    Classify,
    /// Report dimension signals (|S(D)|, variety dimension, Kirillov rank).
    Dims,
}

#[derive(Subcommand)]
enum F4Command {
    /// Verify the tabulated list of maximal orthogonal placements.
    Maximal,
    /// Re-check the tabulated reduced-tuple certificates.
    Table {
        /// Check a single row (1-24) instead of the whole table.
        #[arg(long)]
        row: Option<usize>,
    },
    /// Certify orbit distinctness for every orthogonal non-singular
    /// placement.
    Certify,
}

fn parse_system(s: &str) -> Result<SystemKind, String> {
    let lower = s.to_ascii_lowercase();
    match lower.as_str() {
        "g2" => Ok(SystemKind::G2),
        "f4" => Ok(SystemKind::F4),
        _ => {
            if let Some(n) = lower.strip_prefix('a') {
                let n: usize = n
                    .parse()
                    .map_err(|_| format!("bad system {s:?}: expected a<n>, g2, or f4"))?;
                if n == 0 {
                    return Err("type A rank must be at least 1".to_string());
                }
                Ok(SystemKind::A(n))
            } else {
                Err(format!("bad system {s:?}: expected a<n>, g2, or f4"))
            }
        }
    }
}

fn roots_report(sys: &RootSystem) -> Report {
    let mut report = Report::new(format!("positive roots of {:?}", sys.kind()));
    let compact: Vec<String> = sys.positive_roots().iter().map(|r| r.to_compact()).collect();
    report.push(
        format!("{} positive roots over {} simple roots", sys.num_positive(), sys.rank()),
        rook_orbits::report::Status::Pass,
        serde_json::json!({ "roots": compact }),
    );
    report
}

fn rooks_report(sys: &RootSystem, filter: PlacementFilter, maximal: bool) -> Report {
    let mut report = Report::new(format!(
        "rook placements of {:?} ({filter:?}{})",
        sys.kind(),
        if maximal { ", maximal" } else { "" }
    ));
    let placements = if maximal {
        maximal_rook_placements(sys, filter)
    } else {
        enumerate_rook_placements(sys, filter)
    };
    let listed: Vec<String> = placements
        .iter()
        .map(|p| f4::placement_label(p.roots()))
        .collect();
    report.push(
        format!("{} placements", placements.len()),
        rook_orbits::report::Status::Pass,
        serde_json::json!({ "placements": listed }),
    );
    report
}

fn type_a_system(kind: SystemKind, what: &str) -> Result<RootSystem, String> {
    match kind {
        SystemKind::A(_) => Ok(RootSystem::build(kind)),
        _ => Err(format!("{what} requires a type-A system (--system a<n>)")),
    }
}

fn andre_decompose_report(sys: &RootSystem, samples: usize, seed: u64) -> Report {
    let n = sys.rank() + 1;
    let mut report = Report::new(format!("type A({}) decomposition round trip", sys.rank()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0usize;
    for _ in 0..samples {
        let lambda = andre::random_matrix_form(n, &mut rng);
        let (d, xi) = match andre::decompose(sys, &lambda) {
            Ok(p) => p,
            Err(e) => {
                bad += 1;
                if bad == 1 {
                    report.fail("decompose failed", serde_json::json!({ "error": e.to_string() }));
                }
                continue;
            }
        };
        let member = andre::membership(sys, &d, &xi, &lambda).expect("valid placement");
        if !member {
            bad += 1;
            if bad == 1 {
                report.fail(
                    "decomposed form not a member of its own variety",
                    serde_json::json!({ "lambda": lambda.to_json() }),
                );
            }
        }
    }
    if bad == 0 {
        report.pass(format!("{samples} random forms decompose and round-trip exactly"));
    }
    report
}

fn andre_membership_report(
    sys: &RootSystem,
    t: &StructureTable,
    samples: usize,
    seed: u64,
) -> Report {
    let mut report = Report::new(format!("type A({}) membership oracle", sys.rank()));
    let placements = enumerate_rook_placements(sys, PlacementFilter::All);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0usize;
    for _ in 0..samples {
        let d = &placements[rng.gen_range(0..placements.len())];
        let xi = XiMap::ones(d);
        let f = f_form(d, &xi).expect("xi matches placement");
        let fmat = MatrixForm::from_linear_form(sys, &f);
        let x = coadjoint::random_nilpotent(t, &mut rng);
        let moved = andre::matrix_action(sys, t, &x, &fmat);
        if !andre::membership(sys, d, &xi, &moved).expect("valid placement") {
            bad += 1;
            if bad == 1 {
                report.fail(
                    "orbit point rejected by the membership oracle",
                    serde_json::json!({ "placement": f4::placement_label(d.roots()) }),
                );
            }
        }
    }
    if bad == 0 {
        report.pass(format!("{samples} random orbit points accepted exactly"));
    }
    report
}

fn random_admissible_xi<R: Rng>(d: &rook_orbits::rootsys::RookPlacement, rng: &mut R) -> XiMap {
    let pairs = d
        .roots()
        .iter()
        .map(|r| {
            let mut v = coadjoint::random_rational(rng);
            while v.is_zero() {
                v = coadjoint::random_rational(rng);
            }
            (r.clone(), v)
        })
        .collect();
    XiMap::new(pairs).expect("nonzero values")
}

fn g2_verify_report(samples: usize, seed: u64) -> Report {
    let sys = RootSystem::build(SystemKind::G2);
    let t = StructureTable::build(&sys);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("g2 orbit-in-variety (all twelve cases)");
    for case in g2::g2_cases(&sys) {
        let xi = random_admissible_xi(&case.placement, &mut rng);
        let sub = g2::verify_case(&t, &sys, &case, &xi, samples, rng.gen());
        let status = sub.status();
        report.push(
            format!("case {}: {}", case.index, sub.items.last().map(|i| i.label.as_str()).unwrap_or("")),
            status,
            serde_json::Value::Null,
        );
    }
    report
}

fn g2_classify_report(samples: usize, seed: u64) -> Report {
    let sys = RootSystem::build(SystemKind::G2);
    let t = StructureTable::build(&sys);
    let g = g2::g2_roots();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("g2 classification partition");
    let mut counts = vec![0usize; 12];
    let mut bad = 0usize;
    for _ in 0..samples {
        let mut f = LinearForm::zero();
        for root in &g {
            f.set(root.clone(), coadjoint::random_rational(&mut rng));
        }
        let (case, xi) = g2::classify(&t, &sys, &f);
        counts[case.index - 1] += 1;
        let eqs = g2::g2_equations(&t, &case, &xi);
        if !g2::satisfies_system(&eqs, &f) {
            bad += 1;
            if bad == 1 {
                report.fail(
                    "classified form does not satisfy its case system",
                    serde_json::json!({ "case": case.index, "form": f.to_json() }),
                );
            }
        }
    }
    if bad == 0 {
        report.push(
            format!("{samples} random forms classify with zero residual"),
            rook_orbits::report::Status::Pass,
            serde_json::json!({ "per_case_counts": counts }),
        );
    }
    report
}

fn g2_dims_report(samples: usize, seed: u64) -> Vec<Report> {
    let sys = RootSystem::build(SystemKind::G2);
    let t = StructureTable::build(&sys);
    vec![
        g2::g2_dimension_report(&t, &sys),
        g2::singular_collapse_report(&t, &sys, samples, seed),
    ]
}

fn f4_table_row_report(sys: &RootSystem, data: &RefData, row: usize) -> Result<Report, String> {
    let r = data
        .table_row(row)
        .ok_or_else(|| format!("no table row {row} (expected 1-24)"))?;
    let outcome = f4::check_table_row(sys, r);
    let mut report = Report::new(format!("reduced-tuple certificate, row {row}"));
    report.push(
        format!(
            "printed tuple {:?} {}",
            r.i_tuple,
            if outcome.matches_printed { "matches" } else { "does not match" }
        ),
        outcome.status,
        serde_json::json!({
            "recomputed_tuple": outcome.recomputed_tuple,
            "notes": outcome.notes,
        }),
    );
    if row == 17 {
        for (label, got, printed) in f4::row17_intermediates(sys, data) {
            let equal = got == printed;
            report.push(
                format!("intermediate {label}"),
                if equal {
                    rook_orbits::report::Status::Pass
                } else {
                    rook_orbits::report::Status::Flag
                },
                serde_json::json!({
                    "recomputed": rook_orbits::rational::rational_to_string(&got),
                    "printed": rook_orbits::rational::rational_to_string(&printed),
                }),
            );
        }
    }
    Ok(report)
}

fn selftest(samples: usize, seed: u64) -> Vec<Report> {
    let mut out = Vec::new();
    let samples = samples.min(25);

    let mut structure = Report::new("structure constants");
    for kind in [SystemKind::A(4), SystemKind::G2, SystemKind::F4] {
        let sys = RootSystem::build(kind);
        match StructureTable::build_unverified(&sys).verify() {
            Ok(()) => structure.pass(format!("{kind:?}: antisymmetry and Jacobi hold exactly")),
            Err(e) => structure.fail(
                format!("{kind:?}: structure table invalid"),
                serde_json::json!({ "error": e.to_string() }),
            ),
        }
    }
    out.push(structure);

    let a = RootSystem::build(SystemKind::A(4));
    let ta = StructureTable::build(&a);
    out.push(andre_decompose_report(&a, samples, seed));
    out.push(andre_membership_report(&a, &ta, samples, seed ^ 1));

    out.push(g2_verify_report(samples, seed ^ 2));
    out.push(g2_classify_report(samples, seed ^ 3));
    out.extend(g2_dims_report(samples, seed ^ 4));

    let f = RootSystem::build(SystemKind::F4);
    let data = RefData::embedded();
    out.push(f4::verify_maximal_list(&f, &data));
    out.push(f4::verify_separating_list(&f, &data));
    out.push(f4::verify_tuple_table(&f, &data));
    out.push(f4::certify_all(&f, &data));
    out
}

fn main() {
    let cli = Cli::parse();
    let kind = match parse_system(&cli.system) {
        Ok(k) => k,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };

    let result: Result<Vec<Report>, String> = (|| match cli.command {
        Command::Roots => Ok(vec![roots_report(&RootSystem::build(kind))]),
        Command::Rooks { filter, maximal } => Ok(vec![rooks_report(
            &RootSystem::build(kind),
            filter.into(),
            maximal,
        )]),
        Command::Andre { command } => {
            let sys = type_a_system(kind, "andre")?;
            match command {
                AndreCommand::Decompose => Ok(vec![andre_decompose_report(&sys, cli.samples, cli.seed)]),
                AndreCommand::Membership => {
                    let t = StructureTable::build(&sys);
                    Ok(vec![andre_membership_report(&sys, &t, cli.samples, cli.seed)])
                }
            }
        }
        Command::G2 { command } => match command {
            G2Command::Verify => Ok(vec![g2_verify_report(cli.samples, cli.seed)]),
            G2Command::Classify => Ok(vec![g2_classify_report(cli.samples, cli.seed)]),
            G2Command::Dims => Ok(g2_dims_report(cli.samples, cli.seed)),
        },
        Command::F4 { command } => {
            let sys = RootSystem::build(SystemKind::F4);
            let data = RefData::load(cli.data.as_deref()).map_err(|e| e.to_string())?;
            match command {
                F4Command::Maximal => Ok(vec![f4::verify_maximal_list(&sys, &data)]),
                F4Command::Table { row: Some(row) } => {
                    Ok(vec![f4_table_row_report(&sys, &data, row)?])
                }
                F4Command::Table { row: None } => Ok(vec![f4::verify_tuple_table(&sys, &data)]),
                F4Command::Certify => Ok(vec![f4::certify_all(&sys, &data)]),
            }
        }
        Command::Selftest => Ok(selftest(cli.samples, cli.seed)),
    })();

    let reports = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };

    match cli.output {
        Output::Text => {
            for r in &reports {
                print!("{}", r.to_text());
            }
        }
        Output::Json => {
            let v = if reports.len() == 1 {
                reports[0].to_json()
            } else {
                serde_json::json!({
                    "schema": 1,
                    "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                })
            };
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
    }

    if reports.iter().all(|r| r.is_pass()) {
        std::process::exit(0);
    }
    std::process::exit(1);
}
