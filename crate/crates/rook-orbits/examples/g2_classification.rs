//! Walk the twelve-case G2 classification: list the defining placements,
//! classify random linear forms, and verify one case by exact orbit
//! sampling.
//!
//! Run with: cargo run --example g2_classification

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rook_orbits::chevalley::StructureTable;
use rook_orbits::coadjoint::{random_rational, LinearForm, XiMap};
use rook_orbits::g2::{classify, g2_cases, g2_roots, verify_case};
use rook_orbits::rootsys::{RootSystem, SystemKind};

fn main() {
    let sys = RootSystem::build(SystemKind::G2);
    let t = StructureTable::build(&sys);

    println!("the twelve cases and their placements:");
    for case in g2_cases(&sys) {
        println!(
            "  case {:2}: {{{}}}",
            case.index,
            case.placement
                .roots()
                .iter()
                .map(|r| r.to_compact())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    println!("\nclassifying five random forms:");
    for _ in 0..5 {
        let mut f = LinearForm::zero();
        for root in g2_roots() {
            f.set(root, random_rational(&mut rng));
        }
        let (case, xi) = classify(&t, &sys, &f);
        println!("  form lands in case {} with {} parameter(s)", case.index, xi.len());
    }

    let case = &g2_cases(&sys)[11];
    let xi = XiMap::ones(&case.placement);
    let report = verify_case(&t, &sys, case, &xi, 50, 1);
    println!("\n{}", report.to_text());
}
