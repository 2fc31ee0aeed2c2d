//! Enumerate positive roots and rook placements for the three supported
//! root-system families.
//!
//! Run with: cargo run --example positive_roots

use rook_orbits::rootsys::{
    enumerate_rook_placements, maximal_rook_placements, PlacementFilter, RootSystem, SystemKind,
};

fn main() {
    for kind in [SystemKind::A(4), SystemKind::G2, SystemKind::F4] {
        let sys = RootSystem::build(kind);
        println!(
            "{kind:?}: rank {}, {} positive roots",
            sys.rank(),
            sys.num_positive()
        );
        for r in sys.positive_roots() {
            print!("  {}", r.to_compact());
        }
        println!();

        let all = enumerate_rook_placements(&sys, PlacementFilter::All);
        let maximal = maximal_rook_placements(&sys, PlacementFilter::All);
        println!(
            "  {} rook placements, {} maximal under inclusion",
            all.len(),
            maximal.len()
        );
        if let SystemKind::F4 = kind {
            let orth = maximal_rook_placements(&sys, PlacementFilter::Orthogonal);
            let ons = enumerate_rook_placements(&sys, PlacementFilter::OrthogonalNonSingular);
            println!(
                "  {} maximal orthogonal placements, {} orthogonal non-singular placements",
                orth.len(),
                ons.len()
            );
        }
    }
}
