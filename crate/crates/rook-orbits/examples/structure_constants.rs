//! Build the Chevalley structure tables for the nilpotent subalgebras,
//! verify antisymmetry and the Jacobi identity exactly, and display the five
//! G2 constants together with the relation c1*c5 = c3*c4.
//!
//! Run with: cargo run --example structure_constants

use rook_orbits::chevalley::{g2_constants, StructureTable};
use rook_orbits::rational::rational_to_string;
use rook_orbits::rootsys::{RootSystem, SystemKind};

fn main() {
    for kind in [SystemKind::A(4), SystemKind::G2, SystemKind::F4] {
        let sys = RootSystem::build(kind);
        let t = StructureTable::build_unverified(&sys);
        match t.verify() {
            Ok(()) => println!("{kind:?}: antisymmetry and Jacobi hold exactly"),
            Err(e) => println!("{kind:?}: verification failed: {e}"),
        }
    }

    let sys = RootSystem::build(SystemKind::G2);
    let t = StructureTable::build(&sys);
    let c = g2_constants(&t);
    println!("\nG2 constants c1..c5:");
    for (i, v) in c.iter().enumerate() {
        println!("  c{} = {}", i + 1, rational_to_string(v));
    }
    let lhs = &c[0] * &c[4];
    let rhs = &c[2] * &c[3];
    println!(
        "c1*c5 = {} and c3*c4 = {} => relation {}",
        rational_to_string(&lhs),
        rational_to_string(&rhs),
        if lhs == rhs { "holds" } else { "fails" }
    );
}
