//! Decompose a random strictly-upper-triangular linear form over type A into
//! its unique basic pair (D, xi) and confirm membership through the
//! minor-based oracle.
//!
//! Run with: cargo run --example type_a_decomposition

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rook_orbits::andre::{
    basic_dim, decompose, membership, minor_jacobian_rank, random_matrix_form,
};
use rook_orbits::rational::rational_to_string;
use rook_orbits::rootsys::{RootSystem, SystemKind};

fn main() {
    let sys = RootSystem::build(SystemKind::A(4));
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let lambda = random_matrix_form(sys.rank() + 1, &mut rng);
    println!("random form: {}", lambda.to_json());

    let (d, xi) = decompose(&sys, &lambda).expect("decomposition terminates");
    println!("\ndecomposes into the basic pair:");
    for root in d.roots() {
        println!(
            "  xi({}) = {}",
            root.to_compact(),
            rational_to_string(xi.get(root).expect("root in domain"))
        );
    }

    let member = membership(&sys, &d, &xi, &lambda).expect("valid placement");
    println!("\nmembership oracle accepts the form: {member}");
    println!(
        "variety dimension |S(D)| = {} = Jacobian rank {}",
        basic_dim(&sys, &d),
        minor_jacobian_rank(&sys, &d, &xi)
    );
}
