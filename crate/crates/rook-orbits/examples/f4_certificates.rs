//! Verify the F4 reference tables: the 24 maximal orthogonal rook
//! placements, the tabulated reduced-tuple certificates, and the complete
//! orbit-distinctness certification over every orthogonal non-singular
//! placement.
//!
//! Run with: cargo run --release --example f4_certificates

use rook_orbits::f4::{certify_all, verify_maximal_list, verify_separating_list, verify_tuple_table};
use rook_orbits::refdata::RefData;
use rook_orbits::rootsys::{RootSystem, SystemKind};

fn main() {
    let sys = RootSystem::build(SystemKind::F4);
    let data = RefData::load(None).expect("reference data loads");

    for report in [
        verify_maximal_list(&sys, &data),
        verify_separating_list(&sys, &data),
        verify_tuple_table(&sys, &data),
        certify_all(&sys, &data),
    ] {
        println!("{}", report.to_text());
    }
}
