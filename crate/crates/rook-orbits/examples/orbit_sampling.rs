//! Sample coadjoint orbits of exp(n) acting on n* and compare the Kirillov
//! rank (the rank of the form's skew pairing) with the size of the singular
//! set of the underlying rook placement.
//!
//! Run with: cargo run --example orbit_sampling

use rook_orbits::chevalley::StructureTable;
use rook_orbits::coadjoint::{f_form, kirillov_rank, orbit_samples, XiMap};
use rook_orbits::rootsys::{
    maximal_rook_placements, PlacementFilter, RootSystem, SystemKind,
};

fn main() {
    let sys = RootSystem::build(SystemKind::G2);
    let t = StructureTable::build(&sys);

    for d in maximal_rook_placements(&sys, PlacementFilter::All) {
        let xi = XiMap::ones(&d);
        let f = f_form(&d, &xi).expect("xi matches placement");
        let rank = kirillov_rank(&t, &f);
        let singular = sys.singular_set_of(d.roots()).len();
        println!(
            "placement {{{}}}: kirillov rank {rank}, |S(D)| = {singular}",
            d.roots()
                .iter()
                .map(|r| r.to_compact())
                .collect::<Vec<_>>()
                .join(", ")
        );

        let samples = orbit_samples(&t, &d, &xi, 3, 7).expect("sampling succeeds");
        for (i, s) in samples.iter().enumerate() {
            println!("  orbit sample {i}: {}", s.to_json());
        }
    }
}
