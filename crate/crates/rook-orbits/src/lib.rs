//! Exact-arithmetic toolkit for rook placements in root systems and the
//! coadjoint orbits of the associated maximal nilpotent subalgebras.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. See the `examples/` directory for runnable
//! walkthroughs of each capability.

pub mod andre;
pub mod chevalley;
pub mod coadjoint;
pub mod f4;
pub mod g2;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod refdata;
pub mod report;
pub mod rootsys;
