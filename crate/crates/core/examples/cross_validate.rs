//! Root-system and polygon models of the classical types side by side.
//!
//!     cargo run --release --example cross_validate

use clustersieve::qpoly::CoxeterType;
use clustersieve::rootsys::{cross_validate_classical, orbit_structure};

fn main() -> clustersieve::Result<()> {
    for (ty, s) in [
        (CoxeterType::A(2), 1),
        (CoxeterType::A(3), 1),
        (CoxeterType::B(2), 1),
        (CoxeterType::B(3), 1),
        (CoxeterType::D(4), 1),
        (CoxeterType::A(2), 2),
        (CoxeterType::B(2), 2),
    ] {
        for k in 0..=ty.rank() {
            cross_validate_classical(s, ty, k)?;
        }
        println!("{ty} s={s}: agree; facets {}", orbit_structure(s, ty, ty.rank())?);
    }
    Ok(())
}
