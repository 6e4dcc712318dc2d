//! Facets sieved by the q-Catalan polynomial, classical and exceptional.
//!
//!     cargo run --release --example catalan_facets

use clustersieve::cspcheck::verify_facets_catalan;
use clustersieve::qpoly::CoxeterType;

fn main() -> clustersieve::Result<()> {
    let cases = [
        (CoxeterType::A(3), 2),
        (CoxeterType::B(3), 2),
        (CoxeterType::D(4), 1),
        (CoxeterType::I2(5), 2),
        (CoxeterType::E6, 1),
        (CoxeterType::F4, 1),
        (CoxeterType::H3, 1),
        (CoxeterType::H4, 1),
    ];
    for (ty, s) in cases {
        let r = verify_facets_catalan(ty, s)?;
        println!(
            "{ty:<6} s={s}  N={:<3} facets={:<6} orbits {:<24} {}",
            r.group_order,
            r.face_count(),
            r.orbit_structure().to_string(),
            if r.passed() { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
