//! Cyclic sieving reports for polygon families.
//!
//!     cargo run --release --example verify_csp

use clustersieve::cspcheck::{verify, CSPInstance};
use clustersieve::qpoly::ComplexType;

fn main() -> clustersieve::Result<()> {
    for (t, k) in [
        (ComplexType::a(2, 3)?, 2),
        (ComplexType::b(1, 3)?, 1),
        (ComplexType::d(3, 2)?, 2),
        (ComplexType::i2(2, 5)?, 2),
    ] {
        let report = verify(&CSPInstance::polygon(t, k)?)?;
        println!("{report}\n");
    }
    // the alternative type-D polynomial sieves the same faces
    let alt = verify(&CSPInstance::polygon_d_alternate(2, 4, 3)?)?;
    println!(
        "alternative D polynomial, s=2 n=4 k=3: {}",
        if alt.passed() { "pass" } else { "FAIL" }
    );
    println!("{}", alt.to_json().lines().take(8).collect::<Vec<_>>().join("\n"));
    Ok(())
}
