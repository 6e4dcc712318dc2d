//! Root systems, the maps τ± and Γ, and compatibility of colored roots.
//!
//!     cargo run --example root_systems

use clustersieve::qpoly::CoxeterType;
use clustersieve::rootsys::{build_root_system, gamma, tau, AlmostPositive, ColoredComplex, Sign};

fn main() -> clustersieve::Result<()> {
    let a2 = build_root_system(CoxeterType::A(2))?;
    let mut x = AlmostPositive::Positive(0);
    print!("Γ-orbit in A2: {}", a2.display(x));
    for _ in 0..5 {
        x = gamma(&a2, x);
        print!(" -> {}", a2.display(x));
    }
    println!();
    println!(
        "τ-(-a1) = {}",
        a2.display(tau(&a2, Sign::Minus, AlmostPositive::NegSimple(0)))
    );

    let h3 = build_root_system(CoxeterType::H3)?;
    println!(
        "\nH3 has {} positive roots; the highest is {}",
        h3.positive_roots().len(),
        h3.display(AlmostPositive::Positive(14))
    );

    let c = ColoredComplex::new(CoxeterType::B(2), 2)?;
    println!(
        "\nΔ^2(B2): {} colored roots, group order {}",
        c.elements().len(),
        c.group_order()
    );
    for k in 0..=2 {
        println!(
            "  k = {k}: {} faces, orbits {}",
            c.faces(k)?.len(),
            c.orbit_structure(k)?
        );
    }
    println!(
        "\ncompatibility graph of Δ(A2):\n{}",
        ColoredComplex::new(CoxeterType::A(2), 1)?.edge_list()
    );
    Ok(())
}
