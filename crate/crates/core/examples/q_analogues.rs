//! Gaussian binomials, cyclotomic reduction and the face polynomials.
//!
//!     cargo run --example q_analogues

use clustersieve::qpoly::{
    closed_form_eval, cyclotomic, divisors, eval_at_primitive_root, face_poly, gauss_binomial, q_lucas, ComplexType,
    RootOfUnitySpec,
};

fn main() -> clustersieve::Result<()> {
    let g = gauss_binomial(5, 2, 1);
    println!("[5 choose 2]_q = {g}");
    println!("Phi_6 = {}", cyclotomic(6));
    let w3 = RootOfUnitySpec::new(3)?;
    println!(
        "at a primitive cube root: {} (q-Lucas: {})",
        eval_at_primitive_root(&g, w3)?,
        q_lucas(5, 2, w3)?
    );

    // 2-divisible dissections of the octagon with two diagonals
    let t = ComplexType::a(2, 3)?;
    let x = face_poly(t, 2)?;
    println!("\nG(2,3,2;q) = {x}");
    println!(
        "residues mod q^8 - 1: {:?}",
        x.residues(8).iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );
    for d in divisors(t.group_order()) {
        let spec = RootOfUnitySpec::new(d)?;
        println!(
            "  d = {d}: X(w) = {}, closed form = {}",
            eval_at_primitive_root(&x, spec)?,
            closed_form_eval(t, 2, spec)?
        );
    }
    Ok(())
}
