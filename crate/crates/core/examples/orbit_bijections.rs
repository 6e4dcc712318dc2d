//! Rotation-invariant dissections and their images (μ, ν).
//!
//!     cargo run --release --example orbit_bijections

use clustersieve::polygons::{
    bijection_a, bijection_a_inverse, bijection_b, bijection_b_inverse, bijection_d_t1, bijection_d_t1_inverse,
    product_set, split_w, BijectionImage, DissectionA, Face, TypeA, TypeB, TypeD,
};

fn main() -> clustersieve::Result<()> {
    // a 24-gon dissection invariant under rotation by a third of a turn
    let m = TypeA::model(2, 11)?;
    let x: DissectionA = Face::parse("24,3-8,8-11,11-16,16-19,19-24,3-24")?;
    let img = bijection_a(&m, &x, 3)?;
    println!("{x}\n  -> {img}\n  <- {}", bijection_a_inverse(&m, &img, 3)?);

    // type B, 20-gon: build a face from its image and map it back
    let b = TypeB::model(1, 9)?;
    let img = BijectionImage {
        mu: vec![2, 5],
        nu: vec![0, 1, 1, 0],
    };
    let y = bijection_b_inverse(&b, &img, 2)?;
    println!("\n{img} <- {y}\n  -> {}", bijection_b(&b, &y, 2)?);

    // type D with diameters: the image set is the full product set
    let d = TypeD::model(3, 8)?;
    let w = split_w(d.fixed(6, 4)?);
    let mut images: Vec<BijectionImage> =
        w.t1.iter()
            .map(|f| bijection_d_t1(&d, f, 2))
            .collect::<Result<_, _>>()?;
    for (f, i) in w.t1.iter().zip(&images) {
        assert_eq!(&bijection_d_t1_inverse(&d, i, 2)?, f);
    }
    images.sort();
    println!(
        "\ntype D, s=3 n=8 k=6, quarter turn: {} fixed faces containing diameters, product set matches: {}",
        images.len(),
        images == product_set(11, 3, 4, true)
    );
    Ok(())
}
