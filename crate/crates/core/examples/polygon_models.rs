//! Faces of the polygon and graph models and their rotations.
//!
//!     cargo run --example polygon_models

use clustersieve::polygons::{rotate_a, I2Model, TypeA, TypeB, TypeD};

fn main() -> clustersieve::Result<()> {
    let a = TypeA::model(2, 3)?;
    let faces = a.enumerate(2)?;
    println!("type A, s=2, octagon, two diagonals: {} faces", faces.len());
    for f in &faces {
        println!("  {f}  ->  {}", rotate_a(f, 1));
    }

    let b = TypeB::model(1, 3)?;
    println!("\ntype B, s=1, n=3: {} single B-diagonals", b.enumerate(1)?.len());
    for f in b.enumerate(1)? {
        println!("  {f}");
    }

    let d = TypeD::model(3, 2)?;
    println!(
        "\ntype D, s=3, n=2: {} faces with two D-diagonals",
        d.enumerate(2)?.len()
    );
    for f in d.enumerate(2)?.iter().take(4) {
        println!("  {f}  ->  {}", d.rotate(f, 1));
    }

    let g = I2Model::model(2, 5)?;
    println!(
        "\nI2(5), s=2: {} vertices, {} edges",
        g.parts().len(),
        g.enumerate(2)?.len()
    );
    println!("orbits of edges: {:?}", g.orbit_counts(2)?);
    Ok(())
}
