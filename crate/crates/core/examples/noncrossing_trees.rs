//! Noncrossing trees, quadrangulations and their cyclic sieving.
//!
//!     cargo run --release --example noncrossing_trees

use clustersieve::cspcheck::{verify, CSPInstance};
use clustersieve::polygons::{
    enumerate_nc_trees, nc_tree_to_quadrangulation, quadrangulation_to_nc_tree, Diagonal, NcTree,
};

fn main() -> clustersieve::Result<()> {
    let t = NcTree::new(
        5,
        vec![
            Diagonal::new(1, 2),
            Diagonal::new(2, 5),
            Diagonal::new(3, 5),
            Diagonal::new(4, 5),
        ],
    )?;
    let q = nc_tree_to_quadrangulation(&t)?;
    println!(
        "tree {t}\nquadrangulation {q}\nback {}",
        quadrangulation_to_nc_tree(&q)?
    );
    for n in 1..=7 {
        let r = verify(&CSPInstance::noncrossing_trees(n)?)?;
        println!(
            "n = {n}: {} trees, orbits {}, CSP {}",
            enumerate_nc_trees(n + 1).len(),
            r.orbit_structure(),
            if r.passed() { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
