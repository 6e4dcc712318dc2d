//! The command-line front end called in-process.
//!
//!     cargo run --release --example command_line

use clustersieve::cli::run;

fn main() {
    for line in [
        "verify --family A --s 2 --n 3 --k 2",
        "orbits --type E7 --k 5",
        "table13 --type H3",
        "catalan --type E6",
        "evaluate --family D --s 2 --n 4 --k 2",
        "bijection --family A --s 2 --n 11 --d 3 --face 24,3-8,8-11,11-16,16-19,19-24,3-24",
        "verify --family B --s 1 --n 3 --k 1 --format json",
        "verify --family A --n 3 --k 7",
    ] {
        let (code, out) = run(std::iter::once("clustersieve").chain(line.split_whitespace()));
        println!("$ clustersieve {line}\n{out}\n[exit {code}]\n");
    }
}
