//! Polygon and graph realizations of `Δ^s(Φ)` for types A, B, D and I2(a),
//! their cyclic actions, fixed-point sets and the orbit bijections.

mod bijection;
mod chord;
mod i2;
mod model;
mod trees;
mod type_a;
mod type_b;
mod type_d;

pub use bijection::{
    bijection_a, bijection_a_inverse, bijection_b, bijection_b_inverse, bijection_d_chords, bijection_d_chords_inverse,
    bijection_d_t0, bijection_d_t0_inverse, bijection_d_t1, bijection_d_t1_inverse, product_set, BijectionImage,
};
pub use chord::{crosses, is_s_divisible, regions, rotate_label, Diagonal};
pub use i2::{build_i2, fixed_i2, I2Graph, I2Model};
pub use model::{Face, Model, PartText, Realization};
pub use trees::{enumerate_nc_trees, nc_tree_to_quadrangulation, quadrangulation_to_nc_tree, rotate_tree, NcTree};
pub use type_a::{enumerate_a, fixed_a, rotate_a, DissectionA, TypeA};
pub use type_b::{enumerate_b, fixed_b, rotate_b, BDiagonal, DissectionB, TypeB};
pub use type_d::{
    enumerate_d, fixed_d, gamma_d, split_w, switch_colors, Color, DDiagonal, DissectionD, TypeD, WPartition,
};
