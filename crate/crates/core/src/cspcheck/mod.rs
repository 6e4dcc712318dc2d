//! Cyclic sieving verifier: face set, cyclic action and candidate polynomial,
//! compared at every divisor of the group order.

mod table;
mod verify;

pub use crate::complex::OrbitStructure;
pub use table::{
    catalan_residues, orbit_table, reference_expansion, reference_orbits, render_expansion, CellStatus, TableCell,
};
pub use verify::{
    residues_agree, verify, verify_facets_catalan, CSPInstance, CSPReport, DivisorCheck, InstanceLabel, OrbitEntry,
};
