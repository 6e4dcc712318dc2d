//! Root systems over exact scalars and the generalized cluster complexes
//! built from them; the only model for the exceptional types.

mod colored;
mod scalar;
mod system;

pub use colored::{
    compatible, cross_validate_classical, enumerate_faces, gamma_s, orbit_structure, ColoredComplex, ColoredRoot,
};
pub use scalar::ExactScalar;
pub use system::{
    build_root_system, face_numbers_from_h, gamma, root_poset_antichains, tau, AlmostPositive, Root, RootSystem, Sign,
};
