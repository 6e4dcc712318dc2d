//! Exact polynomial arithmetic in `q` and the q-analogues built on it.

mod coxeter;
mod faces;
mod poly;
mod qanalog;

pub use coxeter::{CoxeterDatum, CoxeterType};
pub use faces::{closed_form_eval, face_number, face_poly, face_poly_d_alternate, q_catalan, ComplexType, Family};
pub use poly::QPolynomial;
pub use qanalog::{
    binomial, cyclotomic, divisors, eval_at_primitive_root, gauss_binomial, gauss_binomial_by_division, q_factorial,
    q_int, q_lucas, RootOfUnitySpec,
};
