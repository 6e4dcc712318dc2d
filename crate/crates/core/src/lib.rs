pub mod cli;
pub mod complex;
pub mod cspcheck;
pub mod error;
pub mod polygons;
pub mod qpoly;
pub mod rootsys;

pub use error::{Error, Result};
