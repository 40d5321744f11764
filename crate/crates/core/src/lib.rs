pub mod census;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod criticality;
pub mod error;
pub mod homsolver;
pub mod sgraph;

pub use error::{Error, Result};
