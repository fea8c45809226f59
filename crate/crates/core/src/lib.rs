pub mod algebra;
pub mod charp;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod ideal;
pub mod invpoly;
pub mod linalg;
pub mod presentation;
pub mod problem;
pub mod report;

pub use error::{Error, Result};
