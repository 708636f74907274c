//! Exact symbolic kernel for pre-Lie-Rinehart and Lie-Rinehart algebras,
//! their cohomology, extensions, crossed modules and 2-algebras.

#![allow(clippy::needless_range_loop)]

pub mod coeffring;
pub mod cohomology;
pub mod crossed;
pub mod error;
pub mod extensions;
pub mod freeprelie;
pub mod gen;
pub mod io;
pub mod linalg;
pub mod report;
pub mod rmatrix;
pub mod structures;
pub mod twoalg;

pub use error::{Error, Result};
pub use report::Report;
