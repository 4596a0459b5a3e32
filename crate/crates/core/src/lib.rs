//! Exact verification and search for MAT-free and MAT2-free hyperplane
//! arrangements over cyclotomic fields.

pub mod arrangement;
pub mod catalog;
pub mod certfile;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod matkernel;
pub mod scalar;
pub mod search;
