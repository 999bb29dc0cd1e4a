//! Sparse exact matrices, kernels and a randomized equality pre-screen.

mod kernel;
mod probe;
mod sparse;

pub use kernel::{inverse, kernel, rank, rref, solve, Rref};
pub use probe::{probably_equal, PointSampler};
pub use sparse::{apply_local, embed, on_legs, SparseMat};
