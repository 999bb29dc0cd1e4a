//! Exact computational core: rational functions and jets, sparse exact
//! linear algebra, the `U_q(sl_2)` ribbon engine, the truncated reflection
//! equation algebra, the elliptic braid group / DAHA operators on
//! `W = (V^{⊗n} ⊗ A)^inv`, and the `sl_N` vector-representation degeneration.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod elliptic;
pub mod linalg;
pub mod rea;
pub mod report;
pub mod scalars;
pub mod slnjets;
pub mod uqsl2;

mod error;

pub use error::{Error, Result};
