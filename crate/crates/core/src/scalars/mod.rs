//! Exact coefficient rings: the function field `Q(s)` and the jet ring
//! `Q(k)[ħ]/(ħ^d)`.

mod jet;
mod poly;
mod ratfunc;
mod rational;
mod text;

use core::fmt::Debug;

pub use jet::Jet;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use text::{format_jet, format_ratfunc, parse_jet, parse_ratfunc};

/// Commutative ring with exact equality, as needed by the sparse matrices.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Rough size of the element, used to pick cheap pivots.
    fn weight(&self) -> usize {
        1
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}
