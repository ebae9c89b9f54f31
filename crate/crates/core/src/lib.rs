//! Exact arithmetic for the inverse semigroup `B_ω^𝓕` over atomic families
//! `𝓕 = {∅} ∪ {{k} : k ∈ 𝐅}` and its model inside the Brandt ω-extension of
//! `(𝐅, min)`.
//!
//! Elements of `B_ω^𝓕` are [`BElem`]s: the zero or a triple `(i, j, {k})`.
//! The embedding [`embed`] sends them to [`BrandtElem`]s. Bounded exhaustive
//! checks live in [`verify`], topological predicates in [`topology`].

use std::fmt;
use std::ops::Mul;

pub mod brandt;
pub mod cli;
pub mod dot;
pub mod equations;
pub mod error;
pub mod family;
pub mod order;
pub mod report;
pub mod semigroup;
pub mod text;
pub mod topology;
pub mod universe;
pub mod verify;

/// Naturals. Parsers cap input at `u32::MAX` so coordinate sums cannot overflow.
pub type Nat = u64;

/// A semigroup element with zero and an involutive inverse.
pub trait InverseElement: Copy + Ord + fmt::Display + Mul<Output = Self> {
    const ZERO: Self;

    fn inverse(self) -> Self;

    fn is_idempotent(self) -> bool {
        self * self == self
    }
}

pub use brandt::{embed, embed_inverse, fiber, in_restricted, BrandtElem};
pub use equations::{solve_left, solve_right, SolutionSet};
pub use error::{Error, Result};
pub use family::{AtomicFamily, GeneralFamily, SupportSet};
pub use order::{maximal_chain_down, nat_leq};
pub use report::VerificationReport;
pub use semigroup::{multiply, BElem, GeneralBElem};
pub use universe::BoundedUniverse;
