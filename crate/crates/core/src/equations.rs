//! The equations `A·X = B` and `X·A = B` in the restricted subsemigroup.
//!
//! For `B ≠ 𝒪` the solutions lie in a single finite fiber, so they are
//! enumerated. For `B = 𝒪` the solution set is infinite and is returned as a
//! predicate.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::brandt::{fiber, require_restricted, BrandtElem};
use crate::error::{Error, Result};
use crate::family::AtomicFamily;
use crate::universe::BoundedUniverse;
use crate::Nat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `A·X = B`
    Left,
    /// `X·A = B`
    Right,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Parse(format!(
                "side must be 'left' or 'right', got '{s}'"
            ))),
        }
    }
}

impl Side {
    pub fn apply(self, a: BrandtElem, x: BrandtElem) -> BrandtElem {
        match self {
            Side::Left => a * x,
            Side::Right => x * a,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolutionSet {
    /// Sorted and duplicate-free.
    Finite { solutions: Vec<BrandtElem> },
    /// `B = 𝒪`: `X` solves the equation iff `X = 𝒪` or the inner index of
    /// `X` differs from `pivot`. A `None` pivot means `A = 𝒪` and every `X`
    /// is a solution.
    InfiniteZeroCase {
        side: Side,
        pivot: Option<Nat>,
        description: String,
    },
}

impl SolutionSet {
    fn zero_case(side: Side, a: BrandtElem) -> Self {
        let (pivot, coord) = match side {
            Side::Left => (a.col(), "row"),
            Side::Right => (a.row(), "col"),
        };
        let description = match pivot {
            None => "all X".to_string(),
            Some(p) => format!("all X with {coord} ≠ {p}, or X = O"),
        };
        SolutionSet::InfiniteZeroCase {
            side,
            pivot,
            description,
        }
    }

    /// Membership test valid for both variants.
    pub fn contains(&self, x: BrandtElem) -> bool {
        match self {
            SolutionSet::Finite { solutions } => solutions.binary_search(&x).is_ok(),
            SolutionSet::InfiniteZeroCase { side, pivot, .. } => {
                let inner = match side {
                    Side::Left => x.row(),
                    Side::Right => x.col(),
                };
                match (pivot, inner) {
                    (None, _) | (_, None) => true,
                    (Some(p), Some(i)) => *p != i,
                }
            }
        }
    }

    pub fn finite(&self) -> Option<&[BrandtElem]> {
        match self {
            SolutionSet::Finite { solutions } => Some(solutions),
            SolutionSet::InfiniteZeroCase { .. } => None,
        }
    }
}

impl fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionSet::Finite { solutions } => {
                let items: Vec<String> = solutions.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
            SolutionSet::InfiniteZeroCase { description, .. } => {
                write!(f, "infinite: {description}")
            }
        }
    }
}

fn solve(side: Side, a: BrandtElem, b: BrandtElem, f: &AtomicFamily) -> Result<SolutionSet> {
    require_restricted(a, f)?;
    require_restricted(b, f)?;
    let (
        BrandtElem::Triple {
            row: ia,
            val: ka,
            col: ja,
        },
        BrandtElem::Triple {
            row: ib,
            val: kb,
            col: jb,
        },
    ) = (a, b)
    else {
        return Ok(if b.is_zero() {
            SolutionSet::zero_case(side, a)
        } else {
            SolutionSet::Finite {
                solutions: Vec::new(),
            }
        });
    };
    let (outer_matches, candidates) = match side {
        Side::Left => (ia == ib, fiber(ja, jb, f)),
        Side::Right => (ja == jb, fiber(ib, ia, f)),
    };
    let solutions = if outer_matches && kb <= ka {
        candidates
            .into_iter()
            .filter(|&x| side.apply(a, x) == b)
            .collect()
    } else {
        Vec::new()
    };
    Ok(SolutionSet::Finite { solutions })
}

/// Solves `A·X = B`. Solutions lie in `fiber(j_A, j_B)`.
pub fn solve_left(a: BrandtElem, b: BrandtElem, f: &AtomicFamily) -> Result<SolutionSet> {
    solve(Side::Left, a, b, f)
}

/// Solves `X·A = B`. Solutions lie in `fiber(i_B, i_A)`.
pub fn solve_right(a: BrandtElem, b: BrandtElem, f: &AtomicFamily) -> Result<SolutionSet> {
    solve(Side::Right, a, b, f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteForce {
    pub solutions: Vec<BrandtElem>,
    /// `bound` covers every index of `A` and `B`, so no solution was missed.
    pub exhaustive: bool,
}

/// Scans the restricted elements with `row, col ≤ bound`.
pub fn brute_force_solutions(
    a: BrandtElem,
    b: BrandtElem,
    side: Side,
    bound: Nat,
    f: &AtomicFamily,
) -> Result<BruteForce> {
    if b.is_zero() {
        return Err(Error::ZeroNotAllowed);
    }
    let solutions = BoundedUniverse::restricted(f, bound)
        .elements()
        .iter()
        .copied()
        .filter(|&x| side.apply(a, x) == b)
        .collect();
    let needed = [a.row(), a.col(), b.row(), b.col()]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    Ok(BruteForce {
        solutions,
        exhaustive: bound >= needed,
    })
}
