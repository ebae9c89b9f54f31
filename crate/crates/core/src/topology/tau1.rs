//! The base `U_n(𝒪) = {𝒪} ∪ ⋃{fiber(i, j) : n ≤ i < j}` of the topology `τ₁`.

use std::fmt;
use std::str::FromStr;

use crate::brandt::{require_restricted, BrandtElem};
use crate::error::{Error, Result};
use crate::family::AtomicFamily;
use crate::report::{Sweep, VerificationReport};
use crate::text::parse_nat;
use crate::universe::BoundedUniverse;
use crate::Nat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tau1Nbhd {
    pub n: Nat,
}

impl Tau1Nbhd {
    pub fn new(n: Nat) -> Self {
        Tau1Nbhd { n }
    }

    pub fn contains(self, e: BrandtElem) -> bool {
        tau1_contains(self, e)
    }

    /// Elements of `U_n` with `row, col ≤ bound`.
    pub fn members(self, f: &AtomicFamily, bound: Nat) -> Vec<BrandtElem> {
        BoundedUniverse::restricted(f, bound)
            .elements()
            .iter()
            .copied()
            .filter(|&e| self.contains(e))
            .collect()
    }
}

pub fn tau1_contains(u: Tau1Nbhd, e: BrandtElem) -> bool {
    match e {
        BrandtElem::O => true,
        BrandtElem::Triple { row, col, .. } => u.n <= row && row < col,
    }
}

/// `x·U_n = U_n·x = {𝒪}` for `n = max(row, col) + 1`.
pub fn check_tau1_annihilation(
    x: BrandtElem,
    f: &AtomicFamily,
    bound: Nat,
) -> Result<VerificationReport> {
    let BrandtElem::Triple { row, col, .. } = require_restricted(x, f)? else {
        return Ok(VerificationReport::pass(0, "O annihilates everything"));
    };
    let u = Tau1Nbhd::new(row.max(col) + 1);
    let mut sweep = Sweep::new();
    for e in u.members(f, bound) {
        for product in [x * e, e * x] {
            sweep.check(product.is_zero(), || vec![x.to_string(), e.to_string()]);
        }
    }
    Ok(sweep.finish(format!("x annihilates {u}")))
}

/// `U_n·U_n ⊆ U_n`.
pub fn check_tau1_closed(u: Tau1Nbhd, f: &AtomicFamily, bound: Nat) -> VerificationReport {
    let members = u.members(f, bound);
    let mut sweep = Sweep::new();
    for &a in &members {
        for &b in &members {
            let product = a * b;
            sweep.check(u.contains(product), || {
                vec![a.to_string(), b.to_string(), product.to_string()]
            });
        }
    }
    sweep.finish(format!("{u} closed under products"))
}

/// Both halves of the `τ₁` continuity argument at `(x, 𝒪)` and `(𝒪, 𝒪)`.
pub fn check_continuity_tau1(
    u: Tau1Nbhd,
    x: BrandtElem,
    f: &AtomicFamily,
    bound: Nat,
) -> Result<VerificationReport> {
    let annihilation = check_tau1_annihilation(x, f, bound)?;
    Ok(VerificationReport::all(
        [annihilation, check_tau1_closed(u, f, bound)],
        "",
    ))
}

impl fmt::Display for Tau1Nbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t1:{}", self.n)
    }
}

impl FromStr for Tau1Nbhd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("t1:")
            .ok_or_else(|| Error::Parse(format!("'{s}' does not start with 't1:'")))?;
        Ok(Tau1Nbhd::new(parse_nat(body)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BrandtElem {
        s.parse().unwrap()
    }

    fn f013() -> AtomicFamily {
        "0,1,3".parse().unwrap()
    }

    #[test]
    fn containment() {
        let u = Tau1Nbhd::new(3);
        assert!(u.contains(b("(5;1;7)")));
        assert!(!u.contains(b("(5;1;4)")));
        assert!(!u.contains(b("(2;0;9)")));
        assert!(u.contains(BrandtElem::O));
    }

    #[test]
    fn continuity_examples() {
        let f = f013();
        let r = check_tau1_annihilation(b("(2;1;4)"), &f, 25).unwrap();
        assert!(r.passed && r.checked > 0, "{r}");
        assert!(check_tau1_closed(Tau1Nbhd::new(3), &f, 20).passed);
        assert!(
            check_tau1_annihilation(BrandtElem::O, &f, 5)
                .unwrap()
                .passed
        );
        assert!(
            check_continuity_tau1(Tau1Nbhd::new(1), b("(0;0;2)"), &"+0".parse().unwrap(), 8)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn smaller_index_does_not_annihilate() {
        // x = (2;1;4) meets U_4 at (4;0;5)
        let f = f013();
        let x = b("(2;1;4)");
        assert!(Tau1Nbhd::new(4)
            .members(&f, 6)
            .iter()
            .any(|&e| !(x * e).is_zero()));
    }

    #[test]
    fn text_form() {
        assert_eq!("t1:3".parse::<Tau1Nbhd>(), Ok(Tau1Nbhd::new(3)));
        assert_eq!(Tau1Nbhd::new(7).to_string(), "t1:7");
        assert!("t1:".parse::<Tau1Nbhd>().is_err());
        assert!("t2:1".parse::<Tau1Nbhd>().is_err());
    }
}
