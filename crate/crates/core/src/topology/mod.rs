//! Bounded models of the neighbourhood bases at `𝒪` for the topologies
//! `τ_Ac` and `τ₁`, and the finite mechanisms behind the closure results.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::brandt::{fiber, BrandtElem};
use crate::error::{Error, Result};
use crate::family::AtomicFamily;
use crate::universe::BoundedUniverse;
use crate::Nat;

pub mod ac;
pub mod extension;
pub mod tau1;

pub use ac::{
    ac_complement_size, ac_contains, check_inversion_ac, check_shift_continuity_ac, AcNbhd,
};
pub use extension::{
    annihilating_index, extended_multiply, mseq_nbhd_contains, ExtendedElem, MSequence,
};
pub use tau1::{
    check_continuity_tau1, check_tau1_annihilation, check_tau1_closed, tau1_contains, Tau1Nbhd,
};

/// A base neighbourhood of `𝒪` in either topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nbhd {
    Ac(AcNbhd),
    Tau1(Tau1Nbhd),
}

impl Nbhd {
    pub fn contains(&self, e: BrandtElem) -> bool {
        match self {
            Nbhd::Ac(u) => u.contains(e),
            Nbhd::Tau1(u) => u.contains(e),
        }
    }
}

impl fmt::Display for Nbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nbhd::Ac(u) => u.fmt(f),
            Nbhd::Tau1(u) => u.fmt(f),
        }
    }
}

impl FromStr for Nbhd {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with("ac:") {
            t.parse().map(Nbhd::Ac)
        } else if t.starts_with("t1:") {
            t.parse().map(Nbhd::Tau1)
        } else {
            Err(Error::Parse(format!(
                "neighbourhood '{s}' must start with 'ac:' or 't1:'"
            )))
        }
    }
}

/// `φ(x) = x·x⁻¹`.
pub fn phi(x: BrandtElem) -> BrandtElem {
    x * x.inverse()
}

/// `ψ(x) = x⁻¹·x`.
pub fn psi(x: BrandtElem) -> BrandtElem {
    x.inverse() * x
}

/// First element (coordinates `≤ bound`) of `u` whose `φ`- or `ψ`-image
/// lies in `m`.
pub fn prop49_violation(
    u: &Nbhd,
    m: &[BrandtElem],
    f: &AtomicFamily,
    bound: Nat,
) -> Result<Option<BrandtElem>> {
    if let Some(bad) = m.iter().find(|e| !e.is_idempotent()) {
        return Err(Error::NotIdempotent(bad.to_string()));
    }
    Ok(BoundedUniverse::restricted(f, bound)
        .elements()
        .iter()
        .copied()
        .find(|&e| u.contains(e) && (m.contains(&phi(e)) || m.contains(&psi(e)))))
}

/// `(φ⁻¹(M) ∪ ψ⁻¹(M)) ∩ U = ∅` up to `bound`.
pub fn check_prop49_condition(
    u: &Nbhd,
    m: &[BrandtElem],
    f: &AtomicFamily,
    bound: Nat,
) -> Result<bool> {
    prop49_violation(u, m, f, bound).map(|v| v.is_none())
}

/// Some `d ∈ D` with `a·d = 𝒪` or `d·a = 𝒪`, first in list order.
pub fn find_zero_witness(a: BrandtElem, d: &[BrandtElem]) -> Option<BrandtElem> {
    d.iter()
        .copied()
        .find(|&x| (a * x).is_zero() || (x * a).is_zero())
}

/// Some `(a, b) ∈ V×V` with `a·b = 𝒪`.
///
/// Exists unless every element of `V` lies in one fiber `(c, c)`; since
/// fibers are finite, an infinite `V` always has `𝒪 ∈ V·V`.
pub fn square_zero_witness(v: &[BrandtElem]) -> Option<(BrandtElem, BrandtElem)> {
    v.iter()
        .flat_map(|&a| v.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| (a * b).is_zero())
}

/// `|fiber(i, j)|` for all `i, j ≤ bound`.
pub fn isolation_report(f: &AtomicFamily, bound: Nat) -> BTreeMap<(Nat, Nat), usize> {
    let mut report = BTreeMap::new();
    for i in 0..=bound {
        for j in 0..=bound {
            report.insert((i, j), fiber(i, j, f).len());
        }
    }
    report
}
