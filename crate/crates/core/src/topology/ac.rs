//! The base `U_{(i₁,j₁),…,(iₙ,jₙ)}` at `𝒪` of the topology `τ_Ac`: the
//! restricted subsemigroup minus finitely many fibers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::brandt::{fiber, require_restricted, BrandtElem};
use crate::error::{Error, Result};
use crate::family::AtomicFamily;
use crate::report::{Sweep, VerificationReport};
use crate::text::parse_tuple;
use crate::universe::BoundedUniverse;
use crate::Nat;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AcNbhd {
    excluded: BTreeSet<(Nat, Nat)>,
}

impl AcNbhd {
    pub fn new(excluded: impl IntoIterator<Item = (Nat, Nat)>) -> Self {
        AcNbhd {
            excluded: excluded.into_iter().collect(),
        }
    }

    pub fn excluded(&self) -> &BTreeSet<(Nat, Nat)> {
        &self.excluded
    }

    /// `U_{(j₁,i₁),…}`.
    pub fn transposed(&self) -> Self {
        AcNbhd::new(self.excluded.iter().map(|&(i, j)| (j, i)))
    }

    pub fn contains(&self, e: BrandtElem) -> bool {
        ac_contains(self, e)
    }
}

pub fn ac_contains(u: &AcNbhd, e: BrandtElem) -> bool {
    match e {
        BrandtElem::O => true,
        BrandtElem::Triple { row, col, .. } => !u.excluded.contains(&(row, col)),
    }
}

/// Number of nonzero elements outside `u`.
pub fn ac_complement_size(u: &AcNbhd, f: &AtomicFamily) -> usize {
    u.excluded.iter().map(|&(i, j)| fiber(i, j, f).len()).sum()
}

/// Sweeps `U_K·{x} ⊆ u` and `{x}·U_K ⊆ u`, where `K` collects the indices
/// of `x` and of the excluded pairs and `U_K` excludes every pair in `K×K`.
pub fn check_shift_continuity_ac(
    u: &AcNbhd,
    x: BrandtElem,
    f: &AtomicFamily,
    bound: Nat,
) -> Result<VerificationReport> {
    let BrandtElem::Triple { row, col, .. } = require_restricted(x, f)? else {
        return Err(Error::ZeroNotAllowed);
    };
    let mut k: BTreeSet<Nat> = BTreeSet::from([row, col]);
    for &(i, j) in &u.excluded {
        k.insert(i);
        k.insert(j);
    }
    let u_k = AcNbhd::new(k.iter().flat_map(|&a| k.iter().map(move |&b| (a, b))));
    let mut sweep = Sweep::new();
    for &e in BoundedUniverse::restricted(f, bound).elements() {
        if !u_k.contains(e) {
            continue;
        }
        for product in [e * x, x * e] {
            let ok = u.contains(product);
            sweep.check(ok, || {
                vec![e.to_string(), x.to_string(), product.to_string()]
            });
        }
    }
    Ok(sweep.finish(format!("U_K with K = {k:?}")))
}

/// Sweeps `(U_{(j₁,i₁),…})⁻¹ ⊆ U_{(i₁,j₁),…}`.
pub fn check_inversion_ac(u: &AcNbhd, f: &AtomicFamily, bound: Nat) -> VerificationReport {
    let transposed = u.transposed();
    let mut sweep = Sweep::new();
    for &e in BoundedUniverse::restricted(f, bound).elements() {
        if transposed.contains(e) {
            sweep.check(u.contains(e.inverse()), || vec![e.to_string()]);
        }
    }
    sweep.finish(format!("inverse of {transposed} inside {u}"))
}

impl fmt::Display for AcNbhd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ac:")?;
        for (i, j) in &self.excluded {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

impl FromStr for AcNbhd {
    type Err = Error;

    /// `ac:(i₁,j₁)(i₂,j₂)…`; `ac:` alone excludes nothing.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("ac:")
            .ok_or_else(|| Error::Parse(format!("'{s}' does not start with 'ac:'")))?;
        let mut excluded = Vec::new();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let end = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unterminated pair in '{s}'")))?;
            let pair = parse_tuple(&rest[..=end], ',', 2)?;
            excluded.push((pair[0], pair[1]));
            rest = rest[end + 1..].trim_start();
        }
        Ok(AcNbhd::new(excluded))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BrandtElem {
        s.parse().unwrap()
    }

    fn u(s: &str) -> AcNbhd {
        s.parse().unwrap()
    }

    fn f013() -> AtomicFamily {
        "0,1,3".parse().unwrap()
    }

    #[test]
    fn containment() {
        assert!(u("ac:(3,4)").contains(b("(3;1;5)")));
        assert!(!u("ac:(3,4)").contains(b("(3;1;4)")));
        assert!(u("ac:(3,4)(0,0)").contains(BrandtElem::O));
    }

    #[test]
    fn complement_sizes() {
        let f = f013();
        assert_eq!(ac_complement_size(&u("ac:(2,5)"), &f), 2);
        assert_eq!(ac_complement_size(&u("ac:"), &f), 0);
        assert_eq!(ac_complement_size(&u("ac:(0,0)(1,1)"), &f), 3);
    }

    #[test]
    fn predicate_matches_enumerated_fibers() {
        let f = f013();
        let nbhd = u("ac:(2,5)(1,1)(4,0)");
        let removed: BTreeSet<BrandtElem> = nbhd
            .excluded()
            .iter()
            .flat_map(|&(i, j)| fiber(i, j, &f))
            .collect();
        for &e in BoundedUniverse::restricted(&f, 6).elements() {
            assert_eq!(nbhd.contains(e), !removed.contains(&e));
        }
    }

    #[test]
    fn continuity_examples() {
        let f = f013();
        assert!(
            check_shift_continuity_ac(&u("ac:(2,5)"), b("(3;1;4)"), &f, 20)
                .unwrap()
                .passed
        );
        assert!(
            check_shift_continuity_ac(&u("ac:"), b("(3;1;4)"), &f, 10)
                .unwrap()
                .passed
        );
        assert!(
            check_shift_continuity_ac(&u("ac:(0,0)"), b("(0;0;0)"), &f, 20)
                .unwrap()
                .passed
        );
        assert_eq!(
            check_shift_continuity_ac(&u("ac:"), BrandtElem::O, &f, 3),
            Err(Error::ZeroNotAllowed)
        );
    }

    #[test]
    fn inversion_examples() {
        let f = f013();
        assert!(check_inversion_ac(&u("ac:(2,5)"), &f, 20).passed);
        assert!(check_inversion_ac(&u("ac:(1,1)(2,3)(3,2)"), &f, 10).passed);
        assert!(check_inversion_ac(&u("ac:(0,3)(1,4)"), &f, 15).passed);
    }

    #[test]
    fn text_form() {
        assert_eq!(u(" ac:(1, 2) (0,0)").to_string(), "ac:(0,0)(1,2)");
        assert_eq!(u("ac:"), AcNbhd::default());
        assert!("t1:3".parse::<AcNbhd>().is_err());
        assert!("ac:(1,2".parse::<AcNbhd>().is_err());
        assert!("ac:(1,2,3)".parse::<AcNbhd>().is_err());
    }
}
