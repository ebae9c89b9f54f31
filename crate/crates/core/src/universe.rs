//! Finite slices of the semigroups, used by the exhaustive checks.

use crate::brandt::BrandtElem;
use crate::family::AtomicFamily;
use crate::semigroup::BElem;
use crate::Nat;

/// A sorted finite slice of a semigroup, zero first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedUniverse<E> {
    family: AtomicFamily,
    bound: Nat,
    elements: Vec<E>,
}

impl<E> BoundedUniverse<E> {
    pub fn family(&self) -> &AtomicFamily {
        &self.family
    }

    pub fn bound(&self) -> Nat {
        self.bound
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl BoundedUniverse<BElem> {
    /// `0` and every `(i, j, {k})` with `i, j, k ≤ bound`.
    pub fn semigroup(f: &AtomicFamily, bound: Nat) -> Self {
        let ks: Vec<Nat> = f.support().up_to(bound).collect();
        let mut elements = vec![BElem::Zero];
        for i in 0..=bound {
            for j in 0..=bound {
                elements.extend(ks.iter().map(|&k| BElem::triple(i, j, k)));
            }
        }
        elements.sort();
        BoundedUniverse {
            family: f.clone(),
            bound,
            elements,
        }
    }

    /// `1 + (bound + 1)² · |𝐅 ∩ [0, bound]|`.
    pub fn semigroup_cardinality(f: &AtomicFamily, bound: Nat) -> u64 {
        let side = bound + 1;
        1 + side * side * f.support().count_up_to(bound) as u64
    }
}

impl BoundedUniverse<BrandtElem> {
    /// `𝒪` and every restricted `(row; val; col)` with `row, col ≤ bound`.
    pub fn restricted(f: &AtomicFamily, bound: Nat) -> Self {
        let mut elements = vec![BrandtElem::O];
        for row in 0..=bound {
            for col in 0..=bound {
                elements.extend(
                    f.support()
                        .up_to(row.min(col))
                        .map(|val| BrandtElem::triple(row, val, col)),
                );
            }
        }
        elements.sort();
        BoundedUniverse {
            family: f.clone(),
            bound,
            elements,
        }
    }

    /// `1 + Σ_{i, j ≤ bound} |𝐅 ∩ [0, min(i, j)]|`.
    pub fn restricted_cardinality(f: &AtomicFamily, bound: Nat) -> u64 {
        let mut total = 1;
        for i in 0..=bound {
            for j in 0..=bound {
                total += f.support().count_up_to(i.min(j)) as u64;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let f: AtomicFamily = "0,1,3".parse().unwrap();
        let u = BoundedUniverse::semigroup(&f, 4);
        assert_eq!(u.len(), 76);
        assert_eq!(
            u.len() as u64,
            BoundedUniverse::semigroup_cardinality(&f, 4)
        );
        assert_eq!(u.elements()[0], BElem::Zero);
        let cofinal: AtomicFamily = "+2".parse().unwrap();
        assert_eq!(
            BoundedUniverse::semigroup(&cofinal, 3).len() as u64,
            1 + 16 * 2
        );
        let r = BoundedUniverse::restricted(&"0".parse().unwrap(), 2);
        assert_eq!(r.len(), 10);
        for spec in ["0,1,3", "2,5", "0,+4"] {
            let f: AtomicFamily = spec.parse().unwrap();
            for bound in 0..6 {
                let r = BoundedUniverse::restricted(&f, bound);
                assert_eq!(
                    r.len() as u64,
                    BoundedUniverse::restricted_cardinality(&f, bound)
                );
                let s = BoundedUniverse::semigroup(&f, bound);
                assert_eq!(
                    s.len() as u64,
                    BoundedUniverse::semigroup_cardinality(&f, bound)
                );
            }
        }
    }
}
