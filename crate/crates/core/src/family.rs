//! Families of subsets of ω.
//!
//! An [`AtomicFamily`] is `{∅} ∪ {{k} : k ∈ S}` for a nonempty support `S ⊆ ω`.
//! Supports are stored as a finite sorted list with an optional cofinal tail
//! `{n : n ≥ t}`, which covers every finite support and every support that
//! eventually contains all naturals.
//!
//! [`GeneralFamily`] holds a small finite family of finite sets and exists for
//! the ω-closedness predicate and the set-valued product.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::parse_nat;
use crate::Nat;

/// The union of an atomic family: a nonempty subset of ω.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportSet {
    explicit: Vec<Nat>,
    tail: Option<Nat>,
}

impl SupportSet {
    /// Builds a support from explicit elements and an optional tail
    /// threshold. Explicit elements are sorted and deduplicated; elements
    /// directly below the tail are folded into it so that equal sets compare
    /// equal.
    pub fn new(explicit: impl IntoIterator<Item = Nat>, tail: Option<Nat>) -> Result<Self> {
        let mut explicit: Vec<Nat> = explicit.into_iter().collect();
        explicit.sort_unstable();
        explicit.dedup();
        if let (Some(t), Some(&last)) = (tail, explicit.last()) {
            if last >= t {
                return Err(Error::TailOverlap {
                    element: last,
                    tail: t,
                });
            }
        }
        if explicit.is_empty() && tail.is_none() {
            return Err(Error::EmptySupport);
        }
        let mut support = SupportSet { explicit, tail };
        support.absorb_into_tail();
        Ok(support)
    }

    pub fn finite(elements: impl IntoIterator<Item = Nat>) -> Result<Self> {
        Self::new(elements, None)
    }

    /// `{n : n ≥ t}`.
    pub fn cofinal(t: Nat) -> Self {
        SupportSet {
            explicit: Vec::new(),
            tail: Some(t),
        }
    }

    fn absorb_into_tail(&mut self) {
        while let (Some(t), Some(&last)) = (self.tail, self.explicit.last()) {
            if last + 1 == t {
                self.explicit.pop();
                self.tail = Some(last);
            } else {
                break;
            }
        }
    }

    pub fn explicit(&self) -> &[Nat] {
        &self.explicit
    }

    pub fn tail(&self) -> Option<Nat> {
        self.tail
    }

    pub fn is_finite(&self) -> bool {
        self.tail.is_none()
    }

    /// Cardinality, or `None` for an infinite support.
    pub fn len(&self) -> Option<usize> {
        self.is_finite().then_some(self.explicit.len())
    }

    /// Always false: construction rejects empty supports.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, k: Nat) -> bool {
        match self.tail {
            Some(t) if k >= t => true,
            _ => self.explicit.binary_search(&k).is_ok(),
        }
    }

    /// `k_0`, the least element.
    pub fn min(&self) -> Nat {
        match self.explicit.first() {
            Some(&k) => k,
            // nonempty by construction
            None => self.tail.expect("support is nonempty"),
        }
    }

    /// The greatest element, if the support is finite.
    pub fn max(&self) -> Option<Nat> {
        if self.is_finite() {
            self.explicit.last().copied()
        } else {
            None
        }
    }

    /// `k_m` in the increasing enumeration `k_0 < k_1 < ⋯`.
    pub fn kth(&self, m: usize) -> Result<Nat> {
        if let Some(&k) = self.explicit.get(m) {
            return Ok(k);
        }
        match self.tail {
            Some(t) => Ok(t + (m - self.explicit.len()) as Nat),
            None => Err(Error::IndexOutOfRange {
                index: m,
                len: self.explicit.len(),
            }),
        }
    }

    /// Position of `k` in the enumeration, if `k` is in the support.
    pub fn index_of(&self, k: Nat) -> Option<usize> {
        match self.explicit.binary_search(&k) {
            Ok(idx) => Some(idx),
            Err(_) => match self.tail {
                Some(t) if k >= t => Some(self.explicit.len() + (k - t) as usize),
                _ => None,
            },
        }
    }

    /// Largest support element strictly below `k`.
    pub fn predecessor(&self, k: Nat) -> Option<Nat> {
        if let Some(t) = self.tail {
            if k > t {
                return Some(k - 1);
            }
        }
        let idx = self.explicit.partition_point(|&e| e < k);
        idx.checked_sub(1).map(|i| self.explicit[i])
    }

    /// Support elements `≤ bound`, increasing.
    pub fn up_to(&self, bound: Nat) -> impl Iterator<Item = Nat> + '_ {
        let explicit = self
            .explicit
            .iter()
            .copied()
            .take_while(move |&k| k <= bound);
        let tail = self.tail.into_iter().flat_map(move |t| t..=bound);
        explicit.chain(tail)
    }

    /// `|{k ∈ S : k ≤ bound}|`.
    pub fn count_up_to(&self, bound: Nat) -> usize {
        let explicit = self.explicit.partition_point(|&k| k <= bound);
        let tail = match self.tail {
            Some(t) if t <= bound => (bound - t + 1) as usize,
            _ => 0,
        };
        explicit + tail
    }

    /// `n + S`. Fails if any element would become negative.
    pub fn translate(&self, n: i64) -> Result<Self> {
        let shift = |k: Nat| -> Result<Nat> {
            let shifted = k as i128 + n as i128;
            if shifted < 0 {
                Err(Error::NegativeTranslation(n))
            } else {
                Ok(shifted as Nat)
            }
        };
        let explicit = self
            .explicit
            .iter()
            .map(|&k| shift(k))
            .collect::<Result<Vec<_>>>()?;
        let tail = self.tail.map(shift).transpose()?;
        Ok(SupportSet { explicit, tail })
    }
}

impl fmt::Display for SupportSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.explicit.iter().map(|k| k.to_string()).collect();
        if let Some(t) = self.tail {
            parts.push(format!("+{t}"));
        }
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SupportSet {
    type Err = Error;

    /// `support := nat ("," nat)* ("," "+" nat)? | "+" nat`
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split(',').map(str::trim).collect();
        let mut explicit = Vec::new();
        let mut tail = None;
        for (pos, token) in tokens.iter().enumerate() {
            if let Some(rest) = token.strip_prefix('+') {
                if pos + 1 != tokens.len() {
                    return Err(Error::Parse(format!(
                        "tail '{token}' must come last in '{s}'"
                    )));
                }
                tail = Some(parse_nat(rest)?);
            } else {
                explicit.push(parse_nat(token)?);
            }
        }
        let mut sorted = explicit.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != explicit.len() {
            return Err(Error::Parse(format!(
                "support '{s}' has duplicate elements"
            )));
        }
        SupportSet::new(explicit, tail)
    }
}

/// `{∅} ∪ {{k} : k ∈ support}`. Always ω-closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtomicFamily {
    support: SupportSet,
}

impl AtomicFamily {
    pub fn new(support: SupportSet) -> Self {
        AtomicFamily { support }
    }

    pub fn finite(elements: impl IntoIterator<Item = Nat>) -> Result<Self> {
        SupportSet::finite(elements).map(Self::new)
    }

    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    pub fn contains(&self, k: Nat) -> bool {
        self.support.contains(k)
    }

    pub fn kth(&self, m: usize) -> Result<Nat> {
        self.support.kth(m)
    }

    /// Shifts the support down so that it contains 0. Returns the shifted
    /// family and the shift `k_0`.
    pub fn normalize(&self) -> (AtomicFamily, Nat) {
        let k0 = self.support.min();
        let shifted = self
            .support
            .translate(-(k0 as i64))
            .expect("shifting by the minimum stays in ω");
        (AtomicFamily::new(shifted), k0)
    }

    /// The integer `n` with `support(self) = n + support(other)`, if any.
    pub fn translate_offset(&self, other: &AtomicFamily) -> Option<i64> {
        let n = self.support.min() as i64 - other.support.min() as i64;
        match other.support.translate(n) {
            Ok(shifted) if shifted == self.support => Some(n),
            _ => None,
        }
    }

    /// The general family `{∅} ∪ {{k} : k ∈ support, k ≤ bound}`.
    pub fn to_general(&self, bound: Nat) -> GeneralFamily {
        let members = std::iter::once(BTreeSet::new())
            .chain(self.support.up_to(bound).map(|k| BTreeSet::from([k])))
            .collect();
        GeneralFamily { members }
    }
}

impl fmt::Display for AtomicFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.support.fmt(f)
    }
}

impl FromStr for AtomicFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(AtomicFamily::new)
    }
}

pub fn normalize(f: &AtomicFamily) -> (AtomicFamily, Nat) {
    f.normalize()
}

pub fn are_translate_equivalent(f1: &AtomicFamily, f2: &AtomicFamily) -> Option<i64> {
    f1.translate_offset(f2)
}

/// A finite family of finite subsets of ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralFamily {
    members: BTreeSet<BTreeSet<Nat>>,
}

impl GeneralFamily {
    pub fn new(members: impl IntoIterator<Item = BTreeSet<Nat>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for member in members {
            let label = set_to_string(&member);
            if !set.insert(member) {
                return Err(Error::DuplicateMember(label));
            }
        }
        Ok(GeneralFamily { members: set })
    }

    pub fn members(&self) -> impl Iterator<Item = &BTreeSet<Nat>> {
        self.members.iter()
    }

    pub fn contains(&self, set: &BTreeSet<Nat>) -> bool {
        self.members.contains(set)
    }

    pub fn contains_empty(&self) -> bool {
        self.members.contains(&BTreeSet::new())
    }

    /// `F₁ ∩ (−n + F₂) ∈ 𝓕` for all members and all `n`.
    ///
    /// Only `n ≤ max(F₂) + 1` is tested; beyond that the shifted set is empty
    /// and the intersection is the same `∅` already seen at `max(F₂) + 1`.
    pub fn validate_omega_closed(&self) -> bool {
        self.members.iter().all(|f1| {
            self.members.iter().all(|f2| {
                let limit = f2.iter().next_back().map_or(0, |&m| m + 1);
                (0..=limit).all(|n| self.members.contains(&intersect_shifted(f1, f2, n)))
            })
        })
    }
}

impl fmt::Display for GeneralFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(set_to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn validate_omega_closed(f: &GeneralFamily) -> bool {
    f.validate_omega_closed()
}

/// `a ∩ (−n + b)`, keeping only the naturals of the shifted set.
pub(crate) fn intersect_shifted(a: &BTreeSet<Nat>, b: &BTreeSet<Nat>, n: Nat) -> BTreeSet<Nat> {
    b.iter()
        .filter(|&&k| k >= n)
        .map(|&k| k - n)
        .filter(|k| a.contains(k))
        .collect()
}

pub(crate) fn set_to_string(set: &BTreeSet<Nat>) -> String {
    let parts: Vec<String> = set.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
