//! Elements and multiplication of `B_ω^𝓕`.
//!
//! A nonzero element is a triple `(i, j, {k})` over the bicyclic monoid
//! `ω × ω`. The product follows the two-case bicyclic rule on `(i, j)` and
//! intersects the shifted singletons; an empty intersection is the zero.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{intersect_shifted, set_to_string, AtomicFamily, GeneralFamily};
use crate::text::{parse_nat, parse_tuple};
use crate::{InverseElement, Nat};

/// An element of `B_ω^𝓕` for an atomic family `𝓕`.
///
/// Ordered with `Zero` first and triples lexicographically by `(i, j, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BElemRepr", into = "BElemRepr")]
pub enum BElem {
    Zero,
    Triple { i: Nat, j: Nat, k: Nat },
}

impl BElem {
    pub const fn triple(i: Nat, j: Nat, k: Nat) -> Self {
        BElem::Triple { i, j, k }
    }

    pub fn is_zero(self) -> bool {
        self == BElem::Zero
    }

    pub fn validate(self, f: &AtomicFamily) -> Result<Self> {
        match self {
            BElem::Triple { k, .. } if !f.contains(k) => {
                Err(Error::InvalidElement(self.to_string()))
            }
            _ => Ok(self),
        }
    }

    /// `(i, j, {k})⁻¹ = (j, i, {k})`.
    pub fn inverse(self) -> Self {
        match self {
            BElem::Zero => BElem::Zero,
            BElem::Triple { i, j, k } => BElem::Triple { i: j, j: i, k },
        }
    }

    /// Nonzero idempotents are exactly the triples with `i = j`.
    pub fn is_idempotent(self) -> bool {
        match self {
            BElem::Zero => true,
            BElem::Triple { i, j, .. } => i == j,
        }
    }

    /// Largest of the coordinates, ignoring `k`; zero for the zero.
    pub fn max_index(self) -> Nat {
        match self {
            BElem::Zero => 0,
            BElem::Triple { i, j, .. } => i.max(j),
        }
    }
}

/// Product in the bicyclic monoid `ω × ω`.
pub(crate) fn bicyclic(i1: Nat, j1: Nat, i2: Nat, j2: Nat) -> (Nat, Nat) {
    if j1 <= i2 {
        (i1 + i2 - j1, j2)
    } else {
        (i1, j1 + j2 - i2)
    }
}

impl Mul for BElem {
    type Output = BElem;

    fn mul(self, rhs: BElem) -> BElem {
        match (self, rhs) {
            (
                BElem::Triple {
                    i: i1,
                    j: j1,
                    k: k1,
                },
                BElem::Triple {
                    i: i2,
                    j: j2,
                    k: k2,
                },
            ) if j1 + k1 == i2 + k2 => {
                let (i, j) = bicyclic(i1, j1, i2, j2);
                // the surviving singleton comes from the factor that was not shifted
                let k = if j1 <= i2 { k2 } else { k1 };
                BElem::Triple { i, j, k }
            }
            _ => BElem::Zero,
        }
    }
}

impl InverseElement for BElem {
    const ZERO: Self = BElem::Zero;

    fn inverse(self) -> Self {
        BElem::inverse(self)
    }
}

/// Validated product in `B_ω^𝓕`.
pub fn multiply(a: BElem, b: BElem, f: &AtomicFamily) -> Result<BElem> {
    Ok(a.validate(f)? * b.validate(f)?)
}

pub fn invert(x: BElem) -> BElem {
    x.inverse()
}

pub fn is_idempotent(x: BElem) -> bool {
    x.is_idempotent()
}

impl fmt::Display for BElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BElem::Zero => f.write_str("0"),
            BElem::Triple { i, j, k } => write!(f, "({i},{j},{k})"),
        }
    }
}

impl FromStr for BElem {
    type Err = Error;

    /// `0` or `(i,j,k)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(BElem::Zero);
        }
        let v = parse_tuple(s, ',', 3)?;
        Ok(BElem::triple(v[0], v[1], v[2]))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BElemRepr {
    Zero { zero: bool },
    Triple { i: Nat, j: Nat, k: Nat },
}

impl From<BElem> for BElemRepr {
    fn from(e: BElem) -> Self {
        match e {
            BElem::Zero => BElemRepr::Zero { zero: true },
            BElem::Triple { i, j, k } => BElemRepr::Triple { i, j, k },
        }
    }
}

impl TryFrom<BElemRepr> for BElem {
    type Error = String;

    fn try_from(r: BElemRepr) -> std::result::Result<Self, String> {
        match r {
            BElemRepr::Zero { zero: true } => Ok(BElem::Zero),
            BElemRepr::Zero { zero: false } => Err("\"zero\" must be true".into()),
            BElemRepr::Triple { i, j, k } => Ok(BElem::Triple { i, j, k }),
        }
    }
}

/// An element of `B_ω^𝓕` for an arbitrary ω-closed family of finite sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneralBElem {
    Zero,
    Triple { i: Nat, j: Nat, set: BTreeSet<Nat> },
}

impl GeneralBElem {
    pub fn triple(i: Nat, j: Nat, set: impl IntoIterator<Item = Nat>) -> Self {
        GeneralBElem::Triple {
            i,
            j,
            set: set.into_iter().collect(),
        }
    }
}

impl From<BElem> for GeneralBElem {
    fn from(e: BElem) -> Self {
        match e {
            BElem::Zero => GeneralBElem::Zero,
            BElem::Triple { i, j, k } => GeneralBElem::triple(i, j, [k]),
        }
    }
}

impl fmt::Display for GeneralBElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralBElem::Zero => f.write_str("0"),
            GeneralBElem::Triple { i, j, set } => write!(f, "({i},{j},{})", set_to_string(set)),
        }
    }
}

/// `(B_ω × 𝓕, ·)`, modulo the ideal of empty-set triples, for an ω-closed
/// family checked once at construction.
#[derive(Clone, Debug)]
pub struct GeneralSemigroup {
    family: GeneralFamily,
}

impl GeneralSemigroup {
    pub fn new(family: GeneralFamily) -> Result<Self> {
        if !family.validate_omega_closed() {
            return Err(Error::NotOmegaClosed);
        }
        Ok(GeneralSemigroup { family })
    }

    pub fn family(&self) -> &GeneralFamily {
        &self.family
    }

    fn check(&self, e: &GeneralBElem) -> Result<()> {
        match e {
            GeneralBElem::Triple { set, .. } if set.is_empty() || !self.family.contains(set) => {
                Err(Error::InvalidElement(e.to_string()))
            }
            _ => Ok(()),
        }
    }

    pub fn multiply(&self, a: &GeneralBElem, b: &GeneralBElem) -> Result<GeneralBElem> {
        self.check(a)?;
        self.check(b)?;
        let (
            GeneralBElem::Triple {
                i: i1,
                j: j1,
                set: f1,
            },
            GeneralBElem::Triple {
                i: i2,
                j: j2,
                set: f2,
            },
        ) = (a, b)
        else {
            return Ok(GeneralBElem::Zero);
        };
        let (i1, j1, i2, j2) = (*i1, *j1, *i2, *j2);
        let (i, j, set) = if j1 <= i2 {
            // (j₁ − i₂ + F₁) ∩ F₂
            (i1 + i2 - j1, j2, intersect_shifted(f2, f1, i2 - j1))
        } else {
            // F₁ ∩ (i₂ − j₁ + F₂)
            (i1, j1 + j2 - i2, intersect_shifted(f1, f2, j1 - i2))
        };
        if !self.family.contains(&set) {
            return Err(Error::NotAMember(set_to_string(&set)));
        }
        if set.is_empty() {
            return Ok(GeneralBElem::Zero);
        }
        Ok(GeneralBElem::Triple { i, j, set })
    }
}

pub fn multiply_general(
    a: &GeneralBElem,
    b: &GeneralBElem,
    f: &GeneralFamily,
) -> Result<GeneralBElem> {
    GeneralSemigroup::new(f.clone())?.multiply(a, b)
}

/// Parses `0` or `(i,j,{a,b,…})`.
impl FromStr for GeneralBElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(GeneralBElem::Zero);
        }
        let err = || Error::Parse(format!("'{s}' is not of the form (i,j,{{…}})"));
        let inner = compact
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix("})"))
            .ok_or_else(err)?;
        let (head, set) = inner.split_once(",{").ok_or_else(err)?;
        let (i, j) = head.split_once(',').ok_or_else(err)?;
        let set = if set.is_empty() {
            BTreeSet::new()
        } else {
            set.split(',').map(parse_nat).collect::<Result<_>>()?
        };
        Ok(GeneralBElem::Triple {
            i: parse_nat(i)?,
            j: parse_nat(j)?,
            set,
        })
    }
}
