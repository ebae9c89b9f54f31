//! The Brandt ω-extension `B_ω(𝐅_min)` of the min-semilattice on the
//! support, and the restricted subsemigroup `B_ω^↱(𝐅_min)` that is the image
//! of `B_ω^𝓕` under `(i, j, {k}) ↦ (i + k, k, j + k)`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{AtomicFamily, SupportSet};
use crate::report::{Sweep, VerificationReport};
use crate::semigroup::BElem;
use crate::text::parse_tuple;
use crate::universe::BoundedUniverse;
use crate::{InverseElement, Nat};

/// A commutative idempotent semigroup.
pub trait Semilattice: Copy + Eq {
    fn meet(self, other: Self) -> Self;
}

/// A natural under `min`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinNat(pub Nat);

impl Semilattice for MinNat {
    fn meet(self, other: Self) -> Self {
        MinNat(self.0.min(other.0))
    }
}

/// Brandt product over an arbitrary index set and semilattice; `None` is `𝒪`.
pub fn brandt_product<I, S>(a: Option<(I, S, I)>, b: Option<(I, S, I)>) -> Option<(I, S, I)>
where
    I: Eq,
    S: Semilattice,
{
    match (a, b) {
        (Some((alpha, s, beta)), Some((gamma, t, delta))) if beta == gamma => {
            Some((alpha, s.meet(t), delta))
        }
        _ => None,
    }
}

/// `𝐅_min`: the support with `xy = min{x, y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMinSemilattice {
    support: SupportSet,
}

impl FMinSemilattice {
    pub fn new(support: SupportSet) -> Self {
        FMinSemilattice { support }
    }

    pub fn support(&self) -> &SupportSet {
        &self.support
    }

    pub fn meet(&self, a: Nat, b: Nat) -> Result<Nat> {
        for x in [a, b] {
            if !self.support.contains(x) {
                return Err(Error::NotInSupport(x));
            }
        }
        Ok(a.min(b))
    }
}

/// An element of `B_ω(𝐅_min)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BrandtRepr", into = "BrandtRepr")]
pub enum BrandtElem {
    O,
    Triple { row: Nat, val: Nat, col: Nat },
}

impl BrandtElem {
    pub const fn triple(row: Nat, val: Nat, col: Nat) -> Self {
        BrandtElem::Triple { row, val, col }
    }

    pub fn is_zero(self) -> bool {
        self == BrandtElem::O
    }

    fn as_tuple(self) -> Option<(Nat, MinNat, Nat)> {
        match self {
            BrandtElem::O => None,
            BrandtElem::Triple { row, val, col } => Some((row, MinNat(val), col)),
        }
    }

    fn from_tuple(t: Option<(Nat, MinNat, Nat)>) -> Self {
        match t {
            None => BrandtElem::O,
            Some((row, MinNat(val), col)) => BrandtElem::Triple { row, val, col },
        }
    }

    /// The value must be a support element; no restriction on the indices.
    pub fn validate(self, f: &AtomicFamily) -> Result<Self> {
        match self {
            BrandtElem::Triple { val, .. } if !f.contains(val) => {
                Err(Error::InvalidElement(self.to_string()))
            }
            _ => Ok(self),
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            BrandtElem::O => BrandtElem::O,
            BrandtElem::Triple { row, val, col } => BrandtElem::Triple {
                row: col,
                val,
                col: row,
            },
        }
    }

    /// `𝒪` or `row = col`.
    pub fn is_idempotent(self) -> bool {
        match self {
            BrandtElem::O => true,
            BrandtElem::Triple { row, col, .. } => row == col,
        }
    }

    pub fn row(self) -> Option<Nat> {
        match self {
            BrandtElem::O => None,
            BrandtElem::Triple { row, .. } => Some(row),
        }
    }

    pub fn col(self) -> Option<Nat> {
        match self {
            BrandtElem::O => None,
            BrandtElem::Triple { col, .. } => Some(col),
        }
    }
}

impl Mul for BrandtElem {
    type Output = BrandtElem;

    fn mul(self, rhs: BrandtElem) -> BrandtElem {
        BrandtElem::from_tuple(brandt_product(self.as_tuple(), rhs.as_tuple()))
    }
}

impl InverseElement for BrandtElem {
    const ZERO: Self = BrandtElem::O;

    fn inverse(self) -> Self {
        BrandtElem::inverse(self)
    }
}

pub fn brandt_multiply(a: BrandtElem, b: BrandtElem) -> BrandtElem {
    a * b
}

impl fmt::Display for BrandtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrandtElem::O => f.write_str("O"),
            BrandtElem::Triple { row, val, col } => write!(f, "({row};{val};{col})"),
        }
    }
}

impl FromStr for BrandtElem {
    type Err = Error;

    /// `O` or `(row;val;col)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "O" {
            return Ok(BrandtElem::O);
        }
        let v = parse_tuple(s, ';', 3)?;
        Ok(BrandtElem::triple(v[0], v[1], v[2]))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BrandtRepr {
    Zero {
        #[serde(rename = "O")]
        o: bool,
    },
    Triple {
        row: Nat,
        val: Nat,
        col: Nat,
    },
}

impl From<BrandtElem> for BrandtRepr {
    fn from(e: BrandtElem) -> Self {
        match e {
            BrandtElem::O => BrandtRepr::Zero { o: true },
            BrandtElem::Triple { row, val, col } => BrandtRepr::Triple { row, val, col },
        }
    }
}

impl TryFrom<BrandtRepr> for BrandtElem {
    type Error = String;

    fn try_from(r: BrandtRepr) -> std::result::Result<Self, String> {
        match r {
            BrandtRepr::Zero { o: true } => Ok(BrandtElem::O),
            BrandtRepr::Zero { o: false } => Err("\"O\" must be true".into()),
            BrandtRepr::Triple { row, val, col } => Ok(BrandtElem::Triple { row, val, col }),
        }
    }
}

/// Membership in `B_ω^↱(𝐅_min)`: `val ∈ 𝐅` and `val ≤ min(row, col)`.
pub fn in_restricted(e: BrandtElem, f: &AtomicFamily) -> bool {
    match e {
        BrandtElem::O => true,
        BrandtElem::Triple { row, val, col } => f.contains(val) && val <= row && val <= col,
    }
}

pub(crate) fn require_restricted(e: BrandtElem, f: &AtomicFamily) -> Result<BrandtElem> {
    if in_restricted(e, f) {
        Ok(e)
    } else {
        Err(Error::NotRestricted(e.to_string()))
    }
}

/// `𝐅_min^{(row,col)↱}`, sorted by value.
pub fn fiber(row: Nat, col: Nat, f: &AtomicFamily) -> Vec<BrandtElem> {
    f.support()
        .up_to(row.min(col))
        .map(|val| BrandtElem::triple(row, val, col))
        .collect()
}

/// `(i, j, {k}) ↦ (i + k, k, j + k)`, `0 ↦ 𝒪`.
pub fn embed(x: BElem) -> BrandtElem {
    match x {
        BElem::Zero => BrandtElem::O,
        BElem::Triple { i, j, k } => BrandtElem::triple(i + k, k, j + k),
    }
}

/// Inverse of [`embed`] on the restricted subsemigroup.
pub fn embed_inverse(e: BrandtElem, f: &AtomicFamily) -> Result<BElem> {
    match require_restricted(e, f)? {
        BrandtElem::O => Ok(BElem::Zero),
        BrandtElem::Triple { row, val, col } => Ok(BElem::triple(row - val, col - val, val)),
    }
}

/// Exhaustive check that [`embed`] is an injective homomorphism into the
/// restricted subsemigroup on all elements with `i, j ≤ bound`.
pub fn verify_embedding_homomorphism(f: &AtomicFamily, bound: Nat) -> VerificationReport {
    let universe = BoundedUniverse::semigroup(f, bound);
    let mut sweep = Sweep::new();
    let mut images = BTreeSet::new();
    for &x in universe.elements() {
        let image = embed(x);
        if !sweep.check(in_restricted(image, f) && images.insert(image), || {
            vec![x.to_string(), image.to_string()]
        }) {
            return sweep.finish("embedding is not injective into the restricted set");
        }
    }
    for &x in universe.elements() {
        for &y in universe.elements() {
            let ok = embed(x * y) == embed(x) * embed(y);
            if !sweep.check(ok, || vec![x.to_string(), y.to_string()]) {
                return sweep.finish("f(x·y) ≠ f(x)·f(y)");
            }
        }
    }
    sweep.finish(format!(
        "injective homomorphism on {} elements of support {f}",
        universe.len()
    ))
}

/// Exhaustive check that the restricted subsemigroup is closed under the
/// Brandt product on all elements with `row, col ≤ bound`.
pub fn verify_restricted_closed(f: &AtomicFamily, bound: Nat) -> VerificationReport {
    let universe = BoundedUniverse::restricted(f, bound);
    let mut sweep = Sweep::new();
    for &a in universe.elements() {
        for &b in universe.elements() {
            let product = a * b;
            if !sweep.check(in_restricted(product, f), || {
                vec![a.to_string(), b.to_string(), product.to_string()]
            }) {
                return sweep.finish("product left the restricted set");
            }
        }
    }
    sweep.finish(format!(
        "closed on {} elements of support {f}",
        universe.len()
    ))
}
