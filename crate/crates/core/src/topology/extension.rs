//! `B_ω^↱(𝐅_min) ∪ {𝒚}` with an adjoined annihilator, and the neighbourhoods
//! `U_n(𝒚) = {𝒚} ∪ M_n` built from a finite prefix of a sequence `M`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::brandt::{in_restricted, BrandtElem};
use crate::error::{Error, Result};
use crate::family::AtomicFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedElem {
    Inner(BrandtElem),
    /// `𝒚`, written `y`.
    Adjoined,
}

/// Products involving `𝒚` are `𝒪`.
pub fn extended_multiply(x: ExtendedElem, y: ExtendedElem) -> ExtendedElem {
    match (x, y) {
        (ExtendedElem::Inner(a), ExtendedElem::Inner(b)) => ExtendedElem::Inner(a * b),
        _ => ExtendedElem::Inner(BrandtElem::O),
    }
}

impl std::ops::Mul for ExtendedElem {
    type Output = ExtendedElem;

    fn mul(self, rhs: ExtendedElem) -> ExtendedElem {
        extended_multiply(self, rhs)
    }
}

impl From<BrandtElem> for ExtendedElem {
    fn from(e: BrandtElem) -> Self {
        ExtendedElem::Inner(e)
    }
}

impl fmt::Display for ExtendedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedElem::Inner(e) => e.fmt(f),
            ExtendedElem::Adjoined => f.write_str("y"),
        }
    }
}

impl FromStr for ExtendedElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "y" => Ok(ExtendedElem::Adjoined),
            other => other.parse().map(ExtendedElem::Inner),
        }
    }
}

/// Finite prefix `(i₁;k₁;i₂), (i₃;k₃;i₄), …` of `M` with `i₁ < i₂ < i₃ < ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MSequence {
    entries: Vec<BrandtElem>,
}

impl MSequence {
    pub fn new(entries: Vec<BrandtElem>, f: &AtomicFamily) -> Result<Self> {
        let mut last = None;
        for &e in &entries {
            let BrandtElem::Triple { row, col, .. } = e else {
                return Err(Error::InvalidSequence("entries must be nonzero".into()));
            };
            if !in_restricted(e, f) {
                return Err(Error::NotRestricted(e.to_string()));
            }
            if last.is_some_and(|l| l >= row) || row >= col {
                return Err(Error::InvalidSequence(format!(
                    "indices not strictly increasing at {e}"
                )));
            }
            last = Some(col);
        }
        Ok(MSequence { entries })
    }

    pub fn entries(&self) -> &[BrandtElem] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `M_n`, the entries at 1-based positions `≥ n`.
    pub fn tail(&self, n: usize) -> Result<&[BrandtElem]> {
        if n == 0 || n > self.entries.len() {
            return Err(Error::NeighbourhoodIndex {
                index: n,
                len: self.entries.len(),
            });
        }
        Ok(&self.entries[n - 1..])
    }

    /// Parses a JSON array of Brandt triples.
    pub fn from_json(s: &str, f: &AtomicFamily) -> Result<Self> {
        let entries: Vec<BrandtElem> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        MSequence::new(entries, f)
    }
}

/// Membership in `U_n(𝒚) = {𝒚} ∪ M_n`.
pub fn mseq_nbhd_contains(seq: &MSequence, n: usize, e: ExtendedElem) -> Result<bool> {
    let tail = seq.tail(n)?;
    Ok(match e {
        ExtendedElem::Adjoined => true,
        ExtendedElem::Inner(inner) => tail.contains(&inner),
    })
}

/// Smallest `n` with `x·M_n = M_n·x = {𝒪}`; `len + 1` when only the empty
/// tail beyond the prefix qualifies.
///
/// Because the indices increase strictly, at most one entry meets `x` on
/// each side.
pub fn annihilating_index(seq: &MSequence, x: BrandtElem) -> usize {
    seq.entries
        .iter()
        .rposition(|&m| !(x * m).is_zero() || !(m * x).is_zero())
        .map_or(1, |p| p + 2)
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

    fn seq() -> MSequence {
        MSequence::new(vec![b("(1;0;2)"), b("(3;1;4)"), b("(5;0;6)")], &f013()).unwrap()
    }

    #[test]
    fn multiply_examples() {
        use ExtendedElem::*;
        assert_eq!(extended_multiply(Adjoined, Adjoined), Inner(BrandtElem::O));
        assert_eq!(
            extended_multiply(Adjoined, Inner(b("(3;1;5)"))),
            Inner(BrandtElem::O)
        );
        assert_eq!(
            extended_multiply(Inner(b("(2;1;4)")), Inner(b("(4;3;5)"))),
            Inner(b("(2;1;5)"))
        );
    }

    #[test]
    fn neighbourhoods() {
        let s = seq();
        assert_eq!(mseq_nbhd_contains(&s, 2, b("(3;1;4)").into()), Ok(true));
        assert_eq!(mseq_nbhd_contains(&s, 3, b("(3;1;4)").into()), Ok(false));
        for n in 1..=3 {
            assert_eq!(mseq_nbhd_contains(&s, n, ExtendedElem::Adjoined), Ok(true));
        }
        assert_eq!(
            mseq_nbhd_contains(&s, 4, ExtendedElem::Adjoined),
            Err(Error::NeighbourhoodIndex { index: 4, len: 3 })
        );
        assert!(mseq_nbhd_contains(&s, 0, ExtendedElem::Adjoined).is_err());
    }

    #[test]
    fn validation() {
        let f = f013();
        assert!(MSequence::new(vec![b("(1;0;2)"), b("(2;0;3)")], &f).is_err());
        assert!(MSequence::new(vec![b("(2;0;2)")], &f).is_err());
        assert!(MSequence::new(vec![b("(1;1;2)"), b("(4;3;3)")], &f).is_err());
        assert!(MSequence::new(vec![b("(3;2;4)")], &f).is_err());
        assert!(MSequence::new(vec![BrandtElem::O], &f).is_err());
        assert!(MSequence::new(Vec::new(), &f).unwrap().is_empty());
        let parsed = MSequence::from_json(
            r#"[{"row":1,"val":0,"col":2},{"row":3,"val":1,"col":4},{"row":5,"val":0,"col":6}]"#,
            &f,
        )
        .unwrap();
        assert_eq!(parsed, seq());
        assert!(MSequence::from_json("[1,2]", &f).unwrap_err().is_parse());
    }

    #[test]
    fn annihilation() {
        let s = seq();
        assert_eq!(annihilating_index(&s, b("(4;0;5)")), 4);
        assert_eq!(annihilating_index(&s, b("(2;0;3)")), 3);
        assert_eq!(annihilating_index(&s, b("(7;0;8)")), 1);
        for x in [b("(4;0;5)"), b("(2;0;3)"), b("(2;1;1)")] {
            let n = annihilating_index(&s, x);
            for &m in &s.entries()[n - 1..] {
                assert!((x * m).is_zero() && (m * x).is_zero());
            }
        }
    }

    #[test]
    fn text_form() {
        assert_eq!("y".parse::<ExtendedElem>(), Ok(ExtendedElem::Adjoined));
        assert_eq!(ExtendedElem::Inner(b("(1;0;2)")).to_string(), "(1;0;2)");
        assert!("z".parse::<ExtendedElem>().is_err());
    }
}
