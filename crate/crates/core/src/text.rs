//! Shared helpers for the textual element and neighbourhood grammars.

use crate::error::{Error, Result};
use crate::Nat;

/// Largest natural accepted by the parsers. Keeps sums of a few
/// coordinates far away from `u64` overflow.
pub const MAX_TEXT_NAT: Nat = u32::MAX as Nat;

pub fn parse_nat(s: &str) -> Result<Nat> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("'{s}' is not a natural number")));
    }
    match s.parse::<Nat>() {
        Ok(n) if n <= MAX_TEXT_NAT => Ok(n),
        _ => Err(Error::Parse(format!("'{s}' exceeds {MAX_TEXT_NAT}"))),
    }
}

/// Parses `(a<sep>b<sep>c…)` with exactly `arity` naturals.
pub fn parse_tuple(s: &str, sep: char, arity: usize) -> Result<Vec<Nat>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("'{s}' is not a parenthesised tuple")))?;
    let parts: Vec<&str> = inner.split(sep).collect();
    if parts.len() != arity {
        return Err(Error::Parse(format!(
            "'{s}' must have {arity} components separated by '{sep}'"
        )));
    }
    parts.into_iter().map(parse_nat).collect()
}

/// Splits on `sep` outside parentheses: `"(1;2;3),(4;5;6)"` gives two items.
pub fn split_top_level(s: &str, sep: char) -> Result<Vec<&str>> {
    let mut items = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (idx, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced ')' in '{s}'")))?
            }
            c if c == sep && depth == 0 => {
                items.push(s[start..idx].trim());
                start = idx + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '(' in '{s}'")));
    }
    let last = s[start..].trim();
    if !last.is_empty() || !items.is_empty() {
        items.push(last);
    }
    if items.iter().any(|item| item.is_empty()) {
        return Err(Error::Parse(format!("empty item in list '{s}'")));
    }
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nat_limits() {
        assert_eq!(parse_nat(" 42 "), Ok(42));
        assert!(parse_nat("-1").is_err());
        assert!(parse_nat("4294967296").is_err());
        assert!(parse_nat("99999999999999999999999").is_err());
    }

    #[test]
    fn tuples_and_lists() {
        assert_eq!(parse_tuple("( 1, 2 ,3)", ',', 3), Ok(vec![1, 2, 3]));
        assert!(parse_tuple("(1,2)", ',', 3).is_err());
        assert!(parse_tuple("1,2,3", ',', 3).is_err());
        assert_eq!(
            split_top_level("(1;2;3), (4;5;6)", ','),
            Ok(vec!["(1;2;3)", "(4;5;6)"])
        );
        assert_eq!(split_top_level("", ','), Ok(vec![]));
        assert!(split_top_level("(1,2", ',').is_err());
        assert!(split_top_level("(1;2;3),,(1;1;1)", ',').is_err());
    }
}
