//! Graphviz rendering of the idempotent order.

use std::fmt::Write;

use crate::family::AtomicFamily;
use crate::order::idempotent_hasse;
use crate::Nat;

/// Hasse diagram of the idempotents on the diagonals `i + k ≤ bound`, edges
/// pointing from each idempotent to its immediate predecessor.
pub fn hasse_dot(f: &AtomicFamily, bound: Nat) -> String {
    let (nodes, edges) = idempotent_hasse(f, bound);
    let mut out = String::new();
    let _ = writeln!(out, "digraph idempotents {{");
    let _ = writeln!(out, "  label=\"E(B_omega^F), support {f}, bound {bound}\";");
    let _ = writeln!(out, "  node [shape=plaintext];");
    for node in &nodes {
        let _ = writeln!(out, "  \"{node}\";");
    }
    for (upper, lower) in &edges {
        let _ = writeln!(out, "  \"{upper}\" -> \"{lower}\";");
    }
    out.push_str("}\n");
    out
}
