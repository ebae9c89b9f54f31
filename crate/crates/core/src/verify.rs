//! Exhaustive checks over bounded universes.
//!
//! Elements are visited in sorted order and every sweep stops at its first
//! failure, so counterexamples are lexicographically first and reports are
//! reproducible.

use std::collections::BTreeMap;

use crate::brandt::{embed, verify_embedding_homomorphism, verify_restricted_closed, BrandtElem};
use crate::error::{Error, Result};
use crate::family::{are_translate_equivalent, AtomicFamily};
use crate::order::{
    maximal_chain_census, maximal_chain_down, nat_leq, nat_leq_definitional, per_link_shift_chain,
};
use crate::report::{Sweep, VerificationReport};
use crate::semigroup::BElem;
use crate::topology::ExtendedElem;
use crate::universe::BoundedUniverse;
use crate::{InverseElement, Nat};

/// `(a·b)·c = a·(b·c)` for all triples of the universe.
pub fn check_associativity<E: InverseElement>(universe: &BoundedUniverse<E>) -> VerificationReport {
    check_associativity_with(universe.elements(), |a, b| a * b)
}

/// Associativity of an arbitrary operation on `elements`, in list order.
pub fn check_associativity_with<E, F>(elements: &[E], op: F) -> VerificationReport
where
    E: Copy + Eq + std::fmt::Display,
    F: Fn(E, E) -> E,
{
    let mut sweep = Sweep::new();
    for &a in elements {
        for &b in elements {
            let ab = op(a, b);
            for &c in elements {
                let ok = op(ab, c) == op(a, op(b, c));
                if !sweep.check(ok, || vec![a.to_string(), b.to_string(), c.to_string()]) {
                    return sweep.finish("(a·b)·c ≠ a·(b·c)");
                }
            }
        }
    }
    sweep.finish(format!("{} elements", elements.len()))
}

/// `x·x⁻¹·x = x`, `x⁻¹·x·x⁻¹ = x⁻¹`, and idempotents commute.
pub fn check_inverse_axioms<E: InverseElement>(
    universe: &BoundedUniverse<E>,
) -> VerificationReport {
    let mut sweep = Sweep::new();
    for &x in universe.elements() {
        let inv = x.inverse();
        if !sweep.check(x * inv * x == x, || vec![x.to_string()]) {
            return sweep.finish("x·x⁻¹·x ≠ x");
        }
        if !sweep.check(inv * x * inv == inv, || vec![x.to_string()]) {
            return sweep.finish("x⁻¹·x·x⁻¹ ≠ x⁻¹");
        }
    }
    let idempotents: Vec<E> = universe
        .elements()
        .iter()
        .copied()
        .filter(|e| e.is_idempotent())
        .collect();
    for &e in &idempotents {
        for &g in &idempotents {
            if !sweep.check(e * g == g * e, || vec![e.to_string(), g.to_string()]) {
                return sweep.finish("idempotents do not commute");
            }
        }
    }
    sweep.finish(format!("{} idempotents commute", idempotents.len()))
}

/// The zero absorbs every element on both sides.
pub fn check_zero_absorbing<E: InverseElement>(
    universe: &BoundedUniverse<E>,
) -> VerificationReport {
    let mut sweep = Sweep::new();
    for &x in universe.elements() {
        if !sweep.check(E::ZERO * x == E::ZERO && x * E::ZERO == E::ZERO, || {
            vec![x.to_string()]
        }) {
            return sweep.finish("zero does not absorb");
        }
    }
    sweep.finish("")
}

/// The closed-form order agrees with the definitional one on all pairs.
pub fn check_order_equivalence(universe: &BoundedUniverse<BElem>) -> VerificationReport {
    let f = universe.family();
    let mut sweep = Sweep::new();
    for &x in universe.elements() {
        for &y in universe.elements() {
            let ok = nat_leq(x, y) == nat_leq_definitional(x, y, f);
            if !sweep.check(ok, || vec![x.to_string(), y.to_string()]) {
                return sweep.finish("closed-form and definitional order disagree");
            }
        }
    }
    sweep.finish("")
}

/// The translation `B_ω^{𝓕₁} ≅ B_ω^{𝓕₂}` for `𝐅₁ = n + 𝐅₂`.
///
/// The family with the larger minimum is mapped down by `d = |n|` via
/// `(i, j, {k}) ↦ (i, j, {k − d})`. Checked: image validity, the
/// homomorphism property, that the inverse map round-trips on the target
/// universe, and that in Brandt coordinates the map subtracts `d` from all
/// three coordinates.
pub fn check_isomorphism_transport(
    f1: &AtomicFamily,
    f2: &AtomicFamily,
    bound: Nat,
) -> Result<VerificationReport> {
    let n = are_translate_equivalent(f1, f2).ok_or(Error::NotTranslateEquivalent)?;
    let (source, target) = if n >= 0 { (f1, f2) } else { (f2, f1) };
    let d = n.unsigned_abs();
    let down = |x: BElem| match x {
        BElem::Zero => BElem::Zero,
        BElem::Triple { i, j, k } => BElem::triple(i, j, k - d),
    };
    let up = |x: BElem| match x {
        BElem::Zero => BElem::Zero,
        BElem::Triple { i, j, k } => BElem::triple(i, j, k + d),
    };
    let shift = |e: BrandtElem| match e {
        BrandtElem::O => BrandtElem::O,
        BrandtElem::Triple { row, val, col } => BrandtElem::triple(row - d, val - d, col - d),
    };
    let universe = BoundedUniverse::semigroup(source, bound);
    let mut sweep = Sweep::new();
    for &x in universe.elements() {
        let image = down(x);
        let ok = image.validate(target).is_ok() && embed(image) == shift(embed(x));
        if !sweep.check(ok, || vec![x.to_string(), image.to_string()]) {
            return Ok(sweep.finish("image invalid or not the Brandt shift"));
        }
    }
    for &x in universe.elements() {
        for &y in universe.elements() {
            if !sweep.check(down(x * y) == down(x) * down(y), || {
                vec![x.to_string(), y.to_string()]
            }) {
                return Ok(sweep.finish("translation is not a homomorphism"));
            }
        }
    }
    for &y in BoundedUniverse::semigroup(target, bound).elements() {
        let pre = up(y);
        if !sweep.check(pre.validate(source).is_ok() && down(pre) == y, || {
            vec![y.to_string()]
        }) {
            return Ok(sweep.finish("translation is not onto"));
        }
    }
    Ok(sweep.finish(format!("n={n}: ({source}) → ({target}) by k ↦ k − {d}")))
}

/// First chain length at which two censuses differ, with both counts.
pub fn census_divergence(
    a: &BTreeMap<usize, u64>,
    b: &BTreeMap<usize, u64>,
) -> Option<(usize, u64, u64)> {
    a.keys()
        .chain(b.keys())
        .copied()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .map(|len| {
            (
                len,
                a.get(&len).copied().unwrap_or(0),
                b.get(&len).copied().unwrap_or(0),
            )
        })
        .find(|(_, x, y)| x != y)
}

fn census_text(c: &BTreeMap<usize, u64>) -> String {
    let parts: Vec<String> = c.iter().map(|(l, n)| format!("{l}:{n}")).collect();
    format!("{{{}}}", parts.join(" "))
}

/// Maximal-chain censuses as an isomorphism invariant.
///
/// Translate-equivalent families (`𝐅₁ = n + 𝐅₂`) must have equal censuses
/// at bounds differing by `n`. Other families are normalised and must
/// differ at the same `bound`; the first differing length is reported.
pub fn check_chain_census_invariance(
    f1: &AtomicFamily,
    f2: &AtomicFamily,
    bound: Nat,
) -> VerificationReport {
    match are_translate_equivalent(f1, f2) {
        Some(n) => {
            let d = n.unsigned_abs();
            let (b1, b2) = if n >= 0 {
                (bound + d, bound)
            } else {
                (bound, bound + d)
            };
            let (c1, c2) = (maximal_chain_census(f1, b1), maximal_chain_census(f2, b2));
            let note = format!(
                "n={n}: bound {b1} {} vs bound {b2} {}",
                census_text(&c1),
                census_text(&c2)
            );
            match census_divergence(&c1, &c2) {
                None => VerificationReport::pass(1, note),
                Some((len, x, y)) => VerificationReport::fail(
                    1,
                    vec![f1.to_string(), f2.to_string()],
                    format!("{note}; length {len}: {x} vs {y}"),
                ),
            }
        }
        None => {
            let (g1, g2) = (f1.normalize().0, f2.normalize().0);
            let (c1, c2) = (
                maximal_chain_census(&g1, bound),
                maximal_chain_census(&g2, bound),
            );
            match census_divergence(&c1, &c2) {
                Some((len, x, y)) => VerificationReport::pass(
                    1,
                    format!("not equivalent; censuses diverge at length {len}: {x} vs {y}"),
                ),
                None => VerificationReport::fail(
                    1,
                    vec![f1.to_string(), f2.to_string()],
                    format!(
                        "not equivalent but censuses agree up to bound {bound}: {}",
                        census_text(&c1)
                    ),
                ),
            }
        }
    }
}

/// Every maximal chain below a nonzero element has length `index(k) + 2`
/// and consecutive links are strictly ordered. The note counts the
/// elements on which the per-link shift formula gives a different chain.
pub fn check_chain_structure(f: &AtomicFamily, bound: Nat) -> VerificationReport {
    let universe = BoundedUniverse::semigroup(f, bound);
    let mut sweep = Sweep::new();
    let mut differing = 0u64;
    let mut first_differing = None;
    for &x in universe.elements() {
        let BElem::Triple { k, .. } = x else { continue };
        let chain = maximal_chain_down(x, f);
        let index = f
            .support()
            .index_of(k)
            .expect("universe elements are valid");
        if !sweep.check(chain.len() == index + 2, || vec![x.to_string()]) {
            return sweep.finish("chain length is not index(k) + 2");
        }
        for pair in chain.windows(2) {
            let ok = pair[0] != pair[1] && nat_leq(pair[1], pair[0]);
            if !sweep.check(ok, || vec![pair[0].to_string(), pair[1].to_string()]) {
                return sweep.finish("consecutive links are not strictly ordered");
            }
        }
        if per_link_shift_chain(x, f) != chain {
            differing += 1;
            first_differing.get_or_insert(x);
        }
    }
    let note = match first_differing {
        None => "per-link shift formula agrees everywhere".to_string(),
        Some(x) => {
            let printed: Vec<String> = per_link_shift_chain(x, f)
                .iter()
                .map(ToString::to_string)
                .collect();
            format!(
                "per-link shift formula differs on {differing} elements, first {x}: {}",
                printed.join(" ")
            )
        }
    };
    sweep.finish(note)
}

/// The five checks behind `verify`, in a fixed order: associativity,
/// inverse axioms and order equivalence on `B_ω^𝓕`, then the embedding and
/// restricted-closure checks.
pub fn verification_suite(f: &AtomicFamily, bound: Nat) -> Vec<(&'static str, VerificationReport)> {
    let universe = BoundedUniverse::semigroup(f, bound);
    vec![
        ("associativity", check_associativity(&universe)),
        ("inverse-axioms", check_inverse_axioms(&universe)),
        ("order-equivalence", check_order_equivalence(&universe)),
        ("embedding", verify_embedding_homomorphism(f, bound)),
        ("restricted-closure", verify_restricted_closed(f, bound)),
    ]
}

/// The suite as a JSON array of reports, each with an added `check` name.
pub fn verification_suite_json(suite: &[(&'static str, VerificationReport)]) -> serde_json::Value {
    serde_json::Value::Array(
        suite
            .iter()
            .map(|(name, report)| {
                let mut value = serde_json::to_value(report).expect("reports serialize");
                value["check"] = serde_json::Value::from(*name);
                value
            })
            .collect(),
    )
}

/// Restricted universe plus the adjoined annihilator `𝒚`.
pub fn extended_universe(f: &AtomicFamily, bound: Nat) -> Vec<ExtendedElem> {
    let mut elements: Vec<ExtendedElem> = BoundedUniverse::restricted(f, bound)
        .elements()
        .iter()
        .map(|&e| ExtendedElem::Inner(e))
        .collect();
    elements.push(ExtendedElem::Adjoined);
    elements
}

/// Associativity with `𝒚` adjoined, and `𝒚` annihilating everything.
pub fn check_extension_associativity(f: &AtomicFamily, bound: Nat) -> VerificationReport {
    let elements = extended_universe(f, bound);
    let zero = ExtendedElem::Inner(BrandtElem::O);
    let mut sweep = Sweep::new();
    for &x in &elements {
        let ok = x * ExtendedElem::Adjoined == zero && ExtendedElem::Adjoined * x == zero;
        if !sweep.check(ok, || vec![x.to_string()]) {
            return sweep.finish("y does not annihilate");
        }
    }
    VerificationReport::all(
        [
            sweep.finish(""),
            check_associativity_with(&elements, |a, b| a * b),
        ],
        "y annihilates",
    )
}
