//! The natural partial order on `B_ω^𝓕` and its chains.
//!
//! For nonzero elements, `(i₁,j₁,{k₁}) ≼ (i₂,j₂,{k₂})` iff
//! `k₂ − k₁ = i₁ − i₂ = j₁ − j₂ ≥ 0`. The principal down-set of any element
//! is therefore a finite chain indexed by the support elements below `k`,
//! ending in the zero.

use std::collections::BTreeMap;

use crate::family::AtomicFamily;
use crate::semigroup::BElem;
use crate::Nat;

/// Closed-form order test.
pub fn nat_leq(x: BElem, y: BElem) -> bool {
    match (x, y) {
        (BElem::Zero, _) => true,
        (_, BElem::Zero) => false,
        (
            BElem::Triple {
                i: ix,
                j: jx,
                k: kx,
            },
            BElem::Triple {
                i: iy,
                j: jy,
                k: ky,
            },
        ) => {
            let p = ky as i128 - kx as i128;
            p >= 0 && ix as i128 - iy as i128 == p && jx as i128 - jy as i128 == p
        }
    }
}

/// Searches for an idempotent `e` with `y·e = x`.
///
/// Candidates are `e = 0` and `e = (m, m, {k'})` with `m` up to the largest
/// coordinate of `x` and `y`, and `k'` up to that coordinate plus
/// `max(k_x, k_y)`. Any witness lies in this range: either `m = j_x`, or
/// `m ≤ j_y` with `k' = j_y + k_y − m`.
pub fn order_witness(x: BElem, y: BElem, f: &AtomicFamily) -> Option<BElem> {
    if x == BElem::Zero {
        return Some(BElem::Zero);
    }
    let (
        BElem::Triple {
            i: ix,
            j: jx,
            k: kx,
        },
        BElem::Triple {
            i: iy,
            j: jy,
            k: ky,
        },
    ) = (x, y)
    else {
        return None;
    };
    let top = ix.max(jx).max(iy).max(jy);
    let k_top = top + kx.max(ky);
    (0..=top).find_map(|m| {
        f.support()
            .up_to(k_top)
            .map(|k| BElem::triple(m, m, k))
            .find(|&e| y * e == x)
    })
}

/// The defining order `x ≼ y ⟺ ∃ e ∈ E: x = y·e`, by search.
pub fn nat_leq_definitional(x: BElem, y: BElem, f: &AtomicFamily) -> bool {
    order_witness(x, y, f).is_some()
}

/// Elements directly below `x`: one triple when `k` has a smaller support
/// element, the zero when `k = k₀`, nothing below the zero.
pub fn immediate_predecessors(x: BElem, f: &AtomicFamily) -> Vec<BElem> {
    match x {
        BElem::Zero => Vec::new(),
        BElem::Triple { i, j, k } => match f.support().predecessor(k) {
            Some(below) => {
                let p = k - below;
                vec![BElem::triple(i + p, j + p, below)]
            }
            None => vec![BElem::Zero],
        },
    }
}

/// `x ≻ p(x) ≻ p(p(x)) ≻ ⋯ ≻ 0`, the unique maximal chain below `x`.
///
/// Link `l` is `(i + k − k_l, j + k − k_l, {k_l})`: the shift accumulates
/// from the top.
pub fn maximal_chain_down(x: BElem, f: &AtomicFamily) -> Vec<BElem> {
    let mut chain = vec![x];
    let mut current = x;
    while let Some(&next) = immediate_predecessors(current, f).first() {
        chain.push(next);
        current = next;
    }
    chain
}

/// The chain written with per-link shifts `(i + k_{l+1} − k_l, j + k_{l+1} − k_l, {k_l})`.
///
/// Only the link directly below the top agrees with [`maximal_chain_down`];
/// lower links are in general not comparable to their neighbours. Kept so
/// the difference can be reported.
pub fn per_link_shift_chain(x: BElem, f: &AtomicFamily) -> Vec<BElem> {
    let BElem::Triple { i, j, k } = x else {
        return vec![BElem::Zero];
    };
    let support = f.support();
    let Some(top) = support.index_of(k) else {
        return vec![x, BElem::Zero];
    };
    let mut chain = vec![x];
    for l in (0..top).rev() {
        let (lower, upper) = (support.kth(l).unwrap(), support.kth(l + 1).unwrap());
        let p = upper - lower;
        chain.push(BElem::triple(i + p, j + p, lower));
    }
    chain.push(BElem::Zero);
    chain
}

/// Tally of `|maximal_chain_down(e)|` over the idempotents `(i, i, {k})`
/// with `i ≤ bound`. For an infinite support only `k ≤ bound` is counted.
pub fn idempotent_chain_census(f: &AtomicFamily, bound: Nat) -> BTreeMap<usize, u64> {
    let support = f.support();
    let ks: Vec<Nat> = match support.max() {
        Some(max) => support.up_to(max).collect(),
        None => support.up_to(bound).collect(),
    };
    let mut census = BTreeMap::new();
    for _ in 0..=bound {
        for &k in &ks {
            let length = support.index_of(k).expect("k is a support element") + 2;
            *census.entry(length).or_insert(0) += 1;
        }
    }
    census
}

/// Tally of the maximal chains of the band `E(B_ω^𝓕)`.
///
/// The nonzero idempotents split into diagonals `{(a − k, a − k, {k}) : k ≤ a}`,
/// one per `a ∈ ω`; each diagonal together with the zero is a maximal chain of
/// length `|𝐅 ∩ [0, a]| + 1`. Diagonals `a ≤ bound` are counted. Translating
/// the support by `n` shifts the diagonals by `n`, so this census is an
/// isomorphism invariant up to that shift.
pub fn maximal_chain_census(f: &AtomicFamily, bound: Nat) -> BTreeMap<usize, u64> {
    let mut census = BTreeMap::new();
    for a in 0..=bound {
        let count = f.support().count_up_to(a);
        if count > 0 {
            *census.entry(count + 1).or_insert(0) += 1;
        }
    }
    census
}

/// Idempotents on the diagonals `a ≤ bound` (closed under predecessors),
/// sorted, together with their covering edges `(upper, lower)`.
pub fn idempotent_hasse(f: &AtomicFamily, bound: Nat) -> (Vec<BElem>, Vec<(BElem, BElem)>) {
    let mut nodes = vec![BElem::Zero];
    for i in 0..=bound {
        for k in f.support().up_to(bound - i) {
            nodes.push(BElem::triple(i, i, k));
        }
    }
    nodes.sort();
    let edges = nodes
        .iter()
        .flat_map(|&x| {
            immediate_predecessors(x, f)
                .into_iter()
                .map(move |p| (x, p))
        })
        .collect();
    (nodes, edges)
}
