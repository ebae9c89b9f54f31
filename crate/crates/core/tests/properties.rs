use brandt_omega::brandt::{embed, embed_inverse, in_restricted, BrandtElem};
use brandt_omega::equations::{solve_left, solve_right};
use brandt_omega::family::{AtomicFamily, SupportSet};
use brandt_omega::order::{maximal_chain_down, nat_leq, nat_leq_definitional};
use brandt_omega::semigroup::BElem;
use brandt_omega::topology::{phi, psi};
use proptest::prelude::*;

fn families() -> impl Strategy<Value = AtomicFamily> {
    (
        prop::collection::btree_set(0u64..8, 1..5),
        prop::option::of(5u64..10),
    )
        .prop_map(|(explicit, tail)| {
            let explicit: Vec<u64> = explicit
                .into_iter()
                .filter(|&k| tail.is_none_or(|t| k < t))
                .collect();
            let support = if explicit.is_empty() && tail.is_none() {
                SupportSet::finite([0]).unwrap()
            } else {
                SupportSet::new(explicit, tail).unwrap()
            };
            AtomicFamily::new(support)
        })
}

fn element(f: &AtomicFamily) -> impl Strategy<Value = BElem> {
    let ks: Vec<u64> = f.support().up_to(12).collect();
    prop_oneof![
        1 => Just(BElem::Zero),
        9 => (0u64..10, 0u64..10, prop::sample::select(ks)).prop_map(|(i, j, k)| BElem::triple(i, j, k)),
    ]
}

fn family_and(n: usize) -> impl Strategy<Value = (AtomicFamily, Vec<BElem>)> {
    families().prop_flat_map(move |f| {
        let elems = prop::collection::vec(element(&f), n);
        (Just(f), elems)
    })
}

proptest! {
    #[test]
    fn associative((f, v) in family_and(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert!((a * b).validate(&f).is_ok());
    }

    #[test]
    fn inverse_axioms((_f, v) in family_and(1)) {
        let x = v[0];
        prop_assert_eq!(x * x.inverse() * x, x);
        prop_assert_eq!(x.inverse().inverse(), x);
        prop_assert!((x * x.inverse()).is_idempotent());
    }

    #[test]
    fn embedding_is_homomorphism((f, v) in family_and(2)) {
        let (x, y) = (v[0], v[1]);
        prop_assert_eq!(embed(x * y), embed(x) * embed(y));
        prop_assert!(in_restricted(embed(x), &f));
        prop_assert_eq!(embed_inverse(embed(x), &f).unwrap(), x);
    }

    #[test]
    fn order_forms_agree((f, v) in family_and(2)) {
        let (x, y) = (v[0], v[1]);
        prop_assert_eq!(nat_leq(x, y), nat_leq_definitional(x, y, &f));
        prop_assert!(nat_leq(x, x));
    }

    #[test]
    fn chains_descend((f, v) in family_and(1)) {
        let chain = maximal_chain_down(v[0], &f);
        prop_assert_eq!(*chain.last().unwrap(), BElem::Zero);
        for pair in chain.windows(2) {
            prop_assert!(nat_leq(pair[1], pair[0]) && pair[0] != pair[1]);
        }
        if let BElem::Triple { k, .. } = v[0] {
            prop_assert_eq!(chain.len(), f.support().index_of(k).unwrap() + 2);
        }
    }

    #[test]
    fn solutions_satisfy_and_dualise((f, v) in family_and(2)) {
        let (a, b) = (embed(v[0]), embed(v[1]));
        if let Some(xs) = solve_left(a, b, &f).unwrap().finite() {
            let right = solve_right(a.inverse(), b.inverse(), &f).unwrap();
            for &x in xs {
                prop_assert_eq!(a * x, b);
                prop_assert!(right.contains(x.inverse()));
            }
        }
    }

    #[test]
    fn phi_psi_idempotent((_f, v) in family_and(1)) {
        let x = embed(v[0]);
        prop_assert!(phi(x).is_idempotent() && psi(x).is_idempotent());
        prop_assert_eq!(x * psi(x), x);
    }

    #[test]
    fn translation_is_isomorphism((f, v) in family_and(2), n in 0u64..5) {
        let g = AtomicFamily::new(f.support().translate(n as i64).unwrap());
        let up = |x: BElem| match x {
            BElem::Zero => BElem::Zero,
            BElem::Triple { i, j, k } => BElem::triple(i, j, k + n),
        };
        prop_assert_eq!(up(v[0] * v[1]), up(v[0]) * up(v[1]));
        prop_assert!(up(v[0]).validate(&g).is_ok());
        prop_assert_eq!(g.translate_offset(&f), Some(n as i64));
    }

    #[test]
    fn text_round_trips((f, v) in family_and(1)) {
        let x = v[0];
        prop_assert_eq!(x.to_string().parse::<BElem>().unwrap(), x);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<BElem>(&json).unwrap(), x);
        let e = embed(x);
        prop_assert_eq!(e.to_string().parse::<BrandtElem>().unwrap(), e);
        prop_assert_eq!(f.to_string().parse::<AtomicFamily>().unwrap(), f);
    }
}
