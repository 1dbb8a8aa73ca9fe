use std::collections::BTreeSet;

use proptest::prelude::*;
use relcat_core::relcore::{compose, dagger, pairs, product, Carrier, FinSet, Rel};

fn carrier(name: &str, n: usize) -> Carrier {
    Carrier::of(&FinSet::numbered(name, n).into_arc())
}

fn rel(source: &Carrier, target: &Carrier, bits: &[bool]) -> Rel {
    let cols = target.len();
    let pairs = bits
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| (i / cols, i % cols));
    Rel::from_pairs(source.clone(), target.clone(), pairs).unwrap()
}

/// Three sizes and random relations `A ⇒ B ⇒ C ⇒ D`.
fn chain() -> impl Strategy<Value = (Vec<usize>, Vec<Vec<bool>>)> {
    prop::collection::vec(0usize..6, 4).prop_flat_map(|sizes| {
        let rels = (0..3)
            .map(|i| prop::collection::vec(any::<bool>(), sizes[i] * sizes[i + 1]))
            .collect::<Vec<_>>();
        (Just(sizes), rels)
    })
}

fn build(sizes: &[usize], bits: &[Vec<bool>]) -> (Vec<Carrier>, Vec<Rel>) {
    let cs: Vec<Carrier> = sizes
        .iter()
        .enumerate()
        .map(|(i, &n)| carrier(&format!("S{i}"), n))
        .collect();
    let rs = (0..3).map(|i| rel(&cs[i], &cs[i + 1], &bits[i])).collect();
    (cs, rs)
}

proptest! {
    #[test]
    fn composition_is_associative_and_unital((sizes, bits) in chain()) {
        let (cs, r) = build(&sizes, &bits);
        let left = compose(&compose(&r[0], &r[1]).unwrap(), &r[2]).unwrap();
        let right = compose(&r[0], &compose(&r[1], &r[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(compose(&Rel::identity(&cs[0]), &r[0]).unwrap(), r[0].clone());
        prop_assert_eq!(compose(&r[0], &Rel::identity(&cs[1])).unwrap(), r[0].clone());
    }

    #[test]
    fn dagger_is_a_contravariant_involution((sizes, bits) in chain()) {
        let (_, r) = build(&sizes, &bits);
        prop_assert_eq!(dagger(&dagger(&r[0])), r[0].clone());
        let fg = compose(&r[0], &r[1]).unwrap();
        prop_assert_eq!(dagger(&fg), compose(&dagger(&r[1]), &dagger(&r[0])).unwrap());
    }

    #[test]
    fn product_is_functorial((s1, b1) in chain(), (s2, b2) in chain()) {
        let (_, r) = build(&s1, &b1);
        let (_, q) = build(&s2, &b2);
        // (f×g);(h×k) = (f;h)×(g;k)
        let left = compose(&product(&r[0], &q[0]), &product(&r[1], &q[1])).unwrap();
        let right = product(&compose(&r[0], &r[1]).unwrap(), &compose(&q[0], &q[1]).unwrap());
        prop_assert_eq!(left, right);
        prop_assert_eq!(dagger(&product(&r[0], &q[0])), product(&dagger(&r[0]), &dagger(&q[0])));
    }

    #[test]
    fn matrix_kernel_matches_pair_sets((sizes, bits) in chain()) {
        let (_, r) = build(&sizes, &bits);
        let ps: Vec<BTreeSet<(usize, usize)>> = r.iter().map(Rel::to_pair_set).collect();
        prop_assert_eq!(compose(&r[0], &r[1]).unwrap().to_pair_set(), pairs::compose(&ps[0], &ps[1]));
        prop_assert_eq!(dagger(&r[2]).to_pair_set(), pairs::dagger(&ps[2]));
        let c_len = r[2].source().len();
        let d_len = r[2].target().len();
        prop_assert_eq!(product(&r[0], &r[2]).to_pair_set(), pairs::product(&ps[0], &ps[2], c_len, d_len));
    }
}

#[test]
fn type_mismatch_is_rejected() {
    let a = carrier("A", 2);
    let b = carrier("B", 2);
    let f = Rel::identity(&a);
    let g = Rel::identity(&b);
    assert!(compose(&f, &g).is_err());
}

/// Every triple of relations on a two-element set.
#[test]
fn exhaustive_laws_on_two_elements() {
    let x = carrier("X", 2);
    let all: Vec<Rel> = (0u8..16)
        .map(|m| rel(&x, &x, &(0..4).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()))
        .collect();
    let id = Rel::identity(&x);
    for f in &all {
        assert_eq!(&compose(&id, f).unwrap(), f);
        assert_eq!(dagger(&dagger(f)), *f);
        for g in &all {
            let fg = compose(f, g).unwrap();
            assert_eq!(fg.to_pair_set(), pairs::compose(&f.to_pair_set(), &g.to_pair_set()));
            assert_eq!(dagger(&fg), compose(&dagger(g), &dagger(f)).unwrap());
            for h in &all {
                assert_eq!(compose(&fg, h).unwrap(), compose(f, &compose(g, h).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn dense_product_of_large_carriers_matches_reference() {
    // crosses 64-bit word boundaries in both factors
    let a = carrier("A", 70);
    let b = carrier("B", 3);
    let bits_a: Vec<bool> = (0..70 * 70).map(|i| (i * 7 + i / 70) % 5 == 0).collect();
    let bits_b: Vec<bool> = (0..9).map(|i| i % 2 == 0).collect();
    let r = rel(&a, &a, &bits_a);
    let s = rel(&b, &b, &bits_b);
    let reference = pairs::product(&r.to_pair_set(), &s.to_pair_set(), 3, 3);
    assert_eq!(product(&r, &s).to_pair_set(), reference);
    let rr = compose(&r, &r).unwrap();
    assert_eq!(rr.to_pair_set(), pairs::compose(&r.to_pair_set(), &r.to_pair_set()));
}
