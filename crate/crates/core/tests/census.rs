use std::collections::HashSet;

use relcat_core::census::{
    enumerate_frobenius, enumerate_groupoids, enumerate_hstar, enumerate_lcr_semigroupoids, iso_class_count,
    FixtureCorpus,
};
use relcat_core::correspond::{groupoid_to_frob, is_frobenius_morphism, sgpd_to_hstar};
use relcat_core::frobenius::unit_of;
use relcat_core::groupoid::{
    check_groupoid, check_local_cancellativity, check_semigroupoid, is_regular, pseudoinverses, underlying_semigroupoid,
};
use relcat_core::relcore::{Carrier, Rel};
use relcat_core::report::all_pass;
use relcat_core::weakmonoid::{
    check_weak_monoid, check_weak_star, derive_l2, derived_l1, WeakMonoidCandidate, WeakStarCandidate,
};

/// Labelled counts, computed once by the census and an independent script,
/// pinned here as regression values.
#[test]
fn pinned_counts() {
    let frob: Vec<usize> = (0..=3).map(|n| enumerate_frobenius(n).unwrap().count()).collect();
    let hstar: Vec<usize> = (0..=3).map(|n| enumerate_hstar(n).unwrap().count()).collect();
    let lcr: Vec<usize> = (0..=3)
        .map(|n| enumerate_lcr_semigroupoids(n).unwrap().count())
        .collect();
    let gpd: Vec<usize> = (0..=4).map(|n| enumerate_groupoids(n).unwrap().count()).collect();
    assert_eq!(frob, [1, 1, 3, 10]);
    assert_eq!(hstar, [1, 1, 3, 10]);
    assert_eq!(lcr, [1, 1, 3, 10]);
    assert_eq!(gpd, [1, 1, 3, 10, 65]);
}

#[test]
fn isomorphism_classes() {
    for (n, classes) in [(1, 1), (2, 2), (3, 3)] {
        let tables: Vec<_> = enumerate_frobenius(n)
            .unwrap()
            .structures
            .iter()
            .map(|c| c.table().unwrap())
            .collect();
        assert_eq!(iso_class_count(n, &tables), classes, "n = {n}");
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_frobenius(3).unwrap().structures;
    let b = enumerate_frobenius(3).unwrap().structures;
    assert_eq!(a, b);
    let g = enumerate_groupoids(4).unwrap().structures;
    let h = enumerate_groupoids(4).unwrap().structures;
    assert_eq!(g, h);
}

#[test]
fn hstar_contains_frobenius_and_excludes_sl2() {
    for n in 0..=3 {
        let hstar: HashSet<_> = enumerate_hstar(n)
            .unwrap()
            .structures
            .iter()
            .map(|c| c.base().table().unwrap())
            .collect();
        for c in enumerate_frobenius(n).unwrap().structures {
            assert!(hstar.contains(&c.table().unwrap()));
        }
        if n == 2 {
            // SL2 under both labellings of {e, a}
            let sl2 = [Some(0), Some(1), Some(1), Some(1)];
            let sl2_swapped = [Some(0), Some(0), Some(0), Some(1)];
            assert!(!hstar.contains(sl2.as_slice()));
            assert!(!hstar.contains(sl2_swapped.as_slice()));
        }
    }
}

#[test]
fn groupoids_are_regular_and_locally_cancellative() {
    for n in 0..=4 {
        for g in enumerate_groupoids(n).unwrap().structures {
            assert!(all_pass(&check_groupoid(&g)));
            let sg = underlying_semigroupoid(&g).unwrap();
            assert!(all_pass(&check_semigroupoid(&sg)));
            assert!(is_regular(&sg).passed());
            assert!(check_local_cancellativity(&sg).passed(), "{g:?}");
            for f in 0..sg.arrow_count() {
                assert!(pseudoinverses(&sg, f).inverses.contains(&g.inv(f)));
            }
        }
    }
}

/// Going through the semigroupoid side and through the groupoid side gives
/// the same multiplication.
#[test]
fn composite_coherence() {
    for n in 0..=4 {
        for g in enumerate_groupoids(n).unwrap().structures {
            let via_sgpd = sgpd_to_hstar(&underlying_semigroupoid(&g).unwrap()).unwrap();
            let via_gpd = groupoid_to_frob(&g).unwrap();
            assert_eq!(via_sgpd.mult_rel(), via_gpd.mult_rel());
        }
    }
}

#[test]
fn frobenius_algebras_are_weak_monoids_with_trivial_projector() {
    for n in 0..=3 {
        for c in enumerate_frobenius(n).unwrap().structures {
            let x = Carrier::of(c.carrier());
            let w = WeakMonoidCandidate::new(c.carrier().clone(), unit_of(&c).unwrap(), c.mult_rel().clone()).unwrap();
            assert!(all_pass(&check_weak_monoid(&w)));
            let (left, right) = derive_l2(&w);
            assert_eq!(left, Rel::identity(&x));
            assert_eq!(right, Rel::identity(&x));
        }
    }
}

/// `ψ` the inverse map of the associated groupoid.
#[test]
fn inverse_map_gives_weak_star_monoid_with_unit_set() {
    for n in 0..=4 {
        for g in enumerate_groupoids(n).unwrap().structures {
            let c = groupoid_to_frob(&g).unwrap();
            let x = Carrier::of(c.carrier());
            let psi = Rel::graph_of(x.clone(), x, g.inverses()).unwrap();
            let w = WeakStarCandidate::new(c.carrier().clone(), psi, c.mult_rel().clone()).unwrap();
            assert!(all_pass(&check_weak_star(&w)));
            assert_eq!(derived_l1(&w), unit_of(&c).unwrap());
        }
    }
}

#[test]
fn identity_relation_is_a_frobenius_morphism() {
    for c in enumerate_frobenius(3).unwrap().structures {
        let id = Rel::identity(&Carrier::of(c.carrier()));
        assert!(is_frobenius_morphism(&c, &c, &id).unwrap().passed());
    }
    let corpus = FixtureCorpus::new();
    let (z2, z1) = (corpus.frob("Z2").unwrap(), corpus.frob("Z1").unwrap());
    // the map to the trivial group
    let collapse = Rel::graph_of(Carrier::of(z2.carrier()), Carrier::of(z1.carrier()), &[0, 0]).unwrap();
    assert!(is_frobenius_morphism(z2, z1, &collapse).unwrap().passed());
    // vacuously closed
    let empty = Rel::empty(Carrier::of(z2.carrier()), Carrier::of(z2.carrier()));
    assert!(is_frobenius_morphism(z2, z2, &empty).unwrap().passed());
    // (a, a) without the unit pair (e, e)
    let lone = Rel::from_pairs(Carrier::of(z2.carrier()), Carrier::of(z2.carrier()), [(1, 1)]).unwrap();
    assert!(!is_frobenius_morphism(z2, z2, &lone).unwrap().passed());
}
