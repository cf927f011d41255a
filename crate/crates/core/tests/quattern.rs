use orbitkit::quattern::{center, is_c_pattern, is_large, make_quattern, truncated_jacobi_holds, zero_dim_locus, Sums};
use orbitkit::{Family, RootSet, RootSystem};
use proptest::prelude::*;

const SYSTEMS: &[(Family, usize)] =
    &[(Family::A, 3), (Family::A, 5), (Family::B, 3), (Family::B, 4), (Family::C, 3), (Family::C, 4), (Family::D, 4), (Family::D, 5)];

/// Smallest C-pattern containing `s`.
fn closure(rs: &RootSystem, mut s: RootSet) -> RootSet {
    loop {
        let mut next = s;
        for a in s.iter() {
            for b in s.iter() {
                if let Some(k) = rs.sum_index(a, b) {
                    next.insert(k);
                }
            }
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

fn random_quattern() -> impl Strategy<Value = (usize, Vec<usize>, u32)> {
    (0..SYSTEMS.len(), prop::collection::vec(0usize..64, 1..6), 1u32..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// A pattern minus its members above a height is a quattern with a nonempty center.
    #[test]
    fn height_truncations_are_quatterns((sys, gens, h) in random_quattern()) {
        let (family, rank) = SYSTEMS[sys];
        let rs = RootSystem::of(family, rank).unwrap();
        let plus = closure(&rs, gens.iter().map(|g| g % rs.len()).collect());
        prop_assert!(is_c_pattern(&rs, &plus));
        let minus: RootSet = plus.iter().filter(|&a| rs.height(a) >= h).collect();
        let q = make_quattern(&rs, plus, minus).unwrap();
        prop_assert!(truncated_jacobi_holds(&rs, &q.x));
        if !q.x.is_empty() {
            prop_assert!(!center(&rs, &q.x).is_empty());
        }
        let sums = Sums::new(&rs);
        prop_assert_eq!(sums.center(&q.x), center(&rs, &q.x));
        prop_assert_eq!(zero_dim_locus(&rs, &q.x), q.x.difference(&sums.inner_sums(&q.x)));
    }

    #[test]
    fn order_ideals_are_large((sys, gens, _h) in random_quattern()) {
        let (family, rank) = SYSTEMS[sys];
        let rs = RootSystem::of(family, rank).unwrap();
        let x = rs.ideal(&gens.iter().map(|g| g % rs.len()).collect());
        prop_assert!(is_large(&rs, &x));
        prop_assert!(make_quattern(&rs, rs.all(), rs.all().difference(&x)).is_ok());
        let z = center(&rs, &x);
        prop_assert!(!z.is_empty());
        prop_assert!(z.iter().all(|a| x.iter().all(|b| !rs.leq(a, b) || a == b)));
    }
}

fn subsets(x: &RootSet) -> impl Iterator<Item = RootSet> + '_ {
    let members: Vec<usize> = x.iter().collect();
    (0u32..1 << members.len()).map(move |mask| members.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &a)| a).collect())
}

/// For a large quattern X with center Z, a support S in X contains Z iff S generates X as an order ideal.
#[test]
fn saturation_is_generation() {
    for (family, rank) in [(Family::A, 3), (Family::B, 3)] {
        let rs = RootSystem::of(family, rank).unwrap();
        let mut checked = 0;
        for x in subsets(&rs.all()).filter(|x| !x.is_empty() && is_large(&rs, x)) {
            let z = center(&rs, &x);
            for s in subsets(&x) {
                assert_eq!(z.is_subset(&s), rs.ideal(&s) == x, "{family}{rank} X = {:?} S = {:?}", x.to_chevie(), s.to_chevie());
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn large_sets_are_exactly_order_ideals() {
    for (family, rank) in [(Family::A, 3), (Family::B, 3), (Family::C, 3)] {
        let rs = RootSystem::of(family, rank).unwrap();
        for x in subsets(&rs.all()) {
            assert_eq!(is_large(&rs, &x), rs.ideal(&x) == x);
        }
    }
}

#[test]
fn examples_on_a3() {
    let rs = RootSystem::of(Family::A, 3).unwrap();
    let top = rs.highest_root();
    assert_eq!(center(&rs, &rs.all()), RootSet::single(top));
    assert_eq!(zero_dim_locus(&rs, &rs.all()), RootSet::full(3));
    let x = rs.supp_d(1);
    assert_eq!(x, rs.all().without(top));
    assert_eq!(center(&rs, &x).len(), 2);
    assert!(is_large(&rs, &x));
}
