use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use orbitkit::forms::{
    bform_rank, bform_rank_int, bform_rank_mod, decompose, dyn_subdiagram, is_extensive, nsupp, Field, FormJson, LinearForm,
};
use orbitkit::quattern::is_large;
use orbitkit::{Family, Root, RootSet, RootSystem};
use proptest::prelude::*;

const SYSTEMS: &[(Family, usize)] = &[
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::A, 5),
    (Family::A, 6),
    (Family::B, 2),
    (Family::B, 3),
    (Family::B, 4),
    (Family::B, 5),
    (Family::C, 3),
    (Family::C, 4),
    (Family::C, 5),
    (Family::D, 4),
    (Family::D, 5),
    (Family::D, 6),
];

/// Rank by plain Gaussian elimination over the rationals.
fn reference_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let sub = &factor * &m[rank][k];
                    m[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The full |Phi+| x |Phi+| matrix of B_f built from vector addition of roots.
fn reference_bform(rs: &RootSystem, values: &[(usize, i64)]) -> Vec<Vec<BigRational>> {
    let m = rs.len();
    let mut val = vec![0i64; m];
    for &(i, v) in values {
        val[i] = v;
    }
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let sum: Vec<i8> = rs.root(i).coeffs().iter().zip(rs.root(j).coeffs()).map(|(a, b)| a + b).collect();
                    match rs.index_of(&Root(sum)) {
                        Ok(k) => BigRational::from_integer(BigInt::from(val[k] * rs.nab(i, j) as i64)),
                        Err(_) => BigRational::zero(),
                    }
                })
                .collect()
        })
        .collect()
}

fn random_form() -> impl Strategy<Value = (usize, Vec<(usize, i64)>)> {
    (0..SYSTEMS.len(), prop::collection::vec((0usize..64, (1i64..=9).prop_flat_map(|v| prop_oneof![Just(v), Just(-v)])), 0..8))
}

fn build(sys: usize, raw: &[(usize, i64)]) -> (RootSystem, Vec<(usize, i64)>, LinearForm) {
    let (family, rank) = SYSTEMS[sys];
    let rs = RootSystem::of(family, rank).unwrap();
    let mut vals: Vec<(usize, i64)> = raw.iter().map(|&(i, v)| (i % rs.len(), v)).collect();
    vals.sort_by_key(|p| p.0);
    vals.dedup_by_key(|p| p.0);
    let f = LinearForm::rational(vals.iter().copied());
    (rs, vals, f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rank_is_even_and_matches_reference((sys, raw) in random_form()) {
        let (rs, vals, f) = build(sys, &raw);
        let r = bform_rank(&rs, &f);
        prop_assert_eq!(r % 2, 0);
        prop_assert_eq!(r, reference_rank(reference_bform(&rs, &vals)));
        prop_assert_eq!(r, bform_rank_int(&rs, &vals));
    }

    #[test]
    fn rank_bounds_wd((sys, raw) in random_form()) {
        let (rs, _, f) = build(sys, &raw);
        prop_assert!(bform_rank(&rs, &f) >= dyn_subdiagram(&rs, &f).wd());
    }

    #[test]
    fn sing_bounds_rank_on_abd((sys, raw) in random_form()) {
        let (rs, _, f) = build(sys, &raw);
        prop_assume!(rs.spec().family != Family::C);
        let r = bform_rank(&rs, &f);
        for a in nsupp(&rs, &f).iter() {
            prop_assert!(rs.sing(a).len() <= r, "root {} has |Sing| {} > {}", a + 1, rs.sing(a).len(), r);
        }
    }

    #[test]
    fn nsupp_is_a_large_order_ideal((sys, raw) in random_form()) {
        let (rs, _, f) = build(sys, &raw);
        let ns = nsupp(&rs, &f);
        let by_chain: RootSet = (0..rs.len()).filter(|&a| f.support().iter().any(|b| rs.leq_by_chain(a, b))).collect();
        prop_assert_eq!(ns, by_chain);
        prop_assert!(is_large(&rs, &ns));
    }

    #[test]
    fn decompose_reassembles((sys, raw) in random_form()) {
        let (rs, _, f) = build(sys, &raw);
        let d = decompose(&rs, &f).unwrap();
        prop_assert_eq!(d.reassemble(), f.clone());
        for piece in &d.pieces {
            prop_assert!(piece.form.support().is_subset(&piece.roots));
        }
    }

    #[test]
    fn reduction_mod_p_never_raises_rank((sys, raw) in random_form(), p in prop_oneof![Just(3u64), Just(5), Just(7), Just(11)]) {
        let (rs, vals, f) = build(sys, &raw);
        let mut dense = vec![0u64; rs.len()];
        for &(i, v) in &vals {
            dense[i] = v.rem_euclid(p as i64) as u64;
        }
        let modp = bform_rank_mod(&rs, &dense, p);
        prop_assert!(modp <= bform_rank(&rs, &f));
        prop_assert_eq!(modp, bform_rank(&rs, &LinearForm::modular(p, vals.iter().copied())));
        prop_assert_eq!(modp % 2, 0);
    }

    #[test]
    fn json_round_trip((sys, raw) in random_form()) {
        let (_, _, f) = build(sys, &raw);
        let json = serde_json::to_string(&FormJson::from(&f)).unwrap();
        let back: FormJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(LinearForm::try_from(&back).unwrap(), f);
    }
}

#[test]
fn elementary_rank_is_sing_size() {
    for &(family, rank) in SYSTEMS {
        let rs = RootSystem::of(family, rank).unwrap();
        for a in 0..rs.len() {
            assert_eq!(bform_rank(&rs, &LinearForm::elementary(a)), rs.sing(a).len(), "{} root {}", rs.spec().name(), a + 1);
        }
    }
}

#[test]
fn support_and_nsupp_examples() {
    assert!(LinearForm::zero(Field::Rational).support().is_empty());
    let a2 = RootSystem::of(Family::A, 2).unwrap();
    assert_eq!(LinearForm::elementary(2).support().to_chevie(), [3]);
    assert_eq!(bform_rank(&a2, &LinearForm::elementary(2)), 2);
    assert_eq!(bform_rank(&a2, &LinearForm::elementary(0)), 0);

    let a3 = RootSystem::of(Family::A, 3).unwrap();
    let top = LinearForm::elementary(a3.index_of(&Root::diff(4, 1, 4)).unwrap());
    assert_eq!(nsupp(&a3, &top), a3.all());
    let d = dyn_subdiagram(&a3, &top);
    assert_eq!(d.edges.len(), 2);
    assert!(d.extensive);

    let simple = LinearForm::elementary(a3.index_of(&Root::diff(4, 1, 2)).unwrap());
    assert_eq!(nsupp(&a3, &simple).len(), 1);
    assert!(dyn_subdiagram(&a3, &simple).edges.is_empty());
    assert!(!is_extensive(&a3, &simple));
    assert!(dyn_subdiagram(&a3, &LinearForm::zero(Field::Rational)).edges.is_empty());
}

#[test]
fn d4_family_has_rank_six() {
    let d4 = RootSystem::of(Family::D, 4).unwrap();
    for vals in [[1, 1, 1], [2, -3, 5], [-7, 4, 1], [1, -1, 1]] {
        let f = LinearForm::rational([(7, vals[0]), (8, vals[1]), (9, vals[2])]);
        assert_eq!(f.support().to_chevie(), [8, 9, 10]);
        assert_eq!(bform_rank(&d4, &f), 6);
    }
}

#[test]
fn wd_of_connected_diagrams() {
    for (family, rank, expected) in [(Family::A, 7, 6), (Family::D, 8, 6), (Family::B, 5, 4), (Family::C, 4, 4), (Family::A, 2, 2)] {
        let rs = RootSystem::of(family, rank).unwrap();
        let d = dyn_subdiagram(&rs, &LinearForm::elementary(rs.highest_root()));
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.wd(), expected, "{family}{rank}");
    }
}

#[test]
fn decomposition_examples() {
    let a5 = RootSystem::of(Family::A, 5).unwrap();
    let f = LinearForm::rational([(a5.index_of(&Root::diff(6, 1, 3)).unwrap(), 1), (a5.index_of(&Root::diff(6, 4, 6)).unwrap(), 1)]);
    let d = decompose(&a5, &f).unwrap();
    assert_eq!(d.pieces.len(), 2);
    for p in &d.pieces {
        assert_eq!((p.component.shape.family, p.component.shape.rank), (Family::A, 2));
        assert_eq!(p.roots.len(), 3);
        assert_eq!(p.form.support().len(), 1);
        assert_eq!(bform_rank(&a5, &p.form), 2);
    }
    assert!(d.character.support().is_empty());

    let a3 = RootSystem::of(Family::A, 3).unwrap();
    let f = LinearForm::elementary(a3.index_of(&Root::diff(4, 1, 2)).unwrap());
    let d = decompose(&a3, &f).unwrap();
    assert!(d.pieces.is_empty());
    assert_eq!(d.character, f);

    let d = decompose(&a3, &LinearForm::zero(Field::Rational)).unwrap();
    assert!(d.pieces.is_empty() && d.character.support().is_empty());
}
