use std::collections::BTreeMap;

use orbitkit::counting::count_characters;
use orbitkit::forms::{bform_rank, dyn_subdiagram, LinearForm};
use orbitkit::linalg::{mul_mod, pow_mod};
use orbitkit::oracle::{
    check_characteristic, compare_with_counting, cross_check_action, dim_g, enumerate_orbits, enumerate_orbits_with, family_dim_check,
    generator_action, minimal_p, orbit_partition, rank_census, section_check, support_unions, wd_check, Generators, OracleConfig,
};
use orbitkit::{data, Error, Family, RootSet, RootSystem};

fn rs(family: Family, rank: usize) -> RootSystem {
    RootSystem::of(family, rank).unwrap()
}

#[test]
fn minimal_characteristics() {
    for (f, r, p) in [(Family::A, 2, 3), (Family::A, 3, 5), (Family::B, 2, 5), (Family::C, 2, 5), (Family::A, 4, 5), (Family::B, 3, 7), (Family::C, 3, 7)] {
        let s = rs(f, r);
        assert_eq!(minimal_p(&s), p, "{f}{r}");
        assert!(check_characteristic(&s, p, false).is_ok());
        assert_eq!(dim_g(&s), (r + 2 * s.len()) as u64);
    }
    let a3 = rs(Family::A, 3);
    assert!(matches!(check_characteristic(&a3, 3, false), Err(Error::CharacteristicTooSmall { .. })));
    assert!(matches!(check_characteristic(&a3, 9, false), Err(Error::NotPrime(9))));
    assert!(matches!(check_characteristic(&a3, 5, true), Err(Error::CharacteristicTooSmall { .. })));
    assert!(check_characteristic(&a3, 17, true).is_ok());
}

#[test]
fn heisenberg_census() {
    let c = enumerate_orbits(&rs(Family::A, 2), 5).unwrap();
    assert_eq!(c.by_dimension, BTreeMap::from([(0, 25), (2, 4)]));
    assert!(c.partition_identity());
    let r = rank_census(&rs(Family::A, 2), 5).unwrap();
    assert_eq!(r.by_rank.get(&2), Some(&100));
    assert_eq!(r.orbit_census().unwrap().by_dimension, c.by_dimension);
}

#[test]
fn simple_generators_give_the_same_orbits() {
    for (f, r, p) in [(Family::A, 2, 3), (Family::A, 2, 5), (Family::B, 2, 5)] {
        let s = rs(f, r);
        let all = enumerate_orbits(&s, p).unwrap();
        let simple = enumerate_orbits_with(&s, p, &OracleConfig { generators: Generators::Simple, ..Default::default() }).unwrap();
        assert_eq!(all, simple, "{f}{r} p = {p}");
    }
}

#[test]
fn generator_actions_match_the_matrix_realization() {
    for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::C, 2), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
        let s = rs(f, r);
        assert!(cross_check_action(&s, minimal_p(&s)).unwrap(), "{f}{r}");
    }
}

/// The action is by group automorphisms: x(s) x(t) = x(s + t) and x(t) is invertible.
#[test]
fn one_parameter_subgroups() {
    let s = rs(Family::B, 2);
    let p = 5;
    let n = s.len();
    let mul = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Vec<Vec<u64>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).fold(0, |acc, k| (acc + mul_mod(a[i][k], b[k][j], p)) % p)).collect()).collect()
    };
    for alpha in 0..n {
        for t in 0..p {
            for u in 0..p {
                let lhs = mul(&generator_action(&s, p, alpha, t).unwrap(), &generator_action(&s, p, alpha, u).unwrap());
                assert_eq!(lhs, generator_action(&s, p, alpha, (t + u) % p).unwrap());
            }
        }
    }
    assert_eq!(pow_mod(2, p - 1, p), 1);
}

#[test]
fn enumeration_matches_rank_census() {
    for (f, r, p) in [(Family::A, 2, 3), (Family::A, 2, 5), (Family::B, 2, 5), (Family::C, 2, 5), (Family::A, 3, 5)] {
        let s = rs(f, r);
        let enumerated = enumerate_orbits(&s, p).unwrap();
        let ranked = rank_census(&s, p).unwrap().orbit_census().unwrap();
        assert_eq!(enumerated, ranked, "{f}{r} p = {p}");
        assert!(enumerated.partition_identity());
    }
}

/// Orbit counts per dimension equal O_e(p), and the total equals the sum over e.
#[test]
fn counting_agrees_with_brute_force() {
    let cases = [(Family::A, 2, 3), (Family::A, 2, 5), (Family::B, 2, 5), (Family::A, 3, 5), (Family::B, 3, 7), (Family::C, 3, 7)];
    for (f, r, p) in cases {
        let s = rs(f, r);
        let census = if (p as u128).pow(s.len() as u32) <= orbitkit::oracle::DEFAULT_BUDGET {
            enumerate_orbits(&s, p).unwrap()
        } else {
            rank_census(&s, p).unwrap().orbit_census().unwrap()
        };
        let agreement = compare_with_counting(s.spec(), &census).unwrap();
        assert!(agreement.passed(), "{f}{r} p = {p}: {:?}", agreement.rows);
        assert_eq!(agreement.mass_identity, Some(true));
        for e in 0..=3 {
            let expected = count_characters(f, r, e).unwrap().eval_q(p as i128);
            assert_eq!(census.count(2 * e) as i128, expected, "{f}{r} p = {p} e = {e}");
        }
        let total: i128 = (0..=3).map(|e| count_characters(f, r, e).unwrap().eval_q(p as i128)).sum();
        assert_eq!(census.total_orbits as i128, total);
    }
}

#[test]
fn a4_agrees_up_to_dimension_six() {
    let s = rs(Family::A, 4);
    let census = rank_census(&s, 7).unwrap().orbit_census().unwrap();
    assert!(census.partition_identity());
    assert_eq!(census.count(8), 36);
    let agreement = compare_with_counting(s.spec(), &census).unwrap();
    assert!(agreement.passed());
    assert_eq!(agreement.mass_identity, None);
    let census = rank_census(&s, 5).unwrap().orbit_census().unwrap();
    assert!(compare_with_counting(s.spec(), &census).unwrap().passed());
}

#[test]
fn supports_of_orbits() {
    for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::C, 2), (Family::B, 3), (Family::C, 3), (Family::A, 4)] {
        let s = rs(f, r);
        for row in support_unions(&s, minimal_p(&s), &OracleConfig::default()).unwrap() {
            assert!(row.ok, "{f}{r} d = {}: {:?} vs {:?}", row.d, row.union.to_chevie(), row.expected.to_chevie());
        }
    }
}

#[test]
fn orbit_dimension_bounds_wd() {
    for (f, r, p) in [(Family::A, 3, 5), (Family::B, 2, 5)] {
        let s = rs(f, r);
        let part = orbit_partition(&s, p, &OracleConfig::default()).unwrap();
        assert!(wd_check(&s, &part).passed());
        for st in (0..part.num_states() as u32).step_by(37) {
            let form = part.decode(st);
            assert_eq!(part.encode(&form), st);
            let lf = LinearForm::modular(p, form.iter().enumerate().map(|(i, &v)| (i, v as i64)));
            assert_eq!(part.dim_of(st), bform_rank(&s, &lf));
            assert!(part.dim_of(st) >= dyn_subdiagram(&s, &lf).wd());
        }
    }
}

#[test]
fn budget_is_enforced() {
    let s = rs(Family::A, 4);
    assert!(matches!(enumerate_orbits(&s, 7), Err(Error::BudgetExceeded { .. })));
    let tight = OracleConfig { budget: 100, ..Default::default() };
    assert!(matches!(enumerate_orbits_with(&rs(Family::A, 2), 5, &tight), Err(Error::BudgetExceeded { .. })));
}

#[test]
fn published_dimension_two_strings_are_sections() {
    for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::B, 2)] {
        let s = rs(f, r);
        let strings = data::paper_strings(s.spec(), 2).unwrap().unwrap();
        let rep = section_check(&s, minimal_p(&s), &strings, 2).unwrap();
        assert!(rep.passed, "{f}{r}: {rep:?}");
        assert_eq!(rep.met_once, rep.orbits);
    }
    let a2 = rs(Family::A, 2);
    let rep = section_check(&a2, 5, &["LAS"], 2).unwrap();
    assert!(rep.passed);
    assert_eq!((rep.orbits, rep.points), (4, 4));
    let empty: [&str; 0] = [];
    assert!(!section_check(&a2, 5, &empty, 2).unwrap().passed);
}

#[test]
fn d4_families() {
    let d4 = rs(Family::D, 4);
    for chevie in [vec![8, 9, 10], vec![3, 8, 9, 10]] {
        let support: RootSet = chevie.iter().map(|c| c - 1).collect();
        let rep = family_dim_check(&d4, &support, 7, 6).unwrap();
        assert!(rep.passed, "{chevie:?}: {:?}", rep.ranks);
        assert_eq!(rep.ranks.values().sum::<u64>(), 6u64.pow(chevie.len() as u32));
    }
    let rep = family_dim_check(&d4, &RootSet::single(0), 7, 0).unwrap();
    assert!(rep.passed);
    assert!(!family_dim_check(&d4, &[7, 8, 9].into_iter().collect(), 7, 4).unwrap().passed);
}
