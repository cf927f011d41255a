//! C-patterns, C-quatterns, centers and the zero-dimensional locus.
//!
//! A subset `X` of positive roots carries the truncated bracket
//! `[e_a, e_b] = N(a, b) e_{a+b}` when `a + b` lies in `X` and zero otherwise.
//! A C-pattern is a sum-closed subset; a C-quattern is a difference
//! `X_+ \ X_-` of C-patterns with `n_{X_-}` an ideal of `n_{X_+}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

/// Additive structure of a root system, arranged for fast subset queries.
#[derive(Clone, Debug)]
pub struct Sums {
    /// `plus[a]` lists `(b, a + b)` for every positive root `b` with `a + b` a root.
    plus: Vec<Vec<(usize, usize)>>,
    /// `split[k]` lists ordered pairs `(a, b)` with `a + b = k`.
    split: Vec<Vec<(usize, usize)>>,
}

impl Sums {
    pub fn new(rs: &RootSystem) -> Self {
        let m = rs.len();
        let mut plus = vec![Vec::new(); m];
        let mut split = vec![Vec::new(); m];
        for a in 0..m {
            for b in 0..m {
                if let Some(k) = rs.sum_index(a, b) {
                    plus[a].push((b, k));
                    split[k].push((a, b));
                }
            }
        }
        Sums { plus, split }
    }

    /// `(b, a + b)` for all roots `b` with `a + b` a root.
    pub fn plus(&self, a: usize) -> &[(usize, usize)] {
        &self.plus[a]
    }

    /// Ordered decompositions `k = a + b` into positive roots.
    pub fn split(&self, k: usize) -> &[(usize, usize)] {
        &self.split[k]
    }

    /// Whether `a` is central in `x`: no `b` in `x` with `a + b` in `x`.
    pub fn is_central(&self, x: &RootSet, a: usize) -> bool {
        !self.plus[a].iter().any(|&(b, k)| x.contains(b) && x.contains(k))
    }

    /// Z(X) = {a in X : (a + X) cap X is empty}.
    pub fn center(&self, x: &RootSet) -> RootSet {
        x.iter().filter(|&a| self.is_central(x, a)).collect()
    }

    /// Whether `k` is a sum of two members of `x`.
    pub fn is_inner_sum(&self, x: &RootSet, k: usize) -> bool {
        self.split[k].iter().any(|&(a, b)| x.contains(a) && x.contains(b))
    }

    /// Members of `x` that are sums of two members of `x`.
    pub fn inner_sums(&self, x: &RootSet) -> RootSet {
        x.iter().filter(|&k| self.is_inner_sum(x, k)).collect()
    }
}

/// A validated C-quattern, optionally with its witnessing pair of patterns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quattern {
    pub x: RootSet,
    /// `(X_+, X_-)` with `X = X_+ \ X_-`; absent for witness-free construction.
    pub witness: Option<(RootSet, RootSet)>,
}

impl Quattern {
    /// Whether the quattern was built without a witnessing pair.
    pub fn is_flagged(&self) -> bool {
        self.witness.is_none()
    }
}

/// Whether `x` is closed under root addition.
pub fn is_c_pattern(rs: &RootSystem, x: &RootSet) -> bool {
    x.iter().all(|a| x.iter().all(|b| rs.sum_index(a, b).is_none_or(|k| x.contains(k))))
}

/// Validate `X_+ \ X_-` as a C-quattern.
pub fn make_quattern(rs: &RootSystem, plus: RootSet, minus: RootSet) -> Result<Quattern> {
    if !is_c_pattern(rs, &plus) {
        return Err(Error::NotAPattern(format!("X+ = {:?}", plus.to_chevie())));
    }
    if !is_c_pattern(rs, &minus) {
        return Err(Error::NotAPattern(format!("X- = {:?}", minus.to_chevie())));
    }
    if !minus.is_subset(&plus) {
        return Err(Error::NotAPattern("X- is not contained in X+".into()));
    }
    for a in minus.iter() {
        for b in plus.iter() {
            if let Some(k) = rs.sum_index(a, b) {
                if plus.contains(k) && !minus.contains(k) {
                    return Err(Error::IdealConditionViolated(format!(
                        "{} + {} = {} lies in X+ but not in X-",
                        a + 1,
                        b + 1,
                        k + 1
                    )));
                }
            }
        }
    }
    Ok(Quattern { x: plus.difference(&minus), witness: Some((plus, minus)) })
}

/// Witness-free construction: accepts `x` when its truncated bracket satisfies Jacobi.
pub fn make_quattern_unwitnessed(rs: &RootSystem, x: RootSet) -> Result<Quattern> {
    if truncated_jacobi_holds(rs, &x) {
        Ok(Quattern { x, witness: None })
    } else {
        Err(Error::IdealConditionViolated(format!("truncated bracket on {:?} violates Jacobi", x.to_chevie())))
    }
}

/// Jacobi identity for the truncated bracket on `x`.
pub fn truncated_jacobi_holds(rs: &RootSystem, x: &RootSet) -> bool {
    let br = |a: usize, b: usize| -> Option<(usize, i64)> {
        rs.sum_index(a, b).filter(|k| x.contains(*k)).map(|k| (k, rs.nab(a, b) as i64))
    };
    let term = |a: usize, b: usize, c: usize| -> Option<(usize, i64)> {
        let (ab, n1) = br(a, b)?;
        let (abc, n2) = br(ab, c)?;
        Some((abc, n1 * n2))
    };
    let elems: Vec<usize> = x.iter().collect();
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
                for t in [term(a, b, c), term(b, c, a), term(c, a, b)].into_iter().flatten() {
                    *acc.entry(t.0).or_default() += t.1;
                }
                if acc.values().any(|&v| v != 0) {
                    return false;
                }
            }
        }
    }
    true
}

/// Z(X) = {a in X : (a + X) cap X is empty}.
pub fn center(rs: &RootSystem, x: &RootSet) -> RootSet {
    x.iter()
        .filter(|&a| !x.iter().any(|b| rs.sum_index(a, b).is_some_and(|k| x.contains(k))))
        .collect()
}

/// Whether `(Phi+, Phi+ \ X)` is a quattern presentation of `x`.
pub fn is_large(rs: &RootSystem, x: &RootSet) -> bool {
    let all = rs.all();
    let comp = all.difference(x);
    comp.iter().all(|c| all.iter().all(|b| rs.sum_index(c, b).is_none_or(|k| comp.contains(k))))
}

/// The large quattern `x` with its canonical witness `(Phi+, Phi+ \ x)`.
pub fn large_quattern(rs: &RootSystem, x: RootSet) -> Result<Quattern> {
    make_quattern(rs, rs.all(), rs.all().difference(&x))
}

/// X minus every member that is a sum of two members: the support of zero-dimensional orbits.
pub fn zero_dim_locus(rs: &RootSystem, x: &RootSet) -> RootSet {
    x.iter()
        .filter(|&k| !x.iter().any(|a| x.iter().any(|b| rs.sum_index(a, b) == Some(k))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, Root};

    fn idx(rs: &RootSystem, v: &[i8]) -> usize {
        rs.index_of(&Root(v.to_vec())).unwrap()
    }

    #[test]
    fn patterns() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        assert!(is_c_pattern(&rs, &RootSet::EMPTY));
        assert!(is_c_pattern(&rs, &rs.all()));
        let simple: RootSet = [idx(&rs, &[1, -1, 0]), idx(&rs, &[0, 1, -1])].into_iter().collect();
        assert!(!is_c_pattern(&rs, &simple));
    }

    #[test]
    fn quattern_construction() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        let q = make_quattern(&rs, rs.all(), RootSet::EMPTY).unwrap();
        assert_eq!(q.x, rs.all());
        let a1 = RootSet::single(idx(&rs, &[1, -1, 0]));
        assert!(matches!(make_quattern(&rs, rs.all(), a1), Err(Error::IdealConditionViolated(_))));
        let a3 = RootSystem::of(Family::A, 3).unwrap();
        let q = make_quattern(&a3, a3.all(), a3.all().difference(&a3.supp_d(1))).unwrap();
        assert_eq!(q.x, a3.supp_d(1));
    }

    #[test]
    fn centers() {
        let rs = RootSystem::of(Family::A, 3).unwrap();
        assert_eq!(center(&rs, &RootSet::single(2)), RootSet::single(2));
        assert_eq!(center(&rs, &rs.all()), RootSet::single(idx(&rs, &[1, 0, 0, -1])));
        let expect: RootSet = [idx(&rs, &[1, 0, -1, 0]), idx(&rs, &[0, 1, 0, -1])].into_iter().collect();
        assert_eq!(center(&rs, &rs.supp_d(1)), expect);
        let sums = Sums::new(&rs);
        assert_eq!(sums.center(&rs.supp_d(1)), expect);
    }

    #[test]
    fn largeness() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        assert!(is_large(&rs, &rs.all()));
        // NSupp(e*_{e1-e2}) = {e1-e2} is an order ideal, hence large.
        assert!(is_large(&rs, &RootSet::single(idx(&rs, &[1, -1, 0]))));
        assert!(!is_large(&rs, &RootSet::single(idx(&rs, &[1, 0, -1]))));
    }

    #[test]
    fn zero_dim() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        assert_eq!(zero_dim_locus(&rs, &rs.all()), RootSet::full(2));
        let a3 = RootSystem::of(Family::A, 3).unwrap();
        assert_eq!(zero_dim_locus(&a3, &a3.all()), RootSet::full(3));
        let simple = RootSet::full(3);
        assert_eq!(zero_dim_locus(&a3, &simple), simple);
    }

    #[test]
    fn jacobi_on_patterns() {
        let rs = RootSystem::of(Family::B, 3).unwrap();
        assert!(truncated_jacobi_holds(&rs, &rs.all()));
        assert!(make_quattern_unwitnessed(&rs, rs.supp_d(1)).unwrap().is_flagged());
    }
}
