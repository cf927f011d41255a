//! Move primitives on compact search states.

use std::collections::BTreeMap;

use super::AlMove;
use crate::quattern::Sums;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

/// Search state: undecided letters `q` and saturated letters `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Node {
    pub q: RootSet,
    pub s: RootSet,
}

impl Node {
    pub fn x(&self) -> RootSet {
        self.q.union(&self.s)
    }
}

/// A root system prepared for the classification search.
#[derive(Clone, Debug)]
pub struct Classifier<'a> {
    rs: &'a RootSystem,
    sums: Sums,
    /// Sums of adjacent simple roots; an extensive quattern contains all of them.
    edge_sums: RootSet,
}

impl<'a> Classifier<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let edge_sums = rs.dynkin_edges().iter().filter_map(|&(a, b)| rs.sum_index(a, b)).collect();
        Classifier { rs, sums: Sums::new(rs), edge_sums }
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn sums(&self) -> &Sums {
        &self.sums
    }

    /// Sums of adjacent simple roots.
    pub fn edge_sums(&self) -> RootSet {
        self.edge_sums
    }

    /// Lowest undecided root that is central in the quattern.
    pub(crate) fn split_point(&self, n: Node) -> Option<usize> {
        let x = n.x();
        n.q.iter().find(|&a| self.sums.is_central(&x, a))
    }

    /// AL-moves with saturated `gamma`, ordered by `(gamma, leg, arm)`.
    pub fn candidates(&self, q: RootSet, s: RootSet) -> Vec<AlMove> {
        let x = q.union(&s);
        let mut out = Vec::new();
        for gamma in s.iter() {
            for &(leg, arm) in self.sums.split(gamma) {
                if q.contains(leg) && q.contains(arm) && self.is_valid(&x, gamma, arm, leg) {
                    out.push(AlMove { gamma, arm, leg });
                }
            }
        }
        out
    }

    /// First AL-move in `(gamma, leg, arm)` order.
    pub(crate) fn first_candidate(&self, n: Node) -> Option<AlMove> {
        let x = n.x();
        for gamma in n.s.iter() {
            for &(leg, arm) in self.sums.split(gamma) {
                if n.q.contains(leg) && n.q.contains(arm) && self.is_valid(&x, gamma, arm, leg) {
                    return Some(AlMove { gamma, arm, leg });
                }
            }
        }
        None
    }

    /// The two set conditions of an AL-move inside the quattern `x`.
    pub(crate) fn is_valid(&self, x: &RootSet, gamma: usize, arm: usize, leg: usize) -> bool {
        !self.sums.is_inner_sum(x, leg)
            && self.sums.plus(arm).iter().all(|&(b, k)| !(x.contains(b) && x.contains(k)) || k == gamma)
    }

    pub(crate) fn apply(&self, n: Node, m: AlMove) -> Node {
        Node { q: n.q.without(m.arm).without(m.leg), s: n.s }
    }

    /// Leaf estimate: 2 when some saturated root is a sum inside the quattern, else 0.
    pub(crate) fn leaf_bound(&self, n: Node) -> u32 {
        let x = n.x();
        if n.s.iter().any(|z| self.sums.is_inner_sum(&x, z)) {
            2
        } else {
            0
        }
    }

    /// Largest `|W|` found, within `budget` subsets, such that the Pfaffian of B_f on `W`
    /// is a nonzero monomial in the saturated coordinates; B_f then has rank at least `|W|`
    /// on every form of the node.
    pub(crate) fn certified_rank(&self, n: Node, budget: usize) -> u32 {
        let x = n.x();
        let mut verts: Vec<usize> = x.iter().filter(|&a| self.sums.plus(a).iter().any(|&(b, k)| x.contains(b) && n.s.contains(k))).collect();
        verts.sort_unstable();
        let mut search = PfaffianSearch { c: self, x, s: n.s, verts: &verts, budget, best: 0, chosen: Vec::new() };
        search.go(0);
        search.best
    }
}

/// Polynomial in the saturated coordinates: sorted multiset of roots to coefficient.
type Poly = BTreeMap<Vec<usize>, i64>;

struct PfaffianSearch<'c, 'a, 'v> {
    c: &'c Classifier<'a>,
    x: RootSet,
    s: RootSet,
    verts: &'v [usize],
    budget: usize,
    best: u32,
    chosen: Vec<usize>,
}

impl PfaffianSearch<'_, '_, '_> {
    fn go(&mut self, from: usize) {
        if self.budget == 0 {
            return;
        }
        self.budget -= 1;
        let size = self.chosen.len() as u32;
        if size > self.best && size % 2 == 0 && self.is_monomial() {
            self.best = size;
        }
        if size + (self.verts.len() - from) as u32 <= self.best {
            return;
        }
        for i in from..self.verts.len() {
            let v = self.verts[i];
            let clash = self.chosen.iter().any(|&w| self.c.rs.sum_index(v, w).is_some_and(|k| self.x.contains(k) && !self.s.contains(k)));
            if !clash {
                self.chosen.push(v);
                self.go(i + 1);
                self.chosen.pop();
            }
        }
    }

    fn is_monomial(&self) -> bool {
        let p = self.pfaffian(&self.chosen);
        p.len() == 1 && p.values().all(|&c| c != 0)
    }

    fn pfaffian(&self, w: &[usize]) -> Poly {
        let mut out = Poly::new();
        if w.is_empty() {
            out.insert(Vec::new(), 1);
            return out;
        }
        let a = w[0];
        for j in 1..w.len() {
            let Some(k) = self.c.rs.sum_index(a, w[j]).filter(|k| self.s.contains(*k)) else { continue };
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let coeff = sign * self.c.rs.nab(a, w[j]) as i64;
            let rest: Vec<usize> = w[1..].iter().copied().filter(|&t| t != w[j]).collect();
            for (mono, c) in self.pfaffian(&rest) {
                let mut m = mono;
                let at = m.partition_point(|&t| t < k);
                m.insert(at, k);
                *out.entry(m).or_insert(0) += coeff * c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}
