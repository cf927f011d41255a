//! Steps 2 to 3.3 of the classification and the end-to-end driver.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::engine::{Classifier, Node};
use super::{mask_d, registry, ClassString};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

fn node_of(s: &ClassString) -> Node {
    Node { q: s.positions('Q'), s: s.saturated() }
}

/// Step 2: split the mask by I/S-moves until every central root is saturated, keeping extensive quatterns.
pub fn step2(rs: &RootSystem, d: usize) -> Vec<ClassString> {
    let c = Classifier::new(rs);
    let start = node_of(&mask_d(rs, d));
    let edges = c.edge_sums();
    // Without Dynkin edges there are no extensive orbits of positive dimension.
    if edges.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![start];
    while let Some(n) = stack.pop() {
        if !edges.is_subset(&n.x()) {
            continue;
        }
        match c.split_point(n) {
            Some(a) => {
                stack.push(Node { q: n.q.without(a), s: n.s });
                stack.push(Node { q: n.q.without(a), s: n.s.with(a) });
            }
            None => out.push(ClassString::from_parts(rs.len(), n.q, n.s, &[])),
        }
    }
    out.sort();
    out
}

/// Outcome of the fixed-policy elimination.
#[derive(Clone, Debug, Serialize)]
pub struct Step31 {
    /// No leaf keeps a `Q` letter.
    pub abelian: bool,
    /// Leaves without `Q`.
    pub finished: Vec<ClassString>,
    /// Leaves where no move applies but `Q` letters remain.
    pub leftovers: Vec<ClassString>,
}

/// Step 3.1: eager I/S-moves at the lowest central `Q`, then the first AL-move in `(gamma, leg, arm)` order.
pub fn step31(rs: &RootSystem, case: &ClassString) -> Step31 {
    let c = Classifier::new(rs);
    let mut finished = Vec::new();
    let mut leftovers = Vec::new();
    let mut stack = vec![(node_of(case), case.al_pairs().to_vec())];
    while let Some((n, pairs)) = stack.pop() {
        if let Some(a) = c.split_point(n) {
            stack.push((Node { q: n.q.without(a), s: n.s }, pairs.clone()));
            stack.push((Node { q: n.q.without(a), s: n.s.with(a) }, pairs));
        } else if let Some(m) = c.first_candidate(n) {
            let mut p = pairs;
            p.push((m.arm, m.leg));
            stack.push((c.apply(n, m), p));
        } else {
            let leaf = ClassString::from_parts(rs.len(), n.q, n.s, &pairs);
            if n.q.is_empty() {
                finished.push(leaf);
            } else {
                leftovers.push(leaf);
            }
        }
    }
    finished.sort();
    leftovers.sort();
    Step31 { abelian: leftovers.is_empty(), finished, leftovers }
}

/// Outcome of the exhaustive abelian-path search.
#[derive(Clone, Debug, Serialize)]
pub struct Step32 {
    pub abelian: bool,
    /// Leaves of the first abelian path; empty when none exists.
    pub finished: Vec<ClassString>,
}

struct Solver<'a, 'b> {
    c: &'b Classifier<'a>,
    memo: HashMap<Node, bool>,
}

impl Solver<'_, '_> {
    /// Whether some choice of AL-moves eliminates every `Q` on every I/S branch.
    fn solvable(&mut self, n: Node) -> bool {
        if let Some(&v) = self.memo.get(&n) {
            return v;
        }
        let v = if let Some(a) = self.c.split_point(n) {
            self.solvable(Node { q: n.q.without(a), s: n.s.with(a) }) && self.solvable(Node { q: n.q.without(a), s: n.s })
        } else {
            let cands = self.c.candidates(n.q, n.s);
            if cands.is_empty() {
                n.q.is_empty()
            } else {
                cands.into_iter().any(|m| self.solvable(self.c.apply(n, m)))
            }
        };
        self.memo.insert(n, v);
        v
    }

    fn collect(&mut self, n: Node, pairs: Vec<(usize, usize)>, out: &mut Vec<ClassString>) {
        let len = self.c.root_system().len();
        if let Some(a) = self.c.split_point(n) {
            self.collect(Node { q: n.q.without(a), s: n.s.with(a) }, pairs.clone(), out);
            self.collect(Node { q: n.q.without(a), s: n.s }, pairs, out);
            return;
        }
        for m in self.c.candidates(n.q, n.s) {
            let child = self.c.apply(n, m);
            if self.solvable(child) {
                let mut p = pairs;
                p.push((m.arm, m.leg));
                self.collect(child, p, out);
                return;
            }
        }
        out.push(ClassString::from_parts(len, n.q, n.s, &pairs));
    }
}

/// Step 3.2: search all AL choices (I/S-moves stay eager) for a path eliminating every `Q`.
pub fn step32(rs: &RootSystem, case: &ClassString) -> Step32 {
    let c = Classifier::new(rs);
    let mut solver = Solver { c: &c, memo: HashMap::new() };
    let n = node_of(case);
    if !solver.solvable(n) {
        return Step32 { abelian: false, finished: Vec::new() };
    }
    let mut finished = Vec::new();
    solver.collect(n, case.al_pairs().to_vec(), &mut finished);
    finished.sort();
    Step32 { abelian: true, finished }
}

/// Subsets examined per leaf by the certified estimate.
const PFAFFIAN_BUDGET: usize = 200_000;

struct Bounder<'a, 'b> {
    c: &'b Classifier<'a>,
    cap: u32,
    certify: bool,
    memo: HashMap<Node, u32>,
}

impl Bounder<'_, '_> {
    /// Lower bound on orbit dimensions, truncated at `cap`.
    fn bound(&mut self, n: Node) -> u32 {
        if let Some(&v) = self.memo.get(&n) {
            return v;
        }
        let v = if let Some(a) = self.c.split_point(n) {
            let first = self.bound(Node { q: n.q.without(a), s: n.s.with(a) });
            if first == 0 {
                0
            } else {
                first.min(self.bound(Node { q: n.q.without(a), s: n.s }))
            }
        } else {
            let cands = self.c.candidates(n.q, n.s);
            if cands.is_empty() {
                let rule = self.c.leaf_bound(n);
                if self.certify && !n.q.is_empty() {
                    rule.max(self.c.certified_rank(n, PFAFFIAN_BUDGET))
                } else {
                    rule
                }
            } else {
                let mut best = 0;
                for m in cands {
                    best = best.max(2 + self.bound(self.c.apply(n, m)));
                    if best >= self.cap {
                        break;
                    }
                }
                best
            }
        };
        let v = v.min(self.cap);
        self.memo.insert(n, v);
        v
    }
}

/// Step 3.3: a lower bound for the dimension of every orbit of the case.
pub fn step33(rs: &RootSystem, case: &ClassString) -> u32 {
    step33_capped(rs, case, u32::MAX)
}

/// Step 3.3 with the search cut off once the bound reaches `cap`.
pub fn step33_capped(rs: &RootSystem, case: &ClassString, cap: u32) -> u32 {
    let c = Classifier::new(rs);
    Bounder { c: &c, cap, certify: false, memo: HashMap::new() }.bound(node_of(case))
}

/// Step 3.3 with leaves that keep `Q` letters also bounded by [`certified_rank`]: the size of
/// a root subset whose Pfaffian block of B_f is a nonzero monomial in the saturated coordinates.
pub fn step33_certified(rs: &RootSystem, case: &ClassString, cap: u32) -> u32 {
    let c = Classifier::new(rs);
    Bounder { c: &c, cap, certify: true, memo: HashMap::new() }.bound(node_of(case))
}

/// Certified rank of B_f on the quattern of a string, over forms nonzero on its `S` letters.
pub fn certified_rank(rs: &RootSystem, s: &ClassString) -> u32 {
    Classifier::new(rs).certified_rank(node_of(s), PFAFFIAN_BUDGET)
}

/// How a case of Step 2 was settled.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum CaseRoute {
    /// Abelian under the fixed policy.
    Policy,
    /// Abelian along some path found by the exhaustive search.
    Search,
    /// Every orbit has dimension above the target by the lower estimate.
    Excluded { bound: u32 },
    /// Excluded by the lower estimate with certified Pfaffian leaves.
    Certified { bound: u32 },
    /// Settled by a registered special case.
    Registry { name: String, bound: u32, emitted: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseVerdict {
    pub case: String,
    #[serde(flatten)]
    pub route: CaseRoute,
    /// Strings of the target dimension contributed by this case.
    pub strings: usize,
}

/// The extensive orbits of one dimension in one root system.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub system: String,
    pub dim: usize,
    pub strings: Vec<ClassString>,
    pub cases: Vec<CaseVerdict>,
}

impl Classification {
    /// Cases that needed more than the fixed policy.
    pub fn non_abelian(&self) -> impl Iterator<Item = &CaseVerdict> {
        self.cases.iter().filter(|c| !matches!(c.route, CaseRoute::Policy))
    }
}

fn settle(rs: &RootSystem, case: &ClassString, dim: usize) -> Result<(CaseRoute, Vec<ClassString>)> {
    let a = dim / 2;
    let keep = |v: Vec<ClassString>| -> Vec<ClassString> { v.into_iter().filter(|s| s.count('A') == a).collect() };
    let r = step31(rs, case);
    if r.abelian {
        return Ok((CaseRoute::Policy, keep(r.finished)));
    }
    let r = step32(rs, case);
    if r.abelian {
        return Ok((CaseRoute::Search, keep(r.finished)));
    }
    let bound = step33_capped(rs, case, dim as u32 + 2);
    if bound > dim as u32 {
        return Ok((CaseRoute::Excluded { bound }, Vec::new()));
    }
    let unresolved = || Error::UnresolvedCase { system: rs.spec().name(), mask: case.to_string() };
    let Some((entry, verdict)) = registry::lookup(rs.spec(), case.as_str())? else {
        let bound = step33_certified(rs, case, dim as u32 + 2);
        if bound > dim as u32 {
            return Ok((CaseRoute::Certified { bound }, Vec::new()));
        }
        return Err(unresolved());
    };
    let bound = verdict.claimed_bound;
    if bound > dim as u32 {
        return Ok((CaseRoute::Registry { name: entry.name.clone(), bound, emitted: 0 }, Vec::new()));
    }
    if bound == dim as u32 && entry.is_exact() {
        let strings = entry.section_strings(rs)?;
        return Ok((CaseRoute::Registry { name: entry.name.clone(), bound, emitted: strings.len() }, strings));
    }
    Err(unresolved())
}

/// All extensive orbits of dimension `dim`, as a set-section of classification strings.
pub fn classify_extensive(rs: &RootSystem, dim: usize) -> Result<Classification> {
    let cases = step2(rs, dim / 2);
    let settled: Vec<Result<(CaseRoute, Vec<ClassString>)>> = cases.par_iter().map(|c| settle(rs, c, dim)).collect();
    let mut strings = Vec::new();
    let mut verdicts = Vec::new();
    for (case, res) in cases.iter().zip(settled) {
        let (route, found) = res?;
        verdicts.push(CaseVerdict { case: case.to_string(), route, strings: found.len() });
        strings.extend(found);
    }
    strings.sort();
    Ok(Classification { system: rs.spec().name(), dim, strings, cases: verdicts })
}
