//! Registered special cases: non-abelian cases settled by projecting onto a known subalgebra.
//!
//! Each entry names a case mask, a list of AL-moves applied to it, and a
//! "red" subset of roots whose quattern is isomorphic to a reference whose
//! saturated orbits have dimension at least `X`. After `d` moves every
//! saturated orbit of the case has dimension at least `X + 2d`.

use serde::{Deserialize, Serialize};

use super::engine::{Classifier, Node};
use super::{al_move, ClassString};
use crate::data;
use crate::error::{Error, Result};
use crate::quattern::Sums;
use crate::rootset::RootSet;
use crate::rootsys::{RootSystem, RootSystemSpec};

/// Where the lower bound `X` for the red subalgebra comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reference {
    /// A family of orbits all of exactly this dimension, checked by the oracle.
    Family(u32),
    /// Another registered case, whose full quattern the red subset reproduces.
    Case(String),
    /// AL-moves applied inside the red quattern itself; `X` is twice their number.
    RedMoves(Vec<(usize, usize)>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ReferenceJson {
    Family { family: u32 },
    Case { case: String },
    RedMoves { red_moves: Vec<[usize; 2]> },
}

#[derive(Deserialize)]
struct Expected {
    x: u32,
    d: u32,
}

#[derive(Deserialize)]
struct EntryJson {
    name: String,
    family: String,
    rank: usize,
    mask: String,
    moves: Vec<[usize; 2]>,
    red: Vec<usize>,
    reference: ReferenceJson,
    section: Option<Vec<String>>,
    expected: Option<Expected>,
}

/// A registered special case. Indices are 1-based CHEVIE indices.
#[derive(Clone, Debug, Serialize)]
pub struct CaseRegistryEntry {
    pub name: String,
    pub ambient: RootSystemSpec,
    pub mask: String,
    /// Prior AL-moves as `(arm, leg)`.
    pub prior_moves: Vec<(usize, usize)>,
    pub red_subset: Vec<usize>,
    pub reference: Reference,
    /// Set-section strings for a case whose orbits all have the reference dimension.
    pub section: Option<Vec<String>>,
    /// `(X, d)` as stated for the case.
    pub expected: Option<(u32, u32)>,
}

impl CaseRegistryEntry {
    /// Whether every saturated orbit of the case has exactly the reference dimension.
    pub fn is_exact(&self) -> bool {
        matches!(self.reference, Reference::Family(_)) && self.prior_moves.is_empty() && self.section.is_some()
    }

    /// The section strings with AL pairs: a legal move history from the mask when one exists,
    /// otherwise a matching of `A` to `L` letters whose sums are saturated.
    pub fn section_strings(&self, rs: &RootSystem) -> Result<Vec<ClassString>> {
        let Some(section) = &self.section else { return Ok(Vec::new()) };
        let mask = ClassString::parse_for(rs, &self.mask)?;
        section
            .iter()
            .map(|t| {
                let target = ClassString::parse_for(rs, t)?;
                let pairs = replay_pairs(rs, &mask, &target)
                    .or_else(|| formal_pairs(rs, &target))
                    .ok_or_else(|| Error::InvalidMoves(format!("{}: no AL history reaches {t}", self.name)))?;
                Ok(target.with_pairs(pairs))
            })
            .collect()
    }
}

/// Load every registered case.
pub fn load() -> Result<Vec<CaseRegistryEntry>> {
    let text = data::load("registry.json")?;
    let raw: Vec<EntryJson> = serde_json::from_str(&text)?;
    raw.into_iter()
        .map(|e| {
            let pair = |m: [usize; 2]| (m[0], m[1]);
            Ok(CaseRegistryEntry {
                name: e.name,
                ambient: RootSystemSpec::new(e.family.parse()?, e.rank)?,
                mask: e.mask,
                prior_moves: e.moves.into_iter().map(pair).collect(),
                red_subset: e.red,
                reference: match e.reference {
                    ReferenceJson::Family { family } => Reference::Family(family),
                    ReferenceJson::Case { case } => Reference::Case(case),
                    ReferenceJson::RedMoves { red_moves } => Reference::RedMoves(red_moves.into_iter().map(pair).collect()),
                },
                section: e.section,
                expected: e.expected.map(|x| (x.x, x.d)),
            })
        })
        .collect()
}

/// Result of re-checking a projection argument.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionVerdict {
    pub name: String,
    /// Lower bound for the red subalgebra.
    pub x_ref: u32,
    /// Number of prior AL-moves.
    pub d: u32,
    /// `x_ref + 2 d`.
    pub claimed_bound: u32,
    /// Whether `(x_ref, d)` equal the stated values (true when none are stated).
    pub matches_expected: bool,
}

impl ProjectionVerdict {
    /// Whether the bound rules out orbits of dimension `target`.
    pub fn exceeds(&self, target: u32) -> bool {
        self.claimed_bound > target
    }
}

/// Re-check a registered case: replay the prior moves, match the red subset
/// against its reference and return the resulting bound.
pub fn verify_projection_bound(entry: &CaseRegistryEntry) -> Result<ProjectionVerdict> {
    let all = load()?;
    verify_with(entry, &all, 0)
}

fn verify_with(entry: &CaseRegistryEntry, all: &[CaseRegistryEntry], depth: usize) -> Result<ProjectionVerdict> {
    if depth > all.len() {
        return Err(Error::InvalidMoves(format!("{}: cyclic references", entry.name)));
    }
    let rs = RootSystem::new(entry.ambient)?;
    let after = replay(&rs, &entry.mask, &entry.prior_moves).map_err(|e| Error::InvalidMoves(format!("{}: {e}", entry.name)))?;
    let red: RootSet = entry.red_subset.iter().map(|&c| rs.from_chevie(c)).collect::<Result<_>>()?;
    if let Some(i) = red.iter().find(|&i| !matches!(after.letter(i), 'Q' | 'S')) {
        return Err(Error::IsomorphismFailed(format!(
            "{}: red root {} carries letter {}",
            entry.name,
            i + 1,
            after.letter(i)
        )));
    }
    let red_sat = red.intersection(&after.saturated());
    let x_ref = match &entry.reference {
        Reference::Family(x) => {
            if red != after.quattern() {
                return Err(Error::IsomorphismFailed(format!("{}: red subset is not the whole quattern", entry.name)));
            }
            *x
        }
        Reference::Case(name) => {
            let target = all
                .iter()
                .find(|e| &e.name == name)
                .ok_or_else(|| Error::Data(format!("{}: unknown reference {name}", entry.name)))?;
            let trs = RootSystem::new(target.ambient)?;
            let tmask = ClassString::parse_for(&trs, &target.mask)?;
            if !isomorphic(&rs, &red, &red_sat, &trs, &tmask.quattern(), &tmask.saturated()) {
                return Err(Error::IsomorphismFailed(format!("{}: red subset is not isomorphic to {name}", entry.name)));
            }
            verify_with(target, all, depth + 1)?.claimed_bound
        }
        Reference::RedMoves(moves) => {
            let sub = ClassString::from_parts(rs.len(), red.difference(&red_sat), red_sat, &[]);
            replay(&rs, sub.as_str(), moves).map_err(|e| Error::InvalidMoves(format!("{} (red): {e}", entry.name)))?;
            2 * moves.len() as u32
        }
    };
    let d = entry.prior_moves.len() as u32;
    let matches_expected = entry.expected.is_none_or(|e| e == (x_ref, d));
    Ok(ProjectionVerdict { name: entry.name.clone(), x_ref, d, claimed_bound: x_ref + 2 * d, matches_expected })
}

/// The registered case for a mask, with its verified bound.
pub fn lookup(spec: RootSystemSpec, mask: &str) -> Result<Option<(CaseRegistryEntry, ProjectionVerdict)>> {
    let all = load()?;
    let Some(entry) = all.iter().find(|e| e.ambient == spec && e.mask == mask) else { return Ok(None) };
    let verdict = verify_with(entry, &all, 0)?;
    Ok(Some((entry.clone(), verdict)))
}

/// Apply 1-based `(arm, leg)` moves to a mask, checking each one.
fn replay(rs: &RootSystem, mask: &str, moves: &[(usize, usize)]) -> Result<ClassString> {
    let mut s = ClassString::parse_for(rs, mask)?;
    if s.count('A') + s.count('L') > 0 {
        return Err(Error::BadString(format!("mask {mask} already has AL letters")));
    }
    let sums = Sums::new(rs);
    if !s.saturated().is_subset(&sums.center(&s.quattern())) {
        return Err(Error::NotApplicable(format!("saturated letters of {mask} are not central")));
    }
    for &(arm, leg) in moves {
        if arm == 0 || leg == 0 {
            return Err(Error::BadString("CHEVIE indices start at 1".into()));
        }
        s = al_move(rs, &s, arm - 1, leg - 1)?;
    }
    Ok(s)
}

/// AL history turning `mask` into `target`, where the letters left as `Q` by the moves become `S` or `I`.
fn replay_pairs(rs: &RootSystem, mask: &ClassString, target: &ClassString) -> Option<Vec<(usize, usize)>> {
    let c = Classifier::new(rs);
    let want = target.count('A');
    fn go(c: &Classifier, n: Node, target: &ClassString, want: usize, pairs: &mut Vec<(usize, usize)>) -> bool {
        if pairs.len() == want {
            return n.q.iter().all(|i| matches!(target.letter(i), 'S' | 'I'))
                && n.s.iter().all(|i| target.letter(i) == 'S');
        }
        for m in c.candidates(n.q, n.s) {
            if target.letter(m.arm) == 'A' && target.letter(m.leg) == 'L' {
                pairs.push((m.arm, m.leg));
                if go(c, c.apply(n, m), target, want, pairs) {
                    return true;
                }
                pairs.pop();
            }
        }
        false
    }
    let mut pairs = Vec::new();
    let n = Node { q: mask.positions('Q'), s: mask.saturated() };
    go(&c, n, target, want, &mut pairs).then_some(pairs)
}

/// Matching of every `A` letter to an `L` letter with saturated sum, in `A` order.
fn formal_pairs(rs: &RootSystem, target: &ClassString) -> Option<Vec<(usize, usize)>> {
    let arms: Vec<usize> = target.positions('A').iter().collect();
    let legs: Vec<usize> = target.positions('L').iter().collect();
    let sat = target.saturated();
    fn go(rs: &RootSystem, arms: &[usize], legs: &[usize], sat: &RootSet, used: &mut Vec<bool>, out: &mut Vec<(usize, usize)>) -> bool {
        let Some((&a, rest)) = arms.split_first() else { return true };
        for (j, &l) in legs.iter().enumerate() {
            if !used[j] && rs.sum_index(a, l).is_some_and(|k| sat.contains(k)) {
                used[j] = true;
                out.push((a, l));
                if go(rs, rest, legs, sat, used, out) {
                    return true;
                }
                out.pop();
                used[j] = false;
            }
        }
        false
    }
    if arms.len() != legs.len() {
        return None;
    }
    let mut out = Vec::new();
    go(rs, &arms, &legs, &sat, &mut vec![false; legs.len()], &mut out).then_some(out)
}

/// Whether two decorated subsets have a bijection preserving root sums inside the subsets and saturation.
pub fn isomorphic(rs1: &RootSystem, x1: &RootSet, z1: &RootSet, rs2: &RootSystem, x2: &RootSet, z2: &RootSet) -> bool {
    let a: Vec<usize> = x1.iter().collect();
    let b: Vec<usize> = x2.iter().collect();
    if a.len() != b.len() || z1.len() != z2.len() {
        return false;
    }
    let n = a.len();
    let table = |rs: &RootSystem, v: &[usize], x: &RootSet| -> Vec<Vec<Option<usize>>> {
        v.iter()
            .map(|&i| {
                v.iter()
                    .map(|&j| rs.sum_index(i, j).filter(|k| x.contains(*k)).map(|k| v.iter().position(|&t| t == k).expect("member")))
                    .collect()
            })
            .collect()
    };
    let s1 = table(rs1, &a, x1);
    let s2 = table(rs2, &b, x2);
    let sig = |s: &Vec<Vec<Option<usize>>>, z: &RootSet, v: &[usize], i: usize| {
        let out = s[i].iter().filter(|k| k.is_some()).count();
        let inn = s.iter().flatten().filter(|k| **k == Some(i)).count();
        (z.contains(v[i]), out, inn)
    };
    let sig1: Vec<_> = (0..n).map(|i| sig(&s1, z1, &a, i)).collect();
    let sig2: Vec<_> = (0..n).map(|i| sig(&s2, z2, &b, i)).collect();
    let mut m1 = sig1.clone();
    let mut m2 = sig2.clone();
    m1.sort();
    m2.sort();
    if m1 != m2 {
        return false;
    }
    struct St<'a> {
        s1: &'a [Vec<Option<usize>>],
        s2: &'a [Vec<Option<usize>>],
        sig1: &'a [(bool, usize, usize)],
        sig2: &'a [(bool, usize, usize)],
        fwd: Vec<Option<usize>>,
        bwd: Vec<Option<usize>>,
        order: Vec<usize>,
    }
    fn consistent(st: &St) -> bool {
        let n = st.fwd.len();
        for i in 0..n {
            let Some(fi) = st.fwd[i] else { continue };
            for j in 0..n {
                let Some(fj) = st.fwd[j] else { continue };
                match (st.s1[i][j], st.s2[fi][fj]) {
                    (None, None) => {}
                    (Some(k), Some(k2)) => {
                        if st.fwd[k].is_some_and(|v| v != k2) || st.bwd[k2].is_some_and(|v| v != k) {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }
    fn go(st: &mut St, pos: usize) -> bool {
        if pos == st.order.len() {
            return true;
        }
        let i = st.order[pos];
        for t in 0..st.fwd.len() {
            if st.bwd[t].is_some() || st.sig1[i] != st.sig2[t] {
                continue;
            }
            st.fwd[i] = Some(t);
            st.bwd[t] = Some(i);
            if consistent(st) && go(st, pos + 1) {
                return true;
            }
            st.fwd[i] = None;
            st.bwd[t] = None;
        }
        false
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse((sig1[i].1 + sig1[i].2, sig1[i].0)));
    let mut st = St { s1: &s1, s2: &s2, sig1: &sig1, sig2: &sig2, fwd: vec![None; n], bwd: vec![None; n], order };
    go(&mut st, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_loads() {
        let all = load().unwrap();
        assert_eq!(all.len(), 14);
        assert!(all.iter().any(|e| e.name == "D4(1)" && e.is_exact()));
    }

    #[test]
    fn self_isomorphism() {
        let rs = RootSystem::of(crate::Family::D, 4).unwrap();
        let x = RootSet::full(10);
        let z: RootSet = [7, 8, 9].into_iter().collect();
        assert!(isomorphic(&rs, &x, &z, &rs, &x, &z));
        assert!(!isomorphic(&rs, &x, &z, &rs, &x.without(0), &z));
    }
}
