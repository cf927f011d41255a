//! Move-based classification of extensive coadjoint orbits of dimension 2, 4 and 6.
//!
//! A [`ClassString`] carries one letter per positive root (CHEVIE order):
//! `Q` (undecided), `S` (saturated), `I` (ignored), `A` and `L` (the two roots
//! removed by an AL-move). The quattern of a string is the set of `S` and `Q`
//! positions; its saturated set is the set of `S` positions.
//!
//! The search runs in stages: [`mask_d`] builds the starting mask, [`step2`]
//! splits it into extensive large quatterns, [`step31`] eliminates `Q` letters
//! under a fixed move policy, [`step32`] searches every AL choice for an
//! abelian path, [`step33`] bounds orbit dimensions from below, and the
//! [`registry`] resolves the remaining special cases.

mod engine;
pub mod registry;
mod search;
pub mod verify;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quattern::Sums;
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

pub use engine::Classifier;
pub use registry::{verify_projection_bound, CaseRegistryEntry, ProjectionVerdict, Reference};
pub use search::{
    certified_rank, classify_extensive, step2, step31, step32, step33, step33_certified, CaseRoute, CaseVerdict, Classification, Step31, Step32,
};
pub use verify::{verify_against_paper, weight_polynomial, RankCheck, VerificationReport};

/// One AL-move: `arm` receives the letter `A`, `leg` the letter `L`, and `arm + leg = gamma`.
///
/// The leg is not a sum of two members of the quattern; the only member of
/// the quattern of the form `arm + x` is `gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AlMove {
    pub gamma: usize,
    pub arm: usize,
    pub leg: usize,
}

/// A classification string with the AL-moves that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassString {
    letters: Vec<u8>,
    al_pairs: Vec<(usize, usize)>,
}

impl ClassString {
    /// Parse a string over `S, A, I, L, Q` with no recorded moves.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b"SAILQ".contains(&b)) {
            return Err(Error::BadString(s.to_string()));
        }
        Ok(ClassString { letters: s.as_bytes().to_vec(), al_pairs: Vec::new() })
    }

    /// Parse and check the length against a root system.
    pub fn parse_for(rs: &RootSystem, s: &str) -> Result<Self> {
        let c = Self::parse(s)?;
        if c.len() != rs.len() {
            return Err(Error::BadString(format!("{s} has length {}, expected {}", c.len(), rs.len())));
        }
        Ok(c)
    }

    /// Build from the undecided set, the saturated set and the AL history; other positions are `I`.
    pub fn from_parts(len: usize, q: RootSet, s: RootSet, pairs: &[(usize, usize)]) -> Self {
        let mut letters = vec![b'I'; len];
        for i in q.iter() {
            letters[i] = b'Q';
        }
        for i in s.iter() {
            letters[i] = b'S';
        }
        for &(a, l) in pairs {
            letters[a] = b'A';
            letters[l] = b'L';
        }
        ClassString { letters, al_pairs: pairs.to_vec() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.letters).expect("ascii letters")
    }

    pub fn letter(&self, i: usize) -> char {
        self.letters[i] as char
    }

    /// Positions carrying the given letter.
    pub fn positions(&self, letter: char) -> RootSet {
        self.letters.iter().enumerate().filter(|(_, &b)| b as char == letter).map(|(i, _)| i).collect()
    }

    pub fn count(&self, letter: char) -> usize {
        self.letters.iter().filter(|&&b| b as char == letter).count()
    }

    /// The quattern: positions with `S` or `Q`.
    pub fn quattern(&self) -> RootSet {
        self.positions('S').union(&self.positions('Q'))
    }

    /// The saturated set: positions with `S`.
    pub fn saturated(&self) -> RootSet {
        self.positions('S')
    }

    /// Recorded AL-moves as 0-based `(arm, leg)` pairs, in move order.
    pub fn al_pairs(&self) -> &[(usize, usize)] {
        &self.al_pairs
    }

    /// AL-moves as 1-based CHEVIE pairs.
    pub fn al_pairs_chevie(&self) -> Vec<(usize, usize)> {
        self.al_pairs.iter().map(|&(a, l)| (a + 1, l + 1)).collect()
    }

    /// Whether no `Q` letter remains.
    pub fn is_finished(&self) -> bool {
        !self.letters.contains(&b'Q')
    }

    /// Orbit dimension encoded by a finished string: twice the number of `A` letters.
    pub fn dimension(&self) -> usize {
        2 * self.count('A')
    }

    /// Same letters, with a replacement move history.
    pub fn with_pairs(mut self, pairs: Vec<(usize, usize)>) -> Self {
        self.al_pairs = pairs;
        self
    }

    /// Letter invariants: A and L counts match the history and the quattern has `Z` inside its center.
    pub fn check_invariants(&self, rs: &RootSystem) -> bool {
        let sums = Sums::new(rs);
        let x = self.quattern();
        self.count('A') == self.al_pairs.len()
            && self.count('L') == self.al_pairs.len()
            && self.al_pairs.iter().all(|&(a, l)| self.letters[a] == b'A' && self.letters[l] == b'L')
            && self.saturated().is_subset(&sums.center(&x))
    }
}

impl fmt::Display for ClassString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ClassString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ClassString", 2)?;
        st.serialize_field("letters", self.as_str())?;
        st.serialize_field("al_pairs", &self.al_pairs_chevie())?;
        st.end()
    }
}

/// Step 1: `Q` on Supp_d and `I` elsewhere (all `Q` when 2d exceeds |Sing| of the highest root).
pub fn mask_d(rs: &RootSystem, d: usize) -> ClassString {
    ClassString::from_parts(rs.len(), rs.supp_d(d), RootSet::EMPTY, &[])
}

/// I/S-move at position `i`: the string with `i` saturated and the string with `i` ignored.
pub fn is_move(rs: &RootSystem, s: &ClassString, i: usize) -> Result<(ClassString, ClassString)> {
    if i >= s.len() || s.letter(i) != 'Q' {
        return Err(Error::NotApplicable(format!("position {} of {s} is not Q", i + 1)));
    }
    let sums = Sums::new(rs);
    if !sums.is_central(&s.quattern(), i) {
        return Err(Error::NotApplicable(format!("position {} of {s} is not central", i + 1)));
    }
    let mut sat = s.clone();
    sat.letters[i] = b'S';
    let mut ign = s.clone();
    ign.letters[i] = b'I';
    Ok((sat, ign))
}

/// All AL-moves available in a string, ordered by `(gamma, leg, arm)`.
pub fn al_candidates(rs: &RootSystem, s: &ClassString) -> Vec<AlMove> {
    let c = Classifier::new(rs);
    c.candidates(s.positions('Q'), s.saturated())
}

/// Apply the AL-move with the given arm and leg.
pub fn al_move(rs: &RootSystem, s: &ClassString, arm: usize, leg: usize) -> Result<ClassString> {
    let mv = al_candidates(rs, s)
        .into_iter()
        .find(|m| m.arm == arm && m.leg == leg)
        .ok_or_else(|| Error::NotApplicable(format!("AL-move (arm {}, leg {}) in {s}", arm + 1, leg + 1)))?;
    let mut out = s.clone();
    out.letters[mv.arm] = b'A';
    out.letters[mv.leg] = b'L';
    out.al_pairs.push((mv.arm, mv.leg));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, Root};

    fn idx(rs: &RootSystem, v: &[i8]) -> usize {
        rs.index_of(&Root(v.to_vec())).unwrap()
    }

    #[test]
    fn masks() {
        let a3 = RootSystem::of(Family::A, 3).unwrap();
        assert_eq!(mask_d(&a3, 1).as_str(), "QQQQQI");
        let b2 = RootSystem::of(Family::B, 2).unwrap();
        assert_eq!(mask_d(&b2, 1).as_str(), "QQQQ");
        let a2 = RootSystem::of(Family::A, 2).unwrap();
        assert_eq!(mask_d(&a2, 2).as_str(), "QQQ");
    }

    #[test]
    fn split_moves() {
        let a3 = RootSystem::of(Family::A, 3).unwrap();
        let m = mask_d(&a3, 1);
        let (s, i) = is_move(&a3, &m, idx(&a3, &[0, 1, 0, -1])).unwrap();
        assert_eq!((s.as_str(), i.as_str()), ("QQQSQI", "QQQIQI"));
        let (s2, i2) = is_move(&a3, &s, idx(&a3, &[1, 0, -1, 0])).unwrap();
        assert_eq!((s2.as_str(), i2.as_str()), ("QQQSSI", "QQQSII"));
        let done = ClassString::parse("SSSSSI").unwrap();
        assert!(is_move(&a3, &done, 0).is_err());
    }

    #[test]
    fn al_moves_in_a3() {
        let a3 = RootSystem::of(Family::A, 3).unwrap();
        let s = ClassString::parse("QQQSSI").unwrap();
        let cands = al_candidates(&a3, &s);
        let g = idx(&a3, &[0, 1, 0, -1]);
        assert!(cands.iter().any(|m| m.gamma == g));
        let m = cands[0];
        let t = al_move(&a3, &s, m.arm, m.leg).unwrap();
        assert_eq!(t.count('A'), 1);
        assert!(t.check_invariants(&a3));
        assert!(al_candidates(&a3, &ClassString::parse("SSSIII").unwrap()).is_empty());
    }
}
