//! Classical positive root systems with CHEVIE indexing, the root order,
//! singular sets and integer structure constants read off a matrix realization.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::data;
use crate::error::{Error, Result};
use crate::rootset::{RootSet, MAX_ROOTS};

/// Classical Cartan family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    /// Smallest admissible rank.
    pub fn min_rank(self) -> usize {
        match self {
            Family::D => 4,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A family together with a rank; D_3 is rejected in favour of A_3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    /// Validated constructor.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let spec = RootSystemSpec { family, rank };
        if rank < family.min_rank() || spec.num_positive_roots() > MAX_ROOTS {
            return Err(Error::InvalidRank { family: family.letter(), rank });
        }
        Ok(spec)
    }

    /// Parse names such as `"D4"` or `"A_3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let family: Family = s.get(..1).unwrap_or("").parse()?;
        let rank = s[1..]
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::Data(format!("bad system name {s:?}")))?;
        Self::new(family, rank)
    }

    /// Length of the epsilon-coordinate vectors.
    pub fn n_eps(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// |Phi+|.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }

    /// Short name such as `D4`.
    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A positive root in the epsilon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i8>);

impl Root {
    /// e_i - e_j (1-based indices).
    pub fn diff(n: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] += 1;
        v[j - 1] -= 1;
        Root(v)
    }

    /// e_i + e_j (1-based; i == j gives 2e_i).
    pub fn sum(n: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] += 1;
        v[j - 1] += 1;
        Root(v)
    }

    /// e_i (1-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i8] {
        &self.0
    }

    fn add(&self, o: &Root) -> Vec<i8> {
        self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}e{}", k + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Where the root ordering came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootOrder {
    /// Read from the embedded CHEVIE tables.
    Chevie,
    /// Height, then lexicographic on coefficients; used outside table coverage.
    Generated,
}

/// Positive roots of a classical system in the standard epsilon description.
pub fn positive_roots(spec: RootSystemSpec) -> Vec<Root> {
    let n = spec.n_eps();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Root::diff(n, i, j));
            if spec.family != Family::A {
                out.push(Root::sum(n, i, j));
            }
        }
        match spec.family {
            Family::B => out.push(Root::unit(n, i)),
            Family::C => out.push(Root::sum(n, i, i)),
            _ => {}
        }
    }
    out
}

/// Simple roots in Bourbaki order (alpha_1 = e_1 - e_2, ...).
pub fn simple_roots(spec: RootSystemSpec) -> Vec<Root> {
    let n = spec.n_eps();
    let mut out: Vec<Root> = (1..n).map(|i| Root::diff(n, i, i + 1)).collect();
    match spec.family {
        Family::A => {}
        Family::B => out.push(Root::unit(n, n)),
        Family::C => out.push(Root::sum(n, n, n)),
        Family::D => out.push(Root::sum(n, n - 1, n)),
    }
    out
}

/// Sparse integer matrix in the natural representation.
type Sparse = BTreeMap<(usize, usize), i64>;

/// Matrix realization of root vectors. Row labels 1..n, 0 (type B only), -n..-1.
struct Realization {
    spec: RootSystemSpec,
}

impl Realization {
    fn pos(&self, label: i64) -> usize {
        let n = self.spec.n_eps() as i64;
        let zero = i64::from(self.spec.family == Family::B);
        if label > 0 {
            (label - 1) as usize
        } else if label == 0 {
            n as usize
        } else {
            (n + zero + (n + label)) as usize
        }
    }

    fn e(&self, m: &mut Sparse, r: i64, c: i64, v: i64) {
        *m.entry((self.pos(r), self.pos(c))).or_insert(0) += v;
    }

    fn root_vector(&self, root: &Root) -> Sparse {
        let mut m = Sparse::new();
        let nz: Vec<(usize, i8)> = root
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k + 1, c))
            .collect();
        let fam = self.spec.family;
        match nz.as_slice() {
            [(i, 1), (j, -1)] if fam == Family::A => self.e(&mut m, *i as i64, *j as i64, 1),
            [(i, 1), (j, -1)] => {
                let (i, j) = (*i as i64, *j as i64);
                self.e(&mut m, i, j, 1);
                self.e(&mut m, -j, -i, -1);
            }
            [(i, 1), (j, 1)] => {
                let (i, j) = (*i as i64, *j as i64);
                let s = if fam == Family::C { 1 } else { -1 };
                self.e(&mut m, i, -j, 1);
                self.e(&mut m, j, -i, s);
            }
            [(i, 2)] => self.e(&mut m, *i as i64, -(*i as i64), 1),
            [(i, 1)] => {
                let i = *i as i64;
                self.e(&mut m, i, 0, 1);
                self.e(&mut m, 0, -i, -1);
            }
            _ => unreachable!("not a positive root: {root}"),
        }
        m
    }

    fn bracket(x: &Sparse, y: &Sparse) -> Sparse {
        let mut out = Sparse::new();
        for (&(a, b), &u) in x {
            for (&(c, d), &w) in y {
                if b == c {
                    *out.entry((a, d)).or_insert(0) += u * w;
                }
                if d == a {
                    *out.entry((c, b)).or_insert(0) -= u * w;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

/// An immutable positive root system with exact combinatorics.
///
/// Roots are stored 0-based; the CHEVIE index of root `i` is `i + 1`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    order: RootOrder,
    roots: Vec<Root>,
    index: HashMap<Vec<i8>, usize>,
    sum: Vec<Option<usize>>,
    nab: Vec<i32>,
    simple_coords: Vec<Vec<u32>>,
    heights: Vec<u32>,
    sing: Vec<RootSet>,
    below: Vec<RootSet>,
    highest: usize,
    bourbaki: Vec<usize>,
}

impl RootSystem {
    /// Build the system, using the CHEVIE ordering when it is tabulated.
    pub fn new(spec: RootSystemSpec) -> Result<Self> {
        let spec = RootSystemSpec::new(spec.family, spec.rank)?;
        let standard = positive_roots(spec);
        let (roots, order) = match data::chevie_table(spec)? {
            Some(text) => (parse_chevie(spec, &text, &standard)?, RootOrder::Chevie),
            None => (generated_order(spec, standard), RootOrder::Generated),
        };
        Self::with_order(spec, roots, order)
    }

    /// Shorthand for `RootSystem::new(RootSystemSpec::new(family, rank)?)`.
    pub fn of(family: Family, rank: usize) -> Result<Self> {
        Self::new(RootSystemSpec::new(family, rank)?)
    }

    fn with_order(spec: RootSystemSpec, roots: Vec<Root>, order: RootOrder) -> Result<Self> {
        let m = roots.len();
        let index: HashMap<Vec<i8>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();
        let real = Realization { spec };
        let vecs: Vec<Sparse> = roots.iter().map(|r| real.root_vector(r)).collect();

        let mut sum = vec![None; m * m];
        let mut nab = vec![0i32; m * m];
        for i in 0..m {
            for j in 0..m {
                let br = Realization::bracket(&vecs[i], &vecs[j]);
                match index.get(&roots[i].add(&roots[j])) {
                    Some(&k) => {
                        let (&pos, &val) = vecs[k].iter().next().expect("nonzero root vector");
                        let num = br.get(&pos).copied().unwrap_or(0);
                        assert!(num % val == 0, "non-integral structure constant");
                        let c = num / val;
                        let scaled: Sparse = vecs[k].iter().map(|(p, v)| (*p, v * c)).collect();
                        assert!(c != 0 && br == scaled, "bracket of {} and {} is not a multiple", roots[i], roots[j]);
                        sum[i * m + j] = Some(k);
                        nab[i * m + j] = c as i32;
                    }
                    None => assert!(br.is_empty(), "bracket of {} and {} should vanish", roots[i], roots[j]),
                }
            }
        }

        let bourbaki: Vec<usize> = simple_roots(spec).iter().map(|r| index[&r.0]).collect();
        let simple_coords = simple_coordinates(spec, &roots, &index, &bourbaki);
        let heights: Vec<u32> = simple_coords.iter().map(|c| c.iter().sum()).collect();
        let highest = (0..m).max_by_key(|&i| heights[i]).expect("nonempty");

        let mut sing = vec![RootSet::EMPTY; m];
        for i in 0..m {
            for j in 0..m {
                if let Some(k) = sum[i * m + j] {
                    sing[k].insert(i);
                }
            }
        }
        let below = (0..m)
            .map(|b| {
                (0..m)
                    .filter(|&a| simple_coords[a].iter().zip(&simple_coords[b]).all(|(x, y)| x <= y))
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            spec,
            order,
            roots,
            index,
            sum,
            nab,
            simple_coords,
            heights,
            sing,
            below,
            highest,
            bourbaki,
        })
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn order(&self) -> RootOrder {
        self.order
    }

    /// Number of positive roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    /// 0-based index of a root.
    pub fn index_of(&self, r: &Root) -> Result<usize> {
        self.index.get(&r.0).copied().ok_or_else(|| Error::NotAPositiveRoot(r.to_string()))
    }

    /// 0-based index of the root whose CHEVIE index is `c`.
    pub fn from_chevie(&self, c: usize) -> Result<usize> {
        if c == 0 || c > self.len() {
            return Err(Error::IndexOutOfRange { index: c, len: self.len() });
        }
        Ok(c - 1)
    }

    /// Index of root(i) + root(j) if that is a positive root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sum[i * self.len() + j]
    }

    /// Size of the natural matrix representation.
    pub fn natural_dim(&self) -> usize {
        match self.spec.family {
            Family::A => self.spec.rank + 1,
            Family::B => 2 * self.spec.rank + 1,
            Family::C | Family::D => 2 * self.spec.rank,
        }
    }

    /// Root vector of root(i) as a dense matrix in the natural representation.
    pub fn root_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.natural_dim();
        let mut m = vec![vec![0; n]; n];
        for ((r, c), v) in (Realization { spec: self.spec }).root_vector(&self.roots[i]) {
            m[r][c] = v;
        }
        m
    }

    /// Structure constant N(i, j); zero exactly when the sum is not a root.
    pub fn nab(&self, i: usize, j: usize) -> i32 {
        self.nab[i * self.len() + j]
    }

    /// Simple roots occupy indices 0..rank in either ordering.
    pub fn simple_indices(&self) -> std::ops::Range<usize> {
        0..self.spec.rank
    }

    /// Simple-root indices listed in Bourbaki order along the Dynkin diagram.
    pub fn bourbaki_simple(&self) -> &[usize] {
        &self.bourbaki
    }

    pub fn is_simple(&self, i: usize) -> bool {
        i < self.spec.rank
    }

    pub fn height(&self, i: usize) -> u32 {
        self.heights[i]
    }

    /// Coordinates of root(i) in the Bourbaki simple-root basis.
    pub fn simple_coords(&self, i: usize) -> &[u32] {
        &self.simple_coords[i]
    }

    pub fn highest_root(&self) -> usize {
        self.highest
    }

    /// Sing(root(i)) = {a : root(i) - root(a) in Phi+}.
    pub fn sing(&self, i: usize) -> RootSet {
        self.sing[i]
    }

    /// Sing of an arbitrary root given by coordinates.
    pub fn sing_of(&self, r: &Root) -> Result<RootSet> {
        Ok(self.sing(self.index_of(r)?))
    }

    /// Root order: `a <= b` iff b - a is a nonnegative combination of simple roots.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// All roots `<= b`.
    pub fn below(&self, b: usize) -> RootSet {
        self.below[b]
    }

    /// Order ideal generated by a set of roots.
    pub fn ideal(&self, s: &RootSet) -> RootSet {
        s.iter().fold(RootSet::EMPTY, |acc, b| acc.union(&self.below[b]))
    }

    /// All roots as a set.
    pub fn all(&self) -> RootSet {
        RootSet::full(self.len())
    }

    /// Supp_d = {a : some a' >= a has |Sing(a')| = 2d}; all roots when 2d exceeds |Sing(highest)|.
    pub fn supp_d(&self, d: usize) -> RootSet {
        if 2 * d > self.sing(self.highest).len() {
            return self.all();
        }
        let tops: RootSet = (0..self.len()).filter(|&a| self.sing(a).len() == 2 * d).collect();
        self.ideal(&tops)
    }

    /// Pairs of adjacent simple roots (as indices), i.e. simple a, b with a + b a root.
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let r = self.spec.rank;
        let mut e = Vec::new();
        for a in 0..r {
            for b in a + 1..r {
                if self.sum_index(a, b).is_some() {
                    e.push((a, b));
                }
            }
        }
        e
    }

    /// Chain test for the root order, independent of simple coordinates.
    pub fn leq_by_chain(&self, a: usize, b: usize) -> bool {
        let m = self.len();
        let mut seen = vec![false; m];
        let mut queue = VecDeque::from([a]);
        seen[a] = true;
        while let Some(x) = queue.pop_front() {
            if x == b {
                return true;
            }
            for y in 0..m {
                if let Some(z) = self.sum_index(x, y) {
                    if !seen[z] {
                        seen[z] = true;
                        queue.push_back(z);
                    }
                }
            }
        }
        false
    }
}

fn parse_chevie(spec: RootSystemSpec, text: &str, standard: &[Root]) -> Result<Vec<Root>> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Data("empty CHEVIE table".into()))?;
    if header.split_whitespace().collect::<Vec<_>>() != [spec.family.letter().to_string(), spec.rank.to_string()] {
        return Err(Error::Data(format!("CHEVIE header {header:?} does not match {spec}")));
    }
    let mut roots = Vec::new();
    for (k, line) in lines.enumerate() {
        let nums: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Data(format!("bad CHEVIE line {line:?}"))))
            .collect::<Result<_>>()?;
        if nums.len() != spec.n_eps() + 1 || nums[0] as usize != k + 1 {
            return Err(Error::Data(format!("bad CHEVIE line {line:?}")));
        }
        roots.push(Root(nums[1..].iter().map(|&c| c as i8).collect()));
    }
    let mut a = roots.clone();
    let mut b = standard.to_vec();
    a.sort();
    b.sort();
    if a != b {
        return Err(Error::Data(format!("CHEVIE table for {spec} is not a bijection onto Phi+")));
    }
    let simple: Vec<Root> = simple_roots(spec);
    if !roots[..spec.rank].iter().all(|r| simple.contains(r)) {
        return Err(Error::Data(format!("CHEVIE table for {spec} does not start with the simple roots")));
    }
    Ok(roots)
}

fn generated_order(spec: RootSystemSpec, roots: Vec<Root>) -> Vec<Root> {
    let index: HashMap<Vec<i8>, usize> = roots.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();
    let bourbaki: Vec<usize> = simple_roots(spec).iter().map(|r| index[&r.0]).collect();
    let coords = simple_coordinates(spec, &roots, &index, &bourbaki);
    let mut keyed: Vec<(u32, Root)> =
        roots.into_iter().zip(coords).map(|(r, c)| (c.iter().sum(), r)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, r)| r).collect()
}

fn simple_coordinates(
    spec: RootSystemSpec,
    roots: &[Root],
    index: &HashMap<Vec<i8>, usize>,
    bourbaki: &[usize],
) -> Vec<Vec<u32>> {
    let r = spec.rank;
    let mut coords: Vec<Option<Vec<u32>>> = vec![None; roots.len()];
    let mut queue = VecDeque::new();
    for (k, &s) in bourbaki.iter().enumerate() {
        let mut c = vec![0; r];
        c[k] = 1;
        coords[s] = Some(c);
        queue.push_back(s);
    }
    while let Some(x) = queue.pop_front() {
        for (k, &s) in bourbaki.iter().enumerate() {
            if let Some(&y) = index.get(&roots[x].add(&roots[s])) {
                if coords[y].is_none() {
                    let mut c = coords[x].clone().expect("visited");
                    c[k] += 1;
                    coords[y] = Some(c);
                    queue.push_back(y);
                }
            }
        }
    }
    coords.into_iter().map(|c| c.expect("every positive root is reachable")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_chevie_order() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        assert_eq!(rs.order(), RootOrder::Chevie);
        assert_eq!(rs.root(0).to_string(), "e2-e3");
        assert_eq!(rs.root(1).to_string(), "e1-e2");
        assert_eq!(rs.root(2).to_string(), "e1-e3");
        assert_eq!(rs.nab(1, 0), 1);
        assert_eq!(rs.nab(0, 1), -1);
    }

    #[test]
    fn b_short_roots_bracket() {
        let rs = RootSystem::of(Family::B, 2).unwrap();
        let e1 = rs.index_of(&Root::unit(2, 1)).unwrap();
        let e2 = rs.index_of(&Root::unit(2, 2)).unwrap();
        assert_eq!(rs.nab(e1, e2), -1);
    }

    #[test]
    fn d3_rejected() {
        assert!(RootSystemSpec::new(Family::D, 3).is_err());
        assert!(RootSystemSpec::new(Family::A, 0).is_err());
    }

    #[test]
    fn generated_order_has_simple_roots_first() {
        let rs = RootSystem::of(Family::D, 9).unwrap();
        assert_eq!(rs.order(), RootOrder::Generated);
        for i in 0..rs.len() {
            assert_eq!(rs.is_simple(i), rs.height(i) == 1);
            if i > 0 {
                assert!(rs.height(i - 1) <= rs.height(i));
            }
        }
    }
}
