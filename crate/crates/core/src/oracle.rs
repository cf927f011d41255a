//! Brute-force ground truth over small prime fields: coadjoint orbit enumeration,
//! rank censuses, set-section checks and family-dimension checks.
//!
//! Forms are vectors of coordinates `f[i] = f(e_i)` in `F_p`, encoded as mixed-radix
//! integers `sum f[i] p^i` for indexing.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting;
use crate::error::{Error, Result};
use crate::forms;
use crate::linalg::{inv_mod, is_prime, mul_mod, next_prime};
use crate::rootset::RootSet;
use crate::rootsys::{RootSystem, RootSystemSpec};
use crate::vpoly::VPoly;

/// Default bound on stored states for orbit enumeration.
pub const DEFAULT_BUDGET: u128 = 20_000_000;

/// Default bound on rank computations for censuses and family checks.
pub const RANK_BUDGET: u128 = 200_000_000;

/// Which one-parameter subgroups generate the action.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Generators {
    /// `x_a(1)` for every positive root `a`.
    #[default]
    AllRoots,
    /// `x_a(1)` for the simple roots only.
    Simple,
}

/// Limits and modes shared by the oracle operations.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct OracleConfig {
    /// Maximal number of stored states.
    pub budget: u128,
    /// Maximal number of rank computations.
    pub rank_budget: u128,
    /// Require `p > dim g` instead of `p` above the highest-root height.
    pub safe: bool,
    pub generators: Generators,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: DEFAULT_BUDGET, rank_budget: RANK_BUDGET, safe: false, generators: Generators::AllRoots }
    }
}

/// Smallest prime exceeding the height of the highest root.
pub fn minimal_p(rs: &RootSystem) -> u64 {
    next_prime(rs.height(rs.highest_root()) as u64)
}

/// `dim g = rank + 2 |Phi+|`.
pub fn dim_g(rs: &RootSystem) -> u64 {
    (rs.rank() + 2 * rs.len()) as u64
}

/// Reject non-primes and characteristics too small for the exponential.
pub fn check_characteristic(rs: &RootSystem, p: u64, safe: bool) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let bound = if safe { dim_g(rs) } else { rs.height(rs.highest_root()) as u64 };
    if p <= bound {
        return Err(Error::CharacteristicTooSmall { system: rs.spec().name(), p, bound });
    }
    Ok(())
}

fn budget_check(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

fn pow_u128(p: u64, e: usize) -> u128 {
    (p as u128).saturating_pow(e as u32)
}

fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Terms `(beta, beta + k alpha, coefficient)` with `k >= 1` of `x_alpha(t)` acting on forms.
fn action_terms(rs: &RootSystem, p: u64, alpha: usize, t: u64) -> Vec<(usize, usize, u64)> {
    let mut out = Vec::new();
    let minus_t = (p - t % p) % p;
    for beta in 0..rs.len() {
        let mut cur = beta;
        let mut c = 1u64;
        let mut tk = 1u64;
        let mut fact = 1u64;
        let mut k = 0u64;
        while let Some(next) = rs.sum_index(alpha, cur) {
            c = mul_mod(c, reduce(rs.nab(alpha, cur) as i64, p), p);
            k += 1;
            tk = mul_mod(tk, minus_t, p);
            fact = mul_mod(fact, k % p, p);
            let coeff = mul_mod(mul_mod(tk, c, p), inv_mod(fact, p), p);
            if coeff != 0 {
                out.push((beta, next, coeff));
            }
            cur = next;
        }
    }
    out
}

/// Matrix `M` of `f -> f o Ad(exp(-t e_alpha))`, so that the new form is `M f`.
pub fn generator_action(rs: &RootSystem, p: u64, alpha: usize, t: u64) -> Result<Vec<Vec<u64>>> {
    check_characteristic(rs, p, false)?;
    if alpha >= rs.len() {
        return Err(Error::IndexOutOfRange { index: alpha + 1, len: rs.len() });
    }
    let n = rs.len();
    let mut m = vec![vec![0u64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for (beta, target, coeff) in action_terms(rs, p, alpha, t) {
        m[beta][target] = (m[beta][target] + coeff) % p;
    }
    Ok(m)
}

type Mat = Vec<Vec<u64>>;

fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + mul_mod(a[i][k], b[k][j], p)) % p;
            }
        }
    }
    out
}

/// `exp(s E)` for nilpotent `E` over `F_p`.
fn mat_exp(e: &Mat, s: u64, p: u64, system: &str) -> Result<Mat> {
    let n = e.len();
    let mut out: Mat = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    let mut power = out.clone();
    let mut coeff = 1u64;
    for k in 1u64.. {
        power = mat_mul(&power, e, p);
        if power.iter().flatten().all(|&v| v == 0) {
            break;
        }
        if k >= p {
            return Err(Error::CharacteristicTooSmall { system: system.to_string(), p, bound: k });
        }
        coeff = mul_mod(mul_mod(coeff, s, p), inv_mod(k, p), p);
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (out[i][j] + mul_mod(coeff, power[i][j], p)) % p;
            }
        }
    }
    Ok(out)
}

/// [`generator_action`] computed by conjugation in the natural matrix representation.
pub fn realization_action(rs: &RootSystem, p: u64, alpha: usize, t: u64) -> Result<Vec<Vec<u64>>> {
    check_characteristic(rs, p, false)?;
    let name = rs.spec().name();
    let to_p = |m: Vec<Vec<i64>>| -> Mat { m.into_iter().map(|r| r.into_iter().map(|v| reduce(v, p)).collect()).collect() };
    let vecs: Vec<Mat> = (0..rs.len()).map(|i| to_p(rs.root_matrix(i))).collect();
    let e = &vecs[alpha];
    let g = mat_exp(e, t % p, p, &name)?;
    let g_inv = mat_exp(e, (p - t % p) % p, p, &name)?;
    let pivots: Vec<(usize, usize, u64)> = vecs
        .iter()
        .map(|m| {
            let (r, c) = (0..m.len()).flat_map(|r| (0..m.len()).map(move |c| (r, c))).find(|&(r, c)| m[r][c] != 0).expect("nonzero root matrix");
            (r, c, inv_mod(m[r][c], p))
        })
        .collect();
    let n = rs.len();
    let mut out = vec![vec![0u64; n]; n];
    for (beta, row) in out.iter_mut().enumerate() {
        let y = mat_mul(&mat_mul(&g_inv, &vecs[beta], p), &g, p);
        let mut rebuilt = vec![vec![0u64; y.len()]; y.len()];
        for (gamma, &(r, c, inv)) in pivots.iter().enumerate() {
            let coeff = mul_mod(y[r][c], inv, p);
            row[gamma] = coeff;
            for (i, line) in vecs[gamma].iter().enumerate() {
                for (j, &v) in line.iter().enumerate() {
                    rebuilt[i][j] = (rebuilt[i][j] + mul_mod(coeff, v, p)) % p;
                }
            }
        }
        if rebuilt != y {
            return Err(Error::Data(format!("Ad(exp) of root {} leaves the nilradical", beta + 1)));
        }
    }
    Ok(out)
}

/// Whether [`generator_action`] and [`realization_action`] agree for every root and every `t`.
pub fn cross_check_action(rs: &RootSystem, p: u64) -> Result<bool> {
    for alpha in 0..rs.len() {
        for t in 0..p {
            if generator_action(rs, p, alpha, t)? != realization_action(rs, p, alpha, t)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Orbit counts by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCensus {
    pub system: String,
    pub p: u64,
    /// Orbit dimension `2e` to number of orbits.
    pub by_dimension: BTreeMap<usize, u64>,
    /// `p^{|Phi+|}`.
    pub total_forms: u128,
    pub total_orbits: u64,
}

impl OrbitCensus {
    fn new(system: String, p: u64, n_roots: usize, by_dimension: BTreeMap<usize, u64>) -> Self {
        let total_orbits = by_dimension.values().sum();
        OrbitCensus { system, p, by_dimension, total_forms: pow_u128(p, n_roots), total_orbits }
    }

    /// `sum count(2e) p^{2e} = p^{|Phi+|}`.
    pub fn partition_identity(&self) -> bool {
        let sum: u128 = self.by_dimension.iter().map(|(&d, &c)| c as u128 * pow_u128(self.p, d)).sum();
        sum == self.total_forms
    }

    pub fn count(&self, dim: usize) -> u64 {
        self.by_dimension.get(&dim).copied().unwrap_or(0)
    }
}

/// Exponent `k` with `size = p^k`, if any.
fn log_p(size: u64, p: u64) -> Option<usize> {
    let mut k = 0;
    let mut s = size;
    while s > 1 {
        if s % p != 0 {
            return None;
        }
        s /= p;
        k += 1;
    }
    Some(k)
}

/// Every form labelled by its orbit.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    p: u64,
    n_roots: usize,
    system: String,
    /// Representative state of the orbit of each state.
    rep: Vec<u32>,
    /// Orbit dimension, indexed by representative.
    dim: HashMap<u32, usize>,
}

impl OrbitPartition {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn num_states(&self) -> usize {
        self.rep.len()
    }

    pub fn encode(&self, f: &[u64]) -> u32 {
        f.iter().rev().fold(0u64, |acc, &v| acc * self.p + v % self.p) as u32
    }

    pub fn decode(&self, mut s: u32) -> Vec<u64> {
        (0..self.n_roots)
            .map(|_| {
                let v = s as u64 % self.p;
                s = (s as u64 / self.p) as u32;
                v
            })
            .collect()
    }

    /// Representative state of the orbit of `s`.
    pub fn orbit_of(&self, s: u32) -> u32 {
        self.rep[s as usize]
    }

    /// Dimension of the orbit of `s`.
    pub fn dim_of(&self, s: u32) -> usize {
        self.dim[&self.orbit_of(s)]
    }

    /// Representatives of all orbits.
    pub fn orbits(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.dim.iter().map(|(&r, &d)| (r, d))
    }

    pub fn census(&self) -> OrbitCensus {
        let mut by_dimension = BTreeMap::new();
        for &d in self.dim.values() {
            *by_dimension.entry(d).or_insert(0) += 1;
        }
        OrbitCensus::new(self.system.clone(), self.p, self.n_roots, by_dimension)
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Partition all of `F_p^{|Phi+|}` into coadjoint orbits by union-find.
pub fn orbit_partition(rs: &RootSystem, p: u64, cfg: &OracleConfig) -> Result<OrbitPartition> {
    check_characteristic(rs, p, cfg.safe)?;
    let n = rs.len();
    let states = pow_u128(p, n);
    budget_check(states, cfg.budget.min(u32::MAX as u128))?;
    let alphas: Vec<usize> = match cfg.generators {
        Generators::AllRoots => (0..n).collect(),
        Generators::Simple => rs.simple_indices().collect(),
    };
    let place: Vec<u64> = (0..n).map(|i| p.pow(i as u32)).collect();
    let gens: Vec<Vec<(usize, usize, u64)>> = alphas.iter().map(|&a| action_terms(rs, p, a, 1)).collect();
    let states = states as usize;
    let mut parent: Vec<u32> = (0..states as u32).collect();
    let mut f = vec![0u64; n];
    for s in 0..states {
        let mut rest = s as u64;
        for v in f.iter_mut() {
            *v = rest % p;
            rest /= p;
        }
        for terms in &gens {
            let mut image = s as u64;
            for &(beta, target, coeff) in terms {
                let add = mul_mod(coeff, f[target], p);
                if add != 0 {
                    let old = (image / place[beta]) % p;
                    let new = (old + add) % p;
                    image = image - old * place[beta] + new * place[beta];
                }
            }
            let (a, b) = (find(&mut parent, s as u32), find(&mut parent, image as u32));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut size: HashMap<u32, u64> = HashMap::new();
    for s in 0..states as u32 {
        let r = find(&mut parent, s);
        parent[s as usize] = r;
        *size.entry(r).or_insert(0) += 1;
    }
    let mut dim = HashMap::with_capacity(size.len());
    for (r, sz) in size {
        match log_p(sz, p) {
            Some(k) if k % 2 == 0 => {
                dim.insert(r, k);
            }
            _ => return Err(Error::IrregularOrbit { size: sz, p }),
        }
    }
    Ok(OrbitPartition { p, n_roots: n, system: rs.spec().name(), rep: parent, dim })
}

/// Orbit census by exhaustive enumeration with the default configuration.
pub fn enumerate_orbits(rs: &RootSystem, p: u64) -> Result<OrbitCensus> {
    enumerate_orbits_with(rs, p, &OracleConfig::default())
}

pub fn enumerate_orbits_with(rs: &RootSystem, p: u64, cfg: &OracleConfig) -> Result<OrbitCensus> {
    Ok(orbit_partition(rs, p, cfg)?.census())
}

/// Number of forms by rank of B_f.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCensus {
    pub system: String,
    pub p: u64,
    pub by_rank: BTreeMap<usize, u128>,
    /// Rank computations performed; B_f ignores the simple coordinates.
    pub evaluated: u128,
    n_roots: usize,
}

impl RankCensus {
    /// Orbit counts `#{f : rk B_f = 2e} / p^{2e}`.
    pub fn orbit_census(&self) -> Result<OrbitCensus> {
        let mut by_dimension = BTreeMap::new();
        for (&r, &forms) in &self.by_rank {
            let size = pow_u128(self.p, r);
            if r % 2 != 0 || forms % size != 0 {
                return Err(Error::IrregularOrbit { size: forms as u64, p: self.p });
            }
            by_dimension.insert(r, (forms / size) as u64);
        }
        Ok(OrbitCensus::new(self.system.clone(), self.p, self.n_roots, by_dimension))
    }
}

/// Coordinates on the non-simple roots of the `index`-th form in mixed radix.
fn non_simple_form(rs: &RootSystem, p: u64, mut index: u128) -> Vec<u64> {
    let mut f = vec![0u64; rs.len()];
    for v in f.iter_mut().skip(rs.rank()) {
        *v = (index % p as u128) as u64;
        index /= p as u128;
    }
    f
}

fn for_each_rank<T, F>(rs: &RootSystem, p: u64, cfg: &OracleConfig, init: T, fold: F) -> Result<(T, u128)>
where
    T: Send + Clone + Sync,
    F: Fn(T, &[u64], usize) -> T + Sync,
    T: Merge,
{
    check_characteristic(rs, p, cfg.safe)?;
    let count = pow_u128(p, rs.len() - rs.rank());
    budget_check(count, cfg.rank_budget)?;
    let chunk = 4096u128;
    let chunks = count.div_ceil(chunk);
    let result = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = init.clone();
            for i in c * chunk..((c + 1) * chunk).min(count) {
                let f = non_simple_form(rs, p, i);
                let r = forms::bform_rank_mod(rs, &f, p);
                acc = fold(acc, &f, r);
            }
            acc
        })
        .reduce(|| init.clone(), Merge::merge);
    Ok((result, count))
}

trait Merge {
    fn merge(self, other: Self) -> Self;
}

impl Merge for BTreeMap<usize, u128> {
    fn merge(mut self, other: Self) -> Self {
        for (k, v) in other {
            *self.entry(k).or_insert(0) += v;
        }
        self
    }
}

impl Merge for BTreeMap<usize, RootSet> {
    fn merge(mut self, other: Self) -> Self {
        for (k, v) in other {
            let e = self.entry(k).or_default();
            *e = e.union(&v);
        }
        self
    }
}

/// Census of B_f ranks over all forms, computed on the non-simple coordinates and scaled by `p^{rank}`.
pub fn rank_census(rs: &RootSystem, p: u64) -> Result<RankCensus> {
    rank_census_with(rs, p, &OracleConfig::default())
}

pub fn rank_census_with(rs: &RootSystem, p: u64, cfg: &OracleConfig) -> Result<RankCensus> {
    let (counts, evaluated) = for_each_rank(rs, p, cfg, BTreeMap::new(), |mut acc: BTreeMap<usize, u128>, _, r| {
        *acc.entry(r).or_insert(0) += 1;
        acc
    })?;
    let scale = pow_u128(p, rs.rank());
    let by_rank = counts.into_iter().map(|(r, c)| (r, c * scale)).collect();
    Ok(RankCensus { system: rs.spec().name(), p, by_rank, evaluated, n_roots: rs.len() })
}

/// Per-dimension comparison of a census with [`counting::count_characters`] at `q = p`.
#[derive(Clone, Debug, Serialize)]
pub struct CountingRow {
    pub e: usize,
    pub census: u64,
    pub polynomial: VPoly,
    pub counted: i128,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CountingAgreement {
    pub system: String,
    pub p: u64,
    pub rows: Vec<CountingRow>,
    pub partition_identity: bool,
    /// Sum over `e` of the counting polynomials at `q = p` against the total orbit count;
    /// absent when the census has orbits beyond dimension 6.
    pub mass_identity: Option<bool>,
}

impl CountingAgreement {
    pub fn passed(&self) -> bool {
        self.partition_identity && self.mass_identity != Some(false) && self.rows.iter().all(|r| r.ok)
    }
}

/// Compare a census of `spec` with the counting polynomials for `e <= 3`.
pub fn compare_with_counting(spec: RootSystemSpec, census: &OrbitCensus) -> Result<CountingAgreement> {
    let max_dim = census.by_dimension.keys().copied().max().unwrap_or(0);
    let mut rows = Vec::new();
    for e in 0..=3 {
        let polynomial = counting::count_characters(spec.family, spec.rank, e)?;
        let counted = polynomial.eval_q(census.p as i128);
        let got = census.count(2 * e);
        rows.push(CountingRow { e, census: got, counted, ok: counted == got as i128, polynomial });
    }
    let mass: i128 = rows.iter().map(|r| r.counted).sum();
    Ok(CountingAgreement {
        system: census.system.clone(),
        p: census.p,
        partition_identity: census.partition_identity(),
        mass_identity: (max_dim <= 6).then_some(mass == census.total_orbits as i128),
        rows,
    })
}

/// Union of supports of all orbits of one dimension against `supp_d`.
#[derive(Clone, Debug, Serialize)]
pub struct SupportRow {
    pub d: usize,
    pub union: RootSet,
    pub expected: RootSet,
    pub ok: bool,
}

/// Union of the supports of all `2d`-dimensional orbits, for `2d <= |Sing(highest root)|`.
pub fn support_unions(rs: &RootSystem, p: u64, cfg: &OracleConfig) -> Result<Vec<SupportRow>> {
    let (unions, _) = for_each_rank(rs, p, cfg, BTreeMap::new(), |mut acc: BTreeMap<usize, RootSet>, f, r| {
        let supp: RootSet = f.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i).collect();
        let e = acc.entry(r).or_default();
        *e = e.union(&supp);
        acc
    })?;
    let simple: RootSet = rs.simple_indices().collect();
    let top = rs.sing(rs.highest_root()).len() / 2;
    Ok((0..=top)
        .map(|d| {
            let union = unions.get(&(2 * d)).map_or(RootSet::EMPTY, |u| u.union(&simple));
            let expected = rs.supp_d(d);
            SupportRow { d, union, expected, ok: union == expected }
        })
        .collect())
}

/// Lower bound `dim >= wd(Dyn(f))` over every form of a partition.
#[derive(Clone, Debug, Serialize)]
pub struct WdReport {
    pub checked: u64,
    /// Violations as (state, orbit dimension, wd).
    pub violations: Vec<(u32, usize, usize)>,
}

impl WdReport {
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.violations.is_empty()
    }
}

pub fn wd_check(rs: &RootSystem, part: &OrbitPartition) -> WdReport {
    let mut memo: HashMap<RootSet, usize> = HashMap::new();
    let mut violations = Vec::new();
    for s in 0..part.num_states() as u32 {
        let f = part.decode(s);
        let supp: RootSet = f.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i).collect();
        let wd = *memo.entry(supp).or_insert_with(|| forms::dyn_of_ideal(rs, &rs.ideal(&supp)).wd());
        let dim = part.dim_of(s);
        if dim < wd {
            violations.push((s, dim, wd));
        }
    }
    WdReport { checked: part.num_states() as u64, violations }
}

/// Outcome of a set-section check.
#[derive(Clone, Debug, Serialize)]
pub struct SectionReport {
    pub system: String,
    pub p: u64,
    pub dim: usize,
    /// Extensive orbits of the dimension.
    pub orbits: u64,
    /// Points of the union of the V(S).
    pub points: u64,
    /// Extensive orbits of the dimension met exactly once.
    pub met_once: u64,
    /// Extensive orbits of the dimension met more than once.
    pub met_repeatedly: u64,
    /// Points whose orbit is not an extensive orbit of the dimension.
    pub stray_points: u64,
    pub passed: bool,
}

fn support_of(s: &str) -> RootSet {
    s.bytes().enumerate().filter(|(_, b)| *b == b'S').map(|(i, _)| i).collect()
}

/// Whether `V(S_1) ⊔ V(S_2) ⊔ ...` meets every extensive orbit of dimension `dim` exactly once
/// and lies in such orbits.
pub fn section_check<S: AsRef<str>>(rs: &RootSystem, p: u64, strings: &[S], dim: usize) -> Result<SectionReport> {
    section_check_with(rs, p, strings, dim, &OracleConfig::default())
}

pub fn section_check_with<S: AsRef<str>>(
    rs: &RootSystem,
    p: u64,
    strings: &[S],
    dim: usize,
    cfg: &OracleConfig,
) -> Result<SectionReport> {
    for s in strings {
        if s.as_ref().len() != rs.len() {
            return Err(Error::BadString(s.as_ref().to_string()));
        }
    }
    let points: u128 = strings.iter().map(|s| pow_u128(p - 1, support_of(s.as_ref()).len())).sum();
    budget_check(points, cfg.budget)?;
    let part = orbit_partition(rs, p, cfg)?;
    let mut extensive: HashMap<u32, bool> = HashMap::new();
    let mut is_target = |r: u32, d: usize| {
        d == dim
            && *extensive.entry(r).or_insert_with(|| {
                let f = part.decode(r);
                let supp: RootSet = f.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i).collect();
                forms::dyn_of_ideal(rs, &rs.ideal(&supp)).extensive
            })
    };
    let targets: Vec<u32> = part.orbits().filter(|&(r, d)| is_target(r, d)).map(|(r, _)| r).collect();
    let mut hits: HashMap<u32, u64> = HashMap::new();
    let mut stray = 0u64;
    for s in strings {
        let supp: Vec<usize> = support_of(s.as_ref()).iter().collect();
        let total = pow_u128(p - 1, supp.len());
        let mut f = vec![0u64; rs.len()];
        for mut idx in 0..total {
            for &i in &supp {
                f[i] = 1 + (idx % (p - 1) as u128) as u64;
                idx /= (p - 1) as u128;
            }
            let r = part.orbit_of(part.encode(&f));
            if is_target(r, part.dim_of(r)) {
                *hits.entry(r).or_insert(0) += 1;
            } else {
                stray += 1;
            }
        }
    }
    let met_once = targets.iter().filter(|r| hits.get(r) == Some(&1)).count() as u64;
    let met_repeatedly = hits.values().filter(|&&h| h > 1).count() as u64;
    let orbits = targets.len() as u64;
    Ok(SectionReport {
        system: rs.spec().name(),
        p,
        dim,
        orbits,
        points: points as u64,
        met_once,
        met_repeatedly,
        stray_points: stray,
        passed: stray == 0 && met_once == orbits && met_repeatedly == 0,
    })
}

/// Ranks of B_f over all forms with support exactly `S`.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub system: String,
    pub p: u64,
    pub support: RootSet,
    pub expected: usize,
    /// Rank to number of forms.
    pub ranks: BTreeMap<usize, u64>,
    pub passed: bool,
}

/// Whether every form with support exactly `s` has `rk B_f = expected` over `F_p`.
pub fn family_dim_check(rs: &RootSystem, s: &RootSet, p: u64, expected: usize) -> Result<FamilyReport> {
    family_dim_check_with(rs, s, p, expected, &OracleConfig::default())
}

pub fn family_dim_check_with(rs: &RootSystem, s: &RootSet, p: u64, expected: usize, cfg: &OracleConfig) -> Result<FamilyReport> {
    check_characteristic(rs, p, cfg.safe)?;
    if let Some(bad) = s.iter().find(|&i| i >= rs.len()) {
        return Err(Error::IndexOutOfRange { index: bad + 1, len: rs.len() });
    }
    let supp: Vec<usize> = s.iter().collect();
    let total = pow_u128(p - 1, supp.len());
    budget_check(total, cfg.rank_budget)?;
    let ranks = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<usize, u64>, mut idx| {
            let mut f = vec![0u64; rs.len()];
            for &i in &supp {
                f[i] = 1 + (idx % (p - 1) as u128) as u64;
                idx /= (p - 1) as u128;
            }
            *acc.entry(forms::bform_rank_mod(rs, &f, p)).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let passed = ranks.keys().all(|&r| r == expected);
    Ok(FamilyReport { system: rs.spec().name(), p, support: *s, expected, ranks, passed })
}
