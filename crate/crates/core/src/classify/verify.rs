//! Comparison of regenerated string sets with the published tables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use super::{classify_extensive, ClassString};
use crate::data;
use crate::error::{Error, Result};
use crate::forms;
use crate::rootsys::RootSystem;
use crate::vpoly::VPoly;

/// Sum of `v^{#S}` over the strings.
pub fn weight_polynomial<'a, I: IntoIterator<Item = &'a str>>(strings: I) -> VPoly {
    strings.into_iter().map(|s| VPoly::monomial(1, s.bytes().filter(|&b| b == b'S').count())).sum()
}

/// Rank of B_f at one random point of V(S) for the `S` letters of a string.
#[derive(Clone, Debug, Serialize)]
pub struct RankCheck {
    pub string: String,
    pub rank: usize,
    pub expected: usize,
    pub ok: bool,
}

/// Rank of B_f for a seeded random rational form with support exactly the `S` letters.
pub fn random_point_rank(rs: &RootSystem, s: &str) -> usize {
    let seed: [u8; 32] = Sha256::digest(s.as_bytes()).into();
    let mut rng = ChaCha8Rng::from_seed(seed);
    let values: Vec<(usize, i64)> = s
        .bytes()
        .enumerate()
        .filter(|(_, b)| *b == b'S')
        .map(|(i, _)| {
            let v: i64 = rng.gen_range(1..=97);
            (i, if rng.gen_bool(0.5) { v } else { -v })
        })
        .collect();
    forms::bform_rank_int(rs, &values)
}

/// Rank check of one string against an expected dimension.
pub fn rank_check(rs: &RootSystem, s: &str, expected: usize) -> RankCheck {
    let rank = random_point_rank(rs, s);
    RankCheck { string: s.to_string(), rank, expected, ok: rank == expected }
}

/// Regenerated strings against the published table for one system and dimension.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub system: String,
    pub dim: usize,
    pub paper: Vec<String>,
    pub ours: Vec<ClassString>,
    pub exact_match: bool,
    pub paper_weight: VPoly,
    pub ours_weight: VPoly,
    pub weight_match: bool,
    /// Published strings not regenerated.
    pub missing: Vec<String>,
    /// Regenerated strings not published.
    pub extra: Vec<String>,
    /// One random-point rank check per published string.
    pub rank_checks: Vec<RankCheck>,
}

impl VerificationReport {
    pub fn ranks_ok(&self) -> bool {
        self.rank_checks.iter().all(|r| r.ok)
    }

    /// Weight equality and every rank check.
    pub fn passed(&self) -> bool {
        self.weight_match && self.ranks_ok()
    }
}

/// Regenerate the strings for `(rs, dim)` and compare with the embedded table.
pub fn verify_against_paper(rs: &RootSystem, dim: usize) -> Result<VerificationReport> {
    let paper = data::paper_strings(rs.spec(), dim)?
        .ok_or_else(|| Error::UnresolvedCoverage(format!("{} dimension {dim}", rs.spec().name())))?;
    let ours = classify_extensive(rs, dim)?.strings;
    Ok(compare(rs, dim, paper, ours))
}

/// Compare a regenerated string list with a published one.
pub fn compare(rs: &RootSystem, dim: usize, paper: Vec<String>, ours: Vec<ClassString>) -> VerificationReport {
    use std::collections::BTreeSet;
    let p: BTreeSet<&str> = paper.iter().map(String::as_str).collect();
    let o: BTreeSet<&str> = ours.iter().map(ClassString::as_str).collect();
    let missing = p.difference(&o).map(|s| s.to_string()).collect();
    let extra = o.difference(&p).map(|s| s.to_string()).collect();
    let paper_weight = weight_polynomial(paper.iter().map(String::as_str));
    let ours_weight = weight_polynomial(ours.iter().map(ClassString::as_str));
    let rank_checks = paper.iter().map(|s| rank_check(rs, s, dim)).collect();
    VerificationReport {
        system: rs.spec().name(),
        dim,
        exact_match: p == o && paper.len() == ours.len(),
        weight_match: paper_weight == ours_weight,
        paper_weight,
        ours_weight,
        missing,
        extra,
        rank_checks,
        paper,
        ours,
    }
}
