//! Commands of the `orbitkit` binary, each producing a [`Report`].
//!
//! Artifacts are typed structs so that JSON output deserializes back into the
//! documented shapes (see `schemas/`).

use std::collections::BTreeMap;
use std::time::Instant;

use orbitkit::classify::{self, CaseRoute};
use orbitkit::counting::{self, WeightSource};
use orbitkit::criteria::{self, Options};
use orbitkit::oracle::{self, Generators, OracleConfig};
use orbitkit::report::{Report, Verdict};
use orbitkit::{data, Family, Result, RootSet, RootSystem, VPoly};
use serde::{Deserialize, Serialize};
use serde_json::json;

fn finish<T: Serialize>(mut report: Report, artifacts: &T, start: Instant) -> Result<Report> {
    report.artifacts = serde_json::to_value(artifacts)?;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// One positive root in a `roots` dump.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootRow {
    /// CHEVIE index (1-based).
    pub index: usize,
    pub root: String,
    pub height: u32,
    pub simple: bool,
    /// |Sing(root)|, the dimension of the elementary orbit.
    pub sing: usize,
}

/// `[e_a, e_b] = n e_{a+b}` with CHEVIE indices, for `a < b`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub a: usize,
    pub b: usize,
    pub sum: usize,
    pub n: i32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootsArtifacts {
    pub system: String,
    /// `chevie` or `generated`.
    pub order: String,
    pub roots: Vec<RootRow>,
    pub brackets: Vec<Bracket>,
}

/// Roots, CHEVIE indices, Sing sizes and structure constants.
pub fn cmd_roots(family: Family, rank: usize) -> Result<Report> {
    let start = Instant::now();
    let report = Report::new("roots", json!({"family": family, "rank": rank}));
    let rs = RootSystem::of(family, rank)?;
    let roots = (0..rs.len())
        .map(|i| RootRow { index: i + 1, root: rs.root(i).to_string(), height: rs.height(i), simple: rs.is_simple(i), sing: rs.sing(i).len() })
        .collect();
    let mut brackets = Vec::new();
    for a in 0..rs.len() {
        for b in a + 1..rs.len() {
            if let Some(s) = rs.sum_index(a, b) {
                brackets.push(Bracket { a: a + 1, b: b + 1, sum: s + 1, n: rs.nab(a, b) });
            }
        }
    }
    let order = format!("{:?}", rs.order()).to_lowercase();
    finish(report, &RootsArtifacts { system: rs.spec().name(), order, roots, brackets }, start)
}

/// How a Step-2 case was settled.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseRow {
    pub case: String,
    pub route: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    pub strings: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationArtifacts {
    pub exact_match: bool,
    pub weight_match: bool,
    pub ranks_ok: bool,
    pub ours_weight: String,
    pub paper_weight: String,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyArtifacts {
    pub family: Family,
    pub rank: usize,
    pub dim: usize,
    pub strings: Vec<String>,
    /// AL pairs `(arm, leg)` of each string, CHEVIE indices.
    pub al_pairs: Vec<Vec<(usize, usize)>>,
    pub weight: String,
    pub cases: Vec<CaseRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationArtifacts>,
}

/// Extensive orbits of one dimension, optionally compared with the published table.
pub fn cmd_classify(family: Family, rank: usize, dim: usize, verify: bool) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("classify", json!({"family": family, "rank": rank, "dim": dim, "verify": verify}));
    let rs = RootSystem::of(family, rank)?;
    let c = classify::classify_extensive(&rs, dim)?;
    let cases = c
        .cases
        .iter()
        .map(|v| {
            let (route, bound) = match &v.route {
                CaseRoute::Policy => ("policy".to_string(), None),
                CaseRoute::Search => ("search".to_string(), None),
                CaseRoute::Excluded { bound } => ("excluded".to_string(), Some(*bound)),
                CaseRoute::Certified { bound } => ("certified".to_string(), Some(*bound)),
                CaseRoute::Registry { name, bound, .. } => (format!("registry {name}"), Some(*bound)),
            };
            CaseRow { case: v.case.clone(), route, bound, strings: v.strings }
        })
        .collect();
    let verification = if verify {
        let paper = data::paper_strings(rs.spec(), dim)?
            .ok_or_else(|| orbitkit::Error::UnresolvedCoverage(format!("{} dimension {dim}", rs.spec().name())))?;
        let r = classify::verify::compare(&rs, dim, paper, c.strings.clone());
        report.push(Verdict::new("weight polynomial", r.weight_match, format!("ours {} published {}", r.ours_weight, r.paper_weight)));
        let bad: Vec<String> = r.rank_checks.iter().filter(|k| !k.ok).map(|k| k.string.clone()).collect();
        report.push(Verdict::new("published string ranks", bad.is_empty(), bad.join(", ")));
        Some(VerificationArtifacts {
            exact_match: r.exact_match,
            weight_match: r.weight_match,
            ranks_ok: r.ranks_ok(),
            ours_weight: r.ours_weight.to_string(),
            paper_weight: r.paper_weight.to_string(),
            missing: r.missing,
            extra: r.extra,
        })
    } else {
        None
    };
    let artifacts = ClassifyArtifacts {
        family,
        rank,
        dim,
        weight: classify::weight_polynomial(c.strings.iter().map(|s| s.as_str())).to_string(),
        al_pairs: c.strings.iter().map(|s| s.al_pairs_chevie()).collect(),
        strings: c.strings.iter().map(|s| s.to_string()).collect(),
        cases,
        verification,
    };
    finish(report, &artifacts, start)
}

/// Polynomial variable for display.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Var {
    V,
    Q,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expansion {
    /// Coefficients from degree 0 upward.
    pub coeffs: Vec<i128>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountArtifacts {
    pub family: Family,
    pub rank: usize,
    pub e: usize,
    pub source: WeightSource,
    /// The polynomial in the requested variable.
    pub polynomial: String,
    pub v: Expansion,
    pub q: Expansion,
    pub placements: usize,
}

/// O_e as a polynomial in `v = q - 1` and in `q`.
pub fn cmd_count(family: Family, rank: usize, e: usize, var: Var, source: WeightSource) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("count", json!({"family": family, "rank": rank, "e": e, "var": var, "source": source}));
    let p = counting::count_characters_from(source, family, rank, e)?;
    report.push(Verdict::new("nonnegative coefficients in v", counting::isaacs_check(&p), ""));
    let q_coeffs = p.q_coeffs();
    let v = Expansion { coeffs: p.coeffs().to_vec(), text: p.to_string() };
    let q = Expansion { text: VPoly::render(&q_coeffs, "q"), coeffs: q_coeffs };
    let artifacts = CountArtifacts {
        family,
        rank,
        e,
        source,
        polynomial: if var == Var::V { v.text.clone() } else { q.text.clone() },
        placements: counting::placements(family, rank, e)?.len(),
        v,
        q,
    };
    finish(report, &artifacts, start)
}

/// How a census is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum CensusMethod {
    /// Union-find over all forms.
    Enumerate,
    /// Ranks of B_f over all forms.
    Rank,
}

/// Options shared by the oracle commands.
#[derive(Clone, Copy, Debug)]
pub struct OracleArgs {
    pub family: Family,
    pub rank: usize,
    /// Defaults to the smallest admissible prime.
    pub p: Option<u64>,
    pub config: OracleConfig,
}

impl OracleArgs {
    fn setup(&self) -> Result<(RootSystem, u64)> {
        let rs = RootSystem::of(self.family, self.rank)?;
        let p = self.p.unwrap_or_else(|| oracle::minimal_p(&rs));
        Ok((rs, p))
    }

    fn inputs(&self, p: u64) -> serde_json::Value {
        json!({"family": self.family, "rank": self.rank, "p": p, "safe": self.config.safe})
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountingComparison {
    pub e: usize,
    pub census: u64,
    pub counted: i128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusArtifacts {
    pub system: String,
    pub p: u64,
    pub method: CensusMethod,
    pub generators: Generators,
    /// Orbit dimension to number of orbits.
    pub by_dimension: BTreeMap<usize, u64>,
    pub total_forms: u128,
    pub total_orbits: u64,
    pub counting: Vec<CountingComparison>,
}

/// Orbit census by dimension, checked against the counting polynomials at `q = p`.
pub fn cmd_census(args: &OracleArgs, method: CensusMethod) -> Result<Report> {
    let start = Instant::now();
    let (rs, p) = args.setup()?;
    let mut inputs = args.inputs(p);
    inputs["method"] = json!(method);
    let mut report = Report::new("oracle census", inputs);
    let census = match method {
        CensusMethod::Enumerate => oracle::enumerate_orbits_with(&rs, p, &args.config)?,
        CensusMethod::Rank => oracle::rank_census_with(&rs, p, &args.config)?.orbit_census()?,
    };
    report.push(Verdict::new("partition identity", census.partition_identity(), ""));
    let agreement = oracle::compare_with_counting(rs.spec(), &census)?;
    for r in &agreement.rows {
        report.push(Verdict::new(format!("e = {} matches counting at q = {p}", r.e), r.ok, format!("{} vs {}", r.census, r.counted)));
    }
    if let Some(mass) = agreement.mass_identity {
        report.push(Verdict::new("total orbits match counting", mass, ""));
    }
    let artifacts = CensusArtifacts {
        system: census.system.clone(),
        p,
        method,
        generators: args.config.generators,
        by_dimension: census.by_dimension.clone(),
        total_forms: census.total_forms,
        total_orbits: census.total_orbits,
        counting: agreement.rows.iter().map(|r| CountingComparison { e: r.e, census: r.census, counted: r.counted }).collect(),
    };
    finish(report, &artifacts, start)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectionArtifacts {
    pub system: String,
    pub p: u64,
    pub dim: usize,
    pub strings: Vec<String>,
    pub orbits: u64,
    pub points: u64,
    pub met_once: u64,
    pub met_repeatedly: u64,
    pub stray_points: u64,
}

/// Set-section check; without `strings` the published table for `dim` is used.
pub fn cmd_section(args: &OracleArgs, dim: usize, strings: Option<Vec<String>>) -> Result<Report> {
    let start = Instant::now();
    let (rs, p) = args.setup()?;
    let mut inputs = args.inputs(p);
    inputs["dim"] = json!(dim);
    let mut report = Report::new("oracle section", inputs);
    let strings = match strings {
        Some(s) => s,
        None => data::paper_strings(rs.spec(), dim)?
            .ok_or_else(|| orbitkit::Error::UnresolvedCoverage(format!("{} dimension {dim}", rs.spec().name())))?,
    };
    let r = oracle::section_check_with(&rs, p, &strings, dim, &args.config)?;
    report.push(Verdict::new(
        "set-section",
        r.passed,
        format!("{} orbits, {} points, {} met once, {} stray", r.orbits, r.points, r.met_once, r.stray_points),
    ));
    let artifacts = SectionArtifacts {
        system: r.system,
        p,
        dim,
        strings,
        orbits: r.orbits,
        points: r.points,
        met_once: r.met_once,
        met_repeatedly: r.met_repeatedly,
        stray_points: r.stray_points,
    };
    finish(report, &artifacts, start)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyArtifacts {
    pub system: String,
    pub p: u64,
    /// CHEVIE indices.
    pub support: Vec<usize>,
    pub expected: usize,
    /// Rank to number of forms.
    pub ranks: BTreeMap<usize, u64>,
}

/// Rank of B_f on every form with the given support (CHEVIE indices).
pub fn cmd_family(args: &OracleArgs, support: &[usize], expected: usize) -> Result<Report> {
    let start = Instant::now();
    let (rs, p) = args.setup()?;
    let mut inputs = args.inputs(p);
    inputs["support"] = json!(support);
    inputs["expect"] = json!(expected);
    let mut report = Report::new("oracle family", inputs);
    let s: RootSet = support.iter().map(|&c| rs.from_chevie(c)).collect::<Result<_>>()?;
    let r = oracle::family_dim_check_with(&rs, &s, p, expected, &args.config)?;
    report.push(Verdict::new(format!("every form has rank {expected}"), r.passed, format!("{:?}", r.ranks)));
    let artifacts = FamilyArtifacts { system: r.system, p, support: s.to_chevie(), expected, ranks: r.ranks };
    finish(report, &artifacts, start)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionRow {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub checks: usize,
    pub elapsed_ms: u64,
    pub failures: Vec<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyAllArtifacts {
    pub long: bool,
    pub criteria: Vec<CriterionRow>,
}

/// Every acceptance criterion, one verdict each.
pub fn cmd_verify_all(long: bool) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("verify-all", json!({"long": long}));
    let outcomes = criteria::run_all(&Options { long });
    let mut rows = Vec::new();
    for o in outcomes {
        let failures: Vec<Verdict> = o.failures().cloned().collect();
        let detail = failures.iter().map(|v| v.name.clone()).collect::<Vec<_>>().join("; ");
        report.push(Verdict::new(format!("criterion {}: {}", o.id, o.title), o.passed(), detail));
        rows.push(CriterionRow { id: o.id, title: o.title.to_string(), passed: o.passed(), checks: o.verdicts.len(), elapsed_ms: o.elapsed_ms, failures });
    }
    finish(report, &VerifyAllArtifacts { long, criteria: rows }, start)
}
