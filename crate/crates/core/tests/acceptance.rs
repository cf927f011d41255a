//! Acceptance runner: one PASS/FAIL line per criterion.
//!
//! Long mode (heavy oracle cases) is enabled by `--long` or `ORBITKIT_LONG=1`.
//! Numeric arguments restrict the run to those criteria.

use std::collections::BTreeSet;
use std::process::ExitCode;

use orbitkit::criteria::{self, Options, Outcome};

/// Verdicts that fail because the published data contains a misprint; see the README.
const KNOWN_RED: &[(u8, &str)] = &[(3, "D4 dim 6 weight"), (5, "B n = ")];

fn is_known_red(o: &Outcome) -> bool {
    o.failures().all(|v| KNOWN_RED.iter().any(|&(id, prefix)| id == o.id && v.name.starts_with(prefix)))
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let long = args.iter().any(|a| a == "--long") || std::env::var("ORBITKIT_LONG").is_ok_and(|v| v == "1");
    let only: BTreeSet<u8> = args.iter().skip(1).filter_map(|a| a.parse().ok()).collect();
    let opts = Options { long };
    let mut unexpected = false;
    for id in criteria::ALL.into_iter().filter(|id| only.is_empty() || only.contains(id)) {
        let o = criteria::run(id, &opts);
        let mark = if o.passed() { "PASS" } else { "FAIL" };
        println!("{mark} criterion {id}: {} ({} checks, {} ms)", o.title, o.verdicts.len(), o.elapsed_ms);
        for v in o.failures() {
            println!("     - {}: {}", v.name, v.detail);
        }
        if !o.passed() && !is_known_red(&o) {
            unexpected = true;
        }
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
