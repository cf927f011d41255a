//! Regenerate the extensive-orbit strings of one system and compare them with the published table.
//!
//! Usage: `cargo run --release --example classify -- D4 6`

use std::time::Instant;

use orbitkit::classify::verify_against_paper;
use orbitkit::{RootSystem, RootSystemSpec};

fn main() -> orbitkit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let system = args.first().map(String::as_str).unwrap_or("A3");
    let dim: usize = args.get(1).and_then(|d| d.parse().ok()).unwrap_or(2);
    let rs = RootSystem::new(RootSystemSpec::parse(system)?)?;
    let t = Instant::now();
    let r = verify_against_paper(&rs, dim)?;
    println!("{} dim {}: {} regenerated, {} published ({:.2?})", r.system, r.dim, r.ours.len(), r.paper.len(), t.elapsed());
    println!("  weight ours      {}", r.ours_weight);
    println!("  weight published {}", r.paper_weight);
    println!("  exact match {}, weight match {}, ranks ok {}", r.exact_match, r.weight_match, r.ranks_ok());
    for s in &r.missing {
        println!("  published only: {s}");
    }
    for s in &r.extra {
        println!("  regenerated only: {s}");
    }
    for c in r.rank_checks.iter().filter(|c| !c.ok) {
        println!("  rank {} != {} for {}", c.rank, c.expected, c.string);
    }
    Ok(())
}
