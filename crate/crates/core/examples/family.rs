//! Orbit dimension of every form with a fixed support over F_p.
//!
//! `cargo run --release --example family -- D4 7 6 8,9,10`

use orbitkit::oracle::family_dim_check;
use orbitkit::{RootSet, RootSystem, RootSystemSpec};

fn main() -> orbitkit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rs = RootSystem::new(RootSystemSpec::parse(args.first().map(String::as_str).unwrap_or("D4"))?)?;
    let p: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let expected: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(6);
    let chevie = args.get(3).map(String::as_str).unwrap_or("8,9,10");
    let support: RootSet = chevie.split(',').map(|c| rs.from_chevie(c.trim().parse().unwrap_or(0))).collect::<orbitkit::Result<_>>()?;
    let r = family_dim_check(&rs, &support, p, expected)?;
    println!("{} support {{{chevie}}} over F_{p}", r.system);
    for (rank, n) in &r.ranks {
        println!("  {n} forms with orbit dimension {rank}");
    }
    println!("  all of dimension {expected}: {}", r.passed);
    Ok(())
}
