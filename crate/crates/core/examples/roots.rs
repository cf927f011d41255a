//! Positive roots of a classical system in CHEVIE order, with heights, Sing sizes and the nonzero brackets.
//!
//! `cargo run --example roots -- B3`

use orbitkit::{RootSystem, RootSystemSpec};

fn main() -> orbitkit::Result<()> {
    let system = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let rs = RootSystem::new(RootSystemSpec::parse(&system)?)?;
    println!("{} ({:?} order), {} positive roots", rs.spec().name(), rs.order(), rs.len());
    for i in 0..rs.len() {
        println!("  {:>2}  {:<10} height {}  |Sing| {}", i + 1, rs.root(i).to_string(), rs.height(i), rs.sing(i).len());
    }
    println!("brackets [e_a, e_b] = N e_(a+b):");
    for a in 0..rs.len() {
        for b in a + 1..rs.len() {
            if let Some(s) = rs.sum_index(a, b) {
                println!("  [{}, {}] = {:+} e_{}", a + 1, b + 1, rs.nab(a, b), s + 1);
            }
        }
    }
    Ok(())
}
