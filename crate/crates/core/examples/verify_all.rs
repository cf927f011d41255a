//! Run every acceptance criterion and print one line per criterion.
//!
//! `cargo run --release --example verify_all -- --long`

use orbitkit::criteria::{run_all, Options};

fn main() {
    let long = std::env::args().any(|a| a == "--long");
    for o in run_all(&Options { long }) {
        let mark = if o.passed() { "PASS" } else { "FAIL" };
        println!("{mark} {}: {} ({} checks, {} ms)", o.id, o.title, o.verdicts.len(), o.elapsed_ms);
        for v in o.failures() {
            println!("     {}: {}", v.name, v.detail);
        }
    }
}
