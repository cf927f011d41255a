//! Brute-force orbit census over F_p compared with the orbit-counting polynomials at q = p.
//!
//! `cargo run --release --example oracle_census -- B3 7`

use orbitkit::oracle::{compare_with_counting, enumerate_orbits, minimal_p, rank_census, DEFAULT_BUDGET};
use orbitkit::{RootSystem, RootSystemSpec};

fn main() -> orbitkit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rs = RootSystem::new(RootSystemSpec::parse(args.first().map(String::as_str).unwrap_or("A3"))?)?;
    let p = args.get(1).and_then(|s| s.parse().ok()).unwrap_or_else(|| minimal_p(&rs));
    let census = if (p as u128).pow(rs.len() as u32) <= DEFAULT_BUDGET {
        println!("{} over F_{p}: orbit enumeration", rs.spec().name());
        enumerate_orbits(&rs, p)?
    } else {
        println!("{} over F_{p}: rank census", rs.spec().name());
        rank_census(&rs, p)?.orbit_census()?
    };
    println!("  {} forms, {} orbits, partition identity {}", census.total_forms, census.total_orbits, census.partition_identity());
    let agreement = compare_with_counting(rs.spec(), &census)?;
    for row in &agreement.rows {
        println!("  dim {}: census {}, O_{}(q) = {} gives {}", 2 * row.e, row.census, row.e, row.polynomial.to_q_string(), row.counted);
    }
    println!("  per-dimension agreement {}, total agreement {:?}", agreement.passed(), agreement.mass_identity);
    Ok(())
}
