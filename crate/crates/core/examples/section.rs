//! Check that classification strings meet every orbit of one dimension exactly once.
//!
//! `cargo run --release --example section -- A3 2`

use orbitkit::classify::classify_extensive;
use orbitkit::oracle::{minimal_p, section_check};
use orbitkit::{data, RootSystem, RootSystemSpec};

fn main() -> orbitkit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rs = RootSystem::new(RootSystemSpec::parse(args.first().map(String::as_str).unwrap_or("A3"))?)?;
    let dim: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let p = minimal_p(&rs);
    let regenerated: Vec<String> = classify_extensive(&rs, dim)?.strings.iter().map(|s| s.to_string()).collect();
    let mut sources = vec![("regenerated", regenerated)];
    if let Some(published) = data::paper_strings(rs.spec(), dim)? {
        sources.push(("published", published));
    }
    for (label, strings) in sources {
        let r = section_check(&rs, p, &strings, dim)?;
        println!("{} dim {dim} over F_{p}, {label} strings {strings:?}", rs.spec().name());
        println!(
            "  {} orbits, {} section points, met once {}, met repeatedly {}, stray points {}: {}",
            r.orbits,
            r.points,
            r.met_once,
            r.met_repeatedly,
            r.stray_points,
            if r.passed { "set-section" } else { "not a set-section" }
        );
    }
    Ok(())
}
