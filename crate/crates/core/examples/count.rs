//! O_e for one ambient diagram, in `v = q - 1` and in `q`, from both weight sources.
//!
//! `cargo run --release --example count -- B 9 3`

use orbitkit::counting::{count_characters_from, isaacs_check, placements, WeightSource};
use orbitkit::Family;

fn main() -> orbitkit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family: Family = args.first().map(String::as_str).unwrap_or("B").parse()?;
    let rank: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    let e: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);

    let ours = count_characters_from(WeightSource::Classify, family, rank, e)?;
    let paper = count_characters_from(WeightSource::Published, family, rank, e)?;
    println!("{family}{rank}, e = {e}: {} placements", placements(family, rank, e)?.len());
    println!("  v: {ours}");
    println!("  q: {}", ours.to_q_string());
    println!("  nonnegative in v: {}", isaacs_check(&ours));
    println!("  published tables give the same polynomial: {}", ours == paper);
    Ok(())
}
