//! Random linear forms: support, NSupp, Dyn(f), wd and the rank of B_f, with the canonical decomposition.
//!
//! `cargo run --example forms -- D5 4`

use orbitkit::forms::{bform_rank, decompose, dyn_subdiagram, nsupp, Field, LinearForm};
use orbitkit::{RootSet, RootSystem, RootSystemSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> orbitkit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rs = RootSystem::new(RootSystemSpec::parse(args.first().map(String::as_str).unwrap_or("D5"))?)?;
    let size: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let support: RootSet = (0..size).map(|_| rng.gen_range(0..rs.len())).collect();
        let f = LinearForm::random_on(Field::Rational, &support, 9, &mut rng);
        let d = dyn_subdiagram(&rs, &f);
        let shapes: Vec<String> = d.components.iter().filter(|c| c.vertices.len() > 1).map(|c| c.shape.to_string()).collect();
        println!("support {:?}", f.support().to_chevie());
        println!("  NSupp {:?}", nsupp(&rs, &f).to_chevie());
        println!("  Dyn(f) components {shapes:?}, extensive {}, wd {}", d.extensive, d.wd());
        println!("  dim N.f = rk B_f = {}", bform_rank(&rs, &f));
        let dec = decompose(&rs, &f)?;
        for p in &dec.pieces {
            println!("  piece {} on {:?}: rank {}", p.component.shape, p.roots.to_chevie(), bform_rank(&rs, &p.form));
        }
        println!("  character part {:?}", dec.character.support().to_chevie());
    }
    Ok(())
}
