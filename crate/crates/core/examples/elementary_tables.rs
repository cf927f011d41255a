//! Re-derive the elementary-orbit tables: rk B_{e*alpha} = |Sing(alpha)| and every printed row.

use orbitkit::elementary;

fn main() -> orbitkit::Result<()> {
    let report = elementary::verify_tables()?;
    for r in &report.rows {
        let status = match (r.reproduced, r.flagged) {
            (true, _) => "ok      ",
            (false, true) if r.correction_holds => "misprint",
            _ => "MISMATCH",
        };
        println!("{status} [{:>3} inst] {}", r.instances, r.row);
        if let Some(m) = &r.first_mismatch {
            println!("           {m}");
        }
    }
    for e in &report.extensive {
        let mark = if e.consistent() { "ok" } else { "MISMATCH" };
        println!("{mark} extensive {} dim {}: printed {:?} computed {:?}", e.system, e.dim, e.printed, e.computed);
    }
    println!("missing rows: {:?}", report.missing);
    println!("rank failures: {:?}", report.rank_failures);
    println!("passed: {}", report.passed());
    Ok(())
}
