//! BGG consistency of every main, reduced and special reduced multiplet for
//! ranks up to 5 and labels up to 3, then the singular-vector oracle on the
//! arrows of so(4,2).

use sopq::multiplets::Multiplet;
use sopq::sweep::{bgg_sweep, oracle_sweep, requests, OracleOutcome};
use std::time::Instant;

fn main() -> sopq::Result<()> {
    let start = Instant::now();
    for n in 5..=11 {
        let spec = sopq::build_algebra(n - 2, 2)?;
        let report = bgg_sweep(&spec, 3);
        println!(
            "so({},2): {} multiplets, {} differential arrows, {} violations",
            n - 2,
            report.items.len(),
            report.arrows(),
            report.violations()
        );
    }
    println!("sweep took {:?}", start.elapsed());

    let spec = sopq::build_algebra(4, 2)?;
    let mults: Vec<Multiplet> = requests(&spec, 2)
        .iter()
        .map(|r| r.build(&spec))
        .collect::<Result<_, _>>()?;
    let items = oracle_sweep(&mults, 2);
    let closed = items
        .iter()
        .filter(|i| i.outcome == OracleOutcome::ClosedForm)
        .count();
    let failed = items
        .iter()
        .filter(|i| matches!(i.outcome, OracleOutcome::Failed(_)))
        .count();
    println!(
        "so(4,2) oracle: {} arrows, {closed} by closed form, {failed} failures",
        items.len()
    );
    Ok(())
}
