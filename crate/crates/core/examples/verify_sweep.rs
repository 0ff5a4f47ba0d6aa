//! Runs the verification checks over a grid of root systems and prints a
//! summary per check.
//!
//! cargo run --release --example verify_sweep -- B2,C3,D4

use std::collections::BTreeMap;

use levi_weyl::verify::{summarize, sweep, SweepConfig};
use levi_weyl::CartanType;

fn main() -> levi_weyl::Result<()> {
    let list = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "A2,B2,C2,B3".into());
    let systems = list
        .split(',')
        .map(|t| t.parse::<CartanType>().map(|c| c.components()[0]))
        .collect::<levi_weyl::Result<Vec<_>>>()?;
    let reports = sweep(&SweepConfig {
        systems,
        ..SweepConfig::default()
    })?;

    let mut by_check: BTreeMap<&str, Vec<_>> = BTreeMap::new();
    for r in &reports {
        by_check
            .entry(r.check.as_str())
            .or_default()
            .push(r.clone());
    }
    for (check, rs) in &by_check {
        let s = summarize(rs);
        println!(
            "{check:<22} {:>6} passed {:>4} failed {:>4} skipped",
            s.pass, s.fail, s.skipped
        );
    }
    for r in reports.iter().filter(|r| r.failed()) {
        println!("FAIL {} {} [{}] [{}]", r.check, r.g, r.levi, r.lambda);
    }
    let s = summarize(&reports);
    println!(
        "total: {} passed, {} failed, {} skipped",
        s.pass, s.fail, s.skipped
    );
    Ok(())
}
