//! Enumerates the simple Levi subalgebras of a root system, shows the weight
//! projection π, and branches an irreducible module to one of them.
//!
//! cargo run --example levis -- B3 0,1,0

use levi_weyl::weylmodule::parse_coords;
use levi_weyl::{branching_multiplicities, enumerate_simple_levis, RootSystem};

fn main() -> levi_weyl::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = RootSystem::from_type(args.next().unwrap_or_else(|| "B3".into()).parse()?)?;
    let lam = rs.weight_from_fundamental(&parse_coords(
        &args.next().unwrap_or_else(|| "0,1,0".into()),
    )?)?;

    let levis = enumerate_simple_levis(&rs)?;
    println!(
        "{} simple Levi subalgebras of {}",
        levis.len(),
        rs.cartan_type()
    );
    for (i, a) in levis.iter().enumerate() {
        let tag = if a.is_simple_root_generated() {
            ""
        } else {
            "  (not simple-root generated)"
        };
        println!(
            "{:>3}. {:<28} π({}) = {}{tag}",
            i + 1,
            a.to_string(),
            rs.render_fundamental(&lam),
            a.system().render_fundamental(&a.project(&lam)?)
        );
    }

    let a = levis.last().expect("at least one Levi");
    println!("V({}) restricted to {a}:", rs.render_fundamental(&lam));
    for (tau, c) in branching_multiplicities(&rs, &lam, a)? {
        println!("  V({}) x {c}", a.system().render_fundamental(&tau));
    }
    Ok(())
}
