//! Admissibility verdicts and the lifting oracle for every simple Levi of a
//! root system against one dominant weight.
//!
//! cargo run --example admissibility -- B3 0,1,0

use levi_weyl::weylmodule::parse_coords;
use levi_weyl::{classify_pair, enumerate_simple_levis, surjectivity_oracle, RootSystem};

fn main() -> levi_weyl::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = RootSystem::from_type(args.next().unwrap_or_else(|| "B3".into()).parse()?)?;
    let lam = rs.weight_from_fundamental(&parse_coords(
        &args.next().unwrap_or_else(|| "0,1,0".into()),
    )?)?;
    println!(
        "λ = {} in {}",
        rs.render_fundamental(&lam),
        rs.cartan_type()
    );
    for a in enumerate_simple_levis(&rs)? {
        let v = classify_pair(&a, &lam)?;
        let lift = surjectivity_oracle(&a, &lam, 8)?;
        let why: Vec<String> = v
            .reasons
            .iter()
            .map(|r| format!("ω{}↦{}", r.k, r.projection))
            .collect();
        println!(
            "{:<28} globally {:<5} locally {:<5} lift {:<15} {}",
            a.to_string(),
            v.globally,
            v.locally,
            lift.to_string(),
            why.join(" ")
        );
    }
    Ok(())
}
