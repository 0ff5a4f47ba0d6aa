//! Weight multiplicities, dimensions and tensor product decompositions.
//!
//! cargo run --example characters -- A2 1,1

use levi_weyl::weylmodule::parse_coords;
use levi_weyl::{decompose, dim_irreducible, irreducible_character, tensor_character, RootSystem};

fn main() -> levi_weyl::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = RootSystem::from_type(args.next().unwrap_or_else(|| "A2".into()).parse()?)?;
    let lam =
        rs.weight_from_fundamental(&parse_coords(&args.next().unwrap_or_else(|| "1,1".into()))?)?;

    let ch = irreducible_character(&rs, &lam)?;
    println!(
        "V({}) of {}: dim {}",
        rs.render_fundamental(&lam),
        rs.cartan_type(),
        dim_irreducible(&rs, &lam)?
    );
    for (mu, m) in ch
        .iter()
        .filter(|(mu, _)| rs.is_dominant(mu).unwrap_or(false))
    {
        println!(
            "  dominant weight {:<8} multiplicity {m}",
            rs.render_fundamental(mu)
        );
    }

    let square = tensor_character(&ch, &ch)?;
    println!("V ⊗ V:");
    for (w, m) in decompose(&rs, &square)? {
        println!("  V({}) x {m}", rs.render_fundamental(&w));
    }
    Ok(())
}
