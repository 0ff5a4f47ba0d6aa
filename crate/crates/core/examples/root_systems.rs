//! Simple roots, fundamental weights and the Cartan matrix of a classical
//! root system.
//!
//! cargo run --example root_systems -- C3

use levi_weyl::{CartanType, RootSystem};

fn main() -> levi_weyl::Result<()> {
    let ty: CartanType = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "B3".into())
        .parse()?;
    let rs = RootSystem::from_type(ty)?;
    println!(
        "{} : rank {}, {} positive roots",
        rs.cartan_type(),
        rs.rank(),
        rs.positive_roots().len()
    );
    for (i, (a, w)) in rs
        .simple_roots()
        .iter()
        .zip(rs.fundamental_weights())
        .enumerate()
    {
        println!(
            "  α{} = {:<10} ω{} = {}",
            i + 1,
            rs.render_eps(a),
            i + 1,
            rs.render_eps(w)
        );
    }
    println!("  ρ = {}", rs.render_eps(rs.rho()));
    println!("Cartan matrix:");
    for row in rs.cartan_matrix() {
        println!("  {row:?}");
    }
    let w1 = &rs.fundamental_weights()[0];
    println!("|W·ω1| = {}", rs.weyl_orbit(w1)?.len());
    Ok(())
}
