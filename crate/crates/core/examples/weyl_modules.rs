//! Local and global Weyl modules: fundamental constituents, dimensions and
//! the polynomial algebra acting on the global module.
//!
//! cargo run --example weyl_modules -- D4 "p:0,1,0,0;q:1,0,0,0"

use levi_weyl::weylmodule::{fundamental_weyl_constituents, CurrentWeight};
use levi_weyl::{global_weyl_descriptor, local_weyl_dim, RootSystem};

fn main() -> levi_weyl::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = RootSystem::from_type(args.next().unwrap_or_else(|| "D4".into()).parse()?)?;
    for i in 1..=rs.rank() {
        let parts: Vec<String> = fundamental_weyl_constituents(&rs, i)?
            .iter()
            .map(|w| format!("V({})", rs.render_fundamental(w)))
            .collect();
        println!(
            "W(ω{i}) = {:<32} dim {}",
            parts.join(" + "),
            local_weyl_dim(&rs, &rs.fundamental_weights()[i - 1])?
        );
    }

    let default_psi = format!(
        "p:{};q:{}",
        rs.render_fundamental(&rs.fundamental_weights()[0]),
        rs.render_fundamental(&rs.fundamental_weights()[0])
    );
    let psi = CurrentWeight::parse(&rs, &args.next().unwrap_or(default_psi))?;
    let lam = psi.wt();
    println!(
        "ψ supported at {:?}: wt = {}, dim W(ψ) = {}",
        psi.supp(),
        rs.render_fundamental(&lam),
        psi.local_weyl_character(&rs)?.mass()
    );
    let global = global_weyl_descriptor(&rs, &lam)?;
    println!(
        "global Weyl module W({}): {} polynomial variables, rank {}",
        rs.render_fundamental(&lam),
        global.variable_count(),
        global.rank
    );
    Ok(())
}
