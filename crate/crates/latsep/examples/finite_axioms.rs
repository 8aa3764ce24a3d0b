//! Decides each separation axiom on a few finite lattices, by definition
//! and on the prime-filter dual.

use latsep::dlat::{Axiom, FinDLat};
use latsep::poset::FinPoset;

fn main() -> latsep::error::Result<()> {
    let v = FinPoset::new(&["p", "q", "r"], &[("p", "r"), ("q", "r")])?;
    let lattices = [
        ("3-chain", FinDLat::chain(3)?),
        ("2^2", FinDLat::boolean(2)?),
        ("downsets of p,q < r", FinDLat::downsets_of(&v)?),
    ];
    for (name, l) in &lattices {
        println!("{name} ({} elements)", l.len());
        for ax in Axiom::ALL {
            let def = l.check_axiom_def(ax);
            let dual = l.dual_axiom_check(ax);
            println!("  {:<11} definition {:<6} dual {}", ax.name(), def.verdict.to_string(), dual.verdict);
        }
    }
    let c3 = &lattices[0].1;
    println!("a ≺ 1 in the 3-chain: {}", c3.rather_below_by_id("a", "1")?);
    println!("a ≺ a in the 3-chain: {}", c3.rather_below_by_id("a", "a")?);
    Ok(())
}
