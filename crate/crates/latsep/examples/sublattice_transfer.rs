//! Transfer of subfitness and regularity between a lattice and its bounded
//! sublattices.

use latsep::dlat::{FinDLat, SublatticePair, SublatticeProperty};

fn main() -> latsep::error::Result<()> {
    let cube = FinDLat::boolean(3)?;
    let pairs = SublatticePair::all_of(&cube);
    println!("{} bounded sublattices of 2^3", pairs.len());
    for p in pairs.iter().take(5) {
        for prop in [SublatticeProperty::VSubfit, SublatticeProperty::Regular] {
            let r = p.experiment(prop);
            println!(
                "  {} elements, {:?}: join-dense {} meet-dense {} ≺ agrees {} sub {} ambient {} consistent {}",
                p.sub_lattice().len(),
                prop,
                r.join_dense,
                r.meet_dense,
                r.rather_below_agrees,
                r.holds_in_sub,
                r.holds_in_ambient,
                r.consistent
            );
        }
    }
    Ok(())
}
