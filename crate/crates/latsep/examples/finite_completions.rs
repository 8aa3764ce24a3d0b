//! Builds all five completions of a finite lattice; each is isomorphic to
//! the lattice itself.

use latsep::dlat::{CompletionKind, FinDLat};
use latsep::poset::FinPoset;

fn main() -> latsep::error::Result<()> {
    let p = FinPoset::new(&["p", "q", "r"], &[("p", "r")])?;
    let l = FinDLat::downsets_of(&p)?;
    println!("lattice of downsets: {:?}", l.ids());
    for kind in [
        CompletionKind::Dm,
        CompletionKind::Bl,
        CompletionKind::Ideal,
        CompletionKind::Canonical,
        CompletionKind::Ph,
    ] {
        let c = l.completion(kind)?;
        println!(
            "{:<9} {} elements, identity up to isomorphism: {}",
            kind.name(),
            c.lattice.len(),
            c.is_identity_up_to_iso(&l)
        );
    }
    let a = l.index_of("{p,r}")?;
    let ann = l.relative_annihilator(a, l.bottom());
    println!("⟨{{p,r}}, ∅⟩ = {:?}, normal: {}", l.names(ann.ideal.members), ann.normal);
    Ok(())
}
