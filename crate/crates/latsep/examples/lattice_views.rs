//! Membership and joins in the lattices of a fan space: clopen upsets,
//! DM-, BL- and pH-upsets, open upsets and all upsets.

use latsep::completions::{bl_pseudocomplement, LatticeView, ShapeBound, ViewKind};
use latsep::gallery::fig1;
use latsep::symset::FanPart;

fn main() -> latsep::error::Result<()> {
    let s = fig1();
    let fan = s.set::<&str>(&[], &[("x", FanPart::FULL)])?;
    let y = s.set(&["y"], &[])?;
    for kind in ViewKind::ALL {
        let v = LatticeView::new(&s, kind);
        let n = v.shapes(ShapeBound::default())?.len();
        println!("{:<4} {} shapes at bound 2, fan is a member: {}", kind.name(), n, v.is_member(&fan)?);
    }
    let bl = LatticeView::new(&s, ViewKind::Bl);
    println!("{{y}} ∨ fan in BL = {}", s.show(&bl.join(&y, &fan)));
    println!("¬{{y}} in BL = {}", s.show(&bl_pseudocomplement(&s, &y)?));
    Ok(())
}
