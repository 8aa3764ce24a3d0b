//! The first gallery space: L(X) is not subfit, BL(X) is, with the
//! separating sets recorded pair by pair.

use latsep::completions::{ShapeBound, ViewKind};
use latsep::gallery::entry;
use latsep::separations::Checker;

fn main() -> latsep::error::Result<()> {
    let e = entry("fig1")?;
    let space = e.space().expect("fig1 is a space");
    let c = Checker::new(space, ShapeBound::default()).with_hints(e.hints.clone());
    let l = c.subfit_l();
    println!("subfit L: {} witness {:?}", l.verdict, l.witness);
    let bl = c.subfit_view(ViewKind::Bl)?;
    println!("subfit BL: {} over {} pairs", bl.verdict, bl.witness_map.len());
    for p in bl.witness_map.iter().take(6) {
        let show = |j| space.show(&space.set_from_json(j).unwrap());
        println!("  U = {:<18} V = {:<18} W = {}", show(&p.u), show(&p.v), show(&p.w));
    }
    let i = Checker::new(&latsep::gallery::fig2(), ShapeBound::default()).i_subfit();
    println!("second space, OpUp subfit: {} {:?}", i.verdict, i.trace.last().map(|t| &t.step));
    Ok(())
}
