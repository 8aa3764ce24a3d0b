//! Closure, interior and order operators on symbolic sets of the first
//! gallery space.

use latsep::gallery::fig1;
use latsep::symset::FanPart;

fn main() -> latsep::error::Result<()> {
    let s = fig1();
    let fan = s.set::<&str>(&[], &[("x", FanPart::FULL)])?;
    let xi = s.set(&["x_inf"], &[])?;
    let y = s.set(&["y"], &[])?;
    println!("cl {}  = {}", s.show(&fan), s.show(&s.closure(&fan)));
    println!("int {} = {}", s.show(&xi), s.show(&s.interior(&xi)));
    println!("↓{}    = {}", s.show(&y), s.show(&s.down_closure(&y)));
    println!("min X  = {}", s.show(&s.min_set()));
    println!("max X  = {}", s.show(&s.max_set()));
    println!("min X dense: {}", s.is_dense(&s.min_set(), &s.full())?);
    println!("X ∖ {{x_2}} as JSON: {}", serde_json::to_string(&s.set_to_json(&s.full().minus(&s.set::<&str>(&[], &[("x", FanPart::Fin([2].into_iter().collect()))])?)))?);
    Ok(())
}
