//! The fourth gallery space: L(X) is subfit and not regular, while BL(X)
//! is regular.

use latsep::completions::{ShapeBound, ViewKind};
use latsep::gallery::{fig4, fig4_u};
use latsep::separations::{regular_part, regular_part_bl, Checker};

fn main() -> latsep::error::Result<()> {
    let s = fig4();
    let u = fig4_u(&s);
    println!("U       = {}", s.show(&u));
    println!("R(U)    = {}", s.show(&regular_part(&s, &u)?));
    println!("R_BL(U) = {}", s.show(&regular_part_bl(&s, &u)?));
    let c = Checker::new(&s, ShapeBound::default());
    println!("subfit L:      {}", c.subfit_l().verdict);
    println!("regular L:     {}", c.regular(ViewKind::L)?.verdict);
    println!("regular BL:    {}", c.regular(ViewKind::Bl)?.verdict);
    println!("A-regular BL:  {}", c.a_regular_bl()?.verdict);
    Ok(())
}
