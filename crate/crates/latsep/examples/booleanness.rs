//! Booleanness of the lattice and its completions on the third gallery
//! space and on its order dual.

use latsep::completions::ShapeBound;
use latsep::gallery::{cofinite_n, fig3};
use latsep::separations::{BooleanTarget, Checker};

fn main() -> latsep::error::Result<()> {
    for (name, s) in [("finite subsets with ℕ", fig3()), ("cofinite subsets with ∅", cofinite_n())] {
        let c = Checker::new(&s, ShapeBound::default());
        println!("{name}");
        for t in [BooleanTarget::L, BooleanTarget::Dm, BooleanTarget::Bl, BooleanTarget::I, BooleanTarget::Sigma] {
            println!("  Boolean {t:<5} {}", c.boolean(t)?.verdict);
        }
        println!("  subfit L      {}", c.subfit_l().verdict);
        println!("  subfit sigma  {}", c.subfit_sigma().verdict);
    }
    Ok(())
}
