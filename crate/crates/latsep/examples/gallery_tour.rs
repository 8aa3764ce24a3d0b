//! Runs every space check on each gallery space and prints the verdicts
//! next to the expected ones.

use std::time::Instant;

use latsep::completions::ShapeBound;
use latsep::gallery::gallery;
use latsep::separations::{Checker, SpaceCheck};

fn main() -> latsep::error::Result<()> {
    for entry in gallery() {
        let Some(space) = entry.space() else { continue };
        println!("== {}: {}", entry.id, entry.description);
        let checker = Checker::new(space, ShapeBound::default()).with_hints(entry.hints.clone());
        for check in SpaceCheck::ALL {
            let t = Instant::now();
            let r = checker.run(check)?;
            let expected = entry
                .expected(&check.name())
                .map(|e| format!("  (expected {})", e.verdict))
                .unwrap_or_default();
            println!("{:<14} {:<22} {:>6.2}s{expected}", check.name(), r.verdict.to_string(), t.elapsed().as_secs_f64());
        }
    }
    Ok(())
}
