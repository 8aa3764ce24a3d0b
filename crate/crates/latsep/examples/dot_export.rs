//! Writes Graphviz drawings of a gallery space and a finite lattice.

use latsep::dlat::FinDLat;
use latsep::dot::{lattice_to_dot, space_to_dot, DEFAULT_FAN_PREFIX};
use latsep::gallery::fig4;

fn main() -> latsep::error::Result<()> {
    print!("{}", space_to_dot(&fig4(), DEFAULT_FAN_PREFIX, "fig4"));
    print!("{}", lattice_to_dot(&FinDLat::boolean(2)?, "2^2"));
    Ok(())
}
