//! Prints the traceability matrix for all distributive lattices with at
//! most `n` elements (default 6).

use latsep::matrix::verify_matrix;

fn main() -> latsep::error::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let m = verify_matrix(n)?;
    print!("{}", m.to_markdown());
    Ok(())
}
