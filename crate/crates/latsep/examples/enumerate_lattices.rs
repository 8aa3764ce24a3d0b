//! Counts distributive lattices by size, up to isomorphism.

use latsep::dlat::enumerate_dlats;

fn main() -> latsep::error::Result<()> {
    let all = enumerate_dlats(8)?;
    for n in 2..=8 {
        println!("{n}: {}", all.iter().filter(|l| l.len() == n).count());
    }
    Ok(())
}
