//! Runs checks on a lattice given as JSON, as the CLI does for `--file`.

use latsep::completions::ShapeBound;
use latsep::run::{parse_subject, run_subject, Format};

fn main() -> latsep::error::Result<()> {
    let text = r#"{"elements":["0","a","b","1"],"leq":[["0","a"],["0","b"],["a","1"],["b","1"],["0","1"]]}"#;
    let subject = parse_subject(text)?;
    let checks = vec!["vsubfit".to_string(), "boolean".to_string()];
    let r = run_subject("square", &subject, &checks, ShapeBound::default())?;
    print!("{}", r.render(Format::Md));
    println!("exit code {}", r.exit_code());
    Ok(())
}
