//! Graphviz and JSON export of a multiplet; pipe the DOT through `dot -Tsvg`.
//!
//!     cargo run --example dot_export > so42.dot

use sopq::emit::{from_json, lint_dot, to_dot, to_json};
use sopq::multiplets::main_multiplet;
use sopq::rational::q;

fn main() -> sopq::Result<()> {
    let spec = sopq::build_algebra(4, 2)?;
    let mult = main_multiplet(&spec, &[q(1), q(2), q(1)])?;
    let dot = to_dot(&mult);
    lint_dot(&dot).expect("emitted DOT is well formed");
    print!("{dot}");
    let json = to_json(&mult);
    assert_eq!(to_json(&from_json(&json)?), json);
    eprintln!("JSON round trip ok ({} bytes)", json.len());
    Ok(())
}
