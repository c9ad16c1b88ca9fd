//! Main multiplet of so(p,q) for positive integer labels.
//!
//!     cargo run --example main_multiplet -- 4 2 1,2,1

use sopq::emit::to_text;
use sopq::multiplets::{main_multiplet, validate_multiplet};
use sopq::rational::parse_q_list;

fn main() -> sopq::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p = args
        .first()
        .map_or(Ok(4), |s| s.parse())
        .expect("p is an integer");
    let q = args
        .get(1)
        .map_or(Ok(2), |s| s.parse())
        .expect("q is an integer");
    let spec = sopq::build_algebra(p, q)?;
    let labels = match args.get(2) {
        Some(s) => parse_q_list(s)?,
        None => vec![sopq::Q::from_integer(1); spec.h + 1],
    };
    let mult = main_multiplet(&spec, &labels)?;
    print!("{}", to_text(&mult));
    println!("BGG violations: {}", validate_multiplet(&mult).len());
    Ok(())
}
