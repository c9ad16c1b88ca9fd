//! Special reduced pairs of so(7,2) (half-odd labels), including the doubly
//! reduced case that collapses to a singlet.

use sopq::emit::to_text;
use sopq::multiplets::{special_positions, special_reduced};
use sopq::rational::q;

fn main() -> sopq::Result<()> {
    let spec = sopq::build_algebra(7, 2)?;
    for j in 1..=spec.h + 1 {
        let (_, second) = special_positions(&spec, j);
        let mu2 = second.map(|_| 3);
        let mult = special_reduced(&spec, j, 1, mu2, &vec![q(1); spec.h + 1])?;
        print!("{}", to_text(&mult));
    }
    let singlet = special_reduced(&spec, spec.h + 1, 3, None, &[q(0), q(1), q(2), q(1)])?;
    print!("{}", to_text(&singlet));
    Ok(())
}
