//! Distinguished representations of so(3,2) and so(4,2): finite-dimensional
//! content, discrete series, limits, first reduction points, minimal irreps
//! and the two singletons.

use sopq::classify::{classify, weyl_dimension};
use sopq::rational::q;

fn main() -> sopq::Result<()> {
    for (p, qq, labels) in [(3, 2, vec![q(1), q(1)]), (4, 2, vec![q(1), q(2), q(1)])] {
        let spec = sopq::build_algebra(p, qq)?;
        let report = classify(&spec, &labels, 2)?;
        print!("{}", report.to_table());
        println!(
            "finite-dimensional irrep dimension {}\n",
            weyl_dimension(&spec, &labels)?
        );
    }
    Ok(())
}
