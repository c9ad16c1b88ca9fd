//! Closed-form singular vectors for every chain root of so(5), so(6), so(7),
//! checked against the raising operators and the brute-force Verma kernel.

use sopq::lie::StructureConstants;
use sopq::singvec::{bgg_locus_weight, chain_roots, compare_with_oracle};
use sopq::Q;
use std::sync::Arc;

fn main() -> sopq::Result<()> {
    let seed = [Q::new(1, 3), Q::new(2, 5), Q::new(1, 7)];
    for n in [5, 6, 7] {
        let sc = Arc::new(StructureConstants::new(n));
        for (beta, chain) in chain_roots(&sc.rs) {
            for m in [1, 2] {
                let lambda = bgg_locus_weight(&sc.rs, &beta, m, &seed[..sc.rs.rank]);
                let c = compare_with_oracle(sc.clone(), &beta, m, &lambda)?;
                println!(
                    "so({n}) {chain} m={m}: {} terms, singular={}, kernel dim {}, spans={}",
                    c.poly.len(),
                    c.check.is_verified(),
                    c.kernel_dim,
                    c.spans_kernel
                );
                if n == 5 && m == 1 {
                    println!("    {}", c.poly);
                }
            }
        }
    }
    Ok(())
}
