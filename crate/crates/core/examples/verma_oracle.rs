//! The Verma module engine on its own: structure constants, PBW slices
//! against Kostant's partition function, and a singular vector found as the
//! joint kernel of the raising operators.

use sopq::kostant::PartitionFunction;
use sopq::lie::StructureConstants;
use sopq::rootsys::{Root, Weight};
use sopq::verma::{solve_singular, PbwOrder, VermaModule};
use sopq::Q;
use std::sync::Arc;

fn main() -> sopq::Result<()> {
    let sc = Arc::new(StructureConstants::new(7));
    println!(
        "so(7): dim {}, Jacobi violations {}",
        sc.dim(),
        sc.jacobi_violations()
    );

    let lambda = Weight(vec![Q::new(1, 2), Q::new(1, 3), Q::new(1, 5)]);
    let module = VermaModule::new(sc.clone(), &lambda, PbwOrder::HeightLex);
    let mut pf = PartitionFunction::new(&sc.rs);
    for nu in [[1, 1, 1], [2, 1, 1], [1, 2, 2], [2, 2, 2]] {
        println!(
            "slice {nu:?}: PBW dim {}, Kostant {}",
            module.slice(&nu).dim(),
            pf.count(&nu)
        );
    }

    // (Λ+ρ, β∨) = 2 for β = ε1 − ε3
    let beta = Root::eps_minus(3, 1, 3);
    let lambda = Weight(vec![Q::from_integer(0), Q::new(1, 3), Q::from_integer(0)]);
    let (module, slice, kernel) = solve_singular(sc, &lambda, &beta, 2, PbwOrder::HeightLex)?;
    println!(
        "Λ − 2β: slice dim {}, singular vectors {}",
        slice.dim(),
        kernel.len()
    );
    for v in &kernel {
        println!("  {}", module.format(v));
    }
    Ok(())
}
