//! Every reduced multiplet of one algebra (one label set to zero), with the
//! physically relevant nodes the coincidences produce.

use sopq::multiplets::{reduced_multiplet, relevant_pairs};
use sopq::rational::{fmt_q, q};

fn main() -> sopq::Result<()> {
    for (p, qq) in [(5, 2), (4, 2)] {
        let spec = sopq::build_algebra(p, qq)?;
        println!("so({p},{qq})");
        for j in 1..=spec.h + 1 {
            let mut labels = vec![q(1); spec.h + 1];
            labels[j - 1] = q(0);
            let mult = reduced_multiplet(&spec, j, &labels)?;
            let relevant: Vec<String> = mult
                .relevant_nodes()
                .iter()
                .map(|n| format!("{}={} {}", n.id, n.aliases.join("="), n.signature.text()))
                .collect();
            println!(
                "  m_{j}=0: {} nodes, {} differential arrows, relevant: {}",
                mult.nodes.len(),
                mult.differential().count(),
                relevant.join("; ")
            );
        }
        for pair in relevant_pairs(&spec, &vec![q(1); spec.h])? {
            let plus = pair.d_plus_min.map_or("-".to_string(), |d| fmt_q(&d));
            println!(
                "  j={} d^- max {} d^+ min {plus}",
                pair.j,
                fmt_q(&pair.d_minus_max)
            );
        }
    }
    Ok(())
}
