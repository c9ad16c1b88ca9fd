//! Exhaustive consistency sweeps over label ranges.

use crate::error::{Error, Result};
use crate::lie::StructureConstants;
use crate::multiplets::{
    main_multiplet, reduced_multiplet, special_positions, special_reduced, validate_multiplet,
    ArrowKind, Multiplet, Violation,
};
use crate::rational::{fmt_q_list, q, Q};
use crate::rootsys::{AlgebraSpec, Parity};
use crate::signatures::weight_of_node;
use crate::singvec::compare_with_oracle;
use crate::verma::{solve_singular, PbwOrder};
use rayon::prelude::*;
use std::sync::Arc;

/// All tuples of length `len` with entries in `lo..=hi`, lexicographic.
pub fn label_tuples(len: usize, lo: u32, hi: u32) -> Vec<Vec<Q>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Vec<Q>| {
                (lo..=hi).map(move |x| {
                    let mut v = t.clone();
                    v.push(q(x as i64));
                    v
                })
            })
            .collect();
    }
    out
}

/// Requests for every main, reduced and (odd) special reduced multiplet with
/// integer labels up to `max_label` and half-integer labels up to the same bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Request {
    Main(Vec<Q>),
    Reduced(usize, Vec<Q>),
    Special {
        j: usize,
        mu: u32,
        mu2: Option<u32>,
        base: Vec<Q>,
    },
}

impl Request {
    pub fn build(&self, spec: &AlgebraSpec) -> Result<Multiplet> {
        match self {
            Request::Main(m) => main_multiplet(spec, m),
            Request::Reduced(j, m) => reduced_multiplet(spec, *j, m),
            Request::Special { j, mu, mu2, base } => special_reduced(spec, *j, *mu, *mu2, base),
        }
    }
}

pub fn requests(spec: &AlgebraSpec, max_label: u32) -> Vec<Request> {
    let len = spec.h + 1;
    let mut out: Vec<Request> = label_tuples(len, 1, max_label)
        .into_iter()
        .map(Request::Main)
        .collect();
    for j in 1..=len {
        for mut m in label_tuples(len - 1, 1, max_label) {
            m.insert(j - 1, q(0));
            out.push(Request::Reduced(j, m));
        }
    }
    if spec.parity == Parity::Odd {
        let mus: Vec<u32> = (1..=2 * max_label).filter(|x| x % 2 == 1).collect();
        for j in 1..=len {
            let (pos, pos2) = special_positions(spec, j);
            let fixed = 1 + usize::from(pos2.is_some());
            let mut bases = Vec::new();
            for rest in label_tuples(len - fixed, 1, max_label) {
                let mut it = rest.into_iter();
                let base: Vec<Q> = (1..=len)
                    .map(|i| {
                        if i == pos || Some(i) == pos2 {
                            q(1)
                        } else {
                            it.next().unwrap()
                        }
                    })
                    .collect();
                bases.push(base);
            }
            if j == len {
                // m_1 = 0 gives the doubly reduced singlet
                let extra: Vec<Vec<Q>> = bases
                    .iter()
                    .filter(|b| b[0] == q(1))
                    .map(|b| {
                        let mut b = b.clone();
                        b[0] = q(0);
                        b
                    })
                    .collect();
                bases.extend(extra);
            }
            for base in bases {
                for mu in &mus {
                    let seconds: Vec<Option<u32>> = match pos2 {
                        Some(_) => mus.iter().map(|x| Some(*x)).collect(),
                        None => vec![None],
                    };
                    for mu2 in seconds {
                        out.push(Request::Special {
                            j,
                            mu: *mu,
                            mu2,
                            base: base.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct SweepItem {
    /// `kind labels`, e.g. `reduced(2) [1,0,3]`.
    pub name: String,
    pub differential: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub items: Vec<SweepItem>,
    /// Requests rejected by the generators (input regime errors).
    pub rejected: Vec<(String, String)>,
}

impl SweepReport {
    pub fn arrows(&self) -> usize {
        self.items.iter().map(|i| i.differential).sum()
    }

    pub fn violations(&self) -> usize {
        self.items.iter().map(|i| i.violations.len()).sum()
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let status = if item.violations.is_empty() {
                "ok"
            } else {
                "FAIL"
            };
            out.push_str(&format!(
                "{status} {} arrows={}\n",
                item.name, item.differential
            ));
            for v in &item.violations {
                out.push_str(&format!("  {}: {}\n", v.arrow, v.message));
            }
        }
        for (name, err) in &self.rejected {
            out.push_str(&format!("rejected {name}: {err}\n"));
        }
        out.push_str(&format!(
            "multiplets={} differential_arrows={} violations={}\n",
            self.items.len(),
            self.arrows(),
            self.violations()
        ));
        out
    }
}

fn describe(m: &Multiplet) -> String {
    format!("{} [{}]", m.kind, fmt_q_list(&m.labels))
}

/// Validates every generated multiplet in parallel; items come back sorted.
pub fn bgg_sweep(spec: &AlgebraSpec, max_label: u32) -> SweepReport {
    let results: Vec<std::result::Result<SweepItem, (String, String)>> = requests(spec, max_label)
        .par_iter()
        .map(|r| match r.build(spec) {
            Ok(m) => Ok(SweepItem {
                name: describe(&m),
                differential: m.differential().count(),
                violations: validate_multiplet(&m),
            }),
            Err(e) => Err((format!("{r:?}"), e.to_string())),
        })
        .collect();
    let mut report = SweepReport::default();
    for r in results {
        match r {
            Ok(item) => report.items.push(item),
            Err(e) => report.rejected.push(e),
        }
    }
    report.items.sort_by(|a, b| a.name.cmp(&b.name));
    report.items.dedup_by(|a, b| a.name == b.name);
    report.rejected.sort();
    report
}

/// How one differential arrow fared against the singular-vector oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// The closed form is singular and spans the Verma kernel.
    ClosedForm,
    /// No closed form applies; the Verma kernel is nonzero.
    KernelOnly(String),
    Failed(String),
}

#[derive(Debug, Clone)]
pub struct OracleItem {
    pub multiplet: String,
    pub arrow: String,
    pub outcome: OracleOutcome,
}

/// Checks every differential arrow of degree ≤ `max_degree` of the given
/// multiplets: the Verma module of the source node must have a singular vector
/// at Λ − mβ, and where a closed form exists it must be that vector.
pub fn oracle_sweep(multiplets: &[Multiplet], max_degree: u32) -> Vec<OracleItem> {
    let Some(first) = multiplets.first() else {
        return Vec::new();
    };
    let sc = Arc::new(StructureConstants::new(first.spec.n_complex()));
    let rho = sc.rs.rho();
    let mut jobs = Vec::new();
    for mult in multiplets {
        for a in mult.differential() {
            let (Some(root), Some(deg)) = (&a.root, a.degree) else {
                continue;
            };
            if deg > max_degree || a.kind != ArrowKind::Differential {
                continue;
            }
            let src = &mult.nodes[a.src];
            let lambda = weight_of_node(src).sub(&rho);
            let name = format!(
                "{} {}->{} {} m={deg}",
                a.name, src.id, mult.nodes[a.dst].id, root
            );
            jobs.push((describe(mult), name, root.clone(), deg, lambda));
        }
    }
    let mut out: Vec<OracleItem> = jobs
        .into_par_iter()
        .map(|(multiplet, arrow, root, deg, lambda)| {
            let outcome = match compare_with_oracle(sc.clone(), &root, deg, &lambda) {
                Ok(c) if c.check.is_verified() && c.spans_kernel => OracleOutcome::ClosedForm,
                Ok(c) => OracleOutcome::Failed(format!(
                    "closed form verified={} kernel_dim={} spans={}",
                    c.check.is_verified(),
                    c.kernel_dim,
                    c.spans_kernel
                )),
                Err(e @ (Error::NoChainForm(_) | Error::FormulaInapplicable { .. })) => {
                    match solve_singular(sc.clone(), &lambda, &root, deg, PbwOrder::HeightLex) {
                        Ok((_, _, k)) if !k.is_empty() => OracleOutcome::KernelOnly(e.to_string()),
                        Ok(_) => OracleOutcome::Failed("empty Verma kernel".into()),
                        Err(e) => OracleOutcome::Failed(e.to_string()),
                    }
                }
                Err(e) => OracleOutcome::Failed(e.to_string()),
            };
            OracleItem {
                multiplet,
                arrow,
                outcome,
            }
        })
        .collect();
    out.sort_by(|a, b| (&a.multiplet, &a.arrow).cmp(&(&b.multiplet, &b.arrow)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_algebra;

    #[test]
    fn tuples() {
        assert_eq!(label_tuples(2, 1, 3).len(), 9);
        assert_eq!(label_tuples(0, 1, 3), vec![Vec::<Q>::new()]);
    }

    #[test]
    fn every_request_is_valid() {
        for (p, qq) in [(3, 2), (4, 2), (5, 2), (4, 3)] {
            let spec = build_algebra(p, qq).unwrap();
            let report = bgg_sweep(&spec, 2);
            assert!(report.rejected.is_empty(), "{:?}", report.rejected);
            assert_eq!(report.violations(), 0);
            assert!(report.arrows() > 0);
        }
    }

    #[test]
    fn oracle_on_so42() {
        let spec = build_algebra(4, 2).unwrap();
        let m = main_multiplet(&spec, &[q(1), q(1), q(1)]).unwrap();
        let items = oracle_sweep(&[m], 2);
        assert!(!items.is_empty());
        for i in &items {
            assert!(!matches!(i.outcome, OracleOutcome::Failed(_)), "{i:?}");
        }
    }
}
