//! The distinguished representations inside a multiplet: finite-dimensional
//! content, discrete series and their limits, first reduction points, the
//! unitary points below them, and the minimal irreps with the operators whose
//! kernels cut them out.

use crate::error::{Error, Result};
use crate::multiplets::{
    main_multiplet, reduced_multiplet, relevant_pairs, singlet, special_reduced, ArrowKind,
    Multiplet,
};
use crate::rational::{fmt_q, half, positive_integer, q, to_big, Q};
use crate::rootsys::{AlgebraSpec, Parity, Root};
use crate::signatures::{labels_to_n, ERNode, Tag};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;
use std::fmt::Write as _;

/// Dimension of the so(p+q,ℂ) irrep with highest weight Σ(m_i − 1)ω_i, by
/// the Weyl product formula.
pub fn weyl_dimension(spec: &AlgebraSpec, m: &[Q]) -> Result<BigInt> {
    if m.len() != spec.h + 1 {
        return Err(Error::LabelCount {
            expected: spec.h + 1,
            got: m.len(),
        });
    }
    if let Some(bad) = m.iter().find(|x| positive_integer(x).is_none()) {
        return Err(Error::Regime(format!(
            "Weyl dimension needs m_i ≥ 1 integer (got {bad})"
        )));
    }
    let n = labels_to_n(spec, m)?;
    let shifted: Vec<Q> = n.iter().rev().copied().collect();
    let rs = spec.root_system();
    let rho = rs.rho();
    let mut acc = BigRational::one();
    for a in rs.positive_roots() {
        let num: Q = a.coords.iter().zip(&shifted).map(|(c, x)| *x * q(*c)).sum();
        let den = rho.dot(&a.coords.iter().map(|c| q(*c)).collect::<Vec<_>>());
        acc *= to_big(num) / to_big(den);
    }
    debug_assert!(acc.is_integer() && acc.is_positive());
    Ok(acc.to_integer())
}

#[derive(Debug, Clone)]
pub struct FiniteDim {
    pub node: ERNode,
    /// Signature (m_1, …, m_{h+1}) of the finite-dimensional irrep.
    pub labels: Vec<Q>,
    pub dimension: BigInt,
}

#[derive(Debug, Clone)]
pub struct DiscreteEntry {
    pub node: ERNode,
    pub nu: u32,
    /// p > q = 2: the invariant subspace splits into holomorphic and
    /// anti-holomorphic parts.
    pub holomorphic_split: bool,
}

/// A named representation taken from some multiplet.
#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub node: ERNode,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct MinimalEntry {
    pub name: String,
    pub node: ERNode,
    pub cutting_ops: Vec<(Root, u32)>,
    /// The irrep is also annihilated by a (non-degenerate) G^+.
    pub ks_condition: bool,
    /// G^+ out of this node degenerates to a differential operator.
    pub ks_degenerate: bool,
    pub special: bool,
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub spec: AlgebraSpec,
    pub labels: Vec<Q>,
    pub finite_dim: FiniteDim,
    /// Whether χ^+_1 carries discrete series (always for p+q odd; pq even otherwise).
    pub discrete_gate: bool,
    pub discrete_series: Vec<DiscreteEntry>,
    /// χ^+_k, k > 1, which contain further (non-holomorphic) discrete series.
    pub non_holomorphic: Vec<Entry>,
    pub limits: Vec<Entry>,
    pub frp: Vec<Entry>,
    pub below_frp: Vec<Entry>,
    pub minimal: Vec<MinimalEntry>,
    pub singletons: Vec<Entry>,
    /// p+q even: the c = 0 singlet closing the relevant pairs.
    pub even_singlet: Option<Entry>,
}

fn tagged(node: &ERNode, tag: Tag) -> ERNode {
    node.clone().with_tag(tag)
}

/// Relevant node of a reduced multiplet with the smallest c.
fn lowest_relevant(mult: &Multiplet) -> ERNode {
    mult.relevant_nodes()
        .into_iter()
        .min_by_key(|n| n.c())
        .cloned()
        .expect("reduced multiplets carry a relevant node")
}

fn cutting(mult: &Multiplet, node: &ERNode) -> (Vec<(Root, u32)>, bool, bool) {
    let idx = mult
        .node_index(&node.id)
        .expect("node belongs to the multiplet");
    let ops = mult
        .outgoing(idx)
        .into_iter()
        .map(|a| {
            (
                a.root.clone().expect("differential"),
                a.degree.expect("differential"),
            )
        })
        .collect();
    let gplus: Vec<_> = mult
        .knapp_stein()
        .filter(|a| a.src == idx && a.kind == ArrowKind::KnappStein && a.name.starts_with("G^+"))
        .collect();
    let ks_condition = gplus.iter().any(|a| !a.degenerate);
    let ks_degenerate = gplus.iter().any(|a| a.degenerate);
    (ops, ks_condition, ks_degenerate)
}

fn minimal_from(name: String, mult: &Multiplet, node: ERNode, special: bool) -> MinimalEntry {
    let (cutting_ops, ks_condition, ks_degenerate) = cutting(mult, &node);
    MinimalEntry {
        name,
        node: tagged(&node, Tag::Minimal),
        cutting_ops,
        ks_condition,
        ks_degenerate,
        special,
    }
}

fn ones(n: usize) -> Vec<Q> {
    vec![q(1); n]
}

/// Classifies the representations attached to main-regime labels m_1 … m_{h+1}.
///
/// The M-labels of the displayed representations are taken from m_1 … m_h;
/// `nu_range` bounds the discrete-series parameter ν = 1 … nu_range.
pub fn classify(spec: &AlgebraSpec, m: &[Q], nu_range: u32) -> Result<ClassificationReport> {
    if nu_range < 1 {
        return Err(Error::Regime("ν range must be at least 1".into()));
    }
    let main = main_multiplet(spec, m)?;
    let h = spec.h;
    let big_m: Vec<Q> = m[..h].to_vec();
    let m1 = positive_integer(&big_m[0]).expect("checked by main_multiplet");

    let fd_node = main
        .node("chi-1")
        .expect("main multiplet has chi-1")
        .clone();
    let finite_dim = FiniteDim {
        node: fd_node,
        labels: m.to_vec(),
        dimension: weyl_dimension(spec, m)?,
    };

    let holomorphic_split = spec.q == 2 && spec.p > 2;
    let discrete_gate = match spec.parity {
        Parity::Odd => true,
        Parity::Even => (spec.p * spec.q) % 2 == 0,
    };
    // labels whose χ^+_1 displays `big_m`, with ν in the last slot
    let with_last = |last: Q| -> Vec<Q> {
        let mut l = big_m.clone();
        if spec.parity == Parity::Even {
            l.swap(0, 1);
        }
        l.push(last);
        l
    };
    let mut discrete_series = Vec::new();
    if discrete_gate {
        for nu in 1..=nu_range {
            let mult = main_multiplet(spec, &with_last(q(nu as i64)))?;
            discrete_series.push(DiscreteEntry {
                node: tagged(mult.node("chi+1").unwrap(), Tag::DiscreteSeries),
                nu,
                holomorphic_split,
            });
        }
    }
    let top = match spec.parity {
        Parity::Odd => h,
        Parity::Even => h + 1,
    };
    let non_holomorphic = (2..=top)
        .map(|k| Entry {
            name: format!("chi+{k}"),
            node: tagged(main.node(&format!("chi+{k}")).unwrap(), Tag::DiscreteSeries),
            note: Some("non-holomorphic discrete series".into()),
        })
        .collect();

    let lim = reduced_multiplet(spec, h + 1, &with_last(q(0)))?;
    let limits = vec![Entry {
        name: "_r chi+1".into(),
        node: tagged(lim.node("chi+1").unwrap(), Tag::Limit),
        note: Some("nu = 0".into()),
    }];

    let frp = match spec.parity {
        Parity::Odd => odd_frp(spec, &big_m, m1)?,
        Parity::Even => even_frp(spec, &big_m)?,
    };
    let below_frp = below_frp(spec, &big_m, m1)?;
    let minimal = minimal(spec)?;

    let singletons = if h == 1 {
        let special: Vec<&MinimalEntry> = minimal.iter().filter(|e| e.special).collect();
        special[special.len() - 2..]
            .iter()
            .map(|e| Entry {
                name: e.name.clone(),
                node: tagged(&e.node, Tag::Singleton),
                note: Some("h=1 singleton-type".into()),
            })
            .collect()
    } else {
        Vec::new()
    };

    let even_singlet = match spec.parity {
        Parity::Odd => None,
        Parity::Even => {
            let s = singlet(spec, None, &big_m[1..])?;
            Some(Entry {
                name: "_r chi^s".into(),
                node: s.nodes[0].clone(),
                note: Some("m = 0 closure of the last two pairs".into()),
            })
        }
    };

    Ok(ClassificationReport {
        spec: *spec,
        labels: m.to_vec(),
        finite_dim,
        discrete_gate,
        discrete_series,
        non_holomorphic,
        limits,
        frp,
        below_frp,
        minimal,
        singletons,
        even_singlet,
    })
}

fn frp_entry(name: &str, node: &ERNode) -> Entry {
    Entry {
        name: name.into(),
        node: tagged(node, Tag::Frp),
        note: None,
    }
}

fn labels_with(head: &[i64], tail: &[Q]) -> Vec<Q> {
    head.iter()
        .map(|x| q(*x))
        .chain(tail.iter().copied())
        .collect()
}

fn odd_frp(spec: &AlgebraSpec, big_m: &[Q], m1: u32) -> Result<Vec<Entry>> {
    let h = spec.h;
    let tail = &big_m[1..];
    let entry = match m1 {
        1 => {
            let mult = reduced_multiplet(spec, 2, &labels_with(&[1, 0], tail))?;
            frp_entry(&format!("_r chi-{h}"), &lowest_relevant(&mult))
        }
        2 => {
            let mult = reduced_multiplet(spec, 1, &labels_with(&[0, 1], tail))?;
            frp_entry(&format!("_r chi{}", h + 1), &lowest_relevant(&mult))
        }
        _ => {
            let mult = main_multiplet(spec, &labels_with(&[m1 as i64 - 2, 1], tail))?;
            frp_entry(
                &format!("chi+{}", h + 1),
                mult.node(&format!("chi+{}", h + 1)).unwrap(),
            )
        }
    };
    Ok(vec![entry])
}

fn even_frp(spec: &AlgebraSpec, big_m: &[Q]) -> Result<Vec<Entry>> {
    let h = spec.h;
    let m1 = positive_integer(&big_m[0]).unwrap() as i64;
    let m2 = positive_integer(&big_m[1]).unwrap() as i64;
    let tail = &big_m[2..];
    let mut out = Vec::new();
    if m1 >= 2 && m2 >= 2 {
        let mult = main_multiplet(spec, &labels_with(&[m2 - 1, m1 - 1, 1], tail))?;
        out.push(frp_entry(
            &format!("chi+{h}"),
            mult.node(&format!("chi+{h}")).unwrap(),
        ));
    }
    if m1 >= 3 {
        let mult = main_multiplet(spec, &labels_with(&[1, m1 - 2, 1], tail))?;
        let mut e = frp_entry(
            &format!("chi-{}", h + 1),
            mult.node(&format!("chi-{}", h + 1)).unwrap(),
        );
        e.note = Some("m_2 = 1".into());
        out.push(e);
    }
    if m2 >= 3 {
        let mult = main_multiplet(spec, &labels_with(&[m2 - 2, 1, 1], tail))?;
        let mut e = frp_entry(
            &format!("chi+{}", h + 1),
            mult.node(&format!("chi+{}", h + 1)).unwrap(),
        );
        e.note = Some("m_1 = 1".into());
        out.push(e);
    }
    let terminal: [(&[i64], usize, String); 3] = [
        (&[1, 1, 0], 3, format!("_r chi-{}", h - 1)),
        (&[1, 0, 1], 2, format!("_r chi-{h}")),
        (&[0, 1, 1], 1, format!("_r chi-{}", h + 1)),
    ];
    for (head, j, name) in terminal {
        let mult = reduced_multiplet(spec, j, &labels_with(head, tail))?;
        let mut e = frp_entry(&name, &lowest_relevant(&mult));
        e.note = Some("terminal".into());
        out.push(e);
    }
    Ok(out)
}

fn below_entry(name: String, node: &ERNode, note: &str) -> Entry {
    Entry {
        name,
        node: tagged(node, Tag::BelowFrp),
        note: Some(note.into()),
    }
}

fn below_frp(spec: &AlgebraSpec, big_m: &[Q], m1: u32) -> Result<Vec<Entry>> {
    let h = spec.h;
    let mut out = Vec::new();
    if spec.parity == Parity::Odd {
        let tail = &big_m[1..];
        let (name, mult) = if m1 == 1 {
            let mult = if h == 1 {
                special_reduced(spec, 1, 1, None, &ones(2))?
            } else {
                let m2 = positive_integer(&big_m[1]).unwrap();
                let mut l = ones(3);
                l.extend_from_slice(&tail[1..]);
                special_reduced(spec, h, 1, Some(2 * m2 - 1), &l)?
            };
            (format!("_s chi-{h}"), mult)
        } else {
            let (first, mu) = if m1 % 2 == 1 {
                (2, m1 - 2)
            } else {
                (1, m1 - 1)
            };
            let l = labels_with(&[first, 1], tail);
            (
                format!("_s chi-{}", h + 1),
                special_reduced(spec, h + 1, mu, None, &l)?,
            )
        };
        out.push(below_entry(name, &mult.nodes[0], "special reduced"));
    }
    let last = match spec.parity {
        Parity::Odd => h.saturating_sub(1),
        Parity::Even => h.saturating_sub(2),
    };
    if last >= 1 {
        let pairs = relevant_pairs(spec, &ones(h))?;
        for pr in pairs.iter().filter(|p| p.j <= last) {
            out.push(below_entry(
                format!("_r chi-{}", pr.j),
                &pr.minus,
                "trivial M",
            ));
        }
    }
    Ok(out)
}

/// Minimal irreps: relevant pairs at unit labels (plus the special reduced
/// ones when p+q is odd), each with the operators whose kernels define it.
pub fn minimal(spec: &AlgebraSpec) -> Result<Vec<MinimalEntry>> {
    let h = spec.h;
    let mut out = Vec::new();
    for pr in relevant_pairs(spec, &ones(h))? {
        let name = if pr.minus.is_singlet() {
            format!("_r chi{}", pr.j)
        } else {
            format!("_r chi-{}", pr.j)
        };
        out.push(minimal_from(name, &pr.source, pr.minus, false));
    }
    if spec.parity == Parity::Odd {
        for j in 1..=h + 1 {
            let mu2 = (2..=h).contains(&j).then_some(1);
            let mult = special_reduced(spec, j, 1, mu2, &ones(h + 1))?;
            let node = mult.nodes[0].clone();
            let name = if node.is_singlet() {
                format!("_s chi{j}")
            } else {
                format!("_s chi-{j}")
            };
            out.push(minimal_from(name, &mult, node, true));
        }
    }
    Ok(out)
}

/// One line of the rendered report.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub class: String,
    pub name: String,
    pub signature: String,
    pub c: String,
    pub d: String,
    pub cutting: String,
    pub note: String,
}

fn ops_text(ops: &[(Root, u32)], ks: bool, degenerate: bool) -> String {
    let mut parts: Vec<String> = ops.iter().map(|(r, m)| format!("D^{m}_{r}")).collect();
    if ks {
        parts.push("G^+".into());
    }
    if degenerate {
        parts.push("(G^+ degenerate)".into());
    }
    parts.join(", ")
}

impl ClassificationReport {
    pub fn rows(&self) -> Vec<Row> {
        let row = |class: &str, name: &str, node: &ERNode, cutting: String, note: String| Row {
            class: class.into(),
            name: name.into(),
            signature: node.signature.text(),
            c: fmt_q(&node.c()),
            d: fmt_q(&node.d),
            cutting,
            note,
        };
        let mut out = vec![row(
            "finite-dim",
            "chi-1",
            &self.finite_dim.node,
            String::new(),
            format!(
                "irrep ({}) dim {}",
                crate::rational::fmt_q_list(&self.finite_dim.labels),
                self.finite_dim.dimension
            ),
        )];
        if !self.discrete_gate {
            out.push(Row {
                class: "discrete".into(),
                name: "chi+1".into(),
                signature: String::new(),
                c: String::new(),
                d: String::new(),
                cutting: String::new(),
                note: "no discrete series: pq odd".into(),
            });
        }
        for e in &self.discrete_series {
            let note = if e.holomorphic_split {
                format!("nu={} holomorphic + antiholomorphic", e.nu)
            } else {
                format!("nu={}", e.nu)
            };
            out.push(row("discrete", "chi+1", &e.node, String::new(), note));
        }
        let plain = |class: &str, list: &[Entry], out: &mut Vec<Row>| {
            for e in list {
                out.push(row(
                    class,
                    &e.name,
                    &e.node,
                    String::new(),
                    e.note.clone().unwrap_or_default(),
                ));
            }
        };
        plain("discrete", &self.non_holomorphic, &mut out);
        plain("limit", &self.limits, &mut out);
        plain("frp", &self.frp, &mut out);
        plain("below-frp", &self.below_frp, &mut out);
        for e in &self.minimal {
            out.push(row(
                "minimal",
                &e.name,
                &e.node,
                ops_text(&e.cutting_ops, e.ks_condition, e.ks_degenerate),
                if e.special {
                    "special reduced".into()
                } else {
                    String::new()
                },
            ));
        }
        plain("singleton", &self.singletons, &mut out);
        if let Some(e) = &self.even_singlet {
            plain("singlet", std::slice::from_ref(e), &mut out);
        }
        out
    }

    /// Aligned plain-text table.
    pub fn to_table(&self) -> String {
        let rows = self.rows();
        let header = [
            "class",
            "name",
            "signature",
            "c",
            "d",
            "cutting operators",
            "note",
        ];
        let cells: Vec<[String; 7]> = rows
            .iter()
            .map(|r| {
                [
                    r.class.clone(),
                    r.name.clone(),
                    r.signature.clone(),
                    r.c.clone(),
                    r.d.clone(),
                    r.cutting.clone(),
                    r.note.clone(),
                ]
            })
            .collect();
        let mut width = header.map(|h| h.chars().count());
        for c in &cells {
            for (w, s) in width.iter_mut().zip(c) {
                *w = (*w).max(s.chars().count());
            }
        }
        let mut out = String::new();
        let _ = writeln!(
            out,
            "so({},{})  labels ({})",
            self.spec.p,
            self.spec.q,
            crate::rational::fmt_q_list(&self.labels)
        );
        let line = |cols: Vec<&str>| {
            let mut s = String::new();
            for (i, (c, w)) in cols.iter().zip(width).enumerate() {
                if i + 1 == cols.len() {
                    s.push_str(c);
                } else {
                    s.push_str(c);
                    s.push_str(&" ".repeat(w - c.chars().count() + 2));
                }
            }
            s.trim_end().to_string()
        };
        let _ = writeln!(out, "{}", line(header.to_vec()));
        for c in &cells {
            let _ = writeln!(out, "{}", line(c.iter().map(String::as_str).collect()));
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            spec: crate::emit::SpecDoc,
            labels: Vec<String>,
            dimension: String,
            discrete_gate: bool,
            rows: &'a [Row],
        }
        let rows = self.rows();
        let doc = Doc {
            spec: crate::emit::SpecDoc {
                p: self.spec.p,
                q: self.spec.q,
            },
            labels: self.labels.iter().map(fmt_q).collect(),
            dimension: self.finite_dim.dimension.to_string(),
            discrete_gate: self.discrete_gate,
            rows: &rows,
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

/// Closed form of the odd discrete-series weight: h + ½(m_1+1) + m_{2,h} + ν.
pub fn odd_discrete_d(h: usize, big_m: &[Q], nu: u32) -> Q {
    q(h as i64) + half(1) * (big_m[0] + q(1)) + big_m[1..].iter().sum::<Q>() + q(nu as i64)
}

/// Closed form of the even discrete-series weight: h + ½m_{12} + m_{3,h} + ν.
pub fn even_discrete_d(h: usize, big_m: &[Q], nu: u32) -> Q {
    q(h as i64) + half(1) * (big_m[0] + big_m[1]) + big_m[2..].iter().sum::<Q>() + q(nu as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_algebra;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|x| q(*x)).collect()
    }

    #[test]
    fn weyl_trivial_and_vector() {
        for n in 5..=11 {
            let p = n - 2;
            let spec = build_algebra(p, 2).unwrap();
            assert_eq!(
                weyl_dimension(&spec, &ones(spec.h + 1)).unwrap(),
                BigInt::from(1)
            );
        }
        let s5 = build_algebra(3, 2).unwrap();
        assert_eq!(weyl_dimension(&s5, &qs(&[1, 2])).unwrap(), BigInt::from(5));
        assert_eq!(weyl_dimension(&s5, &qs(&[2, 1])).unwrap(), BigInt::from(4));
        let s6 = build_algebra(4, 2).unwrap();
        assert_eq!(
            weyl_dimension(&s6, &qs(&[2, 1, 1])).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            weyl_dimension(&s6, &qs(&[1, 1, 2])).unwrap(),
            BigInt::from(6)
        );
        assert!(weyl_dimension(&s6, &qs(&[0, 1, 2])).is_err());
    }

    #[test]
    fn so32_singletons() {
        let spec = build_algebra(3, 2).unwrap();
        let r = classify(&spec, &qs(&[1, 1]), 5).unwrap();
        let s: Vec<(String, Q)> = r
            .singletons
            .iter()
            .map(|e| (e.node.signature.text(), e.node.d))
            .collect();
        assert_eq!(
            s,
            vec![("[1 ; -1]".into(), half(1)), ("[2 ; -1/2]".into(), q(1))]
        );
    }

    #[test]
    fn odd_discrete_closed_form() {
        let spec = build_algebra(7, 2).unwrap();
        let m = qs(&[2, 1, 3, 1]);
        let r = classify(&spec, &m, 4).unwrap();
        for e in &r.discrete_series {
            assert_eq!(e.node.signature.mlabels(), m[..3].to_vec());
            assert_eq!(e.node.d, odd_discrete_d(3, &m[..3], e.nu));
            assert!(e.holomorphic_split);
        }
        let lim = &r.limits[0].node;
        assert_eq!(lim.d, odd_discrete_d(3, &m[..3], 0));
        assert_eq!(lim.signature.mlabels(), m[..3].to_vec());
    }

    #[test]
    fn even_discrete_closed_form_and_gate() {
        let spec = build_algebra(6, 2).unwrap();
        let m = qs(&[3, 1, 2, 1]);
        let r = classify(&spec, &m, 3).unwrap();
        assert!(r.discrete_gate);
        for e in &r.discrete_series {
            assert_eq!(e.node.signature.mlabels(), m[..3].to_vec());
            assert_eq!(e.node.d, even_discrete_d(3, &m[..3], e.nu));
        }
        let odd_pq = build_algebra(5, 3).unwrap();
        let r = classify(&odd_pq, &qs(&[1, 1, 1, 1]), 3).unwrap();
        assert!(!r.discrete_gate);
        assert!(r.discrete_series.is_empty());
    }

    #[test]
    fn so42_frp() {
        let spec = build_algebra(4, 2).unwrap();
        let r = classify(&spec, &qs(&[2, 3, 1]), 1).unwrap();
        let first = &r.frp[0];
        assert_eq!(first.name, "chi+2");
        assert_eq!(first.node.signature.mlabels(), qs(&[2, 3]));
        assert_eq!(first.node.d, q(1) + half(5));
        let terminal: Vec<(Vec<Q>, Q)> = r
            .frp
            .iter()
            .filter(|e| e.note.as_deref() == Some("terminal"))
            .map(|e| (e.node.signature.mlabels(), e.node.d))
            .collect();
        assert_eq!(
            terminal,
            vec![
                (qs(&[1, 1]), q(1)),
                (qs(&[2, 1]), half(3)),
                (qs(&[1, 2]), half(3))
            ]
        );
        // below-FRP points need h ≥ 3 when p+q is even
        assert!(r.below_frp.is_empty());
    }

    #[test]
    fn odd_frp_cases() {
        let spec = build_algebra(7, 2).unwrap(); // h = 3
        for (m1, d) in [(1, q(3)), (2, half(7)), (5, q(5))] {
            let r = classify(&spec, &qs(&[m1, 2, 1, 1]), 1).unwrap();
            let e = &r.frp[0];
            assert_eq!(e.node.signature.mlabels(), qs(&[m1, 2, 1]), "m1={m1}");
            assert_eq!(e.node.d, d, "m1={m1}");
        }
    }

    #[test]
    fn odd_below_frp_single() {
        let spec = build_algebra(7, 2).unwrap(); // h = 3
        for (m1, d) in [(1, half(5)), (4, q(3)), (5, half(5))] {
            let r = classify(&spec, &qs(&[m1, 2, 1, 1]), 1).unwrap();
            let e = &r.below_frp[0];
            assert_eq!(e.node.signature.mlabels(), qs(&[m1, 2, 1]), "m1={m1}");
            assert_eq!(e.node.d, d, "m1={m1}");
        }
        let r = classify(&spec, &qs(&[1, 1, 1, 1]), 1).unwrap();
        let ds: Vec<Q> = r.below_frp[1..].iter().map(|e| e.node.d).collect();
        assert_eq!(ds, vec![q(1), q(2)]);
    }

    #[test]
    fn odd_minimal_cutting() {
        let spec = build_algebra(7, 2).unwrap(); // h = 3
        let mins = minimal(&spec).unwrap();
        let show: Vec<String> = mins
            .iter()
            .map(|e| {
                format!(
                    "{} {} d={} [{}]",
                    e.name,
                    e.node.signature.text(),
                    e.node.d,
                    ops_text(&e.cutting_ops, e.ks_condition, e.ks_degenerate)
                )
            })
            .collect();
        assert_eq!(
            show,
            vec![
                "_r chi-1 [1,1,1 ; -5/2] d=1 [D^1_e1-e3, G^+]",
                "_r chi-2 [1,1,1 ; -3/2] d=2 [D^1_e1-e4, G^+]",
                "_r chi-3 [1,1,1 ; -1/2] d=3 [D^1_e1, (G^+ degenerate)]",
                "_r chi4 [2,1,1 ; 0] d=7/2 [D^1_e1+e4]",
                "_s chi-1 [1,1,1 ; -3] d=1/2 [D^6_e1, (G^+ degenerate)]",
                "_s chi-2 [1,1,1 ; -2] d=3/2 [D^4_e1, (G^+ degenerate)]",
                "_s chi-3 [1,1,1 ; -1] d=5/2 [D^2_e1, (G^+ degenerate)]",
                "_s chi-4 [2,1,1 ; -1/2] d=3 [D^1_e1, (G^+ degenerate)]",
            ]
        );
    }

    #[test]
    fn even_minimal_cutting() {
        let spec = build_algebra(8, 2).unwrap(); // h = 4
        let mins = minimal(&spec).unwrap();
        let show: Vec<String> = mins
            .iter()
            .map(|e| {
                format!(
                    "{} {} d={} [{}]",
                    e.name,
                    e.node.signature.text(),
                    e.node.d,
                    ops_text(&e.cutting_ops, e.ks_condition, e.ks_degenerate)
                )
            })
            .collect();
        assert_eq!(
            show,
            vec![
                "_r chi-1 [1,1,1,1 ; -3] d=1 [D^1_e1-e3, G^+]",
                "_r chi-2 [1,1,1,1 ; -2] d=2 [D^1_e1-e4, G^+]",
                "_r chi-3 [1,1,1,1 ; -1] d=3 [D^1_e1-e5, D^1_e1+e5, G^+]",
                "_r chi-4 [2,1,1,1 ; -1/2] d=7/2 [D^1_e1+e5, (G^+ degenerate)]",
                "_r chi-5 [1,2,1,1 ; -1/2] d=7/2 [D^1_e1-e5, (G^+ degenerate)]",
            ]
        );
    }

    #[test]
    fn table_and_json_render() {
        let spec = build_algebra(3, 2).unwrap();
        let r = classify(&spec, &qs(&[1, 1]), 2).unwrap();
        let t = r.to_table();
        assert!(t.contains("singleton"));
        assert_eq!(t, classify(&spec, &qs(&[1, 1]), 2).unwrap().to_table());
        let j: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(j["dimension"], "1");
    }
}
