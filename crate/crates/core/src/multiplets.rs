//! Multiplet graphs: vertices are elementary representations sharing all
//! Casimir values, arrows are intertwining differential operators and
//! Knapp–Stein integral operators.
//!
//! Every multiplet is produced by one slot rule. From the Dynkin labels build
//! n_1 … n_{h+1}; the node χ^∓_k has c = ∓n_{h+2−k} and takes the remaining h
//! values as its M-labels (with the smallest one sign-flipped on the `+`
//! branch when p+q is even). Degenerate labels make some slots coincide; those
//! slots are merged, and arrows whose degree is not a positive integer are
//! dropped. That is all a reduced multiplet is.

use crate::error::{Error, Result};
use crate::rational::{positive_integer, q, Q};
use crate::rootsys::{coroot_pairing, AlgebraSpec, Parity, Root};
use crate::signatures::{labels_to_n, slot_name, weight_of_node, Branch, ERNode, Signature, Tag};
use num_traits::{Signed, Zero};
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArrowKind {
    Differential,
    KnappStein,
}

impl ArrowKind {
    pub fn name(self) -> &'static str {
        match self {
            ArrowKind::Differential => "differential",
            ArrowKind::KnappStein => "knapp-stein",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub kind: ArrowKind,
    pub name: String,
    /// Noncompact positive root; differential arrows only.
    pub root: Option<Root>,
    /// Order of the operator; differential arrows only.
    pub degree: Option<u32>,
    /// A Knapp–Stein operator that degenerates to a differential operator.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultipletKind {
    Main,
    Reduced { j: usize },
    Special { j: usize, mu: u32, mu2: Option<u32> },
    Singlet,
}

impl fmt::Display for MultipletKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultipletKind::Main => write!(f, "main"),
            MultipletKind::Reduced { j } => write!(f, "reduced({j})"),
            MultipletKind::Special { j, mu, mu2: None } => write!(f, "special({j},{mu})"),
            MultipletKind::Special {
                j,
                mu,
                mu2: Some(m2),
            } => {
                write!(f, "special({j},{mu},{m2})")
            }
            MultipletKind::Singlet => write!(f, "singlet"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplet {
    pub spec: AlgebraSpec,
    pub kind: MultipletKind,
    /// The (possibly degenerate) Dynkin labels the multiplet was generated from.
    pub labels: Vec<Q>,
    pub nodes: Vec<ERNode>,
    pub arrows: Vec<Arrow>,
}

impl Multiplet {
    pub fn node(&self, id: &str) -> Option<&ERNode> {
        self.nodes
            .iter()
            .find(|n| n.id == id || n.aliases.iter().any(|a| a == id))
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n.id == id || n.aliases.iter().any(|a| a == id))
    }

    pub fn differential(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::Differential)
    }

    pub fn knapp_stein(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::KnappStein)
    }

    /// Differential arrows leaving node `idx`.
    pub fn outgoing(&self, idx: usize) -> Vec<&Arrow> {
        self.differential().filter(|a| a.src == idx).collect()
    }

    pub fn relevant_nodes(&self) -> Vec<&ERNode> {
        self.nodes
            .iter()
            .filter(|n| n.tags.contains(&Tag::PhysicallyRelevant))
            .collect()
    }

    /// Differential arrows touching a physically relevant node.
    pub fn relevant_arrows(&self) -> Vec<&Arrow> {
        self.differential()
            .filter(|a| {
                self.nodes[a.src].tags.contains(&Tag::PhysicallyRelevant)
                    || self.nodes[a.dst].tags.contains(&Tag::PhysicallyRelevant)
            })
            .collect()
    }
}

/// Signature of slot χ^branch_k for the n-labels `n` (h+1 entries, ascending).
pub fn slot_signature(spec: &AlgebraSpec, n: &[Q], k: usize, branch: Branch) -> Signature {
    let h = spec.h;
    let idx = h + 1 - k;
    let c = match branch {
        Branch::Minus => -n[idx],
        _ => n[idx],
    };
    let mut rest: Vec<Q> = n
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != idx)
        .map(|(_, v)| *v)
        .collect();
    let eps = match spec.parity {
        Parity::Odd => None,
        Parity::Even => {
            if branch == Branch::Plus {
                rest[0] = -rest[0];
            }
            Some(branch)
        }
    };
    Signature::new(spec.parity, rest, eps, c)
}

struct Template {
    name: String,
    src: (usize, Branch),
    dst: (usize, Branch),
    root: Root,
    /// 1-based index of the Dynkin label giving the degree.
    label: usize,
}

/// Differential operators of the main multiplet, with their roots.
fn templates(spec: &AlgebraSpec) -> Vec<Template> {
    use Branch::{Minus, Plus};
    let h = spec.h;
    let l = spec.rank;
    let mut out = Vec::new();
    for i in 1..=h {
        out.push(Template {
            name: format!("d_{i}"),
            src: (i, Minus),
            dst: (i + 1, Minus),
            root: Root::eps_minus(l, 1, i + 1),
            label: h + 2 - i,
        });
    }
    for i in 1..h {
        out.push(Template {
            name: format!("d'_{i}"),
            src: (i + 1, Plus),
            dst: (i, Plus),
            root: Root::eps_plus(l, 1, i + 1),
            label: h + 2 - i,
        });
    }
    match spec.parity {
        Parity::Odd => {
            out.push(Template {
                name: format!("d'_{h}"),
                src: (h + 1, Plus),
                dst: (h, Plus),
                root: Root::eps_plus(l, 1, h + 1),
                label: 2,
            });
            out.push(Template {
                name: format!("d_{}", h + 1),
                src: (h + 1, Minus),
                dst: (h + 1, Plus),
                root: Root::eps(l, 1),
                label: 1,
            });
        }
        Parity::Even => {
            out.push(Template {
                name: format!("d_{h}"),
                src: (h + 1, Plus),
                dst: (h, Plus),
                root: Root::eps_minus(l, 1, h + 1),
                label: 2,
            });
            out.push(Template {
                name: format!("d'_{h}"),
                src: (h, Minus),
                dst: (h + 1, Plus),
                root: Root::eps_plus(l, 1, h + 1),
                label: 1,
            });
            out.push(Template {
                name: format!("d'_{h}"),
                src: (h + 1, Minus),
                dst: (h, Plus),
                root: Root::eps_plus(l, 1, h + 1),
                label: 1,
            });
        }
    }
    out
}

/// Runs the slot rule on arbitrary labels, merging coinciding slots.
fn generate(spec: &AlgebraSpec, labels: &[Q], kind: MultipletKind) -> Result<Multiplet> {
    let n = labels_to_n(spec, labels)?;
    let h = spec.h;
    let mut nodes: Vec<ERNode> = Vec::new();
    let mut slots: HashMap<(usize, Branch), usize> = HashMap::new();
    for k in 1..=h + 1 {
        for branch in [Branch::Minus, Branch::Plus] {
            let sig = slot_signature(spec, &n, k, branch);
            let found = nodes
                .iter()
                .position(|nd| nd.signature.n == sig.n && nd.signature.c == sig.c);
            let idx = match found {
                Some(i) => {
                    let node = &mut nodes[i];
                    if node.k == k && node.branch == branch.opposite() {
                        // both members of a c = 0 pair: a singlet
                        node.aliases.push(node.id.clone());
                        node.branch = Branch::Zero;
                        node.id = slot_name(k, Branch::Zero);
                    }
                    node.aliases.push(slot_name(k, branch));
                    i
                }
                None => {
                    nodes.push(ERNode::new(spec, sig, k, branch));
                    nodes.len() - 1
                }
            };
            slots.insert((k, branch), idx);
        }
    }

    let mut arrows: Vec<Arrow> = Vec::new();
    for t in templates(spec) {
        let (src, dst) = (slots[&t.src], slots[&t.dst]);
        let Some(degree) = positive_integer(&labels[t.label - 1]) else {
            continue;
        };
        if src == dst
            || arrows
                .iter()
                .any(|a| a.src == src && a.dst == dst && a.root.as_ref() == Some(&t.root))
        {
            continue;
        }
        arrows.push(Arrow {
            src,
            dst,
            kind: ArrowKind::Differential,
            name: t.name,
            root: Some(t.root),
            degree: Some(degree),
            degenerate: false,
        });
    }
    for k in 1..=h + 1 {
        for (sign, from, to) in [
            ("+", Branch::Minus, Branch::Plus),
            ("-", Branch::Plus, Branch::Minus),
        ] {
            let (src, dst) = (slots[&(k, from)], slots[&(k, to)]);
            if src == dst {
                continue;
            }
            // a KS operator degenerates when a differential operator joins the same pair
            let degenerate = arrows
                .iter()
                .any(|a| a.kind == ArrowKind::Differential && a.src == src && a.dst == dst);
            if let Some(a) = arrows
                .iter_mut()
                .find(|a| a.kind == ArrowKind::KnappStein && a.src == src && a.dst == dst)
            {
                a.degenerate |= degenerate;
                continue;
            }
            arrows.push(Arrow {
                src,
                dst,
                kind: ArrowKind::KnappStein,
                name: format!("G^{sign}_{k}"),
                root: None,
                degree: None,
                degenerate,
            });
        }
    }

    Ok(Multiplet {
        spec: *spec,
        kind,
        labels: labels.to_vec(),
        nodes,
        arrows,
    })
}

fn check_count(spec: &AlgebraSpec, m: &[Q]) -> Result<()> {
    if m.len() != spec.h + 1 {
        return Err(Error::LabelCount {
            expected: spec.h + 1,
            got: m.len(),
        });
    }
    Ok(())
}

/// Main multiplet: all labels positive integers, 2(h+1) nodes.
pub fn main_multiplet(spec: &AlgebraSpec, m: &[Q]) -> Result<Multiplet> {
    check_count(spec, m)?;
    if let Some(bad) = m.iter().find(|x| positive_integer(x).is_none()) {
        return Err(Error::Regime(format!(
            "main multiplets need m_i ∈ ℕ, m_i ≥ 1 (got {bad})"
        )));
    }
    let mut mult = generate(spec, m, MultipletKind::Main)?;
    if let Some(i) = mult.node_index("chi-1") {
        mult.nodes[i].tags.insert(Tag::FiniteDimContent);
    }
    Ok(mult)
}

/// Reduced multiplet for m_j = 0 (all other labels ≥ 1).
pub fn reduced_multiplet(spec: &AlgebraSpec, j: usize, m: &[Q]) -> Result<Multiplet> {
    check_count(spec, m)?;
    if j == 0 || j > spec.h + 1 {
        return Err(Error::Regime(format!("j must lie in 1..={}", spec.h + 1)));
    }
    let zeros: Vec<usize> = (1..=m.len()).filter(|i| m[i - 1].is_zero()).collect();
    if zeros != vec![j] {
        return Err(Error::Regime(format!(
            "reduced multiplet needs exactly m_{j} = 0, zero labels at {zeros:?}"
        )));
    }
    if let Some(bad) = m
        .iter()
        .find(|x| !x.is_zero() && positive_integer(x).is_none())
    {
        return Err(Error::Regime(format!(
            "labels other than m_{j} must be in ℕ (got {bad})"
        )));
    }
    let mut mult = generate(spec, m, MultipletKind::Reduced { j })?;
    for node in mult.nodes.iter_mut() {
        if !node.aliases.is_empty() {
            node.tags.insert(Tag::PhysicallyRelevant);
        }
    }
    Ok(mult)
}

/// Positions (1-based) of the labels replaced by μ/2 and μ′/2 for the pair _sχ_j.
pub fn special_positions(spec: &AlgebraSpec, j: usize) -> (usize, Option<usize>) {
    let h = spec.h;
    if j == 1 {
        (h + 1, None)
    } else if j == h + 1 {
        (2, None)
    } else {
        (h - j + 2, Some(h - j + 3))
    }
}

/// Special reduced pair _sχ^±_j (p+q odd): labels set to half-odd values.
///
/// The designated entries of `m` are overwritten by μ/2 (and μ′/2). For j = h+1
/// with m_1 = 0 the pair collapses to the singlet [μ, m_3, … ; 0].
pub fn special_reduced(
    spec: &AlgebraSpec,
    j: usize,
    mu: u32,
    mu2: Option<u32>,
    m: &[Q],
) -> Result<Multiplet> {
    if spec.parity != Parity::Odd {
        return Err(Error::Parity {
            required: "odd (special reduced multiplets)",
        });
    }
    check_count(spec, m)?;
    let h = spec.h;
    if j == 0 || j > h + 1 {
        return Err(Error::Regime(format!("j must lie in 1..={}", h + 1)));
    }
    let (pos, pos2) = special_positions(spec, j);
    let odd = |x: u32| x % 2 == 1;
    if !odd(mu) {
        return Err(Error::Regime(format!(
            "μ must be an odd positive integer (got {mu})"
        )));
    }
    match (pos2, mu2) {
        (Some(_), Some(x)) if !odd(x) => {
            return Err(Error::Regime(format!(
                "μ′ must be an odd positive integer (got {x})"
            )))
        }
        (Some(_), None) => return Err(Error::Regime(format!("j = {j} needs μ′"))),
        (None, Some(_)) => return Err(Error::Regime(format!("j = {j} takes no μ′"))),
        _ => {}
    }
    let mut labels = m.to_vec();
    labels[pos - 1] = Q::new(mu as i64, 2);
    if let (Some(p2), Some(x)) = (pos2, mu2) {
        labels[p2 - 1] = Q::new(x as i64, 2);
    }
    let doubly = j == h + 1 && labels[0].is_zero();
    for (i, x) in labels.iter().enumerate() {
        let designated = i + 1 == pos || Some(i + 1) == pos2;
        let allowed_zero = doubly && i == 0;
        if !designated && !allowed_zero && positive_integer(x).is_none() {
            return Err(Error::Regime(format!("m_{} must be in ℕ (got {x})", i + 1)));
        }
    }
    let n = labels_to_n(spec, &labels)?;
    let minus = ERNode::new(
        spec,
        slot_signature(spec, &n, j, Branch::Minus),
        j,
        Branch::Minus,
    );
    if minus.c().is_zero() {
        let mut node = ERNode::new(spec, minus.signature.clone(), j, Branch::Zero);
        node.tags.insert(Tag::PhysicallyRelevant);
        return Ok(Multiplet {
            spec: *spec,
            kind: MultipletKind::Singlet,
            labels,
            nodes: vec![node],
            arrows: Vec::new(),
        });
    }
    let plus = ERNode::new(
        spec,
        slot_signature(spec, &n, j, Branch::Plus),
        j,
        Branch::Plus,
    );
    let degree = positive_integer(&(minus.c().abs() * q(2)))
        .ok_or_else(|| Error::Regime("2|c| is not a positive integer".into()))?;
    let arrows = vec![
        Arrow {
            src: 0,
            dst: 1,
            kind: ArrowKind::Differential,
            name: format!("D_{j}"),
            root: Some(Root::eps(spec.rank, 1)),
            degree: Some(degree),
            degenerate: false,
        },
        Arrow {
            src: 0,
            dst: 1,
            kind: ArrowKind::KnappStein,
            name: format!("G^+_{j}"),
            root: None,
            degree: None,
            degenerate: true,
        },
        Arrow {
            src: 1,
            dst: 0,
            kind: ArrowKind::KnappStein,
            name: format!("G^-_{j}"),
            root: None,
            degree: None,
            degenerate: false,
        },
    ];
    Ok(Multiplet {
        spec: *spec,
        kind: MultipletKind::Special { j, mu, mu2 },
        labels,
        nodes: vec![
            minus.with_tag(Tag::PhysicallyRelevant),
            plus.with_tag(Tag::PhysicallyRelevant),
        ],
        arrows,
    })
}

/// The c = 0 singlets with no differential operators.
///
/// p+q odd: [μ, m_2, …, m_h ; 0] with μ odd, `tail` = (m_2, …, m_h).
/// p+q even: [m_2, m_2, m_3, …, m_h ; 0], `tail` = (m_2, …, m_h), `mu` unused.
pub fn singlet(spec: &AlgebraSpec, mu: Option<u32>, tail: &[Q]) -> Result<Multiplet> {
    let h = spec.h;
    if tail.len() != h - 1 {
        return Err(Error::LabelCount {
            expected: h - 1,
            got: tail.len(),
        });
    }
    if let Some(bad) = tail.iter().find(|x| positive_integer(x).is_none()) {
        return Err(Error::Regime(format!(
            "singlet labels must be in ℕ (got {bad})"
        )));
    }
    match spec.parity {
        Parity::Odd => {
            let mu = mu.ok_or_else(|| Error::Regime("odd singlet needs μ".into()))?;
            let mut m = vec![q(0), q(1)];
            m.extend_from_slice(tail);
            special_reduced(spec, h + 1, mu, None, &m)
        }
        Parity::Even => {
            let mut labels = vec![q(0), q(0)];
            labels.extend_from_slice(tail);
            let n = labels_to_n(spec, &labels)?;
            let sig = slot_signature(spec, &n, h, Branch::Minus);
            let mut sig_zero = sig.clone();
            sig_zero.eps = Some(Branch::Zero);
            let node =
                ERNode::new(spec, sig_zero, h, Branch::Zero).with_tag(Tag::PhysicallyRelevant);
            Ok(Multiplet {
                spec: *spec,
                kind: MultipletKind::Singlet,
                labels,
                nodes: vec![node],
                arrows: Vec::new(),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub arrow: String,
    pub message: String,
}

/// Cross-checks every arrow: BGG for differential operators, opposite c for
/// Knapp–Stein pairs. An empty list means the multiplet is consistent.
pub fn validate_multiplet(mult: &Multiplet) -> Vec<Violation> {
    let mut out = Vec::new();
    for a in &mult.arrows {
        let src = &mult.nodes[a.src];
        let dst = &mult.nodes[a.dst];
        let label = format!("{} {}->{}", a.name, src.id, dst.id);
        match a.kind {
            ArrowKind::Differential => {
                let (Some(root), Some(deg)) = (&a.root, a.degree) else {
                    out.push(Violation {
                        arrow: label,
                        message: "missing root or degree".into(),
                    });
                    continue;
                };
                if deg < 1 {
                    out.push(Violation {
                        arrow: label.clone(),
                        message: "degree < 1".into(),
                    });
                }
                let w = weight_of_node(src);
                match coroot_pairing(&w, root) {
                    Ok(p) if p == q(deg as i64) => {
                        let image = w.reflect(root);
                        let target = weight_of_node(dst);
                        if !same_up_to_compact_weyl(mult.spec.parity, &image.0, &target.0) {
                            out.push(Violation {
                                arrow: label,
                                message: "target is not Λ−mβ up to the compact Weyl group".into(),
                            });
                        }
                    }
                    Ok(p) => out.push(Violation {
                        arrow: label,
                        message: format!("(Λ+ρ, β∨) = {p} but degree = {deg}"),
                    }),
                    Err(e) => out.push(Violation {
                        arrow: label,
                        message: e.to_string(),
                    }),
                }
            }
            ArrowKind::KnappStein => {
                if src.c() != -dst.c() {
                    out.push(Violation {
                        arrow: label,
                        message: format!("c(src) = {} is not −c(dst) = {}", src.c(), -dst.c()),
                    });
                }
            }
        }
    }
    out
}

/// Equality of weights modulo the Weyl group of M (coordinates 2..ℓ).
fn same_up_to_compact_weyl(parity: Parity, a: &[Q], b: &[Q]) -> bool {
    if a[0] != b[0] {
        return false;
    }
    let key = |v: &[Q]| {
        let mut abs: Vec<Q> = v[1..].iter().map(|x| x.abs()).collect();
        abs.sort();
        let neg = v[1..].iter().filter(|x| x.is_negative()).count();
        let has_zero = v[1..].iter().any(|x| x.is_zero());
        (abs, if has_zero { 0 } else { neg % 2 })
    };
    match parity {
        Parity::Odd => key(a).0 == key(b).0,
        Parity::Even => key(a) == key(b),
    }
}

/// One physically relevant pair _rχ^±_j of a reduced multiplet, with the
/// bounds on d^± attained at unit labels.
#[derive(Debug, Clone)]
pub struct RelevantPair {
    pub j: usize,
    pub minus: ERNode,
    pub plus: Option<ERNode>,
    pub d_plus_min: Option<Q>,
    pub d_minus_max: Q,
    /// The reduced multiplet the pair was taken from.
    pub source: Multiplet,
}

/// The summary of physically relevant pairs in terms of the h M-labels.
///
/// For p+q even and j ∈ {h, h+1} the first label plays the role of the free
/// parameter `m`.
pub fn relevant_pairs(spec: &AlgebraSpec, mlabels: &[Q]) -> Result<Vec<RelevantPair>> {
    let h = spec.h;
    if mlabels.len() != h {
        return Err(Error::LabelCount {
            expected: h,
            got: mlabels.len(),
        });
    }
    let hq = q(h as i64);
    let mut out = Vec::new();
    for j in 1..=h + 1 {
        let (labels, zero_at, bounds) = match spec.parity {
            Parity::Odd if j <= h => {
                let mut l = mlabels.to_vec();
                l.insert(h + 1 - j, q(0));
                (
                    l,
                    h + 2 - j,
                    (Some(q(2 * h as i64 - j as i64 + 1)), q(j as i64)),
                )
            }
            Parity::Odd => {
                let mut l = vec![q(0)];
                l.extend_from_slice(mlabels);
                (l, 1, (None, hq + Q::new(1, 2)))
            }
            Parity::Even if j < h => {
                let mut l = mlabels.to_vec();
                l.insert(h + 1 - j, q(0));
                (
                    l,
                    h + 2 - j,
                    (Some(q(2 * h as i64 - j as i64)), q(j as i64)),
                )
            }
            Parity::Even => {
                let mut l = mlabels.to_vec();
                let zero_at = if j == h { 2 } else { 1 };
                l.insert(zero_at - 1, q(0));
                (l, zero_at, (Some(hq + Q::new(1, 2)), hq - Q::new(1, 2)))
            }
        };
        let mult = reduced_multiplet(spec, zero_at, &labels)?;
        let mut rel: Vec<ERNode> = mult.relevant_nodes().into_iter().cloned().collect();
        rel.sort_by_key(|n| n.c());
        let mut rel = rel.into_iter();
        let minus = rel.next().expect("reduced multiplets have a relevant node");
        let plus = rel.next();
        out.push(RelevantPair {
            j,
            minus,
            plus,
            d_plus_min: bounds.0,
            d_minus_max: bounds.1,
            source: mult,
        });
    }
    Ok(out)
}
