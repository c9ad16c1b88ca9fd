//! Signatures of elementary representations: M-labels, the A-character `c`,
//! and the conformal weight `d = c + (p+q−2)/2`.
//!
//! M-labels are stored in n-form (ascending). For p+q even the smallest entry
//! carries a sign, and the `+` branch of a shadow pair has it flipped: that flip
//! is exactly the exchange of the first two Dynkin labels of M.

use crate::error::{Error, Result};
use crate::rational::{fmt_q, fmt_q_list, half, q, Q};
use crate::rootsys::{AlgebraSpec, Parity, Weight};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
    /// A c = 0 singlet.
    #[serde(rename = "0")]
    Zero,
}

impl Branch {
    pub fn symbol(self) -> &'static str {
        match self {
            Branch::Minus => "-",
            Branch::Plus => "+",
            Branch::Zero => "0",
        }
    }

    pub fn opposite(self) -> Branch {
        match self {
            Branch::Minus => Branch::Plus,
            Branch::Plus => Branch::Minus,
            Branch::Zero => Branch::Zero,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    FiniteDimContent,
    DiscreteSeries,
    Limit,
    Frp,
    BelowFrp,
    Minimal,
    Singleton,
    PhysicallyRelevant,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::FiniteDimContent => "finite-dim-content",
            Tag::DiscreteSeries => "discrete-series",
            Tag::Limit => "limit",
            Tag::Frp => "frp",
            Tag::BelowFrp => "below-frp",
            Tag::Minimal => "minimal",
            Tag::Singleton => "singleton",
            Tag::PhysicallyRelevant => "physically-relevant",
        }
    }

    pub fn parse(s: &str) -> Result<Tag> {
        let all = [
            Tag::FiniteDimContent,
            Tag::DiscreteSeries,
            Tag::Limit,
            Tag::Frp,
            Tag::BelowFrp,
            Tag::Minimal,
            Tag::Singleton,
            Tag::PhysicallyRelevant,
        ];
        all.into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown tag {s:?}")))
    }
}

/// Dynkin labels from n-labels, for a chain of any length.
///
/// Odd: m_1 = 2n_1; even: m_1 = n_1 + n_2. Both: m_j = n_j − n_{j−1}, j ≥ 2.
pub fn n_to_dynkin(parity: Parity, n: &[Q]) -> Vec<Q> {
    let mut m = Vec::with_capacity(n.len());
    for j in 0..n.len() {
        m.push(match (j, parity) {
            (0, Parity::Odd) => n[0] * q(2),
            (0, Parity::Even) if n.len() >= 2 => n[0] + n[1],
            (0, Parity::Even) => n[0] * q(2),
            _ => n[j] - n[j - 1],
        });
    }
    m
}

/// Inverse of [`n_to_dynkin`].
pub fn dynkin_to_n(parity: Parity, m: &[Q]) -> Vec<Q> {
    let mut n = Vec::with_capacity(m.len());
    for j in 0..m.len() {
        let v = match (j, parity) {
            (0, Parity::Odd) => m[0] / q(2),
            (0, Parity::Even) if m.len() >= 2 => (m[0] - m[1]) / q(2),
            (0, Parity::Even) => m[0] / q(2),
            (1, Parity::Even) => (m[0] + m[1]) / q(2),
            _ => n[j - 1] + m[j],
        };
        n.push(v);
    }
    n
}

/// n_1 … n_{h+1} from the h+1 Dynkin labels of so(p+q,ℂ).
pub fn labels_to_n(spec: &AlgebraSpec, m: &[Q]) -> Result<Vec<Q>> {
    check_len(spec.h + 1, m.len())?;
    Ok(dynkin_to_n(spec.parity, m))
}

pub fn n_to_labels(spec: &AlgebraSpec, n: &[Q]) -> Result<Vec<Q>> {
    check_len(spec.h + 1, n.len())?;
    Ok(n_to_dynkin(spec.parity, n))
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::LabelCount { expected, got });
    }
    Ok(())
}

/// Exchanges the first two M-labels (the `+` conjugation, p+q even only).
pub fn conjugate_labels(spec: &AlgebraSpec, m: &[Q]) -> Result<Vec<Q>> {
    if spec.parity != Parity::Even {
        return Err(Error::Parity { required: "even" });
    }
    if m.len() < 2 {
        return Err(Error::LabelCount {
            expected: 2,
            got: m.len(),
        });
    }
    let mut out = m.to_vec();
    out.swap(0, 1);
    Ok(out)
}

/// ℓ_k = n_k − k + ½.
pub fn ell_labels(n: &[Q]) -> Vec<Q> {
    n.iter()
        .enumerate()
        .map(|(i, v)| v - q(i as i64 + 1) + half(1))
        .collect()
}

/// One elementary representation χ = {n_1, …, n_h ; c}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub parity: Parity,
    /// M-labels in n-form, ascending; for even parity `n[0]` is signed.
    pub n: Vec<Q>,
    /// Branch sign correlated with the conjugation of M-labels (even parity only).
    pub eps: Option<Branch>,
    pub c: Q,
    /// Whether the main-multiplet constraints on n and c hold.
    pub strict: bool,
}

impl Signature {
    pub fn new(parity: Parity, n: Vec<Q>, eps: Option<Branch>, c: Q) -> Self {
        let strict = Self::is_strict(parity, &n, &c);
        Signature {
            parity,
            n,
            eps,
            c,
            strict,
        }
    }

    pub fn from_dynkin(parity: Parity, mlabels: &[Q], eps: Option<Branch>, c: Q) -> Self {
        Self::new(parity, dynkin_to_n(parity, mlabels), eps, c)
    }

    fn is_strict(parity: Parity, n: &[Q], c: &Q) -> bool {
        let half_int = |x: &Q| (*x * q(2)).is_integer();
        if !half_int(c) || !n.iter().all(half_int) {
            return false;
        }
        if let Some(first) = n.first() {
            if !n.iter().all(|x| (x - first).is_integer()) {
                return false;
            }
            let ordered = n.windows(2).all(|w| w[0].abs() < w[1]);
            match parity {
                Parity::Odd => ordered && first.is_positive(),
                Parity::Even => ordered,
            }
        } else {
            true
        }
    }

    /// M-labels in Dynkin form.
    pub fn mlabels(&self) -> Vec<Q> {
        n_to_dynkin(self.parity, &self.n)
    }

    pub fn text(&self) -> String {
        format!("[{} ; {}]", fmt_q_list(&self.mlabels()), fmt_q(&self.c))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// A vertex of a multiplet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ERNode {
    pub id: String,
    /// Other slot names that coincide with this node in a reduced multiplet.
    pub aliases: Vec<String>,
    pub signature: Signature,
    pub k: usize,
    pub branch: Branch,
    pub d: Q,
    pub tags: BTreeSet<Tag>,
}

impl ERNode {
    pub fn new(spec: &AlgebraSpec, signature: Signature, k: usize, branch: Branch) -> Self {
        let d = signature.c + spec.d_shift();
        ERNode {
            id: slot_name(k, branch),
            aliases: Vec::new(),
            signature,
            k,
            branch,
            d,
            tags: BTreeSet::new(),
        }
    }

    pub fn c(&self) -> Q {
        self.signature.c
    }

    pub fn with_tag(mut self, tag: Tag) -> Self {
        self.tags.insert(tag);
        self
    }

    pub fn is_singlet(&self) -> bool {
        self.signature.c.is_zero()
    }
}

pub fn slot_name(k: usize, branch: Branch) -> String {
    match branch {
        Branch::Zero => format!("chi{k}"),
        b => format!("chi{}{k}", b.symbol()),
    }
}

/// Λ+ρ of a node: (−c, n_h, …, n_1).
pub fn weight_of_node(node: &ERNode) -> Weight {
    weight_of_signature(&node.signature)
}

pub fn weight_of_signature(sig: &Signature) -> Weight {
    let mut w = Vec::with_capacity(sig.n.len() + 1);
    w.push(-sig.c);
    w.extend(sig.n.iter().rev().copied());
    Weight(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_algebra, coroot_pairing, Root};

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|x| q(*x)).collect()
    }

    #[test]
    fn labels_to_n_examples() {
        let odd = build_algebra(3, 2).unwrap();
        assert_eq!(
            labels_to_n(&odd, &qs(&[1, 1])).unwrap(),
            vec![half(1), half(3)]
        );
        let even = build_algebra(4, 2).unwrap();
        assert_eq!(labels_to_n(&even, &qs(&[1, 1, 1])).unwrap(), qs(&[0, 1, 2]));
        let b3 = build_algebra(5, 2).unwrap();
        assert_eq!(labels_to_n(&b3, &qs(&[2, 1, 1])).unwrap()[0], q(1));
        assert_eq!(
            labels_to_n(&b3, &qs(&[1, 1])).unwrap_err(),
            Error::LabelCount {
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn conjugation() {
        let even = build_algebra(4, 2).unwrap();
        let m = qs(&[1, 2, 3]);
        let c = conjugate_labels(&even, &m).unwrap();
        assert_eq!(c, qs(&[2, 1, 3]));
        assert_eq!(conjugate_labels(&even, &c).unwrap(), m);
        assert_eq!(
            conjugate_labels(&even, &qs(&[4, 4, 1])).unwrap(),
            qs(&[4, 4, 1])
        );
        let odd = build_algebra(3, 2).unwrap();
        assert!(conjugate_labels(&odd, &m).is_err());
    }

    #[test]
    fn weight_map_examples() {
        let spec = build_algebra(3, 2).unwrap();
        // chi-_1 for m = (1,1): M-label m_1 = 1, c = -3/2.
        let chi1 = ERNode::new(
            &spec,
            Signature::from_dynkin(Parity::Odd, &qs(&[1]), None, half(-3)),
            1,
            Branch::Minus,
        );
        let w1 = weight_of_node(&chi1);
        assert_eq!(w1.0, vec![half(3), half(1)]);
        assert_eq!(chi1.d, q(0));
        let chi2 = ERNode::new(
            &spec,
            Signature::from_dynkin(Parity::Odd, &qs(&[3]), None, half(-1)),
            2,
            Branch::Minus,
        );
        assert_eq!(weight_of_node(&chi2).0, vec![half(1), half(3)]);
        assert_eq!(
            coroot_pairing(&w1, &Root::eps_minus(2, 1, 2)).unwrap(),
            q(1)
        );
    }

    #[test]
    fn strictness() {
        assert!(Signature::new(Parity::Odd, vec![half(1), half(3)], None, half(1)).strict);
        assert!(!Signature::new(Parity::Odd, vec![half(1), half(1)], None, half(1)).strict);
        assert!(!Signature::new(Parity::Odd, vec![q(0), q(1)], None, q(1)).strict);
        assert!(Signature::new(Parity::Even, vec![q(-1), q(2)], Some(Branch::Plus), q(1)).strict);
        assert!(!Signature::new(Parity::Even, vec![q(1), q(2)], None, Q::new(1, 3)).strict);
    }

    #[test]
    fn text_form() {
        let s = Signature::from_dynkin(Parity::Odd, &[q(1), half(3)], None, half(-5));
        assert_eq!(s.text(), "[1,3/2 ; -5/2]");
    }

    #[test]
    fn ell_labels_example() {
        // n = (1/2, 3/2) -> ℓ = (0, 0)
        assert_eq!(ell_labels(&[half(1), half(3)]), vec![q(0), q(0)]);
    }
}
