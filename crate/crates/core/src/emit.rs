//! JSON and DOT renderings of multiplets.
//!
//! JSON keeps a fixed field order and stores every rational as a string
//! `"a/b"`, so emit → parse → emit reproduces the same bytes.

use crate::error::{Error, Result};
use crate::multiplets::{Arrow, ArrowKind, Multiplet, MultipletKind};
use crate::rational::{fmt_q, parse_q, Q};
use crate::rootsys::{build_algebra, Parity, Root};
use crate::signatures::{Branch, ERNode, Signature, Tag};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDoc {
    pub p: i64,
    pub q: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub id: String,
    pub mlabels: Vec<String>,
    pub c: String,
    pub d: String,
    pub eps: Option<Branch>,
    pub tags: Vec<Tag>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub src: String,
    pub dst: String,
    pub kind: String,
    pub name: String,
    pub root: Option<String>,
    pub degree: Option<u32>,
    #[serde(default)]
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipletDoc {
    pub spec: SpecDoc,
    pub kind: String,
    pub labels: Vec<String>,
    pub nodes: Vec<NodeDoc>,
    pub arrows: Vec<ArrowDoc>,
}

fn strs(xs: &[Q]) -> Vec<String> {
    xs.iter().map(fmt_q).collect()
}

impl From<&Multiplet> for MultipletDoc {
    fn from(m: &Multiplet) -> Self {
        let nodes = m
            .nodes
            .iter()
            .map(|n| NodeDoc {
                id: n.id.clone(),
                mlabels: strs(&n.signature.mlabels()),
                c: fmt_q(&n.c()),
                d: fmt_q(&n.d),
                eps: n.signature.eps,
                tags: n.tags.iter().copied().collect(),
                aliases: n.aliases.clone(),
            })
            .collect();
        let arrows = m
            .arrows
            .iter()
            .map(|a| ArrowDoc {
                src: m.nodes[a.src].id.clone(),
                dst: m.nodes[a.dst].id.clone(),
                kind: a.kind.name().to_string(),
                name: a.name.clone(),
                root: a.root.as_ref().map(|r| r.to_string()),
                degree: a.degree,
                degenerate: a.degenerate,
            })
            .collect();
        MultipletDoc {
            spec: SpecDoc {
                p: m.spec.p,
                q: m.spec.q,
            },
            kind: m.kind.to_string(),
            labels: strs(&m.labels),
            nodes,
            arrows,
        }
    }
}

pub fn to_json(m: &Multiplet) -> String {
    serde_json::to_string_pretty(&MultipletDoc::from(m)).expect("documents always serialize")
}

/// Aligned plain-text listing: one line per node, then one per arrow.
pub fn to_text(m: &Multiplet) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "so({},{}) {} [{}]",
        m.spec.p,
        m.spec.q,
        m.kind,
        strs(&m.labels).join(",")
    );
    let width = m.nodes.iter().map(|n| n.id.len()).max().unwrap_or(0);
    for n in &m.nodes {
        let mut line = format!(
            "  {:width$}  {}  d={}",
            n.id,
            n.signature.text(),
            fmt_q(&n.d)
        );
        if !n.aliases.is_empty() {
            let _ = write!(line, "  = {}", n.aliases.join(" = "));
        }
        for t in &n.tags {
            let _ = write!(line, "  ({})", t.name());
        }
        let _ = writeln!(out, "{line}");
    }
    for a in &m.arrows {
        let (src, dst) = (&m.nodes[a.src].id, &m.nodes[a.dst].id);
        let _ = match (a.kind, &a.root, a.degree) {
            (ArrowKind::Differential, Some(r), Some(deg)) => {
                writeln!(out, "  {:<6} {src} -> {dst}  {r}  degree {deg}", a.name)
            }
            _ => writeln!(
                out,
                "  {:<6} {src} -> {dst}  {}{}",
                a.name,
                a.kind.name(),
                if a.degenerate { " (degenerate)" } else { "" }
            ),
        };
    }
    out
}

fn parse_kind(s: &str) -> Result<MultipletKind> {
    let bad = || Error::Parse(format!("unknown multiplet kind {s:?}"));
    if s == "main" {
        return Ok(MultipletKind::Main);
    }
    if s == "singlet" {
        return Ok(MultipletKind::Singlet);
    }
    let (head, rest) = s.split_once('(').ok_or_else(bad)?;
    let args: Vec<u32> = rest
        .strip_suffix(')')
        .ok_or_else(bad)?
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (head, args.as_slice()) {
        ("reduced", [j]) => Ok(MultipletKind::Reduced { j: *j as usize }),
        ("special", [j, mu]) => Ok(MultipletKind::Special {
            j: *j as usize,
            mu: *mu,
            mu2: None,
        }),
        ("special", [j, mu, mu2]) => Ok(MultipletKind::Special {
            j: *j as usize,
            mu: *mu,
            mu2: Some(*mu2),
        }),
        _ => Err(bad()),
    }
}

fn parse_slot(id: &str) -> Result<(usize, Branch)> {
    let bad = || Error::Parse(format!("bad node id {id:?}"));
    let rest = id.strip_prefix("chi").ok_or_else(bad)?;
    let (branch, digits) = match rest.as_bytes().first() {
        Some(b'-') => (Branch::Minus, &rest[1..]),
        Some(b'+') => (Branch::Plus, &rest[1..]),
        _ => (Branch::Zero, rest),
    };
    Ok((digits.parse().map_err(|_| bad())?, branch))
}

/// Rebuilds a multiplet from its JSON document, checking that the stored
/// conformal weights agree with the signatures.
pub fn from_json(text: &str) -> Result<Multiplet> {
    let doc: MultipletDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("json: {e}")))?;
    let spec = build_algebra(doc.spec.p, doc.spec.q)?;
    let parse_all = |v: &[String]| v.iter().map(|s| parse_q(s)).collect::<Result<Vec<Q>>>();
    let mut nodes = Vec::with_capacity(doc.nodes.len());
    for nd in &doc.nodes {
        let (k, branch) = parse_slot(&nd.id)?;
        let mlabels = parse_all(&nd.mlabels)?;
        if mlabels.len() != spec.h {
            return Err(Error::LabelCount {
                expected: spec.h,
                got: mlabels.len(),
            });
        }
        if (spec.parity == Parity::Odd) != nd.eps.is_none() {
            return Err(Error::Parse(format!(
                "node {}: eps does not match parity",
                nd.id
            )));
        }
        let sig = Signature::from_dynkin(spec.parity, &mlabels, nd.eps, parse_q(&nd.c)?);
        let mut node = ERNode::new(&spec, sig, k, branch);
        if node.d != parse_q(&nd.d)? {
            return Err(Error::Parse(format!(
                "node {}: d inconsistent with c",
                nd.id
            )));
        }
        node.aliases = nd.aliases.clone();
        node.tags = nd.tags.iter().copied().collect::<BTreeSet<_>>();
        nodes.push(node);
    }
    let index = |id: &str| {
        nodes
            .iter()
            .position(|n: &ERNode| n.id == id)
            .ok_or_else(|| Error::Parse(format!("arrow refers to unknown node {id:?}")))
    };
    let mut arrows = Vec::with_capacity(doc.arrows.len());
    for a in &doc.arrows {
        let kind = match a.kind.as_str() {
            "differential" => ArrowKind::Differential,
            "knapp-stein" => ArrowKind::KnappStein,
            other => return Err(Error::Parse(format!("unknown arrow kind {other:?}"))),
        };
        arrows.push(Arrow {
            src: index(&a.src)?,
            dst: index(&a.dst)?,
            kind,
            name: a.name.clone(),
            root: a
                .root
                .as_deref()
                .map(|r| Root::parse(r, spec.rank))
                .transpose()?,
            degree: a.degree,
            degenerate: a.degenerate,
        });
    }
    Ok(Multiplet {
        spec,
        kind: parse_kind(&doc.kind)?,
        labels: parse_all(&doc.labels)?,
        nodes,
        arrows,
    })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph: each shadow pair χ^∓_k sits on one rank, minus on the
/// left and plus on the right, with a point marker between the middle pair.
pub fn to_dot(m: &Multiplet) -> String {
    let mut out = String::new();
    let title = format!("so({},{}) {}", m.spec.p, m.spec.q, m.kind);
    writeln!(out, "digraph multiplet {{").unwrap();
    writeln!(out, "  label={};", quote(&title)).unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for n in &m.nodes {
        writeln!(
            out,
            "  {} [label={}];",
            quote(&n.id),
            quote(&n.signature.text())
        )
        .unwrap();
    }
    let ks: Vec<usize> = {
        let mut v: Vec<usize> = m.nodes.iter().map(|n| n.k).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let center_k = ks.get(ks.len().saturating_sub(1) / 2).copied();
    if m.nodes.len() > 1 {
        writeln!(out, "  center [shape=point, label=\"\"];").unwrap();
    }
    for k in &ks {
        let mut row: Vec<String> = Vec::new();
        for b in [Branch::Minus, Branch::Zero, Branch::Plus] {
            if b == Branch::Plus && Some(*k) == center_k && m.nodes.len() > 1 {
                row.push("center".to_string());
            }
            row.extend(
                m.nodes
                    .iter()
                    .filter(|n| n.k == *k && n.branch == b)
                    .map(|n| quote(&n.id)),
            );
        }
        if row.len() > 1 {
            writeln!(out, "  {{ rank=same; {}; }}", row.join("; ")).unwrap();
        }
    }
    for a in m.differential() {
        let label = format!(
            "{},{}",
            a.root.as_ref().map(|r| r.to_string()).unwrap_or_default(),
            a.degree.unwrap_or(0)
        );
        writeln!(
            out,
            "  {} -> {} [style=solid, label={}];",
            quote(&m.nodes[a.src].id),
            quote(&m.nodes[a.dst].id),
            quote(&label)
        )
        .unwrap();
    }
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for a in m.knapp_stein() {
        let key = (a.src.min(a.dst), a.src.max(a.dst));
        if !seen.insert(key) {
            continue;
        }
        let degenerate = m
            .knapp_stein()
            .any(|b| (b.src.min(b.dst), b.src.max(b.dst)) == key && b.degenerate);
        let extra = if degenerate { ", color=gray40" } else { "" };
        writeln!(
            out,
            "  {} -> {} [style=dotted, dir=both, arrowhead=none, arrowtail=none{}];",
            quote(&m.nodes[key.0].id),
            quote(&m.nodes[key.1].id),
            extra
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Structural DOT check: balanced braces and every edge endpoint declared.
pub fn lint_dot(dot: &str) -> std::result::Result<(), String> {
    let mut depth = 0i64;
    for ch in dot.chars() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err("unbalanced closing brace".into());
        }
    }
    if depth != 0 {
        return Err("unbalanced braces".into());
    }
    let mut declared: BTreeSet<String> = BTreeSet::new();
    let name = |s: &str| s.trim().trim_matches('"').to_string();
    for line in dot.lines().map(str::trim) {
        if line.contains("->") || line.starts_with('{') || line.starts_with("digraph") {
            continue;
        }
        if let Some((head, _)) = line.split_once(" [") {
            declared.insert(name(head));
        }
    }
    for line in dot.lines().map(str::trim) {
        if let Some((a, rest)) = line.split_once("->") {
            let b = rest
                .split_once('[')
                .map(|x| x.0)
                .unwrap_or(rest)
                .trim_end_matches(';');
            for end in [name(a), name(b)] {
                if !declared.contains(&end) {
                    return Err(format!("edge endpoint {end:?} not declared"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplets::{main_multiplet, reduced_multiplet, singlet, special_reduced};
    use crate::rational::q;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|x| q(*x)).collect()
    }

    #[test]
    fn json_round_trip() {
        let s32 = build_algebra(3, 2).unwrap();
        let s62 = build_algebra(6, 2).unwrap();
        let s72 = build_algebra(7, 2).unwrap();
        let cases = vec![
            main_multiplet(&s32, &qs(&[1, 1])).unwrap(),
            main_multiplet(&s62, &qs(&[2, 1, 3, 1])).unwrap(),
            reduced_multiplet(&s62, 1, &qs(&[0, 1, 1, 2])).unwrap(),
            reduced_multiplet(&s72, 1, &qs(&[0, 1, 1, 2])).unwrap(),
            special_reduced(&s72, 2, 3, Some(5), &qs(&[1, 1, 1, 1])).unwrap(),
            singlet(&s62, None, &qs(&[1, 1])).unwrap(),
        ];
        for m in cases {
            let a = to_json(&m);
            let back = from_json(&a).unwrap();
            assert_eq!(back, m);
            assert_eq!(to_json(&back), a);
        }
    }

    #[test]
    fn json_field_order() {
        let m = main_multiplet(&build_algebra(3, 2).unwrap(), &qs(&[1, 1])).unwrap();
        let s = to_json(&m);
        let pos = |k: &str| s.find(k).unwrap();
        assert!(pos("\"spec\"") < pos("\"kind\""));
        assert!(pos("\"kind\"") < pos("\"nodes\""));
        assert!(pos("\"nodes\"") < pos("\"arrows\""));
        assert!(s.contains("\"c\": \"-3/2\""));
    }

    #[test]
    fn json_rejects_inconsistent_d() {
        let m = main_multiplet(&build_algebra(3, 2).unwrap(), &qs(&[1, 1])).unwrap();
        let s = to_json(&m).replacen("\"d\": \"0\"", "\"d\": \"7\"", 1);
        assert!(from_json(&s).is_err());
    }

    #[test]
    fn dot_so32() {
        let m = main_multiplet(&build_algebra(3, 2).unwrap(), &qs(&[1, 1])).unwrap();
        let dot = to_dot(&m);
        lint_dot(&dot).unwrap();
        assert_eq!(dot.matches("style=solid").count(), 3);
        assert_eq!(dot.matches("style=dotted").count(), 2);
        assert_eq!(dot.matches("[label=\"[").count(), 4);
        assert!(dot.contains("label=\"e1,1\""));
        assert_eq!(dot, to_dot(&m));
    }

    #[test]
    fn dot_singlet() {
        let s = singlet(&build_algebra(5, 2).unwrap(), Some(1), &qs(&[2])).unwrap();
        let dot = to_dot(&s);
        lint_dot(&dot).unwrap();
        assert!(!dot.contains("->"));
        assert_eq!(dot.matches("[label=\"[").count(), 1);
    }

    #[test]
    fn lint_catches_undeclared() {
        assert!(lint_dot("digraph g {\n  a [label=\"x\"];\n  a -> b [style=solid];\n}\n").is_err());
        assert!(lint_dot("digraph g {\n").is_err());
    }
}
