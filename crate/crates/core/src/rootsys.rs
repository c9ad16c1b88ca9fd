//! Root data for so(N,ℂ) in the ε-basis.
//!
//! N odd gives type B, N even gives type D. Simple roots are fixed as
//! α_i = ε_i − ε_{i+1} (i < ℓ) and α_ℓ = ε_ℓ (B) or ε_{ℓ−1} + ε_ℓ (D).
//! The maximal parabolic of so(p,q) singles out ε_1: a root is compact
//! exactly when its ε_1 coordinate vanishes.

use crate::error::{Error, Result};
use crate::rational::{q, Q};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LieType {
    B,
    D,
}

/// Real form so(p,q) together with the numbers fixed by its maximal parabolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub p: i64,
    pub q: i64,
    pub parity: Parity,
    /// Number of M-labels.
    pub h: usize,
    /// Rank ℓ = h + 1 of so(p+q,ℂ).
    pub rank: usize,
    /// dim N = p + q − 2.
    pub dim_n: usize,
}

impl AlgebraSpec {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidAlgebra {
                p,
                q,
                constraint: "q ≥ 1",
            });
        }
        if p < q {
            return Err(Error::InvalidAlgebra {
                p,
                q,
                constraint: "p ≥ q",
            });
        }
        if p + q <= 4 {
            return Err(Error::InvalidAlgebra {
                p,
                q,
                constraint: "p+q > 4",
            });
        }
        let n = (p + q) as usize;
        let (parity, h) = if n % 2 == 1 {
            (Parity::Odd, (n - 3) / 2)
        } else {
            (Parity::Even, (n - 2) / 2)
        };
        Ok(AlgebraSpec {
            p,
            q,
            parity,
            h,
            rank: h + 1,
            dim_n: n - 2,
        })
    }

    pub fn n_complex(&self) -> usize {
        (self.p + self.q) as usize
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::for_so(self.n_complex())
    }

    /// (p+q−2)/2, the shift between c and the conformal weight d.
    pub fn d_shift(&self) -> Q {
        Q::new(self.dim_n as i64, 2)
    }
}

pub fn build_algebra(p: i64, q: i64) -> Result<AlgebraSpec> {
    AlgebraSpec::new(p, q)
}

/// A root ±ε_i ± ε_j or ±ε_i, stored by its integer ε-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// e_i (1-based) in a rank-`rank` space.
    pub fn eps(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Root::new(c)
    }

    /// ε_i − ε_j, 1-based.
    pub fn eps_minus(rank: usize, i: usize, j: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] += 1;
        c[j - 1] -= 1;
        Root::new(c)
    }

    /// ε_i + ε_j, 1-based.
    pub fn eps_plus(rank: usize, i: usize, j: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] += 1;
        c[j - 1] += 1;
        Root::new(c)
    }

    pub fn norm2(&self) -> i64 {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn is_compact(&self) -> bool {
        self.coords[0] == 0
    }

    pub fn is_short(&self) -> bool {
        self.norm2() == 1
    }

    pub fn is_positive(&self) -> bool {
        self.coords
            .iter()
            .find(|c| **c != 0)
            .is_some_and(|c| *c > 0)
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Vec<i64> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// Coordinates of the coroot 2β/(β,β).
    pub fn coroot(&self) -> Vec<Q> {
        let n = self.norm2();
        self.coords.iter().map(|c| Q::new(2 * c, n)).collect()
    }

    pub fn parse(s: &str, rank: usize) -> Result<Root> {
        let bad = || Error::Parse(format!("not a root: {s:?}"));
        let s = s.trim().replace(' ', "");
        let mut coords = vec![0i64; rank];
        let mut rest = s.as_str();
        let mut terms = 0;
        while !rest.is_empty() {
            let (sign, tail) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let tail = tail.strip_prefix('e').ok_or_else(bad)?;
            let digits = tail.chars().take_while(|c| c.is_ascii_digit()).count();
            let idx: usize = tail[..digits].parse().map_err(|_| bad())?;
            if idx == 0 || idx > rank {
                return Err(bad());
            }
            coords[idx - 1] += sign;
            rest = &tail[digits..];
            terms += 1;
        }
        let root = Root::new(coords);
        let n = root.norm2();
        if terms == 0 || !(n == 1 || n == 2) || root.coords.iter().any(|c| c.abs() > 1) {
            return Err(bad());
        }
        Ok(root)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            match (*c > 0, first) {
                (true, true) => {}
                (true, false) => write!(f, "+")?,
                (false, _) => write!(f, "-")?,
            }
            write!(f, "e{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A weight in ε-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: Q) -> Weight {
        Weight(self.0.iter().map(|a| a * s).collect())
    }

    pub fn dot(&self, other: &[Q]) -> Q {
        self.0.iter().zip(other).map(|(a, b)| a * b).sum()
    }

    /// s_β(w) = w − (w, β∨) β.
    pub fn reflect(&self, beta: &Root) -> Weight {
        let k = self.dot(&beta.coroot());
        Weight(
            self.0
                .iter()
                .zip(&beta.coords)
                .map(|(a, b)| a - k * q(*b))
                .collect(),
        )
    }
}

impl From<&Root> for Weight {
    fn from(r: &Root) -> Self {
        Weight(r.coords.iter().map(|c| q(*c)).collect())
    }
}

/// (w, β∨) under the Euclidean form on the ε-basis.
pub fn coroot_pairing(w: &Weight, beta: &Root) -> Result<Q> {
    if w.rank() != beta.rank() {
        return Err(Error::RankMismatch {
            weight: w.rank(),
            root: beta.rank(),
        });
    }
    Ok(w.dot(&beta.coroot()))
}

/// Type and rank of so(N,ℂ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystem {
    pub kind: LieType,
    pub rank: usize,
}

impl RootSystem {
    /// so(N,ℂ) for N ≥ 5.
    pub fn for_so(n: usize) -> Self {
        assert!(n >= 5, "so(N) with N ≥ 5 expected, got {n}");
        if n % 2 == 1 {
            RootSystem {
                kind: LieType::B,
                rank: (n - 1) / 2,
            }
        } else {
            RootSystem {
                kind: LieType::D,
                rank: n / 2,
            }
        }
    }

    pub fn n_complex(&self) -> usize {
        match self.kind {
            LieType::B => 2 * self.rank + 1,
            LieType::D => 2 * self.rank,
        }
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        let l = self.rank;
        let mut out = Vec::new();
        for i in 1..=l {
            for j in i + 1..=l {
                out.push(Root::eps_minus(l, i, j));
                out.push(Root::eps_plus(l, i, j));
            }
            if self.kind == LieType::B {
                out.push(Root::eps(l, i));
            }
        }
        out
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        let l = self.rank;
        let mut out: Vec<Root> = (1..l).map(|i| Root::eps_minus(l, i, i + 1)).collect();
        out.push(match self.kind {
            LieType::B => Root::eps(l, l),
            LieType::D => Root::eps_plus(l, l - 1, l),
        });
        out
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        let mut sum = vec![0i64; self.rank];
        for r in self.positive_roots() {
            for (s, c) in sum.iter_mut().zip(&r.coords) {
                *s += c;
            }
        }
        Weight(sum.into_iter().map(|s| Q::new(s, 2)).collect())
    }

    /// Coordinates of an ε-vector in the simple-root basis.
    pub fn simple_coords(&self, x: &[Q]) -> Vec<Q> {
        let l = self.rank;
        let mut prefix = Vec::with_capacity(l);
        let mut acc = Q::zero();
        for v in x {
            acc += v;
            prefix.push(acc);
        }
        match self.kind {
            LieType::B => prefix,
            LieType::D => {
                let mut c = prefix.clone();
                let p = prefix[l - 2];
                c[l - 1] = (p + x[l - 1]) / q(2);
                c[l - 2] = (p - x[l - 1]) / q(2);
                c
            }
        }
    }

    /// Simple-root coordinates of a root, as integers.
    pub fn root_simple_coords(&self, r: &Root) -> Vec<i64> {
        let x: Vec<Q> = r.coords.iter().map(|c| q(*c)).collect();
        self.simple_coords(&x)
            .into_iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect()
    }

    pub fn height(&self, r: &Root) -> i64 {
        self.root_simple_coords(r).iter().sum()
    }
}

pub fn positive_roots(spec: &AlgebraSpec) -> Vec<Root> {
    spec.root_system().positive_roots()
}

pub fn noncompact_positive_roots(spec: &AlgebraSpec) -> Vec<Root> {
    positive_roots(spec)
        .into_iter()
        .filter(|r| !r.is_compact())
        .collect()
}

pub fn rho(spec: &AlgebraSpec) -> Weight {
    spec.root_system().rho()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::half;

    #[test]
    fn build_algebra_examples() {
        let s = build_algebra(3, 2).unwrap();
        assert_eq!((s.parity, s.h, s.rank, s.dim_n), (Parity::Odd, 1, 2, 3));
        let s = build_algebra(4, 2).unwrap();
        assert_eq!((s.parity, s.h, s.rank, s.dim_n), (Parity::Even, 2, 3, 4));
        let err = build_algebra(3, 1).unwrap_err();
        assert!(err.to_string().contains("p+q > 4"), "{err}");
        assert!(build_algebra(2, 3)
            .unwrap_err()
            .to_string()
            .contains("p ≥ q"));
        assert!(build_algebra(5, 0).is_err());
    }

    #[test]
    fn b2_and_d3_roots() {
        let b2 = build_algebra(3, 2).unwrap();
        let pos = positive_roots(&b2);
        assert_eq!(pos.len(), 4);
        let nc: Vec<String> = noncompact_positive_roots(&b2)
            .iter()
            .map(|r| r.to_string())
            .collect();
        assert_eq!(nc, vec!["e1-e2", "e1+e2", "e1"]);

        let d3 = build_algebra(4, 2).unwrap();
        assert_eq!(positive_roots(&d3).len(), 6);
        assert_eq!(noncompact_positive_roots(&d3).len(), 4);
        let compact: Vec<String> = positive_roots(&d3)
            .iter()
            .filter(|r| r.is_compact())
            .map(|r| r.to_string())
            .collect();
        assert_eq!(compact, vec!["e2-e3", "e2+e3"]);
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(&build_algebra(3, 2).unwrap()).0, vec![half(3), half(1)]);
        assert_eq!(rho(&build_algebra(4, 2).unwrap()).0, vec![q(2), q(1), q(0)]);
        assert_eq!(
            rho(&build_algebra(5, 2).unwrap()).0,
            vec![half(5), half(3), half(1)]
        );
    }

    #[test]
    fn pairing_examples() {
        let w = Weight(vec![half(3), half(1)]);
        assert_eq!(coroot_pairing(&w, &Root::eps_minus(2, 1, 2)).unwrap(), q(1));
        assert_eq!(coroot_pairing(&w, &Root::eps(2, 1)).unwrap(), q(3));
        assert_eq!(
            coroot_pairing(&Weight::zero(2), &Root::eps(2, 1)).unwrap(),
            q(0)
        );
        assert!(coroot_pairing(&Weight::zero(3), &Root::eps(2, 1)).is_err());
    }

    #[test]
    fn rho_pairs_to_one_with_simple_roots() {
        for n in 5..=12 {
            let rs = RootSystem::for_so(n);
            let rho = rs.rho();
            for a in rs.simple_roots() {
                assert_eq!(coroot_pairing(&rho, &a).unwrap(), q(1), "so({n}) {a}");
            }
        }
    }

    #[test]
    fn simple_coords_and_height() {
        let b3 = RootSystem::for_so(7);
        assert_eq!(
            b3.root_simple_coords(&Root::eps_plus(3, 1, 3)),
            vec![1, 1, 2]
        );
        assert_eq!(b3.root_simple_coords(&Root::eps(3, 1)), vec![1, 1, 1]);
        let d3 = RootSystem::for_so(6);
        assert_eq!(
            d3.root_simple_coords(&Root::eps_plus(3, 1, 3)),
            vec![1, 0, 1]
        );
        assert_eq!(
            d3.root_simple_coords(&Root::eps_plus(3, 1, 2)),
            vec![1, 1, 1]
        );
        assert_eq!(d3.height(&Root::eps_minus(3, 1, 3)), 2);
    }

    #[test]
    fn root_text_round_trip() {
        for n in [5, 6, 7, 8] {
            let rs = RootSystem::for_so(n);
            for r in rs.positive_roots() {
                assert_eq!(Root::parse(&r.to_string(), rs.rank).unwrap(), r);
                assert_eq!(Root::parse(&r.neg().to_string(), rs.rank).unwrap(), r.neg());
            }
        }
        assert!(Root::parse("e1+e1", 2).is_err());
        assert!(Root::parse("e4", 3).is_err());
    }

    #[test]
    fn reflection_is_involutive() {
        let w = Weight(vec![half(5), q(1), half(-1)]);
        for r in RootSystem::for_so(7).positive_roots() {
            assert_eq!(w.reflect(&r).reflect(&r), w);
        }
    }
}
