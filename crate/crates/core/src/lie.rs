//! so(N,ℂ) in split form: matrices X with XᵀJ + JX = 0 for the antidiagonal
//! J. Root vectors are E_ij − E_j′i′ (i′ = N−1−i), the Cartan subalgebra is
//! diagonal, and every bracket is read off an explicit matrix commutator.

use crate::rational::{q, Q};
use crate::rootsys::{Root, RootSystem};
use num_traits::Zero;
use std::collections::HashMap;

type Matrix = Vec<Vec<Q>>;

fn zeros(n: usize) -> Matrix {
    vec![vec![Q::zero(); n]; n]
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() && b[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                let ab = a[i][k] * b[k][j];
                let ba = b[i][k] * a[k][j];
                out[i][j] += ab - ba;
            }
        }
    }
    out
}

/// Kind of a basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Raising operator E_β for the positive root with this index.
    E(usize),
    /// Lowering operator F_β.
    F(usize),
    /// Cartan element H_k = E_kk − E_k′k′ (dual to ε_k).
    H(usize),
}

/// Sparse linear combination of basis elements.
pub type Combination = Vec<(usize, Q)>;

pub struct StructureConstants {
    pub n: usize,
    pub rs: RootSystem,
    /// Positive roots in the order used for E and F indices.
    pub roots: Vec<Root>,
    /// Basis: E_0..E_{P−1}, F_0..F_{P−1}, H_0..H_{ℓ−1}.
    pub matrices: Vec<Matrix>,
    brackets: Vec<Vec<Combination>>,
}

impl StructureConstants {
    pub fn new(n: usize) -> Self {
        let rs = RootSystem::for_so(n);
        let l = rs.rank;
        let roots = rs.positive_roots();
        let prime = |i: usize| n - 1 - i;
        let mid = l; // middle index for odd N
        let elementary = |entries: &[(usize, usize, i64)]| {
            let mut m = zeros(n);
            for (i, j, c) in entries {
                m[*i][*j] += q(*c);
            }
            m
        };
        // (i, j) position of the +1 entry of E_β and of F_β
        let support = |r: &Root| -> ((usize, usize), (usize, usize), i64) {
            let nz: Vec<(usize, i64)> = r
                .coords
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (i, *c))
                .collect();
            match nz.as_slice() {
                [(a, 1), (b, -1)] => ((*a, *b), (*b, *a), 1),
                [(a, 1), (b, 1)] => ((*a, prime(*b)), (prime(*b), *a), 1),
                [(a, 1)] => ((*a, mid), (mid, *a), 2),
                _ => unreachable!("positive root {r}"),
            }
        };
        let mut matrices = Vec::new();
        let mut lowering = Vec::new();
        for r in &roots {
            let ((i, j), (fi, fj), fscale) = support(r);
            matrices.push(elementary(&[(i, j, 1), (prime(j), prime(i), -1)]));
            lowering.push(elementary(&[
                (fi, fj, fscale),
                (prime(fj), prime(fi), -fscale),
            ]));
        }
        matrices.extend(lowering);
        for k in 0..l {
            matrices.push(elementary(&[(k, k, 1), (prime(k), prime(k), -1)]));
        }
        let mut sc = StructureConstants {
            n,
            rs,
            roots,
            matrices,
            brackets: Vec::new(),
        };
        let brackets = sc
            .matrices
            .iter()
            .map(|a| {
                sc.matrices
                    .iter()
                    .map(|b| {
                        sc.decompose(&commutator(a, b))
                            .expect("so(N) is closed under brackets")
                    })
                    .collect()
            })
            .collect();
        sc.brackets = brackets;
        sc
    }

    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn generator(&self, idx: usize) -> Generator {
        let p = self.num_positive();
        if idx < p {
            Generator::E(idx)
        } else if idx < 2 * p {
            Generator::F(idx - p)
        } else {
            Generator::H(idx - 2 * p)
        }
    }

    pub fn e(&self, root: usize) -> usize {
        root
    }

    pub fn f(&self, root: usize) -> usize {
        self.num_positive() + root
    }

    pub fn h(&self, k: usize) -> usize {
        2 * self.num_positive() + k
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.roots.iter().position(|x| x == r)
    }

    /// Index of the i-th simple root (0-based) among the positive roots.
    pub fn simple_index(&self, i: usize) -> usize {
        let s = &self.rs.simple_roots()[i];
        self.root_index(s).expect("simple roots are positive")
    }

    pub fn bracket(&self, a: usize, b: usize) -> &Combination {
        &self.brackets[a][b]
    }

    /// Writes a matrix in the basis, or `None` if it is not in so(N).
    pub fn decompose(&self, m: &Matrix) -> Option<Combination> {
        let mut out = Vec::new();
        let mut rest = m.clone();
        for (idx, basis) in self.matrices.iter().enumerate() {
            // the first nonzero entry of each basis matrix is unique to it
            let (i, j) = first_nonzero(basis);
            let coeff = rest[i][j] / basis[i][j];
            if !coeff.is_zero() {
                for (row, brow) in rest.iter_mut().zip(basis) {
                    for (x, y) in row.iter_mut().zip(brow) {
                        *x -= coeff * y;
                    }
                }
                out.push((idx, coeff));
            }
        }
        rest.iter()
            .all(|row| row.iter().all(Zero::is_zero))
            .then_some(out)
    }

    /// The Cartan element [E_β, F_β] as ε-coordinates (k ↦ coefficient of H_k).
    pub fn coroot_element(&self, root: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rank()];
        for (idx, c) in self.bracket(self.e(root), self.f(root)) {
            match self.generator(*idx) {
                Generator::H(k) => out[k] += c,
                _ => unreachable!("[E_β, F_β] lies in the Cartan subalgebra"),
            }
        }
        out
    }

    /// Number of basis triples violating the Jacobi identity.
    pub fn jacobi_violations(&self) -> usize {
        let dim = self.dim();
        let mut bad = 0;
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    let mut acc: HashMap<usize, Q> = HashMap::new();
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (i, ci) in self.bracket(y, z) {
                            for (j, cj) in self.bracket(x, *i) {
                                *acc.entry(*j).or_insert_with(Q::zero) += *ci * cj;
                            }
                        }
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        bad += 1;
                    }
                }
            }
        }
        bad
    }
}

fn first_nonzero(m: &Matrix) -> (usize, usize) {
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                return (i, j);
            }
        }
    }
    unreachable!("basis matrices are nonzero")
}
