//! Kostant's partition function and the weight multiplicities it yields.
//!
//! These are brute-force counts, deliberately independent of the Weyl
//! product formula and of the PBW enumeration in the Verma module code, so
//! that both can be checked against them.

use crate::rational::{q, Q};
use crate::rootsys::{LieType, RootSystem, Weight};
use std::collections::{HashMap, HashSet, VecDeque};

/// Counts the ways to write an element of the root lattice as a sum of
/// positive roots (with repetition).
pub struct PartitionFunction {
    roots: Vec<Vec<i64>>,
    memo: HashMap<(Vec<i64>, usize), u64>,
}

impl PartitionFunction {
    pub fn new(rs: &RootSystem) -> Self {
        let roots = rs
            .positive_roots()
            .iter()
            .map(|r| rs.root_simple_coords(r))
            .collect();
        PartitionFunction {
            roots,
            memo: HashMap::new(),
        }
    }

    /// P(γ) for γ given in simple-root coordinates.
    pub fn count(&mut self, gamma: &[i64]) -> u64 {
        self.count_from(gamma.to_vec(), 0)
    }

    fn count_from(&mut self, gamma: Vec<i64>, i: usize) -> u64 {
        if gamma.iter().any(|g| *g < 0) {
            return 0;
        }
        if i == self.roots.len() {
            return u64::from(gamma.iter().all(|g| *g == 0));
        }
        if let Some(v) = self.memo.get(&(gamma.clone(), i)) {
            return *v;
        }
        let mut total = 0;
        let mut rest = gamma.clone();
        loop {
            total += self.count_from(rest.clone(), i + 1);
            for (r, c) in rest.iter_mut().zip(&self.roots[i]) {
                *r -= c;
            }
            if rest.iter().any(|g| *g < 0) {
                break;
            }
        }
        self.memo.insert((gamma, i), total);
        total
    }

    /// P(γ) for γ in ε-coordinates; zero off the root lattice.
    pub fn count_weight(&mut self, rs: &RootSystem, gamma: &[Q]) -> u64 {
        let c = rs.simple_coords(gamma);
        if c.iter().any(|x| !x.is_integer()) {
            return 0;
        }
        let ints: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
        self.count(&ints)
    }
}

/// A Weyl group element acting by x ↦ (signs[i] · x[perm[i]])_i.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
    /// Determinant, ±1.
    pub sign: i64,
}

impl WeylElement {
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(p, s)| x[*p] * q(*s))
            .collect()
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // insert n-1 at every position; each shift past an element is a transposition
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            let moved = (p.len() - pos) as i64;
            out.push((v, if moved % 2 == 0 { s } else { -s }));
        }
    }
    out
}

/// All elements: signed permutations (B) or those with an even number of sign changes (D).
pub fn weyl_group(rs: &RootSystem) -> Vec<WeylElement> {
    let l = rs.rank;
    let mut out = Vec::new();
    for (perm, psign) in permutations(l) {
        for mask in 0u32..(1 << l) {
            let flips = mask.count_ones();
            if rs.kind == LieType::D && flips % 2 == 1 {
                continue;
            }
            let signs: Vec<i64> = (0..l)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect();
            let sign = match rs.kind {
                LieType::B if flips % 2 == 1 => -psign,
                _ => psign,
            };
            out.push(WeylElement {
                perm: perm.clone(),
                signs,
                sign,
            });
        }
    }
    out
}

/// Multiplicity of μ in the irrep of highest weight λ:
/// Σ_w sign(w) P(w(λ+ρ) − (μ+ρ)).
pub fn weight_multiplicity(
    rs: &RootSystem,
    group: &[WeylElement],
    pf: &mut PartitionFunction,
    lambda: &Weight,
    mu: &Weight,
) -> i64 {
    let rho = rs.rho();
    let lr = lambda.add(&rho);
    let mr = mu.add(&rho);
    let mut total = 0i64;
    for w in group {
        let image = w.apply(&lr.0);
        let gamma: Vec<Q> = image.iter().zip(&mr.0).map(|(a, b)| a - b).collect();
        total += w.sign * pf.count_weight(rs, &gamma) as i64;
    }
    total
}

/// Dimension of the irrep of highest weight λ by summing weight
/// multiplicities over every weight reachable from λ by subtracting simple
/// roots (weights of an irrep satisfy |μ| ≤ |λ|).
pub fn character_dimension(rs: &RootSystem, lambda: &Weight) -> u64 {
    let group = weyl_group(rs);
    let mut pf = PartitionFunction::new(rs);
    let simple: Vec<Weight> = rs.simple_roots().iter().map(Weight::from).collect();
    let bound = lambda.dot(&lambda.0);
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    seen.insert(lambda.clone());
    let mut total = 0i64;
    while let Some(mu) = queue.pop_front() {
        total += weight_multiplicity(rs, &group, &mut pf, lambda, &mu);
        for a in &simple {
            let next = mu.sub(a);
            if next.dot(&next.0) <= bound && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    assert!(total >= 0, "negative dimension from multiplicities");
    total as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(weyl_group(&RootSystem::for_so(5)).len(), 8);
        assert_eq!(weyl_group(&RootSystem::for_so(7)).len(), 48);
        assert_eq!(weyl_group(&RootSystem::for_so(6)).len(), 24);
        assert_eq!(weyl_group(&RootSystem::for_so(8)).len(), 192);
    }

    #[test]
    fn group_preserves_roots() {
        for n in [5, 6, 7, 8] {
            let rs = RootSystem::for_so(n);
            let roots: HashSet<Vec<Q>> = rs
                .positive_roots()
                .iter()
                .flat_map(|r| {
                    let w = Weight::from(r);
                    [w.0.clone(), w.scale(q(-1)).0]
                })
                .collect();
            for g in weyl_group(&rs) {
                for r in &roots {
                    assert!(roots.contains(&g.apply(r)));
                }
            }
        }
    }

    #[test]
    fn partition_small() {
        let rs = RootSystem::for_so(5);
        let mut pf = PartitionFunction::new(&rs);
        // B2 positive roots in simple coords: (1,0),(1,2),(1,1),(0,1)
        assert_eq!(pf.count(&[0, 0]), 1);
        assert_eq!(pf.count(&[1, 0]), 1);
        assert_eq!(pf.count(&[1, 1]), 2);
        assert_eq!(pf.count(&[1, 2]), 3);
        assert_eq!(pf.count(&[-1, 0]), 0);
    }

    #[test]
    fn known_dimensions() {
        let b2 = RootSystem::for_so(5);
        assert_eq!(character_dimension(&b2, &Weight(vec![q(1), q(0)])), 5);
        assert_eq!(
            character_dimension(&b2, &Weight(vec![Q::new(1, 2), Q::new(1, 2)])),
            4
        );
        assert_eq!(character_dimension(&b2, &Weight(vec![q(1), q(1)])), 10);
        let d3 = RootSystem::for_so(6);
        assert_eq!(character_dimension(&d3, &Weight(vec![q(1), q(0), q(0)])), 6);
        assert_eq!(
            character_dimension(&d3, &Weight(vec![q(1), q(1), q(0)])),
            15
        );
        assert_eq!(
            character_dimension(
                &d3,
                &Weight(vec![Q::new(1, 2), Q::new(1, 2), Q::new(-1, 2)])
            ),
            4
        );
    }
}
