//! Closed-form singular vectors for roots that are sums of a chain of simple
//! roots, and their verification inside the Verma module.
//!
//! An A-chain β = α_{c_1} + … + α_{c_n} (consecutive nodes of the Dynkin
//! diagram) uses the sl(n+1)-type sum over k_1 … k_{n−1} ∈ [0, m]. A doubled
//! chain β = α_{c_1} + … + α_{c_{n−1}} + 2α_{c_n} ending at the short root of
//! type B uses the variant whose last index runs over [0, 2m].

use crate::error::{Error, Result};
use crate::lie::StructureConstants;
use crate::linalg;
use crate::rational::{binomial, q, to_big, Q};
use crate::rootsys::{coroot_pairing, AlgebraSpec, LieType, Root, RootSystem, Weight};
use crate::verma::{PbwElement, PbwOrder, VermaModule, VermaSlice};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    AChain,
    /// The last index carries multiplicity 2.
    DoubledEnd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub root: Root,
    pub kind: ChainKind,
    /// 0-based simple-root indices in chain order.
    pub indices: Vec<usize>,
}

impl ChainDecomposition {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Multiplicity of each simple root in β.
    pub fn multiplicities(&self, rank: usize) -> Vec<i64> {
        let mut out = vec![0; rank];
        for (pos, i) in self.indices.iter().enumerate() {
            let last = pos + 1 == self.indices.len();
            out[*i] += if last && self.kind == ChainKind::DoubledEnd {
                2
            } else {
                1
            };
        }
        out
    }
}

impl fmt::Display for ChainDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .indices
            .iter()
            .enumerate()
            .map(|(pos, i)| {
                let doubled = pos + 1 == self.indices.len() && self.kind == ChainKind::DoubledEnd;
                if doubled {
                    format!("a{}^2", i + 1)
                } else {
                    format!("a{}", i + 1)
                }
            })
            .collect();
        write!(f, "{} = [{}]", self.root, parts.join(", "))
    }
}

/// Nodes of the Dynkin diagram joined to node i.
fn neighbours(rs: &RootSystem, i: usize) -> Vec<usize> {
    let l = rs.rank;
    let mut out = Vec::new();
    let linked = |a: usize, b: usize| match rs.kind {
        LieType::B => a.abs_diff(b) == 1,
        LieType::D => {
            let (lo, hi) = (a.min(b), a.max(b));
            if hi == l - 1 {
                lo == l - 3
            } else {
                hi - lo == 1
            }
        }
    };
    for j in 0..l {
        if j != i && linked(i, j) {
            out.push(j);
        }
    }
    out
}

/// Writes β as a chain of simple roots in the fixed enumeration.
pub fn chain_in(rs: &RootSystem, beta: &Root) -> Result<ChainDecomposition> {
    if !beta.is_positive() || beta.is_compact() {
        return Err(Error::NotNoncompactPositive(beta.to_string()));
    }
    let coeffs = rs.root_simple_coords(beta);
    let support: Vec<usize> = (0..rs.rank).filter(|i| coeffs[*i] > 0).collect();
    let doubled: Vec<usize> = support
        .iter()
        .copied()
        .filter(|i| coeffs[*i] == 2)
        .collect();
    if coeffs.iter().any(|c| *c > 2) || doubled.len() > 1 {
        return Err(Error::NoChainForm(beta.to_string()));
    }
    // walk the support as a path starting from its lowest endpoint
    let inside = |j: &usize| support.contains(j);
    let endpoints: Vec<usize> = support
        .iter()
        .copied()
        .filter(|i| neighbours(rs, *i).iter().filter(|j| inside(j)).count() <= 1)
        .collect();
    let start = match (doubled.first(), endpoints.as_slice()) {
        (_, [only]) => *only,
        (Some(d), [a, b]) => {
            if a == d {
                *b
            } else {
                *a
            }
        }
        (None, [a, _]) => *a,
        _ => return Err(Error::NoChainForm(beta.to_string())),
    };
    let mut path = vec![start];
    while path.len() < support.len() {
        let last = *path.last().unwrap();
        let next = neighbours(rs, last)
            .into_iter()
            .find(|j| inside(j) && !path.contains(j))
            .ok_or_else(|| Error::NoChainForm(beta.to_string()))?;
        path.push(next);
    }
    let kind = match doubled.first() {
        None => ChainKind::AChain,
        Some(d) if path.last() == Some(d) && rs.kind == LieType::B => ChainKind::DoubledEnd,
        Some(_) => return Err(Error::NoChainForm(beta.to_string())),
    };
    let chain = ChainDecomposition {
        root: beta.clone(),
        kind,
        indices: path,
    };
    debug_assert_eq!(chain.multiplicities(rs.rank), coeffs);
    Ok(chain)
}

pub fn chain_decomposition(spec: &AlgebraSpec, beta: &Root) -> Result<ChainDecomposition> {
    chain_in(&spec.root_system(), beta)
}

/// Σ c · f_{i_1} f_{i_2} ⋯ f_{i_k} over words in the simple lowering generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NcPolynomial {
    /// (coefficient, word of 0-based simple indices, leftmost factor outermost).
    pub terms: Vec<(BigRational, Vec<usize>)>,
}

impl NcPolynomial {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Simple-root content of each word (all equal for a homogeneous polynomial).
    pub fn weights(&self, rank: usize) -> Vec<Vec<i64>> {
        self.terms
            .iter()
            .map(|(_, w)| {
                let mut out = vec![0; rank];
                for i in w {
                    out[*i] += 1;
                }
                out
            })
            .collect()
    }
}

fn word_text(word: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let n = j - i;
        parts.push(if n == 1 {
            format!("f{}", word[i] + 1)
        } else {
            format!("f{}^{n}", word[i] + 1)
        });
        i = j;
    }
    parts.join(".")
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| format!("{c} * {}", word_text(w)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn power(word: &mut Vec<usize>, i: usize, n: u32) {
    word.extend(std::iter::repeat_n(i, n as usize));
}

fn ratio(h: &Q, k: u32) -> Result<BigRational> {
    let den = *h - q(k as i64);
    if den.is_zero() {
        return Err(Error::FormulaInapplicable { shift: k });
    }
    Ok(to_big(*h) / to_big(den))
}

fn sign(k: u32) -> BigRational {
    if k.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Iterates over all index vectors with the given inclusive upper bounds.
fn grid(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=*b).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// The closed-form singular vector of weight Λ − mβ, normalized so that the
/// term with all k = 0 has coefficient 1. `lambda` is Λ (not Λ+ρ).
pub fn singular_vector_closed_form(
    rs: &RootSystem,
    chain: &ChainDecomposition,
    m: u32,
    lambda: &Weight,
) -> Result<NcPolynomial> {
    let rho = rs.rho();
    let shifted = lambda.add(&rho);
    let pairing = coroot_pairing(&shifted, &chain.root)?;
    if pairing != q(m as i64) {
        return Err(Error::BggViolated {
            pairing,
            expected: m,
        });
    }
    let simple = rs.simple_roots();
    let on_coroot = |i: usize| coroot_pairing(&shifted, &simple[i]).expect("ranks agree");
    let c = &chain.indices;
    let n = c.len();
    // (Λ+ρ)(H^s) with H^s the sum of the first s chain coroots
    let partial: Vec<Q> = c
        .iter()
        .scan(Q::zero(), |acc, i| {
            *acc += on_coroot(*i);
            Some(*acc)
        })
        .collect();
    let mut poly = NcPolynomial::default();
    match chain.kind {
        ChainKind::AChain => {
            for ks in grid(&vec![m; n - 1]) {
                let mut coeff = sign(ks.iter().sum());
                for (s, k) in ks.iter().enumerate() {
                    coeff *= BigRational::from_integer(binomial(m, *k)) * ratio(&partial[s], *k)?;
                }
                let mut word = Vec::new();
                for (s, k) in ks.iter().enumerate() {
                    power(&mut word, c[s], m - k);
                }
                power(&mut word, c[n - 1], m);
                for (s, k) in ks.iter().enumerate().rev() {
                    power(&mut word, c[s], *k);
                }
                poly.terms.push((coeff, word));
            }
        }
        ChainKind::DoubledEnd => {
            let last = on_coroot(c[n - 1]);
            let mut bounds = vec![m; n - 2];
            bounds.push(2 * m);
            for ks in grid(&bounds) {
                let kd = ks[n - 2];
                let mut coeff = sign(ks.iter().sum());
                for (s, k) in ks[..n - 2].iter().enumerate() {
                    coeff *= BigRational::from_integer(binomial(m, *k)) * ratio(&partial[s], *k)?;
                }
                coeff *= BigRational::from_integer(binomial(2 * m, kd)) * ratio(&last, kd)?;
                let mut word = Vec::new();
                for (s, k) in ks[..n - 2].iter().enumerate() {
                    power(&mut word, c[s], m - k);
                }
                power(&mut word, c[n - 1], 2 * m - kd);
                power(&mut word, c[n - 2], m);
                power(&mut word, c[n - 1], kd);
                for (s, k) in ks[..n - 2].iter().enumerate().rev() {
                    power(&mut word, c[s], *k);
                }
                poly.terms.push((coeff, word));
            }
        }
    }
    poly.terms.retain(|(c, _)| !c.is_zero());
    Ok(poly)
}

/// Outcome of applying the simple raising operators to a candidate vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularCheck {
    Verified,
    /// Nonzero images e_i v, indexed by simple root (0-based).
    Residual(Vec<(usize, PbwElement)>),
}

impl SingularCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, SingularCheck::Verified)
    }
}

/// The vector poly · v₀ in the PBW basis of `module`.
pub fn to_pbw(module: &mut VermaModule, poly: &NcPolynomial) -> PbwElement {
    let mut out = PbwElement::zero();
    for (c, word) in &poly.terms {
        let gens: Vec<usize> = word.iter().map(|i| module.simple_f(*i)).collect();
        let v = module.apply_word(&gens);
        out.add_scaled(&v, c);
    }
    out
}

pub fn verify_singular(module: &mut VermaModule, poly: &NcPolynomial) -> SingularCheck {
    let v = to_pbw(module, poly);
    let residual: Vec<(usize, PbwElement)> = module
        .raise_all(&v)
        .into_iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .collect();
    if residual.is_empty() {
        SingularCheck::Verified
    } else {
        SingularCheck::Residual(residual)
    }
}

/// Closed form against the brute-force kernel at one weight.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub chain: ChainDecomposition,
    pub m: u32,
    pub lambda: Weight,
    pub poly: NcPolynomial,
    pub check: SingularCheck,
    pub kernel_dim: usize,
    pub slice_dim: usize,
    /// The closed form is nonzero and lies in the kernel.
    pub in_kernel: bool,
    /// The closed form spans the whole kernel.
    pub spans_kernel: bool,
}

pub fn compare_with_oracle(
    sc: Arc<StructureConstants>,
    beta: &Root,
    m: u32,
    lambda: &Weight,
) -> Result<Comparison> {
    let rs = sc.rs;
    let chain = chain_in(&rs, beta)?;
    let poly = singular_vector_closed_form(&rs, &chain, m, lambda)?;
    let (mut module, slice, kernel) =
        crate::verma::solve_singular(sc, lambda, beta, m, PbwOrder::HeightLex)?;
    let check = verify_singular(&mut module, &poly);
    let v = to_pbw(&mut module, &poly);
    let (in_kernel, spans_kernel) = span_relation(&slice, &v, &kernel);
    Ok(Comparison {
        chain,
        m,
        lambda: lambda.clone(),
        poly,
        check,
        kernel_dim: kernel.len(),
        slice_dim: slice.dim(),
        in_kernel,
        spans_kernel,
    })
}

fn span_relation(slice: &VermaSlice, v: &PbwElement, kernel: &[PbwElement]) -> (bool, bool) {
    if v.is_zero() {
        return (false, false);
    }
    let n = slice.dim();
    let kv: Vec<Vec<BigRational>> = kernel.iter().map(|k| slice.coordinates(k)).collect();
    let vv = vec![slice.coordinates(v)];
    let mut joined = kv.clone();
    joined.extend(vv.iter().cloned());
    let inside = linalg::rank(&joined, n) == kv.len();
    (inside, inside && linalg::same_span(&vv, &kv, n))
}

/// A weight Λ with (Λ+ρ, β∨) = m, obtained from `seed` by moving along β.
pub fn bgg_locus_weight(rs: &RootSystem, beta: &Root, m: u32, seed: &[Q]) -> Weight {
    let w = Weight(seed.to_vec());
    let pairing = coroot_pairing(&w.add(&rs.rho()), beta).expect("ranks agree");
    // (β, β∨) = 2
    let t = (q(m as i64) - pairing) / q(2);
    w.add(&Weight::from(beta).scale(t))
}

/// Every noncompact positive root that has a chain form, for a rank.
pub fn chain_roots(rs: &RootSystem) -> Vec<(Root, ChainDecomposition)> {
    rs.positive_roots()
        .into_iter()
        .filter(|r| !r.is_compact())
        .filter_map(|r| chain_in(rs, &r).ok().map(|c| (r, c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn decompositions() {
        let b2 = RootSystem::for_so(5);
        let c = chain_in(&b2, &Root::eps(2, 1)).unwrap();
        assert_eq!((c.kind, c.indices.clone()), (ChainKind::AChain, vec![0, 1]));
        let c = chain_in(&b2, &Root::eps_plus(2, 1, 2)).unwrap();
        assert_eq!(
            (c.kind, c.indices.clone()),
            (ChainKind::DoubledEnd, vec![0, 1])
        );
        let b3 = RootSystem::for_so(7);
        let c = chain_in(&b3, &Root::eps_plus(3, 1, 3)).unwrap();
        assert_eq!(
            (c.kind, c.indices.clone()),
            (ChainKind::DoubledEnd, vec![0, 1, 2])
        );
        assert_eq!(c.to_string(), "e1+e3 = [a1, a2, a3^2]");
        assert!(matches!(
            chain_in(&b3, &Root::eps_plus(3, 1, 2)),
            Err(Error::NoChainForm(_))
        ));
        let d3 = RootSystem::for_so(6);
        let c = chain_in(&d3, &Root::eps_minus(3, 1, 2)).unwrap();
        assert_eq!(c.indices, vec![0]);
        let c = chain_in(&d3, &Root::eps_plus(3, 1, 3)).unwrap();
        assert_eq!((c.kind, c.indices.clone()), (ChainKind::AChain, vec![0, 2]));
        let d4 = RootSystem::for_so(8);
        let c = chain_in(&d4, &Root::eps_plus(4, 1, 4)).unwrap();
        assert_eq!(c.indices, vec![0, 1, 3]);
        assert!(chain_in(&d4, &Root::eps_plus(4, 1, 3)).is_err());
        assert!(matches!(
            chain_in(&d4, &Root::eps_minus(4, 2, 3)),
            Err(Error::NotNoncompactPositive(_))
        ));
    }

    #[test]
    fn a2_m1_closed_form_shape() {
        let b2 = RootSystem::for_so(5);
        let beta = Root::eps(2, 1);
        let chain = chain_in(&b2, &beta).unwrap();
        let lam = bgg_locus_weight(&b2, &beta, 1, &[Q::new(1, 3), Q::new(2, 5)]);
        let poly = singular_vector_closed_form(&b2, &chain, 1, &lam).unwrap();
        assert_eq!(poly.len(), 2);
        assert_eq!(poly.terms[0], (big(1), vec![0, 1]));
        let h1 = coroot_pairing(&lam.add(&b2.rho()), &b2.simple_roots()[0]).unwrap();
        let expect = -to_big(h1) / to_big(h1 - q(1));
        assert_eq!(poly.terms[1], (expect, vec![1, 0]));
        assert_eq!(poly.to_string().split(" + ").count(), 2);
        assert!(poly.to_string().starts_with("1 * f1.f2"));
    }

    #[test]
    fn doubled_b2_has_three_terms_at_m1() {
        let b2 = RootSystem::for_so(5);
        let beta = Root::eps_plus(2, 1, 2);
        let chain = chain_in(&b2, &beta).unwrap();
        let lam = bgg_locus_weight(&b2, &beta, 1, &[Q::new(1, 3), Q::new(2, 5)]);
        let poly = singular_vector_closed_form(&b2, &chain, 1, &lam).unwrap();
        assert_eq!(poly.len(), 3);
        for w in poly.weights(2) {
            assert_eq!(w, vec![1, 2]);
        }
    }

    #[test]
    fn off_locus_rejected() {
        let b2 = RootSystem::for_so(5);
        let beta = Root::eps(2, 1);
        let chain = chain_in(&b2, &beta).unwrap();
        let err =
            singular_vector_closed_form(&b2, &chain, 1, &Weight(vec![q(0), q(0)])).unwrap_err();
        assert!(matches!(err, Error::BggViolated { .. }));
    }

    #[test]
    fn vanishing_denominator() {
        let b2 = RootSystem::for_so(5);
        let beta = Root::eps(2, 1);
        let chain = chain_in(&b2, &beta).unwrap();
        // Λ+ρ = (1/2, −1/2): (Λ+ρ, β∨) = 1 and (Λ+ρ)(H_1) = 1
        let lam = Weight(vec![q(-1), q(-1)]);
        let err = singular_vector_closed_form(&b2, &chain, 1, &lam).unwrap_err();
        assert_eq!(err, Error::FormulaInapplicable { shift: 1 });
    }

    #[test]
    fn lone_f1f2_is_not_singular() {
        let sc = Arc::new(StructureConstants::new(5));
        let lam = Weight(vec![Q::new(2, 7), Q::new(3, 11)]);
        let mut module = VermaModule::new(sc, &lam, PbwOrder::HeightLex);
        let poly = NcPolynomial {
            terms: vec![(big(1), vec![0, 1])],
        };
        assert!(!verify_singular(&mut module, &poly).is_verified());
    }

    #[test]
    fn a_chain_matches_oracle() {
        let sc = Arc::new(StructureConstants::new(5));
        let beta = Root::eps(2, 1);
        for m in [1, 2] {
            let lam = bgg_locus_weight(&sc.rs, &beta, m, &[Q::new(1, 3), Q::new(2, 5)]);
            let cmp = compare_with_oracle(sc.clone(), &beta, m, &lam).unwrap();
            assert!(cmp.check.is_verified(), "m={m}: {:?}", cmp.check);
            assert!(cmp.spans_kernel);
        }
    }
}
