//! Exact linear algebra over ℚ: fraction-free (Bareiss) elimination on
//! integer rows, kernels and ranks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense matrix of rationals, row-major.
pub type RatMatrix = Vec<Vec<BigRational>>;

/// Clears denominators row by row.
fn integer_rows(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Row echelon form by Bareiss elimination; returns the pivot columns and the
/// reduced integer rows (only the first `pivots.len()` rows are meaningful).
pub fn bareiss_echelon(rows: &[Vec<BigRational>], ncols: usize) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let mut a = integer_rows(rows);
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division is exact");
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, a)
}

pub fn rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    bareiss_echelon(rows, ncols).0.len()
}

/// Basis of {x : A x = 0}; one vector per free column, with that entry 1.
pub fn kernel(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let (pivots, a) = bareiss_echelon(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for f in free {
        let mut x = vec![BigRational::zero(); ncols];
        x[f] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut s = BigRational::zero();
            for j in pc + 1..ncols {
                if !a[r][j].is_zero() && !x[j].is_zero() {
                    s += BigRational::from_integer(a[r][j].clone()) * &x[j];
                }
            }
            x[pc] = -s / BigRational::from_integer(a[r][pc].clone());
        }
        out.push(x);
    }
    out
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub fn normalize(v: &[BigRational]) -> Vec<BigRational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|x| x / &lead).collect()
        }
        None => v.to_vec(),
    }
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[Vec<BigRational>], b: &[Vec<BigRational>], ncols: usize) -> bool {
    let ra = rank(a, ncols);
    let rb = rank(b, ncols);
    let both: Vec<Vec<BigRational>> = a.iter().chain(b).cloned().collect();
    ra == rb && rank(&both, ncols) == ra
}

pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn mat_vec(m: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn m(rows: &[&[i64]]) -> RatMatrix {
        rows.iter()
            .map(|row| row.iter().map(|x| r(*x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a, 3), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(is_zero_vector(&mat_vec(&a, &k[0])));
    }

    #[test]
    fn fractional_rows() {
        let a = vec![vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 3.into()),
        ]];
        let k = kernel(&a, 2);
        assert_eq!(k.len(), 1);
        assert!(is_zero_vector(&mat_vec(&a, &k[0])));
        assert_eq!(normalize(&k[0])[0], r(1));
    }

    #[test]
    fn spans() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = m(&[&[1, 2, 1], &[1, 0, -1]]);
        assert!(same_span(&a, &b, 3));
        let c = m(&[&[1, 0, 0]]);
        assert!(!same_span(&a, &c, 3));
    }

    #[test]
    fn empty_matrix_kernel_is_everything() {
        assert_eq!(kernel(&[], 3).len(), 3);
    }
}
