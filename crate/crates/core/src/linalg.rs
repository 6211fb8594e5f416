//! Exact linear algebra over `Z` and `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Determinant of a small `i64` matrix.
pub fn det_i64(m: &[Vec<i64>]) -> BigInt {
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    det_int(&big)
}

/// Leading principal minors `det(m[..k][..k])` for `k = 1..=n`.
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            det_i64(&sub)
        })
        .collect()
}

/// A subspace of `Q^dim` kept as a reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    /// Basis rows, each with a leading 1 at `pivots[r]`, zero in all other
    /// pivot columns.
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<'a>(dim: usize, vs: impl IntoIterator<Item = &'a Vec<BigRational>>) -> Self {
        let mut s = Span::new(dim);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// Residual of `v` after eliminating the current pivots.
    pub fn reduce(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Add `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn same_as(&self, other: &Span) -> bool {
        self.rank() == other.rank() && other.rows.iter().all(|r| self.contains(r))
    }
}

/// Rank of a list of rational vectors.
pub fn rank(dim: usize, vs: &[Vec<BigRational>]) -> usize {
    Span::from_vectors(dim, vs).rank()
}

/// Basis of the right kernel `{x : A x = 0}` of a rational matrix with
/// `cols` columns.
pub fn kernel(a: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let echelon = Span::from_vectors(cols, a);
    let mut free: Vec<usize> = (0..cols).filter(|c| !echelon.pivots.contains(c)).collect();
    free.sort_unstable();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (row, &p) in echelon.rows.iter().zip(&echelon.pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn determinants() {
        assert_eq!(det_i64(&[vec![2, -1], vec![-1, 2]]), BigInt::from(3));
        assert_eq!(det_i64(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]), BigInt::zero());
        assert_eq!(det_i64(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(det_i64(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), BigInt::from(-3));
        assert_eq!(
            leading_minors(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
            vec![BigInt::from(2), BigInt::from(3), BigInt::from(4)]
        );
    }

    #[test]
    fn span_and_kernel() {
        let vs = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        let s = Span::from_vectors(3, &vs);
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&[q(1), q(3), q(4)]));
        assert!(!s.contains(&[q(0), q(0), q(1)]));
        let k = kernel(&vs, 3);
        assert_eq!(k.len(), 1);
        for row in &vs {
            let dot: BigRational = row.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        let t = Span::from_vectors(3, &[vec![q(0), q(1), q(1)], vec![q(1), q(3), q(4)]]);
        assert!(s.same_as(&t));
    }
}
