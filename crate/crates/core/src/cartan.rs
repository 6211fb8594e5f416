//! Cartan counterparts of gss matrices and the transforms acting on them.
//!
//! Convention: `c_ij` is the coefficient in `[h_i, e_j] = c_ij e_j`, the
//! reflections are `s_i(alpha_j) = alpha_j - c_ij alpha_i`, and
//! `d_i c_ij = d_j c_ji`. Every other module reads `c` with these indices.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::leading_minors;
use crate::matrix::{GssMatrix, IntMatrix};
use crate::quiver::SignedValuedQuiver;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanCounterpart {
    pub c: Vec<Vec<i64>>,
    pub d: Vec<u64>,
}

impl CartanCounterpart {
    /// `c_ii = 2` and `c_ij = |a| - |b|` for `b_ij = a + b t`.
    pub fn of_matrix(b: &GssMatrix) -> Self {
        let n = b.n();
        let small = |x: BigInt| x.to_i64().expect("Cartan entry exceeds i64");
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            2
                        } else {
                            let e = b.get(i, j);
                            small(e.a.abs() - e.b.abs())
                        }
                    })
                    .collect()
            })
            .collect();
        CartanCounterpart { c, d: b.symmetrizer().to_vec() }
    }

    /// Read off the quiver: `c_ij = v1` for `i -> j` and `v2` for `j -> i`.
    pub fn of_quiver(q: &SignedValuedQuiver) -> Self {
        let n = q.n();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for a in q.arrows() {
            c[a.src][a.tgt] = a.v1;
            c[a.tgt][a.src] = a.v2;
        }
        CartanCounterpart { c, d: q.symmetrizer().to_vec() }
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.c[i][j]
    }

    /// The symmetric matrix `M = D C`.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (0..n).map(|i| (0..n).map(|j| self.d[i] as i64 * self.c[i][j]).collect()).collect()
    }

    pub fn is_symmetrizable(&self) -> bool {
        let m = self.gram();
        (0..self.n()).all(|i| (0..self.n()).all(|j| m[i][j] == m[j][i]))
    }

    /// Cartan counterpart after mutating `q` at `k`, computed from `self`:
    /// `c_ij - c_ik c_kj` when exactly one of `i`, `j` has an arrow into `k`.
    pub fn mutate(&self, q: &SignedValuedQuiver, k: usize) -> Result<Self> {
        if k >= self.n() {
            return Err(Error::VertexOutOfRange(k + 1, self.n()));
        }
        if CartanCounterpart::of_quiver(q) != *self {
            return Err(Error::Shape("Cartan matrix does not belong to the quiver".into()));
        }
        let n = self.n();
        let into_k: Vec<bool> = (0..n).map(|i| q.has_arrow(i, k)).collect();
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if into_k[i] != into_k[j] {
                            self.c[i][j] - self.c[i][k] * self.c[k][j]
                        } else {
                            self.c[i][j]
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(CartanCounterpart { c, d: self.d.clone() })
    }

    fn check(&self, idx: &[usize]) -> Result<()> {
        match idx.iter().find(|&&i| i >= self.n()) {
            Some(&i) => Err(Error::VertexOutOfRange(i + 1, self.n())),
            None => Ok(()),
        }
    }

    /// `T^sigma_sr(C) = D^-1 E^sigma_rs D C E^sigma_sr` with
    /// `E^sigma_sr = I + sigma e_s e_r^T`.
    pub fn transform_t(&self, s: usize, r: usize, sigma: i64) -> Result<Self> {
        self.check(&[s, r])?;
        if s == r {
            return Err(Error::Shape("T needs distinct indices".into()));
        }
        let mut c = self.c.clone();
        // Right factor: column r += sigma * column s.
        for row in c.iter_mut() {
            row[r] += sigma * row[s];
        }
        // Left factor D^-1 E_rs D: row r += sigma d_s / d_r * row s.
        let (ds, dr) = (self.d[s] as i64, self.d[r] as i64);
        let row_s = c[s].clone();
        for (x, y) in c[r].iter_mut().zip(&row_s) {
            let num = sigma * ds * y;
            if num % dr != 0 {
                return Err(Error::Shape("T transform leaves the integers".into()));
            }
            *x += num / dr;
        }
        Ok(CartanCounterpart { c, d: self.d.clone() })
    }

    /// `J_r(C)`: negate row and column `r`.
    pub fn transform_j(&self, r: usize) -> Result<Self> {
        self.check(&[r])?;
        let mut c = self.c.clone();
        for (i, row) in c.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                if (i == r) != (j == r) {
                    *x = -*x;
                }
            }
        }
        Ok(CartanCounterpart { c, d: self.d.clone() })
    }

    /// `U_sr`: `T^{-c_sr}_sr` when `c_sr <= 0`, else `J_r T^{c_sr}_sr J_r`.
    pub fn transform_u(&self, s: usize, r: usize) -> Result<Self> {
        self.check(&[s, r])?;
        let csr = self.c[s][r];
        if csr <= 0 {
            self.transform_t(s, r, -csr)
        } else {
            self.transform_j(r)?.transform_t(s, r, csr)?.transform_j(r)
        }
    }

    /// Positive definiteness of `D C` by leading principal minors.
    pub fn is_positive(&self) -> bool {
        leading_minors(&self.gram()).iter().all(|m| m.is_positive())
    }
}

/// `C` is a positive quasi-Cartan companion of `btilde`: diagonal 2,
/// `|c_ij| = |btilde_ij|` off the diagonal, and `D C` positive definite.
pub fn is_positive_quasi_cartan(c: &CartanCounterpart, btilde: &IntMatrix) -> bool {
    let n = c.n();
    btilde.len() == n
        && (0..n).all(|i| {
            (0..n).all(|j| if i == j { c.c[i][i] == 2 } else { c.c[i][j].abs() == btilde[i][j].abs() })
        })
        && c.is_symmetrizable()
        && c.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterpart_examples() {
        let b = GssMatrix::from_pairs(&[
            vec![(0, 0), (1, 0), (0, -1)],
            vec![(-1, 0), (0, 0), (0, 1)],
            vec![(0, 1), (0, -1), (0, 0)],
        ])
        .unwrap();
        assert_eq!(CartanCounterpart::of_matrix(&b).c, vec![vec![2, 1, -1], vec![1, 2, -1], vec![-1, -1, 2]]);
        let bp = GssMatrix::from_pairs(&[
            vec![(0, 0), (0, 1), (0, -1)],
            vec![(0, -1), (0, 0), (1, 0)],
            vec![(0, 1), (-1, 0), (0, 0)],
        ])
        .unwrap();
        let cp = CartanCounterpart::of_matrix(&bp);
        assert_eq!(cp.c, vec![vec![2, -1, -1], vec![-1, 2, 1], vec![-1, 1, 2]]);
        assert_eq!(cp, CartanCounterpart::of_quiver(&SignedValuedQuiver::from_matrix(&bp).unwrap()));
        assert_eq!(CartanCounterpart::of_matrix(&GssMatrix::zero(2)).c, vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn cartan_mutation_of_path() {
        let q = SignedValuedQuiver::from_tuples(3, &[(1, 0, -1, -1), (2, 1, -1, -1)]).unwrap();
        let c = CartanCounterpart::of_quiver(&q);
        assert_eq!(c.mutate(&q, 1).unwrap().c, vec![vec![2, -1, -1], vec![-1, 2, 1], vec![-1, 1, 2]]);
        // Vertex 3 has no arrows into vertex 1 and neither does 2's row pair.
        let m0 = c.mutate(&q, 0).unwrap();
        assert_eq!(m0.c[1][2], c.c[1][2]);
    }

    #[test]
    fn transforms() {
        let q = SignedValuedQuiver::from_tuples(3, &[(1, 0, -1, -1), (2, 1, -1, -2)]).unwrap();
        let c = CartanCounterpart::of_quiver(&q);
        assert_eq!(c.transform_j(1).unwrap().transform_j(1).unwrap(), c);
        assert_eq!(c.transform_t(0, 1, 0).unwrap(), c);
        assert_eq!(
            c.transform_u(1, 0).unwrap().transform_u(1, 2).unwrap(),
            c.transform_u(1, 2).unwrap().transform_u(1, 0).unwrap()
        );
        assert!(c.transform_t(1, 1, 1).is_err());
        assert!(c.transform_j(5).is_err());
    }

    #[test]
    fn positivity() {
        let tri = CartanCounterpart { c: vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]], d: vec![1, 1, 1] };
        assert!(!tri.is_positive());
        let id = CartanCounterpart { c: vec![vec![2, 0], vec![0, 2]], d: vec![1, 1] };
        assert!(is_positive_quasi_cartan(&id, &vec![vec![0, 0], vec![0, 0]]));
    }
}
