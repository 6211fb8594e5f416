//! Root systems generated by reflections, root mutation, companion bases,
//! and a recursive description of type-A root systems.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::CartanCounterpart;
use crate::error::{Error, Result};
use crate::linalg::det_i64;
use crate::quiver::SignedValuedQuiver;

/// Coordinates in the formal simple roots.
pub type Root = Vec<i64>;

pub const DEFAULT_ROOT_CAP: usize = 100_000;

pub fn simple_root(n: usize, i: usize) -> Root {
    let mut r = vec![0; n];
    r[i] = 1;
    r
}

/// `s_i(beta) = beta - (sum_j m_j c_ij) alpha_i`.
pub fn simple_reflection(c: &CartanCounterpart, i: usize, beta: &[i64]) -> Root {
    let shift: i64 = beta.iter().enumerate().map(|(j, m)| m * c.c[i][j]).sum();
    let mut out = beta.to_vec();
    out[i] -= shift;
    out
}

/// `u^T M v` with `M = D C`.
pub fn inner_product(c: &CartanCounterpart, u: &[i64], v: &[i64]) -> i64 {
    let m = c.gram();
    let n = c.n();
    (0..n).map(|i| (0..n).map(|j| u[i] * m[i][j] * v[j]).sum::<i64>()).sum()
}

/// `(beta, gamma^vee) = 2 (beta, gamma) / (gamma, gamma)`.
pub fn coroot_pairing(c: &CartanCounterpart, beta: &[i64], gamma: &[i64]) -> Result<BigRational> {
    let gg = inner_product(c, gamma, gamma);
    if gg == 0 {
        return Err(Error::Linear("zero-length vector".into()));
    }
    Ok(BigRational::new(BigInt::from(2 * inner_product(c, beta, gamma)), BigInt::from(gg)))
}

/// A finite root system: the orbit of the simple roots under reflections.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub cartan: CartanCounterpart,
    /// Sorted lexicographically.
    pub roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystemData {
    /// Worklist closure of the simple roots under all `s_i`.
    pub fn generate(c: &CartanCounterpart, cap: usize) -> Result<Self> {
        let n = c.n();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..n {
            let a = simple_root(n, i);
            if seen.insert(a.clone()) {
                queue.push_back(a);
            }
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let r = simple_reflection(c, i, &beta);
                if !seen.contains(&r) {
                    if seen.len() >= cap {
                        return Err(Error::BudgetExceeded { explored: seen.len() });
                    }
                    seen.insert(r.clone());
                    queue.push_back(r);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().collect();
        roots.sort();
        let index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        Ok(RootSystemData { cartan: c.clone(), roots, index })
    }

    pub fn n(&self) -> usize {
        self.cartan.n()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &[i64]) -> bool {
        self.index.contains_key(r)
    }

    pub fn position(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn inner(&self, u: &[i64], v: &[i64]) -> i64 {
        inner_product(&self.cartan, u, v)
    }

    pub fn pairing(&self, beta: &[i64], gamma: &[i64]) -> Result<BigRational> {
        coroot_pairing(&self.cartan, beta, gamma)
    }

    /// Check reflection closure, integrality of pairings, that the only
    /// multiples of a root in the set are `+-` itself, and positive
    /// definiteness of the Gram matrix. Returns a description of the first
    /// failure.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        if !self.cartan.is_positive() {
            return Err("Gram matrix is not positive definite".into());
        }
        for r in &self.roots {
            for i in 0..self.n() {
                if !self.contains(&simple_reflection(&self.cartan, i, r)) {
                    return Err(format!("not closed under s_{} at {r:?}", i + 1));
                }
            }
            let g = r.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
            if g != 1 {
                return Err(format!("{r:?} is a proper multiple"));
            }
        }
        for b in &self.roots {
            for g in &self.roots {
                let num = 2 * self.inner(b, g);
                if num % self.inner(g, g) != 0 {
                    return Err(format!("pairing of {b:?} with {g:?} is not integral"));
                }
            }
        }
        Ok(())
    }

    /// Serializable view.
    pub fn to_json(&self) -> RootSystemJson {
        RootSystemJson { cartan: self.cartan.c.clone(), d: self.cartan.d.clone(), roots: self.roots.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemJson {
    pub cartan: Vec<Vec<i64>>,
    pub d: Vec<u64>,
    pub roots: Vec<Root>,
}

/// Text form such as `α1+α2` or `-α2+α3`.
pub struct RootDisplay<'a>(pub &'a [i64]);

impl fmt::Display for RootDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &m) in self.0.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let sign = if m < 0 { "-" } else if first { "" } else { "+" };
            let coeff = if m.abs() == 1 { String::new() } else { m.abs().to_string() };
            write!(f, "{sign}{coeff}α{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Linear map `rho_k`: coordinates in the simple roots of `mu_k(q)` to
/// coordinates in the simple roots of `q`. `alpha'_i` goes to
/// `s_k(alpha_i)` when `q` has an arrow `i -> k`, else to `alpha_i`.
pub fn rho(q: &SignedValuedQuiver, k: usize, beta: &[i64]) -> Root {
    let c = CartanCounterpart::of_quiver(q);
    let mut out = beta.to_vec();
    for i in 0..q.n() {
        if q.has_arrow(i, k) {
            out[k] -= beta[i] * c.c[k][i];
        }
    }
    out
}

/// Inverse of [`rho`], written with the mutated quiver `qp = mu_k(q)`:
/// `alpha_j` goes to `s'_k(alpha'_j)` when `qp` has an arrow `k -> j`.
pub fn rho_inverse(qp: &SignedValuedQuiver, k: usize, beta: &[i64]) -> Root {
    let c = CartanCounterpart::of_quiver(qp);
    let mut out = beta.to_vec();
    for j in 0..qp.n() {
        if qp.has_arrow(k, j) {
            out[k] -= beta[j] * c.c[k][j];
        }
    }
    out
}

/// Root mutation between the root systems of `q` and `mu_k(q)`.
pub struct RootMutation {
    pub k: usize,
    pub q: SignedValuedQuiver,
    pub q_mut: SignedValuedQuiver,
    pub phi: RootSystemData,
    pub phi_mut: RootSystemData,
}

impl RootMutation {
    pub fn new(q: &SignedValuedQuiver, k: usize) -> Result<Self> {
        let q_mut = q.mutate(k)?;
        let phi = RootSystemData::generate(&CartanCounterpart::of_quiver(q), DEFAULT_ROOT_CAP)?;
        let phi_mut = RootSystemData::generate(&CartanCounterpart::of_quiver(&q_mut), DEFAULT_ROOT_CAP)?;
        Ok(RootMutation { k, q: q.clone(), q_mut, phi, phi_mut })
    }

    /// `rho_k(beta')` for a root `beta'` of the mutated quiver.
    pub fn forward(&self, beta: &[i64]) -> Result<Root> {
        if !self.phi_mut.contains(beta) {
            return Err(Error::NotARoot(beta.to_vec()));
        }
        Ok(rho(&self.q, self.k, beta))
    }

    /// `rho_k^{-1}(beta)` for a root `beta` of the original quiver.
    pub fn backward(&self, beta: &[i64]) -> Result<Root> {
        if !self.phi.contains(beta) {
            return Err(Error::NotARoot(beta.to_vec()));
        }
        Ok(rho_inverse(&self.q_mut, self.k, beta))
    }

    /// Matrix of `rho_k` (column `i` is the image of `alpha'_i`).
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.q.n();
        let cols: Vec<Root> = (0..n).map(|i| rho(&self.q, self.k, &simple_root(n, i))).collect();
        (0..n).map(|r| (0..n).map(|c| cols[c][r]).collect()).collect()
    }
}

/// Images of the simple roots of `mu_{seq}(start)` in the root lattice of
/// `start`, under the composite `rho_{k_1} ... rho_{k_l}`. Returns the final
/// quiver together with the images.
pub fn composite_rho(start: &SignedValuedQuiver, seq: &[usize]) -> Result<(SignedValuedQuiver, Vec<Root>)> {
    let n = start.n();
    let mut gammas: Vec<Root> = (0..n).map(|i| simple_root(n, i)).collect();
    let mut q = start.clone();
    for &k in seq {
        let c = CartanCounterpart::of_quiver(&q);
        let gk = gammas[k].clone();
        for i in 0..n {
            if q.has_arrow(i, k) {
                for (x, y) in gammas[i].iter_mut().zip(&gk) {
                    *x -= c.c[k][i] * y;
                }
            }
        }
        q = q.mutate(k)?;
    }
    Ok((q, gammas))
}

/// Check that `gammas` form a Z-basis of the lattice of `ambient`, lie in
/// `ambient`, and satisfy `(gamma_j, gamma_i^vee) = c_ij`.
pub fn check_signed_companion_basis(
    gammas: &[Root],
    c: &CartanCounterpart,
    ambient: &RootSystemData,
) -> Result<()> {
    let n = ambient.n();
    if gammas.len() != n || c.n() != n {
        return Err(Error::CompanionBasis("size mismatch".into()));
    }
    let det = det_i64(gammas);
    if det.abs() != BigInt::one() {
        return Err(Error::CompanionBasis(format!("determinant {det}")));
    }
    for g in gammas {
        if !ambient.contains(g) {
            return Err(Error::CompanionBasis(format!("{g:?} is not a root")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let p = ambient.pairing(&gammas[j], &gammas[i])?;
            if p != BigRational::from_integer(c.c[i][j].into()) {
                return Err(Error::CompanionBasis(format!(
                    "entry ({},{}): pairing {p} but Cartan entry {}",
                    i + 1,
                    j + 1,
                    c.c[i][j]
                )));
            }
        }
    }
    Ok(())
}

/// Root system of a type-A mutation class member, built by peeling
/// extremal vertices: a leaf `v` attached to `u` contributes
/// `beta - c_vu m_u(beta) alpha_v` for every `beta` of the rest, and a
/// triangle end `{u, v}` joins the systems without `v` and without `u` with
/// `+-(alpha_u - c_vu alpha_v)`.
pub fn type_a_roots_recursive(q: &SignedValuedQuiver) -> Result<BTreeSet<Root>> {
    if q.arrows().any(|a| a.weight() != 1) {
        return Err(Error::Shape("type A quivers have weight-one arrows".into()));
    }
    let c = CartanCounterpart::of_quiver(q);
    let all: u64 = if q.n() == 64 { u64::MAX } else { (1u64 << q.n()) - 1 };
    let mut memo = HashMap::new();
    type_a_rec(q, &c, all, &mut memo)
}

fn type_a_rec(
    q: &SignedValuedQuiver,
    c: &CartanCounterpart,
    set: u64,
    memo: &mut HashMap<u64, BTreeSet<Root>>,
) -> Result<BTreeSet<Root>> {
    if let Some(r) = memo.get(&set) {
        return Ok(r.clone());
    }
    let n = q.n();
    let verts: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
    let nbrs = |v: usize| -> Vec<usize> { q.neighbors(v).into_iter().filter(|&u| set >> u & 1 == 1).collect() };
    let out = if verts.len() == 1 {
        let a = simple_root(n, verts[0]);
        let neg: Root = a.iter().map(|x| -x).collect();
        BTreeSet::from([a, neg])
    } else if let Some(&v) = verts.iter().find(|&&v| nbrs(v).len() == 1) {
        let u = nbrs(v)[0];
        let rest = type_a_rec(q, c, set & !(1 << v), memo)?;
        let mut out = rest.clone();
        for beta in &rest {
            let mut r = beta.clone();
            r[v] -= c.c[v][u] * beta[u];
            out.insert(r);
        }
        out.insert(simple_root(n, v));
        out.insert(simple_root(n, v).iter().map(|x| -x).collect());
        out
    } else {
        let pair = verts.iter().find_map(|&v| {
            let nv = nbrs(v);
            if nv.len() != 2 {
                return None;
            }
            nv.iter().copied().find(|&u| nbrs(u).len() == 2 && nbrs(u).contains(&v)).map(|u| (u, v))
        });
        let (u, v) = pair.ok_or_else(|| Error::Shape("no extremal vertex of type A shape".into()))?;
        let mut out = type_a_rec(q, c, set & !(1 << v), memo)?;
        out.extend(type_a_rec(q, c, set & !(1 << u), memo)?);
        let mut r = simple_root(n, u);
        r[v] -= c.c[v][u];
        out.insert(r.iter().map(|x| -x).collect());
        out.insert(r);
        out
    };
    if out.iter().any(|r| r.iter().all(Zero::is_zero)) {
        return Err(Error::Shape("degenerate root".into()));
    }
    memo.insert(set, out.clone());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_a3() -> SignedValuedQuiver {
        SignedValuedQuiver::from_tuples(3, &[(1, 0, -1, -1), (2, 1, -1, -1)]).unwrap()
    }

    fn roots_of(q: &SignedValuedQuiver) -> RootSystemData {
        RootSystemData::generate(&CartanCounterpart::of_quiver(q), DEFAULT_ROOT_CAP).unwrap()
    }

    #[test]
    fn reflections() {
        let a2 = SignedValuedQuiver::from_tuples(2, &[(1, 0, -1, -1)]).unwrap();
        let c = CartanCounterpart::of_quiver(&a2);
        assert_eq!(simple_reflection(&c, 0, &[0, 1]), vec![1, 1]);
        let qp = path_a3().mutate(1).unwrap();
        let cp = CartanCounterpart::of_quiver(&qp);
        assert_eq!(simple_reflection(&cp, 1, &[0, 0, 1]), vec![0, -1, 1]);
    }

    #[test]
    fn mutated_a3_roots() {
        let qp = path_a3().mutate(1).unwrap();
        let rs = roots_of(&qp);
        let mut expect: Vec<Root> = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, -1, 1],
        ];
        expect.extend(expect.clone().into_iter().map(|r| r.into_iter().map(|x| -x).collect::<Root>()));
        expect.sort();
        assert_eq!(rs.roots, expect);
        assert!(rs.check_axioms().is_ok());
        let rec = type_a_roots_recursive(&qp).unwrap();
        assert_eq!(rec.into_iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn rho_table() {
        let rm = RootMutation::new(&path_a3(), 1).unwrap();
        let table = [
            ([1, 0, 0], [1, 0, 0]),
            ([0, 1, 0], [0, 1, 0]),
            ([0, 0, 1], [0, 1, 1]),
            ([1, 1, 0], [1, 1, 0]),
            ([1, 0, 1], [1, 1, 1]),
            ([0, -1, 1], [0, 0, 1]),
        ];
        for (src, dst) in table {
            assert_eq!(rm.forward(&src).unwrap(), dst.to_vec());
            assert_eq!(rm.backward(&dst).unwrap(), src.to_vec());
        }
        assert!(rm.forward(&[1, 1, 1]).is_err());
    }

    #[test]
    fn companion_basis_after_one_step() {
        let (qp, gammas) = composite_rho(&path_a3(), &[1]).unwrap();
        assert_eq!(gammas, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 1, 1]]);
        let ambient = roots_of(&path_a3());
        check_signed_companion_basis(&gammas, &CartanCounterpart::of_quiver(&qp), &ambient).unwrap();
        let (_, id) = composite_rho(&path_a3(), &[]).unwrap();
        check_signed_companion_basis(&id, &CartanCounterpart::of_quiver(&path_a3()), &ambient).unwrap();
    }

    #[test]
    fn inner_products() {
        let b3 = SignedValuedQuiver::from_tuples(3, &[(1, 0, -1, -1), (2, 1, -1, -2)]).unwrap();
        let c = CartanCounterpart::of_quiver(&b3);
        for i in 0..3 {
            let a = simple_root(3, i);
            assert_eq!(inner_product(&c, &a, &a), 2 * c.d[i] as i64);
            for j in 0..3 {
                let p = coroot_pairing(&c, &a, &simple_root(3, j)).unwrap();
                assert_eq!(p, BigRational::from_integer(c.c[j][i].into()));
            }
        }
        assert!(coroot_pairing(&c, &[1, 0, 0], &[0, 0, 0]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(RootDisplay(&[0, -1, 1]).to_string(), "-α2+α3");
        assert_eq!(RootDisplay(&[2, 1, 0]).to_string(), "2α1+α2");
        assert_eq!(RootDisplay(&[0, 0]).to_string(), "0");
    }
}
