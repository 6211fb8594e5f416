//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;

use mutalg::algebra::StructureAlgebra;
use mutalg::presentation::{phi_k, GeneratorImages};
use mutalg::{GssMatrix, SignedValuedQuiver, TElem};

/// Types of rank at most four, one per isomorphism class.
pub const SMALL_TYPES: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"];

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random gss matrix with `n <= max_n`, symmetrizer entries in `{1, 2}`
/// and every coefficient of absolute value at most `bound`.
pub fn random_gss(rng: &mut impl Rng, max_n: usize, bound: i64) -> GssMatrix {
    let n = rng.gen_range(1..=max_n);
    let d: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    let mut rows = vec![vec![TElem::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.4) {
                continue;
            }
            let g = gcd(d[i], d[j]);
            let (si, sj) = ((d[j] / g) as i64, (d[i] / g) as i64);
            let lim = bound / si.max(sj);
            let (a, b) = (rng.gen_range(-lim..=lim), rng.gen_range(-lim..=lim));
            rows[i][j] = TElem::new(a * si, b * si);
            rows[j][i] = TElem::new(-a * sj, -b * sj);
        }
    }
    GssMatrix::with_symmetrizer(rows, d).expect("generator keeps D B skew-symmetric")
}

/// Fomin-Zelevinsky mutation written entry by entry from the case split
/// `b_ik b_kj > 0`.
pub fn fz_oracle(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else if b[i][k] > 0 && b[k][j] > 0 {
                b[i][j] + b[i][k] * b[k][j]
            } else if b[i][k] < 0 && b[k][j] < 0 {
                b[i][j] - b[i][k] * b[k][j]
            } else {
                b[i][j]
            };
        }
    }
    out
}

/// Substitute `t = 1` entry by entry.
pub fn at_one(b: &GssMatrix) -> Vec<Vec<i64>> {
    b.rows()
        .iter()
        .map(|r| r.iter().map(|e| (&e.a + &e.b).to_i64().expect("small entry")).collect())
        .collect()
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// The labeled class of `start` with faithful generator images for every
/// member, obtained by pushing `base` along the breadth-first tree.
pub fn class_with_images(
    start: &SignedValuedQuiver,
    alg: &StructureAlgebra,
    base: &GeneratorImages,
) -> Vec<(Vec<usize>, SignedValuedQuiver, GeneratorImages)> {
    let mut seen: HashSet<SignedValuedQuiver> = HashSet::from([start.clone()]);
    let mut out = vec![(Vec::new(), start.clone(), base.clone())];
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let (seq, q, im) = out[idx].clone();
        for k in 0..q.n() {
            let next = q.mutate(k).unwrap();
            if seen.insert(next.clone()) {
                let nim = phi_k(&q, k, &im, alg).unwrap();
                let mut s = seq.clone();
                s.push(k);
                out.push((s, next, nim));
                queue.push_back(out.len() - 1);
            }
        }
    }
    out
}

pub fn random_sequence(rng: &mut impl Rng, n: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(0..n)).collect()
}

/// Like [`random_gss`], but every entry is an integer or an integer times `t`.
pub fn random_pure_gss(rng: &mut impl Rng, max_n: usize, bound: i64) -> GssMatrix {
    let b = random_gss(rng, max_n, bound);
    let n = b.n();
    let mut rows = b.rows();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                rows[i][j] = TElem::new(rows[i][j].a.clone(), 0);
                rows[j][i] = TElem::new(rows[j][i].a.clone(), 0);
            } else {
                rows[i][j] = TElem::new(0, rows[i][j].b.clone());
                rows[j][i] = TElem::new(0, rows[j][i].b.clone());
            }
        }
    }
    GssMatrix::with_symmetrizer(rows, b.symmetrizer().to_vec()).expect("skew-symmetrizable")
}
