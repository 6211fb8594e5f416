//! Generalized skew-symmetrizable matrices over `Z[t]/(t^2 - 1)` and their
//! signed mutation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::TElem;

/// A square matrix of [`TElem`] entries together with a positive integer
/// vector `d` such that `d_i b_ij = -d_j b_ji`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GssMatrix {
    n: usize,
    entries: Vec<TElem>,
    d: Vec<u64>,
}

/// Integer matrix, row-major, used for specializations and FZ mutation.
pub type IntMatrix = Vec<Vec<i64>>;

impl GssMatrix {
    /// Build from rows, computing the minimal symmetrizer.
    pub fn from_rows(rows: Vec<Vec<TElem>>) -> Result<Self> {
        let d = find_symmetrizer(&rows)?.ok_or(Error::NotSymmetrizable)?;
        Self::with_symmetrizer(rows, d)
    }

    /// Build from rows and an explicit symmetrizer, which must be valid.
    pub fn with_symmetrizer(rows: Vec<Vec<TElem>>, d: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) || d.len() != n {
            return Err(Error::NotSquare);
        }
        if d.contains(&0) {
            return Err(Error::BadSymmetrizer);
        }
        let entries: Vec<TElem> = rows.into_iter().flatten().collect();
        let m = GssMatrix { n, entries, d };
        for i in 0..n {
            for j in 0..n {
                let lhs = m.get(i, j).scale(&BigInt::from(m.d[i]));
                let rhs = m.get(j, i).scale(&BigInt::from(m.d[j]));
                if lhs != -rhs {
                    return Err(Error::BadSymmetrizer);
                }
            }
        }
        Ok(m)
    }

    /// Convenience constructor from `(a, b)` pairs meaning `a + b t`.
    pub fn from_pairs(rows: &[Vec<(i64, i64)>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(a, b)| TElem::new(a, b)).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        GssMatrix { n, entries: vec![TElem::zero(); n * n], d: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symmetrizer(&self) -> &[u64] {
        &self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &TElem {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<TElem>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    fn check_vertex(&self, k: usize) -> Result<()> {
        if k >= self.n {
            Err(Error::VertexOutOfRange(k + 1, self.n))
        } else {
            Ok(())
        }
    }

    /// Signed mutation at `k` (0-based). Total on all gss matrices.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        self.check_vertex(k)?;
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let b = self.get(i, j);
                let v = if i == k || j == k {
                    let s = if i == k { self.get(k, j).sign() } else { -self.get(i, k).sign() };
                    match s {
                        1 => -b,
                        -1 => -b.times_t(),
                        _ => b.clone(),
                    }
                } else {
                    let bik = self.get(i, k);
                    let bkj = self.get(k, j);
                    if bik.sign() * bkj.sign() == 1 {
                        let prod = bik * bkj;
                        let corr = if bik.sign() == 1 { prod } else { -prod };
                        (b + &corr).times_t()
                    } else {
                        b.clone()
                    }
                };
                out.push(v);
            }
        }
        Ok(GssMatrix { n, entries: out, d: self.d.clone() })
    }

    /// Apply mutations left to right: `seq[0]` first.
    pub fn mutate_seq(&self, seq: &[usize]) -> Result<Self> {
        let mut m = self.clone();
        for &k in seq {
            m = m.mutate(k)?;
        }
        Ok(m)
    }

    /// Multiply row and column `k` by `t`; equals two mutations at `k`.
    pub fn scale_t(&self, k: usize) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                if (i == k) != (j == k) {
                    m.entries[i * self.n + j] = self.get(i, j).times_t();
                }
            }
        }
        m
    }

    /// Evaluate every entry at `t = 1`.
    pub fn specialize(&self) -> IntMatrix {
        self.eval_int(1)
    }

    /// Evaluate every entry at `t = s`; entries must fit in `i64`.
    pub fn eval_int(&self, s: i32) -> IntMatrix {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).eval_at(s).to_i64().expect("entry exceeds i64"))
                    .collect()
            })
            .collect()
    }

    /// The matrix `t B` obtained by multiplying every entry by `t`.
    pub fn times_t(&self) -> Self {
        GssMatrix {
            n: self.n,
            entries: self.entries.iter().map(TElem::times_t).collect(),
            d: self.d.clone(),
        }
    }

    /// Every entry lies in `Z` or in `tZ`.
    pub fn is_pure(&self) -> bool {
        self.entries.iter().all(TElem::is_pure)
    }

    pub fn first_impure_entry(&self) -> Option<(usize, usize)> {
        (0..self.n * self.n)
            .find(|&p| !self.entries[p].is_pure())
            .map(|p| (p / self.n, p % self.n))
    }

    /// Returns the first `(i, j)` breaking the positive 3-cycle condition at
    /// `k`, or `None` if it holds. Requires a pure matrix.
    pub fn positive_3cycle_violation(&self, k: usize) -> Result<Option<(usize, usize)>> {
        self.check_vertex(k)?;
        if let Some((i, j)) = self.first_impure_entry() {
            return Err(Error::NotPure(i + 1, j + 1));
        }
        for i in (0..self.n).filter(|&i| i != k) {
            for j in (0..self.n).filter(|&j| j != k && j != i) {
                let (bij, bik, bkj) = (self.get(i, j), self.get(i, k), self.get(k, j));
                if bij.is_zero() || bik.sign() * bkj.sign() != 1 {
                    continue;
                }
                if !(&(bij * bik) * bkj).is_integer() {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    pub fn positive_3cycle_ok(&self, k: usize) -> Result<bool> {
        Ok(self.positive_3cycle_violation(k)?.is_none())
    }

    /// Whether `b_ij != 0`, the adjacency of the underlying graph.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        !self.get(i, j).is_zero()
    }

    /// Chordless cycles of the underlying graph, each listed once.
    pub fn chordless_cycles(&self) -> Vec<CycleReport> {
        let n = self.n;
        let mut found = Vec::new();
        for s in 0..n {
            let mut path = vec![s];
            self.extend_chordless(&mut path, &mut found);
        }
        let mut reports: Vec<CycleReport> =
            found.into_iter().map(|c| self.cycle_report(&c)).collect();
        reports.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        reports
    }

    fn extend_chordless(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for w in (s + 1)..self.n {
            if path.contains(&w) || !self.adjacent(last, w) {
                continue;
            }
            // `w` may only touch the start and the current end of the path.
            if path.iter().skip(1).take(path.len().saturating_sub(2)).any(|&v| self.adjacent(v, w)) {
                continue;
            }
            if path.len() >= 2 && self.adjacent(w, s) {
                // Keep one of the two traversal directions.
                if path[1] < w {
                    let mut c = path.clone();
                    c.push(w);
                    out.push(c);
                }
                continue;
            }
            path.push(w);
            self.extend_chordless(path, out);
            path.pop();
        }
    }

    /// Flags for the closed walk through `vertices` in the given order, with
    /// the vertex list put in canonical form: rotation starting at the
    /// smallest vertex, traversed along the arrows when the cycle is oriented
    /// and otherwise in the lexicographically smaller direction.
    pub fn cycle_report(&self, vertices: &[usize]) -> CycleReport {
        let p = vertices.len();
        let edge = |q: usize| self.get(vertices[q], vertices[(q + 1) % p]);
        let is_cycle = p >= 3 && (0..p).all(|q| !edge(q).is_zero());
        let chordless = is_cycle
            && (0..p).all(|x| {
                (0..p).all(|y| {
                    let consecutive = (x + 1) % p == y || (y + 1) % p == x;
                    x == y || consecutive || !self.adjacent(vertices[x], vertices[y])
                })
            });
        let forward = is_cycle && (0..p).all(|q| edge(q).sign() == 1);
        let backward = is_cycle && (0..p).all(|q| edge(q).sign() == -1);
        let dangerous = chordless && {
            let prod = (0..p).fold(TElem::one(), |acc, q| &acc * edge(q));
            if p % 2 == 0 {
                prod.is_integer()
            } else {
                prod.is_t_multiple()
            }
        };
        let mut canon = canonical_rotation(vertices);
        let mut rev = vertices.to_vec();
        rev.reverse();
        let rev = canonical_rotation(&rev);
        if backward || (!forward && rev < canon) {
            canon = rev;
        }
        CycleReport { vertices: canon, oriented: forward || backward, chordless, dangerous }
    }

    /// A mutation sequence driving the dangerous cycle `c` to a non-pure
    /// matrix. Oriented cycles are shortened one vertex at a time by mutating
    /// at the head of a composable pair; alternating cycles are first
    /// mutated at a sink or source to create such a pair.
    pub fn nonpure_witness(&self, c: &CycleReport) -> Result<Vec<usize>> {
        if let Some((i, j)) = self.first_impure_entry() {
            return Err(Error::NotPure(i + 1, j + 1));
        }
        let fresh = self.cycle_report(&c.vertices);
        if !fresh.dangerous {
            return Err(Error::NotDangerous);
        }
        let mut cycle = c.vertices.clone();
        let mut m = self.clone();
        let mut seq = Vec::new();
        loop {
            let p = cycle.len();
            if p == 3 {
                for &k in &cycle {
                    if m.positive_3cycle_violation(k)?.is_some() {
                        seq.push(k);
                        return Ok(seq);
                    }
                }
                // Unreachable for a dangerous chordless 3-cycle in a pure matrix.
                return Err(Error::NotDangerous);
            }
            let composable = (0..p).find(|&q| {
                let prev = cycle[(q + p - 1) % p];
                let (cur, next) = (cycle[q], cycle[(q + 1) % p]);
                let s1 = m.get(prev, cur).sign();
                s1 != 0 && s1 == m.get(cur, next).sign()
            });
            match composable {
                Some(q) => {
                    let k = cycle.remove(q);
                    m = m.mutate(k)?;
                    seq.push(k);
                }
                None => {
                    let k = *cycle.last().unwrap();
                    m = m.mutate(k)?;
                    seq.push(k);
                }
            }
        }
    }
}

fn canonical_rotation(v: &[usize]) -> Vec<usize> {
    let p = v.len();
    let start = (0..p).min_by_key(|&q| v[q]).unwrap_or(0);
    (0..p).map(|q| v[(start + q) % p]).collect()
}

/// A cycle of the underlying graph and its properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub vertices: Vec<usize>,
    pub oriented: bool,
    pub chordless: bool,
    pub dangerous: bool,
}

/// Find the minimal positive integer symmetrizer, normalised per connected
/// component so that its entries have gcd 1. Errors only for non-square input.
pub fn find_symmetrizer(rows: &[Vec<TElem>]) -> Result<Option<Vec<u64>>> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(BigRational::one());
        let mut comp = vec![root];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let (bij, bji) = (&rows[i][j], &rows[j][i]);
                if bij.is_zero() && bji.is_zero() {
                    continue;
                }
                if i == j || bij.is_zero() || bji.is_zero() {
                    return Ok(None);
                }
                // d_j = d_i * b_ij / (-b_ji), read off any nonzero component.
                let (num, den) = if !bij.a.is_zero() {
                    (bij.a.clone(), -bji.a.clone())
                } else {
                    (bij.b.clone(), -bji.b.clone())
                };
                if den.is_zero() {
                    return Ok(None);
                }
                let ratio = BigRational::new(num, den);
                if !ratio.is_positive() {
                    return Ok(None);
                }
                let dj = d[i].as_ref().unwrap() * ratio;
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        comp.push(j);
                        stack.push(j);
                    }
                    Some(old) if *old != dj => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        comps.push(comp);
    }
    let d: Vec<BigRational> = d.into_iter().map(Option::unwrap).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = (&d[i] * BigRational::from(rows[i][j].a.clone()), &d[i] * BigRational::from(rows[i][j].b.clone()));
            let rhs = (&d[j] * BigRational::from(rows[j][i].a.clone()), &d[j] * BigRational::from(rows[j][i].b.clone()));
            if lhs.0 != -rhs.0 || lhs.1 != -rhs.1 {
                return Ok(None);
            }
        }
    }
    let mut out = vec![0u64; n];
    for comp in comps {
        let lcm = comp.iter().fold(BigInt::one(), |acc, &i| acc.lcm(d[i].denom()));
        let ints: Vec<BigInt> = comp.iter().map(|&i| (&d[i] * BigRational::from(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, x) in comp.iter().zip(ints) {
            let v = (x / &g).to_u64().ok_or_else(|| Error::Overflow(d[i].to_string()))?;
            out[i] = v;
        }
    }
    Ok(Some(out))
}

impl fmt::Display for GssMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let r: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct GssJson {
    n: usize,
    d: Vec<u64>,
    entries: Vec<Vec<TElem>>,
}

impl Serialize for GssMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GssJson { n: self.n, d: self.d.clone(), entries: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GssMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = GssJson::deserialize(de)?;
        if j.entries.len() != j.n {
            return Err(serde::de::Error::custom("entries do not have n rows"));
        }
        GssMatrix::with_symmetrizer(j.entries, j.d).map_err(serde::de::Error::custom)
    }
}

/// Fomin–Zelevinsky mutation of an integer skew-symmetrizable matrix.
pub fn fz_mutate(b: &IntMatrix, k: usize) -> IntMatrix {
    let n = b.len();
    let mut out = b.clone();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
            };
        }
    }
    out
}
