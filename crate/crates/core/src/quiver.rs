//! Signed valued quivers, their dictionary with pure gss matrices, and
//! graphical three-step mutation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::GssMatrix;
use crate::ring::TElem;

/// An arrow `src -> tgt` with value `(v1, v2)`; both components share a
/// nonzero sign, which is the sign of the arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    pub v1: i64,
    pub v2: i64,
}

/// Result of comparing antiparallel arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparability {
    Smaller,
    Bigger,
    Same,
    Incomparable,
}

impl Arrow {
    pub fn new(src: usize, tgt: usize, v1: i64, v2: i64) -> Result<Self> {
        let a = Arrow { src, tgt, v1, v2 };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(Error::InvalidArrow { src: self.src + 1, tgt: self.tgt + 1, reason: reason.into() })
        };
        if self.src == self.tgt {
            return bad("loop");
        }
        if self.v1 == 0 || self.v2 == 0 || self.v1.signum() != self.v2.signum() {
            return bad("value components must share a nonzero sign");
        }
        Ok(())
    }

    /// +1 for positive arrows, -1 for negative ones.
    pub fn sign(&self) -> i64 {
        self.v1.signum()
    }

    pub fn weight(&self) -> i64 {
        self.v1 * self.v2
    }

    /// `j -> i` with value `(b, a)`.
    pub fn reverse(&self) -> Arrow {
        Arrow { src: self.tgt, tgt: self.src, v1: self.v2, v2: self.v1 }
    }

    /// Same direction, value `(-a, -b)`.
    pub fn negate(&self) -> Arrow {
        Arrow { v1: -self.v1, v2: -self.v2, ..*self }
    }

    /// `[self other]: src(self) -> tgt(other)` with value `(ac, bd)`.
    pub fn compose(&self, other: &Arrow) -> Result<Arrow> {
        if self.tgt != other.src || self.src == other.tgt {
            return Err(Error::Shape("arrows are not composable".into()));
        }
        Ok(Arrow { src: self.src, tgt: other.tgt, v1: self.v1 * other.v1, v2: self.v2 * other.v2 })
    }

    /// Compare with an antiparallel arrow.
    pub fn compare(&self, other: &Arrow) -> Result<Comparability> {
        if self.src != other.tgt || self.tgt != other.src {
            return Err(Error::Shape("arrows are not antiparallel".into()));
        }
        let (a, b, c, d) = (self.v1, self.v2, other.v1, other.v2);
        Ok(if a == d && b == c {
            Comparability::Same
        } else if a.abs() < d.abs() && b.abs() < c.abs() {
            Comparability::Smaller
        } else if a.abs() > d.abs() && b.abs() > c.abs() {
            Comparability::Bigger
        } else {
            Comparability::Incomparable
        })
    }
}

/// A simple digraph on vertices `0..n` with valued, signed arrows and a
/// symmetrizer satisfying `d_src v1 = d_tgt v2` for every arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedValuedQuiver {
    n: usize,
    /// Keyed by `(src, tgt)`.
    arrows: BTreeMap<(usize, usize), (i64, i64)>,
    d: Vec<u64>,
}

impl SignedValuedQuiver {
    /// Build a quiver; the symmetrizer is derived from the arrows.
    pub fn new(n: usize, arrows: &[Arrow]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for a in arrows {
            a.validate()?;
            if a.src >= n || a.tgt >= n {
                return Err(Error::VertexOutOfRange(a.src.max(a.tgt) + 1, n));
            }
            if map.contains_key(&(a.src, a.tgt)) || map.contains_key(&(a.tgt, a.src)) {
                return Err(Error::NotSimple(a.src + 1, a.tgt + 1));
            }
            map.insert((a.src, a.tgt), (a.v1, a.v2));
        }
        let probe = SignedValuedQuiver { n, arrows: map, d: vec![1; n] };
        let m = probe.matrix_unchecked();
        let d = crate::matrix::find_symmetrizer(&m)?.ok_or(Error::NotSymmetrizable)?;
        Ok(SignedValuedQuiver { d, ..probe })
    }

    /// Shorthand for tests and presets: `(src, tgt, v1, v2)` with 0-based vertices.
    pub fn from_tuples(n: usize, arrows: &[(usize, usize, i64, i64)]) -> Result<Self> {
        let arrows: Vec<Arrow> =
            arrows.iter().map(|&(s, t, a, b)| Arrow { src: s, tgt: t, v1: a, v2: b }).collect();
        Self::new(n, &arrows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symmetrizer(&self) -> &[u64] {
        &self.d
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows.iter().map(|(&(s, t), &(a, b))| Arrow { src: s, tgt: t, v1: a, v2: b })
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// The arrow `i -> j`, if present.
    pub fn arrow(&self, i: usize, j: usize) -> Option<Arrow> {
        self.arrows.get(&(i, j)).map(|&(a, b)| Arrow { src: i, tgt: j, v1: a, v2: b })
    }

    /// The arrow joining `i` and `j` in either direction.
    pub fn arrow_between(&self, i: usize, j: usize) -> Option<Arrow> {
        self.arrow(i, j).or_else(|| self.arrow(j, i))
    }

    pub fn has_arrow(&self, i: usize, j: usize) -> bool {
        self.arrows.contains_key(&(i, j))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.arrow_between(u, v).is_some()).collect()
    }

    fn matrix_unchecked(&self) -> Vec<Vec<TElem>> {
        let mut rows = vec![vec![TElem::zero(); self.n]; self.n];
        for a in self.arrows() {
            let (i, j) = (a.src, a.tgt);
            if a.sign() > 0 {
                rows[i][j] = TElem::int(a.v1);
                rows[j][i] = TElem::int(-a.v2);
            } else {
                rows[i][j] = TElem::t_mul_int(-a.v1);
                rows[j][i] = TElem::t_mul_int(a.v2);
            }
        }
        rows
    }

    /// The pure gss matrix attached to the quiver.
    pub fn to_matrix(&self) -> GssMatrix {
        GssMatrix::with_symmetrizer(self.matrix_unchecked(), self.d.clone())
            .expect("quiver invariants guarantee a gss matrix")
    }

    /// The quiver attached to a pure gss matrix: `i -> j` whenever
    /// `sgn b_ij = 1`, valued `(b_ij(-1), -b_ji(-1))`.
    pub fn from_matrix(b: &GssMatrix) -> Result<Self> {
        if let Some((i, j)) = b.first_impure_entry() {
            return Err(Error::NotPure(i + 1, j + 1));
        }
        let n = b.n();
        let small = |x: BigInt| x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()));
        let mut arrows = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if b.get(i, j).sign() == 1 {
                    let v1 = small(b.get(i, j).eval_at(-1))?;
                    let v2 = small(-b.get(j, i).eval_at(-1))?;
                    arrows.insert((i, j), (v1, v2));
                }
            }
        }
        Ok(SignedValuedQuiver { n, arrows, d: b.symmetrizer().to_vec() })
    }

    /// Vertex `k` violates the positive 3-cycle condition iff some path
    /// `i -> k -> j` closes up with an `i`-`j` arrow and an odd number of the
    /// three arrows are negative. Returns the offending `(i, j)`.
    pub fn positive_3cycle_violation(&self, k: usize) -> Option<(usize, usize)> {
        for a in self.arrows().filter(|a| a.tgt == k) {
            for b in self.arrows().filter(|b| b.src == k) {
                if let Some(c) = self.arrow_between(a.src, b.tgt) {
                    let negatives = [a, b, c].iter().filter(|x| x.sign() < 0).count();
                    if negatives % 2 == 1 {
                        return Some((a.src, b.tgt));
                    }
                }
            }
        }
        None
    }

    /// Three-step graphical mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::VertexOutOfRange(k + 1, self.n));
        }
        if let Some((i, j)) = self.positive_3cycle_violation(k) {
            return Err(Error::PositiveThreeCycleViolation { i: i + 1, j: j + 1, k: k + 1 });
        }
        let ins: Vec<Arrow> = self.arrows().filter(|a| a.tgt == k).collect();
        let outs: Vec<Arrow> = self.arrows().filter(|a| a.src == k).collect();
        let mut negate_pairs = Vec::new();
        let mut pieces: Vec<Arrow> = Vec::new();
        // Step 1: a new arrow -[ab] for each path through k.
        for a in &ins {
            for b in &outs {
                pieces.push(a.compose(b)?.negate());
                negate_pairs.push((a.src.min(b.tgt), a.src.max(b.tgt)));
            }
        }
        for a in self.arrows() {
            if a.src == k {
                // Step 2: reverse arrows leaving k.
                pieces.push(a.reverse());
            } else if a.tgt == k {
                // Step 2: reverse and negate arrows entering k.
                pieces.push(a.reverse().negate());
            } else if negate_pairs.contains(&(a.src.min(a.tgt), a.src.max(a.tgt))) {
                pieces.push(a.negate());
            } else {
                pieces.push(a);
            }
        }
        // Step 3: merge arrows on the same pair of vertices.
        let mut by_pair: BTreeMap<(usize, usize), Vec<Arrow>> = BTreeMap::new();
        for p in pieces {
            by_pair.entry((p.src.min(p.tgt), p.src.max(p.tgt))).or_default().push(p);
        }
        let mut arrows = BTreeMap::new();
        for ((u, v), group) in by_pair {
            if let Some(a) = merge_arrows(&group).ok_or(Error::Incomparable(u + 1, v + 1))? {
                arrows.insert((a.src, a.tgt), (a.v1, a.v2));
            }
        }
        Ok(SignedValuedQuiver { n: self.n, arrows, d: self.d.clone() })
    }

    pub fn mutate_seq(&self, seq: &[usize]) -> Result<Self> {
        let mut q = self.clone();
        for &k in seq {
            q = q.mutate(k)?;
        }
        Ok(q)
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut arrows = BTreeMap::new();
        for (&(s, t), &v) in &self.arrows {
            arrows.insert((perm[s], perm[t]), v);
        }
        let mut d = vec![0; self.n];
        for v in 0..self.n {
            d[perm[v]] = self.d[v];
        }
        SignedValuedQuiver { n: self.n, arrows, d }
    }

    /// Canonical representative under vertex relabeling: the smallest
    /// relabeled quiver over all permutations. Exhaustive, so meant for
    /// small vertex counts.
    pub fn canonical_form(&self) -> Self {
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = self.clone();
        let mut c = vec![0usize; self.n];
        let mut i = 0;
        // Heap's algorithm.
        while i < self.n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                let cand = self.permute(&perm);
                if cand.key() < best.key() {
                    best = cand;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }

    fn key(&self) -> (Vec<u64>, Vec<((usize, usize), (i64, i64))>) {
        (self.d.clone(), self.arrows.iter().map(|(&k, &v)| (k, v)).collect())
    }

    /// Graphviz rendering: negative arrows solid, positive dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        s.push_str("// legend: solid edge = negative arrow, dashed edge = positive arrow,\n");
        s.push_str("// label (v1,v2) = arrow value; vertices are numbered from 1\n");
        s.push_str("digraph quiver {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {} [label=\"{}\"];\n", v + 1, v + 1));
        }
        for a in self.arrows() {
            let style = if a.sign() < 0 { "solid" } else { "dashed" };
            s.push_str(&format!(
                "  {} -> {} [label=\"({},{})\", style={}];\n",
                a.src + 1,
                a.tgt + 1,
                a.v1,
                a.v2,
                style
            ));
        }
        s.push_str("}\n");
        s
    }

    /// Parse the arrow language: entries `i -(a,b)-> j` separated by `;` or
    /// newlines, with 1-based vertices. A bare vertex number declares an
    /// isolated vertex; `n=5` fixes the vertex count.
    pub fn parse_dsl(text: &str) -> std::result::Result<Self, String> {
        let mut arrows = Vec::new();
        let mut n = 0usize;
        let mut declared_n = None;
        for raw in text.split([';', '\n']) {
            let item = raw.trim();
            if item.is_empty() || item.starts_with('#') {
                continue;
            }
            if let Some(rest) = item.strip_prefix("n=").or_else(|| item.strip_prefix("n =")) {
                declared_n = Some(rest.trim().parse::<usize>().map_err(|e| format!("bad n: {e}"))?);
                continue;
            }
            if let Ok(v) = item.parse::<usize>() {
                if v == 0 {
                    return Err("vertices are numbered from 1".into());
                }
                n = n.max(v);
                continue;
            }
            let (lhs, rest) = item.split_once("-(").ok_or_else(|| format!("expected 'i -(a,b)-> j' in {item:?}"))?;
            let (val, rhs) = rest.split_once(")->").ok_or_else(|| format!("expected ')->' in {item:?}"))?;
            let (a, b) = val.split_once(',').ok_or_else(|| format!("expected value pair in {item:?}"))?;
            let num = |s: &str| s.trim().parse::<i64>().map_err(|e| format!("bad number {s:?}: {e}"));
            let vert = |s: &str| -> std::result::Result<usize, String> {
                let v = s.trim().parse::<usize>().map_err(|e| format!("bad vertex {s:?}: {e}"))?;
                if v == 0 {
                    Err("vertices are numbered from 1".into())
                } else {
                    Ok(v)
                }
            };
            let (src, tgt) = (vert(lhs)?, vert(rhs)?);
            n = n.max(src).max(tgt);
            arrows.push(Arrow { src: src - 1, tgt: tgt - 1, v1: num(a)?, v2: num(b)? });
        }
        if let Some(dn) = declared_n {
            if dn < n {
                return Err(format!("n={dn} is smaller than vertex {n}"));
            }
            n = dn;
        }
        SignedValuedQuiver::new(n, &arrows).map_err(|e| e.to_string())
    }
}

/// Combine the arrows that Steps 1-2 put on one vertex pair. `None` means
/// the pair could not be merged; `Some(None)` means they cancelled.
fn merge_arrows(group: &[Arrow]) -> Option<Option<Arrow>> {
    let mut acc: Option<Arrow> = None;
    for &a in group {
        acc = Some(match acc {
            None => a,
            Some(cur) if cur.src == a.src => Arrow { v1: cur.v1 + a.v1, v2: cur.v2 + a.v2, ..cur },
            Some(cur) => match cur.compare(&a).ok()? {
                Comparability::Smaller | Comparability::Same => {
                    let r = cur.reverse().negate();
                    Arrow { v1: r.v1 + a.v1, v2: r.v2 + a.v2, ..a }
                }
                Comparability::Bigger => {
                    let r = a.reverse().negate();
                    Arrow { v1: r.v1 + cur.v1, v2: r.v2 + cur.v2, ..cur }
                }
                Comparability::Incomparable => return None,
            },
        });
        if let Some(cur) = acc {
            if cur.v1 == 0 && cur.v2 == 0 {
                acc = None;
            } else if cur.v1 == 0 || cur.v2 == 0 || cur.v1.signum() != cur.v2.signum() {
                return None;
            }
        }
    }
    Some(acc)
}

impl fmt::Display for SignedValuedQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arrows()
            .map(|a| format!("{} -({},{})-> {}", a.src + 1, a.v1, a.v2, a.tgt + 1))
            .collect();
        write!(f, "n={}; {}", self.n, parts.join("; "))
    }
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    src: usize,
    tgt: usize,
    v: [i64; 2],
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    n: usize,
    d: Vec<u64>,
    arrows: Vec<ArrowJson>,
}

impl Serialize for SignedValuedQuiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuiverJson {
            n: self.n,
            d: self.d.clone(),
            arrows: self
                .arrows()
                .map(|a| ArrowJson { src: a.src + 1, tgt: a.tgt + 1, v: [a.v1, a.v2] })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedValuedQuiver {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = QuiverJson::deserialize(de)?;
        let arrows = j
            .arrows
            .iter()
            .map(|a| {
                if a.src == 0 || a.tgt == 0 {
                    Err(D::Error::custom("vertices are numbered from 1"))
                } else {
                    Ok(Arrow { src: a.src - 1, tgt: a.tgt - 1, v1: a.v[0], v2: a.v[1] })
                }
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let q = SignedValuedQuiver::new(j.n, &arrows).map_err(D::Error::custom)?;
        if q.d != j.d {
            return Err(D::Error::custom("symmetrizer does not match the arrows"));
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_a3() -> SignedValuedQuiver {
        // 1 <- 2 <- 3, all negative.
        SignedValuedQuiver::from_tuples(3, &[(1, 0, -1, -1), (2, 1, -1, -1)]).unwrap()
    }

    #[test]
    fn arrow_operations() {
        let a = Arrow::new(0, 1, 1, 2).unwrap();
        assert_eq!(a.reverse(), Arrow::new(1, 0, 2, 1).unwrap());
        assert_eq!(a.negate(), Arrow::new(0, 1, -1, -2).unwrap());
        let x = Arrow::new(0, 1, 1, 1).unwrap();
        let y = Arrow::new(1, 2, 2, 1).unwrap();
        assert_eq!(x.compose(&y).unwrap(), Arrow::new(0, 2, 2, 1).unwrap());
        assert!(y.compose(&x).is_err());
        let big = Arrow::new(1, 0, 2, 2).unwrap();
        assert_eq!(x.compare(&big).unwrap(), Comparability::Smaller);
        assert_eq!(big.compare(&x).unwrap(), Comparability::Bigger);
        assert_eq!(x.compare(&Arrow::new(1, 0, 1, 1).unwrap()).unwrap(), Comparability::Same);
        assert_eq!(
            Arrow::new(0, 1, 1, 3).unwrap().compare(&Arrow::new(1, 0, 2, 2).unwrap()).unwrap(),
            Comparability::Incomparable
        );
        assert!(x.compare(&y).is_err());
        assert!(Arrow::new(0, 1, 1, -1).is_err());
        assert!(Arrow::new(0, 0, 1, 1).is_err());
    }

    #[test]
    fn dictionary_on_example() {
        let b = GssMatrix::from_pairs(&[
            vec![(0, 0), (0, -1), (0, 0)],
            vec![(0, 1), (0, 0), (0, -2)],
            vec![(0, 0), (0, 1), (0, 0)],
        ])
        .unwrap();
        let q = SignedValuedQuiver::from_matrix(&b).unwrap();
        let expect = SignedValuedQuiver::from_tuples(3, &[(1, 0, -1, -1), (2, 1, -1, -2)]).unwrap();
        assert_eq!(q, expect);
        assert_eq!(q.to_matrix(), b);
        let m2 = b.mutate(1).unwrap();
        let q2 = SignedValuedQuiver::from_matrix(&m2).unwrap();
        // 3-cycle 1 -(-1,-1)-> 2 -(2,1)-> 3 -(-1,-2)-> 1.
        let expect2 =
            SignedValuedQuiver::from_tuples(3, &[(0, 1, -1, -1), (1, 2, 2, 1), (2, 0, -1, -2)]).unwrap();
        assert_eq!(q2, expect2);
        assert_eq!(q.mutate(1).unwrap(), expect2);
    }

    #[test]
    fn arrowless_and_zero() {
        let q = SignedValuedQuiver::new(3, &[]).unwrap();
        assert_eq!(q.to_matrix(), GssMatrix::zero(3));
        assert_eq!(SignedValuedQuiver::from_matrix(&GssMatrix::zero(3)).unwrap(), q);
    }

    #[test]
    fn b4_matrix() {
        let q = SignedValuedQuiver::from_tuples(4, &[(0, 1, 1, 1), (2, 1, -1, -1), (3, 2, 1, 2)]).unwrap();
        let b = q.to_matrix();
        let expect = GssMatrix::from_pairs(&[
            vec![(0, 0), (1, 0), (0, 0), (0, 0)],
            vec![(-1, 0), (0, 0), (0, -1), (0, 0)],
            vec![(0, 0), (0, 1), (0, 0), (-2, 0)],
            vec![(0, 0), (0, 0), (1, 0), (0, 0)],
        ])
        .unwrap();
        assert_eq!(b, expect);
        assert_eq!(b.symmetrizer(), &[1, 1, 1, 2]);
    }

    #[test]
    fn square_quiver_mutation() {
        // 1->2, 2->3, 3->1, 2->4, 4->3 with the example's values.
        let q = SignedValuedQuiver::from_tuples(
            4,
            &[(0, 1, -1, -1), (1, 2, 1, 1), (2, 0, -1, -1), (1, 3, -1, -1), (3, 2, -1, -1)],
        )
        .unwrap();
        let got = q.mutate(3).unwrap();
        let expect = SignedValuedQuiver::from_tuples(
            4,
            &[(1, 2, -2, -2), (3, 1, 1, 1), (0, 1, -1, -1), (2, 0, -1, -1), (2, 3, -1, -1)],
        )
        .unwrap();
        assert_eq!(got, expect);
        assert_eq!(got, SignedValuedQuiver::from_matrix(&q.to_matrix().mutate(3).unwrap()).unwrap());
    }

    #[test]
    fn double_mutation_negates_at_sink() {
        let q = SignedValuedQuiver::from_tuples(2, &[(0, 1, -1, -2)]).unwrap();
        let twice = q.mutate(1).unwrap().mutate(1).unwrap();
        assert_eq!(twice, SignedValuedQuiver::from_tuples(2, &[(0, 1, 1, 2)]).unwrap());
    }

    #[test]
    fn blocked_mutation() {
        let q = SignedValuedQuiver::from_tuples(3, &[(0, 1, -1, -1), (1, 2, -1, -1), (2, 0, -1, -1)]).unwrap();
        assert_eq!(
            q.mutate(1),
            Err(Error::PositiveThreeCycleViolation { i: 1, j: 3, k: 2 })
        );
        assert!(!q.to_matrix().mutate(1).unwrap().is_pure());
    }

    #[test]
    fn dsl_and_json() {
        let q = SignedValuedQuiver::parse_dsl("2 -(-1,-1)-> 1; 3 -(-1,-1)-> 2").unwrap();
        assert_eq!(q, path_a3());
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(
            s,
            r#"{"n":3,"d":[1,1,1],"arrows":[{"src":2,"tgt":1,"v":[-1,-1]},{"src":3,"tgt":2,"v":[-1,-1]}]}"#
        );
        assert_eq!(serde_json::from_str::<SignedValuedQuiver>(&s).unwrap(), q);
        assert!(SignedValuedQuiver::parse_dsl("1 -(1,-1)-> 2").is_err());
        assert!(SignedValuedQuiver::parse_dsl("1 -> 2").is_err());
        assert_eq!(SignedValuedQuiver::parse_dsl("n=4; 1 -(1,1)-> 2").unwrap().n(), 4);
        assert_eq!(SignedValuedQuiver::parse_dsl("").unwrap().n(), 0);
    }

    #[test]
    fn dot_export() {
        let dot = SignedValuedQuiver::from_tuples(2, &[(0, 1, 1, 2)]).unwrap().to_dot();
        assert!(dot.contains("legend"));
        assert!(dot.contains("1 -> 2 [label=\"(1,2)\", style=dashed]"));
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        let q = path_a3();
        let p = q.permute(&[2, 0, 1]);
        assert_ne!(p, q);
        assert_eq!(p.canonical_form(), q.canonical_form());
    }
}
