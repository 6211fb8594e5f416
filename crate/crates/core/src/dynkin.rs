//! Unsigned and signed diagrams, Dynkin recognition and the mutation-Dynkin
//! classifier.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{fz_mutate, GssMatrix, IntMatrix};
use crate::quiver::SignedValuedQuiver;

/// Edge data of an unsigned diagram. `order` compares the endpoints
/// `(lo, hi)` of the edge key and is set exactly when `mult >= 2`:
/// `Greater` means `lo > hi` in the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramEdge {
    pub mult: i64,
    pub order: Option<Ordering>,
    /// Sign of the arrow; populated only for signed diagrams.
    pub sign: Option<i64>,
}

/// Undirected multigraph with order tags on multiple edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnsignedDiagram {
    pub n: usize,
    /// Keyed by `(lo, hi)` with `lo < hi`.
    pub edges: BTreeMap<(usize, usize), DiagramEdge>,
}

impl UnsignedDiagram {
    /// Diagram of a valued orientation given by `(src, tgt, |v1|, |v2|, sign)`.
    fn from_values(n: usize, arrows: impl Iterator<Item = (usize, usize, i64, i64, i64)>, signed: bool) -> Self {
        let mut edges = BTreeMap::new();
        for (s, t, v1, v2, sign) in arrows {
            let (v1, v2) = (v1.abs(), v2.abs());
            let mult = v1 * v2;
            // Order of src against tgt.
            let src_vs_tgt = v1.cmp(&v2);
            let order = if mult >= 2 {
                Some(if s < t { src_vs_tgt } else { src_vs_tgt.reverse() })
            } else {
                None
            };
            edges.insert(
                (s.min(t), s.max(t)),
                DiagramEdge { mult, order, sign: signed.then_some(sign) },
            );
        }
        UnsignedDiagram { n, edges }
    }

    pub fn of_quiver(q: &SignedValuedQuiver) -> Self {
        Self::from_values(q.n(), q.arrows().map(|a| (a.src, a.tgt, a.v1, a.v2, a.sign())), false)
    }

    /// Unsigned diagram of an integer skew-symmetrizable matrix.
    pub fn of_int_matrix(b: &IntMatrix) -> Self {
        let n = b.len();
        let arrows = (0..n)
            .flat_map(move |i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| b[i][j] > 0)
            .map(|(i, j)| (i, j, b[i][j], -b[j][i], 1));
        Self::from_values(n, arrows.collect::<Vec<_>>().into_iter(), false)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.keys().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// `Greater` if `u > v` on the edge joining them.
    pub fn compare_ends(&self, u: usize, v: usize) -> Option<Ordering> {
        let e = self.edges.get(&(u.min(v), u.max(v)))?;
        e.order.map(|o| if u < v { o } else { o.reverse() })
    }
}

/// Signed diagram: the unsigned diagram plus the sign of every arrow.
pub fn signed_diagram(q: &SignedValuedQuiver) -> UnsignedDiagram {
    UnsignedDiagram::from_values(q.n(), q.arrows().map(|a| (a.src, a.tgt, a.v1, a.v2, a.sign())), true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite-type Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::InvalidDynkinType(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of roots.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => [72, 126, 240][n - 6],
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Edges `(i, j, v1, v2)` of the canonical orientation: every arrow
    /// points from the larger to the smaller label and is negative.
    /// Double edges put the diagram's larger end per the family's picture:
    /// `B_n` has `n-1 > n`, `C_n` has `n > n-1`, `F_4` has `2 > 3`,
    /// `G_2` has `1 > 2`.
    pub fn canonical_arrows(&self) -> Vec<(usize, usize, i64, i64)> {
        let n = self.rank;
        let simple = |i: usize, j: usize| (j, i, -1, -1);
        let mut out = Vec::new();
        match self.family {
            Family::A => out.extend((0..n - 1).map(|i| simple(i, i + 1))),
            Family::B | Family::C => {
                out.extend((0..n - 2).map(|i| simple(i, i + 1)));
                // Arrow n -> n-1; |v1| < |v2| makes n smaller in the diagram.
                let v = if self.family == Family::B { (-1, -2) } else { (-2, -1) };
                out.push((n - 1, n - 2, v.0, v.1));
            }
            Family::D => {
                out.extend((0..n - 2).map(|i| simple(i, i + 1)));
                out.push(simple(n - 3, n - 1));
            }
            Family::E => {
                // 1-3-4-5-...-n with 2 attached to 4.
                out.push(simple(0, 2));
                out.push(simple(1, 3));
                out.extend((2..n - 1).map(|i| simple(i, i + 1)));
            }
            Family::F => {
                out.push(simple(0, 1));
                out.push((2, 1, -1, -2));
                out.push(simple(2, 3));
            }
            Family::G => out.push((1, 0, -1, -3)),
        }
        out
    }

    /// The all-negative Dynkin quiver of this type.
    pub fn canonical_quiver(&self) -> SignedValuedQuiver {
        SignedValuedQuiver::from_tuples(self.rank, &self.canonical_arrows())
            .expect("canonical Dynkin quivers are valid")
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidDynkinType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        DynkinType::new(family, rank)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DynkinType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Match a diagram against the connected Dynkin diagrams.
pub fn recognize_dynkin(diag: &UnsignedDiagram) -> Option<DynkinType> {
    let n = diag.n;
    if !diag.is_tree() {
        return None;
    }
    if diag.edges.values().any(|e| e.mult >= 4 || (e.mult >= 2 && e.order == Some(Ordering::Equal))) {
        return None;
    }
    let multi: Vec<(&(usize, usize), &DiagramEdge)> =
        diag.edges.iter().filter(|(_, e)| e.mult >= 2).collect();
    let degrees: Vec<usize> = (0..n).map(|v| diag.degree(v)).collect();
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    match multi.len() {
        0 => {
            if max_deg <= 2 {
                return DynkinType::new(Family::A, n).ok();
            }
            let branch: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 3).collect();
            if branch.len() != 1 || degrees[branch[0]] != 3 {
                return None;
            }
            let c = branch[0];
            let mut arms: Vec<usize> = diag.neighbors(c).into_iter().map(|u| arm_length(diag, c, u)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => DynkinType::new(Family::D, n).ok(),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => DynkinType::new(Family::E, n).ok(),
                _ => None,
            }
        }
        1 => {
            let (&(u, v), e) = multi[0];
            if max_deg > 2 {
                return None;
            }
            if e.mult == 3 {
                return (n == 2).then(|| DynkinType::new(Family::G, 2).unwrap());
            }
            if n == 2 {
                return DynkinType::new(Family::B, 2).ok();
            }
            let (big, small) = if diag.compare_ends(u, v) == Some(Ordering::Greater) { (u, v) } else { (v, u) };
            if degrees[small] == 1 {
                DynkinType::new(Family::B, n).ok()
            } else if degrees[big] == 1 {
                DynkinType::new(Family::C, n).ok()
            } else if n == 4 {
                DynkinType::new(Family::F, 4).ok()
            } else {
                None
            }
        }
        _ => None,
    }
}

fn arm_length(diag: &UnsignedDiagram, from: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        let next: Vec<usize> = diag.neighbors(cur).into_iter().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [x] => {
                prev = cur;
                cur = *x;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Default node budget for class searches.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Classify a gss matrix: `Some(type)` iff it is pure, has no dangerous
/// cycle, and its specialization has finite mutation type. The unsigned
/// class is searched breadth-first until a Dynkin tree appears; any member
/// with `|b_ij b_ji| >= 4` certifies infinite type.
pub fn is_mutation_dynkin(b: &GssMatrix, budget: usize) -> Result<Option<DynkinType>> {
    if !b.is_pure() || b.chordless_cycles().iter().any(|c| c.dangerous) {
        return Ok(None);
    }
    classify_unsigned(&b.specialize(), budget)
}

/// Finite-type classification of an integer skew-symmetrizable matrix.
pub fn classify_unsigned(start: &IntMatrix, budget: usize) -> Result<Option<DynkinType>> {
    let n = start.len();
    if n == 0 {
        return Ok(None);
    }
    let mut seen: HashSet<IntMatrix> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(m) = queue.pop_front() {
        if (0..n).any(|i| (0..n).any(|j| (m[i][j] * m[j][i]).abs() >= 4)) {
            return Ok(None);
        }
        let diag = UnsignedDiagram::of_int_matrix(&m);
        if !diag.is_connected() {
            return Ok(None);
        }
        if diag.is_tree() {
            if let Some(t) = recognize_dynkin(&diag) {
                return Ok(Some(t));
            }
        }
        for k in 0..n {
            let next = fz_mutate(&m, k);
            if !seen.contains(&next) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded { explored: seen.len() });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn b4_example() {
        let q = SignedValuedQuiver::from_tuples(4, &[(0, 1, 1, 1), (2, 1, -1, -1), (3, 2, 1, 2)]).unwrap();
        let d = UnsignedDiagram::of_quiver(&q);
        assert_eq!(d.edges.len(), 3);
        assert_eq!(d.compare_ends(2, 3), Some(Ordering::Greater));
        assert_eq!(d.edges[&(2, 3)].mult, 2);
        assert_eq!(recognize_dynkin(&d), Some(t("B4")));
        let s = signed_diagram(&q);
        assert_eq!(s.edges[&(1, 2)].sign, Some(-1));
        assert_eq!(s.edges[&(0, 1)].sign, Some(1));
    }

    #[test]
    fn small_diagrams() {
        let one = UnsignedDiagram { n: 1, edges: BTreeMap::new() };
        assert_eq!(recognize_dynkin(&one), Some(t("A1")));
        let tri = SignedValuedQuiver::from_tuples(3, &[(0, 1, 1, 1), (1, 2, 1, 1), (2, 0, 1, 1)]).unwrap();
        assert_eq!(recognize_dynkin(&UnsignedDiagram::of_quiver(&tri)), None);
        let dd = SignedValuedQuiver::from_tuples(2, &[(0, 1, 2, 2)]).unwrap();
        let d = UnsignedDiagram::of_quiver(&dd);
        assert_eq!(d.edges[&(0, 1)].order, Some(Ordering::Equal));
        assert_eq!(recognize_dynkin(&d), None);
        assert_eq!(is_mutation_dynkin(&dd.to_matrix(), DEFAULT_BUDGET).unwrap(), None);
        let empty = SignedValuedQuiver::new(3, &[]).unwrap();
        assert!(UnsignedDiagram::of_quiver(&empty).edges.is_empty());
    }

    #[test]
    fn canonical_types_recognized() {
        for s in ["A1", "A2", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D6", "E6", "E7", "E8", "F4", "G2"] {
            let ty = t(s);
            let q = ty.canonical_quiver();
            assert_eq!(recognize_dynkin(&UnsignedDiagram::of_quiver(&q)), Some(ty), "{s}");
            assert_eq!(is_mutation_dynkin(&q.to_matrix(), DEFAULT_BUDGET).unwrap(), Some(ty), "{s}");
        }
    }

    #[test]
    fn example_matrix_is_b3() {
        let b = GssMatrix::from_pairs(&[
            vec![(0, 0), (0, -1), (0, 0)],
            vec![(0, 1), (0, 0), (0, -2)],
            vec![(0, 0), (0, 1), (0, 0)],
        ])
        .unwrap();
        assert_eq!(is_mutation_dynkin(&b, DEFAULT_BUDGET).unwrap(), Some(t("B3")));
        // The mutated 3-cycle is in the same class.
        assert_eq!(is_mutation_dynkin(&b.mutate(1).unwrap(), DEFAULT_BUDGET).unwrap(), Some(t("B3")));
    }

    #[test]
    fn dangerous_cycle_is_not_dynkin() {
        let q = SignedValuedQuiver::from_tuples(3, &[(0, 1, -1, -1), (1, 2, -1, -1), (2, 0, -1, -1)]).unwrap();
        assert_eq!(is_mutation_dynkin(&q.to_matrix(), DEFAULT_BUDGET).unwrap(), None);
    }

    #[test]
    fn affine_and_wild_are_rejected() {
        // Affine D4 star: finite entries but not Dynkin.
        let star = SignedValuedQuiver::from_tuples(5, &[(1, 0, 1, 1), (2, 0, 1, 1), (3, 0, 1, 1), (4, 0, 1, 1)]).unwrap();
        assert_eq!(is_mutation_dynkin(&star.to_matrix(), DEFAULT_BUDGET).unwrap(), None);
        assert!(matches!(
            is_mutation_dynkin(&star.to_matrix(), 3),
            Err(Error::BudgetExceeded { .. }) | Ok(None)
        ));
    }

    #[test]
    fn type_parsing() {
        assert_eq!(t("a3").to_string(), "A3");
        assert_eq!(t("E_7").rank(), 7);
        assert!("E5".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("X2".parse::<DynkinType>().is_err());
        assert_eq!(t("F4").root_count(), 48);
    }
}
