//! Mutation classes of signed valued quivers and the tree reorientation
//! recipe.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::quiver::SignedValuedQuiver;

/// Breadth-first closure of `{q}` under all mutations, on labeled vertices.
/// With `quotient` set, members are identified up to vertex relabeling and
/// the returned set holds canonical forms.
pub fn mutation_class(
    q: &SignedValuedQuiver,
    budget: usize,
    quotient: bool,
) -> Result<BTreeSet<SignedValuedQuiver>> {
    let norm = |x: &SignedValuedQuiver| if quotient { x.canonical_form() } else { x.clone() };
    let mut seen: HashSet<SignedValuedQuiver> = HashSet::new();
    let mut queue = VecDeque::new();
    let start = norm(q);
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for k in 0..cur.n() {
            let next = norm(&cur.mutate(k)?);
            if !seen.contains(&next) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded { explored: seen.len() });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Breadth-first walk of the class that stops after `limit` members, in
/// discovery order. Useful for sampling classes too large to enumerate.
pub fn mutation_class_sample(q: &SignedValuedQuiver, limit: usize) -> Result<Vec<SignedValuedQuiver>> {
    let mut seen: HashSet<SignedValuedQuiver> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(q.clone());
    order.push(q.clone());
    queue.push_back(q.clone());
    while let Some(cur) = queue.pop_front() {
        for k in 0..cur.n() {
            if order.len() >= limit {
                return Ok(order);
            }
            let next = cur.mutate(k)?;
            if seen.insert(next.clone()) {
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

/// Breadth-first search of the labeled class for a member satisfying
/// `pred`. Returns a shortest mutation sequence reaching it and the member.
pub fn find_in_class(
    q: &SignedValuedQuiver,
    budget: usize,
    pred: impl Fn(&SignedValuedQuiver) -> bool,
) -> Result<Option<(Vec<usize>, SignedValuedQuiver)>> {
    let mut seen: HashSet<SignedValuedQuiver> = HashSet::from([q.clone()]);
    let mut queue = VecDeque::from([(Vec::new(), q.clone())]);
    while let Some((seq, cur)) = queue.pop_front() {
        if pred(&cur) {
            return Ok(Some((seq, cur)));
        }
        for k in 0..cur.n() {
            let next = cur.mutate(k)?;
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded { explored: seen.len() });
                }
                let mut s = seq.clone();
                s.push(k);
                queue.push_back((s, next));
            }
        }
    }
    Ok(None)
}

/// Vertices on `i`'s side of the tree edge `i - j`, with their distance
/// from `i`.
fn side_of(q: &SignedValuedQuiver, i: usize, j: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(i, 0)];
    let mut stack = vec![(i, j, 0)];
    while let Some((v, from, dist)) = stack.pop() {
        for u in q.neighbors(v) {
            if u != from {
                out.push((u, dist + 1));
                stack.push((u, v, dist + 1));
            }
        }
    }
    out
}

fn is_tree(q: &SignedValuedQuiver) -> bool {
    let n = q.n();
    if n == 0 || q.arrow_count() + 1 != n {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in q.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// A mutation sequence taking the tree quiver `q` to `target`, where
/// `target` differs from `q` only by reversing and/or negating arrows.
///
/// Reversals come first: for each arrow `i -> j` to flip, every vertex on
/// `i`'s side is mutated once in a sources-first order, so each is a source
/// when mutated and only the boundary arrow changes. Negations follow: for
/// each arrow to negate, `mu_k^2` is applied to every `k` on its tail side,
/// even distances before odd ones.
pub fn tree_equivalence_sequence(q: &SignedValuedQuiver, target: &SignedValuedQuiver) -> Result<Vec<usize>> {
    if !is_tree(q) {
        return Err(Error::Shape("quiver is not a tree".into()));
    }
    if target.n() != q.n() || target.arrow_count() != q.arrow_count() {
        return Err(Error::Shape("target has a different underlying graph".into()));
    }
    for a in q.arrows() {
        let b = target
            .arrow_between(a.src, a.tgt)
            .ok_or_else(|| Error::Shape("target has a different underlying graph".into()))?;
        let same = b.src == a.src && b.v1.abs() == a.v1.abs() && b.v2.abs() == a.v2.abs();
        let flipped = b.src == a.tgt && b.v1.abs() == a.v2.abs() && b.v2.abs() == a.v1.abs();
        if !same && !flipped {
            return Err(Error::Shape("target arrows are not reversals/negations".into()));
        }
    }
    let mut seq = Vec::new();
    let mut cur = q.clone();
    // Reorient.
    loop {
        let Some(a) = cur.arrows().find(|a| target.arrow(a.tgt, a.src).is_some()) else { break };
        let side: Vec<usize> = side_of(&cur, a.src, a.tgt).into_iter().map(|(v, _)| v).collect();
        let mut order = Vec::new();
        let mut remaining = side.clone();
        while !remaining.is_empty() {
            // A vertex whose in-arrows from the side have all been handled.
            let pos = remaining
                .iter()
                .position(|&v| {
                    cur.arrows().filter(|x| x.tgt == v).all(|x| order.contains(&x.src) || !side.contains(&x.src))
                })
                .expect("orientations of trees are acyclic");
            order.push(remaining.remove(pos));
        }
        for &v in &order {
            cur = cur.mutate(v)?;
            seq.push(v);
        }
    }
    // Negate.
    loop {
        let Some(a) = cur.arrows().find(|a| target.arrow(a.src, a.tgt).map(|b| b.v1 != a.v1).unwrap_or(false))
        else {
            break;
        };
        let side = side_of(&cur, a.src, a.tgt);
        for parity in [0, 1] {
            for &(v, dist) in &side {
                if dist % 2 == parity {
                    cur = cur.mutate(v)?.mutate(v)?;
                    seq.extend([v, v]);
                }
            }
        }
    }
    if cur != *target {
        return Err(Error::Shape("reorientation did not reach the target".into()));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> SignedValuedQuiver {
        SignedValuedQuiver::from_tuples(2, &[(0, 1, -1, -1)]).unwrap()
    }

    #[test]
    fn small_classes() {
        let a1 = SignedValuedQuiver::new(1, &[]).unwrap();
        assert_eq!(mutation_class(&a1, 10, false).unwrap().len(), 1);
        let class = mutation_class(&a2(), 100, false).unwrap();
        // Both orientations with both signs.
        assert_eq!(class.len(), 4);
        assert_eq!(mutation_class(&a2(), 100, true).unwrap().len(), 2);
        assert!(matches!(mutation_class(&a2(), 2, false), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn search_returns_replayable_sequence() {
        let (seq, found) = find_in_class(&a2(), 100, |x| x.arrow(1, 0).is_some()).unwrap().unwrap();
        assert_eq!(a2().mutate_seq(&seq).unwrap(), found);
        assert!(find_in_class(&a2(), 100, |x| x.arrow_count() == 0).unwrap().is_none());
    }

    #[test]
    fn tree_sequences() {
        let neg = SignedValuedQuiver::from_tuples(2, &[(0, 1, 1, 1)]).unwrap();
        assert_eq!(tree_equivalence_sequence(&a2(), &neg).unwrap(), vec![0, 0]);
        let rev = SignedValuedQuiver::from_tuples(2, &[(1, 0, -1, -1)]).unwrap();
        assert_eq!(tree_equivalence_sequence(&a2(), &rev).unwrap(), vec![0]);

        let path = SignedValuedQuiver::from_tuples(3, &[(1, 0, -1, -1), (2, 1, -1, -1)]).unwrap();
        let mid = SignedValuedQuiver::from_tuples(3, &[(1, 0, -1, -1), (2, 1, 1, 1)]).unwrap();
        let seq = tree_equivalence_sequence(&path, &mid).unwrap();
        assert_eq!(path.mutate_seq(&seq).unwrap(), mid);

        let tri = SignedValuedQuiver::from_tuples(3, &[(0, 1, 1, 1), (1, 2, 1, 1), (2, 0, 1, 1)]).unwrap();
        assert!(tree_equivalence_sequence(&tri, &tri).is_err());
        let other = SignedValuedQuiver::from_tuples(3, &[(0, 2, -1, -1), (2, 1, -1, -1)]).unwrap();
        assert!(tree_equivalence_sequence(&path, &other).is_err());
    }
}
