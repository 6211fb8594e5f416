//! Dangerous cycles and the mutation sequences that expose non-purity.

use mutalg::SignedValuedQuiver;

fn one_based(n: usize, arrows: &[(usize, usize, i64)]) -> SignedValuedQuiver {
    let t: Vec<(usize, usize, i64, i64)> = arrows.iter().map(|&(s, t, v)| (s - 1, t - 1, v, v)).collect();
    SignedValuedQuiver::from_tuples(n, &t).unwrap()
}

#[test]
fn oriented_five_cycle() {
    let q = one_based(5, &[(1, 2, 1), (2, 3, 1), (3, 4, -1), (4, 5, -1), (5, 1, -1)]);
    let b = q.to_matrix();
    let cycles = b.chordless_cycles();
    assert_eq!(cycles.len(), 1);
    let c = &cycles[0];
    assert_eq!(c.vertices, vec![0, 1, 2, 3, 4]);
    assert!(c.oriented && c.dangerous && c.chordless);
    let seq = b.nonpure_witness(c).unwrap();
    assert_eq!(seq, vec![0, 1, 2]);
    assert!(!b.mutate_seq(&seq).unwrap().is_pure());
    assert!(b.mutate_seq(&seq[..2]).unwrap().is_pure());
}

#[test]
fn acyclic_star() {
    let q = one_based(5, &[(1, 5, -1), (5, 2, -1), (5, 4, -1), (3, 5, -1)]);
    let b = q.to_matrix();
    assert!(b.chordless_cycles().is_empty());
    let after = b.mutate(4).unwrap();
    let cycles = after.chordless_cycles();
    let dangerous: Vec<_> = cycles.iter().filter(|c| c.dangerous).collect();
    assert_eq!(dangerous.len(), 1);
    assert_eq!(dangerous[0].vertices.len(), 4);
    let tail = after.nonpure_witness(dangerous[0]).unwrap();
    assert_eq!(tail, vec![3, 0, 2]);
    let mut seq = vec![4];
    seq.extend(&tail);
    assert!(!b.mutate_seq(&seq).unwrap().is_pure());
    assert!(!b.mutate_seq(&[4, 3, 0, 2]).unwrap().is_pure());
    assert!(b.mutate_seq(&[4, 3, 0]).unwrap().is_pure());
}
