//! Standard tableaux, residue sequences, and the restrictedness test by
//! dominance sweeps.
//!
//! A standard tableau is stored as its growth sequence: the k-th entry is the
//! node holding k, and every prefix is a valid diagram. A multipartition is
//! restricted when one of its residue sequences is realized by no strictly
//! dominated shape; the test enumerates all dominated shapes directly, which
//! is exact and fine at desk scale.

use std::collections::{BTreeSet, HashMap};

use crate::partition::{
    dominates, enumerate_multipartitions, residue_of, ChargeVector, Multipartition, Node, Residue,
};

/// A standard tableau as a growth path in the Young lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    pub growth: Vec<Node>,
}

/// All standard tableaux of `m`, enumerated as growth paths: at each step any
/// addable node of the current shape lying inside `m` may be added.
pub fn standard_tableaux(m: &Multipartition) -> Vec<StandardTableau> {
    fn rec(
        current: &Multipartition,
        target: &Multipartition,
        growth: &mut Vec<Node>,
        out: &mut Vec<StandardTableau>,
    ) {
        if current.size() == target.size() {
            out.push(StandardTableau { growth: growth.clone() });
            return;
        }
        for node in current.addable_nodes() {
            if node.col <= target.component(node.comp).part(node.row) {
                growth.push(node);
                rec(&current.add_node(node), target, growth, out);
                growth.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&Multipartition::empty(m.r()), m, &mut Vec::new(), &mut out);
    out
}

/// Number of standard tableaux by the removable-node recurrence; an
/// independent route from the growth-path enumeration.
pub fn count_standard_tableaux(m: &Multipartition) -> u64 {
    fn rec(m: &Multipartition, memo: &mut HashMap<Multipartition, u64>) -> u64 {
        if m.is_empty() {
            return 1;
        }
        if let Some(&known) = memo.get(m) {
            return known;
        }
        let count = m
            .removable_nodes()
            .into_iter()
            .map(|node| rec(&m.remove_node(node), memo))
            .sum();
        memo.insert(m.clone(), count);
        count
    }
    rec(m, &mut HashMap::new())
}

/// The residue sequence of a tableau.
pub fn residue_sequence(t: &StandardTableau, q: &ChargeVector) -> Vec<Residue> {
    t.growth.iter().map(|&node| residue_of(node, q)).collect()
}

/// All residue sequences of standard tableaux of `m`, deduplicated.
pub fn residue_sequence_set(m: &Multipartition, q: &ChargeVector) -> BTreeSet<Vec<Residue>> {
    standard_tableaux(m)
        .iter()
        .map(|t| residue_sequence(t, q))
        .collect()
}

/// `true` iff some residue sequence of `m` is realized by no shape strictly
/// dominated by `m`.
pub fn is_restricted_tableaux(m: &Multipartition, q: &ChargeVector) -> bool {
    let own = residue_sequence_set(m, q);
    let mut others: BTreeSet<Vec<Residue>> = BTreeSet::new();
    for mu in enumerate_multipartitions(m.r(), m.size()) {
        if &mu != m && dominates(m, &mu) {
            others.extend(residue_sequence_set(&mu, q));
        }
    }
    own.iter().any(|seq| !others.contains(seq))
}

/// Restricted multipartitions of size `n`, in enumeration order. The residue
/// sequence sets of the level are computed once and shared.
pub fn restricted_set(r: usize, n: usize, q: &ChargeVector) -> Vec<Multipartition> {
    let shapes = enumerate_multipartitions(r, n);
    let seq_sets = level_sequence_sets(&shapes, q);
    restricted_from_sets(&shapes, &seq_sets)
}

/// Sequential variant of [`restricted_set`].
pub fn restricted_set_seq(r: usize, n: usize, q: &ChargeVector) -> Vec<Multipartition> {
    let shapes = enumerate_multipartitions(r, n);
    let seq_sets: Vec<BTreeSet<Vec<Residue>>> =
        shapes.iter().map(|m| residue_sequence_set(m, q)).collect();
    restricted_from_sets(&shapes, &seq_sets)
}

#[cfg(feature = "parallel")]
fn level_sequence_sets(
    shapes: &[Multipartition],
    q: &ChargeVector,
) -> Vec<BTreeSet<Vec<Residue>>> {
    use rayon::prelude::*;
    shapes.par_iter().map(|m| residue_sequence_set(m, q)).collect()
}

#[cfg(not(feature = "parallel"))]
fn level_sequence_sets(
    shapes: &[Multipartition],
    q: &ChargeVector,
) -> Vec<BTreeSet<Vec<Residue>>> {
    shapes.iter().map(|m| residue_sequence_set(m, q)).collect()
}

fn restricted_from_sets(
    shapes: &[Multipartition],
    seq_sets: &[BTreeSet<Vec<Residue>>],
) -> Vec<Multipartition> {
    let mut out = Vec::new();
    for (idx, m) in shapes.iter().enumerate() {
        let mut others: BTreeSet<&Vec<Residue>> = BTreeSet::new();
        for (jdx, mu) in shapes.iter().enumerate() {
            if jdx != idx && dominates(m, mu) {
                others.extend(seq_sets[jdx].iter());
            }
        }
        if seq_sets[idx].iter().any(|seq| !others.contains(seq)) {
            out.push(m.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(standard_tableaux(&mp("1|1")).len(), 2);
        assert_eq!(standard_tableaux(&mp("2,1")).len(), 2);
        assert_eq!(standard_tableaux(&mp("2|1")).len(), 3);
        assert_eq!(standard_tableaux(&Multipartition::empty(2)).len(), 1);
    }

    #[test]
    fn counts_match_recurrence() {
        for r in 1..=2 {
            for n in 0..=6 {
                for m in enumerate_multipartitions(r, n) {
                    assert_eq!(
                        standard_tableaux(&m).len() as u64,
                        count_standard_tableaux(&m),
                        "count mismatch for {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn residue_sequences() {
        let q = ChargeVector::new(0, vec![0, 1]);
        let t = StandardTableau { growth: vec![Node::new(1, 1, 1), Node::new(1, 1, 2)] };
        let seq = residue_sequence(&t, &q);
        assert_eq!(seq, vec![Residue::new(0, 0), Residue::new(0, 1)]);

        let q2 = ChargeVector::new(2, vec![0]);
        let row = residue_sequence_set(&mp("2"), &q2);
        let col = residue_sequence_set(&mp("1,1"), &q2);
        let expected: BTreeSet<Vec<Residue>> =
            [vec![Residue::new(2, 0), Residue::new(2, 1)]].into_iter().collect();
        assert_eq!(row, expected);
        assert_eq!(col, expected);

        let empty = Multipartition::new(vec![Partition::empty()]);
        let sets = residue_sequence_set(&empty, &q2);
        assert_eq!(sets.len(), 1);
        assert!(sets.contains(&Vec::new()));
    }

    #[test]
    fn sequence_set_no_larger_than_tableau_count() {
        let q = ChargeVector::new(2, vec![0, 1]);
        for m in enumerate_multipartitions(2, 4) {
            assert!(residue_sequence_set(&m, &q).len() <= standard_tableaux(&m).len());
        }
    }

    #[test]
    fn restricted_examples() {
        let q = ChargeVector::new(3, vec![0]);
        assert!(!is_restricted_tableaux(&mp("3"), &q));
        assert!(is_restricted_tableaux(&Multipartition::empty(3), &ChargeVector::new(3, vec![2, 1, 0])));
        assert!(!is_restricted_tableaux(&mp("1|3,1|-"), &ChargeVector::new(3, vec![2, 1, 0])));
    }

    #[test]
    fn level_set_matches_pointwise_test() {
        let q = ChargeVector::new(2, vec![0, 1]);
        for n in 0..=4 {
            let level = restricted_set(2, n, &q);
            let seq_level = restricted_set_seq(2, n, &q);
            assert_eq!(level, seq_level);
            for m in enumerate_multipartitions(2, n) {
                assert_eq!(level.contains(&m), is_restricted_tableaux(&m, &q));
            }
        }
    }

    #[test]
    fn level_one_restricted_matches_part_differences() {
        for e in [0u32, 2, 3, 4] {
            let q = ChargeVector::new(e, vec![0]);
            for n in 0..=8 {
                for m in enumerate_multipartitions(1, n) {
                    assert_eq!(
                        is_restricted_tableaux(&m, &q),
                        m.component(1).is_restricted(e),
                        "mismatch for {m} at e={e}"
                    );
                }
            }
        }
    }
}
