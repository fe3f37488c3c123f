//! Semi-ladder and ladder nodes, ladder sequences, and the recognizers for
//! ladder and strong ladder multipartitions.
//!
//! A removable node is semi-ladder when no addable node of the same residue
//! lies below it; the highest semi-ladder node of each residue is the ladder
//! node. The ladder recognizer peels one ladder node per step, the strong
//! ladder recognizer a whole ladder sequence per step; both memoize on the
//! diagram and branch over the residues currently available. Where several
//! residues admit a removal the search tries all of them, since nothing pins
//! down a preferred choice.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::crystal::removable_residues;
use crate::partition::{is_above, residue_of, ChargeVector, Multipartition, Node, Residue};

/// The ladder x-sequence: all semi-ladder x-nodes in decreasing order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LadderSequence {
    pub residue: Residue,
    pub nodes: Vec<Node>,
}

/// A strong-ladder peeling schedule: residues with the number of nodes
/// removed at each step, in the order the diagram is built up.
pub type Schedule = Vec<(Residue, usize)>;

/// All semi-ladder nodes, highest first.
pub fn semi_ladder_nodes(m: &Multipartition, q: &ChargeVector) -> Vec<Node> {
    let addable = m.addable_nodes();
    m.removable_nodes()
        .into_iter()
        .filter(|&node| {
            let x = residue_of(node, q);
            !addable
                .iter()
                .any(|&a| residue_of(a, q) == x && is_above(node, a))
        })
        .collect()
}

/// The highest semi-ladder node of each residue, highest first.
pub fn ladder_nodes(m: &Multipartition, q: &ChargeVector) -> Vec<Node> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for node in semi_ladder_nodes(m, q) {
        let x = residue_of(node, q);
        if !seen.contains(&x) {
            seen.push(x);
            out.push(node);
        }
    }
    out
}

/// The ladder x-sequence, or `None` when `m` has no semi-ladder x-node.
pub fn ladder_sequence(m: &Multipartition, x: Residue, q: &ChargeVector) -> Option<LadderSequence> {
    let nodes: Vec<Node> = semi_ladder_nodes(m, q)
        .into_iter()
        .filter(|&n| residue_of(n, q) == x)
        .collect();
    if nodes.is_empty() {
        None
    } else {
        Some(LadderSequence { residue: x, nodes })
    }
}

/// Memoized ladder and strong-ladder recognizers for one charge vector.
pub struct LadderCache {
    q: ChargeVector,
    ladder_memo: RwLock<HashMap<Multipartition, bool>>,
    strong_memo: RwLock<HashMap<Multipartition, Option<Schedule>>>,
}

impl LadderCache {
    pub fn new(q: ChargeVector) -> Self {
        LadderCache {
            q,
            ladder_memo: RwLock::new(HashMap::new()),
            strong_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn charges(&self) -> &ChargeVector {
        &self.q
    }

    /// `true` iff `m` can be emptied removing one ladder node per step.
    pub fn is_ladder(&self, m: &Multipartition) -> bool {
        if m.is_empty() {
            return true;
        }
        if let Some(&known) = self.ladder_memo.read().unwrap().get(m) {
            return known;
        }
        let result = ladder_nodes(m, &self.q)
            .into_iter()
            .any(|node| self.is_ladder(&m.remove_node(node)));
        self.ladder_memo.write().unwrap().insert(m.clone(), result);
        result
    }

    /// A peeling schedule removing a whole ladder sequence per step, or
    /// `None` when `m` is not a strong ladder multipartition.
    pub fn strong_schedule(&self, m: &Multipartition) -> Option<Schedule> {
        if m.is_empty() {
            return Some(Vec::new());
        }
        if let Some(known) = self.strong_memo.read().unwrap().get(m) {
            return known.clone();
        }
        let mut result = None;
        for x in removable_residues(m, &self.q) {
            if let Some(seq) = ladder_sequence(m, x, &self.q) {
                let smaller = m.remove_nodes(&seq.nodes);
                if let Some(mut schedule) = self.strong_schedule(&smaller) {
                    schedule.push((x, seq.nodes.len()));
                    result = Some(schedule);
                    break;
                }
            }
        }
        self.strong_memo.write().unwrap().insert(m.clone(), result.clone());
        result
    }

    pub fn is_strong_ladder(&self, m: &Multipartition) -> bool {
        self.strong_schedule(m).is_some()
    }
}

/// One-shot ladder test with a fresh cache.
pub fn is_ladder_multipartition(m: &Multipartition, q: &ChargeVector) -> bool {
    LadderCache::new(q.clone()).is_ladder(m)
}

/// One-shot strong-ladder test with a fresh cache.
pub fn is_strong_ladder(m: &Multipartition, q: &ChargeVector) -> bool {
    LadderCache::new(q.clone()).is_strong_ladder(m)
}

/// One-shot schedule extraction with a fresh cache.
pub fn strong_ladder_schedule(m: &Multipartition, q: &ChargeVector) -> Option<Schedule> {
    LadderCache::new(q.clone()).strong_schedule(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Node;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn example() -> (Multipartition, Multipartition, ChargeVector) {
        (mp("1|2,1|3,1"), mp("1|3,1|-"), ChargeVector::new(3, vec![2, 1, 0]))
    }

    #[test]
    fn semi_ladder_examples() {
        let (lambda, mu, q) = example();
        assert_eq!(
            semi_ladder_nodes(&lambda, &q),
            vec![Node::new(1, 3, 3), Node::new(2, 1, 3)]
        );
        assert!(semi_ladder_nodes(&mu, &q).is_empty());
        assert!(semi_ladder_nodes(&Multipartition::empty(3), &q).is_empty());
    }

    #[test]
    fn ladder_node_examples() {
        let (lambda, _, q) = example();
        assert_eq!(ladder_nodes(&lambda, &q), vec![Node::new(1, 3, 3)]);
        assert!(ladder_nodes(&Multipartition::empty(3), &q).is_empty());
    }

    #[test]
    fn ladder_sequence_examples() {
        let (lambda, mu, q) = example();
        let x = Residue::new(3, 2);
        let seq = ladder_sequence(&lambda, x, &q).unwrap();
        assert_eq!(seq.nodes, vec![Node::new(1, 3, 3), Node::new(2, 1, 3)]);
        for value in 0..3 {
            assert!(ladder_sequence(&mu, Residue::new(3, value), &q).is_none());
        }
        let single = mp("1");
        let q1 = ChargeVector::new(3, vec![1]);
        let seq = ladder_sequence(&single, Residue::new(3, 1), &q1).unwrap();
        assert_eq!(seq.nodes, vec![Node::new(1, 1, 1)]);
    }

    #[test]
    fn recognizer_examples() {
        let (lambda, mu, q) = example();
        assert!(is_ladder_multipartition(&Multipartition::empty(3), &q));
        assert!(!is_ladder_multipartition(&mu, &q));
        assert!(is_ladder_multipartition(&lambda, &q));
        assert!(!is_strong_ladder(&mu, &q));
        assert!(is_strong_ladder(&lambda, &q));
        assert_eq!(strong_ladder_schedule(&Multipartition::empty(3), &q), Some(vec![]));
    }

    #[test]
    fn schedules_account_for_every_node() {
        let q = ChargeVector::new(3, vec![2, 1, 0]);
        let cache = LadderCache::new(q);
        for n in 0..=5 {
            for m in crate::partition::enumerate_multipartitions(3, n) {
                if let Some(schedule) = cache.strong_schedule(&m) {
                    let total: usize = schedule.iter().map(|(_, a)| a).sum();
                    assert_eq!(total, m.size());
                    // successive residues differ
                    for w in schedule.windows(2) {
                        assert_ne!(w[0].0, w[1].0);
                    }
                }
            }
        }
    }

    #[test]
    fn strong_implies_ladder() {
        for e in [0u32, 2, 3] {
            let q = if e == 0 {
                ChargeVector::new(0, vec![0, 2])
            } else {
                ChargeVector::new(e, vec![0, 1])
            };
            let cache = LadderCache::new(q);
            for n in 0..=5 {
                for m in crate::partition::enumerate_multipartitions(2, n) {
                    if cache.is_strong_ladder(&m) {
                        assert!(cache.is_ladder(&m), "{m} strong but not ladder");
                    }
                }
            }
        }
    }
}
