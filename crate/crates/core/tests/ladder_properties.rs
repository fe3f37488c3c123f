//! Inclusion chains and peeling lemmas for the ladder recognizers.

use kleshchev::crystal::{normal_nodes, KleshchevCache};
use kleshchev::ladders::{ladder_nodes, ladder_sequence, semi_ladder_nodes, LadderCache};
use kleshchev::partition::{
    enumerate_multipartitions, residue_of, ChargeVector, Multipartition,
};
use kleshchev::tableaux::restricted_set;

use std::collections::BTreeSet;

fn charge_vectors(e: u32, r: usize) -> Vec<ChargeVector> {
    vec![
        ChargeVector::new(e, vec![0; r]),
        ChargeVector::new(e, (0..r as i64).rev().collect()),
    ]
}

#[test]
fn semi_ladder_nodes_are_normal() {
    for e in [0u32, 2, 3] {
        for r in 1..=3usize {
            for q in charge_vectors(e, r) {
                let n_max = if r == 3 { 4 } else { 6 };
                for n in 0..=n_max {
                    for m in enumerate_multipartitions(r, n) {
                        for node in semi_ladder_nodes(&m, &q) {
                            let x = residue_of(node, &q);
                            assert!(
                                normal_nodes(&m, x, &q).contains(&node),
                                "semi-ladder node {node} of {m} is not normal"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn nonempty_kleshchev_has_a_ladder_node() {
    for e in [0u32, 2, 3, 4] {
        for r in 1..=3usize {
            for q in charge_vectors(e, r) {
                let cache = KleshchevCache::new(q.clone());
                let n_max = if r == 3 { 5 } else { 6 };
                for n in 1..=n_max {
                    for m in cache.kleshchev_set_seq(n) {
                        assert!(
                            !ladder_nodes(&m, &q).is_empty(),
                            "{m} is Kleshchev with no ladder node at e={e}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn strong_ladder_implies_restricted_implies_kleshchev() {
    for e in [0u32, 2, 3] {
        for r in 1..=2usize {
            for q in charge_vectors(e, r) {
                let ladders = LadderCache::new(q.clone());
                let crystal = KleshchevCache::new(q.clone());
                for n in 0..=4 {
                    let restricted: BTreeSet<Multipartition> =
                        restricted_set(r, n, &q).into_iter().collect();
                    for m in enumerate_multipartitions(r, n) {
                        if ladders.is_strong_ladder(&m) {
                            assert!(restricted.contains(&m), "{m} strong but not restricted");
                        }
                        if restricted.contains(&m) {
                            assert!(crystal.is_kleshchev(&m), "{m} restricted but not Kleshchev");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn multicore_kleshchev_is_strong_ladder_and_peels() {
    for e in [2u32, 3, 4] {
        for q in charge_vectors(e, 2) {
            let crystal = KleshchevCache::new(q.clone());
            let ladders = LadderCache::new(q.clone());
            for n in 0..=6 {
                for m in crystal.kleshchev_set_seq(n) {
                    if !m.is_multicore(e) {
                        continue;
                    }
                    assert!(ladders.is_strong_ladder(&m), "multi-core {m} not strong");
                    for node in ladder_nodes(&m, &q) {
                        // removing one ladder node keeps the diagram Kleshchev
                        assert!(
                            crystal.is_kleshchev(&m.remove_node(node)),
                            "{m} minus {node} stopped being Kleshchev"
                        );
                        // removing the whole sequence keeps it strong ladder
                        let x = residue_of(node, &q);
                        let seq = ladder_sequence(&m, x, &q).unwrap();
                        assert!(
                            ladders.is_strong_ladder(&m.remove_nodes(&seq.nodes)),
                            "{m} minus its {x}-sequence stopped being strong"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn ladder_equals_strong_ladder_without_modulus() {
    for r in 1..=3usize {
        for q in charge_vectors(0, r) {
            let cache = LadderCache::new(q.clone());
            let n_max = if r == 3 { 5 } else { 6 };
            for n in 0..=n_max {
                for m in enumerate_multipartitions(r, n) {
                    assert_eq!(
                        cache.is_ladder(&m),
                        cache.is_strong_ladder(&m),
                        "ladder/strong mismatch for {m}"
                    );
                }
            }
        }
    }
}
