//! Boundary sequences, normal and good nodes, the recursive Kleshchev
//! classifier, the good lattice, and the tensor-product cross-check.
//!
//! For a residue `x`, reading all addable and removable x-nodes of a diagram
//! from the bottom up gives a word in the letters A and R. Deleting the
//! substring "AR" until none is left is confluent; the surviving R letters
//! are the normal x-nodes (highest one good) and the surviving A letters the
//! conormal x-nodes (lowest one cogood). `e_tilde` removes the good node,
//! `f_tilde` adds the cogood node, and a multipartition is Kleshchev exactly
//! when successive `e_tilde` steps can empty it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::RwLock;

use crate::partition::{
    enumerate_multipartitions, residue_of, ChargeVector, Multipartition, Node, Partition, Residue,
};

/// A letter of a boundary sequence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    Addable,
    Removable,
}

/// All addable and removable x-nodes read from the bottom up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundarySequence {
    pub entries: Vec<(Node, Letter)>,
}

impl BoundarySequence {
    /// The word, e.g. `"RAARRR"`, lowest node first.
    pub fn letters(&self) -> String {
        self.entries
            .iter()
            .map(|(_, l)| match l {
                Letter::Addable => 'A',
                Letter::Removable => 'R',
            })
            .collect()
    }
}

/// The boundary sequence of x-nodes, bottom-up.
pub fn ar_sequence(m: &Multipartition, x: Residue, q: &ChargeVector) -> BoundarySequence {
    assert_eq!(x.modulus(), q.modulus(), "residue and charges must share a modulus");
    let mut entries: Vec<(Node, Letter)> = Vec::new();
    for node in m.addable_nodes() {
        if residue_of(node, q) == x {
            entries.push((node, Letter::Addable));
        }
    }
    for node in m.removable_nodes() {
        if residue_of(node, q) == x {
            entries.push((node, Letter::Removable));
        }
    }
    // bottom-up: larger component first, then larger row
    entries.sort_by(|(a, _), (b, _)| (b.comp, b.row).cmp(&(a.comp, a.row)));
    BoundarySequence { entries }
}

/// Letters surviving the iterated "AR" deletion, still bottom-up.
fn cancelled(seq: &BoundarySequence) -> Vec<(Node, Letter)> {
    let mut stack: Vec<(Node, Letter)> = Vec::new();
    for &(node, letter) in &seq.entries {
        if letter == Letter::Removable && matches!(stack.last(), Some((_, Letter::Addable))) {
            stack.pop();
        } else {
            stack.push((node, letter));
        }
    }
    stack
}

/// Normal x-nodes, highest first.
pub fn normal_nodes(m: &Multipartition, x: Residue, q: &ChargeVector) -> Vec<Node> {
    let mut nodes: Vec<Node> = cancelled(&ar_sequence(m, x, q))
        .into_iter()
        .filter(|(_, l)| *l == Letter::Removable)
        .map(|(n, _)| n)
        .collect();
    nodes.reverse();
    nodes
}

/// Conormal x-nodes, lowest first.
pub fn conormal_nodes(m: &Multipartition, x: Residue, q: &ChargeVector) -> Vec<Node> {
    cancelled(&ar_sequence(m, x, q))
        .into_iter()
        .filter(|(_, l)| *l == Letter::Addable)
        .map(|(n, _)| n)
        .collect()
}

/// The highest normal x-node, if any.
pub fn good_node(m: &Multipartition, x: Residue, q: &ChargeVector) -> Option<Node> {
    normal_nodes(m, x, q).into_iter().next()
}

/// The lowest conormal x-node, if any.
pub fn cogood_node(m: &Multipartition, x: Residue, q: &ChargeVector) -> Option<Node> {
    conormal_nodes(m, x, q).into_iter().next()
}

/// Removes the good x-node, or `None` when the operator kills the element.
pub fn e_tilde(m: &Multipartition, x: Residue, q: &ChargeVector) -> Option<Multipartition> {
    good_node(m, x, q).map(|node| m.remove_node(node))
}

/// Adds the cogood x-node, or `None` when the operator kills the element.
pub fn f_tilde(m: &Multipartition, x: Residue, q: &ChargeVector) -> Option<Multipartition> {
    cogood_node(m, x, q).map(|node| m.add_node(node))
}

/// Number of times `e_tilde` applies before the element dies.
pub fn epsilon(m: &Multipartition, i: Residue, q: &ChargeVector) -> usize {
    let mut count = 0;
    let mut cur = m.clone();
    while let Some(next) = e_tilde(&cur, i, q) {
        cur = next;
        count += 1;
    }
    count
}

/// Number of times `f_tilde` applies before the element dies.
pub fn phi(m: &Multipartition, i: Residue, q: &ChargeVector) -> usize {
    let mut count = 0;
    let mut cur = m.clone();
    while let Some(next) = f_tilde(&cur, i, q) {
        cur = next;
        count += 1;
    }
    count
}

/// Residues of removable nodes, deduplicated.
pub fn removable_residues(m: &Multipartition, q: &ChargeVector) -> BTreeSet<Residue> {
    m.removable_nodes().into_iter().map(|n| residue_of(n, q)).collect()
}

/// Residues of addable nodes, deduplicated.
pub fn addable_residues(m: &Multipartition, q: &ChargeVector) -> BTreeSet<Residue> {
    m.addable_nodes().into_iter().map(|n| residue_of(n, q)).collect()
}

/// Memoized Kleshchev classifier for one charge vector.
///
/// The cache behaves as a single logical map and is safe for concurrent
/// readers and writers, so sweeps may share one instance across threads.
pub struct KleshchevCache {
    q: ChargeVector,
    memo: RwLock<HashMap<Multipartition, bool>>,
}

impl KleshchevCache {
    pub fn new(q: ChargeVector) -> Self {
        KleshchevCache { q, memo: RwLock::new(HashMap::new()) }
    }

    pub fn charges(&self) -> &ChargeVector {
        &self.q
    }

    /// `true` iff `m` is reachable from the empty multipartition by good-node
    /// additions. Only good nodes (one per residue) need to be tried:
    /// removing the good x-node of a Kleshchev diagram is the inverse of the
    /// corresponding arrow in the good lattice.
    pub fn is_kleshchev(&self, m: &Multipartition) -> bool {
        if m.is_empty() {
            return true;
        }
        if let Some(&known) = self.memo.read().unwrap().get(m) {
            return known;
        }
        let result = removable_residues(m, &self.q).into_iter().any(|x| {
            good_node(m, x, &self.q)
                .map(|node| self.is_kleshchev(&m.remove_node(node)))
                .unwrap_or(false)
        });
        self.memo.write().unwrap().insert(m.clone(), result);
        result
    }

    /// All Kleshchev multipartitions of `n`, in enumeration order.
    #[cfg(feature = "parallel")]
    pub fn kleshchev_set(&self, n: usize) -> Vec<Multipartition> {
        use rayon::prelude::*;
        enumerate_multipartitions(self.q.r(), n)
            .into_par_iter()
            .filter(|m| self.is_kleshchev(m))
            .collect()
    }

    /// All Kleshchev multipartitions of `n`, in enumeration order.
    #[cfg(not(feature = "parallel"))]
    pub fn kleshchev_set(&self, n: usize) -> Vec<Multipartition> {
        self.kleshchev_set_seq(n)
    }

    /// Sequential variant of [`kleshchev_set`](Self::kleshchev_set).
    pub fn kleshchev_set_seq(&self, n: usize) -> Vec<Multipartition> {
        enumerate_multipartitions(self.q.r(), n)
            .into_iter()
            .filter(|m| self.is_kleshchev(m))
            .collect()
    }
}

/// One-shot Kleshchev test with a fresh cache.
pub fn is_kleshchev(m: &Multipartition, q: &ChargeVector) -> bool {
    KleshchevCache::new(q.clone()).is_kleshchev(m)
}

/// An arrow of the good lattice: `target` is `source` plus a good node of
/// the given residue.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrystalEdge {
    pub source: Multipartition,
    pub target: Multipartition,
    pub residue: Residue,
}

/// The good lattice truncated at a given size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrystalGraph {
    /// `levels[n]` holds the vertices of size `n` in enumeration order.
    pub levels: Vec<Vec<Multipartition>>,
    /// Edges sorted by (source level, source, residue).
    pub edges: Vec<CrystalEdge>,
}

impl CrystalGraph {
    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// DOT rendering with deterministic vertex and edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph good_lattice {\n");
        for level in &self.levels {
            for v in level {
                out.push_str(&format!("    \"{v}\";\n"));
            }
        }
        for e in &self.edges {
            out.push_str(&format!(
                "    \"{}\" -> \"{}\" [label=\"{}\"];\n",
                e.source, e.target, e.residue
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the good lattice up to size `n_max` by repeated cogood additions
/// from the empty vertex.
pub fn crystal_graph(q: &ChargeVector, n_max: usize) -> CrystalGraph {
    let mut levels: Vec<Vec<Multipartition>> = vec![vec![Multipartition::empty(q.r())]];
    let mut edges = Vec::new();
    for n in 0..n_max {
        let mut next: BTreeSet<Multipartition> = BTreeSet::new();
        for vertex in &levels[n] {
            for x in addable_residues(vertex, q) {
                if let Some(target) = f_tilde(vertex, x, q) {
                    edges.push(CrystalEdge {
                        source: vertex.clone(),
                        target: target.clone(),
                        residue: x,
                    });
                    next.insert(target);
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    CrystalGraph { levels, edges }
}

/// The weight of a diagram: the charge multiset plus the residue counts of
/// its nodes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    /// Multiplicity of each fundamental-weight index among the charges.
    pub charge_part: BTreeMap<Residue, usize>,
    /// Number of i-nodes for each residue i occurring in the diagram.
    pub root_part: BTreeMap<Residue, usize>,
}

/// The weight `charges - node residue counts` of a diagram.
pub fn wt(m: &Multipartition, q: &ChargeVector) -> Weight {
    let mut charge_part = BTreeMap::new();
    for r in q.residues() {
        *charge_part.entry(r).or_insert(0) += 1;
    }
    let mut root_part = BTreeMap::new();
    for node in m.nodes() {
        *root_part.entry(residue_of(node, q)).or_insert(0) += 1;
    }
    Weight { charge_part, root_part }
}

fn cartan_pairing(e: u32, i: Residue, j: Residue) -> i64 {
    if i == j {
        return 2;
    }
    match e {
        0 => {
            if (i.value() - j.value()).abs() == 1 {
                -1
            } else {
                0
            }
        }
        2 => -2,
        _ => {
            let d = (i.value() - j.value()).rem_euclid(e as i64);
            if d == 1 || d == e as i64 - 1 {
                -1
            } else {
                0
            }
        }
    }
}

impl Weight {
    /// The natural pairing of this weight with the i-th coroot; it equals
    /// `phi_i - epsilon_i` on every diagram.
    pub fn pairing(&self, i: Residue) -> i64 {
        let e = i.modulus();
        let from_charges = *self.charge_part.get(&i).unwrap_or(&0) as i64;
        let from_roots: i64 = self
            .root_part
            .iter()
            .map(|(&j, &count)| count as i64 * cartan_pairing(e, i, j))
            .sum();
        from_charges - from_roots
    }
}

fn single(p: &Partition, charge: Residue) -> (Multipartition, ChargeVector) {
    (
        Multipartition::new(vec![p.clone()]),
        ChargeVector::new(charge.modulus(), vec![charge.value()]),
    )
}

/// Adds an i-node to `m` through the tensor rule on the reversed component
/// word, using only one-component crystal data. The result coincides with
/// [`f_tilde`] on the whole multipartition whenever every component is
/// e-restricted.
pub fn tensor_good_add(
    m: &Multipartition,
    i: Residue,
    q: &ChargeVector,
) -> Option<Multipartition> {
    let e = q.modulus();
    assert!(
        m.components().iter().all(|c| c.is_restricted(e)),
        "every component must be e-restricted"
    );
    let r = m.r();
    // tensor word: component r first, component 1 last
    let stats: Vec<(usize, usize)> = (0..r)
        .map(|j| {
            let comp = r - j;
            let (part, charge) = single(m.component(comp), q.charge(comp));
            (epsilon(&part, i, &charge), phi(&part, i, &charge))
        })
        .collect();
    // prefix statistics of the left-associated fold
    let mut eps_prefix = vec![0i64; r];
    let mut phi_prefix = vec![0i64; r];
    eps_prefix[0] = stats[0].0 as i64;
    phi_prefix[0] = stats[0].1 as i64;
    for j in 1..r {
        let (eps_j, phi_j) = (stats[j].0 as i64, stats[j].1 as i64);
        let pairing_prefix = phi_prefix[j - 1] - eps_prefix[j - 1];
        let pairing_j = phi_j - eps_j;
        eps_prefix[j] = eps_prefix[j - 1].max(eps_j - pairing_prefix);
        phi_prefix[j] = (phi_prefix[j - 1] + pairing_j).max(phi_j);
    }
    if phi_prefix[r - 1] <= 0 {
        return None;
    }
    // descend through the binary splits to the factor the operator acts on
    let mut target = 0;
    for j in (1..r).rev() {
        if phi_prefix[j - 1] > stats[j].0 as i64 {
            continue; // acts inside the prefix ending at factor j-1
        }
        target = j;
        break;
    }
    let comp = r - target;
    let (part, charge) = single(m.component(comp), q.charge(comp));
    let grown = f_tilde(&part, i, &charge)?;
    let mut components = m.components().to_vec();
    components[comp - 1] = grown.component(1).clone();
    Some(Multipartition::new(components))
}
