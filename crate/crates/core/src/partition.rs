//! Partitions, multipartitions, nodes, residues, and the two partial orders.
//!
//! This is the data model everything else consumes. A [`Multipartition`]
//! keeps its trailing empty components because the number of components `r`
//! is part of the data; the canonical encoding (components joined by `|`,
//! parts by `,`, empty component `-`) is the exchange format for the CLI and
//! for JSON reports.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An element of Z/eZ, with `e = 0` meaning an ordinary integer.
///
/// The modulus is never 1; values are normalized into `[0, e)` when `e >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Residue {
    modulus: u32,
    value: i64,
}

impl Residue {
    /// Panics if `modulus == 1`; the whole theory excludes that case.
    pub fn new(modulus: u32, value: i64) -> Self {
        assert!(modulus != 1, "modulus 1 is not allowed");
        let value = if modulus >= 2 {
            value.rem_euclid(modulus as i64)
        } else {
            value
        };
        Residue { modulus, value }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    /// The residue shifted by an integer (reduced when the modulus is >= 2).
    pub fn shift(&self, delta: i64) -> Self {
        Residue::new(self.modulus, self.value + delta)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The charge vector: one residue per component, uniform modulus.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ChargeVector {
    modulus: u32,
    charges: Vec<i64>,
}

impl ChargeVector {
    /// Panics if `modulus == 1` or the vector is empty.
    pub fn new(modulus: u32, charges: Vec<i64>) -> Self {
        assert!(modulus != 1, "modulus 1 is not allowed");
        assert!(!charges.is_empty(), "a charge vector needs at least one entry");
        let charges = charges
            .into_iter()
            .map(|c| if modulus >= 2 { c.rem_euclid(modulus as i64) } else { c })
            .collect();
        ChargeVector { modulus, charges }
    }

    /// Parses a comma-separated list of integers, e.g. `"0,2,0"`.
    pub fn parse(modulus: u32, text: &str) -> Result<Self, ParseError> {
        if modulus == 1 {
            return Err(ParseError::BadModulus);
        }
        let charges = text
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| ParseError::BadCharges(text.to_owned())))
            .collect::<Result<Vec<_>, _>>()?;
        if charges.is_empty() {
            return Err(ParseError::BadCharges(text.to_owned()));
        }
        Ok(ChargeVector::new(modulus, charges))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of components this vector charges.
    pub fn r(&self) -> usize {
        self.charges.len()
    }

    /// The charge of component `comp` (1-based).
    pub fn charge(&self, comp: usize) -> Residue {
        assert!(comp >= 1 && comp <= self.charges.len(), "component index out of range");
        Residue::new(self.modulus, self.charges[comp - 1])
    }

    pub fn residues(&self) -> impl Iterator<Item = Residue> + '_ {
        self.charges.iter().map(|&c| Residue::new(self.modulus, c))
    }

    pub fn values(&self) -> &[i64] {
        &self.charges
    }

    /// The charge vector of a component subsequence (1-based indices).
    pub fn subsequence(&self, comps: &[usize]) -> ChargeVector {
        ChargeVector::new(self.modulus, comps.iter().map(|&c| self.charges[c - 1]).collect())
    }

    /// Components in reverse order; pairs with [`Multipartition::reversed`].
    pub fn reversed(&self) -> ChargeVector {
        ChargeVector::new(self.modulus, self.charges.iter().rev().copied().collect())
    }
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part (1-based), 0 beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cells `(row, col)` whose removal leaves a partition, top row first.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.rows() {
            if self.part(i) > self.part(i + 1) {
                out.push((i, self.part(i)));
            }
        }
        out
    }

    /// Cells `(row, col)` whose addition leaves a partition, top row first.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.rows() + 1 {
            // row i can grow iff the row above is strictly longer (or i == 1)
            if i == 1 || self.part(i - 1) > self.part(i) {
                out.push((i, self.part(i) + 1));
            }
        }
        out
    }

    /// `true` iff successive part differences are < e (every partition when e = 0).
    pub fn is_restricted(&self, e: u32) -> bool {
        assert!(e != 1, "modulus 1 is not allowed");
        if e == 0 {
            return true;
        }
        (1..=self.rows()).all(|i| self.part(i) - self.part(i + 1) < e as usize)
    }

    /// e-core test via first-column beta-numbers: no bead sits `e` above an
    /// empty position. Every partition is a 0-core.
    pub fn is_core(&self, e: u32) -> bool {
        assert!(e != 1, "modulus 1 is not allowed");
        if e == 0 {
            return true;
        }
        let w = self.rows().max(e as usize);
        let beta: HashSet<i64> = (1..=w).map(|i| self.part(i) as i64 + (w - i) as i64).collect();
        beta.iter().all(|&b| b < e as i64 || beta.contains(&(b - e as i64)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

/// Enumeration comparator: larger partitions first, then descending
/// lexicographic on parts, so for fixed size `(n)` comes first and `(1^n)` last.
fn cmp_partitions(a: &Partition, b: &Partition) -> Ordering {
    b.size()
        .cmp(&a.size())
        .then_with(|| b.parts().cmp(a.parts()))
}

/// A cell `(row, col, comp)`, all coordinates 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        assert!(row >= 1 && col >= 1 && comp >= 1, "node coordinates are 1-based");
        Node { row, col, comp }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// `true` iff `a` lies strictly above `b`: smaller component index, or equal
/// component and smaller row. Columns are never consulted.
pub fn is_above(a: Node, b: Node) -> bool {
    a.comp < b.comp || (a.comp == b.comp && a.row < b.row)
}

/// Total order on nodes of one diagram, highest first.
pub fn cmp_highest_first(a: &Node, b: &Node) -> Ordering {
    (a.comp, a.row).cmp(&(b.comp, b.row))
}

/// An ordered tuple of partitions. Trailing empty components are retained.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    /// Panics if `components` is empty (r must be positive).
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition needs at least one component");
        Multipartition { components }
    }

    pub fn empty(r: usize) -> Self {
        Multipartition::new(vec![Partition::empty(); r])
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `s` (1-based).
    pub fn component(&self, s: usize) -> &Partition {
        assert!(s >= 1 && s <= self.components.len(), "component index out of range");
        &self.components[s - 1]
    }

    /// All nodes of the diagram, highest first.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (s, comp) in self.components.iter().enumerate() {
            for i in 1..=comp.rows() {
                for j in 1..=comp.part(i) {
                    out.push(Node::new(i, j, s + 1));
                }
            }
        }
        out
    }

    /// Removable nodes, highest first.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, comp) in self.components.iter().enumerate() {
            for (row, col) in comp.removable_cells() {
                out.push(Node::new(row, col, s + 1));
            }
        }
        out
    }

    /// Addable nodes, highest first.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (s, comp) in self.components.iter().enumerate() {
            for (row, col) in comp.addable_cells() {
                out.push(Node::new(row, col, s + 1));
            }
        }
        out
    }

    pub fn is_addable(&self, node: Node) -> bool {
        node.comp <= self.r() && {
            let comp = self.component(node.comp);
            node.col == comp.part(node.row) + 1
                && (node.row == 1 || comp.part(node.row - 1) > comp.part(node.row))
        }
    }

    pub fn is_removable(&self, node: Node) -> bool {
        node.comp <= self.r() && {
            let comp = self.component(node.comp);
            node.col == comp.part(node.row)
                && comp.part(node.row) > comp.part(node.row + 1)
        }
    }

    /// The diagram with one node added. Panics unless the node is addable.
    pub fn add_node(&self, node: Node) -> Multipartition {
        assert!(self.is_addable(node), "node {node} is not addable");
        let mut components = self.components.clone();
        let mut parts = components[node.comp - 1].parts().to_vec();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        components[node.comp - 1] = Partition::new(parts);
        Multipartition::new(components)
    }

    /// The diagram with one node removed. Panics unless the node is removable.
    pub fn remove_node(&self, node: Node) -> Multipartition {
        self.remove_nodes(&[node])
    }

    /// Removes a set of removable nodes simultaneously (at most one per row).
    pub fn remove_nodes(&self, nodes: &[Node]) -> Multipartition {
        let mut components = self.components.clone();
        for &node in nodes {
            assert!(self.is_removable(node), "node {node} is not removable");
            let parts = components[node.comp - 1].parts();
            let mut parts = parts.to_vec();
            parts[node.row - 1] -= 1;
            while parts.last() == Some(&0) {
                parts.pop();
            }
            components[node.comp - 1] = Partition::new(parts);
        }
        Multipartition::new(components)
    }

    /// The single node of `self` missing from `smaller` (which must be
    /// `self` minus one node).
    pub fn node_removed_to(&self, smaller: &Multipartition) -> Node {
        assert_eq!(self.r(), smaller.r(), "component counts differ");
        assert_eq!(self.size(), smaller.size() + 1, "sizes must differ by one");
        for s in 1..=self.r() {
            let (a, b) = (self.component(s), smaller.component(s));
            for i in 1..=a.rows() {
                if a.part(i) != b.part(i) {
                    return Node::new(i, a.part(i), s);
                }
            }
        }
        unreachable!("the two diagrams are equal");
    }

    /// `true` iff every component is an e-core.
    pub fn is_multicore(&self, e: u32) -> bool {
        self.components.iter().all(|c| c.is_core(e))
    }

    /// Components in reverse order.
    pub fn reversed(&self) -> Multipartition {
        Multipartition::new(self.components.iter().rev().cloned().collect())
    }

    /// The component subsequence at the given 1-based indices.
    pub fn subsequence(&self, comps: &[usize]) -> Multipartition {
        Multipartition::new(comps.iter().map(|&c| self.component(c).clone()).collect())
    }
}

impl Ord for Multipartition {
    /// The canonical enumeration order: by r, by size, then component by
    /// component with larger components first (see [`enumerate_multipartitions`]).
    fn cmp(&self, other: &Self) -> Ordering {
        self.r()
            .cmp(&other.r())
            .then(self.size().cmp(&other.size()))
            .then_with(|| {
                for (a, b) in self.components.iter().zip(other.components.iter()) {
                    let c = cmp_partitions(a, b);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", text.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut components = Vec::new();
        for chunk in s.split('|') {
            let chunk = chunk.trim();
            if chunk == "-" || chunk.is_empty() {
                components.push(Partition::empty());
                continue;
            }
            let mut parts = Vec::new();
            for p in chunk.split(',') {
                let v: usize = p
                    .trim()
                    .parse()
                    .map_err(|_| ParseError::BadPart(s.to_owned()))?;
                if v == 0 {
                    return Err(ParseError::BadPart(s.to_owned()));
                }
                parts.push(v);
            }
            if !parts.windows(2).all(|w| w[0] >= w[1]) {
                return Err(ParseError::NotDecreasing(s.to_owned()));
            }
            components.push(Partition::new(parts));
        }
        if components.is_empty() {
            return Err(ParseError::BadPart(s.to_owned()));
        }
        Ok(Multipartition::new(components))
    }
}

/// Errors from parsing the text encodings.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid part in multipartition encoding: {0:?}")]
    BadPart(String),
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(String),
    #[error("invalid charge list: {0:?}")]
    BadCharges(String),
    #[error("modulus must be 0 or at least 2")]
    BadModulus,
}

/// The residue `col - row + charge(comp)` of a node.
pub fn residue_of(node: Node, q: &ChargeVector) -> Residue {
    q.charge(node.comp).shift(node.col as i64 - node.row as i64)
}

/// Dominance order: every prefix sum of `a` (components flattened in order)
/// is at least the matching prefix sum of `b`. Panics on r or size mismatch.
pub fn dominates(a: &Multipartition, b: &Multipartition) -> bool {
    assert_eq!(a.r(), b.r(), "component counts differ");
    assert_eq!(a.size(), b.size(), "sizes differ");
    let mut base_a = 0usize;
    let mut base_b = 0usize;
    for s in 1..=a.r() {
        let (pa, pb) = (a.component(s), b.component(s));
        let rows = pa.rows().max(pb.rows());
        let mut sum_a = base_a;
        let mut sum_b = base_b;
        for i in 1..=rows {
            sum_a += pa.part(i);
            sum_b += pb.part(i);
            if sum_a < sum_b {
                return false;
            }
        }
        base_a += pa.size();
        base_b += pb.size();
    }
    true
}

/// The strict colexicographic-style order: scan components from the last one
/// backwards and rows from the bottom up; at the last position where the two
/// diagrams differ, `a` must have the smaller part. Strict dominance of `b`
/// by `a` implies `precedes(a, b)`.
pub fn precedes(a: &Multipartition, b: &Multipartition) -> bool {
    assert_eq!(a.r(), b.r(), "component counts differ");
    assert_eq!(a.size(), b.size(), "sizes differ");
    for s in (1..=a.r()).rev() {
        let (pa, pb) = (a.component(s), b.component(s));
        let rows = pa.rows().max(pb.rows());
        for t in (1..=rows).rev() {
            if pa.part(t) != pb.part(t) {
                return pa.part(t) < pb.part(t);
            }
        }
    }
    false
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All r-component multipartitions of `n`, each exactly once, in the
/// canonical order: the first component ranges over partitions of n, n-1,
/// ..., 0 (descending lexicographic within a size), then the remaining
/// components recursively.
pub fn enumerate_multipartitions(r: usize, n: usize) -> Vec<Multipartition> {
    assert!(r >= 1, "r must be positive");
    fn rec(r: usize, n: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if r == 1 {
            for p in partitions_of(n) {
                prefix.push(p);
                out.push(Multipartition::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for k in (0..=n).rev() {
            for p in partitions_of(k) {
                prefix.push(p);
                rec(r - 1, n - k, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(r, n, &mut Vec::new(), &mut out);
    out
}
