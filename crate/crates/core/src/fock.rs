//! The level-r v-deformed Fock space over integer Laurent polynomials.
//!
//! The Chevalley operators act by
//!
//! ```text
//! f_i m = sum over addable i-nodes g:  v^{N_left(m, g)}  (m + g)
//! e_i m = sum over removable i-nodes:  v^{-N_right(m, g)} (m - g)
//! k_i m = v^{N_i(m)} m,    k_d m = v^{-(zero-residue node count)} m
//! ```
//!
//! where the N-statistics are signed counts of addable minus removable
//! i-nodes below (resp. above) the node being moved. All scalars stay inside
//! `Z[v, v^-1]`; the divided power `f_i^(a)` divides by the quantum factorial
//! `[a]!` and exactness of that division is asserted, never approximated.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::partition::{
    dominates, enumerate_multipartitions, is_above, precedes, residue_of, ChargeVector,
    Multipartition, Node, Residue,
};
use crate::tableaux::residue_sequence_set;

/// A sparse integer Laurent polynomial in one variable `v`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::v_pow(0)
    }

    /// The monomial `v^k`.
    pub fn v_pow(k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, 1);
        LaurentPoly { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut out = LaurentPoly::zero();
        for (exp, coeff) in terms {
            out.add_term(exp, coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        *self.coeffs.get(&exp).unwrap_or(&0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coeff) in other.terms() {
            out.add_term(exp, coeff);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, factor: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e, c * factor)))
    }

    /// The value at `v = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// `true` iff every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// `true` iff the polynomial is `v^k` for some k.
    pub fn is_single_power(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.values().next() == Some(&1)
    }

    fn leading(&self) -> Option<(i64, i64)> {
        self.coeffs.iter().next_back().map(|(&e, &c)| (e, c))
    }

    /// Exact division; `None` when `self` is not a multiple of `div`.
    pub fn exact_div(&self, div: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!div.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // an exact quotient has exponents in [min(self)-min(div), max(self)-max(div)]
        let quot_min = self.coeffs.keys().next().unwrap() - div.coeffs.keys().next().unwrap();
        let (de, dc) = div.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((re, rc)) = rem.leading() {
            if re - de < quot_min || rc % dc != 0 {
                return None;
            }
            let term = LaurentPoly::from_terms([(re - de, rc / dc)]);
            quot = quot.add(&term);
            rem = rem.add(&term.mul(div).scale(-1));
        }
        Some(quot)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coeff) in self.terms() {
            if !first {
                write!(f, " {} ", if coeff < 0 { "-" } else { "+" })?;
            } else {
                if coeff < 0 {
                    write!(f, "-")?;
                }
                first = false;
            }
            let mag = coeff.abs();
            match exp {
                0 => write!(f, "{mag}")?,
                1 if mag == 1 => write!(f, "v")?,
                1 => write!(f, "{mag}*v")?,
                _ if mag == 1 => write!(f, "v^{exp}")?,
                _ => write!(f, "{mag}*v^{exp}")?,
            }
        }
        Ok(())
    }
}

/// A finitely supported map from multipartitions to Laurent polynomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockVector {
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    /// The basis vector of the empty r-component multipartition.
    pub fn vacuum(r: usize) -> Self {
        FockVector::basis(Multipartition::empty(r))
    }

    pub fn basis(m: Multipartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, LaurentPoly::one());
        FockVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Multipartition) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Terms in the canonical multipartition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Multipartition, poly: LaurentPoly) {
        if poly.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(poly);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&poly);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, poly) in other.terms() {
            out.add_term(m.clone(), poly.clone());
        }
        out
    }

    /// Divides every coefficient exactly; `None` if any division fails.
    pub fn exact_div(&self, div: &LaurentPoly) -> Option<FockVector> {
        let mut out = FockVector::zero();
        for (m, poly) in self.terms() {
            out.add_term(m.clone(), poly.exact_div(div)?);
        }
        Some(out)
    }

    /// Deterministic JSON rendering: a list of
    /// `{"multipartition": <text encoding>, "poly": {<exponent>: <coeff>}}`
    /// objects in canonical key order.
    pub fn to_json(&self) -> String {
        let mut out = String::from("[");
        for (idx, (m, poly)) in self.terms.iter().enumerate() {
            if idx > 0 {
                out.push(',');
            }
            out.push_str(&format!("{{\"multipartition\":\"{m}\",\"poly\":{{"));
            for (jdx, (exp, coeff)) in poly.terms().enumerate() {
                if jdx > 0 {
                    out.push(',');
                }
                out.push_str(&format!("\"{exp}\":{coeff}"));
            }
            out.push_str("}}");
        }
        out.push(']');
        out
    }
}

/// Signed count of addable minus removable i-nodes of `m` strictly below the
/// node being added. Panics unless `added` is an addable i-node.
pub fn n_left(m: &Multipartition, added: Node, i: Residue, q: &ChargeVector) -> i64 {
    assert!(m.is_addable(added), "node {added} is not addable");
    assert_eq!(residue_of(added, q), i, "residue mismatch for {added}");
    let mut count = 0;
    for node in m.addable_nodes() {
        if residue_of(node, q) == i && is_above(added, node) {
            count += 1;
        }
    }
    for node in m.removable_nodes() {
        if residue_of(node, q) == i && is_above(added, node) {
            count -= 1;
        }
    }
    count
}

/// Signed count of addable minus removable i-nodes of `m` strictly above the
/// node removed to reach `removed_to`.
pub fn n_right(
    m: &Multipartition,
    removed_to: &Multipartition,
    i: Residue,
    q: &ChargeVector,
) -> i64 {
    let removed = m.node_removed_to(removed_to);
    assert_eq!(residue_of(removed, q), i, "residue mismatch for {removed}");
    let mut count = 0;
    for node in m.addable_nodes() {
        if residue_of(node, q) == i && is_above(node, removed) {
            count += 1;
        }
    }
    for node in m.removable_nodes() {
        if residue_of(node, q) == i && is_above(node, removed) {
            count -= 1;
        }
    }
    count
}

/// Number of addable minus number of removable i-nodes.
pub fn n_diag(m: &Multipartition, i: Residue, q: &ChargeVector) -> i64 {
    let add = m.addable_nodes().into_iter().filter(|&n| residue_of(n, q) == i).count() as i64;
    let rem = m.removable_nodes().into_iter().filter(|&n| residue_of(n, q) == i).count() as i64;
    add - rem
}

/// Number of nodes of residue zero.
pub fn n_zero(m: &Multipartition, q: &ChargeVector) -> usize {
    let zero = Residue::new(q.modulus(), 0);
    m.nodes().into_iter().filter(|&n| residue_of(n, q) == zero).count()
}

/// The lowering operator `f_i`, linearly extended.
pub fn apply_f(i: Residue, x: &FockVector, q: &ChargeVector) -> FockVector {
    let mut out = FockVector::zero();
    for (m, coeff) in x.terms() {
        for node in m.addable_nodes() {
            if residue_of(node, q) == i {
                let power = LaurentPoly::v_pow(n_left(m, node, i, q));
                out.add_term(m.add_node(node), coeff.mul(&power));
            }
        }
    }
    out
}

/// The raising operator `e_i`, linearly extended.
pub fn apply_e(i: Residue, x: &FockVector, q: &ChargeVector) -> FockVector {
    let mut out = FockVector::zero();
    for (m, coeff) in x.terms() {
        for node in m.removable_nodes() {
            if residue_of(node, q) == i {
                let smaller = m.remove_node(node);
                let power = LaurentPoly::v_pow(-n_right(m, &smaller, i, q));
                out.add_term(smaller, coeff.mul(&power));
            }
        }
    }
    out
}

/// The diagonal operator `k_i`.
pub fn apply_k(i: Residue, x: &FockVector, q: &ChargeVector) -> FockVector {
    let mut out = FockVector::zero();
    for (m, coeff) in x.terms() {
        out.add_term(m.clone(), coeff.mul(&LaurentPoly::v_pow(n_diag(m, i, q))));
    }
    out
}

/// The degree operator `k_d`.
pub fn apply_kd(x: &FockVector, q: &ChargeVector) -> FockVector {
    let mut out = FockVector::zero();
    for (m, coeff) in x.terms() {
        out.add_term(m.clone(), coeff.mul(&LaurentPoly::v_pow(-(n_zero(m, q) as i64))));
    }
    out
}

/// The balanced quantum integer `[k] = v^{k-1} + v^{k-3} + ... + v^{1-k}`.
pub fn quantum_integer(k: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..k).map(|j| (k as i64 - 1 - 2 * j as i64, 1)))
}

/// The quantum factorial `[a]! = [a][a-1]...[1]`.
pub fn quantum_factorial(a: u32) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for k in 1..=a {
        out = out.mul(&quantum_integer(k));
    }
    out
}

/// The divided power `f_i^(a)`: iterate `f_i` then divide by `[a]!`.
/// The division is exact for every input; a failure is an implementation bug
/// and panics rather than degrading silently.
pub fn apply_divided_f(i: Residue, a: u32, x: &FockVector, q: &ChargeVector) -> FockVector {
    let mut out = x.clone();
    for _ in 0..a {
        out = apply_f(i, &out, q);
    }
    out.exact_div(&quantum_factorial(a))
        .expect("divided power division must be exact")
}

/// Applies `f` along a residue sequence, first entry first.
pub fn apply_f_sequence(seq: &[Residue], q: &ChargeVector) -> FockVector {
    let mut out = FockVector::vacuum(q.r());
    for &i in seq {
        out = apply_f(i, &out, q);
    }
    out
}

/// The coefficient of `m` is nonzero and nothing else in the support is
/// strictly dominated by `m`.
fn support_certifies(x: &FockVector, m: &Multipartition) -> bool {
    !x.coeff(m).is_zero() && x.terms().all(|(mu, _)| mu == m || !dominates(m, mu))
}

/// `true` iff some f-monomial sends the vacuum to `m` plus terms not
/// strictly dominated by `m`. Only residue sequences of standard tableaux of
/// `m` can give the coefficient of `m` a nonzero value, so only those are
/// searched. Agrees with the tableau-side restrictedness test.
pub fn is_restricted_fock(m: &Multipartition, q: &ChargeVector) -> bool {
    residue_sequence_set(m, q)
        .iter()
        .any(|seq| support_certifies(&apply_f_sequence(seq, q), m))
}

/// Restricted multipartitions of size `n` through the Fock action, in
/// enumeration order. Expansions are shared across shapes via a prefix cache
/// of the f-monomials.
pub fn restricted_fock_set(r: usize, n: usize, q: &ChargeVector) -> Vec<Multipartition> {
    let shapes = enumerate_multipartitions(r, n);
    let seq_sets = level_sequence_sets(&shapes, q);
    let cache = expansion_cache(&seq_sets, q);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        shapes
            .par_iter()
            .zip(seq_sets.par_iter())
            .filter(|(m, seqs)| seqs.iter().any(|seq| support_certifies(&cache[seq], m)))
            .map(|(m, _)| m.clone())
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        shapes
            .iter()
            .zip(seq_sets.iter())
            .filter(|(m, seqs)| seqs.iter().any(|seq| support_certifies(&cache[seq], m)))
            .map(|(m, _)| m.clone())
            .collect()
    }
}

/// Sequential variant of [`restricted_fock_set`].
pub fn restricted_fock_set_seq(r: usize, n: usize, q: &ChargeVector) -> Vec<Multipartition> {
    let shapes = enumerate_multipartitions(r, n);
    let seq_sets: Vec<BTreeSet<Vec<Residue>>> =
        shapes.iter().map(|m| residue_sequence_set(m, q)).collect();
    let cache = expansion_cache(&seq_sets, q);
    shapes
        .iter()
        .zip(seq_sets.iter())
        .filter(|(m, seqs)| seqs.iter().any(|seq| support_certifies(&cache[seq], m)))
        .map(|(m, _)| m.clone())
        .collect()
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

fn expansion_cache(
    seq_sets: &[BTreeSet<Vec<Residue>>],
    q: &ChargeVector,
) -> HashMap<Vec<Residue>, FockVector> {
    let mut cache: HashMap<Vec<Residue>, FockVector> = HashMap::new();
    cache.insert(Vec::new(), FockVector::vacuum(q.r()));
    for seqs in seq_sets {
        for seq in seqs {
            for len in 1..=seq.len() {
                if cache.contains_key(&seq[..len]) {
                    continue;
                }
                let prev = cache[&seq[..len - 1]].clone();
                cache.insert(seq[..len].to_vec(), apply_f(seq[len - 1], &prev, q));
            }
        }
    }
    cache
}

/// Checks the straightening expansion for a strong-ladder schedule: the
/// divided-power monomial sends the vacuum to `m` with coefficient exactly
/// one, every other supported shape strictly precedes `m`, and every
/// coefficient has non-negative entries.
pub fn verify_straightening(
    m: &Multipartition,
    schedule: &[(Residue, usize)],
    q: &ChargeVector,
) -> bool {
    let total: usize = schedule.iter().map(|(_, a)| a).sum();
    assert_eq!(total, m.size(), "schedule does not account for every node of {m}");
    let mut x = FockVector::vacuum(q.r());
    for &(i, a) in schedule {
        x = apply_divided_f(i, a as u32, &x, q);
    }
    if x.coeff(m) != LaurentPoly::one() {
        return false;
    }
    let ok = x
        .terms()
        .all(|(mu, poly)| poly.is_nonnegative() && (mu == m || precedes(mu, m)));
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn laurent_basics() {
        let p = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
        assert_eq!(p.to_string(), "v^-1 + v");
        assert_eq!(p.eval_at_one(), 2);
        let q = p.mul(&p);
        assert_eq!(q, LaurentPoly::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(q.exact_div(&p), Some(p.clone()));
        assert_eq!(LaurentPoly::from_terms([(1, 1), (0, 1)]).exact_div(&p), None);
    }

    #[test]
    fn quantum_factorials() {
        assert_eq!(quantum_factorial(0), LaurentPoly::one());
        assert_eq!(quantum_factorial(1), LaurentPoly::one());
        assert_eq!(quantum_factorial(2), LaurentPoly::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(
            quantum_factorial(3),
            LaurentPoly::from_terms([(3, 1), (1, 2), (-1, 2), (-3, 1)])
        );
    }

    #[test]
    fn n_statistics_on_vacuum() {
        let q = ChargeVector::new(0, vec![0, 0]);
        let empty = Multipartition::empty(2);
        let zero = Residue::new(0, 0);
        assert_eq!(n_left(&empty, Node::new(1, 1, 1), zero, &q), 1);
        assert_eq!(n_left(&empty, Node::new(1, 1, 2), zero, &q), 0);
        assert_eq!(n_diag(&empty, zero, &q), 2);
        assert_eq!(n_zero(&empty, &q), 0);

        let q1 = ChargeVector::new(0, vec![5]);
        let m = mp("1");
        let below = Residue::new(0, 4);
        assert_eq!(n_left(&m, Node::new(2, 1, 1), below, &q1), 0);
    }

    #[test]
    fn n_right_mirrors() {
        let q = ChargeVector::new(0, vec![0, 0]);
        let zero = Residue::new(0, 0);
        let m = mp("-|1");
        let smaller = Multipartition::empty(2);
        assert_eq!(n_right(&m, &smaller, zero, &q), 1);
        let m2 = mp("1|-");
        assert_eq!(n_right(&m2, &smaller, zero, &q), 0);
        let q1 = ChargeVector::new(0, vec![0]);
        assert_eq!(n_right(&mp("1"), &Multipartition::empty(1), zero, &q1), 0);
    }

    #[test]
    fn n_zero_running_example() {
        let q = ChargeVector::new(4, vec![0, 2, 0]);
        assert_eq!(n_zero(&mp("2|4,2,2|5,2,1,1"), &q), 6);
    }

    #[test]
    fn f_action_on_vacuum() {
        let q = ChargeVector::new(0, vec![0, 0]);
        let zero = Residue::new(0, 0);
        let image = apply_f(zero, &FockVector::vacuum(2), &q);
        assert_eq!(image.coeff(&mp("1|-")), LaurentPoly::v_pow(1));
        assert_eq!(image.coeff(&mp("-|1")), LaurentPoly::one());
        assert_eq!(image.support_size(), 2);

        let q1 = ChargeVector::new(3, vec![1]);
        let hit = apply_f(Residue::new(3, 1), &FockVector::vacuum(1), &q1);
        assert_eq!(hit.coeff(&mp("1")), LaurentPoly::one());
        let miss = apply_f(Residue::new(3, 0), &FockVector::vacuum(1), &q1);
        assert!(miss.is_zero());
    }

    #[test]
    fn e_and_k_actions() {
        let q = ChargeVector::new(0, vec![0, 0]);
        let zero = Residue::new(0, 0);
        assert!(apply_e(zero, &FockVector::vacuum(2), &q).is_zero());
        let scaled = apply_k(zero, &FockVector::vacuum(2), &q);
        assert_eq!(scaled.coeff(&Multipartition::empty(2)), LaurentPoly::v_pow(2));

        let q1 = ChargeVector::new(0, vec![0]);
        let ef = apply_e(zero, &apply_f(zero, &FockVector::vacuum(1), &q1), &q1);
        assert_eq!(ef.coeff(&Multipartition::empty(1)), LaurentPoly::one());

        let kd = apply_kd(&FockVector::basis(mp("1")), &q1);
        assert_eq!(kd.coeff(&mp("1")), LaurentPoly::v_pow(-1));
    }

    #[test]
    fn divided_powers() {
        let q = ChargeVector::new(0, vec![0, 0]);
        let zero = Residue::new(0, 0);
        let vac = FockVector::vacuum(2);
        assert_eq!(apply_divided_f(zero, 0, &vac, &q), vac);
        assert_eq!(apply_divided_f(zero, 1, &vac, &q), apply_f(zero, &vac, &q));
        let squared = apply_divided_f(zero, 2, &vac, &q);
        assert_eq!(squared.coeff(&mp("1|1")), LaurentPoly::one());
        assert_eq!(squared.support_size(), 1);
    }

    #[test]
    fn restricted_fock_examples() {
        let q = ChargeVector::new(3, vec![0]);
        assert!(!is_restricted_fock(&mp("3"), &q));
        assert!(is_restricted_fock(&Multipartition::empty(1), &q));
        let q3 = ChargeVector::new(3, vec![2, 1, 0]);
        assert!(!is_restricted_fock(&mp("1|3,1|-"), &q3));
        assert!(is_restricted_fock(&mp("1|2,1|3,1"), &q3));
    }

    #[test]
    fn straightening_examples() {
        let q = ChargeVector::new(0, vec![0, 1]);
        assert!(verify_straightening(&Multipartition::empty(2), &[], &q));
        let schedule = [(Residue::new(0, 0), 1), (Residue::new(0, 1), 1)];
        assert!(verify_straightening(&mp("1|1"), &schedule, &q));
        // the two-step expansion is 1*(1|1) + v*(2|-)
        let x = apply_f_sequence(&[Residue::new(0, 0), Residue::new(0, 1)], &q);
        assert_eq!(x.coeff(&mp("1|1")), LaurentPoly::one());
        assert_eq!(x.coeff(&mp("2|-")), LaurentPoly::v_pow(1));
    }

    #[test]
    fn json_is_deterministic() {
        let q = ChargeVector::new(0, vec![0, 0]);
        let zero = Residue::new(0, 0);
        let x = apply_f(zero, &FockVector::vacuum(2), &q);
        assert_eq!(
            x.to_json(),
            "[{\"multipartition\":\"1|-\",\"poly\":{\"1\":1}},{\"multipartition\":\"-|1\",\"poly\":{\"0\":1}}]"
        );
    }
}
