//! Finite posets stored as dense bit matrices.
//!
//! Elements are `0..n`. Every [`FinitePoset`] is validated on construction
//! and immutable afterwards, so it can be shared freely across threads.

mod canonical;
mod lattice;
mod mails;

use std::fmt;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{ChainmailError, Result};

pub use canonical::{CanonicalKey, Labeling};
pub use lattice::{Lattice, PositiveTmd};
pub use mails::ReducedMails;

/// The first poset axiom that fails, with the smallest witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "lowercase")]
pub enum Violation {
    Reflexivity { element: usize },
    Antisymmetry { a: usize, b: usize },
    Transitivity { a: usize, b: usize, c: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Reflexivity { element } => {
                write!(f, "reflexivity fails at {element}: not {element} <= {element}")
            }
            Violation::Antisymmetry { a, b } => {
                write!(f, "antisymmetry fails for ({a}, {b}): {a} <= {b} and {b} <= {a}")
            }
            Violation::Transitivity { a, b, c } => write!(
                f,
                "transitivity fails for ({a}, {b}, {c}): {a} <= {b} and {b} <= {c} but not {a} <= {c}"
            ),
        }
    }
}

/// An unchecked binary relation on `0..n`; `row(a)` holds every `b` with
/// `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    rows: Vec<ElementSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            n,
            rows: vec![ElementSet::new(); n],
        }
    }

    /// Builds the relation from `(a, b)` pairs meaning `a <= b`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Relation::empty(n);
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(ChainmailError::IndexOutOfRange { index: x, n });
                }
            }
            rel.rows[a].insert(b);
        }
        Ok(rel)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn set(&mut self, a: usize, b: usize) {
        self.rows[a].insert(b);
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn close_reflexive(&mut self) {
        for (a, row) in self.rows.iter_mut().enumerate() {
            row.insert(a);
        }
    }

    /// Warshall's algorithm over bit rows.
    pub fn close_transitive(&mut self) {
        for k in 0..self.n {
            let row_k = self.rows[k].clone();
            for a in 0..self.n {
                if a != k && self.rows[a].contains(k) {
                    self.rows[a].union_with(&row_k);
                }
            }
        }
    }

    /// Checks reflexivity, antisymmetry and transitivity in that order,
    /// reporting the lexicographically least witness of the first failure.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        if let Some(element) = (0..self.n).find(|&a| !self.get(a, a)) {
            return Err(Violation::Reflexivity { element });
        }
        for a in 0..self.n {
            for b in self.rows[a].iter() {
                if b > a && self.get(b, a) {
                    return Err(Violation::Antisymmetry { a, b });
                }
            }
        }
        for a in 0..self.n {
            for b in self.rows[a].iter() {
                let missing = self.rows[b].difference(&self.rows[a]);
                if let Some(c) = missing.first() {
                    return Err(Violation::Transitivity { a, b, c });
                }
            }
        }
        Ok(())
    }
}

/// A finite partially ordered set on `0..n`.
///
/// Both the down-set and the up-set of every element are kept as bit rows,
/// so lower- and upper-bound queries are word-wise intersections.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    n: usize,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("n", &self.n)
            .field("covers", &self.covers())
            .finish()
    }
}

impl FinitePoset {
    pub fn from_relation(rel: Relation) -> Result<Self> {
        rel.validate().map_err(ChainmailError::InvalidPoset)?;
        Ok(Self::from_valid_rows(rel.rows))
    }

    /// `rows[a]` is the up-set of `a`; the caller guarantees the axioms.
    pub(crate) fn from_valid_rows(up: Vec<ElementSet>) -> Self {
        let n = up.len();
        let mut down = vec![ElementSet::new(); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.iter() {
                down[b].insert(a);
            }
        }
        FinitePoset { n, down, up }
    }

    /// Pairs `(a, b)` mean `a <= b`; reflexive pairs are implied, the
    /// relation must already be transitive.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Relation::from_pairs(n, pairs)?;
        rel.close_reflexive();
        Self::from_relation(rel)
    }

    /// Closes a cover (Hasse) list reflexively and transitively.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Relation::from_pairs(n, covers)?;
        rel.close_reflexive();
        rel.close_transitive();
        Self::from_relation(rel)
    }

    /// Builds the order `a <= b iff leq(a, b)`; fails if that is not a
    /// partial order.
    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut rel = Relation::empty(n);
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    rel.set(a, b);
                }
            }
        }
        Self::from_relation(rel)
    }

    pub fn empty() -> Self {
        Self::antichain(0)
    }

    pub fn chain(n: usize) -> Self {
        let up = (0..n).map(|a| (a..n).collect()).collect();
        Self::from_valid_rows(up)
    }

    pub fn antichain(n: usize) -> Self {
        let up = (0..n).map(ElementSet::singleton).collect();
        Self::from_valid_rows(up)
    }

    /// Side-by-side union; elements of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &FinitePoset) -> FinitePoset {
        let shift = self.n;
        let mut up = self.up.clone();
        up.extend(other.up.iter().map(|row| row.map(|b| b + shift)));
        Self::from_valid_rows(up)
    }

    /// Every element of `self` placed below every element of `other`.
    pub fn ordinal_sum(&self, other: &FinitePoset) -> FinitePoset {
        let shift = self.n;
        let upper: ElementSet = (shift..shift + other.n).collect();
        let mut up: Vec<ElementSet> = self.up.iter().map(|row| row.union(&upper)).collect();
        up.extend(other.up.iter().map(|row| row.map(|b| b + shift)));
        Self::from_valid_rows(up)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{y | y <= x}`; panics if `x` is out of range.
    #[inline]
    pub fn down(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }

    /// `{y | x <= y}`; panics if `x` is out of range.
    #[inline]
    pub fn up(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(ChainmailError::IndexOutOfRange { index: x, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, s: &ElementSet) -> Result<()> {
        match s.last() {
            Some(m) if m >= self.n => Err(ChainmailError::IndexOutOfRange { index: m, n: self.n }),
            _ => Ok(()),
        }
    }

    pub fn down_set(&self, x: usize) -> Result<ElementSet> {
        self.check_index(x)?;
        Ok(self.down[x].clone())
    }

    pub fn up_set(&self, x: usize) -> Result<ElementSet> {
        self.check_index(x)?;
        Ok(self.up[x].clone())
    }

    pub fn strict_down(&self, x: usize) -> ElementSet {
        let mut s = self.down[x].clone();
        s.remove(x);
        s
    }

    pub fn strict_up(&self, x: usize) -> ElementSet {
        let mut s = self.up[x].clone();
        s.remove(x);
        s
    }

    /// Common lower bounds of `xs`; every element when `xs` is empty.
    pub fn lower_bounds(&self, xs: &ElementSet) -> ElementSet {
        let mut acc = self.all();
        for x in xs.iter() {
            acc.intersect_with(&self.down[x]);
        }
        acc
    }

    /// Common upper bounds of `xs`; every element when `xs` is empty.
    pub fn upper_bounds(&self, xs: &ElementSet) -> ElementSet {
        let mut acc = self.all();
        for x in xs.iter() {
            acc.intersect_with(&self.up[x]);
        }
        acc
    }

    /// `⋃ x↓` over `xs`.
    pub fn down_closure(&self, xs: &ElementSet) -> ElementSet {
        let mut acc = ElementSet::new();
        for x in xs.iter() {
            acc.union_with(&self.down[x]);
        }
        acc
    }

    pub fn up_closure(&self, xs: &ElementSet) -> ElementSet {
        let mut acc = ElementSet::new();
        for x in xs.iter() {
            acc.union_with(&self.up[x]);
        }
        acc
    }

    pub fn is_down_closed(&self, xs: &ElementSet) -> bool {
        xs.iter().all(|x| self.down[x].is_subset(xs))
    }

    pub fn is_up_closed(&self, xs: &ElementSet) -> bool {
        xs.iter().all(|x| self.up[x].is_subset(xs))
    }

    /// The least element of `candidates`, i.e. one below all the others.
    pub fn least_of(&self, candidates: &ElementSet) -> Option<usize> {
        candidates.iter().find(|&u| candidates.is_subset(&self.up[u]))
    }

    pub fn greatest_of(&self, candidates: &ElementSet) -> Option<usize> {
        candidates.iter().find(|&u| candidates.is_subset(&self.down[u]))
    }

    /// Least upper bound of `xs`. The join of `∅` is the bottom element.
    pub fn join(&self, xs: &ElementSet) -> Option<usize> {
        self.least_of(&self.upper_bounds(xs))
    }

    /// Greatest lower bound of `xs`. The meet of `∅` is the top element.
    pub fn meet(&self, xs: &ElementSet) -> Option<usize> {
        self.greatest_of(&self.lower_bounds(xs))
    }

    pub fn join2(&self, a: usize, b: usize) -> Option<usize> {
        self.least_of(&self.up[a].intersection(&self.up[b]))
    }

    pub fn meet2(&self, a: usize, b: usize) -> Option<usize> {
        self.greatest_of(&self.down[a].intersection(&self.down[b]))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.join(&ElementSet::new())
    }

    pub fn top(&self) -> Option<usize> {
        self.meet(&ElementSet::new())
    }

    /// Maximal members of `xs` with respect to the induced order.
    pub fn maximal_in(&self, xs: &ElementSet) -> ElementSet {
        xs.iter().filter(|&x| self.up[x].intersection(xs).len() == 1).collect()
    }

    pub fn minimal_in(&self, xs: &ElementSet) -> ElementSet {
        xs.iter()
            .filter(|&x| self.down[x].intersection(xs).len() == 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> ElementSet {
        self.elements().filter(|&x| self.up[x].len() == 1).collect()
    }

    pub fn minimal_elements(&self) -> ElementSet {
        self.elements().filter(|&x| self.down[x].len() == 1).collect()
    }

    pub fn is_antichain(&self, xs: &ElementSet) -> bool {
        xs.iter().all(|x| self.up[x].intersection(xs).len() == 1)
    }

    pub fn is_chain(&self, xs: &ElementSet) -> bool {
        let v = xs.to_vec();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    /// Upper covers of `x`: elements `y > x` with nothing strictly between.
    pub fn upper_covers(&self, x: usize) -> ElementSet {
        self.minimal_in(&self.strict_up(x))
    }

    pub fn lower_covers(&self, x: usize) -> ElementSet {
        self.maximal_in(&self.strict_down(x))
    }

    /// The cover relation, sorted by `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.elements()
            .flat_map(|a| self.upper_covers(a).iter().map(move |b| (a, b)).collect::<Vec<_>>())
            .collect()
    }

    /// All strict pairs `a < b`, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        self.elements()
            .flat_map(|a| {
                self.up[a]
                    .iter()
                    .filter(move |&b| b != a)
                    .map(move |b| (a, b))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Length of the longest chain ending at each element (minimal elements
    /// have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.elements().collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut h = vec![0; self.n];
        for &x in &order {
            h[x] = self.strict_down(x).iter().map(|y| h[y] + 1).max().unwrap_or(0);
        }
        h
    }

    /// The subposet on `xs`; element `i` of the result is the `i`-th
    /// smallest member of `xs`.
    pub fn induced(&self, xs: &ElementSet) -> FinitePoset {
        let members = xs.to_vec();
        let up = members
            .iter()
            .map(|&a| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.leq(a, b))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Self::from_valid_rows(up)
    }

    /// The isomorphic copy in which element `x` is renamed `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FinitePoset {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut up = vec![ElementSet::new(); self.n];
        for a in self.elements() {
            up[perm[a]] = self.up[a].map(|b| perm[b]);
        }
        Self::from_valid_rows(up)
    }

    /// The order dual.
    pub fn dual(&self) -> FinitePoset {
        Self::from_valid_rows(self.down.clone())
    }

    /// A copy with a new maximal element whose strict down-set is `below`.
    /// `below` must be down-closed.
    pub fn with_maximal(&self, below: &ElementSet) -> Result<FinitePoset> {
        self.check_set(below)?;
        if !self.is_down_closed(below) {
            return Err(ChainmailError::precondition(
                "strict down-set of a new element must be down-closed",
            ));
        }
        let x = self.n;
        let mut up = self.up.clone();
        for b in below.iter() {
            up[b].insert(x);
        }
        up.push(ElementSet::singleton(x));
        Ok(Self::from_valid_rows(up))
    }

    /// Adjoins a new least element, numbered 0; old elements shift by one.
    pub fn with_new_bottom(&self) -> FinitePoset {
        FinitePoset::chain(1).ordinal_sum(self)
    }

    /// Adjoins a new greatest element, numbered `n`.
    pub fn with_new_top(&self) -> FinitePoset {
        self.ordinal_sum(&FinitePoset::chain(1))
    }

    /// Subposet obtained by deleting `x`; later elements shift down.
    pub fn without(&self, x: usize) -> FinitePoset {
        let keep: ElementSet = self.elements().filter(|&y| y != x).collect();
        self.induced(&keep)
    }
}
