//! The connectedness predicates E1–E4 on elements of a lattice.
//!
//! Below, "TMD in L⁺" means a set of nonzero elements whose pairwise meets
//! are the bottom. E4 elements are the absolutely connected ones.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{ChainmailError, Result};
use crate::limits::Limits;
use crate::poset::Lattice;

/// The elements satisfying each predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ESummary {
    pub e1: ElementSet,
    pub e2: ElementSet,
    pub e3: ElementSet,
    pub e4: ElementSet,
}

impl Lattice {
    /// `a != 0`, and `a <= x ∨ y` with `x ∧ y = 0` forces `a <= x` or `a <= y`.
    pub fn e1(&self, a: usize) -> bool {
        if a == self.bottom() {
            return false;
        }
        let n = self.len();
        (0..n).all(|x| {
            (x..n).all(|y| {
                self.meet(x, y) != self.bottom() || !self.leq(a, self.join(x, y)) || self.leq(a, x) || self.leq(a, y)
            })
        })
    }

    /// `a != 0`, and `a = x ∨ y` with `x ∧ y = 0` forces `x = a` or `y = a`.
    pub fn e2(&self, a: usize) -> bool {
        if a == self.bottom() {
            return false;
        }
        let n = self.len();
        (0..n).all(|x| (x..n).all(|y| self.meet(x, y) != self.bottom() || self.join(x, y) != a || x == a || y == a))
    }

    /// Whenever `a` is the join of a set TMD in L⁺, it belongs to that set.
    pub fn e3(&self, a: usize, limits: &Limits) -> Result<bool> {
        Ok(self
            .positive_tmd_sets(limits)?
            .iter()
            .all(|t| t.join != a || t.set.contains(a)))
    }

    /// Whenever `a` is below the join of a set TMD in L⁺, it is below a
    /// member of that set.
    pub fn e4(&self, a: usize, limits: &Limits) -> Result<bool> {
        let p = self.poset();
        Ok(self
            .positive_tmd_sets(limits)?
            .iter()
            .all(|t| !p.leq(a, t.join) || t.set.iter().any(|s| p.leq(a, s))))
    }

    /// All four predicates at once, sharing one pass over the TMD family.
    pub fn e_summary(&self, limits: &Limits) -> Result<ESummary> {
        let p = self.poset();
        let all = p.all();
        let mut e3 = self.positive();
        let mut e4 = self.positive();
        for t in self.positive_tmd_sets(limits)?.iter() {
            if !t.set.contains(t.join) {
                e3.remove(t.join);
            }
            e4.difference_with(&p.down(t.join).difference(&p.down_closure(&t.set)));
        }
        Ok(ESummary {
            e1: all.iter().filter(|&a| self.e1(a)).collect(),
            e2: all.iter().filter(|&a| self.e2(a)).collect(),
            e3,
            e4,
        })
    }
}

/// The E4 elements.
pub fn absolutely_connected_elements(l: &Lattice, limits: &Limits) -> Result<ElementSet> {
    Ok(l.e_summary(limits)?.e4)
}

/// On a distributive lattice, checks that E1, E2, E3 and E4 select the
/// same elements.
pub fn frame_equivalence_check(l: &Lattice, limits: &Limits) -> Result<bool> {
    if !l.is_distributive() {
        return Err(ChainmailError::precondition("the lattice is not distributive"));
    }
    let e = l.e_summary(limits)?;
    Ok(e.e1 == e.e2 && e.e2 == e.e3 && e.e3 == e.e4)
}
