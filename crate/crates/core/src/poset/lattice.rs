//! Finite (hence complete) lattices with precomputed operation tables.

use std::sync::{Arc, OnceLock};

use crate::bitset::ElementSet;
use crate::error::{ChainmailError, Result};
use crate::limits::Limits;

use super::FinitePoset;

/// A set that is totally mail-disconnected in `L \ {0}` (pairwise meets are
/// the bottom), together with its join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveTmd {
    pub set: ElementSet,
    pub join: usize,
}

#[derive(Debug, Clone)]
pub struct Lattice {
    poset: FinitePoset,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
    positive_tmd: OnceLock<Arc<Vec<PositiveTmd>>>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

impl Eq for Lattice {}

impl Lattice {
    /// Fails with [`ChainmailError::NotCompleteLattice`] unless every pair
    /// has a join and a bottom exists. The empty poset is not a lattice.
    pub fn new(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        let bottom = poset.bottom().ok_or(ChainmailError::NotCompleteLattice)?;
        let top = poset.top().ok_or(ChainmailError::NotCompleteLattice)?;
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let j = poset.join2(a, b).ok_or(ChainmailError::NotCompleteLattice)?;
                // meets exist in any finite poset with a bottom and all joins
                let m = poset.meet2(a, b).ok_or(ChainmailError::NotCompleteLattice)?;
                for (x, y) in [(a, b), (b, a)] {
                    join[x * n + y] = j as u32;
                    meet[x * n + y] = m as u32;
                }
            }
        }
        Ok(Lattice {
            poset,
            join,
            meet,
            bottom,
            top,
            positive_tmd: OnceLock::new(),
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn into_poset(self) -> FinitePoset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    /// Always false: a lattice has a bottom.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn join_all(&self, xs: &ElementSet) -> usize {
        xs.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: &ElementSet) -> usize {
        xs.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `L \ {0}`.
    pub fn positive(&self) -> ElementSet {
        let mut all = self.poset.all();
        all.remove(self.bottom);
        all
    }

    pub fn atoms(&self) -> ElementSet {
        self.poset.upper_covers(self.bottom)
    }

    /// Every nonzero element lies above an atom.
    pub fn is_atomic(&self) -> bool {
        let atoms = self.atoms();
        self.positive().iter().all(|x| self.poset.down(x).intersects(&atoms))
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        self.poset
            .elements()
            .all(|x| self.join_all(&self.poset.down(x).intersection(&atoms)) == x)
    }

    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Distributive and complemented.
    pub fn is_boolean(&self) -> bool {
        self.is_distributive()
            && (0..self.len())
                .all(|x| (0..self.len()).any(|y| self.join(x, y) == self.top && self.meet(x, y) == self.bottom))
    }

    /// Every subset of `L \ {0}` whose members pairwise meet in the bottom,
    /// including the empty set, in lexicographic order.
    ///
    /// The family is computed once per lattice and shared afterwards; the
    /// first call fails if it would exceed `limits.max_family`.
    pub fn positive_tmd_sets(&self, limits: &Limits) -> Result<Arc<Vec<PositiveTmd>>> {
        if let Some(found) = self.positive_tmd.get() {
            return Ok(found.clone());
        }
        let positive = self.positive().to_vec();
        let mut out = Vec::new();
        let mut stack = vec![(ElementSet::new(), self.bottom, 0usize)];
        while let Some((set, join, from)) = stack.pop() {
            out.push(PositiveTmd { set: set.clone(), join });
            limits.check_family(out.len())?;
            // push in reverse so the pop order is lexicographic
            for i in (from..positive.len()).rev() {
                let x = positive[i];
                if set.iter().all(|s| self.meet(s, x) == self.bottom) {
                    let mut next = set.clone();
                    next.insert(x);
                    stack.push((next, self.join(join, x), i + 1));
                }
            }
        }
        let shared = Arc::new(out);
        Ok(self.positive_tmd.get_or_init(|| shared).clone())
    }
}
