//! Connectivity pairs `(L, C)`: a finite lattice with a distinguished set
//! of connected elements.
//!
//! `C(x)`, the components of `x`, are the maximal elements of `C ∩ x↓`.
//! The map `S ↦ ⋁S` from the exterior of `C` to `L` has a right adjoint
//! exactly when `C` is a subchainmail of `L`, and the adjoint is then
//! `x ↦ C(x)`.

mod absolute;
mod borger;
mod sigma;
mod taxonomy;

use crate::bitset::ElementSet;
use crate::error::{ChainmailError, Result};
use crate::exterior::{domination_order, tmd_subsets, SetFamily, TmdFamily};
use crate::limits::Limits;
use crate::poset::{FinitePoset, Lattice};

pub use absolute::{absolutely_connected_elements, frame_equivalence_check, ESummary};
pub use borger::{
    borger_implication_check, is_multicoreflective, is_multicoreflective_literal, is_orthogonal, local_join,
    local_joins, BorgerReport,
};
pub use sigma::SigmaClosure;
pub use taxonomy::{classify, classify_with_limits, AdjointView, TaxonomyReport, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityPair {
    lattice: Lattice,
    c: ElementSet,
}

/// Whether `c` is closed under joins of its own mails in `l`.
pub fn is_subchainmail_of(l: &FinitePoset, c: &ElementSet) -> bool {
    l.is_subchainmail(c)
}

impl ConnectivityPair {
    pub fn new(poset: FinitePoset, c: ElementSet) -> Result<Self> {
        poset.check_set(&c)?;
        Ok(ConnectivityPair {
            lattice: Lattice::new(poset)?,
            c,
        })
    }

    /// Panics if `c` mentions an element outside the lattice.
    pub fn from_lattice(lattice: Lattice, c: ElementSet) -> Self {
        assert!(c.within(lattice.len()), "connected set out of range");
        ConnectivityPair { lattice, c }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn poset(&self) -> &FinitePoset {
        self.lattice.poset()
    }

    /// The connected elements.
    pub fn c(&self) -> &ElementSet {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn with_c(&self, c: ElementSet) -> Result<Self> {
        self.poset().check_set(&c)?;
        Ok(ConnectivityPair {
            lattice: self.lattice.clone(),
            c,
        })
    }

    /// `C` under the induced order.
    pub fn c_poset(&self) -> FinitePoset {
        self.poset().induced(&self.c)
    }

    /// `C` is a subchainmail of `L`, i.e. `(L, C)` is a connectivity lattice.
    pub fn is_connectivity(&self) -> bool {
        self.poset().is_subchainmail(&self.c)
    }

    pub fn connectivity_witness(&self) -> Option<(usize, usize)> {
        self.poset().subchainmail_witness(&self.c)
    }

    /// `C` is a chainmail in its induced order.
    pub fn is_preconnectivity(&self) -> bool {
        self.preconnectivity_witness().is_none()
    }

    /// A pair of connected elements (in `L` numbering) with a common
    /// connected lower bound and no least connected upper bound.
    pub fn preconnectivity_witness(&self) -> Option<(usize, usize)> {
        let members = self.c.to_vec();
        self.c_poset()
            .chainmail_witness()
            .map(|(a, b)| (members[a], members[b]))
    }

    /// `C(x)`: the maximal connected elements below `x`.
    pub fn components(&self, x: usize) -> ElementSet {
        let p = self.poset();
        p.maximal_in(&p.down(x).intersection(&self.c))
    }

    /// `⋁C(x)`.
    pub fn kernel(&self, x: usize) -> usize {
        self.lattice.join_all(&self.components(x))
    }

    /// No two members of `s` share a connected lower bound.
    pub fn is_tmd_in_c(&self, s: &ElementSet) -> bool {
        let p = self.poset();
        let v = s.to_vec();
        v.iter().enumerate().all(|(i, &a)| {
            let below = p.down(a).intersection(&self.c);
            v[i + 1..].iter().all(|&b| !below.intersects(p.down(b)))
        })
    }

    /// `D(C)`: subsets of `C` that are totally mail-disconnected in `C`,
    /// in `L` numbering, sorted by size then lexicographically.
    pub fn dc_sets(&self, limits: &Limits) -> Result<Vec<ElementSet>> {
        tmd_subsets(self.poset(), &self.c, limits)
    }

    /// `D(C)` with its domination order, as an exterior over `L`'s
    /// numbering.
    pub fn dc_family(&self, limits: &Limits) -> Result<TmdFamily> {
        let sets = self.dc_sets(limits)?;
        let order = domination_order(self.poset(), &sets)?;
        Ok(TmdFamily {
            base: self.poset().clone(),
            family: SetFamily { order, sets },
        })
    }

    /// An element `x` at which `{S ∈ D(C) | ⋁S <= x}` has no greatest
    /// member.
    ///
    /// Any greatest member must dominate every connected element below `x`
    /// while staying below `x`, which forces it to be `C(x)`. So the right
    /// adjoint exists iff every `C(x)` lies in `D(C)`.
    pub fn adjunction_witness(&self) -> Option<usize> {
        self.poset()
            .elements()
            .find(|&x| !self.is_tmd_in_c(&self.components(x)))
    }

    pub fn galois_adjunction_holds(&self) -> bool {
        self.adjunction_witness().is_none()
    }

    fn require_adjunction(&self) -> Result<()> {
        if self.galois_adjunction_holds() {
            Ok(())
        } else {
            Err(ChainmailError::precondition(
                "the connectivity adjunction does not exist",
            ))
        }
    }

    /// The bottom element is connected.
    pub fn cl0(&self) -> bool {
        self.c.contains(self.lattice.bottom())
    }

    /// A pair of connected elements with a nonzero common lower bound whose
    /// join is not connected. Checking pairs suffices: folding a larger set
    /// in one element at a time keeps the common lower bound.
    pub fn cl1_witness(&self) -> Option<(usize, usize)> {
        let l = &self.lattice;
        for a in self.c.iter() {
            for b in self.c.iter().filter(|&b| b > a) {
                if l.meet(a, b) != l.bottom() && !self.c.contains(l.join(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn cl1(&self) -> bool {
        self.cl1_witness().is_none()
    }

    /// `(x, y)` with `0 < x <= y` such that the connected elements of
    /// `[x, y]` exist but have no largest one.
    pub fn cl1_prime_witness(&self) -> Option<(usize, usize)> {
        let p = self.poset();
        for x in self.lattice.positive().iter() {
            let above = p.up(x).intersection(&self.c);
            for y in p.up(x).iter() {
                let interval = above.intersection(p.down(y));
                if !interval.is_empty() && p.greatest_of(&interval).is_none() {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn cl1_prime(&self) -> bool {
        self.cl1_prime_witness().is_none()
    }

    /// A nonzero element with no connected element below it.
    pub fn cl1_half_witness(&self) -> Option<usize> {
        self.lattice
            .positive()
            .iter()
            .find(|&a| !self.poset().down(a).intersects(&self.c))
    }

    pub fn cl1_half(&self) -> bool {
        self.cl1_half_witness().is_none()
    }

    /// An element that is not the join of the connected elements below it.
    pub fn cl2_witness(&self) -> Option<usize> {
        self.poset()
            .elements()
            .find(|&a| self.lattice.join_all(&self.poset().down(a).intersection(&self.c)) != a)
    }

    pub fn cl2(&self) -> bool {
        self.cl2_witness().is_none()
    }

    /// A set in `D(C)` that differs from the components of its join.
    pub fn cl3_witness(&self, limits: &Limits) -> Result<Option<ElementSet>> {
        Ok(self
            .dc_sets(limits)?
            .into_iter()
            .find(|s| self.components(self.lattice.join_all(s)) != *s))
    }

    pub fn cl3(&self, limits: &Limits) -> Result<bool> {
        Ok(self.cl3_witness(limits)?.is_none())
    }

    /// The right adjoint is a left inverse of `⋁`. Needs the adjunction.
    pub fn is_separated(&self, limits: &Limits) -> Result<bool> {
        self.require_adjunction()?;
        self.cl3(limits)
    }

    /// `S ↦ ⋁S` is an order isomorphism from `D(C)` onto `L`. Needs the
    /// adjunction.
    pub fn is_absolute(&self, limits: &Limits) -> Result<bool> {
        self.require_adjunction()?;
        let sets = self.dc_sets(limits)?;
        if sets.len() != self.len() {
            return Ok(false);
        }
        let joins: Vec<usize> = sets.iter().map(|s| self.lattice.join_all(s)).collect();
        let hit: ElementSet = joins.iter().copied().collect();
        if hit.len() != self.len() {
            return Ok(false);
        }
        let p = self.poset();
        let closures: Vec<ElementSet> = sets.iter().map(|s| p.down_closure(s)).collect();
        for (i, s) in sets.iter().enumerate() {
            for (j, cl) in closures.iter().enumerate() {
                if s.is_subset(cl) != p.leq(joins[i], joins[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `C = L`.
    pub fn is_degenerate(&self) -> bool {
        self.c == self.poset().all()
    }

    pub fn sigma_closure(&self) -> SigmaClosure {
        SigmaClosure::of(self)
    }
}
