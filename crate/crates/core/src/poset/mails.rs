//! Mails, mail-connectivity and the chainmail property.
//!
//! A mail is a non-empty set with a common lower bound. In a finite poset
//! every mail has a join as soon as every two-element mail does: folding the
//! members in one at a time, each partial join stays above the common lower
//! bound, so each step joins a two-element mail.

use crate::bitset::ElementSet;
use crate::error::{ChainmailError, Result};

use super::FinitePoset;

impl FinitePoset {
    /// `a` and `b` have a common lower bound.
    #[inline]
    pub fn shares_lower_bound(&self, a: usize, b: usize) -> bool {
        self.down(a).intersects(self.down(b))
    }

    /// Non-empty with a common lower bound.
    pub fn is_mail(&self, xs: &ElementSet) -> bool {
        !xs.is_empty() && !self.lower_bounds(xs).is_empty()
    }

    /// Partition of `xs` into classes of the "shares a lower bound"
    /// relation's transitive closure, ordered by least member.
    pub fn mail_connected_components(&self, xs: &ElementSet) -> Vec<ElementSet> {
        let mut rest = xs.clone();
        let mut out = Vec::new();
        while let Some(seed) = rest.first() {
            let mut comp = ElementSet::singleton(seed);
            // below = union of down-sets of the component so far
            let mut below = self.down(seed).clone();
            rest.remove(seed);
            loop {
                let joined: ElementSet = rest.iter().filter(|&y| self.down(y).intersects(&below)).collect();
                if joined.is_empty() {
                    break;
                }
                for y in joined.iter() {
                    below.union_with(self.down(y));
                }
                comp.union_with(&joined);
                rest.difference_with(&joined);
            }
            out.push(comp);
        }
        out
    }

    /// Non-empty and connected by two-element mails.
    pub fn is_mail_connected(&self, xs: &ElementSet) -> bool {
        !xs.is_empty() && self.mail_connected_components(xs).len() == 1
    }

    /// No two distinct members share a lower bound. The empty set counts.
    pub fn is_totally_mail_disconnected(&self, xs: &ElementSet) -> bool {
        let v = xs.to_vec();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| !self.shares_lower_bound(a, b)))
    }

    /// Connected components of the comparability graph on `xs`.
    pub fn order_components_of(&self, xs: &ElementSet) -> Vec<ElementSet> {
        let mut rest = xs.clone();
        let mut out = Vec::new();
        while let Some(seed) = rest.first() {
            let mut comp = ElementSet::new();
            let mut frontier = ElementSet::singleton(seed);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                rest.difference_with(&frontier);
                let mut next = ElementSet::new();
                for y in frontier.iter() {
                    next.union_with(&self.down(y).intersection(&rest));
                    next.union_with(&self.up(y).intersection(&rest));
                }
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    pub fn order_connected_components(&self) -> Vec<ElementSet> {
        self.order_components_of(&self.all())
    }

    /// Exactly one connected component (so the empty poset is not connected).
    pub fn is_order_connected(&self) -> bool {
        self.order_connected_components().len() == 1
    }

    /// Every antichain with at least two members and a common lower bound,
    /// in lexicographic order of member lists. Lazy: the number of such
    /// antichains can be exponential.
    pub fn reduced_mails(&self) -> ReducedMails<'_> {
        ReducedMails {
            poset: self,
            stack: vec![Frame {
                set: ElementSet::new(),
                lower: self.all(),
                blocked: ElementSet::new(),
                next: 0,
            }],
        }
    }

    /// First incomparable pair with a common lower bound and no join.
    pub fn chainmail_witness(&self) -> Option<(usize, usize)> {
        for a in self.elements() {
            let incomparable = self.all().difference(self.up(a)).difference(self.down(a));
            for b in incomparable.iter().filter(|&b| b > a) {
                if self.shares_lower_bound(a, b) && self.join2(a, b).is_none() {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Every mail has a join. Checked on two-element mails; see the module
    /// docs for why that suffices.
    pub fn is_chainmail(&self) -> bool {
        self.chainmail_witness().is_none()
    }

    /// The same property checked over every reduced mail. Exponential; kept
    /// as an independent route for cross-checking.
    pub fn is_chainmail_by_reduced_mails(&self) -> bool {
        self.reduced_mails().all(|m| self.join(&m).is_some())
    }

    /// First incomparable pair in `c` with a common lower bound in `c` whose
    /// join is missing from `self` or lies outside `c`.
    pub fn subchainmail_witness(&self, c: &ElementSet) -> Option<(usize, usize)> {
        for a in c.iter() {
            let below_a = self.down(a).intersection(c);
            for b in c.iter().filter(|&b| b > a && !self.comparable(a, b)) {
                if below_a.intersects(self.down(b)) {
                    match self.join2(a, b) {
                        Some(j) if c.contains(j) => {}
                        _ => return Some((a, b)),
                    }
                }
            }
        }
        None
    }

    /// `c` is closed under joins (taken in `self`) of its own mails, where a
    /// mail of `c` needs a common lower bound inside `c`. Pairs suffice for
    /// the same folding reason as for [`is_chainmail`](Self::is_chainmail).
    pub fn is_subchainmail(&self, c: &ElementSet) -> bool {
        self.subchainmail_witness(c).is_none()
    }

    /// Every subset has a join. Needs a bottom and all pairwise joins.
    pub fn is_complete_lattice(&self) -> bool {
        if self.bottom().is_none() {
            return false;
        }
        self.elements()
            .all(|a| (a + 1..self.n).all(|b| self.join2(a, b).is_some()))
    }

    /// Distributivity of a complete lattice.
    pub fn is_distributive(&self) -> Result<bool> {
        Ok(self.distributivity_witness()?.is_none())
    }

    /// A triple `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_witness(&self) -> Result<Option<(usize, usize, usize)>> {
        if !self.is_complete_lattice() {
            return Err(ChainmailError::NotCompleteLattice);
        }
        Ok(super::Lattice::new(self.clone())?.distributivity_witness())
    }
}

struct Frame {
    set: ElementSet,
    lower: ElementSet,
    /// Elements comparable to some member.
    blocked: ElementSet,
    next: usize,
}

/// Iterator returned by [`FinitePoset::reduced_mails`].
pub struct ReducedMails<'a> {
    poset: &'a FinitePoset,
    stack: Vec<Frame>,
}

impl Iterator for ReducedMails<'_> {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let p = self.poset;
        loop {
            let top = self.stack.last_mut()?;
            if top.next >= p.len() {
                self.stack.pop();
                continue;
            }
            let x = top.next;
            top.next += 1;
            if top.blocked.contains(x) {
                continue;
            }
            let lower = top.lower.intersection(p.down(x));
            if lower.is_empty() {
                continue;
            }
            let mut set = top.set.clone();
            set.insert(x);
            let mut blocked = top.blocked.union(p.down(x));
            blocked.union_with(p.up(x));
            let emit = set.len() >= 2;
            self.stack.push(Frame {
                set: set.clone(),
                lower,
                blocked,
                next: x + 1,
            });
            if emit {
                return Some(set);
            }
        }
    }
}
