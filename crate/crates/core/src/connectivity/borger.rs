//! Sinks, orthogonality, multicoreflective subsets and local joins in an
//! arbitrary finite poset.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{ChainmailError, Result};
use crate::limits::Limits;
use crate::poset::FinitePoset;

/// `c <= x` iff `c` is below exactly one member of `b`. The sink `(x, b)`
/// needs `b ⊆ x↓`.
pub fn is_orthogonal(p: &FinitePoset, c: usize, x: usize, b: &ElementSet) -> Result<bool> {
    p.check_set(b)?;
    let down_x = p.down_set(x)?;
    if c >= p.len() {
        return Err(ChainmailError::IndexOutOfRange { index: c, n: p.len() });
    }
    if !b.is_subset(&down_x) {
        return Err(ChainmailError::precondition("sink members must lie below its apex"));
    }
    Ok(orthogonal(p, c, x, b))
}

fn orthogonal(p: &FinitePoset, c: usize, x: usize, b: &ElementSet) -> bool {
    p.leq(c, x) == (p.up(c).intersection(b).len() == 1)
}

/// For every `x` some `B ⊆ C` makes `(x, B)` orthogonal to all of `C`.
///
/// Such a `B` has to be the set of maximal elements of `C ∩ x↓`: each of
/// its members is below exactly one member, so it is an antichain, and it
/// must dominate `C ∩ x↓` from inside it. That leaves one sink per `x`.
pub fn is_multicoreflective(p: &FinitePoset, c: &ElementSet) -> bool {
    p.elements().all(|x| {
        let below = p.down(x).intersection(c);
        let b = p.maximal_in(&below);
        c.iter().all(|m| orthogonal(p, m, x, &b))
    })
}

/// The definition checked over every candidate `B`. Exponential.
pub fn is_multicoreflective_literal(p: &FinitePoset, c: &ElementSet, limits: &Limits) -> Result<bool> {
    for x in p.elements() {
        let below = p.down(x).intersection(c).to_vec();
        let found = subsets(&below, limits)?.any(|b| c.iter().all(|m| orthogonal(p, m, x, &b)));
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Upper bounds `x` of `xs` that are the join of `xs` inside `y↓` for
/// every `y >= x`. Several may exist.
pub fn local_joins(p: &FinitePoset, xs: &ElementSet) -> ElementSet {
    let ub = p.upper_bounds(xs);
    ub.iter()
        .filter(|&x| p.up(x).iter().all(|y| ub.intersection(p.down(y)).is_subset(p.up(x))))
        .collect()
}

/// The local join when there is exactly one. With a top element this is
/// the ordinary join.
pub fn local_join(p: &FinitePoset, xs: &ElementSet) -> Option<usize> {
    let all = local_joins(p, xs);
    if all.len() == 1 {
        all.first()
    } else {
        None
    }
}

/// The three closure conditions on `C ⊆ P`, in the order in which each
/// implies the next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BorgerReport {
    /// (i) `C` is multicoreflective.
    pub multicoreflective: bool,
    /// (ii) Anything orthogonal to every sink that is orthogonal to all of
    /// `C` already lies in `C`.
    pub orthogonality_closed: bool,
    /// (iii) `C` contains every local join of every connected subset of `C`.
    pub local_join_closed: bool,
    /// Every connected subset of `P` with an upper bound has a local join.
    pub local_joins_exist: bool,
    /// (i) ⇒ (ii) ⇒ (iii), and all three agree when `local_joins_exist`.
    pub consistent: bool,
}

/// Evaluates all three conditions. Sinks and subsets are enumerated
/// exhaustively, so this is for small posets only.
pub fn borger_implication_check(p: &FinitePoset, c: &ElementSet, limits: &Limits) -> Result<BorgerReport> {
    p.check_set(c)?;
    let multicoreflective = is_multicoreflective(p, c);
    let orthogonality_closed = orthogonality_closed(p, c, limits)?;
    let members = c.to_vec();
    let mut local_join_closed = true;
    for x in subsets(&members, limits)? {
        if is_connected(p, &x) && !local_joins(p, &x).is_subset(c) {
            local_join_closed = false;
            break;
        }
    }
    let everything = p.all().to_vec();
    let mut local_joins_exist = true;
    for x in subsets(&everything, limits)? {
        if is_connected(p, &x) && !p.upper_bounds(&x).is_empty() && local_joins(p, &x).is_empty() {
            local_joins_exist = false;
            break;
        }
    }
    let chain = (!multicoreflective || orthogonality_closed) && (!orthogonality_closed || local_join_closed);
    let equal = multicoreflective == orthogonality_closed && orthogonality_closed == local_join_closed;
    Ok(BorgerReport {
        multicoreflective,
        orthogonality_closed,
        local_join_closed,
        local_joins_exist,
        consistent: chain && (!local_joins_exist || equal),
    })
}

fn is_connected(p: &FinitePoset, xs: &ElementSet) -> bool {
    !xs.is_empty() && p.order_components_of(xs).len() == 1
}

fn orthogonality_closed(p: &FinitePoset, c: &ElementSet, limits: &Limits) -> Result<bool> {
    let mut sinks = Vec::new();
    for x in p.elements() {
        for b in subsets(&p.down(x).to_vec(), limits)? {
            if c.iter().all(|m| orthogonal(p, m, x, &b)) {
                sinks.push((x, b));
                limits.check_family(sinks.len())?;
            }
        }
    }
    Ok(p.elements()
        .filter(|&a| sinks.iter().all(|(x, b)| orthogonal(p, a, *x, b)))
        .all(|a| c.contains(a)))
}

/// Every subset of `members`, after checking that there are at most
/// `limits.max_family` of them.
fn subsets<'a>(members: &'a [usize], limits: &Limits) -> Result<impl Iterator<Item = ElementSet> + 'a> {
    let k = members.len();
    if k >= 63 {
        return Err(ChainmailError::LimitExceeded {
            what: "subset count",
            limit: limits.max_family,
            actual: usize::MAX,
        });
    }
    limits.check_family(1 << k)?;
    Ok((0u64..1 << k).map(move |mask| (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| members[i]).collect()))
}
