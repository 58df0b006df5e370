//! The exterior of a poset: its totally mail-disconnected sets under the
//! domination order, and the correspondence with down-closed subchainmails.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::connectivity::ConnectivityPair;
use crate::error::{ChainmailError, Result};
use crate::limits::{self, Limits, HARD_MAX_ELEMENTS};
use crate::poset::{FinitePoset, Lattice};

/// A family of subsets of `base` ordered as a poset. Element `i` of
/// `order` is `sets[i]`.
#[derive(Debug, Clone, Serialize)]
pub struct SetFamily {
    #[serde(skip)]
    pub order: FinitePoset,
    pub sets: Vec<ElementSet>,
}

impl SetFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Sets are sorted by size and then lexicographically.
    pub fn index_of(&self, s: &ElementSet) -> Option<usize> {
        self.sets.binary_search_by(|probe| size_lex(probe, s)).ok()
    }
}

/// The totally mail-disconnected sets of `base`, ordered by
/// `S <= T` iff every member of `S` is below some member of `T`.
#[derive(Debug, Clone)]
pub struct TmdFamily {
    pub base: FinitePoset,
    pub family: SetFamily,
}

impl TmdFamily {
    pub fn sets(&self) -> &[ElementSet] {
        &self.family.sets
    }

    pub fn order(&self) -> &FinitePoset {
        &self.family.order
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    /// Never true: the empty set is always present.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, s: &ElementSet) -> Option<usize> {
        self.family.index_of(s)
    }
}

fn size_lex(a: &ElementSet, b: &ElementSet) -> std::cmp::Ordering {
    (a.len(), a).cmp(&(b.len(), b))
}

/// Subsets of `within` in which no two members share a lower bound lying in
/// `within`, sorted by size then lexicographically. The empty set is first.
pub(crate) fn tmd_subsets(p: &FinitePoset, within: &ElementSet, limits: &Limits) -> Result<Vec<ElementSet>> {
    let members = within.to_vec();
    let lower: Vec<ElementSet> = members.iter().map(|&x| p.down(x).intersection(within)).collect();
    let mut out = Vec::new();
    // (set, union of the members' lower sets, next candidate index)
    let mut stack = vec![(ElementSet::new(), ElementSet::new(), 0usize)];
    while let Some((set, shadow, from)) = stack.pop() {
        for i in from..members.len() {
            if !lower[i].intersects(&shadow) {
                let mut next = set.clone();
                next.insert(members[i]);
                stack.push((next, shadow.union(&lower[i]), i + 1));
            }
        }
        out.push(set);
        limits.check_family(out.len())?;
    }
    out.sort_by(size_lex);
    Ok(out)
}

/// Orders `sets` by domination. The result is a partial order whenever
/// the sets are antichains of `p`.
pub(crate) fn domination_order(p: &FinitePoset, sets: &[ElementSet]) -> Result<FinitePoset> {
    limits::check(sets.len(), HARD_MAX_ELEMENTS, "exterior size")?;
    let closures: Vec<ElementSet> = sets.iter().map(|s| p.down_closure(s)).collect();
    let up = sets
        .iter()
        .map(|s| (0..sets.len()).filter(|&j| s.is_subset(&closures[j])).collect())
        .collect();
    Ok(FinitePoset::from_valid_rows(up))
}

pub(crate) fn inclusion_order(sets: &[ElementSet]) -> Result<FinitePoset> {
    limits::check(sets.len(), HARD_MAX_ELEMENTS, "family size")?;
    let up = sets
        .iter()
        .map(|s| (0..sets.len()).filter(|&j| s.is_subset(&sets[j])).collect())
        .collect();
    Ok(FinitePoset::from_valid_rows(up))
}

pub fn exterior(p: &FinitePoset) -> Result<TmdFamily> {
    exterior_with_limits(p, &Limits::default())
}

/// Fails when the family exceeds `limits.max_family` sets, or when it is
/// too large to materialize as a poset.
pub fn exterior_with_limits(p: &FinitePoset, limits: &Limits) -> Result<TmdFamily> {
    let sets = tmd_subsets(p, &p.all(), limits)?;
    let order = domination_order(p, &sets)?;
    Ok(TmdFamily {
        base: p.clone(),
        family: SetFamily { order, sets },
    })
}

/// Whether the exterior is a complete lattice. Agrees with
/// [`FinitePoset::is_chainmail`] on every input.
pub fn exterior_is_complete(p: &FinitePoset) -> Result<bool> {
    Ok(exterior(p)?.order().is_complete_lattice())
}

fn require_chainmail(p: &FinitePoset) -> Result<()> {
    if p.is_chainmail() {
        Ok(())
    } else {
        Err(ChainmailError::precondition("the poset is not a chainmail"))
    }
}

/// Every down-set of `p`, sorted by size then lexicographically.
pub(crate) fn down_sets(p: &FinitePoset, limits: &Limits) -> Result<Vec<ElementSet>> {
    // each down-set is the down-closure of its antichain of maximal elements
    let mut out = Vec::new();
    let mut stack = vec![(ElementSet::new(), ElementSet::new(), 0usize)];
    while let Some((closure, blocked, from)) = stack.pop() {
        for x in (from..p.len()).filter(|&x| !blocked.contains(x)) {
            let mut b = blocked.union(p.down(x));
            b.union_with(p.up(x));
            stack.push((closure.union(p.down(x)), b, x + 1));
        }
        out.push(closure);
        limits.check_family(out.len())?;
    }
    out.sort_by(size_lex);
    Ok(out)
}

/// The down-closed subsets of a chainmail that are closed under joins of
/// their mails, ordered by inclusion.
pub fn downclosed_subchainmails(p: &FinitePoset) -> Result<SetFamily> {
    downclosed_subchainmails_with_limits(p, &Limits::default())
}

pub fn downclosed_subchainmails_with_limits(p: &FinitePoset, limits: &Limits) -> Result<SetFamily> {
    require_chainmail(p)?;
    let sets: Vec<ElementSet> = down_sets(p, limits)?
        .into_iter()
        .filter(|x| p.is_subchainmail(x))
        .collect();
    let order = inclusion_order(&sets)?;
    Ok(SetFamily { order, sets })
}

/// Down-closure of a totally mail-disconnected set.
pub fn tmd_to_downset(p: &FinitePoset, s: &ElementSet) -> Result<ElementSet> {
    require_chainmail(p)?;
    p.check_set(s)?;
    if !p.is_totally_mail_disconnected(s) {
        return Err(ChainmailError::precondition("set is not totally mail-disconnected"));
    }
    Ok(p.down_closure(s))
}

/// Joins of the maximal mail-connected subsets of a down-closed
/// subchainmail. Each join is checked to lie inside `x`.
pub fn downset_to_tmd(p: &FinitePoset, x: &ElementSet) -> Result<ElementSet> {
    require_chainmail(p)?;
    p.check_set(x)?;
    if !p.is_down_closed(x) || !p.is_subchainmail(x) {
        return Err(ChainmailError::precondition("set is not a down-closed subchainmail"));
    }
    let mut out = ElementSet::new();
    for comp in p.mail_connected_components(x) {
        match p.join(&comp) {
            Some(j) if x.contains(j) => {
                out.insert(j);
            }
            _ => {
                return Err(ChainmailError::precondition(
                    "component join escapes the down-closed subchainmail",
                ))
            }
        }
    }
    Ok(out)
}

/// The exterior as a connectivity lattice whose connected elements are the
/// singletons. Singleton `{x}` sits at index `x + 1` of the exterior.
pub fn exterior_as_absolute(p: &FinitePoset) -> Result<ConnectivityPair> {
    exterior_as_absolute_with_limits(p, &Limits::default())
}

pub fn exterior_as_absolute_with_limits(p: &FinitePoset, limits: &Limits) -> Result<ConnectivityPair> {
    require_chainmail(p)?;
    let ext = exterior_with_limits(p, limits)?;
    let singletons: ElementSet = (1..=p.len()).collect();
    debug_assert!(singletons.iter().all(|i| ext.sets()[i] == ElementSet::singleton(i - 1)));
    let lattice = Lattice::new(ext.family.order)?;
    Ok(ConnectivityPair::from_lattice(lattice, singletons))
}
