//! Constructors for connectivity pairs arising from graphs, hypergraphs,
//! topologies and forests, plus the named fixture registry.
//!
//! Powerset lattices number their elements by bitmask: element `m` is the
//! vertex set `{v | m >> v & 1 == 1}`, so `0` is the empty set.

mod fixtures;

use crate::bitset::ElementSet;
use crate::connectivity::ConnectivityPair;
use crate::error::{ChainmailError, Result};
use crate::exterior::down_sets;
use crate::limits::Limits;
use crate::poset::{FinitePoset, Lattice};

pub use fixtures::{fixture_names, named_fixture, Fixture, FixtureKind};

/// A simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacent: Vec<ElementSet>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacent = vec![ElementSet::new(); n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(ChainmailError::IndexOutOfRange { index: v, n });
                }
            }
            if a == b {
                return Err(ChainmailError::Input(format!("self-loop at vertex {a}")));
            }
            adjacent[a].insert(b);
            adjacent[b].insert(a);
        }
        Ok(Graph { n, adjacent })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            adjacent: vec![ElementSet::new(); n],
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path edges are in range")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph::new(n, &edges).expect("complete edges are in range")
    }

    /// Two 4-cycles `0-1-3-2-0` and `3-4-6-5-3` sharing vertex 3.
    pub fn two_diamonds() -> Self {
        Graph::new(7, &[(0, 1), (1, 3), (3, 2), (2, 0), (3, 4), (4, 6), (6, 5), (5, 3)]).expect("static edges")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| self.adjacent[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn neighbours(&self, v: usize) -> &ElementSet {
        &self.adjacent[v]
    }

    /// Non-empty, and any two members are joined by a path inside `s`.
    pub fn is_connected_set(&self, s: &ElementSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut seen = ElementSet::singleton(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = ElementSet::new();
            for v in frontier.iter() {
                next.union_with(&self.adjacent[v].intersection(s));
            }
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen == *s
    }

    /// Connected, and still connected after deleting any `k - 1` or fewer
    /// of its vertices. Deleting everything leaves the empty set, which is
    /// not connected, so a `k`-connected set has more than `k - 1` vertices.
    pub fn is_k_connected_set(&self, s: &ElementSet, k: usize) -> bool {
        let members = s.to_vec();
        let mut ok = true;
        for_each_subset_up_to(&members, k.saturating_sub(1), &mut |removed| {
            if ok && !self.is_connected_set(&s.difference(removed)) {
                ok = false;
            }
        });
        ok
    }
}

fn for_each_subset_up_to(members: &[usize], max: usize, f: &mut impl FnMut(&ElementSet)) {
    fn go(members: &[usize], from: usize, max: usize, cur: &mut ElementSet, f: &mut impl FnMut(&ElementSet)) {
        f(cur);
        if cur.len() == max {
            return;
        }
        for i in from..members.len() {
            cur.insert(members[i]);
            go(members, i + 1, max, cur, f);
            cur.remove(members[i]);
        }
    }
    go(members, 0, max, &mut ElementSet::new(), f);
}

/// A set of vertices with a list of hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<ElementSet>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<ElementSet>) -> Result<Self> {
        for e in &edges {
            if let Some(v) = e.last().filter(|&v| v >= n) {
                return Err(ChainmailError::IndexOutOfRange { index: v, n });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// Singletons plus the edges of `g`; its connected sets are those of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut edges: Vec<ElementSet> = (0..g.n).map(ElementSet::singleton).collect();
        edges.extend(g.edges().into_iter().map(|(a, b)| [a, b].into_iter().collect()));
        Hypergraph { n: g.n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Non-empty, and any two members (a member and itself included) are
    /// linked by a chain of overlapping hyperedges lying inside `s`.
    pub fn is_connected_set(&self, s: &ElementSet) -> bool {
        if s.is_empty() {
            return false;
        }
        let inside: Vec<&ElementSet> = self.edges.iter().filter(|e| !e.is_empty() && e.is_subset(s)).collect();
        let Some(first) = inside.first() else {
            return false;
        };
        let mut reached = (*first).clone();
        let mut grew = true;
        while grew {
            grew = false;
            for e in &inside {
                if e.intersects(&reached) && !e.is_subset(&reached) {
                    reached.union_with(e);
                    grew = true;
                }
            }
        }
        reached == *s
    }
}

/// The subset lattice of `0..v`, numbered by bitmask.
pub fn powerset(v: usize) -> FinitePoset {
    let size = 1usize << v;
    let up = (0..size).map(|a| (0..size).filter(|&b| a & b == a).collect()).collect();
    FinitePoset::from_valid_rows(up)
}

fn powerset_pair(v: usize, limits: &Limits, keep: impl Fn(&ElementSet) -> bool) -> Result<ConnectivityPair> {
    limits.check_vertices(v)?;
    let c = (0..1usize << v)
        .filter(|&m| keep(&ElementSet::from_mask(m as u64)))
        .collect();
    let lattice = Lattice::new(powerset(v))?;
    Ok(ConnectivityPair::from_lattice(lattice, c))
}

/// Powerset of the vertices with the non-empty connected vertex sets.
pub fn graph_connectivity_pair(g: &Graph, limits: &Limits) -> Result<ConnectivityPair> {
    powerset_pair(g.n, limits, |s| g.is_connected_set(s))
}

pub fn hypergraph_connectivity_pair(h: &Hypergraph, limits: &Limits) -> Result<ConnectivityPair> {
    powerset_pair(h.n, limits, |s| h.is_connected_set(s))
}

/// Powerset of the vertices with the `k`-connected vertex sets, read
/// literally: a single edge is 2-connected because removing either end
/// leaves a connected singleton.
pub fn k_connectivity_pair(g: &Graph, k: usize, limits: &Limits) -> Result<ConnectivityPair> {
    if k == 0 {
        return Err(ChainmailError::precondition("k must be positive"));
    }
    powerset_pair(g.n, limits, |s| g.is_k_connected_set(s, k))
}

/// Powerset of `0..n` with the open sets of a topology as connected
/// elements. The open sets are validated.
pub fn topology_pair(n: usize, opens: &[ElementSet], limits: &Limits) -> Result<ConnectivityPair> {
    limits.check_vertices(n)?;
    let whole = ElementSet::full(n);
    if let Some(bad) = opens.iter().find(|o| !o.within(n)) {
        return Err(ChainmailError::NotATopology(format!(
            "{bad:?} is not a subset of the points"
        )));
    }
    let family: std::collections::BTreeSet<&ElementSet> = opens.iter().collect();
    if !family.contains(&ElementSet::new()) {
        return Err(ChainmailError::NotATopology("the empty set is not open".into()));
    }
    if !family.contains(&whole) {
        return Err(ChainmailError::NotATopology("the whole space is not open".into()));
    }
    for a in &family {
        for b in &family {
            if !family.contains(&a.union(b)) {
                return Err(ChainmailError::NotATopology(format!("{a:?} ∪ {b:?} is not open")));
            }
            if !family.contains(&a.intersection(b)) {
                return Err(ChainmailError::NotATopology(format!("{a:?} ∩ {b:?} is not open")));
            }
        }
    }
    powerset_pair(n, limits, |s| family.contains(s))
}

/// The four characterizations of forests: (i) every element has at most
/// one upper cover, (ii) every mail is a chain, (iii) every up-set is a
/// chain, (iv) the Hasse diagram has no cycles and each of its components
/// has exactly one maximal element.
pub fn forest_conditions(p: &FinitePoset) -> [bool; 4] {
    let one_cover = p.elements().all(|x| p.upper_covers(x).len() <= 1);
    let mails_are_chains = p
        .elements()
        .all(|a| (a + 1..p.len()).all(|b| !p.shares_lower_bound(a, b) || p.comparable(a, b)));
    let upsets_are_chains = p.elements().all(|x| p.is_chain(p.up(x)));
    let components = p.order_connected_components();
    let hasse_forest =
        p.covers().len() + components.len() == p.len() && components.iter().all(|c| p.maximal_in(c).len() == 1);
    [one_cover, mails_are_chains, upsets_are_chains, hasse_forest]
}

/// Whether `p` is a disjoint union of rooted trees growing downwards.
pub fn forest_poset_check(p: &FinitePoset) -> bool {
    let c = forest_conditions(p);
    debug_assert!(c.iter().all(|&b| b == c[0]), "forest conditions disagree: {c:?}");
    c[0]
}

/// Down-sets of `p` ordered by inclusion, with the principal down-sets as
/// connected elements. Element 0 is the empty down-set.
pub fn principal_downset_pair(p: &FinitePoset, limits: &Limits) -> Result<ConnectivityPair> {
    let sets = down_sets(p, limits)?;
    limits.check_elements(sets.len())?;
    let order = crate::exterior::inclusion_order(&sets)?;
    let c = p
        .elements()
        .map(|x| {
            sets.binary_search_by(|s| (s.len(), s).cmp(&(p.down(x).len(), p.down(x))))
                .expect("principal down-sets are down-sets")
        })
        .collect();
    Ok(ConnectivityPair::from_lattice(Lattice::new(order)?, c))
}

/// Powerset of the elements of `p` with the principal down-sets as
/// connected elements.
pub fn principal_subset_pair(p: &FinitePoset, limits: &Limits) -> Result<ConnectivityPair> {
    let c: Vec<u64> = p
        .elements()
        .map(|x| p.down(x).as_mask().expect("vertex cap keeps masks small"))
        .collect();
    limits.check_vertices(p.len())?;
    powerset_pair(p.len(), limits, |s| c.contains(&s.as_mask().unwrap_or(u64::MAX)))
}

/// Divisors of `n` under divisibility, ascending; `n` is the top.
pub fn divisor_lattice(n: u64, limits: &Limits) -> Result<(FinitePoset, Vec<u64>)> {
    if n == 0 {
        return Err(ChainmailError::precondition("n must be positive"));
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    limits.check_elements(divisors.len())?;
    let p = FinitePoset::from_fn(divisors.len(), |a, b| divisors[b].is_multiple_of(divisors[a]))?;
    Ok((p, divisors))
}

/// Divisors of `n` with the elements satisfying E1 as connected elements.
pub fn divisor_e1_pair(n: u64, limits: &Limits) -> Result<(ConnectivityPair, Vec<u64>)> {
    let (p, divisors) = divisor_lattice(n, limits)?;
    let l = Lattice::new(p)?;
    let c = (0..l.len()).filter(|&a| l.e1(a)).collect();
    Ok((ConnectivityPair::from_lattice(l, c), divisors))
}

/// A new greatest element above `L`, with the same connected elements.
pub fn adjoin_top(pair: &ConnectivityPair) -> ConnectivityPair {
    let l = Lattice::new(pair.poset().with_new_top()).expect("adding a top keeps a lattice");
    ConnectivityPair::from_lattice(l, pair.c().clone())
}

/// A new least element below a lattice, with the old elements connected.
/// Old element `x` becomes `x + 1`.
pub fn adjoin_bottom(l: &FinitePoset) -> Result<ConnectivityPair> {
    Lattice::new(l.clone())?;
    let raised = l.with_new_bottom();
    let c = (1..raised.len()).collect();
    ConnectivityPair::new(raised, c)
}
