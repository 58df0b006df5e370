//! Isomorph-free generation of posets, connected chainmails and lattices.
//!
//! Every poset on `n + 1` elements arises from one on `n` elements by
//! adding a maximal element `x` above a down-closed set `D`. A child `Q`
//! is accepted only if `x` lies in the automorphism orbit of the maximal
//! element of `Q` with the highest canonical position, and children of one
//! parent are deduplicated by canonical key. This generates each
//! isomorphism class exactly once.
//!
//! For chainmails the search keeps only posets in which every mail that has
//! an upper bound has a least one. That property survives deleting a
//! maximal element, so every chainmail is reached through such posets, and
//! once it fails, adding maximal elements cannot repair it.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::connectivity::ConnectivityPair;
use crate::error::{ChainmailError, Result};
use crate::exterior::down_sets;
use crate::limits::{self, Limits};
use crate::poset::{CanonicalKey, FinitePoset, Lattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// All posets.
    Posets,
    /// Chainmails with exactly one connected component (the empty poset is
    /// counted once at size 0).
    Chainmails,
    /// Complete lattices.
    Lattices,
}

impl Kind {
    /// Largest size enumerated without `deep`.
    pub fn default_cap(self) -> usize {
        match self {
            Kind::Posets => 9,
            Kind::Chainmails | Kind::Lattices => 8,
        }
    }

    fn keeps_mail_joins(self) -> bool {
        !matches!(self, Kind::Posets)
    }

    fn accepts(self, q: &FinitePoset) -> bool {
        match self {
            Kind::Posets => true,
            Kind::Chainmails => q.is_order_connected() && q.is_chainmail(),
            Kind::Lattices => q.is_complete_lattice(),
        }
    }
}

/// Size cap with `deep` set.
pub const DEEP_CAP: usize = 10;

#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    /// Worker threads; `None` uses rayon's global pool. Output does not
    /// depend on this.
    pub threads: Option<usize>,
    /// Keep the canonical forms, not just the count.
    pub catalog: bool,
    /// Raise the size cap to [`DEEP_CAP`].
    pub deep: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationResult {
    pub n: usize,
    pub kind: Kind,
    pub count: u64,
    /// Canonical forms sorted by canonical key.
    #[serde(skip)]
    pub catalog: Option<Vec<FinitePoset>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Default)]
struct Found {
    count: u64,
    catalog: Vec<(CanonicalKey, FinitePoset)>,
}

impl Found {
    fn merge(mut self, other: Found) -> Found {
        self.count += other.count;
        self.catalog.extend(other.catalog);
        self
    }
}

pub fn enumerate_posets(n: usize, options: &EnumerationOptions) -> Result<EnumerationResult> {
    enumerate(Kind::Posets, n, options)
}

pub fn enumerate_connected_chainmails(n: usize, options: &EnumerationOptions) -> Result<EnumerationResult> {
    enumerate(Kind::Chainmails, n, options)
}

pub fn enumerate(kind: Kind, n: usize, options: &EnumerationOptions) -> Result<EnumerationResult> {
    let cap = if options.deep { DEEP_CAP } else { kind.default_cap() };
    limits::check(n, cap, "enumeration size")?;
    let start = Instant::now();
    let run = || {
        if n == 0 {
            let empty = FinitePoset::empty();
            let count = u64::from(kind != Kind::Lattices);
            let catalog = if count == 1 {
                vec![(empty.canonical_key(), empty)]
            } else {
                Vec::new()
            };
            return Found { count, catalog };
        }
        search(&FinitePoset::empty(), n, kind, options.catalog)
    };
    let found = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| ChainmailError::Input(format!("cannot start {t} threads: {e}")))?
            .install(run),
        None => run(),
    };
    let catalog = options.catalog.then(|| {
        let mut entries = found.catalog;
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        entries.into_iter().map(|(_, p)| p).collect()
    });
    Ok(EnumerationResult {
        n,
        kind,
        count: found.count,
        catalog,
        elapsed: start.elapsed(),
    })
}

fn search(p: &FinitePoset, target: usize, kind: Kind, keep: bool) -> Found {
    let kids = children(p, target, kind);
    if p.len() + 1 == target {
        return Found {
            count: kids.len() as u64,
            catalog: if keep { kids } else { Vec::new() },
        };
    }
    kids.into_par_iter()
        .map(|(_, child)| search(&child, target, kind, keep))
        .reduce(Found::default, Found::merge)
}

/// Canonical children of `p`, one per isomorphism class, sorted by key.
fn children(p: &FinitePoset, target: usize, kind: Kind) -> Vec<(CanonicalKey, FinitePoset)> {
    let last = p.len() + 1 == target;
    let unbounded = Limits {
        max_family: usize::MAX,
        ..Limits::default()
    };
    let mut out: Vec<(CanonicalKey, FinitePoset)> = Vec::new();
    for below in down_sets(p, &unbounded).expect("no family cap") {
        if kind.keeps_mail_joins() && !mail_joins_survive(p, &below) {
            continue;
        }
        if kind == Kind::Lattices && p.minimal_elements().len() > 1 {
            // new elements are maximal, so no bottom can appear later
            continue;
        }
        let q = p.with_maximal(&below).expect("down-sets are down-closed");
        if last && !kind.accepts(&q) {
            continue;
        }
        let labeling = q.canonical_labeling();
        let x = p.len();
        let top_max = q
            .maximal_elements()
            .iter()
            .max_by_key(|&m| labeling.position[m])
            .expect("x is maximal");
        if top_max != x && !q.same_orbit(x, top_max) {
            continue;
        }
        out.push((labeling.key, q.relabel(&labeling.position)));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    out
}

/// Adding a maximal element above `below` keeps "every mail with an upper
/// bound has a least upper bound", given that `p` already has it. Pairs
/// suffice; a pair inside `below` that already had a join keeps it only if
/// the join is inside `below`.
fn mail_joins_survive(p: &FinitePoset, below: &ElementSet) -> bool {
    for a in below.iter() {
        for b in below.iter().filter(|&b| b > a && !p.comparable(a, b)) {
            if p.shares_lower_bound(a, b) && p.up(a).intersects(p.up(b)) {
                match p.join2(a, b) {
                    Some(j) if below.contains(j) => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Complete lattices on `n` elements up to isomorphism, sorted by
/// canonical key.
pub fn complete_lattices(n: usize) -> Result<Vec<FinitePoset>> {
    let options = EnumerationOptions {
        catalog: true,
        deep: true,
        ..EnumerationOptions::default()
    };
    Ok(enumerate(Kind::Lattices, n, &options)?.catalog.unwrap_or_default())
}

/// Largest lattice size accepted by [`enumerate_connectivity_pairs`].
pub const PAIR_CORPUS_CAP: usize = 7;

/// Every pair `(L, C)` with `L` a complete lattice on at most
/// `max_lattice_size` elements (one per isomorphism class) and `C` any
/// subset. Ordered by size, then canonical key, then the bitmask of `C`.
pub fn enumerate_connectivity_pairs(max_lattice_size: usize) -> Result<impl Iterator<Item = ConnectivityPair>> {
    limits::check(max_lattice_size, PAIR_CORPUS_CAP, "lattice size for the pair corpus")?;
    let mut lattices = Vec::new();
    for n in 1..=max_lattice_size {
        for p in complete_lattices(n)? {
            lattices.push(Lattice::new(p)?);
        }
    }
    Ok(lattices.into_iter().flat_map(|l| {
        (0u64..1 << l.len()).map(move |mask| ConnectivityPair::from_lattice(l.clone(), ElementSet::from_mask(mask)))
    }))
}
