//! Brute-force oracles. Everything here reads a poset only through `len`
//! and `leq` and follows the definitions literally, so it shares no code
//! paths with the library routines it is compared against.

#![allow(dead_code)]

pub mod laws;

use std::collections::BTreeSet;

use chainmail::enumeration::{complete_lattices, enumerate_posets, EnumerationOptions};
use chainmail::{ElementSet, FinitePoset};

pub fn set(xs: &[usize]) -> ElementSet {
    xs.iter().copied().collect()
}

/// All subsets of `items`, as sorted vectors, the empty set first.
pub fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u64..1 << items.len())
        .map(|m| (0..items.len()).filter(|i| m >> i & 1 == 1).map(|i| items[i]).collect())
        .collect()
}

pub fn elements(p: &FinitePoset) -> Vec<usize> {
    (0..p.len()).collect()
}

/// Least upper bound of `xs` among `universe`, if any.
pub fn join_within(p: &FinitePoset, xs: &[usize], universe: &[usize]) -> Option<usize> {
    let ub: Vec<usize> = universe
        .iter()
        .copied()
        .filter(|&u| xs.iter().all(|&x| p.leq(x, u)))
        .collect();
    ub.iter().copied().find(|&u| ub.iter().all(|&v| p.leq(u, v)))
}

pub fn join(p: &FinitePoset, xs: &[usize]) -> Option<usize> {
    join_within(p, xs, &elements(p))
}

pub fn meet(p: &FinitePoset, xs: &[usize]) -> Option<usize> {
    let all = elements(p);
    let lb: Vec<usize> = all
        .iter()
        .copied()
        .filter(|&u| xs.iter().all(|&x| p.leq(u, x)))
        .collect();
    lb.iter().copied().find(|&u| lb.iter().all(|&v| p.leq(v, u)))
}

fn common_lower_bound_within(p: &FinitePoset, xs: &[usize], universe: &[usize]) -> bool {
    universe.iter().any(|&l| xs.iter().all(|&x| p.leq(l, x)))
}

/// Mail-connected within `universe`: non-empty and connected under
/// "the two elements have a common lower bound in `universe`".
pub fn mail_connected_within(p: &FinitePoset, xs: &[usize], universe: &[usize]) -> bool {
    if xs.is_empty() {
        return false;
    }
    let mut seen = vec![xs[0]];
    let mut grew = true;
    while grew {
        grew = false;
        for &y in xs {
            if !seen.contains(&y) && seen.iter().any(|&s| common_lower_bound_within(p, &[s, y], universe)) {
                seen.push(y);
                grew = true;
            }
        }
    }
    seen.len() == xs.len()
}

/// Connected in the comparability graph of the induced order.
pub fn order_connected(p: &FinitePoset, xs: &[usize]) -> bool {
    if xs.is_empty() {
        return false;
    }
    let mut seen = vec![xs[0]];
    let mut grew = true;
    while grew {
        grew = false;
        for &y in xs {
            if !seen.contains(&y) && seen.iter().any(|&s| p.leq(s, y) || p.leq(y, s)) {
                seen.push(y);
                grew = true;
            }
        }
    }
    seen.len() == xs.len()
}

/// Every mail (non-empty with a common lower bound) has a join.
pub fn chainmail_all_mails(p: &FinitePoset) -> bool {
    let all = elements(p);
    subsets(&all)
        .into_iter()
        .filter(|xs| !xs.is_empty() && common_lower_bound_within(p, xs, &all))
        .all(|xs| join(p, &xs).is_some())
}

/// Every mail-connected set has a join.
pub fn chainmail_mail_connected(p: &FinitePoset) -> bool {
    let all = elements(p);
    subsets(&all)
        .into_iter()
        .filter(|xs| mail_connected_within(p, xs, &all))
        .all(|xs| join(p, &xs).is_some())
}

/// Every non-empty order-connected set has a join.
pub fn chainmail_connected_sets(p: &FinitePoset) -> bool {
    subsets(&elements(p))
        .into_iter()
        .filter(|xs| order_connected(p, xs))
        .all(|xs| join(p, &xs).is_some())
}

/// Every principal up-set is a complete lattice in the induced order.
pub fn chainmail_upsets_complete(p: &FinitePoset) -> bool {
    elements(p).into_iter().all(|x| {
        let up: Vec<usize> = elements(p).into_iter().filter(|&y| p.leq(x, y)).collect();
        subsets(&up).iter().all(|s| join_within(p, s, &up).is_some())
    })
}

/// Non-empty and every subset has a join.
pub fn complete_lattice(p: &FinitePoset) -> bool {
    !p.is_empty() && subsets(&elements(p)).iter().all(|s| join(p, s).is_some())
}

/// A finite poset is a complete lattice iff it has a least element and
/// every pair has a join. Polynomial, for posets too large for
/// [`complete_lattice`].
pub fn finite_lattice(p: &FinitePoset) -> bool {
    let all = elements(p);
    join(p, &[]).is_some() && all.iter().all(|&a| all.iter().all(|&b| join(p, &[a, b]).is_some()))
}

/// Subsets of `within` in which no two distinct members share a lower
/// bound inside `within`. Includes the empty set.
pub fn tmd_sets(p: &FinitePoset, within: &[usize]) -> Vec<Vec<usize>> {
    subsets(within)
        .into_iter()
        .filter(|s| {
            s.iter().all(|&a| {
                s.iter()
                    .all(|&b| a == b || !common_lower_bound_within(p, &[a, b], within))
            })
        })
        .collect()
}

/// Each member of `s` is below some member of `t`.
pub fn dominated(p: &FinitePoset, s: &[usize], t: &[usize]) -> bool {
    s.iter().all(|&a| t.iter().any(|&b| p.leq(a, b)))
}

/// The exterior built from the definitions: TMD sets under domination.
/// Returned as the list of sets (in the library's size-then-lex order)
/// and the order on their indices.
pub fn exterior(p: &FinitePoset) -> (Vec<Vec<usize>>, FinitePoset) {
    let mut sets = tmd_sets(p, &elements(p));
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let order =
        FinitePoset::from_fn(sets.len(), |i, j| dominated(p, &sets[i], &sets[j])).expect("domination is an order");
    (sets, order)
}

/// `c` is closed under joins of its mail-connected subsets, where mail
/// connectedness is taken in the induced order of `c`.
pub fn subchainmail_literal(p: &FinitePoset, c: &[usize]) -> bool {
    subsets(c)
        .into_iter()
        .filter(|xs| mail_connected_within(p, xs, c))
        .all(|xs| join(p, &xs).is_some_and(|j| c.contains(&j)))
}

/// CL1 read literally: a non-empty `X ⊆ C` with a lower bound other than
/// the bottom has its join in `C`.
pub fn cl1_literal(l: &FinitePoset, c: &[usize]) -> bool {
    let bottom = meet(l, &elements(l)).expect("lattice");
    subsets(c)
        .into_iter()
        .filter(|xs| !xs.is_empty() && meet(l, xs) != Some(bottom))
        .all(|xs| join(l, &xs).is_some_and(|j| c.contains(&j)))
}

/// `S ↦ ⋁S` from the TMD subsets of `c` to `l` has a right adjoint: for
/// every `x`, the sets whose join is below `x` have a greatest member.
pub fn adjunction_literal(l: &FinitePoset, c: &[usize]) -> bool {
    let family = tmd_sets(l, c);
    elements(l).into_iter().all(|x| {
        let below: Vec<&Vec<usize>> = family
            .iter()
            .filter(|s| join(l, s).is_some_and(|j| l.leq(j, x)))
            .collect();
        below.iter().any(|g| below.iter().all(|s| dominated(l, s, g)))
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least relation matrix over all relabelings.
pub fn brute_canonical(p: &FinitePoset) -> Vec<bool> {
    let n = p.len();
    permutations(n)
        .into_iter()
        .map(|perm| {
            let mut inv = vec![0; n];
            for (old, &new) in perm.iter().enumerate() {
                inv[new] = old;
            }
            (0..n * n).map(|k| p.leq(inv[k / n], inv[k % n])).collect::<Vec<bool>>()
        })
        .min()
        .expect("at least one permutation")
}

pub fn brute_isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    p.len() == q.len() && brute_canonical(p) == brute_canonical(q)
}

/// One poset per isomorphism class on `n` elements, found by closing every
/// relation that respects the natural labelling and deduplicating with
/// [`brute_canonical`].
pub fn brute_posets(n: usize) -> Vec<FinitePoset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        // transitive already, so that each relation is visited once
        let transitive = chosen.iter().all(|&(a, b)| {
            chosen
                .iter()
                .filter(|&&(b2, _)| b2 == b)
                .all(|&(_, c)| chosen.contains(&(a, c)))
        });
        if !transitive {
            continue;
        }
        let p = FinitePoset::from_pairs(n, &chosen).expect("natural labelling gives a poset");
        if seen.insert(brute_canonical(&p)) {
            out.push(p);
        }
    }
    out
}

/// The library's isomorph-free posets on `n` elements.
pub fn posets(n: usize) -> Vec<FinitePoset> {
    let opts = EnumerationOptions {
        catalog: true,
        ..EnumerationOptions::default()
    };
    enumerate_posets(n, &opts).unwrap().catalog.unwrap()
}

pub fn posets_upto(n: usize) -> Vec<FinitePoset> {
    (0..=n).flat_map(posets).collect()
}

pub fn lattices_upto(n: usize) -> Vec<FinitePoset> {
    (1..=n).flat_map(|k| complete_lattices(k).unwrap()).collect()
}

pub fn members(s: &ElementSet) -> Vec<usize> {
    s.to_vec()
}
