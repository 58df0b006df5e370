use crate::bitset::ElementSet;
use crate::poset::Lattice;

use super::ConnectivityPair;

/// The sublattice `ΣC` of all joins of subsets of `C`, paired with `C`.
#[derive(Debug, Clone)]
pub struct SigmaClosure {
    pub pair: ConnectivityPair,
    /// `embedding[i]` is the element of the original lattice that element
    /// `i` of `pair` stands for. Increasing.
    pub embedding: Vec<usize>,
}

impl SigmaClosure {
    pub fn of(pair: &ConnectivityPair) -> SigmaClosure {
        let l = pair.lattice();
        let mut closed = ElementSet::singleton(l.bottom());
        let mut frontier = closed.clone();
        while !frontier.is_empty() {
            let mut next = ElementSet::new();
            for s in frontier.iter() {
                for c in pair.c().iter() {
                    let j = l.join(s, c);
                    if !closed.contains(j) {
                        next.insert(j);
                    }
                }
            }
            closed.union_with(&next);
            frontier = next;
        }
        let embedding = closed.to_vec();
        let c = pair.c().map(|x| {
            embedding
                .binary_search(&x)
                .expect("connected elements are joins of themselves")
        });
        // join-closed with a bottom, so a lattice in the induced order
        let lattice = Lattice::new(pair.poset().induced(&closed)).expect("join-closed subset with bottom");
        SigmaClosure {
            pair: ConnectivityPair::from_lattice(lattice, c),
            embedding,
        }
    }

    pub fn len(&self) -> usize {
        self.embedding.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}
