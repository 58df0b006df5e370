//! Canonical labeling by individualization and refinement.
//!
//! The search tree branches on the members of the first non-singleton cell
//! of an equitable ordered partition. Each leaf is a total order of the
//! elements, and its certificate is the order relation written out as a bit
//! matrix in that order. The largest certificate wins. Automorphisms found
//! along the way (two leaves with equal certificates) prune the search.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::FinitePoset;

/// Isomorphism invariant that determines a poset up to isomorphism.
///
/// Keys of posets with different sizes compare by size first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

/// A canonical relabeling of a poset.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `order[i]` is the element placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Inverse of `order`: `position[x]` is the canonical position of `x`.
    pub position: Vec<usize>,
    pub key: CanonicalKey,
}

type Cells = Vec<Vec<usize>>;

impl FinitePoset {
    pub fn canonical_labeling(&self) -> Labeling {
        self.canonical_labeling_colored(&vec![0; self.len()])
    }

    /// Canonical labeling of the vertex-colored poset: isomorphisms must
    /// preserve `colors`. The key records the colors, so keys of the same
    /// poset under different colorings differ.
    pub fn canonical_labeling_colored(&self, colors: &[u32]) -> Labeling {
        assert_eq!(colors.len(), self.len(), "one color per element");
        let mut search = Search {
            poset: self,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        };
        let root = refine(self, initial_cells(self, colors));
        search.visit(root, &mut Vec::new());
        let best = search.best.expect("the search visits at least one leaf");
        let mut position = vec![0; self.len()];
        for (i, &x) in best.order.iter().enumerate() {
            position[x] = i;
        }
        let mut key = (self.len() as u32).to_be_bytes().to_vec();
        if colors.iter().any(|&c| c != 0) {
            for &x in &best.order {
                key.extend_from_slice(&colors[x].to_be_bytes());
            }
        }
        key.extend_from_slice(&best.bits);
        Labeling {
            order: best.order,
            position,
            key: CanonicalKey(key),
        }
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        self.canonical_labeling().key
    }

    /// The isomorphic copy in canonical position order.
    pub fn canonical_form(&self) -> FinitePoset {
        self.relabel(&self.canonical_labeling().position)
    }

    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        self.len() == other.len() && self.canonical_key() == other.canonical_key()
    }

    /// Some automorphism maps `x` to `y`.
    pub fn same_orbit(&self, x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        if self.down(x).len() != self.down(y).len() || self.up(x).len() != self.up(y).len() {
            return false;
        }
        let mark = |v: usize| {
            let mut c = vec![0; self.len()];
            c[v] = 1;
            c
        };
        self.canonical_labeling_colored(&mark(x)).key == self.canonical_labeling_colored(&mark(y)).key
    }
}

fn initial_cells(p: &FinitePoset, colors: &[u32]) -> Cells {
    let mut groups: BTreeMap<(u32, usize, usize), Vec<usize>> = BTreeMap::new();
    for x in p.elements() {
        groups
            .entry((colors[x], p.down(x).len(), p.up(x).len()))
            .or_default()
            .push(x);
    }
    groups.into_values().collect()
}

/// Splits cells until every member of a cell has the same number of strict
/// lower and strict upper neighbours in every cell. Splitting keeps cell
/// order and sorts the fragments by signature, so the result depends only
/// on the isomorphism type of the partitioned poset.
fn refine(p: &FinitePoset, mut cells: Cells) -> Cells {
    loop {
        let sets: Vec<crate::bitset::ElementSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Cells = Vec::with_capacity(p.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u16>, usize)> = cell
                .iter()
                .map(|&x| {
                    let sig = sets
                        .iter()
                        .flat_map(|s| {
                            let own = s.contains(x) as usize;
                            let below = p.down(x).intersection(s).len() - own;
                            let above = p.up(x).intersection(s).len() - own;
                            [below as u16, above as u16]
                        })
                        .collect();
                    (sig, x)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, x)| x).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn individualize(cells: &Cells, target: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..target]);
    out.push(vec![v]);
    out.push(cells[target].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&cells[target + 1..]);
    out
}

struct Leaf {
    path: Vec<usize>,
    order: Vec<usize>,
    bits: Vec<u8>,
}

struct Search<'a> {
    poset: &'a FinitePoset,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Each entry maps element `x` to `auto[x]`.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` to abandon everything below the node at
    /// `level` on the current path.
    fn visit(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(cells, path);
        };
        let level = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() {
                let orbit = self.orbit_labels(path);
                if explored.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            path.push(v);
            let child = refine(self.poset, individualize(&cells, target, v));
            let jump = self.visit(child, path);
            path.pop();
            explored.push(v);
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: Cells, path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let bits = certificate(self.poset, &order);
        let leaf = Leaf {
            path: path.to_vec(),
            order,
            bits,
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                order: leaf.order.clone(),
                bits: leaf.bits.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("set with first");
        for known in [first, best] {
            if known.bits == leaf.bits {
                let mut auto = vec![0; leaf.order.len()];
                for (&from, &to) in known.order.iter().zip(&leaf.order) {
                    auto[from] = to;
                }
                let level = common_prefix(&known.path, &leaf.path);
                self.automorphisms.push(auto);
                return Some(level);
            }
        }
        if leaf.bits > best.bits {
            self.best = Some(leaf);
        }
        None
    }

    /// Orbit representative of every element under the automorphisms found
    /// so far that fix each element of `path`.
    fn orbit_labels(&self, path: &[usize]) -> Vec<usize> {
        let n = self.poset.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for auto in &self.automorphisms {
            if path.iter().all(|&v| auto[v] == v) {
                for (x, &image) in auto.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, image));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Row-major bit matrix of `<=` in the given order, most significant bit
/// first.
fn certificate(p: &FinitePoset, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bits = vec![0u8; (n * n).div_ceil(8)];
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate() {
            if p.leq(a, b) {
                let k = i * n + j;
                bits[k / 8] |= 0x80 >> (k % 8);
            }
        }
    }
    bits
}
