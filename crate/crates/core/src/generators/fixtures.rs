//! Named worked examples. Element labels follow the numbering of the
//! original diagrams where they have one.

use crate::bitset::ElementSet;
use crate::connectivity::ConnectivityPair;
use crate::error::{ChainmailError, Result};
use crate::exterior::exterior_as_absolute_with_limits;
use crate::limits::Limits;
use crate::poset::FinitePoset;

use super::{
    adjoin_bottom, divisor_e1_pair, graph_connectivity_pair, hypergraph_connectivity_pair, k_connectivity_pair,
    powerset, principal_downset_pair, principal_subset_pair, topology_pair, Graph, Hypergraph,
};

#[derive(Debug, Clone)]
pub enum FixtureKind {
    Poset(FinitePoset),
    Pair(ConnectivityPair),
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub kind: FixtureKind,
    /// Display label of every element.
    pub labels: Vec<String>,
}

impl Fixture {
    pub fn poset(&self) -> &FinitePoset {
        match &self.kind {
            FixtureKind::Poset(p) => p,
            FixtureKind::Pair(pair) => pair.poset(),
        }
    }

    pub fn pair(&self) -> Option<&ConnectivityPair> {
        match &self.kind {
            FixtureKind::Pair(pair) => Some(pair),
            FixtureKind::Poset(_) => None,
        }
    }

    /// Index of the element labelled `label`.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Indices of the elements with the given labels; panics on an unknown
    /// label, which is a bug in the caller.
    pub fn elements(&self, labels: &[&str]) -> ElementSet {
        labels
            .iter()
            .map(|l| {
                self.element(l)
                    .unwrap_or_else(|| panic!("no element labelled {l:?} in {}", self.name))
            })
            .collect()
    }
}

const REGISTRY: &[(&str, &str)] = &[
    ("M3", "the five-element modular lattice with three atoms"),
    (
        "N5",
        "the five-element non-modular lattice; `a` is the middle of the long side",
    ),
    ("exaA", "seven-element chainmail with reduced mails {2,3}, {2,6}, {5,6}"),
    (
        "exaAA",
        "exterior of exaA with its singletons: absolute but not distributive",
    ),
    ("exaAB", "M3 below a new bottom, old elements connected: absolute"),
    ("exaB", "connected vertex sets of the path 1-2-3"),
    ("exaE", "subsets of a three-point discrete space (lattice only)"),
    (
        "exaG",
        "subsets of the forest 1, 2 < 3 with principal down-sets connected",
    ),
    ("exaH", "hypergraph on {1,2,3} with hyperedges {1,2} and {2,3}"),
    ("exaI", "Sierpinski space: subsets of {1,2} with opens {}, {1}, {1,2}"),
    ("exaJ", "2-connected vertex sets of two 4-cycles sharing vertex 4"),
    (
        "exaK",
        "down-sets of the forest 1 < 2 < 4, 3 < 4 and 5, principal ones connected",
    ),
    ("exaM", "subsets C of {1,2,3} with C minus {1} a singleton"),
    (
        "exaN",
        "chain-like lattice whose hollow nodes form a chainmail but not a subchainmail",
    ),
    ("exaO", "rectangles in a 2x2 grid of points"),
    ("exaT", "divisors of 360 with prime powers (the E1 elements) connected"),
    ("exaU", "subsets of {1,2,3} with the atoms connected"),
    ("exaV", "subsets of {1,2,3} with the three 2-sets connected"),
    ("exaW", "subsets of {1,2,3} with {1,2} and {2,3} connected"),
    ("exaX", "M3 under a new top, atoms connected"),
];

/// Registry names in a fixed order.
pub fn fixture_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|(n, _)| *n).collect()
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Labels subsets of `vertices` (given by bitmask) as `{1,3}`.
fn subset_labels(vertices: &[&str]) -> Vec<String> {
    (0..1usize << vertices.len())
        .map(|m| {
            let names: Vec<&str> = (0..vertices.len())
                .filter(|v| m >> v & 1 == 1)
                .map(|v| vertices[v])
                .collect();
            format!("{{{}}}", names.join(","))
        })
        .collect()
}

fn masks(ms: &[usize]) -> ElementSet {
    ms.iter().copied().collect()
}

fn m3() -> FinitePoset {
    FinitePoset::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).expect("static")
}

fn exa_a() -> FinitePoset {
    // labels 1..7 sit at indices 0..6
    let covers = [(1, 2), (1, 3), (2, 5), (3, 5), (3, 6), (4, 5), (4, 6), (5, 7), (6, 7)];
    let zero_based: Vec<_> = covers.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    FinitePoset::from_covers(7, &zero_based).expect("static")
}

fn pair(p: FinitePoset, c: ElementSet) -> ConnectivityPair {
    ConnectivityPair::new(p, c).expect("fixture is a lattice")
}

pub fn named_fixture(name: &str) -> Result<Fixture> {
    let limits = Limits::generous();
    let (name, description) = *REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| ChainmailError::UnknownFixture(name.to_string()))?;
    let p3 = ["1", "2", "3"];
    let (kind, labels) = match name {
        "M3" => (
            FixtureKind::Poset(m3()),
            vec!["0", "a", "b", "c", "1"].into_iter().map(String::from).collect(),
        ),
        "N5" => (
            FixtureKind::Poset(FinitePoset::from_covers(5, &[(0, 1), (0, 2), (2, 3), (3, 4), (1, 4)])?),
            vec!["0", "b", "c", "a", "1"].into_iter().map(String::from).collect(),
        ),
        "exaA" => (FixtureKind::Poset(exa_a()), numbered(7)),
        "exaAA" => {
            let base = exa_a();
            let pair = exterior_as_absolute_with_limits(&base, &limits)?;
            let ext = crate::exterior::exterior_with_limits(&base, &limits)?;
            let labels = ext
                .sets()
                .iter()
                .map(|s| {
                    let names: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
                    format!("{{{}}}", names.join(","))
                })
                .collect();
            (FixtureKind::Pair(pair), labels)
        }
        "exaAB" => {
            let mut labels = vec!["new0".to_string()];
            labels.extend(["0", "a", "b", "c", "1"].map(String::from));
            (FixtureKind::Pair(adjoin_bottom(&m3())?), labels)
        }
        "exaB" => (
            FixtureKind::Pair(graph_connectivity_pair(&Graph::path(3), &limits)?),
            subset_labels(&p3),
        ),
        "exaE" => (FixtureKind::Poset(powerset(3)), subset_labels(&p3)),
        "exaG" => {
            let forest = FinitePoset::from_covers(3, &[(0, 2), (1, 2)])?;
            (
                FixtureKind::Pair(principal_subset_pair(&forest, &limits)?),
                subset_labels(&p3),
            )
        }
        "exaH" => {
            let h = Hypergraph::new(3, vec![masks(&[0, 1]), masks(&[1, 2])])?;
            (
                FixtureKind::Pair(hypergraph_connectivity_pair(&h, &limits)?),
                subset_labels(&p3),
            )
        }
        "exaI" => {
            let opens = [masks(&[]), masks(&[0]), masks(&[0, 1])];
            (
                FixtureKind::Pair(topology_pair(2, &opens, &limits)?),
                subset_labels(&["1", "2"]),
            )
        }
        "exaJ" => {
            let vertices = ["1", "2", "3", "4", "5", "6", "7"];
            (
                FixtureKind::Pair(k_connectivity_pair(&Graph::two_diamonds(), 2, &limits)?),
                subset_labels(&vertices),
            )
        }
        "exaK" => {
            let forest = FinitePoset::from_covers(5, &[(0, 1), (1, 3), (2, 3)])?;
            let pair = principal_downset_pair(&forest, &limits)?;
            let sets = crate::exterior::down_sets(&forest, &limits)?;
            let labels = sets
                .iter()
                .map(|s| {
                    let names: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
                    format!("{{{}}}", names.join(","))
                })
                .collect();
            (FixtureKind::Pair(pair), labels)
        }
        "exaM" => {
            // vertex 1 (bit 0) is the distinguished subset Y
            let c = (0..8usize).filter(|m| (m & !1).count_ones() == 1).collect();
            (FixtureKind::Pair(pair(powerset(3), c)), subset_labels(&p3))
        }
        "exaN" => {
            let p = FinitePoset::from_covers(6, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)])?;
            (FixtureKind::Pair(pair(p, masks(&[1, 2, 3, 5]))), numbered(6))
        }
        "exaO" => {
            // points (0,0), (1,0), (0,1), (1,1) are bits 0..3
            let rectangles = [0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b1100, 0b0101, 0b1010, 0b1111];
            (
                FixtureKind::Pair(pair(powerset(4), masks(&rectangles))),
                subset_labels(&["00", "10", "01", "11"]),
            )
        }
        "exaT" => {
            let (pair, divisors) = divisor_e1_pair(360, &limits)?;
            (
                FixtureKind::Pair(pair),
                divisors.iter().map(|d| d.to_string()).collect(),
            )
        }
        "exaU" => (
            FixtureKind::Pair(pair(powerset(3), masks(&[1, 2, 4]))),
            subset_labels(&p3),
        ),
        "exaV" => (
            FixtureKind::Pair(pair(powerset(3), masks(&[3, 5, 6]))),
            subset_labels(&p3),
        ),
        "exaW" => (FixtureKind::Pair(pair(powerset(3), masks(&[3, 6]))), subset_labels(&p3)),
        "exaX" => {
            let p = FinitePoset::from_covers(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (4, 5)])?;
            (
                FixtureKind::Pair(pair(p, masks(&[1, 2, 3]))),
                ["1", "2", "3", "4", "5", "7"].map(String::from).to_vec(),
            )
        }
        _ => unreachable!("registry and constructors list the same names"),
    };
    Ok(Fixture {
        name,
        description,
        kind,
        labels,
    })
}
