//! Connectivity pairs from graphs, hypergraphs, topologies and forests.
//!
//! cargo run --example connectivity_sources

use chainmail::classify;
use chainmail::generators::{
    graph_connectivity_pair, hypergraph_connectivity_pair, k_connectivity_pair, principal_downset_pair, topology_pair,
    Graph, Hypergraph,
};
use chainmail::{ConnectivityPair, ElementSet, FinitePoset, Limits};

fn show(name: &str, pair: &ConnectivityPair) {
    let r = classify(pair).unwrap();
    println!(
        "{name:<22} |L|={:<4} |C|={:<3} connectivity={} separated={} absolute={}",
        pair.len(),
        pair.c().len(),
        r.connectivity,
        r.separated,
        r.absolute
    );
}

fn main() {
    let limits = Limits::generous();
    show(
        "path on 3 vertices",
        &graph_connectivity_pair(&Graph::path(3), &limits).unwrap(),
    );
    show(
        "edgeless on 3",
        &graph_connectivity_pair(&Graph::edgeless(3), &limits).unwrap(),
    );
    show(
        "two diamonds, k = 2",
        &k_connectivity_pair(&Graph::two_diamonds(), 2, &limits).unwrap(),
    );
    let h = Hypergraph::new(3, vec![[0, 1].into_iter().collect(), [1, 2].into_iter().collect()]).unwrap();
    show(
        "hypergraph {12,23}",
        &hypergraph_connectivity_pair(&h, &limits).unwrap(),
    );
    let opens: Vec<ElementSet> = [0u64, 1, 3].into_iter().map(ElementSet::from_mask).collect();
    show("Sierpinski space", &topology_pair(2, &opens, &limits).unwrap());
    let forest = FinitePoset::from_covers(5, &[(0, 1), (1, 3), (2, 3)]).unwrap();
    show("forest down-sets", &principal_downset_pair(&forest, &limits).unwrap());
}
