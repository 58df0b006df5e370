//! The predicates E1-E4 on lattice elements, and the ΣC sublattice.
//!
//! cargo run --example absolute_elements

use chainmail::connectivity::SigmaClosure;
use chainmail::generators::{divisor_lattice, named_fixture};
use chainmail::{Lattice, Limits};

fn main() {
    let limits = Limits::generous();
    for name in ["M3", "N5"] {
        let f = named_fixture(name).unwrap();
        let l = Lattice::new(f.poset().clone()).unwrap();
        let e = l.e_summary(&limits).unwrap();
        let names = |s: &chainmail::ElementSet| s.iter().map(|x| f.labels[x].clone()).collect::<Vec<_>>().join(" ");
        println!(
            "{name}: E1 [{}] E2 [{}] E3 [{}] E4 [{}]",
            names(&e.e1),
            names(&e.e2),
            names(&e.e3),
            names(&e.e4)
        );
    }

    let (p, divisors) = divisor_lattice(60, &limits).unwrap();
    let l = Lattice::new(p).unwrap();
    let e4: Vec<u64> = l.e_summary(&limits).unwrap().e4.iter().map(|i| divisors[i]).collect();
    println!("divisors of 60, E4: {e4:?} (distributive: {})", l.is_distributive());

    let n = named_fixture("exaN").unwrap();
    let sigma = SigmaClosure::of(n.pair().unwrap());
    let labels: Vec<&str> = sigma.embedding.iter().map(|&x| n.labels[x].as_str()).collect();
    println!("exaN: ΣC = {{{}}}", labels.join(","));
}
