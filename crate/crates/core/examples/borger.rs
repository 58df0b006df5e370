//! The three closure conditions on a subset of a poset, checked on every
//! subset of a small chainmail.
//!
//! cargo run --example borger

use chainmail::connectivity::borger_implication_check;
use chainmail::generators::named_fixture;
use chainmail::{ElementSet, Limits};

fn main() {
    let f = named_fixture("exaA").unwrap();
    let p = f.poset();
    let limits = Limits::default();
    let mut tally = [0usize; 3];
    for mask in 0u64..1 << p.len() {
        let c = ElementSet::from_mask(mask);
        let r = borger_implication_check(p, &c, &limits).unwrap();
        assert!(r.consistent);
        for (i, holds) in [r.multicoreflective, r.orthogonality_closed, r.local_join_closed]
            .into_iter()
            .enumerate()
        {
            tally[i] += usize::from(holds);
        }
    }
    println!("subsets of exaA: {}", 1u64 << p.len());
    println!("  multicoreflective     {}", tally[0]);
    println!("  orthogonality closed  {}", tally[1]);
    println!("  local-join closed     {}", tally[2]);
}
