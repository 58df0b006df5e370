//! Count connected chainmails, posets and lattices up to isomorphism.
//!
//! cargo run --release --example enumerate -- 8

use chainmail::enumeration::{enumerate, EnumerationOptions, Kind};

fn main() {
    let max: usize = std::env::args().nth(1).map_or(7, |s| s.parse().expect("a size"));
    println!("{:>3} {:>10} {:>10} {:>8}", "n", "chainmails", "posets", "lattices");
    for n in 0..=max {
        let count = |kind| {
            enumerate(kind, n, &EnumerationOptions::default()).map_or_else(|_| "-".to_string(), |r| r.count.to_string())
        };
        println!(
            "{n:>3} {:>10} {:>10} {:>8}",
            count(Kind::Chainmails),
            count(Kind::Posets),
            count(Kind::Lattices)
        );
    }
}
