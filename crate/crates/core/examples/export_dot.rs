//! Write a Hasse diagram in DOT, with connected elements hollow.
//!
//! cargo run --example export_dot -- exaN | dot -Tsvg > exaN.svg

use chainmail::dot::export_dot;
use chainmail::generators::named_fixture;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "exaN".into());
    let f = named_fixture(&name).expect("known fixture");
    print!("{}", export_dot(f.poset(), f.pair().map(|p| p.c()), Some(&f.labels)));
}
