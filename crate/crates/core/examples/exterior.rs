//! The exterior of a chainmail: its totally mail-disconnected sets under
//! domination, which form a complete lattice.
//!
//! cargo run --example exterior

use chainmail::exterior::{downclosed_subchainmails, tmd_to_downset};
use chainmail::generators::named_fixture;
use chainmail::{exterior, Lattice};

fn main() {
    let fixture = named_fixture("exaA").unwrap();
    let base = fixture.poset();
    let ext = exterior(base).unwrap();
    let name = |s: &chainmail::ElementSet| {
        let labels: Vec<&str> = s.iter().map(|x| fixture.labels[x].as_str()).collect();
        format!("{{{}}}", labels.join(","))
    };
    println!("{} TMD sets:", ext.len());
    for s in ext.sets() {
        println!("  {:<8} down-set {}", name(s), name(&tmd_to_downset(base, s).unwrap()));
    }
    let lattice = Lattice::new(ext.order().clone()).unwrap();
    let (a, b) = (
        ext.index_of(&fixture.elements(&["2"])).unwrap(),
        ext.index_of(&fixture.elements(&["3"])).unwrap(),
    );
    println!("{{2}} join {{3}} = {}", name(&ext.sets()[lattice.join(a, b)]));
    let family = downclosed_subchainmails(base).unwrap();
    println!(
        "isomorphic to the down-closed subchainmails: {}",
        ext.order().is_isomorphic(&family.order)
    );
}
