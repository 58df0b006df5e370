//! Classify a named connectivity pair.
//!
//! cargo run --example classify_fixture -- exaX

use chainmail::classify;
use chainmail::generators::named_fixture;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "exaW".into());
    let fixture = named_fixture(&name).expect("known fixture");
    let pair = fixture.pair().expect("fixture is a connectivity pair");
    let r = classify(pair).expect("small pair");
    let connected: Vec<&str> = pair.c().iter().map(|x| fixture.labels[x].as_str()).collect();
    println!("{name}: {}", fixture.description);
    println!("connected elements: {}", connected.join(" "));
    let flags = [
        ("CL0", r.cl0),
        ("CL1", r.cl1),
        ("CL2", r.cl2),
        ("CL3", r.cl3),
        ("connectivity", r.connectivity),
        ("kernel", r.kernel),
        ("typical", r.typical),
        ("well-founded", r.well_founded),
        ("saturated", r.saturated),
        ("separated", r.separated),
        ("Serra", r.serra),
        ("absolute", r.absolute),
    ];
    for (flag, value) in flags {
        println!("  {flag:<13} {value}");
    }
}
