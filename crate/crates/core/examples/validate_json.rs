//! Parse a poset document and report which axiom fails, if any.
//!
//! cargo run --example validate_json

use chainmail::io::PosetDocument;
use chainmail::Limits;

fn main() {
    let documents = [
        r#"{"n":4,"leq":[[0,1],[0,2],[1,3],[2,3]],"closure":"reflexive-transitive"}"#,
        r#"{"n":3,"leq":[[0,1],[1,2]]}"#,
        r#"{"n":2,"leq":[[0,1],[1,0]],"closure":"reflexive-transitive"}"#,
    ];
    for text in documents {
        let parsed = PosetDocument::parse(text).and_then(|d| d.poset(&Limits::default()));
        match parsed {
            Ok(p) => println!("{text}\n  valid, {} elements, chainmail: {}", p.len(), p.is_chainmail()),
            Err(e) => println!("{text}\n  {e}"),
        }
    }
}
