//! Canonical keys, isomorphism and automorphism orbits.
//!
//! cargo run --example canonical_forms

use chainmail::FinitePoset;

fn main() {
    let n5 = FinitePoset::from_covers(5, &[(0, 1), (0, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
    let shuffled = n5.relabel(&[3, 0, 4, 1, 2]);
    println!("key {}", n5.canonical_key().to_hex());
    println!("relabelled copy isomorphic: {}", n5.is_isomorphic(&shuffled));
    println!(
        "canonical forms equal: {}",
        n5.canonical_form() == shuffled.canonical_form()
    );

    let diamond = FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
    for x in diamond.elements() {
        let orbit: Vec<usize> = diamond.elements().filter(|&y| diamond.same_orbit(x, y)).collect();
        println!("diamond element {x}: orbit {orbit:?}");
    }
}
