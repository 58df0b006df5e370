mod common;

use chainmail::enumeration::{enumerate, enumerate_connectivity_pairs, EnumerationOptions, Kind};
use chainmail::io::{read_catalog, write_catalog};
use chainmail::{FinitePoset, Limits};
use common::*;

fn catalog(kind: Kind, n: usize, threads: Option<usize>) -> Vec<FinitePoset> {
    let opts = EnumerationOptions {
        threads,
        catalog: true,
        deep: false,
    };
    enumerate(kind, n, &opts).unwrap().catalog.unwrap()
}

fn count(kind: Kind, n: usize) -> u64 {
    enumerate(kind, n, &EnumerationOptions::default()).unwrap().count
}

#[test]
fn connected_chainmail_counts() {
    let counts: Vec<u64> = (0..=7).map(|n| count(Kind::Chainmails, n)).collect();
    assert_eq!(counts, [1, 1, 1, 2, 5, 16, 62, 303]);
}

#[test]
fn poset_and_lattice_counts() {
    let posets: Vec<u64> = (0..=7).map(|n| count(Kind::Posets, n)).collect();
    assert_eq!(posets, [1, 1, 2, 5, 16, 63, 318, 2045]);
    let lattices: Vec<u64> = (0..=7).map(|n| count(Kind::Lattices, n)).collect();
    assert_eq!(lattices, [0, 1, 1, 1, 2, 5, 15, 53]);
}

#[test]
fn chainmail_catalog_is_the_filtered_poset_catalog() {
    for n in 1..=6 {
        let mut expected: Vec<_> = posets(n)
            .into_iter()
            .filter(|p| order_connected(p, &elements(p)) && chainmail_all_mails(p))
            .map(|p| p.canonical_key())
            .collect();
        expected.sort();
        let ours: Vec<_> = catalog(Kind::Chainmails, n, None)
            .iter()
            .map(|p| p.canonical_key())
            .collect();
        assert_eq!(ours, expected, "n = {n}");
    }
}

#[test]
fn lattice_catalog_is_the_filtered_poset_catalog() {
    for n in 1..=6 {
        let expected = posets(n).into_iter().filter(finite_lattice).count();
        let ours = catalog(Kind::Lattices, n, None);
        assert_eq!(ours.len(), expected, "n = {n}");
        assert!(ours.iter().all(complete_lattice));
    }
}

#[test]
fn catalog_entries_are_canonical_and_distinct() {
    for kind in [Kind::Posets, Kind::Chainmails, Kind::Lattices] {
        let c = catalog(kind, 6, None);
        assert!(c.iter().all(|p| p.canonical_form() == *p), "{kind:?}");
        assert!(
            c.windows(2).all(|w| w[0].canonical_key() < w[1].canonical_key()),
            "{kind:?}"
        );
    }
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for kind in [Kind::Posets, Kind::Chainmails, Kind::Lattices] {
        let one = catalog(kind, 7, Some(1));
        for t in [4, 8] {
            assert_eq!(catalog(kind, 7, Some(t)), one, "{kind:?} with {t} threads");
        }
    }
}

#[test]
fn catalog_round_trips_through_json_lines() {
    let c = catalog(Kind::Chainmails, 6, None);
    let mut bytes = Vec::new();
    write_catalog(&mut bytes, &c).unwrap();
    assert_eq!(bytes.iter().filter(|&&b| b == b'\n').count(), c.len());
    let back = read_catalog(bytes.as_slice(), &Limits::default()).unwrap();
    assert_eq!(back, c);
}

#[test]
fn size_caps_are_enforced() {
    let err = enumerate(Kind::Chainmails, 11, &EnumerationOptions::default()).unwrap_err();
    assert!(err.is_limit());
    let deep = EnumerationOptions {
        deep: true,
        ..EnumerationOptions::default()
    };
    assert!(enumerate(Kind::Chainmails, 11, &deep).unwrap_err().is_limit());
    assert!(enumerate(Kind::Chainmails, 9, &EnumerationOptions::default())
        .unwrap_err()
        .is_limit());
}

#[test]
fn connectivity_pair_corpus() {
    let pairs: Vec<_> = enumerate_connectivity_pairs(4).unwrap().collect();
    // 1 + 1 + 1 + 2 lattices with 2^n subsets each
    assert_eq!(pairs.len(), 2 + 4 + 8 + 2 * 16);
    assert!(pairs.windows(2).all(|w| w[0].len() <= w[1].len()));
    assert!(enumerate_connectivity_pairs(8).is_err());
}
