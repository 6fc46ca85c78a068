//! Corpus files and graph6 round trips.

use szeged::enumerate::{class_members, load_corpus, save_corpus, GraphClass, Guards};
use szeged::graph6::parse_graph6_lines;
use szeged::{canonical_key, emit_graph6, parse_graph6};

#[test]
fn corpus_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let guards = Guards::default();
    for (class, n) in [(GraphClass::Trees, 10), (GraphClass::Unicyclic, 8), (GraphClass::Bicyclic, 7), (GraphClass::Connected, 6)] {
        let graphs = class_members(class, n, &guards).unwrap();
        let path = save_corpus(dir.path(), class, n, &graphs).unwrap();
        let loaded = load_corpus(dir.path(), class, n).unwrap().expect("written");
        assert_eq!(loaded.as_slice(), graphs.as_slice());
        let text = std::fs::read_to_string(path).unwrap();
        assert_eq!(parse_graph6_lines(&text).unwrap().len(), graphs.len());
    }
    assert!(load_corpus(dir.path(), GraphClass::Trees, 11).unwrap().is_none());
}

#[test]
fn graph6_round_trip_over_a_class() {
    let graphs = class_members(GraphClass::Connected, 7, &Guards::default()).unwrap();
    for g in graphs.iter() {
        let s = emit_graph6(g);
        assert_eq!(&parse_graph6(&s).unwrap(), g);
        // corpus entries are already canonical
        assert_eq!(canonical_key(g).as_str(), s);
    }
}
