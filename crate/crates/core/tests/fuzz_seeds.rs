//! Replays the checked-in fuzz corpus seeds through the same round trips
//! the fuzz targets perform.

use std::fs;
use std::path::PathBuf;

use lanke::bracket::{Bracket, BracketedWord};
use lanke::characters::ClassFunction;
use lanke::combinatorics::{Partition, Tableau};
use lanke::config::RunConfig;
use lanke::linalg::triplet::{parse_triplets, write_triplets};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            (path.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn bracket_seeds() {
    for (name, text) in seeds("bracket") {
        let tree: Bracket = text.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(tree.to_string().parse::<Bracket>().unwrap(), tree);
        let word = BracketedWord::new(tree);
        assert_eq!(word.is_ok(), name != "repeated", "{name}");
    }
}

#[test]
fn partition_and_tableau_seeds() {
    for (name, text) in seeds("partition") {
        let p: Partition = text.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }
    for (name, text) in seeds("tableau") {
        let t: Tableau = text.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(t.is_standard(), "{name}");
    }
}

#[test]
fn triplet_seeds() {
    for (name, text) in seeds("triplet") {
        let m = parse_triplets(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(write_triplets(&m), text);
    }
}

#[test]
fn class_function_and_config_seeds() {
    for (name, text) in seeds("class_function") {
        let chi: ClassFunction = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(serde_json::from_str::<ClassFunction>(&serde_json::to_string(&chi).unwrap()).unwrap(), chi);
    }
    for (name, text) in seeds("run_config") {
        text.parse::<RunConfig>().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
