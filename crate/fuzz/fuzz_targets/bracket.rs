#![no_main]

use lanke::bracket::{Bracket, BracketedWord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(tree) = text.parse::<Bracket>() else { return };
    let again: Bracket = tree.to_string().parse().expect("display output parses");
    assert_eq!(again, tree);
    if tree.leaves().len() > 64 {
        return;
    }
    if let Ok(word) = BracketedWord::new(tree) {
        let signed = word.canonicalize();
        assert!(signed.word.tree().is_canonical());
        assert!(signed.sign == 1 || signed.sign == -1);
    }
});
