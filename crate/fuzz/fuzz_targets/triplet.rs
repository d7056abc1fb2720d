#![no_main]

use lanke::linalg::triplet::{parse_triplets, write_triplets};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = parse_triplets(text) else { return };
    let written = write_triplets(&m);
    assert_eq!(parse_triplets(&written).unwrap(), m);
});
