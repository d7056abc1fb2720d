#![no_main]

use lanke::combinatorics::Tableau;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(t) = text.parse::<Tableau>() else { return };
    assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
    let _ = t.is_standard();
    let _ = t.reading_word();
});
