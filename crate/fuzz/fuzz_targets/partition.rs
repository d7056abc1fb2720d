#![no_main]

use lanke::combinatorics::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = text.parse::<Partition>() else { return };
    assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    if p.size() <= 200 {
        assert_eq!(p.conjugate().conjugate(), p);
    }
});
