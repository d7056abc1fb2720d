#![no_main]

use lanke::characters::ClassFunction;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(chi) = serde_json::from_slice::<ClassFunction>(data) else { return };
    let json = serde_json::to_string(&chi).unwrap();
    assert_eq!(serde_json::from_str::<ClassFunction>(&json).unwrap(), chi);
});
