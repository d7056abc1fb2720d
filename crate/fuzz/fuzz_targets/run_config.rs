#![no_main]

use lanke::config::RunConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = text.parse::<RunConfig>() {
        cfg.validate().expect("parsed configs are valid");
    }
});
