#![no_main]

use lanke::garnir::GarnirMode;
use lanke::selftest::Level;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(mode) = text.parse::<GarnirMode>() {
        assert_eq!(mode.to_string().parse::<GarnirMode>().unwrap(), mode);
    }
    if let Ok(level) = text.parse::<Level>() {
        assert_eq!(level.to_string().parse::<Level>().unwrap(), level);
    }
});
