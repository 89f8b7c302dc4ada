#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cert) = isobar::parse_certificate(text) {
        let written = isobar::write_certificate(&cert);
        assert_eq!(isobar::parse_certificate(&written).expect("written certificate parses"), cert);
        let map = isobar::fixtures::cube();
        let _ = isobar::check_certificate(&map, &cert);
    }
});
