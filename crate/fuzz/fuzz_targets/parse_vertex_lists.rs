#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(lists) = isobar::format::parse_vertex_lists(text) {
        let _ = isobar::PlanarMap::from_rotations(lists, None);
    }
});
