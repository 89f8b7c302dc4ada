#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(map) = isobar::parse_map(text) {
        let written = isobar::write_map(&map);
        let again = isobar::parse_map(&written).expect("written map parses");
        assert_eq!(again, map);
        assert_eq!(isobar::write_map(&again), written);
        assert_eq!(map.vertex_count() + map.face_count(), map.edge_count() + 2);
    }
});
