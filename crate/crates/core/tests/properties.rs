mod common;

use common::{relabel, sample_maps};
use isobar::hamilton::enumerate_hamiltonian_cycles;
use isobar::{face_weights, parse_map, verify_grinberg_identity, write_map, Dart, PlanarMap};
use proptest::prelude::*;

/// A sample map under a random relabelling and a random outer face.
fn arb_map() -> impl Strategy<Value = PlanarMap> {
    let pool = sample_maps();
    (0..pool.len(), any::<u64>(), any::<usize>()).prop_map(move |(i, seed, dart)| {
        let map = &pool[i].1;
        let n = map.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for k in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(k, (state % (k as u64 + 1)) as usize);
        }
        let map = relabel(map, &perm);
        let (u, v) = map.edges()[dart % map.edge_count()];
        map.with_outer(Some(Dart::new(u, v))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(map in arb_map()) {
        let text = write_map(&map);
        let back = parse_map(&text).unwrap();
        prop_assert_eq!(&back, &map);
        prop_assert_eq!(write_map(&back), text);
    }

    #[test]
    fn euler_formula(map in arb_map()) {
        let (v, e, f) = (map.vertex_count() as i64, map.edge_count() as i64, map.face_count() as i64);
        prop_assert_eq!(v - e + f, 2);
        let boundary: usize = map.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(boundary, 2 * map.edge_count());
    }

    #[test]
    fn dual_of_dual_is_isomorphic(map in arb_map()) {
        let dual = map.dual().unwrap();
        prop_assert_eq!(dual.vertex_count(), map.face_count());
        prop_assert_eq!(dual.face_count(), map.vertex_count());
        prop_assert!(dual.dual().unwrap().is_isomorphic(&map, false));
    }

    #[test]
    fn cubic_total_weight(map in arb_map()) {
        let total: i64 = face_weights(&map).iter().sum();
        prop_assert_eq!(total, 2 * (map.vertex_count() as i64 - 2));
    }

    #[test]
    fn identity_on_found_cycles(map in arb_map()) {
        for cycle in enumerate_hamiltonian_cycles(&map, 4) {
            let id = verify_grinberg_identity(&map, &cycle).unwrap();
            let target = cycle.h() as i64 - 2;
            prop_assert_eq!((id.s1, id.s2, id.holds), (target, target, true));
        }
    }
}
