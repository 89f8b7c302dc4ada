use isobar::hamilton::enumerate_hamiltonian_cycles;
use isobar::weights::classify_chords;
use isobar::{chord_restoration_replay, fixtures, verify_grinberg_identity};

#[test]
fn sides_keep_their_weight_while_chords_return() {
    for name in fixtures::NAMES {
        let map = fixtures::fixture(name).unwrap();
        for cycle in enumerate_hamiltonian_cycles(&map, usize::MAX) {
            let target = cycle.h() as i64 - 2;
            let chords = classify_chords(&map, &cycle).unwrap();
            let steps = chord_restoration_replay(&map, &cycle).unwrap();
            assert_eq!(steps.len(), chords.inner.len() + chords.outer.len() + 1);
            assert_eq!((steps[0].inner.nu, steps[0].outer.nu), (1, 1));
            for step in &steps {
                assert_eq!((step.inner.s, step.outer.s), (target, target), "{name}");
                assert_eq!(step.inner.s, step.inner.sigma_total as i64 - 2 * step.inner.nu as i64);
            }
            let last = steps.last().unwrap();
            assert_eq!(last.inner.nu, chords.inner.len() + 1);
            assert_eq!(last.outer.nu, chords.outer.len() + 1);
            assert!(verify_grinberg_identity(&map, &cycle).unwrap().holds);
        }
    }
}
