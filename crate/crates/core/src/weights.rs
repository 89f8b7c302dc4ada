//! Face weights and the weight balance of a Hamiltonian cycle.
//!
//! The weight of a face is its boundary length minus two. For a set of
//! `nu` faces whose boundary lengths sum to `sigma`, the total weight is
//! `sigma - 2 nu`. A Hamiltonian cycle of length `h` splits the faces of a
//! plane map into an inner and an outer class whose weights both equal
//! `h - 2`.

use crate::error::{Error, Result};
use crate::hamilton::HamiltonianCycle;
use crate::map::{Face, PlanarMap};

pub fn face_weight(face: &Face) -> i64 {
    face.len() as i64 - 2
}

/// Weights of all faces, indexed by face id.
pub fn face_weights(map: &PlanarMap) -> Vec<i64> {
    map.faces().iter().map(face_weight).collect()
}

/// Face count, boundary-length sum and weight sum of a set of faces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WeightSummary {
    pub nu: usize,
    pub sigma_total: usize,
    pub s: i64,
}

impl WeightSummary {
    fn add_length(&mut self, len: usize) {
        self.nu += 1;
        self.sigma_total += len;
        self.s += len as i64 - 2;
    }
}

pub fn weight_summary<'a>(faces: impl IntoIterator<Item = &'a Face>) -> WeightSummary {
    let mut summary = WeightSummary::default();
    faces.into_iter().for_each(|f| summary.add_length(f.len()));
    summary
}

/// Inner and outer weight sums of a Hamiltonian cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrinbergIdentity {
    pub s1: i64,
    pub s2: i64,
    pub h: usize,
    /// `s1 == s2 == h - 2`.
    pub holds: bool,
}

pub fn verify_grinberg_identity(map: &PlanarMap, cycle: &HamiltonianCycle) -> Result<GrinbergIdentity> {
    let sides = sides_of_hamiltonian(map, cycle)?;
    let sum = |ids: &[usize]| weight_summary(ids.iter().map(|&f| map.face(f))).s;
    let (s1, s2) = (sum(&sides.inner), sum(&sides.outer));
    let h = cycle.h();
    let target = h as i64 - 2;
    Ok(GrinbergIdentity { s1, s2, h, holds: s1 == target && s2 == target })
}

fn sides_of_hamiltonian(map: &PlanarMap, cycle: &HamiltonianCycle) -> Result<crate::map::CycleSides> {
    if cycle.h() != map.vertex_count() {
        return Err(Error::NotHamiltonian(format!(
            "cycle has {} vertices, map has {}",
            cycle.h(),
            map.vertex_count()
        )));
    }
    map.cycle_side_faces(cycle.vertices())
}

/// Edges off the cycle, split by the side of the plane they run through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chords {
    pub inner: Vec<(usize, usize)>,
    pub outer: Vec<(usize, usize)>,
}

pub fn classify_chords(map: &PlanarMap, cycle: &HamiltonianCycle) -> Result<Chords> {
    let sides = sides_of_hamiltonian(map, cycle)?;
    let mut inner_face = vec![false; map.face_count()];
    sides.inner.iter().for_each(|&f| inner_face[f] = true);
    let on_cycle = cycle.edges();
    let mut chords = Chords { inner: Vec::new(), outer: Vec::new() };
    for &(u, v) in map.edges() {
        if on_cycle.binary_search(&(u, v)).is_ok() {
            continue;
        }
        let (f, g) = map.edge_faces(u, v).unwrap();
        debug_assert_eq!(inner_face[f], inner_face[g]);
        if inner_face[f] {
            chords.inner.push((u, v));
        } else {
            chords.outer.push((u, v));
        }
    }
    Ok(chords)
}

/// Per-side weight accounting after some chords have been restored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReplayStep {
    pub chords_restored: usize,
    pub inner: WeightSummary,
    pub outer: WeightSummary,
}

/// Deletes every chord, then restores them one at a time in edge order,
/// recording the inner and outer face accounting of each intermediate map.
///
/// Each intermediate map is a genuine sub-embedding with its own faces; a
/// face is attributed to the side of any original face it contains.
pub fn chord_restoration_replay(map: &PlanarMap, cycle: &HamiltonianCycle) -> Result<Vec<ReplayStep>> {
    let sides = sides_of_hamiltonian(map, cycle)?;
    let mut inner_face = vec![false; map.face_count()];
    sides.inner.iter().for_each(|&f| inner_face[f] = true);
    let on_cycle = cycle.edges();
    let chords: Vec<(usize, usize)> =
        map.edges().iter().copied().filter(|e| on_cycle.binary_search(e).is_err()).collect();

    let mut steps = Vec::with_capacity(chords.len() + 1);
    for k in 0..=chords.len() {
        let mut keep = on_cycle.clone();
        keep.extend_from_slice(&chords[..k]);
        keep.sort_unstable();
        let rotations: Vec<Vec<usize>> = map
            .rotations()
            .iter()
            .enumerate()
            .map(|(v, rot)| {
                rot.iter().copied().filter(|&u| keep.binary_search(&(v.min(u), v.max(u))).is_ok()).collect()
            })
            .collect();
        let sub = PlanarMap::from_rotations(rotations, None)?;
        let mut step = ReplayStep {
            chords_restored: k,
            inner: WeightSummary::default(),
            outer: WeightSummary::default(),
        };
        for face in sub.faces() {
            let original = map.face_of(face.boundary[0]).unwrap();
            if inner_face[original] {
                step.inner.add_length(face.len());
            } else {
                step.outer.add_length(face.len());
            }
        }
        steps.push(step);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hamilton::enumerate_hamiltonian_cycles;

    #[test]
    fn weights_of_polygons() {
        let m = fixtures::dodecahedron();
        assert!(face_weights(&m).iter().all(|&w| w == 3));
        assert!(face_weights(&fixtures::tetrahedron()).iter().all(|&w| w == 1));
    }

    #[test]
    fn summaries() {
        let cube = fixtures::cube();
        assert_eq!(weight_summary(cube.faces()), WeightSummary { nu: 6, sigma_total: 24, s: 12 });
        assert_eq!(weight_summary([]), WeightSummary::default());
        let d = fixtures::dodecahedron();
        assert_eq!(weight_summary(d.faces()), WeightSummary { nu: 12, sigma_total: 60, s: 36 });
    }

    #[test]
    fn tetrahedron_identity_and_chords() {
        let m = fixtures::tetrahedron();
        let c = HamiltonianCycle::new(&m, &[0, 1, 2, 3]).unwrap();
        let id = verify_grinberg_identity(&m, &c).unwrap();
        assert_eq!((id.s1, id.s2, id.holds), (2, 2, true));
        let chords = classify_chords(&m, &c).unwrap();
        assert_eq!((chords.inner.len(), chords.outer.len()), (1, 1));
    }

    #[test]
    fn cube_and_dodecahedron_chords() {
        for (m, per_side) in [(fixtures::cube(), 2), (fixtures::dodecahedron(), 5)] {
            for c in enumerate_hamiltonian_cycles(&m, usize::MAX) {
                let chords = classify_chords(&m, &c).unwrap();
                assert_eq!((chords.inner.len(), chords.outer.len()), (per_side, per_side));
            }
        }
    }

    #[test]
    fn replay_starts_with_two_faces() {
        let m = fixtures::cube();
        let c = enumerate_hamiltonian_cycles(&m, 1).remove(0);
        let steps = chord_restoration_replay(&m, &c).unwrap();
        assert_eq!(steps.len(), 5);
        let first = steps[0];
        assert_eq!((first.inner.nu, first.inner.sigma_total, first.inner.s), (1, 8, 6));
        assert_eq!((first.outer.nu, first.outer.sigma_total, first.outer.s), (1, 8, 6));
        let last = steps[4];
        assert_eq!(last.inner.nu + last.outer.nu, 6);
    }

    #[test]
    fn non_hamiltonian_input_is_rejected() {
        let m = fixtures::cube();
        let short = HamiltonianCycle::new(&fixtures::tetrahedron(), &[0, 1, 2, 3]).unwrap();
        assert!(matches!(verify_grinberg_identity(&m, &short), Err(Error::NotHamiltonian(_))));
    }
}
