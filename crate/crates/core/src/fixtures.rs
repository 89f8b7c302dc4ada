//! Embedded reference maps.
//!
//! Rotations are counterclockwise. The cube, dodecahedron and Tutte graph
//! are 3-connected, so each has a unique embedding up to reflection.

use crate::error::{Error, Result};
use crate::map::PlanarMap;

/// Names accepted by [`fixture`].
pub const NAMES: [&str; 4] = ["tetrahedron", "cube", "dodecahedron", "tutte"];

/// Looks up a fixture by name.
pub fn fixture(name: &str) -> Result<PlanarMap> {
    match name {
        "tetrahedron" => Ok(tetrahedron()),
        "cube" => Ok(cube()),
        "dodecahedron" => Ok(dodecahedron()),
        "tutte" => Ok(tutte()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

fn build(rotations: &[&[usize]]) -> PlanarMap {
    PlanarMap::from_rotations(rotations.iter().map(|r| r.to_vec()).collect(), None)
        .expect("fixture rotation system is valid")
}

/// K4: outer triangle 0, 1, 2 around the centre 3.
pub fn tetrahedron() -> PlanarMap {
    build(&[&[1, 3, 2], &[2, 3, 0], &[0, 3, 1], &[0, 1, 2]])
}

/// The 3-cube with vertices labelled by their bit patterns.
pub fn cube() -> PlanarMap {
    build(&[&[1, 4, 2], &[0, 3, 5], &[0, 6, 3], &[1, 2, 7], &[0, 5, 6], &[1, 7, 4], &[2, 4, 7], &[3, 6, 5]])
}

/// The dodecahedron (20 vertices, 12 pentagons), labelled along its
/// Hamiltonian LCF cycle 0, 1, ..., 19.
pub fn dodecahedron() -> PlanarMap {
    build(&[
        &[1, 19, 10],
        &[0, 8, 2],
        &[1, 6, 3],
        &[2, 4, 19],
        &[3, 5, 17],
        &[4, 6, 15],
        &[2, 7, 5],
        &[6, 8, 14],
        &[1, 9, 7],
        &[8, 10, 13],
        &[0, 11, 9],
        &[10, 18, 12],
        &[11, 16, 13],
        &[9, 12, 14],
        &[7, 13, 15],
        &[5, 14, 16],
        &[12, 17, 15],
        &[4, 16, 18],
        &[11, 19, 17],
        &[0, 3, 18],
    ])
}

/// Tutte's 46-vertex cubic non-Hamiltonian map: three Tutte fragments
/// attached to the central vertex 0.
pub fn tutte() -> PlanarMap {
    build(&[
        &[1, 2, 3],
        &[0, 26, 4],
        &[0, 10, 11],
        &[0, 18, 19],
        &[1, 33, 5],
        &[4, 29, 6],
        &[5, 27, 7],
        &[6, 14, 8],
        &[7, 38, 9],
        &[8, 37, 10],
        &[2, 9, 39],
        &[2, 39, 12],
        &[11, 35, 13],
        &[12, 14, 15],
        &[7, 13, 34],
        &[13, 22, 16],
        &[15, 44, 17],
        &[16, 43, 18],
        &[3, 17, 45],
        &[3, 45, 20],
        &[19, 41, 21],
        &[20, 22, 23],
        &[15, 21, 40],
        &[21, 27, 24],
        &[23, 32, 25],
        &[24, 31, 26],
        &[1, 25, 33],
        &[6, 28, 23],
        &[27, 29, 32],
        &[5, 30, 28],
        &[29, 33, 31],
        &[25, 32, 30],
        &[24, 28, 31],
        &[4, 26, 30],
        &[14, 35, 38],
        &[12, 36, 34],
        &[35, 39, 37],
        &[9, 38, 36],
        &[8, 34, 37],
        &[10, 36, 11],
        &[22, 41, 44],
        &[20, 42, 40],
        &[41, 45, 43],
        &[17, 44, 42],
        &[16, 40, 43],
        &[18, 42, 19],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes: Vec<(usize, usize, usize)> = NAMES
            .iter()
            .map(|n| {
                let m = fixture(n).unwrap();
                (m.vertex_count(), m.edge_count(), m.face_count())
            })
            .collect();
        assert_eq!(sizes, vec![(4, 6, 4), (8, 12, 6), (20, 30, 12), (46, 69, 25)]);
    }

    #[test]
    fn face_lengths() {
        assert!(cube().faces().iter().all(|f| f.len() == 4));
        assert!(dodecahedron().faces().iter().all(|f| f.len() == 5));
        assert!(tutte().faces().iter().all(|f| f.is_simple()));
    }

    #[test]
    fn unknown_name() {
        assert_eq!(fixture("petersen"), Err(Error::UnknownFixture("petersen".into())));
    }
}
