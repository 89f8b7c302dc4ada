//! Planar embeddings stored as rotation systems.
//!
//! A [`PlanarMap`] is a connected simple graph together with a cyclic,
//! counterclockwise order of neighbours at every vertex. Faces are the
//! orbits of the face-successor permutation on darts: the successor of
//! the dart `(u, v)` is `(v, w)` where `w` immediately follows `u` in the
//! rotation at `v`. A map is accepted only if `V - E + F = 2`, i.e. the
//! rotation system describes an embedding in the sphere.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A directed edge `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

impl Dart {
    pub fn new(tail: usize, head: usize) -> Self {
        Dart { tail, head }
    }

    pub fn reversed(self) -> Self {
        Dart::new(self.head, self.tail)
    }

    /// The undirected edge carried by this dart, smaller endpoint first.
    pub fn edge(self) -> (usize, usize) {
        if self.tail < self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.tail, self.head)
    }
}

/// A face of an embedded map, given by its boundary walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Closed walk of darts; each dart's head is the next dart's tail.
    pub boundary: Vec<Dart>,
}

impl Face {
    /// Number of boundary edges.
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Boundary vertices in walk order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.boundary.iter().map(|d| d.tail)
    }

    /// True if the boundary walk visits no vertex twice.
    pub fn is_simple(&self) -> bool {
        let mut seen: Vec<usize> = self.vertices().collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// A connected simple graph with a genus-0 rotation system and a designated outer face.
#[derive(Clone, Debug)]
pub struct PlanarMap {
    rotations: Vec<Vec<usize>>,
    outer_dart: Option<Dart>,
    offsets: Vec<usize>,
    darts: Vec<Dart>,
    twin: Vec<usize>,
    dart_face: Vec<usize>,
    faces: Vec<Face>,
    edges: Vec<(usize, usize)>,
    outer_face: usize,
}

impl PartialEq for PlanarMap {
    fn eq(&self, other: &Self) -> bool {
        self.rotations == other.rotations && self.outer_dart == other.outer_dart
    }
}

impl Eq for PlanarMap {}

impl PlanarMap {
    /// Validates a rotation system and extracts its faces.
    ///
    /// `outer` names a dart lying on the outer face; when absent the outer
    /// face is the one containing the lexicographically smallest dart.
    pub fn from_rotations(rotations: Vec<Vec<usize>>, outer: Option<Dart>) -> Result<Self> {
        let n = rotations.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedNeighbor { vertex: v, neighbor: w[0] });
                }
            }
            for &u in rot {
                if u >= n {
                    return Err(Error::NeighborOutOfRange { vertex: v, neighbor: u });
                }
                if u == v {
                    return Err(Error::SelfLoop { vertex: v });
                }
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if !rotations[u].contains(&v) {
                    return Err(Error::AsymmetricAdjacency { from: v, to: u });
                }
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            if rot.len() < 2 {
                return Err(Error::LowDegree { vertex: v, degree: rot.len() });
            }
        }
        if !is_connected(&rotations) {
            return Err(Error::Disconnected);
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut darts = Vec::new();
        for (v, rot) in rotations.iter().enumerate() {
            offsets.push(darts.len());
            darts.extend(rot.iter().map(|&u| Dart::new(v, u)));
        }
        offsets.push(darts.len());
        let twin: Vec<usize> = darts
            .iter()
            .map(|d| {
                let pos = rotations[d.head].iter().position(|&x| x == d.tail).unwrap();
                offsets[d.head] + pos
            })
            .collect();

        let successor = |d: usize| -> usize {
            let v = darts[d].head;
            let deg = offsets[v + 1] - offsets[v];
            offsets[v] + (twin[d] - offsets[v] + 1) % deg
        };

        // Orbits of the successor permutation, ordered by their minimal dart.
        let mut orbit_of = vec![usize::MAX; darts.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..darts.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                orbit_of[d] = orbits.len();
                orbit.push(d);
                d = successor(d);
                if d == start {
                    break;
                }
            }
            orbits.push(orbit);
        }
        let min_dart = |orbit: &Vec<usize>| orbit.iter().map(|&d| darts[d]).min().unwrap();
        orbits.sort_by_key(min_dart);

        let mut dart_face = vec![0; darts.len()];
        let faces: Vec<Face> = orbits
            .iter()
            .enumerate()
            .map(|(id, orbit)| {
                // Start the walk at the minimal dart so boundaries are canonical.
                let pivot = (0..orbit.len()).min_by_key(|&i| darts[orbit[i]]).unwrap();
                let boundary = orbit[pivot..]
                    .iter()
                    .chain(&orbit[..pivot])
                    .map(|&d| {
                        dart_face[d] = id;
                        darts[d]
                    })
                    .collect();
                Face { id, boundary }
            })
            .collect();

        let mut edges: Vec<(usize, usize)> =
            darts.iter().filter(|d| d.tail < d.head).map(|d| (d.tail, d.head)).collect();
        edges.sort_unstable();

        let euler = n as i64 - edges.len() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::EulerViolation { euler });
        }

        let mut map = PlanarMap {
            rotations,
            outer_dart: None,
            offsets,
            darts,
            twin,
            dart_face,
            faces,
            edges,
            outer_face: 0,
        };
        if let Some(dart) = outer {
            let id = map.dart_id(dart).ok_or(Error::UnknownDart(dart.tail, dart.head))?;
            map.outer_face = map.dart_face[id];
            map.outer_dart = Some(dart);
        }
        Ok(map)
    }

    /// Same embedding with a different designated outer face.
    pub fn with_outer(&self, outer: Option<Dart>) -> Result<Self> {
        PlanarMap::from_rotations(self.rotations.clone(), outer)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    /// Neighbours of `v` in counterclockwise order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.rotations[u].contains(&v)
    }

    /// Undirected edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of the edge `{u, v}` in [`PlanarMap::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    /// The explicitly designated outer dart, if the map was given one.
    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer_dart
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    fn dart_id(&self, dart: Dart) -> Option<usize> {
        let rot = self.rotations.get(dart.tail)?;
        let pos = rot.iter().position(|&x| x == dart.head)?;
        Some(self.offsets[dart.tail] + pos)
    }

    /// The face to which `dart` belongs.
    pub fn face_of(&self, dart: Dart) -> Option<usize> {
        self.dart_id(dart).map(|d| self.dart_face[d])
    }

    /// The two faces incident to the edge `{u, v}`: the face of `(u, v)`
    /// and the face of `(v, u)`.
    pub fn edge_faces(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        let d = self.dart_id(Dart::new(u, v))?;
        Some((self.dart_face[d], self.dart_face[self.twin[d]]))
    }

    /// Faces incident to `v`, in rotation order (a face may repeat at a cut vertex).
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        (self.offsets[v]..self.offsets[v + 1]).map(|d| self.dart_face[d]).collect()
    }

    /// Successor of a dart under the face permutation.
    pub fn face_successor(&self, dart: Dart) -> Option<Dart> {
        let d = self.dart_id(dart)?;
        let v = dart.head;
        let deg = self.degree(v);
        let next = self.offsets[v] + (self.twin[d] - self.offsets[v] + 1) % deg;
        Some(self.darts[next])
    }

    /// The dual map: one vertex per face, joined across every primal edge.
    ///
    /// Dual rotations list the neighbouring faces counterclockwise. Fails
    /// if the dual would have a loop (a bridge in the primal) or a multiple
    /// edge (two faces sharing more than one edge).
    pub fn dual(&self) -> Result<PlanarMap> {
        let mut rotations = Vec::with_capacity(self.face_count());
        for face in &self.faces {
            let mut rot: Vec<usize> =
                face.boundary.iter().map(|&d| self.dart_face[self.twin[self.dart_id(d).unwrap()]]).collect();
            rot.reverse();
            if rot.contains(&face.id) {
                return Err(Error::DualNotSimple(format!("face {} meets itself across a bridge", face.id)));
            }
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DualNotSimple(format!(
                    "faces {} and {} share more than one edge",
                    face.id, w[0]
                )));
            }
            rotations.push(rot);
        }
        PlanarMap::from_rotations(rotations, None)
    }

    /// Checks that `cycle` is a simple cycle of the map and returns its edge indices.
    pub fn cycle_edges(&self, cycle: &[usize]) -> Result<Vec<usize>> {
        if cycle.len() < 3 {
            return Err(Error::NotSimpleCycle(format!("length {} is below 3", cycle.len())));
        }
        let mut seen = vec![false; self.vertex_count()];
        for &v in cycle {
            if v >= self.vertex_count() {
                return Err(Error::NotSimpleCycle(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotSimpleCycle(format!("vertex {v} repeats")));
            }
        }
        let mut ids = Vec::with_capacity(cycle.len());
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let e = self
                .edge_index(u, v)
                .ok_or_else(|| Error::NotSimpleCycle(format!("{u} and {v} are not adjacent")))?;
            ids.push(e);
        }
        Ok(ids)
    }

    /// Splits the faces by a simple cycle. The side holding the outer face
    /// is the outer side.
    pub fn cycle_side_faces(&self, cycle: &[usize]) -> Result<CycleSides> {
        let on_cycle = self.edge_mask(&self.cycle_edges(cycle)?);
        let mut outer_side = vec![false; self.face_count()];
        let mut queue = VecDeque::from([self.outer_face]);
        outer_side[self.outer_face] = true;
        while let Some(f) = queue.pop_front() {
            for d in &self.faces[f].boundary {
                if on_cycle[self.edge_index(d.tail, d.head).unwrap()] {
                    continue;
                }
                let (_, g) = self.edge_faces(d.tail, d.head).unwrap();
                if !outer_side[g] {
                    outer_side[g] = true;
                    queue.push_back(g);
                }
            }
        }
        for &(u, v) in cycle_pairs(cycle).iter() {
            let (f, g) = self.edge_faces(u, v).unwrap();
            if outer_side[f] == outer_side[g] {
                return Err(Error::NotSimpleCycle(format!("edge {u}-{v} has both faces on one side")));
            }
        }
        let (outer, inner): (Vec<usize>, Vec<usize>) = (0..self.face_count()).partition(|&f| outer_side[f]);
        Ok(CycleSides { inner, outer })
    }

    /// The cut in the dual formed by the edges crossing a Hamiltonian cycle,
    /// together with the two dual subgraphs it separates.
    pub fn dual_cut_of_cycle(&self, cycle: &[usize]) -> Result<DualCut> {
        if cycle.len() != self.vertex_count() {
            return Err(Error::NotHamiltonian(format!(
                "cycle has {} vertices, map has {}",
                cycle.len(),
                self.vertex_count()
            )));
        }
        let sides = self.cycle_side_faces(cycle)?;
        let on_cycle = self.edge_mask(&self.cycle_edges(cycle)?);
        let mut cut_edges = Vec::new();
        let mut side_edges = (Vec::new(), Vec::new());
        let inner: Vec<bool> = {
            let mut m = vec![false; self.face_count()];
            sides.inner.iter().for_each(|&f| m[f] = true);
            m
        };
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let (f, g) = self.edge_faces(u, v).unwrap();
            let pair = (f.min(g), f.max(g));
            if on_cycle[e] {
                cut_edges.push(pair);
            } else if inner[f] {
                side_edges.0.push(pair);
            } else {
                side_edges.1.push(pair);
            }
        }
        Ok(DualCut {
            cut_edges,
            inner: DualSide { faces: sides.inner, edges: side_edges.0 },
            outer: DualSide { faces: sides.outer, edges: side_edges.1 },
        })
    }

    pub(crate) fn edge_mask(&self, ids: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.edge_count()];
        ids.iter().for_each(|&e| mask[e] = true);
        mask
    }

    /// Orientation-preserving isomorphism test; with `allow_mirror` the
    /// reflected embedding is accepted as well. The outer face is ignored.
    pub fn is_isomorphic(&self, other: &PlanarMap, allow_mirror: bool) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mine = canonical_code(&self.rotations);
        if mine == canonical_code(&other.rotations) {
            return true;
        }
        allow_mirror && {
            let mirrored: Vec<Vec<usize>> =
                other.rotations.iter().map(|r| r.iter().rev().copied().collect()).collect();
            mine == canonical_code(&mirrored)
        }
    }
}

/// The two face classes of a simple cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSides {
    pub inner: Vec<usize>,
    pub outer: Vec<usize>,
}

/// One side of a [`DualCut`]: a set of dual vertices (faces) and the dual
/// edges among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSide {
    pub faces: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl DualSide {
    /// True if the side is connected and acyclic.
    pub fn is_tree(&self) -> bool {
        if self.faces.is_empty() || self.edges.len() + 1 != self.faces.len() {
            return false;
        }
        let index = |f: usize| self.faces.binary_search(&f).ok();
        let mut parent: Vec<usize> = (0..self.faces.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for &(f, g) in &self.edges {
            let (Some(a), Some(b)) = (index(f), index(g)) else {
                return false;
            };
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

/// The dual image of a Hamiltonian cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCut {
    /// Dual edges crossing the cycle, as sorted face pairs.
    pub cut_edges: Vec<(usize, usize)>,
    pub inner: DualSide,
    pub outer: DualSide,
}

pub(crate) fn cycle_pairs(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len()).map(|i| (cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

fn is_connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == adj.len()
}

/// Smallest breadth-first relabelling code over all starting darts.
fn canonical_code(rotations: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for (v, rot) in rotations.iter().enumerate() {
        for &w in rot {
            let code = bfs_code(rotations, v, w);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

fn bfs_code(rotations: &[Vec<usize>], root: usize, first: usize) -> Vec<usize> {
    let n = rotations.len();
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![0; n];
    let mut order = vec![root];
    label[root] = 0;
    entry[root] = first;
    let mut code = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        let rot = &rotations[v];
        let start = rot.iter().position(|&x| x == entry[v]).unwrap();
        code.push(n + rot.len());
        for k in 0..rot.len() {
            let u = rot[(start + k) % rot.len()];
            if label[u] == usize::MAX {
                label[u] = order.len();
                entry[u] = v;
                order.push(u);
            }
            code.push(label[u]);
        }
        i += 1;
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn k5() -> Vec<Vec<usize>> {
        (0..5).map(|v| (0..5).filter(|&u| u != v).collect()).collect()
    }

    #[test]
    fn tetrahedron_counts() {
        let m = fixtures::tetrahedron();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (4, 6, 4));
        assert!(m.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k5_is_rejected() {
        assert!(matches!(PlanarMap::from_rotations(k5(), None), Err(Error::EulerViolation { .. })));
    }

    #[test]
    fn structural_errors() {
        let asym = vec![vec![1, 2], vec![0, 2], vec![1]];
        assert!(matches!(
            PlanarMap::from_rotations(asym, None),
            Err(Error::AsymmetricAdjacency { from: 0, to: 2 })
        ));
        let path = vec![vec![1], vec![0, 2], vec![1]];
        assert!(matches!(PlanarMap::from_rotations(path, None), Err(Error::LowDegree { vertex: 0, .. })));
        let two_triangles = vec![vec![1, 2], vec![2, 0], vec![0, 1], vec![4, 5], vec![5, 3], vec![3, 4]];
        assert_eq!(PlanarMap::from_rotations(two_triangles, None), Err(Error::Disconnected));
        assert!(matches!(
            PlanarMap::from_rotations(vec![vec![0, 1], vec![0, 0]], None),
            Err(Error::SelfLoop { .. }) | Err(Error::RepeatedNeighbor { .. })
        ));
        assert_eq!(fixtures::tetrahedron().with_outer(Some(Dart::new(0, 0))), Err(Error::UnknownDart(0, 0)));
    }

    #[test]
    fn faces_sorted_by_minimal_dart() {
        for m in [fixtures::cube(), fixtures::dodecahedron(), fixtures::tutte()] {
            let mins: Vec<Dart> = m.faces().iter().map(|f| f.boundary[0]).collect();
            for (face, min) in m.faces().iter().zip(&mins) {
                assert_eq!(face.boundary.iter().min(), Some(min));
            }
            assert!(mins.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(m.outer_face(), 0);
        }
    }

    #[test]
    fn face_walks_are_closed() {
        let m = fixtures::dodecahedron();
        for face in m.faces() {
            for i in 0..face.len() {
                let d = face.boundary[i];
                let next = face.boundary[(i + 1) % face.len()];
                assert_eq!(d.head, next.tail);
                assert_eq!(m.face_successor(d), Some(next));
            }
        }
    }

    #[test]
    fn dual_of_tetrahedron_and_cube() {
        let t = fixtures::tetrahedron();
        let td = t.dual().unwrap();
        assert!(td.is_isomorphic(&t, false));
        let c = fixtures::cube();
        let oct = c.dual().unwrap();
        assert_eq!((oct.vertex_count(), oct.edge_count()), (6, 12));
        assert!((0..6).all(|v| oct.degree(v) == 4));
    }

    #[test]
    fn dual_rejects_shared_edges() {
        // A square with one diagonal: the two triangles share one edge, but
        // the outer face meets each triangle twice.
        let m = PlanarMap::from_rotations(vec![vec![1, 2, 3], vec![2, 0], vec![3, 0, 1], vec![0, 2]], None)
            .unwrap();
        assert!(matches!(m.dual(), Err(Error::DualNotSimple(_))));
    }

    #[test]
    fn cycle_sides_of_tetrahedron() {
        let m = fixtures::tetrahedron();
        let sides = m.cycle_side_faces(&[0, 1, 2, 3]).unwrap();
        assert_eq!((sides.inner.len(), sides.outer.len()), (2, 2));
        assert!(sides.outer.contains(&m.outer_face()));
        assert!(m.cycle_side_faces(&[0, 1, 0]).is_err());
        assert!(m.cycle_side_faces(&[0, 1]).is_err());
    }

    #[test]
    fn dual_cut_needs_hamiltonian_cycle() {
        let m = fixtures::cube();
        let face: Vec<usize> = m.face(1).vertices().collect();
        assert!(matches!(m.dual_cut_of_cycle(&face), Err(Error::NotHamiltonian(_))));
    }

    #[test]
    fn tetrahedron_dual_cut() {
        let cut = fixtures::tetrahedron().dual_cut_of_cycle(&[0, 1, 2, 3]).unwrap();
        assert_eq!(cut.cut_edges.len(), 4);
        assert!(cut.inner.is_tree() && cut.outer.is_tree());
        assert_eq!((cut.inner.faces.len(), cut.outer.faces.len()), (2, 2));
    }

    #[test]
    fn isomorphism_detects_relabelling_and_mirror() {
        let m = fixtures::cube();
        // Relabel v -> 7 - v.
        let relabeled: Vec<Vec<usize>> =
            (0..8).map(|v| m.rotation(7 - v).iter().map(|&u| 7 - u).collect()).collect();
        let r = PlanarMap::from_rotations(relabeled, None).unwrap();
        assert!(m.is_isomorphic(&r, false));
        let tutte = fixtures::tutte();
        let mirrored: Vec<Vec<usize>> =
            tutte.rotations().iter().map(|r| r.iter().rev().copied().collect()).collect();
        let mirrored = PlanarMap::from_rotations(mirrored, None).unwrap();
        assert!(tutte.is_isomorphic(&mirrored, true));
        assert!(!tutte.is_isomorphic(&fixtures::dodecahedron(), true));
    }
}
