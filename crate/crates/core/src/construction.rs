//! The layered triangulations `G'(alpha, beta)` and their cubic duals.
//!
//! With `L = 3^alpha * beta` and `beta = 2 (mod 3)`:
//!
//! 1. a hub `x` is joined to a cycle `C_0` of length `L`, and the strip
//!    between `C_0` and a second cycle `C_1` of length `L` is triangulated
//!    in zigzag fashion, so `C_0` vertices get degree 5 and every `C_1`
//!    vertex receives two edges from inside;
//! 2. `alpha` annulus layers follow. Layer `i` cuts `C_i` into consecutive
//!    triples `(a, b, c)` and attaches to each triple a gadget with three
//!    interior vertices and four vertices of the next cycle, giving `a`, `b`,
//!    `c` final degrees 8, 5, 8, every gadget vertex degree 5, and every
//!    vertex of `C_{i+1}` exactly two edges from inside. Hence
//!    `|C_i| = 3^(alpha-i+1) 4^(i-1) beta`;
//! 3. an apex `z` is joined to all of `C_{alpha+1}`, so `deg z = 4^alpha beta`.
//!
//! In the dual cubic map the face of `x` has weight `3^alpha beta - 2`, not
//! divisible by 3, while every other face has weight 3, 6 or
//! `4^alpha beta - 2`, all divisible by 3.
//!
//! The gadget for a triple `a, b, c` (followed on the inner cycle by `a'`),
//! with outer vertices `p, q, r, s` (followed by `p'`) and interior
//! vertices `y, u, w`, consists of the counterclockwise triangles
//!
//! ```text
//! a p q   a q u   u q r   u r w   w r s   w s c   c s p'   c p' a'
//! a y b   b y c   c y w   y u w   y a u
//! ```
//!
//! which is 13 triangles and 23 edges per triple, counting the three inner
//! and four outer cycle edges.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::map::PlanarMap;

/// Largest triangulation the builder will produce.
pub const MAX_VERTICES: u64 = 2_000_000;

/// Default vertex ceiling for [`is_four_chromatic`].
pub const CHROMATIC_CEILING: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    alpha: u32,
    beta: u64,
}

impl ConstructionParams {
    pub fn new(alpha: u32, beta: u64) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::InvalidParams("alpha must be at least 1".into()));
        }
        if beta % 3 != 2 {
            return Err(Error::InvalidParams("beta must be ≡ 2 (mod 3)".into()));
        }
        let params = ConstructionParams { alpha, beta };
        match params.vertex_count() {
            Some(v) if v <= MAX_VERTICES => Ok(params),
            _ => Err(Error::InvalidParams(format!(
                "alpha={alpha}, beta={beta} exceeds {MAX_VERTICES} vertices"
            ))),
        }
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// `|C_i|` for `i` in `1..=alpha + 1`.
    pub fn cycle_length(&self, i: u32) -> Option<u64> {
        if i == 0 || i > self.alpha + 1 {
            return None;
        }
        3u64.checked_pow(self.alpha + 1 - i)?.checked_mul(4u64.checked_pow(i - 1)?)?.checked_mul(self.beta)
    }

    /// Degree of the hub `x`, which is `|C_0| = |C_1|`.
    pub fn hub_degree(&self) -> Option<u64> {
        self.cycle_length(1)
    }

    /// Degree of the apex `z`, which is `|C_{alpha+1}|`.
    pub fn apex_degree(&self) -> Option<u64> {
        self.cycle_length(self.alpha + 1)
    }

    /// Vertex count of the triangulation.
    pub fn vertex_count(&self) -> Option<u64> {
        let mut total = 2u64.checked_add(self.hub_degree()?.checked_mul(2)?)?;
        for i in 1..=self.alpha {
            // |C_i| gadget vertices plus the next cycle.
            total = total.checked_add(self.cycle_length(i)?)?.checked_add(self.cycle_length(i + 1)?)?;
        }
        Some(total)
    }
}

/// A set of counterclockwise triangles on vertices `0..vertex_count`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialTriangulation {
    pub vertex_count: usize,
    pub triangles: Vec<[usize; 3]>,
}

impl PartialTriangulation {
    fn add_vertices(&mut self, k: usize) -> std::ops::Range<usize> {
        let start = self.vertex_count;
        self.vertex_count += k;
        start..self.vertex_count
    }

    /// Undirected edges, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| (0..3).map(move |i| (t[i].min(t[(i + 1) % 3]), t[i].max(t[(i + 1) % 3]))))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbours().iter().map(Vec::len).collect()
    }

    /// Directed edges used by exactly one triangle, with the reverse unused,
    /// sorted. For a triangulated disk this is its boundary, oriented
    /// counterclockwise.
    pub fn boundary(&self) -> Vec<(usize, usize)> {
        let mut darts: Vec<(usize, usize)> =
            self.triangles.iter().flat_map(|t| (0..3).map(move |i| (t[i], t[(i + 1) % 3]))).collect();
        darts.sort_unstable();
        darts.iter().copied().filter(|&(u, v)| darts.binary_search(&(v, u)).is_err()).collect()
    }

    /// True if no directed edge is used twice, i.e. the triangles are
    /// consistently oriented and no edge carries more than two triangles.
    pub fn is_consistently_oriented(&self) -> bool {
        let mut darts: Vec<(usize, usize)> =
            self.triangles.iter().flat_map(|t| (0..3).map(move |i| (t[i], t[(i + 1) % 3]))).collect();
        darts.sort_unstable();
        darts.windows(2).all(|w| w[0] != w[1])
    }

    /// Converts a closed triangulated sphere into a rotation system.
    pub fn close(&self) -> Result<PlanarMap> {
        if !self.boundary().is_empty() || !self.is_consistently_oriented() {
            return Err(Error::InvalidParams("triangle set is not a closed surface".into()));
        }
        // At vertex a of the counterclockwise triangle (a, b, c), c follows b.
        let mut next: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for &[a, b, c] in &self.triangles {
            next[a].push((b, c));
            next[b].push((c, a));
            next[c].push((a, b));
        }
        let mut rotations = Vec::with_capacity(self.vertex_count);
        for (v, succ) in next.iter_mut().enumerate() {
            succ.sort_unstable();
            let Some(&(start, _)) = succ.first() else {
                return Err(Error::InvalidParams(format!("vertex {v} is in no triangle")));
            };
            let mut rot = vec![start];
            let mut cur = start;
            loop {
                let i = succ.binary_search_by_key(&cur, |&(x, _)| x).unwrap();
                cur = succ[i].1;
                if cur == start {
                    break;
                }
                rot.push(cur);
            }
            if rot.len() != succ.len() {
                return Err(Error::InvalidParams(format!("vertex {v} is not a manifold point")));
            }
            rotations.push(rot);
        }
        PlanarMap::from_rotations(rotations, None)
    }
}

/// The hub, `C_0`, `C_1` and the triangles between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagDisk {
    pub hub: usize,
    pub inner: Vec<usize>,
    pub outer: Vec<usize>,
    pub surface: PartialTriangulation,
}

/// Hub joined to an `length`-cycle, surrounded by a zigzag strip to a
/// second `length`-cycle. Vertex 0 is the hub.
pub fn zigzag_disk(length: usize) -> Result<ZigzagDisk> {
    if length < 3 {
        return Err(Error::InvalidParams(format!("cycle length {length} is below 3")));
    }
    let mut surface = PartialTriangulation::default();
    let hub = surface.add_vertices(1).start;
    let inner: Vec<usize> = surface.add_vertices(length).collect();
    let outer: Vec<usize> = surface.add_vertices(length).collect();
    for k in 0..length {
        let k1 = (k + 1) % length;
        surface.triangles.push([hub, inner[k], inner[k1]]);
        surface.triangles.push([inner[k], outer[k], outer[k1]]);
        surface.triangles.push([inner[k], outer[k1], inner[k1]]);
    }
    Ok(ZigzagDisk { hub, inner, outer, surface })
}

/// Vertices and triangles added by one annulus layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnulusLayer {
    pub inner: Vec<usize>,
    pub interior: Vec<usize>,
    pub outer: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
}

/// Wraps the cycle `inner` (counterclockwise boundary of `surface`, length
/// divisible by 3, two inside edges at every vertex) in one gadget layer.
pub fn annulus_layer(surface: &mut PartialTriangulation, inner: &[usize]) -> Result<AnnulusLayer> {
    let len = inner.len();
    if len < 3 || !len.is_multiple_of(3) {
        return Err(Error::InvalidParams(format!(
            "inner cycle length {len} is not a positive multiple of 3"
        )));
    }
    let mut boundary = surface.boundary();
    let mut expected: Vec<(usize, usize)> = (0..len).map(|k| (inner[k], inner[(k + 1) % len])).collect();
    boundary.sort_unstable();
    expected.sort_unstable();
    if boundary != expected {
        return Err(Error::InvalidParams("inner cycle is not the boundary of the surface".into()));
    }
    let adj = surface.neighbours();
    for (k, &v) in inner.iter().enumerate() {
        let around = [inner[(k + len - 1) % len], inner[(k + 1) % len]];
        let inside = adj[v].iter().filter(|u| !around.contains(u)).count();
        if inside != 2 {
            return Err(Error::InvalidParams(format!("vertex {v} has {inside} inside edges, expected 2")));
        }
    }

    let m = len / 3;
    let interior: Vec<usize> = surface.add_vertices(3 * m).collect();
    let outer: Vec<usize> = surface.add_vertices(4 * m).collect();
    let mut triangles = Vec::with_capacity(13 * m);
    for t in 0..m {
        let (a, b, c, a2) = (inner[3 * t], inner[3 * t + 1], inner[3 * t + 2], inner[(3 * t + 3) % len]);
        let (p, q, r, s, p2) = (
            outer[4 * t],
            outer[4 * t + 1],
            outer[4 * t + 2],
            outer[4 * t + 3],
            outer[(4 * t + 4) % (4 * m)],
        );
        let (y, u, w) = (interior[3 * t], interior[3 * t + 1], interior[3 * t + 2]);
        triangles.extend([
            [a, p, q],
            [a, q, u],
            [u, q, r],
            [u, r, w],
            [w, r, s],
            [w, s, c],
            [c, s, p2],
            [c, p2, a2],
            [a, y, b],
            [b, y, c],
            [c, y, w],
            [y, u, w],
            [y, a, u],
        ]);
    }
    surface.triangles.extend_from_slice(&triangles);
    Ok(AnnulusLayer { inner: inner.to_vec(), interior, outer, triangles })
}

/// One cycle `C_i` of the finished triangulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerState {
    pub index: u32,
    pub cycle: Vec<usize>,
    /// `3^(alpha-i+1) 4^(i-1) beta`.
    pub expected_length: u64,
    /// For each cycle vertex, its edges into the region bounded by the cycle.
    pub inside_edges: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct GrinbergTriangulation {
    pub params: ConstructionParams,
    pub map: PlanarMap,
    pub hub: usize,
    pub apex: usize,
    /// `C_0` (the hub's neighbours).
    pub hub_cycle: Vec<usize>,
    /// `C_1, ..., C_{alpha+1}`.
    pub layers: Vec<LayerState>,
}

/// Builds `G'(alpha, beta)`. Vertex ids grow outward: hub, `C_0`, `C_1`,
/// then each layer's gadget vertices followed by its outer cycle, and the
/// apex last.
pub fn build_triangulation(params: ConstructionParams) -> Result<GrinbergTriangulation> {
    let length = params.hub_degree().unwrap() as usize;
    let disk = zigzag_disk(length)?;
    let mut surface = disk.surface;
    let mut cycles = vec![disk.outer];
    for _ in 0..params.alpha {
        let layer = annulus_layer(&mut surface, cycles.last().unwrap())?;
        cycles.push(layer.outer);
    }
    let apex = surface.add_vertices(1).start;
    let last = cycles.last().unwrap();
    for k in 0..last.len() {
        surface.triangles.push([apex, last[(k + 1) % last.len()], last[k]]);
    }
    let map = surface.close()?;

    let layers = cycles
        .into_iter()
        .enumerate()
        .map(|(i, cycle)| {
            let first = cycle[0];
            let len = cycle.len();
            let inside_edges = cycle
                .iter()
                .enumerate()
                .map(|(k, &v)| {
                    let around = [cycle[(k + len - 1) % len], cycle[(k + 1) % len]];
                    map.rotation(v).iter().filter(|&&u| u < first && !around.contains(&u)).count()
                })
                .collect();
            let index = i as u32 + 1;
            LayerState { index, expected_length: params.cycle_length(index).unwrap(), cycle, inside_edges }
        })
        .collect();
    Ok(GrinbergTriangulation { params, map, hub: disk.hub, apex, hub_cycle: disk.inner, layers })
}

/// The triangulation `G'(alpha, beta)` as a map.
pub fn grinberg_triangulation(params: ConstructionParams) -> Result<PlanarMap> {
    Ok(build_triangulation(params)?.map)
}

/// The cubic map `G(alpha, beta)`, dual to [`grinberg_triangulation`].
/// Its face `i` corresponds to vertex `i` of the triangulation.
pub fn grinberg_map(params: ConstructionParams) -> Result<PlanarMap> {
    grinberg_triangulation(params)?.dual()
}

/// Face census by boundary length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FVector {
    /// `counts[i]` is the number of faces with `i` boundary vertices.
    pub counts: BTreeMap<usize, usize>,
    pub f: usize,
    pub q: Option<usize>,
}

impl FVector {
    pub fn from_counts(counts: &[(usize, usize)], q: Option<usize>) -> Self {
        let counts: BTreeMap<usize, usize> = counts.iter().copied().collect();
        let f = counts.values().sum();
        FVector { counts, f, q }
    }

    /// `sum of i * f_i`, which is twice the edge count.
    pub fn boundary_total(&self) -> usize {
        self.counts.iter().map(|(i, n)| i * n).sum()
    }

    /// The face-weight multiset, ascending.
    pub fn weights(&self) -> Vec<i64> {
        self.counts.iter().flat_map(|(&i, &n)| std::iter::repeat_n(i as i64 - 2, n)).collect()
    }
}

impl std::fmt::Display for FVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, n) in &self.counts {
            write!(f, "f_{i}={n} ")?;
        }
        write!(f, "f={}", self.f)?;
        if let Some(q) = self.q {
            write!(f, " q={q}")?;
        }
        Ok(())
    }
}

pub fn f_vector(map: &PlanarMap) -> FVector {
    let mut counts = BTreeMap::new();
    for face in map.faces() {
        *counts.entry(face.len()).or_insert(0) += 1;
    }
    let fv = FVector { counts, f: map.face_count(), q: None };
    debug_assert_eq!(fv.boundary_total(), 2 * map.edge_count());
    fv
}

/// Exact proper colouring with at most `k` colours, if one exists.
pub fn colouring(map: &PlanarMap, k: usize) -> Option<Vec<usize>> {
    let n = map.vertex_count();
    let mut colour = vec![usize::MAX; n];
    fn solve(map: &PlanarMap, k: usize, colour: &mut [usize], done: usize) -> bool {
        if done == colour.len() {
            return true;
        }
        // Most saturated uncoloured vertex, ties to higher degree, then lower id.
        let v = (0..colour.len())
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| {
                let mut used: Vec<usize> =
                    map.rotation(v).iter().map(|&u| colour[u]).filter(|&c| c != usize::MAX).collect();
                used.sort_unstable();
                used.dedup();
                (used.len(), map.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        for c in 0..k {
            if map.rotation(v).iter().all(|&u| colour[u] != c) {
                colour[v] = c;
                if solve(map, k, colour, done + 1) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }
    solve(map, k, &mut colour, 0).then_some(colour)
}

/// True iff the chromatic number is exactly 4: no 3-colouring exists and a
/// 4-colouring does.
pub fn is_four_chromatic(map: &PlanarMap, ceiling: usize) -> Result<bool> {
    let n = map.vertex_count();
    if n > ceiling {
        return Err(Error::CeilingExceeded { count: n, ceiling });
    }
    Ok(colouring(map, 3).is_none() && colouring(map, 4).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(ConstructionParams::new(1, 2).is_ok());
        assert!(ConstructionParams::new(1, 4).is_err());
        assert!(ConstructionParams::new(0, 2).is_err());
        assert!(ConstructionParams::new(30, 2).is_err());
        let p = ConstructionParams::new(2, 2).unwrap();
        assert_eq!((1..=3).map(|i| p.cycle_length(i).unwrap()).collect::<Vec<_>>(), vec![18, 24, 32]);
        assert_eq!(p.apex_degree(), Some(32));
        assert_eq!(ConstructionParams::new(1, 2).unwrap().vertex_count(), Some(28));
    }

    #[test]
    fn zigzag_degrees() {
        for length in [3, 6] {
            let disk = zigzag_disk(length).unwrap();
            let deg = disk.surface.degrees();
            assert_eq!(disk.surface.vertex_count, 2 * length + 1);
            assert_eq!(deg[disk.hub], length);
            assert!(disk.inner.iter().all(|&v| deg[v] == 5));
            let adj = disk.surface.neighbours();
            for &w in &disk.outer {
                let from_inside = adj[w].iter().filter(|u| disk.inner.contains(u)).count();
                assert_eq!(from_inside, 2);
            }
            let mut boundary: Vec<(usize, usize)> = disk.surface.boundary();
            boundary.sort_unstable();
            let mut ring: Vec<(usize, usize)> =
                (0..length).map(|k| (disk.outer[k], disk.outer[(k + 1) % length])).collect();
            ring.sort_unstable();
            assert_eq!(boundary, ring);
            assert!(disk.surface.is_consistently_oriented());
        }
        assert!(zigzag_disk(2).is_err());
    }

    #[test]
    fn annulus_counts() {
        for m in [1, 2] {
            let disk = zigzag_disk(3 * m).unwrap();
            let mut surface = disk.surface.clone();
            let before = surface.edges().len();
            let layer = annulus_layer(&mut surface, &disk.outer).unwrap();
            assert_eq!(layer.outer.len(), 4 * m);
            assert_eq!(layer.interior.len(), 3 * m);
            let deg = surface.degrees();
            assert!(layer.interior.iter().all(|&v| deg[v] == 5));
            let pattern: Vec<usize> = layer.inner.iter().map(|&v| deg[v]).collect();
            assert_eq!(pattern, [8, 5, 8].repeat(m));
            // Annulus edges: new edges plus the inner cycle.
            assert_eq!(surface.edges().len() - before + 3 * m, 23 * m);
            assert!(surface.is_consistently_oriented());
            let adj = surface.neighbours();
            for &v in &layer.outer {
                let inside = adj[v].iter().filter(|&&u| u < layer.outer[0]).count();
                assert_eq!(inside, 2);
            }
        }
    }

    #[test]
    fn annulus_preconditions() {
        let disk = zigzag_disk(4).unwrap();
        let mut surface = disk.surface.clone();
        assert!(annulus_layer(&mut surface, &disk.outer).is_err());
        let disk = zigzag_disk(6).unwrap();
        let mut surface = disk.surface.clone();
        assert!(annulus_layer(&mut surface, &disk.inner).is_err());
    }

    #[test]
    fn smallest_triangulation() {
        let g = build_triangulation(ConstructionParams::new(1, 2).unwrap()).unwrap();
        let m = &g.map;
        assert_eq!((m.vertex_count(), m.edge_count()), (28, 78));
        assert!(m.faces().iter().all(|f| f.len() == 3));
        assert_eq!(m.degree(g.hub), 6);
        assert_eq!(m.degree(g.apex), 8);
        let mut degrees: Vec<usize> = (0..28).map(|v| m.degree(v)).collect();
        degrees.sort_unstable();
        let mut expected = vec![5; 22];
        expected.push(6);
        expected.extend([8; 5]);
        assert_eq!(degrees, expected);
    }

    #[test]
    fn f_vector_of_smallest_map() {
        let g = grinberg_map(ConstructionParams::new(1, 2).unwrap()).unwrap();
        let fv = f_vector(&g);
        assert_eq!(fv, FVector::from_counts(&[(5, 22), (6, 1), (8, 5)], None));
        assert_eq!(fv.boundary_total(), 2 * g.edge_count());
        assert_eq!(fv.to_string(), "f_5=22 f_6=1 f_8=5 f=28");
    }

    #[test]
    fn chromatic_small_cases() {
        let c4 =
            PlanarMap::from_rotations(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], None).unwrap();
        assert!(!is_four_chromatic(&c4, CHROMATIC_CEILING).unwrap());
        assert_eq!(colouring(&c4, 2).map(|c| c.len()), Some(4));
        assert!(is_four_chromatic(&crate::fixtures::tetrahedron(), CHROMATIC_CEILING).unwrap());
        let octahedron = crate::fixtures::cube().dual().unwrap();
        assert!(!is_four_chromatic(&octahedron, CHROMATIC_CEILING).unwrap());
        assert!(is_four_chromatic(&crate::fixtures::tutte(), 10).is_err());
    }
}
