//! Cubic maps whose edges split into three perfect matchings, any two of
//! which form a Hamiltonian cycle, and the four-class face colouring they
//! induce.
//!
//! Colour class `k` of the edges is a perfect matching and `cycles[k]` is the
//! union of the other two classes. Crossing an edge of colour `k` moves
//! between the two sides of both cycles containing it, so the sides of
//! `cycles[2]` are determined by those of `cycles[0]` and `cycles[1]`, and
//! the face colour `in(cycles[0]) + 2 in(cycles[1])` is proper. Applying
//! the weight identity to each cycle equates the sum of any two colour
//! weights with the sum of the other two, which forces all four equal.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hamilton::{search, HamiltonianCycle};
use crate::map::PlanarMap;
use crate::weights::face_weights;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeHFactorization {
    /// Colour in `0..3` of every edge.
    pub edge_colors: BTreeMap<(usize, usize), u8>,
    /// `cycles[k]` is made of the edges not coloured `k`.
    pub cycles: [HamiltonianCycle; 3],
    /// Colour in `0..4` of every face, indexed by face id.
    pub face_colors: Vec<u8>,
    /// Total face weight of each face colour.
    pub sigma: [i64; 4],
}

fn check_cubic(map: &PlanarMap) -> Result<()> {
    match (0..map.vertex_count()).find(|&v| map.degree(v) != 3) {
        Some(vertex) => Err(Error::NotCubic { vertex, degree: map.degree(vertex) }),
        None => Ok(()),
    }
}

/// Walks the 2-regular edge set `edges` from vertex 0 and returns the
/// cycle if it visits every vertex.
fn spanning_cycle(map: &PlanarMap, edges: &[(usize, usize)]) -> Option<HamiltonianCycle> {
    let n = map.vertex_count();
    let mut adj = vec![Vec::with_capacity(2); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    if adj.iter().any(|a| a.len() != 2) {
        return None;
    }
    let mut seq = vec![0];
    let (mut prev, mut cur) = (0, adj[0][0]);
    while cur != 0 {
        seq.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    (seq.len() == n).then(|| HamiltonianCycle::new(map, &seq).ok()).flatten()
}

/// The first factorization found, taking Hamiltonian cycles in search
/// order and splitting each one alternately into two matchings starting
/// from vertex 0.
pub fn find_3h_factorization(map: &PlanarMap, budget: Option<u64>) -> Result<Option<ThreeHFactorization>> {
    check_cubic(map)?;
    if !map.vertex_count().is_multiple_of(2) {
        return Ok(None);
    }
    for h in search(map, budget, false)?.cycles {
        let on_h = h.edges();
        let m0: Vec<(usize, usize)> =
            map.edges().iter().copied().filter(|e| on_h.binary_search(e).is_err()).collect();
        let seq = h.vertices();
        let n = seq.len();
        let (mut m1, mut m2) = (Vec::new(), Vec::new());
        for k in 0..n {
            let (u, v) = (seq[k], seq[(k + 1) % n]);
            if k % 2 == 0 { &mut m1 } else { &mut m2 }.push((u.min(v), u.max(v)));
        }
        let union = |a: &[(usize, usize)], b: &[(usize, usize)]| [a, b].concat();
        let (Some(c1), Some(c2)) =
            (spanning_cycle(map, &union(&m0, &m2)), spanning_cycle(map, &union(&m0, &m1)))
        else {
            continue;
        };
        let mut edge_colors = BTreeMap::new();
        for (colour, class) in [(0u8, &m0), (1, &m1), (2, &m2)] {
            edge_colors.extend(class.iter().map(|&e| (e, colour)));
        }
        let cycles = [h, c1, c2];
        let face_colors = face_nesting_colors(map, &cycles)?;
        let sigma = colour_weights(map, &face_colors);
        return Ok(Some(ThreeHFactorization { edge_colors, cycles, face_colors, sigma }));
    }
    Ok(None)
}

fn inside_flags(map: &PlanarMap, cycle: &HamiltonianCycle) -> Result<Vec<bool>> {
    if cycle.h() != map.vertex_count() {
        return Err(Error::NotHamiltonian(format!(
            "cycle has {} vertices, map has {}",
            cycle.h(),
            map.vertex_count()
        )));
    }
    let sides = map.cycle_side_faces(cycle.vertices())?;
    let mut inside = vec![false; map.face_count()];
    sides.inner.iter().for_each(|&f| inside[f] = true);
    Ok(inside)
}

/// Number of the given cycles having each face on their inner side.
pub fn nesting_counts(map: &PlanarMap, cycles: &[HamiltonianCycle]) -> Result<Vec<u8>> {
    let mut counts = vec![0u8; map.face_count()];
    for cycle in cycles {
        for (c, inside) in counts.iter_mut().zip(inside_flags(map, cycle)?) {
            *c += inside as u8;
        }
    }
    Ok(counts)
}

/// Face colour `in(cycles[0]) + 2 in(cycles[1])`. The outer face gets 0.
pub fn face_nesting_colors(map: &PlanarMap, cycles: &[HamiltonianCycle; 3]) -> Result<Vec<u8>> {
    let first = inside_flags(map, &cycles[0])?;
    let second = inside_flags(map, &cycles[1])?;
    inside_flags(map, &cycles[2])?;
    Ok(first.iter().zip(&second).map(|(&a, &b)| a as u8 + 2 * b as u8).collect())
}

pub fn edge_color_from_face_colors(i: u8, j: u8) -> Result<u8> {
    if i == j {
        return Err(Error::ImproperColouring(i as usize, j as usize));
    }
    Ok((i as i16 + j as i16 - 3).unsigned_abs() as u8)
}

/// Edge colouring read off a face colouring with [`edge_color_from_face_colors`].
pub fn induced_edge_colors(map: &PlanarMap, face_colors: &[u8]) -> Result<BTreeMap<(usize, usize), u8>> {
    map.edges()
        .iter()
        .map(|&(u, v)| {
            let (f, g) = map.edge_faces(u, v).unwrap();
            Ok(((u, v), edge_color_from_face_colors(face_colors[f], face_colors[g])?))
        })
        .collect()
}

/// A renaming `perm` with `target[e] == perm[induced[e]]` for every edge.
pub fn colour_permutation(
    induced: &BTreeMap<(usize, usize), u8>,
    target: &BTreeMap<(usize, usize), u8>,
) -> Option<[u8; 3]> {
    const PERMS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.into_iter().find(|perm| {
        induced.len() == target.len()
            && induced.iter().all(|(e, &c)| target.get(e) == Some(&perm[c as usize]))
    })
}

/// True if no two edges of one colour share a vertex.
pub fn is_proper_edge_colouring(map: &PlanarMap, colours: &BTreeMap<(usize, usize), u8>) -> bool {
    (0..map.vertex_count()).all(|v| {
        let mut seen: Vec<u8> =
            map.rotation(v).iter().filter_map(|&u| colours.get(&(v.min(u), v.max(u))).copied()).collect();
        let len = seen.len();
        seen.sort_unstable();
        seen.dedup();
        len == map.degree(v) && seen.len() == len
    })
}

pub fn colour_weights(map: &PlanarMap, face_colors: &[u8]) -> [i64; 4] {
    let mut sigma = [0; 4];
    for (w, &c) in face_weights(map).iter().zip(face_colors) {
        sigma[c as usize] += w;
    }
    sigma
}

/// The weight identity for one cycle, read in terms of face colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRelation {
    /// Colours of the faces inside the cycle.
    pub inside: Vec<u8>,
    /// Colours of the faces outside the cycle.
    pub outside: Vec<u8>,
    /// Two colours on each side and equal colour weight sums.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub sigma: [i64; 4],
    pub relations: Vec<PairRelation>,
    pub holds: bool,
}

pub fn corollary_report(map: &PlanarMap, fact: &ThreeHFactorization) -> Result<CorollaryReport> {
    let sigma = colour_weights(map, &fact.face_colors);
    let mut relations = Vec::with_capacity(3);
    for cycle in &fact.cycles {
        let inside_faces = inside_flags(map, cycle)?;
        let mut inside = Vec::new();
        let mut outside = Vec::new();
        for (&c, &is_in) in fact.face_colors.iter().zip(&inside_faces) {
            if is_in { &mut inside } else { &mut outside }.push(c);
        }
        for side in [&mut inside, &mut outside] {
            side.sort_unstable();
            side.dedup();
        }
        let total = |cs: &[u8]| cs.iter().map(|&c| sigma[c as usize]).sum::<i64>();
        let holds = inside.len() == 2
            && outside.len() == 2
            && inside.iter().all(|c| !outside.contains(c))
            && total(&inside) == total(&outside);
        relations.push(PairRelation { inside, outside, holds });
    }
    let holds = sigma.iter().all(|&s| s == sigma[0]) && relations.iter().all(|r| r.holds);
    Ok(CorollaryReport { sigma, relations, holds })
}

/// True iff all four colour weights agree and each cycle splits the colours
/// into two pairs of equal weight.
pub fn verify_corollary(map: &PlanarMap, fact: &ThreeHFactorization) -> bool {
    corollary_report(map, fact).map(|r| r.holds).unwrap_or(false)
}
