//! Isobaric partitions: two-way splits of the face set with equal weight.

use crate::error::{Error, Result};
use crate::map::PlanarMap;
use crate::weights::face_weights;

/// Largest face count enumerated without an explicit limit.
pub const EXHAUSTIVE_CEILING: usize = 32;

/// A split of all faces into two nonempty classes of equal total weight.
/// `side_a` always holds face 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsobaricPartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub s1: i64,
    pub s2: i64,
    /// Edges with one incident face on each side, sorted.
    pub border: Vec<(usize, usize)>,
}

impl IsobaricPartition {
    /// Builds the partition with `side` on one side and every other face on
    /// the other. Both sides must be nonempty and balanced.
    pub fn new(map: &PlanarMap, side: &[usize]) -> Result<Self> {
        let f = map.face_count();
        let mut in_side = vec![false; f];
        for &id in side {
            if id >= f {
                return Err(Error::InvalidPartition(format!("face {id} out of range")));
            }
            in_side[id] = true;
        }
        if !in_side[0] {
            in_side.iter_mut().for_each(|x| *x = !*x);
        }
        let (side_a, side_b): (Vec<usize>, Vec<usize>) = (0..f).partition(|&i| in_side[i]);
        if side_b.is_empty() {
            return Err(Error::InvalidPartition("one side is empty".into()));
        }
        let weights = face_weights(map);
        let s1: i64 = side_a.iter().map(|&i| weights[i]).sum();
        let s2: i64 = side_b.iter().map(|&i| weights[i]).sum();
        if s1 != s2 {
            return Err(Error::InvalidPartition(format!("weights {s1} and {s2} differ")));
        }
        let border = partition_border(map, &in_side);
        Ok(IsobaricPartition { side_a, side_b, s1, s2, border })
    }
}

/// Edges whose two incident faces lie on different sides of `in_side`.
pub fn partition_border(map: &PlanarMap, in_side: &[bool]) -> Vec<(usize, usize)> {
    map.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            let (f, g) = map.edge_faces(u, v).unwrap();
            in_side[f] != in_side[g]
        })
        .collect()
}

/// All isobaric partitions, ordered lexicographically by `side_a`.
///
/// Face 0 is fixed in `side_a` so each unordered split appears once. The
/// search only enters branches from which the target weight is still
/// reachable, tracked with per-suffix subset-sum tables. Without a `limit`
/// maps with more than `ceiling` faces are refused.
pub fn enumerate_isobaric_partitions(
    map: &PlanarMap,
    limit: Option<usize>,
    ceiling: usize,
) -> Result<Vec<IsobaricPartition>> {
    let f = map.face_count();
    if limit.is_none() && f > ceiling {
        return Err(Error::CeilingExceeded { count: f, ceiling });
    }
    let limit = limit.unwrap_or(usize::MAX);
    let weights = face_weights(map);
    let total: i64 = weights.iter().sum();
    if total % 2 != 0 || f < 2 || limit == 0 {
        return Ok(Vec::new());
    }
    let target = (total / 2) as usize;

    // reachable[i][s]: some subset of faces i.. has weight s.
    let mut reachable = vec![vec![false; target + 1]; f + 1];
    reachable[f][0] = true;
    for i in (0..f).rev() {
        let w = weights[i] as usize;
        for s in 0..=target {
            reachable[i][s] = reachable[i + 1][s] || (s >= w && reachable[i + 1][s - w]);
        }
    }

    let mut sides = Vec::new();
    let first = weights[0] as usize;
    if first <= target && reachable[1][target - first] {
        let mut chosen = vec![0];
        collect(&weights, &reachable, 1, target - first, &mut chosen, &mut sides, limit);
    }
    let edge_faces: Vec<(usize, usize)> =
        map.edges().iter().map(|&(u, v)| map.edge_faces(u, v).unwrap()).collect();
    let half = target as i64;
    Ok(sides
        .into_iter()
        .map(|side_a| {
            let mut in_side = vec![false; f];
            side_a.iter().for_each(|&i| in_side[i] = true);
            let side_b = (0..f).filter(|&i| !in_side[i]).collect();
            let border = map
                .edges()
                .iter()
                .zip(&edge_faces)
                .filter(|(_, &(g, h))| in_side[g] != in_side[h])
                .map(|(&e, _)| e)
                .collect();
            IsobaricPartition { side_a, side_b, s1: half, s2: half, border }
        })
        .collect())
}

fn collect(
    weights: &[i64],
    reachable: &[Vec<bool>],
    i: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if remaining == 0 {
        out.push(chosen.clone());
        return;
    }
    let w = weights[i] as usize;
    if w <= remaining && reachable[i + 1][remaining - w] {
        chosen.push(i);
        collect(weights, reachable, i + 1, remaining - w, chosen, out, limit);
        chosen.pop();
    }
    if reachable[i + 1][remaining] {
        collect(weights, reachable, i + 1, remaining, chosen, out, limit);
    }
}
