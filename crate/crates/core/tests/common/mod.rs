#![allow(dead_code)]

use isobar::construction::{grinberg_map, ConstructionParams};
use isobar::{face_weights, fixtures, Dart, PlanarMap};

/// The `n`-sided prism: outer cycle `0..n`, inner cycle `n..2n`.
pub fn prism(n: usize) -> PlanarMap {
    let mut rot = Vec::with_capacity(2 * n);
    for i in 0..n {
        rot.push(vec![(i + n - 1) % n, (i + 1) % n, n + i]);
    }
    for i in 0..n {
        rot.push(vec![n + (i + n - 1) % n, i, n + (i + 1) % n]);
    }
    PlanarMap::from_rotations(rot, None).unwrap()
}

/// The same embedding with vertex `v` renamed `perm[v]`.
pub fn relabel(map: &PlanarMap, perm: &[usize]) -> PlanarMap {
    let mut rot = vec![Vec::new(); map.vertex_count()];
    for v in 0..map.vertex_count() {
        rot[perm[v]] = map.rotation(v).iter().map(|&u| perm[u]).collect();
    }
    let outer = map.outer_dart().map(|d| Dart::new(perm[d.tail], perm[d.head]));
    PlanarMap::from_rotations(rot, outer).unwrap()
}

pub fn small_construction() -> PlanarMap {
    grinberg_map(ConstructionParams::new(1, 2).unwrap()).unwrap()
}

/// Named maps used across the integration tests.
pub fn sample_maps() -> Vec<(String, PlanarMap)> {
    let mut maps: Vec<(String, PlanarMap)> =
        fixtures::NAMES.iter().map(|&name| (name.to_string(), fixtures::fixture(name).unwrap())).collect();
    for n in 3..=8 {
        maps.push((format!("prism{n}"), prism(n)));
    }
    maps.push(("g_1_2".into(), small_construction()));
    maps
}

/// Every balanced split by trying all `2^(F-1)` subsets containing face 0.
pub fn brute_isobaric(map: &PlanarMap) -> Vec<Vec<usize>> {
    let w = face_weights(map);
    let f = w.len();
    let total: i64 = w.iter().sum();
    let mut out = Vec::new();
    for mask in 0u64..(1 << (f - 1)) {
        let side: Vec<usize> =
            std::iter::once(0).chain((1..f).filter(|&i| mask >> (i - 1) & 1 == 1)).collect();
        if side.len() < f && 2 * side.iter().map(|&i| w[i]).sum::<i64>() == total {
            out.push(side);
        }
    }
    out.sort();
    out
}

fn connected(map: &PlanarMap, inside: &[bool], want: bool) -> bool {
    let Some(start) = (0..map.vertex_count()).find(|&v| inside[v] == want) else {
        return false;
    };
    let mut seen = vec![false; map.vertex_count()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in map.rotation(v) {
            if inside[u] == want && !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == inside.iter().filter(|&&b| b == want).count()
}

/// Minimum nontrivial cut size and the number of cuts attaining it, over
/// all vertex bipartitions with both sides connected and of size at least 3.
pub fn brute_q(map: &PlanarMap) -> Option<(usize, usize)> {
    let n = map.vertex_count();
    let mut best: Option<(usize, usize)> = None;
    for mask in 0u64..(1 << (n - 1)) {
        let inside: Vec<bool> = (0..n).map(|v| v == 0 || mask >> (v - 1) & 1 == 1).collect();
        let k = inside.iter().filter(|&&b| b).count();
        if k < 3 || n - k < 3 || !connected(map, &inside, true) || !connected(map, &inside, false) {
            continue;
        }
        let cut = map.edges().iter().filter(|&&(u, v)| inside[u] != inside[v]).count();
        best = match best {
            Some((q, c)) if q == cut => Some((q, c + 1)),
            Some((q, _)) if q < cut => best,
            _ => Some((cut, 1)),
        };
    }
    best
}
