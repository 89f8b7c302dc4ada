//! Quasi-connectivity: the size of a smallest nontrivial edge cut.
//!
//! A cut is nontrivial when deleting it leaves exactly two components with
//! at least three vertices each. Each side of such a cut contains a
//! connected vertex triple, so the quasi-connectivity is the minimum, over
//! disjoint connected triples `A` (through vertex 0) and `B`, of the
//! `A`-`B` edge connectivity. A minimum `A`-`B` cut can always be shrunk to
//! one whose sides are both connected, so the minimum is attained by a
//! nontrivial cut.
//!
//! The minimal cuts themselves are read off the residual graphs of the
//! pairs that attain the minimum: every minimum `A`-`B` cut is a closed set
//! of the residual graph, and those are enumerated over its strongly
//! connected components.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::map::PlanarMap;

/// Default largest cut size searched.
pub const DEFAULT_CUT_CEILING: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NontrivialCut {
    /// Cut edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Vertices on the side containing vertex 0.
    pub side: Vec<usize>,
    /// The remaining vertices.
    pub other: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiConnectivity {
    /// Absent when the map has no nontrivial cut at all.
    pub q: Option<usize>,
    /// Every nontrivial cut of size `q`, sorted by edge list.
    pub minimal_cuts: Vec<NontrivialCut>,
}

/// True iff every vertex has degree 3 and no edge is a bridge.
pub fn is_map(map: &PlanarMap) -> bool {
    (0..map.vertex_count()).all(|v| map.degree(v) == 3) && bridges(map).is_empty()
}

/// Edges whose removal disconnects the map.
pub fn bridges(map: &PlanarMap) -> Vec<(usize, usize)> {
    let adj = map.rotations();
    map.edges()
        .iter()
        .copied()
        .filter(|&(a, b)| {
            // Is b still reachable from a without the edge a-b?
            let mut seen = vec![false; adj.len()];
            let mut stack = vec![a];
            seen[a] = true;
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if (v, u) == (a, b) || (v, u) == (b, a) || seen[u] {
                        continue;
                    }
                    seen[u] = true;
                    stack.push(u);
                }
            }
            !seen[b]
        })
        .collect()
}

/// If deleting `edges` leaves exactly two components of at least three
/// vertices, returns them (the one holding vertex 0 first).
pub fn split_by_cut(map: &PlanarMap, edges: &[(usize, usize)]) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = map.vertex_count();
    let mut cut: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    cut.sort_unstable();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in map.rotation(v) {
                if comp[u] == usize::MAX && cut.binary_search(&(v.min(u), v.max(u))).is_err() {
                    comp[u] = count;
                    stack.push(u);
                }
            }
        }
        count += 1;
    }
    if count != 2 {
        return None;
    }
    let (side, other): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| comp[v] == 0);
    (side.len() >= 3 && other.len() >= 3).then_some((side, other))
}

pub fn quasi_connectivity(map: &PlanarMap, ceiling: usize) -> Result<QuasiConnectivity> {
    let none = QuasiConnectivity { q: None, minimal_cuts: Vec::new() };
    let n = map.vertex_count();
    if n < 6 {
        return Ok(none);
    }
    let net = Network::new(map);
    let triples = connected_triples(map);
    let pairs: Vec<(&[usize; 3], &[usize; 3])> = triples
        .iter()
        .filter(|t| t[0] == 0)
        .flat_map(|a| triples.iter().filter(move |b| b.iter().all(|v| !a.contains(v))).map(move |b| (a, b)))
        .collect();
    if pairs.is_empty() {
        return Ok(none);
    }

    let cap = ceiling + 1;
    let flows: Vec<usize> = pairs.par_iter().map(|(a, b)| net.max_flow(&a[..], &b[..], cap).0).collect();
    let q = *flows.iter().min().unwrap();
    if q > ceiling {
        return Err(Error::CutCeilingReached { ceiling });
    }

    let found: Vec<Vec<Vec<usize>>> = pairs
        .par_iter()
        .zip(&flows)
        .filter(|(_, &f)| f == q)
        .map(|((a, b), _)| net.minimum_cut_sides(&a[..], &b[..], q))
        .collect();
    let mut cuts = BTreeMap::new();
    for side in found.into_iter().flatten() {
        let mut in_side = vec![false; n];
        side.iter().for_each(|&v| in_side[v] = true);
        let edges: Vec<(usize, usize)> =
            map.edges().iter().copied().filter(|&(u, v)| in_side[u] != in_side[v]).collect();
        if cuts.contains_key(&edges) {
            continue;
        }
        if let Some((side, other)) = split_by_cut(map, &edges) {
            cuts.insert(edges.clone(), NontrivialCut { edges, side, other });
        }
    }
    Ok(QuasiConnectivity { q: Some(q), minimal_cuts: cuts.into_values().collect() })
}

/// All vertex triples inducing a connected subgraph, each sorted.
fn connected_triples(map: &PlanarMap) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for v in 0..map.vertex_count() {
        let rot = map.rotation(v);
        for i in 0..rot.len() {
            for j in i + 1..rot.len() {
                let mut t = [rot[i], v, rot[j]];
                t.sort_unstable();
                out.push(t);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Unit-capacity undirected network with a super source and sink.
struct Network {
    n: usize,
    /// `(head, edge id)`; arcs of an undirected edge share its id.
    adj: Vec<Vec<(usize, usize)>>,
    ends: Vec<(usize, usize)>,
}

impl Network {
    fn new(map: &PlanarMap) -> Self {
        let ends = map.edges().to_vec();
        let mut adj = vec![Vec::new(); map.vertex_count()];
        for (e, &(u, v)) in ends.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        Network { n: map.vertex_count(), adj, ends }
    }

    /// Residual capacity of traversing edge `e` from `from`; `flow[e]` is
    /// +1 when one unit runs from the smaller endpoint to the larger.
    fn residual(&self, flow: &[i8], e: usize, from: usize) -> i8 {
        let dir = if from == self.ends[e].0 { 1 } else { -1 };
        1 - dir * flow[e]
    }

    /// Augments from `sources` to `sinks` until no path remains or `cap`
    /// units flow. Returns the flow value and edge flows.
    fn max_flow(&self, sources: &[usize], sinks: &[usize], cap: usize) -> (usize, Vec<i8>) {
        let mut flow = vec![0i8; self.ends.len()];
        let mut value = 0;
        let mut is_sink = vec![false; self.n];
        sinks.iter().for_each(|&t| is_sink[t] = true);
        while value < cap {
            let mut via: Vec<Option<(usize, usize)>> = vec![None; self.n];
            let mut seen = vec![false; self.n];
            let mut queue = std::collections::VecDeque::new();
            for &s in sources {
                seen[s] = true;
                queue.push_back(s);
            }
            let mut reached = None;
            'bfs: while let Some(v) = queue.pop_front() {
                for &(u, e) in &self.adj[v] {
                    if seen[u] || self.residual(&flow, e, v) <= 0 {
                        continue;
                    }
                    seen[u] = true;
                    via[u] = Some((v, e));
                    if is_sink[u] {
                        reached = Some(u);
                        break 'bfs;
                    }
                    queue.push_back(u);
                }
            }
            let Some(mut v) = reached else { break };
            while let Some((p, e)) = via[v] {
                flow[e] += if p == self.ends[e].0 { 1 } else { -1 };
                v = p;
            }
            value += 1;
        }
        (value, flow)
    }

    /// Vertex sets `X` (holding the sources, avoiding the sinks) whose edge
    /// boundary is a minimum cut, given that the minimum equals `q`.
    fn minimum_cut_sides(&self, sources: &[usize], sinks: &[usize], q: usize) -> Vec<Vec<usize>> {
        let (value, flow) = self.max_flow(sources, sinks, q + 1);
        debug_assert_eq!(value, q);
        // Residual digraph with node n as the source and n + 1 as the sink.
        let (s, t) = (self.n, self.n + 1);
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); self.n + 2];
        for (v, out) in succ.iter_mut().enumerate().take(self.n) {
            for &(u, e) in &self.adj[v] {
                if self.residual(&flow, e, v) > 0 {
                    out.push(u);
                }
            }
        }
        for &a in sources {
            succ[s].push(a);
            succ[a].push(s);
        }
        for &b in sinks {
            succ[t].push(b);
            succ[b].push(t);
        }
        let (comp, count) = strongly_connected(&succ);
        let mut dag = vec![Vec::new(); count];
        for v in 0..succ.len() {
            for &u in &succ[v] {
                if comp[v] != comp[u] {
                    dag[comp[v]].push(comp[u]);
                }
            }
        }
        let closure = |start: usize, edges: &[Vec<usize>]| -> Vec<bool> {
            let mut seen = vec![false; count];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(c) = stack.pop() {
                for &d in &edges[c] {
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
            seen
        };
        let mut rev = vec![Vec::new(); count];
        for (c, ds) in dag.iter().enumerate() {
            ds.iter().for_each(|&d| rev[d].push(c));
        }
        let down: Vec<Vec<bool>> = (0..count).map(|c| closure(c, &dag)).collect();
        let up: Vec<Vec<bool>> = (0..count).map(|c| closure(c, &rev)).collect();

        // Assignment per component: Some(true) inside X, Some(false) outside.
        let mut assign: Vec<Option<bool>> = vec![None; count];
        for c in 0..count {
            if down[comp[s]][c] {
                assign[c] = Some(true);
            }
            if up[comp[t]][c] {
                if assign[c] == Some(true) {
                    return Vec::new();
                }
                assign[c] = Some(false);
            }
        }
        let mut out = Vec::new();
        enumerate_closures(&mut assign, &down, &up, &mut |assign| {
            out.push((0..self.n).filter(|&v| assign[comp[v]] == Some(true)).collect());
        });
        out
    }
}

fn enumerate_closures(
    assign: &mut Vec<Option<bool>>,
    down: &[Vec<bool>],
    up: &[Vec<bool>],
    emit: &mut dyn FnMut(&[Option<bool>]),
) {
    let Some(c) = assign.iter().position(|a| a.is_none()) else {
        emit(assign);
        return;
    };
    for include in [true, false] {
        let saved = assign.clone();
        let reach = if include { &down[c] } else { &up[c] };
        let ok = (0..assign.len()).filter(|&d| reach[d]).all(|d| match assign[d] {
            Some(x) => x == include,
            None => {
                assign[d] = Some(include);
                true
            }
        });
        if ok {
            enumerate_closures(assign, down, up, emit);
        }
        *assign = saved;
    }
}

/// Tarjan's algorithm, iterative. Returns component ids and their count.
fn strongly_connected(succ: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let n = succ.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let (mut next_index, mut count) = (0, 0);
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut work = vec![(root, 0usize)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(top) = work.last_mut() {
            let v = top.0;
            if top.1 < succ[v].len() {
                let u = succ[v][top.1];
                top.1 += 1;
                if index[u] == usize::MAX {
                    index[u] = next_index;
                    low[u] = next_index;
                    next_index += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    work.push((u, 0));
                } else if on_stack[u] {
                    low[v] = low[v].min(index[u]);
                }
            } else {
                work.pop();
                if let Some(&(p, _)) = work.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = count;
                        if w == v {
                            break;
                        }
                    }
                    count += 1;
                }
            }
        }
    }
    (comp, count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn maps_and_non_maps() {
        assert!(is_map(&fixtures::dodecahedron()));
        assert!(is_map(&fixtures::cube()));
        assert!(is_map(&fixtures::tutte()));
        let octahedron = fixtures::cube().dual().unwrap();
        assert!(!is_map(&octahedron));
    }

    #[test]
    fn bridges_are_found() {
        // Two triangles joined by the edge 2-3.
        let m = PlanarMap::from_rotations(
            vec![vec![1, 2], vec![2, 0], vec![0, 3, 1], vec![4, 2, 5], vec![5, 3], vec![3, 4]],
            None,
        )
        .unwrap();
        assert_eq!(bridges(&m), vec![(2, 3)]);
        let qc = quasi_connectivity(&m, 6).unwrap();
        assert_eq!(qc.q, Some(1));
        assert_eq!(qc.minimal_cuts.len(), 1);
        assert_eq!(qc.minimal_cuts[0].side, vec![0, 1, 2]);
    }

    #[test]
    fn small_maps_have_no_nontrivial_cut() {
        let qc = quasi_connectivity(&fixtures::tetrahedron(), 6).unwrap();
        assert_eq!(qc, QuasiConnectivity { q: None, minimal_cuts: vec![] });
    }

    #[test]
    fn cube_slices() {
        let qc = quasi_connectivity(&fixtures::cube(), 6).unwrap();
        assert_eq!(qc.q, Some(4));
        assert_eq!(qc.minimal_cuts.len(), 3);
    }

    #[test]
    fn ceiling_is_enforced() {
        assert_eq!(
            quasi_connectivity(&fixtures::dodecahedron(), 4),
            Err(Error::CutCeilingReached { ceiling: 4 })
        );
    }

    #[test]
    fn split_by_cut_requires_two_big_sides() {
        let cube = fixtures::cube();
        // The three edges at vertex 0 isolate a single vertex.
        assert_eq!(split_by_cut(&cube, &[(0, 1), (0, 2), (0, 4)]), None);
        assert!(split_by_cut(&cube, &[(0, 4), (1, 5), (2, 6), (3, 7)]).is_some());
    }
}
