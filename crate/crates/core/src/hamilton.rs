//! Exact Hamiltonian-cycle search.
//!
//! The search decides every edge as in or out of the cycle. After each
//! decision the constraints are propagated to a fixpoint:
//!
//! * a vertex with two chosen edges drops all its other edges;
//! * a vertex left with exactly two available edges must use both;
//! * a vertex with fewer than two available edges fails the branch;
//! * a chosen edge closing a path fragment into a cycle shorter than the
//!   whole graph fails the branch, and an undecided edge joining the two
//!   ends of one fragment is dropped;
//! * the available edges must keep the graph connected.
//!
//! Branching is fail-first: it picks the fragment end with the fewest
//! undecided edges (ties go to the larger vertex id), falling back to an
//! untouched vertex with the fewest undecided edges (ties to the smaller id),
//! and tries its lowest-numbered undecided edge first as "in", then "out".
//! The search is single-threaded and fully deterministic; the budget counts
//! search nodes.

use crate::error::{Error, Result};
use crate::map::PlanarMap;

/// A Hamiltonian cycle in canonical form: it starts at vertex 0 and its
/// second vertex is smaller than its last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HamiltonianCycle {
    vertices: Vec<usize>,
}

impl HamiltonianCycle {
    /// Validates `sequence` as a Hamiltonian cycle of `map` (any rotation or
    /// direction) and stores it in canonical form.
    pub fn new(map: &PlanarMap, sequence: &[usize]) -> Result<Self> {
        if let Some(reason) = hamiltonian_defect(map, sequence) {
            return Err(Error::NotHamiltonian(reason));
        }
        Ok(HamiltonianCycle { vertices: canonical_rotation(sequence) })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Length of the cycle, which equals the vertex count of its map.
    pub fn h(&self) -> usize {
        self.vertices.len()
    }

    /// Cycle edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut edges: Vec<(usize, usize)> = (0..n)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }
}

/// Rotates to start at the minimum and orients so the second entry is
/// smaller than the last.
pub fn canonical_rotation(sequence: &[usize]) -> Vec<usize> {
    let n = sequence.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| sequence[i]).unwrap();
    let mut out: Vec<usize> = (0..n).map(|k| sequence[(start + k) % n]).collect();
    if n > 2 && out[1] > out[n - 1] {
        out[1..].reverse();
    }
    out
}

fn hamiltonian_defect(map: &PlanarMap, sequence: &[usize]) -> Option<String> {
    let n = map.vertex_count();
    if sequence.len() != n {
        return Some(format!("{} vertices given, map has {n}", sequence.len()));
    }
    if n < 3 {
        return Some("a cycle needs at least 3 vertices".into());
    }
    let mut seen = vec![false; n];
    for &v in sequence {
        if v >= n {
            return Some(format!("vertex {v} out of range"));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Some(format!("vertex {v} repeats"));
        }
    }
    (0..n).find_map(|i| {
        let (u, v) = (sequence[i], sequence[(i + 1) % n]);
        (!map.has_edge(u, v)).then(|| format!("{u} and {v} are not adjacent"))
    })
}

/// True iff `candidate` lists every vertex once and consecutive vertices,
/// including last and first, are adjacent.
pub fn is_hamiltonian_cycle(map: &PlanarMap, candidate: &[usize]) -> bool {
    hamiltonian_defect(map, candidate).is_none()
}

/// Result of a search run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    /// Cycles found, sorted.
    pub cycles: Vec<HamiltonianCycle>,
    /// Search nodes visited.
    pub expansions: u64,
}

/// Returns a Hamiltonian cycle, `None` once the search space is exhausted,
/// or [`Error::BudgetExhausted`] if `budget` nodes did not settle the question.
pub fn find_hamiltonian_cycle(map: &PlanarMap, budget: u64) -> Result<Option<HamiltonianCycle>> {
    Ok(search(map, Some(budget), true)?.cycles.into_iter().next())
}

/// All Hamiltonian cycles in lexicographic order, truncated to `limit`.
pub fn enumerate_hamiltonian_cycles(map: &PlanarMap, limit: usize) -> Vec<HamiltonianCycle> {
    let mut cycles = search(map, None, false).expect("unbudgeted search cannot run out").cycles;
    cycles.truncate(limit);
    cycles
}

/// Runs the search. With `first_only` it stops at the first cycle found.
pub fn search(map: &PlanarMap, budget: Option<u64>, first_only: bool) -> Result<SearchReport> {
    let graph = Graph::new(map);
    let mut run = Run { graph: &graph, budget, first_only, expansions: 0, found: Vec::new() };
    if graph.n >= 3 {
        let mut state = State::new(&graph);
        let mut queue: Vec<usize> = (0..graph.n).collect();
        if state.propagate(&graph, &mut queue) {
            run.explore(state)?;
        }
    }
    let mut cycles: Vec<HamiltonianCycle> =
        run.found.into_iter().map(|seq| HamiltonianCycle { vertices: canonical_rotation(&seq) }).collect();
    cycles.sort();
    Ok(SearchReport { cycles, expansions: run.expansions })
}

struct Graph {
    n: usize,
    ends: Vec<(usize, usize)>,
    /// `(neighbour, edge id)` pairs sorted by neighbour.
    incident: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    fn new(map: &PlanarMap) -> Self {
        let n = map.vertex_count();
        let ends = map.edges().to_vec();
        let mut incident = vec![Vec::new(); n];
        for (e, &(u, v)) in ends.iter().enumerate() {
            incident[u].push((v, e));
            incident[v].push((u, e));
        }
        incident.iter_mut().for_each(|l| l.sort_unstable());
        Graph { n, ends, incident }
    }

    fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.incident[a].iter().find(|&&(x, _)| x == b).map(|&(_, e)| e)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Open,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    mark: Vec<Mark>,
    chosen_at: Vec<u8>,
    open_at: Vec<u32>,
    /// For a fragment end, the opposite end; `v` itself for isolated vertices.
    partner: Vec<usize>,
    chosen: usize,
    closed: bool,
}

impl State {
    fn new(g: &Graph) -> Self {
        State {
            mark: vec![Mark::Open; g.ends.len()],
            chosen_at: vec![0; g.n],
            open_at: g.incident.iter().map(|l| l.len() as u32).collect(),
            partner: (0..g.n).collect(),
            chosen: 0,
            closed: false,
        }
    }

    fn choose(&mut self, g: &Graph, e: usize, queue: &mut Vec<usize>) -> bool {
        match self.mark[e] {
            Mark::In => return true,
            Mark::Out => return false,
            Mark::Open => {}
        }
        let (u, v) = g.ends[e];
        self.mark[e] = Mark::In;
        self.chosen += 1;
        for w in [u, v] {
            self.chosen_at[w] += 1;
            self.open_at[w] -= 1;
            if self.chosen_at[w] > 2 {
                return false;
            }
        }
        let (a, b) = (self.partner[u], self.partner[v]);
        if a == v {
            // The fragment closes into a cycle.
            if self.chosen != g.n {
                return false;
            }
            self.closed = true;
        } else {
            self.partner[a] = b;
            self.partner[b] = a;
            if self.chosen + 1 < g.n {
                if let Some(shortcut) = g.edge_between(a, b) {
                    if self.mark[shortcut] == Mark::Open {
                        self.drop_edge(g, shortcut, queue);
                    }
                }
            }
        }
        queue.push(u);
        queue.push(v);
        true
    }

    fn drop_edge(&mut self, g: &Graph, e: usize, queue: &mut Vec<usize>) -> bool {
        match self.mark[e] {
            Mark::Out => return true,
            Mark::In => return false,
            Mark::Open => {}
        }
        self.mark[e] = Mark::Out;
        let (u, v) = g.ends[e];
        self.open_at[u] -= 1;
        self.open_at[v] -= 1;
        queue.push(u);
        queue.push(v);
        true
    }

    fn propagate(&mut self, g: &Graph, queue: &mut Vec<usize>) -> bool {
        while let Some(w) = queue.pop() {
            let chosen = self.chosen_at[w] as u32;
            let open = self.open_at[w];
            if chosen + open < 2 {
                return false;
            }
            if open == 0 {
                continue;
            }
            let force = if chosen == 2 {
                Mark::Out
            } else if chosen + open == 2 {
                Mark::In
            } else {
                continue;
            };
            for &(_, e) in &g.incident[w] {
                if self.mark[e] != Mark::Open {
                    continue;
                }
                let ok = match force {
                    Mark::In => self.choose(g, e, queue),
                    _ => self.drop_edge(g, e, queue),
                };
                if !ok {
                    return false;
                }
            }
        }
        self.closed || self.available_connected(g)
    }

    fn available_connected(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(u, e) in &g.incident[v] {
                if self.mark[e] != Mark::Out && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == g.n
    }

    fn branch_vertex(&self, g: &Graph) -> Option<usize> {
        let ends = (0..g.n)
            .filter(|&v| self.chosen_at[v] == 1 && self.open_at[v] > 0)
            .min_by_key(|&v| (self.open_at[v], std::cmp::Reverse(v)));
        ends.or_else(|| {
            (0..g.n)
                .filter(|&v| self.chosen_at[v] == 0 && self.open_at[v] > 0)
                .min_by_key(|&v| (self.open_at[v], v))
        })
    }

    fn cycle(&self, g: &Graph) -> Vec<usize> {
        let mut seq = vec![0];
        let mut prev = usize::MAX;
        let mut cur = 0;
        loop {
            let next = g.incident[cur]
                .iter()
                .find(|&&(u, e)| self.mark[e] == Mark::In && u != prev)
                .map(|&(u, _)| u)
                .unwrap();
            if next == 0 {
                return seq;
            }
            seq.push(next);
            prev = cur;
            cur = next;
        }
    }
}

struct Run<'g> {
    graph: &'g Graph,
    budget: Option<u64>,
    first_only: bool,
    expansions: u64,
    found: Vec<Vec<usize>>,
}

impl Run<'_> {
    /// Returns `Ok(true)` when the search should stop.
    fn explore(&mut self, state: State) -> Result<bool> {
        self.expansions += 1;
        if let Some(budget) = self.budget {
            if self.expansions > budget {
                return Err(Error::BudgetExhausted { budget });
            }
        }
        let g = self.graph;
        if state.closed {
            self.found.push(state.cycle(g));
            return Ok(self.first_only);
        }
        let Some(v) = state.branch_vertex(g) else {
            return Ok(false);
        };
        let e = g.incident[v].iter().find(|&&(_, e)| state.mark[e] == Mark::Open).map(|&(_, e)| e).unwrap();

        let mut with = state.clone();
        let mut queue = Vec::new();
        if with.choose(g, e, &mut queue) && with.propagate(g, &mut queue) && self.explore(with)? {
            return Ok(true);
        }
        let mut without = state;
        queue.clear();
        if without.drop_edge(g, e, &mut queue) && without.propagate(g, &mut queue) {
            return self.explore(without);
        }
        Ok(false)
    }
}
