//! Non-Hamiltonicity certificates.
//!
//! Every Hamiltonian cycle of a plane map is the border of some isobaric
//! partition: its inner and outer faces have equal weight. A map therefore
//! has no Hamiltonian cycle when
//!
//! * exactly one face weight is not divisible by 3 (no isobaric partition
//!   can exist, since only one side could have weight divisible by 3);
//! * three faces meeting at a degree-3 vertex have weights congruent to each
//!   other and nonzero mod 3 while all other weights are divisible by 3
//!   (every isobaric partition keeps the three faces together, so no border
//!   passes through that vertex); or
//! * an exhaustive listing of the isobaric partitions shows that no border
//!   is a Hamiltonian cycle.
//!
//! [`check_certificate`] re-derives every claim from the map alone and does
//! not reuse the enumeration code that produced the certificate.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::format::content_lines;
use crate::hamilton::HamiltonianCycle;
use crate::isobaric::{enumerate_isobaric_partitions, IsobaricPartition};
use crate::map::PlanarMap;
use crate::weights::face_weights;

pub const CERTIFICATE_HEADER: &str = "certificate v1";

/// Why the border of an isobaric partition is not a Hamiltonian cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BorderDefect {
    /// The border avoids this vertex (smallest such id).
    MissesVertex(usize),
    /// This vertex (smallest such id) has border degree other than 2.
    NotTwoRegular(usize),
    /// The border is 2-regular and spanning but splits into several cycles.
    Disconnected,
}

/// One isobaric partition of an exhaustive certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disqualified {
    /// Faces on the side containing face 0.
    pub side_a: Vec<usize>,
    pub defect: BorderDefect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The only face whose weight is not divisible by 3.
    CaseA { face: usize, weight: i64 },
    /// Three faces around `vertex` carrying the only weights not divisible by 3.
    CaseB { vertex: usize, faces: [usize; 3] },
    /// Every isobaric partition with the reason its border fails.
    Exhaustive { partitions: Vec<Disqualified> },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::CaseA { .. } => "case_a",
            Certificate::CaseB { .. } => "case_b",
            Certificate::Exhaustive { .. } => "exhaustive",
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        match self {
            Certificate::CaseA { face, weight } => {
                format!("certificate: case_a face={face} weight={weight}")
            }
            Certificate::CaseB { vertex, faces: [a, b, c] } => {
                format!("certificate: case_b vertex={vertex} faces={a},{b},{c}")
            }
            Certificate::Exhaustive { partitions } => {
                format!("certificate: exhaustive partitions={}", partitions.len())
            }
        }
    }
}

/// Outcome of the full decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    NonHamiltonian(Certificate),
    /// Some isobaric border is a Hamiltonian cycle.
    Hamiltonian(HamiltonianCycle),
}

/// Residue pattern of a weight multiset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightPattern {
    /// Exactly one weight is not divisible by 3.
    CaseA {
        residue: i64,
    },
    /// Exactly three weights are not divisible by 3 and they agree mod 3.
    /// Whether the faces meet at a vertex is not decided at this level.
    CaseB {
        residue: i64,
    },
    Other,
}

pub fn weight_pattern(weights: &[i64]) -> WeightPattern {
    let off: Vec<i64> = weights.iter().map(|w| w.rem_euclid(3)).filter(|&r| r != 0).collect();
    match off[..] {
        [r] => WeightPattern::CaseA { residue: r },
        [a, b, c] if a == b && b == c => WeightPattern::CaseB { residue: a },
        _ => WeightPattern::Other,
    }
}

/// True if the multiset splits into two parts of equal sum (both nonempty).
pub fn has_equal_split(weights: &[i64]) -> bool {
    let total: i64 = weights.iter().sum();
    if weights.len() < 2 || total % 2 != 0 || weights.iter().any(|&w| w <= 0) {
        return false;
    }
    let target = (total / 2) as usize;
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for &w in weights {
        let w = w as usize;
        for s in (w..=target).rev() {
            reach[s] |= reach[s - w];
        }
    }
    reach[target]
}

pub fn certificate_case_a(map: &PlanarMap) -> Option<Certificate> {
    let weights = face_weights(map);
    match weight_pattern(&weights) {
        WeightPattern::CaseA { .. } => {
            let face = weights.iter().position(|w| w % 3 != 0)?;
            Some(Certificate::CaseA { face, weight: weights[face] })
        }
        _ => None,
    }
}

pub fn certificate_case_b(map: &PlanarMap) -> Option<Certificate> {
    let weights = face_weights(map);
    if !matches!(weight_pattern(&weights), WeightPattern::CaseB { .. }) {
        return None;
    }
    let special: Vec<usize> = (0..weights.len()).filter(|&f| weights[f] % 3 != 0).collect();
    (0..map.vertex_count()).find_map(|v| {
        let mut around = map.faces_at(v);
        around.sort_unstable();
        (around == special)
            .then(|| Certificate::CaseB { vertex: v, faces: [special[0], special[1], special[2]] })
    })
}

/// Classifies the border of a face split; `None` means it is a Hamiltonian cycle.
pub fn border_defect(vertex_count: usize, border: &[(usize, usize)]) -> Option<BorderDefect> {
    let mut degree = vec![0usize; vertex_count];
    for &(u, v) in border {
        degree[u] += 1;
        degree[v] += 1;
    }
    if let Some(v) = degree.iter().position(|&d| d == 0) {
        return Some(BorderDefect::MissesVertex(v));
    }
    if let Some(v) = degree.iter().position(|&d| d != 2) {
        return Some(BorderDefect::NotTwoRegular(v));
    }
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = vertex_count;
    for &(u, v) in border {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    (components != 1).then_some(BorderDefect::Disconnected)
}

/// Walks a 2-regular connected spanning edge set into a vertex sequence.
fn border_cycle(map: &PlanarMap, border: &[(usize, usize)]) -> Result<HamiltonianCycle> {
    let n = map.vertex_count();
    let mut adj = vec![Vec::with_capacity(2); n];
    for &(u, v) in border {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seq = vec![0];
    let (mut prev, mut cur) = (0, adj[0][0]);
    while cur != 0 {
        seq.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    HamiltonianCycle::new(map, &seq)
}

/// Tries case a, then case b, then the exhaustive route.
pub fn decide(map: &PlanarMap, ceiling: usize) -> Result<Decision> {
    if let Some(cert) = certificate_case_a(map).or_else(|| certificate_case_b(map)) {
        return Ok(Decision::NonHamiltonian(cert));
    }
    exhaustive(map, ceiling)
}

/// The exhaustive route alone.
pub fn exhaustive(map: &PlanarMap, ceiling: usize) -> Result<Decision> {
    let mut partitions = Vec::new();
    for p in enumerate_isobaric_partitions(map, None, ceiling)? {
        match border_defect(map.vertex_count(), &p.border) {
            Some(defect) => partitions.push(Disqualified { side_a: p.side_a, defect }),
            None => return Ok(Decision::Hamiltonian(border_cycle(map, &p.border)?)),
        }
    }
    Ok(Decision::NonHamiltonian(Certificate::Exhaustive { partitions }))
}

/// A certificate of non-Hamiltonicity, or `None` when some isobaric border
/// is a Hamiltonian cycle.
pub fn certify_non_hamiltonian(map: &PlanarMap, ceiling: usize) -> Result<Option<Certificate>> {
    Ok(match decide(map, ceiling)? {
        Decision::NonHamiltonian(cert) => Some(cert),
        Decision::Hamiltonian(_) => None,
    })
}

/// Re-verifies `cert` against `map`.
pub fn check_certificate(map: &PlanarMap, cert: &Certificate) -> bool {
    let weights: Vec<i64> = map.faces().iter().map(|f| f.len() as i64 - 2).collect();
    match cert {
        Certificate::CaseA { face, weight } => {
            *face < weights.len()
                && weights[*face] == *weight
                && weight % 3 != 0
                && (0..weights.len()).all(|f| f == *face || weights[f] % 3 == 0)
        }
        Certificate::CaseB { vertex, faces } => {
            if *vertex >= map.vertex_count() || map.degree(*vertex) != 3 {
                return false;
            }
            let mut claimed = faces.to_vec();
            claimed.sort_unstable();
            claimed.dedup();
            if claimed.len() != 3 || claimed.iter().any(|&f| f >= weights.len()) {
                return false;
            }
            let mut around: Vec<usize> = map
                .rotation(*vertex)
                .iter()
                .map(|&u| map.face_of(crate::map::Dart::new(*vertex, u)).unwrap())
                .collect();
            around.sort_unstable();
            let residue = weights[claimed[0]].rem_euclid(3);
            around == claimed
                && residue != 0
                && claimed.iter().all(|&f| weights[f].rem_euclid(3) == residue)
                && (0..weights.len()).all(|f| claimed.contains(&f) || weights[f] % 3 == 0)
        }
        Certificate::Exhaustive { partitions } => {
            let expected = balanced_sides(&weights);
            if partitions.len() != expected.len() {
                return false;
            }
            let mut claimed: Vec<&Disqualified> = partitions.iter().collect();
            claimed.sort_by(|a, b| a.side_a.cmp(&b.side_a));
            claimed.iter().zip(&expected).all(|(entry, side)| {
                entry.side_a == *side && recomputed_defect(map, side) == Some(entry.defect)
            })
        }
    }
}

/// Plain include/exclude recursion over faces with face 0 pinned.
fn balanced_sides(weights: &[i64]) -> Vec<Vec<usize>> {
    fn walk(
        weights: &[i64],
        i: usize,
        sum: i64,
        left: i64,
        target: i64,
        side: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if sum == target {
            if side.len() < weights.len() {
                out.push(side.clone());
            }
            return;
        }
        if i == weights.len() || sum > target || sum + left < target {
            return;
        }
        side.push(i);
        walk(weights, i + 1, sum + weights[i], left - weights[i], target, side, out);
        side.pop();
        walk(weights, i + 1, sum, left - weights[i], target, side, out);
    }
    let total: i64 = weights.iter().sum();
    let mut out = Vec::new();
    if weights.len() >= 2 && total % 2 == 0 {
        let mut side = vec![0];
        walk(weights, 1, weights[0], total - weights[0], total / 2, &mut side, &mut out);
    }
    out.sort();
    out
}

fn recomputed_defect(map: &PlanarMap, side: &[usize]) -> Option<BorderDefect> {
    let mut in_side = vec![false; map.face_count()];
    side.iter().for_each(|&f| in_side[f] = true);
    // Count each boundary dart whose face is in the side; an edge is on the
    // border iff exactly one of its two darts is counted.
    let mut hits = vec![0u8; map.edge_count()];
    for face in map.faces().iter().filter(|f| in_side[f.id]) {
        for d in &face.boundary {
            hits[map.edge_index(d.tail, d.head).unwrap()] += 1;
        }
    }
    let border: Vec<(usize, usize)> =
        map.edges().iter().zip(&hits).filter(|(_, &h)| h == 1).map(|(&e, _)| e).collect();
    border_defect(map.vertex_count(), &border)
}

/// Serialises a certificate in the `certificate v1` text format.
pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = format!("{CERTIFICATE_HEADER}\nkind {}\n", cert.kind());
    match cert {
        Certificate::CaseA { face, weight } => writeln!(out, "face {face} weight {weight}").unwrap(),
        Certificate::CaseB { vertex, faces: [a, b, c] } => {
            writeln!(out, "vertex {vertex}\nfaces {a} {b} {c}").unwrap()
        }
        Certificate::Exhaustive { partitions } => {
            writeln!(out, "partitions {}", partitions.len()).unwrap();
            for p in partitions {
                out.push_str("partition");
                for f in &p.side_a {
                    write!(out, " {f}").unwrap();
                }
                match p.defect {
                    BorderDefect::MissesVertex(v) => writeln!(out, " : misses_vertex {v}"),
                    BorderDefect::NotTwoRegular(v) => writeln!(out, " : not_two_regular {v}"),
                    BorderDefect::Disconnected => writeln!(out, " : disconnected"),
                }
                .unwrap();
            }
        }
    }
    out
}

/// Parses the `certificate v1` text format.
pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let err = |line: usize, msg: &str| Error::Parse { line, message: msg.to_string() };
    let num = |line: usize, t: &str| -> Result<usize> {
        t.parse().map_err(|_| err(line, &format!("expected a number, found `{t}`")))
    };
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or_else(|| err(1, "empty document"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["certificate", "v1"] {
        return Err(err(no, "expected `certificate v1`"));
    }
    let (no, kind_line) = lines.next().ok_or_else(|| err(no + 1, "missing `kind` line"))?;
    let kind = match kind_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["kind", k] => k.to_string(),
        _ => return Err(err(no, "expected `kind <case_a|case_b|exhaustive>`")),
    };
    let rest: Vec<(usize, Vec<&str>)> = lines.map(|(no, l)| (no, l.split_whitespace().collect())).collect();
    let end = no + 1;
    let cert = match kind.as_str() {
        "case_a" => match &rest[..] {
            [(no, t)] => match t[..] {
                ["face", f, "weight", w] => Certificate::CaseA {
                    face: num(*no, f)?,
                    weight: w.parse().map_err(|_| err(*no, "bad weight"))?,
                },
                _ => return Err(err(*no, "expected `face <id> weight <w>`")),
            },
            _ => return Err(err(end, "case_a needs exactly one `face` line")),
        },
        "case_b" => match &rest[..] {
            [(n1, t1), (n2, t2)] => {
                let vertex = match t1[..] {
                    ["vertex", v] => num(*n1, v)?,
                    _ => return Err(err(*n1, "expected `vertex <id>`")),
                };
                let faces = match t2[..] {
                    ["faces", a, b, c] => [num(*n2, a)?, num(*n2, b)?, num(*n2, c)?],
                    _ => return Err(err(*n2, "expected `faces <a> <b> <c>`")),
                };
                Certificate::CaseB { vertex, faces }
            }
            _ => return Err(err(end, "case_b needs `vertex` and `faces` lines")),
        },
        "exhaustive" => {
            let ((no, first), entries) =
                rest.split_first().ok_or_else(|| err(end, "missing `partitions` line"))?;
            let count = match first[..] {
                ["partitions", c] => num(*no, c)?,
                _ => return Err(err(*no, "expected `partitions <count>`")),
            };
            if entries.len() != count {
                return Err(err(*no, "partition count does not match the listed partitions"));
            }
            let mut partitions = Vec::with_capacity(count);
            for (no, tokens) in entries {
                let colon = tokens.iter().position(|&t| t == ":");
                let (Some("partition"), Some(colon)) = (tokens.first().copied(), colon) else {
                    return Err(err(*no, "expected `partition <faces> : <reason>`"));
                };
                let side_a = tokens[1..colon].iter().map(|t| num(*no, t)).collect::<Result<Vec<_>>>()?;
                let defect = match tokens[colon + 1..] {
                    ["misses_vertex", v] => BorderDefect::MissesVertex(num(*no, v)?),
                    ["not_two_regular", v] => BorderDefect::NotTwoRegular(num(*no, v)?),
                    ["disconnected"] => BorderDefect::Disconnected,
                    _ => return Err(err(*no, "unknown disqualification reason")),
                };
                partitions.push(Disqualified { side_a, defect });
            }
            Certificate::Exhaustive { partitions }
        }
        _ => return Err(err(no, "unknown certificate kind")),
    };
    Ok(cert)
}

/// Border of a stored partition, recomputed from the map.
pub fn border_of(map: &PlanarMap, partition: &IsobaricPartition) -> Vec<(usize, usize)> {
    let mut in_side = vec![false; map.face_count()];
    partition.side_a.iter().for_each(|&f| in_side[f] = true);
    crate::isobaric::partition_border(map, &in_side)
}
