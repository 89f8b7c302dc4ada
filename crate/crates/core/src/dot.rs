//! Graphviz output.

use std::fmt::Write;

use crate::map::PlanarMap;

/// Undirected DOT graph with nodes and edges in ascending order. Edges in
/// `highlight`, given in either orientation, are drawn bold.
pub fn export_dot(map: &PlanarMap, highlight: Option<&[(usize, usize)]>) -> String {
    let mut bold: Vec<(usize, usize)> =
        highlight.unwrap_or(&[]).iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    bold.sort_unstable();
    let mut out = String::from("graph map {\n");
    for v in 0..map.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in map.edges() {
        if bold.binary_search(&(u, v)).is_ok() {
            writeln!(out, "  {u} -- {v} [style=bold];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Edges on the boundary of face `id`.
pub fn face_edges(map: &PlanarMap, id: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = map.face(id).boundary.iter().map(|d| d.edge()).collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn cube_without_highlight() {
        let dot = export_dot(&fixtures::cube(), None);
        assert_eq!(dot.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count(), 8);
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(!dot.contains("bold"));
        assert_eq!(dot, export_dot(&fixtures::cube(), None));
    }

    #[test]
    fn highlighted_cycle() {
        let m = fixtures::tetrahedron();
        let dot = export_dot(&m, Some(&[(1, 0), (1, 2), (2, 3), (3, 0)]));
        assert_eq!(dot.matches("style=bold").count(), 4);
        assert!(dot.contains("  0 -- 1 [style=bold];"));
    }
}
