//! Line-oriented text format for embedded maps (`planarmap 1`).
//!
//! ```text
//! # optional comments anywhere
//! planarmap 1
//! V <n>
//! <id>: <k> <neighbour ids, counterclockwise>     (n lines, ids 0..n-1 in order)
//! outer: <u> <v>                                  (optional, a dart on the outer face)
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Tokens are
//! separated by spaces or tabs. [`write_map`] emits the canonical form:
//! single spaces, `\n` line endings, no comments, and the `outer:` line
//! only when the map carries an explicit outer dart. Parsing a canonical
//! document and writing it back reproduces it byte for byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::map::{Dart, PlanarMap};

pub const MAP_HEADER: &str = "planarmap 1";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_number(line: usize, token: &str, what: &str) -> Result<usize> {
    token.parse::<usize>().map_err(|_| parse_error(line, format!("expected {what}, found `{token}`")))
}

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
    })
}

/// Parses and validates a map document.
pub fn parse_map(text: &str) -> Result<PlanarMap> {
    let mut lines = content_lines(text);

    let (no, header) = lines.next().ok_or_else(|| parse_error(1, "empty document"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["planarmap", "1"] {
        return Err(parse_error(no, format!("expected `{MAP_HEADER}`")));
    }

    let (no, count_line) = lines.next().ok_or_else(|| parse_error(no + 1, "missing `V <n>` line"))?;
    let count = match count_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["V", n] => parse_number(no, n, "vertex count")?,
        _ => return Err(parse_error(no, "expected `V <n>`")),
    };
    if count == 0 {
        return Err(Error::Empty);
    }

    let mut rotations: Vec<Vec<usize>> = Vec::new();
    let mut outer = None;
    let mut last = no;
    for (no, line) in lines {
        last = no;
        if let Some(rest) = line.strip_prefix("outer:") {
            if rotations.len() != count {
                return Err(parse_error(no, "`outer:` must follow all vertex lines"));
            }
            if outer.is_some() {
                return Err(parse_error(no, "duplicate `outer:` line"));
            }
            match rest.split_whitespace().collect::<Vec<_>>()[..] {
                [u, v] => {
                    outer =
                        Some(Dart::new(parse_number(no, u, "vertex id")?, parse_number(no, v, "vertex id")?))
                }
                _ => return Err(parse_error(no, "expected `outer: <u> <v>`")),
            }
            continue;
        }
        if outer.is_some() {
            return Err(parse_error(no, "unexpected line after `outer:`"));
        }
        let (id, rest) =
            line.split_once(':').ok_or_else(|| parse_error(no, "expected `<id>: <k> <neighbours>`"))?;
        let id = parse_number(no, id.trim(), "vertex id")?;
        if id != rotations.len() {
            return Err(parse_error(no, format!("expected vertex {}, found {id}", rotations.len())));
        }
        if id >= count {
            return Err(parse_error(no, format!("more than {count} vertex lines")));
        }
        let mut tokens = rest.split_whitespace();
        let k = parse_number(no, tokens.next().ok_or_else(|| parse_error(no, "missing degree"))?, "degree")?;
        let neighbours = tokens.map(|t| parse_number(no, t, "neighbour id")).collect::<Result<Vec<_>>>()?;
        if neighbours.len() != k {
            return Err(parse_error(no, format!("degree {k} but {} neighbours listed", neighbours.len())));
        }
        rotations.push(neighbours);
    }
    if rotations.len() != count {
        return Err(parse_error(
            last + 1,
            format!("expected {count} vertex lines, found {}", rotations.len()),
        ));
    }
    PlanarMap::from_rotations(rotations, outer)
}

/// Writes the canonical document for `map`.
pub fn write_map(map: &PlanarMap) -> String {
    let mut out = String::new();
    writeln!(out, "{MAP_HEADER}").unwrap();
    writeln!(out, "V {}", map.vertex_count()).unwrap();
    for (v, rot) in map.rotations().iter().enumerate() {
        write!(out, "{v}: {}", rot.len()).unwrap();
        for u in rot {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    if let Some(d) = map.outer_dart() {
        writeln!(out, "outer: {d}").unwrap();
    }
    out
}

/// Parses whitespace-separated vertex lists, one per non-comment line.
pub fn parse_vertex_lists(text: &str) -> Result<Vec<Vec<usize>>> {
    content_lines(text)
        .map(|(no, line)| line.split_whitespace().map(|t| parse_number(no, t, "vertex id")).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const TETRA: &str = "planarmap 1\nV 4\n0: 3 1 3 2\n1: 3 2 3 0\n2: 3 0 3 1\n3: 3 0 1 2\n";

    #[test]
    fn canonical_round_trip() {
        let m = parse_map(TETRA).unwrap();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (4, 6, 4));
        assert_eq!(write_map(&m), TETRA);
        let with_outer = format!("{TETRA}outer: 3 2\n");
        let m = parse_map(&with_outer).unwrap();
        assert_eq!(write_map(&m), with_outer);
        assert_eq!(m.outer_face(), m.face_of(Dart::new(3, 2)).unwrap());
    }

    #[test]
    fn comments_and_spacing_are_tolerated() {
        let text =
            "# tetrahedron\nplanarmap 1\n\nV 4\n0:  3 1 3 2\n# mid\n1: 3 2 3 0\n2: 3\t0 3 1\n3: 3 0 1 2\n";
        assert_eq!(write_map(&parse_map(text).unwrap()), TETRA);
    }

    #[test]
    fn malformed_documents() {
        let cases = [
            ("", 1),
            ("planarmap 2\n", 1),
            ("planarmap 1\nW 4\n", 2),
            ("planarmap 1\nV x\n", 2),
            ("planarmap 1\nV 4\n0: 3 1 3\n", 3),
            ("planarmap 1\nV 4\n1: 3 2 3 0\n", 3),
            ("planarmap 1\nV 2\n0: 1 1\n", 4),
            ("planarmap 1\nV 4\n0 3 1 3 2\n", 3),
            ("planarmap 1\nV 4\n0: 3 1 3 2\nouter: 0 1\n", 4),
        ];
        for (text, line) in cases {
            match parse_map(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert_eq!(parse_map("planarmap 1\nV 0\n"), Err(Error::Empty));
    }

    #[test]
    fn structural_errors_surface() {
        let k5 = "planarmap 1\nV 5\n0: 4 1 2 3 4\n1: 4 0 2 3 4\n2: 4 0 1 3 4\n3: 4 0 1 2 4\n4: 4 0 1 2 3\n";
        assert!(matches!(parse_map(k5), Err(Error::EulerViolation { .. })));
        let asym = "planarmap 1\nV 3\n0: 2 1 2\n1: 2 0 2\n2: 1 1\n";
        assert!(matches!(parse_map(asym), Err(Error::AsymmetricAdjacency { .. })));
    }

    #[test]
    fn fixtures_round_trip() {
        for name in fixtures::NAMES {
            let m = fixtures::fixture(name).unwrap();
            let text = write_map(&m);
            let back = parse_map(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(write_map(&back), text);
        }
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_lists("# c\n0 1 2\n\n3 4\n").unwrap(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(parse_vertex_lists("0 a\n").is_err());
    }
}
