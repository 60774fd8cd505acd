//! Text formats for graphs and set systems.
//!
//! Graph files:
//!
//! ```text
//! vertices: p q r s
//! loop p
//! edge p q
//! ```
//!
//! Set-system files:
//!
//! ```text
//! vertices: p q r s
//! {}
//! {p,r}
//! ```
//!
//! Renderers are deterministic: loops in ground order, edges in
//! lexicographic ground order, subsets by (size, bitmask). Parsers reject
//! unknown labels and duplicate declarations; subset line order is free.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ground::{Ground, VertexSet};
use crate::set_system::SetSystem;

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Splits text into (line, 1-based number, byte offset of line start).
fn lines(text: &str) -> impl Iterator<Item = (&str, usize, usize)> {
    let mut offset = 0;
    text.split_inclusive('\n').enumerate().map(move |(i, raw)| {
        let start = offset;
        offset += raw.len();
        (raw.trim_end_matches(['\n', '\r']), i + 1, start)
    })
}

fn parse_header(line: &str, offset: usize) -> Result<Ground> {
    let Some(rest) = line.strip_prefix("vertices:") else {
        return Err(Error::Parse {
            offset,
            message: "expected a `vertices:` header line".to_string(),
        });
    };
    let labels: Vec<&str> = rest.split_whitespace().collect();
    for l in &labels {
        if !valid_label(l) {
            return Err(Error::Parse {
                offset,
                message: format!("invalid vertex label `{l}`"),
            });
        }
    }
    Ground::new(labels)
}

/// Parses the graph file format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let Some((header, _, off)) = it.next() else {
        return Err(Error::Parse {
            offset: 0,
            message: "empty input".to_string(),
        });
    };
    let ground = parse_header(header, off)?;
    let mut seen_loops = vec![false; ground.len()];
    let mut seen_edges = std::collections::HashSet::new();
    for (line, lineno, off) in it {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("loop") => {
                let (Some(u), None) = (parts.next(), parts.next()) else {
                    return Err(Error::Parse {
                        offset: off,
                        message: "loop lines take exactly one vertex".to_string(),
                    });
                };
                let i = ground.index_of(u)?;
                if seen_loops[i] {
                    return Err(Error::DuplicateDeclaration {
                        line: lineno,
                        item: format!("loop {u}"),
                    });
                }
                seen_loops[i] = true;
            }
            Some("edge") => {
                let (Some(u), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(Error::Parse {
                        offset: off,
                        message: "edge lines take exactly two vertices".to_string(),
                    });
                };
                let i = ground.index_of(u)?;
                let j = ground.index_of(v)?;
                if i == j {
                    return Err(Error::Parse {
                        offset: off,
                        message: format!("`edge {u} {u}` is not allowed; use `loop {u}`"),
                    });
                }
                if !seen_edges.insert((i.min(j), i.max(j))) {
                    return Err(Error::DuplicateDeclaration {
                        line: lineno,
                        item: format!("edge {u} {v}"),
                    });
                }
            }
            Some(other) => {
                return Err(Error::Parse {
                    offset: off,
                    message: format!("expected `loop` or `edge`, found `{other}`"),
                });
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let loop_labels: Vec<&str> = seen_loops
        .iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(i, _)| ground.label(i))
        .collect();
    let edge_labels: Vec<(&str, &str)> = seen_edges
        .iter()
        .map(|&(i, j)| (ground.label(i), ground.label(j)))
        .collect();
    Graph::from_edges(&ground, &edge_labels, &loop_labels)
}

/// Renders a graph in the file format (header, loops, then edges).
pub fn render_graph(g: &Graph) -> String {
    let ground = g.ground();
    let mut out = String::from("vertices:");
    for l in ground.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for i in g.loops() {
        out.push_str(&format!("loop {}\n", ground.label(i)));
    }
    for (i, j) in g.edges() {
        out.push_str(&format!("edge {} {}\n", ground.label(i), ground.label(j)));
    }
    out
}

/// Parses one `{a,b,c}` subset, spaces inside braces allowed.
fn parse_subset(ground: &Ground, line: &str, offset: usize) -> Result<VertexSet> {
    let bytes = line.as_bytes();
    let err = |at: usize, message: &str| Error::Parse {
        offset: offset + at,
        message: message.to_string(),
    };
    if bytes.first() != Some(&b'{') {
        return Err(err(0, "expected `{`"));
    }
    if bytes.last() != Some(&b'}') {
        return Err(err(line.len(), "expected `}`"));
    }
    let inner = &line[1..line.len() - 1];
    let mut set = VertexSet::empty(ground);
    if inner.trim().is_empty() {
        return Ok(set);
    }
    for part in inner.split(',') {
        let label = part.trim();
        if !valid_label(label) {
            return Err(err(1, &format!("invalid vertex label `{label}`")));
        }
        set = set.union(&VertexSet::singleton(ground, label)?);
    }
    Ok(set)
}

/// Parses the set-system file format.
pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let mut it = lines(text);
    let Some((header, _, off)) = it.next() else {
        return Err(Error::Parse {
            offset: 0,
            message: "empty input".to_string(),
        });
    };
    let ground = parse_header(header, off)?;
    let mut subsets = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, lineno, off) in it {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let s = parse_subset(&ground, line, off)?;
        if !seen.insert(s.bits()) {
            return Err(Error::DuplicateDeclaration {
                line: lineno,
                item: s.to_string(),
            });
        }
        subsets.push(s);
    }
    SetSystem::from_subsets(&ground, subsets.iter())
}

/// Renders a set system in the file format, one subset per line in
/// (size, bitmask) order.
pub fn render_set_system(s: &SetSystem) -> String {
    let mut out = String::from("vertices:");
    for l in s.ground().labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for member in s.members_by_size() {
        out.push_str(&member.to_string());
        out.push('\n');
    }
    out
}

/// DOT rendering of a single graph; loops become self-edges.
pub fn render_graph_dot(g: &Graph) -> String {
    let ground = g.ground();
    let mut out = String::from("graph G {\n");
    for l in ground.labels() {
        out.push_str(&format!("  \"{l}\";\n"));
    }
    for i in g.loops() {
        let l = ground.label(i);
        out.push_str(&format!("  \"{l}\" -- \"{l}\";\n"));
    }
    for (i, j) in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            ground.label(i),
            ground.label(j)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{example_matrix, ss};

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_matrix(example_matrix());
        let text = render_graph(&g);
        assert_eq!(
            text,
            "vertices: p q r s\nloop p\nloop q\nedge p q\nedge p r\nedge p s\nedge r s\n"
        );
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_parse_errors() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("nodes: a b\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("vertices: a b\nedge a c\n"),
            Err(Error::UnknownVertex { .. })
        ));
        assert!(matches!(
            parse_graph("vertices: a b\nedge a b\nedge b a\n"),
            Err(Error::DuplicateDeclaration { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("vertices: a b\nloop a\nloop a\n"),
            Err(Error::DuplicateDeclaration { .. })
        ));
        assert!(matches!(
            parse_graph("vertices: a b\nedge a a\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("vertices: a b\nlink a b\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn set_system_round_trip_in_canonical_order() {
        let s = SetSystem::of_matrix(&example_matrix()).unwrap();
        let text = render_set_system(&s);
        assert_eq!(
            text,
            "vertices: p q r s\n{}\n{p}\n{q}\n{p,r}\n{p,s}\n{r,s}\n{p,q,r}\n{p,q,s}\n{p,r,s}\n{q,r,s}\n"
        );
        assert_eq!(parse_set_system(&text).unwrap(), s);
    }

    #[test]
    fn set_system_parsing_is_order_insensitive_and_space_tolerant() {
        let a = parse_set_system("vertices: a b c\n{a, b}\n{}\n{ c }\n").unwrap();
        let g = a.ground().clone();
        assert_eq!(a, ss(&g, &["", "a b", "c"]));

        assert!(matches!(
            parse_set_system("vertices: a b\n{a}\n{ a }\n"),
            Err(Error::DuplicateDeclaration { .. })
        ));
        assert!(matches!(
            parse_set_system("vertices: a b\n{a b}\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_set_system("vertices: a b\n{x}\n"),
            Err(Error::UnknownVertex { .. })
        ));
    }

    #[test]
    fn dot_rendering_is_stable() {
        let gr = Ground::new(["a", "b"]).unwrap();
        let g = Graph::from_edges(&gr, &[("a", "b")], &["b"]).unwrap();
        let dot = render_graph_dot(&g);
        assert_eq!(
            dot,
            "graph G {\n  \"a\";\n  \"b\";\n  \"b\" -- \"b\";\n  \"a\" -- \"b\";\n}\n"
        );
        assert_eq!(render_graph_dot(&g), dot);
    }
}
