//! Text formats: tab-separated edge lists and color files, CCDF export.
//!
//! Node identifiers in files are arbitrary tokens. They are remapped to dense
//! indices in order of first appearance in the edge list; the mapping is kept
//! in [`LabeledGraph::labels`].

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph};
use crate::stats::Ccdf;

/// A graph together with the original node labels.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: ColoredDigraph,
    /// `labels[i]` is the file identifier of dense node `i`.
    pub labels: Vec<String>,
    /// Color-file entries naming nodes that never appear in an edge.
    pub unused_colors: usize,
}

fn content_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(Error::from(e))),
        Ok(line) => {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                None
            } else {
                Some(Ok((i + 1, trimmed.to_string())))
            }
        }
    })
}

fn two_fields(line_no: usize, line: &str) -> Result<(String, String)> {
    let mut parts = line.split(|c: char| c == '\t' || c.is_whitespace()).filter(|s| !s.is_empty());
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => Ok((a.to_string(), b.to_string())),
        _ => Err(Error::Parse {
            line: line_no,
            reason: format!("expected two tab-separated fields, got {line:?}"),
        }),
    }
}

/// Reads `src<TAB>dst` lines. `#` lines and blank lines are skipped.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Vec<(String, String)>> {
    content_lines(reader)
        .map(|item| item.and_then(|(no, line)| two_fields(no, &line)))
        .collect()
}

/// Reads `node<TAB>{R|B}` lines.
pub fn read_colors<R: BufRead>(reader: R) -> Result<HashMap<String, Color>> {
    let mut map = HashMap::new();
    for item in content_lines(reader) {
        let (no, line) = item?;
        let (node, color) = two_fields(no, &line)?;
        let color: Color = color
            .parse()
            .map_err(|reason| Error::Parse { line: no, reason })?;
        if let Some(prev) = map.insert(node.clone(), color) {
            if prev != color {
                return Err(Error::Parse {
                    line: no,
                    reason: format!("conflicting colors for node {node:?}"),
                });
            }
        }
    }
    Ok(map)
}

/// Remaps labeled edges to dense ids and attaches colors.
pub fn build_labeled(
    edges: &[(String, String)],
    colors: &HashMap<String, Color>,
) -> Result<LabeledGraph> {
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut dense = Vec::with_capacity(edges.len());
    for (s, t) in edges {
        let mut pair = [0usize; 2];
        for (slot, label) in pair.iter_mut().zip([s, t]) {
            *slot = *index.entry(label.as_str()).or_insert_with(|| {
                labels.push(label.clone());
                labels.len() - 1
            });
        }
        dense.push((pair[0], pair[1]));
    }
    let node_colors = labels
        .iter()
        .map(|l| {
            colors
                .get(l)
                .copied()
                .ok_or_else(|| Error::MissingLabelColor(l.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let unused_colors = colors.keys().filter(|k| !index.contains_key(k.as_str())).count();
    let graph = ColoredDigraph::from_edge_list(&dense, &node_colors)?;
    Ok(LabeledGraph {
        graph,
        labels,
        unused_colors,
    })
}

/// Reads an edge file and a color file into a labeled graph.
pub fn load<R1: BufRead, R2: BufRead>(edges: R1, colors: R2) -> Result<LabeledGraph> {
    let edges = read_edge_list(edges)?;
    let colors = read_colors(colors)?;
    build_labeled(&edges, &colors)
}

/// Writes the edges with dense ids, one `src<TAB>dst` per line.
pub fn write_edge_list<W: Write>(g: &ColoredDigraph, mut w: W) -> Result<()> {
    let mut buf = String::new();
    for (s, t) in g.edges() {
        writeln!(buf, "{s}\t{t}").unwrap();
    }
    w.write_all(buf.as_bytes())?;
    Ok(())
}

pub fn write_colors<W: Write>(g: &ColoredDigraph, mut w: W) -> Result<()> {
    let mut buf = String::new();
    for (v, c) in g.colors().iter().enumerate() {
        writeln!(buf, "{v}\t{c}").unwrap();
    }
    w.write_all(buf.as_bytes())?;
    Ok(())
}

pub const CCDF_HEADER: &str = "color,k,ccdf";

/// CSV with header `color,k,ccdf`, red rows first.
pub fn ccdf_csv(red: &Ccdf, blue: &Ccdf) -> String {
    let mut out = String::from(CCDF_HEADER);
    out.push('\n');
    for (color, ccdf) in [(Color::Red, red), (Color::Blue, blue)] {
        for &(k, p) in ccdf.points() {
            writeln!(out, "{color},{k},{p}").unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_files_with_comments_and_arbitrary_ids() {
        let edges = "# header\nalice\tbob\n\nbob\tcarol\n# trailing\ncarol\talice\n";
        let colors = "alice\tR\nbob\tB\ncarol\tB\ndave\tR\n";
        let lg = load(edges.as_bytes(), colors.as_bytes()).unwrap();
        assert_eq!(lg.labels, vec!["alice", "bob", "carol"]);
        assert_eq!(lg.graph.edge_count(), 3);
        assert_eq!(lg.graph.colors(), &[Color::Red, Color::Blue, Color::Blue]);
        assert_eq!(lg.unused_colors, 1);
    }

    #[test]
    fn reports_line_numbers() {
        let err = read_edge_list("a\tb\nc\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = read_colors("a\tR\n#x\nb\tG\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn missing_color_is_an_error() {
        let err = load("a\tb\n".as_bytes(), "a\tR\n".as_bytes()).unwrap_err();
        assert_eq!(err, Error::MissingLabelColor("b".into()));
    }

    #[test]
    fn empty_edge_file_is_an_error() {
        let err = load("# nothing\n".as_bytes(), "a\tR\n".as_bytes()).unwrap_err();
        assert_eq!(err, Error::EmptyGraph);
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(
            raw in prop::collection::vec((0usize..12, 0usize..12), 1..40),
            reds in prop::collection::vec(any::<bool>(), 12),
        ) {
            let colors: Vec<Color> = reds.iter().map(|&r| if r { Color::Red } else { Color::Blue }).collect();
            let g = ColoredDigraph::from_edge_list(&raw, &colors).unwrap();
            let mut edge_text = Vec::new();
            write_edge_list(&g, &mut edge_text).unwrap();
            let mut color_text = Vec::new();
            write_colors(&g, &mut color_text).unwrap();
            let lg = load(edge_text.as_slice(), color_text.as_slice()).unwrap();
            let mut back: Vec<(usize, usize)> = lg
                .graph
                .edges()
                .map(|(s, t)| (lg.labels[s].parse().unwrap(), lg.labels[t].parse().unwrap()))
                .collect();
            let mut orig = raw.clone();
            back.sort_unstable();
            orig.sort_unstable();
            prop_assert_eq!(back, orig);
            for (i, label) in lg.labels.iter().enumerate() {
                let v: usize = label.parse().unwrap();
                prop_assert_eq!(lg.graph.color(i), g.color(v));
            }
        }
    }
}
