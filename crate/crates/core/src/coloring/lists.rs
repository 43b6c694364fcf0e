use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::embedding::{EdgeId, EmbeddedGraph, VertexId};

pub type Color = u32;

/// Whether only edges are colored, or edges and vertices together.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ColorMode {
    #[default]
    Edge,
    Total,
}

impl std::fmt::Display for ColorMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ColorMode::Edge => "edge",
            ColorMode::Total => "total",
        })
    }
}

impl std::str::FromStr for ColorMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge" => Ok(ColorMode::Edge),
            "total" => Ok(ColorMode::Total),
            other => Err(format!("unknown mode {other:?} (expected edge or total)")),
        }
    }
}

/// An element that receives a color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    Edge(EdgeId),
    Vertex(VertexId),
}

impl std::fmt::Display for Item {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Item::Edge(e) => write!(f, "edge {} {}", e.lo(), e.hi()),
            Item::Vertex(v) => write!(f, "vertex {v}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn format_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { line, message: message.into() }
}

/// Color lists per edge and, in total mode, per vertex. Lists are kept
/// sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ListAssignment {
    pub mode: ColorMode,
    edges: BTreeMap<EdgeId, Vec<Color>>,
    vertices: BTreeMap<VertexId, Vec<Color>>,
}

fn normalize(mut colors: Vec<Color>) -> Vec<Color> {
    colors.sort_unstable();
    colors.dedup();
    colors
}

impl ListAssignment {
    pub fn new(mode: ColorMode) -> Self {
        ListAssignment { mode, ..Default::default() }
    }

    /// Every element of `g` gets `{0, ..., k-1}`.
    pub fn uniform(g: &EmbeddedGraph, k: Color, mode: ColorMode) -> Self {
        let mut l = ListAssignment::new(mode);
        let full: Vec<Color> = (0..k).collect();
        for e in g.edges() {
            l.edges.insert(e, full.clone());
        }
        if mode == ColorMode::Total {
            for v in 0..g.vertex_count() {
                l.vertices.insert(v, full.clone());
            }
        }
        l
    }

    pub fn set_edge(&mut self, e: EdgeId, colors: Vec<Color>) {
        self.edges.insert(e, normalize(colors));
    }

    pub fn set_vertex(&mut self, v: VertexId, colors: Vec<Color>) {
        self.vertices.insert(v, normalize(colors));
    }

    pub fn edge(&self, e: EdgeId) -> Option<&[Color]> {
        self.edges.get(&e).map(Vec::as_slice)
    }

    pub fn vertex(&self, v: VertexId) -> Option<&[Color]> {
        self.vertices.get(&v).map(Vec::as_slice)
    }

    pub fn get(&self, x: Item) -> Option<&[Color]> {
        match x {
            Item::Edge(e) => self.edge(e),
            Item::Vertex(v) => self.vertex(v),
        }
    }

    pub fn edge_lists(&self) -> impl Iterator<Item = (EdgeId, &[Color])> {
        self.edges.iter().map(|(e, l)| (*e, l.as_slice()))
    }

    pub fn vertex_lists(&self) -> impl Iterator<Item = (VertexId, &[Color])> {
        self.vertices.iter().map(|(v, l)| (*v, l.as_slice()))
    }

    /// The list of each edge of `g`, in the order of [`EmbeddedGraph::edges`].
    pub fn lists_for_edges(&self, g: &EmbeddedGraph) -> Vec<Option<&[Color]>> {
        let mut have = self.edges.iter().peekable();
        g.edges()
            .into_iter()
            .map(|e| {
                while have.next_if(|(f, _)| **f < e).is_some() {}
                have.next_if(|(f, _)| **f == e).map(|(_, l)| l.as_slice())
            })
            .collect()
    }

    /// The list of each vertex `0..n`, indexed by vertex.
    pub fn lists_for_vertices(&self, n: usize) -> Vec<Option<&[Color]>> {
        let mut out = vec![None; n];
        for (&v, l) in self.vertices.range(..n) {
            out[v] = Some(l.as_slice());
        }
        out
    }

    /// Elements of `g` that need a list in `mode` but have none.
    pub fn missing(&self, g: &EmbeddedGraph, mode: ColorMode) -> Vec<Item> {
        let edges = g.edges();
        let mut out: Vec<Item> = self
            .lists_for_edges(g)
            .iter()
            .zip(edges)
            .filter(|(l, _)| l.is_none())
            .map(|(_, e)| Item::Edge(e))
            .collect();
        if mode == ColorMode::Total {
            let lists = self.lists_for_vertices(g.vertex_count());
            out.extend((0..g.vertex_count()).filter(|&v| lists[v].is_none()).map(Item::Vertex));
        }
        out
    }

    /// Smallest edge-list size over the edges of `g`, and smallest
    /// vertex-list size in total mode. `None` where there is nothing to
    /// measure.
    pub fn min_sizes(&self, g: &EmbeddedGraph) -> (Option<usize>, Option<usize>) {
        let e = self.lists_for_edges(g).into_iter().flatten().map(<[Color]>::len).min();
        let v = (self.mode == ColorMode::Total)
            .then(|| self.lists_for_vertices(g.vertex_count()).into_iter().flatten().map(<[Color]>::len).min())
            .flatten();
        (e, v)
    }

    /// Parses `edgelist <u> <v>: <c>...` and `vertexlist <v>: <c>...` lines.
    /// The mode is `total` when any vertex list is present.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut l = ListAssignment::new(ColorMode::Edge);
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, tail) =
                line.split_once(':').ok_or_else(|| format_error(line_no, "expected `<kind> <ids>: <colors>`"))?;
            let colors = tail
                .split_whitespace()
                .map(|w| w.parse::<Color>().map_err(|_| format_error(line_no, format!("bad color {w:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let words: Vec<&str> = head.split_whitespace().collect();
            let ids = parse_ids(&words[1..], line_no)?;
            match (words.first().copied(), ids.as_slice()) {
                (Some("edgelist"), &[u, v]) if u != v => {
                    let e = EdgeId::new(u, v);
                    if l.edges.contains_key(&e) {
                        return Err(format_error(line_no, format!("duplicate list for edge {e}")));
                    }
                    l.set_edge(e, colors);
                }
                (Some("vertexlist"), &[v]) => {
                    if l.vertices.contains_key(&v) {
                        return Err(format_error(line_no, format!("duplicate list for vertex {v}")));
                    }
                    l.mode = ColorMode::Total;
                    l.set_vertex(v, colors);
                }
                _ => return Err(format_error(line_no, format!("unrecognized list line {line:?}"))),
            }
        }
        Ok(l)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, colors) in &self.edges {
            let _ = write!(out, "edgelist {} {}:", e.lo(), e.hi());
            push_colors(&mut out, colors);
        }
        for (v, colors) in &self.vertices {
            let _ = write!(out, "vertexlist {v}:");
            push_colors(&mut out, colors);
        }
        out
    }
}

fn push_colors(out: &mut String, colors: &[Color]) {
    for c in colors {
        let _ = write!(out, " {c}");
    }
    out.push('\n');
}

fn parse_ids(words: &[&str], line: usize) -> Result<Vec<VertexId>, FormatError> {
    words
        .iter()
        .map(|w| w.parse::<VertexId>().map_err(|_| format_error(line, format!("bad vertex id {w:?}"))))
        .collect()
}

/// A (possibly partial) assignment of colors to edges and vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coloring {
    pub mode: ColorMode,
    pub edges: BTreeMap<EdgeId, Color>,
    pub vertices: BTreeMap<VertexId, Color>,
}

impl Coloring {
    pub fn new(mode: ColorMode) -> Self {
        Coloring { mode, ..Default::default() }
    }

    pub fn edge(&self, e: EdgeId) -> Option<Color> {
        self.edges.get(&e).copied()
    }

    pub fn vertex(&self, v: VertexId) -> Option<Color> {
        self.vertices.get(&v).copied()
    }

    pub fn get(&self, x: Item) -> Option<Color> {
        match x {
            Item::Edge(e) => self.edge(e),
            Item::Vertex(v) => self.vertex(v),
        }
    }

    /// Parses `edge <u> <v> = <c>` and `vertex <v> = <c>` lines. The mode is
    /// `total` when any vertex is colored.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut c = Coloring::new(ColorMode::Edge);
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, tail) =
                line.split_once('=').ok_or_else(|| format_error(line_no, "expected `<kind> <ids> = <color>`"))?;
            let color: Color =
                tail.trim().parse().map_err(|_| format_error(line_no, format!("bad color {:?}", tail.trim())))?;
            let words: Vec<&str> = head.split_whitespace().collect();
            let ids = parse_ids(words.get(1..).unwrap_or(&[]), line_no)?;
            match (words.first().copied(), ids.as_slice()) {
                (Some("edge"), &[u, v]) if u != v => {
                    if c.edges.insert(EdgeId::new(u, v), color).is_some() {
                        return Err(format_error(line_no, format!("edge {u} {v} colored twice")));
                    }
                }
                (Some("vertex"), &[v]) => {
                    c.mode = ColorMode::Total;
                    if c.vertices.insert(v, color).is_some() {
                        return Err(format_error(line_no, format!("vertex {v} colored twice")));
                    }
                }
                _ => return Err(format_error(line_no, format!("unrecognized coloring line {line:?}"))),
            }
        }
        Ok(c)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, c) in &self.edges {
            let _ = writeln!(out, "edge {} {} = {c}", e.lo(), e.hi());
        }
        for (v, c) in &self.vertices {
            let _ = writeln!(out, "vertex {v} = {c}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_round_trip() {
        let text = "edgelist 1 0: 3 1 2 1\nvertexlist 2: 5\n";
        let l = ListAssignment::parse(text).unwrap();
        assert_eq!(l.mode, ColorMode::Total);
        assert_eq!(l.edge(EdgeId::new(0, 1)), Some(&[1, 2, 3][..]));
        assert_eq!(l.to_text(), "edgelist 0 1: 1 2 3\nvertexlist 2: 5\n");
        assert_eq!(ListAssignment::parse(&l.to_text()).unwrap(), l);
    }

    #[test]
    fn list_errors_carry_line() {
        let err = ListAssignment::parse("edgelist 0 1: 1\n\nedgelist 0: 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(ListAssignment::parse("edgelist 0 1: x").is_err());
        assert!(ListAssignment::parse("edgelist 0 1: 1\nedgelist 1 0: 2").is_err());
    }

    #[test]
    fn coloring_round_trip() {
        let c = Coloring::parse("vertex 1 = 2\nedge 2 0 = 1\n").unwrap();
        assert_eq!(c.mode, ColorMode::Total);
        assert_eq!(c.to_text(), "edge 0 2 = 1\nvertex 1 = 2\n");
        assert!(Coloring::parse("edge 0 1 = 1\nedge 1 0 = 2\n").is_err());
        assert!(Coloring::parse("edge 0 0 = 1\n").is_err());
    }
}
