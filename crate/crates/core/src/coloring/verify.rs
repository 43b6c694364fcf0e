use std::collections::BTreeMap;
use std::fmt;

use crate::embedding::{EdgeId, EmbeddedGraph, VertexId};

use super::lists::{Color, ColorMode, Coloring, Item, ListAssignment};

/// A reason a coloring is not a proper list coloring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    Uncolored(Item),
    NoList(Item),
    NotInList {
        item: Item,
        color: Color,
    },
    UnknownItem(Item),
    /// Two edges sharing `at` have the same color.
    AdjacentEdges {
        first: EdgeId,
        second: EdgeId,
        at: VertexId,
        color: Color,
    },
    AdjacentVertices {
        u: VertexId,
        v: VertexId,
        color: Color,
    },
    /// A vertex and one of its edges have the same color.
    Incident {
        vertex: VertexId,
        edge: EdgeId,
        color: Color,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncolored(x) => write!(f, "{x} is uncolored"),
            Violation::NoList(x) => write!(f, "{x} has no list"),
            Violation::NotInList { item, color } => write!(f, "{item} has color {color} outside its list"),
            Violation::UnknownItem(x) => write!(f, "{x} is not in the graph"),
            Violation::AdjacentEdges { first, second, at, color } => {
                write!(f, "edges {first} and {second} share vertex {at} and color {color}")
            }
            Violation::AdjacentVertices { u, v, color } => {
                write!(f, "adjacent vertices {u} and {v} share color {color}")
            }
            Violation::Incident { vertex, edge, color } => {
                write!(f, "vertex {vertex} and incident edge {edge} share color {color}")
            }
        }
    }
}

/// All violations of properness and list membership, sorted. An empty
/// result means `c` is a proper list coloring of `g` in `c.mode`.
pub fn verify_coloring(g: &EmbeddedGraph, lists: &ListAssignment, c: &Coloring) -> Vec<Violation> {
    let total = c.mode == ColorMode::Total;
    let mut out = Vec::new();
    let edges = g.edges();

    let mut items: Vec<Item> = edges.iter().map(|&e| Item::Edge(e)).collect();
    if total {
        items.extend((0..g.vertex_count()).map(Item::Vertex));
    }
    for &x in &items {
        match c.get(x) {
            None => out.push(Violation::Uncolored(x)),
            Some(color) => match lists.get(x) {
                None => out.push(Violation::NoList(x)),
                Some(l) if l.binary_search(&color).is_err() => out.push(Violation::NotInList { item: x, color }),
                Some(_) => {}
            },
        }
    }
    for &e in c.edges.keys() {
        let (u, v) = e.endpoints();
        if v >= g.vertex_count() || !g.has_edge(u, v) {
            out.push(Violation::UnknownItem(Item::Edge(e)));
        }
    }
    for &v in c.vertices.keys() {
        if !total || v >= g.vertex_count() {
            out.push(Violation::UnknownItem(Item::Vertex(v)));
        }
    }

    for v in 0..g.vertex_count() {
        let mut by_color: BTreeMap<Color, Vec<EdgeId>> = BTreeMap::new();
        for &u in g.neighbors(v) {
            let e = EdgeId::new(u, v);
            if let Some(color) = c.edge(e) {
                by_color.entry(color).or_default().push(e);
            }
        }
        for (color, mut es) in by_color {
            es.sort_unstable();
            for i in 0..es.len() {
                for j in i + 1..es.len() {
                    out.push(Violation::AdjacentEdges { first: es[i], second: es[j], at: v, color });
                }
            }
        }
    }
    if total {
        for &e in &edges {
            let (u, v) = e.endpoints();
            let (cu, cv, ce) = (c.vertex(u), c.vertex(v), c.edge(e));
            if let (Some(a), Some(b)) = (cu, cv) {
                if a == b {
                    out.push(Violation::AdjacentVertices { u, v, color: a });
                }
            }
            for (w, cw) in [(u, cu), (v, cv)] {
                if let (Some(a), Some(b)) = (cw, ce) {
                    if a == b {
                        out.push(Violation::Incident { vertex: w, edge: e, color: a });
                    }
                }
            }
        }
    }
    out.sort();
    out
}
