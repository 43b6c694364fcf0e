//! Simple graphs embedded on an orientable surface through a rotation system.
//!
//! Every vertex stores the clockwise cyclic order of its neighbors. Faces are
//! not stored; they are traced from the rotation with the rule
//!
//! ```text
//! next(u -> v) = (v -> w), where w follows u in rotation(v)
//! ```
//!
//! and cached until the next edge deletion.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// Undirected edge identified by its sorted endpoint pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId {
    lo: VertexId,
    hi: VertexId,
}

impl EdgeId {
    /// Builds the edge `{u, v}`. Endpoint order does not matter.
    pub fn new(u: VertexId, v: VertexId) -> Self {
        debug_assert_ne!(u, v, "loops are not edges of a simple graph");
        if u < v {
            EdgeId { lo: u, hi: v }
        } else {
            EdgeId { lo: v, hi: u }
        }
    }

    pub fn lo(self) -> VertexId {
        self.lo
    }

    pub fn hi(self) -> VertexId {
        self.hi
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: VertexId) -> VertexId {
        if self.lo == v {
            self.hi
        } else {
            self.lo
        }
    }

    /// True when the two edges share an endpoint (and are distinct).
    pub fn is_adjacent_to(self, other: EdgeId) -> bool {
        self != other && (self.lo == other.lo || self.lo == other.hi || self.hi == other.lo || self.hi == other.hi)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// An edge with a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Dart {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Dart { tail, head }
    }

    pub fn reverse(self) -> Dart {
        Dart { tail: self.head, head: self.tail }
    }

    pub fn edge(self) -> EdgeId {
        EdgeId::new(self.tail, self.head)
    }
}

/// Surface the rotation system is claimed to live on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Surface {
    /// The sphere; checked with Euler's formula at construction.
    #[default]
    Plane,
    /// Any orientable surface; no Euler check.
    Any,
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Plane => f.write_str("plane"),
            Surface::Any => f.write_str("any"),
        }
    }
}

/// A traced face boundary. Cut edges appear twice, once per side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub boundary: Vec<Dart>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.boundary.len()
    }

    /// Vertices in boundary order, one entry per incidence.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.boundary.iter().map(|d| d.tail)
    }
}

/// Two triangles sharing `shared_edge`, with third vertices `apexes`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Kite {
    pub shared_edge: EdgeId,
    pub apexes: (VertexId, VertexId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("asymmetric rotation: {u} lists {v} but {v} does not list {u}")]
    AsymmetricRotation { u: VertexId, v: VertexId },
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("parallel edge {u}-{v}")]
    ParallelEdge { u: VertexId, v: VertexId },
    #[error("plane Euler check failed: V - E + F = {found}, expected {expected}")]
    EulerMismatch { expected: i64, found: i64 },
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
}

/// `V - E + F` together with a connectivity marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerCharacteristic {
    pub value: i64,
    /// False when the graph has several components; `value` then uses
    /// merged face counts (see [`EmbeddedGraph::face_count`]).
    pub connected: bool,
}

/// A simple graph with a rotation system.
#[derive(Debug)]
pub struct EmbeddedGraph {
    rotation: Vec<Vec<VertexId>>,
    surface: Surface,
    edge_count: usize,
    faces: OnceLock<Vec<Face>>,
}

impl Clone for EmbeddedGraph {
    fn clone(&self) -> Self {
        let faces = OnceLock::new();
        if let Some(f) = self.faces.get() {
            let _ = faces.set(f.clone());
        }
        EmbeddedGraph { rotation: self.rotation.clone(), surface: self.surface, edge_count: self.edge_count, faces }
    }
}

impl PartialEq for EmbeddedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.surface == other.surface && self.rotation == other.rotation
    }
}

impl Eq for EmbeddedGraph {}

impl EmbeddedGraph {
    /// Validates a rotation system: symmetric, no loops, no parallel edges,
    /// and Euler's formula per component when `surface` is the plane.
    pub fn from_rotation(rotation: Vec<Vec<VertexId>>, surface: Surface) -> Result<Self, GraphError> {
        let n = rotation.len();
        let mut seen: HashSet<(VertexId, VertexId)> = HashSet::new();
        let mut darts = 0usize;
        for (u, nbrs) in rotation.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(GraphError::Loop(u));
                }
                if !seen.insert((u, v)) {
                    return Err(GraphError::ParallelEdge { u: u.min(v), v: u.max(v) });
                }
                darts += 1;
            }
        }
        for &(u, v) in &seen {
            if !seen.contains(&(v, u)) {
                return Err(GraphError::AsymmetricRotation { u, v });
            }
        }
        let g = EmbeddedGraph { rotation, surface, edge_count: darts / 2, faces: OnceLock::new() };
        if surface == Surface::Plane {
            let expected = 1 + g.component_count() as i64;
            let found = g.euler_characteristic().value;
            if found != expected {
                return Err(GraphError::EulerMismatch { expected, found });
            }
        }
        Ok(g)
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize, surface: Surface) -> Self {
        EmbeddedGraph { rotation: vec![Vec::new(); n], surface, edge_count: 0, faces: OnceLock::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    /// Clockwise cyclic neighbor order of `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn max_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        if u >= self.rotation.len() || v >= self.rotation.len() {
            return false;
        }
        let (a, b) = if self.rotation[u].len() <= self.rotation[v].len() { (u, v) } else { (v, u) };
        self.rotation[a].contains(&b)
    }

    /// All edges in increasing id order.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.rotation.iter().enumerate() {
            let start = out.len();
            out.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| EdgeId::new(u, v)));
            out[start..].sort_unstable();
        }
        out
    }

    /// Faces of the current embedding, traced once and cached.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| trace_faces(self))
    }

    /// Number of faces counted the plane way: boundary walks of different
    /// components that share a face are merged, and an isolated vertex
    /// contributes one degenerate walk.
    pub fn face_count(&self) -> usize {
        let walks = self.faces().len();
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        let comps = self.component_count();
        walks + isolated + 1 - comps.max(1)
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.rotation.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.rotation[u] {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.components().1
    }

    /// `V - E + F` with merged face counts.
    pub fn euler_characteristic(&self) -> EulerCharacteristic {
        let comps = self.component_count();
        let value = self.vertex_count() as i64 - self.edge_count as i64 + self.face_count() as i64;
        EulerCharacteristic { value, connected: comps <= 1 }
    }

    /// `V - E + F` of every component taken on its own surface.
    pub fn component_euler_characteristics(&self) -> Vec<i64> {
        let (label, count) = self.components();
        let mut chi = vec![0i64; count];
        for (v, nbrs) in self.rotation.iter().enumerate() {
            chi[label[v]] += 1;
            if nbrs.is_empty() {
                // Degenerate face of an isolated vertex.
                chi[label[v]] += 1;
            }
        }
        for e in self.edges() {
            chi[label[e.lo()]] -= 1;
        }
        for f in self.faces() {
            chi[label[f.boundary[0].tail]] += 1;
        }
        chi
    }

    /// Removes edge `e`; each endpoint drops the other from its rotation.
    pub fn remove_edge(&mut self, e: EdgeId) -> Result<(), GraphError> {
        let (u, v) = e.endpoints();
        if v >= self.rotation.len() {
            return Err(GraphError::UnknownEdge(e));
        }
        let pu = self.rotation[u].iter().position(|&x| x == v).ok_or(GraphError::UnknownEdge(e))?;
        let pv = self.rotation[v].iter().position(|&x| x == u).ok_or(GraphError::UnknownEdge(e))?;
        self.rotation[u].remove(pu);
        self.rotation[v].remove(pv);
        self.edge_count -= 1;
        self.faces = OnceLock::new();
        Ok(())
    }

    /// Copy of the graph without edge `e`.
    pub fn without_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.remove_edge(e)?;
        Ok(g)
    }

    /// Parses the graph file format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        parse_graph(text)
    }

    /// Serializes to the graph file format.
    pub fn to_text(&self) -> String {
        let mut out = format!("surface {}\nvertices {}\n", self.surface, self.vertex_count());
        for (v, nbrs) in self.rotation.iter().enumerate() {
            out.push_str(&format!("rot {v}:"));
            for u in nbrs {
                out.push_str(&format!(" {u}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Parses the line-oriented graph format:
///
/// ```text
/// surface plane          # optional, `plane` or `any`
/// vertices 4
/// rot 0: 1 3
/// rot 1: 2 0
/// rot 2: 3 1
/// rot 3: 0 2
/// ```
pub fn parse_graph(text: &str) -> Result<EmbeddedGraph, GraphError> {
    let mut surface = None;
    let mut n: Option<usize> = None;
    let mut rotation: Vec<Option<Vec<VertexId>>> = Vec::new();
    let syntax = |line: usize, message: String| GraphError::Syntax { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or("");
        match keyword {
            "surface" => {
                if surface.is_some() || n.is_some() {
                    return Err(syntax(line_no, "surface must appear once, before `vertices`".into()));
                }
                surface = Some(match words.next() {
                    Some("plane") => Surface::Plane,
                    Some("any") => Surface::Any,
                    other => return Err(syntax(line_no, format!("unknown surface {other:?}"))),
                });
                if words.next().is_some() {
                    return Err(syntax(line_no, "trailing tokens after surface".into()));
                }
            }
            "vertices" => {
                if n.is_some() {
                    return Err(syntax(line_no, "duplicate `vertices` line".into()));
                }
                let count = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or_else(|| syntax(line_no, "expected `vertices <n>`".into()))?;
                if words.next().is_some() {
                    return Err(syntax(line_no, "trailing tokens after vertex count".into()));
                }
                n = Some(count);
                rotation = vec![None; count];
            }
            "rot" => {
                let count = n.ok_or_else(|| syntax(line_no, "`rot` before `vertices`".into()))?;
                let rest = line["rot".len()..].trim_start();
                let (head, tail) =
                    rest.split_once(':').ok_or_else(|| syntax(line_no, "expected `rot <v>: <neighbors>`".into()))?;
                let v: usize =
                    head.trim().parse().map_err(|_| syntax(line_no, format!("bad vertex id {:?}", head.trim())))?;
                if v >= count {
                    return Err(syntax(line_no, format!("vertex {v} out of range")));
                }
                if rotation[v].is_some() {
                    return Err(syntax(line_no, format!("duplicate rotation for vertex {v}")));
                }
                let mut nbrs = Vec::new();
                for w in tail.split_whitespace() {
                    let u: usize = w.parse().map_err(|_| syntax(line_no, format!("bad neighbor id {w:?}")))?;
                    if u >= count {
                        return Err(syntax(line_no, format!("neighbor {u} out of range")));
                    }
                    nbrs.push(u);
                }
                rotation[v] = Some(nbrs);
            }
            other => return Err(syntax(line_no, format!("unknown keyword {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| syntax(text.lines().count().max(1), "missing `vertices` line".into()))?;
    let mut rot = Vec::with_capacity(n);
    for (v, r) in rotation.into_iter().enumerate() {
        match r {
            Some(r) => rot.push(r),
            None => return Err(syntax(text.lines().count().max(1), format!("missing rotation for vertex {v}"))),
        }
    }
    EmbeddedGraph::from_rotation(rot, surface.unwrap_or_default())
}

/// Traces every face of `g`. Faces partition the darts; each is started at
/// its smallest unvisited dart in vertex-major rotation order.
pub fn trace_faces(g: &EmbeddedGraph) -> Vec<Face> {
    let n = g.vertex_count();
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    // Per-vertex (neighbor, position) pairs sorted by neighbor.
    let mut index: Vec<(VertexId, usize)> = Vec::with_capacity(offset[n]);
    for v in 0..n {
        let start = index.len();
        index.extend(g.rotation(v).iter().enumerate().map(|(i, &u)| (u, i)));
        index[start..].sort_unstable();
    }
    let pos_of = |v: VertexId, u: VertexId| -> usize {
        let slice = &index[offset[v]..offset[v + 1]];
        let k = slice.binary_search_by_key(&u, |&(x, _)| x).expect("rotation is symmetric");
        slice[k].1
    };

    let mut visited = vec![false; offset[n]];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..g.degree(u) {
            if visited[offset[u] + i] {
                continue;
            }
            let mut boundary = Vec::new();
            let (mut tail, mut at) = (u, i);
            while !visited[offset[tail] + at] {
                visited[offset[tail] + at] = true;
                let head = g.rotation(tail)[at];
                boundary.push(Dart::new(tail, head));
                let deg = g.degree(head);
                let next = (pos_of(head, tail) + 1) % deg;
                tail = head;
                at = next;
            }
            faces.push(Face { id: faces.len(), boundary });
        }
    }
    faces
}

/// `V - E + F` for `g`; `connected` is false when the graph is disconnected.
pub fn euler_characteristic(g: &EmbeddedGraph) -> EulerCharacteristic {
    g.euler_characteristic()
}

/// Every kite of `g`: one entry per edge and unordered pair of common
/// neighbors of its endpoints.
pub fn find_kites(g: &EmbeddedGraph) -> Vec<Kite> {
    let n = g.vertex_count();
    let mut mark = vec![usize::MAX; n];
    let mut kites = Vec::new();
    let mut common = Vec::new();
    for u in 0..n {
        for &w in g.neighbors(u) {
            mark[w] = u;
        }
        for &v in g.neighbors(u) {
            if v < u {
                continue;
            }
            common.clear();
            common.extend(g.neighbors(v).iter().copied().filter(|&w| mark[w] == u));
            common.sort_unstable();
            for (i, &a) in common.iter().enumerate() {
                for &b in &common[i + 1..] {
                    kites.push(Kite { shared_edge: EdgeId::new(u, v), apexes: (a, b) });
                }
            }
        }
    }
    kites.sort_unstable();
    kites
}

/// True when some edge has two common neighbors.
pub fn has_kite(g: &EmbeddedGraph) -> bool {
    let n = g.vertex_count();
    let mut mark = vec![usize::MAX; n];
    for u in 0..n {
        for &w in g.neighbors(u) {
            mark[w] = u;
        }
        for &v in g.neighbors(u) {
            if v > u && g.neighbors(v).iter().filter(|&&w| mark[w] == u).nth(1).is_some() {
                return true;
            }
        }
    }
    false
}
