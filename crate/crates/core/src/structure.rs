//! Reducible configurations of kite-free embedded graphs and the finders
//! that locate them.
//!
//! The finders come in two flavors: stateless functions that scan the whole
//! graph, and [`SearchIndex`], which keeps light-edge candidates ordered by
//! degree sum so that a peeling loop can ask for the next configuration after
//! every deletion without rescanning. Both return identical configurations
//! for identical graphs.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::discharging::{audit, AuditReport, RuleSet};
use crate::embedding::{has_kite, EdgeId, EmbeddedGraph, GraphError, VertexId};

/// Largest low-endpoint degree tracked by [`SearchIndex`]. Every dispatch
/// row asks for a light edge whose low endpoint has degree at most 4.
const LOW_DEGREE_CAP: usize = 4;

/// The three triangles around a 6-vertex, labelled with the roles used by
/// the extension procedure.
///
/// Triangles are `center-f-a`, `center-b-c` and `center-d-e`; `a` and `c`
/// are 3-vertices, `e` is the lowest-degree vertex of the third triangle and
/// `pendant` is the neighbor of `a` outside the triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripleTriangle {
    pub center: VertexId,
    pub f: VertexId,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
    pub e: VertexId,
    pub pendant: VertexId,
}

impl TripleTriangle {
    /// The ten edges in label order `a` through `j`:
    /// `XB, BC, XC, XD, DE, XE, XF, FA, XA`, and the pendant edge at `A`.
    pub fn labelled_edges(&self) -> [EdgeId; 10] {
        let x = self.center;
        [
            EdgeId::new(x, self.b),
            EdgeId::new(self.b, self.c),
            EdgeId::new(x, self.c),
            EdgeId::new(x, self.d),
            EdgeId::new(self.d, self.e),
            EdgeId::new(x, self.e),
            EdgeId::new(x, self.f),
            EdgeId::new(self.f, self.a),
            EdgeId::new(x, self.a),
            EdgeId::new(self.a, self.pendant),
        ]
    }
}

/// A reducible configuration found in the current graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Configuration {
    /// Edge `low-high` with the degrees seen when it was found;
    /// `low_degree <= high_degree`.
    LightEdge { low: VertexId, high: VertexId, low_degree: usize, high_degree: usize },
    /// Facial 4-cycle `u v w x` with `d(u) = d(w) = 3`.
    LightFourFace { u: VertexId, v: VertexId, w: VertexId, x: VertexId },
    /// A 6-vertex incident to three triangular faces of the required types.
    TripleTriangleCenter(TripleTriangle),
    /// Even cycle `v1 w1 v2 w2 ...` in which every `w_i` has degree 2.
    TwoAltCycle { cycle: Vec<VertexId> },
}

impl Configuration {
    /// Edges removed from the graph when this configuration is peeled.
    pub fn edges(&self) -> Vec<EdgeId> {
        match self {
            Configuration::LightEdge { low, high, .. } => vec![EdgeId::new(*low, *high)],
            Configuration::LightFourFace { u, v, w, x } => {
                vec![EdgeId::new(*u, *v), EdgeId::new(*v, *w), EdgeId::new(*w, *x), EdgeId::new(*x, *u)]
            }
            Configuration::TripleTriangleCenter(t) => t.labelled_edges().to_vec(),
            Configuration::TwoAltCycle { cycle } => cycle_edges(cycle),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Configuration::LightEdge { .. } => "lightedge",
            Configuration::LightFourFace { .. } => "fourface",
            Configuration::TripleTriangleCenter(_) => "tritri",
            Configuration::TwoAltCycle { .. } => "altcycle",
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Configuration::LightEdge { low, high, .. } => write!(f, "lightedge {low} {high}"),
            Configuration::LightFourFace { u, v, w, x } => write!(f, "fourface {u} {v} {w} {x}"),
            Configuration::TripleTriangleCenter(t) => write!(
                f,
                "tritri center={} t1={}-{} t2={}-{} t3={}-{} pendant={}-{}",
                t.center, t.f, t.a, t.b, t.c, t.d, t.e, t.a, t.pendant
            ),
            Configuration::TwoAltCycle { cycle } => {
                f.write_str("altcycle")?;
                for v in cycle {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

pub(crate) fn cycle_edges(cycle: &[VertexId]) -> Vec<EdgeId> {
    (0..cycle.len()).map(|i| EdgeId::new(cycle[i], cycle[(i + 1) % cycle.len()])).collect()
}

/// Which induction a peeling step serves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionMode {
    /// Edge lists of size `max(7, delta + 1)`; needs `delta >= 5`.
    EdgeD1,
    /// Edge lists of size `delta`; needs `delta >= 9`.
    EdgeD,
    /// Total lists of size `delta + 2`; needs `delta >= 7`.
    TotalD2,
    /// Total lists of size `delta + 1`; needs `delta >= 9`.
    TotalD1,
}

impl ReductionMode {
    pub fn min_delta(self) -> usize {
        match self {
            ReductionMode::EdgeD1 => 5,
            ReductionMode::EdgeD | ReductionMode::TotalD1 => 9,
            ReductionMode::TotalD2 => 7,
        }
    }
}

impl fmt::Display for ReductionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionMode::EdgeD1 => "edge_d1",
            ReductionMode::EdgeD => "edge_d",
            ReductionMode::TotalD2 => "total_d2",
            ReductionMode::TotalD1 => "total_d1",
        })
    }
}

impl std::str::FromStr for ReductionMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge_d1" => Ok(ReductionMode::EdgeD1),
            "edge_d" => Ok(ReductionMode::EdgeD),
            "total_d2" => Ok(ReductionMode::TotalD2),
            "total_d1" => Ok(ReductionMode::TotalD1),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no reducible configuration found ({context}); {}", .audit.summary())]
    ConfigurationNotFound { context: String, audit: Box<AuditReport> },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn not_found(g: &EmbeddedGraph, ruleset: RuleSet, context: String) -> StructureError {
    StructureError::ConfigurationNotFound { context, audit: Box::new(audit(g, ruleset)) }
}

fn light_key(u: VertexId, du: usize, v: VertexId, dv: usize) -> (usize, VertexId, VertexId) {
    if du < dv || (du == dv && u < v) {
        (du + dv, u, v)
    } else {
        (du + dv, v, u)
    }
}

fn light_edge_config(g: &EmbeddedGraph, key: (usize, VertexId, VertexId)) -> Configuration {
    let (_, low, high) = key;
    Configuration::LightEdge { low, high, low_degree: g.degree(low), high_degree: g.degree(high) }
}

/// Smallest `(d(u) + d(v), u, v)` edge with `d(u) <= max_low_degree` and
/// `d(u) + d(v) <= sum_bound`, `u` being the endpoint of lower degree (the
/// smaller id on ties).
pub fn find_light_edge(g: &EmbeddedGraph, sum_bound: usize, max_low_degree: usize) -> Option<Configuration> {
    let mut best: Option<(usize, VertexId, VertexId)> = None;
    for e in g.edges() {
        let (u, v) = e.endpoints();
        let key = light_key(u, g.degree(u), v, g.degree(v));
        if key.0 <= sum_bound && g.degree(key.1) <= max_low_degree && best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    best.map(|k| light_edge_config(g, k))
}

/// A facial 4-cycle whose two opposite vertices have degree 3.
pub fn find_light_four_face(g: &EmbeddedGraph) -> Option<Configuration> {
    for face in g.faces() {
        if face.degree() != 4 {
            continue;
        }
        let p: Vec<VertexId> = face.vertices().collect();
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
        if !distinct {
            continue;
        }
        for start in 0..2 {
            let (u, w) = (p[start], p[start + 2]);
            if g.degree(u) == 3 && g.degree(w) == 3 {
                return Some(Configuration::LightFourFace { u, v: p[start + 1], w, x: p[(start + 3) % 4] });
            }
        }
    }
    None
}

/// A 6-vertex incident to three triangular faces, two of type (6,6,3) and
/// the third of type (6,6,3), (6,5,4) or (6,6,4). Centers are tried in
/// increasing id order.
pub fn find_triple_triangle_center(g: &EmbeddedGraph) -> Option<TripleTriangle> {
    let mut triangles_at: HashMap<VertexId, Vec<[VertexId; 2]>> = HashMap::new();
    for face in g.faces() {
        if face.degree() != 3 {
            continue;
        }
        let p: Vec<VertexId> = face.vertices().collect();
        for i in 0..3 {
            if g.degree(p[i]) == 6 {
                triangles_at.entry(p[i]).or_default().push([p[(i + 1) % 3], p[(i + 2) % 3]]);
            }
        }
    }
    let mut centers: Vec<VertexId> = triangles_at.keys().copied().collect();
    centers.sort_unstable();
    centers.into_iter().find_map(|x| match_triple_triangle(g, x, &triangles_at[&x]))
}

fn match_triple_triangle(g: &EmbeddedGraph, x: VertexId, tris: &[[VertexId; 2]]) -> Option<TripleTriangle> {
    if tris.len() != 3 {
        return None;
    }
    let mut seen = vec![x];
    for t in tris {
        for &v in t {
            if seen.contains(&v) {
                return None;
            }
            seen.push(v);
        }
    }
    // (high, low) per triangle, ordered by degree.
    let ordered: Vec<(VertexId, VertexId)> =
        tris.iter().map(|&[p, q]| if g.degree(p) >= g.degree(q) { (p, q) } else { (q, p) }).collect();
    let degs = |t: (VertexId, VertexId)| (g.degree(t.0), g.degree(t.1));
    let is_663 = |t: (VertexId, VertexId)| degs(t) == (6, 3);
    let sharp: Vec<usize> = (0..3).filter(|&i| is_663(ordered[i])).collect();
    if sharp.len() < 2 {
        return None;
    }
    let third = (0..3).find(|&i| !is_663(ordered[i])).unwrap_or(sharp[2.min(sharp.len() - 1)]);
    if !matches!(degs(ordered[third]), (6, 3) | (5, 4) | (6, 4)) {
        return None;
    }
    let rest: Vec<usize> = (0..3).filter(|&i| i != third).collect();
    let (f, a) = ordered[rest[0]];
    let (b, c) = ordered[rest[1]];
    let (d, e) = ordered[third];
    let pendant = g.neighbors(a).iter().copied().find(|&p| p != x && p != f)?;
    if seen.contains(&pendant) {
        return None;
    }
    Some(TripleTriangle { center: x, f, a, b, c, d, e, pendant })
}

/// The first reducible configuration for a graph of maximum degree 6:
/// a light edge of degree sum at most 8, then a light 4-face, then a
/// triple-triangle center.
pub fn find_delta6_config(g: &EmbeddedGraph) -> Result<Configuration, StructureError> {
    if g.max_degree() != 6 {
        return Err(StructureError::Precondition(format!("maximum degree is {}, not 6", g.max_degree())));
    }
    let idx = SearchIndex::new(g);
    delta6_config(g, &idx)
}

fn delta6_config(g: &EmbeddedGraph, idx: &SearchIndex) -> Result<Configuration, StructureError> {
    if let Some(c) = idx.light_edge(g, 8) {
        return Ok(c);
    }
    if let Some(c) = find_light_four_face(g) {
        return Ok(c);
    }
    if let Some(t) = find_triple_triangle_center(g) {
        return Ok(Configuration::TripleTriangleCenter(t));
    }
    Err(not_found(g, RuleSet::L5, "maximum degree 6".into()))
}

/// A 2-alternating cycle found through the auxiliary multigraph whose edges
/// are the 2-vertices (each joining its two neighbors).
///
/// Only 2-vertices whose neighbors both have degree at least 3 contribute an
/// auxiliary edge, so the cycle's `v_i` are never themselves 2-vertices.
pub fn find_two_alternating_cycle(g: &EmbeddedGraph) -> Option<Configuration> {
    let twos = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2);
    alternating_cycle(g, twos)
}

/// Auxiliary edges `(a, b, w)` in the order they are offered to the cycle
/// search.
pub fn auxiliary_edges(g: &EmbeddedGraph) -> Vec<(VertexId, VertexId, VertexId)> {
    (0..g.vertex_count()).filter(|&w| g.degree(w) == 2).filter_map(|w| auxiliary_edge(g, w)).collect()
}

fn auxiliary_edge(g: &EmbeddedGraph, w: VertexId) -> Option<(VertexId, VertexId, VertexId)> {
    let n = g.neighbors(w);
    (n.len() == 2 && g.degree(n[0]) >= 3 && g.degree(n[1]) >= 3).then(|| (n[0], n[1], w))
}

fn alternating_cycle(g: &EmbeddedGraph, twos: impl Iterator<Item = VertexId>) -> Option<Configuration> {
    let mut parent: HashMap<VertexId, VertexId> = HashMap::new();
    fn root(parent: &mut HashMap<VertexId, VertexId>, v: VertexId) -> VertexId {
        let mut r = v;
        while let Some(&p) = parent.get(&r) {
            if p == r {
                break;
            }
            r = p;
        }
        let mut cur = v;
        while cur != r {
            let next = parent[&cur];
            parent.insert(cur, r);
            cur = next;
        }
        r
    }
    let mut forest: HashMap<VertexId, Vec<(VertexId, VertexId)>> = HashMap::new();
    for w in twos {
        let Some((a, b, w)) = auxiliary_edge(g, w) else { continue };
        parent.entry(a).or_insert(a);
        parent.entry(b).or_insert(b);
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra != rb {
            parent.insert(ra, rb);
            forest.entry(a).or_default().push((b, w));
            forest.entry(b).or_default().push((a, w));
            continue;
        }
        // Close the cycle: a -w- b, then the forest path back from b to a.
        let path = forest_path(&forest, b, a);
        let mut cycle = vec![a, w];
        for (v, via) in path {
            // The last entry is `a` itself, already at the front.
            if let Some(via) = via {
                cycle.push(v);
                cycle.push(via);
            }
        }
        return Some(Configuration::TwoAltCycle { cycle });
    }
    None
}

/// Path from `from` to `to` in the auxiliary forest as `(vertex, edge to the
/// next vertex)` pairs; the last entry has no outgoing edge.
fn forest_path(
    forest: &HashMap<VertexId, Vec<(VertexId, VertexId)>>,
    from: VertexId,
    to: VertexId,
) -> Vec<(VertexId, Option<VertexId>)> {
    let mut prev: HashMap<VertexId, (VertexId, VertexId)> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    prev.insert(from, (from, from));
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(u, w) in forest.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            if let std::collections::hash_map::Entry::Vacant(slot) = prev.entry(u) {
                slot.insert((v, w));
                queue.push_back(u);
            }
        }
    }
    // Walk back from `to`, then reverse into from -> to order.
    let mut rev = vec![(to, None)];
    let mut cur = to;
    while cur != from {
        let (p, w) = prev[&cur];
        rev.push((p, Some(w)));
        cur = p;
    }
    rev.reverse();
    rev
}

/// Degree bookkeeping and ordered light-edge candidates for a graph that
/// only loses edges.
///
/// Each candidate edge is filed under its high endpoint, and only the best
/// candidate of every vertex sits in the global order. A high-degree vertex
/// losing an edge then moves one entry, not one per low neighbor.
#[derive(Clone, Debug)]
pub struct SearchIndex {
    deg: Vec<usize>,
    hist: Vec<usize>,
    max_deg: usize,
    /// Per high endpoint: `(d(low), low)` of its candidate edges, sorted.
    low_neighbors: Vec<Vec<(usize, VertexId)>>,
    /// Global order key currently filed for each vertex's best candidate.
    best_key: Vec<Option<(usize, VertexId, VertexId)>>,
    best: BTreeSet<(usize, VertexId, VertexId)>,
    twos: BTreeSet<VertexId>,
}

impl SearchIndex {
    pub fn new(g: &EmbeddedGraph) -> Self {
        let n = g.vertex_count();
        let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let max_deg = deg.iter().copied().max().unwrap_or(0);
        let mut hist = vec![0usize; max_deg + 1];
        for &d in &deg {
            hist[d] += 1;
        }
        let twos = (0..n).filter(|&v| deg[v] == 2).collect();
        let mut idx = SearchIndex {
            deg,
            hist,
            max_deg,
            low_neighbors: vec![Vec::new(); n],
            best_key: vec![None; n],
            best: BTreeSet::new(),
            twos,
        };
        for u in 0..n {
            for &v in g.neighbors(u) {
                if let Some((_, low, high)) = idx.key(u, v).filter(|k| k.2 == u) {
                    idx.low_neighbors[high].push((idx.deg[low], low));
                }
            }
        }
        for v in 0..n {
            idx.low_neighbors[v].sort_unstable();
            idx.refresh(v);
        }
        idx
    }

    pub fn max_degree(&self) -> usize {
        self.max_deg
    }

    fn key(&self, u: VertexId, v: VertexId) -> Option<(usize, VertexId, VertexId)> {
        (self.deg[u].min(self.deg[v]) <= LOW_DEGREE_CAP).then(|| light_key(u, self.deg[u], v, self.deg[v]))
    }

    fn refresh(&mut self, h: VertexId) {
        let new = self.low_neighbors[h].first().map(|&(dl, l)| (self.deg[h] + dl, l, h));
        if new == self.best_key[h] {
            return;
        }
        if let Some(k) = self.best_key[h] {
            self.best.remove(&k);
        }
        if let Some(k) = new {
            self.best.insert(k);
        }
        self.best_key[h] = new;
    }

    /// Adds or drops the candidate entry of edge `uv`; returns the vertex
    /// whose best key may need a refresh.
    fn file(&mut self, u: VertexId, v: VertexId, insert: bool) -> Option<VertexId> {
        let (_, low, high) = self.key(u, v)?;
        let entry = (self.deg[low], low);
        let row = &mut self.low_neighbors[high];
        match (row.binary_search(&entry), insert) {
            (Err(p), true) => row.insert(p, entry),
            (Ok(p), false) => {
                row.remove(p);
            }
            _ => {}
        }
        Some(high)
    }

    /// Removes `e` from `g` and updates every candidate whose degree sum
    /// changed.
    pub fn remove_edge(&mut self, g: &mut EmbeddedGraph, e: EdgeId) -> Result<(), GraphError> {
        let (u, v) = e.endpoints();
        if v >= g.vertex_count() || !g.has_edge(u, v) {
            return Err(GraphError::UnknownEdge(e));
        }
        // Edges at an endpoint of degree <= 5 may change orientation or
        // their low-side entry; refile them. At a higher-degree endpoint
        // only that vertex's own best key moves.
        let mut refile: Vec<(VertexId, VertexId)> = Vec::new();
        for (w, other) in [(u, v), (v, u)] {
            if self.deg[w] <= LOW_DEGREE_CAP + 1 {
                refile.extend(g.neighbors(w).iter().filter(|&&x| x != other).map(|&x| (w, x)));
            }
        }
        let mut dirty: Vec<VertexId> = vec![u, v];
        for &(a, b) in &refile {
            dirty.extend(self.file(a, b, false));
        }
        dirty.extend(self.file(u, v, false));
        g.remove_edge(e)?;
        for w in [u, v] {
            let old = self.deg[w];
            self.deg[w] = old - 1;
            self.hist[old] -= 1;
            self.hist[old - 1] += 1;
            if old == 2 {
                self.twos.remove(&w);
            }
            if old == 3 {
                self.twos.insert(w);
            }
        }
        for &(a, b) in &refile {
            dirty.extend(self.file(a, b, true));
        }
        dirty.sort_unstable();
        dirty.dedup();
        for h in dirty {
            self.refresh(h);
        }
        while self.max_deg > 0 && self.hist[self.max_deg] == 0 {
            self.max_deg -= 1;
        }
        Ok(())
    }

    /// Best light edge with degree sum at most `sum_bound` (low endpoint
    /// degree at most 4).
    pub fn light_edge(&self, g: &EmbeddedGraph, sum_bound: usize) -> Option<Configuration> {
        self.best.first().filter(|k| k.0 <= sum_bound).map(|&k| light_edge_config(g, k))
    }

    /// The best light edge at each high endpoint, in key order. Within one
    /// high endpoint the best edge also has the lowest low-endpoint degree.
    pub(crate) fn light_edges(&self) -> impl Iterator<Item = (usize, VertexId, VertexId)> + '_ {
        self.best.iter().copied()
    }

    pub fn alternating_cycle(&self, g: &EmbeddedGraph) -> Option<Configuration> {
        alternating_cycle(g, self.twos.iter().copied())
    }

    /// Configuration chosen by the dispatch table for `mode`, where
    /// `delta_g` is the maximum degree of the original input graph.
    pub fn dispatch(
        &self,
        g: &EmbeddedGraph,
        mode: ReductionMode,
        delta_g: usize,
    ) -> Result<Configuration, StructureError> {
        let d = self.max_deg;
        match mode {
            ReductionMode::EdgeD1 => self.edge_d1(g, d, delta_g),
            ReductionMode::EdgeD if d >= 9 => self.light_or_cycle(g, d),
            ReductionMode::EdgeD => self.edge_d1(g, d, delta_g),
            ReductionMode::TotalD1 if d >= 9 => self.light_or_cycle(g, d),
            ReductionMode::TotalD1 | ReductionMode::TotalD2 => {
                let bound = if d >= 7 { d + 2 } else { 9 };
                self.require_light(g, bound, if d >= 7 { RuleSet::T4 } else { RuleSet::L6D5 }, mode, d)
            }
        }
    }

    fn edge_d1(&self, g: &EmbeddedGraph, d: usize, delta_g: usize) -> Result<Configuration, StructureError> {
        let mode = ReductionMode::EdgeD1;
        if d <= 5 {
            // Sum 9 still leaves a free color once lists have 8 or more
            // entries, and is what surfaces of Euler characteristic 0 allow.
            let bound = if delta_g >= 7 { 9 } else { 8 };
            self.require_light(g, bound, RuleSet::L6D5, mode, d)
        } else if d == 6 && delta_g == 6 {
            delta6_config(g, self)
        } else if d == 6 {
            self.require_light(g, 9, RuleSet::L5, mode, d)
        } else {
            self.require_light(g, d + 2, RuleSet::T4, mode, d)
        }
    }

    fn light_or_cycle(&self, g: &EmbeddedGraph, d: usize) -> Result<Configuration, StructureError> {
        if let Some(c) = self.light_edge(g, d + 1) {
            return Ok(c);
        }
        self.alternating_cycle(g).ok_or_else(|| {
            not_found(g, RuleSet::T7, format!("no light edge of sum <= {} and no 2-alternating cycle", d + 1))
        })
    }

    fn require_light(
        &self,
        g: &EmbeddedGraph,
        bound: usize,
        ruleset: RuleSet,
        mode: ReductionMode,
        d: usize,
    ) -> Result<Configuration, StructureError> {
        self.light_edge(g, bound).ok_or_else(|| {
            not_found(g, ruleset, format!("mode {mode}, maximum degree {d}: no light edge of sum <= {bound}"))
        })
    }
}

/// Stateless dispatch: checks the preconditions, then returns the
/// configuration the peeling loop would pick for `g`.
pub fn find_reducible(g: &EmbeddedGraph, mode: ReductionMode, delta_g: usize) -> Result<Configuration, StructureError> {
    if delta_g < mode.min_delta() {
        return Err(StructureError::Precondition(format!(
            "mode {mode} needs an original maximum degree of at least {}, got {delta_g}",
            mode.min_delta()
        )));
    }
    if g.max_degree() > delta_g {
        return Err(StructureError::Precondition(format!(
            "maximum degree {} exceeds the original maximum degree {delta_g}",
            g.max_degree()
        )));
    }
    if g.edge_count() == 0 {
        return Err(StructureError::Precondition("graph has no edges".into()));
    }
    if has_kite(g) {
        return Err(StructureError::Precondition("graph contains a kite".into()));
    }
    SearchIndex::new(g).dispatch(g, mode, delta_g)
}
