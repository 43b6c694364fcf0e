use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::embedding::{has_kite, EdgeId, EmbeddedGraph, Surface, VertexId};
use crate::oracle::solve_items;
use crate::structure::{Configuration, ReductionMode, SearchIndex, StructureError};

use super::cycle::color_even_cycle;
use super::lists::{Color, ColorMode, Coloring, Item, ListAssignment};
use super::triple::extend_core;
use super::ColoringError;

/// Edge-mode peeling stops once this many edges remain.
const EDGE_BASE: usize = 7;
/// Search budget for the oracle on base cases and small-degree remainders.
const BASE_NODES: u64 = 5_000_000;

/// Which edge-choosability bound to realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeGuarantee {
    /// Lists of size `delta + 1` (`delta + 2` when `delta = 5`, at least 7
    /// when `delta` is 5 or 6).
    DeltaPlusOne,
    /// Lists of size `delta`, for `delta >= 9`.
    Delta,
}

/// Which total-choosability bound to realize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TotalGuarantee {
    /// Lists of size `delta + 2`, for `delta >= 7`.
    DeltaPlusTwo,
    /// Lists of size `delta + 1`, for `delta >= 9`.
    DeltaPlusOne,
}

impl FromStr for EdgeGuarantee {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "delta_plus_1" | "delta+1" => Ok(EdgeGuarantee::DeltaPlusOne),
            "delta" => Ok(EdgeGuarantee::Delta),
            _ => Err(format!("unknown edge guarantee {s:?} (expected delta_plus_1 or delta)")),
        }
    }
}

impl FromStr for TotalGuarantee {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "delta_plus_2" | "delta+2" => Ok(TotalGuarantee::DeltaPlusTwo),
            "delta_plus_1" | "delta+1" => Ok(TotalGuarantee::DeltaPlusOne),
            _ => Err(format!("unknown total guarantee {s:?} (expected delta_plus_2 or delta_plus_1)")),
        }
    }
}

impl fmt::Display for EdgeGuarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeGuarantee::DeltaPlusOne => "delta_plus_1",
            EdgeGuarantee::Delta => "delta",
        })
    }
}

impl fmt::Display for TotalGuarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TotalGuarantee::DeltaPlusTwo => "delta_plus_2",
            TotalGuarantee::DeltaPlusOne => "delta_plus_1",
        })
    }
}

/// One peeled configuration and the edges it removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub config: Configuration,
    pub removed: Vec<EdgeId>,
}

/// The peeling history: steps in removal order, then the edges left for the
/// base case.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PeelTrace {
    pub steps: Vec<PeelStep>,
    pub base_edges: Vec<EdgeId>,
    /// True when the greedy-safe peel and the oracle were used instead of
    /// the configuration dispatch (small maximum degree).
    pub small_degree_fallback: bool,
}

fn precondition(msg: impl Into<String>) -> ColoringError {
    ColoringError::Precondition(msg.into())
}

fn extension_failure(config: &Configuration, detail: impl Into<String>) -> ColoringError {
    ColoringError::InternalExtensionFailure { config: config.to_string(), detail: detail.into() }
}

fn check_common(g: &EmbeddedGraph, lists: &ListAssignment, mode: ColorMode) -> Result<(), ColoringError> {
    if let Some(x) = lists.missing(g, mode).first() {
        return Err(precondition(format!("{x} has no list")));
    }
    if has_kite(g) {
        return Err(precondition("graph contains a kite"));
    }
    if g.surface() == Surface::Any {
        if let Some(chi) = g.component_euler_characteristics().into_iter().find(|&c| c < 0) {
            return Err(precondition(format!("a component has Euler characteristic {chi} < 0")));
        }
    }
    Ok(())
}

/// Colors every edge of `g` from `lists`.
pub fn choose_edges(
    g: &EmbeddedGraph,
    lists: &ListAssignment,
    guarantee: EdgeGuarantee,
) -> Result<Coloring, ColoringError> {
    choose_edges_traced(g, lists, guarantee).map(|(c, _)| c)
}

/// [`choose_edges`], also returning the peeling history.
pub fn choose_edges_traced(
    g: &EmbeddedGraph,
    lists: &ListAssignment,
    guarantee: EdgeGuarantee,
) -> Result<(Coloring, PeelTrace), ColoringError> {
    check_common(g, lists, ColorMode::Edge)?;
    let delta = g.max_degree();
    let min_list = lists.min_sizes(g).0.unwrap_or(usize::MAX);
    let need = match guarantee {
        EdgeGuarantee::Delta if delta < 9 => {
            return Err(precondition(format!("lists of size delta need delta >= 9, got {delta}")))
        }
        EdgeGuarantee::Delta => delta,
        EdgeGuarantee::DeltaPlusOne if (5..=6).contains(&delta) => 7,
        EdgeGuarantee::DeltaPlusOne => delta + 1,
    };
    if min_list < need {
        return Err(precondition(format!("an edge list has {min_list} colors, fewer than the required {need}")));
    }
    if g.surface() == Surface::Any && (5..=6).contains(&delta) {
        return Err(precondition("maximum degree 5 or 6 is only supported in the plane"));
    }
    if delta < 5 {
        return small_degree(g, lists, ColorMode::Edge);
    }
    let mode = match guarantee {
        EdgeGuarantee::DeltaPlusOne => ReductionMode::EdgeD1,
        EdgeGuarantee::Delta => ReductionMode::EdgeD,
    };
    let (trace, _) = peel(g, mode, delta, EDGE_BASE)?;
    let mut r = Replay::new(g, lists);
    let base: Vec<Item> = trace.base_edges.iter().map(|&e| Item::Edge(e)).collect();
    let colors = solve_items(&base, lists, BASE_NODES)?
        .ok_or_else(|| precondition("the base edges have no coloring from their lists"))?;
    for (&e, c) in trace.base_edges.iter().zip(colors) {
        r.insert_edge(e, c);
    }
    for step in trace.steps.iter().rev() {
        r.replay_edge_step(&step.config)?;
    }
    Ok((r.finish(ColorMode::Edge), trace))
}

/// Colors every vertex and edge of `g` from `lists`.
pub fn choose_total(
    g: &EmbeddedGraph,
    lists: &ListAssignment,
    guarantee: TotalGuarantee,
) -> Result<Coloring, ColoringError> {
    choose_total_traced(g, lists, guarantee).map(|(c, _)| c)
}

/// [`choose_total`], also returning the peeling history.
pub fn choose_total_traced(
    g: &EmbeddedGraph,
    lists: &ListAssignment,
    guarantee: TotalGuarantee,
) -> Result<(Coloring, PeelTrace), ColoringError> {
    check_common(g, lists, ColorMode::Total)?;
    let delta = g.max_degree();
    let need = match guarantee {
        TotalGuarantee::DeltaPlusOne if delta < 9 => {
            return Err(precondition(format!("lists of size delta + 1 need delta >= 9, got {delta}")))
        }
        TotalGuarantee::DeltaPlusOne => delta + 1,
        TotalGuarantee::DeltaPlusTwo => delta + 2,
    };
    let (min_e, min_v) = lists.min_sizes(g);
    for (what, size) in [("edge", min_e), ("vertex", min_v)] {
        if let Some(size) = size.filter(|&s| s < need) {
            return Err(precondition(format!("a {what} list has {size} colors, fewer than the required {need}")));
        }
    }
    if delta < 7 {
        return small_degree(g, lists, ColorMode::Total);
    }
    let mode = match guarantee {
        TotalGuarantee::DeltaPlusTwo => ReductionMode::TotalD2,
        TotalGuarantee::DeltaPlusOne => ReductionMode::TotalD1,
    };
    let (trace, _) = peel(g, mode, delta, 0)?;
    let mut r = Replay::new(g, lists);
    for v in 0..g.vertex_count() {
        r.vertex_color[v] = Some(r.vertex_list(v)?[0]);
    }
    for step in trace.steps.iter().rev() {
        r.replay_total_step(&step.config)?;
    }
    Ok((r.finish(ColorMode::Total), trace))
}

fn peel(
    g: &EmbeddedGraph,
    mode: ReductionMode,
    delta: usize,
    stop_at: usize,
) -> Result<(PeelTrace, EmbeddedGraph), ColoringError> {
    let mut work = g.clone();
    let mut idx = SearchIndex::new(&work);
    let mut steps = Vec::new();
    while work.edge_count() > stop_at {
        let config = idx.dispatch(&work, mode, delta)?;
        let removed = config.edges();
        for &e in &removed {
            idx.remove_edge(&mut work, e).map_err(StructureError::from)?;
        }
        steps.push(PeelStep { config, removed });
    }
    let trace = PeelTrace { steps, base_edges: work.edges(), small_degree_fallback: false };
    Ok((trace, work))
}

/// Peels edges whose greedy extension cannot fail at the given list sizes,
/// solves what is left exactly, and replays.
fn small_degree(
    g: &EmbeddedGraph,
    lists: &ListAssignment,
    mode: ColorMode,
) -> Result<(Coloring, PeelTrace), ColoringError> {
    let (min_e, min_v) = lists.min_sizes(g);
    let k_e = min_e.unwrap_or(usize::MAX);
    let k_v = min_v.unwrap_or(usize::MAX);
    let safe = |sum: usize, low_degree: usize| match mode {
        ColorMode::Edge => sum <= k_e.saturating_add(1),
        ColorMode::Total => sum <= k_e && 2 * low_degree < k_v,
    };
    let mut work = g.clone();
    let mut idx = SearchIndex::new(&work);
    let mut steps = Vec::new();
    loop {
        let pick = idx.light_edges().find(|&(sum, low, _)| safe(sum, work.degree(low)));
        let Some((_, low, high)) = pick else { break };
        let config =
            Configuration::LightEdge { low, high, low_degree: work.degree(low), high_degree: work.degree(high) };
        let e = EdgeId::new(low, high);
        idx.remove_edge(&mut work, e).map_err(StructureError::from)?;
        steps.push(PeelStep { config, removed: vec![e] });
    }
    let base_edges = work.edges();
    let mut items: Vec<Item> = base_edges.iter().map(|&e| Item::Edge(e)).collect();
    if mode == ColorMode::Total {
        items.extend((0..g.vertex_count()).map(Item::Vertex));
    }
    let colors = solve_items(&items, lists, BASE_NODES)?
        .ok_or_else(|| precondition("the remaining subgraph has no coloring from its lists"))?;
    let mut r = Replay::new(g, lists);
    for (&x, c) in items.iter().zip(colors) {
        match x {
            Item::Edge(e) => r.insert_edge(e, c),
            Item::Vertex(v) => r.vertex_color[v] = Some(c),
        }
    }
    for step in steps.iter().rev() {
        match mode {
            ColorMode::Edge => r.replay_edge_step(&step.config)?,
            ColorMode::Total => r.replay_total_step(&step.config)?,
        }
    }
    let trace = PeelTrace { steps, base_edges, small_degree_fallback: true };
    Ok((r.finish(mode), trace))
}

/// The graph as it is rebuilt during replay, with its current colors.
struct Replay<'a> {
    /// Per vertex: lists of the edges to higher neighbors, sorted by neighbor.
    edge_lists: Vec<Vec<(VertexId, &'a [Color])>>,
    vertex_lists: Vec<Option<&'a [Color]>>,
    /// Per vertex: `(neighbor, color of the edge between them)`.
    adj: Vec<Vec<(VertexId, Color)>>,
    vertex_color: Vec<Option<Color>>,
}

fn first_free(list: &[Color], blocked: &[Color]) -> Option<Color> {
    list.iter().copied().find(|c| !blocked.contains(c))
}

impl<'a> Replay<'a> {
    fn new(g: &EmbeddedGraph, lists: &'a ListAssignment) -> Self {
        let n = g.vertex_count();
        let mut edge_lists = vec![Vec::new(); n];
        for (e, l) in g.edges().into_iter().zip(lists.lists_for_edges(g)) {
            if let Some(l) = l {
                edge_lists[e.lo()].push((e.hi(), l));
            }
        }
        Replay {
            edge_lists,
            vertex_lists: lists.lists_for_vertices(n),
            adj: vec![Vec::new(); n],
            vertex_color: vec![None; n],
        }
    }

    fn edge_list(&self, e: EdgeId) -> Result<&'a [Color], ColoringError> {
        let row = &self.edge_lists[e.lo()];
        row.binary_search_by_key(&e.hi(), |&(v, _)| v)
            .map(|k| row[k].1)
            .map_err(|_| precondition(format!("edge {e} has no list")))
    }

    fn vertex_list(&self, v: VertexId) -> Result<&'a [Color], ColoringError> {
        self.vertex_lists[v].ok_or_else(|| precondition(format!("vertex {v} has no list")))
    }

    fn insert_edge(&mut self, e: EdgeId, c: Color) {
        let (u, v) = e.endpoints();
        self.adj[u].push((v, c));
        self.adj[v].push((u, c));
    }

    /// Colors on edges already present at either endpoint of `e`, plus the
    /// endpoint colors when `with_vertices` is set.
    fn edge_blocked(&self, e: EdgeId, with_vertices: bool) -> Vec<Color> {
        let (u, v) = e.endpoints();
        let mut out = Vec::with_capacity(self.adj[u].len() + self.adj[v].len() + 2);
        for w in [u, v] {
            out.extend(self.adj[w].iter().map(|&(_, c)| c));
            if with_vertices {
                out.extend(self.vertex_color[w]);
            }
        }
        out
    }

    fn vertex_blocked(&self, v: VertexId) -> Vec<Color> {
        let mut out = Vec::with_capacity(2 * self.adj[v].len());
        for &(x, c) in &self.adj[v] {
            out.extend(self.vertex_color[x]);
            out.push(c);
        }
        out
    }

    /// Colors each edge of the cycle from what its neighbors leave free.
    fn color_cycle(&mut self, config: &Configuration, with_vertices: bool) -> Result<(), ColoringError> {
        let edges = config.edges();
        let mut avail = BTreeMap::new();
        for &e in &edges {
            let blocked = self.edge_blocked(e, with_vertices);
            let free: Vec<Color> = self.edge_list(e)?.iter().copied().filter(|c| !blocked.contains(c)).collect();
            debug_assert!(free.len() >= 2, "cycle edge {e} has {} free colors", free.len());
            avail.insert(e, free);
        }
        let colors = color_even_cycle(&edges, &avail).map_err(|err| extension_failure(config, err.to_string()))?;
        for (e, c) in colors {
            self.insert_edge(e, c);
        }
        Ok(())
    }

    fn replay_edge_step(&mut self, config: &Configuration) -> Result<(), ColoringError> {
        match config {
            Configuration::LightEdge { low, high, low_degree, high_degree } => {
                let e = EdgeId::new(*low, *high);
                let blocked = self.edge_blocked(e, false);
                let list = self.edge_list(e)?;
                debug_assert!(blocked.len() + 2 <= low_degree + high_degree);
                debug_assert!(
                    blocked.len() < list.len(),
                    "edge {e}: {} constraints, list {}",
                    blocked.len(),
                    list.len()
                );
                let c = first_free(list, &blocked).ok_or_else(|| extension_failure(config, "no free color"))?;
                self.insert_edge(e, c);
            }
            Configuration::LightFourFace { .. } | Configuration::TwoAltCycle { .. } => {
                self.color_cycle(config, false)?;
            }
            Configuration::TripleTriangleCenter(t) => {
                let (colored, _) =
                    extend_core(t, |e| self.edge_list(e).ok().map(<[Color]>::to_vec), |e| self.edge_blocked(e, false))?;
                for (e, c) in colored {
                    self.insert_edge(e, c);
                }
            }
        }
        Ok(())
    }

    fn recolor_vertex(&mut self, v: VertexId, config: &Configuration) -> Result<(), ColoringError> {
        let blocked = self.vertex_blocked(v);
        let list = self.vertex_list(v)?;
        debug_assert!(blocked.len() < list.len(), "vertex {v}: {} constraints, list {}", blocked.len(), list.len());
        let c = first_free(list, &blocked)
            .ok_or_else(|| extension_failure(config, format!("no free color for vertex {v}")))?;
        self.vertex_color[v] = Some(c);
        Ok(())
    }

    fn replay_total_step(&mut self, config: &Configuration) -> Result<(), ColoringError> {
        match config {
            Configuration::LightEdge { low, high, low_degree, high_degree } => {
                let e = EdgeId::new(*low, *high);
                self.vertex_color[*low] = None;
                let blocked = self.edge_blocked(e, true);
                let list = self.edge_list(e)?;
                debug_assert!(blocked.len() < *low_degree + *high_degree);
                debug_assert!(
                    blocked.len() < list.len(),
                    "edge {e}: {} constraints, list {}",
                    blocked.len(),
                    list.len()
                );
                let c = first_free(list, &blocked).ok_or_else(|| extension_failure(config, "no free color"))?;
                self.insert_edge(e, c);
                self.recolor_vertex(*low, config)?;
            }
            Configuration::TwoAltCycle { cycle } => {
                let twos: Vec<VertexId> = cycle.iter().skip(1).step_by(2).copied().collect();
                for &w in &twos {
                    self.vertex_color[w] = None;
                }
                self.color_cycle(config, true)?;
                for &w in &twos {
                    self.recolor_vertex(w, config)?;
                }
            }
            other => return Err(extension_failure(other, "configuration has no total-coloring extension")),
        }
        Ok(())
    }

    fn finish(self, mode: ColorMode) -> Coloring {
        let mut c = Coloring::new(mode);
        // Sorted input keeps the map construction linear.
        let mut edges = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            let start = edges.len();
            edges.extend(nbrs.iter().filter(|&&(x, _)| u < x).map(|&(x, col)| (EdgeId::new(u, x), col)));
            edges[start..].sort_unstable();
        }
        c.edges = edges.into_iter().collect();
        if mode == ColorMode::Total {
            c.vertices = self.vertex_color.iter().enumerate().filter_map(|(v, c)| c.map(|c| (v, c))).collect();
        }
        c
    }
}
