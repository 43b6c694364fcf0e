//! Exact list coloring by backtracking.
//!
//! Elements are split into connected components of the conflict graph and
//! each component is searched separately. Within a component the next
//! element is the one with the fewest colors left (smallest element on
//! ties), and every assignment immediately removes its color from the
//! conflicting elements, backtracking as soon as one of them runs dry.

use std::collections::HashMap;

use thiserror::Error;

use crate::coloring::{Color, ColorMode, Coloring, Item, ListAssignment};
use crate::embedding::EmbeddedGraph;

/// Limits on a single oracle call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest number of elements (edges, plus vertices in total mode).
    pub max_elements: usize,
    /// Largest number of color assignments tried, over all components.
    pub max_nodes: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_elements: 30, max_nodes: 1_000_000 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{elements} elements exceed the oracle limit of {max}")]
    TooManyElements { elements: usize, max: usize },
    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExceeded { nodes: u64 },
    #[error("{0} has no list")]
    MissingList(Item),
}

/// A proper list coloring of `g` in `mode` if one exists.
///
/// `Ok(None)` means the search was exhaustive and found nothing; running out
/// of budget is an error, never `None`.
pub fn brute_force_choose(
    g: &EmbeddedGraph,
    lists: &ListAssignment,
    mode: ColorMode,
    budget: OracleBudget,
) -> Result<Option<Coloring>, OracleError> {
    let mut items: Vec<Item> = g.edges().into_iter().map(Item::Edge).collect();
    if mode == ColorMode::Total {
        items.extend((0..g.vertex_count()).map(Item::Vertex));
    }
    if items.len() > budget.max_elements {
        return Err(OracleError::TooManyElements { elements: items.len(), max: budget.max_elements });
    }
    let colors = solve_items(&items, lists, budget.max_nodes)?;
    Ok(colors.map(|colors| {
        let mut c = Coloring::new(mode);
        for (x, col) in items.into_iter().zip(colors) {
            match x {
                Item::Edge(e) => c.edges.insert(e, col),
                Item::Vertex(v) => c.vertices.insert(v, col),
            };
        }
        c
    }))
}

/// Colors for `items` (same order) such that conflicting items differ.
/// Two vertices conflict when the edge between them is also among `items`.
pub(crate) fn solve_items(
    items: &[Item],
    lists: &ListAssignment,
    max_nodes: u64,
) -> Result<Option<Vec<Color>>, OracleError> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&i| items[i]);
    let sorted: Vec<Item> = order.iter().map(|&i| items[i]).collect();
    let mut domains = Vec::with_capacity(sorted.len());
    for &x in &sorted {
        domains.push(lists.get(x).ok_or(OracleError::MissingList(x))?.to_vec());
    }

    // Everything meeting at a vertex conflicts pairwise: the edges there and
    // the vertex itself. Vertices also conflict along listed edges.
    let mut at_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut vertex_item: HashMap<usize, usize> = HashMap::new();
    for (i, x) in sorted.iter().enumerate() {
        match *x {
            Item::Edge(e) => {
                at_vertex.entry(e.lo()).or_default().push(i);
                at_vertex.entry(e.hi()).or_default().push(i);
            }
            Item::Vertex(v) => {
                at_vertex.entry(v).or_default().push(i);
                vertex_item.insert(v, i);
            }
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); sorted.len()];
    for members in at_vertex.values() {
        for &i in members {
            adj[i].extend(members.iter().copied().filter(|&j| j != i));
        }
    }
    for x in &sorted {
        if let Item::Edge(e) = *x {
            if let (Some(&i), Some(&j)) = (vertex_item.get(&e.lo()), vertex_item.get(&e.hi())) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }

    let mut solution: Vec<Option<Color>> = vec![None; sorted.len()];
    let mut nodes = 0u64;
    for comp in components(&adj) {
        let mut s = Search::new(&comp, &adj, &domains);
        match s.run(&mut nodes, max_nodes)? {
            Some(colors) => {
                for (k, &i) in comp.iter().enumerate() {
                    solution[i] = Some(colors[k]);
                }
            }
            None => return Ok(None),
        }
    }
    let mut out = vec![0; items.len()];
    for (k, &i) in order.iter().enumerate() {
        out[i] = solution[k].expect("every component solved");
    }
    Ok(Some(out))
}

fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            for &y in &adj[comp[k]] {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

struct Search {
    domains: Vec<Vec<Color>>,
    adj: Vec<Vec<usize>>,
    blocked: Vec<Vec<u32>>,
    left: Vec<usize>,
    chosen: Vec<Option<Color>>,
}

impl Search {
    fn new(comp: &[usize], adj: &[Vec<usize>], domains: &[Vec<Color>]) -> Self {
        let local: HashMap<usize, usize> = comp.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let domains: Vec<Vec<Color>> = comp.iter().map(|&i| domains[i].clone()).collect();
        Search {
            adj: comp.iter().map(|&i| adj[i].iter().map(|j| local[j]).collect()).collect(),
            blocked: domains.iter().map(|d| vec![0; d.len()]).collect(),
            left: domains.iter().map(Vec::len).collect(),
            chosen: vec![None; comp.len()],
            domains,
        }
    }

    fn run(&mut self, nodes: &mut u64, max_nodes: u64) -> Result<Option<Vec<Color>>, OracleError> {
        if self.left.contains(&0) {
            return Ok(None);
        }
        Ok(self.descend(nodes, max_nodes)?.then(|| self.chosen.iter().map(|c| c.expect("assigned")).collect()))
    }

    /// Forbids `color` on the unassigned neighbors of `x`, or lifts that
    /// when `undo` is set. Returns false when some neighbor has no color left.
    fn propagate(&mut self, x: usize, color: Color, undo: bool) -> bool {
        let mut ok = true;
        for k in 0..self.adj[x].len() {
            let y = self.adj[x][k];
            if self.chosen[y].is_some() {
                continue;
            }
            if let Ok(p) = self.domains[y].binary_search(&color) {
                if undo {
                    self.blocked[y][p] -= 1;
                    if self.blocked[y][p] == 0 {
                        self.left[y] += 1;
                    }
                } else {
                    self.blocked[y][p] += 1;
                    if self.blocked[y][p] == 1 {
                        self.left[y] -= 1;
                        ok &= self.left[y] > 0;
                    }
                }
            }
        }
        ok
    }

    fn descend(&mut self, nodes: &mut u64, max_nodes: u64) -> Result<bool, OracleError> {
        let next = (0..self.chosen.len()).filter(|&i| self.chosen[i].is_none()).min_by_key(|&i| (self.left[i], i));
        let Some(x) = next else { return Ok(true) };
        for p in 0..self.domains[x].len() {
            if self.blocked[x][p] > 0 {
                continue;
            }
            *nodes += 1;
            if *nodes > max_nodes {
                return Err(OracleError::BudgetExceeded { nodes: max_nodes });
            }
            let color = self.domains[x][p];
            let ok = self.propagate(x, color, false);
            self.chosen[x] = Some(color);
            if ok && self.descend(nodes, max_nodes)? {
                return Ok(true);
            }
            self.chosen[x] = None;
            self.propagate(x, color, true);
        }
        Ok(false)
    }
}
