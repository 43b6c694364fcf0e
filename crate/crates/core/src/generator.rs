//! Deterministic random kite-free plane graphs and random list assignments.
//!
//! All randomness comes from SplitMix64 seeded directly with the caller's
//! seed. A draw below `n` is `(x * n) >> 64` on the 128-bit product of the
//! next 64-bit output `x` and `n`.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::coloring::{Color, ColorMode, ListAssignment};
use crate::embedding::{EdgeId, EmbeddedGraph, Surface, VertexId};

/// Parameters of [`generate_kite_free`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    /// Number of vertices, at least 3.
    pub n: usize,
    pub seed: u64,
    /// Best-effort lower bound on the maximum degree of the result; 0 for
    /// no target.
    pub target_min_delta: usize,
    /// Remove every triangle, not only kites.
    pub triangle_free: bool,
}

impl GenSpec {
    pub fn new(n: usize, seed: u64) -> Self {
        GenSpec { n, seed, target_min_delta: 0, triangle_free: false }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("list size {k} exceeds palette size {palette}")]
    ListLargerThanPalette { k: usize, palette: usize },
}

struct Draw(SplitMix64);

impl Draw {
    fn new(seed: u64) -> Self {
        Draw(SplitMix64::seed_from_u64(seed))
    }

    /// Uniform in `0..n`; `n` must be positive.
    fn below(&mut self, n: usize) -> usize {
        ((self.0.next_u64() as u128 * n as u128) >> 64) as usize
    }
}

/// Seed for retry `round` of a base seed.
fn mix(seed: u64, round: u64) -> u64 {
    SplitMix64::seed_from_u64(seed ^ round.wrapping_mul(0x9E37_79B9_7F4A_7C15)).next_u64()
}

const ATTEMPTS: u64 = 8;

/// A random kite-free plane graph: a stacked triangulation on `spec.n`
/// vertices with every kite's shared edge deleted (smallest edge first),
/// or every triangle edge when `triangle_free` is set.
///
/// With a degree target, up to eight attempts are made, each steering a
/// growing share of insertions into faces around vertex 0. The first
/// attempt reaching the target is returned, otherwise the one with the
/// largest maximum degree.
pub fn generate_kite_free(spec: GenSpec) -> Result<EmbeddedGraph, GenError> {
    if spec.n < 3 {
        return Err(GenError::TooFewVertices(spec.n));
    }
    let build = |seed: u64, bias: usize| remove_kites(stacked_triangulation(spec.n, seed, bias), spec.triangle_free);
    let first = build(spec.seed, 0);
    if spec.target_min_delta == 0 || first.max_degree() >= spec.target_min_delta {
        return Ok(first);
    }
    let mut best = first;
    for round in 1..ATTEMPTS {
        let g = build(mix(spec.seed, round), (20 * round as usize).min(80));
        if g.max_degree() >= spec.target_min_delta {
            return Ok(g);
        }
        if g.max_degree() > best.max_degree() {
            best = g;
        }
    }
    Ok(best)
}

/// A stacked triangulation: start from a triangle and repeatedly put a new
/// vertex inside a random face, joined to its three corners. With
/// `hub_bias_percent > 0`, that share of insertions picks a face at vertex 0.
pub fn stacked_triangulation(n: usize, seed: u64, hub_bias_percent: usize) -> EmbeddedGraph {
    let n = n.max(3);
    let mut rng = Draw::new(seed);
    let mut rot: Vec<Vec<VertexId>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // Faces as traced boundaries a -> b -> c.
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut hub_faces: Vec<usize> = vec![0, 1];
    let insert_after = |list: &mut Vec<VertexId>, after: VertexId, x: VertexId| {
        let p = list.iter().position(|&y| y == after).expect("corner present");
        list.insert(p + 1, x);
    };
    for x in 3..n {
        let k = if hub_bias_percent > 0 && rng.below(100) < hub_bias_percent {
            loop {
                let slot = rng.below(hub_faces.len());
                let k = hub_faces[slot];
                if faces[k].contains(&0) {
                    break k;
                }
                hub_faces.swap_remove(slot);
            }
        } else {
            rng.below(faces.len())
        };
        let [a, b, c] = faces[k];
        insert_after(&mut rot[b], a, x);
        insert_after(&mut rot[c], b, x);
        insert_after(&mut rot[a], c, x);
        rot.push(vec![b, a, c]);
        faces[k] = [a, b, x];
        for f in [[b, c, x], [c, a, x]] {
            if f.contains(&0) {
                hub_faces.push(faces.len());
            }
            faces.push(f);
        }
    }
    EmbeddedGraph::from_rotation(rot, Surface::Plane).expect("stacked triangulations are plane")
}

/// Deletes, in increasing edge order, every edge that still has two common
/// neighbors (one, when `triangle_free`). Deleting edges never creates
/// common neighbors, so a single pass reaches the fixpoint.
pub fn remove_kites(mut g: EmbeddedGraph, triangle_free: bool) -> EmbeddedGraph {
    let limit = if triangle_free { 1 } else { 2 };
    let mut mark = vec![usize::MAX; g.vertex_count()];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        for &w in g.neighbors(u) {
            mark[w] = u;
        }
        let common = g.neighbors(v).iter().filter(|&&w| mark[w] == u).count();
        for &w in g.neighbors(u) {
            mark[w] = usize::MAX;
        }
        if common >= limit {
            g.remove_edge(e).expect("edge present");
        }
    }
    g
}

/// Every edge (and every vertex in total mode) gets a uniform random
/// `k`-subset of `0..palette`, drawn in increasing edge order, then vertex
/// order.
pub fn random_lists(
    g: &EmbeddedGraph,
    k: usize,
    palette: usize,
    mode: ColorMode,
    seed: u64,
) -> Result<ListAssignment, GenError> {
    if k > palette {
        return Err(GenError::ListLargerThanPalette { k, palette });
    }
    let mut rng = Draw::new(seed);
    let mut pool: Vec<Color> = (0..palette as Color).collect();
    let mut draw = |rng: &mut Draw| -> Vec<Color> {
        for i in 0..k {
            let j = i + rng.below(palette - i);
            pool.swap(i, j);
        }
        pool[..k].to_vec()
    };
    let mut lists = ListAssignment::new(mode);
    for e in g.edges() {
        lists.set_edge(e, draw(&mut rng));
    }
    if mode == ColorMode::Total {
        for v in 0..g.vertex_count() {
            lists.set_vertex(v, draw(&mut rng));
        }
    }
    Ok(lists)
}

/// Edges lying on some triangle (3-cycle), for triangle-freeness checks.
pub fn triangle_edges(g: &EmbeddedGraph) -> Vec<EdgeId> {
    g.edges()
        .into_iter()
        .filter(|e| {
            let (u, v) = e.endpoints();
            g.neighbors(u).iter().any(|&w| w != v && g.has_edge(w, v))
        })
        .collect()
}
