//! Fixtures and independent checkers shared by the integration tests.
//!
//! Nothing here calls the library's own search or tracing code: faces,
//! kites and configurations are recomputed from the rotation lists.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use kitefree::coloring::{Coloring, ListAssignment};
use kitefree::embedding::{EdgeId, EmbeddedGraph, Surface, VertexId};
use kitefree::structure::{Configuration, TripleTriangle};
use kitefree::ColorMode;

pub fn graph(rot: Vec<Vec<VertexId>>) -> EmbeddedGraph {
    EmbeddedGraph::from_rotation(rot, Surface::Plane).expect("valid plane fixture")
}

pub fn c3() -> EmbeddedGraph {
    graph(vec![vec![1, 2], vec![2, 0], vec![0, 1]])
}

pub fn c4() -> EmbeddedGraph {
    graph(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]])
}

pub fn k4() -> EmbeddedGraph {
    graph(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
}

pub fn cube() -> EmbeddedGraph {
    graph(vec![
        vec![1, 4, 3],
        vec![2, 5, 0],
        vec![3, 6, 1],
        vec![0, 7, 2],
        vec![0, 5, 7],
        vec![1, 6, 4],
        vec![2, 7, 5],
        vec![3, 4, 6],
    ])
}

/// K5 embedded on the torus.
pub fn k5_torus() -> EmbeddedGraph {
    let rot = (0..5).map(|i| [1, 2, 4, 3].iter().map(|d| (i + d) % 5).collect()).collect();
    EmbeddedGraph::from_rotation(rot, Surface::Any).expect("valid rotation")
}

/// Face boundaries traced straight from the rotations: the dart after
/// `u -> v` is `v -> w` with `w` the successor of `u` around `v`.
pub fn faces_by_hand(g: &EmbeddedGraph) -> Vec<Vec<VertexId>> {
    let mut used: HashSet<(VertexId, VertexId)> = HashSet::new();
    let mut faces = Vec::new();
    for u in 0..g.vertex_count() {
        for &v in g.rotation(u) {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            while used.insert((a, b)) {
                walk.push(a);
                let rot = g.rotation(b);
                let k = rot.iter().position(|&x| x == a).unwrap();
                let next = rot[(k + 1) % rot.len()];
                (a, b) = (b, next);
            }
            faces.push(walk);
        }
    }
    faces
}

/// Number of (edge, unordered pair of common neighbors) combinations.
pub fn kite_count_by_hand(g: &EmbeddedGraph) -> usize {
    let adj: Vec<HashSet<VertexId>> = (0..g.vertex_count()).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut count = 0;
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            if u < v {
                let common = adj[u].intersection(&adj[v]).count();
                count += common * common.saturating_sub(1) / 2;
            }
        }
    }
    count
}

pub fn triangle_count_by_hand(g: &EmbeddedGraph) -> usize {
    let n = g.vertex_count();
    let mut count = 0;
    for a in 0..n {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if a < b && b < c && g.neighbors(c).contains(&a) {
                    count += 1;
                }
            }
        }
    }
    count
}

fn adjacent(g: &EmbeddedGraph, u: VertexId, v: VertexId) -> bool {
    g.neighbors(u).contains(&v)
}

fn is_face(g: &EmbeddedGraph, cycle: &[VertexId]) -> bool {
    let k = cycle.len();
    faces_by_hand(g).iter().any(|f| {
        f.len() == k
            && (0..k).any(|s| {
                let fwd = (0..k).all(|i| f[(s + i) % k] == cycle[i]);
                let bwd = (0..k).all(|i| f[(s + k - i) % k] == cycle[i]);
                fwd || bwd
            })
    })
}

/// Checks that `c` really is the configuration it claims to be in `g`.
pub fn validate(g: &EmbeddedGraph, c: &Configuration) -> Result<(), String> {
    let deg = |v: VertexId| g.degree(v);
    match c {
        Configuration::LightEdge { low, high, low_degree, high_degree } => {
            if !adjacent(g, *low, *high) {
                return Err(format!("{low}-{high} is not an edge"));
            }
            if (deg(*low), deg(*high)) != (*low_degree, *high_degree) || low_degree > high_degree {
                return Err(format!("degrees of {low}-{high} do not match"));
            }
        }
        Configuration::LightFourFace { u, v, w, x } => {
            let cyc = [*u, *v, *w, *x];
            if cyc.iter().collect::<BTreeSet<_>>().len() != 4 {
                return Err("4-face vertices are not distinct".into());
            }
            if deg(*u) != 3 || deg(*w) != 3 {
                return Err("4-face corners u, w are not 3-vertices".into());
            }
            if !is_face(g, &cyc) {
                return Err(format!("{cyc:?} is not a face"));
            }
        }
        Configuration::TripleTriangleCenter(t) => validate_triple(g, t)?,
        Configuration::TwoAltCycle { cycle } => {
            let k = cycle.len();
            if k < 4 || k % 2 == 1 {
                return Err(format!("cycle length {k}"));
            }
            if cycle.iter().collect::<BTreeSet<_>>().len() != k {
                return Err("cycle repeats a vertex".into());
            }
            if !(0..k).all(|i| adjacent(g, cycle[i], cycle[(i + 1) % k])) {
                return Err("cycle uses a missing edge".into());
            }
            if !(1..k).step_by(2).all(|i| deg(cycle[i]) == 2) {
                return Err("alternate cycle vertices are not 2-vertices".into());
            }
        }
    }
    Ok(())
}

fn validate_triple(g: &EmbeddedGraph, t: &TripleTriangle) -> Result<(), String> {
    let deg = |v: VertexId| g.degree(v);
    let all = [t.center, t.f, t.a, t.b, t.c, t.d, t.e, t.pendant];
    if all.iter().collect::<BTreeSet<_>>().len() != 8 {
        return Err("triple-triangle vertices are not distinct".into());
    }
    if deg(t.center) != 6 {
        return Err("center is not a 6-vertex".into());
    }
    for tri in [[t.center, t.f, t.a], [t.center, t.b, t.c], [t.center, t.d, t.e]] {
        if !is_face(g, &tri) {
            return Err(format!("{tri:?} is not a triangular face"));
        }
    }
    let types_ok = (deg(t.f), deg(t.a)) == (6, 3)
        && (deg(t.b), deg(t.c)) == (6, 3)
        && matches!((deg(t.d), deg(t.e)), (6, 3) | (5, 4) | (6, 4));
    if !types_ok {
        return Err("triangle types do not match".into());
    }
    if !adjacent(g, t.a, t.pendant) {
        return Err("pendant edge missing".into());
    }
    Ok(())
}

/// Light-edge check against explicit bounds.
pub fn validate_light(g: &EmbeddedGraph, c: &Configuration, sum_bound: usize, max_low: usize) -> Result<(), String> {
    validate(g, c)?;
    match c {
        Configuration::LightEdge { low_degree, high_degree, .. } => {
            if low_degree + high_degree > sum_bound || *low_degree > max_low {
                Err(format!("degrees ({low_degree}, {high_degree}) exceed ({sum_bound}, {max_low})"))
            } else {
                Ok(())
            }
        }
        other => Err(format!("expected a light edge, got {other}")),
    }
}

/// Exhaustive scan: is there an edge with low degree `<= max_low` and
/// degree sum `<= sum_bound`?
pub fn light_edge_exists(g: &EmbeddedGraph, sum_bound: usize, max_low: usize) -> bool {
    (0..g.vertex_count()).any(|u| {
        g.neighbors(u).iter().any(|&v| {
            let (a, b) = (g.degree(u), g.degree(v));
            a + b <= sum_bound && a.min(b) <= max_low
        })
    })
}

/// Which side of the `g`/`j` choice a Figure-1 fixture exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaFixture {
    /// `g` and `j` have a common available color.
    Shared,
    /// No common color; `j` has a color `h` lacks.
    OutsideHOnJ,
    /// No common color; `g` has a color `h` lacks.
    OutsideHOnG,
}

pub struct Figure1 {
    pub graph: EmbeddedGraph,
    pub config: TripleTriangle,
    pub partial: Coloring,
    pub lists: ListAssignment,
}

/// The triple-triangle configuration with pendant leaves giving each outer
/// vertex the degree the figure assumes: `B, D, F` and the pendant's far
/// end have degree 6, `C` and `A` degree 3, `E` degree 4. Leaf edges at each
/// vertex carry distinct colors, so every labelled edge loses exactly
/// `7 - bound` colors from a 7-color list.
pub fn figure1(alpha: AlphaFixture) -> Figure1 {
    // X F A B C D E P
    let (x, f, a, b, c, d, e, p) = (0, 1, 2, 3, 4, 5, 6, 7);
    let mut rot: Vec<Vec<VertexId>> = vec![
        vec![f, a, b, c, d, e],
        vec![a, x],
        vec![x, f, p],
        vec![c, x],
        vec![x, b],
        vec![e, x],
        vec![x, d],
        vec![a],
    ];
    // Leaf colors per outer vertex.
    let (p_colors, j_list, h_list): (Vec<u32>, Vec<u32>, Vec<u32>) = match alpha {
        AlphaFixture::Shared => (vec![0, 1, 2, 3, 4], (0..7).collect(), (0..7).collect()),
        AlphaFixture::OutsideHOnJ => (vec![2, 3, 4, 5, 6], (0..7).collect(), (0..7).collect()),
        AlphaFixture::OutsideHOnG => (vec![2, 3, 4, 5, 6], vec![2, 3, 4, 5, 6, 7, 8], vec![0, 1, 2, 3, 7, 8, 9]),
    };
    let leaves: [(VertexId, Vec<u32>); 6] = [
        (b, vec![0, 1, 2, 3]),
        (c, vec![4]),
        (d, vec![0, 1, 2, 3]),
        (e, vec![4, 5]),
        (f, vec![0, 1, 2, 3]),
        (p, p_colors),
    ];
    let mut partial = Coloring::new(ColorMode::Edge);
    let mut lists = ListAssignment::new(ColorMode::Edge);
    for (owner, colors) in &leaves {
        for &col in colors {
            let leaf = rot.len();
            rot.push(vec![*owner]);
            rot[*owner].push(leaf);
            partial.edges.insert(EdgeId::new(*owner, leaf), col);
            lists.set_edge(EdgeId::new(*owner, leaf), (0..10).collect());
        }
    }
    let graph = graph(rot);
    let config = TripleTriangle { center: x, f, a, b, c, d, e, pendant: p };
    for (k, edge) in config.labelled_edges().into_iter().enumerate() {
        let list = match k {
            9 => j_list.clone(),
            7 => h_list.clone(),
            _ => (0..7).collect(),
        };
        lists.set_edge(edge, list);
    }
    Figure1 { graph, config, partial, lists }
}
