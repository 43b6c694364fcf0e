//! Small worked examples for each module, checked against hand counts or
//! the helpers in `common`.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;

use common::{
    c3, c4, cube, faces_by_hand, figure1, graph, k4, light_edge_exists, validate, validate_light, AlphaFixture,
};
use kitefree::coloring::{color_even_cycle, CycleError, Violation};
use kitefree::discharging::{apply_rules, initial_charges};
use kitefree::embedding::{find_kites, parse_graph, EdgeId, EmbeddedGraph, GraphError, VertexId};
use kitefree::generator::{remove_kites, stacked_triangulation};
use kitefree::oracle::OracleBudget;
use kitefree::structure::{find_delta6_config, find_light_edge, find_light_four_face, find_two_alternating_cycle};
use kitefree::*;

fn k2() -> EmbeddedGraph {
    graph(vec![vec![1], vec![0]])
}

fn star(leaves: usize) -> EmbeddedGraph {
    let mut rot = vec![(1..=leaves).collect::<Vec<_>>()];
    rot.extend((0..leaves).map(|_| vec![0]));
    graph(rot)
}

/// Parts `{0, 1}` and `{2, 3, 4}`.
fn k23() -> EmbeddedGraph {
    graph(vec![vec![2, 3, 4], vec![4, 3, 2], vec![0, 1], vec![0, 1], vec![0, 1]])
}

fn octahedron() -> EmbeddedGraph {
    let mut rot = vec![vec![1, 2, 3, 4]];
    for i in 1..=4 {
        rot.push(vec![0, (i + 2) % 4 + 1, 5, i % 4 + 1]);
    }
    rot.push(vec![4, 3, 2, 1]);
    graph(rot)
}

/// A new vertex inside every face of a triangulation, joined to its corners.
fn stack_every_face(g: &EmbeddedGraph) -> EmbeddedGraph {
    let mut rot: Vec<Vec<VertexId>> = (0..g.vertex_count()).map(|v| g.rotation(v).to_vec()).collect();
    for f in faces_by_hand(g) {
        let [a, b, c] = f[..] else { panic!("not a triangulation") };
        let x = rot.len();
        for (owner, after) in [(b, a), (c, b), (a, c)] {
            let k = rot[owner].iter().position(|&y| y == after).unwrap();
            rot[owner].insert(k + 1, x);
        }
        rot.push(vec![a, c, b]);
    }
    graph(rot)
}

fn lists_from(g: &EmbeddedGraph, mode: ColorMode, lists: &[(EdgeId, Vec<u32>)]) -> ListAssignment {
    let mut l = ListAssignment::new(mode);
    for (e, colors) in lists {
        assert!(g.has_edge(e.lo(), e.hi()));
        l.set_edge(*e, colors.clone());
    }
    l
}

#[test]
fn parsing_small_files() {
    let g = parse_graph("surface plane\nvertices 4\nrot 0: 1 3\nrot 1: 2 0\nrot 2: 3 1\nrot 3: 0 2\n").unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
    let err = parse_graph("surface plane\nvertices 2\nrot 0: 1\nrot 1:\n").unwrap_err();
    assert!(matches!(err, GraphError::AsymmetricRotation { u: 0, v: 1 }), "{err}");
    let q = cube();
    assert_eq!(q.edge_count(), 12);
    assert_eq!(q.euler_characteristic().value, 2);
}

#[test]
fn face_degrees_of_small_graphs() {
    let degrees = |g: &EmbeddedGraph| {
        let mut d: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
        d.sort_unstable();
        d
    };
    assert_eq!(degrees(&c4()), vec![4, 4]);
    assert_eq!(degrees(&cube()), vec![4; 6]);
    assert_eq!(degrees(&k4()), vec![3; 4]);
    let e = k2();
    assert_eq!(degrees(&e), vec![2]);
    assert_eq!(e.euler_characteristic().value, 2);
}

#[test]
fn edge_deletion_keeps_euler() {
    let p4 = c4().without_edge(EdgeId::new(0, 1)).unwrap();
    assert_eq!(p4.face_count(), 1);
    assert_eq!(faces_by_hand(&p4).len(), 1);

    let q = cube().without_edge(EdgeId::new(0, 1)).unwrap();
    assert_eq!((q.edge_count(), q.face_count()), (11, 5));

    // Triangles 0 1 2 and 3 4 5 joined by the bridge 2-3.
    let two = graph(vec![vec![1, 2], vec![2, 0], vec![0, 3, 1], vec![4, 2, 5], vec![5, 3], vec![3, 4]]);
    assert_eq!(two.face_count(), 3);
    let split = two.without_edge(EdgeId::new(2, 3)).unwrap();
    assert_eq!(split.component_count(), 2);
    assert_eq!(faces_by_hand(&split).len(), 4);
    let chi = split.euler_characteristic();
    assert!(!chi.connected);
    assert_eq!(chi.value, 1 + 2);

    let mut g = c4();
    assert!(matches!(g.remove_edge(EdgeId::new(0, 2)), Err(GraphError::UnknownEdge(_))));
}

#[test]
fn kites_of_small_graphs() {
    assert_eq!(find_kites(&k4()).len(), 6);
    assert!(find_kites(&cube()).is_empty());
    let g = stacked_triangulation(10, 1, 0);
    assert_eq!(find_kites(&g).len(), common::kite_count_by_hand(&g));
}

#[test]
fn light_edges() {
    let s = star(9);
    let c = find_light_edge(&s, 10, 4).unwrap();
    validate_light(&s, &c, 10, 4).unwrap();
    assert!(matches!(c, Configuration::LightEdge { low_degree: 1, high_degree: 9, .. }));

    let q = cube();
    let c = find_light_edge(&q, 8, 4).unwrap();
    assert!(matches!(c, Configuration::LightEdge { low_degree: 3, high_degree: 3, .. }));
}

#[test]
fn light_four_face_without_light_edges() {
    // Every face of the octahedron gets a 3-vertex; then one octahedron
    // edge goes, merging two triangles into a 4-face with two 3-corners.
    let g = stack_every_face(&octahedron());
    let g = g.without_edge(EdgeId::new(1, 2)).unwrap();
    assert!(!light_edge_exists(&g, 8, usize::MAX));
    let c = find_light_four_face(&g).expect("4-face with two 3-vertices");
    validate(&g, &c).unwrap();
    let Configuration::LightFourFace { v, x, .. } = c else { unreachable!() };
    assert_eq!(BTreeSet::from([v, x]), BTreeSet::from([1, 2]));
}

#[test]
fn delta6_with_three_next_to_five() {
    // Tree: 0 has degree 6, its neighbor 1 degree 5, and 7 (next to 1) degree 3.
    let mut rot: Vec<Vec<VertexId>> = vec![vec![1, 2, 3, 4, 5, 6], vec![0, 7, 8, 9, 10]];
    rot.extend((2..=6).map(|_| vec![0]));
    rot.push(vec![1, 11, 12]);
    rot.extend((8..=10).map(|_| vec![1]));
    rot.extend((11..=12).map(|_| vec![7]));
    let g = graph(rot);
    assert_eq!((g.max_degree(), g.degree(1), g.degree(7)), (6, 5, 3));
    let c = find_delta6_config(&g).unwrap();
    validate_light(&g, &c, 8, 6).unwrap();
}

#[test]
fn alternating_cycles() {
    let g = k23();
    let c = find_two_alternating_cycle(&g).unwrap();
    validate(&g, &c).unwrap();
    let Configuration::TwoAltCycle { cycle } = c else { unreachable!() };
    assert_eq!(cycle.len(), 4);
    assert!(find_two_alternating_cycle(&cube()).is_none());
    let path = graph(vec![vec![1], vec![0, 2], vec![1]]);
    assert!(find_two_alternating_cycle(&path).is_none());
}

#[test]
fn dispatch_examples() {
    let c = find_reducible(&cube(), ReductionMode::TotalD2, 7).unwrap();
    validate_light(&cube(), &c, 6, 4).unwrap();
    let g = k23();
    let c = find_reducible(&g, ReductionMode::EdgeD1, 5).unwrap();
    validate_light(&g, &c, 5, 5).unwrap();

    let spec = GenSpec { target_min_delta: 9, ..GenSpec::new(400, 3) };
    let g = generate_kite_free(spec).unwrap();
    let delta = g.max_degree();
    assert!(delta >= 9);
    let c = find_reducible(&g, ReductionMode::EdgeD, delta).unwrap();
    match &c {
        Configuration::LightEdge { .. } => validate_light(&g, &c, delta + 1, 4).unwrap(),
        _ => validate(&g, &c).unwrap(),
    }
}

#[test]
fn charge_examples() {
    let q = cube();
    let s = initial_charges(&q, RuleSet::T4);
    assert!(s.vertex.iter().all(|&c| c == Rational64::from_integer(-1)));
    assert!(s.face.iter().all(|&c| c == Rational64::from_integer(0)));
    assert_eq!(s.total(), Rational64::from_integer(-8));
    assert_eq!(apply_rules(&q, RuleSet::L6D5), initial_charges(&q, RuleSet::L6D5));

    let st = star(9);
    let s = initial_charges(&st, RuleSet::T7);
    assert_eq!(s.vertex[0], Rational64::from_integer(5));
    assert!(s.vertex[1..].iter().all(|&c| c == Rational64::from_integer(-3)));
    assert_eq!(s.face, vec![Rational64::from_integer(14)]);
    let after = apply_rules(&st, RuleSet::T7);
    assert_eq!(after.bank, Some(Rational64::new(4, 3)));
    assert_eq!(after.vertex[0], Rational64::new(11, 3));
    assert_eq!(after.vertex[1..], s.vertex[1..]);
    assert_eq!(after.total(), Rational64::from_integer(-8));
}

/// Second reading of the maximum-degree-6 rules, one transfer per
/// (vertex, face) incidence and per adjacent pair, on hand-traced faces.
fn degree6_rules_by_hand(g: &EmbeddedGraph) -> (Vec<Rational64>, BTreeMap<(VertexId, VertexId), Rational64>) {
    let deg = |v: VertexId| g.degree(v) as i64;
    let faces = faces_by_hand(g);
    let key = |f: &Vec<VertexId>| (0..f.len()).map(|i| (f[i], f[(i + 1) % f.len()])).min().unwrap();
    let mut vertex: Vec<Rational64> = (0..g.vertex_count()).map(|v| Rational64::from_integer(deg(v) - 4)).collect();
    let mut face: BTreeMap<_, _> =
        faces.iter().map(|f| (key(f), Rational64::from_integer(f.len() as i64 - 4))).collect();
    let on_large: BTreeSet<VertexId> = faces.iter().filter(|f| f.len() >= 5).flatten().copied().collect();
    for f in &faces {
        let k = key(f);
        for &v in f {
            let mut give = Rational64::from_integer(0);
            if f.len() >= 5 && deg(v) == 3 {
                give -= Rational64::new(1, 2);
            }
            if f.len() == 3 {
                let touches_small = f.iter().any(|&u| deg(u) == 3 || deg(u) == 4);
                give += match deg(v) {
                    5 => Rational64::new(1, 2),
                    6 if touches_small => Rational64::new(1, 2),
                    6 => Rational64::new(1, 3),
                    _ => Rational64::from_integer(0),
                };
            }
            vertex[v] -= give;
            *face.get_mut(&k).unwrap() += give;
        }
    }
    for v in 0..g.vertex_count() {
        if deg(v) != 6 {
            continue;
        }
        for &u in g.neighbors(v) {
            if deg(u) == 3 {
                let amount = if on_large.contains(&u) { Rational64::new(1, 6) } else { Rational64::new(1, 3) };
                vertex[v] -= amount;
                vertex[u] += amount;
            }
        }
    }
    (vertex, face)
}

#[test]
fn degree6_rules_on_figure1_host() {
    let g = figure1(AlphaFixture::Shared).graph;
    let got = apply_rules(&g, RuleSet::L5);
    let (vertex, face) = degree6_rules_by_hand(&g);
    assert_eq!(got.vertex, vertex);
    let by_dart: BTreeMap<_, _> = g
        .faces()
        .iter()
        .map(|f| (f.boundary.iter().map(|d| (d.tail, d.head)).min().unwrap(), got.face[f.id]))
        .collect();
    assert_eq!(by_dart, face);
    assert_eq!(got.total(), Rational64::from_integer(-8));
    // The center gives 1/2 to each of its three triangles (each has a
    // 3-vertex) and 1/3 or 1/6 to its 3-neighbors A and C.
    assert!(got.vertex[0] < initial_charges(&g, RuleSet::L5).vertex[0]);
}

#[test]
fn audit_flags_cube_for_t4() {
    let report = audit(&cube(), RuleSet::T4);
    assert!(report.failed_preconditions().any(|p| p.name.contains('7')), "{}", report.summary());
    assert_eq!(report.total, Rational64::from_integer(-8));
}

#[test]
fn even_cycle_lists() {
    let g = c4();
    let edges = [EdgeId::new(0, 1), EdgeId::new(1, 2), EdgeId::new(2, 3), EdgeId::new(3, 0)];
    let same: BTreeMap<_, _> = edges.iter().map(|&e| (e, vec![1, 2])).collect();
    let col = color_even_cycle(&edges, &same).unwrap();
    assert_eq!(edges.map(|e| col[&e]), [1, 2, 1, 2]);

    let shifted: BTreeMap<_, _> =
        edges.iter().zip([[1, 2], [2, 3], [3, 4], [4, 1]]).map(|(&e, l)| (e, l.to_vec())).collect();
    let col = color_even_cycle(&edges, &shifted).unwrap();
    let lists = lists_from(&g, ColorMode::Edge, &shifted.clone().into_iter().collect::<Vec<_>>());
    let mut c = Coloring::new(ColorMode::Edge);
    c.edges = col;
    assert!(verify_coloring(&g, &lists, &c).is_empty());

    let tri = [EdgeId::new(0, 1), EdgeId::new(1, 2), EdgeId::new(2, 0)];
    let l3: BTreeMap<_, _> = tri.iter().map(|&e| (e, vec![1, 2])).collect();
    assert!(matches!(color_even_cycle(&tri, &l3), Err(CycleError::OddCycle(3))));
}

#[test]
fn edge_choosing_small_graphs() {
    let q = cube();
    let lists = ListAssignment::uniform(&q, 4, ColorMode::Edge);
    let c = choose_edges(&q, &lists, EdgeGuarantee::DeltaPlusOne).unwrap();
    assert!(verify_coloring(&q, &lists, &c).is_empty());
    assert!(brute_force_choose(&q, &lists, ColorMode::Edge, OracleBudget::default()).unwrap().is_some());

    let g = c4();
    let lists = ListAssignment::uniform(&g, 3, ColorMode::Edge);
    let c = choose_edges(&g, &lists, EdgeGuarantee::DeltaPlusOne).unwrap();
    assert!(verify_coloring(&g, &lists, &c).is_empty());
}

#[test]
fn total_choosing_small_graphs() {
    let s = star(9);
    let lists = random_lists(&s, 11, 15, ColorMode::Total, 4).unwrap();
    let c = choose_total(&s, &lists, TotalGuarantee::DeltaPlusTwo).unwrap();
    assert!(verify_coloring(&s, &lists, &c).is_empty());

    let e = k2();
    let mut lists = ListAssignment::new(ColorMode::Total);
    lists.set_edge(EdgeId::new(0, 1), vec![1, 2, 3]);
    lists.set_vertex(0, vec![1, 2, 3]);
    lists.set_vertex(1, vec![1, 2, 3]);
    let c = brute_force_choose(&e, &lists, ColorMode::Total, OracleBudget::default()).unwrap().unwrap();
    let used: BTreeSet<_> = [c.vertex(0), c.vertex(1), c.edge(EdgeId::new(0, 1))].into_iter().collect();
    assert_eq!(used.len(), 3);
    assert!(verify_coloring(&e, &lists, &c).is_empty());
}

#[test]
fn verifier_reports_conflicts() {
    let g = c4();
    let lists = ListAssignment::uniform(&g, 3, ColorMode::Edge);
    let mut c = Coloring::new(ColorMode::Edge);
    for (e, col) in [((0, 1), 0), ((1, 2), 1), ((2, 3), 2), ((3, 0), 1)] {
        c.edges.insert(EdgeId::new(e.0, e.1), col);
    }
    assert!(verify_coloring(&g, &lists, &c).is_empty());
    c.edges.insert(EdgeId::new(1, 2), 0);
    let v = verify_coloring(&g, &lists, &c);
    assert_eq!(
        v,
        vec![Violation::AdjacentEdges { first: EdgeId::new(0, 1), second: EdgeId::new(1, 2), at: 1, color: 0 }]
    );

    let e = k2();
    let lists = ListAssignment::uniform(&e, 3, ColorMode::Total);
    let mut c = Coloring::new(ColorMode::Total);
    c.vertices.insert(0, 1);
    c.vertices.insert(1, 2);
    c.edges.insert(EdgeId::new(0, 1), 1);
    let v = verify_coloring(&e, &lists, &c);
    assert_eq!(v, vec![Violation::Incident { vertex: 0, edge: EdgeId::new(0, 1), color: 1 }]);
}

/// The ten configuration edges alone, with availabilities as lists.
fn figure1_core(alpha: AlphaFixture) -> (EmbeddedGraph, ListAssignment) {
    let fx = figure1(alpha);
    let core = graph((0..8).map(|v| fx.graph.rotation(v).iter().copied().filter(|&u| u < 8).collect()).collect());
    let mut lists = ListAssignment::new(ColorMode::Edge);
    for e in fx.config.labelled_edges() {
        let blocked: BTreeSet<u32> =
            fx.partial.edges.iter().filter(|(f, _)| f.is_adjacent_to(e)).map(|(_, &c)| c).collect();
        lists.set_edge(e, fx.lists.edge(e).unwrap().iter().copied().filter(|c| !blocked.contains(c)).collect());
    }
    (core, lists)
}

#[test]
fn oracle_extends_figure1_availabilities() {
    for alpha in [AlphaFixture::Shared, AlphaFixture::OutsideHOnJ, AlphaFixture::OutsideHOnG] {
        let (core, lists) = figure1_core(alpha);
        assert_eq!(core.edge_count(), 10);
        let sizes: Vec<usize> =
            figure1(alpha).config.labelled_edges().iter().map(|&e| lists.edge(e).unwrap().len()).collect();
        assert_eq!(sizes, coloring::FIGURE1_BOUNDS.to_vec());
        let c = brute_force_choose(&core, &lists, ColorMode::Edge, OracleBudget::default()).unwrap().unwrap();
        assert!(verify_coloring(&core, &lists, &c).is_empty());
    }
}

#[test]
fn figure1_with_nothing_blocked() {
    let mut fx = figure1(AlphaFixture::Shared);
    // Move every leaf color outside 0..7, so all ten edges see the full list.
    for (e, col) in fx.partial.edges.iter_mut() {
        *col += 20;
        fx.lists.set_edge(*e, vec![*col]);
    }
    let (full, report) = coloring::extend_triple_triangle(&fx.graph, &fx.partial, &fx.config, &fx.lists).unwrap();
    assert_eq!(report.availability, [7; 10]);
    assert!(verify_coloring(&fx.graph, &fx.lists, &full).is_empty());
}

#[test]
fn generator_examples() {
    let k = stacked_triangulation(4, 0, 0);
    assert_eq!((k.vertex_count(), k.edge_count()), (4, 6));
    assert_eq!(find_kites(&k).len(), 6);
    let g = remove_kites(k, false);
    assert!(find_kites(&g).is_empty() && g.edge_count() < 6);
    assert_eq!(generate_kite_free(GenSpec::new(4, 0)).unwrap().to_text(), g.to_text());

    let g = generate_kite_free(GenSpec::new(200, 1)).unwrap();
    assert!(find_kites(&g).is_empty());
    assert_eq!(g.euler_characteristic().value, 1 + g.component_count() as i64);
    let t = generate_kite_free(GenSpec { triangle_free: true, ..GenSpec::new(200, 1) }).unwrap();
    assert_eq!(common::triangle_count_by_hand(&t), 0);

    let q = cube();
    let full = random_lists(&q, 6, 6, ColorMode::Total, 9).unwrap();
    assert_eq!(full, ListAssignment::uniform(&q, 6, ColorMode::Total));
    let c = c4();
    let two = random_lists(&c, 2, 2, ColorMode::Edge, 5).unwrap();
    assert!(two.edge_lists().all(|(_, l)| l == [0, 1]));
    let a = random_lists(&q, 4, 8, ColorMode::Edge, 3).unwrap();
    assert_eq!(a, random_lists(&q, 4, 8, ColorMode::Edge, 3).unwrap());
    assert!(random_lists(&q, 9, 8, ColorMode::Edge, 3).is_err());
}

/// Maximum degree of `generate_kite_free(n = 2000, seed)` for seeds 0..10.
const DEGREE_REACH: [usize; 10] = [86, 79, 82, 66, 62, 92, 78, 57, 61, 63];

#[test]
fn degree_reach_fixture() {
    let found: Vec<usize> =
        (0..10).map(|seed| generate_kite_free(GenSpec::new(2000, seed)).unwrap().max_degree()).collect();
    assert_eq!(found, DEGREE_REACH);
    assert!(DEGREE_REACH.iter().any(|&d| d >= 9));
}

#[test]
fn odd_cycle_oracle() {
    let g = c3();
    let lists = ListAssignment::uniform(&g, 2, ColorMode::Edge);
    assert!(brute_force_choose(&g, &lists, ColorMode::Edge, OracleBudget::default()).unwrap().is_none());
}
