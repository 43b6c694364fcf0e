//! Extension of a coloring across the ten edges around a triple-triangle
//! center.
//!
//! Labels follow the figure: center `X`, triangles `XFA`, `XBC`, `XDE`, and
//! edges `a = XB, b = BC, c = XC, d = XD, e = DE, f = XE, g = XF, h = FA,
//! i = XA`, `j` the pendant edge at `A`.

use std::collections::BTreeSet;

use crate::embedding::{EdgeId, EmbeddedGraph};
use crate::structure::TripleTriangle;

use super::lists::{Color, Coloring, ListAssignment};
use super::ColoringError;

/// Edge labels in the order of [`TripleTriangle::labelled_edges`].
pub const LABELS: [char; 10] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j'];

/// Fewest colors each labelled edge can have available when lists have at
/// least 7 colors and the maximum degree is 6.
pub const FIGURE1_BOUNDS: [usize; 10] = [3, 2, 6, 3, 1, 5, 3, 3, 7, 2];

/// Greedy order after `g` and `j` are fixed.
const GREEDY_ORDER: [char; 8] = ['e', 'd', 'a', 'b', 'f', 'c', 'i', 'h'];

const MIN_LIST: usize = 7;

fn index(label: char) -> usize {
    LABELS.iter().position(|&l| l == label).expect("known label")
}

/// How `g` and `j` were colored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaCase {
    /// One color available on both `g` and `j` went on both.
    Shared(Color),
    /// No shared color; this color, available on `g` or `j` but not on `h`,
    /// went on the edge that has it.
    OutsideH(Color),
    /// Neither: `h` has every color of `g` and `j`, so it has room for both.
    Covered,
}

/// What the extension saw: initial availabilities, the `g`/`j` case, and
/// the number of available colors at every step in coloring order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure1Report {
    pub availability: [usize; 10],
    pub alpha: AlphaCase,
    pub steps: Vec<(char, usize)>,
}

/// Colors the ten edges of `t`, given the colors already forbidden on each
/// of them by edges outside the configuration.
pub(crate) fn extend_core(
    t: &TripleTriangle,
    list_of: impl Fn(EdgeId) -> Option<Vec<Color>>,
    outside: impl Fn(EdgeId) -> Vec<Color>,
) -> Result<([(EdgeId, Color); 10], Figure1Report), ColoringError> {
    let edges = t.labelled_edges();
    let mut avail: Vec<BTreeSet<Color>> = Vec::with_capacity(10);
    for (k, &e) in edges.iter().enumerate() {
        let list = list_of(e).ok_or_else(|| ColoringError::Precondition(format!("edge {e} has no list")))?;
        if list.len() < MIN_LIST {
            return Err(ColoringError::Precondition(format!(
                "edge {e} (label {}) has a list of {} colors, fewer than {MIN_LIST}",
                LABELS[k],
                list.len()
            )));
        }
        let blocked = outside(e);
        avail.push(list.into_iter().filter(|c| !blocked.contains(c)).collect());
    }
    let availability: [usize; 10] = std::array::from_fn(|k| avail[k].len());
    for k in 0..10 {
        if availability[k] < FIGURE1_BOUNDS[k] {
            return Err(ColoringError::AvailabilityBelowFigure1 {
                label: LABELS[k],
                edge: edges[k],
                available: availability[k],
                bound: FIGURE1_BOUNDS[k],
            });
        }
    }

    let mut color: [Option<Color>; 10] = [None; 10];
    let mut steps = Vec::with_capacity(10);
    let (g, h, j) = (index('g'), index('h'), index('j'));
    let shared = avail[g].intersection(&avail[j]).next().copied();
    let alpha = match shared {
        Some(c) => {
            color[g] = Some(c);
            color[j] = Some(c);
            AlphaCase::Shared(c)
        }
        None => {
            let outside_h = avail[g].union(&avail[j]).copied().filter(|c| !avail[h].contains(c)).min();
            let first = |k: usize| avail[k].iter().next().copied();
            match outside_h {
                Some(c) if avail[g].contains(&c) => {
                    color[g] = Some(c);
                    color[j] = first(j);
                    AlphaCase::OutsideH(c)
                }
                Some(c) => {
                    color[j] = Some(c);
                    color[g] = first(g);
                    AlphaCase::OutsideH(c)
                }
                None => {
                    color[g] = first(g);
                    color[j] = first(j);
                    AlphaCase::Covered
                }
            }
        }
    };
    steps.push(('g', availability[g]));
    steps.push(('j', availability[j]));

    for label in GREEDY_ORDER {
        let k = index(label);
        let taken: Vec<Color> =
            (0..10).filter(|&o| edges[o].is_adjacent_to(edges[k])).filter_map(|o| color[o]).collect();
        let free: Vec<Color> = avail[k].iter().copied().filter(|c| !taken.contains(c)).collect();
        steps.push((label, free.len()));
        match free.first() {
            Some(&c) => color[k] = Some(c),
            None => {
                return Err(ColoringError::InternalExtensionFailure {
                    config: format!("triple triangle at {}", t.center),
                    detail: format!("no color left for edge {label} ({})", edges[k]),
                })
            }
        }
    }

    let out = std::array::from_fn(|k| (edges[k], color[k].expect("all ten edges colored")));
    Ok((out, Figure1Report { availability, alpha, steps }))
}

/// Extends `partial` (a proper coloring of every edge of `g` except the ten
/// edges of `t`) to those ten edges.
///
/// Every list must have at least 7 colors. Availabilities are measured
/// against the colored edges of `g`; falling below the figure's bounds is
/// reported as [`ColoringError::AvailabilityBelowFigure1`].
pub fn extend_triple_triangle(
    g: &EmbeddedGraph,
    partial: &Coloring,
    t: &TripleTriangle,
    lists: &ListAssignment,
) -> Result<(Coloring, Figure1Report), ColoringError> {
    let own = t.labelled_edges();
    for e in own {
        let (u, v) = e.endpoints();
        if !g.has_edge(u, v) {
            return Err(ColoringError::Precondition(format!("edge {e} of the configuration is not in the graph")));
        }
        if partial.edge(e).is_some() {
            return Err(ColoringError::Precondition(format!("edge {e} of the configuration is already colored")));
        }
    }
    let outside = |e: EdgeId| -> Vec<Color> {
        let (u, v) = e.endpoints();
        [u, v]
            .into_iter()
            .flat_map(|w| g.neighbors(w).iter().map(move |&x| EdgeId::new(w, x)))
            .filter(|&f| f != e)
            .filter_map(|f| partial.edge(f))
            .collect()
    };
    let (colored, report) = extend_core(t, |e| lists.edge(e).map(<[Color]>::to_vec), outside)?;
    let mut out = partial.clone();
    out.edges.extend(colored);
    Ok((out, report))
}
