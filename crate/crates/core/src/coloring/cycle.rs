use std::collections::BTreeMap;

use thiserror::Error;

use crate::embedding::EdgeId;

use super::lists::Color;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle of length {0} is odd")]
    OddCycle(usize),
    #[error("edge {0} has fewer than two available colors")]
    ListTooSmall(EdgeId),
    #[error("edges do not form a cycle in the given order")]
    NotACycle,
}

/// Properly colors the edges of an even cycle from lists of size at least 2.
///
/// `edges` must be in cyclic order. Only the two smallest colors of each
/// list are used. If all those pairs coincide the cycle alternates;
/// otherwise some edge `e_i` has a color missing from its predecessor's
/// pair, which is fixed first and the rest are colored greedily around the
/// cycle.
pub fn color_even_cycle(
    edges: &[EdgeId],
    avail: &BTreeMap<EdgeId, Vec<Color>>,
) -> Result<BTreeMap<EdgeId, Color>, CycleError> {
    let n = edges.len();
    if n % 2 == 1 {
        return Err(CycleError::OddCycle(n));
    }
    if n < 4 || (0..n).any(|i| !edges[i].is_adjacent_to(edges[(i + 1) % n])) {
        return Err(CycleError::NotACycle);
    }
    let mut pairs = Vec::with_capacity(n);
    for &e in edges {
        let mut l = avail.get(&e).cloned().unwrap_or_default();
        l.sort_unstable();
        l.dedup();
        if l.len() < 2 {
            return Err(CycleError::ListTooSmall(e));
        }
        pairs.push([l[0], l[1]]);
    }

    let mut colors = vec![0 as Color; n];
    match (0..n).find(|&i| pairs[i] != pairs[(i + n - 1) % n]) {
        None => {
            for (i, c) in colors.iter_mut().enumerate() {
                *c = pairs[0][i % 2];
            }
        }
        Some(start) => {
            let prev = pairs[(start + n - 1) % n];
            colors[start] = *pairs[start].iter().find(|c| !prev.contains(c)).expect("pairs differ");
            for step in 1..n {
                let i = (start + step) % n;
                let before = colors[(i + n - 1) % n];
                let mut choice = pairs[i].iter().copied().filter(|&c| c != before);
                colors[i] = if step == n - 1 { choice.find(|&c| c != colors[start]) } else { choice.next() }
                    .expect("two colors always leave one free");
            }
        }
    }
    Ok(edges.iter().copied().zip(colors).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_edges() -> Vec<EdgeId> {
        (0..4).map(|i| EdgeId::new(i, (i + 1) % 4)).collect()
    }

    #[test]
    fn uniform_pairs_alternate() {
        let edges = c4_edges();
        let avail = edges.iter().map(|&e| (e, vec![1, 2])).collect();
        let c = color_even_cycle(&edges, &avail).unwrap();
        let got: Vec<Color> = edges.iter().map(|e| c[e]).collect();
        assert_eq!(got, vec![1, 2, 1, 2]);
    }

    #[test]
    fn odd_and_small_rejected() {
        let tri: Vec<EdgeId> = (0..3).map(|i| EdgeId::new(i, (i + 1) % 3)).collect();
        let avail = tri.iter().map(|&e| (e, vec![1, 2])).collect();
        assert_eq!(color_even_cycle(&tri, &avail), Err(CycleError::OddCycle(3)));
        let edges = c4_edges();
        let mut avail: BTreeMap<EdgeId, Vec<Color>> = edges.iter().map(|&e| (e, vec![1, 2])).collect();
        avail.insert(edges[2], vec![7]);
        assert_eq!(color_even_cycle(&edges, &avail), Err(CycleError::ListTooSmall(edges[2])));
    }
}
