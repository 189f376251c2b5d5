//! A plain backtracking search for L(p,1)-labellings, kept separate from the
//! separation CSP so the incidence bridge compares two independent engines.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{Graph, Vertex};
use crate::labelling::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lp1Span {
    pub span: Color,
    pub labels: BTreeMap<Vertex, Color>,
}

/// A vertex of degree Δ sees Δ pairwise distinct labels, all at least `p`
/// away from its own.
pub fn lp1_lower_bound(g: &Graph, p: u32) -> Color {
    let delta = g.max_degree() as Color;
    match (delta, p) {
        (0, _) => 0,
        (_, 0) => delta - 1,
        _ => delta + p - 1,
    }
}

struct Search<'a> {
    order: &'a [Vertex],
    /// For the i-th vertex of `order`, earlier positions at distance 1 and 2.
    near: Vec<Vec<usize>>,
    far: Vec<Vec<usize>>,
    p: u32,
    k: Color,
    colors: Vec<Color>,
}

impl Search<'_> {
    fn fits(&self, i: usize, c: Color) -> bool {
        self.near[i].iter().all(|&j| self.colors[j].abs_diff(c) >= self.p)
            && self.far[i].iter().all(|&j| self.colors[j] != c)
    }

    fn place(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        for c in 0..=self.k {
            if self.fits(i, c) {
                self.colors[i] = c;
                if self.place(i + 1) {
                    return true;
                }
            }
        }
        false
    }
}

fn bfs_order(g: &Graph) -> Vec<Vertex> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut starts: Vec<Vertex> = g.vertices().collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Minimum span of an L(p,1)-labelling of `g`, with a witness.
pub fn lp1_span(g: &Graph, p: u32) -> Lp1Span {
    let order = bfs_order(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut near = vec![Vec::new(); g.n()];
    let mut far = vec![Vec::new(); g.n()];
    for (i, &v) in order.iter().enumerate() {
        let adjacent: BTreeSet<Vertex> = g.neighbors(v).iter().copied().collect();
        let second: BTreeSet<Vertex> = adjacent
            .iter()
            .flat_map(|&w| g.neighbors(w).iter().copied())
            .filter(|&u| u != v && !adjacent.contains(&u))
            .collect();
        near[i] = adjacent.iter().map(|&w| position[w]).filter(|&j| j < i).collect();
        far[i] = second.iter().map(|&w| position[w]).filter(|&j| j < i).collect();
    }
    let mut k = lp1_lower_bound(g, p);
    loop {
        let mut search = Search {
            order: &order,
            near: near.clone(),
            far: far.clone(),
            p,
            k,
            colors: vec![0; g.n()],
        };
        if search.place(0) {
            let labels = order.iter().zip(&search.colors).map(|(&v, &c)| (v, c)).collect();
            return Lp1Span { span: k, labels };
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_complete, make_path, make_star};
    use crate::labelling::lp1_is_valid;

    #[test]
    fn path_table() {
        // χ = span + 1 of P_k for p = 2: 3, 4, 4, 5, 5
        let spans: Vec<Color> = (2..=6).map(|k| lp1_span(&make_path(k).unwrap(), 2).span).collect();
        assert_eq!(spans, vec![2, 3, 3, 4, 4]);
    }

    #[test]
    fn witnesses_validate() {
        for g in [make_star(4).unwrap(), make_complete(4).unwrap(), make_path(7).unwrap()] {
            for p in 1..=3 {
                let r = lp1_span(&g, p);
                assert!(lp1_is_valid(&g, p, &r.labels));
                assert_eq!(r.labels.len(), g.n());
            }
        }
        // K_{1,3}, p = 2: center plus three distinct leaves two away from it
        assert_eq!(lp1_span(&make_star(3).unwrap(), 2).span, 4);
    }
}
