use std::collections::BTreeSet;

use super::{checked, least_allowed, require_list_size, ConstructError};
use crate::generators::make_star;
use crate::graph::{Graph, Vertex};
use crate::labelling::{within_ball, Color, Element, ListAssignment, TotalLabelling};
use crate::solver::{solve_span, Outcome};

/// The vertex of maximum degree (least index on ties).
pub fn star_center(g: &Graph) -> Option<Vertex> {
    let delta = g.max_degree();
    g.vertices().find(|&v| g.degree(v) == delta)
}

fn is_star(g: &Graph) -> bool {
    match star_center(g) {
        Some(w) => g.is_tree() && g.degree(w) + 1 == g.n(),
        None => false,
    }
}

/// Edge coloring loop for a fixed center color.
///
/// `reduced[j]` is the list of the `j`-th edge with the center's p-ball
/// removed. Repeatedly colors the global minimum `m` of the uncolored lists,
/// giving it to the protected edge only when no other uncolored edge can take
/// it; when the protected edge is used up, the next protected edge is one
/// whose list still holds at least `n - i` colors.
fn color_edges(mut reduced: Vec<BTreeSet<Color>>) -> Option<Vec<Color>> {
    let n = reduced.len();
    let mut protected = reduced.iter().position(|l| l.len() >= n)?;
    let mut uncolored: BTreeSet<usize> = (0..n).collect();
    let mut colors = vec![0; n];
    for i in 1..=n {
        if uncolored.iter().any(|&j| reduced[j].is_empty()) {
            return None;
        }
        let m = uncolored
            .iter()
            .filter_map(|&j| reduced[j].first().copied())
            .min()?;
        let holders: Vec<usize> = uncolored
            .iter()
            .copied()
            .filter(|&j| reduced[j].contains(&m))
            .collect();
        let chosen = if holders == [protected] {
            protected
        } else {
            *holders.iter().find(|&&j| j != protected)?
        };
        colors[chosen] = m;
        uncolored.remove(&chosen);
        if i == n {
            break;
        }
        for &j in &uncolored {
            reduced[j].remove(&m);
        }
        if chosen == protected {
            protected = *uncolored.iter().find(|&&j| reduced[j].len() >= n - i)?;
        }
    }
    Some(colors)
}

/// List labelling of a star `K_{1,n}` (`n ≥ 3`, `p ≥ 2`) from lists of size
/// `n + 2p - 1`.
///
/// Center colors are tried in ascending order; for each, the edge lists lose
/// the center's p-ball, the edges are colored by the minimum-color loop of
/// [`color_edges`], and each leaf takes its least color avoiding the center
/// and the p-ball of its edge.
pub fn label_star_list(g: &Graph, p: u32, lists: &ListAssignment) -> Result<TotalLabelling, ConstructError> {
    if !is_star(g) {
        return Err(ConstructError::WrongFamily("star"));
    }
    let w = star_center(g).expect("star has a center");
    let n = g.degree(w);
    if n < 3 || p < 2 {
        return Err(ConstructError::InvalidParameter(format!(
            "star list labelling needs n >= 3 and p >= 2, got n = {n}, p = {p}"
        )));
    }
    require_list_size(g, lists, n + 2 * p as usize - 1)?;
    let leaves = g.neighbors(w);
    let edges: Vec<Element> = leaves.iter().map(|&v| Element::edge(w, v)).collect();
    let list = |x: Element| lists.get(x).expect("checked");

    for &alpha in list(Element::Vertex(w)) {
        let reduced: Vec<BTreeSet<Color>> = edges
            .iter()
            .map(|&e| list(e).iter().copied().filter(|&c| !within_ball(alpha, c, p)).collect())
            .collect();
        let Some(edge_colors) = color_edges(reduced) else {
            continue;
        };
        let mut c = TotalLabelling::new();
        c.set(Element::Vertex(w), alpha);
        let mut complete = true;
        for ((&v, &e), &ce) in leaves.iter().zip(&edges).zip(&edge_colors) {
            c.set(e, ce);
            let leaf = Element::Vertex(v);
            match least_allowed(list(leaf), |x| x == alpha || within_ball(ce, x, p)) {
                Some(cv) => c.set(leaf, cv),
                None => {
                    complete = false;
                    break;
                }
            }
        }
        if complete {
            return checked(g, p, Some(lists), c, "star list labeller");
        }
    }
    Err(ConstructError::TheoremViolation(format!(
        "star list labeller: no center color of {:?} admits an extension",
        list(Element::Vertex(w))
    )))
}

/// Span-optimal labelling of `K_{1,n}` as produced by [`make_star`].
///
/// For `p < n` the explicit labelling with colors `1..=n+p`: center `n+p`,
/// edge `j` gets `j`, leaf `j < n` gets `p + j`, leaf `n` gets 1. For `p ≥ n`
/// an exact optimum with span `n + p` from the solver.
pub fn label_star_span(n: usize, p: u32) -> Result<TotalLabelling, ConstructError> {
    if n == 0 || p == 0 {
        return Err(ConstructError::InvalidParameter("need n >= 1 and p >= 1".into()));
    }
    let g = make_star(n).expect("n >= 1");
    let n_color = n as Color;
    let c = if p < n_color {
        let mut c = TotalLabelling::new();
        c.set(Element::Vertex(0), n_color + p);
        for j in 1..=n {
            let jc = j as Color;
            c.set(Element::edge(0, j), jc);
            c.set(Element::Vertex(j), if j < n { p + jc } else { 1 });
        }
        c
    } else {
        match solve_span(&g, p, n_color + p).outcome {
            Outcome::Labelled(c) => c,
            Outcome::Infeasible => {
                return Err(ConstructError::TheoremViolation(format!(
                    "K_1,{n} has no labelling of span {}",
                    n_color + p
                )))
            }
        }
    };
    checked(&g, p, None, c, "star span construction")
}
