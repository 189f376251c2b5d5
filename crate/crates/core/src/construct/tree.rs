use super::{checked, least_allowed, require_list_size, require_positive_p, stuck, ConstructError};
use crate::graph::{Graph, Vertex};
use crate::labelling::{within_ball, Color, Element, ListAssignment, TotalLabelling};

/// List size [`label_tree_dfs`] needs for maximum degree `delta`.
pub fn tree_list_size(delta: usize, p: u32) -> usize {
    match delta {
        0 => 1,
        1 if p == 1 => 3,
        d => d + 2 * p as usize - 1,
    }
}

/// Depth-first list labelling of a tree from lists of size `Δ + 2p - 1`.
///
/// A single edge is labelled by trying its few combinations directly; with
/// `p = 1` it needs lists of size 3, since `{0, 1}` everywhere cannot be
/// labelled.
///
/// The root (vertex 0) takes its least color. Descending from `u` to a child
/// `w` colors the edge `uw` (avoiding the p-ball of `c(u)` and the other
/// colored edges at `u`: at most `2p - 1 + Δ - 1` colors) and then `w`
/// (avoiding `c(u)` and the p-ball of `c(uw)`: at most `2p` colors).
pub fn label_tree_dfs(g: &Graph, p: u32, lists: &ListAssignment) -> Result<TotalLabelling, ConstructError> {
    if !g.is_tree() {
        return Err(ConstructError::WrongFamily("tree"));
    }
    require_positive_p(p)?;
    require_list_size(g, lists, tree_list_size(g.max_degree(), p))?;
    let list = |x: Element| lists.get(x).expect("checked");
    if g.max_degree() == 1 {
        return single_edge(g, p, lists);
    }

    let mut c = TotalLabelling::new();
    let root = Element::Vertex(0);
    c.set(root, *list(root).first().expect("non-empty"));
    // (vertex, parent, next neighbor position)
    let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(0, None, 0)];
    while let Some(top) = stack.last_mut() {
        let (u, parent, pos) = *top;
        let Some(&w) = g.neighbors(u).get(pos) else {
            stack.pop();
            continue;
        };
        top.2 += 1;
        if Some(w) == parent {
            continue;
        }
        let cu = c.get(Element::Vertex(u)).expect("colored before its children");
        let used: Vec<Color> = g
            .neighbors(u)
            .iter()
            .filter_map(|&x| c.get(Element::edge(u, x)))
            .collect();
        let e = Element::edge(u, w);
        let ce = least_allowed(list(e), |x| within_ball(cu, x, p) || used.contains(&x))
            .ok_or_else(|| stuck("tree DFS", e))?;
        c.set(e, ce);
        let vw = Element::Vertex(w);
        let cw = least_allowed(list(vw), |x| x == cu || within_ball(ce, x, p))
            .ok_or_else(|| stuck("tree DFS", vw))?;
        c.set(vw, cw);
        stack.push((w, Some(u), 0));
    }
    checked(g, p, Some(lists), c, "tree DFS")
}

fn single_edge(g: &Graph, p: u32, lists: &ListAssignment) -> Result<TotalLabelling, ConstructError> {
    let (u, v) = g.edges()[0];
    let (eu, ev, e) = (Element::Vertex(u), Element::Vertex(v), Element::edge(u, v));
    let list = |x: Element| lists.get(x).expect("checked");
    for &ce in list(e) {
        for &cu in list(eu).iter().filter(|&&x| !within_ball(ce, x, p)) {
            if let Some(cv) = least_allowed(list(ev), |x| x == cu || within_ball(ce, x, p)) {
                let c = [(eu, cu), (ev, cv), (e, ce)].into_iter().collect();
                return checked(g, p, Some(lists), c, "tree DFS");
            }
        }
    }
    Err(stuck("tree DFS", e))
}
