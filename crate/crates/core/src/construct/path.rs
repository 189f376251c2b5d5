use super::{checked, least_allowed, require_list_size, require_positive_p, stuck, ConstructError};
use crate::graph::{Graph, Vertex};
use crate::labelling::{within_ball, Element, ListAssignment, TotalLabelling};

/// Vertices of a path in order, starting from the smaller-indexed end.
fn path_order(g: &Graph) -> Vec<Vertex> {
    let start = g.vertices().find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| Some(w) != prev) {
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    order
}

/// Greedy list labelling of a path from lists of size at least `2p + 1`.
///
/// Elements are colored in the order `v1, e1, v2, e2, ...`, each with its
/// least color that avoids the previous element of the same kind and the
/// p-ball of the incident element just colored: at most `2p` exclusions.
pub fn label_path_greedy(g: &Graph, p: u32, lists: &ListAssignment) -> Result<TotalLabelling, ConstructError> {
    if !g.is_path() {
        return Err(ConstructError::WrongFamily("path"));
    }
    require_positive_p(p)?;
    require_list_size(g, lists, 2 * p as usize + 1)?;
    let order = path_order(g);
    let mut c = TotalLabelling::new();
    let list = |x: Element| lists.get(x).expect("checked");

    let first = Element::Vertex(order[0]);
    c.set(first, *list(first).first().expect("non-empty"));
    let mut prev_edge = None;
    for pair in order.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let e = Element::edge(a, b);
        let ca = c.get(Element::Vertex(a)).expect("colored");
        let ce = least_allowed(list(e), |x| within_ball(ca, x, p) || Some(x) == prev_edge)
            .ok_or_else(|| stuck("path greedy", e))?;
        c.set(e, ce);
        prev_edge = Some(ce);
        let vb = Element::Vertex(b);
        let cb = least_allowed(list(vb), |x| x == ca || within_ball(ce, x, p))
            .ok_or_else(|| stuck("path greedy", vb))?;
        c.set(vb, cb);
    }
    checked(g, p, Some(lists), c, "path greedy")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_path, make_star};

    #[test]
    fn full_lists() {
        let g = make_path(3).unwrap();
        let lists = ListAssignment::full_range(&g, 4);
        let c = label_path_greedy(&g, 2, &lists).unwrap();
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn single_vertex() {
        let g = make_path(1).unwrap();
        let c = label_path_greedy(&g, 3, &ListAssignment::full_range(&g, 6)).unwrap();
        assert_eq!(c.get(Element::Vertex(0)), Some(0));
    }

    #[test]
    fn preconditions() {
        let star = make_star(3).unwrap();
        assert_eq!(
            label_path_greedy(&star, 2, &ListAssignment::full_range(&star, 4)),
            Err(ConstructError::WrongFamily("path"))
        );
        let g = make_path(3).unwrap();
        assert!(matches!(
            label_path_greedy(&g, 2, &ListAssignment::full_range(&g, 3)),
            Err(ConstructError::ListsTooSmall { need: 5, .. })
        ));
    }

    #[test]
    fn unordered_vertex_numbering() {
        let g = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let c = label_path_greedy(&g, 1, &ListAssignment::full_range(&g, 2)).unwrap();
        assert_eq!(c.len(), 7);
    }
}
