use crate::generators::permutations;
use crate::graph::Graph;

/// Largest vertex count for which automorphisms are enumerated.
const MAX_VERTICES: usize = 8;

/// Element permutations induced by the vertex automorphisms of `g`, as maps
/// `element id -> element id`. The identity comes first. Graphs with more
/// than eight vertices get the identity only.
pub fn element_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..g.element_count()).collect();
    if g.n() > MAX_VERTICES {
        return vec![identity];
    }
    let mut out = vec![identity];
    for perm in permutations(g.n()).into_iter().skip(1) {
        if g.vertices().any(|v| g.degree(v) != g.degree(perm[v])) {
            continue;
        }
        if g.relabel(&perm) != *g {
            continue;
        }
        let mut map: Vec<usize> = perm.clone();
        map.extend(g.edges().iter().map(|&(u, v)| {
            g.n() + g.edge_index(perm[u], perm[v]).expect("automorphism preserves edges")
        }));
        out.push(map);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_cycle, make_path, make_star};

    #[test]
    fn group_orders() {
        assert_eq!(element_automorphisms(&make_path(2).unwrap()).len(), 2);
        assert_eq!(element_automorphisms(&make_path(4).unwrap()).len(), 2);
        assert_eq!(element_automorphisms(&make_star(3).unwrap()).len(), 6);
        assert_eq!(element_automorphisms(&make_cycle(5).unwrap()).len(), 10);
    }

    #[test]
    fn single_edge_swaps_endpoints() {
        let auts = element_automorphisms(&make_path(2).unwrap());
        assert_eq!(auts[1], vec![1, 0, 2]);
    }
}
