use serde::Serialize;

use super::ConstructError;
use crate::graph::{Graph, Vertex};

/// A reducible local structure, with vertices named by role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ConfigurationMatch {
    /// `v` has degree 1, its neighbor is `u`.
    Leaf { v: Vertex, u: Vertex },
    /// Adjacent vertices of degree 2.
    C1 { u: Vertex, v: Vertex },
    /// Triangle `u v1 v2` with `d(u) = 2`, `d(v1) = 3`.
    C2 { u: Vertex, v1: Vertex, v2: Vertex },
    /// Triangles `u1 v1 x` and `u2 v2 x` with `d(x) = 4`, `d(u1) = d(u2) = 2`.
    C3 {
        x: Vertex,
        u1: Vertex,
        v1: Vertex,
        u2: Vertex,
        v2: Vertex,
    },
}

impl ConfigurationMatch {
    pub fn name(&self) -> &'static str {
        match self {
            ConfigurationMatch::Leaf { .. } => "leaf",
            ConfigurationMatch::C1 { .. } => "C1",
            ConfigurationMatch::C2 { .. } => "C2",
            ConfigurationMatch::C3 { .. } => "C3",
        }
    }
}

/// Scans for a leaf, then C1, C2 and C3, each in increasing vertex order.
///
/// Isolated vertices are ignored. A degree-2 vertex whose two neighbors are
/// adjacent is taken to span a 3-face; no embedding is computed. Returns
/// `Ok(None)` when nothing matches, which for a graph of minimum degree 2
/// means the input is not outerplanar.
pub fn find_configuration(g: &Graph) -> Result<Option<ConfigurationMatch>, ConstructError> {
    if g.m() == 0 {
        return Err(ConstructError::InvalidParameter(
            "configuration search needs at least one edge".into(),
        ));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 1) {
        return Ok(Some(ConfigurationMatch::Leaf {
            v,
            u: g.neighbors(v)[0],
        }));
    }
    if let Some(&(u, v)) = g
        .edges()
        .iter()
        .find(|&&(u, v)| g.degree(u) == 2 && g.degree(v) == 2)
    {
        return Ok(Some(ConfigurationMatch::C1 { u, v }));
    }
    for u in g.vertices().filter(|&u| g.degree(u) == 2) {
        let (a, b) = (g.neighbors(u)[0], g.neighbors(u)[1]);
        for (v1, v2) in [(a, b), (b, a)] {
            if g.degree(v1) == 3 && g.has_edge(v1, v2) {
                return Ok(Some(ConfigurationMatch::C2 { u, v1, v2 }));
            }
        }
    }
    for x in g.vertices().filter(|&x| g.degree(x) == 4) {
        // (u, w): degree-2 neighbor u of x whose other neighbor w is also adjacent to x
        let ears: Vec<(Vertex, Vertex)> = g
            .neighbors(x)
            .iter()
            .filter(|&&u| g.degree(u) == 2)
            .filter_map(|&u| {
                let w = *g.neighbors(u).iter().find(|&&w| w != x)?;
                g.has_edge(w, x).then_some((u, w))
            })
            .collect();
        for (i, &(u1, v1)) in ears.iter().enumerate() {
            for &(u2, v2) in &ears[i + 1..] {
                let roles = [u1, v1, u2, v2];
                let distinct = (0..4).all(|a| (a + 1..4).all(|b| roles[a] != roles[b]));
                if distinct {
                    return Ok(Some(ConfigurationMatch::C3 { x, u1, v1, u2, v2 }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_cycle, make_fan, make_path};

    #[test]
    fn path_gives_leaf_then_c1() {
        let g = make_path(4).unwrap();
        assert_eq!(
            find_configuration(&g).unwrap(),
            Some(ConfigurationMatch::Leaf { v: 0, u: 1 })
        );
        let inner = g.without_edge(0, 1).without_edge(2, 3);
        // middle edge: both endpoints now have degree 1
        assert!(matches!(
            find_configuration(&inner).unwrap(),
            Some(ConfigurationMatch::Leaf { v: 1, u: 2 })
        ));
    }

    #[test]
    fn cycle_gives_c1() {
        assert_eq!(
            find_configuration(&make_cycle(4).unwrap()).unwrap(),
            Some(ConfigurationMatch::C1 { u: 0, v: 1 })
        );
    }

    #[test]
    fn fan_gives_c2() {
        let g = make_fan(4).unwrap();
        assert_eq!(
            find_configuration(&g).unwrap(),
            Some(ConfigurationMatch::C2 { u: 1, v1: 2, v2: 0 })
        );
    }

    #[test]
    fn two_ears_on_a_degree_four_vertex() {
        // x = 0 with ears 1 (on 0-2) and 3 (on 0-4); 2 and 4 close the outer cycle via 5
        let g = Graph::new(
            6,
            [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (2, 5), (4, 5), (2, 4)],
        )
        .unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(
            find_configuration(&g).unwrap(),
            Some(ConfigurationMatch::C3 { x: 0, u1: 1, v1: 2, u2: 3, v2: 4 })
        );
    }

    #[test]
    fn k4_has_none() {
        let g = crate::generators::make_complete(4).unwrap();
        assert_eq!(find_configuration(&g).unwrap(), None);
        assert!(find_configuration(&Graph::empty(3)).is_err());
    }
}
