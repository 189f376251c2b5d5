//! The incidence graph: every edge subdivided once.
//!
//! Base vertices keep their indices and the subdivision vertex of the `i`-th
//! edge (lexicographic order) is `n + i`, so a derived vertex index coincides
//! with the dense element id of its preimage.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};
use crate::labelling::{Color, Element, ListAssignment, TotalLabelling};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMap {
    pub base: Graph,
    pub derived: Graph,
    pub vertex_image: Vec<Vertex>,
    pub edge_image: Vec<Vertex>,
}

pub fn incidence_graph(g: &Graph) -> IncidenceMap {
    let n = g.n();
    let vertex_image: Vec<Vertex> = (0..n).collect();
    let edge_image: Vec<Vertex> = (n..n + g.m()).collect();
    let derived_edges = g
        .edges()
        .iter()
        .zip(&edge_image)
        .flat_map(|(&(u, v), &w)| [(u, w), (w, v)]);
    let derived = Graph::new(n + g.m(), derived_edges).expect("subdivision is simple");
    IncidenceMap {
        base: g.clone(),
        derived,
        vertex_image,
        edge_image,
    }
}

impl IncidenceMap {
    /// Derived vertex representing a base element.
    pub fn image(&self, x: Element) -> Option<Vertex> {
        match x {
            Element::Vertex(v) => self.vertex_image.get(v).copied(),
            Element::Edge(u, v) => self.base.edge_index(u, v).map(|i| self.edge_image[i]),
        }
    }

    /// Base element represented by a derived vertex.
    pub fn preimage(&self, w: Vertex) -> Option<Element> {
        if let Some(v) = self.vertex_image.iter().position(|&x| x == w) {
            return Some(Element::Vertex(v));
        }
        let i = self.edge_image.iter().position(|&x| x == w)?;
        let (u, v) = self.base.edges()[i];
        Some(Element::Edge(u, v))
    }

    pub fn transport_labelling(&self, c: &TotalLabelling) -> BTreeMap<Vertex, Color> {
        c.iter()
            .filter_map(|(x, col)| self.image(x).map(|w| (w, col)))
            .collect()
    }

    pub fn transport_labelling_back(&self, labels: &BTreeMap<Vertex, Color>) -> TotalLabelling {
        labels
            .iter()
            .filter_map(|(&w, &col)| self.preimage(w).map(|x| (x, col)))
            .collect()
    }

    pub fn transport_lists(&self, lists: &ListAssignment) -> BTreeMap<Vertex, Vec<Color>> {
        lists
            .iter()
            .filter_map(|(x, l)| self.image(x).map(|w| (w, l.iter().copied().collect())))
            .collect()
    }

    pub fn transport_lists_back(&self, lists: &BTreeMap<Vertex, Vec<Color>>) -> ListAssignment {
        lists
            .iter()
            .filter_map(|(&w, l)| self.preimage(w).map(|x| (x, l.iter().copied().collect())))
            .collect()
    }
}
