use std::fmt::Write;

use crate::graph::Graph;
use crate::labelling::{Element, TotalLabelling};

/// Graphviz rendering with vertex and edge colors as labels.
pub fn render_dot(g: &Graph, c: &TotalLabelling) -> String {
    let label = |x: Element| c.get(x).map_or_else(|| "?".to_string(), |v| v.to_string());
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        writeln!(out, "  {v} [label=\"{v}: {}\"];", label(Element::Vertex(v))).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v} [label=\"{}\"];", label(Element::Edge(u, v))).unwrap();
    }
    out.push_str("}\n");
    out
}
