//! Elements, labellings, list assignments and the (p,1)-total validity
//! predicate.
//!
//! Every other module decides validity through [`is_valid`]; solvers and
//! labellers re-check their output with it before returning.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::graph::{normalize, Graph, Vertex};

/// A label. Colors are natural numbers with no upper bound.
pub type Color = u32;

/// A vertex or an edge of a host graph.
///
/// The derived order puts all vertices before all edges, each group ordered
/// lexicographically; this is the canonical element order used for
/// serialization and tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(Vertex),
    /// Normalized so that the first endpoint is the smaller one.
    Edge(Vertex, Vertex),
}

impl Element {
    pub fn edge(a: Vertex, b: Vertex) -> Element {
        let (u, v) = normalize(a, b);
        Element::Edge(u, v)
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, Element::Vertex(_))
    }

    /// Parses the `v:ID` / `e:U-V` key form.
    pub fn parse_key(key: &str) -> Option<Element> {
        if let Some(rest) = key.strip_prefix("v:") {
            return rest.parse().ok().map(Element::Vertex);
        }
        let rest = key.strip_prefix("e:")?;
        let (a, b) = rest.split_once('-')?;
        let (a, b) = (a.parse().ok()?, b.parse().ok()?);
        (a != b).then(|| Element::edge(a, b))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v:{v}"),
            Element::Edge(u, v) => write!(f, "e:{u}-{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("element {0} is not part of the host graph")]
    UnknownElement(Element),
    #[error("element {0} has no list")]
    MissingList(Element),
    #[error("element {0} has an empty list")]
    EmptyList(Element),
}

impl Graph {
    /// All elements in canonical order: vertices, then edges.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.vertices()
            .map(Element::Vertex)
            .chain(self.edges().iter().map(|&(u, v)| Element::Edge(u, v)))
    }

    /// Dense index of an element: vertices `0..n`, edges `n..n+m`.
    pub fn element_id(&self, x: Element) -> Option<usize> {
        match x {
            Element::Vertex(v) => (v < self.n()).then_some(v),
            Element::Edge(u, v) => self.edge_index(u, v).map(|i| self.n() + i),
        }
    }

    pub fn element_at(&self, id: usize) -> Element {
        if id < self.n() {
            Element::Vertex(id)
        } else {
            let (u, v) = self.edges()[id - self.n()];
            Element::Edge(u, v)
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        self.element_id(x).is_some()
    }
}

/// The colors at distance less than `p` from `x`: `x-(p-1) ..= x+(p-1)`.
///
/// Members may be negative. For `p = 0` the range is empty.
pub fn p_ball(x: Color, p: u32) -> RangeInclusive<i64> {
    let (x, p) = (i64::from(x), i64::from(p));
    (x - (p - 1))..=(x + (p - 1))
}

/// `|a - b| < p`, i.e. `b ∈ p_ball(a, p)`.
#[inline]
pub fn within_ball(a: Color, b: Color, p: u32) -> bool {
    a.abs_diff(b) < p
}

/// A partial or total map from elements to colors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TotalLabelling {
    labels: BTreeMap<Element, Color>,
}

impl TotalLabelling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, x: Element) -> Option<Color> {
        self.labels.get(&x).copied()
    }

    pub fn set(&mut self, x: Element, c: Color) {
        self.labels.insert(x, c);
    }

    pub fn unset(&mut self, x: Element) -> Option<Color> {
        self.labels.remove(&x)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, Color)> + '_ {
        self.labels.iter().map(|(&x, &c)| (x, c))
    }

    /// Largest color used, if any.
    pub fn max_color(&self) -> Option<Color> {
        self.labels.values().copied().max()
    }

    pub fn min_color(&self) -> Option<Color> {
        self.labels.values().copied().min()
    }

    /// `max - min` over the used colors; zero when empty.
    pub fn span(&self) -> Color {
        match (self.min_color(), self.max_color()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Adds `t` to every color.
    pub fn shifted(&self, t: Color) -> TotalLabelling {
        self.iter().map(|(x, c)| (x, c + t)).collect()
    }

    /// Keeps only the labels of elements present in `g`.
    pub fn restricted_to(&self, g: &Graph) -> TotalLabelling {
        self.iter().filter(|&(x, _)| g.contains(x)).collect()
    }
}

impl FromIterator<(Element, Color)> for TotalLabelling {
    fn from_iter<I: IntoIterator<Item = (Element, Color)>>(iter: I) -> Self {
        TotalLabelling {
            labels: iter.into_iter().collect(),
        }
    }
}

/// Per-element lists of allowed colors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ListAssignment {
    lists: BTreeMap<Element, BTreeSet<Color>>,
}

impl ListAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// The same list `colors` on every element of `g`.
    pub fn uniform(g: &Graph, colors: impl IntoIterator<Item = Color>) -> Self {
        let list: BTreeSet<Color> = colors.into_iter().collect();
        g.elements().map(|x| (x, list.clone())).collect()
    }

    /// `{0..=k}` on every element.
    pub fn full_range(g: &Graph, k: Color) -> Self {
        Self::uniform(g, 0..=k)
    }

    pub fn get(&self, x: Element) -> Option<&BTreeSet<Color>> {
        self.lists.get(&x)
    }

    pub fn set(&mut self, x: Element, list: BTreeSet<Color>) {
        self.lists.insert(x, list);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, &BTreeSet<Color>)> + '_ {
        self.lists.iter().map(|(&x, l)| (x, l))
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    /// Smallest list size, or `None` when there are no lists.
    pub fn min_size(&self) -> Option<usize> {
        self.lists.values().map(BTreeSet::len).min()
    }

    /// `Some(k)` when every list has exactly `k` colors.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.min_size()?;
        self.lists.values().all(|l| l.len() == k).then_some(k)
    }

    pub fn shifted(&self, t: Color) -> ListAssignment {
        self.iter()
            .map(|(x, l)| (x, l.iter().map(|c| c + t).collect()))
            .collect()
    }

    /// Checks that every element of `g` has a non-empty list and that no
    /// list belongs to a foreign element.
    pub fn check(&self, g: &Graph) -> Result<(), LabelError> {
        for x in self.lists.keys() {
            if !g.contains(*x) {
                return Err(LabelError::UnknownElement(*x));
            }
        }
        for x in g.elements() {
            match self.lists.get(&x) {
                None => return Err(LabelError::MissingList(x)),
                Some(l) if l.is_empty() => return Err(LabelError::EmptyList(x)),
                Some(_) => {}
            }
        }
        Ok(())
    }
}

impl FromIterator<(Element, BTreeSet<Color>)> for ListAssignment {
    fn from_iter<I: IntoIterator<Item = (Element, BTreeSet<Color>)>>(iter: I) -> Self {
        ListAssignment {
            lists: iter.into_iter().collect(),
        }
    }
}

/// The three constraint families of a (p,1)-total labelling, plus the
/// completeness requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constraint {
    /// Adjacent vertices share a color.
    VertexVertex,
    /// Adjacent edges share a color.
    EdgeEdge,
    /// An incident vertex and edge are closer than `p`.
    VertexEdge,
    /// Element left unlabelled while a total labelling was required.
    Unlabelled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub constraint: Constraint,
    pub first: Element,
    pub second: Option<Element>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a (possibly partial) labelling against the (p,1)-total
/// constraints. Only pairs with both elements labelled are checked; with
/// `total` set, every element must also be labelled. All violations are
/// reported.
pub fn is_valid(g: &Graph, p: u32, c: &TotalLabelling, total: bool) -> Result<Verdict, LabelError> {
    for (x, _) in c.iter() {
        if !g.contains(x) {
            return Err(LabelError::UnknownElement(x));
        }
    }
    let mut violations = Vec::new();
    let mut push = |constraint, first, second| {
        violations.push(Violation {
            constraint,
            first,
            second: Some(second),
        })
    };
    for &(u, v) in g.edges() {
        let e = Element::Edge(u, v);
        let (cu, cv, ce) = (c.get(Element::Vertex(u)), c.get(Element::Vertex(v)), c.get(e));
        if let (Some(a), Some(b)) = (cu, cv) {
            if a == b {
                push(Constraint::VertexVertex, Element::Vertex(u), Element::Vertex(v));
            }
        }
        for (w, cw) in [(u, cu), (v, cv)] {
            if let (Some(a), Some(b)) = (cw, ce) {
                if within_ball(a, b, p) {
                    push(Constraint::VertexEdge, Element::Vertex(w), e);
                }
            }
        }
    }
    for w in g.vertices() {
        let nb = g.neighbors(w);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                let (e1, e2) = (Element::edge(w, a), Element::edge(w, b));
                if let (Some(x), Some(y)) = (c.get(e1), c.get(e2)) {
                    if x == y {
                        push(Constraint::EdgeEdge, e1.min(e2), e1.max(e2));
                    }
                }
            }
        }
    }
    if total {
        for x in g.elements() {
            if c.get(x).is_none() {
                violations.push(Violation {
                    constraint: Constraint::Unlabelled,
                    first: x,
                    second: None,
                });
            }
        }
    }
    Ok(Verdict { violations })
}

/// Shorthand for a complete, valid labelling check.
pub fn is_valid_total(g: &Graph, p: u32, c: &TotalLabelling) -> bool {
    is_valid(g, p, c, true).map(|v| v.is_valid()).unwrap_or(false)
}

/// True iff every labelled element's color is in its list.
pub fn respects_lists(c: &TotalLabelling, lists: &ListAssignment) -> bool {
    c.iter()
        .all(|(x, col)| lists.get(x).is_some_and(|l| l.contains(&col)))
}

/// Checks an L(p,1) vertex labelling: adjacent labels differ by at least `p`
/// and labels at distance exactly two are distinct. Unlabelled vertices are
/// skipped.
pub fn lp1_is_valid(g: &Graph, p: u32, labels: &BTreeMap<Vertex, Color>) -> bool {
    for &(u, v) in g.edges() {
        if let (Some(a), Some(b)) = (labels.get(&u), labels.get(&v)) {
            if a.abs_diff(*b) < p {
                return false;
            }
        }
    }
    for w in g.vertices() {
        let nb = g.neighbors(w);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    // distance one, handled above
                    continue;
                }
                if let (Some(x), Some(y)) = (labels.get(&a), labels.get(&b)) {
                    if x == y {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::make_path;

    fn p2_labels(u: Color, e: Color, v: Color) -> TotalLabelling {
        [
            (Element::Vertex(0), u),
            (Element::Edge(0, 1), e),
            (Element::Vertex(1), v),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn ball_values() {
        assert_eq!(p_ball(5, 2).collect::<Vec<_>>(), vec![4, 5, 6]);
        assert_eq!(p_ball(9, 1).collect::<Vec<_>>(), vec![9]);
        assert_eq!(p_ball(0, 3).collect::<Vec<_>>(), vec![-2, -1, 0, 1, 2]);
        assert_eq!(p_ball(4, 0).count(), 0);
        assert!(within_ball(5, 6, 2) && !within_ball(5, 7, 2));
    }

    #[test]
    fn element_order_and_keys() {
        let mut xs = vec![Element::edge(2, 0), Element::Vertex(3), Element::edge(0, 1), Element::Vertex(0)];
        xs.sort();
        assert_eq!(
            xs,
            vec![Element::Vertex(0), Element::Vertex(3), Element::Edge(0, 1), Element::Edge(0, 2)]
        );
        assert_eq!(Element::parse_key("e:3-1"), Some(Element::Edge(1, 3)));
        assert_eq!(Element::parse_key("v:12"), Some(Element::Vertex(12)));
        assert_eq!(Element::parse_key("e:2-2"), None);
        assert_eq!(Element::Edge(1, 3).to_string(), "e:1-3");
    }

    #[test]
    fn single_edge_validity() {
        let g = make_path(2).unwrap();
        assert!(is_valid(&g, 2, &p2_labels(0, 2, 4), true).unwrap().is_valid());
        let bad = is_valid(&g, 2, &p2_labels(0, 1, 3), true).unwrap();
        assert_eq!(
            bad.violations,
            vec![Violation {
                constraint: Constraint::VertexEdge,
                first: Element::Vertex(0),
                second: Some(Element::Edge(0, 1)),
            }]
        );
        assert!(is_valid(&g, 2, &TotalLabelling::new(), false).unwrap().is_valid());
        let incomplete = is_valid(&g, 2, &TotalLabelling::new(), true).unwrap();
        assert_eq!(incomplete.violations.len(), 3);
    }

    #[test]
    fn foreign_element_is_a_domain_error() {
        let g = make_path(2).unwrap();
        let c: TotalLabelling = [(Element::Vertex(7), 0)].into_iter().collect();
        assert_eq!(
            is_valid(&g, 1, &c, false),
            Err(LabelError::UnknownElement(Element::Vertex(7)))
        );
    }

    #[test]
    fn zero_separation_drops_vertex_edge_constraint() {
        let g = make_path(2).unwrap();
        assert!(is_valid(&g, 0, &p2_labels(0, 0, 1), true).unwrap().is_valid());
        assert!(!is_valid(&g, 0, &p2_labels(0, 0, 0), true).unwrap().is_valid());
    }

    #[test]
    fn adjacent_edges_checked() {
        let g = make_path(3).unwrap();
        let c: TotalLabelling = [(Element::Edge(0, 1), 3), (Element::Edge(1, 2), 3)]
            .into_iter()
            .collect();
        let v = is_valid(&g, 1, &c, false).unwrap();
        assert_eq!(v.violations[0].constraint, Constraint::EdgeEdge);
    }

    #[test]
    fn list_membership() {
        let g = make_path(1).unwrap();
        let lists = ListAssignment::uniform(&g, [0, 1]);
        let ok: TotalLabelling = [(Element::Vertex(0), 0)].into_iter().collect();
        let bad: TotalLabelling = [(Element::Vertex(0), 2)].into_iter().collect();
        assert!(respects_lists(&ok, &lists));
        assert!(!respects_lists(&bad, &lists));
        assert!(lists.check(&g).is_ok());
        assert_eq!(lists.uniform_size(), Some(2));
    }

    #[test]
    fn lp1_examples() {
        let g = make_path(3).unwrap();
        let lab = |a, b, c| BTreeMap::from([(0, a), (1, b), (2, c)]);
        assert!(lp1_is_valid(&g, 2, &lab(0, 2, 4)));
        assert!(!lp1_is_valid(&g, 2, &lab(0, 2, 0)));
        assert!(lp1_is_valid(&make_path(1).unwrap(), 5, &BTreeMap::from([(0, 0)])));
    }
}
