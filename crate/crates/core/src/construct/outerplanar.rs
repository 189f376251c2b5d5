//! List labelling of outerplanar graphs with `Δ ≥ p + 3` from lists of size
//! `Δ + 2p - 1`.
//!
//! The graph is peeled one edge at a time: find a leaf or one of the
//! configurations C1–C3, delete the corresponding edge, and continue until no
//! edges remain. Labelling then runs in reverse. Isolated vertices take their
//! least color, and each deleted edge is restored by recoloring the few
//! elements around it from reduced lists. List sizes stay fixed at
//! `Δ + 2p - 1` for the original `Δ` throughout.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{checked, find_configuration, require_list_size, stuck, ConfigurationMatch, ConstructError};
use crate::graph::{Graph, Vertex};
use crate::labelling::{is_valid, within_ball, Color, Element, ListAssignment, TotalLabelling};
use crate::solver::{solve_list, solve_list_extending, Outcome};

/// Size of one reduced list at an extension step, with the lower bound the
/// counting argument promises for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedList {
    pub element: String,
    pub name: &'static str,
    pub size: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Resolution {
    /// The configuration's own case analysis succeeded.
    Direct,
    /// C3: succeeded after exchanging the colors of `xv1` and `u1v1`.
    Interchange,
    /// Recolored a neighborhood of the configuration with the exact solver.
    LocalRepair,
    /// Re-solved the whole current graph with the exact solver.
    FullResolve,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditStep {
    pub configuration: ConfigurationMatch,
    pub reduced: Vec<ReducedList>,
    pub resolution: Resolution,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OuterplanarAudit {
    /// Steps in labelling order (the reverse of the peeling order).
    pub steps: Vec<AuditStep>,
    /// Extensions that needed the exact solver (local or full).
    pub fallbacks: usize,
    pub full_resolves: usize,
    /// C3 interchanges performed and kept.
    pub interchanges: usize,
    /// C3 interchanges undone because the swapped labelling was invalid.
    pub rejected_interchanges: usize,
    /// Reduced lists smaller than their promised bound.
    pub bound_shortfalls: usize,
    /// C3 dead ends whose reduced lists did not have the forced shape
    /// `L'(u1) = {m..m+p}`, `L'(xu1) = {m+1..m+p-1}`.
    pub c3_shape_mismatches: usize,
}

struct Extender<'a> {
    p: u32,
    delta: usize,
    lists: &'a ListAssignment,
    audit: OuterplanarAudit,
}

fn edge(a: Vertex, b: Vertex) -> Element {
    Element::edge(a, b)
}

fn vertex(v: Vertex) -> Element {
    Element::Vertex(v)
}

fn color(c: &TotalLabelling, x: Element) -> Color {
    c.get(x).unwrap_or_else(|| panic!("{x} should be colored"))
}

fn other_neighbor(h: &Graph, v: Vertex, not: &[Vertex]) -> Vertex {
    *h.neighbors(v)
        .iter()
        .find(|w| !not.contains(w))
        .expect("configuration degrees guarantee another neighbor")
}

impl Extender<'_> {
    fn list(&self, x: Element) -> &BTreeSet<Color> {
        self.lists.get(x).expect("lists checked")
    }

    /// `L(x)` minus the given colors and the p-balls around `centers`.
    fn reduced(&self, x: Element, colors: &[Color], centers: &[Color]) -> BTreeSet<Color> {
        self.list(x)
            .iter()
            .copied()
            .filter(|c| !colors.contains(c) && !centers.iter().any(|&z| within_ball(z, *c, self.p)))
            .collect()
    }

    fn note(&mut self, reduced: &mut Vec<ReducedList>, x: Element, name: &'static str, set: &BTreeSet<Color>, bound: usize) {
        if set.len() < bound {
            self.audit.bound_shortfalls += 1;
        }
        reduced.push(ReducedList {
            element: x.to_string(),
            name,
            size: set.len(),
            bound,
        });
    }

    fn least_outside(&self, set: &BTreeSet<Color>, center: Color) -> Option<Color> {
        set.iter().copied().find(|&c| !within_ball(center, c, self.p))
    }

    /// Restores edge `uv` of a leaf `v`.
    fn leaf(&mut self, h: &Graph, c: &mut TotalLabelling, v: Vertex, u: Vertex, reduced: &mut Vec<ReducedList>) -> bool {
        c.unset(vertex(v));
        let e = edge(u, v);
        let cu = color(c, vertex(u));
        let used: Vec<Color> = h
            .neighbors(u)
            .iter()
            .filter(|&&w| w != v)
            .map(|&w| color(c, edge(u, w)))
            .collect();
        let le = self.reduced(e, &used, &[cu]);
        let k = self.list_size_k();
        self.note(reduced, e, "L'(e)", &le, k.saturating_sub(self.delta - 1 + 2 * self.p as usize - 1));
        let Some(ce) = le.first().copied() else {
            return false;
        };
        let lv = self.reduced(vertex(v), &[cu], &[ce]);
        self.note(reduced, vertex(v), "L'(v)", &lv, self.delta - 1);
        let Some(cv) = lv.first().copied() else {
            return false;
        };
        c.set(e, ce);
        c.set(vertex(v), cv);
        true
    }

    fn list_size_k(&self) -> usize {
        self.delta + 2 * self.p as usize - 1
    }

    /// Restores edge `uv` between two degree-2 vertices.
    fn c1(&mut self, h: &Graph, c: &mut TotalLabelling, u: Vertex, v: Vertex, reduced: &mut Vec<ReducedList>) -> bool {
        let p = self.p as usize;
        c.unset(vertex(u));
        c.unset(vertex(v));
        let x = other_neighbor(h, u, &[v]);
        let y = other_neighbor(h, v, &[u]);
        let (cux, cvy) = (color(c, edge(u, x)), color(c, edge(v, y)));
        let lu = self.reduced(vertex(u), &[color(c, vertex(x))], &[cux]);
        let lv = self.reduced(vertex(v), &[color(c, vertex(y))], &[cvy]);
        let e = edge(u, v);
        let le = self.reduced(e, &[cux, cvy], &[]);
        self.note(reduced, vertex(u), "L'(u)", &lu, p + 2);
        self.note(reduced, vertex(v), "L'(v)", &lv, p + 2);
        self.note(reduced, e, "L'(e)", &le, 3 * p);

        let Some(m) = lu.iter().chain(&lv).chain(&le).copied().min() else {
            return false;
        };
        let pick = if !lu.contains(&m) && !lv.contains(&m) {
            // Case 1: the edge takes m; u and v pick distinct colors clear of it.
            let Some(cu) = self.least_outside(&lu, m) else {
                return false;
            };
            let Some(cv) = lv.iter().copied().find(|&z| z != cu && !within_ball(m, z, self.p)) else {
                return false;
            };
            (cu, cv, m)
        } else {
            // Case 2: the endpoint holding m takes it (u when both do).
            let (first, first_list, second_list) = if lu.contains(&m) { (u, &lu, &lv) } else { (v, &lv, &lu) };
            debug_assert!(first_list.contains(&m));
            let second_rest: BTreeSet<Color> = second_list.iter().copied().filter(|&z| z != m).collect();
            let edge_rest: BTreeSet<Color> = le.iter().copied().filter(|&z| !within_ball(m, z, self.p)).collect();
            let Some(m1) = second_rest.iter().chain(&edge_rest).copied().min() else {
                return false;
            };
            let (c_second, c_edge) = if second_rest.contains(&m1) {
                // Case 2.1
                match self.least_outside(&edge_rest, m1) {
                    Some(ce) => (m1, ce),
                    None => return false,
                }
            } else {
                // Case 2.2
                match self.least_outside(&second_rest, m1) {
                    Some(cs) => (cs, m1),
                    None => return false,
                }
            };
            if first == u {
                (m, c_second, c_edge)
            } else {
                (c_second, m, c_edge)
            }
        };
        c.set(vertex(u), pick.0);
        c.set(vertex(v), pick.1);
        c.set(e, pick.2);
        true
    }

    /// Restores edge `u v1` of a triangle `u v1 v2` with `d(u)=2`, `d(v1)=3`.
    fn c2(&mut self, h: &Graph, c: &mut TotalLabelling, u: Vertex, v1: Vertex, v2: Vertex, reduced: &mut Vec<ReducedList>) -> bool {
        let p = self.p as usize;
        c.unset(vertex(u));
        let z = other_neighbor(h, v1, &[u, v2]);
        let cuv2 = color(c, edge(u, v2));
        let lu = self.reduced(vertex(u), &[color(c, vertex(v1)), color(c, vertex(v2))], &[cuv2]);
        let e = edge(u, v1);
        let le = self.reduced(
            e,
            &[color(c, edge(v1, z)), color(c, edge(v1, v2)), cuv2],
            &[color(c, vertex(v1))],
        );
        self.note(reduced, vertex(u), "L'(u)", &lu, p + 1);
        self.note(reduced, e, "L'(uv1)", &le, p);
        match self.min_first_pair(&lu, &le) {
            Some((cu, ce)) => {
                c.set(vertex(u), cu);
                c.set(e, ce);
                true
            }
            None => false,
        }
    }

    /// Two-element rule: the global minimum `m` goes to the edge when the
    /// edge list holds it, otherwise to the vertex; the other element takes
    /// its least color clear of `m`.
    fn min_first_pair(&self, vertex_list: &BTreeSet<Color>, edge_list: &BTreeSet<Color>) -> Option<(Color, Color)> {
        let m = vertex_list.iter().chain(edge_list).copied().min()?;
        if edge_list.contains(&m) {
            Some((self.least_outside(vertex_list, m)?, m))
        } else {
            Some((m, self.least_outside(edge_list, m)?))
        }
    }

    fn c3_lists(&self, c: &TotalLabelling, x: Vertex, u1: Vertex, v1: Vertex, u2: Vertex, v2: Vertex) -> (BTreeSet<Color>, BTreeSet<Color>) {
        let lu1 = self.reduced(
            vertex(u1),
            &[color(c, vertex(v1)), color(c, vertex(x))],
            &[color(c, edge(u1, v1))],
        );
        let le = self.reduced(
            edge(x, u1),
            &[
                color(c, edge(v1, x)),
                color(c, edge(v1, u1)),
                color(c, edge(x, v2)),
                color(c, edge(x, u2)),
            ],
            &[color(c, vertex(x))],
        );
        (lu1, le)
    }

    /// Lexicographically least `(c(u1), c(xu1))` at distance at least `p`.
    fn pair_search(&self, lu1: &BTreeSet<Color>, le: &BTreeSet<Color>) -> Option<(Color, Color)> {
        lu1.iter()
            .find_map(|&a| self.least_outside(le, a).map(|b| (a, b)))
    }

    fn check_c3_shape(&mut self, lu1: &BTreeSet<Color>, le: &BTreeSet<Color>) {
        let p = self.p as usize;
        if self.p < 2 || lu1.len() < p + 1 || le.len() + 1 < p {
            return;
        }
        let m = *lu1.first().expect("non-empty");
        let want_u: BTreeSet<Color> = (m..=m + self.p).collect();
        let want_e: BTreeSet<Color> = (m + 1..m + self.p).collect();
        if *lu1 != want_u || *le != want_e {
            self.audit.c3_shape_mismatches += 1;
        }
    }

    /// Restores edge `x u1` of two ears `u1 v1 x`, `u2 v2 x` at a degree-4 `x`.
    #[allow(clippy::too_many_arguments)]
    fn c3(
        &mut self,
        h: &Graph,
        c: &mut TotalLabelling,
        (x, u1, v1, u2, v2): (Vertex, Vertex, Vertex, Vertex, Vertex),
        reduced: &mut Vec<ReducedList>,
    ) -> Option<Resolution> {
        let p = self.p as usize;
        c.unset(vertex(u1));
        let (lu1, le) = self.c3_lists(c, x, u1, v1, u2, v2);
        self.note(reduced, vertex(u1), "L'(u1)", &lu1, p + 1);
        self.note(reduced, edge(x, u1), "L'(xu1)", &le, p.saturating_sub(1));
        if let Some((a, b)) = self.pair_search(&lu1, &le) {
            c.set(vertex(u1), a);
            c.set(edge(x, u1), b);
            return Some(Resolution::Direct);
        }
        self.check_c3_shape(&lu1, &le);

        let (exv1, eu1v1) = (edge(x, v1), edge(u1, v1));
        let (old_xv1, old_u1v1) = (color(c, exv1), color(c, eu1v1));
        c.set(exv1, old_u1v1);
        c.set(eu1v1, old_xv1);
        let swapped_ok = is_valid(h, self.p, c, false).map(|v| v.is_valid()).unwrap_or(false);
        if !swapped_ok {
            c.set(exv1, old_xv1);
            c.set(eu1v1, old_u1v1);
            self.audit.rejected_interchanges += 1;
            return None;
        }
        let (lu1, le) = self.c3_lists(c, x, u1, v1, u2, v2);
        self.note(reduced, vertex(u1), "L''(u1)", &lu1, p + 1);
        self.note(reduced, edge(x, u1), "L''(xu1)", &le, p.saturating_sub(1));
        let (a, b) = self.pair_search(&lu1, &le)?;
        self.audit.interchanges += 1;
        c.set(vertex(u1), a);
        c.set(edge(x, u1), b);
        Some(Resolution::Interchange)
    }

    /// Recolors the configuration's vertices and every edge touching them,
    /// keeping the rest of the labelling; then, failing that, the whole of `h`.
    fn fallback(&mut self, h: &Graph, c: &mut TotalLabelling, config: &ConfigurationMatch) -> Result<Resolution, ConstructError> {
        self.audit.fallbacks += 1;
        let region: Vec<Vertex> = match *config {
            ConfigurationMatch::Leaf { v, u } => vec![v, u],
            ConfigurationMatch::C1 { u, v } => vec![u, v],
            ConfigurationMatch::C2 { u, v1, v2 } => vec![u, v1, v2],
            ConfigurationMatch::C3 { x, u1, v1, u2, v2 } => vec![x, u1, v1, u2, v2],
        };
        let h_lists: ListAssignment = h
            .elements()
            .map(|x| (x, self.list(x).clone()))
            .collect();
        let mut fixed = TotalLabelling::new();
        for x in h.elements() {
            let touches = match x {
                Element::Vertex(v) => region.contains(&v),
                Element::Edge(a, b) => region.contains(&a) || region.contains(&b),
            };
            if !touches {
                if let Some(col) = c.get(x) {
                    fixed.set(x, col);
                }
            }
        }
        let local = solve_list_extending(h, self.p, &h_lists, &fixed)
            .map_err(|e| ConstructError::TheoremViolation(e.to_string()))?;
        if let Outcome::Labelled(found) = local.outcome {
            *c = found;
            return Ok(Resolution::LocalRepair);
        }
        self.audit.full_resolves += 1;
        let full = solve_list(h, self.p, &h_lists).map_err(|e| ConstructError::TheoremViolation(e.to_string()))?;
        match full.outcome {
            Outcome::Labelled(found) => {
                *c = found;
                Ok(Resolution::FullResolve)
            }
            Outcome::Infeasible => Err(ConstructError::TheoremViolation(format!(
                "subgraph with {} edges admits no list labelling",
                h.m()
            ))),
        }
    }

    fn extend(&mut self, h: &Graph, c: &mut TotalLabelling, config: ConfigurationMatch) -> Result<(), ConstructError> {
        let mut reduced = Vec::new();
        let before = c.clone();
        let resolution = match config {
            ConfigurationMatch::Leaf { v, u } => self.leaf(h, c, v, u, &mut reduced).then_some(Resolution::Direct),
            ConfigurationMatch::C1 { u, v } => self.c1(h, c, u, v, &mut reduced).then_some(Resolution::Direct),
            ConfigurationMatch::C2 { u, v1, v2 } => self.c2(h, c, u, v1, v2, &mut reduced).then_some(Resolution::Direct),
            ConfigurationMatch::C3 { x, u1, v1, u2, v2 } => self.c3(h, c, (x, u1, v1, u2, v2), &mut reduced),
        };
        let resolution = match resolution {
            Some(r) => r,
            None => {
                *c = before;
                self.fallback(h, c, &config)?
            }
        };
        self.audit.steps.push(AuditStep {
            configuration: config,
            reduced,
            resolution,
        });
        Ok(())
    }
}

/// List labelling of an outerplanar graph with `Δ ≥ p + 3` from lists of
/// size at least `Δ + 2p - 1`.
///
/// Outerplanarity is the caller's responsibility; a non-outerplanar input
/// surfaces as [`ConstructError::NoConfiguration`] when the peeling gets stuck.
pub fn label_outerplanar_list(
    g: &Graph,
    p: u32,
    lists: &ListAssignment,
) -> Result<(TotalLabelling, OuterplanarAudit), ConstructError> {
    if p == 0 {
        return Err(ConstructError::InvalidParameter("outerplanar labeller needs p >= 1".into()));
    }
    let delta = g.max_degree();
    if delta < p as usize + 3 {
        return Err(ConstructError::DegreeTooSmall { delta, p });
    }
    require_list_size(g, lists, delta + 2 * p as usize - 1)?;

    let mut levels: Vec<(Graph, ConfigurationMatch)> = Vec::new();
    let mut working = g.clone();
    while working.m() > 0 {
        let config = find_configuration(&working)?.ok_or(ConstructError::NoConfiguration)?;
        let next = match config {
            ConfigurationMatch::Leaf { v, u } => working.without_edge(u, v),
            ConfigurationMatch::C1 { u, v } => working.without_edge(u, v),
            ConfigurationMatch::C2 { u, v1, .. } => working.without_edge(u, v1),
            ConfigurationMatch::C3 { x, u1, .. } => working.without_edge(x, u1),
        };
        levels.push((std::mem::replace(&mut working, next), config));
    }

    let mut ext = Extender {
        p,
        delta,
        lists,
        audit: OuterplanarAudit::default(),
    };
    let mut c = TotalLabelling::new();
    for v in g.vertices() {
        let x = vertex(v);
        let least = ext.list(x).first().copied().ok_or_else(|| stuck("outerplanar labeller", x))?;
        c.set(x, least);
    }
    while let Some((h, config)) = levels.pop() {
        ext.extend(&h, &mut c, config)?;
    }
    let c = checked(g, p, Some(lists), c, "outerplanar labeller")?;
    Ok((c, ext.audit))
}
