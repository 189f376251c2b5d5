//! Backtracking search over separation constraints `|c(a) - c(b)| >= s`.
//!
//! Both the (p,1)-total problem on a graph and the L(p,1) problem on its
//! incidence graph are binary CSPs of this form. Forward checking prunes the
//! domains of unassigned neighbors; the next variable is the one with the
//! smallest current domain, ties broken by index; values are tried in
//! ascending order.

use crate::graph::Graph;
use crate::labelling::Color;

#[derive(Debug, Clone)]
pub struct SeparationCsp {
    domains: Vec<Vec<Color>>,
    constraints: Vec<Vec<(usize, u32)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct NodeLimitReached;

impl SeparationCsp {
    /// Domains must be sorted and deduplicated.
    pub fn new(domains: Vec<Vec<Color>>) -> Self {
        let n = domains.len();
        SeparationCsp {
            domains,
            constraints: vec![Vec::new(); n],
        }
    }

    /// Adds `|c(a) - c(b)| >= separation`. Separation 0 is vacuous and dropped.
    pub fn require(&mut self, a: usize, b: usize, separation: u32) {
        if separation == 0 || a == b {
            return;
        }
        self.constraints[a].push((b, separation));
        self.constraints[b].push((a, separation));
    }

    /// The (p,1)-total constraints of `g` over dense element ids.
    pub fn total_labelling(g: &Graph, p: u32, domains: Vec<Vec<Color>>) -> Self {
        assert_eq!(domains.len(), g.element_count());
        let mut csp = SeparationCsp::new(domains);
        let n = g.n();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            csp.require(u, v, 1);
            csp.require(u, n + i, p);
            csp.require(v, n + i, p);
        }
        for w in g.vertices() {
            let incident: Vec<usize> = g.incident_edges(w).collect();
            for (i, &a) in incident.iter().enumerate() {
                for &b in &incident[i + 1..] {
                    csp.require(n + a, n + b, 1);
                }
            }
        }
        csp
    }

    pub fn len(&self) -> usize {
        self.domains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domains.is_empty()
    }

    /// Runs the search with some variables fixed in advance. Returns the
    /// full assignment, `None` if infeasible, and the number of nodes
    /// visited.
    pub(crate) fn solve(
        &self,
        fixed: &[Option<Color>],
        node_limit: Option<u64>,
    ) -> (Result<Option<Vec<Color>>, NodeLimitReached>, u64) {
        self.solve_domains(self.domains.clone(), fixed, node_limit)
    }

    /// Same constraints, different domains (one per variable, sorted).
    pub(crate) fn solve_domains(
        &self,
        domains: Vec<Vec<Color>>,
        fixed: &[Option<Color>],
        node_limit: Option<u64>,
    ) -> (Result<Option<Vec<Color>>, NodeLimitReached>, u64) {
        assert_eq!(domains.len(), self.len());
        let mut search = Search {
            csp: self,
            domains,
            value: vec![None; self.len()],
            trail: Vec::new(),
            nodes: 0,
            node_limit,
        };
        for (x, c) in fixed.iter().enumerate() {
            if let Some(c) = *c {
                if !search.domains[x].contains(&c) || !search.assign(x, c) {
                    return (Ok(None), 0);
                }
            }
        }
        let outcome = search.dfs().map(|found| {
            found.then(|| search.value.iter().map(|v| v.expect("complete")).collect())
        });
        (outcome, search.nodes)
    }
}

struct Search<'a> {
    csp: &'a SeparationCsp,
    domains: Vec<Vec<Color>>,
    value: Vec<Option<Color>>,
    trail: Vec<(usize, Vec<Color>)>,
    nodes: u64,
    node_limit: Option<u64>,
}

impl Search<'_> {
    /// Assigns and forward-checks; on wipe-out returns false with the trail
    /// still holding the partial prunings (the caller undoes them).
    fn assign(&mut self, x: usize, c: Color) -> bool {
        self.value[x] = Some(c);
        for &(y, sep) in &self.csp.constraints[x] {
            match self.value[y] {
                Some(d) => {
                    if c.abs_diff(d) < sep {
                        return false;
                    }
                }
                None => {
                    if self.domains[y].iter().any(|&v| c.abs_diff(v) < sep) {
                        let pruned: Vec<Color> = self.domains[y]
                            .iter()
                            .copied()
                            .filter(|&v| c.abs_diff(v) >= sep)
                            .collect();
                        let old = std::mem::replace(&mut self.domains[y], pruned);
                        self.trail.push((y, old));
                        if self.domains[y].is_empty() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (y, old) = self.trail.pop().expect("trail underflow");
            self.domains[y] = old;
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.value.len())
            .filter(|&x| self.value[x].is_none())
            .min_by_key(|&x| (self.domains[x].len(), x))
    }

    fn dfs(&mut self) -> Result<bool, NodeLimitReached> {
        let Some(x) = self.pick() else {
            return Ok(true);
        };
        let candidates = self.domains[x].clone();
        for c in candidates {
            self.nodes += 1;
            if self.node_limit.is_some_and(|limit| self.nodes > limit) {
                return Err(NodeLimitReached);
            }
            let mark = self.trail.len();
            if self.assign(x, c) && self.dfs()? {
                return Ok(true);
            }
            self.undo_to(mark);
            self.value[x] = None;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_of_differences() {
        let mut csp = SeparationCsp::new(vec![vec![0, 1]; 3]);
        csp.require(0, 1, 1);
        csp.require(1, 2, 1);
        csp.require(0, 2, 1);
        assert_eq!(csp.solve(&[None; 3], None).0, Ok(None));
        let mut csp = SeparationCsp::new(vec![vec![0, 1, 2]; 3]);
        csp.require(0, 1, 1);
        csp.require(1, 2, 2);
        let (found, nodes) = csp.solve(&[None; 3], None);
        let found = found.unwrap().unwrap();
        assert!(found[0] != found[1] && found[1].abs_diff(found[2]) >= 2);
        assert!(nodes >= 3);
    }

    #[test]
    fn fixed_values_respected() {
        let mut csp = SeparationCsp::new(vec![vec![0, 1, 2]; 2]);
        csp.require(0, 1, 2);
        let found = csp.solve(&[Some(1), None], None).0.unwrap();
        assert_eq!(found, None);
        let found = csp.solve(&[Some(2), None], None).0.unwrap();
        assert_eq!(found, Some(vec![2, 0]));
    }

    #[test]
    fn node_limit_aborts() {
        let mut csp = SeparationCsp::new(vec![vec![0, 1, 2, 3]; 6]);
        for a in 0..6 {
            for b in a + 1..6 {
                csp.require(a, b, 1);
            }
        }
        assert_eq!(csp.solve(&[None; 6], Some(10)).0, Err(NodeLimitReached));
    }
}
