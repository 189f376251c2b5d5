//! Complete solvers: minimum span, list labelability, and choosability
//! search. These are the reference every constructive labeller is checked
//! against.

mod automorphism;
mod choosability;
mod csp;

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::Graph;
use crate::labelling::{is_valid, respects_lists, Color, LabelError, ListAssignment, TotalLabelling};

pub use automorphism::element_automorphisms;
pub use choosability::{
    certify_choosable, choosability_estimate, find_bad_assignment, recheck_certificate, Certificate,
    CertificateKind, SearchMode, CERTIFY_ELEMENT_LIMIT, CERTIFY_WORK_LIMIT,
};
pub use csp::SeparationCsp;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Labelled(TotalLabelling),
    Infeasible,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub outcome: Outcome,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn is_labelled(&self) -> bool {
        matches!(self.outcome, Outcome::Labelled(_))
    }

    pub fn labelling(&self) -> Option<&TotalLabelling> {
        match &self.outcome {
            Outcome::Labelled(c) => Some(c),
            Outcome::Infeasible => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Lists(#[from] LabelError),
    #[error("search exceeded the node limit of {0}")]
    NodeLimit(u64),
    #[error("{0}")]
    Refused(String),
    #[error("search budget must be positive")]
    EmptyBudget,
}

/// Builds the CSP, runs it and re-validates any labelling it returns.
fn run(
    g: &Graph,
    p: u32,
    domains: Vec<Vec<Color>>,
    fixed: &TotalLabelling,
    lists: Option<&ListAssignment>,
    node_limit: Option<u64>,
) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    let csp = SeparationCsp::total_labelling(g, p, domains);
    let mut pinned = vec![None; g.element_count()];
    for (x, c) in fixed.iter() {
        let id = g.element_id(x).ok_or(LabelError::UnknownElement(x))?;
        pinned[id] = Some(c);
    }
    let (found, nodes) = csp.solve(&pinned, node_limit);
    let found = found.map_err(|_| SolveError::NodeLimit(node_limit.unwrap_or(0)))?;
    let outcome = match found {
        None => Outcome::Infeasible,
        Some(colors) => {
            let c: TotalLabelling = colors
                .into_iter()
                .enumerate()
                .map(|(id, col)| (g.element_at(id), col))
                .collect();
            let verdict = is_valid(g, p, &c, true)?;
            assert!(verdict.is_valid(), "solver produced an invalid labelling: {verdict:?}");
            if let Some(l) = lists {
                assert!(respects_lists(&c, l), "solver left the lists");
            }
            Outcome::Labelled(c)
        }
    };
    Ok(SolveResult {
        outcome,
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

/// Is there a (p,1)-total labelling of `g` into `{0..=k}`?
pub fn solve_span(g: &Graph, p: u32, k: Color) -> SolveResult {
    run(g, p, vec![(0..=k).collect(); g.element_count()], &TotalLabelling::new(), None, None)
        .expect("full-range domains are always well formed")
}

/// [`solve_span`] with a cap on search nodes.
pub fn solve_span_limited(g: &Graph, p: u32, k: Color, node_limit: u64) -> Result<SolveResult, SolveError> {
    run(g, p, vec![(0..=k).collect(); g.element_count()], &TotalLabelling::new(), None, Some(node_limit))
}

fn list_domains(g: &Graph, lists: &ListAssignment) -> Result<Vec<Vec<Color>>, SolveError> {
    lists.check(g)?;
    Ok(g
        .elements()
        .map(|x| lists.get(x).expect("checked").iter().copied().collect())
        .collect())
}

/// Complete search for an L-(p,1)-total labelling.
pub fn solve_list(g: &Graph, p: u32, lists: &ListAssignment) -> Result<SolveResult, SolveError> {
    solve_list_extending(g, p, lists, &TotalLabelling::new())
}

/// Like [`solve_list`], but elements labelled in `fixed` keep their colors.
pub fn solve_list_extending(
    g: &Graph,
    p: u32,
    lists: &ListAssignment,
    fixed: &TotalLabelling,
) -> Result<SolveResult, SolveError> {
    let domains = list_domains(g, lists)?;
    run(g, p, domains, fixed, Some(lists), None)
}

/// Result of a minimum-span computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanResult {
    /// `λ_p^T(g)`.
    pub lambda: Color,
    /// An optimal labelling into `{0..=lambda}`.
    pub labelling: TotalLabelling,
    /// Spans proven infeasible on the way up.
    pub infeasible: Vec<Color>,
    pub nodes: u64,
}

impl SpanResult {
    /// `χ_{p,1}^T = λ + 1`, the number of colors in `{0..=λ}`.
    pub fn chi(&self) -> Color {
        self.lambda + 1
    }
}

/// Where the linear scan for `λ` starts.
///
/// With `p ≥ 1`, a vertex of degree Δ and its Δ distinct edge colors sit
/// outside a ball that removes at least `p` colors of `{0..k}`, so
/// `k ≥ Δ + p - 1`. With `p = 0` the edges alone force `k ≥ Δ - 1`, and any
/// edge forces two vertex colors.
pub fn lambda_lower_bound(g: &Graph, p: u32) -> Color {
    let delta = g.max_degree() as Color;
    if g.m() == 0 {
        0
    } else if p == 0 {
        (delta - 1).max(1)
    } else {
        delta + p - 1
    }
}

/// `λ_p^T(g)` by scanning `k` upward from [`lambda_lower_bound`].
pub fn lambda(g: &Graph, p: u32) -> SpanResult {
    lambda_limited(g, p, None).expect("unlimited search always finishes")
}

pub fn lambda_limited(g: &Graph, p: u32, node_limit: Option<u64>) -> Result<SpanResult, SolveError> {
    let mut k = lambda_lower_bound(g, p);
    let mut infeasible = Vec::new();
    let mut nodes = 0;
    loop {
        let result = match node_limit {
            Some(limit) => solve_span_limited(g, p, k, limit)?,
            None => solve_span(g, p, k),
        };
        nodes += result.stats.nodes;
        match result.outcome {
            Outcome::Labelled(labelling) => {
                return Ok(SpanResult {
                    lambda: k,
                    labelling,
                    infeasible,
                    nodes,
                })
            }
            Outcome::Infeasible => {
                infeasible.push(k);
                k += 1;
            }
        }
    }
}
