//! Polynomial-time list labellers.
//!
//! Each labeller takes a graph of a given family together with lists of the
//! size its guarantee requires, and returns a labelling that respects the
//! lists. Every result is re-validated before it is returned; a labeller that
//! gets stuck despite correctly sized lists reports
//! [`ConstructError::TheoremViolation`].

mod configuration;
mod outerplanar;
mod path;
mod star;
mod tree;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;
use crate::labelling::{is_valid, respects_lists, Color, Element, LabelError, ListAssignment, TotalLabelling};

pub use configuration::{find_configuration, ConfigurationMatch};
pub use outerplanar::{label_outerplanar_list, AuditStep, OuterplanarAudit, ReducedList};
pub use path::label_path_greedy;
pub use star::{label_star_list, label_star_span, star_center};
pub use tree::{label_tree_dfs, tree_list_size};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("input is not a {0}")]
    WrongFamily(&'static str),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("list of {element} has {have} colors, at least {need} are required")]
    ListsTooSmall {
        element: Element,
        have: usize,
        need: usize,
    },
    #[error("maximum degree {delta} is below p + 3 = {}", .p + 3)]
    DegreeTooSmall { delta: usize, p: u32 },
    #[error("no reducible configuration found in a graph of minimum degree 2; the input is not outerplanar")]
    NoConfiguration,
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Lists(#[from] LabelError),
}

impl ConstructError {
    /// A labeller ran out of colors on an input meeting its preconditions.
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, ConstructError::TheoremViolation(_))
    }
}

/// Least color of `list` not rejected by `forbidden`.
pub(crate) fn least_allowed(list: &BTreeSet<Color>, forbidden: impl Fn(Color) -> bool) -> Option<Color> {
    list.iter().copied().find(|&c| !forbidden(c))
}

/// Rejects lists smaller than `need`.
pub(crate) fn require_list_size(g: &Graph, lists: &ListAssignment, need: usize) -> Result<(), ConstructError> {
    lists.check(g)?;
    for x in g.elements() {
        let have = lists.get(x).map_or(0, BTreeSet::len);
        if have < need {
            return Err(ConstructError::ListsTooSmall {
                element: x,
                have,
                need,
            });
        }
    }
    Ok(())
}

pub(crate) fn require_positive_p(p: u32) -> Result<(), ConstructError> {
    if p == 0 {
        Err(ConstructError::InvalidParameter("the list labellers need p >= 1".into()))
    } else {
        Ok(())
    }
}

/// Final gate shared by every labeller.
pub(crate) fn checked(
    g: &Graph,
    p: u32,
    lists: Option<&ListAssignment>,
    c: TotalLabelling,
    who: &str,
) -> Result<TotalLabelling, ConstructError> {
    let verdict = is_valid(g, p, &c, true)?;
    if !verdict.is_valid() {
        return Err(ConstructError::TheoremViolation(format!(
            "{who} produced an invalid labelling: {:?}",
            verdict.violations
        )));
    }
    if let Some(l) = lists {
        if !respects_lists(&c, l) {
            return Err(ConstructError::TheoremViolation(format!("{who} left the lists")));
        }
    }
    Ok(c)
}

pub(crate) fn stuck(who: &str, x: Element) -> ConstructError {
    ConstructError::TheoremViolation(format!("{who}: no color left for {x}"))
}
