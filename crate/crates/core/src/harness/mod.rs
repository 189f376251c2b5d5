//! Experiment orchestration: oracle tables, property suites over random list
//! assignments, and counterexample hunts.
//!
//! Every instance draws its randomness from a seed derived from the
//! experiment seed and the instance coordinates, and rows are reported in
//! instance order, so a fixed spec and seed always give the same report.

mod dot;
mod hunt;
mod lp1;
mod oracle;
mod props;
mod report;

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::labelling::{Color, ListAssignment};
use crate::par::ExecMode;

pub use dot::render_dot;
pub use hunt::{hunt_counterexamples, Conjecture, HuntSpec};
pub use lp1::{lp1_lower_bound, lp1_span, Lp1Span};
pub use oracle::{run_oracle_suite, OracleSpec};
pub use props::{run_property_suite, run_trial, Trial, TrialOutcome};
pub use report::{Report, Row, Verdict};

/// Default number of assignments a witness search may check.
pub const DEFAULT_BUDGET: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Tree,
    Star,
    MaximalOuterplanar,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Family::Path),
            "tree" => Ok(Family::Tree),
            "star" => Ok(Family::Star),
            "outerplanar" | "maximal-outerplanar" => Ok(Family::MaximalOuterplanar),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

impl Family {
    fn tag(self) -> u64 {
        match self {
            Family::Path => 1,
            Family::Tree => 2,
            Family::Star => 3,
            Family::MaximalOuterplanar => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Tree => "tree",
            Family::Star => "star",
            Family::MaximalOuterplanar => "maximal-outerplanar",
        }
    }
}

/// How list assignments are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssignmentPolicy {
    /// `{0..k-1}` on every element.
    FullRange,
    /// Independent uniform k-subsets of `{0..=U}`.
    RandomK,
    /// k-subsets of the tightest universe `{0..=k}`, so lists overlap heavily.
    AdversarialSearch,
}

impl std::str::FromStr for AssignmentPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full-range" => Ok(AssignmentPolicy::FullRange),
            "random-k" => Ok(AssignmentPolicy::RandomK),
            "adversarial-search" | "adversarial" => Ok(AssignmentPolicy::AdversarialSearch),
            other => Err(format!("unknown assignment policy `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub family: Family,
    pub sizes: RangeInclusive<usize>,
    pub p_values: Vec<u32>,
    pub policy: AssignmentPolicy,
    /// Trials per (size, p) point.
    pub trials: usize,
    pub seed: u64,
    /// Universe bound for random lists; `None` means `k + 2p`.
    pub universe: Option<Color>,
    /// Cross-check every n-th successful trial against the exact solver
    /// (0 disables), on instances with at most `cross_check_elements` elements.
    pub cross_check_every: usize,
    pub cross_check_elements: usize,
    #[serde(skip, default)]
    pub exec: ExecMode,
}

impl ExperimentSpec {
    pub fn new(family: Family, sizes: RangeInclusive<usize>, p_values: Vec<u32>, trials: usize, seed: u64) -> Self {
        ExperimentSpec {
            family,
            sizes,
            p_values,
            policy: AssignmentPolicy::RandomK,
            trials,
            seed,
            universe: None,
            cross_check_every: 10,
            cross_check_elements: 30,
            exec: ExecMode::Parallel,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.sizes.is_empty() {
            return Err("size range is empty".into());
        }
        if self.p_values.is_empty() {
            return Err("no p values".into());
        }
        if self.trials == 0 {
            return Err("trials must be at least 1".into());
        }
        Ok(())
    }
}

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for one instance, a pure function of the coordinates.
pub fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    parts.iter().fold(mix(seed), |acc, &x| mix(acc ^ mix(x)))
}

/// Uniform k-subsets of `{0..=universe}`, one per element.
pub fn random_assignment(g: &Graph, k: usize, universe: Color, rng: &mut impl Rng) -> ListAssignment {
    assert!(universe as usize + 1 >= k, "universe too small for k-subsets");
    g.elements()
        .map(|x| {
            let list = sample(rng, universe as usize + 1, k)
                .into_iter()
                .map(|c| c as Color)
                .collect();
            (x, list)
        })
        .collect()
}

pub(crate) fn draw_assignment(
    g: &Graph,
    k: usize,
    p: u32,
    policy: AssignmentPolicy,
    universe: Option<Color>,
    seed: u64,
) -> ListAssignment {
    match policy {
        AssignmentPolicy::FullRange => ListAssignment::uniform(g, 0..k as Color),
        AssignmentPolicy::RandomK => {
            let u = universe.unwrap_or(k as Color + 2 * p).max(k as Color - 1);
            random_assignment(g, k, u, &mut ChaCha8Rng::seed_from_u64(seed))
        }
        AssignmentPolicy::AdversarialSearch => random_assignment(g, k, k as Color, &mut ChaCha8Rng::seed_from_u64(seed)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::make_path;

    #[test]
    fn seeds_depend_on_every_part() {
        let a = derive_seed(1, &[2, 3]);
        assert_eq!(a, derive_seed(1, &[2, 3]));
        assert_ne!(a, derive_seed(1, &[3, 2]));
        assert_ne!(a, derive_seed(2, &[2, 3]));
    }

    #[test]
    fn assignments_have_requested_shape() {
        let g = make_path(4).unwrap();
        let l = draw_assignment(&g, 5, 2, AssignmentPolicy::RandomK, None, 9);
        assert_eq!(l.uniform_size(), Some(5));
        assert!(l.iter().all(|(_, s)| s.iter().all(|&c| c <= 9)));
        let full = draw_assignment(&g, 5, 2, AssignmentPolicy::FullRange, None, 9);
        assert_eq!(full, ListAssignment::full_range(&g, 4));
        let tight = draw_assignment(&g, 5, 2, AssignmentPolicy::AdversarialSearch, None, 9);
        assert!(tight.iter().all(|(_, s)| s.iter().all(|&c| c <= 5)));
    }

    #[test]
    fn spec_validation() {
        let mut spec = ExperimentSpec::new(Family::Path, 2..=5, vec![1], 3, 0);
        assert!(spec.validate().is_ok());
        spec.trials = 0;
        assert!(spec.validate().is_err());
    }
}
