//! Choosability search over list assignments drawn from `{0..=U}`.
//!
//! Two normalizations cut the space: labelability is invariant under adding
//! a constant to every color, so only assignments whose overall minimum color
//! is 0 are visited; and, in lexicographic mode on graphs with at most eight
//! vertices, only assignments that are lexicographically minimal among their
//! images under the graph's automorphisms. Certificates name the rules used.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::automorphism::element_automorphisms;
use super::csp::SeparationCsp;
use super::{solve_list, SolveError};
use crate::format::{emit_graph6, parse_graph6};
use crate::graph::Graph;
use crate::labelling::{Color, ListAssignment};
use crate::par::{self, ExecMode};

pub const NORMALIZE_SHIFT: &str = "min-color-zero";
pub const NORMALIZE_AUTOMORPHISM: &str = "automorphism-canonical";

/// `certify_choosable` refuses graphs with more elements than this.
pub const CERTIFY_ELEMENT_LIMIT: usize = 6;
/// ... and spaces with more raw assignments than this.
pub const CERTIFY_WORK_LIMIT: u128 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Every normalized k-assignment from the universe is labelable.
    UpperCertified,
    /// The embedded k-assignment admits no labelling.
    LowerWitness,
    /// The search budget ran out (or the space was covered) without a witness.
    Exhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "order")]
pub enum SearchMode {
    Lexicographic,
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub p: u32,
    pub k: usize,
    #[serde(rename = "U")]
    pub universe: Color,
    /// The host graph in graph6.
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<ListAssignment>,
    /// Number of list assignments handed to the list solver.
    pub checked: u64,
    pub normalization: Vec<String>,
    pub mode: SearchMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    /// True when the whole normalized space was visited.
    pub complete: bool,
}

/// k-subsets of `{0..=universe}` in lexicographic order.
fn combinations(universe: Color, k: usize) -> Vec<Vec<Color>> {
    let size = universe as usize + 1;
    let mut out = Vec::new();
    if k == 0 || k > size {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| i as Color).collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + size - k) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Raw size `C(U+1, k)^elements` of the assignment space.
pub fn choosability_estimate(g: &Graph, k: usize, universe: Color) -> u128 {
    let per = binomial(u128::from(universe) + 1, k as u128);
    per.checked_pow(g.element_count() as u32).unwrap_or(u128::MAX)
}

/// Enumeration state shared by the exhaustive and lexicographic searches.
struct Space<'a> {
    g: &'a Graph,
    csp: SeparationCsp,
    combos: Vec<Vec<Color>>,
    /// Combos containing color 0 are exactly the first `with_zero`.
    with_zero: usize,
    automorphisms: Vec<Vec<usize>>,
}

impl<'a> Space<'a> {
    fn new(g: &'a Graph, p: u32, k: usize, universe: Color, use_automorphisms: bool) -> Self {
        let combos = combinations(universe, k);
        let with_zero = combos.iter().take_while(|c| c[0] == 0).count();
        let csp = SeparationCsp::total_labelling(g, p, vec![Vec::new(); g.element_count()]);
        let automorphisms = if use_automorphisms {
            element_automorphisms(g)
        } else {
            Vec::new()
        };
        Space {
            g,
            csp,
            combos,
            with_zero,
            automorphisms,
        }
    }

    fn normalization(&self) -> Vec<String> {
        let mut rules = vec![NORMALIZE_SHIFT.to_string()];
        if self.automorphisms.len() > 1 {
            rules.push(NORMALIZE_AUTOMORPHISM.to_string());
        }
        rules
    }

    fn admissible(&self, tuple: &[usize]) -> bool {
        if !tuple.iter().any(|&i| i < self.with_zero) {
            return false;
        }
        let mut image = vec![0; tuple.len()];
        for sigma in self.automorphisms.iter().skip(1) {
            for (i, &t) in tuple.iter().enumerate() {
                image[sigma[i]] = t;
            }
            if image.as_slice() < tuple {
                return false;
            }
        }
        true
    }

    fn labelable(&self, tuple: &[usize]) -> bool {
        let domains = tuple.iter().map(|&i| self.combos[i].clone()).collect();
        let fixed = vec![None; tuple.len()];
        let (found, _) = self.csp.solve_domains(domains, &fixed, None);
        found.expect("no node limit").is_some()
    }

    fn assignment(&self, tuple: &[usize]) -> ListAssignment {
        tuple
            .iter()
            .enumerate()
            .map(|(id, &i)| (self.g.element_at(id), self.combos[i].iter().copied().collect()))
            .collect()
    }

    /// Visits admissible tuples whose first coordinate is `first`, in
    /// lexicographic order, until `visit` returns false. Returns false if
    /// stopped early.
    fn walk(&self, first: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
        let len = self.g.element_count();
        let base = self.combos.len();
        let mut tuple = vec![0usize; len];
        tuple[0] = first;
        loop {
            if self.admissible(&tuple) && !visit(&tuple) {
                return false;
            }
            // odometer over positions 1.., last position fastest
            let mut pos = len;
            loop {
                if pos <= 1 {
                    return true;
                }
                pos -= 1;
                tuple[pos] += 1;
                if tuple[pos] < base {
                    break;
                }
                tuple[pos] = 0;
            }
        }
    }
}

/// Searches for a k-assignment over `{0..=universe}` that admits no
/// L-(p,1)-total labelling, checking at most `budget` assignments.
pub fn find_bad_assignment(
    g: &Graph,
    p: u32,
    k: usize,
    universe: Color,
    budget: u64,
    mode: SearchMode,
) -> Result<Certificate, SolveError> {
    if budget == 0 {
        return Err(SolveError::EmptyBudget);
    }
    if k == 0 || (universe as usize) + 1 < k {
        return Err(SolveError::Refused(format!(
            "need 1 <= k <= U + 1, got k = {k}, U = {universe}"
        )));
    }
    let mut cert = Certificate {
        kind: CertificateKind::Exhausted,
        p,
        k,
        universe,
        graph: emit_graph6(g),
        assignment: None,
        checked: 0,
        normalization: vec![NORMALIZE_SHIFT.to_string()],
        mode,
        budget: Some(budget),
        complete: false,
    };
    if g.element_count() == 0 {
        cert.complete = true;
        return Ok(cert);
    }
    match mode {
        SearchMode::Lexicographic => {
            let space = Space::new(g, p, k, universe, true);
            cert.normalization = space.normalization();
            let mut witness = None;
            let mut checked = 0u64;
            let mut complete = true;
            for first in 0..space.combos.len() {
                let finished = space.walk(first, |tuple| {
                    if checked == budget {
                        return false;
                    }
                    checked += 1;
                    if space.labelable(tuple) {
                        true
                    } else {
                        witness = Some(space.assignment(tuple));
                        false
                    }
                });
                if !finished {
                    complete = false;
                    break;
                }
            }
            cert.checked = checked;
            cert.complete = complete && witness.is_none();
            if let Some(w) = witness {
                cert.kind = CertificateKind::LowerWitness;
                cert.assignment = Some(w);
            }
        }
        SearchMode::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let csp = SeparationCsp::total_labelling(g, p, vec![Vec::new(); g.element_count()]);
            let fixed = vec![None; g.element_count()];
            for _ in 0..budget {
                let mut domains: Vec<Vec<Color>> = (0..g.element_count())
                    .map(|_| {
                        let mut l: Vec<Color> = sample(&mut rng, universe as usize + 1, k)
                            .into_iter()
                            .map(|c| c as Color)
                            .collect();
                        l.sort_unstable();
                        l
                    })
                    .collect();
                let shift = domains.iter().map(|l| l[0]).min().unwrap_or(0);
                for l in &mut domains {
                    for c in l.iter_mut() {
                        *c -= shift;
                    }
                }
                cert.checked += 1;
                let (found, _) = csp.solve_domains(domains.clone(), &fixed, None);
                if found.expect("no node limit").is_none() {
                    cert.kind = CertificateKind::LowerWitness;
                    cert.assignment = Some(
                        domains
                            .into_iter()
                            .enumerate()
                            .map(|(id, l)| (g.element_at(id), l.into_iter().collect()))
                            .collect(),
                    );
                    break;
                }
            }
        }
    }
    Ok(cert)
}

/// Exhaustively checks every normalized k-assignment over `{0..=universe}`.
///
/// Returns `UpperCertified` when all are labelable and `LowerWitness` with
/// the lexicographically first bad assignment otherwise. Refuses instances
/// beyond [`CERTIFY_ELEMENT_LIMIT`] elements or [`CERTIFY_WORK_LIMIT`] raw
/// assignments.
pub fn certify_choosable(
    g: &Graph,
    p: u32,
    k: usize,
    universe: Color,
    exec: ExecMode,
) -> Result<Certificate, SolveError> {
    if g.element_count() > CERTIFY_ELEMENT_LIMIT {
        return Err(SolveError::Refused(format!(
            "{} elements exceed the exhaustive limit of {CERTIFY_ELEMENT_LIMIT}",
            g.element_count()
        )));
    }
    let estimate = choosability_estimate(g, k, universe);
    if estimate > CERTIFY_WORK_LIMIT {
        return Err(SolveError::Refused(format!(
            "about {estimate} assignments exceed the exhaustive limit of {CERTIFY_WORK_LIMIT}"
        )));
    }
    if k == 0 || (universe as usize) + 1 < k {
        return Err(SolveError::Refused(format!(
            "need 1 <= k <= U + 1, got k = {k}, U = {universe}"
        )));
    }
    let mut cert = Certificate {
        kind: CertificateKind::UpperCertified,
        p,
        k,
        universe,
        graph: emit_graph6(g),
        assignment: None,
        checked: 0,
        normalization: vec![NORMALIZE_SHIFT.to_string()],
        mode: SearchMode::Lexicographic,
        budget: None,
        complete: true,
    };
    if g.element_count() == 0 {
        return Ok(cert);
    }
    let space = Space::new(g, p, k, universe, true);
    cert.normalization = space.normalization();
    // Shards by the first element's list; disjoint by construction.
    let shards: Vec<usize> = (0..space.combos.len()).collect();
    let results = par::map(exec, &shards, |&first| {
        let mut checked = 0u64;
        let mut witness = None;
        space.walk(first, |tuple| {
            checked += 1;
            if space.labelable(tuple) {
                true
            } else {
                witness = Some(tuple.to_vec());
                false
            }
        });
        (checked, witness)
    });
    // The first shard holding a witness has the lexicographically first one;
    // counts are reported up to and including that shard.
    for (checked, witness) in results {
        cert.checked += checked;
        if let Some(tuple) = witness {
            cert.kind = CertificateKind::LowerWitness;
            cert.assignment = Some(space.assignment(&tuple));
            break;
        }
    }
    Ok(cert)
}

/// Re-derives a certificate's verdict from the certificate alone.
pub fn recheck_certificate(cert: &Certificate) -> Result<bool, SolveError> {
    let g = parse_graph6(&cert.graph).map_err(|e| SolveError::Refused(format!("bad graph: {e}")))?;
    match cert.kind {
        CertificateKind::LowerWitness => {
            let Some(lists) = &cert.assignment else {
                return Ok(false);
            };
            lists.check(&g)?;
            let shape_ok = lists.iter().all(|(_, l)| {
                l.len() == cert.k && l.iter().all(|&c| c <= cert.universe)
            });
            Ok(shape_ok && !solve_list(&g, cert.p, lists)?.is_labelled())
        }
        CertificateKind::UpperCertified => {
            let again = certify_choosable(&g, cert.p, cert.k, cert.universe, ExecMode::Parallel)?;
            Ok(again.kind == CertificateKind::UpperCertified && again.checked == cert.checked)
        }
        CertificateKind::Exhausted => {
            let budget = cert.budget.unwrap_or(cert.checked.max(1));
            let again = find_bad_assignment(&g, cert.p, cert.k, cert.universe, budget, cert.mode)?;
            Ok(again.kind == CertificateKind::Exhausted && again.checked == cert.checked)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_path, make_star};

    #[test]
    fn combination_order() {
        assert_eq!(
            combinations(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(2, 3), vec![vec![0, 1, 2]]);
        assert!(combinations(1, 3).is_empty());
        assert_eq!(binomial(6, 3), 20);
    }

    #[test]
    fn single_edge_total_choosability() {
        let g = make_path(2).unwrap();
        let up = certify_choosable(&g, 1, 3, 5, ExecMode::Sequential).unwrap();
        assert_eq!(up.kind, CertificateKind::UpperCertified);
        assert!(up.normalization.contains(&NORMALIZE_AUTOMORPHISM.to_string()));
        let low = certify_choosable(&g, 1, 2, 5, ExecMode::Parallel).unwrap();
        assert_eq!(low.kind, CertificateKind::LowerWitness);
        assert!(recheck_certificate(&low).unwrap());
        assert!(recheck_certificate(&up).unwrap());
    }

    #[test]
    fn single_vertex_is_one_choosable() {
        let cert = certify_choosable(&make_path(1).unwrap(), 3, 1, 4, ExecMode::Sequential).unwrap();
        assert_eq!(cert.kind, CertificateKind::UpperCertified);
        assert_eq!(cert.checked, 1);
    }

    #[test]
    fn refuses_large_instances() {
        let g = make_star(3).unwrap();
        assert!(matches!(
            certify_choosable(&g, 2, 4, 8, ExecMode::Sequential),
            Err(SolveError::Refused(_))
        ));
        assert_eq!(
            find_bad_assignment(&g, 2, 4, 8, 0, SearchMode::Lexicographic),
            Err(SolveError::EmptyBudget)
        );
    }

    #[test]
    fn witness_search_modes() {
        let g = make_path(2).unwrap();
        let lex = find_bad_assignment(&g, 1, 2, 3, 100, SearchMode::Lexicographic).unwrap();
        assert_eq!(lex.kind, CertificateKind::LowerWitness);
        let random = find_bad_assignment(&g, 1, 2, 3, 1000, SearchMode::Random { seed: 4 }).unwrap();
        assert_eq!(random.kind, CertificateKind::LowerWitness);
        assert!(recheck_certificate(&random).unwrap());
        let none = find_bad_assignment(&g, 1, 3, 5, 10_000, SearchMode::Lexicographic).unwrap();
        assert_eq!(none.kind, CertificateKind::Exhausted);
        assert!(none.complete);
        assert!(recheck_certificate(&none).unwrap());
    }

    #[test]
    fn certificate_json_shape() {
        let g = make_path(2).unwrap();
        let cert = find_bad_assignment(&g, 1, 2, 3, 100, SearchMode::Lexicographic).unwrap();
        let text = serde_json::to_string(&cert).unwrap();
        assert!(text.starts_with(r#"{"kind":"lower-witness","p":1,"k":2,"U":3"#), "{text}");
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cert);
    }
}
