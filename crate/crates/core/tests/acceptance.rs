//! Acceptance suite. Each test prints a single PASS/FAIL line (outside the
//! test harness's output capture) before asserting.

use std::collections::BTreeSet;
use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use plabel_core::construct::label_outerplanar_list;
use plabel_core::generators::{connected_graphs, make_path, make_random_gnp, make_random_maximal_outerplanar, make_star};
use plabel_core::harness::{
    lp1_span, run_oracle_suite, run_property_suite, ExperimentSpec, Family, OracleSpec, Report, DEFAULT_BUDGET,
};
use plabel_core::par::ExecMode;
use plabel_core::solver::{
    certify_choosable, find_bad_assignment, lambda, recheck_certificate, solve_list, CertificateKind, SearchMode,
};
use plabel_core::{incidence_graph, is_valid_total, lp1_is_valid, respects_lists, Color, Element, Graph, ListAssignment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn announce(id: &str, name: &str, pass: bool, detail: &str) {
    let line = format!(
        "acceptance {id} {name}: {} {detail}\n",
        if pass { "PASS" } else { "FAIL" }
    );
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
}

fn mismatches(report: &Report) -> Vec<String> {
    report
        .verdicts
        .iter()
        .filter(|v| !v.pass)
        .map(|v| format!("{} expected {} got {}", v.check, v.expected, v.observed))
        .collect()
}

#[allow(clippy::reversed_empty_ranges)]
const NONE: std::ops::RangeInclusive<usize> = 1..=0;

#[test]
fn path_span_table() {
    let start = Instant::now();
    let report = run_oracle_suite(&OracleSpec {
        p_values: (1..=4).collect(),
        paths: 2..=8,
        stars: NONE,
        lp1_paths: NONE,
        exec: ExecMode::Parallel,
    });
    let elapsed = start.elapsed();
    let bad = mismatches(&report);
    let pass = bad.is_empty() && elapsed < Duration::from_secs(10);
    announce(
        "1",
        "path spans",
        pass,
        &format!("{} entries, {} mismatches, {elapsed:.2?}: {bad:?}", report.verdicts.len(), bad.len()),
    );
    assert!(pass, "{bad:#?}");
}

#[test]
fn star_span_table() {
    let start = Instant::now();
    let report = run_oracle_suite(&OracleSpec {
        p_values: (1..=5).collect(),
        paths: NONE,
        stars: 1..=6,
        lp1_paths: NONE,
        exec: ExecMode::Parallel,
    });
    let elapsed = start.elapsed();
    let bad = mismatches(&report);
    let pass = bad.is_empty() && report.rows.len() == 30 && elapsed < Duration::from_secs(60);
    announce(
        "2",
        "star spans and lambda band",
        pass,
        &format!("{} checks, {elapsed:.2?}: {bad:?}", report.verdicts.len()),
    );
    assert!(pass, "{bad:#?}");
}

#[test]
fn incidence_bridge() {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let map = incidence_graph(&g);
            for p in 1..=3 {
                let direct = lambda(&g, p);
                let via = lp1_span(&map.derived, p);
                let forward = map.transport_labelling(&direct.labelling);
                let back = map.transport_labelling_back(&via.labels);
                let consistent = direct.lambda == via.span
                    && lp1_is_valid(&map.derived, p, &forward)
                    && is_valid_total(&g, p, &back);
                if !consistent {
                    bad.push(format!("{:?} p={p}: {} vs {}", g.edges(), direct.lambda, via.span));
                }
                checked += 1;
            }
        }
    }
    let pass = bad.is_empty() && checked == 31 * 3;
    announce("3", "incidence bridge", pass, &format!("{checked} (graph, p) pairs: {bad:?}"));
    assert!(pass);
}

struct PropertyRun {
    reports: Vec<(&'static str, Report)>,
    elapsed: Duration,
}

/// The four property suites, shared with the theorem-violation tally.
fn property_run() -> &'static PropertyRun {
    static RUN: OnceLock<PropertyRun> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let suites: [(&str, Family, std::ops::RangeInclusive<usize>, Vec<u32>); 4] = [
            ("paths", Family::Path, 2..=20, vec![1, 2, 3]),
            ("trees", Family::Tree, 1..=50, vec![1, 2, 3]),
            ("stars", Family::Star, 3..=8, vec![2, 3]),
            ("outerplanar", Family::MaximalOuterplanar, 6..=14, vec![2]),
        ];
        let reports = suites
            .into_iter()
            .map(|(name, family, sizes, ps)| (name, run_property_suite(&ExperimentSpec::new(family, sizes, ps, 1000, 20_240_601))))
            .collect();
        PropertyRun {
            reports,
            elapsed: start.elapsed(),
        }
    })
}

#[test]
fn constructive_guarantees() {
    let run = property_run();
    let mut pass = run.elapsed < Duration::from_secs(300);
    let mut detail = Vec::new();
    for (name, report) in &run.reports {
        let labelled = report.rows.iter().filter(|r| r.outcome == "labelled").count();
        let ok = report.failures == 0 && labelled == report.rows.len() && report.rows.len() == 1000 * report.verdicts.len();
        pass &= ok;
        detail.push(format!("{name}: {labelled}/{} labelled, {} failures", report.rows.len(), report.failures));
    }
    announce("4", "constructive guarantees", pass, &format!("{detail:?} in {:.2?}", run.elapsed));
    assert!(pass);
}

fn outerplanar_sample(i: u64) -> Graph {
    let n = 6 + (i % 9) as usize;
    (0..)
        .map(|attempt| make_random_maximal_outerplanar(n, i * 7919 + attempt).unwrap())
        .find(|g| g.max_degree() >= 5)
        .unwrap()
}

#[test]
fn outerplanar_span_bound() {
    let mut bad = Vec::new();
    let mut exact = 0;
    for i in 0..100 {
        let g = outerplanar_sample(i);
        let delta = g.max_degree() as Color;
        let lists = ListAssignment::full_range(&g, delta + 2);
        match label_outerplanar_list(&g, 2, &lists) {
            Ok((c, audit)) => {
                if !is_valid_total(&g, 2, &c) || c.max_color() > Some(delta + 2) || audit.full_resolves > 0 {
                    bad.push(format!("graph {i}: labelling out of bounds"));
                }
            }
            Err(e) => bad.push(format!("graph {i}: {e}")),
        }
        if g.n() <= 10 {
            let r = lambda(&g, 2);
            exact += 1;
            if r.lambda > delta + 2 {
                bad.push(format!("graph {i}: exact span {} above {}", r.lambda, delta + 2));
            }
        }
    }
    let pass = bad.is_empty() && exact > 0;
    announce(
        "5",
        "outerplanar span bound",
        pass,
        &format!("100 graphs, {exact} with exact spans: {bad:?}"),
    );
    assert!(pass);
}

#[test]
fn star_choosability_tightness() {
    let mut detail = Vec::new();
    let mut pass = true;
    for n in [3, 4] {
        let g = make_star(n).unwrap();
        let k = n + 1;
        let cert = find_bad_assignment(&g, 2, k, 2 * k as Color, DEFAULT_BUDGET, SearchMode::Lexicographic).unwrap();
        let witness = cert.kind == CertificateKind::LowerWitness;
        let infeasible = cert
            .assignment
            .as_ref()
            .is_some_and(|a| !solve_list(&g, 2, a).unwrap().is_labelled());
        let rechecked = recheck_certificate(&cert).unwrap();
        pass &= witness && infeasible && rechecked;
        detail.push(format!("K_1,{n}: {:?} after {} checks", cert.kind, cert.checked));
    }
    announce("6", "star choosability tightness", pass, &format!("{detail:?}"));
    assert!(pass);
}

#[test]
fn single_edge_choosability() {
    let start = Instant::now();
    let g = make_path(2).unwrap();
    let upper = certify_choosable(&g, 1, 3, 5, ExecMode::Parallel).unwrap();
    let lower = certify_choosable(&g, 1, 2, 5, ExecMode::Parallel).unwrap();
    let elapsed = start.elapsed();
    let pass = upper.kind == CertificateKind::UpperCertified
        && upper.complete
        && lower.kind == CertificateKind::LowerWitness
        && recheck_certificate(&upper).unwrap()
        && recheck_certificate(&lower).unwrap()
        && elapsed < Duration::from_secs(60);
    announce(
        "7",
        "single edge choosability",
        pass,
        &format!("k=3 {:?} ({} checked), k=2 {:?}, {elapsed:.2?}", upper.kind, upper.checked, lower.kind),
    );
    assert!(pass);
}

/// Pairwise constraints written out directly from the definition.
fn naive_valid(g: &Graph, p: u32, colors: &[(Element, Color)]) -> bool {
    let get = |x: Element| colors.iter().find(|(y, _)| *y == x).unwrap().1;
    let edges = g.edges();
    for &(u, v) in edges {
        if get(Element::Vertex(u)) == get(Element::Vertex(v)) {
            return false;
        }
        let e = get(Element::Edge(u, v));
        if get(Element::Vertex(u)).abs_diff(e) < p || get(Element::Vertex(v)).abs_diff(e) < p {
            return false;
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            let share = a == c || a == d || b == c || b == d;
            if share && get(Element::Edge(a, b)) == get(Element::Edge(c, d)) {
                return false;
            }
        }
    }
    true
}

fn naive_labelable(g: &Graph, p: u32, lists: &ListAssignment) -> bool {
    let items: Vec<(Element, Vec<Color>)> = lists.iter().map(|(x, l)| (x, l.iter().copied().collect())).collect();
    let mut index = vec![0; items.len()];
    loop {
        let colors: Vec<(Element, Color)> = items.iter().zip(&index).map(|((x, l), &i)| (*x, l[i])).collect();
        if naive_valid(g, p, &colors) {
            return true;
        }
        let mut pos = 0;
        loop {
            if pos == items.len() {
                return false;
            }
            index[pos] += 1;
            if index[pos] < items[pos].1.len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn solver_completeness() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut agree = 0;
    let mut feasible = 0;
    let mut bad = Vec::new();
    let mut drawn = 0;
    while drawn < 200 {
        let n = rng.gen_range(1..=5);
        let g = make_random_gnp(n, rng.gen_range(0.3..1.0), rng.gen()).unwrap();
        if g.element_count() > 9 {
            continue;
        }
        drawn += 1;
        let p = rng.gen_range(0..=3);
        let lists: ListAssignment = g
            .elements()
            .map(|x| {
                let size = rng.gen_range(1..=4);
                let list: BTreeSet<Color> = (0..size).map(|_| rng.gen_range(0..=6)).collect();
                (x, list)
            })
            .collect();
        let oracle = naive_labelable(&g, p, &lists);
        let result = solve_list(&g, p, &lists).unwrap();
        let ok = match result.labelling() {
            Some(c) => {
                let colors: Vec<(Element, Color)> = c.iter().collect();
                oracle && naive_valid(&g, p, &colors) && respects_lists(c, &lists)
            }
            None => !oracle,
        };
        feasible += oracle as usize;
        if ok {
            agree += 1;
        } else {
            bad.push(format!("{:?} p={p} lists={lists:?}", g.edges()));
        }
    }
    let pass = agree == 200 && feasible > 0 && feasible < 200;
    announce(
        "8",
        "solver completeness",
        pass,
        &format!("{agree}/200 agree, {feasible} feasible: {bad:?}"),
    );
    assert!(pass);
}

#[test]
fn no_theorem_violations() {
    let run = property_run();
    let mut total = 0;
    let mut certificates = Vec::new();
    for (_, report) in &run.reports {
        total += report.theorem_violations;
        certificates.extend(report.certificates.iter().cloned());
    }
    let mut audit_resolves = 0;
    for i in 0..100 {
        let g = outerplanar_sample(i);
        let lists = ListAssignment::full_range(&g, g.max_degree() as Color + 2);
        match label_outerplanar_list(&g, 2, &lists) {
            Ok((_, audit)) => audit_resolves += audit.full_resolves,
            Err(e) if e.is_theorem_violation() => total += 1,
            Err(_) => {}
        }
    }
    total += audit_resolves;
    let pass = total == 0;
    announce(
        "9",
        "theorem violations",
        pass,
        &format!("{total} violations; certificates: {}", serde_json::to_string(&certificates).unwrap()),
    );
    assert!(pass);
}
