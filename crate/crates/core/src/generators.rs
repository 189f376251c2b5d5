//! Graph families used throughout the experiments.
//!
//! Random generators take an explicit seed and are pure functions of their
//! arguments.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError, Vertex};

fn at_least(family: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::TooSmall { family, min, got })
    } else {
        Ok(())
    }
}

/// Path `P_k` on vertices `0..k` in order.
pub fn make_path(k: usize) -> Result<Graph, GraphError> {
    at_least("path", 1, k)?;
    Graph::new(k, (1..k).map(|i| (i - 1, i)))
}

/// Star `K_{1,n}` with center 0 and leaves `1..=n`.
pub fn make_star(n: usize) -> Result<Graph, GraphError> {
    at_least("star", 1, n)?;
    Graph::new(n + 1, (1..=n).map(|i| (0, i)))
}

/// Cycle `C_n` on vertices `0..n` in order.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    at_least("cycle", 3, n)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Fan: hub 0 joined to every vertex of the path `1..=n`.
pub fn make_fan(n: usize) -> Result<Graph, GraphError> {
    at_least("fan", 1, n)?;
    let spokes = (1..=n).map(|i| (0, i));
    let rim = (2..=n).map(|i| (i - 1, i));
    Graph::new(n + 1, spokes.chain(rim))
}

/// Complete graph `K_n`.
pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    at_least("complete graph", 1, n)?;
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Random recursive tree: vertex `i > 0` attaches to a uniform earlier vertex.
pub fn make_random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    at_least("tree", 1, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::new(n, edges)
}

/// Random tree with maximum degree at most `max_degree` (≥ 2).
pub fn make_random_bounded_tree(n: usize, max_degree: usize, seed: u64) -> Result<Graph, GraphError> {
    at_least("tree", 1, n)?;
    at_least("tree degree bound", 2, max_degree)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let open: Vec<Vertex> = (0..i).filter(|&v| degree[v] < max_degree).collect();
        let parent = *open.choose(&mut rng).expect("a path always has room");
        degree[parent] += 1;
        degree[i] += 1;
        edges.push((parent, i));
    }
    Graph::new(n, edges)
}

/// Random maximal outerplanar graph on `n ≥ 3` vertices.
///
/// Built as a random triangulation of a convex polygon: start from a
/// triangle and repeatedly glue a new ear onto a uniformly chosen edge of the
/// outer cycle. The result is relabelled so that the outer (Hamiltonian) cycle
/// is `0, 1, ..., n-1`. It has `2n - 3` edges.
pub fn make_random_maximal_outerplanar(n: usize, seed: u64) -> Result<Graph, GraphError> {
    at_least("maximal outerplanar graph", 3, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cycle: Vec<Vertex> = vec![0, 1, 2];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for next in 3..n {
        let i = rng.gen_range(0..cycle.len());
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        edges.push((a, next));
        edges.push((b, next));
        cycle.insert(i + 1, next);
    }
    let mut position = vec![0; n];
    for (pos, &v) in cycle.iter().enumerate() {
        position[v] = pos;
    }
    Graph::new(n, edges.into_iter().map(|(a, b)| (position[a], position[b])))
}

/// Erdős–Rényi `G(n, q)`.
pub fn make_random_gnp(n: usize, q: f64, seed: u64) -> Result<Graph, GraphError> {
    at_least("random graph", 1, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(q.clamp(0.0, 1.0)) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges)
}

/// Every connected graph on `n ≤ 7` vertices, one per isomorphism class,
/// in a deterministic order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "connected_graphs is for n in 1..=7");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("valid pairs");
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| g.relabel(p).edges().to_vec())
            .min()
            .expect("at least one permutation");
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}
