//! Seeded random graphs for sweeps and tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::operators::JoinScheme;

/// `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::new(n, edges).expect("valid edges")
}

/// A random spanning tree plus each remaining edge with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.random_range(0..i)], order[i])).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable_by_key(|&(u, v)| (u.min(v), u.max(v)));
    edges.dedup_by_key(|&mut (u, v)| (u.min(v), u.max(v)));
    Graph::new(n, edges).expect("valid edges")
}

/// Complete, empty or `G(n, 1/2)` with equal probability.
pub fn random_factor<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    match rng.random_range(0..3) {
        0 => Graph::complete(n).expect("n >= 1"),
        1 => Graph::empty(n).expect("n >= 1"),
        _ => random_graph(n, 0.5, rng),
    }
}

/// A random graph on `n >= 2` vertices without a dominating vertex.
pub fn random_without_dominating<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2, "every vertex of K_1 dominates");
    let g = random_graph(n, 0.6, rng);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    loop {
        let full = (0..n).find(|&u| edges.iter().filter(|&&(a, b)| a == u || b == u).count() == n - 1);
        let Some(u) = full else { break };
        let incident: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].0 == u || edges[i].1 == u).collect();
        edges.swap_remove(incident[rng.random_range(0..incident.len())]);
    }
    Graph::new(n, edges).expect("valid edges")
}

/// A graph on `n` vertices whose complement is `k`-regular.
pub fn regular_complement_factor(n: usize, k: usize) -> crate::Result<Graph> {
    Ok(Graph::regular(n, k)?.complement())
}

/// A complement degree `k < n` with `n*k` even, at least `min` when possible.
pub fn random_complement_degree<R: Rng + ?Sized>(n: usize, min: usize, rng: &mut R) -> usize {
    let choices: Vec<usize> = (0..n).filter(|k| (n * k) % 2 == 0 && *k >= min).collect();
    if choices.is_empty() {
        0
    } else {
        choices[rng.random_range(0..choices.len())]
    }
}

/// Connected host on `k` vertices with mixed factors of order at most `max_size`.
pub fn random_join_scheme<R: Rng + ?Sized>(k: usize, max_size: usize, rng: &mut R) -> JoinScheme {
    let host = random_connected_graph(k, 0.3, rng);
    let factors = (0..k).map(|_| random_factor(rng.random_range(1..=max_size), rng)).collect();
    JoinScheme::new(host, factors).expect("connected host with k factors")
}

/// Compact text form: `K n`, `Kbar n`, or `G(n: u-v ...)`.
pub fn describe(g: &Graph) -> String {
    let n = g.order();
    if g.is_complete() {
        format!("K {n}")
    } else if g.edge_count() == 0 {
        format!("Kbar {n}")
    } else {
        let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("G({n}: {})", edges.join(" "))
    }
}
