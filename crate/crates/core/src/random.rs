//! Seeded random instances.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;

use crate::design::{PartialDesign, Star};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Grows a partial design one star at a time: a uniformly random centre
/// among vertices with leftover degree at least `k`, then a uniformly
/// random `k`-subset of its leftover neighbours.
pub fn random_partial_design<R: Rng + ?Sized>(n: usize, k: usize, stars: usize, rng: &mut R) -> Result<PartialDesign> {
    if k < 2 {
        return Err(Error::StarSizeTooSmall(k));
    }
    let mut adj: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| y != x).collect()).collect();
    let mut out = PartialDesign::empty(n, k);
    while out.stars.len() < stars {
        let Some(center) = (0..n).filter(|&x| adj[x].len() >= k).choose(rng) else {
            return Err(Error::Stuck { placed: out.stars.len(), wanted: stars });
        };
        let leaves: Vec<usize> = adj[center].choose_multiple(rng, k).copied().collect();
        adj[center].retain(|y| !leaves.contains(y));
        for &l in &leaves {
            adj[l].retain(|&y| y != center);
        }
        out.stars.push(Star::new(center, leaves));
    }
    Ok(out)
}

/// A random graph where each pair is an edge with probability `density`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Graph {
    let edges = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Graph::from_sorted_unique(n, edges)
}

/// Drops random edges until the edge count is divisible by `k`.
pub fn trim_to_multiple<R: Rng + ?Sized>(g: &Graph, k: usize, rng: &mut R) -> Graph {
    let mut edges = g.edges().to_vec();
    while edges.len() % k != 0 {
        let i = rng.gen_range(0..edges.len());
        edges.remove(i);
    }
    Graph::from_sorted_unique(g.order(), edges)
}

/// A random `k`-precentral function: each of the `|E|/k` units goes to a
/// uniformly random vertex.
pub fn random_precentral<R: Rng + ?Sized>(g: &Graph, k: usize, rng: &mut R) -> Vec<usize> {
    let n = g.order();
    let mut p = vec![0; n];
    if n == 0 {
        return p;
    }
    for _ in 0..g.edge_count() / k {
        p[rng.gen_range(0..n)] += 1;
    }
    p
}
