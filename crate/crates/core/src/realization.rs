//! Turning a precentral function into an explicit star decomposition.
//!
//! Realising `p` amounts to orienting every edge towards one endpoint, its
//! centre side, so that vertex `x` receives exactly `k·p(x)` edges. That is
//! a bipartite transportation problem (edges supply one unit each, vertices
//! demand `k·p(x)`) solved here by maximum flow. When the flow falls short,
//! the residual network yields a vertex set `T` with `Δ_T < 0`: fewer edges
//! meet `T` than `T` is asked to centre.

use itertools::Itertools;

use crate::design::Star;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::precentral::{check_precentral, delta_t};

/// Stars whose edge sets partition the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDecomposition {
    pub stars: Vec<Star>,
}

impl StarDecomposition {
    pub fn central_function(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for s in &self.stars {
            c[s.center] += 1;
        }
        c
    }
}

/// For each edge of the graph (in canonical order), the endpoint it is
/// centred at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub centers: Vec<usize>,
}

impl Assignment {
    /// Groups the edges assigned to each vertex into stars of size `k`,
    /// taking leaves in increasing order.
    pub fn into_stars(&self, g: &Graph, k: usize) -> StarDecomposition {
        let mut leaves: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
        for (&(x, y), &c) in g.edges().iter().zip(&self.centers) {
            leaves[c].push(if c == x { y } else { x });
        }
        let mut stars = Vec::new();
        for (center, mut ls) in leaves.into_iter().enumerate() {
            ls.sort_unstable();
            debug_assert_eq!(ls.len() % k, 0);
            for chunk in ls.chunks(k) {
                stars.push(Star::new(center, chunk.iter().copied()));
            }
        }
        StarDecomposition { stars }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    Realized(StarDecomposition),
    /// `p` is not realisable; `witness` is a vertex set with `Δ_T < 0`.
    Infeasible { witness: Vec<usize> },
}

impl Realization {
    pub fn decomposition(self) -> Option<StarDecomposition> {
        match self {
            Realization::Realized(d) => Some(d),
            Realization::Infeasible { .. } => None,
        }
    }
}

/// Finds an edge orientation meeting the demands `k·p(x)`, or a deficient
/// vertex set.
pub fn assign(g: &Graph, k: usize, p: &[usize]) -> Result<std::result::Result<Assignment, Vec<usize>>> {
    check_precentral(g, k, p)?;
    let m = g.edge_count();
    let n = g.order();
    let source = 0;
    let edge_node = |i: usize| 1 + i;
    let vertex_node = |x: usize| 1 + m + x;
    let sink = 1 + m + n;

    let mut net = FlowNetwork::new(sink + 1);
    let mut choice = Vec::with_capacity(m);
    for (i, &(x, y)) in g.edges().iter().enumerate() {
        net.add_edge(source, edge_node(i), 1);
        let hx = net.add_edge(edge_node(i), vertex_node(x), 1);
        let hy = net.add_edge(edge_node(i), vertex_node(y), 1);
        choice.push((hx, hy));
    }
    for x in 0..n {
        net.add_edge(vertex_node(x), sink, (k * p[x]) as i64);
    }

    let flow = net.max_flow(source, sink);
    if flow as usize == m {
        let centers = g
            .edges()
            .iter()
            .zip(&choice)
            .map(|(&(x, y), &(hx, _))| if net.flow(hx) == 1 { x } else { y })
            .collect();
        return Ok(Ok(Assignment { centers }));
    }

    let reach = net.reaching(sink);
    let witness: Vec<usize> = (0..n).filter(|&x| reach[vertex_node(x)]).collect();
    debug_assert!(delta_t(g, k, p, &witness).is_ok_and(|d| d < 0));
    Ok(Err(witness))
}

/// Realises `p` as the central function of a `k`-star decomposition of `g`.
pub fn realize(g: &Graph, k: usize, p: &[usize]) -> Result<Realization> {
    Ok(match assign(g, k, p)? {
        Ok(a) => Realization::Realized(a.into_stars(g, k)),
        Err(witness) => Realization::Infeasible { witness },
    })
}

/// Largest order [`subset_check`] enumerates by default.
pub const SUBSET_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubsetCheck {
    Pass,
    Fails(Vec<usize>),
}

/// Checks `Δ_T ≥ 0` over every nonempty proper vertex subset, by size and
/// then lexicographically, returning the first failure.
pub fn subset_check(g: &Graph, k: usize, p: &[usize], limit: usize) -> Result<SubsetCheck> {
    check_precentral(g, k, p)?;
    let n = g.order();
    if n > limit || n > 63 {
        return Err(Error::TooLarge { n, limit });
    }
    let mut adj = vec![0u64; n];
    for &(x, y) in g.edges() {
        adj[x] |= 1 << y;
        adj[y] |= 1 << x;
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let m = g.edge_count() as i64;
    for t in 1..n {
        for subset in (0..n).combinations(t) {
            let mask: u64 = subset.iter().map(|&x| 1u64 << x).sum();
            let rest = full & !mask;
            let inside_rest: u32 = (0..n)
                .filter(|&x| rest >> x & 1 == 1)
                .map(|x| (adj[x] & rest).count_ones())
                .sum();
            let meeting = m - (inside_rest / 2) as i64;
            let demand: usize = subset.iter().map(|&x| p[x]).sum();
            if meeting < (k * demand) as i64 {
                return Ok(SubsetCheck::Fails(subset));
            }
        }
    }
    Ok(SubsetCheck::Pass)
}

/// Whether `d` is a `k`-star decomposition of `g`, optionally with central
/// function `p`.
pub fn verify_decomposition(g: &Graph, k: usize, d: &StarDecomposition, p: Option<&[usize]>) -> bool {
    let n = g.order();
    let mut used = std::collections::HashSet::new();
    for s in &d.stars {
        if s.center >= n || s.leaves.len() != k {
            return false;
        }
        for &l in &s.leaves {
            if l >= n || l == s.center || !g.has_edge(s.center, l) {
                return false;
            }
            if !used.insert((s.center.min(l), s.center.max(l))) {
                return false;
            }
        }
    }
    if used.len() != g.edge_count() {
        return false;
    }
    match p {
        Some(p) => p.len() == n && d.central_function(n) == p,
        None => true,
    }
}
