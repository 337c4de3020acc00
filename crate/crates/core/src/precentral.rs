//! Precentral functions: how many stars each vertex should centre.
//!
//! A `k`-precentral function for a graph `G` assigns a nonnegative
//! integer `p(x)` to every vertex with `Σ p(x) = |E(G)|/k`. The residue
//! `p*(x) = p(x) − deg(x)/2k` measures how far `p` strays from an even
//! split of every vertex's edges between "centre side" and "leaf side".
//! Residues share the denominator `2k` and are kept as exact integer
//! numerators throughout.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An exact rational `numerator / 2k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    numerator: i64,
    k: usize,
}

impl Residue {
    pub fn new(numerator: i64, k: usize) -> Self {
        Residue { numerator, k }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        2 * self.k as i64
    }

    /// Numerator and denominator in lowest terms.
    pub fn reduced(&self) -> (i64, i64) {
        let g = gcd(self.numerator.unsigned_abs(), self.denominator() as u64).max(1) as i64;
        (self.numerator / g, self.denominator() / g)
    }
}

impl PartialOrd for Residue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Residue {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as i128 * other.denominator() as i128;
        let rhs = other.numerator as i128 * self.denominator() as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reduced() {
            (num, 1) => write!(f, "{num}"),
            (num, den) => write!(f, "{num}/{den}"),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A `k`-precentral function together with the degrees of its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precentral {
    k: usize,
    values: Vec<usize>,
    degrees: Vec<usize>,
}

impl Precentral {
    /// Checks that `values` is `k`-precentral for `g`.
    pub fn new(g: &Graph, k: usize, values: Vec<usize>) -> Result<Self> {
        check_precentral(g, k, &values)?;
        Ok(Precentral {
            k,
            values,
            degrees: g.degrees(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn get(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    pub fn pstar(&self, x: usize) -> Residue {
        let num = 2 * self.k as i64 * self.values[x] as i64 - self.degrees[x] as i64;
        Residue::new(num, self.k)
    }

    pub fn residues(&self) -> Vec<Residue> {
        (0..self.values.len()).map(|x| self.pstar(x)).collect()
    }

    /// Whether every `p(x)` is the floor or ceiling of `deg(x)/2k`.
    pub fn is_proportional(&self) -> bool {
        let two_k = 2 * self.k;
        self.values.iter().zip(&self.degrees).all(|(&p, &d)| {
            let lo = d / two_k;
            let hi = d.div_ceil(two_k);
            p == lo || p == hi
        })
    }

    /// `Σ |p*(x)|` scaled by `2k`.
    pub fn scaled_total_deviation(&self) -> i64 {
        (0..self.values.len())
            .map(|x| self.pstar(x).numerator().abs())
            .sum()
    }

    fn argmin_residue(&self) -> usize {
        (0..self.values.len())
            .min_by_key(|&x| self.pstar(x).numerator())
            .expect("nonempty graph")
    }

    fn argmax_residue(&self) -> usize {
        // ties go to the smallest index
        (0..self.values.len())
            .rev()
            .max_by_key(|&x| self.pstar(x).numerator())
            .expect("nonempty graph")
    }
}

pub(crate) fn check_precentral(g: &Graph, k: usize, values: &[usize]) -> Result<()> {
    if k < 2 {
        return Err(Error::StarSizeTooSmall(k));
    }
    if values.len() != g.order() {
        return Err(Error::LengthMismatch { got: values.len(), n: g.order() });
    }
    let edges = g.edge_count();
    if edges % k != 0 {
        return Err(Error::EdgeCountNotDivisible { edges, k });
    }
    let sum: usize = values.iter().sum();
    if sum != edges / k {
        return Err(Error::PrecentralSum { sum, expected: edges / k });
    }
    Ok(())
}

/// The proportional function minimising `Σ|p*|`.
///
/// Every vertex starts at `⌊deg/2k⌋`; the remaining `|E|/k − Σ⌊deg/2k⌋`
/// units go to the vertices with the largest `deg mod 2k`, smaller index
/// first on ties.
pub fn minimal(g: &Graph, k: usize) -> Result<Precentral> {
    if k < 2 {
        return Err(Error::StarSizeTooSmall(k));
    }
    let edges = g.edge_count();
    if edges % k != 0 {
        return Err(Error::EdgeCountNotDivisible { edges, k });
    }
    let two_k = 2 * k;
    let degrees = g.degrees();
    let mut values: Vec<usize> = degrees.iter().map(|d| d / two_k).collect();
    let floor_sum: usize = values.iter().sum();
    let extra = edges / k - floor_sum;

    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(degrees[x] % two_k), x));
    for &x in order.iter().take(extra) {
        debug_assert!(degrees[x] % two_k != 0);
        values[x] += 1;
    }
    Ok(Precentral { k, values, degrees })
}

/// `p*(x)` for a precentral function.
pub fn pstar(p: &Precentral, x: usize) -> Residue {
    p.pstar(x)
}

/// A defect that prevents a minimal function from being realised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flaw {
    /// `deg(y) < k` but `y` is asked to centre one star.
    Vertex(usize),
    /// Neither endpoint is asked to centre anything, so the edge cannot be
    /// covered.
    Edge(usize, usize),
}

/// Least bad vertex, else least bad edge, under the function `values`.
pub fn find_bad(g: &Graph, k: usize, values: &[usize]) -> Option<Flaw> {
    if let Some(y) = (0..g.order()).find(|&y| g.degree(y) < k && values[y] == 1) {
        return Some(Flaw::Vertex(y));
    }
    g.edges()
        .iter()
        .find(|&&(a, b)| values[a] == 0 && values[b] == 0)
        .map(|&(a, b)| Flaw::Edge(a, b))
}

/// How a minimal function was modified to obtain a suitable one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Repair {
    None,
    /// Moved one unit from bad vertex `y` to the min-residue vertex `z`.
    Vertex { y: usize, z: usize },
    /// Moved one unit from the max-residue vertex `z` to `y2`, the
    /// higher-degree endpoint of the bad edge `y1 y2`.
    Edge { y1: usize, y2: usize, z: usize },
}

impl fmt::Display for Repair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Repair::None => write!(f, "none"),
            Repair::Vertex { y, z } => write!(f, "vertex {y} -> {z}"),
            Repair::Edge { y1, y2, z } => write!(f, "edge {y1}-{y2} at {y2} <- {z}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Suitable {
    pub function: Precentral,
    pub repair: Repair,
    /// A flaw still present after the single repair. Only possible on graphs
    /// that are not leftovers of threshold-size designs.
    pub residual_flaw: Option<Flaw>,
}

/// A minimal function with at most one flaw repaired.
///
/// A bad vertex is repaired in preference to a bad edge. Donor and
/// recipient vertices are the smallest-index vertices attaining the
/// extreme residue.
pub fn suitable(g: &Graph, k: usize) -> Result<Suitable> {
    let m = minimal(g, k)?;
    let repair = match find_bad(g, k, m.values()) {
        None => Repair::None,
        Some(Flaw::Vertex(y)) => Repair::Vertex { y, z: m.argmin_residue() },
        Some(Flaw::Edge(a, b)) => {
            let (y1, y2) = if g.degree(a) > g.degree(b) { (b, a) } else { (a, b) };
            Repair::Edge { y1, y2, z: m.argmax_residue() }
        }
    };
    let mut s = m;
    match repair {
        Repair::None => {}
        Repair::Vertex { y, z } => {
            s.values[y] -= 1;
            s.values[z] += 1;
        }
        Repair::Edge { y2, z, .. } => {
            s.values[y2] += 1;
            s.values[z] -= 1;
        }
    }
    let residual_flaw = match repair {
        Repair::None => None,
        _ => find_bad(g, k, s.values()),
    };
    Ok(Suitable { function: s, repair, residual_flaw })
}

/// `Δ_T = (edges meeting T) − k·p(T)` for a nonempty proper subset `T`.
pub fn delta_t(g: &Graph, k: usize, values: &[usize], subset: &[usize]) -> Result<i64> {
    let n = g.order();
    let mut members = vec![false; n];
    for &x in subset {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        members[x] = true;
    }
    let t = members.iter().filter(|&&b| b).count();
    if t == 0 || t == n {
        return Err(Error::ImproperSubset);
    }
    let plus = g.edges_meeting(&members) as i64;
    let minus: usize = (0..n).filter(|&x| members[x]).map(|x| values[x]).sum();
    Ok(plus - (k * minus) as i64)
}
