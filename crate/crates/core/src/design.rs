//! Stars, partial designs, and the arithmetic of admissible orders.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One copy of `K_{1,k}`: a centre joined to `k` distinct leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

impl Star {
    /// Builds a star with its leaves sorted. No other checking is done;
    /// use [`PartialDesign::validate`] for that.
    pub fn new(center: usize, leaves: impl IntoIterator<Item = usize>) -> Self {
        let mut leaves: Vec<usize> = leaves.into_iter().collect();
        leaves.sort_unstable();
        Star { center, leaves }
    }

    /// The `k` centre-leaf edges as `(min, max)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let c = self.center;
        self.leaves.iter().map(move |&l| (c.min(l), c.max(l)))
    }

    fn canonicalize(&mut self) {
        self.leaves.sort_unstable();
    }
}

/// A reason a [`PartialDesign`] is malformed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OrderZero,
    StarSizeTooSmall { k: usize },
    LeafCount { star: usize, expected: usize, got: usize },
    VertexOutOfRange { star: usize, vertex: usize, n: usize },
    CenterIsLeaf { star: usize, vertex: usize },
    RepeatedLeaf { star: usize, vertex: usize },
    EdgeCoveredTwice { edge: (usize, usize), first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::OrderZero => write!(f, "order must be at least 1"),
            Violation::StarSizeTooSmall { k } => write!(f, "star size k = {k} is below 2"),
            Violation::LeafCount { star, expected, got } => {
                write!(f, "star {star} has {got} leaves, expected {expected}")
            }
            Violation::VertexOutOfRange { star, vertex, n } => {
                write!(f, "star {star} uses vertex {vertex}, outside 0..{n}")
            }
            Violation::CenterIsLeaf { star, vertex } => {
                write!(f, "star {star} lists its centre {vertex} as a leaf")
            }
            Violation::RepeatedLeaf { star, vertex } => {
                write!(f, "star {star} repeats leaf {vertex}")
            }
            Violation::EdgeCoveredTwice { edge: (x, y), first, second } => {
                write!(f, "edge {{{x},{y}}} covered twice (stars {first} and {second})")
            }
        }
    }
}

/// A set of edge-disjoint `k`-stars on the vertex set `0..n`.
///
/// The JSON form is `{"k": .., "n": .., "stars": [{"center": .., "leaves": [..]}]}`.
/// Fields serialize in sorted key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialDesign {
    pub k: usize,
    pub n: usize,
    pub stars: Vec<Star>,
}

/// Per-vertex count of stars centred at each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralFunction(pub Vec<usize>);

impl CentralFunction {
    pub fn get(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Vertices centring at least one star.
    pub fn centers(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&x| self.0[x] > 0).collect()
    }
}

impl PartialDesign {
    pub fn new(n: usize, k: usize, stars: Vec<Star>) -> Self {
        PartialDesign { k, n, stars }
    }

    pub fn empty(n: usize, k: usize) -> Self {
        Self::new(n, k, Vec::new())
    }

    /// Checks every structural invariant and reports all violations found.
    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if self.n == 0 {
            out.push(Violation::OrderZero);
        }
        if self.k < 2 {
            out.push(Violation::StarSizeTooSmall { k: self.k });
        }
        let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, star) in self.stars.iter().enumerate() {
            if star.leaves.len() != self.k {
                out.push(Violation::LeafCount {
                    star: i,
                    expected: self.k,
                    got: star.leaves.len(),
                });
            }
            let mut in_range = true;
            for &v in std::iter::once(&star.center).chain(&star.leaves) {
                if v >= self.n {
                    in_range = false;
                    out.push(Violation::VertexOutOfRange { star: i, vertex: v, n: self.n });
                }
            }
            let mut sorted = star.leaves.clone();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    out.push(Violation::RepeatedLeaf { star: i, vertex: w[0] });
                }
            }
            sorted.dedup();
            if sorted.binary_search(&star.center).is_ok() {
                out.push(Violation::CenterIsLeaf { star: i, vertex: star.center });
            }
            if !in_range {
                continue;
            }
            for &l in &sorted {
                if l == star.center {
                    continue;
                }
                let e = (l.min(star.center), l.max(star.center));
                if let Some(&first) = owner.get(&e) {
                    out.push(Violation::EdgeCoveredTwice { edge: e, first, second: i });
                } else {
                    owner.insert(e, i);
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    pub(crate) fn check(&self) -> Result<()> {
        self.validate().map_err(Error::InvalidDesign)
    }

    /// The graph of edges of `K_n` covered by no star.
    pub fn leftover(&self) -> Result<Graph> {
        self.check()?;
        let mut covered = vec![vec![false; self.n]; self.n];
        for star in &self.stars {
            for (x, y) in star.edges() {
                covered[x][y] = true;
            }
        }
        let edges = (0..self.n)
            .flat_map(|x| (x + 1..self.n).map(move |y| (x, y)))
            .filter(|&(x, y)| !covered[x][y])
            .collect();
        Ok(Graph::from_sorted_unique(self.n, edges))
    }

    /// Number of stars centred at each vertex. Out-of-range centres are
    /// ignored, so call this on validated designs.
    pub fn central_function(&self) -> CentralFunction {
        let mut c = vec![0; self.n];
        for star in &self.stars {
            if let Some(slot) = c.get_mut(star.center) {
                *slot += 1;
            }
        }
        CentralFunction(c)
    }

    /// Vertices that centre at least one star and are a leaf of none.
    pub fn pure_centers(&self) -> Vec<usize> {
        let mut is_leaf = vec![false; self.n];
        for star in &self.stars {
            for &l in &star.leaves {
                if let Some(slot) = is_leaf.get_mut(l) {
                    *slot = true;
                }
            }
        }
        self.central_function()
            .centers()
            .into_iter()
            .filter(|&x| !is_leaf[x])
            .collect()
    }

    /// Order `≡ 1 (mod k)`, exactly `u(n,k)` stars, and some centre that is
    /// never a leaf.
    pub fn is_reducible(&self) -> bool {
        self.k >= 2
            && self.n > 1
            && self.n % self.k == 1
            && threshold_u(self.n, self.k) == self.stars.len() as i64
            && !self.pure_centers().is_empty()
    }

    /// A copy with every leaf list sorted and stars in input order.
    pub fn canonical(&self) -> Self {
        let mut d = self.clone();
        for s in &mut d.stars {
            s.canonicalize();
        }
        d
    }

    /// Canonical pretty JSON: sorted keys, sorted leaf arrays, trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.canonical()).expect("design serializes");
        s.push('\n');
        s
    }

    /// Parses a JSON design document. Does not validate.
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `C(n,2) ≡ 0 (mod k)`.
pub fn is_admissible(n: usize, k: usize) -> bool {
    assert!(k >= 1, "k must be positive");
    binomial2(n) % k == 0
}

/// Whether a complete `k`-star design of order `n` exists.
pub fn design_exists(n: usize, k: usize) -> bool {
    is_admissible(n, k) && (n == 1 || n >= 2 * k)
}

/// Largest star count for which every partial `k`-star design of
/// admissible order `n ≥ 2k` is completable.
///
/// The value is `-1` for some orders below `k + 2` (for example
/// `u(3,3)`), where even the empty design is uncompletable.
///
/// # Panics
///
/// If `n < 2` or `k < 2`.
pub fn threshold_u(n: usize, k: usize) -> i64 {
    assert!(n > 1 && k >= 2, "threshold_u needs n > 1 and k >= 2");
    let (n, k) = (n as i64, k as i64);
    if n % k == 1 {
        2 * (n - 1) / k - 2
    } else {
        2 * ((n - 2) / k) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn design(n: usize, k: usize, stars: &[(usize, &[usize])]) -> PartialDesign {
        PartialDesign::new(
            n,
            k,
            stars.iter().map(|&(c, l)| Star::new(c, l.iter().copied())).collect(),
        )
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(9, 3));
        assert!(!is_admissible(8, 3));
        assert!(is_admissible(9, 4));
        assert!(design_exists(6, 3));
        assert!(!design_exists(4, 3));
        assert!(design_exists(1, 5));
    }

    #[test]
    fn threshold_values() {
        assert_eq!(threshold_u(9, 3), 3);
        assert_eq!(threshold_u(7, 3), 2);
        assert_eq!(threshold_u(10, 2), 7);
        assert_eq!(threshold_u(3, 3), -1);
        for n in 2..60 {
            assert_eq!(threshold_u(n, 2), n as i64 - 3);
        }
    }

    #[test]
    fn validate_reports_every_violation() {
        assert_eq!(design(6, 3, &[(0, &[1, 2, 3])]).validate(), Ok(()));

        let twice = design(6, 3, &[(0, &[1, 2, 3]), (1, &[0, 4, 5])]);
        assert_eq!(
            twice.validate(),
            Err(vec![Violation::EdgeCoveredTwice { edge: (0, 1), first: 0, second: 1 }])
        );

        let short = design(6, 3, &[(0, &[1, 2])]);
        assert_eq!(
            short.validate(),
            Err(vec![Violation::LeafCount { star: 0, expected: 3, got: 2 }])
        );

        let messy = design(4, 3, &[(0, &[0, 5, 5])]);
        let v = messy.validate().unwrap_err();
        assert_eq!(v.len(), 4, "{v:?}");
        assert!(v.contains(&Violation::CenterIsLeaf { star: 0, vertex: 0 }));
        assert!(v.contains(&Violation::RepeatedLeaf { star: 0, vertex: 5 }));
    }

    #[test]
    fn leftover_edges() {
        let l = design(4, 2, &[(0, &[1, 2])]).leftover().unwrap();
        assert_eq!(l.edges(), &[(0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(PartialDesign::empty(6, 3).leftover().unwrap().edge_count(), 15);
        let two = design(6, 3, &[(0, &[1, 2, 3]), (1, &[2, 3, 4])]);
        assert_eq!(two.leftover().unwrap().edge_count(), 9);
        assert!(design(6, 3, &[(0, &[1, 2])]).leftover().is_err());
    }

    #[test]
    fn central_functions() {
        let d = design(6, 3, &[(0, &[1, 2, 3]), (0, &[2, 4, 5])]);
        // shares edge {0,2}, but the central function does not care
        assert_eq!(d.central_function().0, vec![2, 0, 0, 0, 0, 0]);
        let d = design(6, 3, &[(0, &[1, 2, 3]), (0, &[4, 5, 6])]);
        assert!(d.validate().is_err());
        assert_eq!(PartialDesign::empty(6, 3).central_function().0, vec![0; 6]);
        let d = design(7, 3, &[(0, &[1, 2, 3]), (1, &[4, 5, 6])]);
        assert_eq!(d.central_function().0, vec![1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn reducibility() {
        assert!(design(7, 3, &[(0, &[1, 2, 3]), (0, &[4, 5, 6])]).is_reducible());
        // invalid (edge {0,1} twice) and every centre is a leaf
        assert!(!design(7, 3, &[(0, &[1, 2, 3]), (1, &[0, 4, 5])]).is_reducible());
        let nine = design(9, 3, &[(0, &[1, 2, 3]), (0, &[4, 5, 6]), (1, &[7, 8, 2])]);
        assert!(!nine.is_reducible());
        // right count needed
        assert!(!design(7, 3, &[(0, &[1, 2, 3])]).is_reducible());
    }

    #[test]
    fn json_is_canonical() {
        let d = PartialDesign::new(6, 3, vec![Star { center: 0, leaves: vec![3, 1, 2] }]);
        let text = d.to_json();
        assert!(text.find("\"k\"").unwrap() < text.find("\"n\"").unwrap());
        assert!(text.contains("[\n        1,\n        2,\n        3\n      ]"));
        let back = PartialDesign::from_json(&text).unwrap();
        assert_eq!(back, d.canonical());
        let reordered = r#"{"stars": [{"leaves": [2, 1, 3], "center": 0}], "n": 6, "k": 3}"#;
        assert_eq!(PartialDesign::from_json(reordered).unwrap().to_json(), text);
    }
}
