//! The completion pipeline.
//!
//! A design with at most `u(n,k)` stars is first padded with greedy stars
//! up to exactly `u(n,k)`. Reducible designs lose a vertex and are
//! completed one order lower. Otherwise a precentral function is chosen
//! for the leftover according to `(k, n)` and realised:
//!
//! | case                 | function                                  |
//! |----------------------|-------------------------------------------|
//! | `k = 2`              | none, direct 2-star decomposition         |
//! | `n = 2k`             | relabelled canonical design of `K_{2k}`   |
//! | `2k+1 < n ≤ 3k`      | explicit `C`/`S` construction, 3 stars    |
//! | `n = 3k+1`, `k` odd  | explicit `C`/`S` construction, 4 stars    |
//! | `n > 3k+1`           | suitable function                         |
//!
//! Every branch is guaranteed to succeed on in-range inputs. A failure
//! there is reported as [`Error::Defect`] carrying the `Δ_T < 0` witness.

use std::collections::VecDeque;
use std::fmt;

use serde_json::{json, Value};

use crate::design::{design_exists, is_admissible, threshold_u, PartialDesign, Star};
use crate::error::{Error, Result};
use crate::extremal::{check_blocked_edge, BlockedEdgeCertificate};
use crate::graph::Graph;
use crate::oracle::{decompose_exhaustive, Search, DEFAULT_BUDGET};
use crate::precentral::{minimal, suitable, Precentral, Repair};
use crate::realization::{realize, Realization, StarDecomposition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Impossibility {
    NotAdmissible,
    /// `2 ≤ n ≤ 2k − 1`: no design of this order exists at all.
    OrderTooSmall,
    BlockedEdge(BlockedEdgeCertificate),
    /// `k = 2` only: a leftover component with an odd number of edges.
    OddComponent(Vec<usize>),
    /// The exhaustive search found no decomposition of the leftover.
    NoDecomposition,
}

impl Impossibility {
    pub fn name(&self) -> &'static str {
        match self {
            Impossibility::NotAdmissible => "not-admissible",
            Impossibility::OrderTooSmall => "order-too-small",
            Impossibility::BlockedEdge(_) => "blocked-edge",
            Impossibility::OddComponent(_) => "odd-component",
            Impossibility::NoDecomposition => "no-decomposition",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Completed(PartialDesign),
    Impossible(Impossibility),
    /// Above the threshold with no certificate either way.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallOrder {
    /// `2k + 1 < n ≤ 3k`, three stars.
    UpTo3k,
    /// `n = 3k + 1`, four stars.
    Exactly3kPlus1,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Padded { added: usize },
    Reduced { vertex: usize, removed: usize },
    Restored { vertex: usize, added: usize },
    TwoStars,
    Canonical2k,
    SmallOrder(SmallOrder),
    Suitable(Repair),
    Realized { added: usize },
    OverThreshold,
    BlockedEdge,
    Oracle,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Padded { added } => write!(f, "pad +{added}"),
            Step::Reduced { vertex, removed } => write!(f, "reduce x={vertex} -{removed}"),
            Step::Restored { vertex, added } => write!(f, "restore x={vertex} +{added}"),
            Step::TwoStars => write!(f, "decompose-2stars"),
            Step::Canonical2k => write!(f, "canonical-2k"),
            Step::SmallOrder(SmallOrder::UpTo3k) => write!(f, "small-order n<=3k"),
            Step::SmallOrder(SmallOrder::Exactly3kPlus1) => write!(f, "small-order n=3k+1"),
            Step::Suitable(repair) => write!(f, "suitable repair={repair}"),
            Step::Realized { added } => write!(f, "realize +{added}"),
            Step::OverThreshold => write!(f, "over-threshold"),
            Step::BlockedEdge => write!(f, "blocked-edge"),
            Step::Oracle => write!(f, "oracle"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionResult {
    pub outcome: Outcome,
    pub trace: Vec<Step>,
}

impl CompletionResult {
    pub fn completed(&self) -> Option<&PartialDesign> {
        match &self.outcome {
            Outcome::Completed(d) => Some(d),
            _ => None,
        }
    }

    /// JSON report with sorted keys.
    pub fn to_json(&self) -> Value {
        let trace: Vec<String> = self.trace.iter().map(Step::to_string).collect();
        match &self.outcome {
            Outcome::Completed(d) => json!({
                "design": serde_json::to_value(d.canonical()).expect("design serializes"),
                "outcome": "completed",
                "trace": trace,
            }),
            Outcome::Impossible(why) => {
                let mut v = json!({
                    "outcome": "impossible",
                    "reason": why.name(),
                    "trace": trace,
                });
                match why {
                    Impossibility::BlockedEdge(cert) => {
                        v["certificate"] = serde_json::to_value(cert).expect("certificate serializes");
                    }
                    Impossibility::OddComponent(vertices) => v["component"] = json!(vertices),
                    _ => {}
                }
                v
            }
            Outcome::Unknown => json!({ "outcome": "unknown", "trace": trace }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Node budget for the exhaustive fallback above the threshold.
    pub oracle_budget: u64,
    /// Largest order the exhaustive fallback is attempted on.
    pub oracle_max_order: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            oracle_budget: DEFAULT_BUDGET,
            oracle_max_order: 10,
        }
    }
}

fn defect(message: impl Into<String>, witness: Option<Vec<usize>>) -> Error {
    Error::Defect { message: message.into(), witness }
}

/// Adds greedy stars until the design has exactly `u(n,k)` stars.
///
/// Each new star is centred at the smallest vertex with leftover degree at
/// least `k`, on its `k` smallest leftover neighbours.
pub fn pad_to_threshold(d: &PartialDesign) -> Result<PartialDesign> {
    d.check()?;
    let (n, k) = (d.n, d.k);
    if !is_admissible(n, k) || n < 2 * k {
        return Err(Error::OutOfRange(format!("padding needs an admissible order n >= 2k, got n={n}, k={k}")));
    }
    let u = threshold_u(n, k) as usize;
    if d.stars.len() > u {
        return Err(Error::OutOfRange(format!("{} stars exceed u({n},{k}) = {u}", d.stars.len())));
    }
    let leftover = d.leftover()?;
    let mut adj: Vec<Vec<usize>> = (0..n).map(|x| leftover.neighbors(x).to_vec()).collect();
    let mut out = d.canonical();
    while out.stars.len() < u {
        let Some(center) = (0..n).find(|&x| adj[x].len() >= k) else {
            return Err(Error::Stuck { placed: out.stars.len(), wanted: u });
        };
        let leaves: Vec<usize> = adj[center][..k].to_vec();
        adj[center].drain(..k);
        for &l in &leaves {
            adj[l].retain(|&y| y != center);
        }
        out.stars.push(Star::new(center, leaves));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// The design on the remaining `n − 1` vertices, renumbered in order.
    pub smaller: PartialDesign,
    pub vertex: usize,
    /// The stars centred at the removed vertex.
    pub removed: Vec<Star>,
}

impl Reduction {
    /// Index in the original design of vertex `v` of the smaller one.
    pub fn lift(&self, v: usize) -> usize {
        if v >= self.vertex {
            v + 1
        } else {
            v
        }
    }
}

/// Removes the smallest vertex that centres a star and is a leaf of none.
pub fn reduce(d: &PartialDesign) -> Result<Reduction> {
    d.check()?;
    if !d.is_reducible() {
        return Err(Error::NotReducible);
    }
    let x = d.pure_centers()[0];
    let drop = |v: usize| if v > x { v - 1 } else { v };
    let (removed, kept): (Vec<Star>, Vec<Star>) =
        d.canonical().stars.into_iter().partition(|s| s.center == x);
    let stars = kept
        .into_iter()
        .map(|s| Star::new(drop(s.center), s.leaves.iter().map(|&l| drop(l))))
        .collect();
    Ok(Reduction {
        smaller: PartialDesign::new(d.n - 1, d.k, stars),
        vertex: x,
        removed,
    })
}

/// A component of the graph with an odd number of edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddComponent(pub Vec<usize>);

/// Decomposes `g` into 2-stars (paths of length two), which is possible
/// exactly when every component has an even number of edges.
///
/// Each component is processed leaves-first along a BFS tree. A vertex
/// takes all its untaken edges except the one to its parent, adding the
/// parent edge as well if that makes the count even, and pairs them up.
/// Whatever reaches the root is then even.
pub fn decompose_2stars(g: &Graph) -> std::result::Result<StarDecomposition, OddComponent> {
    let n = g.order();
    let mut taken = vec![vec![false; n]; n];
    let mut stars = Vec::new();
    for comp in g.nontrivial_components() {
        let edges: usize = comp.iter().map(|&x| g.degree(x)).sum::<usize>() / 2;
        if edges % 2 == 1 {
            return Err(OddComponent(comp));
        }
        let root = comp[0];
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        parent[root] = root;
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        for &v in order.iter().rev() {
            let mut mine: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !taken[v][w] && (v == root || w != parent[v]))
                .collect();
            if mine.len() % 2 == 1 {
                debug_assert!(v != root, "root left with an odd number of edges");
                mine.push(parent[v]);
                mine.sort_unstable();
            }
            for &w in &mine {
                taken[v][w] = true;
                taken[w][v] = true;
            }
            for pair in mine.chunks(2) {
                stars.push(Star::new(v, pair.iter().copied()));
            }
        }
    }
    Ok(StarDecomposition { stars })
}

/// The explicit precentral function for `3k`-or-smaller and `3k + 1`
/// orders: centres `x ∈ C` get `2 − c(x)`, the `|S|` highest-degree
/// non-centres get 2, everything else 1.
pub fn small_order_precentral(d: &PartialDesign) -> Result<Precentral> {
    d.check()?;
    let (n, k) = (d.n, d.k);
    let out_of_range = |why: &str| Error::OutOfRange(format!("small-order construction, n={n} k={k}: {why}"));
    if k < 3 {
        return Err(out_of_range("needs k >= 3"));
    }
    if !is_admissible(n, k) {
        return Err(out_of_range("order is not admissible"));
    }
    if n <= 2 * k + 1 || n > 3 * k + 1 {
        return Err(out_of_range("needs 2k+1 < n <= 3k+1"));
    }
    if d.stars.len() as i64 != threshold_u(n, k) {
        return Err(out_of_range("star count is not u(n,k)"));
    }
    if d.is_reducible() {
        return Err(out_of_range("design is reducible"));
    }
    let c = d.central_function();
    let centers = c.centers();
    let (ki, ni) = (k as i64, n as i64);
    let s_size = if n <= 3 * k {
        let b = ni - 2 * ki;
        let h = match centers.len() {
            3 => 0,
            2 => 1,
            m => return Err(out_of_range(&format!("{m} centres, expected 2 or 3"))),
        };
        if (b * (b - 1)) % (2 * ki) != 0 {
            return Err(out_of_range("b(b-1) is not divisible by 2k"));
        }
        b + h + b * (b - 1) / (2 * ki) - 4
    } else {
        let h = match centers.len() {
            4 => 0,
            3 => 1,
            m => return Err(out_of_range(&format!("{m} centres, expected 3 or 4"))),
        };
        h + (3 * ki - 7) / 2
    };
    if s_size < 0 || s_size > ni - 3 {
        return Err(out_of_range(&format!("|S| = {s_size} out of range")));
    }
    let leftover = d.leftover()?;
    let mut others: Vec<usize> = (0..n).filter(|&x| c.get(x) == 0).collect();
    others.sort_by_key(|&x| (std::cmp::Reverse(leftover.degree(x)), x));
    let mut p = vec![1; n];
    for &x in &centers {
        p[x] = 2usize
            .checked_sub(c.get(x))
            .ok_or_else(|| out_of_range("a vertex centres more than two stars"))?;
    }
    for &x in others.iter().take(s_size as usize) {
        p[x] = 2;
    }
    Precentral::new(&leftover, k, p).map_err(|e| defect(format!("small-order function is not precentral: {e}"), None))
}

/// Completes `d` with default [`Options`].
pub fn complete(d: &PartialDesign) -> Result<CompletionResult> {
    complete_with(d, &Options::default())
}

pub fn complete_with(d: &PartialDesign, opts: &Options) -> Result<CompletionResult> {
    d.check()?;
    let (n, k) = (d.n, d.k);
    let mut trace = Vec::new();
    let impossible = |why, trace| Ok(CompletionResult { outcome: Outcome::Impossible(why), trace });

    if !is_admissible(n, k) {
        return impossible(Impossibility::NotAdmissible, trace);
    }
    if !design_exists(n, k) {
        return impossible(Impossibility::OrderTooSmall, trace);
    }
    if n == 1 {
        return Ok(CompletionResult { outcome: Outcome::Completed(d.canonical()), trace });
    }
    if d.stars.len() as i64 > threshold_u(n, k) {
        return over_threshold(d, opts, trace);
    }

    let padded = pad_to_threshold(d)?;
    trace.push(Step::Padded { added: padded.stars.len() - d.stars.len() });

    if padded.is_reducible() {
        return complete_reducible(&padded, opts, trace);
    }
    let leftover = padded.leftover()?;
    let extra = if k == 2 {
        trace.push(Step::TwoStars);
        decompose_2stars(&leftover)
            .map_err(|odd| defect("leftover of a threshold design has an odd component", Some(odd.0)))?
    } else if n == 2 * k {
        trace.push(Step::Canonical2k);
        canonical_2k(&padded)?
    } else if n == 2 * k + 1 {
        return Err(defect("order 2k+1 design with u(n,k) stars is not reducible", None));
    } else if n <= 3 * k + 1 {
        let p = small_order_precentral(&padded)?;
        trace.push(Step::SmallOrder(if n <= 3 * k {
            SmallOrder::UpTo3k
        } else {
            SmallOrder::Exactly3kPlus1
        }));
        realize_or_defect(&leftover, k, p.values())?
    } else {
        check_degree_facts(&leftover, k)?;
        let s = suitable(&leftover, k)?;
        trace.push(Step::Suitable(s.repair));
        if let Some(flaw) = s.residual_flaw {
            return Err(defect(format!("suitable function still has a flaw: {flaw:?}"), None));
        }
        if !s.function.is_proportional() {
            return Err(defect("suitable function is not proportional", None));
        }
        realize_or_defect(&leftover, k, s.function.values())?
    };
    trace.push(Step::Realized { added: extra.stars.len() });
    let mut full = padded;
    full.stars.extend(extra.stars);
    Ok(CompletionResult { outcome: Outcome::Completed(full), trace })
}

fn realize_or_defect(g: &Graph, k: usize, p: &[usize]) -> Result<StarDecomposition> {
    match realize(g, k, p)? {
        Realization::Realized(d) => Ok(d),
        Realization::Infeasible { witness } => Err(defect(
            format!("precentral function {p:?} is not realisable"),
            Some(witness),
        )),
    }
}

/// Degree facts on leftovers of non-reducible threshold designs with
/// `n > 3k + 1` that the suitable function relies on.
fn check_degree_facts(l: &Graph, k: usize) -> Result<()> {
    let n = l.order();
    let low: Vec<usize> = (0..n).filter(|&x| l.degree(x) <= k).collect();
    if low.len() > 1 {
        return Err(defect("more than one leftover vertex has degree <= k", Some(low)));
    }
    let below_2k = |x: usize| l.degree(x) < 2 * k;
    for &(x, y) in l.edges() {
        if below_2k(x) && below_2k(y) {
            if let Some(z) = (0..n).find(|&z| z != x && z != y && below_2k(z)) {
                return Err(defect(
                    "adjacent degree < 2k vertices alongside a third",
                    Some(vec![x, y, z]),
                ));
            }
        }
    }
    Ok(())
}

/// Completes a single-star design of order `2k` by relabelling a fixed
/// decomposition of `K_{2k}` so that one of its stars lands on the given one.
fn canonical_2k(d: &PartialDesign) -> Result<StarDecomposition> {
    let (n, k) = (d.n, d.k);
    let [given] = d.stars.as_slice() else {
        return Err(defect("order 2k design does not have exactly one star", None));
    };
    let complete = Graph::complete(n);
    let p = minimal(&complete, k)?;
    let base = realize_or_defect(&complete, k, p.values())?;
    let anchor = &base.stars[0];

    let mut map = vec![usize::MAX; n];
    map[anchor.center] = given.center;
    for (&from, &to) in anchor.leaves.iter().zip(&given.leaves) {
        map[from] = to;
    }
    let mut used = vec![false; n];
    for &v in map.iter().filter(|&&v| v != usize::MAX) {
        used[v] = true;
    }
    let mut free = (0..n).filter(|&v| !used[v]);
    for slot in map.iter_mut().filter(|v| **v == usize::MAX) {
        *slot = free.next().expect("bijection");
    }
    let stars = base.stars[1..]
        .iter()
        .map(|s| Star::new(map[s.center], s.leaves.iter().map(|&l| map[l])))
        .collect();
    Ok(StarDecomposition { stars })
}

fn complete_reducible(padded: &PartialDesign, opts: &Options, mut trace: Vec<Step>) -> Result<CompletionResult> {
    let k = padded.k;
    let red = reduce(padded)?;
    let x = red.vertex;
    trace.push(Step::Reduced { vertex: x, removed: red.removed.len() });

    let inner = complete_with(&red.smaller, opts)?;
    trace.extend(inner.trace);
    let Outcome::Completed(inner_design) = inner.outcome else {
        return Err(defect("reduced design could not be completed", Some(vec![x])));
    };

    let leftover = padded.leftover()?;
    let at_x = leftover.neighbors(x);
    if at_x.len() % k != 0 {
        return Err(defect("leftover degree of the removed vertex is not a multiple of k", Some(vec![x])));
    }
    let restored: Vec<Star> = at_x.chunks(k).map(|ls| Star::new(x, ls.iter().copied())).collect();
    trace.push(Step::Restored { vertex: x, added: restored.len() });

    let mut full = padded.clone();
    full.stars.extend(
        inner_design.stars[red.smaller.stars.len()..]
            .iter()
            .map(|s| Star::new(red.lift(s.center), s.leaves.iter().map(|&l| red.lift(l)))),
    );
    full.stars.extend(restored);
    Ok(CompletionResult { outcome: Outcome::Completed(full), trace })
}

fn over_threshold(d: &PartialDesign, opts: &Options, mut trace: Vec<Step>) -> Result<CompletionResult> {
    let k = d.k;
    trace.push(Step::OverThreshold);
    let leftover = d.leftover()?;
    let finish = |extra: StarDecomposition, trace: Vec<Step>| {
        let mut full = d.canonical();
        full.stars.extend(extra.stars);
        Ok(CompletionResult { outcome: Outcome::Completed(full), trace })
    };

    if k == 2 {
        trace.push(Step::TwoStars);
        return match decompose_2stars(&leftover) {
            Ok(extra) => finish(extra, trace),
            Err(odd) => Ok(CompletionResult {
                outcome: Outcome::Impossible(Impossibility::OddComponent(odd.0)),
                trace,
            }),
        };
    }
    if let Some(cert) = check_blocked_edge(d)? {
        trace.push(Step::BlockedEdge);
        return Ok(CompletionResult {
            outcome: Outcome::Impossible(Impossibility::BlockedEdge(cert)),
            trace,
        });
    }
    let s = suitable(&leftover, k)?;
    trace.push(Step::Suitable(s.repair));
    if let Realization::Realized(extra) = realize(&leftover, k, s.function.values())? {
        trace.push(Step::Realized { added: extra.stars.len() });
        return finish(extra, trace);
    }
    if d.n > opts.oracle_max_order {
        return Ok(CompletionResult { outcome: Outcome::Unknown, trace });
    }
    trace.push(Step::Oracle);
    match decompose_exhaustive(&leftover, k, None, opts.oracle_budget) {
        Search::Found(extra) => finish(extra, trace),
        Search::None => Ok(CompletionResult {
            outcome: Outcome::Impossible(Impossibility::NoDecomposition),
            trace,
        }),
        Search::BudgetExceeded => Ok(CompletionResult { outcome: Outcome::Unknown, trace }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::gen_uncompletable;
    use crate::realization::verify_decomposition;

    fn design(n: usize, k: usize, stars: &[(usize, &[usize])]) -> PartialDesign {
        PartialDesign::new(
            n,
            k,
            stars.iter().map(|&(c, l)| Star::new(c, l.iter().copied())).collect(),
        )
    }

    fn assert_completes(d: &PartialDesign) -> PartialDesign {
        let r = complete(d).unwrap();
        let full = r.completed().unwrap_or_else(|| panic!("{:?}", r)).clone();
        assert_eq!(full.validate(), Ok(()));
        assert_eq!(full.leftover().unwrap().edge_count(), 0);
        assert_eq!(&full.stars[..d.stars.len()], &d.canonical().stars[..]);
        full
    }

    #[test]
    fn padding() {
        let d = pad_to_threshold(&PartialDesign::empty(9, 3)).unwrap();
        assert_eq!(
            d.stars,
            vec![Star::new(0, [1, 2, 3]), Star::new(0, [4, 5, 6]), Star::new(1, [2, 3, 4])]
        );
        let one = design(6, 3, &[(0, &[1, 2, 3])]);
        assert_eq!(pad_to_threshold(&one).unwrap(), one);
        let d = pad_to_threshold(&design(7, 3, &[(0, &[1, 2, 3])])).unwrap();
        assert_eq!(d.stars[1], Star::new(0, [4, 5, 6]));
        assert!(pad_to_threshold(&PartialDesign::empty(8, 3)).is_err());
    }

    #[test]
    fn reduction() {
        let r = reduce(&design(7, 3, &[(0, &[1, 2, 3]), (0, &[4, 5, 6])])).unwrap();
        assert_eq!(r.vertex, 0);
        assert_eq!(r.smaller, PartialDesign::empty(6, 3));
        assert_eq!(r.removed.len(), 2);

        let r = reduce(&design(7, 3, &[(0, &[1, 2, 3]), (1, &[4, 5, 6])])).unwrap();
        assert_eq!(r.vertex, 0);
        assert_eq!(r.smaller, design(6, 3, &[(0, &[3, 4, 5])]));
        assert_eq!(r.lift(0), 1);

        assert_eq!(
            reduce(&design(9, 3, &[(0, &[1, 2, 3]), (1, &[2, 3, 4]), (2, &[4, 5, 6])])),
            Err(Error::NotReducible)
        );
    }

    #[test]
    fn two_stars() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            decompose_2stars(&path).unwrap().stars,
            vec![Star::new(1, [0, 2])]
        );
        assert_eq!(decompose_2stars(&Graph::complete(3)), Err(OddComponent(vec![0, 1, 2])));
        let l = design(4, 2, &[(0, &[1, 2])]).leftover().unwrap();
        let d = decompose_2stars(&l).unwrap();
        assert_eq!(d.stars.len(), 2);
        assert!(verify_decomposition(&l, 2, &d, None));
    }

    #[test]
    fn small_order_functions() {
        let d = pad_to_threshold(&design(9, 3, &[(0, &[1, 2, 3]), (1, &[4, 5, 6]), (2, &[7, 8, 4])])).unwrap();
        let p = small_order_precentral(&d).unwrap();
        assert_eq!(p.values(), &[1, 1, 1, 1, 1, 1, 1, 1, 1]);

        // every centre is a leaf of the previous star
        let d = design(10, 3, &[(0, &[1, 4, 5]), (1, &[2, 6, 7]), (2, &[3, 8, 9]), (3, &[0, 4, 5])]);
        assert!(!d.is_reducible());
        let p = small_order_precentral(&d).unwrap();
        assert_eq!(p.values().iter().sum::<usize>(), 11);
        assert_eq!(p.values().iter().filter(|&&v| v == 2).count(), 1);

        let not_admissible = PartialDesign::empty(13, 5);
        assert!(matches!(small_order_precentral(&not_admissible), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn completes_examples() {
        let full = assert_completes(&design(6, 3, &[(0, &[1, 2, 3])]));
        assert_eq!(full.stars.len(), 5);
        let reducible = design(7, 3, &[(0, &[1, 2, 3]), (0, &[4, 5, 6])]);
        let full = assert_completes(&reducible);
        assert_eq!(full.stars.len(), 7);
        let r = complete(&reducible).unwrap();
        assert!(matches!(r.trace[1], Step::Reduced { vertex: 0, removed: 2 }));
        assert_eq!(
            complete(&PartialDesign::empty(8, 3)).unwrap().outcome,
            Outcome::Impossible(Impossibility::NotAdmissible)
        );
        assert_eq!(
            complete(&PartialDesign::empty(4, 3)).unwrap().outcome,
            Outcome::Impossible(Impossibility::OrderTooSmall)
        );
        assert_completes(&PartialDesign::empty(1, 4));
    }

    #[test]
    fn completes_every_branch() {
        // k = 2, n = 2k, 2k+1 < n <= 3k, n = 3k+1, n > 3k+1
        for (n, k) in [(8, 2), (9, 2), (8, 4), (9, 4), (10, 3), (12, 3), (15, 5), (16, 5), (16, 4), (17, 4)] {
            assert_completes(&PartialDesign::empty(n, k));
        }
    }

    #[test]
    fn over_threshold_is_certified() {
        let d = gen_uncompletable(6, 3).unwrap();
        let r = complete(&d).unwrap();
        assert!(matches!(r.outcome, Outcome::Impossible(Impossibility::BlockedEdge(_))));
        let json = r.to_json();
        assert_eq!(json["certificate"]["blocked_edge"], json!([0, 1]));
        assert_eq!(json["reason"], "blocked-edge");

        let d = gen_uncompletable(8, 2).unwrap();
        assert!(matches!(
            complete(&d).unwrap().outcome,
            Outcome::Impossible(Impossibility::OddComponent(_))
        ));
    }

    #[test]
    fn invalid_input_is_an_error() {
        let bad = design(6, 3, &[(0, &[1, 2])]);
        assert!(matches!(complete(&bad), Err(Error::InvalidDesign(_))));
    }
}
