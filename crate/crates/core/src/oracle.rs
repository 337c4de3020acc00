//! Exhaustive ground truth for small instances.
//!
//! The search shares nothing with the flow-based realiser: it repeatedly
//! takes the lexicographically smallest uncovered edge and tries every star
//! that could cover it.

use itertools::Itertools;

use crate::design::{PartialDesign, Star};
use crate::graph::Graph;
use crate::realization::StarDecomposition;

/// Default node budget for [`decompose_exhaustive`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(StarDecomposition),
    /// The search space was exhausted: no decomposition exists.
    None,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    /// A completion, as the full design.
    Yes(PartialDesign),
    No,
    Unknown,
}

struct Searcher {
    k: usize,
    uncovered: Vec<Vec<bool>>,
    degree: Vec<usize>,
    remaining: Option<Vec<usize>>,
    stars: Vec<Star>,
    nodes: u64,
    budget: u64,
}

impl Searcher {
    fn can_center(&self, x: usize) -> bool {
        self.degree[x] >= self.k && self.remaining.as_ref().is_none_or(|r| r[x] > 0)
    }

    fn dead(&self) -> bool {
        let n = self.degree.len();
        if let Some(r) = &self.remaining {
            if (0..n).any(|x| r[x] * self.k > self.degree[x]) {
                return true;
            }
        }
        (0..n).any(|x| {
            !self.can_center(x)
                && (x + 1..n).any(|y| self.uncovered[x][y] && !self.can_center(y))
        })
    }

    fn smallest_edge(&self) -> Option<(usize, usize)> {
        let n = self.degree.len();
        let x = (0..n).find(|&x| self.degree[x] > 0)?;
        let y = (x + 1..n).find(|&y| self.uncovered[x][y])?;
        Some((x, y))
    }

    fn toggle(&mut self, center: usize, leaves: &[usize], cover: bool) {
        for &l in leaves {
            self.uncovered[center][l] = !cover;
            self.uncovered[l][center] = !cover;
            if cover {
                self.degree[center] -= 1;
                self.degree[l] -= 1;
            } else {
                self.degree[center] += 1;
                self.degree[l] += 1;
            }
        }
        if let Some(r) = &mut self.remaining {
            if cover {
                r[center] -= 1;
            } else {
                r[center] += 1;
            }
        }
    }

    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn search(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let Some((x, y)) = self.smallest_edge() else {
            return Some(true);
        };
        if self.dead() {
            return Some(false);
        }
        let n = self.degree.len();
        for (center, other) in [(x, y), (y, x)] {
            if !self.can_center(center) {
                continue;
            }
            let others: Vec<usize> = (0..n)
                .filter(|&z| z != other && self.uncovered[center][z])
                .collect();
            for combo in others.into_iter().combinations(self.k - 1) {
                let mut leaves = combo;
                leaves.push(other);
                leaves.sort_unstable();
                self.toggle(center, &leaves, true);
                self.stars.push(Star { center, leaves });
                match self.search() {
                    Some(false) => {}
                    found_or_out => return found_or_out,
                }
                let star = self.stars.pop().expect("pushed above");
                self.toggle(center, &star.leaves, false);
            }
        }
        Some(false)
    }
}

/// Searches for a `k`-star decomposition of `g`, optionally with central
/// function `pinned`, visiting at most `budget` nodes.
pub fn decompose_exhaustive(g: &Graph, k: usize, pinned: Option<&[usize]>, budget: u64) -> Search {
    assert!(k >= 2, "k must be at least 2");
    let n = g.order();
    if g.edge_count() % k != 0 {
        return Search::None;
    }
    if let Some(p) = pinned {
        if p.len() != n || p.iter().sum::<usize>() * k != g.edge_count() {
            return Search::None;
        }
    }
    let mut uncovered = vec![vec![false; n]; n];
    for &(x, y) in g.edges() {
        uncovered[x][y] = true;
        uncovered[y][x] = true;
    }
    let mut s = Searcher {
        k,
        uncovered,
        degree: g.degrees(),
        remaining: pinned.map(<[usize]>::to_vec),
        stars: Vec::new(),
        nodes: 0,
        budget,
    };
    match s.search() {
        Some(true) => Search::Found(StarDecomposition { stars: s.stars }),
        Some(false) => Search::None,
        None => Search::BudgetExceeded,
    }
}

/// Decides by exhaustive search whether `d` has a completion. Invalid
/// designs answer `No`.
pub fn has_completion(d: &PartialDesign, budget: u64) -> Answer {
    let Ok(leftover) = d.leftover() else {
        return Answer::No;
    };
    match decompose_exhaustive(&leftover, d.k, None, budget) {
        Search::Found(extra) => {
            let mut full = d.canonical();
            full.stars.extend(extra.stars);
            Answer::Yes(full)
        }
        Search::None => Answer::No,
        Search::BudgetExceeded => Answer::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::verify_decomposition;

    #[test]
    fn complete_six_decomposes() {
        let g = Graph::complete(6);
        let Search::Found(d) = decompose_exhaustive(&g, 3, None, DEFAULT_BUDGET) else {
            panic!("K_6 has a 3-star decomposition");
        };
        assert_eq!(d.stars.len(), 5);
        assert!(verify_decomposition(&g, 3, &d, None));
    }

    #[test]
    fn odd_triangle_has_none() {
        let g = Graph::complete(3);
        assert_eq!(decompose_exhaustive(&g, 2, None, DEFAULT_BUDGET), Search::None);
    }

    #[test]
    fn pinned_centres_are_respected() {
        let g = Graph::complete(6);
        for p in [[1, 1, 1, 1, 1, 0], [0, 1, 1, 1, 1, 1]] {
            match decompose_exhaustive(&g, 3, Some(&p), DEFAULT_BUDGET) {
                Search::Found(d) => assert!(verify_decomposition(&g, 3, &d, Some(&p))),
                other => panic!("{other:?}"),
            }
        }
        // every vertex has degree 5 and cannot centre two 3-stars
        assert_eq!(decompose_exhaustive(&g, 3, Some(&[0, 0, 0, 1, 2, 2]), DEFAULT_BUDGET), Search::None);
        assert_eq!(decompose_exhaustive(&g, 3, Some(&[0, 0, 0, 0, 0, 5]), 100), Search::None);
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::complete(9);
        assert_eq!(decompose_exhaustive(&g, 4, None, 1), Search::BudgetExceeded);
    }

    #[test]
    fn completion_answers() {
        let d = PartialDesign::new(6, 3, vec![Star::new(0, [1, 2, 3])]);
        match has_completion(&d, DEFAULT_BUDGET) {
            Answer::Yes(full) => {
                assert_eq!(full.stars.len(), 5);
                assert!(full.leftover().unwrap().edge_count() == 0);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(has_completion(&PartialDesign::empty(8, 3), DEFAULT_BUDGET), Answer::No);
    }
}
