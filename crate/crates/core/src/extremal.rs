//! Uncompletable designs with `u(n,k) + 1` stars, and the certificate that
//! proves them uncompletable.
//!
//! Both constructions leave an edge `{0,1}` whose endpoints have leftover
//! degree between `1` and `k − 1`. Neither endpoint can centre a star of the
//! leftover, so nothing can cover that edge.

use serde::{Deserialize, Serialize};

use crate::design::{is_admissible, PartialDesign, Star};
use crate::error::{Error, Result};

/// A leftover edge neither of whose endpoints can centre a `k`-star.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockedEdgeCertificate {
    pub blocked_edge: [usize; 2],
    pub degrees: [usize; 2],
}

/// Builds an uncompletable partial design with exactly `u(n,k) + 1` stars.
pub fn gen_uncompletable(n: usize, k: usize) -> Result<PartialDesign> {
    if k < 2 {
        return Err(Error::StarSizeTooSmall(k));
    }
    if n <= 1 || !is_admissible(n, k) {
        return Err(Error::OutOfRange(format!(
            "order {n} is not a {k}-admissible order above 1"
        )));
    }
    let mut stars = Vec::new();
    if n % k != 1 {
        // Vertices 0 and 1 each centre ⌊(n−2)/k⌋ stars on the same leaf blocks.
        let per_center = (n - 2) / k;
        for center in [0, 1] {
            for block in 0..per_center {
                let start = 2 + block * k;
                stars.push(Star::new(center, start..start + k));
            }
        }
    } else {
        // Vertex 2 centres a star with leaves 0 and 1; 0 and 1 then centre
        // (n−k−1)/k stars each, avoiding vertex 2.
        stars.push(Star::new(2, [0, 1].into_iter().chain(3..k + 1)));
        let per_center = (n - k - 1) / k;
        for center in [0, 1] {
            for block in 0..per_center {
                let start = 3 + block * k;
                stars.push(Star::new(center, start..start + k));
            }
        }
    }
    Ok(PartialDesign::new(n, k, stars))
}

/// Finds the lexicographically least leftover edge whose endpoints both
/// have leftover degree in `[1, k−1]`.
pub fn check_blocked_edge(d: &PartialDesign) -> Result<Option<BlockedEdgeCertificate>> {
    let leftover = d.leftover()?;
    let k = d.k;
    let low = |x: usize| (1..k).contains(&leftover.degree(x));
    Ok(leftover
        .edges()
        .iter()
        .find(|&&(x, y)| low(x) && low(y))
        .map(|&(x, y)| BlockedEdgeCertificate {
            blocked_edge: [x, y],
            degrees: [leftover.degree(x), leftover.degree(y)],
        }))
}
