//! Graphs attaining the index bounds with equality.
//!
//! Vertex order is fixed: the clique block comes first, then the remaining
//! blocks in the order they appear in the construction, so emitted graph6
//! strings are reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, complete, full_mask, independent, Graph};
use crate::indices::Alpha;
use crate::thresholds::{q1, q3};

fn check_order(n: usize, k: usize) -> Result<()> {
    if n < k + 3 {
        return Err(Error::BadParams(format!("need n >= k + 3, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// `K_{k+1} ∨ (K_1 ⊔ K_{n−k−2})`; its index is `Q1(1,n,k,α)`.
pub fn kite(n: usize, k: usize) -> Result<Graph> {
    check_order(n, k)?;
    let tail = complete(1)?.disjoint_union(&clique_or_empty(n - k - 2)?)?;
    complete(k + 1)?.join(&tail)
}

/// `K_{(n+k−1)/2} ∨ ((n−k+1)/2)K_1` when `n−k` is odd and
/// `K_{(n+k−2)/2} ∨ (K_2 ⊔ ((n−k−2)/2)K_1)` when `n−k` is even; its index is
/// `Q1(⌊(n−k−1)/2⌋,n,k,α)`.
pub fn split_extremal(n: usize, k: usize) -> Result<Graph> {
    check_order(n, k)?;
    if (n - k) % 2 == 1 {
        complete((n + k - 1) / 2)?.join(&independent((n - k + 1) / 2)?)
    } else {
        let rest = complete(2)?.disjoint_union(&independent((n - k - 2) / 2)?)?;
        complete((n + k - 2) / 2)?.join(&rest)
    }
}

/// `K_{half,half}` minus every edge between `S ⊆ X` with `|S| = s` and
/// `T ⊆ Y` with `|T| = half − s`. `X = 0..half`, `Y = half..2·half`, and `S`,
/// `T` are the first vertices of each side. Its index is `Q3(s,half,α)`.
pub fn bipartite_deleted(half: usize, s: usize) -> Result<Graph> {
    if s == 0 || s >= half {
        return Err(Error::BadParams(format!("need 1 <= s <= n - 1, got n = {half}, s = {s}")));
    }
    if 2 * half > crate::graph::MAX_ORDER {
        return Err(Error::TooLarge(2 * half));
    }
    let x = full_mask(half);
    let y = full_mask(2 * half) & !x;
    let s_set = full_mask(s);
    let t_set = full_mask(half - s) << half;
    let adj = (0..2 * half)
        .map(|v| {
            let mut row = if bit(v) & x != 0 { y } else { x };
            if bit(v) & s_set != 0 {
                row &= !t_set;
            } else if bit(v) & t_set != 0 {
                row &= !s_set;
            }
            row
        })
        .collect();
    Graph::from_adjacency(adj)
}

fn clique_or_empty(n: usize) -> Result<Graph> {
    if n == 0 {
        Graph::empty(0)
    } else {
        complete(n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalFamily {
    Kite,
    /// `n−k` odd branch of [`split_extremal`].
    SplitOdd,
    /// `n−k` even branch of [`split_extremal`].
    SplitEven,
    BipartiteDeleted,
}

/// Symbolic description of a tight graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSpec {
    pub family: ExtremalFamily,
    /// Order, or the half-order for [`ExtremalFamily::BipartiteDeleted`].
    pub n: usize,
    pub k: usize,
    pub s: usize,
}

impl ExtremalSpec {
    pub fn kite(n: usize, k: usize) -> Self {
        Self { family: ExtremalFamily::Kite, n, k, s: 0 }
    }

    pub fn split(n: usize, k: usize) -> Self {
        let family = if n.saturating_sub(k) % 2 == 1 {
            ExtremalFamily::SplitOdd
        } else {
            ExtremalFamily::SplitEven
        };
        Self { family, n, k, s: 0 }
    }

    pub fn bipartite_deleted(half: usize, s: usize) -> Self {
        Self { family: ExtremalFamily::BipartiteDeleted, n: half, k: 0, s }
    }

    pub fn build(&self) -> Result<Graph> {
        match self.family {
            ExtremalFamily::Kite => kite(self.n, self.k),
            ExtremalFamily::SplitOdd | ExtremalFamily::SplitEven => {
                let odd = self.n.saturating_sub(self.k) % 2 == 1;
                if odd != (self.family == ExtremalFamily::SplitOdd) {
                    return Err(Error::BadParams(format!(
                        "{:?} does not match the parity of n - k",
                        self.family
                    )));
                }
                split_extremal(self.n, self.k)
            }
            ExtremalFamily::BipartiteDeleted => bipartite_deleted(self.n, self.s),
        }
    }

    /// The bound this family attains.
    pub fn bound(&self, a: Alpha) -> Result<f64> {
        match self.family {
            ExtremalFamily::Kite => q1(1.0, self.n, self.k, a),
            ExtremalFamily::SplitOdd | ExtremalFamily::SplitEven => {
                check_order(self.n, self.k)?;
                q1(((self.n - self.k - 1) / 2) as f64, self.n, self.k, a)
            }
            ExtremalFamily::BipartiteDeleted => q3(self.s as f64, self.n, a),
        }
    }
}
