//! Exact Hamiltonicity decisions.
//!
//! The primary procedure is a subset DP over `(visited set, endpoint)`
//! anchored at the lowest vertex: `reach[S]` is the set of vertices `v`
//! such that some path starting at the anchor visits exactly `S` and ends at
//! `v`. A Hamiltonian cycle exists iff the full set reaches a neighbor of the
//! anchor. Permutation backtracking is kept as an independent cross-check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// The DP table has `2^n` entries of 32-bit endpoint sets.
const HARD_LIMIT: usize = 30;

/// Default cost gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest order for a single Hamiltonian-cycle query.
    pub max_order: usize,
    /// Largest order for k-Hamiltonian queries.
    pub max_k_order: usize,
    pub max_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self { max_order: 24, max_k_order: 14, max_k: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub hamiltonian: bool,
    /// A Hamiltonian cycle as a vertex sequence starting at the anchor.
    pub cycle: Option<Vec<usize>>,
}

/// Whether `cycle` visits every vertex of `mask` once along edges of `g`,
/// closing back to its start.
pub fn is_valid_cycle(g: &Graph, mask: u64, cycle: &[usize]) -> bool {
    if cycle.len() < 3 || cycle.len() != mask.count_ones() as usize {
        return false;
    }
    let mut seen = 0u64;
    for &v in cycle {
        if v >= g.order() || mask & bit(v) == 0 || seen & bit(v) != 0 {
            return false;
        }
        seen |= bit(v);
    }
    cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .all(|(&u, &v)| g.has_edge(u, v))
}

pub fn hamiltonian_cycle(g: &Graph) -> Result<OracleResult> {
    hamiltonian_cycle_with(g, &OracleLimits::default())
}

pub fn hamiltonian_cycle_with(g: &Graph, limits: &OracleLimits) -> Result<OracleResult> {
    let n = g.order();
    let limit = limits.max_order.min(HARD_LIMIT);
    if n > limit {
        return Err(Error::TooLargeForOracle { n, limit });
    }
    Ok(cycle_within(g, g.vertex_mask()))
}

/// Hamiltonian cycle of the subgraph induced by `mask`.
pub(crate) fn cycle_within(g: &Graph, mask: u64) -> OracleResult {
    let none = OracleResult { hamiltonian: false, cycle: None };
    let verts: Vec<usize> = bits(mask).collect();
    let m = verts.len();
    if m < 3 {
        return none;
    }
    // cheap rejections
    if verts.iter().any(|&v| (g.neighbors(v) & mask).count_ones() < 2)
        || !g.is_connected_within(mask)
    {
        return none;
    }
    // compact relabeling: local index i <-> verts[i]
    let local: Vec<u32> = verts
        .iter()
        .map(|&v| {
            bits(g.neighbors(v) & mask)
                .map(|u| 1u32 << verts.binary_search(&u).expect("neighbor in mask"))
                .fold(0, |acc, b| acc | b)
        })
        .collect();

    let full = (1usize << m) - 1;
    let mut reach = vec![0u32; 1 << m];
    reach[1] = 1;
    for set in (1..=full).step_by(2) {
        let ends = reach[set];
        if ends == 0 {
            continue;
        }
        for v in bits(ends as u64) {
            let mut next = local[v] & !(set as u32);
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[set | (1 << u)] |= 1 << u;
            }
        }
    }

    let closing = reach[full] & local[0];
    if closing == 0 {
        return none;
    }
    // walk predecessors back to the anchor
    let mut path = Vec::with_capacity(m);
    let mut set = full;
    let mut end = closing.trailing_zeros() as usize;
    loop {
        path.push(end);
        if set == 1 {
            break;
        }
        let prev_set = set & !(1 << end);
        let prev = reach[prev_set] & local[end];
        debug_assert!(prev != 0, "DP table inconsistent");
        end = prev.trailing_zeros() as usize;
        set = prev_set;
    }
    path.reverse();
    let cycle: Vec<usize> = path.into_iter().map(|i| verts[i]).collect();
    assert!(is_valid_cycle(g, mask, &cycle), "oracle produced an invalid witness");
    OracleResult { hamiltonian: true, cycle: Some(cycle) }
}

/// Independent Hamiltonicity check by depth-first extension of a path from
/// vertex 0. Exponential; intended for `n ≤ 10`.
pub fn hamiltonian_backtrack(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = g.order();
        let last = *path.last().unwrap();
        if path.len() == n {
            return g.has_edge(last, path[0]);
        }
        for u in 0..n {
            if !used[u] && g.has_edge(last, u) {
                used[u] = true;
                path.push(u);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                used[u] = false;
            }
        }
        false
    }
    let mut used = vec![false; n];
    used[0] = true;
    extend(g, &mut vec![0], &mut used)
}

pub fn is_k_hamiltonian(g: &Graph, k: usize) -> Result<bool> {
    is_k_hamiltonian_with(g, k, &OracleLimits::default())
}

/// Whether `g − X` is Hamiltonian for every `X` with `|X| ≤ k`.
pub fn is_k_hamiltonian_with(g: &Graph, k: usize, limits: &OracleLimits) -> Result<bool> {
    let n = g.order();
    if n < k + 3 {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > limits.max_k_order || k > limits.max_k {
        return Err(Error::TooLargeForOracle { n, limit: limits.max_k_order });
    }
    let all = g.vertex_mask();
    for size in 0..=k {
        let mut removed = ((1u128 << size) - 1) as u64;
        while removed & !all == 0 {
            if !cycle_within(g, all & !removed).hamiltonian {
                return Ok(false);
            }
            if size == 0 {
                break;
            }
            // next subset of the same size (Gosper)
            let c = removed & removed.wrapping_neg();
            let r = removed + c;
            removed = (((r ^ removed) >> 2) / c) | r;
        }
    }
    Ok(true)
}
