//! Chvátal-type degree-sequence tests. Both operate on sequences alone, so
//! hypothetical sequences can be screened without a realization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChvatalVerdict {
    pub passed: bool,
    /// Least violating 1-based index when the test fails.
    pub witness_i: Option<usize>,
}

impl ChvatalVerdict {
    fn from_witness(witness_i: Option<usize>) -> Self {
        Self { passed: witness_i.is_none(), witness_i }
    }
}

/// k-Hamiltonian condition: for every `1 ≤ i ≤ ⌊(n−k−1)/2⌋`,
/// `d_i ≤ i+k ⇒ d_{n−i−k} ≥ n−i`.
pub fn chvatal_k_hamiltonian(pi: &DegreeSequence, k: usize) -> Result<ChvatalVerdict> {
    let n = pi.len();
    if n < 3 || k > n - 3 {
        return Err(Error::KOutOfRange { k, n });
    }
    let witness = (1..=(n - k - 1) / 2).find(|&i| pi.d(i) <= i + k && pi.d(n - i - k) < n - i);
    Ok(ChvatalVerdict::from_witness(witness))
}

/// Balanced bipartite condition on the full sorted sequence of a graph of
/// order `2·half`: for every `1 ≤ i ≤ half/2`, `d_i ≤ i ⇒ d_half ≥ half−i+1`.
pub fn chvatal_bipartite(pi: &DegreeSequence, half: usize) -> Result<ChvatalVerdict> {
    let len = pi.len();
    if !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    if len != 2 * half || half < 2 {
        return Err(Error::BadParams(format!(
            "sequence of length {len} does not describe a balanced bipartite graph with {half} per side (need half >= 2)"
        )));
    }
    let witness = (1..=half / 2).find(|&i| pi.d(i) <= i && pi.d(half) < half - i + 1);
    Ok(ChvatalVerdict::from_witness(witness))
}
