//! Randomized soundness harness: sample connected graphs, run every
//! applicable sufficient condition, and confirm each `Guaranteed` verdict
//! with the exact oracle.
//!
//! Graphs come from `G(n, p)` (or the balanced bipartite analogue) conditioned
//! on connectivity by rejection. Samples are split over a fixed number of
//! shards; shard `i` draws from a ChaCha8 stream seeded with `seed + i`, so
//! the report depends only on the parameters, not on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chvatal::{chvatal_bipartite, chvatal_k_hamiltonian};
use crate::conditions::Checker;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::emit_graph6;
use crate::indices::Alpha;
use crate::oracle::{cycle_within, is_k_hamiltonian_with, OracleLimits};

pub const SHARDS: u64 = 32;

/// Give up on a sample after this many disconnected draws.
const MAX_REJECTIONS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Random connected graphs of order `n`, tested for k-Hamiltonicity.
    General,
    /// Random connected balanced bipartite graphs with `n` vertices per side.
    Bipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    pub mode: SearchMode,
    pub n: usize,
    pub k: usize,
    pub alpha: f64,
    pub samples: u64,
    pub edge_prob: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckerKind {
    /// Index condition with both `Q1` ends (k-Hamiltonian).
    General,
    /// Large-order single-threshold condition (k-Hamiltonian).
    LargeN,
    /// Regime-dispatched condition (Hamiltonian).
    Regime,
    /// Degree-sequence condition (k-Hamiltonian).
    Chvatal,
    /// Balanced bipartite index condition (Hamiltonian).
    Bipartite,
    /// Balanced bipartite degree-sequence condition (Hamiltonian).
    ChvatalBipartite,
}

impl CheckerKind {
    fn for_mode(mode: SearchMode) -> &'static [CheckerKind] {
        match mode {
            SearchMode::General => &[
                CheckerKind::General,
                CheckerKind::LargeN,
                CheckerKind::Regime,
                CheckerKind::Chvatal,
            ],
            SearchMode::Bipartite => &[CheckerKind::Bipartite, CheckerKind::ChvatalBipartite],
        }
    }

    /// Whether the property claimed is k-Hamiltonicity (else Hamiltonicity).
    fn claims_k(self) -> bool {
        matches!(self, CheckerKind::General | CheckerKind::LargeN | CheckerKind::Chvatal)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub guaranteed: u64,
    pub confirmed: u64,
    pub violations: u64,
    pub inconclusive: u64,
    pub not_applicable: u64,
}

impl Tally {
    fn add(&mut self, other: &Tally) {
        self.guaranteed += other.guaranteed;
        self.confirmed += other.confirmed;
        self.violations += other.violations;
        self.inconclusive += other.inconclusive;
        self.not_applicable += other.not_applicable;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerTally {
    pub checker: CheckerKind,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub checker: CheckerKind,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub params: SearchParams,
    pub totals: Tally,
    pub per_checker: Vec<CheckerTally>,
    pub violations: Vec<Violation>,
}

impl SearchReport {
    pub fn violation_count(&self) -> u64 {
        self.totals.violations
    }
}

fn validate(params: &SearchParams, limits: &OracleLimits) -> Result<Alpha> {
    let alpha = Alpha::new(params.alpha)?;
    if !(0.0..=1.0).contains(&params.edge_prob) || params.edge_prob == 0.0 {
        return Err(Error::BadParams(format!("edge probability {} not in (0, 1]", params.edge_prob)));
    }
    let order = match params.mode {
        SearchMode::General => params.n,
        SearchMode::Bipartite => 2 * params.n,
    };
    if order > MAX_ORDER {
        return Err(Error::TooLarge(order));
    }
    match params.mode {
        SearchMode::General => {
            if params.n < params.k + 3 {
                return Err(Error::KOutOfRange { k: params.k, n: params.n });
            }
            if params.n > limits.max_k_order || params.k > limits.max_k {
                return Err(Error::TooLargeForOracle { n: params.n, limit: limits.max_k_order });
            }
        }
        SearchMode::Bipartite => {
            if params.n < 2 {
                return Err(Error::BadParams("bipartite mode needs n >= 2 per side".into()));
            }
            if order > limits.max_order {
                return Err(Error::TooLargeForOracle { n: order, limit: limits.max_order });
            }
        }
    }
    Ok(alpha)
}

/// `G(n, p)` conditioned on connectivity.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    for _ in 0..MAX_REJECTIONS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::BadParams(format!("no connected G({n}, {p}) sample after {MAX_REJECTIONS} draws")))
}

/// Balanced bipartite `G(half, half, p)` with sides `0..half` and
/// `half..2·half`, conditioned on connectivity.
pub fn random_connected_bipartite<R: Rng>(rng: &mut R, half: usize, p: f64) -> Result<Graph> {
    for _ in 0..MAX_REJECTIONS {
        let mut edges = Vec::new();
        for u in 0..half {
            for v in half..2 * half {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(2 * half, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::BadParams(format!(
        "no connected bipartite sample with {half} per side after {MAX_REJECTIONS} draws"
    )))
}

struct ShardOutcome {
    tallies: Vec<Tally>,
    violations: Vec<Violation>,
}

fn run_shard(
    params: &SearchParams,
    alpha: Alpha,
    limits: &OracleLimits,
    shard: u64,
    count: u64,
) -> Result<ShardOutcome> {
    let kinds = CheckerKind::for_mode(params.mode);
    let checker = Checker::default();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed.wrapping_add(shard));
    let mut out = ShardOutcome { tallies: vec![Tally::default(); kinds.len()], violations: Vec::new() };
    for _ in 0..count {
        let g = match params.mode {
            SearchMode::General => random_connected(&mut rng, params.n, params.edge_prob)?,
            SearchMode::Bipartite => random_connected_bipartite(&mut rng, params.n, params.edge_prob)?,
        };
        let mut hamiltonian: Option<bool> = None;
        let mut k_hamiltonian: Option<bool> = None;
        for (slot, &kind) in kinds.iter().enumerate() {
            let verdict = evaluate(kind, &checker, &g, params, alpha)?;
            let tally = &mut out.tallies[slot];
            match verdict {
                Outcome::NotApplicable => tally.not_applicable += 1,
                Outcome::Inconclusive => tally.inconclusive += 1,
                Outcome::Guaranteed => {
                    tally.guaranteed += 1;
                    let holds = if kind.claims_k() {
                        match k_hamiltonian {
                            Some(v) => v,
                            None => {
                                let v = is_k_hamiltonian_with(&g, params.k, limits)?;
                                k_hamiltonian = Some(v);
                                v
                            }
                        }
                    } else {
                        *hamiltonian
                            .get_or_insert_with(|| cycle_within(&g, g.vertex_mask()).hamiltonian)
                    };
                    if holds {
                        tally.confirmed += 1;
                    } else {
                        tally.violations += 1;
                        out.violations.push(Violation { checker: kind, graph6: emit_graph6(&g) });
                    }
                }
            }
        }
    }
    Ok(out)
}

enum Outcome {
    Guaranteed,
    Inconclusive,
    NotApplicable,
}

fn evaluate(
    kind: CheckerKind,
    checker: &Checker,
    g: &Graph,
    params: &SearchParams,
    alpha: Alpha,
) -> Result<Outcome> {
    use crate::conditions::Verdict;
    let from_report = |v: Verdict| match v {
        Verdict::Guaranteed => Outcome::Guaranteed,
        Verdict::Inconclusive => Outcome::Inconclusive,
        Verdict::NotApplicable => Outcome::NotApplicable,
    };
    let from_pass = |passed: bool| if passed { Outcome::Guaranteed } else { Outcome::Inconclusive };
    Ok(match kind {
        CheckerKind::General => from_report(checker.check_k_hamiltonian(g, params.k, alpha)?.verdict),
        CheckerKind::LargeN => from_report(checker.check_large_n(g, params.k, alpha)?.verdict),
        CheckerKind::Regime => {
            if params.k == 0 {
                from_report(checker.check_regime(g, alpha)?.verdict)
            } else {
                Outcome::NotApplicable
            }
        }
        CheckerKind::Chvatal => from_pass(chvatal_k_hamiltonian(&g.degree_sequence(), params.k)?.passed),
        CheckerKind::Bipartite => from_report(checker.check_bipartite(g, alpha)?.verdict),
        CheckerKind::ChvatalBipartite => {
            from_pass(chvatal_bipartite(&g.degree_sequence(), params.n)?.passed)
        }
    })
}

pub fn soundness_search(params: &SearchParams) -> Result<SearchReport> {
    soundness_search_with(params, &OracleLimits::default())
}

pub fn soundness_search_with(params: &SearchParams, limits: &OracleLimits) -> Result<SearchReport> {
    let alpha = validate(params, limits)?;
    let per = params.samples / SHARDS;
    let extra = params.samples % SHARDS;
    let outcomes: Vec<ShardOutcome> = (0..SHARDS)
        .into_par_iter()
        .map(|shard| run_shard(params, alpha, limits, shard, per + u64::from(shard < extra)))
        .collect::<Result<_>>()?;

    let kinds = CheckerKind::for_mode(params.mode);
    let mut per_checker: Vec<CheckerTally> =
        kinds.iter().map(|&checker| CheckerTally { checker, tally: Tally::default() }).collect();
    let mut totals = Tally::default();
    let mut violations = Vec::new();
    for outcome in outcomes {
        for (slot, t) in outcome.tallies.iter().enumerate() {
            per_checker[slot].tally.add(t);
            totals.add(t);
        }
        violations.extend(outcome.violations);
    }
    Ok(SearchReport { params: *params, totals, per_checker, violations })
}
