//! Scalar threshold functions behind the index conditions.
//!
//! `Q1`, `Q2` and `Q3` are the index values of the extremal graphs; `g0` and
//! `g1` compare the two ends of `Q2` for odd and even orders; `f0` and `f1`
//! are closed-form bounds on where each end dominates. The largest roots
//! `x0`, `x1` of `g0`, `g1` and the integers `n0`, `n1` derived from them are
//! found numerically.

use std::f64::consts::LN_2;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indices::Alpha;

/// Above this exponent `g0`/`g1` are evaluated after dividing out
/// `(n−1)^α`, since `(n−2)^{α+1}` leaves the `f64` range near `α ≈ 150`.
pub const LOG_SPACE_ALPHA: f64 = 100.0;

/// Scan step used to bracket sign changes.
pub const SCAN_STEP: f64 = 0.5;

/// Default absolute bisection tolerance in `n`.
pub const DEFAULT_ROOT_TOL: f64 = 1e-9;

/// Slack when rounding a root up to the next integer of a given parity, so
/// that a root reported as `5 + 1e-12` still yields `n0 = 5`.
const INTEGER_SNAP: f64 = 1e-7;

fn domain(msg: impl Into<String>) -> Error {
    Error::DomainError(msg.into())
}

fn require_alpha_at_least(a: Alpha, min: f64) -> Result<f64> {
    let a = a.value();
    if a < min {
        Err(domain(format!("alpha = {a} below {min}")))
    } else {
        Ok(a)
    }
}

fn q1_kernel(i: f64, n: f64, k: f64, a: f64) -> f64 {
    i * (i + k).powf(a) + (n - 2.0 * i - k) * (n - i - 1.0).powf(a) + (i + k) * (n - 1.0).powf(a)
}

/// `Q1(i,n,k,α) = i(i+k)^α + (n−2i−k)(n−i−1)^α + (i+k)(n−1)^α`.
pub fn q1(i: f64, n: usize, k: usize, a: Alpha) -> Result<f64> {
    if n < 3 || k > n - 3 {
        return Err(Error::KOutOfRange { k, n });
    }
    let max = (n - k - 1) as f64 / 2.0;
    if !(1.0..=max).contains(&i) {
        return Err(Error::IOutOfRange { i, max });
    }
    Ok(q1_kernel(i, n as f64, k as f64, a.value()))
}

/// `Q2(i,n,α) = Q1(i,n,0,α) = i^{α+1} + (n−2i)(n−i−1)^α + i(n−1)^α`.
pub fn q2(i: f64, n: usize, a: Alpha) -> Result<f64> {
    let max = n.saturating_sub(1) as f64 / 2.0;
    if n < 3 || !(1.0..=max).contains(&i) {
        return Err(Error::IOutOfRange { i, max });
    }
    Ok(q2_real(i, n as f64, a.value()))
}

fn q2_real(i: f64, n: f64, a: f64) -> f64 {
    q1_kernel(i, n, 0.0, a)
}

/// `Q3(i,n,α) = i^{α+1} + (n−i)^{α+1} + n^{α+1}`.
///
/// Symmetric under `i ↦ n−i`, so the whole range `1 ≤ i ≤ n−1` is accepted.
pub fn q3(i: f64, n: usize, a: Alpha) -> Result<f64> {
    let max = n.saturating_sub(1) as f64;
    if n < 2 || !(1.0..=max).contains(&i) {
        return Err(Error::IOutOfRange { i, max });
    }
    let n = n as f64;
    let e = a.value() + 1.0;
    Ok(i.powf(e) + (n - i).powf(e) + n.powf(e))
}

/// Which gap function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gap {
    /// `g0(n,α) = Q2((n−1)/2,n,α) − Q2(1,n,α)`, relevant for odd `n`.
    G0,
    /// `g1(n,α) = Q2((n−2)/2,n,α) − Q2(1,n,α)`, relevant for even `n`.
    G1,
}

impl Gap {
    /// Left end of the domain; the gap vanishes identically there.
    pub fn lower(self) -> f64 {
        match self {
            Gap::G0 => 3.0,
            Gap::G1 => 4.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gap::G0 => "g0",
            Gap::G1 => "g1",
        }
    }

    fn check_domain(self, n: f64, a: Alpha) -> Result<f64> {
        let a = require_alpha_at_least(a, 2.0)?;
        if !n.is_finite() || n < self.lower() {
            return Err(domain(format!("{} needs n >= {}, got {n}", self.name(), self.lower())));
        }
        Ok(a)
    }

    /// The closed form, evaluated directly or through its scaled form for
    /// `α > LOG_SPACE_ALPHA` (where the result may be `±inf`).
    pub fn eval(self, n: f64, a: Alpha) -> Result<f64> {
        let alpha = self.check_domain(n, a)?;
        if alpha > LOG_SPACE_ALPHA {
            let s = self.scaled_unchecked(n, alpha);
            Ok(s.signum() * (s.abs().ln() + alpha * (n - 1.0).ln()).exp())
        } else {
            Ok(self.direct_unchecked(n, alpha))
        }
    }

    /// `g(n,α) / (n−1)^α`, finite for every `α`.
    pub fn scaled(self, n: f64, a: Alpha) -> Result<f64> {
        let alpha = self.check_domain(n, a)?;
        Ok(self.scaled_unchecked(n, alpha))
    }

    fn direct_unchecked(self, n: f64, a: f64) -> f64 {
        match self {
            Gap::G0 => {
                ((n + 1.0) / 2f64.powf(a + 1.0) + (n - 3.0) / 2.0) * (n - 1.0).powf(a)
                    - (n - 2.0).powf(a + 1.0)
                    - 1.0
            }
            Gap::G1 => {
                n.powf(a) / 2f64.powf(a - 1.0)
                    + (n / 2.0 - 2.0) * (n - 1.0).powf(a)
                    + (1.0 / 2f64.powf(a + 1.0) - 1.0) * (n - 2.0).powf(a + 1.0)
                    - 1.0
            }
        }
    }

    fn scaled_unchecked(self, n: f64, a: f64) -> f64 {
        // ((n−2)/(n−1))^α and (n−1)^{−α}
        let ratio = (a * (-1.0 / (n - 1.0)).ln_1p()).exp();
        let inv = (-a * (n - 1.0).ln()).exp();
        let half_pow = (-(a + 1.0) * LN_2).exp();
        match self {
            Gap::G0 => (n + 1.0) * half_pow + (n - 3.0) / 2.0 - (n - 2.0) * ratio - inv,
            Gap::G1 => {
                2.0 * (a * (n / (2.0 * (n - 1.0))).ln()).exp() + (n / 2.0 - 2.0)
                    + (half_pow - 1.0) * (n - 2.0) * ratio
                    - inv
            }
        }
    }

    /// A quantity with the sign of `g`, finite for every `α`.
    fn sign_proxy(self, n: f64, a: f64) -> f64 {
        if a > LOG_SPACE_ALPHA {
            self.scaled_unchecked(n, a)
        } else {
            self.direct_unchecked(n, a)
        }
    }
}

pub fn g0(n: f64, a: Alpha) -> Result<f64> {
    Gap::G0.eval(n, a)
}

pub fn g1(n: f64, a: Alpha) -> Result<f64> {
    Gap::G1.eval(n, a)
}

/// `Q1(⌊(n−k−1)/2⌋,n,k,α) − Q1(1,n,k,α)` for `n−k` odd.
pub fn q1_gap_odd(n: usize, k: usize, a: Alpha) -> Result<f64> {
    q1_gap(n, k, a, 1)
}

/// `Q1((n−k−2)/2,n,k,α) − Q1(1,n,k,α)` for `n−k` even.
pub fn q1_gap_even(n: usize, k: usize, a: Alpha) -> Result<f64> {
    q1_gap(n, k, a, 0)
}

fn q1_gap(n: usize, k: usize, a: Alpha, parity: usize) -> Result<f64> {
    if n < k + 3 {
        return Err(Error::KOutOfRange { k, n });
    }
    if (n - k) % 2 != parity {
        return Err(domain(format!("n - k = {} has the wrong parity", n - k)));
    }
    let far = ((n - k - 1) / 2) as f64;
    Ok(q1(far, n, k, a)? - q1(1.0, n, k, a)?)
}

/// The three auxiliary inequalities used for large orders.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Lemma41 {
    /// `(k+1)^α + (n−2)^α − 2((n+k−1)/2)^α`, positive for large `n`.
    pub f2: f64,
    /// `(n−7/2)^α + (n−1)^α − 2(n−2)^α`, negative for large `n`.
    pub f3: f64,
    /// `3(n−3)^α + (n−1)^α − (n−4)^α − 3(n−2)^α`, zero iff `α = 2`.
    pub f4: f64,
    /// Sum of the magnitudes of the terms of `f4`, for relative comparisons.
    pub f4_scale: f64,
}

pub fn lemma41_triple(n: usize, k: usize, a: Alpha) -> Result<Lemma41> {
    let alpha = require_alpha_at_least(a, 2.0)?;
    if n < 5 {
        return Err(domain(format!("n = {n} below 5")));
    }
    if k > n - 3 {
        return Err(Error::KOutOfRange { k, n });
    }
    let (nf, kf) = (n as f64, k as f64);
    let p = |x: f64| x.powf(alpha);
    let f2 = p(kf + 1.0) + p(nf - 2.0) - 2.0 * p((nf + kf - 1.0) / 2.0);
    let f3 = p(nf - 3.5) + p(nf - 1.0) - 2.0 * p(nf - 2.0);
    let pos = 3.0 * p(nf - 3.0) + p(nf - 1.0);
    let neg = p(nf - 4.0) + 3.0 * p(nf - 2.0);
    Ok(Lemma41 { f2, f3, f4: pos - neg, f4_scale: pos + neg })
}

/// `f0(α) = 1 + 1/(1 − [(1/2)^{α+1} + 1/2]^{1/α})`, for `α ≥ 2`.
pub fn f0(a: Alpha) -> Result<f64> {
    let alpha = require_alpha_at_least(a, 2.0)?;
    // ln[(1/2)^{α+1} + 1/2] = −ln 2 + ln(1 + 2^{−α})
    let t = (-LN_2 + (-alpha * LN_2).exp().ln_1p()) / alpha;
    Ok(1.0 - 1.0 / t.exp_m1())
}

/// `f1(α) = 1 + 1/(1 − (1/2)^{1/(α−3)})`.
///
/// Singular at `α = 3`, where the limit from above, `2`, is used. `f1(2) = 0`.
/// For `2 < α < 3` the closed form is evaluated as written and lies in
/// `(0, 1)`.
pub fn f1(a: Alpha) -> Result<f64> {
    let alpha = require_alpha_at_least(a, 2.0)?;
    if alpha == 3.0 {
        return Ok(2.0);
    }
    if alpha == 2.0 {
        return Ok(0.0);
    }
    let t = -LN_2 / (alpha - 3.0);
    Ok(1.0 - 1.0 / t.exp_m1())
}

/// Scan bracket `[lower, f0(α) + 2]` for the largest root.
pub fn root_search_interval(which: Gap, a: Alpha) -> Result<(f64, f64)> {
    Ok((which.lower(), f0(a)? + 2.0))
}

/// Largest root of `g0` (`x0`) or `g1` (`x1`).
///
/// Samples `[lower, f0(α)+2]` every [`SCAN_STEP`], takes the rightmost
/// transition from `g ≥ 0` to `g < 0` and bisects it to width `< tol`. A
/// sample where `g` is exactly zero is returned as is; this is how the
/// integer roots at `α = 2, 3` come out exact. When `g` is negative right
/// after the lower end, the lower end itself (a root for every `α`) is the
/// answer.
pub fn largest_root(which: Gap, a: Alpha, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let alpha = require_alpha_at_least(a, 2.0)?;
    let (lower, upper) = root_search_interval(which, a)?;
    let g = |x: f64| which.sign_proxy(x, alpha);

    let steps = ((upper - lower) / SCAN_STEP).ceil() as usize;
    let samples = (0..=steps).map(|j| (lower + j as f64 * SCAN_STEP).min(upper));
    let mut bracket = None;
    let mut prev: Option<(f64, f64)> = None;
    for x in samples {
        // the gap vanishes identically at the lower end; rounding must not
        // hide that root
        let y = if x == lower { 0.0 } else { g(x) };
        if let Some((px, py)) = prev {
            if py >= 0.0 && y < 0.0 {
                bracket = Some((px, py, x));
            }
        }
        prev = Some((x, y));
    }
    let (mut lo, glo, mut hi) =
        bracket.ok_or(Error::NoRootFound { which: which.name(), alpha })?;
    if glo == 0.0 {
        return Ok(lo);
    }
    while hi - lo >= tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let y = g(mid);
        if y == 0.0 {
            return Ok(mid);
        }
        if y > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Least integer `≥ max(x, floor)` with the given parity (0 even, 1 odd).
fn next_with_parity(x: f64, floor: u64, parity: u64) -> u64 {
    let mut n = ((x - INTEGER_SNAP).ceil().max(0.0) as u64).max(floor);
    if n % 2 != parity {
        n += 1;
    }
    n
}

/// `n0(α)`: least odd `n ≥ max(5, x0)`; `n1(α)`: least even `n ≥ max(4, x1)`.
pub fn n0_n1(a: Alpha) -> Result<(u64, u64)> {
    let x0 = largest_root(Gap::G0, a, DEFAULT_ROOT_TOL)?;
    let x1 = largest_root(Gap::G1, a, DEFAULT_ROOT_TOL)?;
    Ok((next_with_parity(x0, 5, 1), next_with_parity(x1, 4, 0)))
}

/// One row of the threshold table. Root-dependent columns are `None` when
/// no sign change was found.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub alpha: f64,
    pub x0: Option<f64>,
    pub x1: Option<f64>,
    pub x0_minus_x1: Option<f64>,
    pub n0: Option<u64>,
    pub n1: Option<u64>,
    pub f0: f64,
    pub f1: f64,
}

impl ThresholdRow {
    pub fn compute(a: Alpha) -> Result<Self> {
        let f0v = f0(a)?;
        let f1v = f1(a)?;
        let x0 = largest_root(Gap::G0, a, DEFAULT_ROOT_TOL).ok();
        let x1 = largest_root(Gap::G1, a, DEFAULT_ROOT_TOL).ok();
        Ok(Self {
            alpha: a.value(),
            x0,
            x1,
            x0_minus_x1: x0.zip(x1).map(|(p, q)| p - q),
            n0: x0.map(|x| next_with_parity(x, 5, 1)),
            n1: x1.map(|x| next_with_parity(x, 4, 0)),
            f0: f0v,
            f1: f1v,
        })
    }
}

/// CSV column order for [`ThresholdRow`].
pub const TABLE_COLUMNS: [&str; 8] = ["alpha", "x0", "x1", "x0_minus_x1", "n0", "n1", "f0", "f1"];

/// Rows for each `α` in input order; computed in parallel.
pub fn threshold_table(alphas: &[f64]) -> Result<Vec<ThresholdRow>> {
    alphas
        .par_iter()
        .map(|&a| ThresholdRow::compute(Alpha::new(a)?))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Asymptotics {
    pub f0_over_alpha: f64,
    pub f1_over_alpha: f64,
    pub gap: f64,
}

pub fn asymptotics(a: Alpha) -> Result<Asymptotics> {
    let (p, q) = (f0(a)?, f1(a)?);
    Ok(Asymptotics { f0_over_alpha: p / a.value(), f1_over_alpha: q / a.value(), gap: p - q })
}

/// Sign changes of one gap function found by a scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignChanges {
    pub count: usize,
    /// `(left, right)` sample pairs with opposite nonzero signs.
    pub brackets: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub alpha: f64,
    pub n_max: f64,
    pub step: f64,
    pub g0: SignChanges,
    pub g1: SignChanges,
}

/// Counts sign changes of `g0` on `(3, n_max]` and `g1` on `(4, n_max]`.
/// Exact zeros at sample points do not break a run: they are bridged to the
/// next nonzero sample. Purely exploratory.
pub fn conjecture_scan(a: Alpha, n_max: f64, step: f64) -> Result<ConjectureReport> {
    let alpha = require_alpha_at_least(a, 2.0)?;
    if !(step > 0.0) {
        return Err(domain(format!("step must be positive, got {step}")));
    }
    let scan = |which: Gap| {
        let mut brackets = Vec::new();
        let mut last: Option<(f64, f64)> = None;
        let mut j = 1;
        loop {
            let x = which.lower() + j as f64 * step;
            if x > n_max {
                break;
            }
            let y = which.sign_proxy(x, alpha);
            if y != 0.0 {
                if let Some((lx, ly)) = last {
                    if ly.signum() != y.signum() {
                        brackets.push((lx, x));
                    }
                }
                last = Some((x, y));
            }
            j += 1;
        }
        SignChanges { count: brackets.len(), brackets }
    };
    Ok(ConjectureReport { alpha, n_max, step, g0: scan(Gap::G0), g1: scan(Gap::G1) })
}
