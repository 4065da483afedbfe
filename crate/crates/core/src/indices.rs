//! Vertex-degree-function indices: `H_f(G) = Σ f(d(v))` and its power
//! instance, the zeroth-order general Randić index `⁰R_α(G) = Σ d(v)^α`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// A nonzero, finite real exponent.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if value == 0.0 || !value.is_finite() {
            Err(Error::InvalidAlpha(value))
        } else {
            Ok(Self(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// `Some(a)` when α is a positive integer small enough for exact
    /// integer powers.
    fn small_positive_integer(self) -> Option<u32> {
        let a = self.0;
        ((1.0..=64.0).contains(&a) && a.fract() == 0.0).then_some(a as u32)
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Alpha::new(value)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

/// `H_f(G)`. `f` returns `None` where it is undefined.
pub fn h_f_index<F>(g: &Graph, f: F) -> Result<f64>
where
    F: Fn(usize) -> Option<f64>,
{
    g.degrees().try_fold(0.0, |acc, d| {
        f(d).map(|x| acc + x).ok_or(Error::FunctionUndefinedAtDegree(d))
    })
}

/// `⁰R_α(G)`.
///
/// Integer exponents are summed exactly in `u128` when that cannot
/// overflow, so `⁰R_1 = 2m` and `⁰R_2 = M_1` hold bit for bit.
pub fn zeroth_order_randic(g: &Graph, a: Alpha) -> Result<f64> {
    if a.value() < 0.0 {
        if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
            return Err(Error::IsolatedVertexWithNegativeAlpha(v));
        }
    }
    if let Some(exact) = exact_power_sum(g.degrees(), a) {
        return Ok(exact as f64);
    }
    Ok(power_sum(g.degrees(), a.value()))
}

/// `⁰R_α` computed from a bare degree multiset.
pub fn randic_from_degrees<I>(degrees: I, a: Alpha) -> Result<f64>
where
    I: IntoIterator<Item = usize> + Clone,
{
    if let Some(d) = degrees.clone().into_iter().find(|&d| d >= MAX_ORDER) {
        return Err(Error::BadParams(format!("degree {d} exceeds the order cap")));
    }
    if a.value() < 0.0 && degrees.clone().into_iter().any(|d| d == 0) {
        return Err(Error::DomainError("zero degree with negative alpha".into()));
    }
    if let Some(exact) = exact_power_sum(degrees.clone(), a) {
        return Ok(exact as f64);
    }
    Ok(power_sum(degrees, a.value()))
}

/// Groups equal degrees first: `Σ_d count(d)·d^α`. Besides saving `powf`
/// calls, this makes sums like `d·(1/d)` round to integers.
fn power_sum<I: IntoIterator<Item = usize>>(degrees: I, a: f64) -> f64 {
    let mut counts = [0u32; MAX_ORDER];
    for d in degrees {
        counts[d] += 1;
    }
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(d, &c)| c as f64 * (d as f64).powf(a))
        .sum()
}

fn exact_power_sum<I: IntoIterator<Item = usize>>(degrees: I, a: Alpha) -> Option<u128> {
    let e = a.small_positive_integer()?;
    degrees
        .into_iter()
        .try_fold(0u128, |acc, d| (d as u128).checked_pow(e).and_then(|p| acc.checked_add(p)))
}

/// First Zagreb index `M_1 = ⁰R_2`.
pub fn first_zagreb(g: &Graph) -> f64 {
    zeroth_order_randic(g, Alpha(2.0)).expect("positive alpha never fails")
}

/// Forgotten index `F = ⁰R_3`.
pub fn forgotten(g: &Graph) -> f64 {
    zeroth_order_randic(g, Alpha(3.0)).expect("positive alpha never fails")
}
