//! Tuning the two-parameter family B_k(p, q): solve b_k = B_k(p, q) for p
//! at each size k, then average the per-size roots.
//!
//! B_k is strictly increasing in p wherever it is defined, so each root is
//! unique when it exists. Sizes where B_k is undefined at the low end of
//! the bracket behave as if B_k were −∞ there, which keeps the bisection
//! honest.

use crate::error::{Error, Result};
use crate::norming::{b_general, exact_b, LN_2PI};
use crate::size::LogSize;

/// Default second parameter: q = −ln 2π, which makes B(−ln 2π, q) the
/// plain three-term expansion.
pub fn default_q() -> f64 {
    -LN_2PI
}

/// The mean p̂(m) together with every per-size root.
#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationResult {
    pub m: u64,
    pub q: f64,
    pub p_hat: f64,
    pub per_k: Vec<(u64, f64)>,
}

/// Solve b_k − B_k(p, q) = 0 for p, k ≥ 10.
///
/// Bracketing bisection on p ∈ [−5, 5], widened once to [−20, 20]; the
/// returned root satisfies |b_k − B_k(p, q)| ≤ 1e-12.
pub fn solve_p(k: u64, q: f64) -> Result<f64> {
    if k < 10 {
        return Err(Error::Domain(format!("solve_p requires k >= 10, got {k}")));
    }
    let n = LogSize::new(k as f64)?;
    let target = exact_b(n)?;
    // decreasing in p; undefined B counts as -inf, i.e. f = +inf
    let f = |p: f64| match b_general(n, p, q) {
        Ok(v) => target - v,
        Err(_) => f64::INFINITY,
    };

    let root = bisect(&f, -5.0, 5.0).or_else(|| bisect(&f, -20.0, 20.0));
    let p = root.ok_or_else(|| {
        Error::NoRoot(format!(
            "b_k = B_k(p, {q}) has no sign change on [-20, 20] at k = {k}"
        ))
    })?;
    let resid = (target - b_general(n, p, q)?).abs();
    if resid > 1e-12 {
        return Err(Error::NoConvergence(format!(
            "root residual {resid:e} at k = {k}"
        )));
    }
    Ok(p)
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64) -> Option<f64> {
    let flo = f(lo);
    let fhi = f(hi);
    if !(flo > 0.0 && fhi < 0.0) {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 4e-16 * (1.0 + lo.abs()) {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}

/// p̂(m): the arithmetic mean of the roots p_k over k = 10..m, compensated
/// so the reduction is order-independent at working precision.
pub fn p_hat(m: u64, q: f64) -> Result<CalibrationResult> {
    if m < 10 {
        return Err(Error::Domain(format!("p_hat requires m >= 10, got {m}")));
    }
    let mut per_k = Vec::with_capacity((m - 9) as usize);
    for k in 10..=m {
        per_k.push((k, solve_p(k, q)?));
    }
    let p_hat = kahan_mean(per_k.iter().map(|&(_, p)| p));
    Ok(CalibrationResult { m, q, p_hat, per_k })
}

fn kahan_mean(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    let mut count = 0u64;
    for v in values {
        let y = v - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        count += 1;
    }
    sum / count as f64
}
