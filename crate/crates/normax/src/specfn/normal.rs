//! Standard normal density, survival function, upper-tail quantile and the
//! Mills ratio, all stable deep into the tail.
//!
//! The survival function never forms `1 - CDF`: the value field comes from
//! the complementary error function directly, and past the underflow point
//! the log field is assembled from the Mills ratio so no intermediate
//! quantity vanishes.

use super::lambert::u_d_asymptotic_unchecked;
use super::TailProbability;
use crate::error::{Error, Result};
use std::f64::consts::{FRAC_1_SQRT_2, LN_2};

pub(crate) const FRAC_1_SQRT_2PI: f64 = 0.3989422804014326779399460599343818684758586311649;
pub(crate) const LN_SQRT_2PI: f64 = 0.9189385332046727417803297364056176398613974736378;
pub(crate) const LN_2PI: f64 = 1.8378770664093454835606594728112352797227949472756;
pub(crate) const SQRT_2PI: f64 = 2.5066282746310005024157652848110452530069867406099;

// Above this point 0.5*erfc(x/sqrt(2)) leaves the normal double range, so the
// log field switches to the Mills-ratio assembly.
const LOG_ROUTE_START: f64 = 37.0;
// Below the continued-fraction cutover the ratio erfc/pdf is formed directly.
const MILLS_CF_CUTOVER: f64 = 6.0;

/// Standard normal density φ(x) = e^{-x²/2}/√(2π).
pub fn std_normal_pdf(x: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * x * x).exp()
}

pub(crate) fn ln_std_normal_pdf(x: f64) -> f64 {
    -0.5 * x * x - LN_SQRT_2PI
}

/// Upper tail Q(x) = 1 - Φ(x) of the standard normal law.
///
/// The value field is good to a few ulps while it is representable; the log
/// field stays meaningful for every finite `x`.
///
/// ```
/// use normax::specfn::std_normal_survival;
/// assert_eq!(std_normal_survival(0.0).value(), 0.5);
/// // far past the underflow point the log field still works
/// let q = std_normal_survival(50.0);
/// assert_eq!(q.value(), 0.0);
/// assert!((q.log_value() + 1254.83).abs() < 0.01);
/// ```
pub fn std_normal_survival(x: f64) -> TailProbability {
    let z = x * FRAC_1_SQRT_2;
    if x > LOG_ROUTE_START {
        let log_value = ln_survival_tail(x);
        TailProbability::from_parts(log_value.exp(), log_value)
    } else if x >= 0.0 {
        let value = 0.5 * libm::erfc(z);
        TailProbability::from_parts(value, value.ln())
    } else {
        // Q(x) = 1 - q with q = Φ(-|x|) ≤ 1/2; log1p keeps the log at full
        // absolute precision all the way to where the value rounds to 1,
        // which n·ln Φ amplifies by up to 10^100.
        let q = 0.5 * libm::erfc(-z);
        let value = 0.5 * libm::erfc(z);
        TailProbability::from_parts(value, (-q).ln_1p())
    }
}

// ln Q(x) for large x, assembled as -x²/2 - ln√(2π) + ln A(x). The square is
// split into an exact high/low pair so its rounding does not leak into the
// log at x ~ 40.
fn ln_survival_tail(x: f64) -> f64 {
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    (mills_ratio_cf(x).ln() - LN_SQRT_2PI - 0.5 * hi) - 0.5 * lo
}

/// Mills ratio A(x) = Q(x)/φ(x) for x ≥ 0, evaluated without ever forming
/// Q and φ separately past the point where both underflow.
pub fn mills_ratio(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "mills_ratio requires x >= 0, got {x}"
        )));
    }
    Ok(mills_unchecked(x))
}

fn mills_unchecked(x: f64) -> f64 {
    if x < MILLS_CF_CUTOVER {
        0.5 * libm::erfc(x * FRAC_1_SQRT_2) / std_normal_pdf(x)
    } else {
        mills_ratio_cf(x)
    }
}

// Laplace continued fraction 1/(x + 1/(x + 2/(x + 3/(x + ...)))) evaluated
// with the modified Lentz scheme. Converges quickly for x ≥ 6, which is the
// only region where it is used.
fn mills_ratio_cf(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0_f64;
    for k in 1..=500u32 {
        let a = if k == 1 { 1.0 } else { (k - 1) as f64 };
        d = x + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = x + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    f
}

/// Lower rational bound x/(x²+1) of the Mills ratio, valid for x > 0.
pub fn mills_lower(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "mills_lower requires x > 0, got {x}"
        )));
    }
    Ok(x / (x * x + 1.0))
}

/// Upper rational bound (x²+2)/(x³+3x) of the Mills ratio, valid for x > 0.
pub fn mills_upper(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "mills_upper requires x > 0, got {x}"
        )));
    }
    Ok((x * x + 2.0) / (x * (x * x + 3.0)))
}

/// Reciprocal Mills ratio V(x) = φ(x)/Q(x), defined for every finite x.
///
/// Strictly increasing, with x < V(x) < x + 1/x for x > 0.
pub fn reciprocal_mills(x: f64) -> f64 {
    if x >= MILLS_CF_CUTOVER {
        1.0 / mills_ratio_cf(x)
    } else {
        std_normal_pdf(x) / (0.5 * libm::erfc(x * FRAC_1_SQRT_2))
    }
}

/// Upper-tail quantile: the x with Q(x) = p, for p in (0, 1/2].
///
/// Solved by safeguarded Newton on ln Q(x) - ln p, seeded from the
/// asymptotic tail expansion; the bracket [0, ∞) makes the iteration
/// globally convergent.
///
/// ```
/// use normax::specfn::std_normal_quantile_upper;
/// use normax::TailProbability;
/// let p = TailProbability::from_log(-100f64 * std::f64::consts::LN_10).unwrap();
/// let x = std_normal_quantile_upper(p).unwrap(); // Q(x) = 1e-100
/// assert!((x - 21.2734535609653).abs() < 1e-12);
/// ```
pub fn std_normal_quantile_upper(p: TailProbability) -> Result<f64> {
    let ln_p = p.log_value();
    if ln_p.is_nan() || ln_p == f64::NEG_INFINITY {
        return Err(Error::Domain(format!(
            "quantile requires a positive tail probability, log p = {ln_p}"
        )));
    }
    if ln_p > -LN_2 + 4e-16 {
        return Err(Error::Domain(format!(
            "quantile requires p <= 1/2, got log p = {ln_p}"
        )));
    }
    if (ln_p + LN_2).abs() <= 4e-16 {
        return Ok(0.0);
    }

    // Seed: Q(x) ~ φ(x)/x gives x² + 2 ln x = ln(1/(2π p²)) =: l, the same
    // shape of equation the asymptotic solver below expands.
    let l = -2.0 * ln_p - LN_2PI;
    let mut x = if l >= 2.0 {
        u_d_asymptotic_unchecked(l, 2.0).max(0.0).sqrt().min(45.0)
    } else {
        (0.5 - ln_p.exp()) * SQRT_2PI
    };

    let mut lo = 0.0_f64;
    let mut hi = 45.0_f64;
    while std_normal_survival(hi).log_value() > ln_p {
        lo = hi;
        hi *= 2.0;
        if hi > 1e9 {
            return Err(Error::NoConvergence(format!(
                "quantile bracket expansion failed for log p = {ln_p}"
            )));
        }
    }
    if !(x > lo && x < hi) {
        x = 0.5 * (lo + hi);
    }

    for _ in 0..60 {
        let g = std_normal_survival(x).log_value() - ln_p;
        if g > 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        // d/dx ln Q = -V, so the Newton update is x + g/V.
        let next = x + g / reciprocal_mills(x);
        if (next - x).abs() <= 1e-14 * (1.0 + x.abs()) {
            return Ok(next);
        }
        x = if next > lo && next < hi {
            next
        } else {
            0.5 * (lo + hi)
        };
    }
    Err(Error::NoConvergence(format!(
        "normal quantile did not converge within 60 iterations for log p = {ln_p}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_FRAC_PI_2: f64 = 1.2533141373155002512078826424055226265034933703050;

    fn quantile_of(p: f64) -> f64 {
        std_normal_quantile_upper(TailProbability::from_value(p).unwrap()).unwrap()
    }

    #[test]
    fn pdf_reference_points() {
        assert!((std_normal_pdf(0.0) - 0.3989422804014327).abs() < 1e-16);
        assert!((std_normal_pdf(1.0) - 0.24197072451914337).abs() < 1e-16);
        assert_eq!(std_normal_pdf(1.0), std_normal_pdf(-1.0));
    }

    #[test]
    fn survival_reference_points() {
        assert_eq!(std_normal_survival(0.0).value(), 0.5);
        // erfc oracle value at x = 1
        let q1 = std_normal_survival(1.0).value();
        assert!((q1 - 0.15865525393145707).abs() < 4e-16, "q1={q1}");
    }

    #[test]
    fn survival_value_and_log_agree() {
        // agreement to 4 ulps of the log field: a binary64 log quantizes at
        // ulp(|ln v|), which is the attainable consistency for tiny values
        for &x in &[-30.0, -8.5, -3.0, 0.0, 1.0, 5.0, 8.0, 12.0, 20.0, 36.5] {
            let q = std_normal_survival(x);
            let back = q.log_value().exp();
            let tol = 4.0 * f64::EPSILON * q.log_value().abs().max(1.0);
            assert!(
                (back / q.value() - 1.0).abs() < tol,
                "x={x} value={} exp(log)={}",
                q.value(),
                back
            );
        }
    }

    #[test]
    fn survival_log_routes_agree_where_both_apply() {
        // the Mills assembly must join the direct route smoothly
        let mut x = 30.0;
        while x <= 37.0 {
            let direct = (0.5 * libm::erfc(x * FRAC_1_SQRT_2)).ln();
            let tail = ln_survival_tail(x);
            assert!(
                (direct - tail).abs() <= 1e-12 * direct.abs(),
                "x={x}: direct={direct} tail={tail}"
            );
            x += 0.5;
        }
    }

    #[test]
    fn survival_deep_tail_has_finite_log() {
        let q = std_normal_survival(100.0);
        assert_eq!(q.value(), 0.0);
        assert!(q.log_value().is_finite());
        // ln Q(100) ~ -100²/2 - ln(100√(2π))
        let approx = -5000.0 - (100.0 * SQRT_2PI).ln();
        assert!((q.log_value() - approx).abs() < 1e-3);
    }

    #[test]
    fn quantile_median_is_zero() {
        assert_eq!(quantile_of(0.5), 0.0);
    }

    #[test]
    fn quantile_matches_published_value_at_tenth() {
        let b = quantile_of(0.1);
        assert!((b - 1.28155).abs() < 1e-5, "b={b}");
        // round trip at full precision
        let q = std_normal_survival(b).value();
        assert!((q / 0.1 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn quantile_round_trip_deep_tail() {
        for &p in &[1e-1f64, 1e-5, 1e-20, 1e-60, 1e-100] {
            let tp = TailProbability::from_log(p.ln()).unwrap();
            let x = std_normal_quantile_upper(tp).unwrap();
            let back = std_normal_survival(x).log_value();
            let rel = (back - p.ln()).abs();
            assert!(rel <= 1e-12, "p={p} x={x} |Δ log|={rel}");
        }
    }

    #[test]
    fn quantile_inverse_of_published_tail_point() {
        // Q(b) = 1e-60 has b ≈ 16.39728
        let x = quantile_of(1e-60);
        assert!((x - 16.39728).abs() < 1e-5, "x={x}");
    }

    #[test]
    fn quantile_rejects_bad_inputs() {
        let p = TailProbability::from_value(0.7).unwrap();
        assert!(std_normal_quantile_upper(p).is_err());
    }

    #[test]
    fn quantile_monotone_decreasing_in_p() {
        let ps = [0.5, 0.4, 0.2, 0.1, 1e-3, 1e-9, 1e-30];
        let xs: Vec<f64> = ps.iter().map(|&p| quantile_of(p)).collect();
        for w in xs.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn mills_reference_points() {
        assert!((mills_ratio(0.0).unwrap() - SQRT_FRAC_PI_2).abs() < 1e-15);
        // scaled complementary error function oracle at x = 1
        let m1 = mills_ratio(1.0).unwrap();
        assert!((m1 - 0.6556795424187985).abs() < 2e-15, "m1={m1}");
        let m10 = mills_ratio(10.0).unwrap();
        assert!(m10 > 10.0 / 101.0 && m10 < 102.0 / 1030.0);
        assert!(mills_ratio(-0.1).is_err());
    }

    #[test]
    fn mills_bounds_reference_points() {
        assert_eq!(mills_lower(1.0).unwrap(), 0.5);
        assert_eq!(mills_upper(1.0).unwrap(), 0.75);
        assert!((mills_upper(2.0).unwrap() - 6.0 / 14.0).abs() < 1e-16);
        assert!(mills_lower(0.0).is_err());
        assert!(mills_upper(-1.0).is_err());
    }

    #[test]
    fn mills_cf_agrees_with_direct_route_on_overlap() {
        let mut x = 5.0;
        while x <= 10.0 {
            let direct = 0.5 * libm::erfc(x * FRAC_1_SQRT_2) / std_normal_pdf(x);
            let cf = mills_ratio_cf(x);
            assert!(
                (cf / direct - 1.0).abs() < 1e-13,
                "x={x} direct={direct} cf={cf}"
            );
            x += 0.25;
        }
    }

    #[test]
    fn mills_sandwich_on_log_grid() {
        // 200 log-spaced points on [1e-3, 40]
        let lo: f64 = 1e-3;
        let hi: f64 = 40.0;
        for i in 0..200 {
            let t = i as f64 / 199.0;
            let x = (lo.ln() + t * (hi.ln() - lo.ln())).exp();
            let m = mills_ratio(x).unwrap();
            let l = mills_lower(x).unwrap();
            let u = mills_upper(x).unwrap();
            assert!(l < m, "lower violated at x={x}: {l} !< {m}");
            assert!(m < u, "upper violated at x={x}: {m} !< {u}");
            assert!(u < 1.0 / x, "1/x violated at x={x}");
        }
    }

    #[test]
    fn reciprocal_mills_reference_points() {
        assert!((reciprocal_mills(0.0) - 0.7978845608028654).abs() < 1e-15);
        let v1 = reciprocal_mills(1.0);
        assert!((v1 - 1.525135276160981).abs() < 2e-15, "v1={v1}");
        let v5 = reciprocal_mills(5.0);
        assert!(v5 > 5.0 && v5 < 5.2);
    }

    #[test]
    fn reciprocal_sandwich_and_monotone() {
        let lo: f64 = 1e-3;
        let hi: f64 = 40.0;
        let mut prev = reciprocal_mills(-5.0);
        for i in 0..200 {
            let t = i as f64 / 199.0;
            let x = (lo.ln() + t * (hi.ln() - lo.ln())).exp();
            let v = reciprocal_mills(x);
            assert!(
                x < v && v < x + 1.0 / x,
                "sandwich violated at x={x}: v={v}"
            );
            assert!(v > prev, "V not increasing at x={x}");
            prev = v;
        }
    }

    #[test]
    fn mills_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        let mut x = 0.0;
        while x <= 45.0 {
            let m = mills_unchecked(x);
            assert!(m < prev, "not decreasing at x={x}");
            prev = m;
            x += 0.173;
        }
    }
}
