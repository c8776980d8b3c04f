//! Principal branch of the Lambert W function on [0, ∞), a log-argument
//! variant for arguments too large to represent, and the truncated
//! asymptotic expansions that seed them.

use crate::error::{Error, Result};
use std::f64::consts::E;

/// Number of retained terms in a truncated asymptotic expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionOrder {
    terms: u8,
}

impl ExpansionOrder {
    /// Only 2, 3 or 4 terms are supported.
    pub fn new(terms: u8) -> Result<Self> {
        if !(2..=4).contains(&terms) {
            return Err(Error::Domain(format!(
                "expansion order must be 2, 3 or 4, got {terms}"
            )));
        }
        Ok(Self { terms })
    }

    pub fn terms(self) -> u8 {
        self.terms
    }
}

/// W(t) on the principal branch for t ≥ 0, so that W e^W = t.
///
/// Halley iteration, seeded with the asymptotic expansion for large t.
///
/// ```
/// use normax::specfn::lambert_w0;
/// let w = lambert_w0(std::f64::consts::E).unwrap();
/// assert!((w - 1.0).abs() < 1e-15);
/// ```
pub fn lambert_w0(t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!(
            "lambert_w0 requires t >= 0, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(0.0);
    }

    let mut w = if t >= E {
        let l = t.ln();
        if l > 1.0 {
            l - l.ln() + l.ln() / l
        } else {
            1.0
        }
    } else {
        // crude but safe seed on (0, e); Halley is cubic from here
        t.ln_1p() * 0.85
    };

    for _ in 0..100 {
        let ew = w.exp();
        let f = w * ew - t;
        let w1 = w + 1.0;
        let denom = ew * w1 - (w + 2.0) * f / (2.0 * w1);
        let step = f / denom;
        let next = (w - step).max(0.0);
        if (next - w).abs() <= 4e-16 * (1.0 + next.abs()) {
            return Ok(next);
        }
        w = next;
    }
    Err(Error::NoConvergence(format!(
        "lambert_w0 did not converge for t = {t}"
    )))
}

/// Solve y + ln y = L for y ≥ 1, given L ≥ 1.
///
/// This is W(e^L) computed from the logarithm of the argument, so it stays
/// usable when e^L itself overflows.
pub fn lambert_w_log_arg(l: f64) -> Result<f64> {
    if !(l >= 1.0 - 1e-12) {
        return Err(Error::Domain(format!(
            "lambert_w_log_arg requires L >= 1, got {l}"
        )));
    }
    // g(y) = y + ln y - L is concave increasing, so Newton started at y = L
    // (where g = ln L ≥ 0) underestimates once and then climbs monotonically.
    let mut y = l.max(1.0);
    for _ in 0..100 {
        let g = y + y.ln() - l;
        let step = g * y / (y + 1.0);
        let next = (y - step).max(0.5);
        if (next - y).abs() <= 1e-15 * (1.0 + next.abs()) {
            return Ok(next);
        }
        y = next;
    }
    Err(Error::NoConvergence(format!(
        "lambert_w_log_arg did not converge for L = {l}"
    )))
}

/// Truncated asymptotic expansion of W(t) in terms of L = ln t:
/// L - ln L (+ ln L/L for 3 terms, + ln L (ln L - 2)/(2L²) for 4).
pub fn w_asymptotic(l: f64, order: ExpansionOrder) -> Result<f64> {
    if !(l > 1.0) {
        return Err(Error::Domain(format!(
            "w_asymptotic requires L > 1, got {l}"
        )));
    }
    let ll = l.ln();
    let mut w = l - ll;
    if order.terms() >= 3 {
        w += ll / l;
    }
    if order.terms() >= 4 {
        w += ll * (ll - 2.0) / (2.0 * l * l);
    }
    Ok(w)
}

/// Asymptotic solution of y e^y D(1/y) = t with D(u) = 1 + d₁u + …,
/// expanded in L = ln t: L - ln L + (ln L - d₁)/L.
pub fn u_d_asymptotic(l: f64, d1: f64) -> Result<f64> {
    if !(l > 1.0) {
        return Err(Error::Domain(format!(
            "u_d_asymptotic requires L > 1, got {l}"
        )));
    }
    Ok(u_d_asymptotic_unchecked(l, d1))
}

pub(crate) fn u_d_asymptotic_unchecked(l: f64, d1: f64) -> f64 {
    let ll = l.ln();
    l - ll + (ll - d1) / l
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(t: u8) -> ExpansionOrder {
        ExpansionOrder::new(t).unwrap()
    }

    #[test]
    fn expansion_order_validation() {
        assert!(ExpansionOrder::new(1).is_err());
        assert!(ExpansionOrder::new(5).is_err());
        assert!(ExpansionOrder::new(3).is_ok());
    }

    #[test]
    fn w0_fixed_points() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert!((lambert_w0(E).unwrap() - 1.0).abs() < 1e-15);
        assert!(lambert_w0(-0.5).is_err());
    }

    #[test]
    fn w0_matches_squared_hall_location_at_ten() {
        // W(100/(2π)) is the square of the n = 10 Hall location 1.43165
        let w = lambert_w0(100.0 / (2.0 * std::f64::consts::PI)).unwrap();
        assert!((w - 1.43165f64 * 1.43165).abs() < 3e-5, "w={w}");
    }

    #[test]
    fn w0_residuals_small() {
        for &t in &[1e-6, 1.0, E, 10.0, 1e6, 1e100] {
            let w = lambert_w0(t).unwrap();
            let resid = (w * w.exp() - t).abs();
            assert!(
                resid <= 1e-14 * t.max(1.0),
                "t={t} w={w} residual={resid:e}"
            );
        }
    }

    #[test]
    fn w0_monotone_increasing() {
        let ts = [0.0, 1e-8, 0.1, 1.0, 2.0, E, 10.0, 1e3, 1e10, 1e100, 1e300];
        let ws: Vec<f64> = ts.iter().map(|&t| lambert_w0(t).unwrap()).collect();
        for pair in ws.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn log_arg_fixed_point_at_one() {
        assert!((lambert_w_log_arg(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(lambert_w_log_arg(0.5).is_err());
    }

    #[test]
    fn log_arg_residuals() {
        for &l in &[1.0, 1.5, 2.0, 10.0, 274.47233442466544] {
            let y = lambert_w_log_arg(l).unwrap();
            let resid = (y + y.ln() - l).abs();
            assert!(resid <= 1e-13, "L={l} y={y} residual={resid:e}");
        }
    }

    #[test]
    fn log_arg_matches_squared_hall_location_at_1e60() {
        // L = 2 ln(10^60) - ln(2π); the root is the square of 16.39750
        let l = 120.0 * std::f64::consts::LN_10 - super::super::normal::LN_2PI;
        let y = lambert_w_log_arg(l).unwrap();
        assert!((y - 16.39750f64 * 16.39750).abs() < 1e-3, "y={y}");
    }

    #[test]
    fn log_arg_agrees_with_w0() {
        for k in 1..=300 {
            let t = 10f64.powi(k);
            if !t.is_finite() {
                break;
            }
            let a = lambert_w0(t).unwrap();
            let b = lambert_w_log_arg(t.ln()).unwrap();
            assert!((a - b).abs() <= 1e-12, "t=1e{k}: {a} vs {b}");
        }
        let a = lambert_w0(E).unwrap();
        let b = lambert_w_log_arg(1.0).unwrap();
        assert!((a - b).abs() <= 1e-12);
    }

    #[test]
    fn asymptotic_direct_formulas() {
        let l = E;
        assert!((w_asymptotic(l, order(2)).unwrap() - (E - 1.0)).abs() < 1e-15);
        let l = 100.0;
        let expect = 100.0 - 100f64.ln() + 100f64.ln() / 100.0;
        assert!((w_asymptotic(l, order(3)).unwrap() - expect).abs() < 1e-15);
        assert!(w_asymptotic(1.0, order(2)).is_err());
    }

    #[test]
    fn asymptotic_error_shrinks_like_square() {
        // |w_asym(L,3) - exact| / (ln L / L)² stays bounded and the raw gap
        // shrinks over L = 10, 10², 10³, 10⁴
        let mut prev_gap = f64::INFINITY;
        for &l in &[10.0, 100.0, 1000.0, 10_000.0] {
            let exact = lambert_w_log_arg(l).unwrap();
            let gap = (w_asymptotic(l, order(3)).unwrap() - exact).abs();
            let scaled = gap * (l / l.ln()).powi(2);
            assert!(scaled <= 0.6, "L={l} scaled={scaled}");
            assert!(gap < prev_gap, "gap not shrinking at L={l}");
            prev_gap = gap;
        }
    }

    #[test]
    fn order_four_improves_on_order_three() {
        for &l in &[50.0, 1e3, 1e5] {
            let exact = lambert_w_log_arg(l).unwrap();
            let e3 = (w_asymptotic(l, order(3)).unwrap() - exact).abs();
            let e4 = (w_asymptotic(l, order(4)).unwrap() - exact).abs();
            assert!(e4 < e3, "L={l}: e4={e4} !< e3={e3}");
        }
    }

    #[test]
    fn u_d_reference_values() {
        // d1 = 0 reduces to the three-term W expansion
        for &l in &[2.0, 10.0, 1e3] {
            let a = u_d_asymptotic(l, 0.0).unwrap();
            let b = w_asymptotic(l, order(3)).unwrap();
            assert_eq!(a, b);
        }
        let l = 10.0;
        let expect = 10.0 - 10f64.ln() + (10f64.ln() - 2.0) / 10.0;
        assert!((u_d_asymptotic(l, 2.0).unwrap() - expect).abs() < 1e-15);
        assert!(u_d_asymptotic(0.9, 2.0).is_err());
    }

    #[test]
    fn u_d_reproduces_published_location_at_1e10() {
        // √(U_D(10^20/(2π))) with d1 = 2 is the n = 10^10 location 6.36123
        let l = 20.0 * std::f64::consts::LN_10 - super::super::normal::LN_2PI;
        let v = u_d_asymptotic(l, 2.0).unwrap().sqrt();
        assert!((v - 6.36123).abs() < 1e-5, "v={v}");
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn w0_defining_equation(log10_t in -6.0f64..100.0) {
            let t = 10f64.powf(log10_t);
            let w = lambert_w0(t).unwrap();
            prop_assert!((w * w.exp() - t).abs() <= 1e-13 * t.max(1.0));
        }

        #[test]
        fn log_arg_defining_equation(l in 1.0f64..700.0) {
            let y = lambert_w_log_arg(l).unwrap();
            prop_assert!((y + y.ln() - l).abs() <= 1e-12 * l.max(1.0));
        }
    }
}
