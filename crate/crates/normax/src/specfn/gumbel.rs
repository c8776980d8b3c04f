//! Gumbel distribution function and density.

/// Gumbel CDF Λ(x) = exp(-e^{-x}).
pub fn gumbel_cdf(x: f64) -> f64 {
    (-(-x).exp()).exp()
}

/// Gumbel density Λ'(x) = e^{-x} exp(-e^{-x}).
pub fn gumbel_pdf(x: f64) -> f64 {
    (-x - (-x).exp()).exp()
}

/// ln Λ(x) = -e^{-x}.
pub fn ln_gumbel_cdf(x: f64) -> f64 {
    -(-x).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    const E_INV: f64 = 0.36787944117144233;

    #[test]
    fn cdf_at_zero_is_inverse_e() {
        assert!((gumbel_cdf(0.0) - E_INV).abs() < 1e-16);
    }

    #[test]
    fn median_at_minus_ln_ln_two() {
        let x = -std::f64::consts::LN_2.ln();
        assert!((x - 0.36651292058166435).abs() < 1e-15);
        assert!((gumbel_cdf(x) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn pdf_at_zero_is_inverse_e() {
        assert!((gumbel_pdf(0.0) - E_INV).abs() < 1e-16);
    }

    #[test]
    fn cdf_in_unit_interval_and_increasing() {
        let mut prev = 0.0;
        let mut x = -5.0;
        while x <= 20.0 {
            let c = gumbel_cdf(x);
            assert!((0.0..=1.0).contains(&c));
            assert!(c >= prev);
            prev = c;
            x += 0.1;
        }
    }

    #[test]
    fn log_cdf_consistent() {
        for &x in &[-2.0, 0.0, 1.0, 10.0] {
            assert!((ln_gumbel_cdf(x).exp() - gumbel_cdf(x)).abs() < 1e-16);
        }
    }
}
