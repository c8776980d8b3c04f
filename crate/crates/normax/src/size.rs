//! Sample sizes carried together with their natural logarithm.
//!
//! Everything downstream works through [`LogSize`] so that sizes such as
//! 10^100 flow through quantiles, locations and bound constants without any
//! intermediate ever overflowing.

use crate::error::{Error, Result};
use std::f64::consts::LN_10;
use std::fmt;
use std::str::FromStr;

/// A sample size n ≥ 1 stored as (n, ln n).
///
/// The log field is authoritative when n is too large to represent; sizes
/// may be non-integer, which the sweeps and calibration rely on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogSize {
    n: f64,
    log_n: f64,
}

impl LogSize {
    /// From a plain size n ≥ 1.
    pub fn new(n: f64) -> Result<Self> {
        if !(n.is_finite() && n >= 1.0) {
            return Err(Error::Domain(format!("sample size must be >= 1, got {n}")));
        }
        Ok(Self { n, log_n: n.ln() })
    }

    /// From ln n ≥ 0. The value field may overflow to infinity; the log
    /// stays exact.
    pub fn from_ln(log_n: f64) -> Result<Self> {
        if !(log_n.is_finite() && log_n >= 0.0) {
            return Err(Error::Domain(format!("ln n must be >= 0, got {log_n}")));
        }
        Ok(Self {
            n: log_n.exp(),
            log_n,
        })
    }

    /// The size 10^k.
    pub fn pow10(k: f64) -> Result<Self> {
        if !(k.is_finite() && k >= 0.0) {
            return Err(Error::Domain(format!(
                "pow10 exponent must be >= 0, got {k}"
            )));
        }
        Ok(Self {
            n: 10f64.powf(k),
            log_n: k * LN_10,
        })
    }

    pub fn n(self) -> f64 {
        self.n
    }

    pub fn log_n(self) -> f64 {
        self.log_n
    }

    /// `count` sizes with logarithms equally spaced between those of `lo`
    /// and `hi`, endpoints included.
    pub fn log_spaced(lo: LogSize, hi: LogSize, count: usize) -> Vec<LogSize> {
        assert!(count >= 2, "need at least the two endpoints");
        let (a, b) = (lo.log_n, hi.log_n);
        (0..count)
            .map(|i| {
                let t = i as f64 / (count - 1) as f64;
                let log_n = a + t * (b - a);
                LogSize {
                    n: log_n.exp(),
                    log_n,
                }
            })
            .collect()
    }

    /// Compact label: small integers verbatim, exact powers of ten as
    /// `1eK`, anything else in shortest round-trip form.
    pub fn label(self) -> String {
        if self.n.is_finite() && self.n < 1e7 && self.n.fract() == 0.0 {
            return format!("{}", self.n as u64);
        }
        let k = self.log_n / LN_10;
        if (k - k.round()).abs() < 1e-9 && k.round() >= 0.0 {
            return format!("1e{}", k.round() as i64);
        }
        format!("{}", self.n)
    }
}

impl fmt::Display for LogSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl FromStr for LogSize {
    type Err = Error;

    /// Accepts `123`, `2.5`, `1e30` and `10^100`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((base, exp)) = s.split_once('^') {
            let base: f64 = base
                .parse()
                .map_err(|_| Error::Domain(format!("bad size literal {s}")))?;
            if base != 10.0 {
                return Err(Error::Domain(format!(
                    "only base-10 powers are supported, got {s}"
                )));
            }
            let k: f64 = exp
                .parse()
                .map_err(|_| Error::Domain(format!("bad size literal {s}")))?;
            return LogSize::pow10(k);
        }
        // "1e30" and plain decimals both go through the float parser, but
        // exact powers of ten keep an exact log
        let n: f64 = s
            .parse()
            .map_err(|_| Error::Domain(format!("bad size literal {s}")))?;
        if n.is_finite() && n >= 1.0 {
            let k = n.log10();
            if k == k.round() && 10f64.powf(k) == n {
                return LogSize::pow10(k);
            }
        }
        LogSize::new(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_consistency() {
        let n = LogSize::new(1000.0).unwrap();
        assert_eq!(n.n(), 1000.0);
        assert!((n.log_n() - 3.0 * LN_10).abs() <= 1e-12 * n.log_n());
        assert!(LogSize::new(0.5).is_err());
        assert!(LogSize::new(f64::INFINITY).is_err());
    }

    #[test]
    fn huge_sizes_stay_finite_in_log() {
        let n = LogSize::pow10(100.0).unwrap();
        assert_eq!(n.n(), 1e100);
        assert!((n.log_n() - 230.25850929940458).abs() < 1e-12);
        let bigger = LogSize::from_ln(800.0).unwrap();
        assert!(bigger.n().is_infinite());
        assert_eq!(bigger.log_n(), 800.0);
    }

    #[test]
    fn parsing_forms() {
        assert_eq!("10".parse::<LogSize>().unwrap().n(), 10.0);
        assert_eq!("1e30".parse::<LogSize>().unwrap().n(), 1e30);
        assert_eq!("10^100".parse::<LogSize>().unwrap().n(), 1e100);
        assert_eq!("2.5".parse::<LogSize>().unwrap().n(), 2.5);
        assert!("abc".parse::<LogSize>().is_err());
        assert!("2^10".parse::<LogSize>().is_err());
        assert!("0.2".parse::<LogSize>().is_err());
    }

    #[test]
    fn labels() {
        assert_eq!("10".parse::<LogSize>().unwrap().label(), "10");
        assert_eq!("1000000".parse::<LogSize>().unwrap().label(), "1000000");
        assert_eq!("1e30".parse::<LogSize>().unwrap().label(), "1e30");
        assert_eq!("10^100".parse::<LogSize>().unwrap().label(), "1e100");
        assert_eq!("2.5".parse::<LogSize>().unwrap().label(), "2.5");
    }

    #[test]
    fn log_spaced_grid_endpoints() {
        let grid = LogSize::log_spaced(
            LogSize::new(2.0).unwrap(),
            LogSize::pow10(100.0).unwrap(),
            200,
        );
        assert_eq!(grid.len(), 200);
        assert!((grid[0].n() - 2.0).abs() < 1e-12);
        assert!((grid[199].log_n() - 100.0 * LN_10).abs() < 1e-9);
        for w in grid.windows(2) {
            assert!(w[0].log_n() < w[1].log_n());
        }
    }
}
