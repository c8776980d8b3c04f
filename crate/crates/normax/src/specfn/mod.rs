//! Special functions for extreme-tail work with the standard normal law.
//!
//! Everything here is pure and thread-safe. The normal survival function is
//! carried as a [`TailProbability`] so that callers keep a usable value down
//! to probabilities far below the smallest positive double.

mod gumbel;
mod lambert;
mod normal;

pub use gumbel::{gumbel_cdf, gumbel_pdf, ln_gumbel_cdf};
pub use lambert::{lambert_w0, lambert_w_log_arg, u_d_asymptotic, w_asymptotic, ExpansionOrder};
pub(crate) use normal::ln_std_normal_pdf;
pub use normal::{
    mills_lower, mills_ratio, mills_upper, reciprocal_mills, std_normal_pdf,
    std_normal_quantile_upper, std_normal_survival,
};

use crate::error::{Error, Result};

/// An upper-tail probability carried as both a value in (0, 1] and its
/// natural logarithm.
///
/// The two fields agree whenever the value is representable; the log field
/// is the authoritative one once the value underflows (below ~1e-300).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailProbability {
    value: f64,
    log_value: f64,
}

impl TailProbability {
    /// Build from a plain probability in (0, 1].
    pub fn from_value(value: f64) -> Result<Self> {
        if !(value > 0.0 && value <= 1.0) {
            return Err(Error::Domain(format!(
                "tail probability must lie in (0, 1], got {value}"
            )));
        }
        Ok(Self {
            value,
            log_value: value.ln(),
        })
    }

    /// Build from a log-probability `log_value` ≤ 0. The value field is
    /// `exp(log_value)`, which may underflow to 0 for very negative inputs.
    pub fn from_log(log_value: f64) -> Result<Self> {
        if !(log_value <= 0.0) || log_value.is_nan() {
            return Err(Error::Domain(format!(
                "log of a tail probability must be <= 0, got {log_value}"
            )));
        }
        Ok(Self {
            value: log_value.exp(),
            log_value,
        })
    }

    pub(crate) fn from_parts(value: f64, log_value: f64) -> Self {
        Self { value, log_value }
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn log_value(self) -> f64 {
        self.log_value
    }
}
