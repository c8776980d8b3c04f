//! Norming constants for the maximum of n i.i.d. standard normal variables.
//!
//! The location families:
//!
//! * `Exact` — b_n with Q(b_n) = 1/n, via the tail quantile;
//! * `HallStar` — b*_n with φ(b)/b = 1/n, via Lambert W: b*_n = √W(n²/2π);
//! * six closed-form approximants derived from the asymptotics of W and its
//!   generalization, including the two-parameter family `BGeneral(p, q)`.
//!
//! Scales come from one of three auxiliary functions evaluated at the
//! location: the Mills ratio (canonical), x/(1+x²) (Fisher–Tippett) or 1/x.

use crate::error::{Error, Result};
use crate::size::LogSize;
use crate::specfn::{
    lambert_w0, lambert_w_log_arg, mills_ratio, std_normal_quantile_upper, TailProbability,
};
use std::fmt;
use std::str::FromStr;

pub(crate) const LN_2PI: f64 = 1.8378770664093454835606594728112352797227949472756;
const LN_4PI: f64 = 2.5310242469692907929778915942694118204886117519777;

/// Scale-generating auxiliary function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxiliaryKind {
    /// Mills ratio Q(x)/φ(x).
    Canonical,
    /// x/(1+x²), the Fisher–Tippett choice.
    FisherTippett,
    /// 1/x, the simplest tail-equivalent choice.
    Hall,
}

impl AuxiliaryKind {
    pub const ALL: [AuxiliaryKind; 3] = [
        AuxiliaryKind::Canonical,
        AuxiliaryKind::FisherTippett,
        AuxiliaryKind::Hall,
    ];

    pub fn token(self) -> &'static str {
        match self {
            AuxiliaryKind::Canonical => "ac",
            AuxiliaryKind::FisherTippett => "af",
            AuxiliaryKind::Hall => "ah",
        }
    }
}

impl fmt::Display for AuxiliaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for AuxiliaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ac" | "canonical" => Ok(AuxiliaryKind::Canonical),
            "af" | "fishertippett" | "ft" => Ok(AuxiliaryKind::FisherTippett),
            "ah" | "hall" => Ok(AuxiliaryKind::Hall),
            other => Err(Error::Domain(format!("unknown auxiliary kind '{other}'"))),
        }
    }
}

/// Location-constant family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ApproxMethod {
    /// b_n = Φ⁻¹(1 − 1/n).
    Exact,
    /// b*_n with φ(b)/b = 1/n.
    HallStar,
    /// √(2 ln n) − (ln ln n + ln 4π)/(2√(2 ln n)).
    BetaStar,
    /// Three-term W expansion of b*_n in ln(n²/2π).
    BarBetaStar,
    /// BetaStar plus the next correction term.
    TildeBetaStar,
    /// Three-term expansion of b_n in ln(n²/2π).
    BarBeta,
    /// TildeBetaStar adjusted toward b_n.
    TildeBeta,
    /// The proposed constant β_n = B_n(1/2, −ln 2π).
    BetaFinal,
    /// Two-parameter family behind BarBeta and BetaFinal.
    BGeneral { p: f64, q: f64 },
}

impl ApproxMethod {
    /// The six closed-form rows plus the two defining families, in the
    /// order used by the comparison table.
    pub const TABLE: [ApproxMethod; 6] = [
        ApproxMethod::Exact,
        ApproxMethod::BetaFinal,
        ApproxMethod::BarBeta,
        ApproxMethod::HallStar,
        ApproxMethod::BarBetaStar,
        ApproxMethod::BetaStar,
    ];

    pub fn token(self) -> String {
        match self {
            ApproxMethod::Exact => "exact".into(),
            ApproxMethod::HallStar => "hallstar".into(),
            ApproxMethod::BetaStar => "betastar".into(),
            ApproxMethod::BarBetaStar => "barbetastar".into(),
            ApproxMethod::TildeBetaStar => "tildebetastar".into(),
            ApproxMethod::BarBeta => "barbeta".into(),
            ApproxMethod::TildeBeta => "tildebeta".into(),
            ApproxMethod::BetaFinal => "betafinal".into(),
            ApproxMethod::BGeneral { p, q } => format!("bgeneral:{p}:{q}"),
        }
    }
}

impl fmt::Display for ApproxMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl FromStr for ApproxMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if let Some(rest) = s.strip_prefix("bgeneral:") {
            let (p, q) = rest.split_once(':').ok_or_else(|| {
                Error::Domain(format!("bgeneral needs the form bgeneral:P:Q, got '{s}'"))
            })?;
            let p: f64 = p
                .parse()
                .map_err(|_| Error::Domain(format!("bad bgeneral parameter in '{s}'")))?;
            let q: f64 = q
                .parse()
                .map_err(|_| Error::Domain(format!("bad bgeneral parameter in '{s}'")))?;
            return Ok(ApproxMethod::BGeneral { p, q });
        }
        match s.as_str() {
            "exact" => Ok(ApproxMethod::Exact),
            "hallstar" => Ok(ApproxMethod::HallStar),
            "betastar" => Ok(ApproxMethod::BetaStar),
            "barbetastar" => Ok(ApproxMethod::BarBetaStar),
            "tildebetastar" => Ok(ApproxMethod::TildeBetaStar),
            "barbeta" => Ok(ApproxMethod::BarBeta),
            "tildebeta" => Ok(ApproxMethod::TildeBeta),
            "betafinal" => Ok(ApproxMethod::BetaFinal),
            other => Err(Error::Domain(format!("unknown method '{other}'"))),
        }
    }
}

/// A (location, scale) pair together with how it was built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormingPair {
    pub location: f64,
    pub scale: f64,
    pub method: ApproxMethod,
    pub aux: AuxiliaryKind,
}

/// b_n = Φ⁻¹(1 − 1/n), requiring n ≥ 2 so the location is nonnegative.
///
/// ```
/// use normax::{norming::exact_b, LogSize};
/// let b = exact_b("1e30".parse::<LogSize>().unwrap()).unwrap();
/// assert!((b - 11.46402).abs() < 1e-5);
/// ```
pub fn exact_b(n: LogSize) -> Result<f64> {
    if n.log_n() < std::f64::consts::LN_2 - 1e-12 {
        return Err(Error::Domain(format!(
            "exact_b requires n >= 2, got n = {n}"
        )));
    }
    let p = TailProbability::from_log(-n.log_n())?;
    std_normal_quantile_upper(p)
}

/// b*_n = √W(n²/2π), requiring n ≥ 3.
pub fn hall_b_star(n: LogSize) -> Result<f64> {
    if n.log_n() < 3f64.ln() - 1e-12 {
        return Err(Error::Domain(format!(
            "hall_b_star requires n >= 3, got n = {n}"
        )));
    }
    let l = 2.0 * n.log_n() - LN_2PI;
    let w = if n.log_n() <= 350.0 {
        // n²/(2π) is representable here
        lambert_w0(l.exp())?
    } else {
        lambert_w_log_arg(l)?
    };
    Ok(w.sqrt())
}

/// Evaluate the auxiliary function `kind` at a location `b`.
pub fn auxiliary_scale(kind: AuxiliaryKind, b: f64) -> Result<f64> {
    match kind {
        AuxiliaryKind::Canonical => {
            if !(b >= 0.0) {
                return Err(Error::DegenerateScale(format!(
                    "canonical auxiliary needs b >= 0, got {b}"
                )));
            }
            mills_ratio(b)
        }
        AuxiliaryKind::FisherTippett => {
            if !(b > 0.0) {
                return Err(Error::DegenerateScale(format!(
                    "Fisher–Tippett auxiliary needs b > 0, got {b}"
                )));
            }
            Ok(b / (1.0 + b * b))
        }
        AuxiliaryKind::Hall => {
            if !(b > 0.0) {
                return Err(Error::DegenerateScale(format!(
                    "1/x auxiliary needs b > 0, got {b}"
                )));
            }
            Ok(1.0 / b)
        }
    }
}

/// The closed-form approximants. `Exact` and `HallStar` are not closed
/// forms and are rejected here; use [`location`] to dispatch everything.
pub fn approx_location(method: ApproxMethod, n: LogSize) -> Result<f64> {
    let ln_n = n.log_n();
    match method {
        ApproxMethod::Exact | ApproxMethod::HallStar => Err(Error::Domain(format!(
            "{method} is not a closed-form approximant"
        ))),
        ApproxMethod::BetaStar => {
            let s2 = 2.0 * ln_n;
            if !(ln_n > 0.0) {
                return Err(Error::Domain(format!("betastar undefined at n = {n}")));
            }
            let s = s2.sqrt();
            Ok(s - (ln_n.ln() + LN_4PI) / (2.0 * s))
        }
        ApproxMethod::TildeBetaStar => tilde_family(ln_n, 0.0, n),
        ApproxMethod::TildeBeta => tilde_family(ln_n, 8.0, n),
        ApproxMethod::BarBetaStar => {
            let l2 = 2.0 * ln_n - LN_2PI;
            if !(l2 > 0.0) {
                return Err(Error::Domain(format!("barbetastar undefined at n = {n}")));
            }
            let r = l2 - l2.ln() + l2.ln() / l2;
            if !(r >= 0.0) {
                return Err(Error::Domain(format!(
                    "barbetastar radicand negative at n = {n}"
                )));
            }
            Ok(r.sqrt())
        }
        ApproxMethod::BarBeta => b_general(n, -LN_2PI, -LN_2PI),
        ApproxMethod::BetaFinal => b_general(n, 0.5, -LN_2PI),
        ApproxMethod::BGeneral { p, q } => b_general(n, p, q),
    }
}

// √(2λ) − ln(4πλ)/(2√(2λ)) − (ln(4πλ)² − 4 ln(4πλ) + shift)/(8 (2λ)^{3/2})
fn tilde_family(ln_n: f64, shift: f64, n: LogSize) -> Result<f64> {
    if !(ln_n > 0.0) {
        return Err(Error::Domain(format!(
            "tilde approximant undefined at n = {n}"
        )));
    }
    let s2 = 2.0 * ln_n;
    let s = s2.sqrt();
    let l4 = (4.0 * std::f64::consts::PI * ln_n).ln();
    Ok(s - l4 / (2.0 * s) - (l4 * l4 - 4.0 * l4 + shift) / (8.0 * s2 * s))
}

/// B_n(p, q): first two terms in ln(n²/2π), the correction term mixing p
/// into the inner logarithm and q into the denominator.
pub fn b_general(n: LogSize, p: f64, q: f64) -> Result<f64> {
    let x2 = 2.0 * n.log_n(); // ln(n²)
    if !(x2 + p > 0.0) || !(x2 + q > 0.0) {
        return Err(Error::Domain(format!(
            "b_general needs ln(n²)+p > 0 and ln(n²)+q > 0 at n = {n} (p={p}, q={q})"
        )));
    }
    let l2 = x2 - LN_2PI;
    if !(l2 > 0.0) {
        return Err(Error::Domain(format!("b_general undefined at n = {n}")));
    }
    let r = l2 - l2.ln() + ((x2 + p).ln() - 2.0) / (x2 + q);
    if !(r >= 0.0) {
        return Err(Error::Domain(format!(
            "b_general radicand negative at n = {n} (p={p}, q={q})"
        )));
    }
    Ok(r.sqrt())
}

/// Location of any family, iterative or closed-form.
pub fn location(method: ApproxMethod, n: LogSize) -> Result<f64> {
    match method {
        ApproxMethod::Exact => exact_b(n),
        ApproxMethod::HallStar => hall_b_star(n),
        _ => approx_location(method, n),
    }
}

/// Assemble a norming pair: location from `method`, scale from `aux`
/// evaluated at that location.
pub fn norming_pair(method: ApproxMethod, aux: AuxiliaryKind, n: LogSize) -> Result<NormingPair> {
    let loc = location(method, n)?;
    let scale = auxiliary_scale(aux, loc)?;
    Ok(NormingPair {
        location: loc,
        scale,
        method,
        aux,
    })
}
