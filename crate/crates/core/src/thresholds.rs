//! Critical constants governing the appearance of a bounded component.
//!
//! Each family admits a bounded component exactly when its coefficient `C`
//! stays below a critical value `C*`. The `j = 1` two-term case and the
//! scaled case have closed forms; the general `n > j > 2` case is the global
//! maximum of the rational function `R(r) = (r^2 - r^j - k) / r^n`, located
//! here through the positive roots of the numerator of `R'`.

use crate::poly::RadialPolynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdMethod {
    ClosedFormJ1,
    ClosedFormScaled,
    NumericGeneral,
}

/// Critical constants for one family shape.
///
/// `c_star` is `None` exactly when no positive coefficient yields a bounded
/// component (for the general case, when `k >= k*`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdResult {
    pub c_star: Option<f64>,
    pub k_star: Option<f64>,
    pub r_star: Option<f64>,
    pub method: ThresholdMethod,
}

/// Closed-form `C*` for the two-term family with `j = 1` and `n >= 3`.
///
/// Also returns the maximizer `r* = ((n-1) + sqrt((n-1)^2 + 4nk(n-2))) / (2(n-2))`,
/// the unique positive root of `(2-n) r^2 + (n-1) r + nk`.
pub fn c_star_j1(n: u32, k: f64) -> Result<ThresholdResult> {
    require_n_at_least_3(n)?;
    require_positive_k(k)?;
    let nf = n as f64;
    let s = (nf - 1.0) + ((nf - 1.0).powi(2) + 4.0 * nf * k * (nf - 2.0)).sqrt();
    let r_star = s / (2.0 * (nf - 2.0));
    let c_star = (2.0 * nf - 4.0).powi(n as i32) * (4.0 * k * (nf - 2.0) + s)
        / (2.0 * (nf - 2.0).powi(2) * s.powi(n as i32));
    Ok(ThresholdResult {
        c_star: Some(c_star),
        k_star: None,
        r_star: Some(r_star),
        method: ThresholdMethod::ClosedFormJ1,
    })
}

/// Closed-form `C*` for the scaled family with `n >= 3`:
/// `C* = (2k/(n-2)) ((n-2)/(nk))^{n/2}`, attained at `r* = sqrt(nk/(n-2))`.
pub fn c_star_scaled(n: u32, k: f64) -> Result<ThresholdResult> {
    require_n_at_least_3(n)?;
    require_positive_k(k)?;
    let nf = n as f64;
    let c_star = (2.0 * k / (nf - 2.0)) * ((nf - 2.0) / (nf * k)).powf(nf / 2.0);
    let r_star = (nf * k / (nf - 2.0)).sqrt();
    Ok(ThresholdResult {
        c_star: Some(c_star),
        k_star: None,
        r_star: Some(r_star),
        method: ThresholdMethod::ClosedFormScaled,
    })
}

/// `k* = (1 - 2/j)(2/j)^{2/(j-2)}` for `j >= 3`: the largest constant term
/// for which `r^2 - r^j - k` can still be positive somewhere.
pub fn k_star(j: u32) -> Result<f64> {
    require_j_at_least_3(j)?;
    let jf = j as f64;
    Ok((1.0 - 2.0 / jf) * (2.0 / jf).powf(2.0 / (jf - 2.0)))
}

/// Interior maximizer of `r^2 - r^j`: the unique positive solution of
/// `2r = j r^{j-1}`, i.e. `(2/j)^{1/(j-2)}`.
pub fn k_star_maximizer(j: u32) -> Result<f64> {
    require_j_at_least_3(j)?;
    let jf = j as f64;
    Ok((2.0 / jf).powf(1.0 / (jf - 2.0)))
}

/// `C*` for the general two-term family, `n > j > 2`.
///
/// Returns `c_star: None` when `k >= k*(j)` (then `R(r) <= 0` everywhere and
/// no positive coefficient admits a bounded component); otherwise the global
/// maximum of `R` and its location.
pub fn c_star_general(n: u32, j: u32, k: f64) -> Result<ThresholdResult> {
    if !(j > 2 && n > j) {
        return Err(Error::Domain(format!(
            "general threshold needs n > j > 2, got n={n}, j={j}"
        )));
    }
    require_positive_k(k)?;
    let gate = k_star(j)?;
    if k >= gate {
        return Ok(ThresholdResult {
            c_star: None,
            k_star: Some(gate),
            r_star: None,
            method: ThresholdMethod::NumericGeneral,
        });
    }
    let mut result = c_star_numeric(n, j, k)?;
    result.k_star = Some(gate);
    Ok(result)
}

/// Stationary-point maximization of `R(r) = (r^2 - r^j - k) / r^n` over
/// `(0, ∞)`, for any `1 <= j < n` with `n >= 3`.
///
/// `R'(r) = ((2-n) r^2 + (n-j) r^j + nk) / r^{n+1}`; the maximum is evaluated
/// at the positive roots of the numerator. Used by [`c_star_general`] and, in
/// tests, as a cross-check against the closed forms.
pub fn c_star_numeric(n: u32, j: u32, k: f64) -> Result<ThresholdResult> {
    require_n_at_least_3(n)?;
    require_positive_k(k)?;
    if !(j >= 1 && j < n) {
        return Err(Error::Domain(format!("numeric threshold needs 1 <= j < n, got n={n}, j={j}")));
    }
    let nf = n as f64;
    let jf = j as f64;
    let stationary = RadialPolynomial::from_terms(
        vec![(2, 2.0 - nf), (j, nf - jf), (0, nf * k)],
        0.0,
    );
    let rational = |r: f64| (r * r - r.powi(j as i32) - k) / r.powi(n as i32);
    let mut best: Option<(f64, f64)> = None;
    for root in stationary.positive_roots(1e-14)? {
        let value = rational(root.value);
        if value > 0.0 && best.is_none_or(|(v, _)| value > v) {
            best = Some((value, root.value));
        }
    }
    Ok(ThresholdResult {
        c_star: best.map(|(v, _)| v),
        k_star: None,
        r_star: best.map(|(_, r)| r),
        method: ThresholdMethod::NumericGeneral,
    })
}

fn require_n_at_least_3(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "threshold formulas require n >= 3 (n <= 2 families are conics), got n={n}"
        )));
    }
    Ok(())
}

fn require_j_at_least_3(j: u32) -> Result<()> {
    if j < 3 {
        return Err(Error::Domain(format!("k* is defined for j >= 3, got j={j}")));
    }
    Ok(())
}

fn require_positive_k(k: f64) -> Result<()> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("k must be positive, got {k}")));
    }
    Ok(())
}
