//! Tracing the bounded component as a polar curve `r = α(θ)`.
//!
//! The bounded component surrounds the origin and `f(0, θ) = k > 0`, so its
//! boundary is the first positive root of the radial polynomial at each
//! angle. Near the critical coefficient the first root is a tangency; the
//! multiplicity-2 root keeps the curve continuous there.

use crate::classify::classify;
use crate::family::LemniscateFamily;
use crate::{Error, Result};
use std::f64::consts::PI;

/// A closed curve sampled as `(θ_i, α_i)` with strictly increasing θ in `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarCurve {
    samples: Vec<(f64, f64)>,
    closed: bool,
}

impl PolarCurve {
    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Rebuilds a curve from externally stored samples (e.g. a parsed CSV).
    pub fn from_samples(samples: Vec<(f64, f64)>, closed: bool) -> Result<Self> {
        if samples.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Domain("curve samples must be strictly increasing in theta".into()));
        }
        Ok(Self { samples, closed })
    }
}

/// Traces the bounded component of `family` at `m` uniformly spaced angles.
///
/// The classification must admit a bounded region (`BoundedUnique`, a real
/// circle/ellipse, or `Critical` at the caller's risk); anything else is a
/// [`Error::NotBounded`].
pub fn trace_component(
    family: &LemniscateFamily,
    m: usize,
    trace_tol: f64,
) -> Result<PolarCurve> {
    if m == 0 {
        return Err(Error::Domain("trace needs at least one sample".into()));
    }
    let cl = classify(family)?;
    let traceable = cl.has_bounded_component() || cl.verdict == crate::Verdict::Critical;
    if !traceable {
        return Err(Error::NotBounded(format!("verdict {:?}", cl.verdict)));
    }

    let mut samples = Vec::with_capacity(m);
    for i in 0..m {
        let theta = 2.0 * PI * i as f64 / m as f64;
        let poly = family.radial_poly(theta);
        let roots = poly.positive_roots(trace_tol)?;
        let alpha = roots
            .first()
            .map(|r| r.value)
            .ok_or_else(|| {
                Error::NonConvergence(format!("no positive root at theta={theta}"))
            })?;
        samples.push((theta, alpha));
    }
    Ok(PolarCurve { samples, closed: true })
}

/// Closed-form boundary radius for the scaled `n = 4` family:
/// `α(θ)^2 = (1 - sqrt(1 - 4Ĉk cos4θ)) / (2Ĉ cos4θ)`.
///
/// Evaluated in the rationalized form `α^2 = 2k / (1 + sqrt(1 - 4Ĉk cos4θ))`,
/// which is exact at `cos4θ = 0` (where `α = sqrt(k)`) and free of
/// cancellation as `Ĉ -> 0`. Requires `0 <= Ĉ <= 1/(4k)`.
pub fn alpha_closed_form(c_hat: f64, k: f64, theta: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("k must be positive, got {k}")));
    }
    if !(c_hat >= 0.0) || c_hat * 4.0 * k > 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "closed form needs 0 <= C <= 1/(4k); got C={c_hat}, k={k}"
        )));
    }
    let discriminant = (1.0 - 4.0 * c_hat * k * (4.0 * theta).cos()).max(0.0);
    Ok((2.0 * k / (1.0 + discriminant.sqrt())).sqrt())
}
