//! Lemniscate family definitions and pointwise evaluation.

use crate::poly::RadialPolynomial;
use crate::{Error, Result};

/// Which of the three curve families a [`LemniscateFamily`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// `Re[C z^n + z^j] - |z|^2 + k = 0`, with `1 <= j < n`.
    TwoTerm { n: u32, j: u32 },
    /// `C Re[z^n] - |z|^2 + k = 0`.
    Scaled { n: u32 },
    /// `C Re[z^2 + z] - |z|^2 + k = 0`.
    ScaledPair,
}

/// A parametrized lemniscate `{z : Re[P(z)] - |z|^2 + k = 0}`.
///
/// Immutable after construction. A two-term family with `j = n` collapses to
/// `Re[(C+1) z^n]`, so the constructor normalizes it to the scaled variant
/// with coefficient `C + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemniscateFamily {
    variant: Variant,
    c: f64,
    k: f64,
}

impl LemniscateFamily {
    /// Builds a two-term family `Γ_{n,j}(C, k)`. Requires `1 <= j <= n` and `k > 0`.
    pub fn two_term(n: u32, j: u32, c: f64, k: f64) -> Result<Self> {
        if n == 0 || j == 0 || j > n {
            return Err(Error::Domain(format!(
                "two-term family needs 1 <= j <= n, got n={n}, j={j}"
            )));
        }
        check_k(k)?;
        if j == n {
            // Re[C z^n + z^n] = Re[(C+1) z^n]
            return Ok(Self { variant: Variant::Scaled { n }, c: c + 1.0, k });
        }
        Ok(Self { variant: Variant::TwoTerm { n, j }, c, k })
    }

    /// Builds a scaled family `Λ_n(C, k)`. Requires `n >= 1` and `k > 0`.
    pub fn scaled(n: u32, c: f64, k: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("scaled family needs n >= 1".into()));
        }
        check_k(k)?;
        Ok(Self { variant: Variant::Scaled { n }, c, k })
    }

    /// Builds the scaled-pair family `C Re[z^2 + z] - |z|^2 + k = 0`. Requires `k > 0`.
    pub fn scaled_pair(c: f64, k: f64) -> Result<Self> {
        check_k(k)?;
        Ok(Self { variant: Variant::ScaledPair, c, k })
    }

    /// Builds a family from a variant tag plus coefficients, applying the
    /// same normalization as the per-variant constructors.
    pub fn from_variant(variant: Variant, c: f64, k: f64) -> Result<Self> {
        match variant {
            Variant::TwoTerm { n, j } => Self::two_term(n, j, c, k),
            Variant::Scaled { n } => Self::scaled(n, c, k),
            Variant::ScaledPair => Self::scaled_pair(c, k),
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// Evaluates `f(r, θ)` for this family.
    ///
    /// `f(0, θ) = k` exactly for every variant.
    pub fn eval(&self, r: f64, theta: f64) -> f64 {
        match self.variant {
            Variant::TwoTerm { n, j } => {
                self.c * r.powi(n as i32) * (n as f64 * theta).cos()
                    + r.powi(j as i32) * (j as f64 * theta).cos()
                    - r * r
                    + self.k
            }
            Variant::Scaled { n } => {
                self.c * r.powi(n as i32) * (n as f64 * theta).cos() - r * r + self.k
            }
            Variant::ScaledPair => {
                self.c * (r * r * (2.0 * theta).cos() + r * theta.cos()) - r * r + self.k
            }
        }
    }

    /// Evaluates `f` at Cartesian coordinates.
    pub fn eval_xy(&self, x: f64, y: f64) -> f64 {
        self.eval(x.hypot(y), y.atan2(x))
    }

    /// Freezes θ and packages `f(·, θ)` as a sparse polynomial in `r`.
    ///
    /// Coefficients of colliding degrees are combined (e.g. the `r^j cos(jθ)`
    /// term with `j = 2` folds into the `-r^2` term) so the sign sequence is
    /// meaningful for Descartes' rule.
    pub fn radial_poly(&self, theta: f64) -> RadialPolynomial {
        let mut terms: Vec<(u32, f64)> = vec![(0, self.k), (2, -1.0)];
        match self.variant {
            Variant::TwoTerm { n, j } => {
                terms.push((j, (j as f64 * theta).cos()));
                terms.push((n, self.c * (n as f64 * theta).cos()));
            }
            Variant::Scaled { n } => {
                terms.push((n, self.c * (n as f64 * theta).cos()));
            }
            Variant::ScaledPair => {
                terms.push((1, self.c * theta.cos()));
                terms.push((2, self.c * (2.0 * theta).cos()));
            }
        }
        RadialPolynomial::from_terms(terms, theta)
    }
}

fn check_k(k: f64) -> Result<()> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("constant term k must be positive, got {k}")));
    }
    Ok(())
}
