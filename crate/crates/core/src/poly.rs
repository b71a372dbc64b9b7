//! Sparse radial polynomials and positive real root isolation.
//!
//! The root finder recursively isolates the critical points of a polynomial
//! (roots of its derivative) and then brackets at most one root per monotone
//! interval. Tangency points, where the curve touches zero without crossing,
//! are reported once with multiplicity 2.

use crate::{Error, Result};

/// `f(·, θ)` at a fixed angle, as a sparse real polynomial in `r`.
///
/// Terms are sorted by increasing degree; zero coefficients are dropped and
/// colliding degrees combined at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPolynomial {
    terms: Vec<(u32, f64)>,
    theta: f64,
}

/// A positive real root together with its multiplicity (1 or 2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositiveRoot {
    pub value: f64,
    pub multiplicity: u32,
}

impl RadialPolynomial {
    /// Builds a polynomial from (degree, coefficient) pairs taken at angle `theta`.
    pub fn from_terms(terms: Vec<(u32, f64)>, theta: f64) -> Self {
        let mut combined: Vec<(u32, f64)> = Vec::with_capacity(terms.len());
        let mut sorted = terms;
        sorted.sort_by_key(|&(d, _)| d);
        for (d, c) in sorted {
            match combined.last_mut() {
                Some(last) if last.0 == d => last.1 += c,
                _ => combined.push((d, c)),
            }
        }
        combined.retain(|&(_, c)| c != 0.0);
        Self { terms: combined, theta }
    }

    pub fn terms(&self) -> &[(u32, f64)] {
        &self.terms
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Coefficient of `r^degree` (zero if the term is absent).
    pub fn coefficient(&self, degree: u32) -> f64 {
        self.terms
            .iter()
            .find(|&&(d, _)| d == degree)
            .map_or(0.0, |&(_, c)| c)
    }

    pub fn degree(&self) -> u32 {
        self.terms.last().map_or(0, |&(d, _)| d)
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(d, c)| c * r.powi(d as i32))
            .sum()
    }

    /// Number of sign changes in the coefficients ordered by increasing
    /// degree (zero coefficients never appear). The positive-root count
    /// equals this bound minus an even number.
    pub fn descartes_bound(&self) -> usize {
        self.terms
            .windows(2)
            .filter(|w| w[0].1.signum() != w[1].1.signum())
            .count()
    }

    /// Cauchy bound: every positive root is below `1 + max|c_i| / |c_lead|`.
    pub fn cauchy_bound(&self) -> Result<f64> {
        let &(_, lead) = self
            .terms
            .last()
            .ok_or_else(|| Error::Domain("cauchy bound of the zero polynomial".into()))?;
        let max_rest = self.terms[..self.terms.len() - 1]
            .iter()
            .map(|&(_, c)| c.abs())
            .fold(0.0f64, f64::max);
        Ok(1.0 + max_rest / lead.abs())
    }

    /// All roots `r > 0`, sorted increasing, accurate to `|p(r)| < tol * scale`
    /// with `scale = max|coefficient|`. Double roots (tangencies) are reported
    /// once with `multiplicity = 2`; a critical point counts as a tangency
    /// when `|p| <= sqrt(tol) * scale` there.
    pub fn positive_roots(&self, tol: f64) -> Result<Vec<PositiveRoot>> {
        assert!(tol > 0.0, "tolerance must be positive");
        let dense = self.dense();
        positive_roots_dense(&dense, tol)
    }

    fn dense(&self) -> Vec<f64> {
        let mut c = vec![0.0; self.degree() as usize + 1];
        for &(d, v) in &self.terms {
            c[d as usize] = v;
        }
        c
    }
}

fn trim(coeffs: &[f64]) -> &[f64] {
    let mut end = coeffs.len();
    while end > 0 && coeffs[end - 1] == 0.0 {
        end -= 1;
    }
    &coeffs[..end]
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| i as f64 * c)
        .collect()
}

fn cauchy(coeffs: &[f64]) -> f64 {
    let lead = *coeffs.last().unwrap();
    let max_rest = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs())
        .fold(0.0f64, f64::max);
    1.0 + max_rest / lead.abs()
}

fn positive_roots_dense(coeffs: &[f64], tol: f64) -> Result<Vec<PositiveRoot>> {
    let coeffs = trim(coeffs);
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    let scale = coeffs.iter().map(|c| c.abs()).fold(0.0f64, f64::max);
    let hi = cauchy(coeffs) * (1.0 + 1e-12);
    let zero_band = tol.sqrt() * scale;
    roots_in(coeffs, 0.0, hi, zero_band)
}

/// Roots of `coeffs` in the open interval `(lo, hi)`, via monotone subdivision
/// at the critical points. `zero_band` is the |p| threshold below which a
/// critical point is treated as a tangency (double root).
fn roots_in(coeffs: &[f64], lo: f64, hi: f64, zero_band: f64) -> Result<Vec<PositiveRoot>> {
    let coeffs = trim(coeffs);
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    if coeffs.len() == 2 {
        let r = -coeffs[0] / coeffs[1];
        return Ok(if r > lo && r <= hi {
            vec![PositiveRoot { value: r, multiplicity: 1 }]
        } else {
            Vec::new()
        });
    }

    let deriv = derivative(coeffs);
    let dscale = deriv.iter().map(|c| c.abs()).fold(0.0f64, f64::max);
    let crits = roots_in(&deriv, lo, hi, 1e-9 * dscale)?;

    let mut breakpoints = vec![lo];
    breakpoints.extend(crits.iter().map(|r| r.value));
    breakpoints.push(hi);
    breakpoints.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * b.abs());

    // classify each breakpoint: -1 / 0 / +1, where 0 marks a tangency
    let values: Vec<f64> = breakpoints.iter().map(|&x| horner(coeffs, x)).collect();
    let signs: Vec<i8> = breakpoints
        .iter()
        .zip(&values)
        .map(|(&x, &v)| {
            if x > lo && x < hi && v.abs() <= zero_band {
                0
            } else if v >= 0.0 {
                1
            } else {
                -1
            }
        })
        .collect();

    let mut roots = Vec::new();
    for i in 0..breakpoints.len() {
        if signs[i] == 0 {
            roots.push(PositiveRoot { value: breakpoints[i], multiplicity: 2 });
        }
        if i + 1 < breakpoints.len() && signs[i] * signs[i + 1] == -1 {
            let r = bisect(coeffs, breakpoints[i], breakpoints[i + 1], values[i])?;
            if r > lo {
                roots.push(PositiveRoot { value: r, multiplicity: 1 });
            }
        }
    }
    roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(roots)
}

/// Bisection on a monotone bracket followed by a Newton polish.
fn bisect(coeffs: &[f64], mut a: f64, mut b: f64, fa: f64) -> Result<f64> {
    let mut fa = fa;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // interval collapsed to adjacent floats
        }
        let fm = horner(coeffs, mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let mut r = 0.5 * (a + b);
    let deriv = derivative(coeffs);
    for _ in 0..3 {
        let d = horner(&deriv, r);
        if d == 0.0 {
            break;
        }
        let step = horner(coeffs, r) / d;
        let next = r - step;
        if next >= a && next <= b {
            r = next;
        }
    }
    if r.is_finite() {
        Ok(r)
    } else {
        Err(Error::NonConvergence(format!("bisection produced non-finite root in [{a}, {b}]")))
    }
}
