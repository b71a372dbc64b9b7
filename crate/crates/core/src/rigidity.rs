//! Torsional rigidity of the region enclosed by a traced bounded component.
//!
//! The nearest holomorphic function to `z̄` in `L^2(Ω)` is `F'(z)` where
//! `Re[F] = |z|^2 / 2` on the boundary; the squared distance
//! `∫_Ω |z̄ - F'(z)|^2 dA` equals the torsional rigidity of `Ω`. Since the
//! boundary lies on `Re[P(z)] - |z|^2 + k = 0`, taking `F = (P(z) + k) / 2`
//! satisfies the boundary identity exactly, so the integrand is available in
//! closed form and the integral reduces to polar iterated quadrature.

use crate::classify::classify;
use crate::family::{LemniscateFamily, Variant};
use crate::quad::gauss_legendre;
use crate::trace::{trace_component, PolarCurve};
use crate::{Error, Result, Verdict};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// The derivative `F'(z)` of the boundary polynomial, stored sparsely.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionPolynomial {
    terms: Vec<(u32, Complex64)>,
}

impl ProjectionPolynomial {
    pub fn terms(&self) -> &[(u32, Complex64)] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.last().map_or(0, |&(d, _)| d)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|&(d, c)| c * z.powu(d))
            .sum()
    }
}

/// `F'(z)` for a family, from `F = (P(z) + k) / 2`:
/// scaled `n C z^{n-1} / 2`, two-term `(n C z^{n-1} + j z^{j-1}) / 2`,
/// scaled pair `C (2z + 1) / 2`.
pub fn projection_polynomial(family: &LemniscateFamily) -> ProjectionPolynomial {
    let c = family.c();
    let real = |x: f64| Complex64::new(x, 0.0);
    let mut terms = match family.variant() {
        Variant::Scaled { n } => vec![(n - 1, real(n as f64 * c / 2.0))],
        Variant::TwoTerm { n, j } => vec![
            (j - 1, real(j as f64 / 2.0)),
            (n - 1, real(n as f64 * c / 2.0)),
        ],
        Variant::ScaledPair => vec![(0, real(c / 2.0)), (1, real(c))],
    };
    terms.retain(|&(_, coeff)| coeff.norm_sqr() != 0.0);
    terms.sort_by_key(|&(d, _)| d);
    ProjectionPolynomial { terms }
}

/// Residual of the boundary identity `Re[F(z)] - |z|^2 / 2` at a point given
/// in polar coordinates. Vanishes on the family's zero set; used to validate
/// the projection polynomial against traced boundary points.
pub fn boundary_residual(family: &LemniscateFamily, r: f64, theta: f64) -> f64 {
    let z = Complex64::from_polar(r, theta);
    let c = Complex64::new(family.c(), 0.0);
    let f_of_z = match family.variant() {
        Variant::Scaled { n } => c * z.powu(n),
        Variant::TwoTerm { n, j } => c * z.powu(n) + z.powu(j),
        Variant::ScaledPair => c * (z * z + z),
    };
    (f_of_z.re + family.k()) / 2.0 - r * r / 2.0
}

/// Torsional rigidity value with its quadrature bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RigidityResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub radial_order: usize,
    pub angular_samples: usize,
}

/// Evaluates `∬ |r e^{-iθ} - F'(r e^{iθ})|^2 r dr dθ` over the region the
/// curve encloses: Gauss–Legendre of `radial_order` on `[0, α(θ)]` crossed
/// with the periodic trapezoid rule on the curve's uniform θ samples.
///
/// The error estimate is the difference against a run at half the radial
/// order and every other θ sample.
pub fn torsional_rigidity(
    curve: &PolarCurve,
    proj: &ProjectionPolynomial,
    radial_order: usize,
) -> Result<RigidityResult> {
    if !curve.closed() {
        return Err(Error::Domain("rigidity integral needs a closed curve".into()));
    }
    if radial_order < 2 {
        return Err(Error::Domain(format!(
            "radial quadrature order must be at least 2, got {radial_order}"
        )));
    }
    let value = integrate(curve.samples(), proj, radial_order, 1);
    let coarse = integrate(curve.samples(), proj, (radial_order / 2).max(2), 2);
    Ok(RigidityResult {
        value,
        abs_error_estimate: (value - coarse).abs(),
        radial_order,
        angular_samples: curve.len(),
    })
}

fn integrate(
    samples: &[(f64, f64)],
    proj: &ProjectionPolynomial,
    radial_order: usize,
    theta_stride: usize,
) -> f64 {
    let (nodes, weights) = gauss_legendre(radial_order);
    let used: Vec<&(f64, f64)> = samples.iter().step_by(theta_stride).collect();
    let mut sum = 0.0;
    for &&(theta, alpha) in &used {
        let mut radial = 0.0;
        for (&x, &w) in nodes.iter().zip(&weights) {
            // map [-1, 1] -> [0, alpha]
            let r = 0.5 * alpha * (x + 1.0);
            let z = Complex64::from_polar(r, theta);
            let integrand = (z.conj() - proj.eval(z)).norm_sqr() * r;
            radial += 0.5 * alpha * w * integrand;
        }
        sum += radial;
    }
    sum * 2.0 * PI / used.len() as f64
}

/// One cell of a rigidity sweep.
#[derive(Debug, Clone)]
pub struct SweepCell {
    pub c: f64,
    pub k: f64,
    pub outcome: Result<RigidityResult>,
}

/// Knobs shared by every cell of a sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub m: usize,
    pub radial_order: usize,
    pub trace_tol: f64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self { m: 1024, radial_order: 16, trace_tol: 1e-10 }
    }
}

/// Rigidity over the cross product of coefficient and constant-term values,
/// one independent cell per pair, rows in input order (`c` outer, `k` inner).
/// Cells that do not admit a bounded component carry an error outcome
/// instead of failing the sweep.
pub fn rigidity_sweep(
    variant: Variant,
    c_values: &[f64],
    k_values: &[f64],
    opts: &SweepOptions,
) -> Vec<SweepCell> {
    let pairs: Vec<(f64, f64)> = c_values
        .iter()
        .flat_map(|&c| k_values.iter().map(move |&k| (c, k)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(c, k)| SweepCell { c, k, outcome: sweep_cell(variant, c, k, opts) })
        .collect()
}

fn sweep_cell(variant: Variant, c: f64, k: f64, opts: &SweepOptions) -> Result<RigidityResult> {
    let family = LemniscateFamily::from_variant(variant, c, k)?;
    let cl = classify(&family)?;
    if !(cl.has_bounded_component() || cl.verdict == Verdict::Critical) {
        return Err(Error::NotBounded(format!("verdict {:?} at C={c}, k={k}", cl.verdict)));
    }
    let curve = trace_component(&family, opts.m, opts.trace_tol)?;
    let proj = projection_polynomial(&family);
    torsional_rigidity(&curve, &proj, opts.radial_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn rigidity_of(family: &LemniscateFamily, m: usize, order: usize) -> RigidityResult {
        let curve = trace_component(family, m, 1e-12).unwrap();
        let proj = projection_polynomial(family);
        torsional_rigidity(&curve, &proj, order).unwrap()
    }

    #[test]
    fn projection_polynomial_examples() {
        let lambda4 = LemniscateFamily::scaled(4, 0.3, 1.0).unwrap();
        let proj = projection_polynomial(&lambda4);
        assert_eq!(proj.terms().len(), 1);
        assert_eq!(proj.terms()[0].0, 3);
        assert_abs_diff_eq!(proj.terms()[0].1.re, 0.6, epsilon = 1e-16);

        // zero coefficient: projection of z̄ on a centered disk is 0
        let disk = LemniscateFamily::scaled(4, 0.0, 1.0).unwrap();
        assert!(projection_polynomial(&disk).terms().is_empty());

        let gamma41 = LemniscateFamily::two_term(4, 1, 0.25, 1.0).unwrap();
        let proj = projection_polynomial(&gamma41);
        // (4C z^3 + 1) / 2
        assert_eq!(proj.terms()[0].0, 0);
        assert_abs_diff_eq!(proj.terms()[0].1.re, 0.5, epsilon = 1e-16);
        assert_eq!(proj.terms()[1].0, 3);
        assert_abs_diff_eq!(proj.terms()[1].1.re, 0.5, epsilon = 1e-16);
    }

    #[test]
    fn boundary_identity_on_traced_points() {
        let fams = [
            LemniscateFamily::scaled(4, 0.2, 1.0).unwrap(),
            LemniscateFamily::two_term(4, 1, 0.05, 1.0).unwrap(),
            LemniscateFamily::scaled_pair(0.3, 1.0).unwrap(),
        ];
        for fam in fams {
            let curve = trace_component(&fam, 1000, 1e-12).unwrap();
            for &(theta, alpha) in curve.samples() {
                assert!(boundary_residual(&fam, alpha, theta).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn disk_calibration() {
        let disk = LemniscateFamily::scaled(4, 0.0, 1.0).unwrap();
        let result = rigidity_of(&disk, 1024, 16);
        assert_abs_diff_eq!(result.value, std::f64::consts::FRAC_PI_2, epsilon = 1e-8);
    }

    #[test]
    fn reference_table_at_unit_constant_term() {
        let expected = [(0.25, 1.63988), (0.2, 1.60815), (0.1, 1.57894), (0.01, 1.57087)];
        for (c, want) in expected {
            let fam = LemniscateFamily::scaled(4, c, 1.0).unwrap();
            let got = rigidity_of(&fam, 1024, 16).value;
            assert_abs_diff_eq!(got, want, epsilon = 5e-4);
        }
    }

    #[test]
    fn quadrature_converges() {
        for c in [0.25, 0.1] {
            let fam = LemniscateFamily::scaled(4, c, 1.0).unwrap();
            let coarse = rigidity_of(&fam, 1024, 16).value;
            let fine = rigidity_of(&fam, 2048, 32).value;
            assert_relative_eq!(coarse, fine, max_relative = 1e-6);
        }
    }

    #[test]
    fn dilation_covariance() {
        // Λ_4(C λ^{-2}, k λ^2) is the λ-dilate of Λ_4(C, k); rigidity scales by λ^4
        let base = rigidity_of(&LemniscateFamily::scaled(4, 0.2, 1.0).unwrap(), 1024, 16).value;
        for lambda in [0.5f64, 2.0] {
            let fam =
                LemniscateFamily::scaled(4, 0.2 * lambda.powi(-2), lambda * lambda).unwrap();
            let scaled = rigidity_of(&fam, 1024, 16).value;
            assert_relative_eq!(scaled, base * lambda.powi(4), max_relative = 1e-6);
        }
    }

    #[test]
    fn value_bounded_by_sup_of_integrand_times_area() {
        let fam = LemniscateFamily::scaled(4, 0.2, 1.0).unwrap();
        let curve = trace_component(&fam, 512, 1e-12).unwrap();
        let proj = projection_polynomial(&fam);
        let result = torsional_rigidity(&curve, &proj, 16).unwrap();
        // area and sup of |z̄ - F'|^2 from the same quadrature points
        let (nodes, weights) = gauss_legendre(16);
        let mut area = 0.0;
        let mut sup = 0.0f64;
        for &(theta, alpha) in curve.samples() {
            for (&x, &w) in nodes.iter().zip(&weights) {
                let r = 0.5 * alpha * (x + 1.0);
                area += 0.5 * alpha * w * r;
                let z = Complex64::from_polar(r, theta);
                sup = sup.max((z.conj() - proj.eval(z)).norm_sqr());
            }
        }
        area *= 2.0 * PI / curve.len() as f64;
        assert!(result.value >= 0.0);
        assert!(result.value <= sup * area * (1.0 + 1e-12));
    }

    #[test]
    fn sweep_reports_per_cell_outcomes() {
        let cells = rigidity_sweep(
            Variant::Scaled { n: 4 },
            &[0.2, 0.3],
            &[1.0],
            &SweepOptions { m: 256, radial_order: 8, trace_tol: 1e-10 },
        );
        assert_eq!(cells.len(), 2);
        assert!(cells[0].outcome.is_ok());
        assert!(matches!(cells[1].outcome, Err(Error::NotBounded(_))));

        assert!(rigidity_sweep(Variant::Scaled { n: 4 }, &[], &[1.0], &SweepOptions::default())
            .is_empty());
    }

    #[test]
    fn error_estimate_is_small_for_smooth_cases() {
        let fam = LemniscateFamily::scaled(4, 0.1, 1.0).unwrap();
        let result = rigidity_of(&fam, 1024, 16);
        assert!(result.abs_error_estimate < 1e-8);
    }
}
