//! Brute-force ground truth: sign-sampled grids, connected-component
//! labeling, and a finite-difference check of the Laplacian identity
//! `Δf = -4`.
//!
//! The grid oracle is deliberately independent of the classifier and the
//! tracer; agreement between the two paths is what the test suites check.

use crate::family::LemniscateFamily;
use crate::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Signs of `f` sampled at the cell centers of a uniform grid on
/// `[-R, R]^2`. `true` means `f >= 0` (exact zeros count as positive).
#[derive(Debug, Clone)]
pub struct SignGrid {
    resolution: usize,
    box_radius: f64,
    signs: Vec<bool>,
}

/// Component counts extracted from a [`SignGrid`].
///
/// A component is bounded iff it touches no edge of the box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridOracleReport {
    pub resolution: usize,
    pub box_radius: f64,
    pub positive_components: usize,
    pub negative_components: usize,
    pub negative_bounded_components: usize,
    pub origin_component_bounded: bool,
    /// Number of `{f > 0}` components not touching the box edge.
    pub bounded_loop_count: usize,
}

impl SignGrid {
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn box_radius(&self) -> f64 {
        self.box_radius
    }

    pub fn sign(&self, ix: usize, iy: usize) -> bool {
        self.signs[iy * self.resolution + ix]
    }

    /// Renders the grid as a plain (P2) portable graymap: 255 where
    /// `f >= 0`, 0 elsewhere. Rows run from +y down to -y.
    pub fn to_pgm(&self) -> String {
        let res = self.resolution;
        let mut out = String::with_capacity(res * res * 4 + 32);
        out.push_str(&format!("P2\n{res} {res}\n255\n"));
        for iy in (0..res).rev() {
            let row: Vec<&str> = (0..res)
                .map(|ix| if self.sign(ix, iy) { "255" } else { "0" })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Samples `sign(f)` on a `resolution × resolution` grid.
///
/// With `box_radius = None` the box is sized from the first positive root of
/// the radial polynomial along `θ = 0` (times 1.1), which encloses every
/// bounded component since `f(r, θ) <= f(r, 0)`; if that polynomial has no
/// positive root, the Cauchy bound is used instead.
pub fn sign_grid(
    family: &LemniscateFamily,
    resolution: usize,
    box_radius: Option<f64>,
) -> Result<SignGrid> {
    if resolution < 2 {
        return Err(Error::Domain("grid resolution must be at least 2".into()));
    }
    let radius = match box_radius {
        Some(r) if r > 0.0 => r,
        Some(r) => return Err(Error::Domain(format!("box radius must be positive, got {r}"))),
        None => auto_box_radius(family)?,
    };
    let cell = 2.0 * radius / resolution as f64;
    let mut signs = vec![false; resolution * resolution];
    for iy in 0..resolution {
        let y = -radius + (iy as f64 + 0.5) * cell;
        for ix in 0..resolution {
            let x = -radius + (ix as f64 + 0.5) * cell;
            signs[iy * resolution + ix] = family.eval_xy(x, y) >= 0.0;
        }
    }
    Ok(SignGrid { resolution, box_radius: radius, signs })
}

fn auto_box_radius(family: &LemniscateFamily) -> Result<f64> {
    let poly = family.radial_poly(0.0);
    if poly.degree() == 0 {
        return Err(Error::Domain(
            "auto box sizing failed: radial polynomial at theta=0 is constant".into(),
        ));
    }
    let roots = poly.positive_roots(1e-12)?;
    let radius = match roots.first() {
        Some(root) => root.value,
        // No root on the axis means no bounded component exists at all
        // (every bounded component would have to cross theta = 0 inside the
        // first root). Any box then works; the Cauchy bound is clamped
        // because it blows up like 1/C for small leading coefficients and
        // would starve the grid of resolution near the origin.
        None => poly.cauchy_bound()?.min(2.0 * (1.0 + family.k().sqrt())),
    };
    Ok(1.1 * radius)
}

/// Labels 4-connected same-sign components of the grid and reports counts.
pub fn grid_report(
    family: &LemniscateFamily,
    resolution: usize,
    box_radius: Option<f64>,
) -> Result<GridOracleReport> {
    let grid = sign_grid(family, resolution, box_radius)?;
    Ok(label_components(&grid))
}

/// Component labeling on an existing grid (used when the same grid is also
/// dumped as a PGM).
pub fn label_components(grid: &SignGrid) -> GridOracleReport {
    let res = grid.resolution;
    let mut label = vec![u32::MAX; res * res];
    let mut positive_components = 0;
    let mut negative_components = 0;
    let mut negative_bounded = 0;
    let mut bounded_loops = 0;
    let mut origin_component_bounded = false;
    let origin_idx = (res / 2) * res + res / 2;

    let mut stack = Vec::new();
    let mut next_label = 0u32;
    for start in 0..res * res {
        if label[start] != u32::MAX {
            continue;
        }
        let sign = grid.signs[start];
        let mut touches_edge = false;
        let mut contains_origin = false;
        stack.push(start);
        label[start] = next_label;
        while let Some(idx) = stack.pop() {
            let (ix, iy) = (idx % res, idx / res);
            if ix == 0 || iy == 0 || ix == res - 1 || iy == res - 1 {
                touches_edge = true;
            }
            if idx == origin_idx {
                contains_origin = true;
            }
            let mut visit = |n: usize| {
                if label[n] == u32::MAX && grid.signs[n] == sign {
                    label[n] = next_label;
                    stack.push(n);
                }
            };
            if ix > 0 {
                visit(idx - 1);
            }
            if ix + 1 < res {
                visit(idx + 1);
            }
            if iy > 0 {
                visit(idx - res);
            }
            if iy + 1 < res {
                visit(idx + res);
            }
        }
        if sign {
            positive_components += 1;
            if !touches_edge {
                bounded_loops += 1;
            }
        } else {
            negative_components += 1;
            if !touches_edge {
                negative_bounded += 1;
            }
        }
        if contains_origin {
            origin_component_bounded = !touches_edge;
        }
        next_label += 1;
    }

    GridOracleReport {
        resolution: res,
        box_radius: grid.box_radius,
        positive_components,
        negative_components,
        negative_bounded_components: negative_bounded,
        origin_component_bounded,
        bounded_loop_count: bounded_loops,
    }
}

/// Maximum absolute deviation of the 5-point finite-difference Laplacian of
/// `f` from `-4`, over `sample_count` deterministic pseudo-random points in
/// `[-2, 2]^2` at step `h`.
pub fn check_laplacian(family: &LemniscateFamily, sample_count: usize, h: f64) -> f64 {
    assert!(h > 0.0);
    let mut rng = ChaCha8Rng::seed_from_u64(0x13a9_1ac1a);
    let mut worst = 0.0f64;
    for _ in 0..sample_count {
        let x: f64 = rng.gen_range(-2.0..2.0);
        let y: f64 = rng.gen_range(-2.0..2.0);
        let laplacian = (family.eval_xy(x + h, y)
            + family.eval_xy(x - h, y)
            + family.eval_xy(x, y + h)
            + family.eval_xy(x, y - h)
            - 4.0 * family.eval_xy(x, y))
            / (h * h);
        worst = worst.max((laplacian + 4.0).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_loop_below_threshold_and_none_above() {
        let below = LemniscateFamily::scaled(4, 0.2, 1.0).unwrap();
        let report = grid_report(&below, 512, None).unwrap();
        assert!(report.origin_component_bounded);
        assert_eq!(report.bounded_loop_count, 1);

        let above = LemniscateFamily::scaled(4, 0.3, 1.0).unwrap();
        let report = grid_report(&above, 512, Some(2.0)).unwrap();
        assert!(!report.origin_component_bounded);
        assert_eq!(report.bounded_loop_count, 0);
    }

    #[test]
    fn gamma_n2_shows_no_bounded_loops() {
        let fam = LemniscateFamily::two_term(5, 2, 0.5, 1.0).unwrap();
        let report = grid_report(&fam, 512, None).unwrap();
        assert_eq!(report.bounded_loop_count, 0);
        assert!(!report.origin_component_bounded);
    }

    #[test]
    fn no_bounded_negative_components() {
        let fams = [
            LemniscateFamily::scaled(4, 0.2, 1.0).unwrap(),
            LemniscateFamily::scaled(4, 0.3, 1.0).unwrap(),
            LemniscateFamily::two_term(5, 3, 0.02, 0.1).unwrap(),
            LemniscateFamily::scaled_pair(0.4, 1.0).unwrap(),
        ];
        for fam in fams {
            let report = grid_report(&fam, 256, None).unwrap();
            assert_eq!(report.negative_bounded_components, 0);
        }
    }

    #[test]
    fn report_is_stable_under_refinement() {
        let fam = LemniscateFamily::scaled(5, 0.1, 1.0).unwrap();
        let a = grid_report(&fam, 512, None).unwrap();
        let b = grid_report(&fam, 1024, None).unwrap();
        assert_eq!(a.bounded_loop_count, b.bounded_loop_count);
        assert_eq!(a.origin_component_bounded, b.origin_component_bounded);
    }

    #[test]
    fn laplacian_identity_examples() {
        let lambda4 = LemniscateFamily::scaled(4, 0.2, 1.0).unwrap();
        assert!(check_laplacian(&lambda4, 10_000, 1e-3) < 1e-4);

        // quadratic family: the stencil is exact, only rounding at the
        // 1/h^2 amplification survives
        let circle = LemniscateFamily::scaled(1, 0.5, 1.0).unwrap();
        assert!(check_laplacian(&circle, 10_000, 1e-3) < 1e-7);

        let gamma63 = LemniscateFamily::two_term(6, 3, 0.05, 0.1).unwrap();
        assert!(check_laplacian(&gamma63, 10_000, 1e-3) < 1e-3);
    }

    #[test]
    fn pgm_dump_has_expected_shape() {
        let fam = LemniscateFamily::scaled(4, 0.2, 1.0).unwrap();
        let grid = sign_grid(&fam, 8, Some(2.0)).unwrap();
        let pgm = grid.to_pgm();
        let mut lines = pgm.lines();
        assert_eq!(lines.next(), Some("P2"));
        assert_eq!(lines.next(), Some("8 8"));
        assert_eq!(lines.next(), Some("255"));
        assert_eq!(lines.count(), 8);
    }

    #[test]
    fn explicit_box_radius_must_be_positive() {
        let fam = LemniscateFamily::scaled(4, 0.2, 1.0).unwrap();
        assert!(sign_grid(&fam, 64, Some(-1.0)).is_err());
    }
}
