//! Final verdicts: conic types for the quadratic families, bounded-component
//! existence against the critical thresholds for everything else.

use crate::family::{LemniscateFamily, Variant};
use crate::thresholds;
use crate::{Error, Result};

/// Relative half-width of the band around `C = C*` reported as `Critical`.
pub const CRITICAL_BAND: f64 = 1e-12;

/// Implicit conic `A x^2 + B xy + C y^2 + D x + E y + F = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

/// Which Cartesian expansion of the defining equation to use.
///
/// `Definitional` expands `Re[P(z)] = |z|^2 - k` directly. `HalfSquare`
/// instead reproduces the convention where the boundary identity reads
/// `Re[P(z)] = |z|^2 / 2`, which doubles the coefficient on `C` (and the
/// linear terms); the two conventions place the parabola/hyperbola
/// transitions at `|C| = 1` and `|C| = 1/2` respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConicConvention {
    #[default]
    Definitional,
    HalfSquare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicType {
    Circle,
    Ellipse,
    Parabola,
    Hyperbola,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Verdict {
    BoundedUnique,
    NoBoundedComponent,
    Critical,
    Conic(ConicType),
}

/// Verdict plus the threshold data it was decided against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Threshold the coefficient was compared against, when one applies.
    pub c_star: Option<f64>,
    /// Signed distance `C - C*` (|C| for scaled families), when one applies.
    pub margin: Option<f64>,
}

impl Classification {
    /// Whether the verdict implies a bounded component enclosing area.
    ///
    /// `Critical` is excluded: the component degenerates to a tangency there.
    pub fn has_bounded_component(&self) -> bool {
        matches!(
            self.verdict,
            Verdict::BoundedUnique
                | Verdict::Conic(ConicType::Circle)
                | Verdict::Conic(ConicType::Ellipse)
        )
    }
}

/// Cartesian coefficients for the quadratic families (`n <= 2` or the scaled
/// pair). Errors for `n >= 3`.
pub fn conic_coefficients(
    family: &LemniscateFamily,
    convention: ConicConvention,
) -> Result<ConicCoefficients> {
    let c = family.c();
    let k = family.k();
    let m = match convention {
        ConicConvention::Definitional => 1.0,
        ConicConvention::HalfSquare => 2.0,
    };
    let coeffs = match family.variant() {
        // C Re[z] - |z|^2 + k = 0  =>  x^2 + y^2 - mCx - k = 0
        Variant::Scaled { n: 1 } => ConicCoefficients {
            a: 1.0,
            b: 0.0,
            c: 1.0,
            d: -m * c,
            e: 0.0,
            f: -k,
        },
        // C Re[z^2] - |z|^2 + k = 0  =>  x^2(1 - mC) + y^2(1 + mC) - k = 0
        Variant::Scaled { n: 2 } => ConicCoefficients {
            a: 1.0 - m * c,
            b: 0.0,
            c: 1.0 + m * c,
            d: 0.0,
            e: 0.0,
            f: -k,
        },
        // Re[C z^2 + z] - |z|^2 + k = 0  =>  x^2(1 - mC) + y^2(1 + mC) - mx - k = 0
        Variant::TwoTerm { n: 2, j: 1 } => ConicCoefficients {
            a: 1.0 - m * c,
            b: 0.0,
            c: 1.0 + m * c,
            d: -m,
            e: 0.0,
            f: -k,
        },
        // C Re[z^2 + z] - |z|^2 + k = 0  =>  x^2(1 - mC) + y^2(1 + mC) - mCx - k = 0
        Variant::ScaledPair => ConicCoefficients {
            a: 1.0 - m * c,
            b: 0.0,
            c: 1.0 + m * c,
            d: -m * c,
            e: 0.0,
            f: -k,
        },
        v => {
            return Err(Error::Domain(format!(
                "conic coefficients only exist for quadratic families, got {v:?}"
            )))
        }
    };
    Ok(coeffs)
}

/// Classifies an implicit conic by its discriminant `B^2 - 4AC`, with the
/// 3x3 determinant deciding degeneracy and realness.
pub fn classify_conic(coeffs: &ConicCoefficients) -> Classification {
    let ConicCoefficients { a, b, c, d, e, f } = *coeffs;
    let scale = [a, b, c, d, e, f].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-12 * scale * scale;
    let disc = b * b - 4.0 * a * c;
    // determinant of [[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]]
    let det = a * (c * f - e * e / 4.0) - (b / 2.0) * (b * f / 2.0 - e * d / 4.0)
        + (d / 2.0) * (b * e / 4.0 - c * d / 2.0);
    let conic = if det.abs() <= 1e-12 * scale * scale * scale {
        ConicType::Degenerate
    } else if disc < -tol {
        // ellipse-type; real exactly when det has the opposite sign of A + C
        if det * (a + c) < 0.0 {
            if b == 0.0 && a == c {
                ConicType::Circle
            } else {
                ConicType::Ellipse
            }
        } else {
            ConicType::Degenerate
        }
    } else if disc <= tol {
        ConicType::Parabola
    } else {
        ConicType::Hyperbola
    };
    Classification {
        verdict: Verdict::Conic(conic),
        c_star: None,
        margin: None,
    }
}

/// Full verdict for a family: conic type for the quadratic cases, otherwise
/// the coefficient is compared against the applicable critical threshold.
pub fn classify(family: &LemniscateFamily) -> Result<Classification> {
    let c = family.c();
    let k = family.k();
    match family.variant() {
        Variant::ScaledPair | Variant::Scaled { n: 1 } | Variant::Scaled { n: 2 } => {
            Ok(classify_conic(&conic_coefficients(family, ConicConvention::Definitional)?))
        }
        Variant::TwoTerm { n: 2, j: 1 } => {
            Ok(classify_conic(&conic_coefficients(family, ConicConvention::Definitional)?))
        }
        Variant::Scaled { n } => {
            // Theorem-level statement uses |C|: Λ_n(-C, k) is a rotation of Λ_n(C, k).
            let threshold = thresholds::c_star_scaled(n, k)?;
            Ok(compare(c.abs(), threshold.c_star.unwrap()))
        }
        Variant::TwoTerm { n, j } => {
            if !(c > 0.0) {
                return Err(Error::Domain(format!(
                    "two-term classification requires C > 0, got C={c}"
                )));
            }
            if j == 2 {
                // f(r, 0) = C r^n + k never vanishes: no bounded component for any C.
                return Ok(Classification {
                    verdict: Verdict::NoBoundedComponent,
                    c_star: None,
                    margin: None,
                });
            }
            if j == 1 {
                if n < 3 {
                    return Err(Error::Domain(format!("unclassifiable two-term family n={n}")));
                }
                let threshold = thresholds::c_star_j1(n, k)?;
                return Ok(compare(c, threshold.c_star.unwrap()));
            }
            let threshold = thresholds::c_star_general(n, j, k)?;
            match threshold.c_star {
                Some(c_star) => Ok(compare(c, c_star)),
                None => Ok(Classification {
                    verdict: Verdict::NoBoundedComponent,
                    c_star: None,
                    margin: None,
                }),
            }
        }
    }
}

fn compare(c: f64, c_star: f64) -> Classification {
    let margin = c - c_star;
    let verdict = if margin.abs() <= CRITICAL_BAND * c_star.max(1.0) {
        Verdict::Critical
    } else if margin < 0.0 {
        Verdict::BoundedUnique
    } else {
        Verdict::NoBoundedComponent
    };
    Classification {
        verdict,
        c_star: Some(c_star),
        margin: Some(margin),
    }
}
