//! Count-series numerators and degree comparisons.
//!
//! The degree counts of a dimension-`d` monoid form a rational series with
//! denominator `(1 - t)^d`, so their `d`-th finite differences eventually
//! vanish and the surviving prefix is the numerator polynomial. Truncated
//! data cannot prove vanishing, so a numerator is accepted here only when a
//! window of consecutive trailing differences is zero; the window length is
//! recorded on the result as the strength of that certificate, and a
//! non-vanishing tail is reported verbatim instead of being trimmed.
//!
//! On top of the extraction sit three audits: [`compare_degrees`] puts a
//! monoid's numerator side by side with its normalization's (degree gap in
//! both orientations, the coefficient sums at `t = 1`, the hole-family
//! verdict, and a codegree cross-check of the normalization degree);
//! [`check_sum_identity`] confirms per degree that monoid counts plus hole
//! counts equal normalization counts; [`series_of_join`] confirms that join
//! counts are the convolution of the factor counts, on both the monoid and
//! the normalization side.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monoid::{AffineMonoid, GradedCount, DEFAULT_SLICE_CAP};
use crate::normalize::{self, S2Verdict};

/// Numerator of a count series over `(1 - t)^dim`, certified by a window
/// of vanishing trailing differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolynomial {
    /// Coefficients `h_0..h_s`, constant term first, trailing zeros
    /// trimmed.
    pub coefficients: Vec<BigInt>,
    /// Pole order the differences were taken at.
    pub dim: usize,
    /// Largest degree whose count entered the computation.
    pub verified_degree: usize,
    /// Number of trailing zero differences required by the certificate.
    pub stabilization_window: usize,
}

impl HPolynomial {
    /// Degree of the numerator (0 for a constant or zero numerator).
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// The numerator evaluated at 1: the sum of the coefficients.
    pub fn at_one(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    /// Leading coefficient, if the numerator is nonzero.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coefficients.last()
    }

    /// Expands `coefficients / (1 - t)^dim` back into counts for degrees
    /// `0..=max_degree`.
    pub fn reconstruct_counts(&self, max_degree: usize) -> Vec<BigInt> {
        (0..=max_degree)
            .map(|n| {
                self.coefficients
                    .iter()
                    .take(n + 1)
                    .enumerate()
                    .map(|(i, h)| {
                        if self.dim == 0 {
                            if i == n {
                                h.clone()
                            } else {
                                BigInt::zero()
                            }
                        } else {
                            h * binomial(
                                BigInt::from(n - i + self.dim - 1),
                                BigInt::from(self.dim - 1),
                            )
                        }
                    })
                    .sum()
            })
            .collect()
    }
}

/// Default stabilization window: `max(4, dim)` trailing zero differences.
pub fn default_window(dim: usize) -> usize {
    dim.max(4)
}

/// Extracts the numerator of `counts` over `(1 - t)^dim` under the
/// default stabilization window.
pub fn h_polynomial(counts: &GradedCount, dim: usize) -> Result<HPolynomial> {
    h_polynomial_with(counts, dim, default_window(dim))
}

/// Numerator extraction with an explicit stabilization window.
///
/// The `dim`-th finite differences of the counts are formed through the
/// verified degree; the last `window` of them must all be zero, otherwise
/// the tail over that window is reported and no numerator is produced.
pub fn h_polynomial_with(
    counts: &GradedCount,
    dim: usize,
    window: usize,
) -> Result<HPolynomial> {
    let top = counts
        .verified_degree
        .min(counts.counts.len().saturating_sub(1));
    let data = &counts.counts[..=top];
    let signed: Vec<BigInt> = (0..=dim)
        .map(|j| {
            let b = binomial(BigInt::from(dim), BigInt::from(j));
            if j % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    let diffs: Vec<BigInt> = (0..=top)
        .map(|i| {
            signed
                .iter()
                .take(i + 1)
                .enumerate()
                .map(|(j, c)| c * &data[i - j])
                .sum()
        })
        .collect();
    let nonzero_len = diffs.iter().rposition(|h| !h.is_zero()).map_or(0, |s| s + 1);
    if top + 1 < nonzero_len + window {
        let from = (top + 1).saturating_sub(window);
        return Err(Error::NonStabilized {
            degree: top,
            tail: diffs[from..].to_vec(),
        });
    }
    Ok(HPolynomial {
        coefficients: diffs[..nonzero_len].to_vec(),
        dim,
        verified_degree: top,
        stabilization_window: window,
    })
}

/// Tuning knobs for [`compare_degrees_with`].
#[derive(Debug, Clone)]
pub struct CompareOptions {
    /// Stabilization window; `None` picks `max(4, dim)`.
    pub window: Option<usize>,
    /// Point cap for slice enumeration.
    pub slice_cap: usize,
    /// Face budget for the hole-family search.
    pub face_cap: usize,
    /// Degrees held back from family inference as a truncation cushion;
    /// `None` picks `dim`.
    pub margin: Option<usize>,
}

impl Default for CompareOptions {
    fn default() -> CompareOptions {
        CompareOptions {
            window: None,
            slice_cap: DEFAULT_SLICE_CAP,
            face_cap: crate::cones::DEFAULT_FACE_CAP,
            margin: None,
        }
    }
}

/// Side-by-side report of a monoid's numerator against its
/// normalization's.
#[derive(Debug, Clone)]
pub struct DegreeComparison {
    /// Numerator of the monoid's count series.
    pub h: HPolynomial,
    /// Numerator of the normalization's count series.
    pub h_normalization: HPolynomial,
    /// `deg(h_normalization) - deg(h)`.
    pub gap: i64,
    /// The same gap in the opposite orientation, `deg(h) -
    /// deg(h_normalization)`.
    pub gap_reversed: i64,
    /// `h` evaluated at 1.
    pub at_one: BigInt,
    /// `h_normalization` evaluated at 1.
    pub at_one_normalization: BigInt,
    /// Whether the two values at 1 agree.
    pub at_one_match: bool,
    /// Verdict from hole-family inference on the degree-bounded hole set.
    pub s2: S2Verdict,
    /// Depth reading when a single family covers every known hole.
    pub depth_estimate: Option<usize>,
    /// Whether `deg(h_normalization) + codegree(cross-section)` equals
    /// the dimension, when the codegree search concluded.
    pub codegree_cross_check: Option<bool>,
}

/// Compares a monoid's series numerator with its normalization's at the
/// default settings. Counts on both sides are taken through `max_degree`.
pub fn compare_degrees(q: &AffineMonoid, max_degree: usize) -> Result<DegreeComparison> {
    compare_degrees_with(q, max_degree, &CompareOptions::default())
}

/// [`compare_degrees`] with explicit window, caps, and inference margin.
pub fn compare_degrees_with(
    q: &AffineMonoid,
    max_degree: usize,
    options: &CompareOptions,
) -> Result<DegreeComparison> {
    let dim = q.dim();
    let window = options.window.unwrap_or_else(|| default_window(dim));
    let margin = options.margin.unwrap_or(dim);

    let monoid_counts = strict_counts(q, max_degree, options.slice_cap)?;
    let h = h_polynomial_with(&monoid_counts, dim, window)?;
    let normalization_counts = normalize::normalization_counts(q, max_degree)?;
    let h_normalization = h_polynomial_with(&normalization_counts, dim, window)?;

    let deg = i64::try_from(h.degree()).map_err(|_| Error::CoordinateOverflow)?;
    let deg_normalization =
        i64::try_from(h_normalization.degree()).map_err(|_| Error::CoordinateOverflow)?;
    let at_one = h.at_one();
    let at_one_normalization = h_normalization.at_one();

    let inference = normalize::infer_hole_families_with(
        q,
        max_degree,
        margin,
        options.face_cap,
        options.slice_cap,
    )?;
    let s2 = normalize::verdict_from_inference(dim, &inference);
    let depth_estimate = normalize::depth_from_inference(&inference);

    let codegree_cross_check = q
        .cross_section()?
        .codegree(dim.max(1))?
        .map(|c| h_normalization.degree() + c == dim);

    Ok(DegreeComparison {
        gap: deg_normalization - deg,
        gap_reversed: deg - deg_normalization,
        at_one_match: at_one == at_one_normalization,
        h,
        h_normalization,
        at_one,
        at_one_normalization,
        s2,
        depth_estimate,
        codegree_cross_check,
    })
}

/// Per-degree audit that monoid counts plus hole counts equal
/// normalization counts.
#[derive(Debug, Clone)]
pub struct SumIdentityReport {
    /// Whether every residual vanished.
    pub holds: bool,
    /// `count_monoid(n) + count_holes(n) - count_normalization(n)` for
    /// each degree `n`.
    pub residuals: Vec<BigInt>,
    /// Largest degree audited.
    pub verified_degree: usize,
}

/// Audits the counting identity `monoid + holes = normalization` through
/// `max_degree`. The two sides come from independent paths: materialized
/// slice enumeration on the left, closed-form dilation counting on the
/// right.
pub fn check_sum_identity(q: &AffineMonoid, max_degree: usize) -> Result<SumIdentityReport> {
    let slices = q.degree_slices(max_degree)?;
    let holes = normalize::holes_from_slices(q, &slices, max_degree, DEFAULT_SLICE_CAP)?;
    let monoid_counts = slices.graded_count();
    let hole_counts = holes.graded_count();
    let normalization_counts = normalize::normalization_counts(q, max_degree)?;
    let residuals: Vec<BigInt> = (0..=max_degree)
        .map(|n| {
            &monoid_counts.counts[n] + &hole_counts.counts[n] - &normalization_counts.counts[n]
        })
        .collect();
    Ok(SumIdentityReport {
        holds: residuals.iter().all(Zero::is_zero),
        residuals,
        verified_degree: max_degree,
    })
}

/// Convolves two count prefixes through `max_degree`. Entries past either
/// slice's end are treated as absent, so both inputs should be verified at
/// least to `max_degree`.
pub fn convolve(a: &[BigInt], b: &[BigInt], max_degree: usize) -> Vec<BigInt> {
    (0..=max_degree)
        .map(|n| {
            a.iter()
                .take(n + 1)
                .enumerate()
                .filter_map(|(i, x)| b.get(n - i).map(|y| x * y))
                .sum()
        })
        .collect()
}

/// Convolution audit for a join: the join's counts against the
/// convolution of the factor counts, on both the monoid and the
/// normalization side.
#[derive(Debug, Clone)]
pub struct JoinSeriesReport {
    /// Degree counts of the join monoid, enumerated directly.
    pub join_counts: GradedCount,
    /// Degree counts of the join's normalization, counted directly.
    pub join_normalization_counts: GradedCount,
    /// First degree where the monoid-side convolution fails.
    pub first_mismatch: Option<usize>,
    /// First degree where the normalization-side convolution fails.
    pub first_normalization_mismatch: Option<usize>,
    /// Largest degree audited.
    pub verified_degree: usize,
}

impl JoinSeriesReport {
    /// True when both convolution identities held through the audit.
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none() && self.first_normalization_mismatch.is_none()
    }
}

/// Verifies through `max_degree` that the counts of `join(q, q2)` are the
/// convolution of the factor counts, and likewise for the normalizations.
/// The join side is enumerated independently of the factors.
pub fn series_of_join(
    q: &AffineMonoid,
    q2: &AffineMonoid,
    max_degree: usize,
) -> Result<JoinSeriesReport> {
    let join = q.join(q2)?;
    let join_counts = strict_counts(&join, max_degree, DEFAULT_SLICE_CAP)?;
    let a = strict_counts(q, max_degree, DEFAULT_SLICE_CAP)?;
    let b = strict_counts(q2, max_degree, DEFAULT_SLICE_CAP)?;
    let convolution = convolve(&a.counts, &b.counts, max_degree);
    let first_mismatch = (0..=max_degree).find(|&n| join_counts.counts[n] != convolution[n]);

    let join_normalization_counts = normalize::normalization_counts(&join, max_degree)?;
    let an = normalize::normalization_counts(q, max_degree)?;
    let bn = normalize::normalization_counts(q2, max_degree)?;
    let normalization_convolution = convolve(&an.counts, &bn.counts, max_degree);
    let first_normalization_mismatch = (0..=max_degree)
        .find(|&n| join_normalization_counts.counts[n] != normalization_convolution[n]);

    Ok(JoinSeriesReport {
        join_counts,
        join_normalization_counts,
        first_mismatch,
        first_normalization_mismatch,
        verified_degree: max_degree,
    })
}

/// Counts through `max_degree` with minimal slice retention, failing if
/// the cap truncates the enumeration.
fn strict_counts(q: &AffineMonoid, max_degree: usize, cap: usize) -> Result<GradedCount> {
    let slices = q.degree_slices_with(max_degree, cap, Some(0))?;
    if let Some(degree) = slices.cap_hit() {
        return Err(Error::PointCapExceeded {
            cap,
            degree,
            completed: slices.completed(),
        });
    }
    Ok(slices.graded_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{new_monoid, rm, veronese};

    fn counts_of(q: &AffineMonoid, max_degree: usize) -> GradedCount {
        q.degree_slices(max_degree).unwrap().graded_count()
    }

    #[test]
    fn polynomial_ring_has_unit_numerator() {
        let q = new_monoid(&[vec![1]]).unwrap();
        let h = h_polynomial(&counts_of(&q, 8), 1).unwrap();
        assert_eq!(h.coefficients, vec![BigInt::from(1)]);
        assert_eq!(h.degree(), 0);
        assert_eq!(h.at_one(), BigInt::from(1));
        assert_eq!(h.reconstruct_counts(5), vec![BigInt::from(1); 6]);
    }

    #[test]
    fn rm1_comparison_matches_reference() {
        let q = rm(1).unwrap();
        let report = compare_degrees(&q, 8).unwrap();
        let ints = |v: &[BigInt]| v.iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(&report.h.coefficients), vec![1, 2, 2]);
        assert_eq!(ints(&report.h_normalization.coefficients), vec![1, 4]);
        assert_eq!(report.gap, -1);
        assert_eq!(report.gap_reversed, 1);
        assert_eq!(report.at_one, BigInt::from(5));
        assert!(report.at_one_match);
        assert_eq!(report.s2, S2Verdict::Consistent);
        assert_eq!(report.depth_estimate, None);
        assert_eq!(report.codegree_cross_check, Some(true));
    }

    #[test]
    fn rm_gap_scales_with_the_parameter() {
        for m in 0..=3 {
            let q = rm(m).unwrap();
            let report = compare_degrees(&q, 2 * m + 8).unwrap();
            assert_eq!(report.gap_reversed, i64::try_from(m).unwrap());
            assert!(report.at_one_match);
            let mut expected = vec![BigInt::from(1)];
            expected.extend(std::iter::repeat_n(BigInt::from(2), m + 1));
            assert_eq!(report.h.coefficients, expected);
            assert_eq!(
                report.h_normalization.coefficients,
                vec![BigInt::from(1), BigInt::from(2 * m as i64 + 2)]
            );
        }
    }

    #[test]
    fn truncated_counts_report_their_tail() {
        let q = rm(3).unwrap();
        let err = h_polynomial(&counts_of(&q, 6), 2).unwrap_err();
        match err {
            Error::NonStabilized { degree, tail } => {
                assert_eq!(degree, 6);
                let ints: Vec<i64> = tail.iter().map(|c| i64::try_from(c).unwrap()).collect();
                assert_eq!(ints, vec![2, 2, 0, 0]);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn reconstruction_regenerates_counts() {
        let q = rm(2).unwrap();
        let counts = counts_of(&q, 10);
        let h = h_polynomial(&counts, 2).unwrap();
        assert_eq!(h.reconstruct_counts(10), counts.counts);
    }

    #[test]
    fn sum_identity_holds_on_small_monoids() {
        for q in [rm(1).unwrap(), rm(2).unwrap(), veronese(3).unwrap()] {
            let report = check_sum_identity(&q, 8).unwrap();
            assert!(report.holds, "residuals {:?}", report.residuals);
            assert!(report.residuals.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn join_of_two_lines_counts_like_a_plane() {
        let line = new_monoid(&[vec![1]]).unwrap();
        let report = series_of_join(&line, &line, 6).unwrap();
        assert!(report.holds());
        let expected: Vec<BigInt> = (1..=7).map(BigInt::from).collect();
        assert_eq!(report.join_counts.counts, expected);
        assert_eq!(report.join_normalization_counts.counts, expected);
    }

    #[test]
    fn join_convolution_holds_for_mixed_factors() {
        let report = series_of_join(&rm(1).unwrap(), &veronese(2).unwrap(), 6).unwrap();
        assert!(report.holds());
        assert_eq!(report.first_mismatch, None);
        assert_eq!(report.first_normalization_mismatch, None);
    }

    #[test]
    fn convolve_matches_hand_product() {
        let a = [BigInt::from(1), BigInt::from(2)];
        let b = [BigInt::from(3), BigInt::from(4)];
        let c = convolve(&a, &b, 2);
        assert_eq!(c, vec![BigInt::from(3), BigInt::from(10), BigInt::from(8)]);
    }
}
