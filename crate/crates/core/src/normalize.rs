//! Normalization of an affine monoid and everything derived from it:
//! graded slices of `ZQ ∩ cone(Q)`, the Hilbert basis with a generation
//! certificate, normality and spanning checks, hole enumeration,
//! degree-bounded hole-family inference, a Serre (S2) verdict, and a
//! depth estimate.
//!
//! Normalization slices come from scanning dilations of the degree-one
//! cross-section polytope against the group lattice; holes are the
//! slice-wise difference from the monoid's own slices. Families are
//! inferred greedily: for the lowest-degree uncovered hole, faces of the
//! cone are tried in descending dimension (preferring faces whose
//! lattice explains the observed hole differences), and a face is
//! accepted once every point of `(base + ZF) ∩ cone` up to the coverage
//! bound is verified to be a hole.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::cones::{Face, LatticePolytope, DEFAULT_FACE_CAP};
use crate::error::{Error, Result};
use crate::exactlin::{smith_diagonal, IntMatrix};
use crate::monoid::{
    degree_box, AffineMonoid, GradedCount, PackedSlices, SliceBuilder, DEFAULT_SLICE_CAP,
};
use crate::scan::{ScanConstraint, ScanProblem};

/// Per-degree cardinalities of the normalization, counted by scanning
/// cross-section dilations without materializing points.
pub fn normalization_counts(q: &AffineMonoid, max_degree: usize) -> Result<GradedCount> {
    let p = q.cross_section()?;
    let mut counts = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        counts.push(p.dilation_count(n, false)?);
    }
    Ok(GradedCount {
        counts,
        verified_degree: max_degree,
    })
}

/// Materialized normalization slices `0..=max_degree` under the default
/// point cap; fails with the completed prefix reported when a slice
/// would exceed the cap.
pub fn normalization_slices(q: &AffineMonoid, max_degree: usize) -> Result<PackedSlices> {
    collect_normalization(q, max_degree, DEFAULT_SLICE_CAP, None, true)
}

/// Materialized normalization slices with an explicit cap and retention
/// bound; hitting the cap is reported in the result, not an error.
pub fn normalization_slices_with(
    q: &AffineMonoid,
    max_degree: usize,
    cap: usize,
    retain_up_to: Option<usize>,
) -> Result<PackedSlices> {
    collect_normalization(q, max_degree, cap, retain_up_to, false)
}

fn collect_normalization(
    q: &AffineMonoid,
    max_degree: usize,
    cap: usize,
    retain_up_to: Option<usize>,
    strict: bool,
) -> Result<PackedSlices> {
    let p = q.cross_section()?;
    let mut builder = SliceBuilder::new(q.generators(), max_degree, retain_up_to)?;
    let mut cap_hit = None;
    for n in 0..=max_degree {
        let count = p.dilation_count(n, false)?;
        if count > BigInt::from(cap) {
            if strict {
                return Err(Error::PointCapExceeded {
                    cap,
                    degree: n,
                    completed: n.saturating_sub(1),
                });
            }
            cap_hit = Some(n);
            break;
        }
        let mut packed = Vec::with_capacity(usize::try_from(&count).unwrap_or(0));
        p.dilation_for_each(n, false, |x| packed.push(builder.pack(x)))?;
        builder.push(packed);
    }
    Ok(builder.finish(cap_hit))
}

/// Irreducible elements of the normalization, with the degree up to
/// which every normalization element is certified to decompose over
/// them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    /// Irreducible elements, listed by ascending degree then scan order.
    pub elements: Vec<Vec<i64>>,
    /// Certified decomposition bound.
    pub verified_up_to: usize,
}

/// The Hilbert basis of the normalization, certified up to degree `dim`.
///
/// Irreducibles are searched up to degree `dim − 1` (the generation
/// bound for cones over polytopes); the certificate then proves no
/// irreducible was missed below the verification bound.
pub fn hilbert_basis(q: &AffineMonoid) -> Result<HilbertBasis> {
    hilbert_basis_verified(q, q.dim())
}

/// The Hilbert basis with an explicit certification bound.
pub fn hilbert_basis_verified(q: &AffineMonoid, verify_up_to: usize) -> Result<HilbertBasis> {
    hilbert_basis_with(q, verify_up_to, DEFAULT_SLICE_CAP)
}

/// The Hilbert basis with explicit certification bound and point cap.
///
/// Works degree by degree: the union of `basis element + lower slice`
/// over the basis found so far is swept against the current slice in one
/// sorted merge per basis element. Points missed by every shift with a
/// basis degree at most half the current one are irreducible (any
/// decomposition refines to one whose smaller part is irreducible);
/// within the search range they join the basis, beyond it a point missed
/// by every shift fails the certificate.
pub fn hilbert_basis_with(
    q: &AffineMonoid,
    verify_up_to: usize,
    cap: usize,
) -> Result<HilbertBasis> {
    let search_bound = q.dim().saturating_sub(1).max(1);
    let top = search_bound.max(verify_up_to);
    let slices = collect_normalization(q, top, cap, None, true)?;

    let mut elements: Vec<Vec<i64>> = Vec::new();
    let mut degrees: Vec<usize> = Vec::new();
    for n in 1..=top {
        let len = slices.slice_len(n).expect("all slices are retained");
        let mut covered_low = vec![false; len];
        for (b, &db) in elements.iter().zip(&degrees) {
            if db <= n / 2 {
                slices.mark_shifted(n - db, n, b, &mut covered_low);
            }
        }
        if n <= search_bound {
            for (i, hit) in covered_low.iter().enumerate() {
                if !hit {
                    elements.push(slices.point_at(n, i));
                    degrees.push(n);
                }
            }
        } else {
            let mut covered = covered_low;
            for (b, &db) in elements.iter().zip(&degrees) {
                if db > n / 2 && db < n {
                    slices.mark_shifted(n - db, n, b, &mut covered);
                }
            }
            if let Some(i) = covered.iter().position(|hit| !hit) {
                return Err(Error::CertificateFailed {
                    degree: n,
                    witness: slices.point_at(n, i),
                });
            }
        }
    }

    Ok(HilbertBasis {
        elements,
        verified_up_to: verify_up_to,
    })
}

/// A monoid together with materialized normalization slices and the
/// normalization's Hilbert basis.
#[derive(Debug, Clone)]
pub struct NormalizationView {
    base: AffineMonoid,
    slices: PackedSlices,
    basis: HilbertBasis,
}

impl NormalizationView {
    /// Computes slices up to `max_degree` and the certified basis.
    pub fn compute(q: &AffineMonoid, max_degree: usize) -> Result<NormalizationView> {
        Ok(NormalizationView {
            base: q.clone(),
            slices: normalization_slices(q, max_degree)?,
            basis: hilbert_basis(q)?,
        })
    }

    /// The underlying monoid.
    pub fn base(&self) -> &AffineMonoid {
        &self.base
    }

    /// Normalization slices.
    pub fn slices(&self) -> &PackedSlices {
        &self.slices
    }

    /// The certified Hilbert basis.
    pub fn basis(&self) -> &HilbertBasis {
        &self.basis
    }
}

/// Whether the monoid equals its normalization: every Hilbert-basis
/// element of the normalization is already a generator.
pub fn is_normal(q: &AffineMonoid) -> Result<bool> {
    let basis = hilbert_basis(q)?;
    let gens: HashSet<&[i64]> = q.generators().iter().map(|g| g.as_slice()).collect();
    Ok(basis.elements.iter().all(|e| gens.contains(e.as_slice())))
}

/// Whether the polytope's lattice points affinely span the full ambient
/// lattice: the Smith invariant factors of the lifted point matrix are
/// all 1 with full rank.
pub fn is_spanning(p: &LatticePolytope) -> Result<bool> {
    let rows: Vec<Vec<i64>> = p
        .dilation_lattice_points(1, false)?
        .into_iter()
        .map(|mut x| {
            x.push(1);
            x
        })
        .collect();
    let diag = smith_diagonal(&IntMatrix::from_rows(&rows)?.to_bigint());
    Ok(diag.len() == p.ambient_dim() + 1 && diag.iter().all(|v| v.is_one()))
}

/// Holes per degree: normalization elements outside the monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoleSet {
    per_degree: Vec<Vec<Vec<i64>>>,
}

impl HoleSet {
    /// Largest degree whose holes were computed.
    pub fn verified_degree(&self) -> usize {
        self.per_degree.len() - 1
    }

    /// Holes of one degree, sorted lexicographically.
    pub fn points(&self, degree: usize) -> Option<&[Vec<i64>]> {
        self.per_degree.get(degree).map(|v| v.as_slice())
    }

    /// Per-degree hole cardinalities.
    pub fn graded_count(&self) -> GradedCount {
        GradedCount {
            counts: self
                .per_degree
                .iter()
                .map(|s| BigInt::from(s.len()))
                .collect(),
            verified_degree: self.verified_degree(),
        }
    }

    /// Whether any hole exists up to the verified degree.
    pub fn is_empty(&self) -> bool {
        self.per_degree.iter().all(|s| s.is_empty())
    }

    /// Membership test at a degree within the verified range.
    pub fn contains(&self, degree: usize, x: &[i64]) -> bool {
        self.per_degree
            .get(degree)
            .is_some_and(|s| s.binary_search_by(|p| p.as_slice().cmp(x)).is_ok())
    }

    /// All holes as `(degree, point)` in ascending degree then lex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &[i64])> {
        self.per_degree
            .iter()
            .enumerate()
            .flat_map(|(n, s)| s.iter().map(move |p| (n, p.as_slice())))
    }
}

/// Holes up to `max_degree` under the default point cap.
pub fn holes_up_to(q: &AffineMonoid, max_degree: usize) -> Result<HoleSet> {
    holes_up_to_with(q, max_degree, DEFAULT_SLICE_CAP)
}

/// Holes up to `max_degree` with an explicit point cap.
pub fn holes_up_to_with(q: &AffineMonoid, max_degree: usize, cap: usize) -> Result<HoleSet> {
    let slices = q.degree_slices_with(max_degree, cap, None)?;
    if let Some(degree) = slices.cap_hit() {
        return Err(Error::PointCapExceeded {
            cap,
            degree,
            completed: slices.completed(),
        });
    }
    holes_from_slices(q, &slices, max_degree, cap)
}

/// Holes computed against already materialized monoid slices.
///
/// Panics if a required monoid slice was dropped by retention.
pub fn holes_from_slices(
    q: &AffineMonoid,
    q_slices: &PackedSlices,
    max_degree: usize,
    cap: usize,
) -> Result<HoleSet> {
    let p = q.cross_section()?;
    let mut per_degree = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        if p.dilation_count(n, false)? > BigInt::from(cap) {
            return Err(Error::PointCapExceeded {
                cap,
                degree: n,
                completed: n.saturating_sub(1),
            });
        }
        let mut holes: Vec<Vec<i64>> = p
            .dilation_lattice_points(n, false)?
            .into_iter()
            .filter(|x| {
                !q_slices
                    .slice_contains(n, x)
                    .expect("monoid slice must be retained for hole comparison")
            })
            .collect();
        holes.sort();
        per_degree.push(holes);
    }
    Ok(HoleSet { per_degree })
}

/// A translated face whose lattice points inside the cone are holes.
#[derive(Debug, Clone)]
pub struct HoleFamily {
    /// The hole the family translates from.
    pub base: Vec<i64>,
    /// Face whose lattice shifts the base across the family.
    pub face: Face,
    /// Degree of the base hole.
    pub base_degree: usize,
    /// Every family member up to this degree is a verified hole.
    pub coverage: usize,
}

/// Result of greedy hole-family inference.
#[derive(Debug, Clone)]
pub struct HoleInference {
    /// Emitted families, in order of discovery.
    pub families: Vec<HoleFamily>,
    /// Holes no family covers (inference is heuristic, so this is
    /// reported rather than fatal).
    pub uncovered: Vec<Vec<i64>>,
    /// Families and coverage are verified up to this degree.
    pub coverage_degree: usize,
    /// Safety margin subtracted from the requested degree.
    pub margin: usize,
}

/// Greedy hole-family inference with default margin (the dimension) and
/// default caps.
pub fn infer_hole_families(q: &AffineMonoid, max_degree: usize) -> Result<HoleInference> {
    infer_hole_families_with(q, max_degree, q.dim(), DEFAULT_FACE_CAP, DEFAULT_SLICE_CAP)
}

/// Greedy hole-family inference with explicit margin and caps.
pub fn infer_hole_families_with(
    q: &AffineMonoid,
    max_degree: usize,
    margin: usize,
    face_cap: usize,
    slice_cap: usize,
) -> Result<HoleInference> {
    let bound = max_degree.saturating_sub(margin);
    let q_slices = q.degree_slices_with(bound, slice_cap, None)?;
    if let Some(degree) = q_slices.cap_hit() {
        return Err(Error::PointCapExceeded {
            cap: slice_cap,
            degree,
            completed: q_slices.completed(),
        });
    }
    let holes = holes_from_slices(q, &q_slices, bound, slice_cap)?;
    infer_from_holes(q, &holes, bound, margin, face_cap)
}

/// Greedy inference over an existing hole set; `bound` must not exceed
/// the set's verified degree.
pub fn infer_from_holes(
    q: &AffineMonoid,
    holes: &HoleSet,
    bound: usize,
    margin: usize,
    face_cap: usize,
) -> Result<HoleInference> {
    assert!(
        bound <= holes.verified_degree(),
        "holes must be verified through the coverage bound"
    );
    let flat: Vec<(usize, Vec<i64>)> = holes
        .iter()
        .filter(|(n, _)| *n <= bound)
        .map(|(n, p)| (n, p.to_vec()))
        .collect();
    let mut families = Vec::new();
    let mut uncovered = Vec::new();
    if flat.is_empty() {
        return Ok(HoleInference {
            families,
            uncovered,
            coverage_degree: bound,
            margin,
        });
    }

    let faces = q.cone().full_face_lattice(face_cap)?;
    let mut covered = vec![false; flat.len()];
    while let Some(next) = covered.iter().position(|c| !c) {
        let (base_degree, base) = (flat[next].0, flat[next].1.clone());
        let scores: Vec<usize> = faces
            .iter()
            .map(|f| {
                flat.iter()
                    .filter(|(_, h)| f.lattice.member(&difference(h, &base)))
                    .count()
            })
            .collect();
        let mut order: Vec<usize> = (0..faces.len()).collect();
        order.sort_by(|&a, &b| {
            faces[b]
                .dim
                .cmp(&faces[a].dim)
                .then(scores[b].cmp(&scores[a]))
                .then(faces[a].generator_indices.cmp(&faces[b].generator_indices))
        });
        let mut emitted = false;
        for &fi in &order {
            if family_members_are_holes(q, &faces[fi], &base, bound, holes)? {
                for (slot, (_, h)) in covered.iter_mut().zip(&flat) {
                    if !*slot && faces[fi].lattice.member(&difference(h, &base)) {
                        *slot = true;
                    }
                }
                families.push(HoleFamily {
                    base: base.clone(),
                    face: faces[fi].clone(),
                    base_degree,
                    coverage: bound,
                });
                emitted = true;
                break;
            }
        }
        if !emitted {
            covered[next] = true;
            uncovered.push(base);
        }
    }

    Ok(HoleInference {
        families,
        uncovered,
        coverage_degree: bound,
        margin,
    })
}

fn difference(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scans `(base + ZF) ∩ cone` up to `bound` and checks every member is a
/// known hole.
fn family_members_are_holes(
    q: &AffineMonoid,
    face: &Face,
    base: &[i64],
    bound: usize,
    holes: &HoleSet,
) -> Result<bool> {
    let (lo, hi) = degree_box(q.generators(), bound)?;
    let mut problem = ScanProblem::new(lo, hi);
    for f in q.cone().facets() {
        problem = problem.constraint(ScanConstraint::ge(f.clone(), 0));
    }
    for e in q.cone().equations() {
        problem = problem.constraint(ScanConstraint::eq(e.clone(), 0));
    }
    let negated: Vec<i64> = q.grading().weights().iter().map(|&c| -c).collect();
    let top = i64::try_from(bound)
        .ok()
        .and_then(|b| b.checked_mul(q.grading().scale()))
        .ok_or(Error::CoordinateOverflow)?;
    problem = problem.constraint(ScanConstraint::ge(negated, top));
    problem = problem.coset(base.to_vec(), face.lattice.clone());

    let mut all_holes = true;
    problem.for_each(|x| {
        if all_holes {
            let degree = q
                .degree_of(x)
                .expect("family members stay degree-integral");
            if degree < 0 || degree as usize > bound || !holes.contains(degree as usize, x) {
                all_holes = false;
            }
        }
    })?;
    Ok(all_holes)
}

/// Degree-bounded Serre (S2) verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum S2Verdict {
    /// All holes up to the coverage bound are covered and no verified
    /// family has dimension below `dim − 1`.
    Consistent,
    /// A verified family of dimension below `dim − 1` exists.
    Violated {
        /// Base hole of the offending family.
        base: Vec<i64>,
        /// Dimension of the offending family's face.
        face_dim: usize,
    },
    /// Coverage failed, so no verdict is possible at this bound.
    Inconclusive,
}

/// Verdict from an existing inference for a monoid of dimension `dim`.
pub fn verdict_from_inference(dim: usize, inference: &HoleInference) -> S2Verdict {
    if !inference.uncovered.is_empty() {
        return S2Verdict::Inconclusive;
    }
    for family in &inference.families {
        if family.face.dim + 1 < dim {
            return S2Verdict::Violated {
                base: family.base.clone(),
                face_dim: family.face.dim,
            };
        }
    }
    S2Verdict::Consistent
}

/// Runs inference and reports the Serre (S2) verdict.
pub fn s2_verdict(q: &AffineMonoid, max_degree: usize) -> Result<S2Verdict> {
    Ok(verdict_from_inference(
        q.dim(),
        &infer_hole_families(q, max_degree)?,
    ))
}

/// Depth estimate from an inference: `dim F + 1` when exactly one family
/// covers every hole, `None` otherwise.
pub fn depth_from_inference(inference: &HoleInference) -> Option<usize> {
    if inference.families.len() == 1 && inference.uncovered.is_empty() {
        Some(inference.families[0].face.dim + 1)
    } else {
        None
    }
}

/// Runs inference and reports the depth estimate.
pub fn depth_estimate(q: &AffineMonoid, max_degree: usize) -> Result<Option<usize>> {
    Ok(depth_from_inference(&infer_hole_families(q, max_degree)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{gk, rm, veronese};

    fn v(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    fn counts(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&n| BigInt::from(n)).collect()
    }

    #[test]
    fn normal_monoid_slices_match() {
        let q = veronese(3).unwrap();
        let own = q.degree_slices(4).unwrap().graded_count();
        let norm = normalization_counts(&q, 4).unwrap();
        assert_eq!(own.counts, norm.counts);
        assert!(holes_up_to(&q, 4).unwrap().is_empty());
        assert!(is_normal(&q).unwrap());
    }

    #[test]
    fn rm1_normalization_counts_match_reference() {
        // Reference values from tools/oracles/brute.py.
        let q = rm(1).unwrap();
        let norm = normalization_counts(&q, 4).unwrap();
        assert_eq!(norm.counts, counts(&[1, 6, 11, 16, 21]));
        let slices = normalization_slices(&q, 4).unwrap();
        assert_eq!(slices.graded_count().counts, counts(&[1, 6, 11, 16, 21]));
        assert_eq!(slices.slice_contains(1, &[1, 4]), Some(true));
        assert_eq!(slices.slice_contains(1, &[5, 5]), Some(false));
    }

    #[test]
    fn rm1_holes_are_two_rays() {
        // Reference values from tools/oracles/brute.py.
        let q = rm(1).unwrap();
        let holes = holes_up_to(&q, 4).unwrap();
        assert_eq!(holes.graded_count().counts, counts(&[0, 2, 2, 2, 2]));
        for n in 1..=4usize {
            let y = 5 * n as i64 - 1;
            assert_eq!(holes.points(n).unwrap(), &[vec![1, y], vec![y, 1]]);
        }
    }

    #[test]
    fn rm1_hilbert_basis_is_the_full_slice() {
        let q = rm(1).unwrap();
        let basis = hilbert_basis(&q).unwrap();
        assert_eq!(
            basis.elements,
            v(&[&[0, 5], &[1, 4], &[2, 3], &[3, 2], &[4, 1], &[5, 0]])
        );
        assert_eq!(basis.verified_up_to, 2);
        assert!(!is_normal(&q).unwrap());
        assert!(is_normal(&rm(0).unwrap()).unwrap());
    }

    #[test]
    fn g1_holes_and_basis_match_reference() {
        // Reference values from tools/oracles/brute.py.
        let q = gk(1).unwrap();
        let own = q.degree_slices(5).unwrap().graded_count();
        assert_eq!(own.counts, counts(&[1, 10, 55, 219, 704, 1936]));
        let norm = normalization_counts(&q, 5).unwrap();
        assert_eq!(norm.counts, counts(&[1, 10, 55, 220, 711, 1964]));
        let holes = holes_up_to(&q, 5).unwrap();
        assert_eq!(holes.graded_count().counts, counts(&[0, 0, 0, 1, 7, 28]));
        assert_eq!(holes.points(3).unwrap(), &[vec![1, 1, 1, 0, 0, 1, 1, 1]]);

        let basis = hilbert_basis(&q).unwrap();
        assert_eq!(basis.elements.len(), 11);
        assert_eq!(basis.verified_up_to, 8);
        let mut expected = q.generators().to_vec();
        expected.push(vec![1, 1, 1, 0, 0, 1, 1, 1]);
        for e in &expected {
            assert!(basis.elements.contains(e));
        }
        assert!(!is_normal(&q).unwrap());
    }

    #[test]
    fn spanning_detects_index_two_simplex() {
        let unit = LatticePolytope::new(&v(&[&[0, 0], &[1, 0], &[0, 1]]), None).unwrap();
        assert!(is_spanning(&unit).unwrap());
        let empty_simplex = LatticePolytope::new(
            &v(&[&[0, 0, 0], &[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            None,
        )
        .unwrap();
        assert!(!is_spanning(&empty_simplex).unwrap());
    }

    #[test]
    fn rm1_families_are_the_two_rays() {
        let q = rm(1).unwrap();
        let inference = infer_hole_families(&q, 8).unwrap();
        assert_eq!(inference.coverage_degree, 6);
        assert_eq!(inference.families.len(), 2);
        assert!(inference.uncovered.is_empty());
        let mut bases: Vec<Vec<i64>> = inference.families.iter().map(|f| f.base.clone()).collect();
        bases.sort();
        assert_eq!(bases, v(&[&[1, 4], &[4, 1]]));
        for family in &inference.families {
            assert_eq!(family.face.dim, 1);
            assert_eq!(family.coverage, 6);
        }
        assert_eq!(verdict_from_inference(q.dim(), &inference), S2Verdict::Consistent);
        assert_eq!(depth_from_inference(&inference), None);
    }

    #[test]
    fn g1_family_is_one_codimension_one_face() {
        let q = gk(1).unwrap();
        let inference = infer_hole_families(&q, 12).unwrap();
        assert_eq!(inference.coverage_degree, 4);
        assert_eq!(inference.families.len(), 1);
        assert!(inference.uncovered.is_empty());
        let family = &inference.families[0];
        assert_eq!(family.base, vec![1, 1, 1, 0, 0, 1, 1, 1]);
        assert_eq!(family.base_degree, 3);
        assert_eq!(family.face.dim, 7);
        assert_eq!(verdict_from_inference(q.dim(), &inference), S2Verdict::Consistent);
        assert_eq!(depth_from_inference(&inference), Some(8));
        assert_eq!(depth_estimate(&q, 12).unwrap(), Some(8));
        assert_eq!(s2_verdict(&q, 12).unwrap(), S2Verdict::Consistent);
    }

    #[test]
    fn normal_monoid_has_no_families() {
        let q = veronese(3).unwrap();
        let inference = infer_hole_families(&q, 8).unwrap();
        assert!(inference.families.is_empty());
        assert!(inference.uncovered.is_empty());
        assert_eq!(verdict_from_inference(q.dim(), &inference), S2Verdict::Consistent);
        assert_eq!(depth_from_inference(&inference), None);
    }

    #[test]
    fn caps_propagate_and_flag() {
        let q = rm(1).unwrap();
        let err = collect_normalization(&q, 4, 10, None, true).unwrap_err();
        assert!(matches!(
            err,
            Error::PointCapExceeded {
                cap: 10,
                degree: 2,
                completed: 1
            }
        ));
        let partial = normalization_slices_with(&q, 4, 10, None).unwrap();
        assert_eq!(partial.completed(), 1);
        assert_eq!(partial.cap_hit(), Some(2));
    }

    #[test]
    fn tiny_bounds_still_cover_all_holes() {
        let q = rm(1).unwrap();
        let holes = holes_up_to(&q, 1).unwrap();
        let inference = infer_from_holes(&q, &holes, 1, 0, DEFAULT_FACE_CAP).unwrap();
        assert!(inference.uncovered.is_empty());
        assert_eq!(inference.families.len(), 2);
        assert_eq!(inference.coverage_degree, 1);
    }
}
