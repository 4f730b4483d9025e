//! Affine monoids: construction with minimal generators and a degree-1
//! grading, graded enumeration by iterated Minkowski addition, exact
//! membership, joins, and the named generator families.
//!
//! Construction order matters: redundant generators are removed first (an
//! input generator is dropped exactly when it is a sum of two or more
//! input generators, decided by memoized decomposition), and the grading
//! is solved afterwards on the survivors, since a redundant generator
//! never lies on the common degree-1 hyperplane.
//!
//! Degree slices are kept packed: a codec assigns each coordinate a fixed
//! bit field sized for the degree-`D` bounding box, so a point is one
//! `u128` and slice `n` is a sorted vector. Adding a generator to a packed
//! point is a single wrapping add of a precomputed delta (exact modulo
//! 2^128 because every partial sum stays inside the box), which makes the
//! per-degree Minkowski step a k-way merge of sorted streams with
//! deduplication on the fly. Slices may be dropped as the frontier
//! advances to honor a retention bound, and a point budget caps each
//! slice with the completed prefix reported back.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cones::{facets_of, LatticePolytope, RationalCone};
use crate::error::{Error, Result};
use crate::exactlin::{right_kernel, IntMatrix, Lattice};
use crate::graphs;

/// Default cap on the number of points in a single materialized slice.
pub const DEFAULT_SLICE_CAP: usize = 10_000_000;

/// Integer linear functional assigning every generator degree 1, as
/// `weights . x / scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    weights: Vec<i64>,
    scale: i64,
}

impl Grading {
    /// Weight vector (numerator of the functional).
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Common denominator of the functional.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Degree of `x`, if the functional is integral there.
    pub fn degree_of(&self, x: &[i64]) -> Option<i64> {
        let num: i128 = self
            .weights
            .iter()
            .zip(x)
            .map(|(&w, &v)| w as i128 * v as i128)
            .sum();
        if num % self.scale as i128 != 0 {
            return None;
        }
        i64::try_from(num / self.scale as i128).ok()
    }
}

/// Exact slice cardinalities by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCount {
    /// `counts[n]` is the number of degree-`n` elements.
    pub counts: Vec<BigInt>,
    /// Largest degree whose count is verified exact.
    pub verified_degree: usize,
}

/// A positive homogeneous affine monoid given by its minimal generators.
#[derive(Debug, Clone)]
pub struct AffineMonoid {
    ambient_dim: usize,
    generators: Vec<Vec<i64>>,
    grading: Grading,
    group_lattice: Lattice,
    cone: RationalCone,
}

/// Builds a monoid from generators: validates positivity, removes
/// redundant generators, and solves for the degree-1 grading.
pub fn new_monoid(generators: &[Vec<i64>]) -> Result<AffineMonoid> {
    AffineMonoid::new(generators)
}

impl AffineMonoid {
    /// See [`new_monoid`].
    pub fn new(generators: &[Vec<i64>]) -> Result<AffineMonoid> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let ambient_dim = generators[0].len();
        for (index, g) in generators.iter().enumerate() {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: g.len(),
                });
            }
            if g.iter().all(|&v| v == 0) {
                return Err(Error::ZeroGenerator { index });
            }
        }
        let mut deduped: Vec<Vec<i64>> = Vec::new();
        for g in generators {
            if !deduped.contains(g) {
                deduped.push(g.clone());
            }
        }

        // Pointedness is needed before minimalization: decomposition
        // search terminates because degrees under any positive functional
        // strictly drop.
        let cone = facets_of(&deduped)?;

        let minimal = minimal_generators(&deduped, &cone);
        let cone = facets_of(&minimal)?;
        let grading = solve_grading(&minimal)?;
        let group_lattice = Lattice::from_rows(ambient_dim, &minimal)?;

        Ok(AffineMonoid {
            ambient_dim,
            generators: minimal,
            grading,
            group_lattice,
            cone,
        })
    }

    /// Ambient dimension of the generator coordinates.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the monoid: rank of its group.
    pub fn dim(&self) -> usize {
        self.group_lattice.rank()
    }

    /// The minimal generating system, in input order.
    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// The grading under which every generator has degree 1.
    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    /// The group `ZQ` generated by the monoid.
    pub fn group_lattice(&self) -> &Lattice {
        &self.group_lattice
    }

    /// The cone spanned by the monoid.
    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    /// Degree of `x` under the monoid's grading, if integral.
    pub fn degree_of(&self, x: &[i64]) -> Option<i64> {
        self.grading.degree_of(x)
    }

    /// Whether `v` is a nonnegative integer combination of the
    /// generators, decided by memoized decomposition within the degree
    /// slice.
    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "contains: dimension mismatch");
        match self.degree_of(v) {
            Some(deg) if deg >= 0 => {}
            _ => return false,
        }
        if !self.group_lattice.member(v) {
            return false;
        }
        let mut memo = HashMap::new();
        self.decomposes(v.to_vec(), &mut memo)
    }

    fn decomposes(&self, v: Vec<i64>, memo: &mut HashMap<Vec<i64>, bool>) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        if !self.cone.contains(&v) {
            return false;
        }
        if let Some(&hit) = memo.get(&v) {
            return hit;
        }
        let mut found = false;
        for g in &self.generators {
            let rest: Vec<i64> = v.iter().zip(g).map(|(&a, &b)| a - b).collect();
            if self.decomposes(rest, memo) {
                found = true;
                break;
            }
        }
        memo.insert(v, found);
        found
    }

    /// Degree slices `0..=max_degree`, all retained, default point cap.
    ///
    /// Fails with the completed prefix reported when a slice would exceed
    /// the cap.
    pub fn degree_slices(&self, max_degree: usize) -> Result<PackedSlices> {
        let slices = self.degree_slices_with(max_degree, DEFAULT_SLICE_CAP, None)?;
        if slices.completed() < max_degree {
            return Err(Error::PointCapExceeded {
                cap: DEFAULT_SLICE_CAP,
                degree: slices.completed() + 1,
                completed: slices.completed(),
            });
        }
        Ok(slices)
    }

    /// Degree slices with an explicit point cap and retention bound.
    ///
    /// Slices of degree above `retain_up_to` are counted but dropped to
    /// bound memory once they stop being the merge frontier, so the last
    /// computed slice always stays available (`None` retains everything).
    /// Hitting the cap is not an error here: the result reports the
    /// completed prefix.
    pub fn degree_slices_with(
        &self,
        max_degree: usize,
        cap: usize,
        retain_up_to: Option<usize>,
    ) -> Result<PackedSlices> {
        run_slice_dp(&self.generators, max_degree, cap, retain_up_to)
    }

    /// The join of two monoids: generators `(a_i, 0, 0)` and
    /// `(0, b_j, 1)` in the summed ambient space plus a marker
    /// coordinate.
    pub fn join(&self, other: &AffineMonoid) -> Result<AffineMonoid> {
        let (d1, d2) = (self.ambient_dim, other.ambient_dim);
        let mut gens = Vec::with_capacity(self.generators.len() + other.generators.len());
        for a in &self.generators {
            let mut v = a.clone();
            v.extend(std::iter::repeat_n(0, d2 + 1));
            gens.push(v);
        }
        for b in &other.generators {
            let mut v = vec![0; d1];
            v.extend_from_slice(b);
            v.push(1);
            gens.push(v);
        }
        AffineMonoid::new(&gens)
    }

    /// The degree-1 cross-section polytope, carrying the group lattice.
    pub fn cross_section(&self) -> Result<LatticePolytope> {
        LatticePolytope::new(&self.generators, Some(self.group_lattice.clone()))
    }
}

/// Drops every generator that is a sum of two or more generators.
fn minimal_generators(gens: &[Vec<i64>], cone: &RationalCone) -> Vec<Vec<i64>> {
    let monoid_member = |v: &[i64]| -> bool {
        fn rec(
            v: Vec<i64>,
            gens: &[Vec<i64>],
            cone: &RationalCone,
            memo: &mut HashMap<Vec<i64>, bool>,
        ) -> bool {
            if v.iter().all(|&x| x == 0) {
                return true;
            }
            if !cone.contains(&v) {
                return false;
            }
            if let Some(&hit) = memo.get(&v) {
                return hit;
            }
            let mut found = false;
            for g in gens {
                let rest: Vec<i64> = v.iter().zip(g).map(|(&a, &b)| a - b).collect();
                if rec(rest, gens, cone, memo) {
                    found = true;
                    break;
                }
            }
            memo.insert(v, found);
            found
        }
        let mut memo = HashMap::new();
        rec(v.to_vec(), gens, cone, &mut memo)
    };

    gens.iter()
        .filter(|g| {
            // g is redundant iff g - h is a nonzero monoid element for
            // some generator h.
            !gens.iter().any(|h| {
                let rest: Vec<i64> = g.iter().zip(h.iter()).map(|(&a, &b)| a - b).collect();
                rest.iter().any(|&x| x != 0) && monoid_member(&rest)
            })
        })
        .cloned()
        .collect()
}

/// Finds the functional giving every generator the same positive degree,
/// normalized primitive.
fn solve_grading(gens: &[Vec<i64>]) -> Result<Grading> {
    let dim = gens[0].len();
    let g0 = &gens[0];
    let candidate: Vec<i64> = if gens.len() == 1 {
        g0.clone()
    } else {
        let diffs: Vec<Vec<BigInt>> = gens[1..]
            .iter()
            .map(|g| {
                g.iter()
                    .zip(g0)
                    .map(|(&a, &b)| BigInt::from(a - b))
                    .collect()
            })
            .collect();
        let kernel = right_kernel(&IntMatrix::from_rows(&diffs)?);
        let row = (0..kernel.rows()).find(|&i| {
            let v: BigInt = (0..dim).map(|j| kernel.get(i, j) * g0[j]).sum();
            v != BigInt::from(0)
        });
        let Some(row) = row else {
            return Err(Error::NotHomogeneous);
        };
        (0..dim)
            .map(|j| kernel.get(row, j).to_i64().ok_or(Error::CoordinateOverflow))
            .collect::<Result<_>>()?
    };

    let mut weights = candidate;
    let mut scale: i64 = weights
        .iter()
        .zip(g0)
        .map(|(&w, &v)| w as i128 * v as i128)
        .sum::<i128>()
        .try_into()
        .map_err(|_| Error::CoordinateOverflow)?;
    if scale == 0 {
        return Err(Error::NotHomogeneous);
    }
    if scale < 0 {
        for w in &mut weights {
            *w = -*w;
        }
        scale = -scale;
    }
    let mut g = scale;
    for &w in &weights {
        g = gcd64(g, w.abs());
    }
    if g > 1 {
        for w in &mut weights {
            *w /= g;
        }
        scale /= g;
    }
    let grading = Grading { weights, scale };
    if gens.iter().any(|gen| grading.degree_of(gen) != Some(1)) {
        return Err(Error::NotHomogeneous);
    }
    Ok(grading)
}

fn gcd64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Fixed-width bit packing of box points into `u128`, coordinate 0 most
/// significant so numeric order is lexicographic order.
#[derive(Debug, Clone)]
struct Codec {
    lo: Vec<i64>,
    shift: Vec<u32>,
    bits: Vec<u32>,
}

impl Codec {
    fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Codec> {
        let widths: Vec<u64> = lo
            .iter()
            .zip(&hi)
            .map(|(&l, &h)| (h - l) as u64)
            .collect();
        let bits: Vec<u32> = widths
            .iter()
            .map(|&w| u64::BITS - w.leading_zeros())
            .collect();
        let total: u32 = bits.iter().sum();
        if total > 127 {
            return Err(Error::CoordinateOverflow);
        }
        let mut shift = vec![0u32; lo.len()];
        let mut acc = total;
        for (j, &b) in bits.iter().enumerate() {
            acc -= b;
            shift[j] = acc;
        }
        Ok(Codec { lo, shift, bits })
    }

    fn pack(&self, x: &[i64]) -> u128 {
        let mut v: u128 = 0;
        for (j, &xj) in x.iter().enumerate() {
            v |= (((xj - self.lo[j]) as u64) as u128) << self.shift[j];
        }
        v
    }

    fn unpack(&self, v: u128) -> Vec<i64> {
        (0..self.lo.len())
            .map(|j| {
                let mask = (1u128 << self.bits[j]) - 1;
                ((v >> self.shift[j]) & mask) as i64 + self.lo[j]
            })
            .collect()
    }

    /// Two's-complement packed delta of adding `g`, valid modulo 2^128.
    fn raw_delta(&self, g: &[i64]) -> u128 {
        let mut v: u128 = 0;
        for (j, &gj) in g.iter().enumerate() {
            v = v.wrapping_add(((gj as i128) as u128).wrapping_shl(self.shift[j]));
        }
        v
    }
}

/// Degree slices of a monoid in packed form.
#[derive(Debug, Clone)]
pub struct PackedSlices {
    codec: Codec,
    per_degree: Vec<Option<Vec<u128>>>,
    counts: Vec<BigInt>,
    cap_hit: Option<usize>,
}

impl PackedSlices {
    /// Largest degree whose slice was fully computed.
    pub fn completed(&self) -> usize {
        self.counts.len() - 1
    }

    /// The cap that stopped the computation, if any.
    pub fn cap_hit(&self) -> Option<usize> {
        self.cap_hit
    }

    /// Exact counts for degrees `0..=completed`.
    pub fn graded_count(&self) -> GradedCount {
        GradedCount {
            counts: self.counts.clone(),
            verified_degree: self.completed(),
        }
    }

    /// The points of a slice, if that degree was computed and retained.
    pub fn points(&self, degree: usize) -> Option<Vec<Vec<i64>>> {
        let packed = self.per_degree.get(degree)?.as_ref()?;
        Some(packed.iter().map(|&v| self.codec.unpack(v)).collect())
    }

    /// Membership in a retained slice; `None` when the slice is absent.
    pub fn slice_contains(&self, degree: usize, x: &[i64]) -> Option<bool> {
        let packed = self.per_degree.get(degree)?.as_ref()?;
        for (j, (&v, &l)) in x.iter().zip(&self.codec.lo).enumerate() {
            let width = (1u128 << self.codec.bits[j]) as i128;
            if (v as i128) < l as i128 || (v as i128) >= l as i128 + width {
                return Some(false);
            }
        }
        Some(packed.binary_search(&self.codec.pack(x)).is_ok())
    }

    /// Number of points in the degree-`n` slice, when it fits `usize`.
    pub(crate) fn slice_len(&self, degree: usize) -> Option<usize> {
        self.per_degree
            .get(degree)?
            .as_ref()
            .map(|packed| packed.len())
    }

    /// Unpacks the point at `index` within the degree-`degree` slice.
    ///
    /// Panics if the slice was dropped by retention.
    pub(crate) fn point_at(&self, degree: usize, index: usize) -> Vec<i64> {
        let packed = self.per_degree[degree]
            .as_ref()
            .expect("slice is retained");
        self.codec.unpack(packed[index])
    }

    /// Marks every point of the `target_degree` slice that equals a
    /// `source_degree` point plus `shift`, OR-ing into `hits` (indexed
    /// like the target slice). Both slices must be retained, and every
    /// shifted source point must itself lie in the target slice.
    pub(crate) fn mark_shifted(
        &self,
        source_degree: usize,
        target_degree: usize,
        shift: &[i64],
        hits: &mut [bool],
    ) {
        let source = self.per_degree[source_degree]
            .as_ref()
            .expect("source slice is retained");
        let target = self.per_degree[target_degree]
            .as_ref()
            .expect("target slice is retained");
        let delta = self.codec.raw_delta(shift);
        let mut j = 0usize;
        for &s in source {
            let v = s.wrapping_add(delta);
            while j < target.len() && target[j] < v {
                j += 1;
            }
            debug_assert!(j < target.len() && target[j] == v);
            if j < target.len() && target[j] == v {
                hits[j] = true;
                j += 1;
            }
        }
    }
}

/// Incremental builder for [`PackedSlices`] fed by an external
/// enumerator, degree 0 first, applying the same retention rule as the
/// slice DP: slices above `retain_up_to` are dropped once they are no
/// longer the latest, so the final slice always stays.
pub(crate) struct SliceBuilder {
    codec: Codec,
    per_degree: Vec<Option<Vec<u128>>>,
    counts: Vec<BigInt>,
    retain: usize,
}

impl SliceBuilder {
    pub(crate) fn new(
        gens: &[Vec<i64>],
        max_degree: usize,
        retain_up_to: Option<usize>,
    ) -> Result<SliceBuilder> {
        let (lo, hi) = degree_box(gens, max_degree)?;
        Ok(SliceBuilder {
            codec: Codec::new(lo, hi)?,
            per_degree: Vec::with_capacity(max_degree + 1),
            counts: Vec::with_capacity(max_degree + 1),
            retain: retain_up_to.unwrap_or(max_degree),
        })
    }

    /// Packs one point of the slice currently being assembled.
    pub(crate) fn pack(&self, x: &[i64]) -> u128 {
        self.codec.pack(x)
    }

    /// Appends the next degree's packed points (any order; sorted here).
    pub(crate) fn push(&mut self, mut packed: Vec<u128>) {
        packed.sort_unstable();
        let n = self.per_degree.len();
        if n > 0 && n - 1 > self.retain {
            self.per_degree[n - 1] = None;
        }
        self.counts.push(BigInt::from(packed.len()));
        self.per_degree.push(Some(packed));
    }

    pub(crate) fn finish(self, cap_hit: Option<usize>) -> PackedSlices {
        PackedSlices {
            codec: self.codec,
            per_degree: self.per_degree,
            counts: self.counts,
            cap_hit,
        }
    }
}

/// Coordinate box guaranteed to contain every cone point of degree up to
/// `max_degree`: such a point is a convex combination of scaled
/// generators.
pub(crate) fn degree_box(gens: &[Vec<i64>], max_degree: usize) -> Result<(Vec<i64>, Vec<i64>)> {
    let dim = gens[0].len();
    let deg = i64::try_from(max_degree).map_err(|_| Error::CoordinateOverflow)?;
    let mut lo = vec![0i64; dim];
    let mut hi = vec![0i64; dim];
    for g in gens {
        for j in 0..dim {
            lo[j] = lo[j].min(g[j].checked_mul(deg).ok_or(Error::CoordinateOverflow)?);
            hi[j] = hi[j].max(g[j].checked_mul(deg).ok_or(Error::CoordinateOverflow)?);
        }
    }
    Ok((lo, hi))
}

fn run_slice_dp(
    gens: &[Vec<i64>],
    max_degree: usize,
    cap: usize,
    retain_up_to: Option<usize>,
) -> Result<PackedSlices> {
    let dim = gens[0].len();
    let (lo, hi) = degree_box(gens, max_degree)?;
    let codec = Codec::new(lo, hi)?;
    let deltas: Vec<u128> = gens.iter().map(|g| codec.raw_delta(g)).collect();
    let retain = retain_up_to.unwrap_or(max_degree);

    let mut per_degree: Vec<Option<Vec<u128>>> = vec![Some(vec![codec.pack(&vec![0; dim])])];
    let mut counts = vec![BigInt::from(1)];
    let mut cap_hit = None;
    let mut frontier_at = 0usize;

    for n in 1..=max_degree {
        let prev = per_degree[n - 1]
            .as_ref()
            .expect("previous frontier is always retained during the sweep");
        let mut cursors = vec![0usize; deltas.len()];
        let mut out: Vec<u128> = Vec::new();
        let mut overflow = false;
        'merge: loop {
            let mut best: Option<u128> = None;
            for (i, &c) in cursors.iter().enumerate() {
                if c < prev.len() {
                    let v = prev[c].wrapping_add(deltas[i]);
                    best = Some(best.map_or(v, |b: u128| b.min(v)));
                }
            }
            let Some(v) = best else { break 'merge };
            if out.last() != Some(&v) {
                if out.len() == cap {
                    overflow = true;
                    break 'merge;
                }
                out.push(v);
            }
            for (i, c) in cursors.iter_mut().enumerate() {
                if *c < prev.len() && prev[*c].wrapping_add(deltas[i]) == v {
                    *c += 1;
                }
            }
        }
        if overflow {
            cap_hit = Some(n);
            break;
        }
        counts.push(BigInt::from(out.len()));
        per_degree.push(Some(out));
        if frontier_at > retain {
            per_degree[frontier_at] = None;
        }
        frontier_at = n;
    }
    per_degree.truncate(counts.len());

    Ok(PackedSlices {
        codec,
        per_degree,
        counts,
        cap_hit,
    })
}

/// The named generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyName {
    /// Edge monoid of the two-triangle graph with `k` connecting paths.
    Gk,
    /// The 4-generator plane monoid with parameter `m`.
    Rm,
    /// All degree-`n` monomials in two variables.
    Veronese,
}

/// Builds a named family member.
pub fn make_family(name: FamilyName, parameter: usize) -> Result<AffineMonoid> {
    match name {
        FamilyName::Gk => gk(parameter),
        FamilyName::Rm => rm(parameter),
        FamilyName::Veronese => veronese(parameter),
    }
}

/// Edge monoid of the graph joining two triangles through `k` paths.
pub fn gk(k: usize) -> Result<AffineMonoid> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            family: "gk",
            parameter: k,
        });
    }
    let graph = graphs::gk_graph(k);
    graphs::edge_monoid(&graph)
}

/// The monoid `<(0, 2m+3), (m+1, m+2), (m+2, m+1), (2m+3, 0)>`.
pub fn rm(m: usize) -> Result<AffineMonoid> {
    let m = i64::try_from(m).map_err(|_| Error::CoordinateOverflow)?;
    let t = 2 * m + 3;
    AffineMonoid::new(&[
        vec![0, t],
        vec![m + 1, m + 2],
        vec![m + 2, m + 1],
        vec![t, 0],
    ])
}

/// All exponent vectors of degree-`n` monomials in two variables.
pub fn veronese(n: usize) -> Result<AffineMonoid> {
    if n == 0 {
        return Err(Error::InvalidParameter {
            family: "veronese",
            parameter: n,
        });
    }
    let n = i64::try_from(n).map_err(|_| Error::CoordinateOverflow)?;
    let gens: Vec<Vec<i64>> = (0..=n).map(|i| vec![i, n - i]).collect();
    AffineMonoid::new(&gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn one_dimensional_monoid() {
        let q = AffineMonoid::new(&v(&[&[1]])).unwrap();
        assert_eq!(q.dim(), 1);
        let slices = q.degree_slices(5).unwrap();
        let ones: Vec<BigInt> = (0..6).map(|_| BigInt::from(1)).collect();
        assert_eq!(slices.graded_count().counts, ones);
    }

    #[test]
    fn redundant_generator_is_dropped() {
        let q = AffineMonoid::new(&v(&[&[0, 5], &[2, 3], &[3, 2], &[5, 0], &[5, 5]])).unwrap();
        assert_eq!(
            q.generators(),
            &[vec![0, 5], vec![2, 3], vec![3, 2], vec![5, 0]]
        );
        assert_eq!(q.dim(), 2);
    }

    #[test]
    fn grading_rescales_to_common_degree() {
        let q = AffineMonoid::new(&v(&[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!(q.grading().weights(), &[2, 1]);
        assert_eq!(q.grading().scale(), 2);
        assert_eq!(q.degree_of(&[1, 0]), Some(1));
        assert_eq!(q.degree_of(&[0, 2]), Some(1));
        assert_eq!(q.degree_of(&[0, 1]), None);
    }

    #[test]
    fn inhomogeneous_generators_are_rejected() {
        // No functional gives (2,0), (1,1), (0,3) a common positive value,
        // and none of the three decomposes over the others.
        let err = AffineMonoid::new(&v(&[&[2, 0], &[1, 1], &[0, 3]])).unwrap_err();
        assert!(matches!(err, Error::NotHomogeneous));
    }

    #[test]
    fn scaled_duplicates_minimalize_to_a_homogeneous_system() {
        let q = AffineMonoid::new(&v(&[&[1, 0], &[2, 0]])).unwrap();
        assert_eq!(q.generators(), &[vec![1, 0]]);
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn non_pointed_input_is_rejected() {
        let err = AffineMonoid::new(&v(&[&[1], &[-1]])).unwrap_err();
        assert!(matches!(err, Error::NotPointed { .. }));
    }

    #[test]
    fn rm1_slice_counts_and_points() {
        // Reference values from tools/oracles/brute.py.
        let q = rm(1).unwrap();
        let slices = q.degree_slices(4).unwrap();
        let want: Vec<BigInt> = [1, 4, 9, 14, 19].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(slices.graded_count().counts, want);
        let mut slice2 = slices.points(2).unwrap();
        slice2.sort();
        assert_eq!(
            slice2,
            v(&[
                &[0, 10],
                &[2, 8],
                &[3, 7],
                &[4, 6],
                &[5, 5],
                &[6, 4],
                &[7, 3],
                &[8, 2],
                &[10, 0]
            ])
        );
    }

    #[test]
    fn membership_by_decomposition() {
        let q = rm(1).unwrap();
        assert!(q.contains(&[5, 5]));
        assert!(!q.contains(&[1, 4]));
        assert!(q.contains(&[0, 0]));
        assert!(!q.contains(&[-2, -3]));
    }

    #[test]
    fn slice_membership_queries() {
        let q = rm(1).unwrap();
        let slices = q.degree_slices(3).unwrap();
        assert_eq!(slices.slice_contains(1, &[2, 3]), Some(true));
        assert_eq!(slices.slice_contains(1, &[1, 4]), Some(false));
        assert_eq!(slices.slice_contains(2, &[5, 5]), Some(true));
        assert_eq!(slices.slice_contains(9, &[5, 5]), None);
    }

    #[test]
    fn retention_drops_low_slices_but_keeps_counts() {
        let q = rm(1).unwrap();
        let slices = q.degree_slices_with(4, DEFAULT_SLICE_CAP, Some(2)).unwrap();
        assert_eq!(slices.completed(), 4);
        assert!(slices.points(2).is_some());
        assert!(slices.points(3).is_none());
        assert!(slices.points(4).is_some(), "frontier slice is retained");
        assert_eq!(slices.graded_count().counts.len(), 5);
    }

    #[test]
    fn point_cap_reports_completed_prefix() {
        let q = rm(1).unwrap();
        let partial = q.degree_slices_with(4, 10, None).unwrap();
        assert_eq!(partial.completed(), 2);
        assert_eq!(partial.cap_hit(), Some(3));
        let err = AffineMonoid::degree_slices(&q, 4);
        assert!(err.is_ok(), "default cap is far above these sizes");
    }

    #[test]
    fn join_of_two_lines() {
        let z = AffineMonoid::new(&v(&[&[1]])).unwrap();
        let j = z.join(&z).unwrap();
        assert_eq!(j.generators(), &[vec![1, 0, 0], vec![0, 1, 1]]);
        assert_eq!(j.dim(), 2);
        let counts = j.degree_slices(3).unwrap().graded_count().counts;
        let want: Vec<BigInt> = [1, 2, 3, 4].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(counts, want);
    }

    #[test]
    fn join_dimension_is_additive() {
        // The join's Hilbert series is the product of the factors', so its
        // pole order at t = 1 (the dimension) adds.
        let a = rm(0).unwrap();
        let b = veronese(2).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.dim(), a.dim() + b.dim());
        assert_eq!(
            j.generators().len(),
            a.generators().len() + b.generators().len()
        );
    }

    #[test]
    fn families_match_their_definitions() {
        assert_eq!(
            rm(1).unwrap().generators(),
            &[vec![0, 5], vec![2, 3], vec![3, 2], vec![5, 0]]
        );
        assert_eq!(
            veronese(3).unwrap().generators(),
            rm(0).unwrap().generators()
        );
        assert_eq!(
            veronese(1).unwrap().generators(),
            &[vec![0, 1], vec![1, 0]]
        );
        assert!(matches!(
            gk(0),
            Err(Error::InvalidParameter { family: "gk", .. })
        ));
        assert!(matches!(
            make_family(FamilyName::Veronese, 0),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn gk_graph_edge_monoid_shape() {
        let q = gk(2).unwrap();
        assert_eq!(q.ambient_dim(), 10);
        assert_eq!(q.generators().len(), 14);
        assert_eq!(q.dim(), 10);
        let q1 = gk(1).unwrap();
        assert_eq!(q1.ambient_dim(), 8);
        assert_eq!(q1.generators().len(), 10);
        assert_eq!(q1.dim(), 8);
    }

    #[test]
    fn slices_are_closed_under_addition() {
        let q = veronese(2).unwrap();
        let slices = q.degree_slices(4).unwrap();
        let s1 = slices.points(1).unwrap();
        let s2 = slices.points(2).unwrap();
        for a in &s1 {
            for b in &s2 {
                let sum: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x + y).collect();
                assert_eq!(slices.slice_contains(3, &sum), Some(true));
            }
        }
    }

    #[test]
    fn cross_section_counts_normalization_slices() {
        let q = rm(1).unwrap();
        let p = q.cross_section().unwrap();
        let counts: Vec<BigInt> = (0..=4).map(|l| p.dilation_count(l, false).unwrap()).collect();
        let want: Vec<BigInt> = [1, 6, 11, 16, 21].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(counts, want);
    }
}
