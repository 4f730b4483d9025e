//! Rational polyhedral cones, their facets and faces, and lattice
//! polytopes with dilation lattice-point enumeration.
//!
//! Facets are computed by the double description method run in coordinates
//! on the linear span of the generators: the facet normals of the cone are
//! exactly the extreme rays of the dual cone `{a : a . g >= 0}` there,
//! built by inserting one generator constraint at a time starting from a
//! simplicial subcone (dual rays read off the adjugate of an independent
//! generator subset). Adjacency of dual rays uses the combinatorial test
//! on tight generator sets. Normals are pulled back to the ambient space
//! through the saturated span basis and canonicalized modulo the span's
//! equation lattice, so the facet list is deterministic.
//!
//! Faces are enumerated top-down: starting from the whole cone, each step
//! adds one facet tight on the query points and closes the tight set. The
//! enumeration therefore covers exactly the faces containing the query,
//! and the whole face lattice when the query is empty.
//!
//! Lattice polytopes are handled through the cone over `P x {1}`: dilation
//! points of `ell * P` are the solutions of the lifted facet system on the
//! height-`ell` slice, enumerated by the box scanner in a chosen ambient
//! lattice.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    adjugate, hnf, rank_of, right_kernel, solve_left, IntMatrix, Lattice,
};
use crate::scan::{ScanConstraint, ScanProblem};

/// Default cap on face-lattice enumeration.
pub const DEFAULT_FACE_CAP: usize = 10_000;

/// A pointed rational polyhedral cone with computed facet description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    ambient_dim: usize,
    generators: Vec<Vec<i64>>,
    /// Functionals vanishing on the span (lower-left Hermite rows).
    equations: Vec<Vec<i64>>,
    /// Primitive inner facet normals, canonical modulo the equations,
    /// sorted lexicographically.
    facets: Vec<Vec<i64>>,
    /// Saturated row basis of the generator span.
    span_basis: Vec<Vec<i64>>,
}

/// A face of a cone: the intersection with a set of facet hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Indices of every facet vanishing on the face.
    pub defining_facets: Vec<usize>,
    /// Indices of the cone generators lying on the face.
    pub generator_indices: Vec<usize>,
    /// Dimension of the face.
    pub dim: usize,
    /// Group generated by the lattice points of the face that are cone
    /// generators (not saturated).
    pub lattice: Lattice,
}

/// Builds the facet description of the cone spanned by the generators.
pub fn facets_of(generators: &[Vec<i64>]) -> Result<RationalCone> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let dim = generators[0].len();
    if dim == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    let mut gens: Vec<Vec<i64>> = Vec::new();
    let mut seen = HashSet::new();
    for (index, g) in generators.iter().enumerate() {
        if g.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: g.len(),
            });
        }
        if g.iter().all(|&v| v == 0) {
            return Err(Error::ZeroGenerator { index });
        }
        if seen.insert(g.clone()) {
            gens.push(g.clone());
        }
    }

    let gens_big = IntMatrix::from_rows(
        &gens
            .iter()
            .map(|g| g.iter().map(|&v| BigInt::from(v)).collect())
            .collect::<Vec<_>>(),
    )?;
    let equations_big = right_kernel(&gens_big);
    let rank = dim - equations_big.rows();

    let (span_big, gen_coords) = if equations_big.rows() == 0 {
        (IntMatrix::identity(dim), gens_big.to_row_vecs())
    } else {
        let basis = right_kernel(&equations_big);
        let coords = (0..gens_big.rows())
            .map(|i| {
                solve_left(&basis, gens_big.row(i))
                    .expect("saturated span basis reaches every generator")
            })
            .collect();
        (basis, coords)
    };

    let dual_rays = dual_extreme_rays(&gen_coords, rank)?;

    let ray_mat = IntMatrix::from_rows(&dual_rays)?;
    if rank_of(&ray_mat) < rank {
        let witness_coords = if dual_rays.is_empty() {
            span_big.row(0).to_vec()
        } else {
            let kernel = right_kernel(&ray_mat);
            let mut w = vec![BigInt::zero(); dim];
            for (j, item) in w.iter_mut().enumerate() {
                for k in 0..rank {
                    *item += kernel.get(0, k) * span_big.get(k, j);
                }
            }
            w
        };
        let witness: Vec<i64> = witness_coords
            .iter()
            .map(|v| v.to_i64().ok_or(Error::CoordinateOverflow))
            .collect::<Result<_>>()?;
        return Err(Error::NotPointed { witness });
    }

    // Pull each span-coordinate normal back to the ambient space and
    // canonicalize it modulo the equation lattice.
    let span_t = span_big.transpose();
    let (eq_hnf, eq_rank) = hnf(&equations_big);
    let mut facets: Vec<Vec<i64>> = Vec::with_capacity(dual_rays.len());
    for a in &dual_rays {
        let mut f = solve_left(&span_t, a).expect("saturated span basis admits integral pullback");
        for i in (0..eq_rank).rev() {
            let c = (0..dim)
                .rev()
                .find(|&c| !eq_hnf.get(i, c).is_zero())
                .expect("equation rows are nonzero");
            let q = f[c].div_floor(eq_hnf.get(i, c));
            if !q.is_zero() {
                for (j, fj) in f.iter_mut().enumerate() {
                    let v = fj.clone() - q.clone() * eq_hnf.get(i, j).clone();
                    *fj = v;
                }
            }
        }
        facets.push(
            f.iter()
                .map(|v| v.to_i64().ok_or(Error::CoordinateOverflow))
                .collect::<Result<_>>()?,
        );
    }
    facets.sort();
    facets.dedup();

    let equations = equations_big.narrow_to_i64()?.to_row_vecs();
    let span_basis = span_big.narrow_to_i64()?.to_row_vecs();
    let cone = RationalCone {
        ambient_dim: dim,
        generators: gens,
        equations,
        facets,
        span_basis,
    };
    debug_assert!(cone.generators.iter().all(|g| cone.contains(g)));
    Ok(cone)
}

/// Extreme rays of `{a : a . c >= 0 for all constraint rows c}`, where the
/// constraints have full rank in dimension `rank`.
fn dual_extreme_rays(constraints: &[Vec<BigInt>], rank: usize) -> Result<Vec<Vec<BigInt>>> {
    let m = constraints.len();
    if m > 128 {
        return Err(Error::TooManyGenerators { limit: 128 });
    }

    // Greedy independent subset for the initial simplicial dual cone.
    let mut sel: Vec<usize> = Vec::new();
    let mut sel_rows: Vec<Vec<BigInt>> = Vec::new();
    for (j, c) in constraints.iter().enumerate() {
        if sel.len() == rank {
            break;
        }
        sel_rows.push(c.clone());
        if rank_of(&IntMatrix::from_rows(&sel_rows)?) == sel_rows.len() {
            sel.push(j);
        } else {
            sel_rows.pop();
        }
    }
    assert_eq!(sel.len(), rank, "constraints must span the dual space");

    let (det, adj) = adjugate(&IntMatrix::from_rows(&sel_rows)?);
    let flip = det.is_negative();
    struct Ray {
        coords: Vec<BigInt>,
        tight: u128,
    }
    let mut rays: Vec<Ray> = (0..rank)
        .map(|i| {
            let mut coords: Vec<BigInt> = (0..rank).map(|j| adj.get(j, i).clone()).collect();
            if flip {
                for v in &mut coords {
                    *v = -v.clone();
                }
            }
            primitivize(&mut coords);
            Ray { coords, tight: 0 }
        })
        .collect();

    let mut processed: Vec<usize> = sel.clone();
    for ray in &mut rays {
        for &j in &sel {
            if dot_big(&ray.coords, &constraints[j]).is_zero() {
                ray.tight |= 1 << j;
            }
        }
    }

    for (j, cons) in constraints.iter().enumerate() {
        if sel.contains(&j) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot_big(&r.coords, cons)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (ray, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    ray.tight |= 1 << j;
                }
            }
            processed.push(j);
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();

        let mut new_coords: Vec<Vec<BigInt>> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let t = rays[p].tight & rays[n].tight;
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, rk)| k == p || k == n || (rk.tight & t) != t);
                if !adjacent {
                    continue;
                }
                let mut w: Vec<BigInt> = (0..rank)
                    .map(|c| {
                        vals[p].clone() * rays[n].coords[c].clone()
                            - vals[n].clone() * rays[p].coords[c].clone()
                    })
                    .collect();
                debug_assert!(w.iter().any(|v| !v.is_zero()));
                primitivize(&mut w);
                new_coords.push(w);
            }
        }
        new_coords.sort();
        new_coords.dedup();

        processed.push(j);
        let mut next: Vec<Ray> = Vec::new();
        for (i, ray) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            let mut ray = ray;
            if vals[i].is_zero() {
                ray.tight |= 1 << j;
            }
            next.push(ray);
        }
        for coords in new_coords {
            if next.iter().any(|r| r.coords == coords) {
                continue;
            }
            let mut tight = 0u128;
            for &jj in &processed {
                if dot_big(&coords, &constraints[jj]).is_zero() {
                    tight |= 1 << jj;
                }
            }
            next.push(Ray { coords, tight });
        }
        rays = next;
    }

    Ok(rays.into_iter().map(|r| r.coords).collect())
}

fn primitivize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g > BigInt::from(1) {
        for x in v.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
}

fn dot_big(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact dot product of `i64` vectors, widened to `i128`.
pub(crate) fn dot_i128(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

impl RationalCone {
    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the cone (rank of the generator span).
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.equations.len()
    }

    /// Deduplicated generators, in input order.
    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Primitive inner facet normals, sorted.
    pub fn facets(&self) -> &[Vec<i64>] {
        &self.facets
    }

    /// Functionals vanishing on the cone's span.
    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    /// Saturated row basis of the cone's span.
    pub fn span_basis(&self) -> &[Vec<i64>] {
        &self.span_basis
    }

    /// Whether the point lies in the cone.
    pub fn contains(&self, x: &[i64]) -> bool {
        self.equations.iter().all(|e| dot_i128(e, x) == 0)
            && self.facets.iter().all(|f| dot_i128(f, x) >= 0)
    }

    /// Whether the point lies in the relative interior of the cone.
    pub fn contains_in_relative_interior(&self, x: &[i64]) -> bool {
        self.equations.iter().all(|e| dot_i128(e, x) == 0)
            && self.facets.iter().all(|f| dot_i128(f, x) > 0)
    }

    /// Indices of the facets vanishing at `x`.
    pub fn tight_facets(&self, x: &[i64]) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| dot_i128(&self.facets[i], x) == 0)
            .collect()
    }

    /// Faces of the cone containing every query point, up to `cap` faces.
    ///
    /// An empty query yields the full face lattice. Points outside the
    /// cone are contained in no face, so any such point gives an empty
    /// answer.
    pub fn faces_containing(&self, points: &[Vec<i64>], cap: usize) -> Result<Vec<Face>> {
        if points.iter().any(|p| !self.contains(p)) {
            return Ok(Vec::new());
        }
        // Facets a face may use: those tight on every query point.
        let allowed: Vec<usize> = (0..self.facets.len())
            .filter(|&i| points.iter().all(|p| dot_i128(&self.facets[i], p) == 0))
            .collect();

        let closure = |s: &[usize]| -> (Vec<usize>, Vec<usize>) {
            let gens: Vec<usize> = (0..self.generators.len())
                .filter(|&g| {
                    s.iter()
                        .all(|&i| dot_i128(&self.facets[i], &self.generators[g]) == 0)
                })
                .collect();
            let tight: Vec<usize> = (0..self.facets.len())
                .filter(|&i| {
                    gens.iter()
                        .all(|&g| dot_i128(&self.facets[i], &self.generators[g]) == 0)
                })
                .collect();
            (tight, gens)
        };

        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        let (top, _) = closure(&[]);
        seen.insert(top.clone());
        queue.push_back(top);
        let mut faces = Vec::new();
        while let Some(s) = queue.pop_front() {
            let (tight, gens) = closure(&s);
            let rows: Vec<Vec<i64>> = gens.iter().map(|&g| self.generators[g].clone()).collect();
            let lattice = Lattice::from_rows(self.ambient_dim, &rows)?;
            faces.push(Face {
                defining_facets: tight.clone(),
                generator_indices: gens,
                dim: lattice.rank(),
                lattice,
            });
            for &i in &allowed {
                if tight.contains(&i) {
                    continue;
                }
                let mut grown = tight.clone();
                grown.push(i);
                grown.sort_unstable();
                let (next, _) = closure(&grown);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::FaceCapExceeded { cap });
                    }
                    queue.push_back(next);
                }
            }
        }
        faces.sort_by(|a, b| {
            (a.dim, &a.generator_indices, &a.defining_facets).cmp(&(
                b.dim,
                &b.generator_indices,
                &b.defining_facets,
            ))
        });
        Ok(faces)
    }

    /// The whole face lattice, up to `cap` faces.
    pub fn full_face_lattice(&self, cap: usize) -> Result<Vec<Face>> {
        self.faces_containing(&[], cap)
    }
}

/// A polytope with lattice-point structure: convex hull of lattice points,
/// with dilations counted against a chosen ambient lattice.
#[derive(Debug, Clone)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<i64>>,
    lattice: Lattice,
    lifted: RationalCone,
}

impl LatticePolytope {
    /// Convex hull of the given points, counted against `lattice`
    /// (the full lattice when `None`). Non-vertex points are dropped.
    pub fn new(points: &[Vec<i64>], lattice: Option<Lattice>) -> Result<LatticePolytope> {
        if points.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let dim = points[0].len();
        let lattice = lattice.unwrap_or_else(|| Lattice::full(dim));
        if lattice.ambient_dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: lattice.ambient_dim(),
            });
        }
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if !lattice.member(p) {
                return Err(Error::VertexOutsideLattice { index });
            }
        }
        let lifted_gens: Vec<Vec<i64>> = points
            .iter()
            .map(|p| {
                let mut v = p.clone();
                v.push(1);
                v
            })
            .collect();
        let lifted = facets_of(&lifted_gens)?;

        // A listed point is a vertex exactly when the facets tight at it
        // pin down no other listed point.
        let mut vertices: Vec<Vec<i64>> = Vec::new();
        for p in lifted.generators() {
            let tight = lifted.tight_facets(p);
            let pinned: Vec<&Vec<i64>> = lifted
                .generators()
                .iter()
                .filter(|q| {
                    tight
                        .iter()
                        .all(|&i| dot_i128(&lifted.facets()[i], q) == 0)
                })
                .collect();
            if pinned.len() == 1 {
                vertices.push(p[..dim].to_vec());
            }
        }
        Ok(LatticePolytope {
            ambient_dim: dim,
            vertices,
            lattice,
            lifted,
        })
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The irredundant vertex list.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Dimension of the polytope.
    pub fn dim(&self) -> usize {
        self.lifted.dim() - 1
    }

    fn dilation_problem(&self, ell: usize, interior_only: bool) -> Result<ScanProblem> {
        let d = self.ambient_dim;
        let ell_i = i64::try_from(ell).map_err(|_| Error::CoordinateOverflow)?;
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        for v in &self.vertices {
            for j in 0..d {
                let scaled = v[j].checked_mul(ell_i).ok_or(Error::CoordinateOverflow)?;
                lo[j] = lo[j].min(scaled);
                hi[j] = hi[j].max(scaled);
            }
        }
        let mut problem = ScanProblem::new(lo, hi);
        for f in self.lifted.facets() {
            let coeffs = f[..d].to_vec();
            let constant = f[d].checked_mul(ell_i).ok_or(Error::CoordinateOverflow)?;
            problem = problem.constraint(if interior_only {
                ScanConstraint::gt(coeffs, constant)
            } else {
                ScanConstraint::ge(coeffs, constant)
            });
        }
        for e in self.lifted.equations() {
            let coeffs = e[..d].to_vec();
            let constant = e[d].checked_mul(ell_i).ok_or(Error::CoordinateOverflow)?;
            problem = problem.constraint(ScanConstraint::eq(coeffs, constant));
        }
        Ok(problem.coset(vec![0; d], self.lattice.clone()))
    }

    /// Lattice points of `ell * P`, or of its relative interior.
    ///
    /// A zero-dimensional polytope is treated as having empty interior,
    /// so interior queries on it return nothing at every dilation.
    pub fn dilation_lattice_points(&self, ell: usize, interior_only: bool) -> Result<Vec<Vec<i64>>> {
        if ell == 0 {
            return Ok(if interior_only {
                Vec::new()
            } else {
                vec![vec![0; self.ambient_dim]]
            });
        }
        if interior_only && self.dim() == 0 {
            return Ok(Vec::new());
        }
        self.dilation_problem(ell, interior_only)?.collect()
    }

    /// Streams the lattice points of `ell * P` (or of its relative
    /// interior) without materializing them.
    pub fn dilation_for_each<F>(&self, ell: usize, interior_only: bool, f: F) -> Result<()>
    where
        F: FnMut(&[i64]),
    {
        let mut f = f;
        if ell == 0 {
            if !interior_only {
                f(&vec![0; self.ambient_dim]);
            }
            return Ok(());
        }
        if interior_only && self.dim() == 0 {
            return Ok(());
        }
        self.dilation_problem(ell, interior_only)?.for_each(f)
    }

    /// Number of lattice points of `ell * P`, or of its relative interior.
    pub fn dilation_count(&self, ell: usize, interior_only: bool) -> Result<BigInt> {
        if ell == 0 {
            return Ok(BigInt::from(if interior_only { 0 } else { 1 }));
        }
        if interior_only && self.dim() == 0 {
            return Ok(BigInt::zero());
        }
        self.dilation_problem(ell, interior_only)?.count()
    }

    /// Smallest `ell` in `1..=cap` whose dilation has an interior lattice
    /// point, or `None` if every one up to the cap is hollow.
    pub fn codegree(&self, cap: usize) -> Result<Option<usize>> {
        for ell in 1..=cap {
            if self.dilation_count(ell, true)? > BigInt::zero() {
                return Ok(Some(ell));
            }
        }
        Ok(None)
    }
}
