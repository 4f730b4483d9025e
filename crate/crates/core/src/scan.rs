//! Enumeration and counting of integer points in a box subject to linear
//! constraints and an optional lattice-coset restriction.
//!
//! A problem is a product box `[lo_j, hi_j]`, a list of constraints
//! `a . x + c {>=, =} 0`, and optionally a coset `q + L` for a lattice `L`.
//! The scanner recurses over coordinates from the last down to the first.
//! At each level it intersects the box edge with exact one-variable bounds
//! derived from every constraint involving that coordinate (using
//! precomputed prefix bounds for the still-free coordinates), and with the
//! arithmetic progression the coset induces on that coordinate.
//!
//! The coset bookkeeping exploits the lower-left Hermite basis of `L`:
//! scanning coordinates in descending order, a basis row's coefficient is
//! determined the moment its pivot column is reached, so columns that are
//! no row's pivot carry a single forced value and pivot columns carry a
//! progression whose step is the pivot entry.
//!
//! At the innermost level every constraint bound is exact, so counting
//! closes the interval-intersect-progression form instead of iterating.
//! All partial sums are audited up front to stay within `i64`.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactlin::Lattice;

/// Comparison sense of a [`ScanConstraint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    /// `coeffs . x + constant >= 0`.
    Ge,
    /// `coeffs . x + constant = 0`.
    Eq,
}

/// Linear constraint `coeffs . x + constant (sense) 0`.
#[derive(Debug, Clone)]
pub struct ScanConstraint {
    coeffs: Vec<i64>,
    constant: i64,
    sense: Sense,
}

impl ScanConstraint {
    /// Constraint `coeffs . x + constant >= 0`.
    pub fn ge(coeffs: Vec<i64>, constant: i64) -> Self {
        ScanConstraint {
            coeffs,
            constant,
            sense: Sense::Ge,
        }
    }

    /// Constraint `coeffs . x + constant > 0`, normalized to `>= 0` form.
    pub fn gt(coeffs: Vec<i64>, constant: i64) -> Self {
        ScanConstraint {
            coeffs,
            constant: constant - 1,
            sense: Sense::Ge,
        }
    }

    /// Constraint `coeffs . x + constant = 0`.
    pub fn eq(coeffs: Vec<i64>, constant: i64) -> Self {
        ScanConstraint {
            coeffs,
            constant,
            sense: Sense::Eq,
        }
    }
}

/// A box-plus-constraints lattice point problem.
#[derive(Debug, Clone)]
pub struct ScanProblem {
    lo: Vec<i64>,
    hi: Vec<i64>,
    constraints: Vec<ScanConstraint>,
    coset: Option<(Vec<i64>, Lattice)>,
}

impl ScanProblem {
    /// Problem over the box `lo_j <= x_j <= hi_j` with no constraints.
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len(), "box bounds must have equal length");
        assert!(!lo.is_empty(), "scan dimension must be positive");
        ScanProblem {
            lo,
            hi,
            constraints: Vec::new(),
            coset: None,
        }
    }

    /// Dimension of the ambient space.
    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    /// Adds a constraint.
    pub fn constraint(mut self, c: ScanConstraint) -> Self {
        assert_eq!(c.coeffs.len(), self.dim(), "constraint dimension mismatch");
        self.constraints.push(c);
        self
    }

    /// Restricts solutions to the coset `offset + lattice`.
    pub fn coset(mut self, offset: Vec<i64>, lattice: Lattice) -> Self {
        assert_eq!(offset.len(), self.dim(), "coset offset dimension mismatch");
        assert_eq!(lattice.ambient_dim(), self.dim(), "coset lattice dimension mismatch");
        self.coset = Some((offset, lattice));
        self
    }

    /// Number of solutions.
    pub fn count(&self) -> Result<BigInt> {
        let mut n: u128 = 0;
        self.run(&mut |_pt| {}, Some(&mut n))?;
        Ok(BigInt::from(n))
    }

    /// All solutions, in lexicographic order of reversed coordinates.
    pub fn collect(&self) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        self.for_each(|pt| out.push(pt.to_vec()))?;
        Ok(out)
    }

    /// Calls `f` once per solution.
    pub fn for_each(&self, mut f: impl FnMut(&[i64])) -> Result<()> {
        self.run(&mut f, None)
    }

    fn run(&self, emit: &mut dyn FnMut(&[i64]), counter: Option<&mut u128>) -> Result<()> {
        let d = self.dim();
        for j in 0..d {
            if self.lo[j] > self.hi[j] {
                return Ok(());
            }
        }
        self.audit()?;

        // Per-constraint prefix bounds over coordinates 0..=c of the
        // minimal and maximal contribution the free coordinates can make.
        let mut prefix_min = Vec::with_capacity(self.constraints.len());
        let mut prefix_max = Vec::with_capacity(self.constraints.len());
        for con in &self.constraints {
            let mut mins = Vec::with_capacity(d);
            let mut maxs = Vec::with_capacity(d);
            let (mut lo_acc, mut hi_acc) = (0i64, 0i64);
            for j in 0..d {
                let a = con.coeffs[j];
                lo_acc += (a * self.lo[j]).min(a * self.hi[j]);
                hi_acc += (a * self.lo[j]).max(a * self.hi[j]);
                mins.push(lo_acc);
                maxs.push(hi_acc);
            }
            prefix_min.push(mins);
            prefix_max.push(maxs);
        }

        // Per-level list of constraints touching that coordinate.
        let mut touching: Vec<Vec<(usize, i64)>> = vec![Vec::new(); d];
        for (ci, con) in self.constraints.iter().enumerate() {
            for (j, &coeff) in con.coeffs.iter().enumerate() {
                if coeff != 0 {
                    touching[j].push((ci, coeff));
                }
            }
        }

        // Coset data: per column, either the pivot row (progression) or the
        // rows with larger pivots contributing to a forced value.
        let coset = self.coset.as_ref().map(|(offset, lattice)| {
            let mut pivot_row_of: Vec<Option<usize>> = vec![None; d];
            for (i, &c) in lattice.pivot_cols().iter().enumerate() {
                pivot_row_of[c] = Some(i);
            }
            let mut later_rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); d];
            for (c, rows) in later_rows.iter_mut().enumerate() {
                for (i, &p) in lattice.pivot_cols().iter().enumerate() {
                    let entry = *lattice.basis().get(i, c);
                    if p > c && entry != 0 {
                        rows.push((i, entry));
                    }
                }
            }
            CosetData {
                offset: offset.clone(),
                pivot_row_of,
                later_rows,
                lattice,
            }
        });

        let mut state = Scanner {
            prob: self,
            prefix_min,
            prefix_max,
            touching,
            coset,
            pvals: self.constraints.iter().map(|c| c.constant).collect(),
            point: vec![0; d],
            yvals: vec![0i128; self.coset.as_ref().map_or(0, |(_, l)| l.rank())],
            emit,
            counter,
        };
        state.descend(d - 1)
    }

    fn audit(&self) -> Result<()> {
        let cap = i64::MAX / 4;
        for con in &self.constraints {
            let mut mag: i64 = con.constant.checked_abs().ok_or(Error::CoordinateOverflow)?;
            for j in 0..self.dim() {
                let big = self.lo[j]
                    .checked_abs()
                    .and_then(|l| self.hi[j].checked_abs().map(|h| l.max(h)))
                    .ok_or(Error::CoordinateOverflow)?;
                let term = con.coeffs[j]
                    .checked_abs()
                    .and_then(|a| a.checked_mul(big))
                    .ok_or(Error::CoordinateOverflow)?;
                mag = mag.checked_add(term).ok_or(Error::CoordinateOverflow)?;
            }
            if mag > cap {
                return Err(Error::CoordinateOverflow);
            }
        }
        Ok(())
    }
}

struct CosetData<'a> {
    offset: Vec<i64>,
    pivot_row_of: Vec<Option<usize>>,
    later_rows: Vec<Vec<(usize, i64)>>,
    lattice: &'a Lattice,
}

struct Scanner<'a, 'p> {
    prob: &'p ScanProblem,
    prefix_min: Vec<Vec<i64>>,
    prefix_max: Vec<Vec<i64>>,
    touching: Vec<Vec<(usize, i64)>>,
    coset: Option<CosetData<'p>>,
    pvals: Vec<i64>,
    point: Vec<i64>,
    yvals: Vec<i128>,
    emit: &'a mut dyn FnMut(&[i64]),
    counter: Option<&'a mut u128>,
}

impl Scanner<'_, '_> {
    /// Chooses coordinate `c`; coordinates above `c` are already fixed.
    fn descend(&mut self, c: usize) -> Result<()> {
        for (ci, con) in self.prob.constraints.iter().enumerate() {
            let reach_min = self.pvals[ci] + self.prefix_min[ci][c];
            let reach_max = self.pvals[ci] + self.prefix_max[ci][c];
            let feasible = match con.sense {
                Sense::Ge => reach_max >= 0,
                Sense::Eq => reach_min <= 0 && 0 <= reach_max,
            };
            if !feasible {
                return Ok(());
            }
        }

        let (mut xlo, mut xhi) = (self.prob.lo[c], self.prob.hi[c]);
        for &(ci, a) in &self.touching[c] {
            let rmin = if c > 0 { self.prefix_min[ci][c - 1] } else { 0 };
            let rmax = if c > 0 { self.prefix_max[ci][c - 1] } else { 0 };
            let p = self.pvals[ci];
            match self.prob.constraints[ci].sense {
                Sense::Ge => {
                    // a*x >= -p - rest for some rest <= rmax.
                    let k = -p - rmax;
                    if a > 0 {
                        xlo = xlo.max(Integer::div_ceil(&k, &a));
                    } else {
                        xhi = xhi.min(Integer::div_floor(&k, &a));
                    }
                }
                Sense::Eq => {
                    // a*x must land in [-p - rmax, -p - rmin].
                    let (k_lo, k_hi) = (-p - rmax, -p - rmin);
                    if a > 0 {
                        xlo = xlo.max(Integer::div_ceil(&k_lo, &a));
                        xhi = xhi.min(Integer::div_floor(&k_hi, &a));
                    } else {
                        xlo = xlo.max(Integer::div_ceil(&k_hi, &a));
                        xhi = xhi.min(Integer::div_floor(&k_lo, &a));
                    }
                }
            }
        }
        if xlo > xhi {
            return Ok(());
        }

        // Progression the coset forces on this coordinate: step 0 means a
        // single forced value, step >= 1 a pivot-row progression.
        let (base, step): (i128, i64) = match &self.coset {
            None => (0, 1),
            Some(cd) => {
                let mut b = cd.offset[c] as i128;
                for &(row, entry) in &cd.later_rows[c] {
                    b += self.yvals[row] * entry as i128;
                }
                match cd.pivot_row_of[c] {
                    Some(row) => (b, *cd.lattice.basis().get(row, cd.lattice.pivot_cols()[row])),
                    None => (b, 0),
                }
            }
        };

        if step == 0 {
            if base < xlo as i128 || base > xhi as i128 {
                return Ok(());
            }
            return self.take_value(c, base as i64, base, 0);
        }

        let t = Integer::div_ceil(&(xlo as i128 - base), &(step as i128));
        let start = base + t * step as i128;
        if start > xhi as i128 {
            return Ok(());
        }

        if c == 0 {
            if let Some(counter) = self.counter.as_mut() {
                // Every bound is exact at the innermost level, so close the
                // count over the progression in one step.
                let n = ((xhi as i128 - start) / step as i128 + 1) as u128;
                **counter += n;
                return Ok(());
            }
        }

        let mut v = start;
        while v <= xhi as i128 {
            self.take_value(c, v as i64, base, step)?;
            v += step as i128;
        }
        Ok(())
    }

    fn take_value(&mut self, c: usize, v: i64, base: i128, step: i64) -> Result<()> {
        self.point[c] = v;
        for &(ci, a) in &self.touching[c] {
            self.pvals[ci] += a * v;
        }
        if step != 0 {
            if let Some(cd) = &self.coset {
                if let Some(row) = cd.pivot_row_of[c] {
                    self.yvals[row] = (v as i128 - base) / step as i128;
                }
            }
        }
        let result = if c == 0 {
            if let Some(n) = self.counter.as_mut() {
                **n += 1;
            } else {
                (self.emit)(&self.point);
            }
            Ok(())
        } else {
            self.descend(c - 1)
        };
        for &(ci, a) in &self.touching[c] {
            self.pvals[ci] -= a * v;
        }
        result
    }
}
