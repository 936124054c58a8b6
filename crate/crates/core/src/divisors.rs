//! Divisor data attached to a boundary triangulation: the lattice of toric
//! divisors with its relation kernel, the relation vectors tied to boundary
//! simplices, convexity tests for divisors, the nef cone in divisor-class
//! coordinates, and section spaces of convex divisors.
//!
//! Throughout, a divisor is a rational coefficient vector indexed by the
//! triangulation's point list; the class of a divisor is its image in the
//! coordinates dual to the relation kernel basis.

use std::cell::OnceCell;
use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    cone_facets, dot_int_rat, dot_rat, extreme_rays, int_vec_to_rat, integer_kernel_basis,
    primitive_int_vector, rat_inverse, rat_rank, rational_feasible, solve_rational_rows, ConeRep,
    Int, IntMatrix, Rat,
};
use crate::polytope::{rho_dual_polytope, LatticePoint};
use crate::triangulation::Triangulation;

/// The free lattice on the triangulation's points together with the
/// evaluation map sending a basis vector to its point, and a saturated
/// basis of the kernel of that map.
#[derive(Clone, Debug)]
pub struct DivisorLattice {
    points: Vec<LatticePoint>,
    /// rank x size matrix whose columns are the points.
    beta: IntMatrix,
    /// size x (size - rank) matrix whose columns span the relations.
    kernel: IntMatrix,
}

/// Builds the divisor lattice of a triangulation: one basis vector per
/// point, evaluation matrix with the points as columns, and a saturated
/// integral kernel basis.
pub fn build_divisor_lattice(t: &Triangulation) -> Result<DivisorLattice> {
    let points = t.points().to_vec();
    let beta = IntMatrix::from_cols(&points)?;
    let kernel = integer_kernel_basis(&beta);
    Ok(DivisorLattice {
        points,
        beta,
        kernel,
    })
}

impl DivisorLattice {
    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn beta(&self) -> &IntMatrix {
        &self.beta
    }

    pub fn kernel(&self) -> &IntMatrix {
        &self.kernel
    }

    /// Number of divisor basis vectors.
    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// Rank of the ambient point lattice.
    pub fn rank(&self) -> usize {
        self.beta.rows()
    }

    pub fn kernel_rank(&self) -> usize {
        self.kernel.cols()
    }

    /// Coordinates of a relation vector in the kernel basis. Errors when
    /// the vector does not lie in the kernel span.
    pub fn kernel_coordinates(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.size() {
            return Err(Error::ShapeMismatch(format!(
                "vector length {} vs divisor count {}",
                v.len(),
                self.size()
            )));
        }
        let rows: Vec<Vec<Rat>> = (0..self.size())
            .map(|i| int_vec_to_rat(&self.kernel.row(i)))
            .collect();
        let c = solve_rational_rows(&rows, v)
            .ok_or_else(|| Error::InvalidInput("vector is not a relation".into()))?;
        // solve_rational_rows leaves free variables at zero; with a full
        // column rank kernel basis the solution is unique, so verify.
        let back = self.kernel.mul_vec_rat(&c)?;
        if back != v {
            return Err(Error::InvalidInput("vector is not a relation".into()));
        }
        Ok(c)
    }

    /// Class of a divisor: pairings with each kernel basis vector. This is
    /// the projection whose kernel is exactly the divisors pulled back from
    /// the ambient dual lattice.
    pub fn class_of(&self, rho: &Divisor) -> Result<Vec<Rat>> {
        if rho.coeffs.len() != self.size() {
            return Err(Error::ShapeMismatch(format!(
                "divisor length {} vs divisor count {}",
                rho.coeffs.len(),
                self.size()
            )));
        }
        Ok((0..self.kernel.cols())
            .map(|j| dot_int_rat(&self.kernel.col(j), &rho.coeffs))
            .collect())
    }
}

/// Rational divisor: one coefficient per triangulation point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub coeffs: Vec<Rat>,
}

impl Divisor {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        Divisor { coeffs }
    }

    pub fn zero(size: usize) -> Self {
        Divisor {
            coeffs: vec![Rat::zero(); size],
        }
    }

    /// The anticanonical divisor: coefficient one on every point.
    pub fn anticanonical(size: usize) -> Self {
        Divisor {
            coeffs: vec![Rat::one(); size],
        }
    }

    /// Pairing with a vector in the divisor lattice (same index set).
    pub fn pair(&self, v: &[Rat]) -> Rat {
        dot_rat(&self.coeffs, v)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Rational polyhedral cone holding both a generator description and a
/// facet-normal description, each computed on first use from the other.
#[derive(Clone, Debug)]
pub struct RationalCone {
    ambient: usize,
    generators: OnceCell<ConeRep>,
    normals: OnceCell<Vec<Vec<Int>>>,
}

impl RationalCone {
    /// Cone spanned by the given rays plus the span of `lineality`.
    pub fn from_generators(
        ambient: usize,
        rays: &[Vec<Int>],
        lineality: &[Vec<Int>],
    ) -> Result<Self> {
        if rays
            .iter()
            .chain(lineality)
            .any(|v| v.len() != ambient)
        {
            return Err(Error::ShapeMismatch("cone generator length".into()));
        }
        let mut r: Vec<Vec<Int>> = rays
            .iter()
            .map(|v| crate::exactlin::primitive_of_int(v))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        r.sort();
        r.dedup();
        let mut l: Vec<Vec<Int>> = lineality
            .iter()
            .map(|v| crate::exactlin::primitive_of_int(v))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        l.sort();
        l.dedup();
        let generators = OnceCell::new();
        generators.set(ConeRep {
            lineality: l,
            rays: r,
        })
        .expect("fresh cell");
        Ok(RationalCone {
            ambient,
            generators,
            normals: OnceCell::new(),
        })
    }

    /// Cone `{x : <a, x> >= 0 for every normal a}`.
    pub fn from_inequalities(ambient: usize, normals: &[Vec<Int>]) -> Result<Self> {
        if normals.iter().any(|v| v.len() != ambient) {
            return Err(Error::ShapeMismatch("cone normal length".into()));
        }
        let mut ns: Vec<Vec<Int>> = normals
            .iter()
            .map(|v| crate::exactlin::primitive_of_int(v))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        ns.sort();
        ns.dedup();
        let cell = OnceCell::new();
        cell.set(ns).expect("fresh cell");
        Ok(RationalCone {
            ambient,
            generators: OnceCell::new(),
            normals: cell,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Generator description; extreme rays when derived from inequalities.
    pub fn generators(&self) -> &ConeRep {
        self.generators.get_or_init(|| {
            let normals = self.normals.get().expect("one description always present");
            extreme_rays(self.ambient, normals)
        })
    }

    /// Generator description only if it has already been computed; large
    /// inequality-described cones may have astronomically many extreme
    /// rays, so callers can use this to avoid forcing the enumeration.
    pub fn generators_if_available(&self) -> Option<&ConeRep> {
        self.generators.get()
    }

    /// Facet-normal description.
    pub fn facet_normals(&self) -> &[Vec<Int>] {
        self.normals.get_or_init(|| {
            let g = self.generators.get().expect("one description always present");
            cone_facets(self.ambient, &g.rays, &g.lineality)
        })
    }

    /// Dimension of the cone as a polyhedron. With only an inequality
    /// description available, implicit equalities are detected by exact
    /// feasibility instead of enumerating extreme rays, which does not
    /// scale to large ambient dimensions.
    pub fn dimension(&self) -> usize {
        if let Some(g) = self.generators.get() {
            let rows: Vec<Vec<Rat>> = g
                .rays
                .iter()
                .chain(&g.lineality)
                .map(|v| int_vec_to_rat(v))
                .collect();
            return rat_rank(&rows);
        }
        let normals = self.facet_normals();
        let nonstrict: Vec<Vec<Rat>> = normals.iter().map(|a| int_vec_to_rat(a)).collect();
        let mut implicit: Vec<Vec<Rat>> = Vec::new();
        for a in normals {
            let strict = vec![int_vec_to_rat(a)];
            let open = rational_feasible(&strict, &nonstrict)
                .expect("rows share the ambient length");
            if open.is_none() {
                implicit.push(int_vec_to_rat(a));
            }
        }
        self.ambient - rat_rank(&implicit)
    }

    pub fn is_full_dimensional(&self) -> bool {
        if self.generators.get().is_some() {
            return self.dimension() == self.ambient;
        }
        // An inequality-described cone is full dimensional exactly when it
        // has an ambient-space interior point.
        matches!(self.interior_point(), Ok(Some(_)))
    }

    /// Dual cone, built from whichever description already exists: the dual
    /// of a generator description is an inequality description and vice
    /// versa.
    pub fn dual(&self) -> Self {
        if let Some(g) = self.generators.get() {
            let mut ineqs = g.rays.clone();
            for l in &g.lineality {
                ineqs.push(l.clone());
                ineqs.push(l.iter().map(|x| -x).collect());
            }
            Self::from_inequalities(self.ambient, &ineqs).expect("lengths preserved")
        } else {
            let normals = self.normals.get().expect("one description always present");
            Self::from_generators(self.ambient, normals, &[]).expect("lengths preserved")
        }
    }

    /// Membership in the closed cone.
    pub fn contains(&self, x: &[Rat]) -> bool {
        self.facet_normals()
            .iter()
            .all(|a| !dot_int_rat(a, x).is_negative())
    }

    /// A point of the ambient-space interior, when one exists. Lower
    /// dimensional cones have none.
    pub fn interior_point(&self) -> Result<Option<Vec<Rat>>> {
        let normals = self.facet_normals();
        if normals.is_empty() {
            return Ok(Some(vec![Rat::zero(); self.ambient]));
        }
        let strict: Vec<Vec<Rat>> = normals.iter().map(|a| int_vec_to_rat(a)).collect();
        rational_feasible(&strict, &[])
    }

    /// Set equality of the closed cones.
    pub fn same_cone(&self, other: &RationalCone) -> bool {
        if self.ambient != other.ambient {
            return false;
        }
        let inside = |c: &RationalCone, d: &RationalCone| {
            let g = c.generators();
            g.rays
                .iter()
                .all(|r| d.contains(&int_vec_to_rat(r)))
                && g.lineality.iter().all(|l| {
                    let lr = int_vec_to_rat(l);
                    let neg: Vec<Rat> = lr.iter().map(|x| -x).collect();
                    d.contains(&lr) && d.contains(&neg)
                })
        };
        inside(self, other) && inside(other, self)
    }
}

/// Interior-overlap report for two cones in the same ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointnessReport {
    /// No point lies in both ambient-space interiors.
    pub disjoint: bool,
    pub first_full_dimensional: bool,
    pub second_full_dimensional: bool,
}

/// Decides whether the ambient-space interiors of two cones are disjoint.
/// A lower dimensional cone has empty interior, making the answer
/// trivially true; the flags expose that case.
pub fn cone_interior_disjoint(c1: &RationalCone, c2: &RationalCone) -> Result<DisjointnessReport> {
    if c1.ambient_dim() != c2.ambient_dim() {
        return Err(Error::ShapeMismatch(format!(
            "cone ambient dimensions {} vs {}",
            c1.ambient_dim(),
            c2.ambient_dim()
        )));
    }
    let strict: Vec<Vec<Rat>> = c1
        .facet_normals()
        .iter()
        .chain(c2.facet_normals())
        .map(|a| int_vec_to_rat(a))
        .collect();
    let witness = if strict.is_empty() {
        // Both cones are the whole space.
        Some(vec![Rat::zero(); c1.ambient_dim()])
    } else {
        rational_feasible(&strict, &[])?
    };
    Ok(DisjointnessReport {
        disjoint: witness.is_none(),
        first_full_dimensional: c1.is_full_dimensional(),
        second_full_dimensional: c2.is_full_dimensional(),
    })
}

/// Pullback of a linear functional on the point lattice: coefficient
/// `<xi, p>` on each point. Such divisors pair to zero with every relation
/// vector.
pub fn linear_divisor(dl: &DivisorLattice, xi: &[Int]) -> Result<Divisor> {
    if xi.len() != dl.rank() {
        return Err(Error::ShapeMismatch(format!(
            "functional length {} vs rank {}",
            xi.len(),
            dl.rank()
        )));
    }
    Ok(Divisor::new(
        dl.points()
            .iter()
            .map(|p| Rat::from(crate::exactlin::dot_int(xi, p)))
            .collect(),
    ))
}

/// Inverse of the matrix whose columns are the points of the maximal
/// simplex `s`, returned as rows. Errors when `s` is not maximal.
fn simplex_inverse(t: &Triangulation, s: &[usize]) -> Result<Vec<Vec<Rat>>> {
    let n = t.rank();
    if s.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "simplex size {} vs rank {}",
            s.len(),
            n
        )));
    }
    let rows: Vec<Vec<Rat>> = (0..n)
        .map(|coord| {
            s.iter()
                .map(|&pi| Rat::from(t.points()[pi][coord].clone()))
                .collect()
        })
        .collect();
    rat_inverse(&rows).ok_or_else(|| {
        Error::InvalidInput("simplex points do not form a basis".into())
    })
}

/// Coefficients `c` with `point + sum c_i s_i = 0`, via a precomputed
/// simplex inverse.
fn relation_coefficients(inv: &[Vec<Rat>], point: &LatticePoint) -> Vec<Rat> {
    let x: Vec<Rat> = point.iter().map(|v| Rat::from(v.clone())).collect();
    inv.iter().map(|row| -dot_rat(row, &x)).collect()
}

/// The canonical relation vector of a point: writing the negated point in
/// the unique boundary simplex met by its inward ray gives a relation with
/// nonnegative coefficients and coefficient one at the point itself.
pub fn n_vector(t: &Triangulation, dl: &DivisorLattice, delta: usize) -> Result<Vec<Rat>> {
    if delta >= dl.size() {
        return Err(Error::InvalidInput(format!("point index {delta} out of range")));
    }
    let neg: Vec<Rat> = t.points()[delta].iter().map(|v| Rat::from(-v)).collect();
    let (ids, coeffs) = t.find_containing_simplex(&neg)?;
    let mut out = vec![Rat::zero(); dl.size()];
    out[delta] += Rat::one();
    for (i, c) in ids.iter().zip(&coeffs) {
        out[*i] += c;
    }
    Ok(out)
}

/// The relation vector of a point `delta` relative to a maximal simplex
/// not containing it: coefficient one at `delta` plus the coefficients
/// expressing `-delta` in the simplex basis (possibly negative).
pub fn n_s_vector(
    t: &Triangulation,
    dl: &DivisorLattice,
    s: &[usize],
    delta: usize,
) -> Result<Vec<Rat>> {
    if s.contains(&delta) {
        return Err(Error::InvalidInput(
            "point lies in the simplex it should be compared against".into(),
        ));
    }
    let inv = simplex_inverse(t, s)?;
    let c = relation_coefficients(&inv, &t.points()[delta]);
    let mut out = vec![Rat::zero(); dl.size()];
    out[delta] += Rat::one();
    for (i, v) in s.iter().zip(&c) {
        out[*i] += v;
    }
    Ok(out)
}

/// Change-of-basis data at a maximal simplex: the basis of the rational
/// divisor space made of the unit vectors on the simplex points together
/// with the canonical relation vectors of the remaining points, plus its
/// dual basis.
#[derive(Clone, Debug)]
pub struct LocalBasis {
    pub simplex: Vec<usize>,
    /// Points outside the simplex, in index order.
    pub complement: Vec<usize>,
    /// Basis columns: unit vectors on `simplex`, then relation vectors on
    /// `complement`, in that order.
    pub basis: Vec<Vec<Rat>>,
    /// Dual basis functionals, same order, as coefficient vectors in the
    /// dual coordinates.
    pub dual: Vec<Vec<Rat>>,
}

/// Builds the local basis at a maximal simplex. The relation vectors of
/// the complement are linearly independent because each has coefficient
/// one at its own point and the complement points are distinct.
pub fn local_basis(t: &Triangulation, dl: &DivisorLattice, s: &[usize]) -> Result<LocalBasis> {
    let d = dl.size();
    let simplex = s.to_vec();
    let complement: Vec<usize> = (0..d).filter(|i| !simplex.contains(i)).collect();
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(d);
    for &i in &simplex {
        let mut e = vec![Rat::zero(); d];
        e[i] = Rat::one();
        cols.push(e);
    }
    for &j in &complement {
        cols.push(n_vector(t, dl, j)?);
    }
    let rows: Vec<Vec<Rat>> = (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
    let dual = rat_inverse(&rows)
        .ok_or_else(|| Error::InvalidInput("local basis is singular".into()))?;
    Ok(LocalBasis {
        simplex,
        complement,
        basis: cols,
        dual,
    })
}

/// Splits a divisor at a local basis into the part pulled back from the
/// ambient dual lattice and the part supported on the relation
/// functionals. The two parts sum back to the divisor exactly.
pub fn decompose_divisor(lb: &LocalBasis, rho: &Divisor) -> Result<(Divisor, Divisor)> {
    let d = lb.basis.len();
    if rho.coeffs.len() != d {
        return Err(Error::ShapeMismatch(format!(
            "divisor length {} vs divisor count {}",
            rho.coeffs.len(),
            d
        )));
    }
    let k = lb.simplex.len();
    let mut pulled = vec![Rat::zero(); d];
    let mut residual = vec![Rat::zero(); d];
    for (j, col) in lb.basis.iter().enumerate() {
        let lambda = rho.pair(col);
        let target = if j < k { &mut pulled } else { &mut residual };
        for (x, y) in target.iter_mut().zip(&lb.dual[j]) {
            *x += &lambda * y;
        }
    }
    Ok((Divisor::new(pulled), Divisor::new(residual)))
}

/// Iterates over every (maximal simplex, outside point) relation vector,
/// handing each to the callback. Stops early when the callback returns
/// false; returns whether all callbacks returned true.
fn for_each_relation(
    t: &Triangulation,
    dl: &DivisorLattice,
    mut f: impl FnMut(&[usize], usize, &[Rat]) -> bool,
) -> Result<bool> {
    let d = dl.size();
    for s in t.maximal_simplices() {
        let inv = simplex_inverse(t, s)?;
        for delta in 0..d {
            if s.binary_search(&delta).is_ok() {
                continue;
            }
            let c = relation_coefficients(&inv, &t.points()[delta]);
            let mut v = vec![Rat::zero(); d];
            v[delta] += Rat::one();
            for (i, x) in s.iter().zip(&c) {
                v[*i] += x;
            }
            if !f(s, delta, &v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A divisor is convex when it pairs nonnegatively with every relation
/// vector of every maximal simplex; equivalently its induced piecewise
/// linear function is convex across the boundary complex.
pub fn is_convex_divisor(t: &Triangulation, dl: &DivisorLattice, rho: &Divisor) -> Result<bool> {
    check_size(dl, rho)?;
    for_each_relation(t, dl, |_, _, v| !rho.pair(v).is_negative())
}

/// Strict convexity: every pairing is positive.
pub fn is_strictly_convex_divisor(
    t: &Triangulation,
    dl: &DivisorLattice,
    rho: &Divisor,
) -> Result<bool> {
    check_size(dl, rho)?;
    for_each_relation(t, dl, |_, _, v| rho.pair(v).is_positive())
}

/// Convexity via the decomposition path: for every maximal simplex, the
/// residual part of the divisor must pair nonnegatively with the unit
/// vector of every outside point. Kept independent of the relation-vector
/// path so the two can cross-check each other.
pub fn is_convex_by_decomposition(
    t: &Triangulation,
    dl: &DivisorLattice,
    rho: &Divisor,
) -> Result<bool> {
    let frames = simplex_frames(t, dl)?;
    is_convex_by_decomposition_with(dl, &frames, rho)
}

/// Inverted point matrix of one maximal simplex, for repeated splits of
/// divisors at that simplex.
#[derive(Clone, Debug)]
pub struct SimplexFrame {
    pub simplex: Vec<usize>,
    pub complement: Vec<usize>,
    /// Inverse of the matrix whose rows are the simplex points.
    inverse: Vec<Vec<Rat>>,
}

impl SimplexFrame {
    pub fn new(dl: &DivisorLattice, s: &[usize]) -> Result<Self> {
        let rows: Vec<Vec<Rat>> = s
            .iter()
            .map(|&i| int_vec_to_rat(&dl.points()[i]))
            .collect();
        let inverse = rat_inverse(&rows)
            .ok_or_else(|| Error::InvalidInput("simplex points are dependent".into()))?;
        Ok(SimplexFrame {
            simplex: s.to_vec(),
            complement: (0..dl.size()).filter(|i| !s.contains(i)).collect(),
            inverse,
        })
    }

    /// The linear functional agreeing with the divisor on the simplex.
    pub fn matching_functional(&self, rho: &Divisor) -> Vec<Rat> {
        let rhs: Vec<Rat> = self.simplex.iter().map(|&i| rho.coeffs[i].clone()).collect();
        self.inverse
            .iter()
            .map(|row| row.iter().zip(&rhs).map(|(a, r)| a * r).sum())
            .collect()
    }
}

/// Frames of every maximal simplex, in simplex order. Computing them once
/// lets many divisors be split without repeating the inversions.
pub fn simplex_frames(t: &Triangulation, dl: &DivisorLattice) -> Result<Vec<SimplexFrame>> {
    t.maximal_simplices()
        .iter()
        .map(|s| SimplexFrame::new(dl, s))
        .collect()
}

/// Splits a divisor at a maximal simplex into the pullback of the linear
/// functional matching it on the simplex and a remainder vanishing on the
/// simplex. The split never needs the relation-vector basis, so it is
/// defined for every simplex of every fixture.
pub fn decompose_at_simplex(
    dl: &DivisorLattice,
    s: &[usize],
    rho: &Divisor,
) -> Result<(Divisor, Divisor)> {
    check_size(dl, rho)?;
    let frame = SimplexFrame::new(dl, s)?;
    let xi = frame.matching_functional(rho);
    let pullback: Vec<Rat> = dl
        .points()
        .iter()
        .map(|p| dot_int_rat(p, &xi))
        .collect();
    let residual: Vec<Rat> = rho
        .coeffs
        .iter()
        .zip(&pullback)
        .map(|(a, b)| a - b)
        .collect();
    Ok((Divisor::new(pullback), Divisor::new(residual)))
}

/// Decomposition-path convexity against precomputed frames: at every
/// maximal simplex, the divisor must dominate the linear functional that
/// matches it on the simplex.
pub fn is_convex_by_decomposition_with(
    dl: &DivisorLattice,
    frames: &[SimplexFrame],
    rho: &Divisor,
) -> Result<bool> {
    check_size(dl, rho)?;
    for frame in frames {
        let xi = frame.matching_functional(rho);
        for &j in &frame.complement {
            if (&rho.coeffs[j] - dot_int_rat(&dl.points()[j], &xi)).is_negative() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_size(dl: &DivisorLattice, rho: &Divisor) -> Result<()> {
    if rho.coeffs.len() != dl.size() {
        return Err(Error::ShapeMismatch(format!(
            "divisor length {} vs divisor count {}",
            rho.coeffs.len(),
            dl.size()
        )));
    }
    Ok(())
}

/// The nef cone of the triangulation in divisor-class coordinates: the
/// dual of the cone generated by all relation vectors, each expressed in
/// the kernel basis. A divisor class lies in the interior exactly when
/// some representative is strictly convex.
pub fn kahler_cone(t: &Triangulation, dl: &DivisorLattice) -> Result<RationalCone> {
    let gens = relation_classes(t, dl)?;
    RationalCone::from_inequalities(dl.kernel_rank(), &gens)
}

/// Kernel-basis coordinates of all relation vectors, primitive and
/// deduplicated.
pub fn relation_classes(t: &Triangulation, dl: &DivisorLattice) -> Result<Vec<Vec<Int>>> {
    let mut out: BTreeSet<Vec<Int>> = BTreeSet::new();
    for_each_relation(t, dl, |_, _, v| {
        let c = dl
            .kernel_coordinates(v)
            .expect("relation vectors lie in the kernel");
        out.insert(primitive_int_vector(&c));
        true
    })?;
    Ok(out.into_iter().collect())
}

/// Sections of a convex integral divisor: lattice points of the weighted
/// dual polytope, each with its exponent vector over the triangulation
/// points.
#[derive(Clone, Debug)]
pub struct SectionSpace {
    pub rho: Divisor,
    /// (lattice point, exponents), exponents indexed like the points.
    pub sections: Vec<(LatticePoint, Vec<Int>)>,
}

/// Enumerates the section space of a convex divisor with nonnegative
/// integer coefficients. Exponents are the pairings with each point
/// shifted by the divisor coefficient, and are always nonnegative.
pub fn section_space(t: &Triangulation, dl: &DivisorLattice, rho: &Divisor) -> Result<SectionSpace> {
    check_size(dl, rho)?;
    if !rho.is_integral() || !rho.is_nonnegative() {
        return Err(Error::NotIntegralDivisor);
    }
    if !is_convex_divisor(t, dl, rho)? {
        return Err(Error::NotConvex);
    }
    let poly = rho_dual_polytope(t.rank(), dl.points(), &rho.coeffs)?;
    let mut sections = Vec::new();
    for v in poly.lattice_points() {
        let exps: Vec<Int> = dl
            .points()
            .iter()
            .zip(&rho.coeffs)
            .map(|(p, r)| {
                let e = crate::exactlin::dot_int(p, &v) + r.to_integer();
                debug_assert!(!e.is_negative());
                e
            })
            .collect();
        sections.push((v, exps));
    }
    sections.sort();
    Ok(SectionSpace {
        rho: rho.clone(),
        sections,
    })
}

/// Number of interior lattice points of the weighted dual polytope. The
/// flag is true when that polytope is lower dimensional, in which case the
/// count is zero by convention.
pub fn canonical_section_count(
    t: &Triangulation,
    dl: &DivisorLattice,
    rho: &Divisor,
) -> Result<(usize, bool)> {
    check_size(dl, rho)?;
    if !rho.is_integral() || !rho.is_nonnegative() {
        return Err(Error::NotIntegralDivisor);
    }
    if !is_convex_divisor(t, dl, rho)? {
        return Err(Error::NotConvex);
    }
    let poly = rho_dual_polytope(t.rank(), dl.points(), &rho.coeffs)?;
    if poly.dim < t.rank() {
        return Ok((0, true));
    }
    Ok((poly.interior_lattice_points().len(), false))
}

/// Divisor restricted to the star of a simplex, shifted by a dual lattice
/// point tight on the simplex.
#[derive(Clone, Debug)]
pub struct RestrictedDivisor {
    /// Point indices in the star of the simplex, ascending.
    pub points: Vec<usize>,
    /// Shifted coefficients, aligned with `points`. Zero on the simplex.
    pub coeffs: Vec<Rat>,
}

/// Restricts a divisor to the star of a simplex: each star point's
/// coefficient is shifted by its pairing with the chosen dual point. The
/// dual point must satisfy all divisor inequalities, with equality on the
/// simplex, which forces the result to be nonnegative.
pub fn restrict_divisor_to_orbit(
    t: &Triangulation,
    dl: &DivisorLattice,
    s: &[usize],
    rho: &Divisor,
    v0: &LatticePoint,
) -> Result<RestrictedDivisor> {
    check_size(dl, rho)?;
    if v0.len() != t.rank() {
        return Err(Error::ShapeMismatch("dual point length".into()));
    }
    if !t.is_simplex(s) {
        return Err(Error::InvalidInput("not a simplex of the complex".into()));
    }
    for (i, p) in dl.points().iter().enumerate() {
        let val = Rat::from(crate::exactlin::dot_int(p, v0)) + &rho.coeffs[i];
        if val.is_negative() {
            return Err(Error::NotOnDualFace(format!(
                "dual point violates the inequality of point {i}"
            )));
        }
        if s.contains(&i) && !val.is_zero() {
            return Err(Error::NotOnDualFace(format!(
                "dual point is not tight on simplex point {i}"
            )));
        }
    }
    let points = t.star_points(s);
    let coeffs = points
        .iter()
        .map(|&i| Rat::from(crate::exactlin::dot_int(&dl.points()[i], v0)) + &rho.coeffs[i])
        .collect();
    Ok(RestrictedDivisor { points, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vec;
    use crate::polytope::LatticePolytope;

    fn rat(n: i64) -> Rat {
        Rat::from(Int::from(n))
    }

    fn diamond_t() -> Triangulation {
        let p = LatticePolytope::from_vertices(&[
            int_vec(&[1, 0]),
            int_vec(&[0, 1]),
            int_vec(&[-1, 0]),
            int_vec(&[0, -1]),
        ])
        .unwrap();
        Triangulation::build(&p).unwrap()
    }

    fn octahedron_t() -> Triangulation {
        let p = LatticePolytope::from_vertices(&[
            int_vec(&[1, 0, 0]),
            int_vec(&[-1, 0, 0]),
            int_vec(&[0, 1, 0]),
            int_vec(&[0, -1, 0]),
            int_vec(&[0, 0, 1]),
            int_vec(&[0, 0, -1]),
        ])
        .unwrap();
        Triangulation::build(&p).unwrap()
    }

    fn quintic_t() -> Triangulation {
        let p = LatticePolytope::from_vertices(&[
            int_vec(&[1, 0, 0, 0]),
            int_vec(&[0, 1, 0, 0]),
            int_vec(&[0, 0, 1, 0]),
            int_vec(&[0, 0, 0, 1]),
            int_vec(&[-1, -1, -1, -1]),
        ])
        .unwrap();
        Triangulation::build(&p).unwrap()
    }

    #[test]
    fn quintic_lattice_has_rank_one_kernel() {
        let t = quintic_t();
        let dl = build_divisor_lattice(&t).unwrap();
        assert_eq!(dl.size(), 5);
        assert_eq!(dl.kernel_rank(), 1);
        let k = dl.kernel().col(0);
        assert_eq!(crate::exactlin::primitive_of_int(&k), int_vec(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn octahedron_kernel_contains_opposite_pairs() {
        let t = octahedron_t();
        let dl = build_divisor_lattice(&t).unwrap();
        assert_eq!(dl.size(), 6);
        assert_eq!(dl.kernel_rank(), 3);
        // Points are sorted; opposite pairs sum to a relation.
        for i in 0..6 {
            let p = &dl.points()[i];
            let j = dl
                .points()
                .iter()
                .position(|q| q.iter().zip(p).all(|(a, b)| *a == -b))
                .unwrap();
            let mut v = vec![Rat::zero(); 6];
            v[i] += Rat::one();
            v[j] += Rat::one();
            assert!(dl.kernel_coordinates(&v).is_ok());
        }
    }

    #[test]
    fn octahedron_n_vector_is_opposite_pair() {
        let t = octahedron_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let i = dl.points().iter().position(|p| *p == int_vec(&[1, 0, 0])).unwrap();
        let j = dl.points().iter().position(|p| *p == int_vec(&[-1, 0, 0])).unwrap();
        let v = n_vector(&t, &dl, i).unwrap();
        for (k, x) in v.iter().enumerate() {
            let expect = if k == i || k == j { rat(1) } else { rat(0) };
            assert_eq!(*x, expect);
        }
    }

    #[test]
    fn quintic_relation_vectors_are_all_ones() {
        let t = quintic_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let ones = vec![rat(1); 5];
        for delta in 0..5 {
            assert_eq!(n_vector(&t, &dl, delta).unwrap(), ones);
        }
        for s in t.maximal_simplices() {
            for delta in 0..5 {
                if s.contains(&delta) {
                    continue;
                }
                assert_eq!(n_s_vector(&t, &dl, s, delta).unwrap(), ones);
            }
        }
    }

    #[test]
    fn local_basis_duality_relations() {
        let t = quintic_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let s = t.maximal_simplices()[0].clone();
        let lb = local_basis(&t, &dl, &s).unwrap();
        for (j, col) in lb.basis.iter().enumerate() {
            for (i, f) in lb.dual.iter().enumerate() {
                let v = dot_rat(f, col);
                assert_eq!(v, if i == j { rat(1) } else { rat(0) });
            }
        }
        // Dual functionals of the simplex part kill every relation.
        for i in 0..lb.simplex.len() {
            for j in 0..dl.kernel_rank() {
                let k = int_vec_to_rat(&dl.kernel().col(j));
                assert!(dot_rat(&lb.dual[i], &k).is_zero());
            }
        }
    }

    #[test]
    fn decomposition_sums_back_and_scores_five() {
        let t = quintic_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let s = t.maximal_simplices()[0].clone();
        let lb = local_basis(&t, &dl, &s).unwrap();
        let rho = Divisor::new(vec![rat(3), rat(-1), rat(7), rat(2), rat(0)]);
        let (a, b) = decompose_divisor(&lb, &rho).unwrap();
        let sum: Vec<Rat> = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        assert_eq!(sum, rho.coeffs);

        let anti = Divisor::anticanonical(5);
        let (_, residual) = decompose_divisor(&lb, &anti).unwrap();
        let outside = lb.complement[0];
        assert_eq!(residual.coeffs[outside], rat(5));
    }

    #[test]
    fn anticanonical_convexity() {
        for t in [diamond_t(), octahedron_t(), quintic_t()] {
            let dl = build_divisor_lattice(&t).unwrap();
            let anti = Divisor::anticanonical(dl.size());
            assert!(is_convex_divisor(&t, &dl, &anti).unwrap());
            assert!(is_convex_by_decomposition(&t, &dl, &anti).unwrap());
        }
        // No subdivided facet on the diamond or the quintic simplex, so
        // strictness holds there.
        let t = diamond_t();
        let dl = build_divisor_lattice(&t).unwrap();
        assert!(is_strictly_convex_divisor(&t, &dl, &Divisor::anticanonical(4)).unwrap());
        let t = quintic_t();
        let dl = build_divisor_lattice(&t).unwrap();
        assert!(is_strictly_convex_divisor(&t, &dl, &Divisor::anticanonical(5)).unwrap());
    }

    #[test]
    fn subdivided_facets_break_strictness() {
        // Cube facets carry extra boundary points, so adjacent simplices in
        // one facet are coplanar and some pairings vanish.
        let p = LatticePolytope::from_vertices(
            &(0..8)
                .map(|k| int_vec(&[1 - 2 * (k & 1), 1 - 2 * ((k >> 1) & 1), 1 - 2 * ((k >> 2) & 1)]))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let t = Triangulation::build(&p).unwrap();
        let dl = build_divisor_lattice(&t).unwrap();
        let anti = Divisor::anticanonical(dl.size());
        assert!(is_convex_divisor(&t, &dl, &anti).unwrap());
        assert!(!is_strictly_convex_divisor(&t, &dl, &anti).unwrap());
    }

    #[test]
    fn quintic_nef_cone_is_a_ray() {
        let t = quintic_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let cone = kahler_cone(&t, &dl).unwrap();
        assert_eq!(cone.ambient_dim(), 1);
        let g = cone.generators();
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays, vec![int_vec(&[1])]);
        assert!(cone.is_full_dimensional());
    }

    #[test]
    fn weighted_fixture_nef_cone_is_a_ray() {
        // Five points with a single relation of weights (1,1,1,1,4).
        let pts = vec![
            int_vec(&[1, 0, 0, 0]),
            int_vec(&[0, 1, 0, 0]),
            int_vec(&[0, 0, 1, 0]),
            int_vec(&[-1, -1, -1, -4]),
            int_vec(&[0, 0, 0, 1]),
        ];
        let host = LatticePolytope::from_vertices(&pts).unwrap();
        let mut maximal = Vec::new();
        for leave in 0..5 {
            let s: Vec<usize> = (0..5).filter(|&i| i != leave).collect();
            maximal.push(s);
        }
        let t = Triangulation::from_parts(host, pts.clone(), maximal).unwrap();
        let dl = build_divisor_lattice(&t).unwrap();
        assert_eq!(dl.kernel_rank(), 1);
        let k = crate::exactlin::primitive_of_int(&dl.kernel().col(0));
        assert_eq!(k, int_vec(&[1, 1, 1, 1, 4]));
        let cone = kahler_cone(&t, &dl).unwrap();
        assert_eq!(cone.generators().rays, vec![int_vec(&[1])]);
    }

    #[test]
    fn dual_cone_roundtrip() {
        let quadrant =
            RationalCone::from_generators(2, &[int_vec(&[1, 0]), int_vec(&[0, 1])], &[]).unwrap();
        assert!(quadrant.same_cone(&quadrant.dual()));
        let ray = RationalCone::from_generators(2, &[int_vec(&[1, 0])], &[]).unwrap();
        let half = ray.dual();
        assert!(half.contains(&[rat(1), rat(-7)]));
        assert!(!half.contains(&[rat(-1), rat(0)]));
        assert!(ray.same_cone(&half.dual()));
    }

    #[test]
    fn interior_disjointness_cases() {
        let quadrant =
            RationalCone::from_generators(2, &[int_vec(&[1, 0]), int_vec(&[0, 1])], &[]).unwrap();
        let with_self = cone_interior_disjoint(&quadrant, &quadrant).unwrap();
        assert!(!with_self.disjoint);
        assert!(with_self.first_full_dimensional);

        let r1 = RationalCone::from_generators(2, &[int_vec(&[1, 0])], &[]).unwrap();
        let r2 = RationalCone::from_generators(2, &[int_vec(&[0, 1])], &[]).unwrap();
        let rays = cone_interior_disjoint(&r1, &r2).unwrap();
        assert!(rays.disjoint);
        assert!(!rays.first_full_dimensional);
        assert!(!rays.second_full_dimensional);
    }

    #[test]
    fn section_spaces_count_correctly() {
        let t = quintic_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let anti = Divisor::anticanonical(5);
        let space = section_space(&t, &dl, &anti).unwrap();
        assert_eq!(space.sections.len(), 126);
        let origin = space
            .sections
            .iter()
            .find(|(v, _)| v.iter().all(|x| x.is_zero()))
            .unwrap();
        assert_eq!(origin.1, int_vec(&[1, 1, 1, 1, 1]));

        let zero = Divisor::zero(5);
        let space0 = section_space(&t, &dl, &zero).unwrap();
        assert_eq!(space0.sections.len(), 1);
        assert!(space0.sections[0].1.iter().all(|x| x.is_zero()));

        let t = octahedron_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let anti = Divisor::anticanonical(dl.size());
        assert_eq!(section_space(&t, &dl, &anti).unwrap().sections.len(), 27);
    }

    #[test]
    fn canonical_counts() {
        let t = quintic_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let anti = Divisor::anticanonical(5);
        assert_eq!(canonical_section_count(&t, &dl, &anti).unwrap(), (1, false));
        assert_eq!(
            canonical_section_count(&t, &dl, &Divisor::zero(5)).unwrap(),
            (0, true)
        );

        let t = diamond_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let twice = Divisor::new(vec![rat(2); dl.size()]);
        assert_eq!(canonical_section_count(&t, &dl, &twice).unwrap(), (9, false));
    }

    #[test]
    fn orbit_restriction_on_octahedron() {
        let t = octahedron_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let anti = Divisor::anticanonical(6);
        let v = dl.points().iter().position(|p| *p == int_vec(&[0, 0, 1])).unwrap();
        // Tight dual point for the vertex (0,0,1) with coefficient one.
        let v0 = int_vec(&[1, 1, -1]);
        let r = restrict_divisor_to_orbit(&t, &dl, &[v], &anti, &v0).unwrap();
        assert!(r.points.contains(&v));
        for (i, c) in r.points.iter().zip(&r.coeffs) {
            assert!(!c.is_negative());
            if *i == v {
                assert!(c.is_zero());
            }
        }
        // A dual point that is not tight on the simplex must be rejected.
        let bad = restrict_divisor_to_orbit(&t, &dl, &[v], &anti, &int_vec(&[0, 0, 0]));
        assert!(matches!(bad, Err(Error::NotOnDualFace(_))));
    }

    #[test]
    fn relation_classes_lie_in_the_kernel() {
        let t = octahedron_t();
        let dl = build_divisor_lattice(&t).unwrap();
        let classes = relation_classes(&t, &dl).unwrap();
        assert!(!classes.is_empty());
        for c in &classes {
            let v = dl.kernel().mul_vec(c).unwrap();
            let img = dl.beta().mul_vec(&v).unwrap();
            assert!(img.iter().all(|x| x.is_zero()));
        }
    }
}
