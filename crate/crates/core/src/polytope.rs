//! Integral polytopes over a lattice: hulls, face lattices, duality,
//! reflexivity, and lattice-point enumeration.
//!
//! The facet convention throughout is `<normal, x> >= -offset` with a
//! positive offset, so the origin is strictly interior and replacing the
//! offsets by divisor coefficients yields the weighted dual polytope
//! directly.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    self, dot_int, extreme_rays, int_vec_to_rat, primitive_int_vector, rat_rank, Int, Rat,
};

pub type LatticePoint = Vec<Int>;

/// One facet inequality `<normal, x> >= -offset`, jointly primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub offset: Int,
}

/// A face identified by its dimension and index within that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceId {
    pub dim: usize,
    pub index: usize,
}

/// A proper face: sorted vertex indices plus the facets tight on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
    pub tight_facets: Vec<usize>,
}

/// Full-dimensional lattice polytope with the origin strictly interior.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    rank: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
    /// faces[d] lists the d-dimensional proper faces, d in 0..rank.
    faces: Vec<Vec<Face>>,
}

/// Polytope with rational vertices, kept as both descriptions. May be
/// lower-dimensional (e.g. a weighted dual polytope of a degenerate
/// divisor).
#[derive(Clone, Debug)]
pub struct RationalPolytope {
    pub rank: usize,
    pub vertices: Vec<Vec<Rat>>,
    /// `<normal, y> >= -offset`
    pub inequalities: Vec<(Vec<Int>, Rat)>,
    pub dim: usize,
}

impl LatticePolytope {
    /// Convex hull of lattice points: reduces to extreme points, computes
    /// facets by exact double description, then closes the facet
    /// intersections into the full face lattice.
    pub fn from_vertices(points: &[LatticePoint]) -> Result<Self> {
        let rank = points
            .first()
            .map(|p| p.len())
            .ok_or_else(|| Error::InvalidInput("empty vertex list".into()))?;
        if points.iter().any(|p| p.len() != rank) {
            return Err(Error::ShapeMismatch("vertex length differs from rank".into()));
        }
        let mut points: Vec<LatticePoint> = points.to_vec();
        points.sort();
        points.dedup();

        let lifted: Vec<Vec<Rat>> = points
            .iter()
            .map(|p| {
                let mut v = int_vec_to_rat(p);
                v.push(Rat::from(Int::from(1)));
                v
            })
            .collect();
        if rat_rank(&lifted) != rank + 1 {
            let affine = rat_rank(&lifted) - 1;
            return Err(Error::NotFullDimensional {
                rank: affine,
                ambient: rank,
            });
        }

        let rays: Vec<Vec<Int>> = points
            .iter()
            .map(|p| {
                let mut v = p.clone();
                v.push(Int::from(1));
                v
            })
            .collect();
        let facet_vectors = exactlin::cone_facets(rank + 1, &rays, &[]);
        let mut facets: Vec<Facet> = facet_vectors
            .into_iter()
            .map(|mut f| {
                let offset = f.pop().expect("lifted coordinate present");
                Facet { normal: f, offset }
            })
            .collect();
        facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
        if facets.iter().any(|f| !f.offset.is_positive()) {
            return Err(Error::OriginNotInterior);
        }

        // Extreme points: tight facet normals span the whole space.
        let vertices: Vec<LatticePoint> = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<Rat>> = facets
                    .iter()
                    .filter(|f| dot_int(&f.normal, p) == -&f.offset)
                    .map(|f| int_vec_to_rat(&f.normal))
                    .collect();
                rat_rank(&tight) == rank
            })
            .collect();

        let faces = face_lattice(rank, &vertices, &facets);
        Ok(LatticePolytope {
            rank,
            vertices,
            facets,
            faces,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// All proper faces of the given dimension.
    pub fn faces(&self, dim: usize) -> &[Face] {
        &self.faces[dim]
    }

    pub fn face(&self, id: FaceId) -> Result<&Face> {
        self.faces
            .get(id.dim)
            .and_then(|fs| fs.get(id.index))
            .ok_or(Error::UnknownFace {
                dim: id.dim,
                index: id.index,
            })
    }

    /// The dual polytope `{y : <y, v> >= -1 for all vertices v}`.
    pub fn dual_polytope(&self) -> RationalPolytope {
        let vertices: Vec<Vec<Rat>> = self
            .facets
            .iter()
            .map(|f| {
                f.normal
                    .iter()
                    .map(|x| Rat::new(x.clone(), f.offset.clone()))
                    .collect()
            })
            .collect();
        let inequalities = self
            .vertices
            .iter()
            .map(|v| (v.clone(), Rat::from(Int::from(1))))
            .collect();
        RationalPolytope {
            rank: self.rank,
            vertices,
            inequalities,
            dim: self.rank,
        }
    }

    pub fn is_reflexive(&self) -> bool {
        // Dual vertex u/c integral for every facet (u, c).
        self.facets
            .iter()
            .all(|f| f.normal.iter().all(|x| (x % &f.offset).is_zero()))
    }

    /// The dual as a lattice polytope with its own face lattice.
    pub fn dual_lattice_polytope(&self) -> Result<LatticePolytope> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        let verts: Vec<LatticePoint> = self
            .facets
            .iter()
            .map(|f| f.normal.iter().map(|x| x / &f.offset).collect())
            .collect();
        LatticePolytope::from_vertices(&verts)
    }

    /// All lattice points, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        box_scan(
            self.rank,
            &self
                .vertices
                .iter()
                .map(|v| int_vec_to_rat(v))
                .collect::<Vec<_>>(),
            &self
                .facets
                .iter()
                .map(|f| (f.normal.clone(), Rat::from(f.offset.clone())))
                .collect::<Vec<_>>(),
        )
    }

    /// Facets tight on an integral point (empty for interior points).
    pub fn tight_facets(&self, p: &LatticePoint) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| dot_int(&f.normal, p) == -&f.offset)
            .map(|(i, _)| i)
            .collect()
    }

    /// Whether the point lies in the polytope.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.facets
            .iter()
            .all(|f| dot_int(&f.normal, p) >= -&f.offset)
    }

    /// Lattice points in the relative interior of a face: exactly the
    /// points whose tight facet set equals the face's.
    pub fn face_interior_points(&self, id: FaceId) -> Result<Vec<LatticePoint>> {
        let face = self.face(id)?;
        Ok(self
            .lattice_points()
            .into_iter()
            .filter(|p| self.tight_facets(p) == face.tight_facets)
            .collect())
    }

    /// The smallest face containing the point, or `None` for interior
    /// points (and an error for points outside).
    pub fn minimal_face(&self, p: &LatticePoint) -> Result<Option<FaceId>> {
        if !self.contains(p) {
            return Err(Error::InvalidInput(format!(
                "point {:?} lies outside the polytope",
                p
            )));
        }
        let tight = self.tight_facets(p);
        if tight.is_empty() {
            return Ok(None);
        }
        for (dim, faces) in self.faces.iter().enumerate() {
            for (index, face) in faces.iter().enumerate() {
                if face.tight_facets == tight {
                    return Ok(Some(FaceId { dim, index }));
                }
            }
        }
        unreachable!("every tight set closes to a face")
    }

    /// Face of the facet with the given index in the facet list.
    pub fn facet_face(&self, facet_index: usize) -> FaceId {
        let top = &self.faces[self.rank - 1];
        let index = top
            .iter()
            .position(|f| f.tight_facets == vec![facet_index])
            .expect("facet face present");
        FaceId {
            dim: self.rank - 1,
            index,
        }
    }
}

/// Inclusion-reversing face duality for a reflexive pair: the face of the
/// dual polytope where the pairing with all of `F` is `-1`.
pub fn dual_face(p: &LatticePolytope, dual: &LatticePolytope, id: FaceId) -> Result<FaceId> {
    let face = p.face(id)?;
    let dual_vertices: Vec<usize> = dual
        .vertices()
        .iter()
        .enumerate()
        .filter(|(_, w)| {
            face.vertices
                .iter()
                .all(|&vi| dot_int(w, &p.vertices[vi]) == Int::from(-1))
        })
        .map(|(i, _)| i)
        .collect();
    let want_dim = p.rank() - 1 - face.dim;
    dual.faces(want_dim)
        .iter()
        .position(|f| f.vertices == dual_vertices)
        .map(|index| FaceId {
            dim: want_dim,
            index,
        })
        .ok_or(Error::UnknownFace {
            dim: want_dim,
            index: usize::MAX,
        })
}

/// The weighted dual polytope `{y : <y, p> >= -rho_p for each p}` over the
/// given points. Errors when the result is unbounded (the weights are not
/// convex). The result may be lower-dimensional.
pub fn rho_dual_polytope(rank: usize, points: &[LatticePoint], rho: &[Rat]) -> Result<RationalPolytope> {
    if points.len() != rho.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} points vs {} weights",
            points.len(),
            rho.len()
        )));
    }
    // Homogenize: {(y, t) : <p, y> + rho_p t >= 0, t >= 0}; rays with t > 0
    // are vertices, rays with t = 0 are recession directions.
    let mut ineqs: Vec<Vec<Int>> = Vec::new();
    for (p, r) in points.iter().zip(rho) {
        let mut row: Vec<Rat> = int_vec_to_rat(p);
        row.push(r.clone());
        ineqs.push(primitive_int_vector(&row));
    }
    let mut t_row = vec![Int::zero(); rank];
    t_row.push(Int::from(1));
    ineqs.push(t_row);
    let rep = extreme_rays(rank + 1, &ineqs);
    if !rep.lineality.is_empty() {
        return Err(Error::Unbounded);
    }
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    for ray in &rep.rays {
        let t = &ray[rank];
        if t.is_zero() {
            return Err(Error::Unbounded);
        }
        vertices.push(
            ray[..rank]
                .iter()
                .map(|x| Rat::new(x.clone(), t.clone()))
                .collect(),
        );
    }
    if vertices.is_empty() {
        return Err(Error::Unbounded);
    }
    vertices.sort();
    let lifted: Vec<Vec<Rat>> = vertices
        .iter()
        .map(|v| {
            let mut w = v.clone();
            w.push(Rat::from(Int::from(1)));
            w
        })
        .collect();
    let dim = rat_rank(&lifted) - 1;
    Ok(RationalPolytope {
        rank,
        vertices,
        inequalities: points.iter().cloned().zip(rho.iter().cloned()).collect(),
        dim,
    })
}

impl RationalPolytope {
    /// Every vertex integral?
    pub fn is_integral(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|x| x.denom() == &Int::from(1)))
    }

    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        box_scan(self.rank, &self.vertices, &self.inequalities)
    }

    /// Lattice points satisfying every inequality strictly. Empty when the
    /// polytope is lower-dimensional.
    pub fn interior_lattice_points(&self) -> Vec<LatticePoint> {
        if self.dim < self.rank {
            return Vec::new();
        }
        self.lattice_points()
            .into_iter()
            .filter(|p| {
                self.inequalities
                    .iter()
                    .all(|(normal, offset)| Rat::from(dot_int(normal, p)) > -offset.clone())
            })
            .collect()
    }
}

/// Scans the integral bounding box of the vertices and keeps the points
/// satisfying every inequality. Output sorted lexicographically.
fn box_scan(
    rank: usize,
    vertices: &[Vec<Rat>],
    inequalities: &[(Vec<Int>, Rat)],
) -> Vec<LatticePoint> {
    if vertices.is_empty() {
        return Vec::new();
    }
    let mut lo = vec![Int::zero(); rank];
    let mut hi = vec![Int::zero(); rank];
    for j in 0..rank {
        let mut min = vertices[0][j].clone();
        let mut max = vertices[0][j].clone();
        for v in vertices.iter().skip(1) {
            if v[j] < min {
                min = v[j].clone();
            }
            if v[j] > max {
                max = v[j].clone();
            }
        }
        lo[j] = min.ceil().to_integer();
        hi[j] = max.floor().to_integer();
    }
    let mut out = Vec::new();
    let mut current = lo.clone();
    'scan: loop {
        let ok = inequalities
            .iter()
            .all(|(normal, offset)| Rat::from(dot_int(normal, &current)) >= -offset.clone());
        if ok {
            out.push(current.clone());
        }
        for j in (0..rank).rev() {
            if current[j] < hi[j] {
                current[j] += 1;
                for c in current.iter_mut().skip(j + 1) {
                    *c = Int::zero();
                }
                for (c, l) in current.iter_mut().zip(&lo).skip(j + 1) {
                    *c = l.clone();
                }
                continue 'scan;
            }
        }
        break;
    }
    out.sort();
    out
}

/// Closes the facet vertex sets under intersection into the face lattice.
fn face_lattice(rank: usize, vertices: &[LatticePoint], facets: &[Facet]) -> Vec<Vec<Face>> {
    use std::collections::BTreeSet;

    let tight_of = |vs: &[usize]| -> Vec<usize> {
        facets
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                vs.iter()
                    .all(|&vi| dot_int(&f.normal, &vertices[vi]) == -&f.offset)
            })
            .map(|(i, _)| i)
            .collect()
    };
    let dim_of = |vs: &[usize]| -> usize {
        if vs.is_empty() {
            return 0;
        }
        let base = &vertices[vs[0]];
        let rows: Vec<Vec<Rat>> = vs[1..]
            .iter()
            .map(|&vi| {
                vertices[vi]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| Rat::from(a - b))
                    .collect()
            })
            .collect();
        rat_rank(&rows)
    };

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut work: Vec<Vec<usize>> = Vec::new();
    for (i, f) in facets.iter().enumerate() {
        let vs: Vec<usize> = (0..vertices.len())
            .filter(|&vi| dot_int(&f.normal, &vertices[vi]) == -&f.offset)
            .collect();
        let _ = i;
        if seen.insert(vs.clone()) {
            work.push(vs);
        }
    }
    let mut idx = 0;
    while idx < work.len() {
        let current = work[idx].clone();
        idx += 1;
        for f in facets {
            let inter: Vec<usize> = current
                .iter()
                .cloned()
                .filter(|&vi| dot_int(&f.normal, &vertices[vi]) == -&f.offset)
                .collect();
            if inter.is_empty() || inter == current {
                continue;
            }
            if seen.insert(inter.clone()) {
                work.push(inter);
            }
        }
    }
    // Vertices are faces too (already closed in most cases, ensure).
    for vi in 0..vertices.len() {
        let vs = vec![vi];
        if seen.insert(vs.clone()) {
            work.push(vs);
        }
    }

    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); rank];
    for vs in seen {
        let dim = dim_of(&vs);
        let tight = tight_of(&vs);
        faces[dim].push(Face {
            dim,
            vertices: vs,
            tight_facets: tight,
        });
    }
    for level in faces.iter_mut() {
        level.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vec;

    fn diamond() -> LatticePolytope {
        LatticePolytope::from_vertices(&[
            int_vec(&[1, 0]),
            int_vec(&[0, 1]),
            int_vec(&[-1, 0]),
            int_vec(&[0, -1]),
        ])
        .unwrap()
    }

    fn cube3() -> LatticePolytope {
        let mut vs = Vec::new();
        for x in [-1i64, 1] {
            for y in [-1i64, 1] {
                for z in [-1i64, 1] {
                    vs.push(int_vec(&[x, y, z]));
                }
            }
        }
        LatticePolytope::from_vertices(&vs).unwrap()
    }

    fn quintic() -> LatticePolytope {
        LatticePolytope::from_vertices(&[
            int_vec(&[1, 0, 0, 0]),
            int_vec(&[0, 1, 0, 0]),
            int_vec(&[0, 0, 1, 0]),
            int_vec(&[0, 0, 0, 1]),
            int_vec(&[-1, -1, -1, -1]),
        ])
        .unwrap()
    }

    #[test]
    fn diamond_structure() {
        let p = diamond();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        for f in p.facets() {
            assert_eq!(f.offset, Int::from(1));
            assert!(f.normal.iter().all(|x| x.abs() <= Int::from(1)));
        }
        assert!(p.is_reflexive());
    }

    #[test]
    fn quintic_simplex_structure() {
        let p = quintic();
        assert_eq!(p.vertices().len(), 5);
        assert_eq!(p.facets().len(), 5);
        assert!(p.is_reflexive());
        assert_eq!(p.lattice_points().len(), 6);
    }

    #[test]
    fn interior_point_dropped() {
        let p = LatticePolytope::from_vertices(&[
            int_vec(&[1, 0]),
            int_vec(&[0, 1]),
            int_vec(&[-1, 0]),
            int_vec(&[0, -1]),
            int_vec(&[0, 0]),
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn low_dimensional_input_rejected() {
        let e = LatticePolytope::from_vertices(&[int_vec(&[1, 0]), int_vec(&[-1, 0])]);
        assert!(matches!(e, Err(Error::NotFullDimensional { .. })));
    }

    #[test]
    fn origin_must_be_interior() {
        let e = LatticePolytope::from_vertices(&[
            int_vec(&[0, 0]),
            int_vec(&[1, 0]),
            int_vec(&[0, 1]),
        ]);
        assert!(matches!(e, Err(Error::OriginNotInterior)));
    }

    #[test]
    fn dual_of_diamond_is_square() {
        let d = diamond().dual_lattice_polytope().unwrap();
        let mut vs = d.vertices().to_vec();
        vs.sort();
        let mut expect = vec![
            int_vec(&[-1, -1]),
            int_vec(&[-1, 1]),
            int_vec(&[1, -1]),
            int_vec(&[1, 1]),
        ];
        expect.sort();
        assert_eq!(vs, expect);
        assert_eq!(d.lattice_points().len(), 9);
    }

    #[test]
    fn dual_of_cube_is_octahedron() {
        let d = cube3().dual_lattice_polytope().unwrap();
        assert_eq!(d.vertices().len(), 6);
        for v in d.vertices() {
            let nonzero: Vec<_> = v.iter().filter(|x| !x.is_zero()).collect();
            assert_eq!(nonzero.len(), 1);
            assert_eq!(nonzero[0].abs(), Int::from(1));
        }
    }

    #[test]
    fn double_dual_is_identity() {
        for p in [diamond(), cube3(), quintic()] {
            let dd = p
                .dual_lattice_polytope()
                .unwrap()
                .dual_lattice_polytope()
                .unwrap();
            let mut a = p.vertices().to_vec();
            let mut b = dd.vertices().to_vec();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn non_reflexive_detected() {
        let p = LatticePolytope::from_vertices(&[
            int_vec(&[2, 0]),
            int_vec(&[-2, 0]),
            int_vec(&[0, 1]),
            int_vec(&[0, -1]),
        ])
        .unwrap();
        assert!(!p.is_reflexive());
        assert!(p.dual_lattice_polytope().is_err());
    }

    #[test]
    fn dual_of_quintic_has_126_points() {
        let d = quintic().dual_lattice_polytope().unwrap();
        assert_eq!(d.lattice_points().len(), 126);
    }

    #[test]
    fn face_counts_of_cube() {
        let p = cube3();
        assert_eq!(p.faces(0).len(), 8);
        assert_eq!(p.faces(1).len(), 12);
        assert_eq!(p.faces(2).len(), 6);
    }

    #[test]
    fn face_duality_bijection() {
        let p = cube3();
        let d = p.dual_lattice_polytope().unwrap();
        for dim in 0..3 {
            assert_eq!(p.faces(dim).len(), d.faces(2 - dim).len());
            for index in 0..p.faces(dim).len() {
                let id = FaceId { dim, index };
                let df = dual_face(&p, &d, id).unwrap();
                assert_eq!(df.dim, 2 - dim);
                // involution
                let back = dual_face(&d, &p, df).unwrap();
                assert_eq!(back, id);
            }
        }
    }

    #[test]
    fn facet_interior_of_cube_is_center() {
        let p = cube3();
        let id = p.facet_face(0);
        let pts = p.face_interior_points(id).unwrap();
        assert_eq!(pts.len(), 1);
        // the center of a facet of the cube has exactly one nonzero coord
        assert_eq!(pts[0].iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn edge_of_diamond_has_no_interior_points() {
        let p = diamond();
        for index in 0..p.faces(1).len() {
            let pts = p.face_interior_points(FaceId { dim: 1, index }).unwrap();
            assert!(pts.is_empty());
        }
    }

    #[test]
    fn facet_interior_of_quintic_dual() {
        let d = quintic().dual_lattice_polytope().unwrap();
        for index in 0..d.faces(3).len() {
            let pts = d.face_interior_points(FaceId { dim: 3, index }).unwrap();
            assert_eq!(pts.len(), 4);
        }
    }

    #[test]
    fn interior_count_consistency() {
        // sum of relative-interior counts over faces + origin = all points
        for p in [diamond(), cube3(), quintic()] {
            let total = p.lattice_points().len();
            let mut acc = 1; // origin
            for dim in 0..p.rank() {
                for index in 0..p.faces(dim).len() {
                    acc += p.face_interior_points(FaceId { dim, index }).unwrap().len();
                }
            }
            assert_eq!(acc, total);
        }
    }

    #[test]
    fn boundary_points_primitive() {
        for p in [diamond(), cube3(), quintic()] {
            for pt in p.lattice_points() {
                if pt.iter().all(|x| x.is_zero()) {
                    continue;
                }
                if p.tight_facets(&pt).is_empty() {
                    continue;
                }
                assert_eq!(primitive_int_vector(&int_vec_to_rat(&pt)), pt);
            }
        }
    }

    #[test]
    fn rho_dual_matches_dual_for_all_ones() {
        let p = diamond();
        let pts = p.vertices().to_vec();
        let one = Rat::from(Int::from(1));
        let rho = vec![one; 4];
        let q = rho_dual_polytope(2, &pts, &rho).unwrap();
        let mut got = q.lattice_points();
        got.sort();
        assert_eq!(got.len(), 9);
        // doubling the weights doubles the polytope
        let two = Rat::from(Int::from(2));
        let q2 = rho_dual_polytope(2, &pts, &vec![two; 4]).unwrap();
        assert_eq!(q2.lattice_points().len(), 25);
        assert_eq!(q2.interior_lattice_points().len(), 9);
    }

    #[test]
    fn rho_zero_gives_origin() {
        let p = diamond();
        let q = rho_dual_polytope(2, &p.vertices().to_vec(), &vec![Rat::zero(); 4]).unwrap();
        assert_eq!(q.lattice_points(), vec![int_vec(&[0, 0])]);
        assert!(q.dim < q.rank);
        assert!(q.interior_lattice_points().is_empty());
    }

    #[test]
    fn unbounded_rho_dual_rejected() {
        // only two points cannot bound a 2-dim dual
        let pts = vec![int_vec(&[1, 0]), int_vec(&[0, 1])];
        let one = Rat::from(Int::from(1));
        assert!(matches!(
            rho_dual_polytope(2, &pts, &[one.clone(), one]),
            Err(Error::Unbounded)
        ));
    }
}
