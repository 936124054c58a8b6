//! Boundary triangulations of reflexive polytopes.
//!
//! The 0-skeleton is always the full set of boundary lattice points away
//! from facet relative interiors. Each facet is subdivided by lifting its
//! points to the paraboloid and taking the lower hull; because a regular
//! subdivision restricted to a face depends only on that face's points and
//! heights, the per-facet pieces agree along shared ridges. Cells that are
//! not simplices (cocircular point sets) are triangulated by pulling from
//! their lexicographically smallest point, which is hereditary and so also
//! glues consistently.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    self, dot_int, dot_int_rat, int_vec_to_rat, rat_rank, smith_normal_form, solve_rational_rows,
    Int, IntMatrix, Rat,
};
use crate::polytope::{LatticePoint, LatticePolytope};

/// Simplicial decomposition of the boundary of a lattice polytope.
#[derive(Clone, Debug)]
pub struct Triangulation {
    host: LatticePolytope,
    points: Vec<LatticePoint>,
    /// Sorted n-element point-index sets, sorted lexicographically.
    maximal: Vec<Vec<usize>>,
    /// adjacency[si][k] = simplex sharing the face omitting maximal[si][k].
    adjacency: Vec<Vec<Option<usize>>>,
}

/// A candidate four-dimensional flip: two adjacent top simplices whose
/// opposite vertices close a parallelogram with two shared vertices.
///
/// The parallelogram lies in a 2-face of the host, which is shared with a
/// second facet; the pair of simplices coning the parallelogram from the
/// other side (`s2`, `t2` with apex `d0m`) must flip simultaneously or the
/// boundary complex stops being conforming.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlopCircuit {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    /// mirrored pair on the other side of the 2-face
    pub s2: Vec<usize>,
    pub t2: Vec<usize>,
    /// shared vertex not on the circuit
    pub d0: usize,
    /// apex of the mirrored pair
    pub d0m: usize,
    /// opposite vertices: d1 in s, d4 in t
    pub d1: usize,
    pub d4: usize,
    /// shared circuit vertices, d2 < d3
    pub d2: usize,
    pub d3: usize,
}

/// All boundary lattice points except facet relative interiors, sorted.
pub fn boundary_skeleton_points(p: &LatticePolytope) -> Result<Vec<LatticePoint>> {
    if !p.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    Ok(p.lattice_points()
        .into_iter()
        .filter(|q| p.tight_facets(q).len() >= 2)
        .collect())
}

impl Triangulation {
    /// Builds the canonical triangulation of the boundary of a reflexive
    /// polytope with the exact skeleton of boundary points.
    pub fn build(p: &LatticePolytope) -> Result<Self> {
        let points = boundary_skeleton_points(p)?;
        let n = p.rank();
        let mut maximal: BTreeSet<Vec<usize>> = BTreeSet::new();
        for fi in 0..p.facets().len() {
            let facet = &p.facets()[fi];
            let on_facet: Vec<usize> = points
                .iter()
                .enumerate()
                .filter(|(_, q)| dot_int(&facet.normal, q) == -&facet.offset)
                .map(|(i, _)| i)
                .collect();
            for cell in delaunay_cells(&points, &on_facet, n - 1) {
                for simplex in pull_triangulate(&points, &cell) {
                    maximal.insert(simplex);
                }
            }
        }
        Self::assemble(p.clone(), points, maximal.into_iter().collect(), true)
    }

    /// Fixture constructor: accepts an explicit point list and maximal
    /// simplices, skipping the reflexivity and skeleton-equality gates.
    /// Geometric validity (affine independence, shared-face conformity,
    /// exact volume coverage) is still enforced. Intended for test
    /// configurations whose point set deliberately differs from the
    /// boundary skeleton.
    pub fn from_parts(
        host: LatticePolytope,
        points: Vec<LatticePoint>,
        maximal: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut maximal: Vec<Vec<usize>> = maximal
            .into_iter()
            .map(|mut s| {
                s.sort();
                s
            })
            .collect();
        maximal.sort();
        maximal.dedup();
        Self::assemble(host, points, maximal, false)
    }

    fn assemble(
        host: LatticePolytope,
        points: Vec<LatticePoint>,
        maximal: Vec<Vec<usize>>,
        expect_skeleton: bool,
    ) -> Result<Self> {
        let adjacency = vec![Vec::new(); maximal.len()];
        let mut t = Triangulation {
            host,
            points,
            maximal,
            adjacency,
        };
        t.validate(expect_skeleton)?;
        t.adjacency = t.compute_adjacency();
        Ok(t)
    }

    pub fn host(&self) -> &LatticePolytope {
        &self.host
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn rank(&self) -> usize {
        self.host.rank()
    }

    /// The maximal (rank-1)-simplices as sorted point-index sets.
    pub fn maximal_simplices(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    pub fn adjacency(&self) -> &[Vec<Option<usize>>] {
        &self.adjacency
    }

    /// All j-simplices: the (j+1)-element subsets of maximal simplices.
    pub fn skeleton(&self, j: usize) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in &self.maximal {
            for combo in subsets(s, j + 1) {
                out.insert(combo);
            }
        }
        out.into_iter().collect()
    }

    /// Whether the sorted index set is a simplex of the complex.
    pub fn is_simplex(&self, s: &[usize]) -> bool {
        self.maximal
            .iter()
            .any(|m| s.iter().all(|i| m.binary_search(i).is_ok()))
    }

    /// Maximal simplices containing every point of `s`.
    pub fn star(&self, s: &[usize]) -> Vec<usize> {
        self.maximal
            .iter()
            .enumerate()
            .filter(|(_, m)| s.iter().all(|i| m.binary_search(i).is_ok()))
            .map(|(i, _)| i)
            .collect()
    }

    /// Point indices appearing in the star of `s` (including `s` itself).
    pub fn star_points(&self, s: &[usize]) -> Vec<usize> {
        let mut out: BTreeSet<usize> = BTreeSet::new();
        for &mi in &self.star(s) {
            out.extend(self.maximal[mi].iter().cloned());
        }
        out.into_iter().collect()
    }

    /// Lattice index of the sublattice generated by the skeleton points.
    /// 1 means the points span the whole lattice.
    pub fn check_spanning(&self) -> Int {
        let m = IntMatrix::from_cols(&self.points).expect("points share the rank");
        let s = smith_normal_form(&m);
        let mut idx = Int::from(1);
        for d in s.diagonal() {
            if !d.is_zero() {
                idx *= d;
            }
        }
        idx
    }

    /// Locates the unique simplex whose relative interior meets the ray
    /// through `x`, returning its point indices and the strictly positive
    /// coefficients expressing `x` in them.
    pub fn find_containing_simplex(&self, x: &[Rat]) -> Result<(Vec<usize>, Vec<Rat>)> {
        if x.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroVector);
        }
        for s in &self.maximal {
            let rows: Vec<Vec<Rat>> = (0..self.rank())
                .map(|coord| {
                    s.iter()
                        .map(|&pi| Rat::from(self.points[pi][coord].clone()))
                        .collect()
                })
                .collect();
            let Some(c) = solve_rational_rows(&rows, x) else {
                continue;
            };
            if c.iter().any(|v| v.is_negative()) {
                continue;
            }
            let mut sub = Vec::new();
            let mut coeff = Vec::new();
            for (i, v) in s.iter().zip(&c) {
                if v.is_positive() {
                    sub.push(*i);
                    coeff.push(v.clone());
                }
            }
            return Ok((sub, coeff));
        }
        Err(Error::InvalidInput(
            "ray through the point misses every simplex".into(),
        ))
    }

    /// Enumerates flippable circuits: adjacent top-simplex pairs whose
    /// opposite vertices satisfy d1 + d4 = d2 + d3 inside a single face of
    /// dimension at most two, with the whole configuration in one facet.
    pub fn flop_candidates(&self) -> Result<Vec<FlopCircuit>> {
        if self.rank() != 4 {
            return Err(Error::RankNotFour(self.rank()));
        }
        let mut out: Vec<FlopCircuit> = Vec::new();
        let mut seen: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
        for (si, s) in self.maximal.iter().enumerate() {
            for neighbor in self.adjacency[si].iter().flatten() {
                let ti = *neighbor;
                if ti <= si {
                    continue;
                }
                let t = &self.maximal[ti];
                let shared: Vec<usize> = s
                    .iter()
                    .cloned()
                    .filter(|i| t.binary_search(i).is_ok())
                    .collect();
                if shared.len() != 3 {
                    continue;
                }
                let d1 = *s.iter().find(|i| !shared.contains(i)).expect("opposite");
                let d4 = *t.iter().find(|i| !shared.contains(i)).expect("opposite");
                // all five points must fit in one host facet or the flipped
                // simplices would leave the boundary
                let mut all = shared.clone();
                all.push(d1);
                all.push(d4);
                if !self.common_facet(&all) {
                    continue;
                }
                for k in 0..3 {
                    let d0 = shared[k];
                    let mut rest: Vec<usize> =
                        shared.iter().cloned().filter(|&i| i != d0).collect();
                    rest.sort();
                    let (d2, d3) = (rest[0], rest[1]);
                    let sum_left: Vec<Int> = self.points[d1]
                        .iter()
                        .zip(&self.points[d4])
                        .map(|(a, b)| a + b)
                        .collect();
                    let sum_right: Vec<Int> = self.points[d2]
                        .iter()
                        .zip(&self.points[d3])
                        .map(|(a, b)| a + b)
                        .collect();
                    if sum_left != sum_right {
                        continue;
                    }
                    if !self.low_dim_common_face(&[d1, d2, d3, d4]) {
                        continue;
                    }
                    // flipped simplices must stay nondegenerate
                    if !self.independent(&[d0, d1, d2, d4]) || !self.independent(&[d0, d1, d3, d4])
                    {
                        continue;
                    }
                    // mirrored bipyramid across the 2-face: the neighbors
                    // over the two halves of the parallelogram must cone it
                    // from one common apex
                    let Some((s2, t2, d0m)) = self.mirror_pair(si, ti, d0) else {
                        continue;
                    };
                    if !self.independent(&[d0m, d1, d2, d4])
                        || !self.independent(&[d0m, d1, d3, d4])
                    {
                        continue;
                    }
                    let circuit = FlopCircuit {
                        s: s.clone(),
                        t: t.clone(),
                        s2,
                        t2,
                        d0,
                        d0m,
                        d1,
                        d4,
                        d2,
                        d3,
                    };
                    let mut key = vec![
                        circuit.s.clone(),
                        circuit.t.clone(),
                        circuit.s2.clone(),
                        circuit.t2.clone(),
                    ];
                    key.sort();
                    if seen.insert(key) {
                        out.push(circuit);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Neighbors of `s` across `s \ {d0}` and of `t` across `t \ {d0}`;
    /// they mirror the pair when both exist and share one apex.
    fn mirror_pair(&self, si: usize, ti: usize, d0: usize) -> Option<(Vec<usize>, Vec<usize>, usize)> {
        let pos_s = self.maximal[si].iter().position(|&i| i == d0)?;
        let pos_t = self.maximal[ti].iter().position(|&i| i == d0)?;
        let u1 = self.adjacency[si][pos_s]?;
        let u2 = self.adjacency[ti][pos_t]?;
        if u1 == ti || u2 == si || u1 == u2 {
            return None;
        }
        let apex1 = *self.maximal[u1]
            .iter()
            .find(|i| !self.maximal[si].contains(i))?;
        let apex2 = *self.maximal[u2]
            .iter()
            .find(|i| !self.maximal[ti].contains(i))?;
        if apex1 != apex2 {
            return None;
        }
        Some((self.maximal[u1].clone(), self.maximal[u2].clone(), apex1))
    }

    /// Replaces the circuit's pair `s = d0 d1 d2 d3`, `t = d0 d2 d3 d4` by
    /// `d0 d1 d2 d4` and `d0 d1 d3 d4`, applying the same exchange to the
    /// mirrored pair across the 2-face, and revalidates everything.
    pub fn apply_flop(&self, c: &FlopCircuit) -> Result<Triangulation> {
        let mut maximal = self.maximal.clone();
        let old = [&c.s, &c.t, &c.s2, &c.t2];
        let mut positions = Vec::new();
        for o in old {
            match maximal.iter().position(|m| m == o) {
                Some(p) => positions.push(p),
                None => return Err(Error::StaleCircuit),
            }
        }
        positions.sort();
        positions.dedup();
        if positions.len() != 4 {
            return Err(Error::StaleCircuit);
        }
        for &p in positions.iter().rev() {
            maximal.remove(p);
        }
        for (a, b, apex) in [
            (c.d2, c.d4, c.d0),
            (c.d3, c.d4, c.d0),
            (c.d2, c.d4, c.d0m),
            (c.d3, c.d4, c.d0m),
        ] {
            let mut s_new = vec![apex, c.d1, a, b];
            s_new.sort();
            maximal.push(s_new);
        }
        maximal.sort();
        maximal.dedup();
        Self::assemble(self.host.clone(), self.points.clone(), maximal, false)
    }

    fn common_facet(&self, ids: &[usize]) -> bool {
        self.host.facets().iter().any(|f| {
            ids.iter()
                .all(|&i| dot_int(&f.normal, &self.points[i]) == -&f.offset)
        })
    }

    /// Whether the points share a face of dimension at most 2. A boundary
    /// point lies in a face exactly when it is tight on all of its facets.
    fn low_dim_common_face(&self, ids: &[usize]) -> bool {
        for dim in 0..=2.min(self.rank() - 1) {
            for face in self.host.faces(dim) {
                if face.tight_facets.is_empty() {
                    continue;
                }
                let ok = ids.iter().all(|&i| {
                    face.tight_facets.iter().all(|&fi| {
                        let f = &self.host.facets()[fi];
                        dot_int(&f.normal, &self.points[i]) == -&f.offset
                    })
                });
                if ok {
                    return true;
                }
            }
        }
        false
    }

    fn independent(&self, ids: &[usize]) -> bool {
        let rows: Vec<Vec<Rat>> = ids
            .iter()
            .map(|&i| int_vec_to_rat(&self.points[i]))
            .collect();
        rat_rank(&rows) == ids.len()
    }

    fn compute_adjacency(&self) -> Vec<Vec<Option<usize>>> {
        let n = self.rank();
        let mut ridge_map: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (si, s) in self.maximal.iter().enumerate() {
            for k in 0..n {
                let mut ridge = s.clone();
                ridge.remove(k);
                ridge_map.entry(ridge).or_default().push((si, k));
            }
        }
        let mut adj = vec![vec![None; n]; self.maximal.len()];
        for entry in ridge_map.values() {
            if entry.len() == 2 {
                let (a, ak) = entry[0];
                let (b, bk) = entry[1];
                adj[a][ak] = Some(b);
                adj[b][bk] = Some(a);
            }
        }
        adj
    }

    /// Full validity check: each simplex spans, lies in a host facet, each
    /// ridge is shared by exactly two simplices, every point is used, and
    /// the simplex determinants account exactly for the host volume.
    fn validate(&self, expect_skeleton: bool) -> Result<()> {
        let n = self.rank();
        if expect_skeleton {
            let skel = boundary_skeleton_points(&self.host)?;
            if skel != self.points {
                return Err(Error::InvalidInput(
                    "triangulation points differ from the boundary skeleton".into(),
                ));
            }
        }
        let mut used = vec![false; self.points.len()];
        let mut total = Int::zero();
        for s in &self.maximal {
            if s.len() != n {
                return Err(Error::InvalidInput(format!(
                    "simplex {:?} does not have {} points",
                    s, n
                )));
            }
            if s.iter().any(|&i| i >= self.points.len()) {
                return Err(Error::IndexMismatch(format!("simplex {:?} out of range", s)));
            }
            for &i in s {
                used[i] = true;
            }
            let det = det_int(
                &s.iter()
                    .map(|&i| self.points[i].clone())
                    .collect::<Vec<_>>(),
            );
            if det.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "degenerate simplex {:?}",
                    s
                )));
            }
            total += det.abs();
            if !self.common_facet(s) {
                return Err(Error::InvalidInput(format!(
                    "simplex {:?} is not contained in a facet",
                    s
                )));
            }
        }
        if used.iter().any(|u| !u) {
            return Err(Error::InvalidInput(
                "a triangulation point is unused".into(),
            ));
        }
        // Boundary of a full-dimensional polytope is closed: every ridge of
        // a top simplex is shared by exactly two of them.
        let mut ridge_count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for s in &self.maximal {
            for k in 0..n {
                let mut ridge = s.clone();
                ridge.remove(k);
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        if let Some((ridge, count)) = ridge_count.iter().find(|(_, &c)| c != 2) {
            return Err(Error::InvalidInput(format!(
                "ridge {:?} lies in {} simplices, expected 2",
                ridge, count
            )));
        }
        let expect = normalized_volume(&self.host);
        if total != expect {
            return Err(Error::InvalidInput(format!(
                "simplex volumes sum to {}, host volume is {}",
                total, expect
            )));
        }
        Ok(())
    }
}

/// Determinant of a square integer matrix given by rows (fraction-free
/// would do, but exact rational elimination is fine at this scale).
pub fn det_int(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| int_vec_to_rat(r)).collect();
    let mut det = Rat::from(Int::from(1));
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Int::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let t = &m[c][j] * &f;
                m[i][j] -= t;
            }
        }
    }
    debug_assert!(det.denom() == &Int::from(1));
    det.to_integer()
}

/// Exact normalized volume (n! times the Euclidean volume) of the host,
/// computed by pulling a vertex triangulation off the face lattice and
/// coning from the origin. Independent of the boundary triangulation code
/// path above.
pub fn normalized_volume(p: &LatticePolytope) -> Int {
    let n = p.rank();
    // memoized vertex triangulations of faces, keyed by (dim, index)
    let mut memo: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for index in 0..p.faces(0).len() {
        let v = p.faces(0)[index].vertices.clone();
        memo.insert((0, index), vec![v]);
    }
    for dim in 1..n {
        for index in 0..p.faces(dim).len() {
            let face = &p.faces(dim)[index];
            let v0 = face.vertices[0];
            let mut simplices = Vec::new();
            for (sub_index, sub) in p.faces(dim - 1).iter().enumerate() {
                if sub.vertices.contains(&v0) {
                    continue;
                }
                if !sub.vertices.iter().all(|v| face.vertices.contains(v)) {
                    continue;
                }
                for s in &memo[&(dim - 1, sub_index)] {
                    let mut t = s.clone();
                    t.push(v0);
                    simplices.push(t);
                }
            }
            memo.insert((dim, index), simplices);
        }
    }
    let mut total = Int::zero();
    for index in 0..p.faces(n - 1).len() {
        for s in &memo[&(n - 1, index)] {
            let rows: Vec<Vec<Int>> = s.iter().map(|&vi| p.vertices()[vi].clone()).collect();
            total += det_int(&rows).abs();
        }
    }
    total
}

fn subsets(s: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0usize)];
    while let Some((cur, start)) = stack.pop() {
        if cur.len() == k {
            out.push(cur);
            continue;
        }
        for i in start..s.len() {
            let mut next = cur.clone();
            next.push(s[i]);
            stack.push((next, i + 1));
        }
    }
    out.sort();
    out
}

/// Affine coordinates of a point subset: deterministic basis from the
/// lex-sorted points themselves, so the result depends only on the subset.
fn affine_coords(points: &[LatticePoint], ids: &[usize]) -> (usize, Vec<Vec<Rat>>) {
    let mut sorted = ids.to_vec();
    sorted.sort_by(|&a, &b| points[a].cmp(&points[b]));
    let base = &points[sorted[0]];
    // greedy independent difference vectors
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for &i in &sorted[1..] {
        let d: Vec<Rat> = points[i]
            .iter()
            .zip(base)
            .map(|(a, b)| Rat::from(a - b))
            .collect();
        let mut trial = basis.clone();
        trial.push(d.clone());
        if rat_rank(&trial) == trial.len() {
            basis.push(d);
        }
    }
    let dim = basis.len();
    let ambient = base.len();
    // coords of q: solve sum_j c_j basis_j = q - base (consistent by span)
    let rows: Vec<Vec<Rat>> = (0..ambient)
        .map(|coord| basis.iter().map(|b| b[coord].clone()).collect())
        .collect();
    let coords: Vec<Vec<Rat>> = ids
        .iter()
        .map(|&i| {
            let rhs: Vec<Rat> = points[i]
                .iter()
                .zip(base)
                .map(|(a, b)| Rat::from(a - b))
                .collect();
            solve_rational_rows(&rows, &rhs).expect("point lies in the affine span")
        })
        .collect();
    (dim, coords)
}

/// Facets of the convex hull of a point subset inside its own affine span:
/// returns the tight point-index subsets (global indices).
fn hull_facet_sets(points: &[LatticePoint], ids: &[usize]) -> Vec<Vec<usize>> {
    let (dim, coords) = affine_coords(points, ids);
    let rays: Vec<Vec<Rat>> = coords
        .iter()
        .map(|c| {
            let mut v = c.clone();
            v.push(Rat::from(Int::from(1)));
            v
        })
        .collect();
    let int_rays: Vec<Vec<Int>> = rays
        .iter()
        .map(|r| exactlin::primitive_int_vector(r))
        .collect();
    let facet_vectors = exactlin::cone_facets(dim + 1, &int_rays, &[]);
    facet_vectors
        .into_iter()
        .map(|f| {
            ids.iter()
                .cloned()
                .zip(&rays)
                .filter(|(_, r)| dot_int_rat(&f, r).is_zero())
                .map(|(id, _)| id)
                .collect::<Vec<usize>>()
        })
        .filter(|tight| !tight.is_empty() && tight.len() < ids.len())
        .collect()
}

/// Triangulates a polytopal cell (all of whose points are vertices) by
/// pulling from the point with the lexicographically smallest coordinates.
/// Depends only on the point subset, so shared faces triangulate alike.
fn pull_triangulate(points: &[LatticePoint], ids: &[usize]) -> Vec<Vec<usize>> {
    let (dim, _) = affine_coords(points, ids);
    if ids.len() == dim + 1 {
        let mut s = ids.to_vec();
        s.sort();
        return vec![s];
    }
    let apex = *ids
        .iter()
        .min_by(|&&a, &&b| points[a].cmp(&points[b]))
        .expect("nonempty cell");
    let mut out = Vec::new();
    for facet in hull_facet_sets(points, ids) {
        if facet.contains(&apex) {
            continue;
        }
        for sub in pull_triangulate(points, &facet) {
            let mut s = sub;
            s.push(apex);
            s.sort();
            out.push(s);
        }
    }
    out
}

/// Regular subdivision of a facet point configuration: lift to squared
/// lengths, take lower hull cells. `dim` is the expected affine dimension.
fn delaunay_cells(points: &[LatticePoint], ids: &[usize], dim: usize) -> Vec<Vec<usize>> {
    if ids.len() == dim + 1 {
        let mut s = ids.to_vec();
        s.sort();
        return vec![s];
    }
    let (adim, coords) = affine_coords(points, ids);
    assert_eq!(adim, dim, "facet points span the facet");
    let lifted: Vec<Vec<Rat>> = ids
        .iter()
        .zip(&coords)
        .map(|(&i, c)| {
            let h: Int = points[i].iter().map(|x| x * x).sum();
            let mut v = c.clone();
            v.push(Rat::from(h));
            v.push(Rat::from(Int::from(1)));
            v
        })
        .collect();
    let int_rays: Vec<Vec<Int>> = lifted
        .iter()
        .map(|r| exactlin::primitive_int_vector(r))
        .collect();
    let facet_vectors = exactlin::cone_facets(dim + 2, &int_rays, &[]);
    let mut cells = Vec::new();
    for f in facet_vectors {
        // lower facets: positive coefficient on the lift coordinate
        if !f[dim].is_positive() {
            continue;
        }
        let cell: Vec<usize> = ids
            .iter()
            .cloned()
            .zip(&lifted)
            .filter(|(_, r)| dot_int_rat(&f, r).is_zero())
            .map(|(id, _)| id)
            .collect();
        cells.push(cell);
    }
    assert!(
        !cells.is_empty(),
        "lifted facet configuration has a lower hull"
    );
    cells
}
