//! Mirror-pair computations: Picard and deformation dimension formulas
//! with per-face breakdowns, degeneration cones and their classification,
//! orbit-closure data, flop comparison reports, and one-parameter family
//! records.

use num_traits::{Signed, Zero};

use crate::divisors::{
    build_divisor_lattice, cone_interior_disjoint, is_convex_divisor, is_strictly_convex_divisor,
    kahler_cone, DisjointnessReport, Divisor, DivisorLattice, RationalCone,
};
use crate::error::{Error, Result};
use crate::exactlin::{smith_normal_form, Int, IntMatrix, Rat};
use crate::polytope::{dual_face, FaceId, LatticePoint, LatticePolytope};
use crate::triangulation::{boundary_skeleton_points, Triangulation};

/// One codimension-two face contribution to a dimension formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionTerm {
    pub face: FaceId,
    pub interior_points: usize,
    pub dual_interior_points: usize,
    pub product: usize,
}

/// Dimension formula report: base rank plus codimension-two face
/// corrections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeReport {
    /// Number of divisor basis points on the side being computed.
    pub d: usize,
    /// Lattice rank.
    pub n: usize,
    /// d - n.
    pub base: usize,
    pub corrections: Vec<CorrectionTerm>,
    pub total: usize,
    /// Index of the sublattice spanned by the points, when a triangulation
    /// was supplied; 1 means spanning.
    pub spanning_index: Option<Int>,
}

/// Shared formula: `d - n` plus, over every codimension-two face `F` of
/// `p`, the product of the interior lattice point counts of `F` and of its
/// dual face.
fn dimension_formula(p: &LatticePolytope, d: usize, spanning_index: Option<Int>) -> Result<HodgeReport> {
    let n = p.rank();
    if d < n {
        return Err(Error::InvalidInput(format!(
            "{d} points cannot span rank {n}"
        )));
    }
    let dual = p.dual_lattice_polytope()?;
    let mut corrections = Vec::new();
    let mut total = d - n;
    if n >= 2 {
        for (index, _) in p.faces(n - 2).iter().enumerate() {
            let id = FaceId { dim: n - 2, index };
            let inner = p.face_interior_points(id)?.len();
            let dual_id = dual_face(p, &dual, id)?;
            let dual_inner = dual.face_interior_points(dual_id)?.len();
            let product = inner * dual_inner;
            total += product;
            corrections.push(CorrectionTerm {
                face: id,
                interior_points: inner,
                dual_interior_points: dual_inner,
                product,
            });
        }
    }
    Ok(HodgeReport {
        d,
        n,
        base: d - n,
        corrections,
        total,
        spanning_index,
    })
}

/// Divisor-class dimension of the hypersurface family attached to the
/// triangulation's polytope. Depends on the triangulation only through its
/// point count.
pub fn picard_dim(t: &Triangulation) -> Result<HodgeReport> {
    dimension_formula(t.host(), t.points().len(), Some(t.check_spanning()))
}

/// Deformation dimension: the same formula evaluated on the dual polytope,
/// with the point count taken from the dual boundary skeleton. Needs no
/// triangulation.
pub fn deformation_dim(p: &LatticePolytope) -> Result<HodgeReport> {
    let dual = p.dual_lattice_polytope()?;
    let d = boundary_skeleton_points(&dual)?.len();
    dimension_formula(&dual, d, None)
}

/// The degeneration cone of the family: the nef cone construction applied
/// to the dual-side triangulation.
pub fn degeneration_cone(t_dual: &Triangulation, dl_dual: &DivisorLattice) -> Result<RationalCone> {
    kahler_cone(t_dual, dl_dual)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegenerationClass {
    /// Some relation pairing is negative.
    NotNonnegative,
    /// All relation pairings are nonnegative, some vanish.
    Nonnegative,
    /// All relation pairings are positive but some coefficient is not.
    Positive,
    /// All relation pairings and all coefficients are positive.
    MaximalUnipotent,
}

/// A one-parameter degeneration direction over the dual-side points.
#[derive(Clone, Debug)]
pub struct DegenerationFamily {
    pub mu: Divisor,
    pub class: DegenerationClass,
    /// Exponent vector of the distinguished limit monomial, present for
    /// maximal unipotent directions: the section at the origin, which has
    /// exponent one on every point.
    pub limit_exponents: Option<Vec<Int>>,
}

/// Classifies a degeneration direction by its pairings with the relation
/// vectors of the dual-side triangulation and by the signs of its own
/// coefficients.
pub fn classify_degeneration(
    t_dual: &Triangulation,
    dl_dual: &DivisorLattice,
    mu: &Divisor,
) -> Result<DegenerationFamily> {
    if mu.coeffs.len() != dl_dual.size() {
        return Err(Error::IndexMismatch(format!(
            "direction length {} vs point count {}",
            mu.coeffs.len(),
            dl_dual.size()
        )));
    }
    let class = if !is_convex_divisor(t_dual, dl_dual, mu)? {
        DegenerationClass::NotNonnegative
    } else if !is_strictly_convex_divisor(t_dual, dl_dual, mu)? {
        DegenerationClass::Nonnegative
    } else if mu.coeffs.iter().all(|c| c.is_positive()) {
        DegenerationClass::MaximalUnipotent
    } else {
        DegenerationClass::Positive
    };
    let limit_exponents = if class == DegenerationClass::MaximalUnipotent {
        Some(vec![Int::from(1); dl_dual.size()])
    } else {
        None
    };
    Ok(DegenerationFamily {
        mu: mu.clone(),
        class,
        limit_exponents,
    })
}

/// Mirror-pair verification report.
#[derive(Clone, Debug)]
pub struct MirrorReport {
    pub pic: HodgeReport,
    pub def: HodgeReport,
    pub mirror_pic: HodgeReport,
    pub mirror_def: HodgeReport,
    /// pic of one side equals def of the other, both ways.
    pub dimensions_swap: bool,
    /// The dual-side nef cone and the degeneration cone agree.
    pub cones_identified: bool,
    /// For rank 3: (pic + def, whether the sum is 20).
    pub k3_sum: Option<(usize, bool)>,
}

/// Verifies the mirror relations between a polytope with a boundary
/// triangulation and its dual with its own triangulation.
pub fn mirror_check(t: &Triangulation, t_dual: &Triangulation) -> Result<MirrorReport> {
    let p = t.host();
    let dual = p.dual_lattice_polytope()?;
    let mut expect: Vec<LatticePoint> = dual.vertices().to_vec();
    expect.sort();
    let mut got: Vec<LatticePoint> = t_dual.host().vertices().to_vec();
    got.sort();
    if expect != got {
        return Err(Error::InvalidInput(
            "second triangulation does not live on the dual polytope".into(),
        ));
    }
    let pic = picard_dim(t)?;
    let def = deformation_dim(p)?;
    let mirror_pic = picard_dim(t_dual)?;
    let mirror_def = deformation_dim(t_dual.host())?;
    let dimensions_swap =
        pic.total == mirror_def.total && def.total == mirror_pic.total;
    let dl_dual = build_divisor_lattice(t_dual)?;
    let nef = kahler_cone(t_dual, &dl_dual)?;
    let degeneration = degeneration_cone(t_dual, &dl_dual)?;
    // Both cones carry an inequality description; comparing those sets
    // avoids enumerating extreme rays, which is infeasible when the class
    // lattice is large.
    let sorted = |c: &RationalCone| {
        let mut v = c.facet_normals().to_vec();
        v.sort();
        v
    };
    let cones_identified = nef.ambient_dim() == degeneration.ambient_dim()
        && sorted(&nef) == sorted(&degeneration);
    let k3_sum = if p.rank() == 3 {
        let sum = pic.total + def.total;
        Some((sum, sum == 20))
    } else {
        None
    };
    Ok(MirrorReport {
        pic,
        def,
        mirror_pic,
        mirror_def,
        dimensions_swap,
        cones_identified,
        k3_sum,
    })
}

/// Orbit-closure data of a boundary simplex: the quotient projection that
/// kills the simplex, the star, and the induced polytope with its boundary
/// triangulation in the quotient.
#[derive(Clone, Debug)]
pub struct OrbitClosureData {
    pub simplex: Vec<usize>,
    /// Projection to the quotient lattice, one row per quotient coordinate.
    /// Kills exactly the saturated span of the simplex points.
    pub projection: IntMatrix,
    /// Indices of the maximal simplices containing the simplex.
    pub star_simplices: Vec<usize>,
    /// Point indices appearing in the star.
    pub star_points: Vec<usize>,
    /// Projected images of the star points not in the simplex, deduplicated
    /// and sorted; the point set of the quotient triangulation.
    pub projected_points: Vec<LatticePoint>,
    /// Hull of the projected points; absent for zero-dimensional quotients.
    pub polytope: Option<LatticePolytope>,
    /// Projected star triangulation over that hull; absent with it.
    pub triangulation: Option<Triangulation>,
}

/// Computes orbit-closure data for a simplex of the complex.
pub fn orbit_closure_data(t: &Triangulation, s: &[usize]) -> Result<OrbitClosureData> {
    if !t.is_simplex(s) {
        return Err(Error::InvalidInput("not a simplex of the complex".into()));
    }
    let n = t.rank();
    let cols: Vec<LatticePoint> = s.iter().map(|&i| t.points()[i].clone()).collect();
    let m = IntMatrix::from_cols(&cols)?;
    let snf = smith_normal_form(&m);
    let rank = snf.rank();
    let q = n - rank;
    // Rows of U past the rank kill the saturated span of the columns.
    let projection = IntMatrix::from_rows(
        &(rank..n).map(|i| snf.u.row(i)).collect::<Vec<_>>(),
    )
    .unwrap_or_else(|_| IntMatrix::zero(0, n));
    let star_simplices = t.star(s);
    let star_points = t.star_points(s);
    let project = |p: &LatticePoint| -> LatticePoint {
        (0..q)
            .map(|i| crate::exactlin::dot_int(&projection.row(i), p))
            .collect()
    };
    let mut projected_points: Vec<LatticePoint> = star_points
        .iter()
        .filter(|i| !s.contains(i))
        .map(|&i| project(&t.points()[i]))
        .collect();
    projected_points.sort();
    projected_points.dedup();
    if q == 0 {
        return Ok(OrbitClosureData {
            simplex: s.to_vec(),
            projection,
            star_simplices,
            star_points,
            projected_points,
            polytope: None,
            triangulation: None,
        });
    }
    let polytope = LatticePolytope::from_vertices(&projected_points)?;
    let maximal: Vec<Vec<usize>> = star_simplices
        .iter()
        .map(|&mi| {
            let mut ids: Vec<usize> = t.maximal_simplices()[mi]
                .iter()
                .filter(|i| !s.contains(i))
                .map(|&i| {
                    let img = project(&t.points()[i]);
                    projected_points
                        .binary_search(&img)
                        .expect("projected star point recorded")
                })
                .collect();
            ids.sort();
            ids.dedup();
            ids
        })
        .collect();
    let triangulation =
        Triangulation::from_parts(polytope.clone(), projected_points.clone(), maximal)?;
    Ok(OrbitClosureData {
        simplex: s.to_vec(),
        projection,
        star_simplices,
        star_points,
        projected_points,
        polytope: Some(polytope),
        triangulation: Some(triangulation),
    })
}

/// Comparison report for a triangulation and one of its flips.
#[derive(Clone, Debug)]
pub struct FlopMirrorReport {
    /// Shared divisor-class dimension report.
    pub picard: HodgeReport,
    pub cone: RationalCone,
    pub flipped_cone: RationalCone,
    /// The two nef cones, read as degeneration cones of the mirror, have
    /// disjoint interiors.
    pub disjointness: DisjointnessReport,
}

/// Verifies that `t_flip` arises from `t` by one flip and reports the
/// shared dimension data plus the two nef cones with their disjointness
/// certificate.
pub fn flop_mirror_report(t: &Triangulation, t_flip: &Triangulation) -> Result<FlopMirrorReport> {
    if t.points() != t_flip.points() {
        return Err(Error::InvalidInput(
            "triangulations use different point sets".into(),
        ));
    }
    let mut is_flip = false;
    for c in t.flop_candidates()? {
        if let Ok(applied) = t.apply_flop(&c) {
            if applied.maximal_simplices() == t_flip.maximal_simplices() {
                is_flip = true;
                break;
            }
        }
    }
    if !is_flip {
        return Err(Error::InvalidInput(
            "second triangulation is not a flip of the first".into(),
        ));
    }
    let picard = picard_dim(t)?;
    let picard_flip = picard_dim(t_flip)?;
    if picard.total != picard_flip.total {
        return Err(Error::InvalidInput(
            "flip changed the divisor-class dimension".into(),
        ));
    }
    let dl = build_divisor_lattice(t)?;
    let dl_flip = build_divisor_lattice(t_flip)?;
    let cone = kahler_cone(t, &dl)?;
    let flipped_cone = kahler_cone(t_flip, &dl_flip)?;
    let disjointness = cone_interior_disjoint(&cone, &flipped_cone)?;
    Ok(FlopMirrorReport {
        picard,
        cone,
        flipped_cone,
        disjointness,
    })
}

/// One monomial of a one-parameter family: a dual lattice point, its
/// exponent vector over the primal points, its base coefficient, and the
/// exponent of the deformation parameter attached to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTerm {
    pub point: LatticePoint,
    pub exponents: Vec<Int>,
    pub coefficient: Rat,
    pub parameter_exponent: Rat,
}

/// Symbolic record of a one-parameter deformation family: the
/// distinguished constant monomial plus one term per dual point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneParameterFamily {
    /// Exponents of the distinguished section at the origin: one on every
    /// primal point.
    pub constant_exponents: Vec<Int>,
    pub terms: Vec<FamilyTerm>,
}

/// Builds the family record for a direction `mu` and base coefficients
/// over a list of dual lattice points. Every dual point must satisfy all
/// primal point inequalities so its exponents are nonnegative.
pub fn one_parameter_family(
    dl: &DivisorLattice,
    dual_points: &[LatticePoint],
    mu: &[Rat],
    base: &[Rat],
) -> Result<OneParameterFamily> {
    if dual_points.len() != mu.len() || dual_points.len() != base.len() {
        return Err(Error::IndexMismatch(format!(
            "{} dual points vs {} direction entries vs {} coefficients",
            dual_points.len(),
            mu.len(),
            base.len()
        )));
    }
    let mut terms = Vec::new();
    for ((v, m), b) in dual_points.iter().zip(mu).zip(base) {
        let exponents: Vec<Int> = dl
            .points()
            .iter()
            .map(|p| crate::exactlin::dot_int(p, v) + 1)
            .collect();
        if exponents.iter().any(|e| e.is_negative()) {
            return Err(Error::NotOnDualFace(
                "dual point lies outside the dual polytope".into(),
            ));
        }
        terms.push(FamilyTerm {
            point: v.clone(),
            exponents,
            coefficient: b.clone(),
            parameter_exponent: m.clone(),
        });
    }
    Ok(OneParameterFamily {
        constant_exponents: vec![Int::from(1); dl.size()],
        terms,
    })
}

/// Two family records describe the same family when they agree except for
/// a single positive rescaling of all parameter exponents.
pub fn equivalent_families(a: &OneParameterFamily, b: &OneParameterFamily) -> bool {
    if a.constant_exponents != b.constant_exponents || a.terms.len() != b.terms.len() {
        return false;
    }
    let mut scale: Option<Rat> = None;
    for (x, y) in a.terms.iter().zip(&b.terms) {
        if x.point != y.point || x.exponents != y.exponents || x.coefficient != y.coefficient {
            return false;
        }
        match (x.parameter_exponent.is_zero(), y.parameter_exponent.is_zero()) {
            (true, true) => continue,
            (false, false) => {
                let r = &y.parameter_exponent / &x.parameter_exponent;
                if !r.is_positive() {
                    return false;
                }
                match &scale {
                    None => scale = Some(r),
                    Some(s) if *s == r => {}
                    _ => return false,
                }
            }
            _ => return false,
        }
    }
    true
}
