//! Double-description conversion for polyhedral cones.
//!
//! [`extreme_rays`] turns an inequality description `{x : <a_i, x> >= 0}`
//! into a lineality basis plus extreme rays; [`cone_facets`] goes the other
//! way through duality. Constraints are processed in lexicographic order,
//! adjacency is tested combinatorially on tight sets, and all vectors are
//! kept as primitive integers, so the output is deterministic.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::{dot_int_rat, int_vec_to_rat, primitive_int_vector, Int, Rat};

/// Generator description of a cone: `span(lineality) + cone(rays)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeRep {
    pub lineality: Vec<Vec<Int>>,
    pub rays: Vec<Vec<Int>>,
}

#[derive(Clone)]
struct Ray {
    v: Vec<Rat>,
    /// Indices of already-processed inequalities tight on this ray.
    tight: BTreeSet<usize>,
}

/// Extreme rays and lineality of `{x in Q^dim : <a, x> >= 0 for all a}`.
pub fn extreme_rays(dim: usize, ineqs: &[Vec<Int>]) -> ConeRep {
    let mut order: Vec<Vec<Int>> = ineqs.to_vec();
    order.sort();
    order.dedup();

    let mut lineality: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut e = vec![Rat::zero(); dim];
            e[i] = Rat::from(Int::from(1));
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (ci, a) in order.iter().enumerate() {
        let lin_vals: Vec<Rat> = lineality.iter().map(|l| dot_int_rat(a, l)).collect();
        if let Some(p) = lin_vals.iter().position(|x| !x.is_zero()) {
            // The constraint cuts the lineality space: one lineality
            // generator becomes an extreme ray, everything else is
            // projected into the constraint hyperplane.
            let l0 = lineality.remove(p);
            let s = lin_vals[p].clone();
            for l in lineality.iter_mut() {
                let f = dot_int_rat(a, l) / &s;
                for (x, y) in l.iter_mut().zip(&l0) {
                    *x -= &f * y;
                }
            }
            for r in rays.iter_mut() {
                let f = dot_int_rat(a, &r.v) / &s;
                for (x, y) in r.v.iter_mut().zip(&l0) {
                    *x -= &f * y;
                }
                r.tight.insert(ci);
            }
            let r0 = if s.is_positive() {
                l0
            } else {
                l0.iter().map(|x| -x).collect()
            };
            rays.push(Ray {
                v: r0,
                tight: (0..ci).collect(),
            });
            continue;
        }

        let vals: Vec<Rat> = rays.iter().map(|r| dot_int_rat(a, &r.v)).collect();
        if vals.iter().all(|x| !x.is_negative()) {
            for (r, val) in rays.iter_mut().zip(&vals) {
                if val.is_zero() {
                    r.tight.insert(ci);
                }
            }
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        for (r, val) in rays.iter().zip(&vals) {
            if val.is_positive() {
                next.push(r.clone());
            } else if val.is_zero() {
                let mut r = r.clone();
                r.tight.insert(ci);
                next.push(r);
            }
        }
        for (pi, pval) in vals.iter().enumerate() {
            if !pval.is_positive() {
                continue;
            }
            for (ni, nval) in vals.iter().enumerate() {
                if !nval.is_negative() {
                    continue;
                }
                if !adjacent(&rays, pi, ni) {
                    continue;
                }
                let p = &rays[pi];
                let m = &rays[ni];
                let combo: Vec<Rat> = p
                    .v
                    .iter()
                    .zip(&m.v)
                    .map(|(pv, mv)| pv * (-nval) + mv * pval)
                    .collect();
                let mut tight: BTreeSet<usize> =
                    p.tight.intersection(&m.tight).cloned().collect();
                tight.insert(ci);
                next.push(Ray {
                    v: int_vec_to_rat(&primitive_int_vector(&combo)),
                    tight,
                });
            }
        }
        rays = next;
    }

    let mut out_rays: Vec<Vec<Int>> = rays.iter().map(|r| primitive_int_vector(&r.v)).collect();
    out_rays.sort();
    out_rays.dedup();
    let mut out_lin: Vec<Vec<Int>> = lineality.iter().map(|l| primitive_int_vector(l)).collect();
    out_lin.sort();
    ConeRep {
        lineality: out_lin,
        rays: out_rays,
    }
}

/// Combinatorial adjacency: no third ray is tight on everything the pair is
/// jointly tight on.
fn adjacent(rays: &[Ray], i: usize, j: usize) -> bool {
    let z: BTreeSet<usize> = rays[i].tight.intersection(&rays[j].tight).cloned().collect();
    !rays
        .iter()
        .enumerate()
        .any(|(k, r)| k != i && k != j && z.is_subset(&r.tight))
}

/// Facet normals of `span(lineality) + cone(rays)`: the extreme rays of the
/// dual cone, which lives in the orthogonal complement of the lineality.
pub fn cone_facets(dim: usize, rays: &[Vec<Int>], lineality: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut ineqs: Vec<Vec<Int>> = rays.to_vec();
    for l in lineality {
        ineqs.push(l.clone());
        ineqs.push(l.iter().map(|x| -x).collect());
    }
    let rep = extreme_rays(dim, &ineqs);
    let mut out = rep.rays;
    for l in rep.lineality {
        out.push(l.iter().map(|x| -x).collect());
        out.push(l);
    }
    out.sort();
    out.dedup();
    out
}
