//! Shared fixtures and helpers for the integration test targets.
#![allow(dead_code)]

use toric_mirror::exactlin::{Int, Rat};
use toric_mirror::polytope::{LatticePoint, LatticePolytope};
use toric_mirror::triangulation::Triangulation;

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat(n: i64) -> Rat {
    Rat::from(Int::from(n))
}

pub fn rat_q(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn diamond() -> LatticePolytope {
    LatticePolytope::from_vertices(&[
        int_vec(&[1, 0]),
        int_vec(&[0, 1]),
        int_vec(&[-1, 0]),
        int_vec(&[0, -1]),
    ])
    .unwrap()
}

pub fn cube3() -> LatticePolytope {
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

pub fn octahedron() -> LatticePolytope {
    LatticePolytope::from_vertices(&[
        int_vec(&[1, 0, 0]),
        int_vec(&[-1, 0, 0]),
        int_vec(&[0, 1, 0]),
        int_vec(&[0, -1, 0]),
        int_vec(&[0, 0, 1]),
        int_vec(&[0, 0, -1]),
    ])
    .unwrap()
}

pub fn quartic() -> LatticePolytope {
    LatticePolytope::from_vertices(&[
        int_vec(&[1, 0, 0]),
        int_vec(&[0, 1, 0]),
        int_vec(&[0, 0, 1]),
        int_vec(&[-1, -1, -1]),
    ])
    .unwrap()
}

pub fn quintic() -> LatticePolytope {
    LatticePolytope::from_vertices(&[
        int_vec(&[1, 0, 0, 0]),
        int_vec(&[0, 1, 0, 0]),
        int_vec(&[0, 0, 1, 0]),
        int_vec(&[0, 0, 0, 1]),
        int_vec(&[-1, -1, -1, -1]),
    ])
    .unwrap()
}

/// Product of two 2-dimensional diamonds: rank 4, 8 vertices, flips exist.
pub fn product_of_diamonds() -> LatticePolytope {
    let d2 = [[1i64, 0], [0, 1], [-1, 0], [0, -1]];
    let mut vs = Vec::new();
    for a in d2 {
        for b in d2 {
            vs.push(int_vec(&[a[0], a[1], b[0], b[1]]));
        }
    }
    LatticePolytope::from_vertices(&vs).unwrap()
}

/// Minimal five-point triangulation of a weighted simplex: points summing
/// to zero with the given weights, all five boundary facet simplices.
pub fn weighted_fixture(points: Vec<LatticePoint>) -> Triangulation {
    let host = LatticePolytope::from_vertices(&points).unwrap();
    let k = points.len();
    let maximal: Vec<Vec<usize>> = (0..k)
        .map(|leave| (0..k).filter(|&i| i != leave).collect())
        .collect();
    Triangulation::from_parts(host, points, maximal).unwrap()
}

pub fn weighted_11114() -> Triangulation {
    weighted_fixture(vec![
        int_vec(&[1, 0, 0, 0]),
        int_vec(&[0, 1, 0, 0]),
        int_vec(&[0, 0, 1, 0]),
        int_vec(&[-1, -1, -1, -4]),
        int_vec(&[0, 0, 0, 1]),
    ])
}

/// Blow-up style fixture: the four unit points, their negative sum, and
/// the positive sum, triangulated by the eight facet simplices.
pub fn blowup_fixture() -> Triangulation {
    let points = vec![
        int_vec(&[1, 0, 0, 0]),
        int_vec(&[0, 1, 0, 0]),
        int_vec(&[0, 0, 1, 0]),
        int_vec(&[0, 0, 0, 1]),
        int_vec(&[-1, -1, -1, -1]),
        int_vec(&[1, 1, 1, 1]),
    ];
    let host = LatticePolytope::from_vertices(&points).unwrap();
    let mut maximal = Vec::new();
    for i in 0..4 {
        let mut s: Vec<usize> = (0..4).filter(|&j| j != i).collect();
        s.push(4);
        maximal.push(s.clone());
        s.pop();
        s.push(5);
        maximal.push(s);
    }
    Triangulation::from_parts(host, points, maximal).unwrap()
}

/// All reflexive fixtures that build their own boundary triangulation.
pub fn reflexive_fixtures() -> Vec<LatticePolytope> {
    vec![
        diamond(),
        quartic(),
        octahedron(),
        cube3(),
        quintic(),
        product_of_diamonds(),
    ]
}

/// Small deterministic linear congruential generator for test data.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    /// Uniform-ish value in `[lo, hi]`.
    pub fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Random rational with numerator in `[-9, 9]` and denominator in
    /// `[1, 4]`.
    pub fn rat(&mut self) -> Rat {
        Rat::new(Int::from(self.in_range(-9, 9)), Int::from(self.in_range(1, 4)))
    }
}
