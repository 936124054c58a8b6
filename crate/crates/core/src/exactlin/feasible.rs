//! Exact homogeneous linear feasibility with witnesses.
//!
//! Decides whether a point exists with `<g, x> > 0` for every strict row
//! and `<h, x> >= 0` for every nonstrict row. Low ambient dimensions go
//! through Fourier-Motzkin elimination; higher ones through an exact
//! simplex (maximize the strict slack) with Bland's anticycling rule.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{int_vec_to_rat, primitive_int_vector, Int, Rat};
use crate::error::{Error, Result};

const FM_DIM_LIMIT: usize = 12;

/// Returns an exact witness if the system is feasible, `None` otherwise.
pub fn rational_feasible(strict: &[Vec<Rat>], nonstrict: &[Vec<Rat>]) -> Result<Option<Vec<Rat>>> {
    let dim = strict
        .iter()
        .chain(nonstrict)
        .map(|v| v.len())
        .next()
        .unwrap_or(0);
    if strict.iter().chain(nonstrict).any(|v| v.len() != dim) {
        return Err(Error::ShapeMismatch(
            "feasibility rows of differing lengths".into(),
        ));
    }
    if dim == 0 {
        return Ok(if strict.is_empty() { Some(vec![]) } else { None });
    }
    let constraints: Vec<(Vec<Rat>, bool)> = strict
        .iter()
        .map(|v| (v.clone(), true))
        .chain(nonstrict.iter().map(|v| (v.clone(), false)))
        .collect();
    let witness = if dim <= FM_DIM_LIMIT {
        fourier_motzkin(dim, constraints)
    } else {
        simplex_feasible(dim, strict, nonstrict)
    };
    if let Some(x) = &witness {
        debug_assert!(satisfies(x, strict, nonstrict));
    }
    Ok(witness)
}

fn satisfies(x: &[Rat], strict: &[Vec<Rat>], nonstrict: &[Vec<Rat>]) -> bool {
    strict.iter().all(|g| super::dot_rat(g, x).is_positive())
        && nonstrict.iter().all(|h| !super::dot_rat(h, x).is_negative())
}

/// Deduplicates constraints up to positive scaling; a strict copy absorbs a
/// nonstrict one. Returns `None` when a row `0 > 0` is present.
fn dedupe(constraints: Vec<(Vec<Rat>, bool)>) -> Option<Vec<(Vec<Rat>, bool)>> {
    let mut seen: BTreeMap<Vec<Int>, bool> = BTreeMap::new();
    for (v, s) in constraints {
        let key = primitive_int_vector(&v);
        if key.iter().all(|x| x.is_zero()) {
            if s {
                return None;
            }
            continue;
        }
        *seen.entry(key).or_insert(false) |= s;
    }
    Some(
        seen.into_iter()
            .map(|(k, s)| (int_vec_to_rat(&k), s))
            .collect(),
    )
}

fn fourier_motzkin(dim: usize, constraints: Vec<(Vec<Rat>, bool)>) -> Option<Vec<Rat>> {
    let constraints = dedupe(constraints)?;
    if dim == 0 {
        return Some(vec![]);
    }
    let k = dim - 1;
    let mut lower: Vec<(Vec<Rat>, bool)> = Vec::new();
    let mut upper: Vec<(Vec<Rat>, bool)> = Vec::new();
    let mut passed: Vec<(Vec<Rat>, bool)> = Vec::new();
    for (v, s) in &constraints {
        if v[k].is_positive() {
            lower.push((v.clone(), *s));
        } else if v[k].is_negative() {
            upper.push((v.clone(), *s));
        } else {
            passed.push((v[..k].to_vec(), *s));
        }
    }
    for (a, sa) in &lower {
        for (b, sb) in &upper {
            // Positive combination eliminating variable k.
            let combo: Vec<Rat> = (0..k)
                .map(|j| &a[j] * (-&b[k]) + &b[j] * &a[k])
                .collect();
            passed.push((combo, *sa || *sb));
        }
    }
    let partial = fourier_motzkin(k, passed)?;
    let value_of = |(v, s): &(Vec<Rat>, bool)| -> (Rat, bool) {
        let rest: Rat = (0..k).map(|j| &v[j] * &partial[j]).sum();
        ((-rest) / &v[k], *s)
    };
    let low = lower
        .iter()
        .map(value_of)
        .reduce(|a, b| if b.0 > a.0 || (b.0 == a.0 && b.1) { b } else { a });
    let high = upper
        .iter()
        .map(value_of)
        .reduce(|a, b| if b.0 < a.0 || (b.0 == a.0 && b.1) { b } else { a });
    let one = Rat::from(BigInt::one());
    let xk = match (low, high) {
        (None, None) => Rat::zero(),
        (Some((l, _)), None) => l + &one,
        (None, Some((u, _))) => u - &one,
        (Some((l, _)), Some((u, _))) => {
            if l < u {
                (l + u) / Rat::from(BigInt::from(2))
            } else {
                l
            }
        }
    };
    let mut x = partial;
    x.push(xk);
    Some(x)
}

/// Exact simplex on: maximize t subject to `<g,x> >= t`, `<h,x> >= 0`,
/// `0 <= t <= 1`, with `x = u - w` split into nonnegative parts. The strict
/// system is feasible iff the optimum is positive.
fn simplex_feasible(dim: usize, strict: &[Vec<Rat>], nonstrict: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let nvars = 2 * dim + 1; // u, w, t
    let t_col = 2 * dim;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for g in strict {
        let mut row = vec![Rat::zero(); nvars];
        for j in 0..dim {
            row[j] = -&g[j];
            row[dim + j] = g[j].clone();
        }
        row[t_col] = Rat::one();
        rows.push(row);
        rhs.push(Rat::zero());
    }
    for h in nonstrict {
        let mut row = vec![Rat::zero(); nvars];
        for j in 0..dim {
            row[j] = -&h[j];
            row[dim + j] = h[j].clone();
        }
        rows.push(row);
        rhs.push(Rat::zero());
    }
    let mut bound = vec![Rat::zero(); nvars];
    bound[t_col] = Rat::one();
    rows.push(bound);
    rhs.push(Rat::one());

    let mut objective = vec![Rat::zero(); nvars];
    objective[t_col] = Rat::one();
    let solution = simplex_max(&rows, &rhs, &objective);
    if solution[t_col].is_positive() {
        Some((0..dim).map(|j| &solution[j] - &solution[dim + j]).collect())
    } else {
        None
    }
}

/// Maximizes `c.y` over `A y <= b, y >= 0` with `b >= 0` (so the slack
/// basis starts feasible) and a bounded objective. Bland's rule throughout.
fn simplex_max(a: &[Vec<Rat>], b: &[Rat], c: &[Rat]) -> Vec<Rat> {
    let m = a.len();
    let n = c.len();
    let width = n + m;
    // tableau rows: constraint coefficients including slacks, then rhs
    let mut tab: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| {
                if i == j {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut cost: Vec<Rat> = c.to_vec();
    cost.extend(std::iter::repeat(Rat::zero()).take(m + 1));
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_positive()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &tab[i][width] / &tab[i][enter];
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let lr = &tab[l][width] / &tab[l][enter];
                    if ratio < lr || (ratio == lr && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let r = leave.expect("objective is bounded by construction");
        let inv = tab[r][enter].recip();
        for x in tab[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i == r || tab[i][enter].is_zero() {
                continue;
            }
            let f = tab[i][enter].clone();
            for j in 0..=width {
                let t = &tab[r][j] * &f;
                tab[i][j] -= t;
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..=width {
                let t = &tab[r][j] * &f;
                cost[j] -= t;
            }
        }
        basis[r] = enter;
    }

    let mut y = vec![Rat::zero(); width];
    for i in 0..m {
        y[basis[i]] = tab[i][width].clone();
    }
    y.truncate(n);
    y
}
