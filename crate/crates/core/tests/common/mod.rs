//! Oracles shared by the integration tests. They work in floating point or
//! by brute force and share no code paths with the library's solvers.
#![allow(dead_code)]

use crefl::affine::{AffineMap, MonomialMatrix};
use crefl::scalars::{CycloScalar, RingTag, Scalar};
use num_traits::ToPrimitive;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct C(pub f64, pub f64);

impl C {
    pub fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    pub fn sub(self, o: C) -> C {
        C(self.0 - o.0, self.1 - o.1)
    }
    pub fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    pub fn norm(self) -> f64 {
        self.0.hypot(self.1)
    }
    pub fn div(self, o: C) -> C {
        let d = o.0 * o.0 + o.1 * o.1;
        C((self.0 * o.0 + self.1 * o.1) / d, (self.1 * o.0 - self.0 * o.1) / d)
    }
}

/// `e^{2πi k/r}`.
pub fn root(r: u32, k: i64) -> C {
    let t = 2.0 * std::f64::consts::PI * k as f64 / r as f64;
    C(t.cos(), t.sin())
}

fn cyclo_value(r: u32, x: &CycloScalar) -> C {
    let a = x.a().to_f64().unwrap();
    let b = x.b().to_f64().unwrap();
    C(a, 0.0).add(C(b, 0.0).mul(root(r.max(1), 1)))
}

/// Complex value of the α-free part of a scalar.
pub fn complex(x: &Scalar) -> C {
    cyclo_value(x.ring().order(), x.c0())
}

/// Complex value of the α coefficient.
pub fn alpha_part(x: &Scalar) -> C {
    cyclo_value(x.ring().order(), x.c1())
}

/// Dense complex matrix of a monomial matrix: column j has ξ^{e_j} in row perm(j).
pub fn dense(m: &MonomialMatrix) -> Vec<Vec<C>> {
    let n = m.dim();
    let r = m.ring().order();
    let mut out = vec![vec![C(0.0, 0.0); n]; n];
    for j in 0..n {
        out[m.perm()[j]][j] = root(r, m.exponents()[j] as i64);
    }
    out
}

/// Numerical rank by Gaussian elimination with partial pivoting.
pub fn rank(mut a: Vec<Vec<C>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).max_by(|&i, &j| a[i][c].norm().partial_cmp(&a[j][c].norm()).unwrap()) else {
            break;
        };
        if a[p][c].norm() < 1e-9 {
            continue;
        }
        a.swap(rank, p);
        for i in 0..rows {
            if i != rank {
                let f = a[i][c].div(a[rank][c]);
                for k in 0..cols {
                    let v = f.mul(a[rank][k]);
                    a[i][k] = a[i][k].sub(v);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of `1 - M`.
pub fn rank_one_minus(m: &MonomialMatrix) -> usize {
    let n = m.dim();
    let d = dense(m);
    let a = (0..n)
        .map(|i| (0..n).map(|j| C(if i == j { 1.0 } else { 0.0 }, 0.0).sub(d[i][j])).collect())
        .collect();
    rank(a)
}

/// Whether `(1 - Lin) x = Tran` is solvable. Since α is formal, the α-free
/// and α parts of the translation must both be in the column space.
pub fn solvable(g: &AffineMap) -> bool {
    solvable_part(g, complex) && solvable_part(g, alpha_part)
}

fn solvable_part(g: &AffineMap, part: fn(&Scalar) -> C) -> bool {
    let n = g.dim();
    let d = dense(&g.lin);
    let a: Vec<Vec<C>> = (0..n)
        .map(|i| (0..n).map(|j| C(if i == j { 1.0 } else { 0.0 }, 0.0).sub(d[i][j])).collect())
        .collect();
    let aug: Vec<Vec<C>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.clone();
            row.push(part(g.tran.coord(i)));
            row
        })
        .collect();
    rank(a) == rank(aug)
}

/// Iterate `g` from the identity until the linear part returns to 1.
pub fn iterate_to_linear_identity(g: &AffineMap) -> AffineMap {
    let mut h = g.clone();
    let mut steps = 1;
    while !h.lin.is_identity() {
        h = crefl::affine::compose(g, &h).unwrap();
        steps += 1;
        assert!(steps <= 1000, "monomial matrices have bounded order");
    }
    h
}

pub fn rings() -> [RingTag; 3] {
    [RingTag::R3, RingTag::R4, RingTag::R6]
}
