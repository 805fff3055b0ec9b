//! Dense exact linear algebra used behind the public modules: row reduction
//! over ℚ and ℚ(ξ), ℤ-spans of rational vectors with membership tests, and
//! integer kernels / Hermite normal forms for saturating sublattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalars::{CycloScalar, Rational};

/// The handful of field operations the row reducer needs.
pub trait FieldElem: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, o: &Self) -> Self;
    fn sub_elem(&self, o: &Self) -> Self;
    fn mul_elem(&self, o: &Self) -> Self;
    fn inv_elem(&self) -> Self;
}

impl FieldElem for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_elem(&self) -> Self {
        self.recip()
    }
}

impl FieldElem for CycloScalar {
    fn zero_like(&self) -> Self {
        CycloScalar::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        CycloScalar::one(self.ring())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elem(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elem(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_elem(&self) -> Self {
        self.inverse().expect("pivot is nonzero")
    }
}

/// Result of reducing `A` to reduced row echelon form while tracking the
/// invertible row transform `T` with `T·A = R`.
#[derive(Debug, Clone)]
pub struct Rref<F> {
    pub reduced: Vec<Vec<F>>,
    pub transform: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

impl<F: FieldElem> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Kernel basis of the original matrix, one vector per free column.
    pub fn kernel(&self, ncols: usize, sample: &F) -> Vec<Vec<F>> {
        let zero = sample.zero_like();
        let one = sample.one_like();
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !self.pivots.contains(c)) {
            let mut v = vec![zero.clone(); ncols];
            v[free] = one.clone();
            for (row, &p) in self.pivots.iter().enumerate() {
                v[p] = zero.sub_elem(&self.reduced[row][free]);
            }
            out.push(v);
        }
        out
    }
}

pub fn rref<F: FieldElem>(matrix: &[Vec<F>], sample: &F) -> Rref<F> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    let zero = sample.zero_like();
    let one = sample.one_like();
    let mut a: Vec<Vec<F>> = matrix.to_vec();
    let mut t: Vec<Vec<F>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { one.clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero_elem()) else {
            continue;
        };
        a.swap(row, p);
        t.swap(row, p);
        let inv = a[row][col].inv_elem();
        for x in a[row].iter_mut().chain(t[row].iter_mut()) {
            *x = x.mul_elem(&inv);
        }
        for i in 0..rows {
            if i == row || a[i][col].is_zero_elem() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..cols {
                let d = f.mul_elem(&a[row][j]);
                a[i][j] = a[i][j].sub_elem(&d);
            }
            for j in 0..rows {
                let d = f.mul_elem(&t[row][j]);
                t[i][j] = t[i][j].sub_elem(&d);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref {
        reduced: a,
        transform: t,
        pivots,
    }
}

/// Put a list of row vectors into reduced echelon form (leading entry 1),
/// dropping zero rows.
pub fn canonical_rows<F: FieldElem>(rows: &[Vec<F>], sample: &F) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let r = rref(rows, sample);
    r.reduced.into_iter().take(r.pivots.len()).collect()
}

pub fn mat_vec<F: FieldElem>(m: &[Vec<F>], v: &[F], sample: &F) -> Vec<F> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(sample.zero_like(), |acc, (a, b)| acc.add_elem(&a.mul_elem(b)))
        })
        .collect()
}

fn rat_zero() -> Rational {
    Rational::zero()
}

/// The ℤ-span of linearly independent rational vectors in ℚ^dim.
#[derive(Debug, Clone)]
pub struct ZSpan {
    dim: usize,
    vectors: Vec<Vec<Rational>>,
    /// ambient coordinates that determine the coefficients uniquely
    pivot_coords: Vec<usize>,
    /// inverse of the square submatrix on `pivot_coords`
    inverse: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dependent;

impl ZSpan {
    pub fn new(dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self, Dependent> {
        let k = vectors.len();
        if k == 0 {
            return Ok(ZSpan {
                dim,
                vectors,
                pivot_coords: Vec::new(),
                inverse: Vec::new(),
            });
        }
        let r = rref(&vectors, &rat_zero());
        if r.rank() < k {
            return Err(Dependent);
        }
        let pivot_coords = r.pivots.clone();
        // square matrix S[i][j] = vectors[j][pivot_coords[i]]; coefficients
        // c solve S c = v restricted to pivot coordinates
        let square: Vec<Vec<Rational>> = pivot_coords
            .iter()
            .map(|&i| vectors.iter().map(|v| v[i].clone()).collect())
            .collect();
        let sr = rref(&square, &rat_zero());
        debug_assert_eq!(sr.rank(), k);
        Ok(ZSpan {
            dim,
            vectors,
            pivot_coords,
            inverse: sr.transform,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    /// Rational coefficients of `v` in the basis, if `v` lies in the ℚ-span.
    pub fn coefficients(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.dim);
        if self.vectors.is_empty() {
            return v.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        let restricted: Vec<Rational> = self.pivot_coords.iter().map(|&i| v[i].clone()).collect();
        let coeffs = mat_vec(&self.inverse, &restricted, &rat_zero());
        let recombined = self.combine(&coeffs);
        (recombined == v).then_some(coeffs)
    }

    /// The linear map giving coefficients on the span (meaningless off it).
    pub fn coefficients_unchecked(&self, v: &[Rational]) -> Vec<Rational> {
        let restricted: Vec<Rational> = self.pivot_coords.iter().map(|&i| v[i].clone()).collect();
        mat_vec(&self.inverse, &restricted, &rat_zero())
    }

    /// Rows of a matrix whose kernel is exactly the ℚ-span.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        if self.vectors.is_empty() {
            return (0..self.dim)
                .map(|i| (0..self.dim).map(|j| if i == j { Rational::one() } else { rat_zero() }).collect())
                .collect();
        }
        rref(&self.vectors, &rat_zero()).kernel(self.dim, &rat_zero())
    }

    pub fn combine(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (c, vec) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(vec) {
                *o += c * x;
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coefficients(v)
            .is_some_and(|c| c.iter().all(|x| x.is_integer()))
    }
}

/// ℤ-basis of `{z ∈ ℤ^ncols : C z = 0}` for an integer matrix `C`.
pub fn integer_kernel(c: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = c.to_vec();
    // u holds the accumulated unimodular column transform, stored by column
    let mut u: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            (0..ncols)
                .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut start = 0;
    for row in 0..m.len() {
        if start == ncols {
            break;
        }
        loop {
            let best = (start..ncols)
                .filter(|&j| !m[row][j].is_zero())
                .min_by(|&a, &b| m[row][a].abs().cmp(&m[row][b].abs()));
            let Some(best) = best else { break };
            swap_cols(&mut m, &mut u, start, best);
            let mut done = true;
            for j in start + 1..ncols {
                if m[row][j].is_zero() {
                    continue;
                }
                let quot = m[row][j].div_floor(&m[row][start]);
                sub_col(&mut m, &mut u, j, start, &quot);
                if !m[row][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !m[row][start].is_zero() {
            start += 1;
        }
    }
    u[start..].to_vec()
}

fn swap_cols(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
    u.swap(a, b);
}

fn sub_col(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], target: usize, src: usize, f: &BigInt) {
    for row in m.iter_mut() {
        let d = &row[src] * f;
        row[target] -= d;
    }
    let srccol = u[src].clone();
    for (t, s) in u[target].iter_mut().zip(srccol) {
        *t -= s * f;
    }
}

/// Row Hermite normal form of an integer matrix (zero rows dropped):
/// echelon, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        if r == a.len() {
            break;
        }
        loop {
            let best = (r..a.len())
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
            let Some(best) = best else { break };
            a.swap(r, best);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let quot = a[i][col].div_floor(&a[r][col]);
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= p * &quot;
                }
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && !a[r][col].is_zero() {
            if a[r][col].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            let pivot_row = a[r].clone();
            for i in 0..r {
                let quot = a[i][col].div_floor(&pivot_row[col]);
                if quot.is_zero() {
                    continue;
                }
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= p * &quot;
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    a
}

/// Canonical ℤ-basis (rational Hermite form) of the group generated by
/// rational vectors, which need not be independent.
pub fn rational_hermite(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let den = common_denominator(rows.iter().flatten());
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|x| (x * &den).to_integer()).collect())
        .collect();
    hermite_rows(&ints)
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| Rational::new(x, den.clone()))
                .collect()
        })
        .collect()
}

pub fn common_denominator<'a>(xs: impl Iterator<Item = &'a Rational>) -> BigInt {
    xs.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}
