//! Vectors, monomial linear parts and affine maps `g(v) = Lin(g)·v + Tran(g)`,
//! together with exact fixed-space computation.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, Rref};
use crate::scalars::{CycloScalar, RingTag, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("dimension mismatch ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("ring mismatch (r = {0} vs r = {1})")]
    RingMismatch(u32, u32),
    #[error("the affine subspace is empty")]
    EmptySubspace,
    #[error("not a permutation: {0:?}")]
    BadPermutation(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    ring: RingTag,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(ring: RingTag, coords: Vec<Scalar>) -> Self {
        assert!(coords.iter().all(|c| c.ring() == ring), "mixed rings in vector");
        Vector { ring, coords }
    }

    pub fn zero(ring: RingTag, n: usize) -> Self {
        Vector {
            ring,
            coords: vec![Scalar::zero(ring); n],
        }
    }

    /// Standard basis vector e_j (0-based).
    pub fn unit(ring: RingTag, n: usize, j: usize) -> Self {
        let mut v = Self::zero(ring, n);
        v.coords[j] = Scalar::one(ring);
        v
    }

    pub fn from_ints(ring: RingTag, xs: &[i64]) -> Self {
        Vector::new(ring, xs.iter().map(|&x| Scalar::int(ring, x)).collect())
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, j: usize) -> &Scalar {
        &self.coords[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn has_alpha(&self) -> bool {
        self.coords.iter().any(Scalar::has_alpha)
    }

    pub fn add(&self, o: &Vector) -> Vector {
        assert_eq!(self.dim(), o.dim(), "dimension mismatch");
        Vector {
            ring: self.ring,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Vector) -> Vector {
        assert_eq!(self.dim(), o.dim(), "dimension mismatch");
        Vector {
            ring: self.ring,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            ring: self.ring,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            ring: self.ring,
            coords: self.coords.iter().map(|a| c * a).collect(),
        }
    }

    /// Append `extra` zero coordinates.
    pub fn extend(&self, extra: usize) -> Vector {
        let mut coords = self.coords.clone();
        coords.extend(std::iter::repeat_n(Scalar::zero(self.ring), extra));
        Vector {
            ring: self.ring,
            coords,
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A monomial matrix with root-of-unity entries: column `j` holds
/// `ξ^{exps[j]}` in row `perm[j]`, so `M·e_j = ξ^{exps[j]}·e_{perm[j]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialMatrix {
    ring: RingTag,
    perm: Vec<usize>,
    exps: Vec<u32>,
}

impl MonomialMatrix {
    pub fn new(ring: RingTag, perm: Vec<usize>, exps: Vec<i64>) -> Result<Self, AffineError> {
        let n = perm.len();
        if exps.len() != n {
            return Err(AffineError::DimensionMismatch(n, exps.len()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(AffineError::BadPermutation(perm));
            }
            seen[p] = true;
        }
        let r = ring.order() as i64;
        Ok(MonomialMatrix {
            ring,
            perm,
            exps: exps.into_iter().map(|e| e.rem_euclid(r) as u32).collect(),
        })
    }

    pub fn identity(ring: RingTag, n: usize) -> Self {
        MonomialMatrix {
            ring,
            perm: (0..n).collect(),
            exps: vec![0; n],
        }
    }

    pub fn diagonal(ring: RingTag, exps: &[i64]) -> Self {
        Self::new(ring, (0..exps.len()).collect(), exps.to_vec()).expect("valid diagonal")
    }

    /// Transposition of coordinates `j` and `k` (0-based).
    pub fn transposition(ring: RingTag, n: usize, j: usize, k: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(j, k);
        MonomialMatrix {
            ring,
            perm,
            exps: vec![0; n],
        }
    }

    /// The weighted transposition `e_j ↦ ξ^{-m} e_k`, `e_k ↦ ξ^m e_j`; its
    /// reflecting hyperplane is `x_j = ξ^m x_k`.
    pub fn weighted_transposition(ring: RingTag, n: usize, j: usize, k: usize, m: i64) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(j, k);
        let mut exps = vec![0i64; n];
        exps[j] = -m;
        exps[k] = m;
        Self::new(ring, perm, exps).expect("valid weighted transposition")
    }

    /// Diagonal matrix with `ξ^e` in position `j` and ones elsewhere.
    pub fn diagonal_reflection(ring: RingTag, n: usize, j: usize, e: i64) -> Self {
        let mut exps = vec![0i64; n];
        exps[j] = e;
        Self::diagonal(ring, &exps)
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn weight(&self, j: usize) -> CycloScalar {
        CycloScalar::root_of_unity(self.ring, self.exps[j] as i64)
    }

    pub fn weights(&self) -> Vec<CycloScalar> {
        (0..self.dim()).map(|j| self.weight(j)).collect()
    }

    /// Exponent of the product of all nonzero entries.
    pub fn weight_product_exponent(&self) -> u32 {
        let r = self.ring.order();
        self.exps.iter().fold(0, |acc, e| (acc + e) % r)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Diagonal entry `(j, j)` as an exponent, or `None` if it is zero.
    pub fn diagonal_exponent(&self, j: usize) -> Option<u32> {
        (self.perm[j] == j).then_some(self.exps[j])
    }

    pub fn compose(&self, other: &MonomialMatrix) -> MonomialMatrix {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let r = self.ring.order();
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for j in 0..n {
            let mid = other.perm[j];
            perm[j] = self.perm[mid];
            exps[j] = (other.exps[j] + self.exps[mid]) % r;
        }
        MonomialMatrix {
            ring: self.ring,
            perm,
            exps,
        }
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let r = self.ring.order();
        let n = self.dim();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            exps[self.perm[j]] = (r - self.exps[j]) % r;
        }
        MonomialMatrix {
            ring: self.ring,
            perm,
            exps,
        }
    }

    pub fn pow(&self, k: u32) -> MonomialMatrix {
        let mut acc = MonomialMatrix::identity(self.ring, self.dim());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.dim(), v.dim(), "dimension mismatch");
        let mut out = vec![Scalar::zero(self.ring); self.dim()];
        for j in 0..self.dim() {
            out[self.perm[j]] = Scalar::from_cyclo(self.weight(j)) * v.coord(j);
        }
        Vector::new(self.ring, out)
    }

    /// Cycles of the underlying permutation (fixed points included), each
    /// listed from its smallest index following `j → perm[j]`.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.dim();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.perm[start];
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.perm[j];
            }
            out.push(cyc);
        }
        out
    }

    /// Exponent of the product of the weights along a cycle.
    pub fn cycle_weight_exponent(&self, cycle: &[usize]) -> u32 {
        let r = self.ring.order();
        cycle.iter().fold(0, |acc, &j| (acc + self.exps[j]) % r)
    }

    /// Dimension of the fixed space `ker(1 - M)`: one per cycle whose weight
    /// product is 1.
    pub fn fixed_dimension(&self) -> usize {
        self.cycles()
            .iter()
            .filter(|c| self.cycle_weight_exponent(c) == 0)
            .count()
    }

    /// Order of the matrix: lcm over cycles of length × order of the weight
    /// product.
    pub fn order(&self) -> u32 {
        let r = self.ring.order();
        self.cycles().iter().fold(1, |acc, c| {
            let e = self.cycle_weight_exponent(c);
            let ord_w = r / gcd(r, e);
            lcm(acc, c.len() as u32 * ord_w)
        })
    }

    /// Dense entries of `1 - M` over ℚ(ξ).
    pub fn one_minus_dense(&self) -> Vec<Vec<CycloScalar>> {
        let n = self.dim();
        let mut a: Vec<Vec<CycloScalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            CycloScalar::one(self.ring)
                        } else {
                            CycloScalar::zero(self.ring)
                        }
                    })
                    .collect()
            })
            .collect();
        for j in 0..n {
            let i = self.perm[j];
            a[i][j] = &a[i][j] - &self.weight(j);
        }
        a
    }

    /// Extend by the identity on `extra` further coordinates.
    pub fn extend(&self, extra: usize) -> MonomialMatrix {
        let n = self.dim();
        let mut perm = self.perm.clone();
        perm.extend(n..n + extra);
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        MonomialMatrix {
            ring: self.ring,
            perm,
            exps,
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

/// Whether `m` is a central reflection: `rank(1 - m) = 1`.
pub fn is_central_reflection(m: &MonomialMatrix) -> bool {
    m.dim() >= 1 && m.fixed_dimension() + 1 == m.dim()
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            write!(f, "()")?;
        }
        for c in nontrivial {
            let items: Vec<String> = c.iter().map(|j| (j + 1).to_string()).collect();
            write!(f, "({})", items.join(" "))?;
        }
        let ws: Vec<String> = self.weights().iter().map(|w| w.to_string()).collect();
        write!(f, " w=[{}]", ws.join(", "))
    }
}

/// An affine transformation `v ↦ lin·v + tran`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub lin: MonomialMatrix,
    pub tran: Vector,
}

impl AffineMap {
    pub fn new(lin: MonomialMatrix, tran: Vector) -> Result<Self, AffineError> {
        if lin.dim() != tran.dim() {
            return Err(AffineError::DimensionMismatch(lin.dim(), tran.dim()));
        }
        if lin.ring() != tran.ring() {
            return Err(AffineError::RingMismatch(
                lin.ring().order(),
                tran.ring().order(),
            ));
        }
        Ok(AffineMap { lin, tran })
    }

    pub fn identity(ring: RingTag, n: usize) -> Self {
        AffineMap {
            lin: MonomialMatrix::identity(ring, n),
            tran: Vector::zero(ring, n),
        }
    }

    pub fn translation(tran: Vector) -> Self {
        AffineMap {
            lin: MonomialMatrix::identity(tran.ring(), tran.dim()),
            tran,
        }
    }

    pub fn linear(lin: MonomialMatrix) -> Self {
        let tran = Vector::zero(lin.ring(), lin.dim());
        AffineMap { lin, tran }
    }

    pub fn dim(&self) -> usize {
        self.lin.dim()
    }

    pub fn ring(&self) -> RingTag {
        self.lin.ring()
    }

    pub fn is_identity(&self) -> bool {
        self.lin.is_identity() && self.tran.is_zero()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.lin.apply(v).add(&self.tran)
    }

    /// Extend by the identity on `extra` further coordinates.
    pub fn extend(&self, extra: usize) -> AffineMap {
        AffineMap {
            lin: self.lin.extend(extra),
            tran: self.tran.extend(extra),
        }
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lin={} tran={}", self.lin, self.tran)
    }
}

/// `g ∘ h`: Lin = Lin(g)·Lin(h), Tran = Lin(g)·Tran(h) + Tran(g).
pub fn compose(g: &AffineMap, h: &AffineMap) -> Result<AffineMap, AffineError> {
    if g.dim() != h.dim() {
        return Err(AffineError::DimensionMismatch(g.dim(), h.dim()));
    }
    if g.ring() != h.ring() {
        return Err(AffineError::RingMismatch(g.ring().order(), h.ring().order()));
    }
    Ok(AffineMap {
        lin: g.lin.compose(&h.lin),
        tran: g.lin.apply(&h.tran).add(&g.tran),
    })
}

pub fn inverse(g: &AffineMap) -> AffineMap {
    let lin = g.lin.inverse();
    let tran = lin.apply(&g.tran).neg();
    AffineMap { lin, tran }
}

/// `g^k`; negative exponents go through the inverse.
pub fn power(g: &AffineMap, k: i64) -> AffineMap {
    let base = if k < 0 { inverse(g) } else { g.clone() };
    let mut acc = AffineMap::identity(g.ring(), g.dim());
    for _ in 0..k.unsigned_abs() {
        acc = compose(&base, &acc).expect("same shape");
    }
    acc
}

/// A possibly empty affine subspace `base + span(directions)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineSubspace {
    Empty,
    Affine { base: Vector, directions: Vec<Vector> },
}

impl AffineSubspace {
    pub fn is_empty(&self) -> bool {
        matches!(self, AffineSubspace::Empty)
    }

    pub fn dimension(&self) -> Option<usize> {
        match self {
            AffineSubspace::Empty => None,
            AffineSubspace::Affine { directions, .. } => Some(directions.len()),
        }
    }

    pub fn base(&self) -> Option<&Vector> {
        match self {
            AffineSubspace::Empty => None,
            AffineSubspace::Affine { base, .. } => Some(base),
        }
    }

    pub fn directions(&self) -> &[Vector] {
        match self {
            AffineSubspace::Empty => &[],
            AffineSubspace::Affine { directions, .. } => directions,
        }
    }
}

impl fmt::Display for AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineSubspace::Empty => write!(f, "EMPTY"),
            AffineSubspace::Affine { base, directions } => {
                write!(f, "{base}")?;
                for d in directions {
                    write!(f, " + C{d}")?;
                }
                Ok(())
            }
        }
    }
}

/// Exact solver for `(1 - M)·v = t` with `M` monomial, reusable across many
/// right-hand sides. Right-hand sides may carry α; since `1 - M` is α-free
/// the α-components are solved independently.
#[derive(Debug, Clone)]
pub struct FixedSpaceSolver {
    ring: RingTag,
    n: usize,
    rref: Rref<CycloScalar>,
    kernel: Vec<Vector>,
}

impl FixedSpaceSolver {
    pub fn new(m: &MonomialMatrix) -> Self {
        let ring = m.ring();
        let n = m.dim();
        let sample = CycloScalar::zero(ring);
        let rref = linalg::rref(&m.one_minus_dense(), &sample);
        let raw = rref.kernel(n, &sample);
        let kernel = linalg::canonical_rows(&raw, &sample)
            .into_iter()
            .map(|row| Vector::new(ring, row.into_iter().map(Scalar::from_cyclo).collect()))
            .collect();
        FixedSpaceSolver {
            ring,
            n,
            rref,
            kernel,
        }
    }

    /// Basis of `ker(1 - M)` in reduced echelon form.
    pub fn kernel(&self) -> &[Vector] {
        &self.kernel
    }

    pub fn rank(&self) -> usize {
        self.rref.rank()
    }

    /// Pivot column of each of the first `rank` echelon rows.
    pub fn pivots(&self) -> &[usize] {
        &self.rref.pivots
    }

    /// `T·t`, where `T` is the row transform bringing `1 - M` to echelon form.
    /// The system is consistent iff entries `rank..` vanish; entry `i < rank`
    /// is then the value at pivot `i` of the particular solution.
    pub fn transformed(&self, t: &Vector) -> Vec<Scalar> {
        self.rref
            .transform
            .iter()
            .map(|row| {
                row.iter().zip(t.coords()).fold(Scalar::zero(self.ring), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(&Scalar::from_cyclo(a.clone()) * b)
                    }
                })
            })
            .collect()
    }

    /// A particular solution of `(1 - M)·v = t` with free coordinates zero,
    /// or `None` when the system is inconsistent.
    pub fn particular(&self, t: &Vector) -> Option<Vector> {
        assert_eq!(t.dim(), self.n, "dimension mismatch");
        let tt = self.transformed(t);
        let rank = self.rref.rank();
        if tt[rank..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut v = vec![Scalar::zero(self.ring); self.n];
        for (row, &p) in self.rref.pivots.iter().enumerate() {
            v[p] = tt[row].clone();
        }
        Some(Vector::new(self.ring, v))
    }

    pub fn solve(&self, t: &Vector) -> AffineSubspace {
        match self.particular(t) {
            None => AffineSubspace::Empty,
            Some(base) => AffineSubspace::Affine {
                base,
                directions: self.kernel.clone(),
            },
        }
    }
}

/// Fixed points of `g`: solutions of `(1 - Lin(g))·v = Tran(g)`.
pub fn fixed_space(g: &AffineMap) -> AffineSubspace {
    FixedSpaceSolver::new(&g.lin).solve(&g.tran)
}

pub fn has_finite_order(g: &AffineMap) -> bool {
    !fixed_space(g).is_empty()
}

/// Affine reflection test: a fixed point exists and the linear part is a
/// central reflection.
pub fn is_reflection(g: &AffineMap) -> bool {
    is_central_reflection(&g.lin) && !fixed_space(g).is_empty()
}

/// The linear forms cutting out reflecting hyperplanes of G(r,p,n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LinearForm {
    /// `x_j` (0-based index)
    Coordinate(usize),
    /// `x_j - ξ^m x_k` with `j < k` (0-based indices)
    Difference { j: usize, k: usize, m: u32 },
}

impl LinearForm {
    pub fn eval(&self, v: &Vector) -> Scalar {
        match *self {
            LinearForm::Coordinate(j) => v.coord(j).clone(),
            LinearForm::Difference { j, k, m } => {
                let w = Scalar::xi_pow(v.ring(), m as i64);
                v.coord(j) - &(&w * v.coord(k))
            }
        }
    }

    /// Spans the orthogonal complement of the form's kernel. For a
    /// difference form this is `e_j - ξ^{-m} e_k`, and the weighted
    /// transposition σ with mirror `ker(form)` satisfies
    /// `(1 - σ)·v = form(v)·root`.
    pub fn root(&self, ring: RingTag, n: usize) -> Vector {
        match *self {
            LinearForm::Coordinate(j) => Vector::unit(ring, n, j),
            LinearForm::Difference { j, k, m } => {
                let mut v = Vector::unit(ring, n, j);
                v.coords[k] = -&Scalar::xi_pow(ring, -(m as i64));
                v
            }
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LinearForm::Coordinate(j) => write!(f, "x{}", j + 1),
            LinearForm::Difference { j, k, m: 0 } => write!(f, "x{} - x{}", j + 1, k + 1),
            LinearForm::Difference { j, k, m } => write!(f, "x{} - x^{m}*x{}", j + 1, k + 1),
        }
    }
}

/// Whether the subspace lies in the hyperplane `form = c`.
pub fn subspace_satisfies_form(
    a: &AffineSubspace,
    form: &LinearForm,
    c: &Scalar,
) -> Result<bool, AffineError> {
    match a {
        AffineSubspace::Empty => Err(AffineError::EmptySubspace),
        AffineSubspace::Affine { base, directions } => Ok(directions
            .iter()
            .all(|d| form.eval(d).is_zero())
            && &form.eval(base) == c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q;

    fn omega_inv_one_minus() -> Scalar {
        // 1/(1 - ω) for r = 3
        (&Scalar::one(RingTag::R3) - &Scalar::xi_pow(RingTag::R3, 1))
            .inverse()
            .unwrap()
    }

    #[test]
    fn translations_compose() {
        let r = RingTag::R4;
        let t = AffineMap::translation(Vector::from_ints(r, &[1, 2]));
        let s = AffineMap::translation(Vector::from_ints(r, &[3, -1]));
        let c = compose(&t, &s).unwrap();
        assert_eq!(c, AffineMap::translation(Vector::from_ints(r, &[4, 1])));
    }

    #[test]
    fn rank_one_rotation_has_order_four() {
        let r = RingTag::R4;
        let g = AffineMap::linear(MonomialMatrix::diagonal(r, &[1]));
        assert!(power(&g, 4).is_identity());
        assert!(!power(&g, 2).is_identity());
        assert_eq!(g.lin.order(), 4);
    }

    #[test]
    fn table_element_squared() {
        let r = RingTag::R3;
        let c = omega_inv_one_minus();
        let g = AffineMap::new(
            MonomialMatrix::diagonal(r, &[1, 1]),
            Vector::new(r, vec![c.clone(), -&c]),
        )
        .unwrap();
        let g2 = power(&g, 2);
        assert_eq!(g2.lin, MonomialMatrix::diagonal(r, &[2, 2]));
        let one_plus_omega = Scalar::cyclo(r, 1, 1);
        let expected = Vector::new(r, vec![&one_plus_omega * &c, -&(&one_plus_omega * &c)]);
        assert_eq!(g2.tran, expected);
    }

    #[test]
    fn power_edges() {
        let r = RingTag::R6;
        let g = AffineMap::new(MonomialMatrix::weighted_transposition(r, 2, 0, 1, 1), Vector::from_ints(r, &[1, 0])).unwrap();
        assert!(power(&g, 0).is_identity());
        assert_eq!(power(&g, 1), g);
        assert!(compose(&power(&g, -1), &g).unwrap().is_identity());
    }

    #[test]
    fn reflection_power_returns_to_identity() {
        // g = s + b with b perpendicular to the mirror: g^m = 1 for m the
        // order of s
        let r = RingTag::R6;
        let n = 3;
        let s = MonomialMatrix::diagonal_reflection(r, n, 1, 1);
        let b = Vector::unit(r, n, 1).scale(&Scalar::cyclo(r, 2, -5));
        let g = AffineMap::new(s.clone(), b).unwrap();
        assert_eq!(s.order(), 6);
        assert!(power(&g, 6).is_identity());
        assert!(!power(&g, 3).is_identity());
    }

    #[test]
    fn central_reflections() {
        let r = RingTag::R4;
        assert!(is_central_reflection(&MonomialMatrix::diagonal(r, &[1, 0, 0])));
        assert!(is_central_reflection(&MonomialMatrix::transposition(r, 2, 0, 1)));
        let r = RingTag::R3;
        assert!(!is_central_reflection(&MonomialMatrix::diagonal(r, &[1, 1])));
        assert!(!is_central_reflection(&MonomialMatrix::identity(r, 2)));
    }

    #[test]
    fn fixed_spaces() {
        let r = RingTag::R4;
        let id = fixed_space(&AffineMap::identity(r, 2));
        assert_eq!(id.dimension(), Some(2));
        assert!(id.base().unwrap().is_zero());
        assert!(fixed_space(&AffineMap::translation(Vector::from_ints(r, &[0, 1]))).is_empty());

        let r = RingTag::R3;
        let c = omega_inv_one_minus();
        let g = AffineMap::new(
            MonomialMatrix::diagonal(r, &[1, 1]),
            Vector::new(r, vec![c.clone(), -&c]),
        )
        .unwrap();
        let fs = fixed_space(&g);
        let c2 = &c * &c;
        let expected = Vector::new(r, vec![c2.clone(), -&c2]);
        assert_eq!(fs, AffineSubspace::Affine { base: expected.clone(), directions: vec![] });
        assert_eq!(g.apply(&expected), expected);
    }

    #[test]
    fn kernel_is_canonical() {
        // 3-cycle: kernel spanned by (1, 1, 1); weighted swap in r = 4 gives
        // (1, x) normalised with leading 1
        let r = RingTag::R4;
        let cyc = MonomialMatrix::new(r, vec![1, 2, 0], vec![0, 0, 0]).unwrap();
        let s = FixedSpaceSolver::new(&cyc);
        assert_eq!(s.kernel(), &[Vector::from_ints(r, &[1, 1, 1])]);
        let wt = MonomialMatrix::weighted_transposition(r, 2, 0, 1, 1);
        let s = FixedSpaceSolver::new(&wt);
        assert_eq!(s.kernel().len(), 1);
        assert!(s.kernel()[0].coord(0).is_one());
        assert_eq!(wt.apply(&s.kernel()[0]), s.kernel()[0]);
    }

    #[test]
    fn reflection_tests() {
        let r = RingTag::R6;
        let beta = Scalar::cyclo(r, 3, -2);
        let swap = MonomialMatrix::transposition(r, 2, 0, 1);
        let g = AffineMap::new(swap, Vector::new(r, vec![beta.clone(), -&beta])).unwrap();
        assert!(is_reflection(&g));
        assert!(!is_reflection(&AffineMap::translation(Vector::from_ints(r, &[1, 0]))));
        let g = AffineMap::new(MonomialMatrix::diagonal(r, &[2, 2]), Vector::from_ints(r, &[1, 5])).unwrap();
        assert!(!is_reflection(&g));
    }

    #[test]
    fn finite_order_tests() {
        let r = RingTag::R4;
        assert!(has_finite_order(&AffineMap::identity(r, 2)));
        assert!(!has_finite_order(&AffineMap::translation(Vector::unit(r, 2, 0))));
        let g = AffineMap::new(MonomialMatrix::diagonal(r, &[2, 2]), Vector::from_ints(r, &[7, -3])).unwrap();
        assert!(has_finite_order(&g));
    }

    #[test]
    fn form_containment() {
        let r = RingTag::R4;
        let beta = Scalar::cyclo(r, 1, 2);
        let pt = AffineSubspace::Affine {
            base: Vector::new(r, vec![beta.clone(), beta]),
            directions: vec![],
        };
        let diff = LinearForm::Difference { j: 0, k: 1, m: 0 };
        assert!(subspace_satisfies_form(&pt, &diff, &Scalar::zero(r)).unwrap());
        let line = AffineSubspace::Affine {
            base: Vector::zero(r, 2),
            directions: vec![Vector::unit(r, 2, 0)],
        };
        assert!(!subspace_satisfies_form(&line, &LinearForm::Coordinate(0), &Scalar::zero(r)).unwrap());
        assert_eq!(
            subspace_satisfies_form(&AffineSubspace::Empty, &diff, &Scalar::zero(r)),
            Err(AffineError::EmptySubspace)
        );

        // fixed point of the [G(6,3,2)]_2 table element
        let r = RingTag::R6;
        let omega = Scalar::xi_pow(r, 2);
        let g = AffineMap::new(
            MonomialMatrix::diagonal(r, &[3, 3]),
            Vector::new(r, vec![Scalar::one(r), &omega - &Scalar::one(r)]),
        )
        .unwrap();
        let fs = fixed_space(&g);
        let half = q(1, 2);
        assert_eq!(
            fs.base().unwrap(),
            &Vector::new(r, vec![Scalar::rational(r, half.clone()), (&omega - &Scalar::one(r)).scale(&half)])
        );
        assert!(subspace_satisfies_form(&fs, &LinearForm::Coordinate(0), &Scalar::rational(r, half)).unwrap());
    }

    #[test]
    fn root_vectors_shift_forms() {
        let r = RingTag::R6;
        let form = LinearForm::Difference { j: 0, k: 2, m: 5 };
        let w = form.root(r, 3);
        assert_eq!(form.eval(&w), Scalar::int(r, 2));
        let m = MonomialMatrix::weighted_transposition(r, 3, 0, 2, 5);
        let v = Vector::new(r, vec![Scalar::cyclo(r, 1, 2), Scalar::int(r, 7), Scalar::cyclo(r, -3, 1)]);
        assert_eq!(v.sub(&m.apply(&v)), w.scale(&form.eval(&v)));
        // the mirror of the weighted transposition is the kernel of the form
        let fixed = FixedSpaceSolver::new(&m);
        assert!(fixed.kernel().iter().all(|d| form.eval(d).is_zero()));
        assert_eq!(fixed.kernel().len(), 2);
    }
}
