//! ℤ-lattices in ℂⁿ built from module generators, and ℤ-modules of scalars.
//!
//! Everything is flattened to rational coordinates over the basis
//! {1, ξ} ⊗ {1, α} of the scalar field (dropping ξ when it is rational and α
//! when the group has no parameter), after which membership is an exact
//! rational solve followed by an integrality check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::{MonomialMatrix, Vector};
use crate::linalg::{self, ZSpan};
use crate::scalars::{q, qi, Rational, RingTag, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("no generators")]
    Empty,
    #[error("dimension mismatch ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("ring mismatch (r = {0} vs r = {1})")]
    RingMismatch(u32, u32),
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("direction vectors must not depend on α")]
    AlphaDirection,
    #[error("unknown coefficient ring {0:?}")]
    UnknownCoefficientRing(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The rational vector space a scalar lives in, with its flattening basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScalarSpace {
    pub ring: RingTag,
    pub alpha: bool,
}

impl ScalarSpace {
    pub fn new(ring: RingTag, alpha: bool) -> Self {
        ScalarSpace { ring, alpha }
    }

    pub fn degree(&self) -> usize {
        self.ring.degree() * if self.alpha { 2 } else { 1 }
    }

    /// ℚ-basis: 1, ξ (if irrational), α, ξα (if present).
    pub fn basis(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::one(self.ring)];
        if self.ring.has_xi() {
            out.push(Scalar::xi_pow(self.ring, 1));
        }
        if self.alpha {
            let al = Scalar::alpha(self.ring);
            out.push(al.clone());
            if self.ring.has_xi() {
                out.push(&Scalar::xi_pow(self.ring, 1) * &al);
            }
        }
        out
    }

    pub fn coords(&self, x: &Scalar) -> Vec<Rational> {
        let full = x.real_coordinates(true);
        let mut out = vec![full[0].clone()];
        if self.ring.has_xi() {
            out.push(full[1].clone());
        }
        if self.alpha {
            out.push(full[2].clone());
            if self.ring.has_xi() {
                out.push(full[3].clone());
            }
        } else {
            assert!(!x.has_alpha(), "α-dependent scalar in an α-free space");
        }
        out
    }

    pub fn from_coords(&self, c: &[Rational]) -> Scalar {
        let z = Rational::zero();
        let mut it = c.iter();
        let mut next = || it.next().cloned().unwrap_or_else(|| z.clone());
        let a = next();
        let b = if self.ring.has_xi() { next() } else { z.clone() };
        let (cc, d) = if self.alpha {
            let cc = next();
            let d = if self.ring.has_xi() { next() } else { z.clone() };
            (cc, d)
        } else {
            (z.clone(), z.clone())
        };
        Scalar::from_parts(self.ring, a, b, cc, d)
    }

    pub fn flatten(&self, v: &Vector) -> Vec<Rational> {
        v.coords().iter().flat_map(|x| self.coords(x)).collect()
    }

    pub fn unflatten(&self, flat: &[Rational]) -> Vector {
        let d = self.degree();
        Vector::new(
            self.ring,
            flat.chunks(d).map(|c| self.from_coords(c)).collect(),
        )
    }
}

/// Coefficient rings used by the lattice generators of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffRing {
    /// ℤ[ξ] (just ℤ when ξ is rational)
    ZXi,
    /// ℤ + ℤ·2ξ
    ZTwoXi,
    /// ℤ + ℤα
    ZAlpha,
    /// ℤ + ℤ(α/2)
    ZHalfAlpha,
    /// (1/2)ℤ + ℤα
    HalfZAlpha,
    /// ℤ + ℤ((1+α)/2)
    ZOnePlusAlphaHalf,
    /// (1/2)(ℤ + ℤα)
    HalfOfZAlpha,
    /// ℤ + ℤ(α/3)
    ZThirdAlpha,
    /// ℤ + ℤ((1+α)/3)
    ZOnePlusAlphaThird,
    /// ℤ + ℤ((2+α)/3)
    ZTwoPlusAlphaThird,
}

impl CoeffRing {
    pub const ALL: [CoeffRing; 10] = [
        CoeffRing::ZXi,
        CoeffRing::ZTwoXi,
        CoeffRing::ZAlpha,
        CoeffRing::ZHalfAlpha,
        CoeffRing::HalfZAlpha,
        CoeffRing::ZOnePlusAlphaHalf,
        CoeffRing::HalfOfZAlpha,
        CoeffRing::ZThirdAlpha,
        CoeffRing::ZOnePlusAlphaThird,
        CoeffRing::ZTwoPlusAlphaThird,
    ];

    pub fn uses_alpha(self) -> bool {
        !matches!(self, CoeffRing::ZXi | CoeffRing::ZTwoXi)
    }

    /// A ℤ-basis of the ring as scalars.
    pub fn zbasis(self, ring: RingTag) -> Vec<Scalar> {
        let one = Scalar::one(ring);
        let al = Scalar::alpha(ring);
        let plus = |c: i64, den: i64| (&Scalar::int(ring, c) + &al).scale(&q(1, den));
        match self {
            CoeffRing::ZXi => {
                if ring.has_xi() {
                    vec![one, Scalar::xi_pow(ring, 1)]
                } else {
                    vec![one]
                }
            }
            CoeffRing::ZTwoXi => {
                if ring.has_xi() {
                    vec![one, Scalar::cyclo(ring, 0, 2)]
                } else {
                    vec![one]
                }
            }
            CoeffRing::ZAlpha => vec![one, al],
            CoeffRing::ZHalfAlpha => vec![one, al.scale(&q(1, 2))],
            CoeffRing::HalfZAlpha => vec![one.scale(&q(1, 2)), al],
            CoeffRing::ZOnePlusAlphaHalf => vec![one, plus(1, 2)],
            CoeffRing::HalfOfZAlpha => vec![one.scale(&q(1, 2)), al.scale(&q(1, 2))],
            CoeffRing::ZThirdAlpha => vec![one, al.scale(&q(1, 3))],
            CoeffRing::ZOnePlusAlphaThird => vec![one, plus(1, 3)],
            CoeffRing::ZTwoPlusAlphaThird => vec![one, plus(2, 3)],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CoeffRing::ZXi => "Z[x]",
            CoeffRing::ZTwoXi => "Z[2x]",
            CoeffRing::ZAlpha => "Z+Z*al",
            CoeffRing::ZHalfAlpha => "Z+Z*(al/2)",
            CoeffRing::HalfZAlpha => "(1/2)Z+Z*al",
            CoeffRing::ZOnePlusAlphaHalf => "Z+Z*((1+al)/2)",
            CoeffRing::HalfOfZAlpha => "(1/2)(Z+Z*al)",
            CoeffRing::ZThirdAlpha => "Z+Z*(al/3)",
            CoeffRing::ZOnePlusAlphaThird => "Z+Z*((1+al)/3)",
            CoeffRing::ZTwoPlusAlphaThird => "Z+Z*((2+al)/3)",
        }
    }

    pub fn from_name(s: &str) -> Result<Self, LatticeError> {
        CoeffRing::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| LatticeError::UnknownCoefficientRing(s.to_string()))
    }
}

/// A lattice given by module generators `Σ R_i·v_i`.
#[derive(Debug, Clone)]
pub struct Lattice {
    n: usize,
    space: ScalarSpace,
    generators: Vec<(Vector, CoeffRing)>,
    zbasis: Vec<Vector>,
    span: ZSpan,
}

impl Lattice {
    pub fn from_generators(
        n: usize,
        ring: RingTag,
        gens: Vec<(Vector, CoeffRing)>,
    ) -> Result<Self, LatticeError> {
        let alpha = gens.iter().any(|(v, c)| c.uses_alpha() || v.has_alpha());
        let space = ScalarSpace::new(ring, alpha);
        let mut zbasis = Vec::new();
        for (v, coeff) in &gens {
            if v.dim() != n {
                return Err(LatticeError::DimensionMismatch(n, v.dim()));
            }
            if v.ring() != ring {
                return Err(LatticeError::RingMismatch(ring.order(), v.ring().order()));
            }
            for c in coeff.zbasis(ring) {
                let scaled = Vector::new(
                    ring,
                    v.coords()
                        .iter()
                        .map(|x| c.try_mul(x))
                        .collect::<Result<_, _>>()?,
                );
                zbasis.push(scaled);
            }
        }
        if zbasis.is_empty() {
            return Err(LatticeError::Empty);
        }
        let dim = n * space.degree();
        let flat: Vec<Vec<Rational>> = zbasis.iter().map(|v| space.flatten(v)).collect();
        // Keep the generator-derived basis when it is one (possibly after
        // dropping redundant vectors); fall back to a Hermite basis otherwise.
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..flat.len() {
            let mut trial: Vec<Vec<Rational>> = keep.iter().map(|&j| flat[j].clone()).collect();
            trial.push(flat[i].clone());
            if ZSpan::new(dim, trial).is_ok() {
                keep.push(i);
            }
        }
        let chosen = ZSpan::new(dim, keep.iter().map(|&j| flat[j].clone()).collect()).expect("independent");
        let (zbasis, span) = if flat.iter().all(|v| chosen.contains(v)) {
            (keep.iter().map(|&j| zbasis[j].clone()).collect(), chosen)
        } else {
            let hnf = linalg::rational_hermite(&flat);
            let basis = hnf.iter().map(|v| space.unflatten(v)).collect();
            (basis, ZSpan::new(dim, hnf).expect("Hermite rows are independent"))
        };
        Ok(Lattice {
            n,
            space,
            generators: gens,
            zbasis,
            span,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> RingTag {
        self.space.ring
    }

    pub fn space(&self) -> ScalarSpace {
        self.space
    }

    pub fn uses_alpha(&self) -> bool {
        self.space.alpha
    }

    /// ℤ-rank of the lattice.
    pub fn rank(&self) -> usize {
        self.zbasis.len()
    }

    pub fn zbasis(&self) -> &[Vector] {
        &self.zbasis
    }

    pub fn generators(&self) -> &[(Vector, CoeffRing)] {
        &self.generators
    }

    /// Rational coefficients of `v` in the ℤ-basis, if `v` lies in the
    /// ℚ-span of the lattice.
    pub fn coefficients(&self, v: &Vector) -> Option<Vec<Rational>> {
        if v.dim() != self.n || v.ring() != self.ring() {
            return None;
        }
        if v.has_alpha() && !self.space.alpha {
            return None;
        }
        self.span.coefficients(&self.space.flatten(v))
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, LatticeError> {
        if v.dim() != self.n {
            return Err(LatticeError::DimensionMismatch(self.n, v.dim()));
        }
        if v.ring() != self.ring() {
            return Err(LatticeError::RingMismatch(self.ring().order(), v.ring().order()));
        }
        Ok(self
            .coefficients(v)
            .is_some_and(|c| c.iter().all(|x| x.is_integer())))
    }

    /// Lattice vector with the given integer coordinates in the ℤ-basis.
    pub fn combine(&self, coeffs: &[i64]) -> Vector {
        let flat = self
            .span
            .combine(&coeffs.iter().map(|&c| qi(c)).collect::<Vec<_>>());
        self.space.unflatten(&flat)
    }

    /// The image `m·Λ ⊆ Λ` test on a ℤ-basis.
    pub fn is_invariant(&self, m: &MonomialMatrix) -> bool {
        if m.dim() != self.n || m.ring() != self.ring() {
            return false;
        }
        self.zbasis
            .iter()
            .all(|b| self.contains(&m.apply(b)).unwrap_or(false))
    }

    /// The module `{t : t·w ∈ Λ}`.
    pub fn line_intersection(&self, w: &Vector) -> Result<ScalarModule, LatticeError> {
        if w.dim() != self.n {
            return Err(LatticeError::DimensionMismatch(self.n, w.dim()));
        }
        if w.is_zero() {
            return Err(LatticeError::ZeroDirection);
        }
        if w.has_alpha() {
            return Err(LatticeError::AlphaDirection);
        }
        let space = self.space;
        let rank = self.rank();
        let basis = space.basis();
        let images: Vec<Vec<Rational>> = basis.iter().map(|s| space.flatten(&w.scale(s))).collect();
        let line = ZSpan::new(self.n * space.degree(), images).expect("t ↦ t·w is injective");

        // kernel of [B | -T]: pairs (z, t) with B z = T t
        let big_n = self.n * space.degree();
        let d = basis.len();
        let joint: Vec<Vec<Rational>> = (0..big_n)
            .map(|row| {
                let mut r: Vec<Rational> = self.span.vectors().iter().map(|b| b[row].clone()).collect();
                r.extend(line.vectors().iter().map(|t| -&t[row]));
                r
            })
            .collect();
        let zero = Rational::zero();
        let kernel = linalg::rref(&joint, &zero).kernel(rank + d, &zero);
        if kernel.is_empty() {
            return Ok(ScalarModule::zero(space));
        }
        // z-projections span U; find integer C with ker C = U
        let u_rows: Vec<Vec<Rational>> = kernel.iter().map(|k| k[..rank].to_vec()).collect();
        let perp = linalg::rref(&u_rows, &zero).kernel(rank, &zero);
        let c_int: Vec<Vec<BigInt>> = perp
            .iter()
            .map(|row| {
                let den = linalg::common_denominator(row.iter());
                row.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect()
            })
            .collect();
        let zs = if c_int.is_empty() {
            (0..rank)
                .map(|i| (0..rank).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
                .collect()
        } else {
            linalg::integer_kernel(&c_int, rank)
        };
        let gens: Vec<Scalar> = zs
            .iter()
            .map(|z| {
                let zq: Vec<Rational> = z.iter().map(|x| Rational::from_integer(x.clone())).collect();
                let flat = self.span.combine(&zq);
                let t = line.coefficients(&flat).expect("z lies on the line");
                space.from_coords(&t)
            })
            .collect();
        Ok(ScalarModule::from_generators(space, gens))
    }

    /// Serializable description.
    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            dimension: self.n,
            ring: self.ring().order(),
            alpha: self.uses_alpha(),
            generators: self
                .generators
                .iter()
                .map(|(v, c)| GeneratorJson {
                    coefficient_ring: c.name().to_string(),
                    vector: v.coords().iter().map(|x| x.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &LatticeJson) -> Result<Self, LatticeError> {
        let ring = RingTag::new(j.ring)?;
        let gens = j
            .generators
            .iter()
            .map(|g| {
                let coords = g
                    .vector
                    .iter()
                    .map(|s| Scalar::parse(ring, s))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((Vector::new(ring, coords), CoeffRing::from_name(&g.coefficient_ring)?))
            })
            .collect::<Result<Vec<_>, LatticeError>>()?;
        Lattice::from_generators(j.dimension, ring, gens)
    }

    /// Same ℤ-module as `other` (two-sided inclusion of ℤ-bases).
    pub fn same_as(&self, other: &Lattice) -> bool {
        self.n == other.n
            && self.ring() == other.ring()
            && self.rank() == other.rank()
            && self.zbasis.iter().all(|b| other.contains(b).unwrap_or(false))
            && other.zbasis.iter().all(|b| self.contains(b).unwrap_or(false))
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, c)) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}){}", c.name(), v)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub coefficient_ring: String,
    pub vector: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub dimension: usize,
    pub ring: u32,
    pub alpha: bool,
    pub generators: Vec<GeneratorJson>,
}

/// A finitely generated subgroup of the scalar field, stored by a canonical
/// (Hermite-reduced) ℤ-basis.
#[derive(Debug, Clone)]
pub struct ScalarModule {
    space: ScalarSpace,
    generators: Vec<Scalar>,
    span: ZSpan,
}

impl PartialEq for ScalarModule {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.generators == other.generators
    }
}

impl ScalarModule {
    pub fn zero(space: ScalarSpace) -> Self {
        ScalarModule {
            space,
            generators: Vec::new(),
            span: ZSpan::new(space.degree(), Vec::new()).expect("empty span"),
        }
    }

    /// The group generated by arbitrary scalars (dependencies allowed).
    pub fn from_generators(space: ScalarSpace, gens: Vec<Scalar>) -> Self {
        let rows: Vec<Vec<Rational>> = gens.iter().map(|g| space.coords(g)).collect();
        let hnf = linalg::rational_hermite(&rows);
        let generators = hnf.iter().map(|r| space.from_coords(r)).collect();
        let span = ZSpan::new(space.degree(), hnf).expect("Hermite rows are independent");
        ScalarModule {
            space,
            generators,
            span,
        }
    }

    pub fn space(&self) -> ScalarSpace {
        self.space
    }

    /// The ℤ-span of the generators' flattened coordinates.
    pub fn span(&self) -> &ZSpan {
        &self.span
    }

    pub fn generators(&self) -> &[Scalar] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        if x.ring() != self.space.ring || (x.has_alpha() && !self.space.alpha) {
            return false;
        }
        self.span.contains(&self.space.coords(x))
    }

    /// `c·M` for an α-free scalar `c`.
    pub fn scaled(&self, c: &Scalar) -> ScalarModule {
        assert!(!c.has_alpha(), "scaling a module by an α-dependent scalar");
        let gens = self.generators.iter().map(|g| c * g).collect();
        ScalarModule::from_generators(self.space, gens)
    }

    pub fn is_submodule_of(&self, other: &ScalarModule) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_as(&self, other: &ScalarModule) -> bool {
        self.is_submodule_of(other) && other.is_submodule_of(self)
    }
}

impl fmt::Display for ScalarModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "Z<{}>", gens.join("; "))
    }
}

/// ℤ-span membership of a scalar.
pub fn module_contains(m: &ScalarModule, x: &Scalar) -> bool {
    m.contains(x)
}

/// `1/(1 - ξ^e)` for `ξ^e ≠ 1`.
pub fn inverse_one_minus_root(ring: RingTag, e: i64) -> Scalar {
    (&Scalar::one(ring) - &Scalar::xi_pow(ring, e))
        .inverse()
        .expect("root is not 1")
}
