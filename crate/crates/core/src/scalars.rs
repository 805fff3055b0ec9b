//! Exact scalars: the cyclotomic fields ℚ(ξ) for ξ a primitive r-th root of
//! unity with r ∈ {1, 2, 3, 4, 6}, and their degree-one extension by a formal
//! transcendental parameter α.
//!
//! For r ∈ {3, 4, 6} the field is quadratic and every element is stored as
//! `a + b·ξ` with the product reduced through ξ² = u·ξ + v. For r ∈ {1, 2}
//! the root ξ = ±1 is folded into the rational part, so `b` is always zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rational = BigRational;

/// Build a rational from small integers.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("scalars live in different rings (r = {0} vs r = {1})")]
    RingMismatch(u32, u32),
    #[error("product of two scalars that both depend on α")]
    AlphaSquared,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot invert a scalar that depends on α")]
    AlphaNotInvertible,
    #[error("unsupported root-of-unity order r = {0} (expected 1, 2, 3, 4 or 6)")]
    UnsupportedOrder(u32),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// Which cyclotomic field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct RingTag(u8);

impl RingTag {
    pub const R1: RingTag = RingTag(1);
    pub const R2: RingTag = RingTag(2);
    pub const R3: RingTag = RingTag(3);
    pub const R4: RingTag = RingTag(4);
    pub const R6: RingTag = RingTag(6);

    pub fn new(r: u32) -> Result<Self, ScalarError> {
        match r {
            1 | 2 | 3 | 4 | 6 => Ok(RingTag(r as u8)),
            _ => Err(ScalarError::UnsupportedOrder(r)),
        }
    }

    pub fn order(self) -> u32 {
        self.0 as u32
    }

    /// Coefficients `(u, v)` of the minimal relation ξ² = u·ξ + v, or `None`
    /// when ξ is rational.
    pub fn relation(self) -> Option<(i64, i64)> {
        match self.0 {
            3 => Some((-1, -1)),
            4 => Some((0, -1)),
            6 => Some((1, -1)),
            _ => None,
        }
    }

    /// Whether ξ is irrational, i.e. the field has degree two over ℚ.
    pub fn has_xi(self) -> bool {
        self.0 >= 3
    }

    /// Number of rational coordinates of an α-free element.
    pub fn degree(self) -> usize {
        if self.has_xi() {
            2
        } else {
            1
        }
    }
}

impl TryFrom<u32> for RingTag {
    type Error = ScalarError;
    fn try_from(r: u32) -> Result<Self, Self::Error> {
        RingTag::new(r)
    }
}

impl From<RingTag> for u32 {
    fn from(t: RingTag) -> u32 {
        t.order()
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.0)
    }
}

/// An element `a + b·ξ` of ℚ(ξ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    ring: RingTag,
    a: Rational,
    b: Rational,
}

impl CycloScalar {
    pub fn new(ring: RingTag, a: Rational, b: Rational) -> Self {
        if ring.has_xi() {
            CycloScalar { ring, a, b }
        } else {
            // ξ = 1 for r = 1 and ξ = -1 for r = 2
            let a = if ring.order() == 1 { a + b } else { a - b };
            CycloScalar {
                ring,
                a,
                b: Rational::zero(),
            }
        }
    }

    pub fn from_ints(ring: RingTag, a: i64, b: i64) -> Self {
        Self::new(ring, qi(a), qi(b))
    }

    pub fn rational(ring: RingTag, a: Rational) -> Self {
        CycloScalar {
            ring,
            a,
            b: Rational::zero(),
        }
    }

    pub fn zero(ring: RingTag) -> Self {
        Self::rational(ring, Rational::zero())
    }

    pub fn one(ring: RingTag) -> Self {
        Self::rational(ring, Rational::one())
    }

    pub fn ring(&self) -> RingTag {
        self.ring
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    fn check(&self, other: &Self) -> Result<(), ScalarError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(ScalarError::RingMismatch(
                self.ring.order(),
                other.ring.order(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        Ok(CycloScalar {
            ring: self.ring,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        Ok(CycloScalar {
            ring: self.ring,
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.check(other)?;
        let ac = &self.a * &other.a;
        match self.ring.relation() {
            None => Ok(CycloScalar::rational(self.ring, ac)),
            Some((u, v)) => {
                let bd = &self.b * &other.b;
                let cross = &self.a * &other.b + &self.b * &other.a;
                Ok(CycloScalar {
                    ring: self.ring,
                    a: ac + &bd * qi(v),
                    b: cross + bd * qi(u),
                })
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycloScalar {
            ring: self.ring,
            a: &self.a * c,
            b: &self.b * c,
        }
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self.ring.relation() {
            None => Ok(CycloScalar::rational(self.ring, self.a.recip())),
            Some((u, v)) => {
                // multiplication by a + bξ acts on (c, d) by [[a, v b], [b, a + u b]]
                let diag = &self.a + &self.b * qi(u);
                let det = &self.a * &diag - &self.b * &self.b * qi(v);
                Ok(CycloScalar {
                    ring: self.ring,
                    a: diag / &det,
                    b: -&self.b / det,
                })
            }
        }
    }

    /// ξ^m, with m reduced mod r.
    pub fn root_of_unity(ring: RingTag, m: i64) -> Self {
        let r = ring.order() as i64;
        let m = m.rem_euclid(r);
        match ring.order() {
            1 => Self::one(ring),
            2 => Self::rational(ring, qi(if m == 0 { 1 } else { -1 })),
            _ => {
                let xi = CycloScalar {
                    ring,
                    a: Rational::zero(),
                    b: Rational::one(),
                };
                let mut acc = Self::one(ring);
                for _ in 0..m {
                    acc = &acc * &xi;
                }
                acc
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            ring: self.ring,
            a: -&self.a,
            b: -&self.b,
        }
    }
}

/// `c0 + c1·α` with α a formal transcendental over ℚ(ξ).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    c0: CycloScalar,
    c1: CycloScalar,
}

impl Scalar {
    pub fn new(c0: CycloScalar, c1: CycloScalar) -> Result<Self, ScalarError> {
        c0.check(&c1)?;
        Ok(Scalar { c0, c1 })
    }

    pub fn from_cyclo(c0: CycloScalar) -> Self {
        let c1 = CycloScalar::zero(c0.ring);
        Scalar { c0, c1 }
    }

    pub fn zero(ring: RingTag) -> Self {
        Self::from_cyclo(CycloScalar::zero(ring))
    }

    pub fn one(ring: RingTag) -> Self {
        Self::from_cyclo(CycloScalar::one(ring))
    }

    pub fn rational(ring: RingTag, x: Rational) -> Self {
        Self::from_cyclo(CycloScalar::rational(ring, x))
    }

    pub fn int(ring: RingTag, x: i64) -> Self {
        Self::rational(ring, qi(x))
    }

    /// `a + b·ξ` from small integers.
    pub fn cyclo(ring: RingTag, a: i64, b: i64) -> Self {
        Self::from_cyclo(CycloScalar::from_ints(ring, a, b))
    }

    /// The formal parameter α itself.
    pub fn alpha(ring: RingTag) -> Self {
        Scalar {
            c0: CycloScalar::zero(ring),
            c1: CycloScalar::one(ring),
        }
    }

    pub fn xi_pow(ring: RingTag, m: i64) -> Self {
        Self::from_cyclo(CycloScalar::root_of_unity(ring, m))
    }

    /// Build from the four rational coordinates in the basis {1, ξ, α, ξα}.
    pub fn from_parts(ring: RingTag, a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Scalar {
            c0: CycloScalar::new(ring, a, b),
            c1: CycloScalar::new(ring, c, d),
        }
    }

    pub fn ring(&self) -> RingTag {
        self.c0.ring
    }

    pub fn c0(&self) -> &CycloScalar {
        &self.c0
    }

    pub fn c1(&self) -> &CycloScalar {
        &self.c1
    }

    pub fn has_alpha(&self) -> bool {
        !self.c1.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c0.is_one() && self.c1.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(Scalar {
            c0: self.c0.try_add(&other.c0)?,
            c1: self.c1.try_add(&other.c1)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(Scalar {
            c0: self.c0.try_sub(&other.c0)?,
            c1: self.c1.try_sub(&other.c1)?,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.c0.check(&other.c0)?;
        match (self.has_alpha(), other.has_alpha()) {
            (true, true) => Err(ScalarError::AlphaSquared),
            (false, _) => Ok(Scalar {
                c0: self.c0.try_mul(&other.c0)?,
                c1: self.c0.try_mul(&other.c1)?,
            }),
            (true, false) => Ok(Scalar {
                c0: self.c0.try_mul(&other.c0)?,
                c1: self.c1.try_mul(&other.c0)?,
            }),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Scalar {
            c0: self.c0.scale(c),
            c1: self.c1.scale(c),
        }
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.has_alpha() {
            return Err(ScalarError::AlphaNotInvertible);
        }
        Ok(Self::from_cyclo(self.c0.inverse()?))
    }

    /// Rational coordinates in the basis {1, ξ} (α-free context) or
    /// {1, ξ, α, ξα}.
    pub fn real_coordinates(&self, with_alpha: bool) -> Vec<Rational> {
        let mut out = vec![self.c0.a.clone(), self.c0.b.clone()];
        if with_alpha {
            out.push(self.c1.a.clone());
            out.push(self.c1.b.clone());
        } else {
            assert!(!self.has_alpha(), "α-dependent scalar flattened without α slots");
        }
        out
    }

    pub fn from_real_coordinates(ring: RingTag, coords: &[Rational]) -> Self {
        let z = Rational::zero();
        let get = |i: usize| coords.get(i).cloned().unwrap_or_else(|| z.clone());
        Self::from_parts(ring, get(0), get(1), get(2), get(3))
    }

    /// Whether every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        [&self.c0.a, &self.c0.b, &self.c1.a, &self.c1.b]
            .iter()
            .all(|x| x.is_integer())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match self.try_mul(rhs) {
            Ok(x) => x,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            c0: -&self.c0,
            c1: -&self.c1,
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Scalar, Add add, Sub sub, Mul mul);
forward_owned!(CycloScalar, Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Canonical text form `a + b*x + c*al + d*x*al`; zero terms are dropped.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (&self.c0.a, ""),
            (&self.c0.b, "x"),
            (&self.c1.a, "al"),
            (&self.c1.b, "x*al"),
        ];
        let mut first = true;
        for (coef, unit) in terms {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = fmt_rational(&coef.abs());
            let body = match (unit, mag.as_str()) {
                ("", m) => m.to_string(),
                (u, "1") => u.to_string(),
                (u, m) => format!("{m}*{u}"),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {} {body}", if neg { "-" } else { "+" })?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Scalar::from_cyclo(self.clone()).fmt(f)
    }
}

impl Scalar {
    /// Parse the canonical text form; the ring must be supplied because the
    /// text does not carry it.
    pub fn parse(ring: RingTag, s: &str) -> Result<Self, ScalarError> {
        let err = || ScalarError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut coords = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        // split into signed terms
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('/') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coef, slot) = if let Some(c) = body.strip_suffix("x*al") {
                (c, 3)
            } else if let Some(c) = body.strip_suffix("al") {
                (c, 2)
            } else if let Some(c) = body.strip_suffix('x') {
                (c, 1)
            } else {
                (body, 0)
            };
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            let value = if coef.is_empty() {
                if slot == 0 {
                    return Err(err());
                }
                Rational::one()
            } else {
                Rational::from_str(coef).map_err(|_| err())?
            };
            coords[slot] += if neg { -value } else { value };
        }
        if !ring.has_xi() && (!coords[1].is_zero() || !coords[3].is_zero()) {
            return Err(err());
        }
        let [a, b, c, d] = coords;
        Ok(Scalar::from_parts(ring, a, b, c, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xi(r: RingTag) -> Scalar {
        Scalar::xi_pow(r, 1)
    }

    #[test]
    fn difference_of_squares_gaussian() {
        let r = RingTag::R4;
        let one = Scalar::one(r);
        let p = (&one + &xi(r)) * (&one - &xi(r));
        assert_eq!(p, Scalar::int(r, 2));
    }

    #[test]
    fn norm_of_one_minus_omega() {
        let r = RingTag::R3;
        let one = Scalar::one(r);
        let p = (&one - &xi(r)) * (&one - &Scalar::xi_pow(r, 2));
        assert_eq!(p, Scalar::int(r, 3));
    }

    #[test]
    fn alpha_cancels() {
        let r = RingTag::R6;
        let al = Scalar::alpha(r);
        let s = (&Scalar::one(r) + &al) + (&xi(r) - &al);
        assert_eq!(s, Scalar::cyclo(r, 1, 1));
        assert!(!s.has_alpha());
    }

    #[test]
    fn alpha_squared_is_rejected() {
        let r = RingTag::R4;
        let al = Scalar::alpha(r);
        assert_eq!(al.try_mul(&al), Err(ScalarError::AlphaSquared));
        assert_eq!(al.inverse(), Err(ScalarError::AlphaNotInvertible));
    }

    #[test]
    fn ring_mismatch() {
        let a = Scalar::one(RingTag::R3);
        let b = Scalar::one(RingTag::R4);
        assert_eq!(a.try_add(&b), Err(ScalarError::RingMismatch(3, 4)));
    }

    #[test]
    fn inverses() {
        let r = RingTag::R4;
        let inv = (&Scalar::one(r) - &xi(r)).inverse().unwrap();
        assert_eq!(inv, Scalar::from_parts(r, q(1, 2), q(1, 2), qi(0), qi(0)));

        let r = RingTag::R3;
        let x = &Scalar::one(r) - &xi(r);
        let inv = x.inverse().unwrap();
        assert_eq!(inv, Scalar::from_parts(r, q(2, 3), q(1, 3), qi(0), qi(0)));
        assert!((&x * &inv).is_one());

        let r = RingTag::R6;
        let inv = xi(r).inverse().unwrap();
        assert!((&xi(r) * &inv).is_one());
        assert_eq!(inv, Scalar::xi_pow(r, 5));
        assert_eq!(inv, Scalar::cyclo(r, 1, -1));

        assert_eq!(Scalar::zero(r).inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(Scalar::xi_pow(RingTag::R4, 2), Scalar::int(RingTag::R4, -1));
        assert_eq!(Scalar::xi_pow(RingTag::R6, 2), Scalar::cyclo(RingTag::R6, -1, 1));
        let r = RingTag::R3;
        assert!((Scalar::xi_pow(r, 1) * Scalar::xi_pow(r, 2)).is_one());
        assert_eq!(Scalar::xi_pow(RingTag::R2, 1), Scalar::int(RingTag::R2, -1));
        assert_eq!(Scalar::xi_pow(RingTag::R4, -1), Scalar::xi_pow(RingTag::R4, 3));
    }

    #[test]
    fn primitive_roots() {
        for r in [1u32, 2, 3, 4, 6] {
            let ring = RingTag::new(r).unwrap();
            let z = CycloScalar::root_of_unity(ring, 1);
            assert!(z.pow(r).is_one());
            for m in 1..r {
                assert!(!z.pow(m).is_one(), "r={r} m={m}");
            }
        }
    }

    #[test]
    fn coordinates() {
        let r = RingTag::R6;
        assert_eq!(Scalar::cyclo(r, 2, 3).real_coordinates(false), vec![qi(2), qi(3)]);
        assert_eq!(Scalar::zero(r).real_coordinates(false), vec![qi(0), qi(0)]);
        let r = RingTag::R4;
        let x = Scalar::rational(r, q(1, 2)) + Scalar::xi_pow(r, 1) * Scalar::alpha(r);
        assert_eq!(x.real_coordinates(true), vec![q(1, 2), qi(0), qi(0), qi(1)]);
    }

    #[test]
    fn text_form() {
        let r = RingTag::R4;
        let x = Scalar::from_parts(r, q(1, 2), q(1, 2), qi(0), qi(0));
        assert_eq!(x.to_string(), "1/2 + 1/2*x");
        let y = Scalar::from_parts(r, qi(-1), qi(0), q(-2, 3), qi(1));
        assert_eq!(y.to_string(), "-1 - 2/3*al + x*al");
        assert_eq!(Scalar::zero(r).to_string(), "0");
        assert_eq!(Scalar::parse(r, "1/2 + 1/2*x").unwrap(), x);
        assert_eq!(Scalar::parse(r, "-1 - 2/3*al + x*al").unwrap(), y);
        assert_eq!(Scalar::parse(r, "-1/2").unwrap(), Scalar::rational(r, q(-1, 2)));
        assert!(Scalar::parse(RingTag::R2, "x").is_err());
        assert!(Scalar::parse(r, "zz").is_err());
    }

    fn ring_strategy() -> impl Strategy<Value = RingTag> {
        prop::sample::select(vec![RingTag::R1, RingTag::R2, RingTag::R3, RingTag::R4, RingTag::R6])
    }

    fn rat() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..7).prop_map(|(n, d)| q(n, d))
    }

    fn scalar_in(ring: RingTag, alpha: bool) -> impl Strategy<Value = Scalar> {
        (rat(), rat(), rat(), rat()).prop_map(move |(a, b, c, d)| {
            if alpha {
                Scalar::from_parts(ring, a, b, c, d)
            } else {
                Scalar::from_parts(ring, a, b, qi(0), qi(0))
            }
        })
    }

    fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar, Scalar)> {
        ring_strategy().prop_flat_map(|r| {
            (
                scalar_in(r, true),
                scalar_in(r, true),
                scalar_in(r, true),
                scalar_in(r, false),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms((x, y, z, c) in triple()) {
            prop_assert_eq!((&x + &y) + z.clone(), &x + &(&y + &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&c * &x, &x * &c);
            prop_assert_eq!(&c * &(&x + &y), &(&c * &x) + &(&c * &y));
            let c2 = &c + &Scalar::one(c.ring());
            prop_assert_eq!(&(&c * &c2) * &x, &c * &(&c2 * &x));
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn inverse_is_two_sided((_, _, _, c) in triple()) {
            prop_assume!(!c.is_zero());
            let inv = c.inverse().unwrap();
            prop_assert!((&c * &inv).is_one());
            prop_assert!((&inv * &c).is_one());
        }

        #[test]
        fn coordinates_round_trip((x, _, _, _) in triple()) {
            let coords = x.real_coordinates(true);
            prop_assert_eq!(Scalar::from_real_coordinates(x.ring(), &coords), x.clone());
            prop_assert_eq!(Scalar::parse(x.ring(), &x.to_string()).unwrap(), x);
        }
    }
}
