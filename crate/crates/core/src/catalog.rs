//! The catalog of crystallographic reflection groups `G(r,p,n) ⋉ Λ`: group
//! names, invariant lattices, expected Steinberg verdicts and the explicit
//! counterexample elements for the groups that fail.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::{AffineMap, MonomialMatrix, Vector};
use crate::hyperplanes::HyperplaneFamily;
use crate::lattices::{inverse_one_minus_root, CoeffRing, Lattice, LatticeError, LatticeJson, ScalarModule};
use crate::scalars::{RingTag, Scalar};

/// Default cap on the number of linear parts enumerated.
pub const ENUMERATION_CAP: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("invalid parameters G({r},{p},{n})")]
    InvalidParameters { r: u32, p: u32, n: usize },
    #[error("G({r},{p},{n}) has {count} elements, above the cap of {cap}")]
    TooLarge { r: u32, p: u32, n: usize, count: u64, cap: u64 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Genuine,
    Nongenuine,
}

/// Identifies one group of the catalog. `W(A_{n-1})` is stored as the
/// nongenuine `G(1,1,n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct GroupId {
    pub family: Family,
    pub r: u32,
    pub p: u32,
    pub n: usize,
    pub k: u32,
    pub uses_alpha: bool,
}

impl GroupId {
    pub fn genuine(r: u32, p: u32, n: usize, k: u32) -> Self {
        GroupId { family: Family::Genuine, r, p, n, k, uses_alpha: false }
    }

    pub fn nongenuine(r: u32, p: u32, n: usize, k: u32) -> Self {
        GroupId { family: Family::Nongenuine, r, p, n, k, uses_alpha: true }
    }

    pub fn weyl_a(n: usize) -> Self {
        GroupId::nongenuine(1, 1, n, 1)
    }

    /// Validate against the catalog, resolving the `[G(2,1,2)]^α_k` aliases.
    pub fn validated(self) -> Result<Self, CatalogError> {
        let mut id = self;
        if id.family == Family::Nongenuine && (id.r, id.p, id.n) == (2, 1, 2) {
            id.k = match id.k {
                3 => 4,
                5 => 1,
                k => k,
            };
        }
        if find_row(&id).is_some() {
            Ok(id)
        } else {
            Err(CatalogError::UnknownGroup(self.to_string()))
        }
    }

    pub fn ring(&self) -> RingTag {
        RingTag::new(self.r).expect("validated ids carry a supported r")
    }

    /// The same row at another rank.
    pub fn with_n(&self, n: usize) -> Self {
        GroupId { n, ..*self }
    }

    /// ASCII alias, e.g. `G(6,3,2):2` or `G(2,1,3):a:3`.
    pub fn ascii(&self) -> String {
        match (self.family, self.r) {
            (Family::Nongenuine, 1) => format!("W(A({})):a:1", self.n - 1),
            (Family::Nongenuine, _) => format!("G({},{},{}):a:{}", self.r, self.p, self.n, self.k),
            (Family::Genuine, _) => format!("G({},{},{}):{}", self.r, self.p, self.n, self.k),
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.r) {
            (Family::Nongenuine, 1) => write!(f, "[W(A({}))]^a_1", self.n - 1),
            (Family::Nongenuine, _) => write!(f, "[G({},{},{})]^a_{}", self.r, self.p, self.n, self.k),
            (Family::Genuine, _) => write!(f, "[G({},{},{})]_{}", self.r, self.p, self.n, self.k),
        }
    }
}

fn grammar() -> &'static [Regex; 4] {
    static RE: OnceLock<[Regex; 4]> = OnceLock::new();
    RE.get_or_init(|| {
        [
            Regex::new(r"^\[G\((\d+),(\d+),(\d+)\)\](\^a)?_\{?(\d+)\}?$").unwrap(),
            Regex::new(r"^\[W\(A(?:\((\d+)\)|_\{?(\d+)\}?)\)\](\^a)?_\{?(\d+)\}?$").unwrap(),
            Regex::new(r"^G\((\d+),(\d+),(\d+)\)(:a)?:(\d+)$").unwrap(),
            Regex::new(r"^W\(A(?:\((\d+)\)|(\d+))\)(:a)?:(\d+)$").unwrap(),
        ]
    })
}

fn normalize(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            'α' => out.push('a'),
            '₀'..='₉' => {
                if !out.ends_with('_') && !out.chars().last().is_some_and(|c| c.is_ascii_digit()) {
                    out.push('_');
                }
                out.push(char::from_digit(ch as u32 - '₀' as u32, 10).unwrap());
            }
            _ => out.push(ch),
        }
    }
    out.replace("^alpha", "^a").replace(":alpha", ":a")
}

impl FromStr for GroupId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CatalogError::UnknownGroup(s.to_string());
        let t = normalize(s);
        let num = |m: Option<regex::Match>| -> Result<u64, CatalogError> {
            m.ok_or_else(unknown)?.as_str().parse().map_err(|_| unknown())
        };
        let [bracket_g, bracket_w, ascii_g, ascii_w] = grammar();
        let (r, p, n, alpha, k) = if let Some(c) = bracket_g.captures(&t).or_else(|| ascii_g.captures(&t)) {
            let alpha = c.get(4).is_some();
            (num(c.get(1))?, num(c.get(2))?, num(c.get(3))?, alpha, num(c.get(5))?)
        } else if let Some(c) = bracket_w.captures(&t) {
            let m = num(c.get(1).or(c.get(2)))?;
            (1, 1, m + 1, true, num(c.get(4))?)
        } else if let Some(c) = ascii_w.captures(&t) {
            (1, 1, num(c.get(1).or(c.get(2)))? + 1, true, num(c.get(4))?)
        } else {
            return Err(unknown());
        };
        let (r, p, k) = (
            u32::try_from(r).map_err(|_| unknown())?,
            u32::try_from(p).map_err(|_| unknown())?,
            u32::try_from(k).map_err(|_| unknown())?,
        );
        let n = usize::try_from(n).map_err(|_| unknown())?;
        // Coxeter linear parts (r ≤ 2, and the dihedral G(r,r,2)) are the
        // nongenuine ones. The α marker is optional for r ≤ 2, required for
        // the dihedral groups and forbidden elsewhere.
        let coxeter = r <= 2 || (r == p && n == 2);
        if alpha != coxeter && r > 2 {
            return Err(unknown());
        }
        let id = if coxeter {
            GroupId::nongenuine(r, p, n, k)
        } else {
            GroupId::genuine(r, p, n, k)
        };
        id.validated().map_err(|_| unknown())
    }
}

impl TryFrom<String> for GroupId {
    type Error = CatalogError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<GroupId> for String {
    fn from(id: GroupId) -> String {
        id.to_string()
    }
}

/// One row of the catalog tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogRow {
    pub family: Family,
    pub r: u32,
    pub p: u32,
    pub k: u32,
    pub n_min: usize,
    pub n_max: Option<usize>,
    pub expected_steinberg: bool,
    /// Rank at which the counterexample element is tabulated.
    pub counterexample_n: Option<usize>,
}

impl CatalogRow {
    const fn new(family: Family, r: u32, p: u32, k: u32, n_min: usize, n_max: Option<usize>, ok: bool, cex: Option<usize>) -> Self {
        CatalogRow { family, r, p, k, n_min, n_max, expected_steinberg: ok, counterexample_n: cex }
    }

    /// The group of this row at its smallest admissible rank.
    pub fn minimal_id(&self) -> GroupId {
        GroupId {
            family: self.family,
            r: self.r,
            p: self.p,
            n: self.n_min,
            k: self.k,
            uses_alpha: self.family == Family::Nongenuine,
        }
    }

    fn admits(&self, n: usize) -> bool {
        n >= self.n_min && self.n_max.is_none_or(|m| n <= m)
    }
}

use Family::{Genuine as G, Nongenuine as NG};

/// Genuine rows followed by nongenuine rows, in table order.
pub const CATALOG_ROWS: [CatalogRow; 31] = [
    CatalogRow::new(G, 3, 1, 1, 1, Some(1), true, None),
    CatalogRow::new(G, 4, 1, 1, 1, Some(1), true, None),
    CatalogRow::new(G, 6, 1, 1, 1, Some(1), true, None),
    CatalogRow::new(G, 3, 1, 1, 2, None, true, None),
    CatalogRow::new(G, 3, 1, 2, 2, None, false, Some(2)),
    CatalogRow::new(G, 3, 3, 1, 3, None, false, Some(3)),
    CatalogRow::new(G, 4, 1, 1, 2, None, true, None),
    CatalogRow::new(G, 4, 1, 2, 2, None, true, None),
    CatalogRow::new(G, 4, 2, 1, 2, None, true, None),
    CatalogRow::new(G, 4, 2, 2, 2, None, true, None),
    CatalogRow::new(G, 4, 2, 3, 2, Some(2), true, None),
    CatalogRow::new(G, 4, 4, 1, 3, None, false, Some(3)),
    CatalogRow::new(G, 6, 1, 1, 2, None, true, None),
    CatalogRow::new(G, 6, 2, 1, 2, None, true, None),
    CatalogRow::new(G, 6, 3, 1, 2, None, true, None),
    CatalogRow::new(G, 6, 2, 2, 2, Some(2), true, None),
    CatalogRow::new(G, 6, 3, 2, 2, Some(2), false, Some(2)),
    CatalogRow::new(G, 6, 6, 1, 3, None, false, Some(3)),
    CatalogRow::new(NG, 1, 1, 1, 3, None, true, None),
    CatalogRow::new(NG, 2, 1, 1, 1, Some(1), true, None),
    CatalogRow::new(NG, 2, 1, 1, 2, None, true, None),
    CatalogRow::new(NG, 2, 1, 2, 2, None, false, Some(2)),
    CatalogRow::new(NG, 2, 1, 3, 3, None, false, Some(3)),
    CatalogRow::new(NG, 2, 1, 4, 2, None, false, Some(2)),
    CatalogRow::new(NG, 2, 1, 5, 3, None, false, Some(3)),
    CatalogRow::new(NG, 2, 2, 1, 3, Some(3), true, None),
    CatalogRow::new(NG, 2, 2, 1, 4, None, false, Some(4)),
    CatalogRow::new(NG, 6, 6, 1, 2, Some(2), false, Some(2)),
    CatalogRow::new(NG, 6, 6, 2, 2, Some(2), false, Some(2)),
    CatalogRow::new(NG, 6, 6, 3, 2, Some(2), false, Some(2)),
    CatalogRow::new(NG, 6, 6, 4, 2, Some(2), false, Some(2)),
];

pub fn find_row(id: &GroupId) -> Option<&'static CatalogRow> {
    CATALOG_ROWS.iter().find(|row| {
        row.family == id.family
            && (row.r, row.p, row.k) == (id.r, id.p, id.k)
            && id.uses_alpha == (id.family == Family::Nongenuine)
            && row.admits(id.n)
    })
}

/// A cataloged group with its lattice, generators and expected verdict.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub id: GroupId,
    pub ring: RingTag,
    pub lattice: Lattice,
    pub linear_generators: Vec<MonomialMatrix>,
    pub expected_steinberg: bool,
    pub counterexample: Option<AffineMap>,
    pub(crate) families: OnceLock<Vec<HyperplaneFamily>>,
    pub(crate) line_module: OnceLock<Option<ScalarModule>>,
    pub(crate) monomial_invariant: OnceLock<bool>,
}

impl GroupSpec {
    pub fn n(&self) -> usize {
        self.id.n
    }

    pub fn r(&self) -> u32 {
        self.id.r
    }

    pub fn p(&self) -> u32 {
        self.id.p
    }

    pub fn name(&self) -> String {
        self.id.to_string()
    }

    /// Whether Λ is invariant under all of G(r,1,n).
    pub fn full_monomial_invariant(&self) -> bool {
        *self.monomial_invariant.get_or_init(|| {
            generators_of_linear_part(self.id.r, 1, self.id.n)
                .map(|gens| gens.iter().all(|g| self.lattice.is_invariant(g)))
                .unwrap_or(false)
        })
    }

    /// `x_1(ℂ(e_1 - e_2) ∩ Λ)` for n ≥ 2.
    pub fn difference_module(&self) -> Option<&ScalarModule> {
        self.line_module
            .get_or_init(|| {
                (self.n() >= 2).then(|| {
                    let d = Vector::unit(self.ring, self.n(), 0).sub(&Vector::unit(self.ring, self.n(), 1));
                    self.lattice.line_intersection(&d).expect("nonzero direction")
                })
            })
            .as_ref()
    }
}

fn check_parameters(r: u32, p: u32, n: usize) -> Result<RingTag, CatalogError> {
    let bad = CatalogError::InvalidParameters { r, p, n };
    let ring = RingTag::new(r).map_err(|_| bad.clone())?;
    if p == 0 || !r.is_multiple_of(p) || n == 0 {
        return Err(bad);
    }
    Ok(ring)
}

/// A generating set of G(r,p,n).
pub fn generators_of_linear_part(r: u32, p: u32, n: usize) -> Result<Vec<MonomialMatrix>, CatalogError> {
    let ring = check_parameters(r, p, n)?;
    let mut gens: Vec<MonomialMatrix> = (0..n.saturating_sub(1))
        .map(|j| MonomialMatrix::transposition(ring, n, j, j + 1))
        .collect();
    if p < r {
        gens.push(MonomialMatrix::diagonal_reflection(ring, n, 0, p as i64));
    }
    if p > 1 && n >= 2 {
        gens.push(MonomialMatrix::weighted_transposition(ring, n, 0, 1, 1));
    }
    Ok(gens)
}

/// `r^n · n! / p`.
pub fn group_order(r: u32, p: u32, n: usize) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    (r as u64).pow(n as u32) * fact / p as u64
}

pub fn enumerate_linear_group(r: u32, p: u32, n: usize) -> Result<Vec<MonomialMatrix>, CatalogError> {
    enumerate_linear_group_capped(r, p, n, ENUMERATION_CAP)
}

/// All elements in a fixed order: permutations lexicographically, then
/// exponent vectors lexicographically.
pub fn enumerate_linear_group_capped(r: u32, p: u32, n: usize, cap: u64) -> Result<Vec<MonomialMatrix>, CatalogError> {
    let ring = check_parameters(r, p, n)?;
    let count = group_order(r, p, n);
    if count > cap {
        return Err(CatalogError::TooLarge { r, p, n, count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut exps = vec![0i64; n];
        loop {
            if exps.iter().sum::<i64>() % p as i64 == 0 {
                out.push(MonomialMatrix::new(ring, perm.clone(), exps.clone()).expect("valid"));
            }
            if !advance(&mut exps, r as i64) {
                break;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    debug_assert_eq!(out.len() as u64, count);
    Ok(out)
}

/// Odometer step over `[0, r)^n`; false once it wraps around.
fn advance(digits: &mut [i64], r: i64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Membership of an affine map in `G(r,p,n) ⋉ Λ`.
pub fn is_member(w: &GroupSpec, g: &AffineMap) -> bool {
    g.dim() == w.n()
        && g.ring() == w.ring
        && g.lin.weight_product_exponent().is_multiple_of(w.p())
        && w.lattice.contains(&g.tran).unwrap_or(false)
}

fn coeff_for_g21(k: u32) -> CoeffRing {
    match k {
        1 => CoeffRing::ZAlpha,
        2 => CoeffRing::ZOnePlusAlphaHalf,
        3 => CoeffRing::HalfZAlpha,
        4 => CoeffRing::ZHalfAlpha,
        _ => CoeffRing::HalfOfZAlpha,
    }
}

fn coeff_for_g66(k: u32) -> CoeffRing {
    match k {
        1 => CoeffRing::ZAlpha,
        2 => CoeffRing::ZThirdAlpha,
        3 => CoeffRing::ZOnePlusAlphaThird,
        _ => CoeffRing::ZTwoPlusAlphaThird,
    }
}

fn build_lattice(id: &GroupId) -> Result<Lattice, LatticeError> {
    let ring = id.ring();
    let n = id.n;
    let e = |j: usize| Vector::unit(ring, n, j);
    let xi = Scalar::xi_pow(ring, 1);
    let one = Scalar::one(ring);
    let chain = |coeff: CoeffRing, c: &Scalar| -> Vec<(Vector, CoeffRing)> {
        (1..n).map(|j| (e(j - 1).sub(&e(j)).scale(c), coeff)).collect()
    };
    let skew = || e(0).scale(&xi).sub(&e(1));
    let diff = || e(0).sub(&e(1));
    let zx = CoeffRing::ZXi;
    let mut gens = Vec::new();
    match (id.family, id.r, id.p, id.k) {
        (Family::Genuine, _, 1, 1) => {
            gens.push((e(0), zx));
            gens.extend(chain(zx, &one));
        }
        (Family::Genuine, _, 1, 2) => {
            gens.push((e(0), zx));
            gens.extend(chain(zx, &inverse_one_minus_root(ring, 1)));
        }
        (Family::Genuine, 4, 2, 2) => {
            gens.push((skew(), zx));
            gens.extend(chain(zx, &one));
            gens.push((e(n - 1), zx));
        }
        (Family::Genuine, 4, 2, 3) | (Family::Genuine, 6, 2, 2) => {
            gens.push((skew(), zx));
            gens.push((diff().scale(&(&one + &xi)), zx));
        }
        (Family::Genuine, 6, 3, 2) => {
            gens.push((skew(), CoeffRing::ZTwoXi));
            gens.push((diff().scale(&(&one - &xi)), CoeffRing::ZTwoXi));
        }
        (Family::Genuine, _, _, 1) => {
            gens.push((skew(), zx));
            gens.extend(chain(zx, &one));
        }
        (Family::Nongenuine, 1, 1, 1) => gens.extend(chain(CoeffRing::ZAlpha, &one)),
        (Family::Nongenuine, 2, 1, k) => {
            gens.push((e(0), CoeffRing::ZAlpha));
            gens.extend(chain(coeff_for_g21(k), &one));
        }
        (Family::Nongenuine, 2, 2, 1) => {
            gens.push((e(0).add(&e(1)).neg(), CoeffRing::ZAlpha));
            gens.extend(chain(CoeffRing::ZAlpha, &one));
        }
        (Family::Nongenuine, 6, 6, k) => {
            // (1 + ξ)(e₁ - e₂) = ξ(1 - ξ²)(e₁ - e₂) shares the real form of
            // ξe₁ - e₂; the unrotated (1 - ξ²)(e₁ - e₂) does not.
            gens.push((skew(), CoeffRing::ZAlpha));
            gens.push((diff().scale(&(&one + &xi)), coeff_for_g66(k)));
        }
        _ => unreachable!("validated id {id}"),
    }
    Lattice::from_generators(n, ring, gens)
}

/// Table entries for the elements violating the Steinberg property, at the
/// tabulated rank.
fn tabled_counterexample(id: &GroupId) -> Option<AffineMap> {
    let ring = id.ring();
    let s = |text: &str| Scalar::parse(ring, text).expect("catalog scalar");
    let map = |exps: &[i64], tran: Vec<Scalar>| {
        AffineMap::new(MonomialMatrix::diagonal(ring, exps), Vector::new(ring, tran)).expect("catalog element")
    };
    let g = match (id.family, id.r, id.p, id.k) {
        (Family::Genuine, 3, 1, 2) => {
            let c = inverse_one_minus_root(ring, 1);
            map(&[1, 1], vec![c.clone(), -c])
        }
        (Family::Genuine, 3, 3, 1) => map(&[1, 1, 1], vec![s("1"), s("-1"), s("0")]),
        (Family::Genuine, 4, 4, 1) => map(&[1, 2, 1], vec![s("1"), s("-1"), s("0")]),
        // ω - 1 = ξ² - 1 = ξ - 2
        (Family::Genuine, 6, 3, 2) => map(&[3, 3], vec![s("1"), s("-2 + x")]),
        (Family::Genuine, 6, 6, 1) => map(&[2, 3, 1], vec![s("1"), s("-1"), s("0")]),
        (Family::Nongenuine, 2, 1, 2) => map(&[1, 1], vec![s("3/2 + 1/2*al"), s("-1/2 - 1/2*al")]),
        (Family::Nongenuine, 2, 1, 3) => map(&[1, 1, 0], vec![s("1/2 + al"), s("-1/2"), s("0")]),
        (Family::Nongenuine, 2, 1, 4) => map(&[1, 1], vec![s("1 + 1/2*al"), s("-1/2*al")]),
        (Family::Nongenuine, 2, 1, 5) => map(&[1, 1, 1], vec![s("3/2 + 1/2*al"), s("-1/2*al"), s("-1/2")]),
        (Family::Nongenuine, 2, 2, 1) => map(&[1, 1, 1, 1], vec![s("1"), s("1 + al"), s("-al"), s("0")]),
        (Family::Nongenuine, 6, 6, k) => {
            // x + γ(1+ξ) and -1 - γ(1+ξ) with γ = α, α/3, (1+α)/3, (2+α)/3
            let gamma = match k {
                1 => s("al"),
                2 => s("1/3*al"),
                3 => s("1/3 + 1/3*al"),
                _ => s("2/3 + 1/3*al"),
            };
            let shift = &gamma * &s("1 + x");
            map(&[3, 3], vec![&s("x") + &shift, &s("-1") - &shift])
        }
        _ => return None,
    };
    Some(g)
}

/// Construct the group with the given id.
pub fn build_group(id: GroupId) -> Result<GroupSpec, CatalogError> {
    let id = id.validated()?;
    let row = find_row(&id).expect("validated");
    let ring = id.ring();
    let lattice = build_lattice(&id)?;
    let counterexample = row.counterexample_n.map(|n0| {
        let g = tabled_counterexample(&id.with_n(n0)).expect("tabled counterexample");
        g.extend(id.n - n0)
    });
    Ok(GroupSpec {
        id,
        ring,
        lattice,
        linear_generators: generators_of_linear_part(id.r, id.p, id.n)?,
        expected_steinberg: row.expected_steinberg,
        counterexample,
        families: OnceLock::new(),
        line_module: OnceLock::new(),
        monomial_invariant: OnceLock::new(),
    })
}

/// Parse a group name and build it.
pub fn group(name: &str) -> Result<GroupSpec, CatalogError> {
    build_group(name.parse()?)
}

/// Every row at its minimal rank, in table order.
pub fn table_ids() -> Vec<GroupId> {
    CATALOG_ROWS.iter().map(|r| r.minimal_id()).collect()
}

/// Serialized form of a monomial matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub perm: Vec<usize>,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMapJson {
    pub lin: MonomialJson,
    pub tran: Vec<String>,
}

impl AffineMapJson {
    pub fn from_map(g: &AffineMap) -> Self {
        AffineMapJson {
            lin: MonomialJson {
                perm: g.lin.perm().to_vec(),
                exponents: g.lin.exponents().to_vec(),
            },
            tran: g.tran.coords().iter().map(|x| x.to_string()).collect(),
        }
    }

    pub fn to_map(&self, ring: RingTag) -> Result<AffineMap, CatalogError> {
        let bad = || CatalogError::UnknownGroup("malformed element".into());
        let lin = MonomialMatrix::new(
            ring,
            self.lin.perm.clone(),
            self.lin.exponents.iter().map(|&e| e as i64).collect(),
        )
        .map_err(|_| bad())?;
        let tran = self
            .tran
            .iter()
            .map(|t| Scalar::parse(ring, t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        AffineMap::new(lin, Vector::new(ring, tran)).map_err(|_| bad())
    }
}

/// One entry of the shipped catalog file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    pub id: GroupId,
    pub n_min: usize,
    pub n_max: Option<usize>,
    pub expected_steinberg: bool,
    pub lattice: LatticeJson,
    pub counterexample: Option<AffineMapJson>,
}

/// The catalog in its serialized form, each row at its minimal rank.
pub fn catalog_json() -> Vec<CatalogEntryJson> {
    CATALOG_ROWS
        .iter()
        .map(|row| {
            let spec = build_group(row.minimal_id()).expect("catalog rows build");
            CatalogEntryJson {
                id: spec.id,
                n_min: row.n_min,
                n_max: row.n_max,
                expected_steinberg: row.expected_steinberg,
                lattice: spec.lattice.to_json(),
                counterexample: spec.counterexample.as_ref().map(AffineMapJson::from_map),
            }
        })
        .collect()
}

/// The catalog file shipped with the crate.
pub const CATALOG_FILE: &str = include_str!("../data/catalog.json");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        let id: GroupId = "[G(6,3,2)]_2".parse().unwrap();
        assert_eq!(id, GroupId::genuine(6, 3, 2, 2));
        assert_eq!("G(6,3,2):2".parse::<GroupId>().unwrap(), id);
        assert_eq!("[G(6,3,2)]₂".parse::<GroupId>().unwrap(), id);
        let id: GroupId = "[G(2,1,3)]^a_3".parse().unwrap();
        assert_eq!(id, GroupId::nongenuine(2, 1, 3, 3));
        assert_eq!("G(2,1,3):a:3".parse::<GroupId>().unwrap(), id);
        assert_eq!("[G(2,1,3)]^α_3".parse::<GroupId>().unwrap(), id);
        assert_eq!("[W(A(2))]^a_1".parse::<GroupId>().unwrap(), GroupId::weyl_a(3));
        assert_eq!("[W(A_3)]^α_1".parse::<GroupId>().unwrap(), GroupId::weyl_a(4));
        assert_eq!("[G(2,2,3)]_1".parse::<GroupId>().unwrap(), GroupId::nongenuine(2, 2, 3, 1));
    }

    #[test]
    fn rejects_unknown() {
        for bad in ["[G(9,9,9)]_1", "[G(3,3,2)]_1", "[G(4,1,2)]_3", "[G(4,1,2)]^a_1", "[W(A(1))]^a_1", "G(6,6,2)", ""] {
            assert!(matches!(bad.parse::<GroupId>(), Err(CatalogError::UnknownGroup(_))), "{bad}");
        }
    }

    #[test]
    fn aliases_for_b2() {
        assert_eq!("[G(2,1,2)]^a_3".parse::<GroupId>().unwrap().k, 4);
        assert_eq!("[G(2,1,2)]^a_5".parse::<GroupId>().unwrap().k, 1);
    }

    #[test]
    fn display_round_trip() {
        for id in table_ids() {
            assert_eq!(id.to_string().parse::<GroupId>().unwrap(), id);
            assert_eq!(id.ascii().parse::<GroupId>().unwrap(), id);
        }
    }

    #[test]
    fn generators_example() {
        let gens = generators_of_linear_part(6, 3, 2).unwrap();
        let ring = RingTag::R6;
        let swap = MonomialMatrix::transposition(ring, 2, 0, 1);
        let diag = MonomialMatrix::diagonal(ring, &[3, 0]);
        // columns: e1 ↦ ξ⁻¹e2, e2 ↦ ξe1
        let skew = MonomialMatrix::new(ring, vec![1, 0], vec![-1, 1]).unwrap();
        assert_eq!(gens, vec![swap, diag, skew]);
        assert_eq!(generators_of_linear_part(1, 1, 3).unwrap().len(), 2);
        assert_eq!(
            generators_of_linear_part(4, 1, 2).unwrap(),
            vec![MonomialMatrix::transposition(RingTag::R4, 2, 0, 1), MonomialMatrix::diagonal(RingTag::R4, &[1, 0])]
        );
        assert!(generators_of_linear_part(6, 4, 2).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_linear_group(1, 1, 3).unwrap().len(), 6);
        assert_eq!(enumerate_linear_group(4, 1, 2).unwrap().len(), 32);
        assert_eq!(enumerate_linear_group(6, 3, 2).unwrap().len(), 24);
        assert!(matches!(enumerate_linear_group(6, 1, 5), Err(CatalogError::TooLarge { .. })));
    }

    #[test]
    fn membership_examples() {
        let w = group("[G(6,3,2)]_2").unwrap();
        let ring = RingTag::R6;
        let g = AffineMap::linear(MonomialMatrix::diagonal(ring, &[1, 0]));
        assert!(!is_member(&w, &g));
        let w = group("[G(4,1,2)]_1").unwrap();
        assert!(is_member(&w, &AffineMap::translation(Vector::unit(RingTag::R4, 2, 0))));
    }
}
