//! Reflecting hyperplanes of a cataloged group.
//!
//! Every reflection of `G(r,p,n) ⋉ Λ` has a central reflection `σ` as its
//! linear part and a translation in `Λ ∩ (1 - σ)ℂⁿ`. The central reflections
//! are the diagonal `diag(…, ξ^{pt}, …)` and the weighted transpositions, so
//! the arrangement splits into finitely many families `{form = c}` where `c`
//! ranges over an explicit ℤ-module.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::{
    is_reflection, AffineError, AffineMap, AffineSubspace, LinearForm, MonomialMatrix, Vector,
};
use crate::catalog::{is_member, GroupSpec};
use crate::lattices::{inverse_one_minus_root, ScalarModule};
use crate::linalg::ZSpan;
use crate::scalars::{qi, CycloScalar, Rational, RingTag, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperplaneError {
    #[error("constant {0} is not admissible for {1}")]
    ConstantNotAdmissible(String, String),
    #[error("the group has rank {0}, not 1")]
    NotRankOne(usize),
    #[error("window plots need a group without the formal parameter")]
    AlphaGroup,
    #[error("dimension mismatch ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error(transparent)]
    Affine(#[from] AffineError),
}

/// Hyperplanes `{form = c}` for one eigenvalue of the reflecting linear part.
#[derive(Debug, Clone)]
pub struct Branch {
    /// Nontrivial eigenvalue `λ` of the central reflection.
    pub eigenvalue: CycloScalar,
    /// Exponent `e` with `λ = ξ^e` for coordinate forms.
    pub exponent: Option<u32>,
    /// Admissible constants, already divided by `1 - λ` for coordinate forms.
    pub constants: ScalarModule,
}

#[derive(Debug, Clone)]
pub struct HyperplaneFamily {
    pub form: LinearForm,
    pub branches: Vec<Branch>,
}

/// An explicit reflection of the group whose mirror is `{form = constant}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub reflection: AffineMap,
    pub form: LinearForm,
    pub eigenvalue: CycloScalar,
    pub constant: Scalar,
}

fn build_families(w: &GroupSpec) -> Vec<HyperplaneFamily> {
    let ring = w.ring;
    let (n, r, p) = (w.n(), w.r(), w.p());
    let mut out = Vec::new();
    if r / p > 1 {
        for j in 0..n {
            let line = w
                .lattice
                .line_intersection(&Vector::unit(ring, n, j))
                .expect("unit vectors are nonzero");
            let branches = (1..r / p)
                .map(|t| {
                    let e = p * t;
                    Branch {
                        eigenvalue: CycloScalar::root_of_unity(ring, e as i64),
                        exponent: Some(e),
                        constants: line.scaled(&inverse_one_minus_root(ring, e as i64)),
                    }
                })
                .collect();
            out.push(HyperplaneFamily { form: LinearForm::Coordinate(j), branches });
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            for m in 0..r {
                let form = LinearForm::Difference { j, k, m };
                let constants = w
                    .lattice
                    .line_intersection(&form.root(ring, n))
                    .expect("roots are nonzero");
                out.push(HyperplaneFamily {
                    form,
                    branches: vec![Branch {
                        eigenvalue: CycloScalar::from_ints(ring, -1, 0),
                        exponent: None,
                        constants,
                    }],
                });
            }
        }
    }
    out
}

/// The arrangement as (form, constant-module) families, computed once per
/// group.
pub fn reflection_families(w: &GroupSpec) -> &[HyperplaneFamily] {
    w.families.get_or_init(|| build_families(w))
}

/// The central reflection of a branch.
fn branch_linear_part(ring: RingTag, n: usize, form: &LinearForm, branch: &Branch) -> MonomialMatrix {
    match *form {
        LinearForm::Coordinate(j) => {
            MonomialMatrix::diagonal_reflection(ring, n, j, branch.exponent.expect("coordinate branch") as i64)
        }
        LinearForm::Difference { j, k, m } => MonomialMatrix::weighted_transposition(ring, n, j, k, m as i64),
    }
}

fn build_witness(w: &GroupSpec, form: &LinearForm, branch: &Branch, c: &Scalar) -> Witness {
    let ring = w.ring;
    let n = w.n();
    let lin = branch_linear_part(ring, n, form, branch);
    let tran = match form {
        LinearForm::Coordinate(j) => {
            let one_minus = &Scalar::one(ring) - &Scalar::from_cyclo(branch.eigenvalue.clone());
            Vector::unit(ring, n, *j).scale(&(&one_minus * c))
        }
        LinearForm::Difference { .. } => form.root(ring, n).scale(c),
    };
    Witness {
        reflection: AffineMap::new(lin, tran).expect("shapes agree"),
        form: *form,
        eigenvalue: branch.eigenvalue.clone(),
        constant: c.clone(),
    }
}

/// An explicit reflection of `W` fixing `{form = constant}`.
pub fn witness_reflection(w: &GroupSpec, family: &HyperplaneFamily, constant: &Scalar) -> Result<AffineMap, HyperplaneError> {
    family
        .branches
        .iter()
        .find(|b| b.constants.contains(constant))
        .map(|b| build_witness(w, &family.form, b, constant).reflection)
        .ok_or_else(|| HyperplaneError::ConstantNotAdmissible(constant.to_string(), family.form.to_string()))
}

/// A reflection of `W` whose mirror passes through `u`, if any.
pub fn point_on_arrangement(w: &GroupSpec, u: &Vector) -> Result<Option<Witness>, HyperplaneError> {
    if u.dim() != w.n() {
        return Err(HyperplaneError::DimensionMismatch(w.n(), u.dim()));
    }
    for family in reflection_families(w) {
        let c = family.form.eval(u);
        if let Some(b) = family.branches.iter().find(|b| b.constants.contains(&c)) {
            return Ok(Some(build_witness(w, &family.form, b, &c)));
        }
    }
    Ok(None)
}

/// A reflection of `W` whose mirror contains the whole subspace, if any.
pub fn subspace_on_arrangement(w: &GroupSpec, a: &AffineSubspace) -> Result<Option<Witness>, HyperplaneError> {
    let (base, directions) = match a {
        AffineSubspace::Empty => return Err(AffineError::EmptySubspace.into()),
        AffineSubspace::Affine { base, directions } => (base, directions),
    };
    if base.dim() != w.n() {
        return Err(HyperplaneError::DimensionMismatch(w.n(), base.dim()));
    }
    for family in reflection_families(w) {
        if directions.iter().any(|d| !family.form.eval(d).is_zero()) {
            continue;
        }
        let c = family.form.eval(base);
        if let Some(b) = family.branches.iter().find(|b| b.constants.contains(&c)) {
            return Ok(Some(build_witness(w, &family.form, b, &c)));
        }
    }
    Ok(None)
}

/// Recover form, eigenvalue and constant from a reflection of `W`.
pub fn witness_from_reflection(w: &GroupSpec, s: &AffineMap) -> Option<Witness> {
    if !is_reflection(s) || !is_member(w, s) {
        return None;
    }
    let ring = w.ring;
    let lin = &s.lin;
    let r = ring.order();
    let moved: Vec<usize> = (0..lin.dim()).filter(|&j| lin.perm()[j] != j).collect();
    let (form, eigenvalue, constant) = match moved.as_slice() {
        [] => {
            let j = (0..lin.dim()).find(|&j| lin.exponents()[j] != 0)?;
            let lambda = lin.weight(j);
            let one_minus = &Scalar::one(ring) - &Scalar::from_cyclo(lambda.clone());
            let c = s.tran.coord(j) * &one_minus.inverse().ok()?;
            (LinearForm::Coordinate(j), lambda, c)
        }
        &[j, k] => {
            // σ e_j = ξ^{-m} e_k
            let m = (r - lin.exponents()[j]) % r;
            (LinearForm::Difference { j, k, m }, CycloScalar::from_ints(ring, -1, 0), s.tran.coord(j).clone())
        }
        _ => return None,
    };
    Some(Witness { reflection: s.clone(), form, eigenvalue, constant })
}

/// Family listing in text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchJson {
    pub eigenvalue: String,
    pub constants: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub form: String,
    pub branches: Vec<BranchJson>,
}

pub fn families_json(w: &GroupSpec) -> Vec<FamilyJson> {
    reflection_families(w)
        .iter()
        .map(|f| FamilyJson {
            form: f.form.to_string(),
            branches: f
                .branches
                .iter()
                .map(|b| BranchJson {
                    eigenvalue: b.eigenvalue.to_string(),
                    constants: b.constants.generators().iter().map(|g| g.to_string()).collect(),
                })
                .collect(),
        })
        .collect()
}

/// Points of a rank-one group inside the square `[-R, R]²` of the complex
/// plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub ring: RingTag,
    pub radius: Rational,
    pub lattice_points: Vec<Scalar>,
    pub hyperplane_points: Vec<Scalar>,
}

/// `ξ = c + s·i` where `s² = sin_sq` and `c` is rational.
fn xi_parts(ring: RingTag) -> (Rational, Rational) {
    match ring.order() {
        3 => (Rational::new((-1).into(), 2.into()), Rational::new(3.into(), 4.into())),
        4 => (qi(0), qi(1)),
        6 => (Rational::new(1.into(), 2.into()), Rational::new(3.into(), 4.into())),
        _ => (qi(0), qi(0)),
    }
}

/// Exact test `|Re x| ≤ R` and `|Im x| ≤ R`.
pub fn in_box(x: &Scalar, radius: &Rational) -> bool {
    let (cos, sin_sq) = xi_parts(x.ring());
    let a = x.c0().a();
    let b = x.c0().b();
    let re = a + b * &cos;
    re.abs() <= *radius && b * b * &sin_sq <= radius * radius
}

/// Real and imaginary parts for drawing.
pub fn to_plane(x: &Scalar) -> (f64, f64) {
    let (cos, sin_sq) = xi_parts(x.ring());
    let f = |q: &Rational| -> f64 {
        use num_traits::ToPrimitive;
        q.to_f64().unwrap_or(f64::NAN)
    };
    let a = x.c0().a();
    let b = x.c0().b();
    (f(&(a + b * &cos)), f(b) * f(&sin_sq).sqrt())
}

/// Module points in the square, by exhausting a coefficient box that
/// provably covers it.
pub fn module_points_in_box(m: &ScalarModule, radius: &Rational) -> Vec<Scalar> {
    let space = m.space();
    let ring = space.ring;
    let gens = m.generators();
    if gens.is_empty() {
        return vec![Scalar::zero(ring)];
    }
    let deg = space.degree();
    let span = ZSpan::new(deg, gens.iter().map(|g| space.coords(g)).collect()).expect("canonical basis");
    // every point in the square has coordinates bounded by 2R in absolute value
    let bound = radius * qi(2);
    let mut limits = vec![qi(0); gens.len()];
    for axis in 0..deg {
        let mut unit = vec![qi(0); deg];
        unit[axis] = qi(1);
        for (lim, c) in limits.iter_mut().zip(span.coefficients_unchecked(&unit)) {
            *lim += c.abs() * &bound;
        }
    }
    let limits: Vec<i64> = limits
        .iter()
        .map(|l| {
            use num_traits::ToPrimitive;
            l.ceil().to_integer().to_i64().expect("window fits in i64")
        })
        .collect();
    let mut out = BTreeMap::new();
    let mut coeffs: Vec<i64> = limits.iter().map(|l| -l).collect();
    loop {
        let x = gens
            .iter()
            .zip(&coeffs)
            .fold(Scalar::zero(ring), |acc, (g, &c)| &acc + &g.scale(&qi(c)));
        if in_box(&x, radius) {
            out.insert(space.coords(&x), x);
        }
        let mut i = 0;
        while i < coeffs.len() {
            coeffs[i] += 1;
            if coeffs[i] <= limits[i] {
                break;
            }
            coeffs[i] = -limits[i];
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
    }
    out.into_values().collect()
}

fn sorted_union(sets: impl IntoIterator<Item = Vec<Scalar>>) -> Vec<Scalar> {
    let mut out = BTreeMap::new();
    for x in sets.into_iter().flatten() {
        out.insert(x.real_coordinates(false), x);
    }
    out.into_values().collect()
}

/// Lattice points and hyperplane points of a rank-one group in `[-R, R]²`.
pub fn rank1_window(w: &GroupSpec, radius: &Rational) -> Result<Window, HyperplaneError> {
    if w.n() != 1 {
        return Err(HyperplaneError::NotRankOne(w.n()));
    }
    if w.lattice.uses_alpha() {
        return Err(HyperplaneError::AlphaGroup);
    }
    let ring = w.ring;
    let lattice_module = w
        .lattice
        .line_intersection(&Vector::unit(ring, 1, 0))
        .expect("nonzero");
    let lattice_points = sorted_union([module_points_in_box(&lattice_module, radius)]);
    let hyperplane_points = sorted_union(
        reflection_families(w)
            .iter()
            .flat_map(|f| f.branches.iter())
            .map(|b| module_points_in_box(&b.constants, radius)),
    );
    Ok(Window {
        ring,
        radius: radius.clone(),
        lattice_points,
        hyperplane_points,
    })
}
