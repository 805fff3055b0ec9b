//! Checking the Steinberg property: every point with a nontrivial stabilizer
//! lies on a reflecting hyperplane.
//!
//! The decisive test for a single element is hyperplane-family membership
//! of its fixed space. The constructions of the cycle lemma and the
//! diagonal-entry lemma are run alongside as independent witnesses, and
//! sweeps over bounded translation boxes compare the two.

use std::time::Instant;

use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::affine::{
    fixed_space, is_central_reflection, is_reflection, power, subspace_satisfies_form, AffineMap,
    AffineSubspace, FixedSpaceSolver, MonomialMatrix, Vector,
};
use crate::catalog::{
    build_group, enumerate_linear_group, group_order, is_member, AffineMapJson, CatalogError, Family,
    GroupId, GroupSpec, CATALOG_ROWS,
};
use crate::hyperplanes::{
    point_on_arrangement, reflection_families, subspace_on_arrangement, witness_from_reflection, Witness,
};
use crate::lattices::{ScalarModule, ScalarSpace};
use crate::linalg;
use crate::scalars::{q, Rational, RingTag, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinbergError {
    #[error("element is not in {0}")]
    NotAMember(String),
    #[error("the identity has no verdict")]
    IdentityElement,
    #[error("{0} is expected to have the Steinberg property")]
    ExpectedPositiveGroup(String),
    #[error("counterexample check failed for {group}: {reason}")]
    CounterexampleFailed { group: String, reason: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// `z ~ w` under `G(r,1,1) ⋉ Λ′` acting on ℂ.
#[derive(Debug, Clone)]
pub struct OrbitQuery {
    pub r: u32,
    pub module: ScalarModule,
    pub z: Scalar,
    pub w: Scalar,
}

/// The least `m ∈ [0, r)` with `z - ξ_r^m·w ∈ Λ′`.
pub fn orbit_equiv(query: &OrbitQuery) -> Option<u32> {
    let ring = query.module.space().ring;
    assert!(ring.order().is_multiple_of(query.r), "ξ_{} is not in the scalar field", query.r);
    let step = (ring.order() / query.r) as i64;
    (0..query.r).find(|&m| {
        let rotated = &Scalar::xi_pow(ring, m as i64 * step) * &query.w;
        query.module.contains(&(&query.z - &rotated))
    })
}

/// Partition of `points` into orbits, as sorted index classes ordered by
/// their smallest member.
pub fn orbit_classes(r: u32, module: &ScalarModule, points: &[Scalar]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a == b {
                continue;
            }
            let query = OrbitQuery {
                r,
                module: module.clone(),
                z: points[i].clone(),
                w: points[j].clone(),
            };
            if orbit_equiv(&query).is_some() {
                parent[b.max(a)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class = std::collections::HashMap::new();
    for i in 0..points.len() {
        let root = find(&mut parent, i);
        let idx = *root_class.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(i);
    }
    classes
}

fn witness_if_sound(w: &GroupSpec, s: &AffineMap, fixed: &AffineSubspace) -> Option<Witness> {
    let wit = witness_from_reflection(w, s)?;
    subspace_satisfies_form(fixed, &wit.form, &wit.constant)
        .ok()
        .filter(|&ok| ok)
        .map(|_| wit)
}

/// The cycle construction: along an edge `a → b` of a cycle of `Lin(g)`
/// with trivial weight product, every fixed point satisfies
/// `x_b - w·x_a = t_b`, which is the mirror of a weighted transposition
/// whenever the matching translation lies in `Λ`.
pub fn witness_from_cycle(w: &GroupSpec, g: &AffineMap) -> Option<Witness> {
    let fixed = fixed_space(g);
    if fixed.is_empty() {
        return None;
    }
    let ring = w.ring;
    let r = ring.order();
    let n = w.n();
    let lin = &g.lin;
    for cycle in lin.cycles() {
        if cycle.len() < 2 || lin.cycle_weight_exponent(&cycle) != 0 {
            continue;
        }
        for &a in &cycle {
            let b = lin.perm()[a];
            let e = lin.exponents()[a];
            let tb = g.tran.coord(b);
            // x_b - ξ^e x_a = t_b, rewritten as x_j - ξ^m x_k = c with j < k
            let (j, k, m, c) = if b < a {
                (b, a, e, tb.clone())
            } else {
                let inv = Scalar::xi_pow(ring, -(e as i64));
                (a, b, (r - e) % r, -(&inv * tb))
            };
            let sigma = MonomialMatrix::weighted_transposition(ring, n, j, k, m as i64);
            let root = crate::affine::LinearForm::Difference { j, k, m }.root(ring, n);
            let s = AffineMap::new(sigma, root.scale(&c)).expect("shapes agree");
            if is_member(w, &s) {
                if let Some(wit) = witness_if_sound(w, &s, &fixed) {
                    return Some(wit);
                }
            }
        }
    }
    None
}

/// The diagonal-entry constructions, tried in order: (1) through `g^p`,
/// (2) for `g^p = 1`, (3) through orbit equivalence of two fixed
/// coordinates.
pub fn witness_from_conditions(w: &GroupSpec, g: &AffineMap) -> Option<Witness> {
    let fixed = fixed_space(g);
    if fixed.is_empty() {
        return None;
    }
    let ring = w.ring;
    let (r, p, n) = (w.r(), w.p(), w.n());
    let lin = &g.lin;
    let active: Vec<usize> = (0..n).filter(|&j| matches!(lin.diagonal_exponent(j), Some(e) if e != 0)).collect();
    if active.is_empty() {
        return None;
    }
    let one = Scalar::one(ring);
    let quotient = |j: usize| {
        let lambda = Scalar::xi_pow(ring, lin.exponents()[j] as i64);
        g.tran.coord(j) * &(&one - &lambda).inverse().expect("λ ≠ 1")
    };
    if r != p {
        let gp = power(g, p as i64);
        if !gp.is_identity() {
            // (1): u_j = λ_j^p u_j + x_j(Tran(g^p))
            for &j in &active {
                let e = (lin.exponents()[j] * p) % r;
                if e == 0 {
                    continue;
                }
                let beta = gp.tran.coord(j);
                let s = AffineMap::new(
                    MonomialMatrix::diagonal_reflection(ring, n, j, e as i64),
                    Vector::unit(ring, n, j).scale(beta),
                )
                .expect("shapes agree");
                if is_member(w, &s) {
                    if let Some(wit) = witness_if_sound(w, &s, &fixed) {
                        return Some(wit);
                    }
                }
            }
        } else {
            // (2): β′ = x_j(Tran(g)) / (1 - λ_j)
            for &j in &active {
                let beta = quotient(j);
                if !w.lattice.contains(&Vector::unit(ring, n, j).scale(&beta)).unwrap_or(false) {
                    continue;
                }
                let factor = &one - &Scalar::xi_pow(ring, p as i64);
                let s = AffineMap::new(
                    MonomialMatrix::diagonal_reflection(ring, n, j, p as i64),
                    Vector::unit(ring, n, j).scale(&(&factor * &beta)),
                )
                .expect("shapes agree");
                assert!(is_member(w, &s), "(1 - ξ^p)β′e_j must lie in Λ when β′e_j does");
                if let Some(wit) = witness_if_sound(w, &s, &fixed) {
                    return Some(wit);
                }
            }
        }
    }
    // (3)
    if active.len() >= 2 && w.full_monomial_invariant() {
        let module = w.difference_module()?;
        for (idx, &j) in active.iter().enumerate() {
            for &l in &active[idx + 1..] {
                let query = OrbitQuery {
                    r,
                    module: module.clone(),
                    z: quotient(j),
                    w: quotient(l),
                };
                let Some(m) = orbit_equiv(&query) else { continue };
                let delta = &query.z - &(&Scalar::xi_pow(ring, m as i64) * &query.w);
                let root = crate::affine::LinearForm::Difference { j, k: l, m }.root(ring, n);
                let s = AffineMap::new(
                    MonomialMatrix::weighted_transposition(ring, n, j, l, m as i64),
                    root.scale(&delta),
                )
                .expect("shapes agree");
                assert!(is_member(w, &s), "δ(e_j - ξ^(-m)e_l) must lie in a G(r,1,n)-invariant Λ");
                if let Some(wit) = witness_if_sound(w, &s, &fixed) {
                    return Some(wit);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    NoFixedPoint,
    /// `g^power` is a reflection of `W`; its mirror contains `V^g`.
    IsReflectionPower { power: u32, witness: Witness },
    OnHyperplane(Witness),
    Violation { point: Vector, fixed_space: AffineSubspace },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementVerdict {
    pub element: AffineMap,
    pub outcome: Outcome,
}

/// Smallest `j ≥ 1` below the order with `σ^j` a central reflection.
pub fn reflection_power(lin: &MonomialMatrix) -> Option<u32> {
    (1..lin.order()).find(|&j| is_central_reflection(&lin.pow(j)))
}

pub fn verify_element(w: &GroupSpec, g: &AffineMap) -> Result<ElementVerdict, SteinbergError> {
    if !is_member(w, g) {
        return Err(SteinbergError::NotAMember(w.name()));
    }
    if g.is_identity() {
        return Err(SteinbergError::IdentityElement);
    }
    let fixed = fixed_space(g);
    let outcome = if fixed.is_empty() {
        Outcome::NoFixedPoint
    } else if let Some(j) = reflection_power(&g.lin) {
        let witness = witness_from_reflection(w, &power(g, j as i64)).expect("a power with a fixed point is a reflection of W");
        Outcome::IsReflectionPower { power: j, witness }
    } else {
        match subspace_on_arrangement(w, &fixed).expect("nonempty") {
            Some(wit) => Outcome::OnHyperplane(wit),
            None => Outcome::Violation {
                point: fixed.base().expect("nonempty").clone(),
                fixed_space: fixed,
            },
        }
    };
    Ok(ElementVerdict {
        element: g.clone(),
        outcome,
    })
}

/// Verdict class of an element, without the witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    NoFixedPoint,
    ReflectionPower,
    OnHyperplane,
    Violation,
}

impl Outcome {
    pub fn category(&self) -> Category {
        match self {
            Outcome::NoFixedPoint => Category::NoFixedPoint,
            Outcome::IsReflectionPower { .. } => Category::ReflectionPower,
            Outcome::OnHyperplane(_) => Category::OnHyperplane,
            Outcome::Violation { .. } => Category::Violation,
        }
    }
}

/// Linear conditions on the lattice coefficients `z` of the translation.
#[derive(Debug, Clone)]
struct LinearCheck {
    /// `row·z = 0`
    zero_rows: Vec<Vec<i128>>,
    /// `row·z ≡ 0 (mod den)`
    int_rows: Vec<(Vec<i128>, i128)>,
}

fn dot(row: &[i128], z: &[i64]) -> i128 {
    row.iter().zip(z).map(|(a, &b)| a * b as i128).sum()
}

impl LinearCheck {
    fn holds(&self, z: &[i64]) -> bool {
        self.zero_rows.iter().all(|row| dot(row, z) == 0)
            && self.int_rows.iter().all(|(row, den)| dot(row, z) % den == 0)
    }
}

fn integer_row(row: &[Rational]) -> (Vec<i128>, i128) {
    let den = linalg::common_denominator(row.iter());
    let scale = Rational::from_integer(den.clone());
    let ints = row
        .iter()
        .map(|x| (x * &scale).to_integer().to_i128().expect("coefficients fit in i128"))
        .collect();
    (ints, den.to_i128().expect("denominator fits in i128"))
}

/// Everything about `g = (σ, Σ z_i b_i)` that is linear in `z`: consistency
/// of the fixed-point system and, per hyperplane branch whose form is
/// constant on the fixed space, membership of that constant.
#[derive(Debug, Clone)]
struct SigmaPlan {
    lin: MonomialMatrix,
    consistency: Vec<Vec<i128>>,
    reflection_power: bool,
    branches: Vec<LinearCheck>,
}

impl SigmaPlan {
    fn new(w: &GroupSpec, lin: &MonomialMatrix) -> Self {
        let ring = w.ring;
        let n = w.n();
        let space = w.lattice.space();
        let solver = FixedSpaceSolver::new(lin);
        let rank = solver.rank();
        let transformed: Vec<Vec<Scalar>> = w.lattice.zbasis().iter().map(|b| solver.transformed(b)).collect();
        let coords = |x: &Scalar| space.coords(x);
        let mut consistency = Vec::new();
        for row in rank..n {
            let cols: Vec<Vec<Rational>> = transformed.iter().map(|tt| coords(&tt[row])).collect();
            for c in 0..space.degree() {
                let r: Vec<Rational> = cols.iter().map(|col| col[c].clone()).collect();
                if r.iter().any(|x| !x.is_zero()) {
                    consistency.push(integer_row(&r).0);
                }
            }
        }
        let particular: Vec<Vector> = transformed
            .iter()
            .map(|tt| {
                let mut v = vec![Scalar::zero(ring); n];
                for (i, &p) in solver.pivots().iter().enumerate() {
                    v[p] = tt[i].clone();
                }
                Vector::new(ring, v)
            })
            .collect();
        let mut branches = Vec::new();
        for family in reflection_families(w) {
            if solver.kernel().iter().any(|d| !family.form.eval(d).is_zero()) {
                continue;
            }
            let values: Vec<Vec<Rational>> = particular.iter().map(|p| coords(&family.form.eval(p))).collect();
            for branch in &family.branches {
                let span = branch.constants.span();
                let zero_rows = span
                    .annihilator()
                    .iter()
                    .map(|a| {
                        let row: Vec<Rational> = values
                            .iter()
                            .map(|v| a.iter().zip(v).fold(Rational::zero(), |acc, (x, y)| acc + x * y))
                            .collect();
                        integer_row(&row).0
                    })
                    .filter(|row| row.iter().any(|&x| x != 0))
                    .collect();
                let coeffs: Vec<Vec<Rational>> = values.iter().map(|v| span.coefficients_unchecked(v)).collect();
                let int_rows = (0..span.rank())
                    .map(|k| integer_row(&coeffs.iter().map(|c| c[k].clone()).collect::<Vec<_>>()))
                    .filter(|(_, den)| *den != 1)
                    .collect();
                branches.push(LinearCheck { zero_rows, int_rows });
            }
        }
        SigmaPlan {
            lin: lin.clone(),
            consistency,
            reflection_power: reflection_power(lin).is_some(),
            branches,
        }
    }

    fn classify(&self, z: &[i64]) -> Category {
        if self.consistency.iter().any(|row| dot(row, z) != 0) {
            Category::NoFixedPoint
        } else if self.reflection_power {
            Category::ReflectionPower
        } else if self.branches.iter().any(|b| b.holds(z)) {
            Category::OnHyperplane
        } else {
            Category::Violation
        }
    }
}

/// Integer coordinates of a lattice vector in the lattice's ℤ-basis.
pub fn lattice_coordinates(w: &GroupSpec, t: &Vector) -> Option<Vec<i64>> {
    let c = w.lattice.coefficients(t)?;
    c.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect()
}

/// Verdict class by the linearized engine used in sweeps.
pub fn sweep_classify(w: &GroupSpec, g: &AffineMap) -> Result<Category, SteinbergError> {
    if !is_member(w, g) {
        return Err(SteinbergError::NotAMember(w.name()));
    }
    if g.is_identity() {
        return Err(SteinbergError::IdentityElement);
    }
    let z = lattice_coordinates(w, &g.tran).ok_or_else(|| SteinbergError::NotAMember(w.name()))?;
    Ok(SigmaPlan::new(w, &g.lin).classify(&z))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOptions {
    /// Translation coefficients range over `[-bound, bound]`.
    pub bound: u32,
    /// Uniform sample size without replacement, instead of the full grid.
    pub budget: Option<u64>,
    pub seed: u64,
    /// Run the lemma constructions on every element with a fixed point.
    pub cross_check: bool,
    /// Violations kept in the report (all are counted).
    pub max_recorded: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            bound: 1,
            budget: None,
            seed: 0x5eed,
            cross_check: true,
            max_recorded: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub element: AffineMapJson,
    pub fixed_point: Vec<String>,
    pub fixed_space_dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub group: GroupId,
    pub options: SweepOptions,
    /// Size of the (σ, z) grid, identity included.
    pub grid_size: u64,
    pub sampled: bool,
    pub examined: u64,
    pub no_fixed_point: u64,
    pub reflection_powers: u64,
    pub on_hyperplane: u64,
    pub violation_count: u64,
    pub violations: Vec<ViolationRecord>,
    /// Lemma witnesses produced, and how many disagreed with the verdict.
    pub witness_checks: u64,
    pub witness_disagreements: u64,
    /// Recorded violations not confirmed by `verify_element`.
    pub engine_disagreements: u64,
    pub elapsed_ms: u64,
}

impl SweepReport {
    /// Equality ignoring wall time.
    pub fn same_result(&self, other: &SweepReport) -> bool {
        let mut a = self.clone();
        a.elapsed_ms = other.elapsed_ms;
        &a == other
    }
}

#[derive(Debug, Default)]
struct Partial {
    counts: [u64; 4],
    violations: Vec<Vec<i64>>,
    witness_checks: u64,
    witness_disagreements: u64,
}

fn category_index(c: Category) -> usize {
    match c {
        Category::NoFixedPoint => 0,
        Category::ReflectionPower => 1,
        Category::OnHyperplane => 2,
        Category::Violation => 3,
    }
}

fn decode(mut idx: u64, bound: u32, rank: usize) -> Vec<i64> {
    let width = 2 * bound as u64 + 1;
    let mut z = vec![0i64; rank];
    for slot in z.iter_mut().rev() {
        *slot = (idx % width) as i64 - bound as i64;
        idx /= width;
    }
    z
}

fn cross_check(w: &GroupSpec, g: &AffineMap, category: Category) -> Option<bool> {
    let fired: Vec<Witness> = [witness_from_cycle(w, g), witness_from_conditions(w, g)]
        .into_iter()
        .flatten()
        .collect();
    if fired.is_empty() {
        return None;
    }
    let fixed = fixed_space(g);
    let sound = fired.iter().all(|wit| {
        is_reflection(&wit.reflection)
            && is_member(w, &wit.reflection)
            && subspace_satisfies_form(&fixed, &wit.form, &wit.constant).unwrap_or(false)
    });
    Some(sound && matches!(category, Category::OnHyperplane | Category::ReflectionPower))
}

fn sweep_sigma(w: &GroupSpec, lin: &MonomialMatrix, z_indices: &mut dyn Iterator<Item = u64>, opts: &SweepOptions) -> Partial {
    let plan = SigmaPlan::new(w, lin);
    let rank = w.lattice.rank();
    let identity = lin.is_identity();
    let mut out = Partial::default();
    for zi in z_indices {
        let z = decode(zi, opts.bound, rank);
        if identity && z.iter().all(|&x| x == 0) {
            continue;
        }
        let category = plan.classify(&z);
        out.counts[category_index(category)] += 1;
        if category == Category::Violation && out.violations.len() < opts.max_recorded {
            out.violations.push(z.clone());
        }
        if opts.cross_check && category != Category::NoFixedPoint {
            let g = AffineMap::new(plan.lin.clone(), w.lattice.combine(&z)).expect("shapes agree");
            if let Some(agrees) = cross_check(w, &g, category) {
                out.witness_checks += 1;
                if !agrees {
                    out.witness_disagreements += 1;
                }
            }
        }
    }
    out
}

/// Examine `g = (σ, t)` for all σ ∈ G(r,p,n) and all lattice vectors `t`
/// with coefficients in `[-B, B]` (or a seeded uniform sample of that grid).
pub fn sweep(w: &GroupSpec, opts: &SweepOptions) -> Result<SweepReport, SteinbergError> {
    let start = Instant::now();
    let sigmas = enumerate_linear_group(w.r(), w.p(), w.n())?;
    let rank = w.lattice.rank();
    let width = 2 * opts.bound as u64 + 1;
    let box_size = width
        .checked_pow(rank as u32)
        .ok_or_else(|| SteinbergError::Catalog(CatalogError::TooLarge {
            r: w.r(),
            p: w.p(),
            n: w.n(),
            count: u64::MAX,
            cap: u64::MAX,
        }))?;
    let grid_size = sigmas.len() as u64 * box_size;
    let sample = opts.budget.filter(|&b| b < grid_size.saturating_sub(1));
    let partials: Vec<(usize, Partial)> = match sample {
        None => sigmas
            .par_iter()
            .enumerate()
            .map(|(i, lin)| (i, sweep_sigma(w, lin, &mut (0..box_size), opts)))
            .collect(),
        Some(budget) => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let identity_sigma = sigmas.iter().position(|s| s.is_identity()).expect("identity") as u64;
            let identity_index = identity_sigma * box_size + box_size / 2;
            let total = usize::try_from(grid_size - 1).expect("grid fits in usize");
            let mut picks: Vec<u64> = rand::seq::index::sample(&mut rng, total, budget as usize)
                .into_iter()
                .map(|i| {
                    let i = i as u64;
                    if i >= identity_index {
                        i + 1
                    } else {
                        i
                    }
                })
                .collect();
            picks.sort_unstable();
            let mut per_sigma: Vec<(usize, Vec<u64>)> = Vec::new();
            for idx in picks {
                let s = (idx / box_size) as usize;
                match per_sigma.last_mut() {
                    Some((last, v)) if *last == s => v.push(idx % box_size),
                    _ => per_sigma.push((s, vec![idx % box_size])),
                }
            }
            per_sigma
                .par_iter()
                .map(|(s, zs)| (*s, sweep_sigma(w, &sigmas[*s], &mut zs.iter().copied(), opts)))
                .collect()
        }
    };
    let mut counts = [0u64; 4];
    let mut pending = Vec::new();
    let (mut witness_checks, mut witness_disagreements) = (0, 0);
    for (s, part) in partials {
        for (c, x) in counts.iter_mut().zip(part.counts) {
            *c += x;
        }
        witness_checks += part.witness_checks;
        witness_disagreements += part.witness_disagreements;
        for z in part.violations {
            if pending.len() < opts.max_recorded {
                pending.push((s, z));
            }
        }
    }
    let mut engine_disagreements = 0;
    let mut violations = Vec::new();
    for (s, z) in pending {
        let g = AffineMap::new(sigmas[s].clone(), w.lattice.combine(&z)).expect("shapes agree");
        match verify_element(w, &g)?.outcome {
            Outcome::Violation { point, fixed_space } => violations.push(ViolationRecord {
                element: AffineMapJson::from_map(&g),
                fixed_point: point.coords().iter().map(|x| x.to_string()).collect(),
                fixed_space_dimension: fixed_space.dimension().unwrap_or(0),
            }),
            _ => engine_disagreements += 1,
        }
    }
    Ok(SweepReport {
        group: w.id,
        options: opts.clone(),
        grid_size,
        sampled: sample.is_some(),
        examined: counts.iter().sum(),
        no_fixed_point: counts[0],
        reflection_powers: counts[1],
        on_hyperplane: counts[2],
        violation_count: counts[3],
        violations,
        witness_checks,
        witness_disagreements,
        engine_disagreements,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub group: GroupId,
    pub element: AffineMapJson,
    pub fixed_space_dimension: usize,
    /// A fixed point of the element on no reflecting hyperplane.
    pub regular_fixed_point: Vec<String>,
    /// Pairwise orbit inequivalence of the fixed coordinates, for the
    /// `[G(r,r,3)]_1` rows.
    pub orbits_distinct: Option<bool>,
    pub passed: bool,
}

/// Search `base + Σ c_i d_i` for a point on no hyperplane; one exists
/// whenever the subspace lies on no single hyperplane.
fn regular_point(w: &GroupSpec, fixed: &AffineSubspace) -> Option<Vector> {
    let base = fixed.base()?;
    let dirs = fixed.directions();
    let ring = w.ring;
    let space = ScalarSpace::new(ring, w.lattice.uses_alpha());
    let offsets: Vec<Scalar> = [0i64, 1, 2, 3, 5, 7]
        .iter()
        .flat_map(|&a| space.basis().into_iter().map(move |b| b.scale(&q(a, 101))))
        .collect();
    let mut choice = vec![0usize; dirs.len()];
    loop {
        let mut u = base.clone();
        for (d, &c) in dirs.iter().zip(&choice) {
            u = u.add(&d.scale(&offsets[c]));
        }
        if point_on_arrangement(w, &u).ok()?.is_none() {
            return Some(u);
        }
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < offsets.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            return None;
        }
    }
}

/// Certify the tabled element of a group that fails the Steinberg property.
pub fn check_counterexample(id: GroupId) -> Result<CounterexampleReport, SteinbergError> {
    let w = build_group(id)?;
    if w.expected_steinberg {
        return Err(SteinbergError::ExpectedPositiveGroup(w.name()));
    }
    let fail = |reason: String| SteinbergError::CounterexampleFailed { group: w.name(), reason };
    let g = w.counterexample.clone().expect("negative rows carry an element");
    if !is_member(&w, &g) {
        return Err(fail(format!("{g} is not a member")));
    }
    let fixed = fixed_space(&g);
    if fixed.is_empty() {
        return Err(fail(format!("{g} has no fixed point")));
    }
    if let Some(wit) = subspace_on_arrangement(&w, &fixed).expect("nonempty") {
        return Err(fail(format!("fixed space {fixed} lies on {} = {}", wit.form, wit.constant)));
    }
    let point = regular_point(&w, &fixed).ok_or_else(|| fail("no regular fixed point found".into()))?;
    let orbits_distinct = (w.id.family == Family::Genuine && w.r() == w.p() && w.n() == 3).then(|| {
        let ring = w.ring;
        let module = ScalarModule::from_generators(
            ScalarSpace::new(ring, false),
            vec![Scalar::one(ring), Scalar::xi_pow(ring, 1)],
        );
        orbit_classes(w.r(), &module, point.coords()).len() == 3
    });
    if orbits_distinct == Some(false) {
        return Err(fail(format!("coordinates of {point} are not in distinct orbits")));
    }
    Ok(CounterexampleReport {
        group: w.id,
        element: AffineMapJson::from_map(&g),
        fixed_space_dimension: fixed.dimension().unwrap_or(0),
        regular_fixed_point: point.coords().iter().map(|x| x.to_string()).collect(),
        orbits_distinct,
        passed: true,
    })
}

/// Sweep parameters used for the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableOptions {
    pub bound: u32,
    /// Second, larger bound for rank ≤ 2 rows.
    pub extended_bound: Option<u32>,
    /// Grids larger than this are sampled.
    pub full_grid_limit: u64,
    pub sample_budget: u64,
    /// Also sweep the rank-3 rows with r = 6 that have the property.
    pub include_rank3_hexagonal: bool,
    pub seed: u64,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            bound: 1,
            extended_bound: Some(2),
            full_grid_limit: 200_000,
            sample_budget: 100_000,
            include_rank3_hexagonal: true,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub bound: u32,
    pub grid_size: u64,
    pub sampled: bool,
    pub examined: u64,
    pub violation_count: u64,
    pub witness_checks: u64,
    pub witness_disagreements: u64,
    pub engine_disagreements: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub group: GroupId,
    pub expected_steinberg: bool,
    pub computed_steinberg: Option<bool>,
    /// Beyond the minimal tabled rank.
    pub extended: bool,
    pub sweeps: Vec<SweepSummary>,
    pub note: String,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.computed_steinberg == Some(self.expected_steinberg)
            && self.sweeps.iter().all(|s| s.witness_disagreements == 0 && s.engine_disagreements == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub options: TableOptions,
    pub rows: Vec<TableRow>,
    pub mismatches: usize,
}

fn summarize(report: &SweepReport) -> SweepSummary {
    SweepSummary {
        bound: report.options.bound,
        grid_size: report.grid_size,
        sampled: report.sampled,
        examined: report.examined,
        violation_count: report.violation_count,
        witness_checks: report.witness_checks,
        witness_disagreements: report.witness_disagreements,
        engine_disagreements: report.engine_disagreements,
    }
}

/// Verdict for one group: certification of the tabled element for negative
/// rows, bounded sweeps for positive rows.
pub fn table_row(id: GroupId, opts: &TableOptions, extended: bool) -> Result<TableRow, SteinbergError> {
    let w = build_group(id)?;
    if !w.expected_steinberg {
        let (computed, note) = match check_counterexample(id) {
            Ok(rep) => (Some(false), format!("regular fixed point ({})", rep.regular_fixed_point.join(", "))),
            Err(e) => (None, e.to_string()),
        };
        return Ok(TableRow {
            group: w.id,
            expected_steinberg: false,
            computed_steinberg: computed,
            extended,
            sweeps: Vec::new(),
            note,
        });
    }
    let mut bounds = vec![opts.bound];
    if w.n() <= 2 {
        bounds.extend(opts.extended_bound);
    }
    let mut sweeps = Vec::new();
    for bound in bounds {
        let grid = group_order(w.r(), w.p(), w.n()) * (2 * bound as u64 + 1).pow(w.lattice.rank() as u32);
        let sweep_opts = SweepOptions {
            bound,
            budget: (grid > opts.full_grid_limit).then_some(opts.sample_budget),
            seed: opts.seed,
            cross_check: true,
            max_recorded: 10,
        };
        sweeps.push(summarize(&sweep(&w, &sweep_opts)?));
    }
    let clean = sweeps.iter().all(|s| s.violation_count == 0);
    let note = sweeps
        .iter()
        .map(|s| {
            format!(
                "B={} {} {} elements, {} violations",
                s.bound,
                if s.sampled { "sampled" } else { "all" },
                s.examined,
                s.violation_count
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    Ok(TableRow {
        group: w.id,
        expected_steinberg: true,
        computed_steinberg: Some(clean),
        extended,
        sweeps,
        note,
    })
}

/// Rows at their minimal tabled rank, plus the optional rank-3 hexagonal
/// rows.
pub fn table_ids(opts: &TableOptions) -> Vec<(GroupId, bool)> {
    let mut ids: Vec<(GroupId, bool)> = CATALOG_ROWS.iter().map(|r| (r.minimal_id(), false)).collect();
    if opts.include_rank3_hexagonal {
        for row in CATALOG_ROWS.iter() {
            let id = row.minimal_id();
            if id.family == Family::Genuine && id.r == 6 && row.expected_steinberg && id.n == 2 && row.n_max.is_none() {
                ids.push((id.with_n(3), true));
            }
        }
    }
    ids
}

pub fn full_table_report(opts: &TableOptions) -> Result<TableReport, SteinbergError> {
    let rows = table_ids(opts)
        .into_iter()
        .map(|(id, extended)| table_row(id, opts, extended))
        .collect::<Result<Vec<_>, _>>()?;
    let mismatches = rows.iter().filter(|r| !r.matches()).count();
    Ok(TableReport {
        options: opts.clone(),
        rows,
        mismatches,
    })
}

/// Ring of integers `ℤ[ξ]` as a scalar module.
pub fn cyclotomic_integers(ring: RingTag) -> ScalarModule {
    ScalarModule::from_generators(ScalarSpace::new(ring, false), vec![Scalar::one(ring), Scalar::xi_pow(ring, 1)])
}
