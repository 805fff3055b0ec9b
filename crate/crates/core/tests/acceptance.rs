//! One pass/fail line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crefl::affine::{fixed_space, has_finite_order, is_reflection, AffineMap, LinearForm, MonomialMatrix, Vector};
use crefl::catalog::*;
use crefl::hyperplanes::{module_points_in_box, rank1_window, reflection_families};
use crefl::lattices::{ScalarModule, ScalarSpace};
use crefl::scalars::{q, qi, RingTag, Scalar};
use crefl::steinberg::*;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn z_xi(ring: RingTag) -> ScalarModule {
    ScalarModule::from_generators(ScalarSpace::new(ring, false), vec![Scalar::one(ring), Scalar::xi_pow(ring, 1)])
}

fn inv_one_minus(ring: RingTag, e: i64) -> Scalar {
    (&Scalar::one(ring) - &Scalar::xi_pow(ring, e)).inverse().unwrap()
}

fn counterexamples() -> Outcome {
    let start = Instant::now();
    let rows: Vec<_> = CATALOG_ROWS.iter().filter(|r| !r.expected_steinberg).collect();
    let genuine = rows.iter().filter(|r| r.family == Family::Genuine).count();
    let mut failures = Vec::new();
    for row in &rows {
        if let Err(e) = check_counterexample(row.minimal_id()) {
            failures.push(e.to_string());
        }
    }
    let elapsed = start.elapsed();
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    if elapsed > Duration::from_secs(5) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "{genuine} genuine and {} Coxeter elements certified in {elapsed:.2?}",
        rows.len() - genuine
    ))
}

fn table(report: &TableReport, elapsed: Duration) -> Outcome {
    let bad: Vec<String> = report.rows.iter().filter(|r| !r.matches()).map(|r| format!("{}: {}", r.group, r.note)).collect();
    if !bad.is_empty() {
        return Err(bad.join("; "));
    }
    for row in report.rows.iter().filter(|r| r.expected_steinberg) {
        let first = &row.sweeps[0];
        let n = row.group.n;
        if first.bound != 1 {
            return Err(format!("{}: first sweep at B={}", row.group, first.bound));
        }
        if n <= 2 && first.sampled {
            return Err(format!("{}: B=1 grid was sampled", row.group));
        }
        if n == 3 && row.group.r == 6 && first.examined < 100_000 {
            return Err(format!("{}: only {} elements", row.group, first.examined));
        }
    }
    if elapsed > Duration::from_secs(600) {
        return Err(format!("took {elapsed:?}"));
    }
    let swept: u64 = report.rows.iter().flat_map(|r| &r.sweeps).map(|s| s.examined).sum();
    Ok(format!("{} rows, 0 mismatches, {swept} elements swept in {elapsed:.1?}", report.rows.len()))
}

/// `a + bξ` as exact real and squared imaginary parts, for the square test.
fn in_square(x: &Scalar, radius: i64) -> bool {
    let (a, b) = (x.c0().a().clone(), x.c0().b().clone());
    let (cos, sin_sq) = match x.ring().order() {
        4 => (qi(0), qi(1)),
        6 => (q(1, 2), q(3, 4)),
        _ => (q(-1, 2), q(3, 4)),
    };
    let re = &a + &b * &cos;
    re.abs() <= qi(radius) && &b * &b * &sin_sq <= qi(radius * radius)
}

fn brute_window(modules: &[ScalarModule], radius: i64) -> BTreeSet<Vec<num_rational::BigRational>> {
    let mut out = BTreeSet::new();
    for m in modules {
        let g = m.generators();
        for a in -24i64..=24 {
            for b in -24i64..=24 {
                let x = &g[0].scale(&qi(a)) + &g[1].scale(&qi(b));
                if in_square(&x, radius) {
                    out.insert(x.real_coordinates(false));
                }
            }
        }
    }
    out
}

fn rank_one_windows() -> Outcome {
    let mut details = Vec::new();
    for (name, targets) in [
        ("[G(4,1,1)]_1", vec![z_xi(RingTag::R4).scaled(&Scalar::parse(RingTag::R4, "1/2").unwrap())]),
        ("[G(6,1,1)]_1", {
            let r = RingTag::R6;
            let z_omega = ScalarModule::from_generators(ScalarSpace::new(r, false), vec![Scalar::one(r), Scalar::xi_pow(r, 2)]);
            vec![z_omega.scaled(&inv_one_minus(r, 2)), z_omega.scaled(&Scalar::parse(r, "1/2").unwrap())]
        }),
    ] {
        let w = group(name).unwrap();
        let window = rank1_window(&w, &qi(3)).map_err(|e| e.to_string())?;
        let computed: BTreeSet<_> = window.hyperplane_points.iter().map(|x| x.real_coordinates(false)).collect();
        let expected = brute_window(&targets, 3);
        if computed != expected {
            return Err(format!("{name}: {} points, expected {}", computed.len(), expected.len()));
        }
        details.push(format!("{name} {} points", computed.len()));
    }
    Ok(details.join(", "))
}

fn golden_listing() -> Outcome {
    let r = RingTag::R6;
    let w = group("[G(6,2,2)]_2").unwrap();
    let omega = Scalar::xi_pow(r, 2);
    let z_omega = ScalarModule::from_generators(ScalarSpace::new(r, false), vec![Scalar::one(r), omega.clone()]);
    let scaled = z_omega.scaled(&(&Scalar::one(r) - &omega));
    let mut checked = 0;
    for family in reflection_families(&w) {
        let expected = match family.form {
            LinearForm::Difference { m, .. } if m % 2 == 0 => &scaled,
            _ => &z_omega,
        };
        for branch in &family.branches {
            if !(branch.constants.is_submodule_of(expected) && expected.is_submodule_of(&branch.constants)) {
                return Err(format!("{}: {}", family.form, branch.constants));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} branches equal their tabled modules"))
}

fn orbits() -> Outcome {
    // (a) half-Eisenstein points under G(6,1,1) ⋉ ℤ[ω]
    let r6 = RingTag::R6;
    let z6 = z_xi(r6);
    let points = module_points_in_box(&z6.scaled(&Scalar::parse(r6, "1/2").unwrap()), &qi(2));
    let classes = orbit_classes(6, &z6, &points);
    let integral: BTreeSet<usize> = (0..points.len()).filter(|&i| z6.contains(&points[i])).collect();
    let a_ok = classes.len() == 2 && classes.iter().any(|c| c.iter().copied().collect::<BTreeSet<_>>() == integral);
    // (b) odd-odd half-Gaussian vertices under G(4,1,1) ⋉ (1/(1-i))ℤ[i]
    let r4 = RingTag::R4;
    let module4 = z_xi(r4).scaled(&inv_one_minus(r4, 1));
    let mut odd = Vec::new();
    for a in (-7i64..=7).step_by(2) {
        for b in (-7i64..=7).step_by(2) {
            odd.push(Scalar::from_parts(r4, q(a, 2), q(b, 2), qi(0), qi(0)));
        }
    }
    let b_classes = orbit_classes(4, &module4, &odd).len();
    // (c) non-integral points of (1/(1-ω))ℤ[ω] under G(3,1,1) ⋉ ℤ[ω]
    let r3 = RingTag::R3;
    let z3 = z_xi(r3);
    let vertices: Vec<Scalar> = module_points_in_box(&z3.scaled(&inv_one_minus(r3, 1)), &qi(2))
        .into_iter()
        .filter(|x| !z3.contains(x))
        .collect();
    let c_classes = orbit_classes(3, &z3, &vertices).len();
    // (d) tabled [G(r,r,3)]_1 fixed points
    let mut d_ok = true;
    for r in [3, 4, 6] {
        let report = check_counterexample(GroupId::genuine(r, r, 3, 1)).map_err(|e| e.to_string())?;
        d_ok &= report.orbits_distinct == Some(true);
    }
    let summary = format!(
        "(a) {} classes of {} points, (b) {b_classes} class of {} vertices, (c) {c_classes} classes, (d) distinct orbits {}",
        classes.len(),
        points.len(),
        odd.len(),
        if d_ok { "for r = 3, 4, 6" } else { "FAILED" }
    );
    if a_ok && b_classes == 1 && c_classes == 2 && d_ok {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn fixed_point_lemma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let rings = common::rings();
    let trials = 10_000;
    let mut discrepancies = 0;
    let mut with_fixed = 0;
    let mut reflections = 0;
    for _ in 0..trials {
        let ring = rings[rng.gen_range(0..3)];
        let n = rng.gen_range(1..=3);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        // bias toward few nontrivial weights so reflections occur often
        let exps: Vec<i64> = (0..n)
            .map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..ring.order() as i64) })
            .collect();
        let lin = MonomialMatrix::new(ring, perm, exps).unwrap();
        let tran: Vec<Scalar> = (0..n).map(|_| Scalar::cyclo(ring, rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect();
        let g = AffineMap::new(lin, Vector::new(ring, tran)).unwrap();
        let iterated_finite = common::iterate_to_linear_identity(&g).tran.is_zero();
        let has_fixed = !fixed_space(&g).is_empty();
        let lin_reflection = common::rank_one_minus(&g.lin) == 1;
        let numeric_fixed = common::solvable(&g);
        if has_finite_order(&g) != iterated_finite
            || has_fixed != iterated_finite
            || has_fixed != numeric_fixed
            || is_reflection(&g) != (numeric_fixed && lin_reflection)
        {
            discrepancies += 1;
        }
        with_fixed += has_fixed as u32;
        reflections += is_reflection(&g) as u32;
    }
    let summary = format!("{trials} maps ({with_fixed} with fixed points, {reflections} reflections), {discrepancies} discrepancies");
    if discrepancies == 0 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn witness_agreement(report: &TableReport) -> Outcome {
    let sweeps: Vec<_> = report.rows.iter().flat_map(|r| &r.sweeps).collect();
    let checks: u64 = sweeps.iter().map(|s| s.witness_checks).sum();
    let disagreements: u64 = sweeps.iter().map(|s| s.witness_disagreements).sum();
    let engine: u64 = sweeps.iter().map(|s| s.engine_disagreements).sum();
    let summary = format!("{checks} lemma witnesses, {disagreements} disagreements, {engine} engine disagreements");
    if checks > 0 && disagreements == 0 && engine == 0 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn invariance() -> Outcome {
    let mut checked = 0;
    for row in CATALOG_ROWS.iter() {
        let w = build_group(row.minimal_id()).unwrap();
        for g in generators_of_linear_part(w.r(), w.p(), w.n()).unwrap() {
            if !w.lattice.is_invariant(&g) {
                return Err(format!("{} not invariant under {g}", w.name()));
            }
            checked += 1;
        }
    }
    let full = enumerate_linear_group(6, 1, 2).unwrap();
    for p in [1, 2, 3] {
        let w = build_group(GroupId::genuine(6, p, 2, 1)).unwrap();
        if let Some(g) = full.iter().find(|g| !w.lattice.is_invariant(g)) {
            return Err(format!("{} not invariant under {g}", w.name()));
        }
    }
    Ok(format!("{checked} generator checks over {} rows, G(6,1,2) preserves the three [G(6,p,2)]_1 lattices", CATALOG_ROWS.len()))
}

fn main() {
    let start = Instant::now();
    let report = full_table_report(&TableOptions::default());
    let table_time = start.elapsed();
    let report = match report {
        Ok(r) => Some(r),
        Err(e) => {
            eprintln!("table report failed: {e}");
            None
        }
    };
    let missing = || Err("no table report".to_string());
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "counterexample certification", counterexamples()),
        (2, "verdict table", report.as_ref().map_or_else(missing, |r| table(r, table_time))),
        (3, "rank-one hyperplane sets", rank_one_windows()),
        (4, "hexagonal hyperplane listing", golden_listing()),
        (5, "orbit facts", orbits()),
        (6, "fixed points and reflections", fixed_point_lemma()),
        (7, "lemma witnesses agree with the oracle", report.as_ref().map_or_else(missing, witness_agreement)),
        (8, "lattice invariance", invariance()),
    ];
    let mut failed = 0;
    for (k, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {k} PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {k} FAIL {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
