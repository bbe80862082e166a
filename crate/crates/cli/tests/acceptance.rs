//! One check per acceptance criterion. Each prints a single
//! `criterion N (...): PASS|FAIL` line before asserting. Runs without the
//! libtest harness so every line reaches the output, and exits nonzero if
//! any check failed.

#[path = "../../core/tests/common/mod.rs"]
mod common;
mod support;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use affgebra::constructions::{
    affine_from_homlie, build_from_data, check_alpha_kappa_bracket, commutator_bracket, constant_bracket,
    prelie_to_lie, retwist_lie, scalar_action_bracket, yau_twist_assoc, yau_twist_lie, yau_twist_prelie,
};
use affgebra::derivations::{delta_to_pair, pair_space, pair_to_delta, qc_space, solution_space};
use affgebra::fiber::{alpha_fixed_points, basepoint_change, extract_data};
use affgebra::fixtures::{
    affgebra_fixtures, build_sna, classical_homlie, homlie_fixtures, matrix_structures, sample_compatible_alpha,
    sample_valid_data, sna_structures, Classical, MatrixSpace,
};
use affgebra::io::{parse, serialize};
use affgebra::morphisms::{check_data_hom, check_iso_data, equivalence_check};
use affgebra::structures::{
    check_affine_jacobi, check_hom_associativity, check_hom_lie_affgebra, check_hom_prelie, check_multiplicativity,
};
use affgebra::{
    AffineMap, AffinePoint, BiAffineMap, DataHom, Error, Field, HomAssocAffgebra, HomLieAffgebra, HomLieAlgebra,
    HomPreLieAffgebra, Matrix, Side, Vector, Verdict,
};
use common::Q;

fn report(n: u32, title: &str, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n} ({title}): {verdict} {detail}");
}

fn bi(b: Vec<Matrix>, l1: Matrix, l2: Matrix, c: Vector) -> BiAffineMap {
    BiAffineMap::new(b, l1, l2, c).unwrap()
}

/// Associative affgebras of dimension at most 4, each with affine
/// endomorphisms to twist by.
fn assoc_fixtures() -> Vec<(String, HomAssocAffgebra, Vec<AffineMap>)> {
    let mut out = Vec::new();
    let one = |x: i64| Matrix::from_ints(Q, &[&[x]]);
    let product1 = bi(vec![one(1)], one(0), one(0), Vector::zeros(Q, 1));
    out.push((
        "ab".into(),
        HomAssocAffgebra::untwisted(product1),
        vec![
            AffineMap::constant(Vector::from_ints(Q, &[1])),
            AffineMap::constant(Vector::from_ints(Q, &[0])),
        ],
    ));
    let mut b = vec![Matrix::zeros(Q, 2, 2); 2];
    b[0][(0, 0)] = Q.one();
    b[1][(1, 1)] = Q.one();
    let componentwise = bi(b, Matrix::zeros(Q, 2, 2), Matrix::zeros(Q, 2, 2), Vector::zeros(Q, 2));
    let swap = AffineMap::linear(Matrix::from_ints(Q, &[&[0, 1], &[1, 0]])).unwrap();
    out.push(("componentwise".into(), HomAssocAffgebra::untwisted(componentwise), vec![swap]));
    let id2 = Matrix::identity(Q, 2);
    let right = bi(vec![Matrix::zeros(Q, 2, 2); 2], Matrix::zeros(Q, 2, 2), id2, Vector::zeros(Q, 2));
    let shear = AffineMap::new(Matrix::from_ints(Q, &[&[1, 2], &[0, 3]]), Vector::from_ints(Q, &[1, -1])).unwrap();
    out.push(("right_projection".into(), HomAssocAffgebra::untwisted(right), vec![shear]));

    let s = MatrixSpace::stochastic(Q, 2).unwrap();
    let bundle = matrix_structures(&s, None).unwrap();
    let conj = bundle.hom_assoc.as_ref().unwrap().alpha.clone();
    out.push(("stochastic(2)".into(), bundle.assoc.unwrap(), vec![conj]));
    out.push(("stochastic(2) conjugated".into(), bundle.hom_assoc.unwrap(), vec![]));
    out
}

fn lie_checks(label: String, s: &HomLieAffgebra, out: &mut Vec<(String, Verdict)>) {
    out.push((label, Verdict::all("hom_lie_affgebra", check_hom_lie_affgebra(s))));
}

fn fixture_algebras() -> Vec<(String, HomLieAlgebra)> {
    let mut out = homlie_fixtures(Q);
    for (i, name) in [Classical::Aff1, Classical::Heisenberg3, Classical::Sl2].iter().enumerate() {
        let a = sample_compatible_alpha(&name.structure_constants(Q), Q, 100 + i as u64);
        out.push((format!("{name}/sampled"), classical_homlie(name, Q, a).unwrap()));
    }
    out
}

fn criterion_1_axiom_suite() {
    let start = Instant::now();
    let mut results: Vec<(String, Verdict)> = Vec::new();
    let mut twisted = 0;

    for (name, s, endos) in assoc_fixtures() {
        results.push((format!("{name}"), check_hom_associativity(&s)));
        if check_multiplicativity(&s.mul, &s.alpha).passed() {
            lie_checks(format!("commutator({name})"), &commutator_bracket(&s).unwrap(), &mut results);
        }
        for side in [Side::Left, Side::Right] {
            let p = HomPreLieAffgebra::new(s.mul.clone(), s.alpha.clone(), side).unwrap();
            results.push((format!("prelie({name}, {side:?})"), check_hom_prelie(&p)));
            if s.is_untwisted() {
                lie_checks(format!("prelie_to_lie({name}, {side:?})"), &prelie_to_lie(&p).unwrap(), &mut results);
                for (k, e) in endos.iter().enumerate() {
                    let t = yau_twist_prelie(&p, e).unwrap();
                    results.push((format!("yau_prelie({name}, {side:?}, {k})"), check_hom_prelie(&t)));
                }
            }
        }
        if s.is_untwisted() {
            for (k, e) in endos.iter().enumerate() {
                let t = yau_twist_assoc(&s, e).unwrap();
                twisted += 1;
                results.push((format!("yau_assoc({name}, {k})"), check_hom_associativity(&t)));
                if check_multiplicativity(&t.mul, &t.alpha).passed() {
                    lie_checks(format!("commutator(yau_assoc({name}, {k}))"), &commutator_bracket(&t).unwrap(), &mut results);
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=4 {
        let m = common::random_invertible(&mut rng, Q, n);
        let t = Vector::new(Q, (0..n).map(|_| Q.int(rng.gen_range(-3..=3))).collect()).unwrap();
        let alpha = AffineMap::new(m, t).unwrap();
        for xi in [Q.int(0), Q.int(1), Q.int(3), Q.frac(-1, 2).unwrap()] {
            let s = scalar_action_bracket(n, &xi, &AffineMap::identity(Q, n)).unwrap();
            lie_checks(format!("scalar_action({n}, {xi})"), &s, &mut results);
            let t = yau_twist_lie(&s, &alpha).unwrap();
            twisted += 1;
            lie_checks(format!("yau_lie(scalar_action({n}, {xi}))"), &t, &mut results);
            let s = scalar_action_bracket(n, &xi, &alpha).unwrap();
            lie_checks(format!("scalar_action({n}, {xi}, twisted)"), &s, &mut results);
        }
        let phi = AffineMap::new(common::random_invertible(&mut rng, Q, n), Vector::zeros(Q, n)).unwrap();
        lie_checks(format!("constant({n})"), &constant_bracket(n, &phi, &AffineMap::identity(Q, n)).unwrap(), &mut results);
    }

    for (name, l) in fixture_algebras() {
        if l.dim() > 4 {
            continue;
        }
        for seed in 0..3 {
            let d = sample_valid_data(&l, seed).unwrap();
            lie_checks(format!("build({name}, {seed})"), &build_from_data(&d).unwrap(), &mut results);
        }
        let r = Vector::from_ints(Q, &vec![1; l.dim()]);
        match affine_from_homlie(&l, &r) {
            Ok(s) => lie_checks(format!("affine_from_homlie({name})"), &s, &mut results),
            Err(Error::AlphaNotMultiplicative(_)) => {}
            Err(e) => panic!("{name}: {e}"),
        }
    }
    let sq = MatrixSpace::stochastic(Q, 2).unwrap();
    let bundle = matrix_structures(&sq, None).unwrap();
    let lie = bundle.lie.unwrap();
    results.push(("stochastic lie".into(), check_affine_jacobi(&lie).unwrap()));
    let conj = bundle.hom_lie.as_ref().unwrap().alpha.clone();
    lie_checks("yau_lie(stochastic)".into(), &yau_twist_lie(&lie, &conj).unwrap(), &mut results);
    lie_checks("stochastic hom_lie".into(), bundle.hom_lie.as_ref().unwrap(), &mut results);
    lie_checks(
        "retwist(stochastic hom_lie)".into(),
        &retwist_lie(bundle.hom_lie.as_ref().unwrap(), &conj).unwrap(),
        &mut results,
    );

    let elapsed = start.elapsed();
    let failed: Vec<String> = results
        .iter()
        .filter(|(_, v)| !v.passed())
        .map(|(n, v)| format!("{n}: {v}"))
        .collect();
    let ok = failed.is_empty() && twisted > 0 && elapsed < Duration::from_secs(60);
    report(
        1,
        "axiom suite",
        ok,
        &format!("{} structures checked, {} failures, {:.1?}", results.len(), failed.len(), elapsed),
    );
    assert!(ok, "{failed:#?}");
}

fn criterion_2_round_trip() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let names = [
        Classical::Abelian(1),
        Classical::Abelian(2),
        Classical::Abelian(3),
        Classical::Aff1,
        Classical::Heisenberg3,
        Classical::Sl2,
    ];
    let (mut total, mut good) = (0, 0);
    for name in &names {
        for k in 0..10 {
            let alpha = sample_compatible_alpha(&name.structure_constants(Q), Q, rng.gen());
            let l = classical_homlie(name, Q, alpha).unwrap();
            let d = sample_valid_data(&l, k).unwrap();
            let s = build_from_data(&d).unwrap();
            let o = AffinePoint(common::random_fixed(&mut rng, l.alpha()));
            let forward = extract_data(&s, &AffinePoint::origin(Q, l.dim())).unwrap() == d;
            let backward = build_from_data(&extract_data(&s, &o).unwrap()).unwrap() == s.recentered(&o).unwrap();
            total += 1;
            if forward && backward {
                good += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = total >= 50 && good == total && elapsed < Duration::from_secs(30);
    report(2, "build/extract round trip", ok, &format!("{good}/{total} exact, {elapsed:.1?}"));
    assert!(ok);
}

fn criterion_3_fiber_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut structures = affgebra_fixtures(Q);
    for (name, l) in fixture_algebras() {
        let d = sample_valid_data(&l, 9).unwrap();
        structures.push((format!("data({name}, 9)"), build_from_data(&d).unwrap()));
    }
    let (mut checked, mut good) = (0, 0);
    for (_, s) in &structures {
        let Some(fp) = alpha_fixed_points(&s.alpha) else { continue };
        if fp.is_unique() {
            continue;
        }
        let o = fp.particular.clone();
        for v in &fp.kernel {
            let c = affgebra::affine::random_scalar(&mut rng, Q);
            let e = AffinePoint(o.0.add(&v.scale(&c)).unwrap().add(v).unwrap());
            checked += 1;
            if basepoint_change(s, &o, &e).unwrap().passed() {
                good += 1;
            }
        }
    }
    let ok = checked > 0 && good == checked;
    report(3, "fiber isomorphism", ok, &format!("{good}/{checked} basepoint changes certified"));
    assert!(ok);
}

fn criterion_4_pair_delta_biconditional() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut instances, mut round_trips) = (0, 0);
    let (mut mutations, mut rejected, mut accepted_valid, mut wrong) = (0, 0, 0, 0);
    for (name, l) in fixture_algebras() {
        let n = l.dim();
        let pairs = pair_space(&l);
        for _ in 0..100 {
            let coeffs: Vec<_> = (0..pairs.dim()).map(|_| affgebra::affine::random_scalar(&mut rng, Q)).collect();
            let maps = pairs.combine(&coeffs).unwrap();
            let (kappa, lambda) = (&maps[0], &maps[1]);
            instances += 1;
            let back = pair_to_delta(kappa, lambda, &l).unwrap();
            let fwd = delta_to_pair(&back.map, lambda, &l).unwrap();
            let delta_ok = common::satisfies("delta", l.sc(), l.alpha(), &[back.map.clone(), lambda.clone(), lambda.clone()]);
            if back.certificate.passed() && fwd.certificate.passed() && &fwd.map == kappa && delta_ok {
                round_trips += 1;
            }

            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let bump = Q.int(rng.gen_range(1..=3));
            let mut bad_kappa = kappa.clone();
            bad_kappa[(i, j)] = &bad_kappa[(i, j)] + &bump;
            let valid = common::satisfies("pair", l.sc(), l.alpha(), &[bad_kappa.clone(), lambda.clone()]);
            mutations += 1;
            match pair_to_delta(&bad_kappa, lambda, &l) {
                Err(Error::NotInPairSpace(_)) if !valid => rejected += 1,
                Ok(c) if valid && c.certificate.passed() => accepted_valid += 1,
                other => {
                    wrong += 1;
                    eprintln!("{name}: pair mutation misjudged: {:?}", other.map(|c| c.certificate));
                }
            }

            let mut bad_delta = back.map.clone();
            bad_delta[(i, j)] = &bad_delta[(i, j)] + &bump;
            let valid = common::satisfies("delta", l.sc(), l.alpha(), &[bad_delta.clone(), lambda.clone(), lambda.clone()]);
            mutations += 1;
            match delta_to_pair(&bad_delta, lambda, &l) {
                Err(Error::NotInDelta(_)) if !valid => rejected += 1,
                Ok(c) if valid && c.certificate.passed() => accepted_valid += 1,
                other => {
                    wrong += 1;
                    eprintln!("{name}: delta mutation misjudged: {:?}", other.map(|c| c.certificate));
                }
            }
        }
    }
    let ok = round_trips == instances && wrong == 0 && rejected + accepted_valid == mutations;
    report(
        4,
        "pair/delta biconditional",
        ok,
        &format!(
            "{round_trips}/{instances} round trips; mutations: {rejected} rejected ({:.1}%), {accepted_valid} accepted and oracle-valid, {wrong} misjudged",
            100.0 * rejected as f64 / mutations as f64
        ),
    );
    assert!(ok);
}

fn criterion_5_morphism_criteria_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut instances, mut disagreements, mut iso_instances, mut iso_disagreements) = (0, 0, 0, 0);
    let mut passing = 0;
    let note = |d: &DataHom, iso_instances: &mut i32, iso_disagreements: &mut i32| {
        if let Ok(Some(_)) = d.psi.inverse() {
            *iso_instances += 1;
            if check_data_hom(d).unwrap().passed() != check_iso_data(d).unwrap().passed() {
                *iso_disagreements += 1;
            }
        }
    };
    let agree = |s: &HomLieAffgebra, t: &HomLieAffgebra, phi: &AffineMap| -> Option<bool> {
        match equivalence_check(s, t, phi, &AffinePoint::origin(Q, s.dim())) {
            Ok(v) => Some(v.passed()),
            Err(Error::InternalInconsistency(msg)) => {
                eprintln!("disagreement: {msg}");
                None
            }
            Err(e) => panic!("{e}"),
        }
    };

    for (_, s) in affgebra_fixtures(Q) {
        if alpha_fixed_points(&s.alpha).is_none() || s.alpha.apply(&AffinePoint::origin(Q, s.dim())).unwrap() != AffinePoint::origin(Q, s.dim()) {
            continue;
        }
        instances += 1;
        match agree(&s, &s, &AffineMap::identity(Q, s.dim())) {
            Some(true) => passing += 1,
            Some(false) => {}
            None => disagreements += 1,
        }
    }

    let algebras = fixture_algebras();
    for round in 0..200 {
        let (_, l) = &algebras[round % algebras.len()];
        let n = l.dim();
        let d = sample_valid_data(l, rng.gen()).unwrap();
        let psi = common::random_invertible(&mut rng, Q, n);
        let q = common::random_fixed(&mut rng, l.alpha());
        let h = common::transported(&d, &psi, &q);
        let (s, t) = (build_from_data(&h.source).unwrap(), build_from_data(&h.target).unwrap());
        let exact = AffineMap::new(h.psi.clone(), h.qprime.clone()).unwrap();
        instances += 1;
        match agree(&s, &t, &exact) {
            Some(true) => passing += 1,
            Some(false) => {}
            None => disagreements += 1,
        }
        note(&h, &mut iso_instances, &mut iso_disagreements);

        let mut m = h.psi.clone();
        let mut shift = h.qprime.clone();
        if rng.gen_bool(0.5) {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            m[(i, j)] = &m[(i, j)] + &Q.int(rng.gen_range(1..=3));
        } else {
            let mut e = shift.entries().to_vec();
            let i = rng.gen_range(0..n);
            e[i] = &e[i] + &Q.int(rng.gen_range(1..=3));
            shift = Vector::new(Q, e).unwrap();
        }
        instances += 1;
        match agree(&s, &t, &AffineMap::new(m.clone(), shift.clone()).unwrap()) {
            Some(true) => passing += 1,
            Some(false) => {}
            None => disagreements += 1,
        }
        let mutated = DataHom { psi: m, qprime: shift, ..h };
        note(&mutated, &mut iso_instances, &mut iso_disagreements);
    }
    let ok = disagreements == 0 && iso_disagreements == 0 && passing > 0 && passing < instances;
    report(
        5,
        "morphism criteria agree",
        ok,
        &format!(
            "{instances} instances ({passing} homomorphisms), {disagreements} disagreements; iso form: {iso_instances} instances, {iso_disagreements} disagreements"
        ),
    );
    assert!(ok);
}

fn criterion_6_derivation_oracle() {
    let mut rows = Vec::new();
    let mut ok = true;
    for name in [Classical::Abelian(2), Classical::Aff1, Classical::Heisenberg3, Classical::Sl2] {
        let n = name.dim();
        for (tag, a) in [("id", Matrix::identity(Q, n)), ("std", name.standard_alpha(Q))] {
            let l = classical_homlie(&name, Q, a).unwrap();
            let mut cells = Vec::new();
            for kind in affgebra::SpaceKind::ALL {
                let primary = solution_space(&l, kind).dim();
                let oracle = common::space_dim(kind.name(), l.sc(), l.alpha());
                ok &= primary == oracle;
                cells.push(format!("{}={primary}/{oracle}", kind.name()));
            }
            rows.push(format!("{name}/{tag}: {}", cells.join(" ")));
        }
    }
    let sl2 = classical_homlie(&Classical::Sl2, Q, Matrix::identity(Q, 3)).unwrap();
    let alphader = common::space_dim("alphader", sl2.sc(), sl2.alpha());
    let centroid = common::space_dim("centroid", sl2.sc(), sl2.alpha());
    for r in &rows {
        println!("  {r}");
    }
    report(
        6,
        "derivation-space oracle",
        ok,
        &format!("(primary/oracle per space); sl2/id: alphader {alphader}, centroid {centroid}"),
    );
    assert!(ok);
}

fn criterion_7_sna() {
    let start = Instant::now();
    let space = build_sna(Q, 2).unwrap();
    println!("  {}", space.report.to_string().replace('\n', "\n  "));
    let bundle = sna_structures(&space, None).unwrap();
    let lie_ok = match &bundle.lie {
        Ok(s) => check_affine_jacobi(s).unwrap().passed(),
        Err(_) => false,
    };
    let hom_ok = |v: &Verdict, r: Result<(), &Error>| match r {
        Ok(()) => v.passed(),
        Err(Error::ClosureFailure(msg)) => {
            println!("  documented closure failure: {msg}");
            true
        }
        Err(_) => false,
    };
    let verdicts = bundle.verdicts();
    let hom_assoc_ok = hom_ok(&verdicts[2], bundle.hom_assoc.as_ref().map(|_| ()));
    let hom_lie_ok = hom_ok(&verdicts[3], bundle.hom_lie.as_ref().map(|_| ()));
    let elapsed = start.elapsed();
    let ok = lie_ok && hom_assoc_ok && hom_lie_ok && elapsed < Duration::from_secs(120);
    report(
        7,
        "sna(2) Lie bracket and Hom variants",
        ok,
        &format!("lie {lie_ok}, hom_assoc {hom_assoc_ok}, hom_lie {hom_lie_ok}, {elapsed:.1?}"),
    );
    assert!(ok);
}

/// The matrix product is required to make sna(2) an associative
/// affgebra. Under both index conventions the product of two elements
/// leaves the space (its trace is not zero), so this cannot pass.
fn criterion_7_sna_associative_product() {
    let space = build_sna(Q, 2).unwrap();
    let bundle = sna_structures(&space, None).unwrap();
    let (ok, detail) = match &bundle.assoc {
        Ok(s) => (check_hom_associativity(s).passed(), "product closes".to_string()),
        Err(e) => (false, e.to_string()),
    };
    report(7, "sna(2) associative product", ok, &detail);
    assert!(ok, "{detail}");
}

fn criterion_8_alpha_kappa_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut checked, mut good) = (0, 0);
    for (_, l) in fixture_algebras() {
        let qc = qc_space(&l);
        let mut candidates: Vec<Matrix> = qc.basis_maps().into_iter().map(|mut m| m.remove(0)).collect();
        for _ in 0..5 {
            let coeffs: Vec<_> = (0..qc.dim()).map(|_| affgebra::affine::random_scalar(&mut rng, Q)).collect();
            candidates.push(qc.combine(&coeffs).unwrap().remove(0));
        }
        for kappa in candidates {
            checked += 1;
            if check_alpha_kappa_bracket(&l, &kappa).unwrap().passed() {
                good += 1;
            }
        }
    }
    let ok = good == checked;
    report(8, "[alpha(a), kappa(a)] = 0 on the quasi-centroid", ok, &format!("{good}/{checked}"));
    assert!(ok);
}

fn criterion_9_cli_contract() {
    let cases = support::cases();
    let mut problems = Vec::new();
    let mut codes = std::collections::BTreeSet::new();
    for case in &cases {
        let first = support::run(&case.args);
        let second = support::run(&case.args);
        codes.insert(first.exit);
        if first.exit != case.exit {
            problems.push(format!("{}: exit {} != {}", case.name, first.exit, case.exit));
        }
        if first.stdout != support::expected_stdout(case) {
            problems.push(format!("{}: output differs from golden file", case.name));
        }
        if first.stdout != second.stdout || first.exit != second.exit {
            problems.push(format!("{}: nondeterministic", case.name));
        }
    }
    for name in support::CANONICAL {
        let text = std::fs::read_to_string(support::golden_dir().join(name)).unwrap();
        match parse(text.as_bytes()) {
            Ok(f) if serialize(&f) == text => {}
            _ => problems.push(format!("{name}: not a byte-stable round trip")),
        }
    }
    let all_codes = codes == [0, 1, 2].into_iter().collect();
    let ok = problems.is_empty() && all_codes;
    report(
        9,
        "CLI contract",
        ok,
        &format!("{} golden cases, exit codes seen {codes:?}", cases.len()),
    );
    assert!(ok, "{problems:#?}");
}

fn fixtures_over_a_prime_field() {
    let f = Field::prime(7).unwrap();
    for (name, l) in homlie_fixtures(f) {
        let d = sample_valid_data(&l, 1).unwrap();
        let s = build_from_data(&d).unwrap();
        assert_eq!(extract_data(&s, &AffinePoint::origin(f, l.dim())).unwrap(), d, "{name}");
    }
}

fn main() {
    let checks: [(&str, fn()); 11] = [
        ("criterion_1_axiom_suite", criterion_1_axiom_suite),
        ("criterion_2_round_trip", criterion_2_round_trip),
        ("criterion_3_fiber_isomorphism", criterion_3_fiber_isomorphism),
        ("criterion_4_pair_delta_biconditional", criterion_4_pair_delta_biconditional),
        ("criterion_5_morphism_criteria_agree", criterion_5_morphism_criteria_agree),
        ("criterion_6_derivation_oracle", criterion_6_derivation_oracle),
        ("criterion_7_sna", criterion_7_sna),
        ("criterion_7_sna_associative_product", criterion_7_sna_associative_product),
        ("criterion_8_alpha_kappa_invariant", criterion_8_alpha_kappa_invariant),
        ("criterion_9_cli_contract", criterion_9_cli_contract),
        ("fixtures_over_a_prime_field", fixtures_over_a_prime_field),
    ];
    let mut failed = Vec::new();
    for (name, check) in checks {
        if std::panic::catch_unwind(check).is_err() {
            failed.push(name);
        }
    }
    println!("\n{} checks, {} failed {:?}", checks.len(), failed.len(), failed);
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
