//! Acceptance criteria, one line each. Runs with its own harness so the
//! lines always appear in the test output.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use atriv_core::algebra::{free_gperm, GradedAlgebra};
use atriv_core::functors::{self, f_a_triv, g_a_triv, g_sigma_sign, g_sigma_triv};
use atriv_core::operad::TruncatedOperad;
use atriv_core::series::{as_coefficients, gk_estimate, rational_fit};
use atriv_core::symgroup::verify_sign_lemma;
use atriv_core::{catalog, Field};
use num_bigint::BigInt;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: atriv_core::Error) -> String {
    e.to_string()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn sign_lemma() -> Outcome {
    let start = Instant::now();
    let report = verify_sign_lemma(5, 4).map_err(err)?;
    for case in &report.cases {
        ensure(case.failures.is_empty(), || {
            format!("case {} fails: {}", case.label, case.failures[0])
        })?;
    }
    within(start, Duration::from_secs(10), "sign lemma")?;
    Ok(format!(
        "{} identities over {} cases",
        report.total_checked(),
        report.cases.len()
    ))
}

fn axiom_suite() -> Outcome {
    let start = Instant::now();
    let f = Field::Rational;
    let xy = catalog::build_xy_algebra(f, 6).map_err(err)?;
    let operads: Vec<(&str, TruncatedOperad)> = vec![
        ("Com", catalog::build_com(f, 7).map_err(err)?),
        ("Ope", catalog::build_ope(f, 7).map_err(err)?),
        ("Mas(1,1)", g_sigma_sign(&catalog::build_massey(f, 1, 1, 6).map_err(err)?).map_err(err)?),
        ("Mas(2,1)", g_sigma_sign(&catalog::build_massey(f, 2, 1, 6).map_err(err)?).map_err(err)?),
        ("G(xy)", g_sigma_triv(&xy).map_err(err)?),
    ];
    for (name, p) in &operads {
        ensure(p.max_arity() == 7, || format!("{name} has max arity {}", p.max_arity()))?;
        let v = p.check_axioms();
        ensure(v.is_empty(), || format!("{name}: {} violations, first {}", v.len(), v[0]))?;
    }
    let ope = &operads[1].1;
    let mut rng = common::rng(20);
    let mutations = common::random_mutations(&mut rng, 7, 20);
    ensure(mutations.len() == 20, || "fewer than 20 mutable entries".into())?;
    for (entry, delta) in &mutations {
        let q = common::mutate_entry(ope, *entry, *delta);
        ensure(!q.check_axioms().is_empty(), || format!("mutation {entry:?} by {delta} accepted"))?;
    }
    within(start, Duration::from_secs(60), "axiom suite")?;
    Ok("5 operads clean at N=7, 20/20 mutations of Ope rejected".into())
}

/// `H_P = t·H_A`.
fn hilbert_shift(p: &TruncatedOperad, a: &GradedAlgebra, what: &str) -> Result<(), String> {
    let mut shifted = vec![0];
    shifted.extend(a.hilbert());
    ensure(p.hilbert() == shifted, || format!("{what}: H_P {:?} vs t·H_A {:?}", p.hilbert(), shifted))
}

fn gperm_round_trip() -> Outcome {
    let f = Field::Rational;
    let cases = [
        ("free GPerm on two degree-1 generators", free_gperm(f, &[1, 1], 6).map_err(err)?),
        ("k[x]", catalog::polynomial(f, 1, 6).map_err(err)?),
        ("k<x,y>/(xy,y^2)", catalog::build_xy_algebra(f, 6).map_err(err)?),
    ];
    for (name, a) in &cases {
        let d = functors::roundtrip_gperm(a).map_err(err)?;
        ensure(d.is_empty(), || format!("{name}: F G != id: {}", d.differences[0]))?;
        let p = g_sigma_triv(a).map_err(err)?;
        hilbert_shift(&p, a, name)?;
        let d = functors::roundtrip_sigma_trivial(&p).map_err(err)?;
        ensure(d.is_empty(), || format!("{name}: G F != id: {}", d.differences[0]))?;
        hilbert_shift(&p, &functors::forget_f(&p).map_err(err)?, name)?;
    }
    Ok("3 algebras, both composites are the identity".into())
}

fn pgperm_both_ways(a: &GradedAlgebra, name: &str) -> Result<TruncatedOperad, String> {
    let d = functors::roundtrip_pgperm(a).map_err(err)?;
    ensure(d.is_empty(), || format!("{name}: F G != id: {}", d.differences[0]))?;
    let p = g_a_triv(a).map_err(err)?;
    hilbert_shift(&p, a, name)?;
    let d = functors::roundtrip_a_trivial(&p).map_err(err)?;
    ensure(d.is_empty(), || format!("{name}: G F != id: {}", d.differences[0]))?;
    hilbert_shift(&p, &f_a_triv(&p).map_err(err)?, name)?;
    Ok(p)
}

fn a_trivial_round_trip() -> Outcome {
    let f = Field::Rational;
    pgperm_both_ways(&catalog::build_massey(f, 1, 1, 6).map_err(err)?, "Mas(1,1)")?;
    let u = catalog::polynomial(f, 2, 6).map_err(err)?;
    let p = pgperm_both_ways(&u.with_typing(u.uniform_typing(true)).map_err(err)?, "k[u]")?;
    let d = functors::diff_operads(&catalog::build_ope(f, 7).map_err(err)?, &p);
    ensure(d.is_empty(), || format!("k[u] does not give Ope: {}", d.differences[0]))?;
    let mut rng = common::rng(4);
    for k in 0..10 {
        let a = common::random_pgc(f, &mut rng, 5, 3);
        ensure(a.dims().iter().all(|&d| d <= 3), || format!("instance {k} too large"))?;
        ensure(a.check_pgc().map_err(err)?.is_empty(), || format!("instance {k} is not PGC"))?;
        pgperm_both_ways(&a, &format!("random PGC {k}"))?;
    }
    Ok("Mas(1,1), k[u] (recovers Ope), 10 random PGC instances".into())
}

fn mixed_typing(a: &GradedAlgebra) -> bool {
    let flags: Vec<bool> = a.typing().map(|t| t.iter().flatten().copied().collect()).unwrap_or_default();
    flags.iter().any(|&x| x) && flags.iter().any(|&x| !x)
}

fn composition_cases() -> Outcome {
    let mut rng = common::rng(37);
    let mut done = [0usize; 2];
    let mut k = 0;
    while done[0] + done[1] < 25 {
        let (field, slot) = if k % 2 == 0 { (Field::Rational, 0) } else { (Field::prime(5).unwrap(), 1) };
        k += 1;
        let a = common::random_pgperm(field, &mut rng, 5, 3);
        if !mixed_typing(&a) {
            continue;
        }
        ensure(a.check_pgperm().map_err(err)?.is_empty(), || "generator produced a non-PGPerm algebra".into())?;
        let p = g_a_triv(&a).map_err(err)?;
        let v = p.check_axioms();
        ensure(v.is_empty(), || format!("instance over {field}: {}", v[0]))?;
        ensure(p.classify_symmetry().a_trivial, || "output is not A-trivial".into())?;
        done[slot] += 1;
    }
    Ok(format!("{} instances over Q and {} over F_5, mixed typing", done[0], done[1]))
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn hilbert_and_gk() -> Outcome {
    let f = Field::Rational;
    let xy = catalog::build_xy_algebra(f, 11).map_err(err)?;
    let fit = rational_fit(&as_coefficients(&xy.hilbert()), 3)
        .map_err(err)?
        .ok_or("no fit for the xy algebra")?;
    // 1 + 2t/(1−t) = (1 + t)/(1 − t)
    ensure(fit.numerator == ints(&[1, 1]) && fit.denominator == ints(&[1, -1]), || {
        format!("xy algebra fits {fit}")
    })?;
    ensure(gk_estimate(&fit).map_err(err)? == 1, || "GK of the xy algebra is not 1".into())?;
    let free = free_gperm(f, &[1, 1], 11).map_err(err)?;
    let fit2 = rational_fit(&as_coefficients(&free.hilbert()), 3)
        .map_err(err)?
        .ok_or("no fit for free GPerm")?;
    // 1 + 2t/(1−t)² = (1 + t²)/(1 − t)²
    ensure(fit2.numerator == ints(&[1, 0, 1]) && fit2.denominator == ints(&[1, -2, 1]), || {
        format!("free GPerm fits {fit2}")
    })?;
    ensure(gk_estimate(&fit2).map_err(err)? == 2, || "GK of free GPerm is not 2".into())?;
    Ok(format!("xy: {fit}, free GPerm: {fit2}; H_P = t·H_A checked within the round trips"))
}

fn torsion() -> Outcome {
    let f = Field::Rational;
    let p = g_sigma_triv(&catalog::build_xy_algebra(f, 7).map_err(err)?).map_err(err)?;
    ensure(p.max_arity() == 8, || "expected N = 8".into())?;
    let left = p.left_torsion(2).map_err(err)?;
    let mut decided = 0;
    for n in 1..=8 {
        if !left.is_decided(n) {
            continue;
        }
        decided += 1;
        let c = left.subset.component(n);
        if n == 1 {
            ensure(c.dim() == 0, || "identity is torsion".into())?;
        } else {
            // basis index 1 of degree n−1 is y x^{n−2}
            ensure(c.basis_vectors() == vec![p.basis_vector(n, 1)], || {
                format!("left torsion at arity {n} is {:?}", c.basis_vectors())
            })?;
        }
    }
    ensure(decided >= 7, || "too few decided arities".into())?;
    for side in [p.right_torsion(2).map_err(err)?, p.bullet_right_torsion(2).map_err(err)?] {
        for (n, d) in side.decided_dims() {
            ensure(d == 0, || format!("right-side torsion of dim {d} at arity {n}"))?;
        }
    }
    let mut rng = common::rng(77);
    for k in 0..10 {
        let a = common::random_pgperm(f, &mut rng, 4, 2);
        let q = common::random_operad_rebase(&g_a_triv(&a).map_err(err)?, &mut rng);
        for w in 2..=q.max_arity() {
            let r = q.right_torsion(w).map_err(err)?;
            let b = q.bullet_right_torsion(w).map_err(err)?;
            for n in 1..=q.max_arity() {
                if r.is_decided(n) && b.is_decided(n) {
                    ensure(b.subset.component(n).contains_subspace(r.subset.component(n)), || {
                        format!("random operad {k}, window {w}, arity {n}: right torsion not inside bullet-right")
                    })?;
                }
            }
        }
    }
    Ok("left torsion = span{y x^i} at arities 2..7, right and bullet-right zero, inclusion on 10 random operads".into())
}

fn centrality() -> Outcome {
    let f = Field::Rational;
    let ope = catalog::build_ope(f, 7).map_err(err)?;
    for m in 1..=7 {
        for b in 0..ope.dim(m) {
            let w = ope.centrality_witness(m, &ope.basis_vector(m, b)).map_err(err)?;
            ensure(w.is_none(), || format!("basis element {b} of arity {m} is not central"))?;
        }
    }
    let p = g_sigma_triv(&catalog::build_xy_algebra(f, 6).map_err(err)?).map_err(err)?;
    let center = p.center();
    for (n, d) in center.decided_dims() {
        ensure(n == 1 || d == 0, || format!("central elements of arity {n}: dim {d}"))?;
    }
    let mas = g_sigma_sign(&catalog::build_massey(f, 1, 1, 6).map_err(err)?).map_err(err)?;
    for (name, q) in [("Ope", &ope), ("Mas(1,1)", &mas)] {
        let fails = functors::signed_commutation_failures(q).map_err(err)?;
        ensure(fails.is_empty(), || format!("{name}: {}", fails[0]))?;
    }
    Ok("Ope central; no central element of arity 2..6 in G(xy); signed commutation on Ope and Mas(1,1)".into())
}

fn nonprime_witness() -> Outcome {
    let f = Field::Rational;
    let b = catalog::build_shift_algebra(f, 6).map_err(err)?;
    let mut gen = b.zero_ideal();
    gen.add_vector(1, b.basis_vector(1, 1)).map_err(err)?;
    let ideal = b.generated_ideal(&gen).map_err(err)?;
    for d in 1..=6 {
        ensure(ideal.component(d).basis_vectors() == vec![b.basis_vector(d, 1)], || {
            format!("ideal in degree {d} is {:?}", ideal.component(d).basis_vectors())
        })?;
    }
    ensure(!ideal.is_zero(), || "ideal is zero".into())?;
    let square = b.ideal_product(&ideal, &ideal).map_err(err)?;
    ensure(square.is_zero(), || format!("square has dims {:?}", square.dims()))?;
    Ok("ideal generated by x_{1,2} is span{x_{k,2}} and squares to zero".into())
}

fn checker_hierarchy() -> Outcome {
    let f = Field::Rational;
    let mut pgc_like: Vec<(String, GradedAlgebra)> = Vec::new();
    for (a, b) in [(1, 0), (0, 1), (1, 1), (2, 1), (3, 0)] {
        pgc_like.push((format!("Mas({a},{b})"), catalog::build_massey(f, a, b, 6).map_err(err)?));
    }
    let mut rng = common::rng(10);
    let mut commutative: Vec<(String, GradedAlgebra)> = vec![
        ("k[u]".into(), catalog::polynomial(f, 2, 6).map_err(err)?),
        ("Com algebra".into(), functors::forget_f(&catalog::build_com(f, 1).map_err(err)?).map_err(err)?),
    ];
    for k in 0..20 {
        let a = if k % 2 == 0 {
            common::random_graded_commutative(f, &mut rng, 5, 3)
        } else {
            common::random_even_commutative(f, &mut rng, 6, 3)
        };
        commutative.push((format!("random commutative {k}"), a));
    }
    for (name, a) in &commutative {
        ensure(a.check_graded_commutative().is_empty(), || format!("{name} is not graded commutative"))?;
        let typed = a.with_typing(a.uniform_typing(true)).map_err(err)?;
        let v = typed.check_pgc().map_err(err)?;
        ensure(v.is_empty(), || format!("{name} with odd typing fails PGC: {}", v[0]))?;
        pgc_like.push((format!("{name} (odd)"), typed));
    }
    for k in 0..5 {
        pgc_like.push((format!("random PGC {k}"), common::random_pgc(f, &mut rng, 5, 3)));
    }
    for (name, a) in &pgc_like {
        if a.check_pgc().map_err(err)?.is_empty() {
            let v = a.check_pgperm().map_err(err)?;
            ensure(v.is_empty(), || format!("{name} is PGC but not PGPerm: {}", v[0]))?;
        }
    }
    let mut even = vec![
        ("k[x]".to_string(), catalog::polynomial(f, 1, 6).map_err(err)?),
        ("xy".to_string(), catalog::build_xy_algebra(f, 6).map_err(err)?),
        ("free GPerm".to_string(), free_gperm(f, &[1, 2], 6).map_err(err)?),
    ];
    for k in 0..5 {
        even.push((format!("random GPerm {k}"), common::random_gperm(f, &mut rng, 5, 3)));
    }
    for (name, a) in &even {
        let typed = a.with_typing(a.uniform_typing(false)).map_err(err)?;
        if typed.check_pgperm().map_err(err)?.is_empty() {
            ensure(typed.without_typing().check_gperm().is_empty(), || {
                format!("{name}: even PGPerm but not GPerm")
            })?;
        } else {
            return Err(format!("{name}: GPerm with even typing fails PGPerm"));
        }
    }
    Ok(format!(
        "{} PGC candidates, {} commutative instances, {} even-type instances",
        pgc_like.len(),
        commutative.len(),
        even.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("sign lemma exhaustion", sign_lemma),
        ("axiom suite and mutations", axiom_suite),
        ("GPerm / Sigma-trivial round trip", gperm_round_trip),
        ("PGPerm / A-trivial round trip", a_trivial_round_trip),
        ("A-trivial construction on random PGPerm", composition_cases),
        ("Hilbert series and GK dimension", hilbert_and_gk),
        ("torsion", torsion),
        ("centrality and signed commutation", centrality),
        ("non-primeness witness", nonprime_witness),
        ("checker hierarchy", checker_hierarchy),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS {name} ({secs:.2}s): {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.2}s): {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
