//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout. The
//! process fails if any criterion outside `KNOWN_FAILURES` fails, or if a
//! known failure starts passing (so the list cannot go stale).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subexc_cli::report::{path_spots, scan_matches};
use subexc_core::bott::{bott_trace, BottResult, Parabolic};
use subexc_core::charseries::{hilbert, BoxSpec};
use subexc_core::geometry::{
    ih_orbit, local_cohomology_table, lyubeznik, printed_poincare, poincare_gp, poincare_report, IntPolynomial,
};
use subexc_core::liealg::{DynkinDiagram, Weight};
use subexc_core::quiver::{
    build_quiver, charc_report, fourier_permutation, is_arrow_preserving_involution, TENSION_NAMING, TENSION_SQRT_F,
};
use subexc_core::rational::Rational;
use subexc_core::subexc::{
    case_data, l2_weight, ni_multiplicity, recursion_check, regularity, regularity_from, simple_character,
    trivial_scan, verify_identities, ModuleName, NiOracle, CASES,
};

/// Criteria that cannot hold; see the README for the reason.
const KNOWN_FAILURES: &[u32] = &[1];

type Outcome = Result<(), String>;
type Check = fn() -> Outcome;
type Row = fn(i64, i64, i64) -> [i64; 3];

fn w(v: &[i64]) -> Weight {
    Weight::from(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn bott_conformance() -> Outcome {
    let start = Instant::now();
    let c3 = Parabolic::new(DynkinDiagram::c(3), 3).unwrap().bundle_cohomology(&w(&[3, 0, -3])).unwrap();
    ensure(c3 == BottResult::Cohomology { length: 3, weight: w(&[0, 0, 0]) }, || format!("C3 gave {c3:?}"))?;

    let d6 = bott_trace(&DynkinDiagram::d(6), &w(&[-9, 0, 0, 0, 0, 0])).unwrap();
    ensure(d6.result.is_singular(), || "D6 weight not singular".into())?;
    let chain: Vec<Vec<i64>> = d6.steps.iter().map(|s| s.shifted.coords().to_vec()).collect();
    let reference: Vec<Vec<i64>> =
        subexc_cli::report::D6_REFERENCE_CHAIN.iter().map(|r| r.to_vec()).collect();
    ensure(chain.starts_with(&reference), || format!("D6 chain {chain:?}"))?;

    let e7 = Parabolic::new(DynkinDiagram::e7(), 6).unwrap();
    let mut bad = Vec::new();
    for a in 10..=14 {
        let got = e7.bundle_cohomology(&w(&[0, 0, 0, 0, 0, -a, 0])).unwrap();
        let want = BottResult::Cohomology { length: 14, weight: w(&[0, 0, 0, 0, 0, a - 10, a - 10]) };
        if got != want {
            bad.push(format!("a={a}: {got:?}"));
        }
    }
    within(start, Duration::from_secs(1))?;
    ensure(bad.is_empty(), || {
        format!("E7 rows do not give H^14 ({}); -a*w6 on E7/P6 is acyclic below a = 18", bad.join("; "))
    })
}

fn reflection_conformance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rows: [(DynkinDiagram, Row); 3] = [
        (DynkinDiagram::a(3), |a, b, c| [a + b, -b, b + c]),
        (DynkinDiagram::c(3), |a, b, c| [a + b, -b, b + c]),
        (DynkinDiagram::b(3), |a, b, c| [a + b, -b, 2 * b + c]),
    ];
    for _ in 0..20 {
        let (a, b, c) = (rng.gen_range(-50..=50), rng.gen_range(-50..=50), rng.gen_range(-50..=50));
        for (d, expected) in &rows {
            let got = d.simple_reflection(2, &w(&[a, b, c])).unwrap();
            ensure(got.coords() == expected(a, b, c), || format!("{} at ({a},{b},{c}) gave {got}", d.name()))?;
        }
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn hilbert_identity() -> Outcome {
    let start = Instant::now();
    for &m in &CASES {
        let case = case_data(m).unwrap();
        let s = simple_character(&case, ModuleName::S).unwrap();
        let n = 6 * m as u64 + 8;
        for d in 0..=8u64 {
            let got = hilbert(&s, d as i64, None).unwrap();
            let want = binomial(n + d - 1, d);
            ensure(got.to_string() == want.to_string(), || format!("m={m} d={d}: {got} vs {want}"))?;
        }
    }
    within(start, Duration::from_secs(60))
}

fn character_identities() -> Outcome {
    for &m in &CASES {
        let case = case_data(m).unwrap();
        let reports = verify_identities(&case, BoxSpec::default_for(m)).unwrap();
        if let Some(r) = reports.iter().find(|r| !r.passed()) {
            return Err(format!("m={m}: {} failed", r.identity));
        }
    }
    Ok(())
}

fn l2_theorem() -> Outcome {
    let case = case_data(1).unwrap();
    for p in 0..=4 {
        for q in 0..=4 {
            for r in 0..=4 {
                let rep = recursion_check(&case, p, q, r, -25, 5).unwrap();
                ensure(rep.passed(), || format!("(p,q,r)=({p},{q},{r}): {:?}", rep.mismatches.first()))?;
            }
        }
    }
    Ok(())
}

fn degree_window() -> Outcome {
    let case = case_data(1).unwrap();
    let mut oracle = NiOracle::new(&case, 70);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..200 {
        let (p, q, r) = (rng.gen_range(0..=4), rng.gen_range(0..=4), rng.gen_range(0..=4));
        let d = rng.gen_range(-25..=5);
        let i: u32 = rng.gen_range(2..=4);
        let formula = ni_multiplicity(p, q, r, d, i).unwrap();
        let bott = oracle.count(&l2_weight(p, q, r), d, i as usize).unwrap();
        ensure(formula == bott, || format!("({p},{q},{r}) d={d} i={i}: {formula} vs {bott}"))?;
    }
    Ok(())
}

fn scans() -> Outcome {
    for &m in &CASES {
        let s = trivial_scan(&case_data(m).unwrap(), None, None).unwrap();
        ensure(scan_matches(m, &s), || format!("m={m}: scan {:?}", s.bundles))?;
    }
    Ok(())
}

fn poincare_ih() -> Outcome {
    for m in [1, 8] {
        ensure(poincare_gp(m).unwrap() == printed_poincare(m).unwrap(), || format!("m={m} differs from closed form"))?;
    }
    ensure(poincare_gp(2).unwrap() == IntPolynomial::gaussian_binomial(6, 3, 2), || "Gr(3,6) mismatch".into())?;
    let r4 = poincare_report(4).unwrap();
    ensure(
        r4.middle_exponent == Some(10) && r4.printed_exponent == Some(14) && r4.erratum.is_some(),
        || format!("m=4 erratum not raised: {r4:?}"),
    )?;
    for &m in &CASES {
        for p in 1..=3 {
            let r = ih_orbit(m, p).unwrap();
            ensure(r.consistent, || format!("IH m={m} p={p}: {r:?}"))?;
        }
    }
    Ok(())
}

fn tables() -> Outcome {
    for &m in &CASES {
        let expected = [(1, m as i64 + 2), (2, if m == 1 { 3 } else { m as i64 + 3 })];
        for (p, want) in expected {
            let got = regularity(m, p).unwrap().value;
            ensure(got == want, || format!("reg(I_{p}) for m={m}: {got} vs {want}"))?;
        }
        for p in 1..=3 {
            let l = lyubeznik(m, p).unwrap();
            ensure(l.passed(), || format!("lyubeznik m={m} p={p}: {l:?}"))?;
        }
        for p in 0..=3 {
            let t = local_cohomology_table(m, p, None).unwrap();
            ensure(t.passed(), || format!("local cohomology m={m} p={p} failed"))?;
        }
    }
    let spin9 = [
        regularity_from(Rational::integer(-1), 2, 1).unwrap(),
        regularity_from(Rational::integer(-8), 2, 16).unwrap(),
    ];
    ensure(spin9 == [1, 0], || format!("Spin(9) gave {spin9:?}"))
}

fn quiver() -> Outcome {
    let mut tensions = BTreeSet::new();
    for &m in &CASES {
        let q = build_quiver(m).unwrap();
        let want = if m == 1 { (9, 8) } else { (8, 8) };
        ensure((q.vertices.len(), q.arrows.len()) == want, || format!("m={m}: counts"))?;
        let f = fourier_permutation(m).unwrap();
        ensure(is_arrow_preserving_involution(&q, &f), || format!("m={m}: Fourier not an automorphism"))?;
        for (x, y, n) in path_spots(m) {
            let got = q.path_count(x, y).unwrap();
            ensure(got == n, || format!("m={m}: paths {x}->{y} = {got}, expected {n}"))?;
        }
        let c = charc_report(m).unwrap();
        ensure(c.mismatches().all(|x| x.tension.is_some()), || format!("m={m}: unexplained charC mismatch"))?;
        tensions.extend(c.tensions.iter().copied());
    }
    let documented: BTreeSet<&str> = [TENSION_NAMING, TENSION_SQRT_F].into();
    ensure(tensions == documented, || format!("tensions {tensions:?}"))
}

fn determinism() -> Outcome {
    let start = Instant::now();
    for &m in &CASES {
        let args = ["subexc", "report", "--case", &m.to_string(), "--seed", "11"].map(String::from);
        let (c1, a) = subexc_cli::run(args.clone());
        let (c2, b) = subexc_cli::run(args);
        ensure(c1 == 0 && c2 == 0, || format!("m={m}: report exit codes {c1}, {c2}"))?;
        ensure(a == b, || format!("m={m}: outputs differ"))?;
    }
    within(start, Duration::from_secs(20 * 60))
}

fn main() {
    let criteria: [(&str, Check); 11] = [
        ("Bott conformance", bott_conformance),
        ("reflection conformance", reflection_conformance),
        ("Hilbert identity", hilbert_identity),
        ("character identities", character_identities),
        ("[L2] recursion and closed form", l2_theorem),
        ("degree-window formula", degree_window),
        ("trivial scans", scans),
        ("Poincare and IH", poincare_ih),
        ("regularity, Lyubeznik, local cohomology", tables),
        ("quiver", quiver),
        ("determinism", determinism),
    ];
    let mut unexpected = Vec::new();
    for (n, (name, check)) in (1u32..).zip(criteria) {
        let outcome = check();
        let known = KNOWN_FAILURES.contains(&n);
        match &outcome {
            Ok(()) => println!("PASS  {n:>2}  {name}"),
            Err(e) => println!("FAIL  {n:>2}  {name}: {e}{}", if known { " (known)" } else { "" }),
        }
        if outcome.is_ok() == known {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
