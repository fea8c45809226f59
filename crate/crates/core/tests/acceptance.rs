//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits nonzero if any fails. Time limits are part of the criteria.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topcoh::algebra::{CoefficientRing, R0Element, ScalarRing};
use topcoh::charp::{charp_vanishing_search, verify_certificate, CharpOutcome};
use topcoh::cohomology::{
    component, gap_scan, top_component_iso_check, vanishes, verify_content_in_radical, verify_maximal_rank,
    weak_mc_instance, CokerReport, GapScanEntry, Verdict,
};
use topcoh::ideal::{content_ideal, is_unit_ideal, Decision};
use topcoh::linalg::{integer_matrix, rank_ff, smith_normal_form, Matrix, DEFAULT_MINOR_BUDGET};
use topcoh::presentation::build_multi;
use topcoh::Error;

use common::{corpus, random_generator, CorpusEntry, RING_KINDS};

const SEED: u64 = 20_261_015;
const CORPUS_SIZE: usize = 216;
const RADICAL_BUDGET: u64 = 2_000;

type Outcome = Result<String, String>;

struct Shared {
    corpus: Vec<CorpusEntry>,
    scans: Vec<Vec<GapScanEntry>>,
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut shared = Shared {
        corpus: corpus(CORPUS_SIZE, &mut rng),
        scans: Vec::new(),
    };
    let mut failures = 0;
    let mut run = |n: u32, name: &str, limit: Option<u64>, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let over = limit.filter(|&s| elapsed > Duration::from_secs(s));
        let (ok, detail) = match (result, over) {
            (Ok(d), None) => (true, d),
            (Ok(d), Some(s)) => (false, format!("{d}; exceeded the {s} s limit")),
            (Err(e), _) => (false, e),
        };
        let limit = limit.map_or(String::new(), |s| format!(" / {s} s"));
        println!(
            "{} [{n}] {name}: {detail} ({:.2} s{limit})",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !ok {
            failures += 1;
        }
    };
    run(
        1,
        "component vanishing matches the content criterion",
        Some(60),
        &mut || criterion_content_equivalence(&mut shared),
    );
    run(2, "single-generator matrices have maximal rank", Some(30), &mut || {
        criterion_maximal_rank(&mut rng)
    });
    run(
        3,
        "content lies in the radical of the minor ideal",
        Some(120),
        &mut || criterion_content_radical(&shared),
    );
    run(4, "top component is R_0/c(I)", None, &mut || criterion_top_iso(&shared));
    run(5, "gap scans are constant", None, &mut || criterion_gap_free(&shared));
    run(6, "weak monomial instances vanish", Some(120), &mut || {
        criterion_weak_mc(&mut rng)
    });
    run(7, "characteristic-p certificates", Some(10), &mut criterion_charp);
    run(8, "small matrices agree with exhaustive oracles", None, &mut || {
        criterion_oracles(&shared)
    });
    run(
        9,
        "CLI structured reports are byte-identical",
        None,
        &mut criterion_cli_golden,
    );
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn criterion_content_equivalence(shared: &mut Shared) -> Outcome {
    let mut degrees = 0;
    let mut vanishing_specs = 0;
    for e in &shared.corpus {
        let unit = is_unit_ideal(&content_ideal(&e.spec));
        if unit == Decision::Undecided {
            return Err(format!("{}: content unit test undecided", e.label));
        }
        let (_, hi) = e.spec.default_window();
        let scan = gap_scan(&e.spec, hi, DEFAULT_MINOR_BUDGET).map_err(|err| format!("{}: {err}", e.label))?;
        for entry in &scan {
            if entry.vanishes != unit {
                return Err(format!(
                    "{}: d = {} component says {} but content unit is {}",
                    e.label, entry.d, entry.vanishes, unit
                ));
            }
            degrees += 1;
        }
        if unit == Decision::Yes {
            vanishing_specs += 1;
        }
        shared.scans.push(scan);
    }
    let nonvanishing = shared.corpus.len() - vanishing_specs;
    if vanishing_specs == 0 || nonvanishing == 0 {
        return Err("corpus does not exercise both verdicts".into());
    }
    Ok(format!(
        "{} specs, {degrees} components, {vanishing_specs} vanishing, {nonvanishing} nonvanishing",
        shared.corpus.len()
    ))
}

fn criterion_maximal_rank(rng: &mut ChaCha8Rng) -> Outcome {
    let mut matrices = 0;
    for i in 0..120 {
        let kind = RING_KINDS[i % RING_KINDS.len()];
        let ring = kind.ring();
        let s = rng.gen_range(2..=3);
        let weights: Vec<u64> = (0..s).map(|_| rng.gen_range(1..=2)).collect();
        let proper = rng.gen_bool(0.5);
        let seed = rng.gen_range(0..6);
        let f = random_generator(rng, &ring, kind, &weights, proper, seed);
        let spec = topcoh::algebra::GradedRingSpec::new(
            ring,
            (1..=s).map(|j| format!("U{j}")).collect(),
            weights,
            vec![f.clone()],
        )
        .map_err(|e| e.to_string())?;
        let (lo, hi) = spec.default_window();
        for c in verify_maximal_rank(&f, &spec, lo..=hi).map_err(|e| e.to_string())? {
            if !c.passed() {
                return Err(format!(
                    "f = {} at d = {}: rank {} of {} rows",
                    spec.display_generator(&f),
                    c.d,
                    c.rank,
                    c.rows
                ));
            }
            matrices += 1;
        }
    }
    Ok(format!("120 generators, {matrices} matrices"))
}

fn criterion_content_radical(shared: &Shared) -> Outcome {
    let (mut checked, mut skipped) = (0, 0);
    for e in &shared.corpus {
        let (lo, hi) = e.spec.default_window();
        for d in lo..=hi {
            if !topcoh::invpoly::basis_nonempty(d, e.spec.weights()) {
                continue;
            }
            match verify_content_in_radical(&e.spec, d, RADICAL_BUDGET) {
                Ok(rep) => match rep.passed() {
                    Decision::Yes => checked += 1,
                    other => {
                        return Err(format!(
                            "{}: d = {d}, content ⊆ √I_d is {other} (I_d = {})",
                            e.label, rep.minors
                        ))
                    }
                },
                Err(Error::BudgetExceeded { .. }) => skipped += 1,
                Err(err) => return Err(format!("{}: d = {d}: {err}", e.label)),
            }
        }
    }
    if checked < 100 {
        return Err(format!("only {checked} components fit the budget"));
    }
    Ok(format!(
        "{checked} components checked, {skipped} over the minor budget {RADICAL_BUDGET}"
    ))
}

fn criterion_top_iso(shared: &Shared) -> Outcome {
    for e in &shared.corpus {
        match top_component_iso_check(&e.spec) {
            Ok(Decision::Yes) => {}
            Ok(other) => return Err(format!("{}: {other}", e.label)),
            Err(err) => return Err(format!("{}: {err}", e.label)),
        }
    }
    Ok(format!("{} specs", shared.corpus.len()))
}

fn criterion_gap_free(shared: &Shared) -> Outcome {
    if shared.scans.len() != shared.corpus.len() {
        return Err("scans missing: criterion 1 did not complete".into());
    }
    for (e, scan) in shared.corpus.iter().zip(&shared.scans) {
        if scan.iter().any(|x| x.vanishes == Decision::Undecided) {
            return Err(format!("{}: undecided component", e.label));
        }
        if scan.windows(2).any(|w| w[0].vanishes != w[1].vanishes) {
            return Err(format!("{}: verdict changes inside the window", e.label));
        }
    }
    let total: usize = shared.scans.iter().map(Vec::len).sum();
    Ok(format!("{} scans, {total} degrees", shared.scans.len()))
}

fn criterion_weak_mc(rng: &mut ChaCha8Rng) -> Outcome {
    let mut components = 0;
    for (s, t) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let inst = weak_mc_instance(s, t).map_err(|e| e.to_string())?;
        let rep = vanishes(&inst.spec);
        let expected: Vec<String> = std::iter::once("1".to_string())
            .chain((1..=s).map(|i| format!("A{i}")))
            .collect();
        let expected = format!("({})", expected.join(", "));
        if rep.content.to_string() != expected || rep.verdict != Verdict::Vanishes {
            return Err(format!(
                "(s, t) = ({s}, {t}): content {} verdict {}",
                rep.content, rep.verdict
            ));
        }
        let (lo, hi) = inst.spec.default_window();
        for d in lo..=hi {
            let c = component(&inst.spec, d, DEFAULT_MINOR_BUDGET).map_err(|e| e.to_string())?;
            if c.report != CokerReport::ZeroModule {
                return Err(format!("(s, t) = ({s}, {t}) over ZZ[A], d = {d}: {:?}", c.report));
            }
            components += 1;
        }
        for _ in 0..5 {
            let values: Vec<BigInt> = (0..s).map(|_| BigInt::from(rng.gen_range(-50i64..=50))).collect();
            let spec = inst.spec.specialize(&values).map_err(|e| e.to_string())?;
            let (lo, hi) = spec.default_window();
            for d in lo..=hi {
                let c = component(&spec, d, DEFAULT_MINOR_BUDGET).map_err(|e| e.to_string())?;
                if c.report != CokerReport::ZeroModule {
                    return Err(format!("(s, t) = ({s}, {t}), A = {values:?}, d = {d}: {:?}", c.report));
                }
                components += 1;
            }
        }
    }
    Ok(format!(
        "4 symbolic instances, 20 specializations, {components} components"
    ))
}

fn criterion_charp() -> Outcome {
    let f2 = CoefficientRing::polynomial(ScalarRing::PrimeField(2), vec!["x".into(), "y".into()]).unwrap();
    let (x, y) = (f2.var(0), f2.var(1));
    let err = |e: Error| e.to_string();
    match charp_vanishing_search(&[x.clone(), x.clone()], &f2, 5, 5, true).map_err(err)? {
        CharpOutcome::Found(c) if (c.alpha, c.beta) == (1, 1) => {}
        other => return Err(format!("(x, x): {other:?}")),
    }
    match charp_vanishing_search(&[x.clone(), y.clone()], &f2, 5, 5, false).map_err(err)? {
        CharpOutcome::NotFound {
            alpha_max: 5,
            beta_max: 5,
        } => {}
        other => return Err(format!("(x, y): {other:?}")),
    }
    // Every certificate found on a mixed batch must re-verify by expansion.
    let f3 = CoefficientRing::polynomial(ScalarRing::PrimeField(3), vec!["x".into(), "y".into()]).unwrap();
    let (u, v) = (f3.var(0), f3.var(1));
    let batch: Vec<(CoefficientRing, Vec<R0Element>)> = vec![
        (f2.clone(), vec![x.clone(), x.clone()]),
        (f2.clone(), vec![x.clone(), x.mul(&y)]),
        (f2.clone(), vec![x.mul(&y), y.clone(), x.clone()]),
        (f2.clone(), vec![x.add(&y), x.add(&y).mul(&x)]),
        (f3.clone(), vec![u.clone(), u.add(&u.mul(&u))]),
        (f3.clone(), vec![u.mul(&v), v.clone()]),
        (f3.clone(), vec![u.add(&v), u.sub(&v)]),
    ];
    let mut found = 0;
    for (ring, fs) in &batch {
        if let CharpOutcome::Found(c) = charp_vanishing_search(fs, ring, 4, 4, true).map_err(err)? {
            if !verify_certificate(fs, ring, &c).map_err(err)? {
                return Err(format!("certificate {:?} does not expand correctly", (c.alpha, c.beta)));
            }
            found += 1;
        }
    }
    Ok(format!(
        "(x, x) → (1, 1), (x, y) not found to (5, 5), {found} further certificates re-verified"
    ))
}

// Exhaustive oracles: cofactor-expansion determinants over all minors.

fn oracle_det(m: &Matrix<R0Element>, one: &R0Element) -> R0Element {
    let n = m.rows();
    if n == 0 {
        return one.clone();
    }
    let mut acc = one.sub(one);
    for j in 0..n {
        let a = m.get(0, j);
        if a.is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = a.mul(&oracle_det(&m.submatrix(&rows, &cols), one));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut with_last: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with_last {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with_last);
    out
}

fn all_minors(m: &Matrix<R0Element>, k: usize, one: &R0Element) -> Vec<R0Element> {
    let mut out = Vec::new();
    for r in subsets(m.rows(), k) {
        for c in subsets(m.cols(), k) {
            out.push(oracle_det(&m.submatrix(&r, &c), one));
        }
    }
    out
}

fn oracle_rank(m: &Matrix<R0Element>, one: &R0Element) -> usize {
    (1..=m.rows().min(m.cols()))
        .rev()
        .find(|&k| all_minors(m, k, one).iter().any(|d| !d.is_zero()))
        .unwrap_or(0)
}

fn small_matrices(shared: &Shared) -> Vec<(String, CoefficientRing, Matrix<R0Element>)> {
    let mut out = Vec::new();
    for e in &shared.corpus {
        let (lo, hi) = e.spec.default_window();
        for d in lo..=hi {
            if !topcoh::invpoly::basis_nonempty(d, e.spec.weights()) {
                continue;
            }
            let m = build_multi(&e.spec, d);
            let m = m.entries();
            let rows: Vec<usize> = (0..m.rows().min(5)).collect();
            let cols: Vec<usize> = (0..m.cols().min(5)).collect();
            let label = if m.rows() <= 5 && m.cols() <= 5 {
                "whole"
            } else {
                "leading block"
            };
            out.push((
                format!("{} d = {d} ({label})", e.label),
                e.spec.coeff().clone(),
                m.submatrix(&rows, &cols),
            ));
        }
    }
    out
}

fn criterion_oracles(shared: &Shared) -> Outcome {
    let mut snf_checked = 0;
    let matrices = small_matrices(shared);
    for (label, ring, m) in &matrices {
        let one = ring.one();
        let rank = rank_ff(m);
        let oracle = oracle_rank(m, &one);
        if rank != oracle {
            return Err(format!("{label}: rank_ff {rank}, exhaustive minors {oracle}"));
        }
        if ring.base() == ScalarRing::Integers && !ring.is_polynomial() {
            let snf = smith_normal_form(m, false).map_err(|e| e.to_string())?;
            integer_matrix(m).map_err(|e| e.to_string())?;
            let mut product = BigInt::from(1);
            for k in 1..=m.rows().min(m.cols()) {
                product *= snf.invariant_factors.get(k - 1).cloned().unwrap_or_else(BigInt::zero);
                let gcd = all_minors(m, k, &one)
                    .iter()
                    .map(|d| {
                        d.constant_value()
                            .and_then(|c| c.as_bigint().cloned())
                            .unwrap_or_default()
                    })
                    .fold(BigInt::zero(), |g, v| g.gcd(&v));
                if product.abs() != gcd {
                    return Err(format!(
                        "{label}: product of {k} invariant factors {product}, gcd of minors {gcd}"
                    ));
                }
            }
            snf_checked += 1;
        }
    }
    Ok(format!(
        "{} matrices up to 5×5, {snf_checked} integer SNF checks",
        matrices.len()
    ))
}

fn criterion_cli_golden() -> Outcome {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests");
    let data = |f: &str| root.join("data").join(f).to_string_lossy().into_owned();
    let cases = [
        (
            vec![
                "--machine".to_string(),
                "component".into(),
                data("example1.lct"),
                "--degree".into(),
                "2".into(),
            ],
            "example1_component_d2.txt",
        ),
        (
            vec![
                "--machine".to_string(),
                "component".into(),
                data("example2.lct"),
                "--degree".into(),
                "2".into(),
            ],
            "example2_component_d2.txt",
        ),
        (
            vec![
                "--machine".to_string(),
                "weak-mc".into(),
                "--s".into(),
                "2".into(),
                "--t".into(),
                "1".into(),
            ],
            "weak_mc_s2_t1.txt",
        ),
    ];
    for (args, golden) in &cases {
        let expected = std::fs::read_to_string(root.join("golden").join(golden)).map_err(|e| e.to_string())?;
        for _ in 0..2 {
            let out = Command::new(env!("CARGO_BIN_EXE_topcoh"))
                .args(args)
                .output()
                .map_err(|e| e.to_string())?;
            if !out.status.success() {
                return Err(format!("{golden}: exit status {}", out.status));
            }
            if out.stdout != expected.as_bytes() {
                return Err(format!("{golden}: report differs from the golden file"));
            }
        }
    }
    Ok("3 reports, 2 runs each".into())
}
