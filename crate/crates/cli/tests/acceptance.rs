//! Acceptance suite: one printed PASS/FAIL line per criterion.

#[path = "../../core/tests/support/ffpoints.rs"]
mod ffpoints;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use grlab_core::analysis::{analyze, load_presentation};
use grlab_core::groebner::{buchberger, ideal_power, normal_form};
use grlab_core::invariants::{
    char_poly, hilbert_numerator, krull_dim, monomial_krull_dim, HilbertSeries, MonomialIdeal,
};
use grlab_core::monomial_oracle::{sr_isolated, FacetComplex};
use grlab_core::polyparse::{parse_polynomial, parse_ring_file, RingDefinitionDocument};
use grlab_core::regularity::{
    is_regular_dimension_count, is_regular_sequence, minimal_generators_of_m, pdim_residue_field_capped,
    regular_sequence_extract, regularity_report, ProjectiveDimension,
};
use grlab_core::singularity::{is_graded_isolated_singularity, QgrGldim};
use grlab_core::{Budget, FieldSpec, GradedRingPresentation, Monomial, PolyRing, Polynomial, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn report(id: u32, title: &str, failures: &[String]) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} ({title}): {verdict}");
    for f in failures {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {failures:#?}");
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn corpus() -> Vec<(String, RingDefinitionDocument)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.to_string_lossy().ends_with(".ring.json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().trim_end_matches(".ring.json").to_string();
            (name, parse_ring_file(&std::fs::read_to_string(&p).unwrap()).unwrap())
        })
        .collect()
}

fn presentation(doc: &RingDefinitionDocument) -> GradedRingPresentation {
    load_presentation(doc, None, None).unwrap()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn polynomial_ring(d: usize) -> GradedRingPresentation {
    let names: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    GradedRingPresentation::new(PolyRing::standard(FieldSpec::Rational, &refs), vec![]).unwrap()
}

#[test]
fn criterion_1_polynomial_ring_baseline() {
    let budget = Budget::default();
    let mut failures = Vec::new();
    for d in 1..=4usize {
        let start = Instant::now();
        let a = polynomial_ring(d);
        let ring = a.ring();
        let r = regularity_report(&a, &budget).unwrap();
        let mut check = |ok: bool, what: String| {
            if !ok {
                failures.push(format!("k[x1..x{d}]: {what}"));
            }
        };
        check(r.regular(), "not regular".into());
        check(r.grkdim == d, format!("grKdim {}", r.grkdim));
        let seq: Option<Vec<String>> = r.regular_sequence.as_ref().map(|s| s.iter().map(|f| ring.display(f)).collect());
        check(seq == Some(ring.names().to_vec()), format!("regular sequence {seq:?}"));
        check(r.pdim_k == ProjectiveDimension::Finite(d), format!("pdim k {:?}", r.pdim_k));
        let ranks: Vec<u64> = r.betti.iter().map(|s| s.rank as u64).collect();
        let koszul: Vec<u64> = (0..=d as u64).map(|i| binomial(d as u64, i)).collect();
        check(ranks == koszul, format!("betti {ranks:?}"));

        let m: Vec<Polynomial> = (0..d).map(|j| ring.var(j)).collect();
        let chi = char_poly(&a, &m, &budget).unwrap();
        check(chi.degree() == d, format!("char poly degree {}", chi.degree()));
        check(
            chi.leading_coefficient() == Rational::normalize(1, factorial(d as u64) as i64).unwrap(),
            format!("leading coefficient {}", chi.leading_coefficient()),
        );
        for n in chi.threshold() as u64..=15 {
            let monomials = binomial(n + d as u64 - 1, d as u64);
            check(chi.eval(n as i64) == Rational::from_integer(monomials), format!("χ({n}) ≠ {monomials}"));
        }
        check(start.elapsed() < Duration::from_secs(1), format!("took {:?}", start.elapsed()));
    }
    report(1, "polynomial-ring baseline", &failures);
}

#[test]
fn criterion_2_regularity_criteria_agree_on_corpus() {
    let mut failures = Vec::new();
    let cases = corpus();
    if cases.len() != 15 {
        failures.push(format!("expected 15 corpus rings, found {}", cases.len()));
    }
    for (name, doc) in &cases {
        let budget = Budget::default();
        let start = Instant::now();
        let a = presentation(doc);
        // each criterion computed on its own, then compared
        let by_count = is_regular_dimension_count(&a, &budget).unwrap();
        let by_resolution = pdim_residue_field_capped(&a, &budget).unwrap() != ProjectiveDimension::Infinite;
        let by_sequence = is_regular_sequence(&a, &minimal_generators_of_m(&a), &budget).unwrap();
        if !(by_count == by_resolution && by_resolution == by_sequence) {
            failures.push(format!(
                "{name}: dimension count {by_count}, resolution {by_resolution}, regular sequence {by_sequence}"
            ));
        }
        match regularity_report(&a, &budget) {
            Ok(r) => {
                if r.regular() && r.pdim_k != ProjectiveDimension::Finite(r.grkdim) {
                    failures.push(format!("{name}: regular with pdim {:?} ≠ grKdim {}", r.pdim_k, r.grkdim));
                }
                if r.regular() != regular_sequence_extract(&a, &budget).unwrap().is_some() {
                    failures.push(format!("{name}: extraction disagrees with the verdict"));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        if start.elapsed() >= Duration::from_secs(5) {
            failures.push(format!("{name}: took {:?}", start.elapsed()));
        }
    }
    report(2, "three regularity criteria agree", &failures);
}

#[test]
fn criterion_3_char_poly_degree_is_dimension() {
    let mut failures = Vec::new();
    for (name, doc) in corpus() {
        let budget = Budget::default();
        let start = Instant::now();
        let a = presentation(&doc);
        let ring = a.ring();
        let d = krull_dim(&a, &budget).unwrap();
        let vars: Vec<Polynomial> = (0..ring.nvars()).map(|j| ring.var(j)).collect();
        let mut mixed = vars.clone();
        mixed[0] = ring.pow(&vars[0], 2);
        let ideals = [("m", vars.clone()), ("m^2", ideal_power(ring, &vars, 2)), ("mixed", mixed)];
        for (label, q) in ideals {
            match char_poly(&a, &q, &budget) {
                Ok(chi) => {
                    if chi.degree() != d {
                        failures.push(format!("{name}, Q = {label}: degree {} ≠ grKdim {d}", chi.degree()));
                    }
                    if chi.degree() > q.len() {
                        failures.push(format!("{name}, Q = {label}: degree {} > {} generators", chi.degree(), q.len()));
                    }
                    for n in chi.threshold() as i64..chi.threshold() as i64 + 10 {
                        if !chi.eval(n).is_integer() {
                            failures.push(format!("{name}, Q = {label}: χ({n}) not an integer"));
                        }
                    }
                }
                Err(e) => failures.push(format!("{name}, Q = {label}: {e}")),
            }
        }
        if start.elapsed() >= Duration::from_secs(10) {
            failures.push(format!("{name}: took {:?}", start.elapsed()));
        }
    }
    report(3, "char poly degree equals grKdim", &failures);
}

#[test]
fn criterion_4_isolated_singularity_verdicts() {
    let mut failures = Vec::new();
    let cases: [(&str, &[u32], &str, bool, QgrGldim); 3] = [
        ("A1 cone", &[1, 1, 1], "x*y - z^2", true, QgrGldim::Value(1)),
        ("E8", &[15, 10, 6], "x^2 + y^3 + z^5", true, QgrGldim::Value(1)),
        ("xy", &[1, 1, 1], "x*y", false, QgrGldim::Unknown),
    ];
    for (label, weights, src, isolated, qgr) in cases {
        let budget = Budget::default();
        let start = Instant::now();
        let doc = RingDefinitionDocument {
            field: FieldSpec::Rational,
            variables: ["x", "y", "z"]
                .iter()
                .zip(weights)
                .map(|(n, &w)| grlab_core::polyparse::VariableDecl { name: n.to_string(), degree: w })
                .collect(),
            ideal: vec![src.into()],
            options: Default::default(),
        };
        let a = presentation(&doc);
        let r = is_graded_isolated_singularity(&a, &budget).unwrap();
        if r.isolated != isolated || r.qgr_gldim != qgr {
            failures.push(format!("{label}: isolated {} qgr {:?}", r.isolated, r.qgr_gldim));
        }
        let by_points = ffpoints::hypersurface_isolated_by_points(a.ring(), &a.generators()[0], &[7, 11, 13], 3);
        if by_points != isolated {
            failures.push(format!("{label}: point enumeration says isolated = {by_points}"));
        }
        if start.elapsed() >= Duration::from_secs(5) {
            failures.push(format!("{label}: took {:?}", start.elapsed()));
        }
    }
    report(4, "isolated-singularity verdicts", &failures);
}

/// Antichains of at most 4 nonempty squarefree monomials on n variables.
fn squarefree_ideals(n: usize) -> Vec<Vec<u32>> {
    let masks: Vec<u32> = (1..1u32 << n).collect();
    let mut out = Vec::new();
    fn rec(masks: &[u32], start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if cur.len() == 4 {
            return;
        }
        for i in start..masks.len() {
            let m = masks[i];
            if cur.iter().all(|&c| c & m != c && c & m != m) {
                cur.push(m);
                rec(masks, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&masks, 0, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_5_stanley_reisner_oracle_agreement() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut pure = 0;
    for n in 1..=5usize {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ring = PolyRing::standard(FieldSpec::Rational, &refs);
        for gens in squarefree_ideals(n) {
            let budget = Budget::default();
            let monos: Vec<Monomial> = gens
                .iter()
                .map(|&m| Monomial::from_exponents(&(0..n).map(|i| m >> i & 1).collect::<Vec<u32>>()))
                .collect();
            let ideal = MonomialIdeal::new(n, monos.clone());
            let complex = FacetComplex::from_squarefree(&ideal).unwrap();
            if !complex.is_pure() {
                continue;
            }
            pure += 1;
            let polys = monos.into_iter().map(|m| ring.monomial(ring.field().one(), m)).collect();
            let a = GradedRingPresentation::new(ring.clone(), polys).unwrap();
            let jacobian = is_graded_isolated_singularity(&a, &budget).unwrap().isolated;
            let combinatorial = sr_isolated(&complex).unwrap();
            if jacobian != combinatorial {
                failures.push(format!("n = {n}, generators {gens:?}: Jacobian {jacobian}, facets {combinatorial}"));
            }
        }
    }
    println!("    {pure} pure squarefree ideals checked in {:?}", start.elapsed());
    if pure != 1334 {
        failures.push(format!("expected 1334 pure squarefree ideals, enumerated {pure}"));
    }
    if start.elapsed() >= Duration::from_secs(600) {
        failures.push(format!("took {:?}", start.elapsed()));
    }
    report(5, "Stanley-Reisner oracle agreement", &failures);
}

fn standard_monomial_counts(n: usize, gens: &[Vec<u32>], up_to: usize) -> Vec<i128> {
    let mut counts = vec![0i128; up_to + 1];
    fn rec(i: usize, deg: usize, exps: &mut Vec<u32>, gens: &[Vec<u32>], up: usize, out: &mut [i128]) {
        if i == exps.len() {
            if !gens.iter().any(|g| g.iter().zip(exps.iter()).all(|(a, b)| a <= b)) {
                out[deg] += 1;
            }
            return;
        }
        for e in 0..=(up - deg) {
            exps[i] = e as u32;
            rec(i + 1, deg + e, exps, gens, up, out);
        }
        exps[i] = 0;
    }
    rec(0, 0, &mut vec![0; n], gens, up_to, &mut counts);
    counts
}

#[test]
fn criterion_6_hilbert_series_cross_checks() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut failures = Vec::new();
    for case in 0..200 {
        let n = rng.gen_range(1..=6usize);
        let count = rng.gen_range(0..=8usize);
        let gens: Vec<Vec<u32>> = (0..count)
            .map(|_| {
                let degree = rng.gen_range(1..=6u32);
                let mut e = vec![0u32; n];
                for _ in 0..degree {
                    e[rng.gen_range(0..n)] += 1;
                }
                e
            })
            .collect();
        let ideal = MonomialIdeal::new(n, gens.iter().map(|e| Monomial::from_exponents(e)).collect());
        let hs = HilbertSeries::new(hilbert_numerator(&ideal, &vec![1; n]), vec![1; n]);
        if hs.coefficients(12) != standard_monomial_counts(n, &gens, 12) {
            failures.push(format!("case {case}: coefficients differ for {gens:?}"));
        }
        if Some(hs.pole_order()) != monomial_krull_dim(&ideal) {
            failures.push(format!("case {case}: pole order {} for {gens:?}", hs.pole_order()));
        }
    }
    if start.elapsed() >= Duration::from_secs(60) {
        failures.push(format!("took {:?}", start.elapsed()));
    }
    report(6, "Hilbert series cross-checks", &failures);
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn criterion_7_determinism() {
    let mut failures = Vec::new();
    for (name, doc) in corpus() {
        let budget = Budget::default();
        let a = presentation(&doc);
        let reference_gb = buchberger(a.ring(), a.generators(), &budget).unwrap().display(a.ring());
        let reference = analyze(&a, true, &budget).unwrap().to_json();
        for perm in permutations(doc.ideal.len()) {
            let mut permuted = doc.clone();
            permuted.ideal = perm.iter().map(|&i| doc.ideal[i].clone()).collect();
            let b = presentation(&permuted);
            if buchberger(b.ring(), b.generators(), &budget).unwrap().display(b.ring()) != reference_gb {
                failures.push(format!("{name}: Gröbner basis changes under {perm:?}"));
            }
            if analyze(&b, true, &budget).unwrap().to_json() != reference {
                failures.push(format!("{name}: report changes under {perm:?}"));
            }
        }
        let file = corpus_dir().join(format!("{name}.ring.json"));
        let run = || Command::new(env!("CARGO_BIN_EXE_grlab")).args(["analyze", "--json"]).arg(&file).output().unwrap();
        let (first, second) = (run(), run());
        if !first.status.success() || first.stdout != second.stdout {
            failures.push(format!("{name}: repeated CLI runs differ"));
        }
    }
    report(7, "determinism", &failures);
}

#[test]
fn criterion_8_zero_divisors_rule_out_regularity() {
    let witnesses = [
        ("04_cross_xy", "x", "y"),
        ("06_dual_numbers", "x", "x"),
        ("09_skew_lines", "x", "z"),
        ("10_three_points", "x", "y"),
        ("15_xy_zw", "x", "y"),
    ];
    let mut failures = Vec::new();
    let cases = corpus();
    for (name, u, v) in witnesses {
        let budget = Budget::default();
        let Some((_, doc)) = cases.iter().find(|(n, _)| n == name) else {
            failures.push(format!("{name}: not in corpus"));
            continue;
        };
        let a = presentation(doc);
        let ring = a.ring();
        let gb = buchberger(ring, a.generators(), &budget).unwrap();
        let (u, v) = (parse_polynomial(u, ring).unwrap(), parse_polynomial(v, ring).unwrap());
        let nonzero = |f: &Polynomial| !normal_form(ring, f, &gb).is_zero();
        if !(nonzero(&u) && nonzero(&v) && !nonzero(&ring.mul(&u, &v))) {
            failures.push(format!("{name}: witness pair is not a zero-divisor pair"));
            continue;
        }
        if analyze(&a, true, &budget).unwrap().regular {
            failures.push(format!("{name}: reported regular despite a zero divisor"));
        }
    }
    report(8, "zero divisors rule out regularity", &failures);
}
