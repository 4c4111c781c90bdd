//! The acceptance criteria, one line each. Expected values are written out
//! here rather than read from the golden file, so this suite and `verify`
//! are independent routes to the same numbers.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use kronecker_qh::cells::{CellData, ChevalleyMode};
use kronecker_qh::chow::{block, ChowClass, ChowRing, GRADED_RANKS, RANK};
use kronecker_qh::expr::parse_poly;
use kronecker_qh::linalg::Matrix;
use kronecker_qh::poly::{Monomial, MultiPoly};
use kronecker_qh::quantum::{QClass, QuantumRing};
use kronecker_qh::rational::{frac, int, Rational};
use kronecker_qh::roots::{complex_roots, reconstruct, ComplexRoot, RootConfig};
use kronecker_qh::spectra::{match_roots, sample_q_values, FiniteAlgebra};
use kronecker_qh::unipoly::UniPoly;
use kronecker_qh_cli::golden::{Golden, GOLDEN_JSON};
use kronecker_qh_cli::run;
use kronecker_qh_cli::verify::{run_checks, Context};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn ring() -> &'static QuantumRing {
    static RING: OnceLock<QuantumRing> = OnceLock::new();
    RING.get_or_init(|| QuantumRing::new().unwrap())
}

fn chow() -> &'static ChowRing {
    ring().chow()
}

fn class(s: &str) -> ChowClass {
    chow().class_of_poly(&parse_poly(s).unwrap())
}

fn lit(s: &str) -> QClass {
    ring().literal_class(&parse_poly(s).unwrap())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn intersection_numbers() -> Outcome {
    let cases = [
        ("c1^6", 57),
        ("c1^4 c2", 27),
        ("c1^4 d2", 18),
        ("c1^3 c3", 5),
        ("c1^2 c2^2", 14),
        ("c1^2 d2^2", 6),
        ("c1^2 c2 d2", 9),
        ("c1 c3 d2", 2),
        ("c1 c2 c3", 3),
        ("c2^3", 9),
        ("c2^2 d2", 5),
        ("c2 d2^2", 3),
        ("d2^3", 2),
    ];
    for (m, v) in cases {
        let got = chow().pairing(&class(m), &ChowClass::unit());
        ensure(got == int(v), || format!("{m} = {got}, expected {v}"))?;
    }
    let degree = chow().degree_of(&ChowClass::unit(), 0).map_err(|e| e.to_string())?;
    ensure(degree == int(57), || format!("deg Y = {degree}"))
}

fn graded_ranks() -> Outcome {
    let dims: Vec<usize> = (0..=6).map(|k| chow().standard_monomials(k).len()).collect();
    ensure(dims == [1, 1, 3, 3, 3, 1, 1], || format!("Hilbert function {dims:?}"))?;
    ensure(dims == GRADED_RANKS, || "GRADED_RANKS disagrees".into())?;
    let std = ring().presentation().standard_monomials();
    let q = Monomial::new(0, 0, 0, 1);
    ensure(std.len() == 13, || format!("{} standard monomials", std.len()))?;
    ensure(std.iter().all(|m| m.is_coprime(&q)), || "a standard monomial involves q".into())
}

fn dual_bases() -> Outcome {
    let duals = chow().dual_basis(4).map_err(|e| e.to_string())?;
    let want = ["-c1^2 + 3d2", "3c1^2 + 2c2 - 12d2", "-2c1^2 - 3c2 + 11d2"];
    for ((d, w), i) in duals.iter().zip(want).zip(block(4)) {
        ensure(*d == class(w), || format!("dual of basis {i} is {d}, expected {w}"))?;
    }
    ensure(duals.len() == 3, || "wrong number of duals".into())
}

fn quantum_products() -> Outcome {
    let cases = [
        ("c1", "c1^2", "c1^3 + 3q"),
        ("c1", "c2", "c1c2"),
        ("c1", "d2", "c1d2"),
        ("c1", "c1^3", "c1^4 + 8q c1"),
        ("c1", "c1c2", "c1^2c2 + 3q c1"),
        ("c1", "c1d2", "c1^2d2 + 2q c1"),
        ("c2", "c2", "c2^2"),
        ("c2", "d2", "c2d2"),
        ("d2", "d2", "d2^2"),
        ("c1", "c2^2", "c1c2^2 + q(4c1^2 - 3c2 - d2)"),
        ("c1", "c2d2", "c1c2d2 + q(3c1^2 - c2 - 3d2)"),
        ("c1", "d2^2", "c1d2^2 + q(2c1^2 - 3d2)"),
    ];
    for (a, b, want) in cases {
        let got = ring().qmul(&lit(a), &lit(b));
        ensure(got == lit(want), || format!("{a} * {b} = {got}"))?;
    }
    Ok(())
}

fn gw_table() -> Outcome {
    let names = ["c2^2", "c2d2", "d2^2", "P2"];
    let rows = [[24, 18, 13, 4], [18, 13, 9, 3], [13, 9, 6, 2], [4, 3, 2, 1]];
    let c1 = class("c1");
    for (i, a) in names.iter().enumerate() {
        for (j, b) in names.iter().enumerate() {
            let got = ring().gw(&c1, &class(a), &class(b), 1).map_err(|e| e.to_string())?;
            ensure(got == int(rows[i][j]), || format!("I_1(c1, {a}, {b}) = {got}"))?;
        }
    }
    let quoted: [(&str, &str, &str, i64); 17] = [
        ("c1", "c1^2", "pt", 3),
        ("c1", "c2", "pt", 0),
        ("c1", "d2", "pt", 0),
        ("c1", "c1^3", "line", 8),
        ("c1", "c1c2", "line", 3),
        ("c1", "c1d2", "line", 2),
        ("c1", "c3", "line", 0),
        ("c1", "d2^2", "d2^2", 6),
        ("c1", "d2^2", "P2", 2),
        ("c1", "c1c3", "P2", 1),
        ("c1", "P2", "P2", 1),
        ("c1", "c2^2", "P2", 4),
        ("c1", "c2^2", "d2^2", 13),
        ("c1", "c2^2", "c2^2", 24),
        ("d2", "d2", "line", 0),
        ("c2", "d2", "line", 0),
        ("c2", "c2", "line", 0),
    ];
    for (a, b, c, v) in quoted {
        let got = ring().gw(&class(a), &class(b), &class(c), 1).map_err(|e| e.to_string())?;
        ensure(got == int(v), || format!("I_1({a}, {b}, {c}) = {got}, expected {v}"))?;
    }
    Ok(())
}

fn degree_two() -> Outcome {
    let r1 = ring().degree_two_relation(&int(3)).map_err(|e| e.to_string())?;
    let nf = ring().normal_form(&r1);
    let want = parse_poly("2 q^2 c1").unwrap();
    ensure(nf == want, || format!("NF(R1) = {nf}"))?;
    let inv = ring().verify_degree2_invariant().map_err(|e| e.to_string())?;
    ensure(inv == int(2), || format!("I_2(c1, line, pt) = {inv}"))?;
    let value = ring().gw(&class("c1"), &class("line"), &class("pt"), 2).map_err(|e| e.to_string())?;
    ensure(value == int(2), || format!("stored I_2 = {value}"))
}

fn quantum_chevalley() -> Outcome {
    let want = [
        ("e1", "f1 + f2"),
        ("e2", "2f1 + f2 + 2f3 + 3q"),
        ("e3", "f2 + f3"),
        ("f1", "h1 + 2h2 + q c1"),
        ("f2", "h1 + h2 + h3"),
        ("f3", "h3 + 2h2 + q c1"),
        ("h1", "2 line + q e3"),
        ("h2", "line + q e2"),
        ("h3", "2 line + q e1"),
        ("[line]", "pt + q(f1 + f3) + 2q^2"),
        ("[point]", "3q h2 + 2q^2 c1"),
    ];
    let table = ring().chevalley_table().map_err(|e| e.to_string())?;
    ensure(table.len() == 11, || format!("{} formulas", table.len()))?;
    for ((cell, got), (name, w)) in table.iter().zip(want) {
        ensure(cell == name, || format!("cell order {cell} vs {name}"))?;
        ensure(*got == lit(w), || format!("c1 * {cell} = {}", ring().format_in_cells(got)))?;
    }
    let last = ring().format_in_cells(&table[10].1);
    ensure(last == "q (3 h2) + q^2 (2 c1)", || format!("c1 * [point] printed as {last}"))?;
    let cells = CellData::bundled().map_err(|e| e.to_string())?;
    let problems = cells.verify_chevalley_diagram(ring(), ChevalleyMode::Quantum).map_err(|e| e.to_string())?;
    ensure(problems.is_empty(), || problems.join("; "))
}

fn cell_pairings_and_degrees() -> Outcome {
    let cells = CellData::bundled().map_err(|e| e.to_string())?;
    let mut problems = cells.check_poset();
    problems.extend(cells.verify_cell_pairings(chow()).map_err(|e| e.to_string())?);
    problems.extend(cells.verify_degrees(chow()).map_err(|e| e.to_string())?);
    ensure(problems.is_empty(), || problems.join("; "))?;
    for (i, j) in [(1, 1), (1, 2), (2, 2), (3, 1), (3, 3)] {
        let e = chow().named_class(&format!("e{i}")).unwrap();
        let h = chow().named_class(&format!("h{j}")).unwrap();
        let f = chow().named_class(&format!("f{i}")).unwrap();
        let g = chow().named_class(&format!("f{j}")).unwrap();
        let want = int(i64::from(i == j));
        ensure(chow().pairing(&e, &h) == want, || format!("<e{i}, h{j}>"))?;
        ensure(chow().pairing(&f, &g) == want, || format!("<f{i}, f{j}>"))?;
    }
    let degrees = [("h", [2, 1, 2], 4), ("f", [4, 5, 4], 3), ("e", [9, 21, 9], 2)];
    for (prefix, values, codim) in degrees {
        for (k, v) in values.iter().enumerate() {
            let name = format!("{prefix}{}", k + 1);
            let got = chow().degree_of(&chow().named_class(&name).unwrap(), codim).map_err(|e| e.to_string())?;
            ensure(got == int(*v), || format!("deg {name} = {got}"))?;
        }
    }
    let o2 = chow().pairing(&chow().named_class("O2").unwrap(), &class("c1^2"));
    ensure(o2 == int(9), || format!("deg O2 = {o2}"))?;
    let o4 = chow().named_class("O4").unwrap();
    for (with, v) in [("d2^2", 6), ("c2d2", 9), ("c2^2", 15)] {
        let got = chow().pairing(&o4, &class(with));
        ensure(got == int(v), || format!("<O4, {with}> = {got}"))?;
    }
    Ok(())
}

fn involution() -> Outcome {
    for i in 0..RANK {
        let si = chow().involution(&ChowClass::basis(i));
        for j in 0..RANK {
            let sj = chow().involution(&ChowClass::basis(j));
            ensure(chow().involution(chow().table_entry(i, j)) == chow().cup(&si, &sj), || format!("({i}, {j})"))?;
        }
    }
    for (a, b) in [("e1", "e3"), ("f1", "f3"), ("h1", "h3")] {
        ensure(chow().involution(&class(a)) == class(b), || format!("{a} not sent to {b}"))?;
    }
    for name in ["e2", "f2", "h2", "c1", "d2"] {
        ensure(chow().involution(&class(name)) == class(name), || format!("{name} moved"))?;
    }
    ensure(ring().involution_preserves_ideal(), || "quantum ideal not preserved".into())
}

fn semisimplicity() -> Outcome {
    let mut qs = vec![int(1)];
    qs.extend(sample_q_values());
    for q in &qs {
        let (det, ok) = FiniteAlgebra::specialize(ring(), q).map_err(|e| e.to_string())?.trace_form_certificate();
        ensure(ok && det != int(0), || format!("degenerate at q = {q}"))?;
    }
    let (det, ok) = FiniteAlgebra::specialize(ring(), &int(0)).map_err(|e| e.to_string())?.trace_form_certificate();
    ensure(!ok && det == int(0), || format!("det at q = 0 is {det}"))
}

fn figure_roots() -> Vec<ComplexRoot> {
    let r = |re: f64, im: f64, multiplicity: u32| ComplexRoot { re, im, multiplicity };
    vec![
        r(0.0, 0.0, 1),
        r(-1.810645079075508, 0.0, 1),
        r(3.446424449092975, 0.0, 1),
        r(-1.723212224546488, -2.984691125138305, 1),
        r(-1.723212224546488, 2.984691125138305, 1),
        r(0.9053225395377538, -1.568064635716674, 1),
        r(0.9053225395377538, 1.568064635716674, 1),
        r(-1.0, 0.0, 2),
        r(0.5, -0.866025403784439, 2),
        r(0.5, 0.866025403784439, 2),
    ]
}

fn spectrum() -> Outcome {
    let alg = FiniteAlgebra::specialize(ring(), &int(1)).map_err(|e| e.to_string())?;
    let report = alg.c1_spectrum(RootConfig::default()).map_err(|e| e.to_string())?;
    ensure(report.root_count() == 13, || format!("{} roots", report.root_count()))?;
    ensure(report.multiplicity_pattern() == [(1, 7), (2, 3)], || format!("{:?}", report.multiplicity_pattern()))?;
    let worst = match_roots(&report.roots, &figure_roots()).ok_or("roots do not pair up")?;
    ensure(worst < 1e-9, || format!("distance {worst:e}"))?;
    let t = UniPoly::t();
    let factor = &(&t * &UniPoly::from_ints(&[1, 1]).pow(2)) * &UniPoly::from_ints(&[1, -1, 1]).pow(2);
    ensure(factor.divides(&report.char_poly), || format!("{factor} does not divide {}", report.char_poly))
}

fn residual_length() -> Outcome {
    let alg = FiniteAlgebra::specialize(ring(), &int(1)).map_err(|e| e.to_string())?;
    let m = alg.mult_operator(&ChowClass::basis(1));
    let nullity = m.pow(RANK as u32).nullity();
    ensure(nullity == 1, || format!("generalized 0-eigenspace has dimension {nullity}"))?;
    ensure(RANK - nullity == 12, || "residual length is not 12".into())
}

fn random_qclass(rng: &mut ChaCha8Rng) -> QClass {
    let coords = (0..RANK)
        .map(|_| {
            let len = rng.gen_range(0..3);
            UniPoly::new((0..len).map(|_| int(rng.gen_range(-3..=3))).collect())
        })
        .collect();
    QClass::from_coords(coords).unwrap()
}

fn random_poly(rng: &mut ChaCha8Rng) -> MultiPoly {
    let n = rng.gen_range(0..6);
    MultiPoly::from_terms((0..n).map(|_| {
        let m = Monomial::new(rng.gen_range(0..=5), rng.gen_range(0..=3), rng.gen_range(0..=3), rng.gen_range(0..=2));
        (m, frac(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
    }))
}

fn property_suites() -> Outcome {
    let r = ring();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let unit = QClass::basis(0);
    for i in 0..RANK {
        let bi = QClass::basis(i);
        ensure(r.qmul(&unit, &bi) == bi, || format!("unit law on {i}"))?;
        for j in 0..RANK {
            let bj = QClass::basis(j);
            let ij = r.qmul(&bi, &bj);
            ensure(ij == r.qmul(&bj, &bi), || format!("commutativity on ({i}, {j})"))?;
            for k in 0..RANK {
                let bk = QClass::basis(k);
                ensure(r.qmul(&ij, &bk) == r.qmul(&bi, &r.qmul(&bj, &bk)), || format!("associativity on ({i}, {j}, {k})"))?;
            }
        }
    }
    for _ in 0..200 {
        let (x, y, z) = (random_qclass(&mut rng), random_qclass(&mut rng), random_qclass(&mut rng));
        ensure(r.qmul(&r.qmul(&x, &y), &z) == r.qmul(&x, &r.qmul(&y, &z)), || "random associativity".into())?;
        ensure(r.qmul(&x, &y) == r.qmul(&y, &x), || "random commutativity".into())?;
        ensure(r.qmul(&unit, &x) == x, || "random unit law".into())?;
    }
    let gb = r.presentation().groebner_basis();
    for _ in 0..500 {
        let (a, b) = (random_poly(&mut rng), random_poly(&mut rng));
        let x = frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let nf = r.normal_form(&a);
        ensure(r.normal_form(&nf) == nf, || format!("NF not idempotent on {a}"))?;
        ensure(nf.terms().all(|(m, _)| gb.is_standard(m)), || format!("NF of {a} not standard"))?;
        let lhs = r.normal_form(&(&a.scale(&x) + &b));
        ensure(lhs == &nf.scale(&x) + &r.normal_form(&b), || "NF not linear".into())?;
    }
    for n in 1..=6 {
        for _ in 0..8 {
            let rows: Vec<Vec<Rational>> =
                (0..n).map(|_| (0..n).map(|_| frac(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect()).collect();
            let a = Matrix::from_rows(rows);
            ensure(a.eval_poly(&a.char_poly()).is_zero(), || format!("Cayley-Hamilton fails for {n}x{n}"))?;
        }
    }
    let tol = RootConfig::default().tol;
    for _ in 0..20 {
        let deg = rng.gen_range(2..=8);
        let mut coeffs: Vec<Rational> = (0..deg).map(|_| int(rng.gen_range(-20..=20))).collect();
        coeffs.push(int(1));
        let p = UniPoly::new(coeffs);
        let mut roots = Vec::new();
        for (factor, mult) in p.squarefree_decomposition().map_err(|e| e.to_string())? {
            roots.extend(complex_roots(&factor, mult, RootConfig::default()).map_err(|e| format!("{p}: {e}"))?);
        }
        let back = reconstruct(&roots);
        let want = p.to_f64_coeffs();
        let norm = want.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        for (b, w) in back.iter().zip(&want) {
            let residual = (b - w).norm() / norm;
            ensure(residual < 10.0 * tol, || format!("reconstruction residual {residual:e} for {p}"))?;
        }
    }
    Ok(())
}

fn run_kqh(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<&str> = std::iter::once("kqh").chain(args.iter().copied()).collect();
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Every numeric leaf of `value`, as a JSON pointer.
fn numeric_leaves(value: &Value, path: String, out: &mut Vec<String>) {
    match value {
        Value::Number(_) => out.push(path),
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                numeric_leaves(v, format!("{path}/{i}"), out);
            }
        }
        Value::Object(map) => {
            for (k, v) in map {
                numeric_leaves(v, format!("{path}/{k}"), out);
            }
        }
        _ => {}
    }
}

fn perturb(n: &serde_json::Number) -> Value {
    match n.as_i64() {
        Some(i) => Value::from(i + 1),
        None => Value::from(n.as_f64().unwrap() + 0.5),
    }
}

fn fault_injection() -> Outcome {
    let (code, out, _) = run_kqh(&["verify"]);
    ensure(code == 0, || format!("pristine verify exited {code}:\n{out}"))?;
    ensure(out.lines().filter(|l| l.starts_with("PASS")).count() == 14, || out.clone())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("golden.json");
    let mutated = GOLDEN_JSON.replacen("\"value\": 57", "\"value\": 56", 1);
    ensure(mutated != GOLDEN_JSON, || "57 not found in golden file".into())?;
    std::fs::write(&path, mutated).map_err(|e| e.to_string())?;
    let (code, out, err) = run_kqh(&["verify", "--golden", path.to_str().unwrap()]);
    ensure(code == 1, || format!("57 -> 56 gave exit {code}"))?;
    ensure(out.contains("FAIL  intersection-numbers"), || out.clone())?;
    ensure(err.contains("intersection-numbers"), || err.clone())?;

    let ctx = Context::new(CellData::bundled().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let pristine: Value = serde_json::from_str(GOLDEN_JSON).unwrap();
    let mut leaves = Vec::new();
    numeric_leaves(&pristine, String::new(), &mut leaves);
    ensure(leaves.len() > 100, || format!("only {} numeric constants", leaves.len()))?;
    for pointer in &leaves {
        let mut v = pristine.clone();
        let slot = v.pointer_mut(pointer).unwrap();
        *slot = perturb(slot.as_number().unwrap());
        let golden: Golden = serde_json::from_value(v).map_err(|e| format!("{pointer}: {e}"))?;
        let failed = run_checks(&ctx, &golden).iter().any(|c| !c.passed);
        ensure(failed, || format!("perturbing {pointer} went unnoticed"))?;
    }

    let edits = [
        ("c1^3 + 3q", "c1^3 + 8q", "quantum-products"),
        ("\"2 q^2 c1\"", "\"3 q^2 c1\"", "degree-two"),
        ("3c1^2 + 2c2 - 12d2", "3c1^2 + 2c2 - 11d2", "dual-bases"),
        ("3q h2 + 2q^2 c1", "2q h2 + 2q^2 c1", "quantum-chevalley"),
        ("[\"h1\", \"h3\"]", "[\"h1\", \"h2\"]", "involution"),
    ];
    for (from, to, check) in edits {
        let text = GOLDEN_JSON.replacen(from, to, 1);
        ensure(text != GOLDEN_JSON, || format!("`{from}` not found"))?;
        let golden = Golden::from_json(&text).map_err(|e| e.to_string())?;
        let failed: Vec<&str> = run_checks(&ctx, &golden).iter().filter(|c| !c.passed).map(|c| c.name).collect();
        ensure(failed == [check], || format!("`{from}` -> `{to}` failed {failed:?}"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 14] = [
        ("intersection numbers", intersection_numbers),
        ("graded ranks", graded_ranks),
        ("dual bases", dual_bases),
        ("quantum products", quantum_products),
        ("GW table", gw_table),
        ("degree-2 derivation", degree_two),
        ("quantum Chevalley", quantum_chevalley),
        ("cell pairings and degrees", cell_pairings_and_degrees),
        ("involution", involution),
        ("semisimplicity", semisimplicity),
        ("spectrum at q = 1", spectrum),
        ("residual length", residual_length),
        ("property suites", property_suites),
        ("fault injection", fault_injection),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {:>2} {name}: PASS", i + 1),
            Err(msg) => {
                println!("criterion {:>2} {name}: FAIL ({msg})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
