//! The `verify` suite: every check recomputes its quantities and compares
//! them with the golden constants.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use kronecker_qh::cells::{CellData, ChevalleyMode};
use kronecker_qh::chow::{block, classical_relations, ChowClass, ChowRing, LABELS, RANK};
use kronecker_qh::expr::parse_poly;
use kronecker_qh::quantum::{QClass, QuantumRing};
use kronecker_qh::rational::{int, parse_rational, Rational};
use kronecker_qh::roots::RootConfig;
use kronecker_qh::spectra::{match_roots, sample_q_values, FiniteAlgebra, SpectralReport};
use kronecker_qh::unipoly::UniPoly;
use kronecker_qh::Result;
use serde::Serialize;

use crate::golden::Golden;

/// Distance allowed between computed eigenvalues and the stored figure.
pub const FIGURE_TOLERANCE: f64 = 1e-9;

/// Check names in reporting order.
pub const CHECK_NAMES: [&str; 14] = [
    "chow-relations",
    "intersection-numbers",
    "graded-ranks",
    "dual-bases",
    "quantum-products",
    "gw-table",
    "degree-two",
    "quantum-chevalley",
    "cells",
    "involution",
    "semisimplicity",
    "spectrum",
    "residual-length",
    "ring-axioms",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// Ring, cell data and memoized golden-independent computations.
pub struct Context {
    ring: QuantumRing,
    cells: CellData,
    algebras: Mutex<BTreeMap<Rational, Arc<FiniteAlgebra>>>,
    spectra: Mutex<BTreeMap<Rational, Arc<SpectralReport>>>,
    semisimplicity: OnceLock<Vec<String>>,
    axioms: OnceLock<Vec<String>>,
}

impl Context {
    pub fn new(cells: CellData) -> Result<Context> {
        Ok(Context {
            ring: QuantumRing::new()?,
            cells,
            algebras: Mutex::new(BTreeMap::new()),
            spectra: Mutex::new(BTreeMap::new()),
            semisimplicity: OnceLock::new(),
            axioms: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &QuantumRing {
        &self.ring
    }

    pub fn cells(&self) -> &CellData {
        &self.cells
    }

    pub fn algebra(&self, q: &Rational) -> Result<Arc<FiniteAlgebra>> {
        if let Some(a) = self.algebras.lock().expect("lock").get(q) {
            return Ok(a.clone());
        }
        let a = Arc::new(FiniteAlgebra::specialize(&self.ring, q)?);
        self.algebras.lock().expect("lock").insert(q.clone(), a.clone());
        Ok(a)
    }

    /// Spectrum of `c1` at `q` with the default root tolerance.
    pub fn c1_spectrum(&self, q: &Rational) -> Result<Arc<SpectralReport>> {
        if let Some(r) = self.spectra.lock().expect("lock").get(q) {
            return Ok(r.clone());
        }
        let r = Arc::new(self.algebra(q)?.c1_spectrum(RootConfig::default())?);
        self.spectra.lock().expect("lock").insert(q.clone(), r.clone());
        Ok(r)
    }
}

type Check = fn(&Context, &Golden) -> Result<Vec<String>>;

/// Runs every check against `golden`.
pub fn run_checks(ctx: &Context, golden: &Golden) -> Vec<CheckResult> {
    let checks: [Check; 14] = [
        chow_relations,
        intersection_numbers,
        graded_ranks,
        dual_bases,
        quantum_products,
        gw_table,
        degree_two,
        quantum_chevalley,
        cells,
        involution,
        semisimplicity,
        spectrum,
        residual_length,
        ring_axioms,
    ];
    CHECK_NAMES
        .iter()
        .zip(checks)
        .map(|(&name, check)| {
            let failures = check(ctx, golden).unwrap_or_else(|e| vec![e.to_string()]);
            CheckResult { name, passed: failures.is_empty(), failures }
        })
        .collect()
}

fn class(chow: &ChowRing, s: &str) -> Result<ChowClass> {
    let p = parse_poly(s)?;
    if p.involves(kronecker_qh::poly::Var::Q) {
        return Err(kronecker_qh::Error::Parse(format!("`{s}` involves q")));
    }
    Ok(chow.class_of_poly(&p))
}

fn literal(ring: &QuantumRing, s: &str) -> Result<QClass> {
    Ok(ring.literal_class(&parse_poly(s)?))
}

fn chow_relations(ctx: &Context, _: &Golden) -> Result<Vec<String>> {
    let chow = ctx.ring.chow();
    let mut out = Vec::new();
    for (i, rel) in classical_relations().iter().enumerate() {
        if !chow.class_of_poly(rel).is_zero() {
            out.push(format!("classical relation {} is nonzero in A*(Y)", i + 1));
        }
    }
    for rel in ctx.ring.presentation().relations() {
        if !ctx.ring.to_qclass(&rel.cleared).is_zero() {
            out.push(format!("quantum relation {} is nonzero in QH*(Y)", rel.name));
        }
    }
    Ok(out)
}

fn intersection_numbers(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let chow = ctx.ring.chow();
    let mut out = Vec::new();
    if g.intersection_numbers.len() != 13 {
        out.push(format!("expected 13 intersection numbers, found {}", g.intersection_numbers.len()));
    }
    for entry in &g.intersection_numbers {
        let got = chow.pairing(&class(chow, &entry.monomial)?, &ChowClass::unit());
        if got != int(entry.value) {
            out.push(format!("{} = {got}, expected {}", entry.monomial, entry.value));
        }
    }
    let degree = chow.degree_of(&ChowClass::unit(), 0)?;
    if degree != int(g.degree) {
        out.push(format!("deg Y = {degree}, expected {}", g.degree));
    }
    Ok(out)
}

fn graded_ranks(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let chow = ctx.ring.chow();
    let mut out = Vec::new();
    let got: Vec<usize> = (0..=6).map(|k| chow.standard_monomials(k).len()).collect();
    if got != g.graded_ranks {
        out.push(format!("Hilbert function {got:?}, expected {:?}", g.graded_ranks));
    }
    let pres = ctx.ring.presentation();
    let rank = pres.standard_monomials().len();
    if rank != g.quantum_rank {
        out.push(format!("quantum quotient has rank {rank}, expected {}", g.quantum_rank));
    }
    if pres.graded_rank() != got {
        out.push(format!("quantum standard monomials graded as {:?}", pres.graded_rank()));
    }
    Ok(out)
}

fn dual_bases(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let chow = ctx.ring.chow();
    let mut out = Vec::new();
    let classes: Vec<ChowClass> = g.dual_basis.classes.iter().map(|s| class(chow, s)).collect::<Result<_>>()?;
    let duals: Vec<ChowClass> = g.dual_basis.duals.iter().map(|s| class(chow, s)).collect::<Result<_>>()?;
    let basis: Vec<ChowClass> = block(4).map(ChowClass::basis).collect();
    if classes != basis {
        out.push(format!("classes {:?} are not the codimension-4 basis", g.dual_basis.classes));
        return Ok(out);
    }
    let computed = chow.dual_basis(4)?;
    if duals != computed {
        for ((s, d), c) in g.dual_basis.duals.iter().zip(&duals).zip(&computed) {
            if d != c {
                out.push(format!("dual {s} differs from computed {c}"));
            }
        }
        if duals.len() != computed.len() {
            out.push(format!("expected {} duals, found {}", computed.len(), duals.len()));
        }
    }
    for (i, x) in classes.iter().enumerate() {
        for (j, d) in duals.iter().enumerate() {
            let want = int(i64::from(i == j));
            if chow.pairing(x, d) != want {
                out.push(format!("<{}, {}> != {want}", g.dual_basis.classes[i], g.dual_basis.duals[j]));
            }
        }
    }
    Ok(out)
}

fn quantum_products(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let ring = &ctx.ring;
    let mut out = Vec::new();
    if g.quantum_products.len() != 12 {
        out.push(format!("expected 12 product formulas, found {}", g.quantum_products.len()));
    }
    for f in &g.quantum_products {
        let got = ring.qmul(&literal(ring, &f.left)?, &literal(ring, &f.right)?);
        if got != literal(ring, &f.product)? {
            out.push(format!("{} * {} = {got}, expected {}", f.left, f.right, f.product));
        }
    }
    Ok(out)
}

fn gw_table(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let ring = &ctx.ring;
    let chow = ring.chow();
    let c1 = ChowClass::basis(1);
    let mut out = Vec::new();
    let classes: Vec<ChowClass> = g.gw_table.classes.iter().map(|s| class(chow, s)).collect::<Result<_>>()?;
    if g.gw_table.rows.len() != classes.len() || g.gw_table.rows.iter().any(|r| r.len() != classes.len()) {
        out.push("table shape does not match its classes".to_string());
        return Ok(out);
    }
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            let got = ring.gw(&c1, a, b, 1)?;
            let want = g.gw_table.rows[i][j];
            if got != int(want) {
                out.push(format!(
                    "I_1(c1, {}, {}) = {got}, expected {want}",
                    g.gw_table.classes[i], g.gw_table.classes[j]
                ));
            }
        }
    }
    for inv in &g.degree_one_invariants {
        let [a, b, c] = &inv.classes;
        let got = ring.gw(&class(chow, a)?, &class(chow, b)?, &class(chow, c)?, 1)?;
        if got != int(inv.value) {
            out.push(format!("I_1({a}, {b}, {c}) = {got}, expected {}", inv.value));
        }
    }
    Ok(out)
}

fn degree_two(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let ring = &ctx.ring;
    let mut out = Vec::new();
    let nf = ring.normal_form(&ring.degree_two_relation(&int(3))?);
    let want = parse_poly(&g.degree_two.relation_normal_form)?;
    if nf != want {
        out.push(format!("NF(R1) = {nf}, expected {want}"));
    }
    let invariant = int(g.degree_two.invariant);
    let solved = ring.verify_degree2_invariant()?;
    if solved != invariant {
        out.push(format!("I_2(c1, line, pt) = {solved}, expected {invariant}"));
    }
    let residual = ring.degree_two_residual(&invariant)?;
    if !residual.is_zero() {
        out.push(format!("relation leaves residual {residual} at I_2 = {invariant}"));
    }
    Ok(out)
}

fn quantum_chevalley(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let ring = &ctx.ring;
    let table = ring.chevalley_table()?;
    let mut out = Vec::new();
    for (cell, product) in &table {
        match g.quantum_chevalley.iter().find(|f| &f.cell == cell) {
            None => out.push(format!("no stored formula for c1 * {cell}")),
            Some(f) => {
                if *product != literal(ring, &f.product)? {
                    out.push(format!("c1 * {cell} = {}, expected {}", ring.format_in_cells(product), f.product));
                }
            }
        }
    }
    if g.quantum_chevalley.len() != table.len() {
        out.push(format!("expected {} formulas, found {}", table.len(), g.quantum_chevalley.len()));
    }
    out.extend(ctx.cells.verify_chevalley_diagram(ring, ChevalleyMode::Quantum)?);
    Ok(out)
}

fn cells(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let chow = ctx.ring.chow();
    let data = &ctx.cells;
    let mut out = data.check_poset();
    out.extend(data.verify_cell_pairings(chow)?);
    out.extend(data.verify_degrees(chow)?);
    out.extend(data.verify_chevalley_diagram(&ctx.ring, ChevalleyMode::Classical)?);
    for entry in &g.cell_degrees {
        let node = data.node(&entry.cell)?;
        let x = data.class_of(chow, &entry.cell)?;
        let got = chow.degree_of(&x, 6 - node.dim)?;
        if got != int(entry.degree) {
            out.push(format!("degree of {} is {got}, expected {}", entry.cell, entry.degree));
        }
    }
    let c1_squared = class(chow, "c1^2")?;
    let o2 = chow.pairing(&chow.named_class("O2")?, &c1_squared);
    if o2 != int(g.orbits.o2_degree) {
        out.push(format!("degree of O2 is {o2}, expected {}", g.orbits.o2_degree));
    }
    let o4 = chow.named_class("O4")?;
    for p in &g.orbits.o4_pairings {
        let got = chow.pairing(&o4, &class(chow, &p.with)?);
        if got != int(p.value) {
            out.push(format!("<O4, {}> = {got}, expected {}", p.with, p.value));
        }
    }
    Ok(out)
}

fn involution(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let chow = ctx.ring.chow();
    let mut out = Vec::new();
    for i in 0..RANK {
        let bi = ChowClass::basis(i);
        let si = chow.involution(&bi);
        if chow.involution(&si) != bi {
            out.push(format!("involution is not an involution on {}", LABELS[i]));
        }
        for j in 0..RANK {
            let sj = chow.involution(&ChowClass::basis(j));
            if chow.involution(chow.table_entry(i, j)) != chow.cup(&si, &sj) {
                out.push(format!("involution does not respect {} * {}", LABELS[i], LABELS[j]));
            }
        }
    }
    for (a, b) in &g.involution.swaps {
        let (x, y) = (chow.named_class(a)?, chow.named_class(b)?);
        if chow.involution(&x) != y || chow.involution(&y) != x {
            out.push(format!("involution does not swap {a} and {b}"));
        }
    }
    for name in &g.involution.fixed {
        let x = class(chow, name)?;
        if chow.involution(&x) != x {
            out.push(format!("involution moves {name}"));
        }
    }
    if !ctx.ring.involution_preserves_ideal() {
        out.push("involution does not preserve the quantum ideal".to_string());
    }
    out.extend(ctx.cells.verify_involution(chow)?);
    Ok(out)
}

fn semisimplicity(ctx: &Context, _: &Golden) -> Result<Vec<String>> {
    if let Some(out) = ctx.semisimplicity.get() {
        return Ok(out.clone());
    }
    let mut out = Vec::new();
    for q in sample_q_values() {
        let (det, nondegenerate) = ctx.algebra(&q)?.trace_form_certificate();
        if !nondegenerate {
            out.push(format!("trace form degenerate at q = {q} (det = {det})"));
        }
    }
    let (det, _) = ctx.algebra(&int(0))?.trace_form_certificate();
    if det != int(0) {
        out.push(format!("trace form at q = 0 has det {det}, expected 0"));
    }
    Ok(ctx.semisimplicity.get_or_init(|| out).clone())
}

fn golden_q(g: &Golden) -> Result<Rational> {
    parse_rational(&g.spectrum.q)
}

fn spectrum(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let report = ctx.c1_spectrum(&golden_q(g)?)?;
    let mut out = Vec::new();
    let count = report.root_count();
    let stored: u32 = g.spectrum.roots.iter().map(|r| r.multiplicity).sum();
    if count != stored {
        out.push(format!("{count} eigenvalues with multiplicity, expected {stored}"));
    }
    match match_roots(&report.roots, &g.spectrum.roots) {
        None => out.push("eigenvalues do not pair up with the stored ones by multiplicity".to_string()),
        Some(d) if d >= FIGURE_TOLERANCE => {
            out.push(format!("largest distance to the stored eigenvalues is {d:e}"))
        }
        Some(_) => {}
    }
    let factor = UniPoly::new(g.spectrum.repeated_factor.iter().map(|&c| int(c)).collect());
    if factor.leading_coeff() != int(1) {
        out.push(format!("stored factor {factor} is not monic"));
    } else if !factor.divides(&report.char_poly) {
        out.push(format!("{factor} does not divide {}", report.char_poly));
    }
    Ok(out)
}

fn residual_length(ctx: &Context, g: &Golden) -> Result<Vec<String>> {
    let length = ctx.algebra(&golden_q(g)?)?.vanishing_length(&ChowClass::basis(1));
    let mut out = Vec::new();
    if length != g.zero_eigenvalue_length {
        out.push(format!("generalized 0-eigenspace of c1 has dimension {length}, expected {}", g.zero_eigenvalue_length));
    }
    if RANK - length != g.residual_length {
        out.push(format!("residual length {}, expected {}", RANK - length, g.residual_length));
    }
    Ok(out)
}

fn ring_axioms(ctx: &Context, _: &Golden) -> Result<Vec<String>> {
    Ok(ctx
        .axioms
        .get_or_init(|| {
            let ring = &ctx.ring;
            let mut out = Vec::new();
            let unit = QClass::basis(0);
            for i in 0..RANK {
                let bi = QClass::basis(i);
                if ring.qmul(&unit, &bi) != bi {
                    out.push(format!("unit law fails on {}", LABELS[i]));
                }
                for j in 0..RANK {
                    let bj = QClass::basis(j);
                    let ij = ring.qmul(&bi, &bj);
                    if ij != ring.qmul(&bj, &bi) {
                        out.push(format!("{} * {} is not commutative", LABELS[i], LABELS[j]));
                    }
                    if ij != ring.qmul_by_normal_form(&bi, &bj) {
                        out.push(format!("product routes disagree on {} * {}", LABELS[i], LABELS[j]));
                    }
                    for k in 0..RANK {
                        let bk = QClass::basis(k);
                        if ring.qmul(&ij, &bk) != ring.qmul(&bi, &ring.qmul(&bj, &bk)) {
                            out.push(format!("associativity fails on ({}, {}, {})", LABELS[i], LABELS[j], LABELS[k]));
                        }
                    }
                }
            }
            out
        })
        .clone())
}
