use num_traits::{One, Zero};

use crate::chow::{block, involution_poly, ChowClass, ChowRing, CODIMS, DIM, LINE, POINT, RANK};
use crate::error::{Error, Result};
use crate::poly::{c1, q, Monomial, MultiPoly, Var};
use crate::rational::{frac, int, Rational};
use crate::unipoly::UniPoly;

use super::gw::{dimension_axiom, GwTable};
use super::presentation::QuantumPresentation;
use super::qclass::QClass;

/// Cells whose product with `c1` makes up the quantum Chevalley formula.
pub const CHEVALLEY_CELLS: [&str; 11] = ["e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3", "[line]", "[point]"];

/// How a basis class of codimension >= 2 arises as a cup product:
/// `B_target = sum coeff * (g ∪ B_j)`.
fn tian_rule(target: usize) -> Vec<(Rational, Var, usize)> {
    match target {
        2 => vec![(int(1), Var::C1, 1)],
        5 => vec![(int(1), Var::C1, 3)],
        6 => vec![(int(1), Var::C1, 4)],
        // c1^3 = 4 c1d2 - 3 c3
        7 => vec![(frac(4, 3), Var::C1, 4), (frac(-1, 3), Var::C1, 2)],
        8 => vec![(int(1), Var::C2, 3)],
        9 => vec![(int(1), Var::C2, 4)],
        10 => vec![(int(1), Var::D2, 4)],
        // c1 c2^2 = 14 line
        LINE => vec![(frac(1, 14), Var::C1, 8)],
        POINT => vec![(int(1), Var::C1, LINE)],
        _ => Vec::new(),
    }
}

fn generator_index(v: Var) -> usize {
    match v {
        Var::C1 => 1,
        Var::C2 => 3,
        Var::D2 => 4,
        Var::Q => unreachable!("q is not a class"),
    }
}

/// Small quantum cohomology: the presented quotient together with the
/// rank-13 structure over `Q[q]` derived from it.
#[derive(Debug, Clone)]
pub struct QuantumRing {
    chow: ChowRing,
    pres: QuantumPresentation,
    gw_seeds: GwTable,
    duals: Vec<Vec<ChowClass>>,
    /// `quantized[i]` represents basis class `i` with no q-corrections.
    quantized: Vec<MultiPoly>,
    /// Identification of each q-free standard monomial with a `QClass`.
    standard_images: Vec<(Monomial, QClass)>,
    table: Vec<Vec<QClass>>,
    degree_two: Rational,
}

impl QuantumRing {
    pub fn new() -> Result<Self> {
        let chow = ChowRing::new()?;
        let pres = QuantumPresentation::new()?;
        let duals = (0..=DIM).map(|k| chow.dual_basis(k)).collect::<Result<Vec<_>>>()?;
        let mut ring = QuantumRing {
            chow,
            pres,
            gw_seeds: GwTable::degree_one_seeds(),
            duals,
            quantized: Vec::new(),
            standard_images: Vec::new(),
            table: Vec::new(),
            degree_two: Rational::zero(),
        };
        for target in 0..RANK {
            ring.check_rule(target)?;
        }
        for target in 0..POINT {
            let p = ring.quantize_basis(target)?;
            ring.quantized.push(p);
        }
        ring.degree_two = ring.solve_degree_two()?;
        ring.gw_seeds = ring.gw_seeds.clone().with_degree_two(ring.degree_two.clone());
        let p = ring.quantize_basis(POINT)?;
        ring.quantized.push(p);

        let standard: Vec<Monomial> = ring.pres.standard_monomials().to_vec();
        for s in standard {
            let image = ring.identify(&MultiPoly::term(int(1), s))?;
            ring.standard_images.push((s, image));
        }
        for i in 0..RANK {
            if ring.to_qclass(&ring.quantized[i]) != QClass::basis(i) {
                return Err(Error::Inconsistent(format!("quantization of basis class {i} has corrections")));
            }
        }
        let mut table = Vec::with_capacity(RANK);
        for i in 0..RANK {
            let row: Vec<QClass> =
                (0..RANK).map(|j| ring.to_qclass(&(&ring.quantized[i] * &ring.quantized[j]))).collect();
            table.push(row);
        }
        ring.table = table;
        Ok(ring)
    }

    pub fn chow(&self) -> &ChowRing {
        &self.chow
    }

    pub fn presentation(&self) -> &QuantumPresentation {
        &self.pres
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        self.pres.normal_form(p)
    }

    /// Invariants used as input to quantization.
    pub fn gw_seeds(&self) -> &GwTable {
        &self.gw_seeds
    }

    fn check_rule(&self, target: usize) -> Result<()> {
        let rule = tian_rule(target);
        if rule.is_empty() {
            return if CODIMS[target] <= 1 || target == 3 || target == 4 {
                Ok(())
            } else {
                Err(Error::Inconsistent(format!("no quantization rule for basis class {target}")))
            };
        }
        let mut sum = ChowClass::zero();
        for (c, g, j) in &rule {
            let prod = self.chow.table_entry(generator_index(*g), *j).scale(c);
            sum = sum.add(&prod);
        }
        if sum != ChowClass::basis(target) {
            return Err(Error::Inconsistent(format!("quantization rule for basis class {target} is wrong")));
        }
        Ok(())
    }

    /// `X_n = sum_t I_n(g, B_j, B_t) B_t^vee`, from the seed table.
    fn correction(&self, gi: usize, j: usize, n: u32) -> Result<ChowClass> {
        let s = CODIMS[gi] + CODIMS[j];
        let k = DIM + 3 * n as usize - s;
        let mut x = ChowClass::zero();
        for (t, dual) in block(k).zip(&self.duals[k]) {
            let v = self.gw_seeds.get(gi, j, t, n).ok_or_else(|| {
                Error::Inconsistent(format!("missing invariant I_{n}(B{gi}, B{j}, B{t})"))
            })?;
            x = x.add(&dual.scale(v));
        }
        Ok(x)
    }

    fn quantize_basis(&self, target: usize) -> Result<MultiPoly> {
        let rule = tian_rule(target);
        if rule.is_empty() {
            return Ok(self.chow.basis_poly(target).clone());
        }
        let mut out = MultiPoly::zero();
        for (c, g, j) in rule {
            let gi = generator_index(g);
            let mut p = &MultiPoly::var(g) * &self.quantized[j];
            let s = CODIMS[gi] + CODIMS[j];
            for n in 1..=(s / 3) as u32 {
                let x = self.correction(gi, j, n)?;
                let qn = MultiPoly::term(int(1), Monomial::new(0, 0, 0, n));
                p = &p - &(&qn * &self.quantize_linear(&x));
            }
            out = &out + &p.scale(&c);
        }
        Ok(out)
    }

    fn quantize_linear(&self, x: &ChowClass) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (i, c) in x.coords().iter().enumerate() {
            if !c.is_zero() {
                p = &p + &self.quantized[i].scale(c);
            }
        }
        p
    }

    /// A polynomial whose class in `QH*` is the classical class `x`.
    ///
    /// Unique only up to the ideal.
    pub fn quantize(&self, x: &ChowClass) -> Result<MultiPoly> {
        x.codim()?;
        Ok(self.quantize_linear(x))
    }

    /// Polynomial representative of a `QClass`.
    pub fn lift(&self, x: &QClass) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (i, coeffs) in x.coords().iter().enumerate() {
            for (k, c) in coeffs.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    let qk = MultiPoly::term(c.clone(), Monomial::new(0, 0, 0, k as u32));
                    p = &p + &(&qk * &self.quantized[i]);
                }
            }
        }
        p
    }

    /// Splits a normal form q-adically, peeling off one classical class per
    /// power of `q`.
    fn identify(&self, p: &MultiPoly) -> Result<QClass> {
        let mut rest = self.pres.normal_form(p);
        let mut parts = Vec::new();
        while !rest.is_zero() {
            if parts.len() > 2 * DIM {
                return Err(Error::Inconsistent("q-adic expansion does not terminate".into()));
            }
            let x0 = self.chow.class_of_poly(&rest.eval_var(Var::Q, &Rational::zero()));
            let diff = &rest - &self.pres.normal_form(&self.quantize_linear(&x0));
            rest = diff
                .div_var(Var::Q)
                .ok_or_else(|| Error::Inconsistent("q-free part survives after subtraction".into()))?;
            parts.push(x0);
        }
        Ok(QClass::from_parts(&parts))
    }

    /// Element of `QH*` represented by a polynomial.
    pub fn to_qclass(&self, p: &MultiPoly) -> QClass {
        let nf = self.pres.normal_form(p);
        let mut out = QClass::zero();
        for (m, c) in nf.terms() {
            let k = m.exp(Var::Q) as usize;
            let s = Monomial::new(m.exp(Var::C1), m.exp(Var::C2), m.exp(Var::D2), 0);
            let image = &self.standard_images.iter().find(|(t, _)| *t == s).expect("standard monomial").1;
            out = out.add(&image.mul_poly(&UniPoly::monomial(c.clone(), k)));
        }
        out
    }

    /// Reads a polynomial in which juxtaposition is the cup product, e.g.
    /// `c1c2^2 + q(4c1^2 - 3c2 - d2)`, as a `QClass`.
    pub fn literal_class(&self, p: &MultiPoly) -> QClass {
        let parts: Vec<ChowClass> = p.coefficients_in(Var::Q).iter().map(|c| self.chow.class_of_poly(c)).collect();
        QClass::from_parts(&parts)
    }

    /// Structure constants: `B_i * B_j`.
    pub fn table_entry(&self, i: usize, j: usize) -> &QClass {
        &self.table[i][j]
    }

    /// Quantum product from the structure-constant table.
    pub fn qmul(&self, x: &QClass, y: &QClass) -> QClass {
        let mut out = vec![UniPoly::zero(); RANK];
        for (i, a) in x.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, t) in out.iter_mut().zip(self.table[i][j].coords()) {
                    if !t.is_zero() {
                        *o = &*o + &(&ab * t);
                    }
                }
            }
        }
        QClass::from_coords(out).expect("rank")
    }

    /// Quantum product by lifting both factors, multiplying polynomials and
    /// reducing.
    pub fn qmul_by_normal_form(&self, x: &QClass, y: &QClass) -> QClass {
        self.to_qclass(&(&self.lift(x) * &self.lift(y)))
    }

    pub fn qmul_classes(&self, x: &ChowClass, y: &ChowClass) -> QClass {
        self.qmul(&QClass::from_chow(x), &QClass::from_chow(y))
    }

    /// `I_n(a, b, c)`, read off as `<[q^n](a * b), c>`.
    pub fn gw(&self, a: &ChowClass, b: &ChowClass, c: &ChowClass, n: u32) -> Result<Rational> {
        if let (Some(x), Some(y), Some(z)) = (a.codim()?, b.codim()?, c.codim()?) {
            if x + y + z != DIM + 3 * n as usize {
                return Ok(Rational::zero());
            }
        }
        Ok(self.chow.pairing(&self.qmul_classes(a, b).q_part(n as usize), c))
    }

    /// `I_n` on basis classes.
    pub fn gw_basis(&self, a: usize, b: usize, c: usize, n: u32) -> Rational {
        if !dimension_axiom(a, b, c, n) {
            return Rational::zero();
        }
        self.chow.pairing(&self.table[a][b].q_part(n as usize), &ChowClass::basis(c))
    }

    /// `c1 * X` for each cell `X` of positive codimension.
    pub fn chevalley_table(&self) -> Result<Vec<(String, QClass)>> {
        let c1 = QClass::basis(1);
        CHEVALLEY_CELLS
            .iter()
            .map(|name| {
                let x = self.chow.named_class(name)?;
                Ok((name.to_string(), self.qmul(&c1, &QClass::from_chow(&x))))
            })
            .collect()
    }

    /// Writes each q-block in the cell basis, e.g. `pt + q (f1 + f3) + q^2 (2 [Y])`.
    pub fn format_in_cells(&self, x: &QClass) -> String {
        x.format_with(|part| self.chow.format_in_cells(part))
    }

    /// The value `I_2(c1, line, pt)` forced by the relations.
    pub fn degree_two_invariant(&self) -> &Rational {
        &self.degree_two
    }

    /// `R1 = c1 * c1 * quantize(line) - q quantize(X_pt) - q c1 quantize(X_line) - 2 q^2 c1`,
    /// where `X_pt`, `X_line` are the degree-one corrections of `c1 * pt` and
    /// `c1 * line`. Inside quantizations of `c3`, `c1^3` is replaced by
    /// `c1 * c1 * c1 - cube_shift q`.
    pub fn degree_two_relation(&self, cube_shift: &Rational) -> Result<MultiPoly> {
        let shifted = |x: &ChowClass| {
            let c3 = x.coord(7);
            let delta = (cube_shift - int(3)) / int(3);
            &self.quantize_linear(x) + &q().scale(&(c3 * &delta))
        };
        let x_pt = self.correction(1, POINT, 1)?;
        let x_line = self.correction(1, LINE, 1)?;
        let a = c1();
        let t = q();
        let r = &(&(&a * &a) * &self.quantized[LINE]) - &(&t * &shifted(&x_pt));
        let r = &r - &(&(&t * &a) * &shifted(&x_line));
        Ok(&r - &(&(&t * &t) * &a).scale(&int(2)))
    }

    /// `NF(R1 + (2 - 2I) q^2 c1)`: zero exactly for the consistent value of `I`.
    pub fn degree_two_residual(&self, invariant: &Rational) -> Result<MultiPoly> {
        let r1 = self.degree_two_relation(&int(3))?;
        let t = q();
        let fix = (&(&t * &t) * &c1()).scale(&(int(2) - invariant * int(2)));
        Ok(self.pres.normal_form(&(&r1 + &fix)))
    }

    fn solve_degree_two(&self) -> Result<Rational> {
        let nf = self.pres.normal_form(&self.degree_two_relation(&int(3))?);
        let target = Monomial::new(1, 0, 0, 2);
        let lambda = nf.coeff(&target);
        if nf != MultiPoly::term(lambda.clone(), target) {
            return Err(Error::Inconsistent(format!("NF(R1) = {nf} is not a multiple of q^2 c1")));
        }
        Ok(Rational::one() + lambda / int(2))
    }

    /// Checks `NF(R1) = lambda q^2 c1` and returns the forced `I_2(c1, line, pt)`.
    pub fn verify_degree2_invariant(&self) -> Result<Rational> {
        let value = self.solve_degree_two()?;
        if !self.degree_two_residual(&value)?.is_zero() {
            return Err(Error::Inconsistent("degree-two residual does not vanish".into()));
        }
        Ok(value)
    }

    /// Whether `c2 -> 3 d2 - c2` maps every relation into the ideal.
    pub fn involution_preserves_ideal(&self) -> bool {
        self.pres
            .relations()
            .iter()
            .all(|r| self.pres.normal_form(&involution_poly(&r.cleared)).is_zero())
    }

    /// Specialization of the structure constants at `q`.
    pub fn structure_constants_at(&self, q: &Rational) -> Vec<Vec<ChowClass>> {
        self.table.iter().map(|row| row.iter().map(|x| x.eval(q)).collect()).collect()
    }
}
