//! `QH*(Y)` specialized at a rational `q`, viewed as a 13-dimensional
//! commutative algebra: multiplication operators, the trace form, and the
//! spectrum of multiplication by `c1`.

use std::fmt::Write as _;

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chow::{ChowClass, RANK};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quantum::QuantumRing;
use crate::rational::{frac, int, Rational};
use crate::roots::{complex_roots, ComplexRoot, RootConfig};
use crate::unipoly::UniPoly;

/// Structure constants of `QH*(Y)` at a fixed value of `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteAlgebra {
    q: Rational,
    /// `constants[i][j] = B_i * B_j`.
    constants: Vec<Vec<ChowClass>>,
}

impl FiniteAlgebra {
    /// Evaluates the structure constants at `q` and checks the unit,
    /// commutativity and associativity.
    pub fn specialize(ring: &QuantumRing, q: &Rational) -> Result<Self> {
        let alg = FiniteAlgebra { q: q.clone(), constants: ring.structure_constants_at(q) };
        for i in 0..RANK {
            if alg.constants[0][i] != ChowClass::basis(i) {
                return Err(Error::Inconsistent(format!("[Y] is not a unit on basis class {i}")));
            }
            for j in 0..RANK {
                if alg.constants[i][j] != alg.constants[j][i] {
                    return Err(Error::Inconsistent(format!("B{i} * B{j} is not commutative")));
                }
                for k in 0..RANK {
                    let left = alg.mul(&alg.constants[i][j], &ChowClass::basis(k));
                    let right = alg.mul(&ChowClass::basis(i), &alg.constants[j][k]);
                    if left != right {
                        return Err(Error::Inconsistent(format!("(B{i} B{j}) B{k} != B{i} (B{j} B{k})")));
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn dim(&self) -> usize {
        RANK
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &ChowClass {
        &self.constants[i][j]
    }

    pub fn mul(&self, x: &ChowClass, y: &ChowClass) -> ChowClass {
        let mut out = vec![Rational::zero(); RANK];
        for (i, a) in x.coords().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, t) in out.iter_mut().zip(self.constants[i][j].coords()) {
                    if !t.is_zero() {
                        *o += &ab * t;
                    }
                }
            }
        }
        ChowClass::from_coords(out).expect("rank")
    }

    /// Matrix of `y -> x * y`; column `j` holds `x * B_j`.
    pub fn mult_operator(&self, x: &ChowClass) -> Matrix {
        let cols: Vec<Vec<Rational>> =
            (0..RANK).map(|j| self.mul(x, &ChowClass::basis(j)).coords().to_vec()).collect();
        Matrix::from_columns(&cols)
    }

    /// Gram matrix `G_ij = tr(L_{B_i * B_j})` of the trace form.
    pub fn trace_form(&self) -> Matrix {
        let traces: Vec<Rational> = (0..RANK).map(|m| self.mult_operator(&ChowClass::basis(m)).trace()).collect();
        let rows = (0..RANK)
            .map(|i| {
                (0..RANK)
                    .map(|j| {
                        self.constants[i][j]
                            .coords()
                            .iter()
                            .zip(&traces)
                            .fold(Rational::zero(), |acc, (c, t)| acc + c * t)
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows)
    }

    /// `(det G, det G != 0)`: a commutative algebra over a field of
    /// characteristic 0 is semisimple exactly when its trace form is
    /// nondegenerate.
    pub fn trace_form_certificate(&self) -> (Rational, bool) {
        let det = self.trace_form().det();
        let semisimple = !det.is_zero();
        (det, semisimple)
    }

    /// Dimension of the generalized 0-eigenspace of multiplication by `x`.
    pub fn vanishing_length(&self, x: &ChowClass) -> usize {
        self.mult_operator(x).pow(RANK as u32).nullity()
    }

    /// Spectral data of multiplication by `x`.
    pub fn spectrum(&self, x: &ChowClass, config: RootConfig) -> Result<SpectralReport> {
        let operator = self.mult_operator(x);
        let char_poly = operator.char_poly();
        let squarefree = char_poly.squarefree_decomposition()?;
        let mut roots = Vec::new();
        for (factor, mult) in &squarefree {
            roots.extend(complex_roots(factor, *mult, config)?);
        }
        roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        let (trace_det, semisimple) = self.trace_form_certificate();
        let zero_eigenvalue_length = self.vanishing_length(x);
        Ok(SpectralReport {
            q: self.q.clone(),
            operator,
            char_poly,
            squarefree,
            roots,
            trace_det,
            semisimple,
            zero_eigenvalue_length,
        })
    }

    pub fn c1_spectrum(&self, config: RootConfig) -> Result<SpectralReport> {
        self.spectrum(&ChowClass::basis(1), config)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub q: Rational,
    pub operator: Matrix,
    pub char_poly: UniPoly,
    pub squarefree: Vec<(UniPoly, u32)>,
    pub roots: Vec<ComplexRoot>,
    pub trace_det: Rational,
    pub semisimple: bool,
    pub zero_eigenvalue_length: usize,
}

/// Serialized form of a [`SpectralReport`]; `char_poly` is ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralRecord {
    pub q: String,
    pub char_poly: Vec<String>,
    pub roots: Vec<ComplexRoot>,
    pub trace_det: String,
    pub semisimple: bool,
}

impl SpectralReport {
    pub fn record(&self) -> SpectralRecord {
        SpectralRecord {
            q: self.q.to_string(),
            char_poly: self.char_poly.coeffs().iter().map(ToString::to_string).collect(),
            roots: self.roots.clone(),
            trace_det: self.trace_det.to_string(),
            semisimple: self.semisimple,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.record()).expect("serializable")
    }

    /// Total multiplicity of the listed roots.
    pub fn root_count(&self) -> u32 {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Number of distinct roots of each multiplicity, as `(mult, count)`.
    pub fn multiplicity_pattern(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for r in &self.roots {
            match out.iter_mut().find(|(m, _)| *m == r.multiplicity) {
                Some((_, n)) => *n += 1,
                None => out.push((r.multiplicity, 1)),
            }
        }
        out.sort_unstable();
        out
    }
}

/// Pairs each expected root with the nearest unused computed root of the
/// same multiplicity and returns the largest distance, or `None` if some
/// expected root has no partner.
pub fn match_roots(found: &[ComplexRoot], expected: &[ComplexRoot]) -> Option<f64> {
    if found.len() != expected.len() {
        return None;
    }
    let mut used = vec![false; found.len()];
    let mut worst = 0.0f64;
    for e in expected {
        let best = found
            .iter()
            .enumerate()
            .filter(|(i, f)| !used[*i] && f.multiplicity == e.multiplicity)
            .map(|(i, f)| (i, (f.value() - e.value()).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        used[best.0] = true;
        worst = worst.max(best.1);
    }
    Some(worst)
}

/// Nonzero sample values of `q`: five fixed ones and 15 pseudo-random
/// rationals from a fixed seed.
pub fn sample_q_values() -> Vec<Rational> {
    let mut out = vec![int(1), int(2), frac(1, 7), int(-1), frac(5, 3)];
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    while out.len() < 20 {
        let num: i64 = rng.gen_range(-60..=60);
        let den: i64 = rng.gen_range(1..=25);
        let v = frac(num, den);
        if !v.is_zero() && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Whether the trace form is nondegenerate at every given `q`.
pub fn semisimplicity_reduced_check(ring: &QuantumRing, qs: &[Rational]) -> Result<bool> {
    for q in qs {
        if !FiniteAlgebra::specialize(ring, q)?.trace_form_certificate().1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `det G` as a polynomial in `q`, interpolated through `q = 1..=points`
/// and confirmed at one further point.
pub fn trace_det_polynomial(ring: &QuantumRing, points: usize) -> Result<UniPoly> {
    let det_at = |q: &Rational| -> Result<Rational> { Ok(FiniteAlgebra::specialize(ring, q)?.trace_form_certificate().0) };
    let mut samples = Vec::with_capacity(points);
    for k in 1..=points as i64 {
        let q = int(k);
        let d = det_at(&q)?;
        samples.push((q, d));
    }
    let p = UniPoly::interpolate(&samples);
    let check = frac(-3, 2);
    if p.eval(&check) != det_at(&check)? {
        return Err(Error::Inconsistent(format!("trace determinant has degree >= {points}")));
    }
    Ok(p)
}

/// Scatter plot of eigenvalues: circles for simple roots, squares for
/// repeated ones.
pub fn svg_plot(roots: &[ComplexRoot]) -> String {
    const SIZE: f64 = 480.0;
    const MARGIN: f64 = 40.0;
    let extent = roots.iter().fold(1.0f64, |m, r| m.max(r.re.abs()).max(r.im.abs())) * 1.15;
    let scale = (SIZE / 2.0 - MARGIN) / extent;
    let px = |z: Complex64| (SIZE / 2.0 + z.re * scale, SIZE / 2.0 - z.im * scale);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let (lo, hi, mid) = (MARGIN, SIZE - MARGIN, SIZE / 2.0);
    let _ = writeln!(s, r#"<line x1="{lo}" y1="{mid}" x2="{hi}" y2="{mid}" stroke="black"/>"#);
    let _ = writeln!(s, r#"<line x1="{mid}" y1="{lo}" x2="{mid}" y2="{hi}" stroke="black"/>"#);
    let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="14">Real</text>"#, hi - 30.0, mid - 8.0);
    let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="14">Imaginary</text>"#, mid + 8.0, lo - 8.0);
    for r in roots {
        let (x, y) = px(r.value());
        if r.multiplicity == 1 {
            let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="5" fill="blue"/>"#);
        } else {
            let _ = writeln!(
                s,
                r#"<rect x="{:.3}" y="{:.3}" width="10" height="10" fill="red"/>"#,
                x - 5.0,
                y - 5.0
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// `t (t + 1)^2 (t^2 - t + 1)^2`.
pub fn expected_repeated_factor() -> UniPoly {
    let t = UniPoly::t();
    let a = UniPoly::from_ints(&[1, 1]);
    let b = UniPoly::from_ints(&[1, -1, 1]);
    &(&t * &a.pow(2)) * &b.pow(2)
}

/// Whether `x` is invertible in the algebra.
pub fn is_unit(alg: &FiniteAlgebra, x: &ChowClass) -> bool {
    !alg.mult_operator(x).det().is_zero()
}
