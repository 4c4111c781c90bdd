//! The rational Chow ring `A*(Y)` as a graded algebra of rank 13.
//!
//! The ring is presented on `c1, c2, d2`; `c3 = (4 c1 d2 - c1^3) / 3` is a
//! derived class. Classes are coordinate vectors over the fixed basis
//!
//! ```text
//! 0: [Y]   1: c1   2: c1^2  3: c2    4: d2    5: c1c2  6: c1d2
//! 7: c3    8: c2^2 9: c2d2 10: d2^2 11: line 12: pt
//! ```
//!
//! with `line = c2 c3 / 3` and `pt = c3^2`.

use std::fmt;
use std::ops::Range;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::Matrix;
use crate::poly::{c1, c2, d2, Monomial, MonomialOrder, MultiPoly, Var};
use crate::rational::{frac, int, parse_rational, Rational};

pub const RANK: usize = 13;
pub const DIM: usize = 6;

pub const LABELS: [&str; RANK] = [
    "[Y]", "c1", "c1^2", "c2", "d2", "c1c2", "c1d2", "c3", "c2^2", "c2d2", "d2^2", "line", "pt",
];

pub const CODIMS: [usize; RANK] = [0, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 6];

pub const GRADED_RANKS: [usize; DIM + 1] = [1, 1, 3, 3, 3, 1, 1];

pub const POINT: usize = 12;
pub const LINE: usize = 11;

/// Basis indices of codimension `k`.
pub fn block(k: usize) -> Range<usize> {
    let start: usize = GRADED_RANKS[..k.min(DIM + 1)].iter().sum();
    let len = if k <= DIM { GRADED_RANKS[k] } else { 0 };
    start..start + len
}

pub const CLASSICAL_VARS: [Var; 3] = [Var::C1, Var::C2, Var::D2];

/// `c3 = (4 c1 d2 - c1^3) / 3`.
pub fn c3() -> MultiPoly {
    (&(&c1() * &d2()).scale(&int(4)) - &c1().pow(3)).scale(&frac(1, 3))
}

/// Polynomial representatives of the basis classes.
pub fn basis_polys() -> Vec<MultiPoly> {
    let (a, b, d, c) = (c1(), c2(), d2(), c3());
    vec![
        MultiPoly::one(),
        a.clone(),
        a.pow(2),
        b.clone(),
        d.clone(),
        &a * &b,
        &a * &d,
        c.clone(),
        b.pow(2),
        &b * &d,
        d.pow(2),
        (&b * &c).scale(&frac(1, 3)),
        c.pow(2),
    ]
}

/// The five defining relations, written as `lhs - rhs`.
pub fn classical_relations() -> [MultiPoly; 5] {
    let p = |t: &[(i64, [u32; 4])]| MultiPoly::from_int_terms(t);
    [
        // c1^4 = -3 c2^2 + 9 c2 d2 + 3 d2^2
        p(&[(1, [4, 0, 0, 0]), (3, [0, 2, 0, 0]), (-9, [0, 1, 1, 0]), (-3, [0, 0, 2, 0])]),
        // c1^2 c2 = 3 d2^2 + c2 d2
        p(&[(1, [2, 1, 0, 0]), (-3, [0, 0, 2, 0]), (-1, [0, 1, 1, 0])]),
        // c1^2 d2 = 3 d2^2
        p(&[(1, [2, 0, 1, 0]), (-3, [0, 0, 2, 0])]),
        // 9 c1 c2^2 = 14 c1 c2 d2
        p(&[(9, [1, 2, 0, 0]), (-14, [1, 1, 1, 0])]),
        // 3 c1 d2^2 = 2 c1 c2 d2
        p(&[(3, [1, 0, 2, 0]), (-2, [1, 1, 1, 0])]),
    ]
}

/// Polynomial in `c1, c2, d2` for a named geometric class.
///
/// Cells: `m, p, e1..e3, f1..f3, h1..h3, q_cell, n`. Orbit closures:
/// `O5, O4, O2, O2'`. Also `line`, `point`, `P2`.
pub fn named_poly(name: &str) -> Option<MultiPoly> {
    let p = |t: &[(i64, [u32; 4])]| MultiPoly::from_int_terms(t);
    let reps = basis_polys();
    let poly = match name {
        "m" | "[Y]" | "Y" => MultiPoly::one(),
        "p" | "c1" => c1(),
        "q_cell" | "line" | "[line]" => reps[LINE].clone(),
        "n" | "point" | "[point]" | "pt" => reps[POINT].clone(),
        "e1" => p(&[(-1, [0, 1, 0, 0]), (2, [0, 0, 1, 0])]),
        "e2" => p(&[(1, [2, 0, 0, 0]), (-2, [0, 0, 1, 0])]),
        "e3" => p(&[(1, [0, 1, 0, 0]), (-1, [0, 0, 1, 0])]),
        "f1" => &p(&[(-1, [1, 1, 0, 0]), (2, [1, 0, 1, 0])]) - &c3(),
        "f2" => c3(),
        "f3" => &p(&[(1, [1, 1, 0, 0]), (-1, [1, 0, 1, 0])]) - &c3(),
        "h1" => p(&[(1, [0, 2, 0, 0]), (-4, [0, 1, 1, 0]), (4, [0, 0, 2, 0])]),
        "h2" | "P2" | "[P2]" => p(&[(-1, [0, 2, 0, 0]), (3, [0, 1, 1, 0]), (-2, [0, 0, 2, 0])]),
        "h3" => p(&[(1, [0, 2, 0, 0]), (-2, [0, 1, 1, 0]), (1, [0, 0, 2, 0])]),
        "O5" => p(&[(2, [1, 0, 0, 0])]),
        "O4" => p(&[(3, [0, 0, 1, 0])]),
        "O2" => p(&[(-3, [0, 1, 1, 0]), (6, [0, 0, 2, 0])]),
        "O2'" => p(&[(3, [0, 1, 1, 0]), (-3, [0, 0, 2, 0])]),
        _ => return None,
    };
    Some(poly)
}

pub const NAMED_CLASSES: [&str; 20] = [
    "e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3", "m", "n", "p", "q_cell", "line", "point", "P2", "O5",
    "O4", "O2", "O2'",
];

/// The cell basis, one class per fixed point, in codimension order.
pub const CELL_BASIS: [&str; RANK] =
    ["[Y]", "c1", "e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3", "[line]", "[point]"];

/// An element of `A*(Y)_Q` in the fixed basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    coords: Vec<Rational>,
}

impl ChowClass {
    pub fn zero() -> Self {
        ChowClass { coords: vec![Rational::zero(); RANK] }
    }

    pub fn basis(i: usize) -> Self {
        let mut c = ChowClass::zero();
        c.coords[i] = Rational::one();
        c
    }

    pub fn unit() -> Self {
        ChowClass::basis(0)
    }

    pub fn point() -> Self {
        ChowClass::basis(POINT)
    }

    pub fn from_coords(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != RANK {
            return Err(Error::Parse(format!("expected {RANK} coordinates, got {}", coords.len())));
        }
        Ok(ChowClass { coords })
    }

    pub fn from_ints(coords: [i64; RANK]) -> Self {
        ChowClass { coords: coords.iter().map(|&c| int(c)).collect() }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// `Ok(None)` for zero, `Ok(Some(k))` if supported in codimension `k`.
    pub fn codim(&self) -> Result<Option<usize>> {
        let mut found = None;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(CODIMS[i]),
                Some(k) if k != CODIMS[i] => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(found)
    }

    /// Component in codimension `k`.
    pub fn graded_part(&self, k: usize) -> ChowClass {
        let mut out = ChowClass::zero();
        for i in block(k) {
            out.coords[i] = self.coords[i].clone();
        }
        out
    }

    pub fn add(&self, other: &ChowClass) -> ChowClass {
        ChowClass { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &ChowClass) -> ChowClass {
        ChowClass { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> ChowClass {
        ChowClass { coords: self.coords.iter().map(|a| a * c).collect() }
    }

    pub fn to_record(&self, label: Option<&str>) -> ClassRecord {
        ClassRecord { label: label.map(str::to_owned), coords: self.coords.iter().map(|c| c.to_string()).collect() }
    }

    pub fn from_record(r: &ClassRecord) -> Result<Self> {
        let coords = r.coords.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        ChowClass::from_coords(coords)
    }
}

/// Writes a linear combination such as `2 f1 + f2 - 3/2 [Y]`.
pub fn format_combination(terms: &[(Rational, &str)]) -> String {
    let mut s = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let a = c.abs();
        if !a.is_one() {
            s.push_str(&a.to_string());
            s.push(' ');
        }
        s.push_str(name);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, &str)> = self.coords.iter().cloned().zip(LABELS).collect();
        write!(f, "{}", format_combination(&terms))
    }
}

/// Serialized form `{"label": ..., "coords": ["p/q", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub coords: Vec<String>,
}

/// The ring with its normal-form machinery and multiplication table.
#[derive(Debug, Clone)]
pub struct ChowRing {
    gb: GroebnerBasis,
    reps: Vec<MultiPoly>,
    /// Standard monomials per codimension.
    standard: Vec<Vec<Monomial>>,
    /// Per codimension: standard-monomial coefficients to basis coordinates.
    to_basis: Vec<Matrix>,
    table: Vec<Vec<ChowClass>>,
    cells: Matrix,
}

impl ChowRing {
    pub fn new() -> Result<Self> {
        let gb = buchberger(&classical_relations(), MonomialOrder::default())?;
        let reps = basis_polys();
        let mut standard = Vec::new();
        let mut to_basis = Vec::new();
        for k in 0..=DIM {
            let std_k = gb.standard_monomials(k as u32, &CLASSICAL_VARS);
            if std_k.len() != GRADED_RANKS[k] {
                return Err(Error::Inconsistent(format!(
                    "codimension {k} has {} standard monomials, expected {}",
                    std_k.len(),
                    GRADED_RANKS[k]
                )));
            }
            let cols: Vec<Vec<Rational>> = block(k)
                .map(|i| {
                    let nf = gb.normal_form(&reps[i]);
                    std_k.iter().map(|m| nf.coeff(m)).collect()
                })
                .collect();
            let m = Matrix::from_columns(&cols).inverse().map_err(|_| {
                Error::Inconsistent(format!("basis of codimension {k} is not independent"))
            })?;
            standard.push(std_k);
            to_basis.push(m);
        }
        for k in [DIM as u32 + 1, DIM as u32 + 2] {
            if !gb.standard_monomials(k, &CLASSICAL_VARS).is_empty() {
                return Err(Error::Inconsistent(format!("nonzero classes in degree {k}")));
            }
        }
        let mut ring = ChowRing { gb, reps, standard, to_basis, table: Vec::new(), cells: Matrix::identity(RANK) };
        let mut table = Vec::with_capacity(RANK);
        for i in 0..RANK {
            let row: Vec<ChowClass> =
                (0..RANK).map(|j| ring.class_of_poly(&(&ring.reps[i] * &ring.reps[j]))).collect();
            table.push(row);
        }
        ring.table = table;
        let cols: Vec<Vec<Rational>> = CELL_BASIS
            .iter()
            .map(|n| ring.class_of_poly(&named_poly(n).expect("cell")).coords)
            .collect();
        ring.cells = Matrix::from_columns(&cols)
            .inverse()
            .map_err(|_| Error::Inconsistent("cell classes are not a basis".into()))?;
        Ok(ring)
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis_poly(&self, i: usize) -> &MultiPoly {
        &self.reps[i]
    }

    /// Standard monomials of the classical quotient in codimension `k`.
    pub fn standard_monomials(&self, k: usize) -> &[Monomial] {
        &self.standard[k]
    }

    /// Class of a polynomial in `c1, c2, d2`. Panics if `q` occurs.
    pub fn class_of_poly(&self, p: &MultiPoly) -> ChowClass {
        assert!(!p.involves(Var::Q), "classical class of a polynomial in q");
        let nf = self.gb.normal_form(p);
        let mut out = ChowClass::zero();
        for k in 0..=DIM {
            let v: Vec<Rational> = self.standard[k].iter().map(|m| nf.coeff(m)).collect();
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            let x = self.to_basis[k].mul_vec(&v);
            for (i, xi) in block(k).zip(x) {
                out.coords[i] = xi;
            }
        }
        out
    }

    pub fn poly_of_class(&self, x: &ChowClass) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (c, r) in x.coords.iter().zip(&self.reps) {
            if !c.is_zero() {
                p = &p + &r.scale(c);
            }
        }
        p
    }

    /// `c1^a c2^b c3^c d2^d`; zero beyond the top degree.
    pub fn monomial_class(&self, a: u32, b: u32, c: u32, d: u32) -> ChowClass {
        if a + 2 * b + 3 * c + 2 * d > DIM as u32 {
            return ChowClass::zero();
        }
        let p = &(&(&c1().pow(a) * &c2().pow(b)) * &c3().pow(c)) * &d2().pow(d);
        self.class_of_poly(&p)
    }

    pub fn named_class(&self, name: &str) -> Result<ChowClass> {
        named_poly(name)
            .map(|p| self.class_of_poly(&p))
            .ok_or_else(|| Error::UnknownLabel(name.to_owned()))
    }

    /// Product of basis elements `i` and `j`.
    pub fn table_entry(&self, i: usize, j: usize) -> &ChowClass {
        &self.table[i][j]
    }

    pub fn cup(&self, x: &ChowClass, y: &ChowClass) -> ChowClass {
        let mut out = ChowClass::zero();
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() || CODIMS[i] + CODIMS[j] > DIM {
                    continue;
                }
                let ab = a * b;
                for (o, t) in out.coords.iter_mut().zip(&self.table[i][j].coords) {
                    if !t.is_zero() {
                        *o += &ab * t;
                    }
                }
            }
        }
        out
    }

    pub fn pairing(&self, x: &ChowClass, y: &ChowClass) -> Rational {
        let mut s = Rational::zero();
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in block(DIM - CODIMS[i]) {
                let b = &y.coords[j];
                if !b.is_zero() {
                    s += a * b * self.table[i][j].coord(POINT);
                }
            }
        }
        s
    }

    /// `<B_i, B'_j>` for `B` the codimension-`k` basis and `B'` the
    /// codimension `6-k` basis.
    pub fn pairing_block(&self, k: usize) -> Matrix {
        let rows: Vec<Vec<Rational>> = block(k)
            .map(|i| block(DIM - k).map(|j| self.table[i][j].coord(POINT).clone()).collect())
            .collect();
        Matrix::from_rows(rows)
    }

    /// Classes `D_j` of codimension `6-k` with `<B_i, D_j> = delta_ij`.
    pub fn dual_basis(&self, k: usize) -> Result<Vec<ChowClass>> {
        if k > DIM {
            return Err(Error::WrongCodimension { expected: DIM, found: k });
        }
        let inv = self
            .pairing_block(k)
            .inverse()
            .map_err(|_| Error::Inconsistent(format!("pairing block {k} is singular")))?;
        Ok((0..GRADED_RANKS[k])
            .map(|j| {
                let mut d = ChowClass::zero();
                for (m, idx) in block(DIM - k).enumerate() {
                    d.coords[idx] = inv[(m, j)].clone();
                }
                d
            })
            .collect())
    }

    /// Degree against the hyperplane class: `<x, c1^(6-k)>`.
    pub fn degree_of(&self, x: &ChowClass, k: usize) -> Result<Rational> {
        match x.codim()? {
            Some(found) if found != k => return Err(Error::WrongCodimension { expected: k, found }),
            _ => {}
        }
        Ok(self.pairing(x, &self.monomial_class(DIM as u32 - k as u32, 0, 0, 0)))
    }

    /// The ring automorphism fixing `c1, d2` and sending `c2` to `3 d2 - c2`.
    pub fn involution(&self, x: &ChowClass) -> ChowClass {
        self.class_of_poly(&involution_poly(&self.poly_of_class(x)))
    }

    /// Coordinates in [`CELL_BASIS`].
    pub fn cell_coordinates(&self, x: &ChowClass) -> Vec<Rational> {
        self.cells.mul_vec(&x.coords)
    }

    /// Writes `x` in the cell basis, e.g. `2 f1 + f2 + 2 f3`.
    pub fn format_in_cells(&self, x: &ChowClass) -> String {
        let coords = self.cell_coordinates(x);
        let terms: Vec<(Rational, &str)> = coords.into_iter().zip(CELL_BASIS).collect();
        format_combination(&terms)
    }
}

/// Substitutes `c2 -> 3 d2 - c2`, fixing the other variables.
pub fn involution_poly(p: &MultiPoly) -> MultiPoly {
    let image = &d2().scale(&int(3)) - &c2();
    p.substitute(&[c1(), image, d2(), MultiPoly::var(Var::Q)])
}
