use std::fmt;

use num_traits::Zero;

use crate::chow::{ChowClass, CODIMS, RANK};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unipoly::UniPoly;

/// An element of `QH*(Y) = H*(Y) ⊗ Q[q]`: one polynomial in `q` per basis
/// class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QClass {
    coords: Vec<UniPoly>,
}

impl QClass {
    pub fn zero() -> Self {
        QClass { coords: vec![UniPoly::zero(); RANK] }
    }

    pub fn basis(i: usize) -> Self {
        QClass::from_chow(&ChowClass::basis(i))
    }

    pub fn from_chow(x: &ChowClass) -> Self {
        QClass { coords: x.coords().iter().map(|c| UniPoly::constant(c.clone())).collect() }
    }

    pub fn from_coords(coords: Vec<UniPoly>) -> Result<Self> {
        if coords.len() != RANK {
            return Err(Error::Parse(format!("expected {RANK} coordinates, got {}", coords.len())));
        }
        Ok(QClass { coords })
    }

    /// `sum_n q^n parts[n]`.
    pub fn from_parts(parts: &[ChowClass]) -> Self {
        let mut out = QClass::zero();
        for (n, x) in parts.iter().enumerate() {
            out = out.add(&QClass::from_chow(x).shift(n));
        }
        out
    }

    pub fn coords(&self) -> &[UniPoly] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(UniPoly::is_zero)
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.coords.iter().filter_map(UniPoly::degree).max()
    }

    /// Coefficient of `q^n`.
    pub fn q_part(&self, n: usize) -> ChowClass {
        ChowClass::from_coords(self.coords.iter().map(|p| p.coeff(n)).collect()).expect("rank")
    }

    /// Specialization at a value of `q`.
    pub fn eval(&self, q: &Rational) -> ChowClass {
        ChowClass::from_coords(self.coords.iter().map(|p| p.eval(q)).collect()).expect("rank")
    }

    pub fn add(&self, other: &QClass) -> QClass {
        QClass { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &QClass) -> QClass {
        QClass { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Rational) -> QClass {
        QClass { coords: self.coords.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul_poly(&self, p: &UniPoly) -> QClass {
        QClass { coords: self.coords.iter().map(|a| a * p).collect() }
    }

    /// Multiplies by `q^n`.
    pub fn shift(&self, n: usize) -> QClass {
        self.mul_poly(&UniPoly::monomial(Rational::from_integer(1.into()), n))
    }

    /// Common value of `codim + 3 * (q-degree)` over all terms.
    pub fn weighted_degree(&self) -> Result<Option<usize>> {
        let mut found = None;
        for (i, p) in self.coords.iter().enumerate() {
            for (k, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let w = CODIMS[i] + 3 * k;
                match found {
                    None => found = Some(w),
                    Some(v) if v != w => return Err(Error::Inhomogeneous),
                    _ => {}
                }
            }
        }
        Ok(found)
    }

    /// Renders `q`-graded blocks with `fmt_part`, e.g. `pt + q (f1 + f3) + 2 q^2 [Y]`.
    pub fn format_with(&self, fmt_part: impl Fn(&ChowClass) -> String) -> String {
        let mut pieces = Vec::new();
        for n in 0..=self.q_degree().unwrap_or(0) {
            let part = self.q_part(n);
            if part.is_zero() {
                continue;
            }
            let body = fmt_part(&part);
            let q = match n {
                0 => String::new(),
                1 => "q".to_owned(),
                _ => format!("q^{n}"),
            };
            pieces.push(if n == 0 { body } else { format!("{q} ({body})") });
        }
        if pieces.is_empty() {
            "0".to_owned()
        } else {
            pieces.join(" + ")
        }
    }
}

impl fmt::Display for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(|x| x.to_string()))
    }
}
