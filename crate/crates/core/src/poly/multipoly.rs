use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder, Var};
use crate::rational::{int, Rational};

/// Sparse polynomial in (c1, c2, d2, q) with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        MultiPoly::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Shorthand for integer-coefficient literals: `[(coeff, [c1,c2,d2,q])]`.
    pub fn from_int_terms(terms: &[(i64, [u32; 4])]) -> Self {
        MultiPoly::from_terms(terms.iter().map(|(c, e)| (Monomial(*e), int(*c))))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (*m, c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Largest weighted degree of any term; `None` for zero.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weighted_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::weighted_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, degree: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree() == degree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Replaces each variable by a polynomial.
    pub fn substitute(&self, images: &[MultiPoly; 4]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t = &t * &images[v.index()].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Sets `v` to a rational value.
    pub fn eval_var(&self, v: Var, value: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut k = *m;
            k.0[v.index()] = 0;
            let mut factor = Rational::one();
            for _ in 0..e {
                factor *= value;
            }
            out.add_term(k, c * factor);
        }
        out
    }

    /// Splits by powers of `v`: entry `k` holds the coefficient of `v^k`,
    /// itself free of `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out: Vec<MultiPoly> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            if out.len() <= e {
                out.resize(e + 1, MultiPoly::zero());
            }
            let mut k = *m;
            k.0[v.index()] = 0;
            out[e].add_term(k, c.clone());
        }
        out
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Divides every exponent of `v` by one power; `None` if some term is
    /// not divisible by `v`.
    pub fn div_var(&self, v: Var) -> Option<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exp(v) == 0 {
                return None;
            }
            let mut k = *m;
            k.0[v.index()] -= 1;
            terms.insert(k, c.clone());
        }
        Some(MultiPoly { terms })
    }

    pub fn make_monic(&self, order: &MonomialOrder) -> MultiPoly {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => MultiPoly::zero(),
        }
    }

    /// Terms in descending order under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }
}

impl fmt::Display for MultiPoly {
    /// Sorted term list `coeff * c1^a c2^b d2^c q^d`, leading term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms(&MonomialOrder::default());
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{} * {}", c.abs(), m)?;
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn c1() -> MultiPoly {
        MultiPoly::var(Var::C1)
    }
    fn c2() -> MultiPoly {
        MultiPoly::var(Var::C2)
    }
    fn d2() -> MultiPoly {
        MultiPoly::var(Var::D2)
    }

    #[test]
    fn monomial_product() {
        let p = &c1() * &c1();
        assert_eq!(p, MultiPoly::term(int(1), Monomial::new(2, 0, 0, 0)));
    }

    #[test]
    fn distinct_monomials_do_not_cancel() {
        let a = c1().pow(3);
        let b = (&c1() * &d2()).scale(&int(4));
        let diff = &a - &b;
        assert_eq!(diff.len(), 2);
        assert_eq!(diff.coeff(&Monomial::new(3, 0, 0, 0)), int(1));
        assert_eq!(diff.coeff(&Monomial::new(1, 0, 1, 0)), int(-4));
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&c2() + &d2()) * &(&c2() - &d2());
        assert_eq!(p, &c2().pow(2) - &d2().pow(2));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &c1() - &c1();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn graded_pieces() {
        let p = &(&c1().pow(3) + &c2()) + &MultiPoly::var(Var::Q);
        assert!(!p.is_homogeneous());
        let top = p.homogeneous_component(3);
        assert!(top.is_homogeneous());
        assert_eq!(top.len(), 2);
    }

    #[test]
    fn eval_and_split_in_q() {
        let q = MultiPoly::var(Var::Q);
        let p = &(&q * &c1()) + &q.pow(2).scale(&frac(1, 2));
        let at2 = p.eval_var(Var::Q, &int(2));
        assert_eq!(at2, &c1().scale(&int(2)) + &MultiPoly::constant(int(2)));
        let split = p.coefficients_in(Var::Q);
        assert_eq!(split.len(), 3);
        assert!(split[0].is_zero());
        assert_eq!(split[1], c1());
    }

    #[test]
    fn display_sorted() {
        let p = &(&c1().pow(2) - &c2().scale(&frac(3, 2))) + &MultiPoly::one();
        assert_eq!(p.to_string(), "1 * c1^2 - 3/2 * c2 + 1 * 1");
    }
}
