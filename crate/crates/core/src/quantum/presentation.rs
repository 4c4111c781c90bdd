use num_traits::Zero;

use crate::chow::{classical_relations, GRADED_RANKS, CLASSICAL_VARS, DIM};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::poly::{c1, c2, d2, q, Monomial, MonomialOrder, MultiPoly, Var};
use crate::rational::{frac, int, Rational};

/// One relation `lhs = factor * rhs`, stored with denominators cleared.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: MultiPoly,
    pub factor: Rational,
    pub rhs: MultiPoly,
    /// `denominator(factor) * (lhs - factor * rhs)`.
    pub cleared: MultiPoly,
}

impl Relation {
    fn new(name: &'static str, lhs: MultiPoly, factor: Rational, rhs: MultiPoly) -> Self {
        let den = Rational::from_integer(factor.denom().clone());
        let cleared = (&lhs - &rhs.scale(&factor)).scale(&den);
        Relation { name, lhs, factor, rhs, cleared }
    }
}

/// The five quantum relations.
pub fn quantum_relations() -> Vec<Relation> {
    let (a, b, d, t) = (c1(), c2(), d2(), q());
    let s = |k: i64, p: &MultiPoly| p.scale(&int(k));
    // c1 c2^2 - q (4 c1^2 - 3 c2 - d2)
    let x = &(&a * &b.pow(2)) - &(&t * &(&(&s(4, &a.pow(2)) - &s(3, &b)) - &d));
    // c1 c2 d2 - q (3 c1^2 - c2 - 3 d2)
    let y = &(&(&a * &b) * &d) - &(&t * &(&(&s(3, &a.pow(2)) - &b) - &s(3, &d)));
    // c1 d2^2 - q (2 c1^2 - 3 d2)
    let z = &(&a * &d.pow(2)) - &(&t * &(&s(2, &a.pow(2)) - &s(3, &d)));
    vec![
        Relation::new(
            "c1^4 - 11 q c1 = -3 c2^2 + 9 c2 d2 + 3 d2^2",
            &a.pow(4) - &s(11, &(&t * &a)),
            int(1),
            &(&s(-3, &b.pow(2)) + &s(9, &(&b * &d))) + &s(3, &d.pow(2)),
        ),
        Relation::new(
            "c1^2 c2 - 3 q c1 = c2 d2 + 3 d2^2",
            &(&a.pow(2) * &b) - &s(3, &(&t * &a)),
            int(1),
            &(&b * &d) + &s(3, &d.pow(2)),
        ),
        Relation::new("c1^2 d2 - 2 q c1 = 3 d2^2", &(&a.pow(2) * &d) - &s(2, &(&t * &a)), int(1), s(3, &d.pow(2))),
        Relation::new("c1 c2^2 - q (4 c1^2 - 3 c2 - d2) = 14/9 (c1 c2 d2 - q (3 c1^2 - c2 - 3 d2))", x, frac(14, 9), y.clone()),
        Relation::new("c1 c2 d2 - q (3 c1^2 - c2 - 3 d2) = 3/2 (c1 d2^2 - q (2 c1^2 - 3 d2))", y, frac(3, 2), z),
    ]
}

/// The quotient `Q[c1, c2, d2, q] / I` with its Gröbner basis.
#[derive(Debug, Clone)]
pub struct QuantumPresentation {
    relations: Vec<Relation>,
    gb: GroebnerBasis,
    /// The 13 q-free standard monomials, by degree.
    standard: Vec<Monomial>,
}

impl QuantumPresentation {
    pub fn new() -> Result<Self> {
        let relations = quantum_relations();
        for (r, classical) in relations.iter().zip(classical_relations()) {
            let r0 = r.cleared.eval_var(Var::Q, &Rational::zero());
            if r0 != classical && r0 != -&classical {
                return Err(Error::Inconsistent(format!("relation `{}` does not specialize at q = 0", r.name)));
            }
        }
        let gens: Vec<MultiPoly> = relations.iter().map(|r| r.cleared.clone()).collect();
        let gb = buchberger(&gens, MonomialOrder::default())?;
        // With every leading monomial free of q, the q-free standard
        // monomials form a basis over Q[q].
        if gb.leading_monomials().iter().any(|m| m.exp(Var::Q) > 0) {
            return Err(Error::Inconsistent("a leading monomial involves q".into()));
        }
        let mut standard = Vec::new();
        for k in 0..=DIM {
            let s = gb.standard_monomials(k as u32, &CLASSICAL_VARS);
            if s.len() != GRADED_RANKS[k] {
                return Err(Error::Inconsistent(format!(
                    "degree {k}: {} standard monomials, expected {}",
                    s.len(),
                    GRADED_RANKS[k]
                )));
            }
            standard.extend(s);
        }
        // Every monomial of degree >= 7 is a multiple of one of degree 7 or 8.
        for k in [DIM as u32 + 1, DIM as u32 + 2] {
            if !gb.standard_monomials(k, &CLASSICAL_VARS).is_empty() {
                return Err(Error::Inconsistent(format!("standard monomials in degree {k}")));
            }
        }
        Ok(QuantumPresentation { relations, gb, standard })
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        self.gb.normal_form(p)
    }

    /// Q[q]-basis of the quotient.
    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    /// Number of q-free standard monomials in each degree `0..=6`.
    pub fn graded_rank(&self) -> Vec<usize> {
        let mut out = vec![0; DIM + 1];
        for m in &self.standard {
            out[m.weighted_degree() as usize] += 1;
        }
        out
    }
}
