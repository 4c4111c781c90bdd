//! Buchberger's algorithm with the normal selection strategy and both
//! Buchberger criteria, plus normal forms and standard monomials.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, Var};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy)]
pub struct BuchbergerConfig {
    /// Abort once this many critical pairs have been examined.
    pub max_pairs: usize,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { max_pairs: 10_000 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_examined: usize,
    pub s_polynomials: usize,
    pub zero_reductions: usize,
    pub skipped_product: usize,
    pub skipped_chain: usize,
}

/// A reduced Gröbner basis: monic generators, sorted by leading monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    generators: Vec<MultiPoly>,
    leading: Vec<Monomial>,
    order: MonomialOrder,
}

pub fn buchberger(generators: &[MultiPoly], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(generators, order, BuchbergerConfig::default()).map(|(gb, _)| gb)
}

pub fn buchberger_with(
    generators: &[MultiPoly],
    order: MonomialOrder,
    config: BuchbergerConfig,
) -> Result<(GroebnerBasis, BuchbergerStats)> {
    for (index, g) in generators.iter().enumerate() {
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous { index });
        }
    }
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut lts: Vec<Monomial> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |p: MultiPoly, basis: &mut Vec<MultiPoly>, lts: &mut Vec<Monomial>, pending: &mut BTreeSet<(usize, usize)>| {
        let p = p.make_monic(&order);
        let lt = p.leading_term(&order).map(|(m, _)| m).unwrap_or(Monomial::ONE);
        let k = basis.len();
        basis.push(p);
        lts.push(lt);
        for i in 0..k {
            pending.insert((i, k));
        }
    };

    for g in generators {
        let r = reduce(g, &basis, &lts, &order);
        if !r.is_zero() {
            push(r, &mut basis, &mut lts, &mut pending);
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = lts[a.0].lcm(&lts[a.1]);
        let lb = lts[b.0].lcm(&lts[b.1]);
        order.cmp(&la, &lb).then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        stats.pairs_examined += 1;
        if stats.pairs_examined > config.max_pairs {
            return Err(Error::PairLimitExceeded { limit: config.max_pairs });
        }
        if lts[i].is_coprime(&lts[j]) {
            stats.skipped_product += 1;
            continue;
        }
        let lcm = lts[i].lcm(&lts[j]);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lts[k].divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            stats.skipped_chain += 1;
            continue;
        }
        stats.s_polynomials += 1;
        let s = s_polynomial(&basis[i], &basis[j], &order);
        let r = reduce(&s, &basis, &lts, &order);
        if r.is_zero() {
            stats.zero_reductions += 1;
        } else {
            push(r, &mut basis, &mut lts, &mut pending);
        }
    }

    Ok((GroebnerBasis::from_groebner(basis, order), stats))
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
    let (mf, cf) = f.leading_term(order).expect("nonzero");
    let (mg, cg) = g.leading_term(order).expect("nonzero");
    let lcm = mf.lcm(&mg);
    let uf = mf.quotient_of(&lcm).expect("divides lcm");
    let ug = mg.quotient_of(&lcm).expect("divides lcm");
    &f.mul_term(&cf.recip(), &uf) - &g.mul_term(&cg.recip(), &ug)
}

/// Full reduction of `p` by `basis` (leading monomials cached in `lts`).
fn reduce(p: &MultiPoly, basis: &[MultiPoly], lts: &[Monomial], order: &MonomialOrder) -> MultiPoly {
    let mut rest = p.clone();
    let mut remainder = MultiPoly::zero();
    while let Some((m, c)) = rest.leading_term(order) {
        match lts.iter().position(|lt| lt.divides(&m)) {
            Some(k) => {
                let g = &basis[k];
                let lc = g.coeff(&lts[k]);
                let shift = lts[k].quotient_of(&m).expect("divides");
                rest = &rest - &g.mul_term(&(&c / &lc), &shift);
            }
            None => {
                remainder.add_term(m, c.clone());
                rest.add_term(m, -c);
            }
        }
    }
    remainder
}

impl GroebnerBasis {
    /// Minimalizes and interreduces a Gröbner basis.
    fn from_groebner(basis: Vec<MultiPoly>, order: MonomialOrder) -> GroebnerBasis {
        let lts: Vec<Monomial> = basis
            .iter()
            .map(|g| g.leading_term(&order).expect("nonzero").0)
            .collect();
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..basis.len() {
            let redundant = (0..basis.len()).any(|j| {
                j != i && lts[j].divides(&lts[i]) && (lts[j] != lts[i] || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let minimal: Vec<MultiPoly> = keep.iter().map(|&i| basis[i].clone()).collect();
        let minimal_lts: Vec<Monomial> = keep.iter().map(|&i| lts[i]).collect();
        let mut reduced: Vec<(Monomial, MultiPoly)> = Vec::new();
        for (k, g) in minimal.iter().enumerate() {
            let lt = minimal_lts[k];
            let tail = {
                let mut t = g.clone();
                t.add_term(lt, -g.coeff(&lt));
                t
            };
            let others: Vec<MultiPoly> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
            let other_lts: Vec<Monomial> = minimal_lts.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, m)| *m).collect();
            let tail = reduce(&tail, &others, &other_lts, &order);
            let mut g = tail;
            g.add_term(lt, Rational::one());
            reduced.push((lt, g.make_monic(&order)));
        }
        reduced.sort_by(|a, b| order.cmp(&a.0, &b.0));
        GroebnerBasis {
            leading: reduced.iter().map(|(m, _)| *m).collect(),
            generators: reduced.into_iter().map(|(_, g)| g).collect(),
            order,
        }
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        reduce(p, &self.generators, &self.leading, &self.order)
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading.iter().any(|lt| lt.divides(m))
    }

    /// Standard monomials of one weighted degree in the given variables.
    pub fn standard_monomials(&self, degree: u32, vars: &[Var]) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = Monomial::of_degree(degree, vars)
            .into_iter()
            .filter(|m| self.is_standard(m))
            .collect();
        v.sort_by(|a, b| self.order.cmp(a, b));
        v
    }

    /// Checks the Buchberger criterion directly: every S-polynomial of a
    /// pair of generators reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let n = self.generators.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let s = s_polynomial(&self.generators[i], &self.generators[j], &self.order);
                self.normal_form(&s).is_zero()
            })
        })
    }

    /// Reduced: monic, and no generator has a term divisible by another
    /// generator's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            g.coeff(&self.leading[i]) == Rational::one()
                && g.terms().all(|(m, c)| {
                    c.is_zero()
                        || self
                            .leading
                            .iter()
                            .enumerate()
                            .all(|(j, lt)| j == i || !lt.divides(m))
                })
        })
    }
}
