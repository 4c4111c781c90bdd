use std::cmp::Ordering;
use std::fmt;

/// The four ring variables, in precedence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    C1 = 0,
    C2 = 1,
    D2 = 2,
    Q = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::C1, Var::C2, Var::D2, Var::Q];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::C1 => "c1",
            Var::C2 => "c2",
            Var::D2 => "d2",
            Var::Q => "q",
        }
    }

    /// Grading weight: c1 has degree 1, c2 and d2 degree 2, q degree 3.
    pub fn weight(self) -> u32 {
        WEIGHTS[self.index()]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

pub const NVARS: usize = 4;
pub const WEIGHTS: [u32; NVARS] = [1, 2, 2, 3];

/// Exponent vector over (c1, c2, d2, q).
///
/// The derived `Ord` is plain lexicographic on exponents and is only used
/// for canonical storage. Term orders live in [`MonomialOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn new(c1: u32, c2: u32, d2: u32, q: u32) -> Self {
        Monomial([c1, c2, d2, q])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn weighted_degree(&self) -> u32 {
        self.0.iter().zip(WEIGHTS).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut e = other.0;
        for (a, b) in e.iter_mut().zip(self.0) {
            *a -= b;
        }
        Some(Monomial(e))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a = (*a).max(b);
        }
        Monomial(e)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a == 0 || b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    /// All monomials of the given weighted degree, restricted to the listed
    /// variables.
    pub fn of_degree(degree: u32, vars: &[Var]) -> Vec<Monomial> {
        fn go(deg: u32, vars: &[Var], acc: Monomial, out: &mut Vec<Monomial>) {
            match vars.split_first() {
                None => {
                    if deg == 0 {
                        out.push(acc);
                    }
                }
                Some((v, rest)) => {
                    let w = v.weight();
                    let mut e = 0;
                    while e * w <= deg {
                        let mut m = acc;
                        m.0[v.index()] = e;
                        go(deg - e * w, rest, m, out);
                        e += 1;
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(degree, vars, Monomial::ONE, &mut out);
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TieBreak {
    /// Within a weighted degree, the monomial with the smaller exponent in
    /// the last differing variable is larger.
    RevLex,
    /// Within a weighted degree, the monomial with the larger exponent in
    /// the first differing variable is larger.
    Lex,
}

/// A weighted-degree monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub weights: [u32; NVARS],
    pub tie_break: TieBreak,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::weighted_revlex()
    }
}

impl MonomialOrder {
    /// Weights (1,2,2,3), reverse lexicographic with c1 > c2 > d2 > q.
    pub fn weighted_revlex() -> Self {
        MonomialOrder { weights: WEIGHTS, tie_break: TieBreak::RevLex }
    }

    pub fn weighted_lex() -> Self {
        MonomialOrder { weights: WEIGHTS, tie_break: TieBreak::Lex }
    }

    fn degree(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(self.weights).map(|(e, w)| e * w).sum()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| match self.tie_break {
            TieBreak::RevLex => {
                for i in (0..NVARS).rev() {
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            }
            TieBreak::Lex => a.0.cmp(&b.0),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weighted_degree() {
        assert_eq!(Monomial::new(1, 1, 1, 1).weighted_degree(), 8);
        assert_eq!(Monomial::new(0, 0, 0, 2).weighted_degree(), 6);
    }

    #[test]
    fn revlex_prefers_q_free() {
        let ord = MonomialOrder::weighted_revlex();
        // q and c1^3 both have weighted degree 3.
        assert_eq!(ord.cmp(&Monomial::new(3, 0, 0, 0), &Monomial::new(0, 0, 0, 1)), Ordering::Greater);
        assert_eq!(ord.cmp(&Monomial::new(2, 0, 0, 0), &Monomial::new(0, 1, 0, 0)), Ordering::Greater);
        assert_eq!(ord.cmp(&Monomial::new(0, 1, 0, 0), &Monomial::new(0, 0, 1, 0)), Ordering::Greater);
    }

    #[test]
    fn of_degree_counts() {
        // c1^2, c2, d2
        assert_eq!(Monomial::of_degree(2, &[Var::C1, Var::C2, Var::D2]).len(), 3);
        // c1^3, c1 c2, c1 d2, q
        assert_eq!(Monomial::of_degree(3, &Var::ALL).len(), 4);
        for m in Monomial::of_degree(7, &Var::ALL) {
            assert_eq!(m.weighted_degree(), 7);
        }
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(1, 0, 2, 0).to_string(), "c1 d2^2");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }
}
