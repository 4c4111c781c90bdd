use std::collections::BTreeMap;

use crate::chow::{CODIMS, DIM, LABELS, LINE, POINT};
use crate::rational::{int, Rational};

/// Three-point genus-0 invariants on basis classes, symmetric in the
/// classes.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GwTable {
    values: BTreeMap<([usize; 3], u32), Rational>,
}

fn key(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut k = [a, b, c];
    k.sort_unstable();
    k
}

/// Whether `codim a + codim b + codim c = 6 + 3n`.
pub fn dimension_axiom(a: usize, b: usize, c: usize, n: u32) -> bool {
    CODIMS[a] + CODIMS[b] + CODIMS[c] == DIM + 3 * n as usize
}

impl GwTable {
    pub fn new() -> Self {
        GwTable::default()
    }

    /// Degree-one values on basis classes needed to quantize every basis
    /// class below the point.
    pub fn degree_one_seeds() -> Self {
        let idx = |s: &str| LABELS.iter().position(|l| *l == s).expect("label");
        let mut t = GwTable::new();
        let seeds: [(&str, &str, &str, i64); 12] = [
            ("c1", "c1^2", "pt", 3),
            ("c1", "c2", "pt", 0),
            ("c1", "d2", "pt", 0),
            ("c2", "c2", "line", 0),
            ("c2", "d2", "line", 0),
            ("d2", "d2", "line", 0),
            ("c1", "c2^2", "c2^2", 24),
            ("c1", "c2^2", "c2d2", 18),
            ("c1", "c2^2", "d2^2", 13),
            ("c1", "c1c2", "line", 3),
            ("c1", "c1d2", "line", 2),
            ("c1", "c3", "line", 0),
        ];
        for (a, b, c, v) in seeds {
            t.insert(idx(a), idx(b), idx(c), 1, int(v));
        }
        t
    }

    pub fn insert(&mut self, a: usize, b: usize, c: usize, n: u32, value: Rational) {
        debug_assert!(dimension_axiom(a, b, c, n));
        self.values.insert((key(a, b, c), n), value);
    }

    pub fn get(&self, a: usize, b: usize, c: usize, n: u32) -> Option<&Rational> {
        self.values.get(&(key(a, b, c), n))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Adds `I_2(c1, line, pt)`.
    pub(crate) fn with_degree_two(mut self, value: Rational) -> Self {
        self.insert(1, LINE, POINT, 2, value);
        self
    }
}
